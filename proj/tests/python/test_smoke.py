from fractions import Fraction

import pytest

import hfconc


def test_knots_and_tau():
    t23 = hfconc.KnotSpec.torus(2, 3)
    assert t23.genus == 1
    assert hfconc.alexander(t23) == {-1: 1, 0: -1, 1: 1}
    assert hfconc.tau(hfconc.KnotSpec.family(3, 2)) == 6
    assert hfconc.filtration_homology(t23, -1) == {-2: 1}
    with pytest.raises(ValueError):
        hfconc.KnotSpec.torus(2, 4)


def test_vtable_engines_agree():
    oracle = hfconc.vtable(2, 1, -3, 3, oracle=True)
    closed = hfconc.vtable(2, 1, -3, 3)
    assert oracle == closed
    assert [v for _, v, _ in oracle] == [3, 2, 2, 1, 1, 0, 0]


def test_d_invariants():
    assert hfconc.d_lens(49, 2, 25) == 0
    assert hfconc.d_lens(2, 1, 0) == Fraction(1, 4)
    assert hfconc.d_lens_2r1_2(12, 23) == 2
    assert hfconc.delta_whitehead(2, 3, 12) == 0
    assert hfconc.delta_via_surgery(hfconc.KnotSpec.family(2, 1), 0) == -4
    with pytest.raises(hfconc.WhiteheadError):
        hfconc.delta_whitehead(2, 1, -1)


def test_hf_plus_and_casson():
    h = hfconc.hf_plus(hfconc.KnotSpec.torus(2, 3), 6)
    assert h["d"] == 0
    assert h["red"] == {-1: 4, -3: 2}
    assert h["hat_rank"] == 13
    assert hfconc.casson(6) == -6
    assert hfconc.fox_milnor_twist(6) == 2
    assert hfconc.fox_milnor_twist(5) is None
    assert hfconc.thresholds(hfconc.KnotSpec.family(2, 3)) == (6, 6, 6)


def test_sweep():
    assert hfconc.sweep([2, 3], 6, 8, jobs=2) == [(2, 1, 2), (2, 3, 3), (3, 1, 3), (3, 2, 4)]
    report = hfconc.obstruct(2, 1, 1)
    assert not report["pass"]
    assert report["entries"][1][2] == -2
