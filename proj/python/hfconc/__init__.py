"""Heegaard Floer invariants of twisted Whitehead doubles."""

from ._core import (
    CfkError,
    DInvariantError,
    F2Error,
    KnotSpec,
    WhiteheadError,
    alexander,
    casson,
    d_lens,
    d_lens_2r1_2,
    d_matsumoto,
    delta_via_surgery,
    delta_whitehead,
    filtration_homology,
    fox_milnor_twist,
    hf_plus,
    hk_shortcut_family,
    obstruct,
    reduced_filtration_homology,
    sweep,
    tau,
    tau_whitehead,
    thresholds,
    vk_shortcut_family,
    vtable,
    whitehead_alexander,
)

__version__ = "0.1.0"
