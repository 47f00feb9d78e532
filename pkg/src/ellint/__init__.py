"""Generalized elliptic integrals K_a, E_a, the Ramanujan constant function,
and sharp two-sided logarithmic bounds for K_a."""

from .bounds import (
    EnvelopeReport,
    SharpConstants,
    ViolationWitness,
    envelope,
    envelope_scan,
    f_lemma33,
    g_lambda,
    h_lambda,
    ratio_rho,
    sharp_constants,
    sharpness_scan,
)
from .elliptic import (
    ModulusPoint,
    d_elle_gen,
    d_ellk_gen,
    elle_gen,
    ellk_gen,
    em_combo,
)
from .errors import ConvergenceError, DomainError, WitnessNotFound
from .ramanujan import (
    cor24_gap,
    cor25_gap,
    eta,
    r_def,
    r_series,
    rs_product,
    sine_gap,
    xi,
)
from .special_core import (
    DEFAULT_CONFIG,
    EvalConfig,
    Param,
    digamma,
    hyp2f1_k_near_one,
    hyp2f1_series,
    pochhammer,
    zeta_int,
)

__all__ = [name for name in dir() if not name.startswith("_")]
