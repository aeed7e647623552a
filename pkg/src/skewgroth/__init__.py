"""Exact skew stable Grothendieck functions, their duals and the
noncommutative Schur expansion rules, over Q[beta]."""

from .betapoly import BETA, NEG_BETA, ONE, ZERO, BetaPoly, beta_power, neg_beta_power
from .core import conjugate, contains, make_partition, partitions_of, partitions_upto, subpartitions
from .grothendieck import (
    G_schur,
    G_skew,
    G_skew_double,
    G_skew_double_det,
    G_skew_single,
    G_skew_single_det,
    G_skew_single_rook,
    NonStabilizationError,
    finite_var_G_det,
    g_perp_g_det,
    g_schur,
    g_skew,
    g_skew_det,
    s_perp_G_det,
    s_perp_G_finite_det,
    s_perp_g_det,
)
from .noncomm import (
    Expansion,
    OpWord,
    SkewSum,
    apply_op,
    apply_star,
    expand_sG_double,
    expand_sG_single,
    expand_sg,
    minimal_r,
    noncomm_schur_apply,
    perp_expand_G,
    perp_expand_g,
)
from .symfunc import SymFunc, hall_inner, multiply, perp, perp_schur, schur, truncate_length

__all__ = [name for name in dir() if not name.startswith("_")]
