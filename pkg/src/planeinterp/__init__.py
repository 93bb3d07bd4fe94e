"""Exact slope bounds and emptiness certificates for plane curves through fat points."""

from .bounds import BoundMatrix, NSplit, SquareN, bound_matrix, c1, c2, cf_expand, lemmaB_check, split_n
from .exactnum import Mat2, Rational, binom, fmt_rational, mat2_mul, mat2_pow, mat2_scale
from .linsys import InvariantRow, LinearSystem, Verdict, chi_additivity, classify, invariants, sharp_flat
from .oracle import BudgetExceeded, OracleConfig, RankCertificate, build_conditions, certify, rank_modp
from .sympow import BundleClass, BundleDecomp, h0_anticanonical_pencil, sym_power, tensor

__version__ = "0.1.0"

__all__ = [
    "BoundMatrix",
    "BudgetExceeded",
    "BundleClass",
    "BundleDecomp",
    "InvariantRow",
    "LinearSystem",
    "Mat2",
    "NSplit",
    "OracleConfig",
    "RankCertificate",
    "Rational",
    "SquareN",
    "Verdict",
    "binom",
    "bound_matrix",
    "build_conditions",
    "c1",
    "c2",
    "certify",
    "cf_expand",
    "chi_additivity",
    "classify",
    "fmt_rational",
    "h0_anticanonical_pencil",
    "invariants",
    "lemmaB_check",
    "mat2_mul",
    "mat2_pow",
    "mat2_scale",
    "rank_modp",
    "sharp_flat",
    "split_n",
    "sym_power",
    "tensor",
]
