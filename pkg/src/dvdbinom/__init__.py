"""Generalized binomial coefficients in discrete valuation domains with
finite residue field: exact evaluation, Lucas-type digit factorization and
generating polynomials for residue-class counts."""

__version__ = "0.1.0"

from .basis import (
    class_triangle,
    coefficient_classes,
    digit_coeff_table,
    fn_eval_exact,
    fn_exact_values,
    fn_residue,
    fn_residue_at,
    verify_lucas,
)
from .dvd_core import (
    DvdModel,
    PowerSeriesLocalization,
    RationalLocalization,
    VElement,
    digits_of,
    expand,
    make_model,
    n_shift,
    n_slice,
    random_reps,
    residue,
    u_of,
    valuation,
    verify_vwdwo,
)
from .errors import *  # noqa: F401,F403
from .genpoly import (
    CyclicPoly,
    DigitStats,
    DistributionCounts,
    cyclic_mul,
    digit_stats,
    eps_counts,
    gamma,
    gen_poly,
    theorem_rhs,
    verify_main_theorem,
    verify_main_theorem_range,
)
from .report import VerificationReport
from .residue_field import ResidueField, build_field
from .words import DigitWord, concat, psi, s_set, s_sets, upsilon, verify_bijection, z_of
