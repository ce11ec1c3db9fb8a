"""Exact determinants and permanents of Hadamard powers of Cauchy matrices
built on roots of unity, with the algebra needed to check them."""
from .cyclotomic import CyclotomicElement, CyclotomicField, cyclotomic_field, cyclotomic_polynomial, to_rational
from .errors import (
    FieldMismatchError,
    HadamardCauchyError,
    InvalidInstanceError,
    NonIntegralError,
    OrderMismatchError,
    ShapeError,
    SizeLimitError,
    UnsupportedDomainError,
)
from .exact import Polynomial, binomial, format_rational, parse_rational, poly_divmod, poly_xgcd
from .formulas import (
    CauchyInstance,
    TwistedRational,
    det_hadamard_closed,
    f0_direct,
    f0_recurrence,
    f0_series,
    f_k,
    f_table,
    per_closed,
    scott_minc,
    permanent_forms_agree,
)
from .matrix import (
    ExactMatrix,
    build_cauchy,
    determinant,
    kernel_det_closed,
    permanent_naive,
    permanent_ryser,
    rank,
)
from .verify import VerificationReport, verify_instance

__version__ = "0.1.0"
