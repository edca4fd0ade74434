"""Exact arithmetic: Laurent polynomials, rational functions, q-series."""
from .laurent import MultiLaurent, VariableMismatch
from .field import (
    DivisionByZero,
    PoleError,
    RationalField,
    RationalFunction,
    rational_field,
    ratfunc_arith,
    substitute,
)
from .qcomb import q_factorial, q_int, q_pochhammer
from .qseries import NonUnitSeries, TruncatedQSeries, qseries_expand_infinite_factor
from .linalg import Inconsistent, determinant, solve

__all__ = [
    "MultiLaurent", "VariableMismatch", "DivisionByZero", "PoleError", "RationalField",
    "RationalFunction", "rational_field", "ratfunc_arith", "substitute", "q_factorial",
    "q_int", "q_pochhammer", "NonUnitSeries", "TruncatedQSeries",
    "qseries_expand_infinite_factor", "Inconsistent", "determinant", "solve",
]
