"""Convert library values into sympy expressions for independent checks."""
from fractions import Fraction

import sympy


def laurent_to_sympy(ml, symbols=None):
    symbols = symbols or {v: sympy.Symbol(v) for v in ml.variables}
    total = sympy.Integer(0)
    for exp, c in ml.items():
        c = Fraction(c)
        term = sympy.Rational(c.numerator, c.denominator)
        for v, k in zip(ml.variables, exp):
            term *= symbols[v] ** k
        total += term
    return total


def to_sympy(f, symbols=None):
    return laurent_to_sympy(f.numerator, symbols) / laurent_to_sympy(f.denominator, symbols)
