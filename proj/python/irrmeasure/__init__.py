"""Irrationality measure functions of quadratic irrationals.

Numbers are given as spec strings: ``"surd:(P+sqrt(D))/Q"``, ``"cf:[a0;a1,(c1,c2)]"``
or ``"tau"``. Certificates come back as plain dicts.
"""

import json

from . import _core
from ._core import IrrmeasureError, QuadExt, binet_fib, constant, d_decimal, profile_csv, sign_changes

__all__ = [
    "IrrmeasureError",
    "QuadExt",
    "binet_fib",
    "constant",
    "construct_optimal",
    "d_decimal",
    "error_code",
    "expand",
    "find_witness",
    "merged_word",
    "profile_csv",
    "psi",
    "sign_changes",
    "verify_near_optimality",
]


def error_code(exc):
    """The ErrorCode name carried by an IrrmeasureError."""
    return exc.args[0]


def expand(spec, count=10):
    return json.loads(_core.expand(spec, count))


def psi(spec, t, digits=12):
    return json.loads(_core.psi(spec, t, digits))


def merged_word(alpha, beta, count):
    return json.loads(_core.merged_word(alpha, beta, count))


def find_witness(alpha, beta, t_from, bound=10**12, digits=12):
    return json.loads(_core.find_witness(alpha, beta, t_from, bound, digits))


def construct_optimal(epsilon, digits=12):
    return json.loads(_core.construct_optimal(epsilon, digits))


def verify_near_optimality(epsilon, t_min, t_max, slack=None, digits=12):
    if slack is None:
        from fractions import Fraction

        slack = 5 * Fraction(str(epsilon))
    return json.loads(_core.verify_near_optimality(epsilon, t_min, t_max, slack, digits))
