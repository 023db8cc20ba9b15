"""Exact power sums and hyper-sums of arithmetic progressions.

Every quantity is computed in exact rational arithmetic; values cross the
boundary as :class:`Rational` objects (convert with ``to_fraction`` or
``str``). See :func:`verify` for the cross-formula verification suite.
"""

import json as _json

from ._core import (
    NotApplicableError,
    Rational,
    __version__,
    bernoulli,
    bernoulli_polynomial,
    bernoulli_via_stirling,
    binomial,
    factorial,
    hyper_sum,
    hyper_sum_all,
    hyper_sum_egf,
    pochhammer,
    power_sum,
    power_sum_all,
    power_sum_egf,
    r_stirling2,
    stirling2,
    verify_json,
    weighted_stirling,
    whitney,
)

__all__ = [
    "NotApplicableError",
    "Rational",
    "__version__",
    "bernoulli",
    "bernoulli_polynomial",
    "bernoulli_via_stirling",
    "binomial",
    "factorial",
    "hyper_sum",
    "hyper_sum_all",
    "hyper_sum_egf",
    "pochhammer",
    "power_sum",
    "power_sum_all",
    "power_sum_egf",
    "r_stirling2",
    "stirling2",
    "to_fraction",
    "verify",
    "verify_json",
    "weighted_stirling",
    "whitney",
]


def to_fraction(value):
    """Convert a Rational (or anything with a canonical str form) to fractions.Fraction."""
    from fractions import Fraction

    return Fraction(str(value))


def verify(grid="small"):
    """Run the cross-formula verification suite; returns the report as a dict."""
    return _json.loads(verify_json(grid))
