"""Exact-arithmetic verification of the inequalities the counts obey.

Everything is compared over the integers or exact rationals; square
roots are avoided by squaring both sides, which is recorded in each
report's lhs/rhs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import counting, polys
from .config import DEFAULT_ENUM_CEILING
from .counting import expected_main_term
from .fields import build_tower, prime_power


@dataclass(frozen=True)
class BoundReport:
    """One checked inequality: holds iff lhs < rhs or lhs <= rhs, as the
    named bound states; margin = rhs - lhs exactly."""

    name: str
    params: dict
    lhs: object
    rhs: object
    strict: bool
    holds: bool
    margin: object

    def as_dict(self):
        return {
            "name": self.name,
            "params": self.params,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "strict": self.strict,
            "holds": self.holds,
            "margin": str(self.margin),
        }


def _report(name, params, lhs, rhs, strict):
    holds = lhs < rhs if strict else lhs <= rhs
    return BoundReport(name, params, lhs, rhs, strict, holds, rhs - lhs)


def check_weil_autocorr(q, e, offsets, engine="auto"):
    """Weil bound for autocorrelations: a^2 <= (n-1)^2 q^e in integers,
    n the number of offsets."""
    result = counting.autocorrelation(q, e, offsets, engine=engine)
    n = len(result.offsets)
    return _report(
        "weil_autocorr",
        {"q": q, "e": e, "offsets": list(result.offsets), "value": result.value},
        result.value**2,
        (n - 1) ** 2 * q**e,
        strict=False,
    )


def largeq_vanishing(q, d):
    """Whether the large-q vanishing hypothesis applies: q an odd prime
    power, d even, and q > (d-1)^2."""
    try:
        prime_power(q)
    except ValueError:
        return False
    return q % 2 == 1 and d % 2 == 0 and q > (d - 1) ** 2


def check_wan_bound(q, d, engine="auto", ceiling=DEFAULT_ENUM_CEILING):
    """For every alpha generating F_{q^d} over F_q, the shifted character
    sum S(alpha) = sum_c chi(alpha + c) satisfies S^2 <= (d-1)^2 q; when
    q > (d-1)^2 the strict consequence S^2 < q^2 is checked as well."""
    if q % 2 == 0:
        raise ValueError("the character sum bound needs odd q")
    p, ell = prime_power(q)
    tower = build_tower(p, ell, d, ceiling=ceiling)
    top = tower.top_level
    engine = counting._pick_engine(tower, engine)
    maximal = [d // r for r in polys._prime_factors(d)] if d > 1 else []
    if engine == "bulk":
        bulk = counting._bulk_for(tower)
        chi = bulk.chi()
        indices = np.arange(bulk.Q, dtype=np.int64)
        sums = np.zeros(bulk.Q, dtype=np.int64)
        for c_ix in range(q):
            sums += chi[bulk.shifted_indices(indices, c_ix)]
        generating = np.ones(bulk.Q, dtype=bool)
        for s in maximal:
            generating &= ~bulk.subfield_mask(s)
        alphas = np.nonzero(generating)[0]
        values = sums[generating]
    else:
        chi = counting._chi_pure(top)
        add = top.add
        powq = top.pow
        alphas = []
        values = []
        for alpha in range(top.size):
            if any(powq(alpha, q**s) == alpha for s in maximal):
                continue
            alphas.append(alpha)
            values.append(sum(chi[add(alpha, c_ix)] for c_ix in range(q)))
    strict_extra = q > (d - 1) ** 2
    reports = []
    for alpha, value in zip(alphas, values):
        value = int(value)
        params = {"q": q, "d": d, "alpha": top.element_text(int(alpha)),
                  "sum": value}
        report = _report("wan", params, value**2, (d - 1) ** 2 * q, strict=False)
        if strict_extra and report.holds and value**2 >= q * q:
            report = BoundReport("wan", params, value**2, q * q, True, False,
                                 q * q - value**2)
        reports.append(report)
    return reports


def larged_error_bound(q, d):
    """The asymptotic error radius (q / 2d) q^(d/2) as an exact fraction
    (d even, so q^(d/2) is an integer)."""
    if d % 2:
        raise ValueError("the asymptotic bound needs even d")
    return Fraction(q * q ** (d // 2), 2 * d)


def check_larged(q, d, s2_value):
    """|s2(q, d) - q^d/(d 2^q)| < (q/2d) q^(d/2), strictly, in exact
    rational arithmetic."""
    if q % 2 == 0 or d % 2 == 1:
        raise ValueError("the asymptotic bound needs odd q and even d")
    gap = abs(Fraction(s2_value) - expected_main_term(q, d))
    return _report("larged", {"q": q, "d": d, "s2": int(s2_value)},
                   gap, larged_error_bound(q, d), strict=True)
