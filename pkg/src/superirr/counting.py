"""Counts of monic weakly 2-superirreducible polynomials.

Three independent computations of s2(q, d) for q an odd prime power and
d even, cross-validating one another:

  formula     sum over divisors e | d with d/e odd of mu(d/e) * T(q, e),
              divided by d * 2^q, where T(q, e) is the shift product sum
              over F_{q^e} of prod_c (1 - chi(alpha + c));
  roots       direct count of alpha in F_{q^d} lying in no proper
              subfield with every shift alpha + c a non-square, divided
              by d;
  bruteforce  enumeration of the monic irreducible polynomials, each
              tested against every quadratic substitution.

Both divisions are asserted exact.  All arithmetic is integer: the
vectorized engine works in int64 (intermediate magnitudes are bounded
well below 2^63) and totals are converted to Python ints; the pure
engine never leaves Python ints.  The module also provides the Gauss
count s1, the Moebius function, autocorrelations of the quadratic
character, and a composite-marking sieve used as the enumeration oracle
for the Gauss formula.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import fields, polys
from .config import (
    BULK_MIN_SIZE,
    CeilingError,
    DEFAULT_ENUM_CEILING,
    DEFAULT_OP_BUDGET,
)
from .deciders import _naive_search, naive_budget_estimate
from .config import BudgetError
from .fields import build_tower, prime_power


def divisors(n):
    small = []
    large = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def mobius(n):
    """Standard Moebius function, by trial division."""
    if n < 1 or n > 2**32:
        raise ValueError("mobius argument out of range")
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def gauss_s1(q, d):
    """Number of monic irreducible degree-d polynomials over F_q:
    (1/d) sum over e | d of mu(d/e) q^e."""
    prime_power(q)
    if d < 1:
        raise ValueError("degree must be positive")
    total = sum(mobius(d // e) * q**e for e in divisors(d))
    if total % d:
        raise ArithmeticError("Gauss sum not divisible by d")
    return total // d


def expected_main_term(q, d):
    """The heuristic main term q^d / (d 2^q), as an exact fraction."""
    return Fraction(q**d, d * 2**q)


@dataclass(frozen=True)
class CountRecord:
    """One count with enough context to reproduce and cross-validate it."""

    k: int
    q: int
    d: int
    method: str
    value: int
    main_term: Fraction
    moduli: tuple
    elapsed: float
    note: str | None = None

    def key(self):
        return (self.k, self.q, self.d, self.method, ";".join(self.moduli))

    def as_dict(self):
        return {
            "k": self.k,
            "q": self.q,
            "d": self.d,
            "method": self.method,
            "value": self.value,
            "main_term": str(self.main_term),
            "moduli": list(self.moduli),
            "elapsed": self.elapsed,
            "note": self.note,
        }


@dataclass(frozen=True)
class AutocorrResult:
    """a_{q^e}(U) = sum over beta in F_{q^e} of prod_{u in U} chi(beta + u)."""

    q: int
    e: int
    offsets: tuple
    value: int

    def as_dict(self):
        return {"q": self.q, "e": self.e, "offsets": list(self.offsets),
                "value": self.value}


# ---------------------------------------------------------------------------
# character tables: pure and vectorized engines


_PURE_CHI = {}


def _chi_pure(level):
    """chi over a level of odd size, one exponentiation per element."""
    table = _PURE_CHI.get(id(level))
    if table is not None:
        return table
    Q = level.size
    neg_one = level.neg(1)
    half = (Q - 1) // 2
    table = [0] * Q
    for i in range(1, Q):
        r = level.pow(i, half)
        if r == 1:
            table[i] = 1
        elif r == neg_one:
            table[i] = -1
        else:
            raise ArithmeticError("character power landed outside {1, -1}")
    _PURE_CHI[id(level)] = table
    return table


class _BulkTower:
    """Vectorized arithmetic over the flat F_p coefficient space of a
    tower's top level: the chi table via one squaring pass, subfield
    membership via powers of the (F_p-linear) Frobenius matrix, and
    constant shifts via index arithmetic."""

    CHUNK = 1 << 18
    MAX_SIZE = 1 << 26
    MAX_CHAR = 1 << 13  # keeps every int64 accumulation far from overflow

    def __init__(self, tower):
        top = tower.top_level
        self.tower = tower
        self.top = top
        self.p = top.char
        self.q = tower.q
        self.n = top.degree_over_prime
        self.Q = top.size
        if self.Q > self.MAX_SIZE or self.p > self.MAX_CHAR:
            raise CeilingError("field too large for the vectorized engine; "
                               "use engine='pure'")
        self.ppow = self.p ** np.arange(self.n, dtype=np.int64)
        # sparse structure of the squaring map: for each basis pair (u, v)
        # the reduced digit expansion of x^u * x^v, scaled by 2 off-diagonal
        entries = []
        for u in range(self.n):
            for v in range(u, self.n):
                prod_ix = top.mul(self.p**u, self.p**v)
                scale = 1 if u == v else 2
                row = tuple(
                    (m, (scale * dig) % self.p)
                    for m, dig in enumerate(self._digits(prod_ix))
                    if (scale * dig) % self.p
                )
                if row:
                    entries.append((u, v, row))
        self.pair_entries = entries
        self._chi = None
        self._masks = {}

    def _digits(self, ix):
        return [(ix // self.p**m) % self.p for m in range(self.n)]

    def _digit_block(self, lo, hi):
        idx = np.arange(lo, hi, dtype=np.int64)
        return (idx[:, None] // self.ppow) % self.p

    def chi(self):
        if self._chi is None:
            if self.p == 2:
                raise ValueError("quadratic character needs odd characteristic")
            chi = np.full(self.Q, -1, dtype=np.int8)
            for lo in range(0, self.Q, self.CHUNK):
                hi = min(lo + self.CHUNK, self.Q)
                block = self._digit_block(lo, hi)
                acc = np.zeros((hi - lo, self.n), dtype=np.int64)
                for u, v, row in self.pair_entries:
                    prod = block[:, u] * block[:, v]
                    for m, coef in row:
                        acc[:, m] += prod if coef == 1 else coef * prod
                acc %= self.p
                chi[acc @ self.ppow] = 1
            chi[0] = 0
            self._chi = chi
        return self._chi

    def frobenius_matrix(self):
        mat = np.zeros((self.n, self.n), dtype=np.int64)
        for m in range(self.n):
            mat[:, m] = self._digits(self.top.pow(self.p**m, self.q))
        return mat

    def subfield_mask(self, s):
        """Boolean array: index lies in F_{q^s}."""
        mask = self._masks.get(s)
        if mask is None:
            mat = self.frobenius_matrix()
            power = np.eye(self.n, dtype=np.int64)
            for _ in range(s):
                power = (power @ mat) % self.p
            mask = np.empty(self.Q, dtype=bool)
            for lo in range(0, self.Q, self.CHUNK):
                hi = min(lo + self.CHUNK, self.Q)
                block = self._digit_block(lo, hi)
                image = (block @ power.T) % self.p
                mask[lo:hi] = (image == block).all(axis=1)
            self._masks[s] = mask
        return mask

    def shifted_indices(self, indices, c_ix):
        """Indices of alpha + embed(c) for every alpha index given."""
        if c_ix == 0:
            return indices
        mid = self.tower.mid_level
        add_row = np.array([mid.add(m, c_ix) for m in range(self.q)],
                           dtype=np.int64)
        low = indices % self.q
        return indices - low + add_row[low]

    def shift_products(self):
        """Per-element product over c in F_q of (1 - chi(alpha + c))."""
        chi = self.chi()
        indices = np.arange(self.Q, dtype=np.int64)
        prod = np.ones(self.Q, dtype=np.int64)
        for c_ix in range(self.q):
            prod *= 1 - chi[self.shifted_indices(indices, c_ix)].astype(np.int64)
        return prod


_BULK = {}


def _bulk_for(tower):
    bulk = _BULK.get(id(tower))
    if bulk is None:
        bulk = _BulkTower(tower)
        _BULK[id(tower)] = bulk
    return bulk


def _pick_engine(tower, engine):
    if engine == "auto":
        return "bulk" if tower.top_level.size > BULK_MIN_SIZE else "pure"
    if engine not in ("pure", "bulk"):
        raise ValueError("engine must be auto, pure, or bulk")
    return engine


def _shift_products_pure(tower):
    top = tower.top_level
    chi = _chi_pure(top)
    q = tower.q
    add = top.add
    out = []
    for alpha in range(top.size):
        prod = 1
        for c_ix in range(q):
            prod *= 1 - chi[add(alpha, c_ix)]
            if not prod:
                break
        out.append(prod)
    return out


def _normalize_offsets(tower, offsets):
    mid = tower.mid_level
    out = []
    for u in offsets:
        if isinstance(u, fields.FieldElement):
            if u.level is not mid:
                raise ValueError("offset %r is not an element of F_q" % (u,))
            out.append(u.ix)
        elif isinstance(u, int):
            if not 0 <= u < mid.size:
                raise ValueError("offset index %d out of range" % u)
            out.append(u)
        else:
            out.append(mid.element_parse(str(u)))
    if not out:
        raise ValueError("offsets must be nonempty")
    if len(set(out)) != len(out):
        raise ValueError("offsets must be distinct")
    return tuple(sorted(out))


def autocorrelation(q, e, offsets, engine="auto", ceiling=DEFAULT_ENUM_CEILING):
    """a_{q^e}(U): sum over beta in F_{q^e} of the product of
    chi_{q^e}(beta + u) over the distinct offsets u in U (subset of F_q)."""
    if q % 2 == 0:
        raise ValueError("autocorrelation needs odd q")
    p, ell = prime_power(q)
    tower = build_tower(p, ell, e, ceiling=ceiling)
    offs = _normalize_offsets(tower, offsets)
    engine = _pick_engine(tower, engine)
    if engine == "bulk":
        bulk = _bulk_for(tower)
        chi = bulk.chi()
        indices = np.arange(bulk.Q, dtype=np.int64)
        acc = np.ones(bulk.Q, dtype=np.int64)
        for u in offs:
            acc *= chi[bulk.shifted_indices(indices, u)].astype(np.int64)
        value = int(acc.sum())
    else:
        top = tower.top_level
        chi = _chi_pure(top)
        add = top.add
        value = 0
        for beta in range(top.size):
            prod = 1
            for u in offs:
                prod *= chi[add(beta, u)]
                if not prod:
                    break
            value += prod
    return AutocorrResult(q, e, offs, value)


def shift_product_sum(q, e, engine="auto", ceiling=DEFAULT_ENUM_CEILING):
    """T(q, e) = sum over alpha in F_{q^e} of prod_{c in F_q}
    (1 - chi_{q^e}(alpha + c)); every factor lies in {0, 1, 2}."""
    if q % 2 == 0:
        raise ValueError("shift product sum needs odd q")
    p, ell = prime_power(q)
    tower = build_tower(p, ell, e, ceiling=ceiling)
    engine = _pick_engine(tower, engine)
    if engine == "bulk":
        return int(_bulk_for(tower).shift_products().sum())
    return sum(_shift_products_pure(tower))


def _theorem_zero_reason(q, d):
    if q % 2 == 0:
        return "characteristic 2"
    if d % 2 == 1:
        return "odd degree"
    if q > (d - 1) ** 2:
        return "q > (d-1)^2"
    return None


def s2_formula(q, d, engine="auto", ceiling=DEFAULT_ENUM_CEILING):
    """Exact s2(q, d) by Moebius-weighted shift product sums, asserting
    the final sum divisible by d * 2^q."""
    start = time.perf_counter()
    p, ell = prime_power(q)
    if q % 2 == 0:
        raise ValueError("the counting formula needs odd q")
    if d % 2 == 1:
        raise ValueError("the counting formula needs even d")
    total = 0
    moduli = []
    for e in divisors(d):
        if (d // e) % 2 == 1:
            mu = mobius(d // e)
            if mu == 0:
                continue
            tower = build_tower(p, ell, e, ceiling=ceiling)
            total += mu * shift_product_sum(q, e, engine=engine, ceiling=ceiling)
            moduli.append(tower.moduli_text())
    denom = d * 2**q
    if total % denom:
        raise ArithmeticError(
            "formula total %d not divisible by %d; implementation bug"
            % (total, denom))
    return CountRecord(2, q, d, "formula", total // denom,
                       expected_main_term(q, d), tuple(moduli),
                       time.perf_counter() - start)


def s2_roots(q, d, engine="auto", ceiling=DEFAULT_ENUM_CEILING):
    """Exact s2(q, d) by enumerating alpha in F_{q^d} outside every
    proper subfield with all shifts non-square, then dividing by d."""
    start = time.perf_counter()
    p, ell = prime_power(q)
    if q % 2 == 0:
        raise ValueError("the root count needs odd q")
    if d % 2 == 1:
        raise ValueError("the root count needs even d")
    tower = build_tower(p, ell, d, ceiling=ceiling)
    top = tower.top_level
    maximal = [d // r for r in polys._prime_factors(d)]
    engine = _pick_engine(tower, engine)
    want = 2**q
    if engine == "bulk":
        bulk = _bulk_for(tower)
        products = bulk.shift_products()
        proper = np.zeros(bulk.Q, dtype=bool)
        for s in maximal:
            proper |= bulk.subfield_mask(s)
        count = int(((products == want) & ~proper).sum())
    else:
        products = _shift_products_pure(tower)
        powq = top.pow
        count = 0
        for alpha in range(top.size):
            if products[alpha] != want:
                continue
            if any(powq(alpha, q**s) == alpha for s in maximal):
                continue
            count += 1
    if count % d:
        raise ArithmeticError(
            "root count %d not divisible by %d; implementation bug" % (count, d))
    return CountRecord(2, q, d, "roots", count // d, expected_main_term(q, d),
                       (tower.moduli_text(),), time.perf_counter() - start)


def _bruteforce_chunk(p, ell, d, k, lo, hi, budget):
    """Scan monic degree-d candidates with lower-coefficient rank in
    [lo, hi); returns (irreducible count, weakly k-superirreducible count)."""
    tower = build_tower(p, ell, 1)
    lvl = tower.mid_level
    Q = lvl.size
    coeffs = [0] * (d + 1)
    coeffs[d] = 1
    rank = lo
    for pos in range(d):
        rank, coeffs[pos] = divmod(rank, Q)
    n_irr = 0
    n_super = 0
    for _ in range(hi - lo):
        if polys._is_irreducible_raw(lvl, coeffs):
            n_irr += 1
            if _naive_search(lvl, coeffs, k, False) is None:
                n_super += 1
        for pos in range(d):
            coeffs[pos] += 1
            if coeffs[pos] < Q:
                break
            coeffs[pos] = 0
    return n_irr, n_super


def s2_bruteforce(q, d, k=2, workers=1, budget=DEFAULT_OP_BUDGET,
                  ceiling=DEFAULT_ENUM_CEILING):
    """Exact s_k(q, d) by full enumeration: every monic irreducible f of
    degree d, tested against the complete degree-k substitution space.
    Valid for every q and d, including the cases the theorems settle."""
    start = time.perf_counter()
    p, ell = prime_power(q)
    if q**d > ceiling:
        raise CeilingError("enumeration of %d^%d candidates exceeds the ceiling"
                           % (q, d))
    if budget is not None:
        per_call = naive_budget_estimate(q, d, k)
        if per_call > budget:
            raise BudgetError(
                "each naive test needs about %d coefficient operations, "
                "budget is %d" % (per_call, budget))
    total = q**d
    if workers > 1:
        step = -(-total // workers)
        spans = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_bruteforce_chunk,
                                  *zip(*[(p, ell, d, k, lo, hi, budget)
                                         for lo, hi in spans])))
        n_irr = sum(part[0] for part in parts)
        n_super = sum(part[1] for part in parts)
    else:
        n_irr, n_super = _bruteforce_chunk(p, ell, d, k, 0, total, budget)
    tower = build_tower(p, ell, 1)
    note = "irreducible candidates: %d" % n_irr
    return CountRecord(k, q, d, "bruteforce", n_super,
                       expected_main_term(q, d), (tower.moduli_text(),),
                       time.perf_counter() - start, note)


def s2(q, d, method="auto", engine="auto", workers=1,
       budget=DEFAULT_OP_BUDGET, ceiling=DEFAULT_ENUM_CEILING):
    """Dispatcher: auto mode applies the vanishing theorems (q even, d
    odd, or q > (d-1)^2) and otherwise runs the formula; an explicit
    method bypasses the short-circuits for cross-validation."""
    start = time.perf_counter()
    prime_power(q)
    if d < 1:
        raise ValueError("degree must be positive")
    if method == "auto":
        reason = _theorem_zero_reason(q, d)
        if reason is not None:
            return CountRecord(2, q, d, "theorem_zero", 0,
                               expected_main_term(q, d), (),
                               time.perf_counter() - start, reason)
        return s2_formula(q, d, engine=engine, ceiling=ceiling)
    if method == "formula":
        return s2_formula(q, d, engine=engine, ceiling=ceiling)
    if method == "roots":
        return s2_roots(q, d, engine=engine, ceiling=ceiling)
    if method == "bruteforce":
        return s2_bruteforce(q, d, workers=workers, budget=budget,
                             ceiling=ceiling)
    raise ValueError("unknown method %r" % method)


# ---------------------------------------------------------------------------
# enumeration oracles for the Gauss count


def count_irreducible_by_enumeration(q, d, ceiling=DEFAULT_ENUM_CEILING):
    """Candidate-by-candidate count: every monic degree-d polynomial is
    tested individually for irreducibility."""
    p, ell = prime_power(q)
    if q**d > ceiling:
        raise CeilingError("enumeration of %d^%d candidates exceeds the ceiling"
                           % (q, d))
    lvl = build_tower(p, ell, 1).mid_level
    count = 0
    for raw in polys._iter_monic_raw(lvl, d):
        if polys._is_irreducible_raw(lvl, raw):
            count += 1
    return count


def count_irreducible_by_sieve(q, d, ceiling=DEFAULT_ENUM_CEILING):
    """Composite-marking count: every product of a monic irreducible of
    degree a <= d/2 with every monic polynomial of degree d - a is marked,
    and the unmarked candidates are the irreducibles.  Independent of the
    Rabin test for degree d (the small factors are found recursively)."""
    p, ell = prime_power(q)
    total = q**d
    if total > ceiling:
        raise CeilingError("sieve of %d^%d candidates exceeds the ceiling"
                           % (q, d))
    if d == 1:
        return q
    lvl = build_tower(p, ell, 1).mid_level
    composite = np.zeros(total, dtype=bool)
    qpow = q ** np.arange(d, dtype=np.int64)
    chunk = 1 << 17
    if lvl.kind != "prime":
        mul_t = np.array(lvl.mul_table, dtype=np.int64).reshape(q, q)
        add_flat = np.array(lvl.add_table, dtype=np.int64)
    for a in range(1, d // 2 + 1):
        nh = d - a
        rows = q**nh
        for m in polys.enumerate_monic_irreducible(lvl, a):
            mc = m.coeffs
            for lo in range(0, rows, chunk):
                hi = min(lo + chunk, rows)
                idx = np.arange(lo, hi, dtype=np.int64)
                h_cols = (idx[:, None] // qpow[:nh]) % q
                acc = np.zeros((hi - lo, d), dtype=np.int64)
                if lvl.kind == "prime":
                    for j, mj in enumerate(mc):
                        if mj:
                            acc[:, j:j + nh] += mj * h_cols
                            if nh + j < d:
                                acc[:, nh + j] += mj
                    acc %= q
                else:
                    for j, mj in enumerate(mc):
                        if mj:
                            row = mul_t[mj]
                            for i in range(nh):
                                acc[:, i + j] = add_flat[acc[:, i + j] * q
                                                         + row[h_cols[:, i]]]
                            if nh + j < d:
                                acc[:, nh + j] = add_flat[acc[:, nh + j] * q + mj]
                composite[acc @ qpow] = True
    return int(total - int(composite.sum()))
