"""Exact arithmetic in finite field towers F_p <= F_q <= F_{q^e}, q = p^ell.

Every level identifies its elements with their lexicographic index in
[0, size): an extension element with coefficient vector (c_0, ..., c_{d-1})
over a base of size B has index sum(c_j * B^j), so 0 and 1 are always the
identities, the enumeration order is the canonical element order with the
low-degree coefficient varying fastest, and embedding an element of a lower
level into a higher one preserves the index.

Prime levels compute directly mod p.  Extension levels work on coefficient
vectors of base indices, reduced against a stored monic modulus; small
extensions (size <= TABLE_AUTO_MAX) get flat add/mul/neg/inv lookup tables
at construction, which the polynomial kernels exploit.

The canonical text form of an element is a nested coefficient list,
innermost entries residues mod p, ascending degree: "7" at a prime level,
"[1,0,2]" in F_27 over F_3, "[[1,2],[0,1]]" at the top of F_3 -> F_9 -> F_81.
"""

from __future__ import annotations

import functools

from . import polys
from .config import CeilingError, DEFAULT_ENUM_CEILING, TABLE_AUTO_MAX

_VEC_CACHE_MAX = 4096


def is_prime(n):
    """Deterministic Miller-Rabin, valid for every n < 3.3 * 10^24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_power(q):
    """Decompose q = p^ell with p prime, or raise ValueError."""
    if q < 2:
        raise ValueError("%d is not a prime power" % q)
    if is_prime(q):
        return q, 1
    p = None
    d = 2
    while d * d <= q:
        if q % d == 0:
            p = d
            break
        d += 1
    if p is None:
        return q, 1
    ell = 0
    n = q
    while n % p == 0:
        n //= p
        ell += 1
    if n != 1:
        raise ValueError("%d is not a prime power" % q)
    return p, ell


class PrimeLevel:
    """The prime field F_p; elements are residues in [0, p)."""

    kind = "prime"
    is_field = True
    degree = 1
    base = None
    mul_table = None
    add_table = None
    neg_table = None
    inv_table = None
    zero = 0
    one = 1

    def __init__(self, p):
        self.char = p
        self.size = p
        self.degree_over_prime = 1

    def add(self, a, b):
        return (a + b) % self.size

    def sub(self, a, b):
        return (a - b) % self.size

    def mul(self, a, b):
        return (a * b) % self.size

    def neg(self, a):
        return -a % self.size

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in %r" % self)
        return pow(a, -1, self.size)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if n < 0:
            raise ValueError("negative exponent")
        return pow(a, n, self.size)

    def element_text(self, a):
        return str(a)

    def element_parse(self, text):
        v = int(text.strip())
        if not 0 <= v < self.size:
            raise ValueError("residue %d out of range for %r" % (v, self))
        return v

    def __repr__(self):
        return "GF(%d)" % self.size


class ExtensionLevel:
    """F_B[x]/(m(x)) over a base level of size B, m monic irreducible."""

    kind = "ext"
    is_field = True
    zero = 0
    one = 1

    def __init__(self, base, modulus):
        modulus = tuple(modulus)
        if len(modulus) < 2 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 1")
        self.base = base
        self.modulus = modulus
        self.degree = len(modulus) - 1
        self.char = base.char
        self.size = base.size ** self.degree
        self.degree_over_prime = base.degree_over_prime * self.degree
        self.mul_table = None
        self.add_table = None
        self.neg_table = None
        self.inv_table = None
        d = self.degree
        rows = []
        if d >= 1:
            row = [base.neg(c) for c in modulus[:d]]
            rows.append(tuple(row))
            for _ in range(d - 2):
                top = row[d - 1]
                row = [0] + row[: d - 1]
                if top:
                    first = rows[0]
                    row = [base.add(row[j], base.mul(top, first[j])) for j in range(d)]
                rows.append(tuple(row))
        self._redrows = rows
        self._vec_cache = None
        if self.size <= _VEC_CACHE_MAX:
            self._vec_cache = [self._decode_raw(i) for i in range(self.size)]
        if self.size <= TABLE_AUTO_MAX:
            self.ensure_tables()

    def _decode_raw(self, i):
        B = self.base.size
        out = []
        for _ in range(self.degree):
            i, r = divmod(i, B)
            out.append(r)
        return tuple(out)

    def decode(self, i):
        """Coefficient vector of base indices, fixed length, low degree first."""
        if self._vec_cache is not None:
            return self._vec_cache[i]
        return self._decode_raw(i)

    def encode(self, vec):
        B = self.base.size
        i = 0
        for c in reversed(vec):
            i = i * B + c
        return i

    def _vec_mul(self, va, vb):
        d = self.degree
        base = self.base
        badd = base.add
        bmul = base.mul
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(va):
            if ai:
                for j, bj in enumerate(vb):
                    if bj:
                        prod[i + j] = badd(prod[i + j], bmul(ai, bj))
        out = prod[:d]
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                row = self._redrows[k - d]
                out = [badd(out[j], bmul(c, row[j])) for j in range(d)]
        return out

    def add(self, a, b):
        t = self.add_table
        if t is not None:
            return t[a * self.size + b]
        badd = self.base.add
        va, vb = self.decode(a), self.decode(b)
        return self.encode([badd(x, y) for x, y in zip(va, vb)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        t = self.neg_table
        if t is not None:
            return t[a]
        bneg = self.base.neg
        return self.encode([bneg(x) for x in self.decode(a)])

    def mul(self, a, b):
        t = self.mul_table
        if t is not None:
            return t[a * self.size + b]
        if a == 0 or b == 0:
            return 0
        return self.encode(self._vec_mul(self.decode(a), self.decode(b)))

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in %r" % self)
        t = self.inv_table
        if t is not None:
            return t[a]
        base = self.base
        r0 = list(self.modulus)
        r1 = polys._trim(list(self.decode(a)))
        t0, t1 = [], [1]
        while len(r1) > 1:
            q, r = polys._divrem(base, r0, r1)
            r0, r1 = r1, r
            t0, t1 = t1, polys._sub(base, t0, polys._mul(base, q, t1))
        if not r1:
            raise ZeroDivisionError("element shares a factor with the modulus")
        scale = base.inv(r1[0])
        vec = [base.mul(c, scale) for c in t1]
        vec.extend([0] * (self.degree - len(vec)))
        return self.encode(vec)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if n < 0:
            raise ValueError("negative exponent")
        if a == 0:
            return 1 if n == 0 else 0
        order = self.size - 1
        if n >= order:
            n %= order
        if n == 0:
            return 1
        acc = list(self.decode(a))
        base_vec = acc
        for bit in bin(n)[3:]:
            acc = self._vec_mul(acc, acc)
            if bit == "1":
                acc = self._vec_mul(acc, base_vec)
        return self.encode(acc)

    def ensure_tables(self):
        """Build flat add/mul/neg/inv lookup tables (size^2 entries)."""
        if self.mul_table is not None:
            return
        Q = self.size
        vecs = self._vec_cache or [self._decode_raw(i) for i in range(Q)]
        badd = self.base.add
        add_t = [0] * (Q * Q)
        mul_t = [0] * (Q * Q)
        for a in range(Q):
            va = vecs[a]
            row = a * Q
            for b in range(a, Q):
                s = self.encode([badd(x, y) for x, y in zip(va, vecs[b])])
                add_t[row + b] = s
                add_t[b * Q + a] = s
        for a in range(1, Q):
            va = vecs[a]
            row = a * Q
            for b in range(a, Q):
                m = self.encode(self._vec_mul(va, vecs[b]))
                mul_t[row + b] = m
                mul_t[b * Q + a] = m
        neg_t = [0] * Q
        inv_t = [0] * Q
        for a in range(1, Q):
            neg_t[a] = self.encode([self.base.neg(x) for x in vecs[a]])
            inv_t[a] = self.inv(a)
        self.add_table = add_t
        self.mul_table = mul_t
        self.neg_table = neg_t
        self.inv_table = inv_t

    def element_text(self, a):
        base = self.base
        return "[%s]" % ",".join(base.element_text(c) for c in self.decode(a))

    def element_parse(self, text):
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise ValueError("expected a bracketed coefficient list, got %r" % text)
        parts = polys._split_top_level(text[1:-1])
        if len(parts) > self.degree:
            raise ValueError("too many coefficients for %r" % self)
        vec = [self.base.element_parse(part) for part in parts]
        vec.extend([0] * (self.degree - len(vec)))
        return self.encode(vec)

    def __repr__(self):
        return "GF(%d)" % self.size


class FieldElement:
    """An element of a tower level, identified by its canonical index."""

    __slots__ = ("level", "ix")

    def __init__(self, level, ix):
        if not 0 <= ix < level.size:
            raise ValueError("index %d out of range for %r" % (ix, level))
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "ix", ix)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _same(self, other):
        if not isinstance(other, FieldElement) or other.level is not self.level:
            raise TypeError("mixed field levels")
        return other

    def __add__(self, other):
        other = self._same(other)
        return FieldElement(self.level, self.level.add(self.ix, other.ix))

    def __sub__(self, other):
        other = self._same(other)
        return FieldElement(self.level, self.level.sub(self.ix, other.ix))

    def __mul__(self, other):
        other = self._same(other)
        return FieldElement(self.level, self.level.mul(self.ix, other.ix))

    def __truediv__(self, other):
        other = self._same(other)
        return FieldElement(self.level, self.level.div(self.ix, other.ix))

    def __neg__(self):
        return FieldElement(self.level, self.level.neg(self.ix))

    def __pow__(self, n):
        return FieldElement(self.level, self.level.pow(self.ix, n))

    def inverse(self):
        return FieldElement(self.level, self.level.inv(self.ix))

    def is_zero(self):
        return self.ix == 0

    @property
    def coeffs(self):
        """Nested coefficient tuples; a bare residue at the prime level."""

        def nest(level, ix):
            if level.kind == "prime":
                return ix
            return tuple(nest(level.base, d) for d in level.decode(ix))

        return nest(self.level, self.ix)

    def to_text(self):
        return self.level.element_text(self.ix)

    @classmethod
    def from_text(cls, level, text):
        return cls(level, level.element_parse(text))

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and other.level is self.level
            and other.ix == self.ix
        )

    def __hash__(self):
        return hash((id(self.level), self.ix))

    def __repr__(self):
        return "FieldElement(%s in %r)" % (self.to_text(), self.level)


class FieldTower:
    """F_p -> F_q -> F_{q^e} with deterministic moduli (q = p^ell)."""

    __slots__ = ("p", "ell", "e", "prime_level", "mid_level", "top_level",
                 "mid_modulus", "top_modulus")

    def __init__(self, p, ell, e, prime_level, mid_level, top_level,
                 mid_modulus, top_modulus):
        self.p = p
        self.ell = ell
        self.e = e
        self.prime_level = prime_level
        self.mid_level = mid_level
        self.top_level = top_level
        self.mid_modulus = mid_modulus
        self.top_modulus = top_modulus

    @property
    def q(self):
        return self.p ** self.ell

    def level(self, role):
        return {"prime": self.prime_level, "mid": self.mid_level,
                "top": self.top_level}[role]

    def role(self, level):
        if level is self.top_level:
            return "top"
        if level is self.mid_level:
            return "mid"
        if level is self.prime_level:
            return "prime"
        raise ValueError("level does not belong to this tower")

    def moduli_text(self):
        return "p=%d;ell=%d;e=%d;mid=%s;top=%s" % (
            self.p, self.ell, self.e,
            self.mid_modulus.to_text(), self.top_modulus.to_text())

    def __repr__(self):
        return "FieldTower(p=%d, ell=%d, e=%d)" % (self.p, self.ell, self.e)


def smallest_irreducible(level, degree):
    """Lexicographically smallest monic irreducible of the given degree,
    comparing coefficient vectors low-degree-first in canonical element
    order."""
    for f in polys.enumerate_monic_irreducible(level, degree):
        return f
    raise ArithmeticError("no irreducible polynomial found")  # unreachable


@functools.lru_cache(maxsize=None)
def _build_tower(p, ell, e):
    prime = PrimeLevel(p)
    if ell == 1:
        mid = prime
        mid_modulus = polys.Polynomial.x(prime)
    else:
        mid_modulus = smallest_irreducible(prime, ell)
        mid = ExtensionLevel(prime, mid_modulus.coeffs)
    if e == 1:
        top = mid
        top_modulus = polys.Polynomial.x(mid)
    else:
        top_modulus = smallest_irreducible(mid, e)
        top = ExtensionLevel(mid, top_modulus.coeffs)
    return FieldTower(p, ell, e, prime, mid, top, mid_modulus, top_modulus)


def build_tower(p, ell, e, ceiling=DEFAULT_ENUM_CEILING):
    """Tower for F_{p^(ell*e)} with deterministic lex-smallest moduli."""
    if not is_prime(p):
        raise ValueError("%d is not prime" % p)
    if ell < 1 or e < 1:
        raise ValueError("extension degrees must be positive")
    if p ** (ell * e) > ceiling:
        raise CeilingError(
            "field size %d^%d exceeds the enumeration ceiling %d"
            % (p, ell * e, ceiling))
    return _build_tower(p, ell, e)


def tower_for_q(q, e, ceiling=DEFAULT_ENUM_CEILING):
    """Tower F_p -> F_q -> F_{q^e} for a prime power q."""
    p, ell = prime_power(q)
    return build_tower(p, ell, e, ceiling=ceiling)


def root_tower(f, ceiling=DEFAULT_ENUM_CEILING):
    """Tower whose top modulus is f itself, so the residue class of the
    top generator is a root of f.  f must be monic irreducible of degree
    >= 2 over a field level."""
    lvl = f.domain
    if getattr(lvl, "kind", None) not in ("prime", "ext"):
        raise ValueError("root tower needs a field-level polynomial")
    if f.degree < 2 or not f.is_monic():
        raise ValueError("root tower needs a monic polynomial of degree >= 2")
    if lvl.size ** f.degree > ceiling:
        raise CeilingError("root field size exceeds the enumeration ceiling")
    top = ExtensionLevel(lvl, f.coeffs)
    prime = lvl
    while prime.kind == "ext":
        prime = prime.base
    if lvl.kind == "ext":
        mid_modulus = polys.Polynomial._raw(prime, lvl.modulus)
    else:
        mid_modulus = polys.Polynomial.x(prime)
    return FieldTower(prime.size, lvl.degree_over_prime, f.degree,
                      prime, lvl, top, mid_modulus, f)


def generator(level):
    """The residue class of the defining generator of an extension level."""
    if level.kind != "ext":
        raise ValueError("prime levels have no extension generator")
    return FieldElement(level, level.base.size)


def enumerate_elements(level):
    """Every element exactly once, in canonical (lexicographic) order."""
    for i in range(level.size):
        yield FieldElement(level, i)


def embed_base(c, top_level):
    """Image of a lower-level element under the natural inclusion."""
    lvl = top_level
    while lvl is not c.level:
        if lvl.kind != "ext":
            raise ValueError("%r is not a level below %r" % (c.level, top_level))
        lvl = lvl.base
    return FieldElement(top_level, c.ix)


def frobenius(a, s):
    """a^(q^s) where q is the size of the level directly below a's level."""
    lvl = a.level
    if not 0 <= s <= lvl.degree:
        raise ValueError("frobenius power %d out of range" % s)
    q = lvl.base.size if lvl.base is not None else lvl.size
    return FieldElement(lvl, lvl.pow(a.ix, q ** s))


def in_subfield(a, s):
    """Whether a lies in F_{q^s}; requires s | e for the fixed-point test
    to characterize membership."""
    if s < 1 or a.level.degree % s != 0:
        raise ValueError("s must be a positive divisor of the extension degree")
    return frobenius(a, s) == a


def quadratic_character(a):
    """+1 for nonzero squares, -1 for non-squares, 0 at zero; computed as
    a^((Q-1)/2) on a level of odd size Q."""
    lvl = a.level
    if lvl.size % 2 == 0:
        raise ValueError("quadratic character needs an odd field size")
    if a.ix == 0:
        return 0
    r = lvl.pow(a.ix, (lvl.size - 1) // 2)
    if r == 1:
        return 1
    if r == lvl.neg(1):
        return -1
    raise ArithmeticError("character power landed outside {1, -1}")
