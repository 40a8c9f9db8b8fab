"""Dense univariate polynomial algebra over field levels and the integers.

A polynomial is a trimmed tuple of coefficients in ascending degree;
the empty tuple is the zero polynomial.  Coefficients are plain ints:
canonical element indices when the domain is a field level (see fields.py),
arbitrary-precision integers when the domain is ZZ.  Every supported
domain uses 0 and 1 as its additive and multiplicative identities, so
truthiness tests on coefficients are domain-independent.

The hot kernels (mul, divrem, powmod, gcd) carry specialized loops for
prime levels (direct modular ints) and table-backed extension levels
(flat lookup tables); everything else goes through the generic domain
protocol: add, sub, mul, neg, inv, char, size.

Text formats: the canonical form is comma-separated ascending
coefficients, each in the element text form of its level, e.g.
"2,2,0,0,1" for x^4+2x^2+2 over F_3.  A human form like "x^4-x^2-1" is
also parsed, with integer literals reduced modulo the characteristic.
"""

from __future__ import annotations

import re


class IntegerRing:
    """Arbitrary-precision integer coefficients."""

    kind = "zz"
    char = 0
    is_field = False
    zero = 0
    one = 1
    mul_table = None
    add_table = None

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a in (1, -1):
            return a
        raise ZeroDivisionError("%d is not invertible over the integers" % a)

    def element_text(self, a):
        return str(a)

    def element_parse(self, text):
        return int(text)

    def __repr__(self):
        return "ZZ"


ZZ = IntegerRing()


# ---------------------------------------------------------------------------
# raw kernels on coefficient lists


def _trim(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    del c[n:]
    return c


def _add(dom, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    add = dom.add
    for i, c in enumerate(b):
        out[i] = add(out[i], c)
    return _trim(out)


def _sub(dom, a, b):
    out = list(a)
    if len(b) > len(out):
        out.extend([0] * (len(b) - len(out)))
    sub = dom.sub
    for i, c in enumerate(b):
        out[i] = sub(out[i], c)
    return _trim(out)


def _neg(dom, a):
    neg = dom.neg
    return [neg(c) for c in a]


def _mul(dom, a, b):
    # leading coefficients are nonzero and every domain is an integral
    # domain, so the result needs no trim
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    if dom.kind == "prime":
        p = dom.size
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return [v % p for v in out]
    mt = dom.mul_table
    if mt is not None:
        at = dom.add_table
        q = dom.size
        for i, ai in enumerate(a):
            if ai:
                row = ai * q
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = at[out[i + j] * q + mt[row + bj]]
        return out
    add = dom.add
    mul = dom.mul
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = add(out[i + j], mul(ai, bj))
    return out


def _divrem(dom, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    if len(a) < len(b):
        return [], r
    q = [0] * (len(a) - db)
    if dom.kind == "prime":
        p = dom.size
        inv_lead = pow(b[-1], -1, p)
        for k in range(len(q) - 1, -1, -1):
            c = (r[k + db] * inv_lead) % p
            if c:
                q[k] = c
                for j in range(db + 1):
                    r[k + j] = (r[k + j] - c * b[j]) % p
        return q, _trim(r[:db])
    mt = dom.mul_table
    if mt is not None:
        Q = dom.size
        at = dom.add_table
        nt = dom.neg_table
        inv_lead = dom.inv_table[b[-1]]
        for k in range(len(q) - 1, -1, -1):
            c = mt[r[k + db] * Q + inv_lead]
            if c:
                q[k] = c
                row = c * Q
                for j in range(db + 1):
                    if b[j]:
                        r[k + j] = at[r[k + j] * Q + nt[mt[row + b[j]]]]
        return q, _trim(r[:db])
    if dom.is_field:
        inv_lead = dom.inv(b[-1])
        sub = dom.sub
        mul = dom.mul
        for k in range(len(q) - 1, -1, -1):
            c = mul(r[k + db], inv_lead)
            if c:
                q[k] = c
                for j in range(db + 1):
                    if b[j]:
                        r[k + j] = sub(r[k + j], mul(c, b[j]))
        return q, _trim(r[:db])
    # integer coefficients: every elimination step must divide exactly
    lead = b[-1]
    for k in range(len(q) - 1, -1, -1):
        c, leftover = divmod(r[k + db], lead)
        if leftover:
            raise ValueError("integer polynomial division is not exact")
        if c:
            q[k] = c
            for j in range(db + 1):
                r[k + j] -= c * b[j]
    return q, _trim(r[:db])


def _rem(dom, a, b):
    return _divrem(dom, a, b)[1]


def _monic(dom, a):
    if not a or a[-1] == 1:
        return list(a)
    inv = dom.inv(a[-1])
    mul = dom.mul
    return [mul(c, inv) for c in a]


def _gcd(dom, a, b):
    a = list(a)
    b = list(b)
    while b:
        a, b = b, _rem(dom, a, b)
    return _monic(dom, a)


def _compose(dom, f, g):
    if not f:
        return []
    out = [f[-1]]
    for c in reversed(f[:-1]):
        out = _mul(dom, out, g)
        if c:
            out = _add(dom, out, [c])
    return out


def _powmod(dom, base, n, mod):
    base = _rem(dom, base, mod)
    if n == 0:
        return [1]
    acc = list(base)
    for bit in bin(n)[3:]:
        acc = _rem(dom, _mul(dom, acc, acc), mod)
        if bit == "1":
            acc = _rem(dom, _mul(dom, acc, base), mod)
    return acc


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_irreducible_raw(dom, f):
    d = len(f) - 1
    if d == 1:
        return True
    f = _monic(dom, f)
    Q = dom.size
    x = [0, 1]
    checkpoints = {d // r for r in _prime_factors(d)}
    u = x
    for i in range(1, d + 1):
        u = _powmod(dom, u, Q, f)
        if i in checkpoints and len(_gcd(dom, _sub(dom, u, x), f)) != 1:
            return False
    return u == x


def _derivative(dom, f):
    if dom.char:
        p = dom.char
        out = [dom.mul(c, j % p) for j, c in enumerate(f[1:], start=1)]
    else:
        out = [j * c for j, c in enumerate(f[1:], start=1)]
    return _trim(out)


def _pth_root(dom, f):
    # inverse of c -> c^p applied coefficientwise, indices divided by p;
    # valid when f lies in F[t^p]
    p = dom.char
    exp = p ** (dom.degree_over_prime - 1)
    out = []
    for j in range(0, len(f), p):
        if any(f[j + m] for m in range(1, min(p, len(f) - j))):
            raise ValueError("polynomial is not a polynomial in t^p")
        out.append(dom.pow(f[j], exp))
    return _trim(out)


def _squarefree_raw(dom, f):
    if len(f) <= 1:
        return []
    df = _derivative(dom, f)
    if not df:
        g = _pth_root(dom, f)
        return [(part, m * dom.char) for part, m in _squarefree_raw(dom, g)]
    w = _gcd(dom, f, df)
    u = _divrem(dom, f, w)[0]
    out = []
    i = 1
    while len(u) > 1:
        y = _gcd(dom, u, w)
        z = _divrem(dom, u, y)[0]
        if len(z) > 1:
            out.append((z, i))
        u = y
        w = _divrem(dom, w, y)[0]
        i += 1
    if len(w) > 1:
        out.extend(
            (part, m * dom.char) for part, m in _squarefree_raw(dom, _pth_root(dom, w))
        )
    out.sort(key=lambda pm: (pm[1], len(pm[0]), pm[0]))
    return out


def _ddf_raw(dom, f):
    rem = list(f)
    out = []
    Q = dom.size
    x = [0, 1]
    u = _rem(dom, x, rem)
    i = 0
    while len(rem) - 1 >= 2 * (i + 1):
        i += 1
        u = _powmod(dom, u, Q, rem)
        g = _gcd(dom, _sub(dom, u, x), rem)
        if len(g) > 1:
            out.append((i, g))
            rem = _divrem(dom, rem, g)[0]
            u = _rem(dom, u, rem)
    if len(rem) > 1:
        out.append((len(rem) - 1, rem))
    return out


# ---------------------------------------------------------------------------
# public polynomial type


class Polynomial:
    """Immutable dense polynomial over a field level or over ZZ."""

    __slots__ = ("domain", "coeffs")

    def __init__(self, domain, coeffs=()):
        vals = []
        for c in coeffs:
            if isinstance(c, int):
                vals.append(c)
            elif hasattr(c, "ix") and getattr(c, "level", None) is domain:
                vals.append(c.ix)
            else:
                raise TypeError("coefficient %r does not belong to %r" % (c, domain))
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "coeffs", tuple(_trim(vals)))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def _raw(cls, domain, coeffs):
        self = object.__new__(cls)
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "coeffs", tuple(coeffs))
        return self

    @classmethod
    def x(cls, domain):
        return cls._raw(domain, (0, 1))

    @classmethod
    def constant(cls, domain, c):
        return cls._raw(domain, (c,) if c else ())

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def leading_coefficient(self):
        return self.coeffs[-1] if self.coeffs else 0

    def constant_coefficient(self):
        return self.coeffs[0] if self.coeffs else 0

    def _same(self, other):
        if not isinstance(other, Polynomial) or other.domain is not self.domain:
            raise TypeError("mixed polynomial domains")
        return other

    def __add__(self, other):
        other = self._same(other)
        return Polynomial._raw(self.domain, _add(self.domain, list(self.coeffs), list(other.coeffs)))

    def __sub__(self, other):
        other = self._same(other)
        return Polynomial._raw(self.domain, _sub(self.domain, list(self.coeffs), list(other.coeffs)))

    def __neg__(self):
        return Polynomial._raw(self.domain, _neg(self.domain, self.coeffs))

    def __mul__(self, other):
        other = self._same(other)
        return Polynomial._raw(self.domain, _mul(self.domain, self.coeffs, other.coeffs))

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative polynomial power")
        acc = [1]
        base = list(self.coeffs)
        if n:
            acc = list(base)
            for bit in bin(n)[3:]:
                acc = _mul(self.domain, acc, acc)
                if bit == "1":
                    acc = _mul(self.domain, acc, base)
        return Polynomial._raw(self.domain, acc)

    def __divmod__(self, other):
        other = self._same(other)
        q, r = _divrem(self.domain, self.coeffs, other.coeffs)
        return Polynomial._raw(self.domain, q), Polynomial._raw(self.domain, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and other.domain is self.domain
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((id(self.domain), self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def monic(self):
        return Polynomial._raw(self.domain, _monic(self.domain, self.coeffs))

    def derivative(self):
        return Polynomial._raw(self.domain, _derivative(self.domain, self.coeffs))

    def evaluate(self, v):
        """Value at a domain element (given as a coefficient int)."""
        acc = 0
        dom = self.domain
        for c in reversed(self.coeffs):
            acc = dom.add(dom.mul(acc, v), c)
        return acc

    def to_text(self):
        if not self.coeffs:
            return "0"
        text = self.domain.element_text
        return ",".join(text(c) for c in self.coeffs)

    def to_human(self, var="x"):
        if not self.coeffs:
            return "0"
        dom = self.domain
        parts = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if not c:
                continue
            if j == 0:
                term = dom.element_text(c)
            else:
                xpow = var if j == 1 else "%s^%d" % (var, j)
                if c == 1:
                    term = xpow
                else:
                    ctext = dom.element_text(c)
                    if not ctext.isdigit():
                        ctext = "(%s)" % ctext
                    term = "%s%s" % (ctext, xpow)
            parts.append(term)
        return "+".join(parts).replace("+-", "-")

    def __repr__(self):
        return "Polynomial(%s over %r)" % (self.to_human(), self.domain)


def _split_top_level(text):
    parts = []
    depth = 0
    cur = []
    for ch in text:
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            if ch == "[":
                depth += 1
            elif ch == "]":
                depth -= 1
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def poly_from_text(domain, text):
    """Parse the canonical comma-separated coefficient form."""
    text = text.strip()
    if text in ("", "0"):
        return Polynomial._raw(domain, ())
    coeffs = [domain.element_parse(part.strip()) for part in _split_top_level(text)]
    return Polynomial(domain, coeffs)


_TERM_RE = re.compile(
    r"(?P<sign>[+-]?)\s*(?:(?P<coef>\d+)\s*\*?\s*)?(?:(?P<var>[a-zA-Z])(?:\^(?P<exp>\d+))?)?"
)


def poly_from_human(domain, text):
    """Parse forms like "x^4-x^2-1"; integer literals reduce mod char."""
    text = text.replace(" ", "")
    if not text:
        raise ValueError("empty polynomial")
    coeffs = {}
    pos = 0
    var_seen = None
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError("cannot parse polynomial %r at %r" % (text, text[pos:]))
        sign = -1 if m.group("sign") == "-" else 1
        coef = m.group("coef")
        var = m.group("var")
        exp = m.group("exp")
        if coef is None and var is None:
            raise ValueError("cannot parse polynomial %r at %r" % (text, text[pos:]))
        if var is not None:
            if var_seen is None:
                var_seen = var
            elif var != var_seen:
                raise ValueError("mixed variables %r and %r" % (var_seen, var))
        n = int(coef) if coef is not None else 1
        k = (int(exp) if exp is not None else 1) if var is not None else 0
        coeffs[k] = coeffs.get(k, 0) + sign * n
        pos = m.end()
    deg = max(coeffs)
    ints = [coeffs.get(k, 0) for k in range(deg + 1)]
    if domain.char:
        p = domain.char
        ints = [v % p for v in ints]
    return Polynomial(domain, ints)


def parse_poly(domain, text):
    """Accept either the canonical comma form or the human x^k form."""
    if re.search(r"[a-zA-Z]", text):
        return poly_from_human(domain, text)
    return poly_from_text(domain, text)


# ---------------------------------------------------------------------------
# algebra on polynomials


def poly_gcd(f, g):
    """Monic greatest common divisor over a field domain."""
    if not f.domain.is_field:
        raise ValueError("gcd requires a field coefficient domain")
    f._same(g)
    return Polynomial._raw(f.domain, _gcd(f.domain, f.coeffs, g.coeffs))


def compose(f, g):
    """f(g(t)), by Horner evaluation over the polynomial ring."""
    f._same(g)
    return Polynomial._raw(f.domain, _compose(f.domain, f.coeffs, g.coeffs))


def powmod(base, n, mod):
    base._same(mod)
    if mod.degree < 1:
        raise ValueError("powmod modulus must be non-constant")
    return Polynomial._raw(base.domain, _powmod(base.domain, base.coeffs, n, mod.coeffs))


def frobenius_powmod(f, s):
    """t^(Q^s) mod f over F_Q, by s iterated exponent-Q power steps."""
    if f.degree < 1:
        raise ValueError("modulus must have degree at least 1")
    dom = f.domain
    if not dom.is_field:
        raise ValueError("frobenius_powmod requires a field domain")
    u = _rem(dom, [0, 1], f.coeffs)
    for _ in range(s):
        u = _powmod(dom, u, dom.size, f.coeffs)
    return Polynomial._raw(dom, u)


def is_irreducible(f):
    """Rabin test: t^(Q^d) = t mod f and gcd(t^(Q^(d/r)) - t, f) = 1
    for every prime r dividing d = deg f.  The leading coefficient may
    be any nonzero element."""
    if not f.domain.is_field:
        raise ValueError("irreducibility test requires a field domain")
    if f.degree < 1:
        raise ValueError("irreducibility is undefined for constants")
    return _is_irreducible_raw(f.domain, f.coeffs)


def squarefree_decomposition(f):
    """Pairwise-coprime squarefree parts with multiplicities.

    The product of part^multiplicity reconstructs f.  When the
    derivative vanishes identically the input is a polynomial in t^p
    and the algorithm recurses on its p-th root.
    """
    if not f.domain.is_field:
        raise ValueError("squarefree decomposition requires a field domain")
    if not f.is_monic():
        raise ValueError("squarefree decomposition requires a monic input")
    return [
        (Polynomial._raw(f.domain, part), mult)
        for part, mult in _squarefree_raw(f.domain, f.coeffs)
    ]


def distinct_degree_factorization(f):
    """Pairs (i, g_i) with g_i the product of all irreducible factors of
    degree i of the monic squarefree input; the degree-i factor count is
    deg(g_i)/i."""
    dom = f.domain
    if not dom.is_field:
        raise ValueError("distinct-degree factorization requires a field domain")
    if not f.is_monic():
        raise ValueError("distinct-degree factorization requires a monic input")
    if f.degree >= 1 and len(_gcd(dom, f.coeffs, _derivative(dom, f.coeffs))) != 1:
        raise ValueError("input is not squarefree")
    return [(i, Polynomial._raw(dom, g)) for i, g in _ddf_raw(dom, f.coeffs)]


class FactorDegreeMultiset:
    """Degrees of the irreducible factors of a polynomial, with counts."""

    __slots__ = ("pairs",)

    def __init__(self, pairs):
        self.pairs = tuple(sorted((int(d), int(c)) for d, c in pairs))

    @property
    def total_degree(self):
        return sum(d * c for d, c in self.pairs)

    @property
    def factor_count(self):
        return sum(c for _, c in self.pairs)

    def as_dict(self):
        return {d: c for d, c in self.pairs}

    def __eq__(self, other):
        return isinstance(other, FactorDegreeMultiset) and other.pairs == self.pairs

    def __hash__(self):
        return hash(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __repr__(self):
        return "FactorDegreeMultiset(%s)" % (dict(self.pairs),)


def factor_degree_multiset(f):
    """Factor degrees with multiplicity for any non-constant f over a field,
    via squarefree decomposition followed by distinct-degree splitting."""
    dom = f.domain
    if not dom.is_field:
        raise ValueError("factor degrees require a field domain")
    if f.degree < 1:
        raise ValueError("factor degrees are undefined for constants")
    counts = {}
    for part, mult in _squarefree_raw(dom, _monic(dom, f.coeffs)):
        for i, g in _ddf_raw(dom, part):
            counts[i] = counts.get(i, 0) + mult * ((len(g) - 1) // i)
    return FactorDegreeMultiset(counts.items())


# ---------------------------------------------------------------------------
# enumeration


def _iter_monic_raw(level, d):
    Q = level.size
    coeffs = [0] * (d + 1)
    coeffs[d] = 1
    while True:
        yield coeffs
        for pos in range(d):
            coeffs[pos] += 1
            if coeffs[pos] < Q:
                break
            coeffs[pos] = 0
        else:
            return


def enumerate_monic(level, d):
    """All Q^d monic degree-d polynomials, lexicographic with the
    low-degree coefficient varying fastest."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    for raw in _iter_monic_raw(level, d):
        yield Polynomial._raw(level, tuple(raw))


def enumerate_monic_irreducible(level, d):
    """The monic irreducible degree-d polynomials, in enumeration order."""
    if d < 1:
        raise ValueError("degree must be positive")
    for raw in _iter_monic_raw(level, d):
        if _is_irreducible_raw(level, raw):
            yield Polynomial._raw(level, tuple(raw))
