"""Univariate polynomials over Q: arithmetic, gcd and factorization.

Factorization runs the classical route: Yun squarefree decomposition,
rational-root stripping, Berlekamp factorization modulo a small prime that
keeps the polynomial squarefree, quadratic Hensel lifting up to a Mignotte
bound, then subset recombination.  Degrees stay small here (minimal
polynomials of matrices), so nothing fancier is warranted.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .errors import BothZero, ZeroPolynomial


class UniPoly:
    """Dense univariate polynomial over Q; coeffs[i] multiplies t^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def t(cls):
        return cls((0, 1))

    def degree(self):
        return len(self.coeffs) - 1

    def lc(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self):
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return UniPoly(c / lead for c in self.coeffs)

    def derivative(self):
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return UniPoly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly((other,))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        result = UniPoly((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dc = other.coeffs
        dd = len(dc) - 1
        lead = dc[-1]
        quo = [Fraction(0)] * max(len(rem) - dd, 0)
        for i in range(len(rem) - dd - 1, -1, -1):
            c = rem[i + dd]
            if c:
                q = c / lead
                quo[i] = q
                for j, y in enumerate(dc):
                    rem[i + j] -= q * y
        return UniPoly(quo), UniPoly(rem[:dd])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return Fraction(0)
        return acc

    def to_str(self, var="t"):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                mono = ""
            elif i == 1:
                mono = var
            else:
                mono = f"{var}^{i}"
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("-" if c < 0 else "+") + body)
        return "".join(parts)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"UniPoly({self.to_str()})"


def gcd(p, q):
    """Monic gcd of two polynomials over Q."""
    if not p and not q:
        raise BothZero("gcd(0, 0) is undefined")
    a, b = p, q
    while b:
        a, b = b, a % b
    return a.monic()


def xgcd(p, q):
    """Extended Euclid: returns (g, u, v) with u*p + v*q = g, g monic."""
    r0, r1 = p, q
    u0, u1 = UniPoly((1,)), UniPoly()
    v0, v1 = UniPoly(), UniPoly((1,))
    while r1:
        quo, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        u0, u1 = u1, u0 - quo * u1
        v0, v1 = v1, v0 - quo * v1
    if not r0:
        raise BothZero("xgcd(0, 0) is undefined")
    lead = r0.lc()
    inv = 1 / lead
    return r0.monic(), u0 * inv, v0 * inv


def is_squarefree(p):
    """True iff gcd(p, p') = 1."""
    if not p:
        raise ZeroPolynomial("squarefree test needs a nonzero polynomial")
    if p.degree() < 1:
        return True
    return gcd(p, p.derivative()).degree() == 0


def squarefree_decomposition(p):
    """Yun's algorithm: list of (monic squarefree factor, multiplicity).

    The product of factor^multiplicity equals p up to its leading coefficient.
    """
    if not p:
        raise ZeroPolynomial("cannot decompose the zero polynomial")
    f = p.monic()
    if f.degree() < 1:
        return []
    d = gcd(f, f.derivative())
    if d.degree() == 0:
        return [(f, 1)]
    out = []
    b = f // d
    c = f.derivative() // d
    i = 1
    while b.degree() > 0:
        diff = c - b.derivative()
        a = gcd(b, diff) if diff else b.monic()
        if a.degree() > 0:
            out.append((a, i))
        b = b // a
        c = diff // a
        i += 1
    return out


# ---------------------------------------------------------------------------
# GF(p) arithmetic on int coefficient lists (low degree first)


def _gf_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _gf_sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out[i] = (x - y) % p
    return _gf_trim(out)


def _gf_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _gf_trim(out)


def _gf_divmod(a, b, p):
    rem = list(a)
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    quo = [0] * max(len(rem) - db, 0)
    for i in range(len(rem) - db - 1, -1, -1):
        c = rem[i + db] % p
        if c:
            q = c * inv % p
            quo[i] = q
            for j, y in enumerate(b):
                rem[i + j] = (rem[i + j] - q * y) % p
    return _gf_trim(quo), _gf_trim(rem[:db])

def _gf_monic(a, p):
    if not a:
        return a
    inv = pow(a[-1], p - 2, p)
    return [x * inv % p for x in a]


def _gf_gcd(a, b, p):
    while b:
        a, b = b, _gf_divmod(a, b, p)[1]
    return _gf_monic(a, p)


def _gf_xgcd(a, b, p):
    r0, r1 = list(a), list(b)
    u0, u1 = [1], []
    v0, v1 = [], [1]
    while r1:
        q, r = _gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        u0, u1 = u1, _gf_sub(u0, _gf_mul(q, u1, p), p)
        v0, v1 = v1, _gf_sub(v0, _gf_mul(q, v1, p), p)
    inv = pow(r0[-1], p - 2, p)
    return ([x * inv % p for x in r0],
            [x * inv % p for x in u0],
            [x * inv % p for x in v0])


def _gf_pow_mod(a, e, mod, p):
    result = [1]
    base = _gf_divmod(a, mod, p)[1]
    while e:
        if e & 1:
            result = _gf_divmod(_gf_mul(result, base, p), mod, p)[1]
        base = _gf_divmod(_gf_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _gf_nullspace(m, p):
    """Kernel basis of an n x n matrix over GF(p); vectors as int lists."""
    n = len(m)
    rows = [list(r) for r in m]
    pivots = []
    r = 0
    for c in range(n):
        pr = -1
        for i in range(r, n):
            if rows[i][c] % p:
                pr = i
                break
        if pr < 0:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] % p:
                f = rows[i][c] % p
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for ri, pc in enumerate(pivots):
            v[pc] = (-rows[ri][fc]) % p
        basis.append(v)
    return basis


def _berlekamp(f, p):
    """Factor a monic squarefree f over GF(p) into monic irreducibles."""
    n = len(f) - 1
    if n == 1:
        return [list(f)]
    xp = _gf_pow_mod([0, 1], p, f, p)
    rows = [[1] + [0] * (n - 1)]
    cur = [1]
    for _ in range(1, n):
        cur = _gf_divmod(_gf_mul(cur, xp, p), f, p)[1]
        rows.append(list(cur) + [0] * (n - len(cur)))
    # Berlekamp subalgebra: row vectors v with v*Q = v, i.e. (Q - I)^T v = 0.
    m = [[(rows[j][i] - (1 if i == j else 0)) % p for j in range(n)] for i in range(n)]
    kernel = _gf_nullspace(m, p)
    r = len(kernel)
    if r == 1:
        return [list(f)]
    factors = [list(f)]
    for v in kernel:
        vp = _gf_trim(list(v))
        if len(vp) <= 1:
            continue
        split = []
        for g in factors:
            pieces = [g]
            for c in range(p):
                nxt = []
                for piece in pieces:
                    if len(piece) - 1 <= 1:
                        nxt.append(piece)
                        continue
                    d = _gf_gcd(piece, _gf_sub(vp, [c], p), p)
                    if 0 < len(d) - 1 < len(piece) - 1:
                        nxt.append(d)
                        nxt.append(_gf_divmod(piece, d, p)[0])
                    else:
                        nxt.append(piece)
                pieces = nxt
            split.extend(pieces)
        factors = split
        if len(factors) == r:
            break
    assert len(factors) == r, "Berlekamp factor count mismatch"
    return sorted(factors, key=lambda g: (len(g), g))


# ---------------------------------------------------------------------------
# Hensel lifting over Z/p^k (int coefficient lists)


def _zp_mul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % m
    return _gf_trim(out)


def _zp_add(a, b, m):
    n = max(len(a), len(b))
    return _gf_trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % m
                     for i in range(n)])


def _zp_sub(a, b, m):
    n = max(len(a), len(b))
    return _gf_trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % m
                     for i in range(n)])


def _zp_divmod_monic(a, b, m):
    """Division by a monic b over Z/m."""
    assert b and b[-1] == 1
    rem = [x % m for x in a]
    db = len(b) - 1
    quo = [0] * max(len(rem) - db, 0)
    for i in range(len(rem) - db - 1, -1, -1):
        c = rem[i + db] % m
        if c:
            quo[i] = c
            for j, y in enumerate(b):
                rem[i + j] = (rem[i + j] - c * y) % m
    return _gf_trim(quo), _gf_trim(rem[:db])


def _hensel_step(f, g, h, s, t, m):
    """Lift f = g*h and s*g + t*h = 1 from mod m to mod m^2 (g, h monic)."""
    m2 = m * m
    e = _zp_sub([x % m2 for x in f], _zp_mul(g, h, m2), m2)
    q, r = _zp_divmod_monic(_zp_mul(s, e, m2), h, m2)
    g1 = _zp_add(g, _zp_add(_zp_mul(t, e, m2), _zp_mul(q, g, m2), m2), m2)
    h1 = _zp_add(h, r, m2)
    b = _zp_sub(_zp_add(_zp_mul(s, g1, m2), _zp_mul(t, h1, m2), m2), [1], m2)
    c, d = _zp_divmod_monic(_zp_mul(s, b, m2), h1, m2)
    s1 = _zp_sub(s, d, m2)
    t1 = _zp_sub(t, _zp_add(_zp_mul(t, b, m2), _zp_mul(c, g1, m2), m2), m2)
    return g1, h1, s1, t1


def _hensel_lift_tree(f, factors, p, pk):
    """Lift pairwise-coprime monic mod-p factors of monic f to mod p^k."""
    if len(factors) == 1:
        return [[x % pk for x in f]]
    half = len(factors) // 2
    left, right = factors[:half], factors[half:]
    g = [1]
    for fac in left:
        g = _gf_mul(g, fac, p)
    h = [1]
    for fac in right:
        h = _gf_mul(h, fac, p)
    _, s, t = _gf_xgcd(g, h, p)
    m = p
    while m < pk:
        g, h, s, t = _hensel_step(f, g, h, s, t, m)
        m = m * m
    g = [x % pk for x in g]
    h = [x % pk for x in h]
    return _hensel_lift_tree(g, left, p, pk) + _hensel_lift_tree(h, right, p, pk)


def _symmetric(a, m):
    half = m // 2
    return [x - m if x > half else x for x in (c % m for c in a)]


def _primes():
    yield from (3, 5, 7, 11, 13)
    n = 17
    while True:
        if all(n % q for q in range(3, math.isqrt(n) + 1, 2)):
            yield n
        n += 2


def _int_divides(f, g):
    """If integer poly g divides integer poly f exactly, return the quotient."""
    if g[0] != 0 and f[0] % g[0]:
        return None
    quo, rem = divmod(UniPoly(f), UniPoly(g))
    if rem:
        return None
    if any(c.denominator != 1 for c in quo.coeffs):
        return None
    return [int(c) for c in quo.coeffs]


def _zassenhaus(f):
    """Factor a monic squarefree integer polynomial into monic irreducibles."""
    n = len(f) - 1
    if n <= 1:
        return [list(f)]
    for p in _primes():
        fp = [c % p for c in f]
        if len(_gf_trim(list(fp))) == n + 1 and len(_gf_gcd(fp, _gf_trim(
                [(i * c) % p for i, c in enumerate(fp)][1:] or [0]), p)) == 1:
            break
    mod_factors = _berlekamp([c % p for c in f], p)
    if len(mod_factors) == 1:
        return [list(f)]
    bound = 2 ** n * (math.isqrt(sum(c * c for c in f)) + 1)
    pk = p
    while pk <= 2 * bound:
        pk *= p
    lifted = _hensel_lift_tree([c % pk for c in f], mod_factors, p, pk)
    result = []
    remaining = list(range(len(lifted)))
    f_cur = list(f)
    s = 1
    while 2 * s <= len(remaining):
        found = False
        for combo in itertools.combinations(remaining, s):
            cand = [1]
            for i in combo:
                cand = _zp_mul(cand, lifted[i], pk)
            cand = _symmetric(cand, pk)
            quo = _int_divides(f_cur, cand)
            if quo is not None:
                result.append(cand)
                f_cur = quo
                remaining = [i for i in remaining if i not in combo]
                found = True
                break
        if not found:
            s += 1
    if len(f_cur) > 1:
        result.append(f_cur)
    return result


def _divisors(n, cap=10**12):
    n = abs(n)
    if n == 0 or n > cap:
        return None
    out = set()
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.add(i)
            out.add(n // i)
        i += 1
    return sorted(out)


def _rational_roots(q):
    """Rational roots of a squarefree monic q over Q (may give up on huge ints)."""
    roots = []
    if not q.coeffs[0]:
        roots.append(Fraction(0))
        q = UniPoly(q.coeffs[1:])
    den = math.lcm(*(c.denominator for c in q.coeffs))
    ints = [int(c * den) for c in q.coeffs]
    if len(ints) <= 1:
        return roots, q
    num_divs = _divisors(ints[0])
    den_divs = _divisors(ints[-1])
    if num_divs is None or den_divs is None:
        return roots, q
    for a in num_divs:
        for b in den_divs:
            if math.gcd(a, b) != 1:
                continue
            for r in (Fraction(a, b), Fraction(-a, b)):
                if q(r) == 0:
                    roots.append(r)
                    q = q // UniPoly((-r, 1))
    return roots, q


def _factor_squarefree_monic(q):
    """Irreducible monic factors of a squarefree monic q over Q."""
    if q.degree() == 1:
        return [q]
    roots, rest = _rational_roots(q)
    factors = [UniPoly((-r, 1)) for r in roots]
    if rest.degree() <= 0:
        return factors
    if rest.degree() <= 3:
        # no rational root and degree <= 3 means irreducible over Q
        factors.append(rest.monic())
        return factors
    den = math.lcm(*(c.denominator for c in rest.coeffs))
    ints = [int(c * den) for c in rest.coeffs]
    cont = math.gcd(*ints)
    ints = [c // cont for c in ints]
    lead = ints[-1]
    if lead < 0:
        ints = [-c for c in ints]
        lead = -lead
    # monicize via y = lead*x so Zassenhaus sees a monic integer polynomial
    m = len(ints) - 1
    monic_ints = [ints[k] * lead ** (m - 1 - k) for k in range(m)] + [1]
    for g in _zassenhaus(monic_ints):
        back = UniPoly(Fraction(c) * Fraction(lead) ** i for i, c in enumerate(g))
        factors.append(back.monic())
    return factors


def factor_q(p):
    """Factor p over Q into monic irreducibles with multiplicities.

    Returns a list of (factor, multiplicity) pairs, sorted by degree then
    coefficients; the product of factor^multiplicity times lc(p) equals p.
    """
    if not p:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    if p.degree() < 1:
        return []
    out = []
    for part, mult in squarefree_decomposition(p):
        for q in _factor_squarefree_monic(part):
            out.append((q, mult))
    out.sort(key=lambda fm: (fm[0].degree(), fm[0].coeffs))
    check = UniPoly.constant(p.lc())
    for q, m in out:
        check = check * q ** m
    assert check == p, "factorization does not multiply back"
    return out
