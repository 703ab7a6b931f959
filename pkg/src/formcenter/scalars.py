"""Exact scalars: rationals and simple number fields Q(alpha) = Q[t]/(m(t)).

A degree-1 field behaves as plain Q and its elements are `fractions.Fraction`
objects; proper extensions use `FieldElement` with a coefficient vector
reduced modulo the generator's minimal polynomial.  Both kinds support the
same operators, so the rest of the package is written generically.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import NotIrreducible, NotSquarefree
from .unipoly import UniPoly, factor_q, is_squarefree, xgcd

Rational = Fraction


class NumberField:
    """Q[t]/(m) for a monic squarefree irreducible m; degree 1 is plain Q."""

    __slots__ = ("minpoly", "degree", "_red", "_root1")

    def __init__(self, minpoly, _certified=False):
        if not isinstance(minpoly, UniPoly):
            minpoly = UniPoly(minpoly)
        if not minpoly.is_monic():
            raise ValueError("generator minimal polynomial must be monic")
        d = minpoly.degree()
        if d < 1:
            raise ValueError("generator minimal polynomial must have degree >= 1")
        if d > 1 and not _certified:
            if not is_squarefree(minpoly):
                raise NotSquarefree(f"{minpoly} has a repeated factor")
            factors = factor_q(minpoly)
            if len(factors) > 1:
                raise NotIrreducible(minpoly, factors[0][0])
        self.minpoly = minpoly
        self.degree = d
        if d == 1:
            self._root1 = -minpoly.coeffs[0]
            self._red = None
        else:
            self._root1 = None
            # reduction table: t^(d+i) mod m for i = 0..d-2
            table = []
            cur = [-c for c in minpoly.coeffs[:-1]]  # t^d mod m
            table.append(tuple(cur))
            for _ in range(d - 2):
                shifted = [Fraction(0)] + cur
                top = shifted.pop()
                cur = [s + top * r for s, r in zip(shifted, table[0])]
                table.append(tuple(cur))
            self._red = table

    @property
    def is_rational(self):
        return self.degree == 1

    @property
    def zero(self):
        if self.degree == 1:
            return Fraction(0)
        return FieldElement(self, (Fraction(0),) * self.degree)

    @property
    def one(self):
        if self.degree == 1:
            return Fraction(1)
        return FieldElement(self, (Fraction(1),) + (Fraction(0),) * (self.degree - 1))

    @property
    def gen(self):
        """The residue class of t, a root of the minimal polynomial."""
        if self.degree == 1:
            return self._root1
        coeffs = [Fraction(0)] * self.degree
        coeffs[1] = Fraction(1)
        return FieldElement(self, tuple(coeffs))

    def convert(self, x):
        """Embed an int/Fraction, or pass through an element of this field."""
        if isinstance(x, FieldElement):
            if x.field != self:
                raise ValueError("element belongs to a different field")
            return x
        x = Fraction(x)
        if self.degree == 1:
            return x
        return FieldElement(self, (x,) + (Fraction(0),) * (self.degree - 1))

    def element(self, coeffs):
        """Build the residue class of the polynomial with the given coefficients."""
        r = UniPoly(coeffs) % self.minpoly
        if self.degree == 1:
            return r.coeffs[0] if r else Fraction(0)
        cs = list(r.coeffs) + [Fraction(0)] * (self.degree - len(r.coeffs))
        return FieldElement(self, tuple(cs))

    def __eq__(self, other):
        if isinstance(other, NumberField):
            return self.minpoly == other.minpoly
        return NotImplemented

    def __hash__(self):
        return hash(self.minpoly)

    def __repr__(self):
        if self.degree == 1:
            return "NumberField(Q)"
        return f"NumberField(Q[t]/({self.minpoly}))"


class FieldElement:
    """Element of a proper extension: coefficient vector in the power basis."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            x = Fraction(other)
            return FieldElement(self.field,
                                (x,) + (Fraction(0),) * (self.field.degree - 1))
        return None

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return FieldElement(self.field, tuple(-c for c in self.coeffs))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field,
                            tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field,
                            tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, tuple(c * other for c in self.coeffs))
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise ValueError("elements of different fields")
        a, b = self.coeffs, other.coeffs
        d = self.field.degree
        conv = [Fraction(0)] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = conv[:d]
        red = self.field._red
        for k in range(2 * d - 2, d - 1, -1):
            c = conv[k]
            if c:
                row = red[k - d]
                for i, r in enumerate(row):
                    if r:
                        out[i] += c * r
        return FieldElement(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("division by zero field element")
        g, u, _ = xgcd(UniPoly(self.coeffs), self.field.minpoly)
        assert g.degree() == 0 and g.coeffs[0] == 1
        return self.field.element(u.coeffs)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return FieldElement(self.field, tuple(c / other for c in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def as_rational(self):
        """The value as a Fraction; raises if the element is irrational."""
        if any(self.coeffs[1:]):
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                mono = "a" if i == 1 else f"a^{i}"
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
                sign = "-" if c < 0 else ("+" if parts else "")
                parts.append(sign + body)
        return "".join(parts) if parts else "0"

    def __repr__(self):
        return f"FieldElement({self})"


#: the rational field itself, with minimal polynomial t
QQ = NumberField(UniPoly((0, 1)))


def ext_new(minpoly):
    """Create Q[t]/(m); rejects non-squarefree or reducible m."""
    return NumberField(minpoly)


def elem_inv(x):
    """Multiplicative inverse of a nonzero scalar (Fraction or FieldElement)."""
    if isinstance(x, FieldElement):
        return x.inverse()
    x = Fraction(x)
    if not x:
        raise ZeroDivisionError("division by zero")
    return 1 / x


def as_rational(x):
    if isinstance(x, FieldElement):
        return x.as_rational()
    return Fraction(x)


def elem_sort_key(x):
    if isinstance(x, FieldElement):
        return x.coeffs
    return (Fraction(x),)


def elem_str(x):
    if isinstance(x, FieldElement):
        return str(x)
    return str(Fraction(x))


def embed(x, target):
    """Map a scalar into the target field; rationals embed, elements must match."""
    if isinstance(x, FieldElement):
        if x.field == target:
            return x
        return target.convert(x.as_rational())
    return target.convert(x)


def sqrt_rational(x):
    """Exact square root of a nonnegative rational, or None."""
    x = Fraction(x)
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _divide_linear(coeffs, root):
    """Synthetic division of a monic polynomial (field coeffs, low first) by t - root.

    Remainder must vanish; returns quotient coefficients, low first.
    """
    n = len(coeffs) - 1
    quo = [None] * n
    acc = coeffs[n]
    for i in range(n - 1, -1, -1):
        quo[i] = acc
        acc = coeffs[i] + acc * root
    assert not acc, "t - root does not divide the polynomial"
    return quo


def roots_in_field(phi, field):
    """Roots of a Q-irreducible monic phi that lie in the given number field.

    Complete for deg(phi) <= 2; for higher degree it finds at least the
    generator root when phi is the field's own minimal polynomial.  Returned
    in a canonical sorted order.
    """
    d = phi.degree()
    if d == 1:
        return [field.convert(-phi.coeffs[0])]
    if field.degree == 1:
        return []
    roots = []
    if d == 2:
        b, c = phi.coeffs[1], phi.coeffs[0]
        if field.degree == 2:
            q1, q0 = field.minpoly.coeffs[1], field.minpoly.coeffs[0]
            disc = b * b - 4 * c
            disc_q = q1 * q1 - 4 * q0
            r = sqrt_rational(disc / disc_q)
            if r is not None:
                # sqrt(disc) = r * (2*alpha + q1)
                sq = field.element((r * q1, 2 * r))
                half = Fraction(1, 2)
                roots = [(-b + sq) * half, (-b - sq) * half]
    elif phi == field.minpoly:
        alpha = field.gen
        roots.append(alpha)
        quo = _divide_linear([field.convert(c) for c in phi.coeffs], alpha)
        while len(quo) >= 2:
            if len(quo) == 2:
                roots.append(-quo[0])
                break
            break  # degree >= 2 over the field: no further root search
    return sorted(roots, key=elem_sort_key)


def strip_roots(phi, field, roots):
    """Divide out t - r for each root; returns remaining coefficients over field."""
    coeffs = [embed(c, field) for c in phi.coeffs]
    for r in roots:
        coeffs = _divide_linear(coeffs, r)
    return coeffs
