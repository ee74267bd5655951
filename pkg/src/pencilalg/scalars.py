"""Exact scalar arithmetic: rationals extended by a root of unity, plus a
tolerance-based complex floating backend.

The cyclotomic backend represents elements of Q(zeta_N) as polynomials in
zeta with rational coefficients, reduced modulo the N-th cyclotomic
polynomial.  N = 1 gives plain rationals.  Values are immutable and support
the usual operator syntax; binary operations lift ints and Fractions
automatically but refuse to mix distinct cyclotomic orders (re-embed with
``embed_order`` first).
"""

from __future__ import annotations

import cmath
from fractions import Fraction

_ABS_FLOOR = 1e-12


def _divisors(n):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def _poly_trim(p):
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_divmod(a, b):
    # exact division of integer polynomials; b monic-leading assumed divisor
    a = list(a)
    lead = b[-1]
    q = [0] * max(1, len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        coef = a[i + len(b) - 1]
        if coef == 0:
            continue
        assert coef % lead == 0
        coef //= lead
        q[i] = coef
        for j, y in enumerate(b):
            a[i + j] -= coef * y
    return q, _poly_trim(a)


_CYCLO_CACHE = {}


def cyclotomic_polynomial(n):
    """Integer coefficients of Phi_n, ascending order, monic."""
    if n in _CYCLO_CACHE:
        return _CYCLO_CACHE[n]
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in _divisors(n):
        if d < n:
            poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
            assert not rem
    _CYCLO_CACHE[n] = poly
    return poly


class Cyclotomic:
    """Element of Q(zeta_N) in canonical reduced form."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs  # tuple of Fraction, length field.degree

    # -- constructors / conversions ------------------------------------

    def _lift(self, other):
        if isinstance(other, Cyclotomic):
            if other.field.order != self.field.order:
                raise ValueError(
                    "mixed cyclotomic orders %d and %d; embed explicitly"
                    % (self.field.order, other.field.order)
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    # -- predicates -----------------------------------------------------

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def is_one(self):
        return self == self.field.one()

    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def rational(self):
        if not self.is_rational():
            raise ValueError("not a rational value: %s" % self)
        return self.coeffs[0]

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return Cyclotomic(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return Cyclotomic(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        deg = self.field.degree
        raw = [Fraction(0)] * (2 * deg - 1 if deg > 1 else 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        raw[i + j] += a * b
        return Cyclotomic(self.field, self.field._reduce(raw))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return self.field(1 / self.coeffs[0])
        # extended Euclid in Q[x] against the (irreducible) modulus
        mod = [Fraction(c) for c in self.field.modulus]
        r0, r1 = mod, _poly_trim(list(self.coeffs))
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            q, r = _qpoly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _qpoly_sub(s0, _poly_mul_frac(q, s1))
        g = r1[0]  # nonzero constant: gcd with irreducible modulus
        inv = [c / g for c in s1]
        return Cyclotomic(self.field, self.field._reduce(inv))

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        acc = self.field.one()
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    # -- comparison / hashing --------------------------------------------

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.field.order, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    # -- output ----------------------------------------------------------

    def __complex__(self):
        z = cmath.exp(2j * cmath.pi / self.field.order)
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + complex(c)
        return acc

    def mag(self):
        return abs(complex(self))

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return "Cyclotomic(%d, %s)" % (self.field.order, format_scalar(self))


def _qpoly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        coef = a[i + len(b) - 1] / b[-1]
        if coef == 0:
            continue
        q[i] = coef
        for j, y in enumerate(b):
            a[i + j] -= coef * y
    return _poly_trim(q) or [Fraction(0)], _poly_trim(a) or [Fraction(0)]


def _qpoly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    for i, y in enumerate(b):
        a[i] -= y
    return a


def _poly_mul_frac(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


class CyclotomicField:
    """Arithmetic context Q(zeta_N); N = 1 is the rational field."""

    kind = "cyclotomic"

    def __init__(self, order):
        if order < 1:
            raise ValueError("order must be >= 1")
        self.order = order
        self.modulus = cyclotomic_polynomial(order)
        self.degree = len(self.modulus) - 1

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.order == self.order

    def __hash__(self):
        return hash(("cyclotomic", self.order))

    def __repr__(self):
        return "CyclotomicField(%d)" % self.order

    def _reduce(self, raw):
        # raw: list of Fractions, any length; reduce mod Phi_N
        raw = [Fraction(c) for c in raw]
        deg = self.degree
        for i in range(len(raw) - 1, deg - 1, -1):
            c = raw[i]
            if c == 0:
                continue
            raw[i] = Fraction(0)
            for j in range(deg + 1):
                if self.modulus[j]:
                    raw[i - deg + j] -= c * self.modulus[j]
        raw = raw[:deg] + [Fraction(0)] * (deg - len(raw))
        return tuple(raw[:deg])

    def __call__(self, value):
        if isinstance(value, Cyclotomic):
            if value.field.order != self.order:
                raise ValueError("wrong order %d for %r" % (value.field.order, self))
            return value
        if isinstance(value, str):
            return parse_scalar(value, self)
        if isinstance(value, (int, Fraction)):
            coeffs = [Fraction(value)] + [Fraction(0)] * (self.degree - 1)
            return Cyclotomic(self, self._reduce(coeffs))
        if isinstance(value, (list, tuple)):
            return Cyclotomic(self, self._reduce(list(value)))
        raise TypeError("cannot make a cyclotomic from %r" % (value,))

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def root(self, power=1):
        """zeta_N ** power."""
        power %= self.order
        coeffs = [Fraction(0)] * (power + 1)
        coeffs[power] = Fraction(1)
        return Cyclotomic(self, self._reduce(coeffs))

    def is_zero(self, x):
        return self(x).is_zero()


class ComplexScalar:
    """Complex double with a running magnitude bound used for zero tests."""

    __slots__ = ("field", "value", "scale")

    def __init__(self, field, value, scale=None):
        self.field = field
        self.value = complex(value)
        self.scale = abs(self.value) if scale is None else max(scale, abs(self.value))

    def _lift(self, other):
        if isinstance(other, ComplexScalar):
            return other
        if isinstance(other, (int, float, complex, Fraction)):
            return ComplexScalar(self.field, complex(other))
        return NotImplemented

    def is_zero(self):
        return abs(self.value) <= max(_ABS_FLOOR, self.field.tol * max(1.0, self.scale))

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return ComplexScalar(self.field, self.value + o.value, max(self.scale, o.scale))

    __radd__ = __add__

    def __neg__(self):
        return ComplexScalar(self.field, -self.value, self.scale)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return ComplexScalar(self.field, self.value - o.value, max(self.scale, o.scale))

    def __rsub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return ComplexScalar(self.field, self.value * o.value, self.scale * max(1.0, o.scale))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of (numerically) zero")
        return ComplexScalar(self.field, 1.0 / self.value)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return ComplexScalar(self.field, self.value ** n)

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return (self - o).is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __complex__(self):
        return self.value

    def mag(self):
        return abs(self.value)

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return "ComplexScalar(%r)" % (self.value,)


class FloatField:
    """Complex floating backend with relative tolerance."""

    kind = "float"

    def __init__(self, tol=1e-9):
        self.tol = tol
        self.order = None

    def __eq__(self, other):
        return isinstance(other, FloatField) and other.tol == self.tol

    def __hash__(self):
        return hash(("float", self.tol))

    def __repr__(self):
        return "FloatField(%g)" % self.tol

    def __call__(self, value):
        if isinstance(value, ComplexScalar):
            return value
        if isinstance(value, str):
            return parse_scalar(value, self)
        if isinstance(value, Cyclotomic):
            return ComplexScalar(self, complex(value))
        return ComplexScalar(self, complex(value))

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def is_zero(self, x):
        return self(x).is_zero()


QQ = CyclotomicField(1)


def root_of_unity(n):
    """Primitive n-th root of unity in Q(zeta_n)."""
    return CyclotomicField(n).root(1)


def primitive_root(field, n):
    """Primitive n-th root of unity as an element of the given backend."""
    if isinstance(field, FloatField):
        return field(cmath.exp(2j * cmath.pi / n))
    if field.order % n != 0:
        raise ValueError("field of order %d has no %d-th root" % (field.order, n))
    return field.root(field.order // n)


def embed_order(x, order):
    """Re-embed a cyclotomic value into Q(zeta_order); the old order must divide."""
    if not isinstance(x, Cyclotomic):
        raise TypeError("embed_order expects a cyclotomic value")
    n = x.field.order
    if order % n != 0:
        raise ValueError("order %d does not contain order %d" % (order, n))
    target = CyclotomicField(order)
    step = order // n
    acc = target.zero()
    z = target.root(step)
    for c in reversed(x.coeffs):
        acc = acc * z + target(c)
    return acc


def to_float(x, field=None):
    """Embed any backend scalar into a FloatField value."""
    field = field or FloatField()
    return field(complex(x))


# -- string form -----------------------------------------------------------


def _format_fraction(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def format_scalar(x):
    """Canonical string: rationals "p/q", cyclotomics "c0 + c1*z + ...",
    floats "re<+/->imj"."""
    if isinstance(x, ComplexScalar):
        v = x.value
        sign = "-" if v.imag < 0 else "+"
        return "%r%s%rj" % (v.real, sign, abs(v.imag))
    if isinstance(x, Cyclotomic):
        terms = []
        for k, c in enumerate(x.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(_format_fraction(c))
            elif k == 1:
                terms.append("%s*z" % _format_fraction(c))
            else:
                terms.append("%s*z^%d" % (_format_fraction(c), k))
        return " + ".join(terms) if terms else "0"
    if isinstance(x, (int, Fraction)):
        return _format_fraction(x)
    raise TypeError("cannot format %r" % (x,))


def parse_scalar(text, field):
    """Inverse of format_scalar for the given field."""
    text = text.strip()
    if isinstance(field, FloatField):
        return ComplexScalar(field, complex(text.replace(" ", "")))
    coeffs = [Fraction(0)] * max(1, field.degree)
    # split into signed terms at top level
    for term in _split_terms(text):
        if term in ("0", "+0", "-0"):
            continue
        if "*" in term:
            coef_s, _, pow_s = term.partition("*")
            if pow_s == "z":
                k = 1
            elif pow_s.startswith("z^"):
                k = int(pow_s[2:])
            else:
                raise ValueError("malformed scalar term %r" % term)
            coef = Fraction(coef_s)
        elif term in ("z", "+z", "-z"):
            k, coef = 1, Fraction(-1 if term.startswith("-") else 1)
        elif term.startswith(("z^", "+z^", "-z^")):
            body = term.lstrip("+-")
            k, coef = int(body[2:]), Fraction(-1 if term.startswith("-") else 1)
        else:
            k, coef = 0, Fraction(term)
        if k >= field.order and field.order > 1:
            k %= field.order
            coeffs_extra = [Fraction(0)] * (k + 1)
            coeffs_extra[k] = coef
            lifted = field(coeffs_extra)
            for i, c in enumerate(lifted.coeffs):
                coeffs[i] += c
            continue
        while k >= len(coeffs):
            coeffs.append(Fraction(0))
        coeffs[k] += coef
    return field(coeffs)


def _split_terms(text):
    out = []
    cur = ""
    for ch in text:
        if ch == " ":
            continue
        if ch in "+-" and cur and cur[-1] not in "+-*^/":
            out.append(cur)
            cur = ch if ch == "-" else ""
        else:
            cur += ch
    if cur:
        out.append(cur)
    return [t.lstrip("+") or "0" for t in out]
