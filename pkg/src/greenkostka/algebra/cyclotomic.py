"""Exact arithmetic in the cyclotomic field Q(zeta_r).

An element is stored as its residue modulo the r-th cyclotomic polynomial,
i.e. a coefficient vector of length phi(r) in powers of zeta.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd

__all__ = ["Cyclo", "cyclo_reduce", "conjugate", "zeta", "cyclotomic_polynomial"]


def _poly_divmod_int(a, b):
    # integer polynomial long division, b monic; coefficient lists low -> high
    a = list(a)
    out = [0] * max(len(a) - len(b) + 1, 1)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1]
        out[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return out, a[: len(b) - 1]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(r):
    """Integer coefficients (low to high) of the r-th cyclotomic polynomial."""
    if r < 1:
        raise ValueError("order must be positive")
    num = [-1] + [0] * (r - 1) + [1]
    for d in range(1, r):
        if r % d == 0:
            num, rem = _poly_divmod_int(num, cyclotomic_polynomial(d))
            assert not any(rem)
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return tuple(num)


@lru_cache(maxsize=None)
def _phi(r):
    return len(cyclotomic_polynomial(r)) - 1


def _reduce(raw, r):
    # fold exponents mod r, then reduce modulo Phi_r (monic)
    folded = [Fraction(0)] * r
    for i, c in enumerate(raw):
        if c:
            folded[i % r] += c
    phi = cyclotomic_polynomial(r)
    deg = len(phi) - 1
    for i in range(r - 1, deg - 1, -1):
        c = folded[i]
        if c:
            for j in range(deg + 1):
                folded[i - deg + j] -= c * phi[j]
    return tuple(folded[:deg])


class Cyclo:
    """An element of Q(zeta_r), immutable.

    ``Cyclo(3)`` is the rational 3; ``Cyclo([0, 1], 4)`` is zeta_4.
    Arithmetic between different orders lifts both operands to the lcm.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, value=0, order=1):
        if isinstance(value, Cyclo):
            if value.order == order or order == 1:
                self.order, self.coeffs = value.order, value.coeffs
                return
            value = value._lift(order).coeffs
            self.order, self.coeffs = order, value
            return
        if order < 1:
            raise ValueError("order must be positive")
        if isinstance(value, (int, Fraction)):
            raw = [Fraction(value)]
        else:
            raw = [Fraction(c) for c in value]
        self.order = order
        self.coeffs = _reduce(raw, order)

    @classmethod
    def _make(cls, coeffs, order):
        obj = object.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        return obj

    # -- structure ---------------------------------------------------------

    def is_zero(self):
        return not any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def rational(self):
        if not self.is_rational():
            raise ValueError("not a rational number: %r" % (self,))
        return self.coeffs[0]

    def zero(self):
        return Cyclo._make((Fraction(0),) * len(self.coeffs), self.order)

    def one(self):
        c = [Fraction(0)] * len(self.coeffs)
        c[0] = Fraction(1)
        return Cyclo._make(tuple(c), self.order)

    def _lift(self, order):
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError("cannot embed order %d into %d" % (self.order, order))
        step = order // self.order
        raw = [Fraction(0)] * (step * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            raw[i * step] = c
        return Cyclo._make(_reduce(raw, order), order)

    def _coerce(self, other):
        if isinstance(other, Cyclo):
            a, b = self, other
        elif isinstance(other, (int, Fraction)):
            return self, Cyclo(other, self.order)
        else:
            return None, None
        if a.order == b.order:
            return a, b
        if b.is_rational():
            return a, Cyclo(b.coeffs[0], a.order)
        if a.is_rational():
            return Cyclo(a.coeffs[0], b.order), b
        L = a.order * b.order // gcd(a.order, b.order)
        return a._lift(L), b._lift(L)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return Cyclo._make(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)), a.order)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo._make(tuple(-x for x in self.coeffs), self.order)

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return Cyclo._make(tuple(x - y for x, y in zip(a.coeffs, b.coeffs)), a.order)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclo._make(tuple(x * other for x in self.coeffs), self.order)
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        if len(a.coeffs) == 1:
            return Cyclo._make((a.coeffs[0] * b.coeffs[0],), a.order)
        raw = [Fraction(0)] * (2 * len(a.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        raw[i + j] += x * y
        return Cyclo._make(_reduce(raw, a.order), a.order)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("division by zero")
        if len(self.coeffs) == 1:
            return Cyclo._make((1 / self.coeffs[0],), self.order)
        # extended Euclid in Q[x]: s*a + k*Phi = 1
        a = _trim(list(self.coeffs))
        m = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        s0, s1 = [Fraction(1)], [Fraction(0)]
        r0, r1 = a, m
        while len(r1) > 1 or r1[0] != 0:
            q, rem = _qdivmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _qsub(s0, _qmul(q, s1))
        # r0 is a nonzero constant
        c = r0[0]
        return Cyclo([x / c for x in s0], self.order)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return Cyclo._make(tuple(x / other for x in self.coeffs), self.order)
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self):
        """Complex conjugation, zeta -> zeta^(r-1)."""
        r = self.order
        raw = [Fraction(0)] * r
        for i, c in enumerate(self.coeffs):
            raw[(-i) % r] += c
        return Cyclo._make(_reduce(raw, r), r)

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.is_rational():
            return "Cyclo(%s)" % self.coeffs[0]
        return "Cyclo(%s, %d)" % ([str(c) for c in self.coeffs], self.order)

    def __str__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            z = "" if i == 0 else ("z" if i == 1 else "z^%d" % i)
            if not z:
                parts.append(str(c))
            elif c == 1:
                parts.append(z)
            elif c == -1:
                parts.append("-" + z)
            else:
                parts.append("%s*%s" % (c, z))
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self):
        return {"order": self.order, "coeffs": [_num_json(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data):
        return cls([Fraction(c) for c in data["coeffs"]], data["order"])


def _num_json(c):
    return c.numerator if c.denominator == 1 else str(c)


def _trim(p):
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _qmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _qsub(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _qdivmod(a, b):
    a = list(a)
    if len(a) < len(b):
        return [Fraction(0)], _trim(a)
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return _trim(q), _trim(a[: len(b) - 1] or [Fraction(0)])


def cyclo_reduce(raw, r):
    """Canonical residue of sum(raw[i] * zeta^i) modulo Phi_r."""
    return Cyclo(raw, r)


def conjugate(z):
    if isinstance(z, (int, Fraction)):
        return z
    return z.conjugate()


def zeta(r, power=1):
    """zeta_r ** power as a Cyclo."""
    raw = [0] * r
    raw[power % r] = 1
    return Cyclo(raw, r)
