"""Univariate polynomials and rational functions in ``t`` over Q(zeta_r)."""

from fractions import Fraction
from math import gcd

from .cyclotomic import Cyclo

__all__ = ["UniPolynomial", "RationalFunction", "ratfun_normalize"]


def _c(x, order):
    if isinstance(x, Cyclo):
        return x
    return Cyclo(x, order)


class UniPolynomial:
    """Dense polynomial; ``coeffs[i]`` is the coefficient of t**i."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs=(), order=1):
        cs = [_c(x, order) for x in coeffs]
        for x in cs:
            if x.order != order and not x.is_rational():
                order = order * x.order // gcd(order, x.order)
        cs = [x if x.order == order else Cyclo(x, order) for x in cs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)
        self.order = order

    @classmethod
    def _make(cls, coeffs, order):
        obj = object.__new__(cls)
        obj.coeffs = coeffs
        obj.order = order
        return obj

    @classmethod
    def gen(cls, order=1):
        return cls([0, 1], order)

    @classmethod
    def constant(cls, c, order=1):
        return cls([c], order)

    @classmethod
    def monomial(cls, degree, c=1, order=1):
        return cls([0] * degree + [c], order)

    def zero(self):
        return UniPolynomial._make((), self.order)

    def one(self):
        return UniPolynomial._make((Cyclo(1, self.order),), self.order)

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return len(self.coeffs) - 1

    def lc(self):
        return self.coeffs[-1] if self.coeffs else Cyclo(0, self.order)

    def is_constant(self):
        return len(self.coeffs) <= 1

    def constant_term(self):
        return self.coeffs[0] if self.coeffs else Cyclo(0, self.order)

    def _coerce(self, other):
        if isinstance(other, UniPolynomial):
            return other
        if isinstance(other, (int, Fraction, Cyclo)):
            return UniPolynomial([other], self.order)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] = out[i] + x
        return UniPolynomial(out, max(self.order, o.order))

    __radd__ = __add__

    def __neg__(self):
        return UniPolynomial._make(tuple(-x for x in self.coeffs), self.order)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            if not other:
                return self.zero()
            return UniPolynomial([x * other for x in self.coeffs], self.order)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return self.zero()
        out = [None] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x.is_zero():
                continue
            for j, y in enumerate(o.coeffs):
                if y.is_zero():
                    continue
                v = x * y
                k = i + j
                out[k] = v if out[k] is None else out[k] + v
        z = Cyclo(0, max(self.order, o.order))
        return UniPolynomial([z if v is None else v for v in out], z.order)

    __rmul__ = __mul__

    def __pow__(self, k):
        result, base = self.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        a = list(self.coeffs)
        b = other.coeffs
        if len(a) < len(b):
            return self.zero(), self
        inv = b[-1].inverse()
        q = [None] * (len(a) - len(b) + 1)
        for i in range(len(a) - len(b), -1, -1):
            c = a[i + len(b) - 1] * inv
            q[i] = c
            if not c.is_zero():
                for j in range(len(b) - 1):
                    a[i + j] = a[i + j] - c * b[j]
        order = max(self.order, other.order)
        return UniPolynomial(q, order), UniPolynomial(a[: len(b) - 1], order)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        q, rem = self.divmod(other)
        if not rem.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self):
        if not self.coeffs:
            return self
        inv = self.coeffs[-1].inverse()
        return UniPolynomial._make(tuple(x * inv for x in self.coeffs), self.order)

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def __call__(self, x):
        """Horner evaluation; ``x`` may be a number, Cyclo or polynomial-like."""
        if not self.coeffs:
            return 0 * x if not isinstance(x, (int, Fraction)) else Cyclo(0, self.order)
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def conjugate(self):
        return UniPolynomial._make(tuple(c.conjugate() for c in self.coeffs), self.order)

    def reversed_coeffs(self, degree):
        """t**degree * p(1/t); ``degree`` must be >= deg p."""
        cs = list(self.coeffs) + [Cyclo(0, self.order)] * (degree + 1 - len(self.coeffs))
        return UniPolynomial(cs[::-1], self.order)

    def lowest_degree(self):
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                return i
        return None

    def is_integral(self):
        return all(c.is_rational() and c.coeffs[0].denominator == 1 for c in self.coeffs)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return "UniPolynomial(%s)" % self.to_str()

    def to_str(self, var="t"):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            mono = "" if i == 0 else (var if i == 1 else "%s^%d" % (var, i))
            cs = str(c)
            if not c.is_rational():
                cs = "(%s)" % cs
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append("%s*%s" % (cs, mono))
        return " + ".join(parts).replace("+ -", "- ")

    __str__ = to_str

    def to_json(self):
        if all(c.is_rational() for c in self.coeffs):
            return [_num_json(c.coeffs[0]) for c in self.coeffs]
        return [c.to_json() for c in self.coeffs]


def _num_json(c):
    return c.numerator if c.denominator == 1 else str(c)


class RationalFunction:
    """num/den with gcd(num, den) = 1 and den monic; equal values compare equal."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, UniPolynomial):
            num = UniPolynomial([num], num.order if isinstance(num, Cyclo) else 1)
        if den is None:
            den = num.one()
        elif not isinstance(den, UniPolynomial):
            den = UniPolynomial([den], num.order)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = num, den.one()
            return
        if den.degree() > 0:
            g = num.gcd(den)
            if g.degree() > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        lc = den.lc()
        if lc != 1:
            inv = lc.inverse()
            num = num * inv
            den = den * inv
        self.num, self.den = num, den

    @classmethod
    def _make(cls, num, den):
        obj = object.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    @classmethod
    def gen(cls, order=1):
        return cls(UniPolynomial.gen(order))

    @classmethod
    def constant(cls, c, order=1):
        return cls(UniPolynomial([c], order))

    @property
    def order(self):
        return max(self.num.order, self.den.order)

    def zero(self):
        return RationalFunction._make(self.num.zero(), self.den.one())

    def one(self):
        return RationalFunction._make(self.num.one(), self.den.one())

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.degree() == 0

    def as_polynomial(self):
        if not self.is_polynomial():
            raise ValueError("not a polynomial: %s" % self)
        return self.num

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, UniPolynomial):
            return RationalFunction._make(other, other.one())
        if isinstance(other, (int, Fraction, Cyclo)):
            p = UniPolynomial([other], self.num.order)
            return RationalFunction._make(p, p.one())
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            return self
        if self.is_zero():
            return o
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._make(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            if not other:
                return self.zero()
            return RationalFunction._make(self.num * other, self.den)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return self.zero()
        if self.den.degree() == 0 and o.den.degree() == 0:
            return RationalFunction._make(self.num * o.num, self.den)
        # cross-cancel before multiplying
        g1 = self.num.gcd(o.den)
        g2 = o.num.gcd(self.den)
        n1, d2 = (self.num.exact_div(g1), o.den.exact_div(g1)) if g1.degree() > 0 else (self.num, o.den)
        n2, d1 = (o.num.exact_div(g2), self.den.exact_div(g2)) if g2.degree() > 0 else (o.num, self.den)
        num, den = n1 * n2, d1 * d2
        lc = den.lc()
        if lc != 1:
            inv = lc.inverse()
            num, den = num * inv, den * inv
        return RationalFunction._make(num, den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("division by zero")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction._make(self.num ** k, self.den ** k)

    def __call__(self, x):
        d = self.den(x)
        if (isinstance(d, (Cyclo, UniPolynomial, RationalFunction)) and d.is_zero()) or (
            isinstance(d, (int, Fraction)) and d == 0
        ):
            raise ZeroDivisionError("pole at specialization point")
        return self.num(x) / d

    def invert_variable(self, shift=0):
        """t**shift * f(1/t), normalized."""
        dn, dd = self.num.degree(), self.den.degree()
        num = self.num.reversed_coeffs(max(dn, 0))
        den = self.den.reversed_coeffs(dd)
        # f(1/t) = t^(dd - dn) * num_rev / den_rev
        e = dd - max(dn, 0) + shift
        if e >= 0:
            num = num * UniPolynomial.monomial(e, 1, self.order)
        else:
            den = den * UniPolynomial.monomial(-e, 1, self.order)
        return RationalFunction(num, den)

    def conjugate(self):
        return RationalFunction(self.num.conjugate(), self.den.conjugate())

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return "RationalFunction(%s)" % self.to_str()

    def to_str(self, var="t"):
        if self.den.degree() == 0:
            return self.num.to_str(var)
        n = self.num.to_str(var)
        if len(self.num.coeffs) > 1:
            n = "(%s)" % n
        return "%s/(%s)" % (n, self.den.to_str(var))

    __str__ = to_str

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}


def ratfun_normalize(num, den):
    """Canonical gcd-reduced form of num/den with monic denominator."""
    if not isinstance(den, UniPolynomial):
        den = UniPolynomial([den])
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    return RationalFunction(num, den)
