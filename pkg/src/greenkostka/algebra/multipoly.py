"""Sparse multivariate polynomials and rational functions in t_1..t_k over Q(zeta_r).

Terms are kept in a dict from exponent tuples to nonzero Cyclo values.  The
leading term is the graded-lexicographic maximum.  Fractions are reduced by a
recursive primitive-PRS gcd and normalized so the denominator's leading
coefficient is 1, which makes equal values have equal representations.
"""

from fractions import Fraction

from .cyclotomic import Cyclo

__all__ = ["MultiPolynomial", "MultiRationalFunction", "specialize"]


def _grlex(e):
    return (sum(e), e)


class MultiPolynomial:
    __slots__ = ("terms", "nvars", "order")

    def __init__(self, terms=None, nvars=1, order=1):
        self.nvars = nvars
        self.order = order
        out = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise ValueError("exponent length mismatch")
                c = c if isinstance(c, Cyclo) else Cyclo(c, order)
                if c.order != order:
                    c = Cyclo(c, order)
                if not c.is_zero():
                    out[tuple(e)] = c
        self.terms = out

    @classmethod
    def _make(cls, terms, nvars, order):
        obj = object.__new__(cls)
        obj.terms, obj.nvars, obj.order = terms, nvars, order
        return obj

    @classmethod
    def var(cls, i, nvars, order=1):
        e = [0] * nvars
        e[i] = 1
        return cls._make({tuple(e): Cyclo(1, order)}, nvars, order)

    @classmethod
    def constant(cls, c, nvars, order=1):
        return cls({(0,) * nvars: c}, nvars, order)

    def zero(self):
        return MultiPolynomial._make({}, self.nvars, self.order)

    def one(self):
        return MultiPolynomial._make({(0,) * self.nvars: Cyclo(1, self.order)}, self.nvars, self.order)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self):
        return self.terms.get((0,) * self.nvars, Cyclo(0, self.order))

    def leading(self):
        e = max(self.terms, key=_grlex)
        return e, self.terms[e]

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, v):
        return max((e[v] for e in self.terms), default=-1)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPolynomial):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        if isinstance(other, (int, Fraction, Cyclo)):
            return MultiPolynomial.constant(other, self.nvars, self.order)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v.is_zero():
                    del out[e]
                else:
                    out[e] = v
        return MultiPolynomial._make(out, self.nvars, self.order)

    __radd__ = __add__

    def __neg__(self):
        return MultiPolynomial._make({e: -c for e, c in self.terms.items()}, self.nvars, self.order)

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
            return MultiPolynomial._make({e: c * other for e, c in self.terms.items()}, self.nvars, self.order)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = c1 * c2
                w = out.get(e)
                out[e] = v if w is None else w + v
        return MultiPolynomial._make({e: c for e, c in out.items() if not c.is_zero()}, self.nvars, self.order)

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
        """Multivariate division by a single divisor in grlex order."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        le, lc = other.leading()
        inv = lc.inverse()
        q, r = {}, {}
        p = dict(self.terms)
        while p:
            e = max(p, key=_grlex)
            c = p[e]
            if all(a >= b for a, b in zip(e, le)):
                d = tuple(a - b for a, b in zip(e, le))
                f = c * inv
                q[d] = f
                for e2, c2 in other.terms.items():
                    k = tuple(a + b for a, b in zip(d, e2))
                    v = p.get(k, None)
                    v = -(f * c2) if v is None else v - f * c2
                    if v.is_zero():
                        p.pop(k, None)
                    else:
                        p[k] = v
            else:
                r[e] = c
                del p[e]
        mk = MultiPolynomial._make
        return mk(q, self.nvars, self.order), mk(r, self.nvars, self.order)

    def exact_div(self, other):
        if other.is_constant():
            return self * other.constant_value().inverse()
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self):
        if not self.terms:
            return self
        _, lc = self.leading()
        if lc == 1:
            return self
        return self * lc.inverse()

    def gcd(self, other):
        return _gcd(self, other, self.nvars - 1)

    def conjugate(self):
        return MultiPolynomial._make({e: c.conjugate() for e, c in self.terms.items()}, self.nvars, self.order)

    def evaluate(self, values):
        """Substitute ``values[i]`` for t_(i+1); values may be any ring elements."""
        powers = [dict() for _ in range(self.nvars)]
        total = None
        for e in sorted(self.terms, key=_grlex):
            term = self.terms[e]
            for i, k in enumerate(e):
                if k:
                    pw = powers[i].get(k)
                    if pw is None:
                        pw = values[i] ** k
                        powers[i][k] = pw
                    term = pw * term
            total = term if total is None else total + term
        return total if total is not None else Cyclo(0, self.order)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return "MultiPolynomial(%s)" % self.to_str()

    def to_str(self, var="t"):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=_grlex):
            c = self.terms[e]
            mono = "*".join(
                ("%s%d" % (var, i + 1)) + ("" if k == 1 else "^%d" % k) for i, k in enumerate(e) if k
            )
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
        out = []
        for e in sorted(self.terms, key=_grlex):
            c = self.terms[e]
            if c.is_rational():
                q = c.coeffs[0]
                cj = q.numerator if q.denominator == 1 else str(q)
            else:
                cj = c.to_json()
            out.append([list(e), cj])
        return out


# -- gcd -------------------------------------------------------------------


def _coeffs_in(p, v):
    """Split p by powers of t_v; each coefficient has t_v exponent zero."""
    out = {}
    for e, c in p.terms.items():
        k = e[v]
        e0 = e[:v] + (0,) + e[v + 1 :]
        out.setdefault(k, {})[e0] = c
    return {k: MultiPolynomial._make(t, p.nvars, p.order) for k, t in out.items()}


def _shift(p, v, k):
    if k == 0:
        return p
    return MultiPolynomial._make(
        {e[:v] + (e[v] + k,) + e[v + 1 :]: c for e, c in p.terms.items()}, p.nvars, p.order
    )


def _content(p, v):
    g = None
    for c in _coeffs_in(p, v).values():
        g = c.monic() if g is None else _gcd(g, c, v - 1)
        if g.is_constant():
            return g.one()
    return g


def _primpart(p, v):
    if p.is_zero():
        return p
    return p.exact_div(_content(p, v)).monic()


def _prem(a, b, v):
    db = b.degree_in(v)
    lcb = _coeffs_in(b, v)[db]
    r = a
    while not r.is_zero():
        dr = r.degree_in(v)
        if dr < db:
            break
        lcr = _coeffs_in(r, v)[dr]
        r = r * lcb - _shift(lcr * b, v, dr - db)
    return r


def _gcd(a, b, v):
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if v < 0 or a.is_constant() or b.is_constant():
        return a.one()
    if a.degree_in(v) <= 0 and b.degree_in(v) <= 0:
        return _gcd(a, b, v - 1)
    ca, cb = _content(a, v), _content(b, v)
    g = _gcd(ca, cb, v - 1)
    pa, pb = a.exact_div(ca), b.exact_div(cb)
    if pa.degree_in(v) < pb.degree_in(v):
        pa, pb = pb, pa
    while not pb.is_zero():
        if pb.degree_in(v) == 0:
            return g.monic()
        rem = _prem(pa, pb, v)
        pa, pb = pb, _primpart(rem, v)
    return (g * _primpart(pa, v)).monic()


# -- rational functions ----------------------------------------------------


class MultiRationalFunction:
    """num/den in lowest terms with the grlex-leading coefficient of den equal to 1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = num.one()
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = num, den.one()
            return
        if not den.is_constant():
            g = num.gcd(den)
            if not g.is_constant():
                num = num.exact_div(g)
                den = den.exact_div(g)
        _, lc = den.leading()
        if lc != 1:
            inv = lc.inverse()
            num, den = num * inv, den * inv
        self.num, self.den = num, den

    @classmethod
    def _make(cls, num, den):
        obj = object.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    @classmethod
    def var(cls, i, nvars, order=1):
        p = MultiPolynomial.var(i, nvars, order)
        return cls._make(p, p.one())

    @classmethod
    def constant(cls, c, nvars, order=1):
        p = MultiPolynomial.constant(c, nvars, order)
        return cls._make(p, p.one() if not p.is_zero() else MultiPolynomial.constant(1, nvars, order))

    @property
    def nvars(self):
        return self.num.nvars

    @property
    def order(self):
        return self.num.order

    def zero(self):
        return MultiRationalFunction._make(self.num.zero(), self.den.one())

    def one(self):
        return MultiRationalFunction._make(self.num.one(), self.den.one())

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.is_constant()

    def _coerce(self, other):
        if isinstance(other, MultiRationalFunction):
            return other
        if isinstance(other, MultiPolynomial):
            return MultiRationalFunction._make(other, other.one())
        if isinstance(other, (int, Fraction, Cyclo)):
            p = MultiPolynomial.constant(other, self.nvars, self.order)
            return MultiRationalFunction._make(p, self.den.one())
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
            if self.den.is_constant():
                return MultiRationalFunction._make(self.num + o.num, self.den)
            return MultiRationalFunction(self.num + o.num, self.den)
        if self.den.is_constant():
            return MultiRationalFunction._make(self.num * o.den + o.num, o.den)
        if o.den.is_constant():
            return MultiRationalFunction._make(self.num + o.num * self.den, self.den)
        g = self.den.gcd(o.den)
        if g.is_constant():
            return MultiRationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)
        d1, d2 = self.den.exact_div(g), o.den.exact_div(g)
        return MultiRationalFunction(self.num * d2 + o.num * d1, d1 * o.den)

    __radd__ = __add__

    def __neg__(self):
        return MultiRationalFunction._make(-self.num, self.den)

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
            return MultiRationalFunction._make(self.num * other, self.den)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return self.zero()
        if self.den.is_constant() and o.den.is_constant():
            return MultiRationalFunction._make(self.num * o.num, self.den)
        n1, d1, n2, d2 = self.num, self.den, o.num, o.den
        if not d2.is_constant():
            g = n1.gcd(d2)
            if not g.is_constant():
                n1, d2 = n1.exact_div(g), d2.exact_div(g)
        if not d1.is_constant():
            g = n2.gcd(d1)
            if not g.is_constant():
                n2, d1 = n2.exact_div(g), d1.exact_div(g)
        num, den = n1 * n2, d1 * d2
        _, lc = den.leading()
        if lc != 1:
            inv = lc.inverse()
            num, den = num * inv, den * inv
        return MultiRationalFunction._make(num, den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("division by zero")
        num, den = self.den, self.num
        _, lc = den.leading()
        if lc != 1:
            inv = lc.inverse()
            num, den = num * inv, den * inv
        return MultiRationalFunction._make(num, den)

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
        return MultiRationalFunction._make(self.num ** k, self.den ** k)

    def conjugate(self):
        return MultiRationalFunction(self.num.conjugate(), self.den.conjugate())

    def specialize(self, values):
        return specialize(self, values)

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
        return "MultiRationalFunction(%s)" % self.to_str()

    def to_str(self, var="t"):
        if self.den.is_constant():
            return self.num.to_str(var)
        n = self.num.to_str(var)
        if len(self.num.terms) > 1:
            n = "(%s)" % n
        return "%s/(%s)" % (n, self.den.to_str(var))

    __str__ = to_str

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}


def _is_zero_value(x):
    if isinstance(x, (int, Fraction)):
        return x == 0
    return x.is_zero()


def specialize(f, values):
    """Substitute t_(i+1) -> values[i] in f.

    ``values`` is a sequence (or dict index -> value) covering every variable.
    Values may be numbers, Cyclo, UniPolynomial/RationalFunction or
    multivariate objects; the result lives wherever the values live.
    """
    if isinstance(values, dict):
        values = [values[i] for i in range(f.nvars)]
    if isinstance(f, MultiPolynomial):
        return f.evaluate(values)
    num = f.num.evaluate(values)
    den = f.den.evaluate(values)
    if _is_zero_value(den):
        raise ZeroDivisionError("pole at specialization point")
    if isinstance(num, (int, Fraction)):
        num = Cyclo(num, f.order)
    if hasattr(num, "num") or hasattr(den, "num"):
        return num / den
    from .polynomial import RationalFunction, UniPolynomial

    if isinstance(num, UniPolynomial) or isinstance(den, UniPolynomial):
        return RationalFunction(num) / RationalFunction(den) if isinstance(den, UniPolynomial) else RationalFunction(num) / den
    if isinstance(num, MultiPolynomial) or isinstance(den, MultiPolynomial):
        n = num if isinstance(num, MultiPolynomial) else MultiPolynomial.constant(num, den.nvars, f.order)
        d = den if isinstance(den, MultiPolynomial) else MultiPolynomial.constant(den, n.nvars, f.order)
        return MultiRationalFunction(n, d)
    return num / den
