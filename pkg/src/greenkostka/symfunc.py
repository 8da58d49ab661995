"""Symmetric functions in r colored alphabets x^(1), ..., x^(r).

Two representations are provided.

* ``ColoredPolynomial`` is an explicit polynomial in m variables per color.
  It is used by the kernel identity checks and the debug CLI.
* ``SymSpace`` works with transition matrices to the monomial basis.  For a
  function that is symmetric in each color, the coefficient of m_mu equals the
  coefficient of the dominant monomial x^mu, and that coefficient only
  involves the variables where mu is nonzero.  All basis matrices are built
  that way, so no explicit polynomial is ever expanded.

Matrix conventions: ``M(u, v)`` has rows indexed by the u basis, so that
u_la = sum_mu M[la, mu] v_mu.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .algebra import (
    Cyclo,
    MultiPolynomial,
    MultiRationalFunction,
    RationalFunction,
    SymbolicMatrix,
    UniPolynomial,
    mat_inverse,
    zeta,
)
from .combinatorics import enumerate_multipartitions, enumerate_partitions

__all__ = [
    "ParamRing",
    "ColoredPolynomial",
    "monomial_sym",
    "schur_sym",
    "power_sum_colored",
    "power_sum",
    "q_series",
    "q_pm",
    "kostka_number",
    "SymSpace",
    "sym_space",
    "BasisExpansion",
    "expand_in",
    "scalar_product",
    "BASES",
]

BASES = ("m", "s", "p", "q+", "q-", "P+", "P-", "Q+", "Q-")


# -- parameters --------------------------------------------------------------


class ParamRing:
    """Coefficient field for one of the parameter modes.

    ``mode="one"``: Q(zeta_r)(t), all t_k equal to t.
    ``mode="multi"``: Q(zeta_r)(t_1, ..., t_r).
    """

    def __init__(self, r, mode="one"):
        if mode not in ("one", "multi"):
            raise ValueError("unknown parameter mode %r" % (mode,))
        self.r = r
        self.mode = mode
        self.nparams = 1 if mode == "one" else r

    def __eq__(self, other):
        return isinstance(other, ParamRing) and (self.r, self.mode) == (other.r, other.mode)

    def __hash__(self):
        return hash((self.r, self.mode))

    def __repr__(self):
        return "ParamRing(%d, %r)" % (self.r, self.mode)

    def param_index(self, k):
        """Index of t_k (k in 0..r-1) among the ring's variables."""
        return 0 if self.mode == "one" else k % self.r

    def zero(self):
        if self.mode == "one":
            return RationalFunction(UniPolynomial([], self.r))
        return MultiRationalFunction(MultiPolynomial({}, self.r, self.r))

    def one(self):
        return self.zero().one()

    def const(self, c):
        return self.one() * c

    def t(self, k=0):
        if self.mode == "one":
            return RationalFunction.gen(self.r)
        return MultiRationalFunction.var(k, self.r, self.r)

    def from_terms(self, terms):
        """Field element from a dict {parameter exponent tuple: number or Cyclo}."""
        if self.mode == "one":
            deg = max((e[0] for e in terms), default=-1)
            cs = [Cyclo(0, self.r)] * (deg + 1)
            for e, c in terms.items():
                cs[e[0]] = cs[e[0]] + c
            return RationalFunction(UniPolynomial(cs, self.r))
        return MultiRationalFunction(MultiPolynomial(dict(terms), self.r, self.r))

    def specialize_one(self, x):
        """Image of a multi-parameter element under t_k -> t."""
        if self.mode == "one":
            return x
        t = RationalFunction.gen(self.r)
        return x.specialize([t] * self.r)


# -- explicit colored polynomials -------------------------------------------


class ColoredPolynomial:
    """Polynomial in r*m variables; exponent tuples are color-major."""

    __slots__ = ("r", "m", "terms", "zero")

    def __init__(self, r, m, terms=None, zero=0):
        self.r, self.m, self.zero = r, m, zero
        self.terms = {e: c for e, c in (terms or {}).items() if not _iszero(c)}

    def _new(self, terms):
        return ColoredPolynomial(self.r, self.m, terms, self.zero)

    @classmethod
    def constant(cls, r, m, c, zero=0):
        return cls(r, m, {(0,) * (r * m): c}, zero)

    @classmethod
    def variable(cls, r, m, color, i, c=1, zero=0):
        e = [0] * (r * m)
        e[color * m + i] = 1
        return cls(r, m, {tuple(e): c}, zero)

    def __add__(self, other):
        if not isinstance(other, ColoredPolynomial):
            other = ColoredPolynomial.constant(self.r, self.m, other, self.zero)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, ColoredPolynomial):
            return self._new({e: c * other for e, c in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = c1 * c2
                out[e] = out[e] + v if e in out else v
        return self._new(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = ColoredPolynomial.constant(self.r, self.m, 1, self.zero)
        for _ in range(k):
            out = out * self
        return out

    def is_zero(self):
        return not self.terms

    def degree_part(self, d):
        return self._new({e: c for e, c in self.terms.items() if sum(e) == d})

    def coefficient(self, exponent):
        return self.terms.get(tuple(exponent), self.zero)

    def dominant_coefficient(self, la):
        """Coefficient of x^la, i.e. of m_la when the polynomial is symmetric per color."""
        return self.coefficient(dominant_exponent(la, self.m))

    def is_color_symmetric(self):
        r, m = self.r, self.m
        for k in range(r):
            for i in range(m - 1):
                swapped = {}
                for e, c in self.terms.items():
                    f = list(e)
                    f[k * m + i], f[k * m + i + 1] = f[k * m + i + 1], f[k * m + i]
                    swapped[tuple(f)] = c
                if swapped != self.terms:
                    return False
        return True

    def map_coefficients(self, f, zero=None):
        return ColoredPolynomial(self.r, self.m, {e: f(c) for e, c in self.terms.items()},
                                 self.zero if zero is None else zero)

    def __eq__(self, other):
        if not isinstance(other, ColoredPolynomial):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        return all(self.terms.get(k, 0) == other.terms.get(k, 0) for k in keys)

    def __repr__(self):
        return "ColoredPolynomial(r=%d, m=%d, %d terms)" % (self.r, self.m, len(self.terms))


def _iszero(c):
    if isinstance(c, (int, Fraction)):
        return c == 0
    return c.is_zero()


def dominant_exponent(la, m):
    e = []
    for part in la:
        if len(part) > m:
            raise ValueError("too few variables")
        e.extend(list(part) + [0] * (m - len(part)))
    return tuple(e)


def _one_color(r, m, k, exps, c=1):
    e = [0] * (r * m)
    e[k * m:(k + 1) * m] = exps
    return tuple(e)


def _distinct_perms(part, m):
    vec = list(part) + [0] * (m - len(part))
    out = set()

    def rec(prefix, rest):
        if not rest:
            out.add(tuple(prefix))
            return
        seen = set()
        for i, x in enumerate(rest):
            if x in seen:
                continue
            seen.add(x)
            rec(prefix + [x], rest[:i] + rest[i + 1:])

    rec([], vec)
    return out


def _classical_monomial(r, m, k, part):
    if len(part) > m:
        raise ValueError("too few variables")
    return ColoredPolynomial(r, m, {_one_color(r, m, k, p): 1 for p in _distinct_perms(part, m)})


def monomial_sym(la, m):
    r = len(la)
    out = ColoredPolynomial.constant(r, m, 1)
    for k, part in enumerate(la):
        out = out * _classical_monomial(r, m, k, part)
    return out


def schur_sym(la, m):
    """Product over colors of classical Schur polynomials, via Kostka numbers."""
    r = len(la)
    out = ColoredPolynomial.constant(r, m, 1)
    for k, part in enumerate(la):
        if len(part) > m:
            raise ValueError("too few variables")
        f = ColoredPolynomial(r, m)
        for mu in enumerate_partitions(sum(part)):
            if len(mu) <= m:
                K = kostka_number(part, mu)
                if K:
                    f = f + _classical_monomial(r, m, k, mu) * K
        out = out * f
    return out


def power_sum_colored(s, k, m, r):
    """p^(k)_s = sum_j zeta^((k-1)(j-1)) p_s(x^(j)); ``k`` is 1-based."""
    out = ColoredPolynomial(r, m)
    for j in range(r):
        c = zeta(r, (k - 1) * j)
        for i in range(m):
            e = [0] * (r * m)
            e[j * m + i] = s
            out = out + ColoredPolynomial(r, m, {tuple(e): c})
    return out


def power_sum(la, m):
    r = len(la)
    out = ColoredPolynomial.constant(r, m, Cyclo(1, r))
    for k, part in enumerate(la):
        for s in part:
            out = out * power_sum_colored(s, k + 1, m, r)
    return out


def q_series(k, sign, max_degree, m, r, t):
    """Coefficients of u^0..u^max_degree of prod_i (1 - t u x_i^(k-+1)) / (1 - u x_i^(k)).

    ``k`` is 1-based; ``t`` is the coefficient attached to the numerator.
    """
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    other = (k - 1 - 1) % r if sign == "+" else (k - 1 + 1) % r
    one = ColoredPolynomial.constant(r, m, 1)
    series = [one] + [ColoredPolynomial(r, m) for _ in range(max_degree)]
    for i in range(m):
        y = ColoredPolynomial.variable(r, m, other, i)
        x = ColoredPolynomial.variable(r, m, k - 1, i)
        # multiply by (1 - t u y)
        series = [series[d] - (series[d - 1] * y * t if d else ColoredPolynomial(r, m))
                  for d in range(max_degree + 1)]
        # multiply by 1/(1 - u x) = sum_j (u x)^j
        xp = [one]
        for _ in range(max_degree):
            xp.append(xp[-1] * x)
        series = [sum((series[d - j] * xp[j] for j in range(d + 1)), ColoredPolynomial(r, m))
                  for d in range(max_degree + 1)]
    return series


def q_pm(la, sign, m, ts):
    """prod over colors k and parts of q^(k)_{part, sign}(x; t_(k-c)), c = 1 for '+', 0 for '-'.

    ``ts`` is the sequence (t_1, ..., t_r) of coefficients.
    """
    r = len(la)
    c = 1 if sign == "+" else 0
    out = ColoredPolynomial.constant(r, m, 1)
    for k, part in enumerate(la):
        if not part:
            continue
        series = q_series(k + 1, sign, max(part), m, r, ts[(k - c) % r])
        for s in part:
            out = out * series[s]
    return out


# -- Kostka numbers ------------------------------------------------------------


@lru_cache(maxsize=None)
def kostka_number(la, mu):
    """Number of semistandard tableaux of shape la and content mu."""
    la, mu = tuple(la), tuple(x for x in mu if x)
    if sum(la) != sum(mu):
        return 0
    if not mu:
        return 1
    last = mu[-1]
    total = 0
    # remove a horizontal strip of size ``last`` from la
    for nu in _strip_removals(la, last):
        total += kostka_number(nu, mu[:-1])
    return total


def _strip_removals(la, k):
    out = []
    n = len(la)

    def rec(i, left, cur):
        if i == n:
            if left == 0:
                out.append(tuple(x for x in cur if x))
            return
        lower = la[i + 1] if i + 1 < n else 0
        for take in range(min(left, la[i] - lower) + 1):
            cur.append(la[i] - take)
            rec(i + 1, left - take, cur)
            cur.pop()

    rec(0, k, [])
    return out


# -- dominant-coefficient dynamic programming ----------------------------------


def _target(mu):
    """Effective variables (color, index) and exponents of the dominant monomial x^mu."""
    vars_, exps = [], []
    for k, part in enumerate(mu):
        for i, x in enumerate(part):
            vars_.append(k)
            exps.append(x)
    return tuple(vars_), tuple(exps)


def _q_factor_terms(colors, rem, k, other, s, pidx, nparams):
    """Monomials of q^(k)_s restricted to variables with room under ``rem``.

    Yields (exponent delta, parameter exponent, sign).
    """
    own = [i for i, c in enumerate(colors) if c == k]
    oth = [i for i, c in enumerate(colors) if c == other]
    for b in range(s + 1):
        for sub in combinations(oth, b):
            if any(rem[i] < 1 for i in sub):
                continue
            base = list(rem)
            for i in sub:
                base[i] -= 1
            # h_{s-b} on own-color variables, bounded by what is left
            for vec in _bounded_compositions(s - b, [base[i] for i in own]):
                delta = [0] * len(rem)
                for i in sub:
                    delta[i] += 1
                for i, v in zip(own, vec):
                    delta[i] += v
                texp = [0] * nparams
                texp[pidx] = b
                yield tuple(delta), tuple(texp), (-1) ** b


def _bounded_compositions(total, bounds):
    if not bounds:
        if total == 0:
            yield ()
        return
    head, rest = bounds[0], bounds[1:]
    cap = sum(rest)
    for x in range(min(total, head), -1, -1):
        if total - x <= cap:
            for tail in _bounded_compositions(total - x, rest):
                yield (x,) + tail


def _q_coefficient(la, mu, sign, r, nparams, param_of):
    """Coefficient of x^mu in q^sign_la as {parameter exponent: int}."""
    colors, exps = _target(mu)
    factors = []
    c = 1 if sign == "+" else 0
    for k, part in enumerate(la):
        other = (k - 1) % r if sign == "+" else (k + 1) % r
        for s in part:
            factors.append((k, other, s, param_of((k - c) % r)))
    states = {exps: {(0,) * nparams: 1}}
    for k, other, s, pidx in factors:
        new = {}
        for rem, poly in states.items():
            for delta, texp, sgn in _q_factor_terms(colors, rem, k, other, s, pidx, nparams):
                nrem = tuple(a - b for a, b in zip(rem, delta))
                tgt = new.setdefault(nrem, {})
                for e, v in poly.items():
                    ee = tuple(a + b for a, b in zip(e, texp))
                    tgt[ee] = tgt.get(ee, 0) + sgn * v
        states = new
    zero = tuple(0 for _ in exps)
    return {e: v for e, v in states.get(zero, {}).items() if v}


def _p_coefficient(la, mu, r):
    """Coefficient of x^mu in p_la as a dict {power of zeta: int}."""
    colors, exps = _target(mu)
    parts = sorted(((s, k) for k, part in enumerate(la) for s in part), reverse=True)
    states = {exps: {0: 1}}
    for s, k in parts:
        new = {}
        for rem, poly in states.items():
            for i, c in enumerate(colors):
                if rem[i] >= s:
                    nrem = rem[:i] + (rem[i] - s,) + rem[i + 1:]
                    w = (k * c) % r
                    tgt = new.setdefault(nrem, {})
                    for z, v in poly.items():
                        tgt[(z + w) % r] = tgt.get((z + w) % r, 0) + v
        states = new
    zero = tuple(0 for _ in exps)
    return states.get(zero, {})


def _s_coefficient(la, mu):
    out = 1
    for a, b in zip(la, mu):
        if sum(a) != sum(b):
            return 0
        out *= kostka_number(a, b)
        if not out:
            return 0
    return out


# -- spaces of symmetric functions of fixed degree ----------------------------


class SymSpace:
    """Degree-n symmetric functions in r colors with cached basis matrices."""

    def __init__(self, n, r, ring=None):
        self.n, self.r = n, r
        self.ring = ring if ring is not None else ParamRing(r, "one")
        self.labels = enumerate_multipartitions(n, r)
        self.position = {la: i for i, la in enumerate(self.labels)}
        self._cache = {}

    def __len__(self):
        return len(self.labels)

    def _matrix(self, rows, zero):
        return SymbolicMatrix(rows, zero, self.labels, self.labels)

    def transition(self, basis):
        """M(basis, m) over the parameter field."""
        key = ("M", basis)
        if key in self._cache:
            return self._cache[key]
        ring, L = self.ring, self.labels
        zero = ring.zero()
        if basis == "m":
            M = SymbolicMatrix.identity(len(L), zero, L)
        elif basis == "s":
            M = self._matrix([[ring.const(_s_coefficient(a, b)) for b in L] for a in L], zero)
        elif basis == "p":
            M = self._matrix([[ring.const(_cyclo(_p_coefficient(a, b, self.r), self.r)) for b in L] for a in L], zero)
        elif basis in ("q+", "q-"):
            sign = basis[1]
            rows = []
            for a in L:
                rows.append([ring.from_terms(_q_coefficient(a, b, sign, self.r, ring.nparams, ring.param_index))
                             for b in L])
            M = self._matrix(rows, zero)
        else:
            raise ValueError("unknown basis %r" % (basis,))
        self._cache[key] = M
        return M

    def transition_inverse(self, basis):
        key = ("Minv", basis)
        if key not in self._cache:
            self._cache[key] = mat_inverse(self.transition(basis))
        return self._cache[key]

    def gram(self):
        """G[b, a] = <s_b, s_a> for the form with <q+_la, m_mu> = delta."""
        if "gram" not in self._cache:
            A = self.transition("s")
            self._cache["gram"] = A * self.transition_inverse("q+") * A.transpose()
        return self._cache["gram"]

    def character_matrix(self):
        """Rows: classes la, columns: characters mu, entry chi^mu(w_la) as Cyclo."""
        if "chars" not in self._cache:
            L = self.labels
            zero = Cyclo(0, self.r)
            P = SymbolicMatrix([[_cyclo(_p_coefficient(a, b, self.r), self.r) for b in L] for a in L], zero, L, L)
            S = SymbolicMatrix([[Cyclo(_s_coefficient(a, b), self.r) for b in L] for a in L], zero, L, L)
            self._cache["chars"] = P * mat_inverse(S)
        return self._cache["chars"]

    def coordinates(self, expansion):
        """Monomial coordinates (as a list) of a BasisExpansion over these labels."""
        M = self.transition(expansion.basis)
        zero = self.ring.zero()
        out = [zero] * len(self.labels)
        for la, c in expansion.coeffs.items():
            row = M.rows[self.position[la]]
            for j, x in enumerate(row):
                if not x.is_zero():
                    out[j] = out[j] + c * x
        return out

    def expand_coordinates(self, coords, basis):
        """Coefficients in ``basis`` of the function with monomial coordinates ``coords``."""
        Minv = self.transition_inverse(basis)
        zero = self.ring.zero()
        out = {}
        for j, la in enumerate(self.labels):
            acc = zero
            for i, c in enumerate(coords):
                if not c.is_zero():
                    x = Minv.rows[i][j]
                    if not x.is_zero():
                        acc = acc + c * x
            if not acc.is_zero():
                out[la] = acc
        return BasisExpansion(basis, out)


def _cyclo(d, r):
    raw = [0] * r
    for z, v in d.items():
        raw[z] += v
    return Cyclo(raw, r)


_SPACES = {}


def sym_space(n, r, ring=None):
    """Shared SymSpace instance for (n, r, ring)."""
    ring = ring if ring is not None else ParamRing(r, "one")
    key = (n, r, ring)
    if key not in _SPACES:
        _SPACES[key] = SymSpace(n, r, ring)
    return _SPACES[key]


@dataclass
class BasisExpansion:
    """Finite formal sum of basis elements; labels are r-partitions."""

    basis: str
    coeffs: dict

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError("unknown basis %r" % (self.basis,))
        self.coeffs = {k: v for k, v in self.coeffs.items() if not _iszero(v)}

    def rank(self):
        for la in self.coeffs:
            return sum(sum(p) for p in la)
        return None


def expand_in(f, basis, n, ring=None):
    """Coordinates of f (ColoredPolynomial or BasisExpansion) in ``basis``.

    A ColoredPolynomial must be homogeneous of degree n with at least n
    variables per color.
    """
    if isinstance(f, BasisExpansion):
        r = len(next(iter(f.coeffs))) if f.coeffs else ring.r
        space = sym_space(n, r, ring)
        return space.expand_coordinates(space.coordinates(f), basis)
    if f.m < n:
        raise ValueError("need at least n variables per color")
    space = sym_space(n, f.r, ring)
    conv = space.ring.const
    coords = []
    for la in space.labels:
        c = f.dominant_coefficient(la)
        coords.append(c if hasattr(c, "num") else conv(c))
    for e, c in f.terms.items():
        if sum(e) != n:
            raise ValueError("polynomial is not homogeneous of degree %d" % n)
    return space.expand_coordinates(coords, basis)


def scalar_product(f, g, ring=None):
    """Bilinear form with <q+_la, m_mu> = delta.

    Both arguments are BasisExpansions in one of the bases m, s, p, q+, q-.
    Labels are r-partitions, or symbols of one table, in which case the form
    is applied through the source r-partitions and different defects are
    orthogonal.
    """
    if not f.coeffs or not g.coeffs:
        return (ring or ParamRing(1)).zero()
    first = next(iter(f.coeffs))
    if hasattr(first, "source"):
        r = first.config.r
        ring = ring or ParamRing(r)
        acc = ring.zero()
        for d in sorted({s.defect for s in f.coeffs} & {s.defect for s in g.coeffs}):
            fd = BasisExpansion(f.basis, {s.source: c for s, c in f.coeffs.items() if s.defect == d})
            gd = BasisExpansion(g.basis, {s.source: c for s, c in g.coeffs.items() if s.defect == d})
            acc = acc + scalar_product(fd, gd, ring)
        return acc
    nf, ng = f.rank(), g.rank()
    if nf != ng:
        raise ValueError("rank mismatch")
    r = len(first)
    space = sym_space(nf, r, ring)
    fq = space.expand_coordinates(space.coordinates(f), "q+")
    gm = space.coordinates(g)
    acc = space.ring.zero()
    for la, c in fq.coeffs.items():
        x = gm[space.position[la]]
        if not x.is_zero():
            acc = acc + c * x
    return acc
