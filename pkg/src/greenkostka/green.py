"""Green functions from modified Kostka functions.

For GL_n these are the classical Green polynomials Q_{mu,nu}(t).  For Sp_2n
the Green function attached to a defect d and a class type w of W_{n',2} is
written in the basis Y_L' indexed by the symbols of the table.
"""

from dataclasses import dataclass, field

from .algebra import MultiRationalFunction, RationalFunction, SymbolicMatrix, UniPolynomial
from .combinatorics import enumerate_multipartitions, enumerate_partitions
from .lusztig_shoji import kostka_one_param
from .symbols import SymbolConfig, a_value, build_table, f_of_defect, symplectic_defects
from .symfunc import ParamRing, sym_space
from .wreath import gw_polynomial

__all__ = [
    "GreenTable",
    "CongruenceReport",
    "InvalidPrime",
    "character_block_matrix",
    "x_matrix",
    "green_gl",
    "green_sp",
    "congruence_check",
]


class InvalidPrime(ValueError):
    pass


def character_block_matrix(table, ring=None):
    """X(0): entry chi^mu(w_la) at (L, L') when L = (d, la), L' = (d, mu), zero across defects."""
    r = table.config.r
    ring = ring or ParamRing(r, "one")
    zero = ring.zero()
    N = len(table)
    rows = [[zero] * N for _ in range(N)]
    for d in table.defects:
        idx = table.defect_block(d)
        if not idx:
            continue
        space = sym_space(table.n - f_of_defect(d, table.config), r)
        X = space.character_matrix()
        for i in idx:
            a = space.position[table.symbols[i].source]
            for j in idx:
                b = space.position[table.symbols[j].source]
                rows[i][j] = ring.const(X.rows[a][b])
    return SymbolicMatrix(rows, zero, table.symbols, table.symbols)


def x_matrix(K, table):
    """X = X(0) K: the generalized Green functions, p_L = sum X_{L,L'} P_L'."""
    mode = "multi" if isinstance(K.zero, MultiRationalFunction) else "one"
    ring = ParamRing(table.config.r, mode)
    return character_block_matrix(table, ring) * K


@dataclass
class GreenTable:
    """Green functions of one group.

    ``gl`` holds the matrix Q_{mu,nu}(t) for GL_n.  ``coefficients`` maps
    (defect, w type) to {symbol: polynomial}, the Y-basis expansion for Sp_2n.
    """

    table: object
    gl: SymbolicMatrix = None
    coefficients: dict = field(default_factory=dict)
    q: int = None

    def evaluate(self, q):
        """Integer (or rational) values of every Y-coefficient at t = q."""
        out = {}
        for key, row in self.coefficients.items():
            out[key] = {sym: _value(c, q) for sym, c in row.items()}
        return out

    def to_json(self, entry_json=None):
        entry_json = entry_json or (lambda x: x.to_json())
        data = {"table": self.table.to_json()}
        if self.gl is not None:
            data["gl"] = {
                "row_labels": [list(la) for la in self.gl.row_labels],
                "col_labels": [list(la) for la in self.gl.col_labels],
                "rows": [[entry_json(x) for x in row] for row in self.gl.rows],
            }
        if self.coefficients:
            entries = []
            for (d, w), row in self.coefficients.items():
                item = {
                    "defect": list(d),
                    "w_type": [list(p) for p in w],
                    "coefficients": [{"symbol": str(s), "source": [list(p) for p in s.source],
                                      "defect": list(s.defect), "value": entry_json(c)} for s, c in row.items()],
                }
                if self.q is not None:
                    item["values_at_q"] = [_json_number(_value(c, self.q)) for c in row.values()]
                entries.append(item)
            data["sp"] = entries
            if self.q is not None:
                data["q"] = self.q
        return data


def _value(c, q):
    v = c(q)
    return v.rational() if hasattr(v, "rational") else v


def _json_number(x):
    return x.numerator if x.denominator == 1 else str(x)


def green_gl(n, guards=None):
    """Q_{mu,nu}(t) = sum_la chi^la(w_mu) K~_{la,nu}(t)."""
    config = SymbolConfig(1, 0, (0,))
    table = build_table(n, config, [(0,)])
    res = kostka_one_param(n, config, [(0,)], guards=guards, table=table)
    Kt = res.p_plus
    X = character_block_matrix(table)
    Q = X * Kt
    parts = [s.source[0] for s in table.symbols]
    order = list(enumerate_partitions(n))
    perm = [parts.index(p) for p in order]
    rows = [[Q.rows[i][j] for j in perm] for i in perm]
    return GreenTable(table, gl=SymbolicMatrix(rows, Q.zero, order, order))


def green_sp(n, bad_characteristic=False, w_type=None, q=None, guards=None):
    """Y-basis coefficients t^-a(L_cusp(d)) sum_L chi^L(w) K~_{L,L'}(t) per defect and class type."""
    config, defects = symplectic_defects(n, bad_characteristic)
    table = build_table(n, config, defects)
    res = kostka_one_param(n, config, defects, guards=guards, table=table)
    Kt = res.p_plus
    t = RationalFunction(UniPolynomial([0, 1], 2))
    out = {}
    for d in table.defects:
        idx = table.defect_block(d)
        if not idx:
            continue
        nprime = n - f_of_defect(d, config)
        space = sym_space(nprime, 2)
        X = space.character_matrix()
        shift = t ** (-a_value(table.cuspidal_symbol(d)))
        types = [w_type] if w_type is not None else list(enumerate_multipartitions(nprime, 2))
        for w in types:
            if w not in space.position:
                continue
            row_w = X.rows[space.position[w]]
            coeffs = {}
            for j in idx:
                acc = Kt.zero
                for i in idx:
                    chi = row_w[space.position[table.symbols[i].source]]
                    k = Kt.rows[i][j]
                    if not chi.is_zero() and not k.is_zero():
                        acc = acc + k * chi
                acc = acc * shift
                if not acc.is_zero():
                    coeffs[table.symbols[j]] = acc
            out[d, w] = coeffs
    return GreenTable(table, coefficients=out, q=q)


@dataclass
class CongruenceReport:
    q: int
    rprime: int
    entries: list
    passed: bool


def _is_prime(p):
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def congruence_check(n, q, rprime, bad_characteristic=False, table=None):
    """Check value(q) = value(q^rprime) mod rprime for every Y-coefficient.

    ``table`` may be a precomputed GreenTable.  Each entry of the report is
    (defect, w type, symbol string, value at q, value at q^rprime, ok).
    """
    if not _is_prime(rprime):
        raise InvalidPrime("invalid prime %d: not a prime" % rprime)
    order = gw_polynomial(n, 2)(q ** rprime).rational()
    if order % rprime == 0:
        raise InvalidPrime("invalid prime %d: divides |G^F| at q^%d" % (rprime, rprime))
    table = table or green_sp(n, bad_characteristic)
    entries = []
    passed = True
    for (d, w), row in table.coefficients.items():
        for sym, c in row.items():
            a, b = _value(c, q), _value(c, q ** rprime)
            ok = a.denominator == 1 and b.denominator == 1 and (a - b) % rprime == 0
            passed = passed and ok
            entries.append((d, w, str(sym), a, b, ok))
    return CongruenceReport(q, rprime, entries, passed)
