"""Kostka functions by block factorization of the matrix Omega.

The equation P- Lam tP+ = Omega is solved class by class, where the classes
are the similarity classes of the symbol table and the diagonal blocks of P+
and P- are prescribed: the identity in the multi-parameter case and
t^a(C) I in the one-parameter (modified) case.  Omega comes either from the
power-sum kernel and the characters of W_{n',r} (multi-parameter), or from
the graded-character formula with det(t - w) (one-parameter).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

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
from .combinatorics import enumerate_multipartitions, z_multipartition, z_partition
from .symbols import build_table, f_of_defect
from .symfunc import ParamRing, sym_space
from .wreath import det_reflection, gw_polynomial

__all__ = [
    "GuardError",
    "AlgorithmBreakdown",
    "OmegaIntegrityError",
    "DEFAULT_GUARDS",
    "check_guard",
    "OmegaMatrix",
    "KostkaResult",
    "delta_matrix",
    "z_xi",
    "z_pair",
    "power_sum_kernel",
    "omega_multi",
    "omega_tilde",
    "block_solve",
    "kostka_one_param",
    "kostka_multi_param",
    "invert_modification",
]


class GuardError(ValueError):
    """The instance is larger than the configured guard allows."""


class AlgorithmBreakdown(ArithmeticError):
    """A diagonal block of the factorization is singular."""


class OmegaIntegrityError(ArithmeticError):
    """Omega fails a structural property it must have (a bug signal)."""


DEFAULT_GUARDS = {"multi": (3, 3), "one": (8, 3)}


def check_guard(n, r, mode, guards=None):
    max_n, max_r = (guards or DEFAULT_GUARDS)[mode]
    if n > max_n or r > max_r:
        raise GuardError(
            "instance n=%d, r=%d exceeds the %s-parameter guard (n <= %d, r <= %d)" % (n, r, mode, max_n, max_r)
        )


# -- the power-sum kernel -----------------------------------------------------


def delta_matrix(m, r):
    """Delta(t^m) with entries (1/r) sum_k t_k^m zeta^((k-1)(a-a'))."""
    rows = [[MultiRationalFunction(_delta_entry(a, b, m, r)) for b in range(r)] for a in range(r)]
    return SymbolicMatrix(rows, ParamRing(r, "multi").zero())


def _delta_entry(a, b, m, r):
    terms = {}
    for k in range(r):
        e = [0] * r
        e[k] = m
        terms[tuple(e)] = zeta(r, k * (a - b)) * Fraction(1, r)
    return MultiPolynomial(terms, r, r)


def z_xi(xi, r):
    """z_Xi^-1 prod over cells (a,a') and parts x of (delta_{aa'} - zeta^(a-1) Delta_{aa'}(t^x))."""
    z = 1
    out = MultiPolynomial.constant(1, r, r)
    for a in range(r):
        for b in range(r):
            part = xi[a][b]
            z *= r ** len(part) * z_partition(part)
            for x in part:
                f = -_delta_entry(a, b, x, r) * zeta(r, a)
                if a == b:
                    f = f + 1
                out = out * f
    return MultiRationalFunction(out * Fraction(1, z))


def _splits(part, r):
    """All ways to distribute the parts of a partition into r labeled sub-partitions."""
    values = sorted(set(part), reverse=True)
    counts = [part.count(v) for v in values]
    per_value = [list(_compositions(c, r)) for c in counts]
    out = []
    for choice in product(*per_value):
        bins = []
        for b in range(r):
            parts = []
            for v, comp in zip(values, choice):
                parts.extend([v] * comp[b])
            bins.append(tuple(parts))
        out.append(tuple(bins))
    return out


def _compositions(n, r):
    if r == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, r - 1):
            yield (first,) + rest


def _arrays(la, r):
    """Arrays Xi with row merge la, grouped by column merge."""
    out = {}
    for rows in product(*(_splits(p, r) for p in la)):
        cols = tuple(tuple(sorted((x for a in range(r) for x in rows[a][b]), reverse=True)) for b in range(r))
        out.setdefault(cols, []).append(rows)
    return out


_Z_CACHE = {}


def z_pair(la, mu, r):
    """Sum of z_xi over arrays Xi with row merge la and column merge mu."""
    key = (la, mu, r)
    if key not in _Z_CACHE:
        arrays = _arrays(la, r).get(mu, [])
        acc = ParamRing(r, "multi").zero()
        for xi in arrays:
            acc = acc + z_xi(xi, r)
        _Z_CACHE[key] = acc
    return _Z_CACHE[key]


def power_sum_kernel(n, r):
    """Z with Z[la, mu] the coefficient of p_la(x) conj(p_mu)(y) in the degree-n part of Omega.

    The x-side partition is the column merge of the arrays, so
    Z[la, mu] = z_pair(mu, la).
    """
    labels = enumerate_multipartitions(n, r)
    rows = [[z_pair(b, a, r) for b in labels] for a in labels]
    return SymbolicMatrix(rows, ParamRing(r, "multi").zero(), labels, labels)


# -- Omega --------------------------------------------------------------------


@dataclass
class OmegaMatrix:
    table: object
    matrix: SymbolicMatrix
    mode: str


def _block_labels(table):
    """Per defect: (table indices, n', source labels)."""
    out = []
    for d in table.defects:
        idx = table.defect_block(d)
        if idx:
            nprime = table.n - f_of_defect(d, table.config)
            out.append((d, idx, nprime))
    return out


def omega_multi(table, guards=None):
    """omega_{la,mu} = sum chi^la(w_nu) z_nu^-1 (Z^-1)_{nu,ka} z_ka^-1 conj chi^mu(w_ka), per defect."""
    r = table.config.r
    ring = ParamRing(r, "multi")
    zero = ring.zero()
    N = len(table)
    rows = [[zero] * N for _ in range(N)]
    for d, idx, nprime in _block_labels(table):
        check_guard(nprime, r, "multi", guards)
        space = sym_space(nprime, r)
        X = space.character_matrix()
        labels = space.labels
        try:
            Zinv = mat_inverse(power_sum_kernel(nprime, r))
        except ZeroDivisionError:
            raise OmegaIntegrityError("power-sum kernel is singular") from None
        h = [Fraction(1, z_multipartition(nu, r)) for nu in labels]
        # W = H Z^-1 H conj(X)
        L = len(labels)
        HZH = [[Zinv.rows[i][j] * (h[i] * h[j]) for j in range(L)] for i in range(L)]
        Xc = [[ring.const(X.rows[i][j].conjugate()) for j in range(L)] for i in range(L)]
        Xt = [[ring.const(X.rows[j][i]) for j in range(L)] for i in range(L)]
        M1 = _matmul(HZH, Xc, zero)
        W = _matmul(Xt, M1, zero)
        pos = {la: k for k, la in enumerate(labels)}
        for i in idx:
            for j in idx:
                rows[i][j] = W[pos[table.symbols[i].source]][pos[table.symbols[j].source]]
    return OmegaMatrix(table, SymbolicMatrix(rows, zero, table.symbols, table.symbols), "multi")


def _matmul(A, B, zero):
    n, k = len(A), len(B)
    m = len(B[0]) if B else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = zero
            for l in range(k):
                a, b = A[i][l], B[l][j]
                if not a.is_zero() and not b.is_zero():
                    acc = acc + a * b
            row.append(acc)
        out.append(row)
    return out


def omega_tilde(table, guards=None):
    """G_W(t) t^n' |W'|^-1 sum_w chi^la(w) conj chi^mu(w) / det(t - w), per defect block.

    Entries must be integer polynomials.  The class sum is formed over a
    common denominator and divided exactly.
    """
    r = table.config.r
    ring = ParamRing(r, "one")
    zero = ring.zero()
    N = len(table)
    rows = [[zero] * N for _ in range(N)]
    G = gw_polynomial(table.n, r)
    G = UniPolynomial(list(G.coeffs), r)
    for d, idx, nprime in _block_labels(table):
        check_guard(nprime, r, "one", guards)
        space = sym_space(nprime, r)
        X = space.character_matrix()
        labels = space.labels
        dets = [det_reflection(nu, r) for nu in labels]
        common = UniPolynomial([1], r)
        for p in dets:
            common = common * p.exact_div(common.gcd(p))
        tn = UniPolynomial.monomial(nprime, 1, r)
        weights = [(tn * common.exact_div(p)) * Fraction(1, z_multipartition(nu, r))
                   for nu, p in zip(labels, dets)]
        pos = {la: k for k, la in enumerate(labels)}
        cache = {}
        for i in idx:
            a = pos[table.symbols[i].source]
            for j in idx:
                b = pos[table.symbols[j].source]
                if (a, b) not in cache:
                    acc = UniPolynomial([], r)
                    for k in range(len(labels)):
                        c = X.rows[k][a] * X.rows[k][b].conjugate()
                        if not c.is_zero():
                            acc = acc + weights[k] * c
                    q, rem = (acc * G).divmod(common)
                    if not rem.is_zero() or not q.is_integral():
                        raise OmegaIntegrityError("omega integrality violated at %s, %s"
                                                  % (table.symbols[i], table.symbols[j]))
                    cache[a, b] = RationalFunction(UniPolynomial(list(q.coeffs), r))
                rows[i][j] = cache[a, b]
    return OmegaMatrix(table, SymbolicMatrix(rows, zero, table.symbols, table.symbols), "one")


# -- block factorization ------------------------------------------------------


@dataclass
class KostkaResult:
    """Solution of P- Lam tP+ = Omega with prescribed diagonal blocks.

    In the one-parameter case P+ and P- are the modified Kostka matrices K~+
    and K~-, and ``k_plus``/``k_minus`` hold the unmodified ones.
    """

    table: object
    omega: SymbolicMatrix
    p_minus: SymbolicMatrix
    p_plus: SymbolicMatrix
    lam: SymbolicMatrix
    diag_spec: str
    k_plus: SymbolicMatrix = None
    k_minus: SymbolicMatrix = None
    notes: dict = field(default_factory=dict)

    def residual_is_zero(self):
        return (self.p_minus * self.lam * self.p_plus.transpose() - self.omega).is_zero()


def _sub(A, rows, cols):
    return [[A[i][j] for j in cols] for i in rows]


def _mat(rows, zero):
    return SymbolicMatrix(rows, zero) if rows else SymbolicMatrix([], zero, [], [])


def block_solve(omega, classes, deltas, zero):
    """Solve P- Lam tP+ = Omega class by class.

    ``omega`` is a SymbolicMatrix, ``classes`` a list of (start, stop)
    intervals in increasing order and ``deltas`` the scalar diagonal block
    of P+- for each class.  Returns (P-, Lam, P+) as SymbolicMatrices.
    """
    N = omega.shape[0]
    Om = omega.rows
    one = zero.one()
    Pm = [[zero] * N for _ in range(N)]
    Pp = [[zero] * N for _ in range(N)]
    Lam = [[zero] * N for _ in range(N)]
    blocks = [list(range(a, b)) for a, b in classes]
    lam_inv = {}
    for c, C in enumerate(blocks):
        dinv = deltas[c].inverse() if hasattr(deltas[c], "inverse") else one / deltas[c]
        for i in C:
            Pm[i][i] = deltas[c]
            Pp[i][i] = deltas[c]

        def corrected(R, S, c=c):
            # Omega[R, S] - sum_{c'' < c} P-[R, C''] Lam_C'' tP+[S, C'']
            out = [[Om[i][j] for j in S] for i in R]
            for c2 in range(c):
                C2 = blocks[c2]
                A = _sub(Pm, R, C2)
                if all(x.is_zero() for row in A for x in row):
                    continue
                B = _sub(Pp, S, C2)
                if all(x.is_zero() for row in B for x in row):
                    continue
                M = _matmul(_matmul(A, _sub(Lam, C2, C2), zero), _transpose(B), zero)
                out = [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(out, M)]
            return out

        D = corrected(C, C)
        D = [[x * dinv * dinv for x in row] for row in D]
        for x, i in enumerate(C):
            for y, j in enumerate(C):
                Lam[i][j] = D[x][y]
        try:
            Linv = mat_inverse(SymbolicMatrix(D, zero)).rows
        except ZeroDivisionError:
            raise AlgorithmBreakdown("algorithm breakdown at class %d" % c) from None
        lam_inv[c] = Linv
        LinvT = _transpose(Linv)
        later = [i for C2 in blocks[c + 1:] for i in C2]
        if not later:
            continue
        Rm = corrected(later, C)
        Rm = _matmul(Rm, Linv, zero)
        Rp = _transpose(corrected(C, later))
        Rp = _matmul(Rp, LinvT, zero)
        for x, i in enumerate(later):
            for y, j in enumerate(C):
                Pm[i][j] = Rm[x][y] * dinv
                Pp[i][j] = Rp[x][y] * dinv
    labels = omega.row_labels
    mk = lambda rows: SymbolicMatrix(rows, zero, labels, labels, list(classes))
    return mk(Pm), mk(Lam), mk(Pp)


def _transpose(A):
    return [list(col) for col in zip(*A)] if A else []


def invert_modification(K, a_values):
    """Map t^a(L') K(1/t) in either direction (the operation is an involution)."""
    rows = [[x.invert_variable(a_values[j]) if not x.is_zero() else x for j, x in enumerate(row)]
            for row in K.rows]
    return SymbolicMatrix(rows, K.zero, K.row_labels, K.col_labels, K.blocks)


def kostka_one_param(n, config, defects, tie_break="default", guards=None, table=None):
    """Modified Kostka functions K~+- from Omega~ with diagonal blocks t^a(C) I."""
    table = table or build_table(n, config, defects, tie_break)
    om = omega_tilde(table, guards)
    ring = ParamRing(config.r, "one")
    t = ring.t()
    deltas = [t ** table.a_values[a] for a, _ in table.classes]
    Pm, Lam, Pp = block_solve(om.matrix, table.classes, deltas, ring.zero())
    res = KostkaResult(table, om.matrix, p_minus=Pm, p_plus=Pp, lam=Lam, diag_spec="t^a")
    res.k_plus = invert_modification(Pp, table.a_values)
    res.k_minus = invert_modification(Pm, table.a_values)
    res.notes["polynomial"] = all(x.is_polynomial() for M in (Pp, Pm) for row in M.rows for x in row)
    return res


def kostka_multi_param(n, config, defects, tie_break="default", guards=None, table=None):
    """Kostka functions K+- in Q(zeta)(t_1..t_r) from Omega with identity diagonal blocks."""
    check_guard(n, config.r, "multi", guards)
    table = table or build_table(n, config, defects, tie_break)
    om = omega_multi(table, guards)
    ring = ParamRing(config.r, "multi")
    deltas = [ring.one() for _ in table.classes]
    Pm, Lam, Pp = block_solve(om.matrix, table.classes, deltas, ring.zero())
    res = KostkaResult(table, om.matrix, p_minus=Pm, p_plus=Pp, lam=Lam, diag_spec="identity",
                       k_plus=Pp, k_minus=Pm)
    return res
