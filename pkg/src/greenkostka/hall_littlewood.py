"""Hall-Littlewood functions P, Q attached to a symbol table, by Gram-Schmidt.

Every symbol Lambda of defect d stands for s_Lambda = Theta(s_la), where la
is its source r-partition.  The bilinear form vanishes across defects, so all
computations run inside one defect block using the Gram matrix of the
corresponding r-partition space.
"""

from dataclasses import dataclass, field

from .algebra import SymbolicMatrix, mat_inverse
from .symfunc import BasisExpansion, ParamRing, sym_space

__all__ = [
    "HLBasis",
    "DegenerateGramBlock",
    "construct_hl",
    "q_functions",
    "kostka_via_transition",
    "modified_kostka",
    "verify_characterization",
    "symbol_gram",
]


class DegenerateGramBlock(ArithmeticError):
    pass


def symbol_gram(table, ring):
    """G[i][j] = <s_i, s_j> over the table (a dict of nonzero entries)."""
    out = {}
    r = table.config.r
    for d in table.defects:
        idx = table.defect_block(d)
        if not idx:
            continue
        nprime = sum(sum(p) for p in table.symbols[idx[0]].source)
        space = sym_space(nprime, r, ring)
        G = space.gram()
        pos = [space.position[table.symbols[i].source] for i in idx]
        for a, i in zip(pos, idx):
            for b, j in zip(pos, idx):
                x = G.rows[a][b]
                if not x.is_zero():
                    out[i, j] = x
    return out


@dataclass
class HLBasis:
    """P+ and P- in the s-basis, as sparse rows {table index: coefficient}."""

    table: object
    ring: ParamRing
    p_plus: list
    p_minus: list
    gram_blocks: dict = field(default_factory=dict)
    gram_inverses: dict = field(default_factory=dict)
    gram: dict = field(default_factory=dict, repr=False)

    @property
    def mode(self):
        return self.ring.mode

    def expansion(self, which, i):
        rows = {"P+": self.p_plus, "P-": self.p_minus}[which]
        syms = self.table.symbols
        return BasisExpansion("s", {syms[j]: c for j, c in rows[i].items()})

    def pair(self, u, v):
        """<u, v> for sparse s-coordinate rows u, v."""
        return _pair(self.gram, u, v, self.ring.zero())


def _pair(G, u, v, zero):
    acc = zero
    for i, a in u.items():
        for j, b in v.items():
            g = G.get((i, j))
            if g is not None:
                acc = acc + a * g * b
    return acc


def _combine(zero, terms):
    """Sum of c * row over (c, row) pairs, as a sparse row."""
    out = {}
    for c, row in terms:
        if c.is_zero():
            continue
        for j, x in row.items():
            out[j] = out[j] + c * x if j in out else c * x
    return {j: x for j, x in out.items() if not x.is_zero()}


def construct_hl(table, mode="one"):
    """Two-sided Gram-Schmidt in increasing table order.

    P+_L = s_L + sum over earlier classes C and L' in C of d+ P+_L', with
    <P+_L, P-_L''> = 0 for every earlier L''; similarly for P-.
    """
    ring = ParamRing(table.config.r, mode)
    zero, one = ring.zero(), ring.one()
    G = symbol_gram(table, ring)
    N = len(table)
    p_plus, p_minus = [None] * N, [None] * N
    hl = HLBasis(table, ring, p_plus, p_minus, gram=G)
    for c, (a, b) in enumerate(table.classes):
        for i in range(a, b):
            d = table.symbols[i].defect
            up, um = [(one, {i: one})], [(one, {i: one})]
            for c2 in range(c):
                members = [j for j in table.class_members(c2) if table.symbols[j].defect == d]
                if not members:
                    continue
                Binv = _block_inverse(hl, c2, d, members)
                vp = [_pair(G, {i: one}, p_minus[j], zero) for j in members]
                vm = [_pair(G, p_plus[j], {i: one}, zero) for j in members]
                k = len(members)
                # u B = -v  and  B w = -v'
                for x, j in enumerate(members):
                    cp = zero
                    cm = zero
                    for y in range(k):
                        cp = cp - vp[y] * Binv[y][x]
                        cm = cm - Binv[x][y] * vm[y]
                    up.append((cp, p_plus[j]))
                    um.append((cm, p_minus[j]))
            p_plus[i] = _combine(zero, up)
            p_minus[i] = _combine(zero, um)
    for c in range(len(table.classes)):
        for d in {table.symbols[j].defect for j in table.class_members(c)}:
            members = [j for j in table.class_members(c) if table.symbols[j].defect == d]
            _block_inverse(hl, c, d, members)
    return hl


def _block_inverse(hl, c, d, members):
    key = (c, d)
    if key not in hl.gram_inverses:
        zero = hl.ring.zero()
        rows = [[_pair(hl.gram, hl.p_plus[i], hl.p_minus[j], zero) for j in members] for i in members]
        B = SymbolicMatrix(rows, zero, members, members)
        try:
            Binv = mat_inverse(B)
        except ZeroDivisionError:
            raise DegenerateGramBlock("degenerate Gram block at class %d" % c) from None
        hl.gram_blocks[key] = B
        hl.gram_inverses[key] = Binv
    return hl.gram_inverses[key].rows


def q_functions(hl):
    """Q+ and Q- in the s-basis: Q+_L = sum b_{L,L'} P+_L', Q-_L = sum b_{L',L} P-_L'."""
    zero = hl.ring.zero()
    table = hl.table
    q_plus, q_minus = [None] * len(table), [None] * len(table)
    for (c, d), Binv in hl.gram_inverses.items():
        members = hl.gram_blocks[c, d].row_labels
        for x, i in enumerate(members):
            q_plus[i] = _combine(zero, [(Binv.rows[x][y], hl.p_plus[j]) for y, j in enumerate(members)])
            q_minus[i] = _combine(zero, [(Binv.rows[y][x], hl.p_minus[j]) for y, j in enumerate(members)])
    return q_plus, q_minus


def _dense(rows, N, zero):
    return [[row.get(j, zero) for j in range(N)] for row in rows]


def kostka_via_transition(hl):
    """K+ and K- with s_L = sum_L' K_{L,L'} P_L'."""
    zero = hl.ring.zero()
    N = len(hl.table)
    labels = hl.table.symbols
    out = []
    for rows in (hl.p_plus, hl.p_minus):
        U = SymbolicMatrix(_dense(rows, N, zero), zero, labels, labels)
        K = mat_inverse(U) if N else U
        K.blocks = list(hl.table.classes)
        out.append(K)
    return tuple(out)


def modified_kostka(K, a_values):
    """K~_{L,L'}(t) = t^a(L') K_{L,L'}(1/t)."""
    rows = [[x.invert_variable(a_values[j]) if not x.is_zero() else x for j, x in enumerate(row)]
            for row in K.rows]
    return SymbolicMatrix(rows, K.zero, K.row_labels, K.col_labels, K.blocks)


def verify_characterization(hl):
    """Check the triangularity conditions of P+ and P- in the s- and q-bases.

    Returns a list of (symbol string, passed, note) triples.
    """
    table = hl.table
    N = len(table)
    zero = hl.ring.zero()
    cls = [table.class_of(i) for i in range(N)]
    report = []
    qcoords = {}
    for sign in "+-":
        rows = hl.p_plus if sign == "+" else hl.p_minus
        for i in range(N):
            qcoords[sign, i] = _q_expansion(hl, rows[i], "q" + sign)
    for i in range(N):
        ok, notes = True, []
        for sign in "+-":
            rows = hl.p_plus if sign == "+" else hl.p_minus
            row = rows[i]
            if row.get(i) != hl.ring.one():
                ok = False
                notes.append("s-diagonal of P%s is not 1" % sign)
            for j in row:
                if j != i and (j > i or cls[j] == cls[i]):
                    ok = False
                    notes.append("P%s has s-support outside the allowed set" % sign)
            for j in qcoords[sign, i]:
                if not (cls[j] == cls[i] or j > i):
                    ok = False
                    notes.append("P%s has q-support on an earlier class" % sign)
        report.append((str(table.symbols[i]), ok, "; ".join(notes)))
    # the class-diagonal q-blocks must be nonsingular
    for c, (a, b) in enumerate(table.classes):
        for sign in "+-":
            M = SymbolicMatrix([[qcoords[sign, i].get(j, zero) for j in range(a, b)] for i in range(a, b)], zero)
            try:
                mat_inverse(M)
            except ZeroDivisionError:
                report.append(("class %d" % c, False, "singular q%s diagonal block" % sign))
    return report


def _q_expansion(hl, row, basis):
    """Sparse q-basis coordinates (over table indices) of an s-coordinate row."""
    table = hl.table
    out = {}
    by_defect = {}
    for j, c in row.items():
        by_defect.setdefault(table.symbols[j].defect, {})[j] = c
    for d, part in by_defect.items():
        j0 = next(iter(part))
        nprime = sum(sum(p) for p in table.symbols[j0].source)
        space = sym_space(nprime, table.config.r, hl.ring)
        f = BasisExpansion("s", {table.symbols[j].source: c for j, c in part.items()})
        g = space.expand_coordinates(space.coordinates(f), basis)
        lookup = {table.symbols[j].source: j for j in table.defect_block(d)}
        for la, c in g.coeffs.items():
            out[lookup[la]] = c
    return out
