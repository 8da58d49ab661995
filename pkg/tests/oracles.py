"""Independent reference implementations used only by the tests.

Nothing here imports the package's symmetric-function, Kostka or character
code.  Coefficients are kept as plain dicts {t-exponent tuple: Fraction} or
as complex numbers so that agreement with the exact engine is meaningful.
"""

import cmath
from fractions import Fraction
from itertools import permutations, product
from math import factorial


# -- partitions ------------------------------------------------------------------


def partitions(n, max_part=None):
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def multipartitions(n, r):
    out = []
    for sizes in product(range(n + 1), repeat=r):
        if sum(sizes) == n:
            for combo in product(*(list(partitions(s)) for s in sizes)):
                out.append(tuple(combo))
    return out


# -- charge statistic Kostka polynomials -------------------------------------------


def ssyt(shape, content):
    """All semistandard tableaux of the given shape and content, as row lists."""
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    out = []

    def rec(k, filling, remaining):
        if k == len(cells):
            out.append([[filling[i, j] for j in range(row)] for i, row in enumerate(shape)])
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, filling[i, j - 1])
        if i > 0:
            lo = max(lo, filling[i - 1, j] + 1)
        for v in range(lo, len(content) + 1):
            if remaining[v - 1]:
                remaining[v - 1] -= 1
                filling[i, j] = v
                rec(k + 1, filling, remaining)
                remaining[v - 1] += 1
                del filling[i, j]

    rec(0, {}, list(content))
    return out


def reading_word(tableau):
    return [x for row in reversed(tableau) for x in row]


def charge(word):
    """Lascoux-Schutzenberger charge of a word with partition content."""
    word = list(word)
    total = 0
    positions = list(range(len(word)))
    while positions:
        letters = [word[p] for p in positions]
        top = max(letters)
        chosen = []
        index, idx_sum = 0, 0
        cur = len(positions)
        for v in range(1, top + 1):
            # scan leftwards cyclically from cur for letter v
            found = None
            for step in range(1, len(positions) + 1):
                k = (cur - step) % len(positions)
                if word[positions[k]] == v and k not in chosen:
                    found = k
                    if cur - step < 0 and v > 1:
                        index += 1
                    break
            if found is None:
                break
            chosen.append(found)
            idx_sum += index
            cur = found
        total += idx_sum
        positions = [p for k, p in enumerate(positions) if k not in chosen]
    return total


def kostka_charge(la, mu):
    """K_{la,mu}(t) as a dict {degree: count}."""
    out = {}
    for T in ssyt(la, mu):
        c = charge(reading_word(T))
        out[c] = out.get(c, 0) + 1
    return out


def n_stat(la):
    return sum(i * x for i, x in enumerate(la))


# -- symmetric group characters -------------------------------------------------------


def mn_character(la, rho):
    """chi^la(rho) by the Murnaghan-Nakayama rule on beta-sets."""
    if not rho:
        return 1 if sum(la) == 0 else 0
    k, rest = rho[0], rho[1:]
    L = len(la)
    beta = [la[i] + (L - 1 - i) for i in range(L)]
    total = 0
    for b in beta:
        if b - k >= 0 and b - k not in beta:
            new = sorted([x for x in beta if x != b] + [b - k], reverse=True)
            sign = (-1) ** sum(1 for x in beta if b - k < x < b)
            nu = tuple(x for x in (new[i] - (L - 1 - i) for i in range(L)) if x > 0)
            total += sign * mn_character(nu, rest)
    return total


def cycle_type(perm):
    seen, out = set(), []
    for i in range(len(perm)):
        if i in seen:
            continue
        length, j = 0, i
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        out.append(length)
    return tuple(sorted(out, reverse=True))


# -- brute-force wreath products ------------------------------------------------------


def root(r, k):
    return cmath.exp(2j * cmath.pi * k / r)


class Wreath:
    """W_{n,r} as monomial matrices: (perm, colors) sends e_i to zeta^c_i e_perm(i)."""

    def __init__(self, n, r):
        self.n, self.r = n, r
        self.elements = [(p, c) for p in permutations(range(n)) for c in product(range(r), repeat=n)]

    def mul(self, g, h):
        (p1, c1), (p2, c2) = g, h
        return (tuple(p1[p2[i]] for i in range(self.n)),
                tuple((c2[i] + c1[p2[i]]) % self.r for i in range(self.n)))

    def inv(self, g):
        p, c = g
        q = [0] * self.n
        for i in range(self.n):
            q[p[i]] = i
        return (tuple(q), tuple((-c[q[j]]) % self.r for j in range(self.n)))

    def class_type(self, g):
        """r-partition: cycles of color sum k go to component k."""
        p, c = g
        comps = [[] for _ in range(self.r)]
        seen = set()
        for i in range(self.n):
            if i in seen:
                continue
            length, total, j = 0, 0, i
            while j not in seen:
                seen.add(j)
                total += c[j]
                j = p[j]
                length += 1
            comps[total % self.r].append(length)
        return tuple(tuple(sorted(x, reverse=True)) for x in comps)

    def matrix(self, g):
        p, c = g
        M = [[0] * self.n for _ in range(self.n)]
        for i in range(self.n):
            M[p[i]][i] = root(self.r, c[i])
        return M

    def induced_character(self, la):
        """chi^la from Ind of (psi_k on block k) x (chi^la(k) of the Young factor)."""
        blocks, start = [], 0
        for part in la:
            size = sum(part)
            blocks.append(range(start, start + size))
            start += size
        block_of = {i: k for k, b in enumerate(blocks) for i in b}

        def phi(h):
            p, c = h
            if any(block_of[p[i]] != block_of[i] for i in range(self.n)):
                return None
            val = 1
            for i in range(self.n):
                val *= root(self.r, block_of[i] * c[i])
            for k, b in enumerate(blocks):
                idx = list(b)
                sub = tuple(idx.index(p[i]) for i in idx)
                val *= mn_character(la[k], cycle_type(sub))
            return val

        h_order = self.r ** self.n
        for part in la:
            h_order *= factorial(sum(part))
        values = {}
        for g in self.elements:
            ct = self.class_type(g)
            if ct in values:
                continue
            acc = 0
            for x in self.elements:
                v = phi(self.mul(self.mul(x, g), self.inv(x)))
                if v is not None:
                    acc += v
            values[ct] = acc / h_order
        return values


def char_poly(M):
    """Coefficients of det(t - M), low degree first, by Faddeev-LeVerrier."""
    n = len(M)
    I = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def mm(A, B):
        return [[sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)] for i in range(n)]

    coeffs = [1]
    Mk = [[0] * n for _ in range(n)]
    c = 1
    for k in range(1, n + 1):
        Mk = [[Mk[i][j] + c * I[i][j] for j in range(n)] for i in range(n)]
        AM = mm(M, Mk)
        c = -sum(AM[i][i] for i in range(n)) / k
        Mk = AM
        coeffs.append(c)
    return list(reversed(coeffs))


# -- the kernel Omega by direct expansion -------------------------------------------------


def _pmul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def omega_coefficient(a, b, r, nparams, zero_t=False):
    """Coefficient of x^a y^b in prod_k prod_ij (1 - t_k x_i^(k) y_j^(k+1)) / (1 - x_i^(k) y_j^(k)).

    ``a`` and ``b`` are color-major lists of exponent lists (one list per color).
    The result is a dict {parameter exponent tuple: int}; with ``nparams == 1``
    all t_k are the same t.  Variables with exponent zero in the target
    monomial are set to zero, which does not change the coefficient.
    """
    xs = [(k, i) for k in range(r) for i in range(len(a[k])) if a[k][i]]
    ys = [(k, j) for k in range(r) for j in range(len(b[k])) if b[k][j]]
    target_x = {v: a[v[0]][v[1]] for v in xs}
    target_y = {v: b[v[0]][v[1]] for v in ys}
    # state: (x exponents, y exponents) -> coefficient dict
    state = {(tuple(0 for _ in xs), tuple(0 for _ in ys)): {(0,) * nparams: 1}}

    def ok(ex, ey):
        return all(e <= target_x[v] for e, v in zip(ex, xs)) and all(e <= target_y[v] for e, v in zip(ey, ys))

    def apply(factor_terms):
        nonlocal state
        new = {}
        for (ex, ey), c in state.items():
            for (dx, dy), f in factor_terms:
                ex2 = tuple(p + q for p, q in zip(ex, dx))
                ey2 = tuple(p + q for p, q in zip(ey, dy))
                if not ok(ex2, ey2):
                    continue
                prod_c = _pmul(c, f)
                cur = new.get((ex2, ey2), {})
                for e, v in prod_c.items():
                    cur[e] = cur.get(e, 0) + v
                new[ex2, ey2] = {e: v for e, v in cur.items() if v}
        state = {k: v for k, v in new.items() if v}

    for xi, (k, i) in enumerate(xs):
        for yj, (k2, j) in enumerate(ys):
            unit_x = tuple(1 if q == xi else 0 for q in range(len(xs)))
            unit_y = tuple(1 if q == yj else 0 for q in range(len(ys)))
            if k2 == k:
                # 1 / (1 - x y) = sum_m (x y)^m
                limit = min(target_x[k, i], target_y[k2, j])
                apply([((tuple(m * u for u in unit_x), tuple(m * u for u in unit_y)), {(0,) * nparams: 1})
                       for m in range(limit + 1)])
            if k2 == (k + 1) % r and not zero_t:
                texp = [0] * nparams
                texp[k % nparams] = 1
                apply([(((0,) * len(xs), (0,) * len(ys)), {(0,) * nparams: 1}),
                       ((unit_x, unit_y), {tuple(texp): -1})])
    final = state.get((tuple(target_x[v] for v in xs), tuple(target_y[v] for v in ys)), {})
    return final


def dominant(la, m):
    """Color-major exponent lists of the dominant monomial of an r-partition."""
    return [list(p) + [0] * (m - len(p)) for p in la]
