"""r-symbols: construction from r-partitions, shift, a-values, similarity and ordered tables.

A symbol is stored in a canonical form: the base row lengths are
(m+1,...,m+1, m,...,m) with alpha copies of m+1 and m equal to the size of
the encoded r-partition, after which the defect correction is applied.  Any
shifted form describes the same symbol; ``parse_rows`` accepts them all.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .combinatorics import enumerate_multipartitions, multipartition_size

__all__ = [
    "SymbolConfig",
    "Symbol",
    "SymbolTable",
    "canonical_defect",
    "defect_reachable",
    "aligned_defect",
    "f_of_defect",
    "lambda_zero",
    "symbol_of",
    "parse_rows",
    "rpartition_of",
    "shift",
    "theta_map",
    "a_value",
    "similar",
    "build_table",
    "symplectic_defects",
    "all_defects",
    "TIE_BREAKS",
]


@dataclass(frozen=True)
class SymbolConfig:
    r: int
    e: int
    s: tuple
    alpha: int = 0

    def __post_init__(self):
        object.__setattr__(self, "s", tuple(self.s))
        if self.r < 1:
            raise ValueError("r must be positive")
        if len(self.s) != self.r:
            raise ValueError("s must have r entries")
        if self.e < 0 or any(x < 0 or x > self.e for x in self.s):
            raise ValueError("need 0 <= s_k <= e")
        if not 0 <= self.alpha < self.r:
            raise ValueError("need 0 <= alpha < r")

    def base_lengths(self, m):
        return tuple(m + 1 if k < self.alpha else m for k in range(self.r))

    def to_json(self):
        return {"r": self.r, "e": self.e, "s": list(self.s), "alpha": self.alpha}


def canonical_defect(d):
    d = tuple(d)
    lo = min(d)
    return tuple(x - lo for x in d)


def defect_reachable(d, config):
    return sum(d) % config.r == config.alpha % config.r


def aligned_defect(d, config):
    """The minimal d' >= 0 with base_lengths(m) + d' in the class of d."""
    d = canonical_defect(d)
    if len(d) != config.r:
        raise ValueError("defect must have r entries")
    if not defect_reachable(d, config):
        raise ValueError("defect %r is not reachable for alpha=%d" % (d, config.alpha))
    ind = [1 if k < config.alpha else 0 for k in range(config.r)]
    c = max(i - x for i, x in zip(ind, d))
    return tuple(x - i + c for x, i in zip(d, ind))


def f_of_defect(d, config):
    dp = aligned_defect(d, config)
    return sum(x * (x - 1) // 2 if k < config.alpha else x * (x + 1) // 2 for k, x in enumerate(dp))


@dataclass(frozen=True, eq=False)
class Symbol:
    config: SymbolConfig
    rows: tuple
    defect: tuple
    rank: int
    source: tuple

    def key(self):
        return (self.config, self.defect, self.source)

    def __eq__(self, other):
        if not isinstance(other, Symbol):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def entries(self):
        return sorted((x for row in self.rows for x in row), reverse=True)

    def length(self):
        return sum(len(row) for row in self.rows)

    def __str__(self):
        return "[" + " | ".join(",".join(map(str, row)) for row in self.rows) + "]"

    def to_json(self):
        return {
            "config": self.config.to_json(),
            "rows": [list(x) for x in self.rows],
            "defect": list(self.defect),
            "rank": self.rank,
            "source": [list(p) for p in self.source],
        }


def lambda_zero(lengths, config):
    """Base symbol with k-th row s_k+(m_k-1)e, ..., s_k+e, s_k."""
    return tuple(
        tuple(config.s[k] + (lengths[k] - 1 - j) * config.e for j in range(lengths[k]))
        for k in range(config.r)
    )


def _raw_rows(la, dp, m, config):
    e, s = config.e, config.s
    base = config.base_lengths(m)
    rows = []
    for k in range(config.r):
        part = la[k]
        if len(part) > base[k]:
            raise ValueError("too few rows")
        row = [s[k] + (base[k] - 1 - j) * e + (part[j] if j < len(part) else 0) + dp[k] * e for j in range(base[k])]
        row += [s[k] + (dp[k] - 1 - j) * e for j in range(dp[k])]
        rows.append(tuple(row))
    return tuple(rows)


def symbol_of(la, d, config):
    """The symbol of defect d encoding the r-partition la."""
    la = tuple(tuple(p) for p in la)
    if len(la) != config.r:
        raise ValueError("r-partition must have r components")
    d = canonical_defect(d)
    dp = aligned_defect(d, config)
    n1 = multipartition_size(la)
    rows = _raw_rows(la, dp, n1, config)
    return Symbol(config, rows, d, n1 + f_of_defect(d, config), la)


def parse_rows(rows, config):
    """Recover (defect, r-partition) from rows in any shifted form."""
    rows = tuple(tuple(r) for r in rows)
    if len(rows) != config.r:
        raise ValueError("symbol must have r rows")
    e, s = config.e, config.s
    for k, row in enumerate(rows):
        if any(row[i] - row[i + 1] < e for i in range(len(row) - 1)) or (row and row[-1] < s[k]):
            raise ValueError("malformed symbol row %r" % (row,))
    lengths = tuple(len(r) for r in rows)
    d = canonical_defect(lengths)
    dp = aligned_defect(d, config)
    base = [lengths[k] - dp[k] for k in range(config.r)]
    ms = {base[k] - (1 if k < config.alpha else 0) for k in range(config.r)}
    if len(ms) != 1 or min(ms) < 0:
        raise ValueError("row lengths do not match the configuration")
    la = []
    for k, row in enumerate(rows):
        tail = row[base[k]:]
        if tail != tuple(s[k] + (dp[k] - 1 - j) * e for j in range(dp[k])):
            raise ValueError("malformed symbol tail %r" % (row,))
        part = [row[j] - dp[k] * e - s[k] - (base[k] - 1 - j) * e for j in range(base[k])]
        if any(x < 0 for x in part):
            raise ValueError("malformed symbol row %r" % (row,))
        la.append(tuple(x for x in part if x))
    return d, tuple(la)


def rpartition_of(sym, config=None):
    if isinstance(sym, Symbol):
        return parse_rows(sym.rows, sym.config)[1]
    return parse_rows(sym, config)[1]


def shift(sym):
    cfg = sym.config
    rows = tuple(tuple(x + cfg.e for x in row) + (cfg.s[k],) for k, row in enumerate(sym.rows))
    return Symbol(cfg, rows, sym.defect, sym.rank, sym.source)


def theta_map(la, d, config):
    """Embed la in P_{n',r} into P_{n,r}, n = n' + f(d), by adding staircases."""
    dp = aligned_defect(d, config)
    out = []
    for k, part in enumerate(la):
        top = dp[k] + (0 if k < config.alpha else 1)
        length = max(len(part), top)
        new = [(part[j] if j < len(part) else 0) + max(top - 1 - j, 0) for j in range(length)]
        out.append(tuple(x for x in new if x))
    return tuple(out)


def _pair_min_sum(entries):
    xs = sorted(entries, reverse=True)
    # entry at position i (0-based, decreasing) is the min of i pairs with larger-or-equal entries
    return sum(i * x for i, x in enumerate(xs))


@lru_cache(maxsize=None)
def _base_pair_sum(total, config):
    if (total - config.alpha) % config.r:
        raise ValueError("entry count incompatible with configuration")
    m = (total - config.alpha) // config.r
    return _pair_min_sum([x for row in lambda_zero(config.base_lengths(m), config) for x in row])


def a_value(sym, ordered=False):
    """Sum of min over pairs of entry positions, minus the base symbol's sum.

    ``ordered=True`` counts ordered pairs, which doubles the value.
    """
    ents = [x for row in sym.rows for x in row]
    a = _pair_min_sum(ents) - _base_pair_sum(len(ents), sym.config)
    return 2 * a if ordered else a


def _entries_at(sym, total):
    cfg = sym.config
    extra = total - sym.length()
    if extra % cfg.r:
        raise ValueError("entry counts are not shift-compatible")
    steps = extra // cfg.r
    ents = [x + steps * cfg.e for row in sym.rows for x in row]
    for k in range(cfg.r):
        ents += [cfg.s[k] + j * cfg.e for j in range(steps)]
    return tuple(sorted(ents, reverse=True))


def similar(s1, s2):
    total = max(s1.length(), s2.length())
    return _entries_at(s1, total) == _entries_at(s2, total)


TIE_BREAKS = ("default", "reverse")


@dataclass
class SymbolTable:
    config: SymbolConfig
    n: int
    defects: tuple
    symbols: list
    classes: list
    a_values: list
    tie_break: str = "default"
    index: dict = field(default_factory=dict)

    def __post_init__(self):
        self.index = {s: i for i, s in enumerate(self.symbols)}

    def __len__(self):
        return len(self.symbols)

    def class_of(self, i):
        for c, (a, b) in enumerate(self.classes):
            if a <= i < b:
                return c
        raise IndexError(i)

    def class_members(self, c):
        a, b = self.classes[c]
        return list(range(a, b))

    def defect_block(self, d):
        return [i for i, s in enumerate(self.symbols) if s.defect == d]

    def cuspidal_symbol(self, d):
        return symbol_of(tuple(() for _ in range(self.config.r)), d, self.config)

    def to_json(self):
        return {
            "config": self.config.to_json(),
            "n": self.n,
            "defects": [list(d) for d in self.defects],
            "tie_break": self.tie_break,
            "symbols": [
                {"symbol": str(s), "rows": [list(x) for x in s.rows], "defect": list(s.defect),
                 "rank": s.rank, "source": [list(p) for p in s.source], "a": a}
                for s, a in zip(self.symbols, self.a_values)
            ],
            "classes": [list(c) for c in self.classes],
        }


def build_table(n, config, defects, tie_break="default"):
    """All symbols of rank n with defect in ``defects``, in a legal total order.

    Larger a-value comes first and every similarity class is a contiguous
    interval.  Ties between classes of equal a-value are broken by the
    smallest member defect and then the entry multiset, lexicographically;
    within a class members are sorted by defect and then r-partition order.
    ``tie_break="reverse"`` reverses both tie-breaking comparisons, which is
    another legal order.
    """
    if tie_break not in TIE_BREAKS:
        raise ValueError("unknown tie-break %r" % (tie_break,))
    defects = sorted({canonical_defect(d) for d in defects})
    syms = []
    for d in defects:
        f = f_of_defect(d, config)
        if f > n:
            continue
        for pos, la in enumerate(enumerate_multipartitions(n - f, config.r)):
            syms.append((d, pos, symbol_of(la, d, config)))
    if not syms:
        return SymbolTable(config, n, tuple(defects), [], [], [], tie_break)
    total = max(s.length() for _, _, s in syms)
    groups = {}
    for d, pos, s in syms:
        groups.setdefault(_entries_at(s, total), []).append((d, pos, s))
    rev = tie_break == "reverse"
    ordered_classes = []
    for ms, members in groups.items():
        members.sort(key=lambda x: (x[0], x[1]), reverse=rev)
        a = a_value(members[0][2])
        first = max(m[0] for m in members) if rev else min(m[0] for m in members)
        ordered_classes.append((a, first, ms, members))
    ordered_classes.sort(key=lambda c: (c[1], c[2]), reverse=rev)
    ordered_classes.sort(key=lambda c: -c[0])
    symbols, classes, avals = [], [], []
    for a, _, _, members in ordered_classes:
        start = len(symbols)
        for _, _, s in members:
            symbols.append(s)
            avals.append(a)
        classes.append((start, len(symbols)))
    return SymbolTable(config, n, tuple(defects), symbols, classes, avals, tie_break)


def symplectic_defects(n, bad_characteristic=False):
    config = SymbolConfig(2, 4, (0, 2), 1) if bad_characteristic else SymbolConfig(2, 2, (0, 1), 1)
    out = []
    d = 1
    while True:
        found = False
        for dd in ((d, 0), (0, d)):
            if f_of_defect(dd, config) <= n:
                out.append(dd)
                found = True
        if not found and f_of_defect((d, 0), config) > n and f_of_defect((0, d), config) > n:
            break
        d += 2
    return config, sorted(set(out))


def all_defects(n, config):
    """Every reachable canonical defect with f(d) <= n."""
    out = []
    bound = 1
    # f grows quadratically in max(d), so a bound of about 2*sqrt(n)+r suffices
    while bound * (bound - 1) // 2 <= n + config.r:
        bound += 1
    bound += config.r
    for d in product(range(bound + 1), repeat=config.r):
        if min(d) != 0 or not defect_reachable(d, config):
            continue
        if f_of_defect(d, config) <= n:
            out.append(d)
    return sorted(out)
