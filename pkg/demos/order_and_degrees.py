"""Exploratory reports: dependence on the total order, degrees of K, class counts.

None of these are asserted by the package; they print what the computation shows.
"""

from greenkostka.hall_littlewood import construct_hl, kostka_via_transition
from greenkostka.symbols import SymbolConfig, all_defects, build_table, symplectic_defects

R3 = SymbolConfig(3, 1, (0, 0, 0), 1)


def kostka_by_symbol(table):
    Kp, Km = kostka_via_transition(construct_hl(table))
    pairs = [(a, b) for a in table.symbols for b in table.symbols]
    idx = table.index
    return {(a, b): (Kp.rows[idx[a]][idx[b]], Km.rows[idx[a]][idx[b]]) for a, b in pairs}


def cases():
    for n in (1, 2, 3):
        yield "sp n=%d" % n, n, symplectic_defects(n)
        yield "sp char 2 n=%d" % n, n, symplectic_defects(n, True)
    for n in (1, 2):
        yield "r=3 n=%d" % n, n, (R3, all_defects(n, R3))


def main():
    print("order dependence (default against reverse tie-break)")
    for name, n, (config, defects) in cases():
        a = kostka_by_symbol(build_table(n, config, defects))
        b = kostka_by_symbol(build_table(n, config, defects, "reverse"))
        print("  %-16s %s" % (name, "equal" if a == b else "DIFFERENT"))
    print("degree of K+ against a(L') - a(L), off-diagonal nonzero entries")
    for name, n, (config, defects) in cases():
        table = build_table(n, config, defects)
        Kp, _ = kostka_via_transition(construct_hl(table))
        total, other = 0, []
        for i, row in enumerate(Kp.rows):
            for j, x in enumerate(row):
                if i != j and not x.is_zero():
                    total += 1
                    gap = table.a_values[j] - table.a_values[i]
                    deg = x.as_polynomial().degree() if x.is_polynomial() else None
                    if deg != gap:
                        other.append((str(table.symbols[i]), str(table.symbols[j]), str(x), gap))
        print("  %-16s %d of %d entries have degree a(L') - a(L)" % (name, total - len(other), total))
        for entry in other[:3]:
            print("      K[%s, %s] = %s, a-gap %d" % entry)
    print("similarity classes against symbols")
    for name, n, (config, defects) in cases():
        table = build_table(n, config, defects)
        print("  %-16s %d symbols in %d classes" % (name, len(table), len(table.classes)))


if __name__ == "__main__":
    main()
