"""Green functions of Sp_4 in the Y-basis, their values at q and the congruence check."""

from greenkostka.green import congruence_check, green_sp


def main(q=3, rprime=7):
    g = green_sp(2, q=q)
    values = g.evaluate(q)
    for (d, w), row in g.coefficients.items():
        print("defect %s, w type %s" % (d, w))
        for sym, c in row.items():
            print("  %-16s %-28s %s" % (sym, c, values[d, w][sym]))
    report = congruence_check(2, q, rprime, table=g)
    print("congruence mod %d between q = %d and q^%d: %s" % (rprime, q, rprime, "passed" if report.passed else "FAILED"))


if __name__ == "__main__":
    main()
