"""Kostka polynomials K_{la,mu}(t) for S_n, computed as the r = 1 case."""

import sys

from greenkostka.lusztig_shoji import kostka_one_param
from greenkostka.symbols import SymbolConfig


def main(n=4):
    config = SymbolConfig(1, 0, (0,))
    res = kostka_one_param(n, config, [(0,)])
    labels = [str(s.source[0]) for s in res.table.symbols]
    width = max(len(x) for x in labels)
    for label, row in zip(labels, res.k_plus.rows):
        cells = ", ".join(str(x) for x in row)
        print("%s  %s" % (label.ljust(width), cells))


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 4)
