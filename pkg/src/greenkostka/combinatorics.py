"""Partitions, r-partitions and r x r partition arrays.

Partitions are plain tuples of positive integers in weakly decreasing order;
an r-partition is a tuple of r partitions.  An array Xi is a tuple of r rows,
each a tuple of r partitions.
"""

from collections import Counter
from functools import lru_cache
from itertools import product
from math import factorial

from .algebra import RationalFunction, UniPolynomial, zeta

__all__ = [
    "enumerate_partitions",
    "enumerate_compositions",
    "enumerate_multipartitions",
    "union_partitions",
    "dominance_leq",
    "multi_dominance_leq",
    "z_partition",
    "z_multipartition",
    "z_multipartition_t",
    "multipartition_size",
    "row_merge",
    "column_merge",
    "conjugate_partition",
    "n_statistic",
    "partition_to_str",
    "multipartition_to_str",
]


@lru_cache(maxsize=None)
def enumerate_partitions(n, max_part=None):
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in enumerate_partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_compositions(n, r):
    """Weak compositions of n into r parts, reverse lexicographic."""
    if r == 1:
        return ((n,),)
    out = []
    for first in range(n, -1, -1):
        for rest in enumerate_compositions(n - first, r - 1):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_multipartitions(n, r):
    """All r-partitions of total size n.

    Ordered by the size vector (reverse lexicographic), then by the
    components' partition orders from left to right.
    """
    out = []
    for sizes in enumerate_compositions(n, r):
        for comps in product(*(enumerate_partitions(k) for k in sizes)):
            out.append(tuple(comps))
    return tuple(out)


def multipartition_size(la):
    return sum(sum(p) for p in la)


def union_partitions(la, mu):
    return tuple(sorted(la + mu, reverse=True))


def dominance_leq(la, mu):
    """True iff la <= mu in dominance order."""
    if sum(la) != sum(mu):
        raise ValueError("dominance needs partitions of equal size")
    a = b = 0
    for i in range(max(len(la), len(mu))):
        a += la[i] if i < len(la) else 0
        b += mu[i] if i < len(mu) else 0
        if a > b:
            return False
    return True


def multi_dominance_leq(la, mu):
    """Componentwise dominance of r-partitions (component sizes must agree)."""
    return all(sum(a) == sum(b) and dominance_leq(a, b) for a, b in zip(la, mu))


def z_partition(la):
    z = 1
    for part, mult in Counter(la).items():
        z *= part ** mult * factorial(mult)
    return z


def z_multipartition(la, r):
    z = r ** sum(len(p) for p in la)
    for p in la:
        z *= z_partition(p)
    return z


def z_multipartition_t(la, r):
    """z_la * prod_k prod_j (1 - zeta^(k-1) t^(la^(k)_j))^(-1)."""
    den = UniPolynomial([1], r)
    for k, part in enumerate(la):
        c = zeta(r, k)
        for x in part:
            den = den * (1 - UniPolynomial.monomial(x, c, r))
    return RationalFunction(UniPolynomial([z_multipartition(la, r)], r), den)


def row_merge(xi):
    """Xi' with Xi'^(k) = union over j of xi^(k,j)."""
    return tuple(_union_all(row) for row in xi)


def column_merge(xi):
    """Xi'' with Xi''^(k) = union over i of xi^(i,k)."""
    r = len(xi)
    return tuple(_union_all(xi[i][k] for i in range(r)) for k in range(r))


def _union_all(parts):
    out = []
    for p in parts:
        out.extend(p)
    return tuple(sorted(out, reverse=True))


def conjugate_partition(la):
    if not la:
        return ()
    return tuple(sum(1 for x in la if x > i) for i in range(la[0]))


def n_statistic(la):
    """n(la) = sum (i-1) la_i."""
    return sum(i * x for i, x in enumerate(la))


def partition_to_str(la):
    return "(" + ",".join(map(str, la)) + ")" if la else "-"


def multipartition_to_str(la):
    return "(" + "; ".join(partition_to_str(p) for p in la) + ")"
