"""Class data and character tables of W_{n,r} = S_n x| (Z/rZ)^n."""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .algebra import Cyclo, RationalFunction, SymbolicMatrix, UniPolynomial, zeta
from .combinatorics import enumerate_multipartitions, multipartition_to_str, z_multipartition
from .symfunc import sym_space

__all__ = [
    "ClassDatum",
    "CharacterTable",
    "class_data",
    "character_table",
    "det_reflection",
    "det_value",
    "group_order",
    "poincare",
    "nstar",
    "gw_polynomial",
    "graded_multiplicity",
]


@dataclass(frozen=True)
class ClassDatum:
    """The conjugacy class of type ``type``; z is the centralizer order."""

    type: tuple
    z: int
    class_size: int


@dataclass
class CharacterTable:
    """``values[i][j]`` is chi^{characters[i]} evaluated on the class of type classes[j]."""

    n: int
    r: int
    characters: tuple
    classes: tuple
    values: list

    def value(self, character, cls):
        return self.values[self.characters.index(character)][self.classes.index(cls)]

    def as_matrix(self):
        """X with X[class, character] = chi^character(w_class)."""
        rows = [[self.values[i][j] for i in range(len(self.characters))] for j in range(len(self.classes))]
        return SymbolicMatrix(rows, Cyclo(0, self.r), self.classes, self.characters)

    def degrees(self):
        ident = self.classes.index(_identity_type(self.n, self.r))
        return [row[ident].rational() for row in self.values]

    def to_json(self):
        return {
            "n": self.n,
            "r": self.r,
            "characters": [multipartition_to_str(x) for x in self.characters],
            "classes": [multipartition_to_str(x) for x in self.classes],
            "values": [[v.to_json() for v in row] for row in self.values],
        }


def _identity_type(n, r):
    return (((1,) * n),) + ((),) * (r - 1)


def group_order(n, r):
    return r ** n * factorial(n)


def class_data(n, r):
    order = group_order(n, r)
    out = []
    for la in enumerate_multipartitions(n, r):
        z = z_multipartition(la, r)
        out.append(ClassDatum(la, z, order // z))
    return out


def character_table(n, r):
    """Character table from the Frobenius formula p_la = sum_mu chi^mu(w_la) s_mu."""
    space = sym_space(n, r)
    X = space.character_matrix()
    labels = tuple(space.labels)
    values = [[X.rows[j][i] for j in range(len(labels))] for i in range(len(labels))]
    return CharacterTable(n, r, labels, labels, values)


def det_reflection(la, r):
    """det(t - w_la) on the reflection representation: prod (t^part - zeta^(k-1))."""
    out = UniPolynomial([1], r)
    for k, part in enumerate(la):
        c = zeta(r, k)
        for x in part:
            out = out * (UniPolynomial.monomial(x, 1, r) - c)
    return out


def det_value(la, r):
    """det_V(w_la): a cycle of length m with color product zeta^c has determinant (-1)^(m-1) zeta^c."""
    out = Cyclo(1, r)
    for k, part in enumerate(la):
        for x in part:
            out = out * zeta(r, k) * (-1) ** (x - 1)
    return out


def poincare(n, r):
    out = UniPolynomial([1], 1)
    for i in range(1, n + 1):
        out = out * UniPolynomial([1] * (i * r), 1)
    return out


def nstar(n, r):
    return r * n * (n + 1) // 2 - n


def gw_polynomial(n, r):
    """(t-1)^n t^N* P_W(t), which equals t^N* prod_i (t^(ir) - 1)."""
    out = UniPolynomial.monomial(nstar(n, r), 1, 1)
    for i in range(1, n + 1):
        out = out * (UniPolynomial.monomial(i * r, 1, 1) - 1)
    return out


def graded_multiplicity(f, n, r):
    """Graded multiplicity of the class function f in the coinvariant algebra.

    ``f`` lists values on the classes of ``class_data(n, r)`` in order.
    Computes (t-1)^n P_W(t) |W|^-1 sum_w det_V(w) f(w) / det_V(t - w).
    """
    data = class_data(n, r)
    if len(f) != len(data):
        raise ValueError("class function has wrong length")
    acc = RationalFunction(UniPolynomial([], r))
    for d, val in zip(data, f):
        val = Cyclo(val, r) if isinstance(val, (int, Fraction)) else val
        if val.is_zero():
            continue
        num = UniPolynomial([det_value(d.type, r) * val * Fraction(1, d.z)], r)
        acc = acc + RationalFunction(num, det_reflection(d.type, r))
    pre = UniPolynomial([-1, 1], 1) ** n * poincare(n, r)
    out = acc * RationalFunction(UniPolynomial(list(pre.coeffs), r))
    if not out.is_polynomial() or not out.as_polynomial().is_integral():
        raise ValueError("not a character")
    return out.as_polynomial()
