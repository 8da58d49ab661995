import pytest
import sympy

from greenkostka.algebra import RationalFunction
from greenkostka.combinatorics import enumerate_multipartitions, multi_dominance_leq
from greenkostka.symfunc import (
    BasisExpansion,
    ColoredPolynomial,
    ParamRing,
    expand_in,
    kostka_number,
    monomial_sym,
    power_sum,
    power_sum_colored,
    q_pm,
    q_series,
    scalar_product,
    schur_sym,
    sym_space,
)
from greenkostka.symbols import symbol_of, symplectic_defects

from kernel_checks import (
    as_dict,
    check_cauchy,
    check_power_sum_kernel,
    check_schur_kernel,
    check_specialized_kernel,
)
from oracles import kostka_charge, multipartitions


def var(r, m, k, i):
    return ColoredPolynomial.variable(r, m, k, i)


def test_schur_examples():
    assert schur_sym(((1,), ()), 2) == var(2, 2, 0, 0) + var(2, 2, 0, 1)
    assert schur_sym(((2,), ()), 2) == monomial_sym(((2,), ()), 2) + monomial_sym(((1, 1), ()), 2)
    assert monomial_sym(((), ()), 2) == ColoredPolynomial.constant(2, 2, 1)


def test_too_few_variables():
    with pytest.raises(ValueError):
        schur_sym(((1, 1, 1),), 2)


def test_power_sum_examples():
    x1, x2 = var(2, 1, 0, 0), var(2, 1, 1, 0)
    assert power_sum_colored(1, 1, 1, 2) == x1 + x2
    assert power_sum_colored(1, 2, 1, 2) == x1 - x2
    assert power_sum_colored(3, 1, 2, 1) == var(1, 2, 0, 0) ** 3 + var(1, 2, 0, 1) ** 3


def test_q_series_examples():
    t = RationalFunction.gen(2)
    series = q_series(1, "+", 1, 1, 2, t)
    assert series[0] == ColoredPolynomial.constant(2, 1, 1)
    assert series[1] == var(2, 1, 0, 0) - var(2, 1, 1, 0) * t
    t1 = RationalFunction.gen()
    q1 = q_series(1, "+", 1, 2, 1, t1)[1]
    assert q1 == power_sum(((1,),), 2) * (1 - t1)
    assert q_pm(((1,),), "+", 2, [t1]) == q_pm(((1,),), "-", 2, [t1]) == q1


def test_q_pm_of_empty_is_one():
    assert q_pm(((), ()), "+", 2, [1, 1]) == ColoredPolynomial.constant(2, 2, 1)


@pytest.mark.parametrize("r, m, k, sign", [(2, 2, 1, "+"), (2, 2, 2, "-"), (2, 2, 2, "+"), (3, 2, 1, "-"),
                                           (3, 2, 3, "+"), (4, 2, 2, "-")])
def test_q_series_matches_interpolation_formula(r, m, k, sign):
    """Compare with 1 + sum_i (u x_i - t u y_i)/(1 - u x_i) prod_{j != i} (x_i - t y_j)/(x_i - x_j)."""
    t, u = sympy.symbols("t u")
    X = [[sympy.Symbol("x%d_%d" % (c, i)) for i in range(m)] for c in range(r)]
    other = (k - 2) % r if sign == "+" else k % r
    x, y = X[k - 1], X[other]
    gen = 1
    for i in range(m):
        term = (u * x[i] - t * u * y[i]) / (1 - u * x[i])
        for j in range(m):
            if j != i:
                term *= (x[i] - t * y[j]) / (x[i] - x[j])
        gen += term
    max_degree = 3
    series = sympy.series(sympy.together(gen), u, 0, max_degree + 1).removeO()
    got = q_series(k, sign, max_degree, m, r, RationalFunction.gen())
    flat = [v for row in X for v in row]
    for s in range(max_degree + 1):
        expected = sympy.expand(sympy.cancel(series.coeff(u, s)))
        mine = 0
        for e, c in got[s].terms.items():
            coeff = sum(sympy.Rational(str(a.rational())) * t ** i for i, a in enumerate(c.as_polynomial().coeffs)) \
                if hasattr(c, "as_polynomial") else c
            mine += coeff * sympy.prod(v ** p for v, p in zip(flat, e))
        assert sympy.expand(mine - expected) == 0


@pytest.mark.parametrize("la", [((2,), (1,)), ((1, 1), ()), ((), (2, 1))])
def test_q_pm_specialization(la):
    multi = ParamRing(2, "multi")
    one = ParamRing(2, "one")
    a = q_pm(la, "+", 3, [multi.t(0), multi.t(1)])
    b = q_pm(la, "+", 3, [one.t(), one.t()])
    assert a.map_coefficients(lambda c: multi.specialize_one(c + multi.zero())) == b


@pytest.mark.parametrize("la", [((2, 1), ()), ((1,), (1, 1)), ((), (3,))])
def test_explicit_polynomials_are_color_symmetric(la):
    assert schur_sym(la, 3).is_color_symmetric()
    assert power_sum(la, 3).is_color_symmetric()
    assert q_pm(la, "-", 3, [RationalFunction.gen(2)] * 2).is_color_symmetric()


@pytest.mark.parametrize("n", range(0, 7))
def test_kostka_numbers_match_tableau_count(n):
    from greenkostka.combinatorics import enumerate_partitions

    for la in enumerate_partitions(n):
        for mu in enumerate_partitions(n):
            assert kostka_number(la, mu) == sum(kostka_charge(la, mu).values())


@pytest.mark.parametrize("n, r, mode", [(2, 2, "multi"), (3, 2, "multi"), (2, 3, "multi"), (3, 1, "one"),
                                        (2, 2, "one")])
def test_transition_matrices_match_explicit_polynomials(n, r, mode):
    ring = ParamRing(r, mode)
    ts = [ring.t(k) for k in range(r)]
    space = sym_space(n, r, ring)
    for basis, build in [("s", lambda la: schur_sym(la, n)), ("p", lambda la: power_sum(la, n)),
                         ("q+", lambda la: q_pm(la, "+", n, ts)), ("q-", lambda la: q_pm(la, "-", n, ts))]:
        M = space.transition(basis)
        for i, la in enumerate(space.labels):
            f = build(la)
            for j, mu in enumerate(space.labels):
                assert M.rows[i][j] == ring.zero() + f.dominant_coefficient(mu)


def test_space_labels_cover_multipartitions():
    assert sorted(sym_space(3, 2).labels) == sorted(multipartitions(3, 2))


def test_expand_in_examples():
    ring = ParamRing(2)
    e = expand_in(schur_sym(((2,), ()), 2), "m", 2, ring)
    assert e.coeffs == {((2,), ()): ring.one(), ((1, 1), ()): ring.one()}
    for la in enumerate_multipartitions(2, 2):
        assert expand_in(monomial_sym(la, 2), "m", 2, ring).coeffs == {la: ring.one()}


@pytest.mark.parametrize("n, r", [(2, 2), (3, 2), (2, 3)])
def test_power_sums_expand_to_character_columns(n, r):
    from greenkostka.wreath import character_table

    ring = ParamRing(r)
    table = character_table(n, r)
    for la in table.classes:
        e = expand_in(power_sum(la, n), "s", n, ring)
        for chi in table.characters:
            value = e.coeffs.get(chi, ring.zero())
            assert value == ring.const(table.value(chi, la))


def test_expand_rejects_inhomogeneous():
    f = schur_sym(((1,), ()), 2) + ColoredPolynomial.constant(2, 2, 1)
    with pytest.raises(ValueError):
        expand_in(f, "m", 1, ParamRing(2))


@pytest.mark.parametrize("n, r", [(2, 2), (3, 2), (2, 3), (3, 1)])
def test_schur_to_monomial_is_unitriangular(n, r):
    space = sym_space(n, r)
    M = space.transition("s")
    for i, la in enumerate(space.labels):
        assert M.rows[i][i] == space.ring.one()
        for j, mu in enumerate(space.labels):
            if not M.rows[i][j].is_zero():
                assert multi_dominance_leq(mu, la)


@pytest.mark.parametrize("mode", ["one", "multi"])
def test_scalar_product_duality(mode):
    ring = ParamRing(2, mode)
    labels = enumerate_multipartitions(2, 2)
    for a in labels:
        for b in labels:
            one = ring.one() if a == b else ring.zero()
            assert scalar_product(BasisExpansion("q+", {a: ring.one()}), BasisExpansion("m", {b: ring.one()}), ring) == one
            assert scalar_product(BasisExpansion("m", {a: ring.one()}), BasisExpansion("q-", {b: ring.one()}), ring) == one


@pytest.mark.parametrize("n, r", [(2, 2), (3, 2), (2, 3), (3, 1)])
def test_schur_functions_orthonormal_at_zero(n, r):
    G = sym_space(n, r).gram()
    for i in range(len(G.rows)):
        for j in range(len(G.rows)):
            assert G.rows[i][j](0) == (1 if i == j else 0)


def test_scalar_product_on_symbols_separates_defects():
    config, _ = symplectic_defects(1)
    ring = ParamRing(2)
    a = symbol_of(((1,), ()), (1, 0), config)
    b = symbol_of(((), ()), (3, 0), config)
    f = BasisExpansion("s", {a: ring.one()})
    g = BasisExpansion("s", {b: ring.one()})
    assert scalar_product(f, g, ring).is_zero()
    assert scalar_product(g, g, ring) == ring.one()
    assert scalar_product(f, f, ring) == sym_space(1, 2).gram().rows[0][0]


def test_scalar_product_rank_mismatch():
    ring = ParamRing(2)
    with pytest.raises(ValueError):
        scalar_product(BasisExpansion("m", {((1,), ()): ring.one()}), BasisExpansion("m", {((2,), ()): ring.one()}), ring)


@pytest.mark.parametrize("n, r", [(1, 1), (2, 1), (3, 1), (1, 2), (2, 2), (3, 2), (1, 3), (2, 3)])
def test_cauchy_identity(n, r):
    assert check_cauchy(n, r) == []
    assert check_cauchy(n, r, mode="one") == []


@pytest.mark.parametrize("n, r", [(1, 2), (2, 2), (1, 3), (2, 3)])
def test_power_sum_kernel_identity(n, r):
    assert check_power_sum_kernel(n, r) == []


@pytest.mark.parametrize("n, r", [(1, 2), (2, 2), (3, 2), (2, 3)])
def test_specialized_kernel_is_diagonal(n, r):
    assert check_specialized_kernel(n, r) == []


@pytest.mark.parametrize("n, r", [(1, 1), (3, 1), (2, 2), (3, 2), (2, 3)])
def test_schur_kernel(n, r):
    assert check_schur_kernel(n, r) == []


def test_as_dict_helper():
    assert as_dict(RationalFunction.gen() * 3) == {(1,): 3}
    assert as_dict(0) == {}
