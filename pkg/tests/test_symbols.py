import pytest

from greenkostka.combinatorics import enumerate_multipartitions, enumerate_partitions, n_statistic
from greenkostka.symbols import (
    SymbolConfig,
    a_value,
    all_defects,
    build_table,
    canonical_defect,
    f_of_defect,
    lambda_zero,
    parse_rows,
    rpartition_of,
    shift,
    similar,
    symbol_of,
    symplectic_defects,
    theta_map,
)

SP = SymbolConfig(2, 2, (0, 1), 1)
SP2 = SymbolConfig(2, 4, (0, 2), 1)
R3 = [SymbolConfig(3, 1, (0, 0, 0), alpha) for alpha in range(3)]
GL = SymbolConfig(1, 0, (0,))


def test_config_validation():
    with pytest.raises(ValueError):
        SymbolConfig(2, 1, (0, 2), 1)
    with pytest.raises(ValueError):
        SymbolConfig(2, 2, (0, 1), 2)


@pytest.mark.parametrize("lengths, rows", [((2, 1), ((2, 0), (1,))), ((1, 0), ((0,), ())), ((0, 0), ((), ()))])
def test_lambda_zero(lengths, rows):
    assert lambda_zero(lengths, SP) == rows


def test_shift_example():
    s = symbol_of(((1,), ()), (1, 0), SP)
    assert s.rows == ((3, 0), (1,))
    assert shift(s).rows == ((5, 2, 0), (3, 1))


def test_shift_preserves_base_family():
    s = symbol_of(((), ()), (1, 0), SP)
    for _ in range(3):
        lengths = tuple(len(r) for r in s.rows)
        assert s.rows == lambda_zero(lengths, SP)
        s = shift(s)
        assert s.rows == lambda_zero(tuple(m + 1 for m in lengths), SP)


@pytest.mark.parametrize("d, f", [((1, 0), 0), ((3, 0), 1), ((0, 1), 3), ((5, 0), 6)])
def test_f_of_defect(d, f):
    assert f_of_defect(d, SP) == f


@pytest.mark.parametrize("la, d, rows", [
    (((1,), ()), (1, 0), ((3, 0), (1,))),
    (((), (1,)), (1, 0), ((2, 0), (2,))),
    (((), ()), (3, 0), ((4, 2, 0), ())),
])
def test_symbol_of_examples(la, d, rows):
    s = symbol_of(la, d, SP)
    assert s.rows == rows
    assert rpartition_of(s) == la
    assert rpartition_of(rows, SP) == la


def test_rpartition_of_base_symbol_is_empty():
    assert rpartition_of(lambda_zero((3, 2), SP), SP) == ((), ())


def test_rpartition_of_rejects_malformed_rows():
    with pytest.raises(ValueError):
        rpartition_of(((3, 2), (1,)), SP)


@pytest.mark.parametrize("config, n", [(c, n) for c in [SP, SP2, GL] for n in range(5)]
                         + [(c, n) for c in R3 for n in range(4)])
def test_bijection(config, n):
    for d in all_defects(n, config):
        n1 = n - f_of_defect(d, config)
        for la in enumerate_multipartitions(n1, config.r):
            s = symbol_of(la, d, config)
            assert s.rank == n
            assert parse_rows(s.rows, config) == (canonical_defect(d), la)
            assert parse_rows(shift(shift(s)).rows, config) == (canonical_defect(d), la)


@pytest.mark.parametrize("la, d, expected", [
    (((), ()), (3, 0), ((1,), ())),
    (((1,), (1,)), (3, 0), ((2,), (1,))),
    (((2,), (1,)), (1, 0), ((2,), (1,))),
])
def test_theta_examples(la, d, expected):
    assert theta_map(la, d, SP) == expected


@pytest.mark.parametrize("d", [(1, 0), (3, 0), (0, 1)])
def test_theta_is_injective_and_size_correct(d):
    f = f_of_defect(d, SP)
    for n1 in range(4):
        images = [theta_map(la, d, SP) for la in enumerate_multipartitions(n1, 2)]
        assert len(set(images)) == len(images)
        assert all(sum(sum(p) for p in x) == n1 + f for x in images)


def test_a_value_examples():
    assert a_value(symbol_of(((1,), ()), (1, 0), SP)) == 0
    assert a_value(symbol_of(((), (1,)), (1, 0), SP)) == 1
    assert a_value(symbol_of(((), ()), (1, 0), SP)) == 0


def test_a_value_ordered_convention_doubles():
    s = symbol_of(((), (1,)), (1, 0), SP)
    assert a_value(s, ordered=True) == 2 * a_value(s)


@pytest.mark.parametrize("n", range(0, 7))
def test_a_value_is_n_statistic_for_r1(n):
    for la in enumerate_partitions(n):
        assert a_value(symbol_of((la,), (0,), GL)) == n_statistic(la)


def test_similarity_examples():
    s = symbol_of(((1,), ()), (1, 0), SP)
    u = symbol_of(((), (1,)), (1, 0), SP)
    assert similar(s, shift(s)) and similar(s, s)
    assert not similar(s, u)


@pytest.mark.parametrize("config", [SP, SP2] + R3)
def test_shift_invariance(config):
    for d in all_defects(3, config):
        for la in enumerate_multipartitions(3 - f_of_defect(d, config), config.r):
            s = symbol_of(la, d, config)
            assert a_value(shift(s)) == a_value(s)
            assert similar(s, shift(s))


@pytest.mark.parametrize("n, size", [(0, 1), (1, 3), (2, 7)])
def test_symplectic_table_sizes(n, size):
    config, defects = symplectic_defects(n)
    assert len(build_table(n, config, defects)) == size


@pytest.mark.parametrize("n", range(0, 7))
@pytest.mark.parametrize("char2", [False, True])
def test_table_count_formula(n, char2):
    config, defects = symplectic_defects(n, char2)
    table = build_table(n, config, defects)
    expected = sum(len(enumerate_multipartitions(n - f_of_defect(d, config), 2)) for d in defects)
    assert len(table) == expected


def test_symplectic_defects_examples():
    config, defects = symplectic_defects(1)
    assert config == SP and defects == [(1, 0), (3, 0)]
    assert (0, 1) in symplectic_defects(3)[1]
    config, defects = symplectic_defects(0, True)
    assert config.e == 4 and defects == [(1, 0)]


def _check_order(table):
    avals = table.a_values
    assert all(avals[i] >= avals[i + 1] for i in range(len(avals) - 1))
    covered = []
    for a, b in table.classes:
        covered.extend(range(a, b))
        members = table.symbols[a:b]
        assert all(similar(members[0], s) for s in members)
        assert len({a_value(s) for s in members}) == 1
    assert covered == list(range(len(table)))
    for c1, (a1, _) in enumerate(table.classes):
        for a2, _ in table.classes[c1 + 1:]:
            assert not similar(table.symbols[a1], table.symbols[a2])


@pytest.mark.parametrize("tie_break", ["default", "reverse"])
@pytest.mark.parametrize("n", range(0, 5))
def test_table_order_symplectic(n, tie_break):
    config, defects = symplectic_defects(n)
    _check_order(build_table(n, config, defects, tie_break))


@pytest.mark.parametrize("config", R3)
@pytest.mark.parametrize("n", range(0, 3))
def test_table_order_r3(config, n):
    _check_order(build_table(n, config, all_defects(n, config)))


def test_unknown_tie_break():
    with pytest.raises(ValueError):
        build_table(1, SP, [(1, 0)], tie_break="random")


def test_sp1_classes_are_literal_multisets():
    # the cuspidal symbol [4,2,0 | ] shares no multiset with the defect (1,0) symbols
    config, defects = symplectic_defects(1)
    table = build_table(1, config, defects)
    assert len(table.classes) == 3


def test_table_json_is_compact():
    config, defects = symplectic_defects(1)
    data = build_table(1, config, defects).to_json()
    assert [s["symbol"] for s in data["symbols"]] == ["[2,0 | 2]", "[4,2,0 | ]", "[3,0 | 1]"]
    assert "config" not in data["symbols"][0]
    assert data["symbols"][1] == {"symbol": "[4,2,0 | ]", "rows": [[4, 2, 0], []], "defect": [3, 0], "rank": 1,
                                  "source": [[], []], "a": 1}
