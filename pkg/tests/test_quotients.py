import pytest

from toricgraphs import (
    BettiTable,
    BudgetError,
    DomainError,
    GrevlexOrder,
    Monomial,
    MonomialIdeal,
    OrderedGenerators,
    betti_from_linear_quotients,
    betti_taylor_oracle,
    build_grd,
    buchberger,
    colon_with_monomial,
    default_order,
    grd_primitive_walks,
    initial_ideal,
    quotient_profile,
    sort_ascending,
    walk_to_binomial,
)
from toricgraphs.grobner import format_monomial


def mono(order, text):
    exps = [0] * order.nvars
    if text != "1":
        for factor in text.split("*"):
            name, _, power = factor.partition("^")
            exps[order.names.index(name)] += int(power) if power else 1
    return Monomial(exps)


def family_initial(r, d):
    graph = build_grd(r, d)
    order = default_order(graph)
    gb = buchberger([walk_to_binomial(w) for w in grd_primitive_walks(r, d)], order)
    return order, initial_ideal(gb, order)


def expected_n_sequence(d):
    seq = []
    for k in range(d - 1):
        seq.extend([k] * (k + 1))
    seq.extend([d - 1] * d)
    return seq


# ---------------------------------------------------------------------------
# colon ideals


def test_colon_of_empty_prior_is_zero_ideal():
    order = GrevlexOrder(["x", "y"])
    assert len(colon_with_monomial([], mono(order, "x*y"))) == 0


def test_colon_square_chain():
    # priors: everything below a5*b1 in the sorted order; expect the three
    # b-variables above b1.
    order, ideal = family_initial(3, 5)
    ordered = sort_ascending(ideal.min_gens, order)
    gens = ordered.gens
    m = mono(order, "a5*b1")
    p = gens.index(m)
    colon = colon_with_monomial(gens[:p], m)
    got = {format_monomial(g, order.names) for g in colon.min_gens}
    assert got == {"b4", "b3", "b2"}


def test_colon_path_generator_middle_case():
    order, ideal = family_initial(3, 5)
    ordered = sort_ascending(ideal.min_gens, order)
    gens = ordered.gens
    m = mono(order, "a3*e2*e4")
    p = gens.index(m)
    colon = colon_with_monomial(gens[:p], m)
    got = {format_monomial(g, order.names) for g in colon.min_gens}
    assert got == {"a5", "a4", "b2", "b1"}


def test_colon_with_dividing_prior_is_unit_ideal():
    order = GrevlexOrder(["x", "y"])
    colon = colon_with_monomial([mono(order, "x")], mono(order, "x*y"))
    assert [g.is_one() for g in colon.min_gens] == [True]


def test_colon_generators_multiply_back_into_prior():
    order, ideal = family_initial(4, 4)
    ordered = sort_ascending(ideal.min_gens, order)
    gens = ordered.gens
    for p, m in enumerate(gens):
        colon = colon_with_monomial(gens[:p], m)
        for g in colon.min_gens:
            product = g * m
            assert any(prior.divides(product) for prior in gens[:p])


# ---------------------------------------------------------------------------
# quotient profiles


def test_profile_g32():
    order, ideal = family_initial(3, 2)
    ordered = sort_ascending(ideal.min_gens, order)
    profile = quotient_profile(ordered)
    assert profile.linear
    assert profile.n == [0, 1, 1]


@pytest.mark.parametrize("r", [3, 4, 5])
@pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
def test_profile_closed_form(r, d):
    order, ideal = family_initial(r, d)
    ordered = sort_ascending(ideal.min_gens, order)
    profile = quotient_profile(ordered)
    assert profile.linear
    assert profile.n == expected_n_sequence(d)
    # every witness is a single variable
    for gens in profile.colon_gens:
        assert all(g.degree == 1 for g in gens)


def test_profile_disjoint_supports_not_linear():
    order = GrevlexOrder(["x", "y", "z", "w"])
    ordered = OrderedGenerators([mono(order, "x*y"), mono(order, "z*w")], order)
    profile = quotient_profile(ordered)
    assert not profile.linear
    assert profile.n == [0, 1]
    assert profile.colon_gens[1] == [mono(order, "x*y")]


def test_ordered_generators_must_be_minimal():
    order = GrevlexOrder(["x", "y"])
    with pytest.raises(DomainError):
        OrderedGenerators([mono(order, "x"), mono(order, "x*y")])


# ---------------------------------------------------------------------------
# Betti numbers from linear quotients


def test_betti_g32():
    order, ideal = family_initial(3, 2)
    ordered = sort_ascending(ideal.min_gens, order)
    table = betti_from_linear_quotients(ordered, quotient_profile(ordered))
    assert table.entries == {(0, 2): 1, (0, 3): 2, (1, 4): 2}


def test_betti_g35():
    order, ideal = family_initial(3, 5)
    ordered = sort_ascending(ideal.min_gens, order)
    table = betti_from_linear_quotients(ordered, quotient_profile(ordered))
    assert table.entries == {
        (0, 2): 10, (1, 3): 20, (2, 4): 15, (3, 5): 4,
        (0, 3): 5, (1, 4): 20, (2, 5): 30, (3, 6): 20, (4, 7): 5,
    }


def test_betti_single_generator():
    order = GrevlexOrder(["x", "y", "z"])
    ordered = OrderedGenerators([mono(order, "x*y*z")], order)
    table = betti_from_linear_quotients(ordered, quotient_profile(ordered))
    assert table.entries == {(0, 3): 1}


def test_betti_rejects_nonlinear_profile():
    order = GrevlexOrder(["x", "y", "z", "w"])
    ordered = OrderedGenerators([mono(order, "x*y"), mono(order, "z*w")], order)
    with pytest.raises(DomainError):
        betti_from_linear_quotients(ordered, quotient_profile(ordered))


# ---------------------------------------------------------------------------
# Taylor oracle


def test_taylor_two_generators_one_syzygy():
    order = GrevlexOrder(["x", "y", "z"])
    ideal = MonomialIdeal((mono(order, "x*y"), mono(order, "y*z")))
    table = betti_taylor_oracle(ideal)
    assert table.entries == {(0, 2): 2, (1, 3): 1}


def test_taylor_principal_ideal():
    order = GrevlexOrder(["x", "y"])
    ideal = MonomialIdeal((mono(order, "x^2*y"),))
    assert betti_taylor_oracle(ideal).entries == {(0, 3): 1}


def test_taylor_zero_ideal():
    assert betti_taylor_oracle(MonomialIdeal(())).entries == {}


def test_taylor_matches_quotient_formula_g32():
    order, ideal = family_initial(3, 2)
    ordered = sort_ascending(ideal.min_gens, order)
    lq = betti_from_linear_quotients(ordered, quotient_profile(ordered))
    assert betti_taylor_oracle(ideal) == lq


def test_taylor_on_f5_linear_strand():
    # squares-only generators a_i b_j with j < i over 10 variables
    names = [f"a{i}" for i in range(1, 6)] + [f"b{i}" for i in range(1, 6)]
    order = GrevlexOrder(names)
    gens = tuple(
        mono(order, f"a{i}*b{j}") for i in range(1, 6) for j in range(1, i)
    )
    table = betti_taylor_oracle(MonomialIdeal(gens))
    assert table.entries == {(0, 2): 10, (1, 3): 20, (2, 4): 15, (3, 5): 4}


def test_taylor_generator_cap():
    order = GrevlexOrder([f"x{i}" for i in range(19)])
    gens = tuple(Monomial(tuple(1 if j == i else 0 for j in range(19))) for i in range(19))
    with pytest.raises(BudgetError):
        betti_taylor_oracle(MonomialIdeal(gens))


def test_taylor_non_squarefree_input():
    # x^2, xy, y^3: resolution of a thickened point; frozen from the Taylor
    # homology of this classical example
    order = GrevlexOrder(["x", "y"])
    ideal = MonomialIdeal((mono(order, "x^2"), mono(order, "x*y"), mono(order, "y^3")))
    table = betti_taylor_oracle(ideal)
    assert table.get(0, 2) == 2 and table.get(0, 3) == 1
    assert table.get(1, 3) == 1 and table.get(1, 4) == 1
    assert sum(b for (i, j), b in table.entries.items() if i >= 2) == 0


# ---------------------------------------------------------------------------
# sorting and cross-checks


def test_sort_ascending_g35_order():
    order, ideal = family_initial(3, 5)
    ordered = sort_ascending(ideal.min_gens, order)
    assert [format_monomial(m, order.names) for m in ordered.gens] == [
        "a5*b4", "a5*b3", "a4*b3", "a5*b2", "a4*b2", "a3*b2",
        "a5*b1", "a4*b1", "a3*b1", "a2*b1",
        "a5*e2*e4", "a4*e2*e4", "a3*e2*e4", "a2*e2*e4", "a1*e2*e4",
    ]


def test_sort_ascending_squares_grouped_by_b_factor():
    names = [f"a{i}" for i in range(1, 5)] + [f"b{i}" for i in range(1, 5)]
    order = GrevlexOrder(names)
    gens = [mono(order, f"a{i}*b{j}") for i in range(1, 5) for j in range(1, i)]
    ordered = sort_ascending(gens, order)
    assert [format_monomial(m, order.names) for m in ordered.gens] == [
        "a4*b3", "a4*b2", "a3*b2", "a4*b1", "a3*b1", "a2*b1",
    ]


def test_sort_single_monomial():
    order = GrevlexOrder(["x"])
    m = mono(order, "x")
    assert sort_ascending([m], order).gens == [m]


@pytest.mark.parametrize("r,d", [(3, 3), (4, 2), (5, 3)])
def test_euler_characteristic_agreement(r, d):
    order, ideal = family_initial(r, d)
    ordered = sort_ascending(ideal.min_gens, order)
    lq = betti_from_linear_quotients(ordered, quotient_profile(ordered))
    oracle = betti_taylor_oracle(ideal)
    assert lq.alternating_sum_by_degree() == oracle.alternating_sum_by_degree()


def test_oracle_degree_zero_row_counts_generators():
    order, ideal = family_initial(4, 3)
    table = betti_taylor_oracle(ideal)
    by_degree = {}
    for m in ideal.min_gens:
        by_degree[m.degree] = by_degree.get(m.degree, 0) + 1
    assert {j: b for (i, j), b in table.entries.items() if i == 0} == by_degree


@pytest.mark.parametrize("r,d", [(3, 2), (3, 4), (4, 3), (5, 2)])
def test_family_strands_limited_to_two_degrees(r, d):
    order, ideal = family_initial(r, d)
    ordered = sort_ascending(ideal.min_gens, order)
    table = betti_from_linear_quotients(ordered, quotient_profile(ordered))
    assert table.strands() <= {2, r}


# ---------------------------------------------------------------------------
# table plumbing


def test_betti_table_grid_layout():
    table = BettiTable({(0, 2): 1, (0, 3): 2, (1, 4): 2})
    grid = table.to_grid()
    lines = grid.splitlines()
    assert lines[0].split() == ["0", "1"]
    assert lines[1].split() == ["2:", "1", "."]
    assert lines[2].split() == ["3:", "2", "2"]


def test_betti_table_triples_sorted():
    table = BettiTable({(1, 3): 4, (0, 2): 3})
    assert table.to_triples() == [
        {"i": 0, "j": 2, "beta": 3},
        {"i": 1, "j": 3, "beta": 4},
    ]


def test_betti_table_rejects_negative():
    with pytest.raises(DomainError):
        BettiTable({(0, 2): -1})


def test_monomial_ideal_rejects_non_minimal():
    order = GrevlexOrder(["x", "y"])
    with pytest.raises(DomainError):
        MonomialIdeal((mono(order, "x"), mono(order, "x*y")))
