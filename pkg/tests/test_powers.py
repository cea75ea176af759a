import random

import pytest

from edgepow import (
    BudgetError,
    PowerEngine,
    brute_force_oracle,
    check_strong_exchange,
    cycle,
    delta,
    edge_decompose,
    enumerate_generators,
    format_monomial,
    graph_from_edges,
    member,
    normalize_caps,
    parse_caps,
    path,
    star,
    template,
)
from edgepow.powers import validate_generator_set
from helpers import random_caps, random_connected_graph

K2 = graph_from_edges(2, [(1, 2)])


# --- cap normalization

def test_normalize_star_center_clamps():
    g = star(3)
    assert normalize_caps(g, (1, 1, 1, 9)) == (1, 1, 1, 3)
    # reduction must not change the generator set
    _, w_raw = brute_force_oracle(g, (1, 1, 1, 9))
    _, w_norm = brute_force_oracle(g, (1, 1, 1, 3))
    assert w_raw.members == w_norm.members


def test_normalize_untouched_and_leaf():
    assert normalize_caps(cycle(4), (1, 1, 1, 1)) == (1, 1, 1, 1)
    assert normalize_caps(K2, (5, 2)) == (2, 2)


def test_normalize_idempotent_and_w_invariant():
    rng = random.Random(21)
    for _ in range(30):
        g = random_connected_graph(rng, n_max=6)
        caps = tuple(rng.randint(1, 6) for _ in range(g.n))
        norm = normalize_caps(g, caps)
        assert normalize_caps(g, norm) == norm
        assert enumerate_generators(g, caps).members == enumerate_generators(g, norm).members


def test_caps_validation():
    with pytest.raises(ValueError, match="length"):
        delta(K2, (1, 1, 1))
    with pytest.raises(ValueError, match="out of range"):
        delta(K2, (0, 1))
    with pytest.raises(ValueError, match="not an integer"):
        delta(K2, (1.5, 1))
    assert parse_caps("2,1,2") == (2, 1, 2)
    with pytest.raises(ValueError):
        parse_caps("2,x")


# --- delta

def test_delta_cycle8_pattern():
    caps = tuple(2 if i in (1, 3, 7) else 1 for i in range(1, 9))
    assert delta(cycle(8), caps) == 4


def test_delta_path7_pattern():
    caps = tuple(2 if i in (3, 7) else 1 for i in range(1, 8))
    assert delta(path(7), caps) == 3


def test_delta_triangle_fork():
    assert delta(template("c3fork"), (1,) * 6) == 2


@pytest.mark.parametrize("n", range(8, 13))
def test_delta_cycle_cap_pattern_formula(n):
    # caps 2 at vertices 1, 3, 7 give top degree ceil(n/2)
    caps = tuple(2 if i in (1, 3, 7) else 1 for i in range(1, n + 1))
    assert delta(cycle(n), caps) == (n + 1) // 2


@pytest.mark.parametrize("n", range(7, 13))
def test_delta_path_cap_pattern_formula(n):
    # caps 2 at vertices 3 and 7 give top degree floor(n/2)
    caps = tuple(2 if i in (3, 7) else 1 for i in range(1, n + 1))
    assert delta(path(n), caps) == n // 2


@pytest.mark.parametrize("caps", [(1, 1), (3, 2), (5, 5), (7, 2)])
def test_delta_single_edge_closed_form(caps):
    assert delta(K2, caps) == min(caps)


def test_delta_monotone_in_caps():
    rng = random.Random(5)
    for _ in range(30):
        g = random_connected_graph(rng, n_max=7)
        lo = random_caps(rng, g.n, cap_max=2)
        hi = tuple(c + rng.randint(0, 2) for c in lo)
        assert delta(g, lo) <= delta(g, hi)


# --- enumeration

def test_enumerate_triangle_fork_members():
    w = enumerate_generators(template("c3fork"), (1,) * 6)
    assert (1, 0, 1, 1, 1, 0) in w
    assert (0, 1, 1, 1, 0, 1) in w
    assert (0, 0, 1, 1, 1, 1) not in w


def test_enumerate_single_edge():
    w = enumerate_generators(K2, (2, 3))
    assert w.delta == 2
    assert w.members == frozenset({(2, 2)})


def test_enumerate_c4_all_ones():
    d, w = brute_force_oracle(cycle(4), (1, 1, 1, 1))
    assert d == 2
    assert w.members == frozenset({(1, 1, 1, 1)})
    assert enumerate_generators(cycle(4), (1, 1, 1, 1)).members == w.members


def test_member_checks():
    w = enumerate_generators(template("c3pathpend"), (1, 1, 1, 2, 1, 1, 1))
    assert member(w, (1, 1, 1, 2, 1, 0, 0))
    assert not member(w, (2, 1, 1, 1, 1, 0, 0))  # violates cap on x1
    assert not member(w, (0,) * 7)
    with pytest.raises(ValueError, match="length"):
        member(w, (1, 1))


def test_members_degree_and_caps_invariant():
    rng = random.Random(13)
    for _ in range(25):
        g = random_connected_graph(rng, n_max=7)
        caps = random_caps(rng, g.n)
        w = enumerate_generators(g, caps)
        assert len(w) >= 1 and w.delta >= 1
        assert w.delta <= sum(caps) // 2
        for vec in w.members:
            assert sum(vec) == 2 * w.delta
            assert all(e <= c for e, c in zip(vec, caps))
        validate_generator_set(w)


def test_ordered_is_descending_lex():
    w = enumerate_generators(template("c3pathpend"), (1, 1, 1, 2, 1, 1, 1))
    assert list(w.ordered) == sorted(w.members, reverse=True)


# --- decomposition

def test_decompose_single_edge():
    ems = edge_decompose(K2, (1, 1))
    assert ems.counts == (((1, 2), 1),)
    assert ems.size == 1 and ems.product(2) == (1, 1)


def test_decompose_absent():
    assert edge_decompose(template("c3fork"), (0, 0, 1, 1, 1, 1)) is None


def test_decompose_present_and_deterministic():
    g = template("c3pathpend")
    vec = (1, 0, 1, 0, 1, 1, 0)  # (x1x3)(x5x6)
    ems = edge_decompose(g, vec)
    assert ems is not None and ems.product(7) == vec
    assert ems == edge_decompose(g, vec)


def test_decompose_odd_degree_rejected():
    with pytest.raises(ValueError, match="odd"):
        edge_decompose(K2, (1, 0))


def test_decompose_agrees_with_membership():
    rng = random.Random(17)
    g = random_connected_graph(rng, n_max=6)
    caps = random_caps(rng, g.n, cap_max=2)
    w = enumerate_generators(g, caps)
    for vec in w.members:
        ems = edge_decompose(g, vec)
        assert ems is not None and ems.size == w.delta


def test_membership_equals_capped_decomposability():
    # member(W, v) holds exactly when v has degree 2*delta, respects the
    # caps, and factors into edges
    from itertools import product as iproduct

    rng = random.Random(19)
    for _ in range(5):
        g = random_connected_graph(rng, n_min=3, n_max=4, extra_max=1)
        caps = random_caps(rng, g.n, cap_max=2)
        w = enumerate_generators(g, caps)
        for vec in iproduct(*(range(c + 1) for c in caps)):
            expected = (
                sum(vec) == 2 * w.delta
                and edge_decompose(g, vec) is not None
            )
            assert member(w, vec) == expected


# --- oracle agreement

def test_oracle_bound():
    with pytest.raises(ValueError, match="sum"):
        brute_force_oracle(K2, (20, 20))


def test_oracle_matches_engine_random():
    rng = random.Random(99)
    for _ in range(40):
        g = random_connected_graph(rng, n_min=2, n_max=6)
        caps = random_caps(rng, g.n)
        d_oracle, w_oracle = brute_force_oracle(g, caps)
        w = enumerate_generators(g, caps)
        assert w.delta == d_oracle
        assert w.members == w_oracle.members


def test_degenerate_regime_implies_strong_pass():
    rng = random.Random(31)
    hits = 0
    for _ in range(200):
        g = random_connected_graph(rng, n_max=6)
        caps = random_caps(rng, g.n, cap_max=2)
        w = enumerate_generators(g, caps)
        if 2 * w.delta >= sum(caps) - 1:
            hits += 1
            assert check_strong_exchange(w).ok
    assert hits > 10  # regime actually exercised


# --- budgets

def test_node_budget_enforced():
    g = cycle(9)
    engine = PowerEngine(g, node_budget=10)
    with pytest.raises(BudgetError, match="budget"):
        engine.generators((2,) * 9)


def test_engine_memo_shared_across_caps():
    engine = PowerEngine(cycle(6))
    a = engine.delta((1,) * 6)
    nodes_first = engine.nodes
    b = engine.delta((1,) * 6)
    assert (a, b) == (3, 3)
    assert engine.nodes == nodes_first  # fully memoized second time


def test_format_monomial():
    assert format_monomial((1, 0, 2)) == "x1*x3^2"
    assert format_monomial((0, 0)) == "1"
