from __future__ import annotations

import random
from itertools import combinations

import pytest

from cidecomp.degree import deg_determinantal, deg_V_empty_closed_form
from cidecomp.gridmodel import Hypergraph, ValidationError
from cidecomp.oracle import (
    complement_of_family,
    count_minimal_transversals,
    enumerate_path_families,
    family_cells,
    family_weight,
    grid_cells,
    hypergraph_A,
    hypergraph_B,
    hypergraph_B_t,
    is_transversal,
    iter_minimal_transversals,
    minimal_transversals,
    minimal_transversals_bruteforce,
    multiplicity_m,
    pi_map,
    rho,
    staircase_family,
)

# Frozen values from exhaustive subset search over all vertex subsets.
MIN_B_COUNTS = {
    (2, 2, 2): 4,
    (2, 3, 2): 6,
    (2, 4, 2): 8,
    (2, 5, 2): 10,
    (3, 2, 2): 10,
    (3, 3, 2): 21,
    (3, 3, 3): 54,
    (4, 2, 2): 20,
    (5, 2, 2): 35,
}
MIN_A_COUNTS = {
    (2, 2, 2): 2,
    (2, 3, 2): 3,
    (2, 4, 2): 4,
    (3, 2, 2): 3,
    (3, 3, 2): 6,
    (3, 3, 3): 3,
    (3, 4, 2): 10,
    (3, 4, 3): 6,
    (4, 2, 2): 4,
    (4, 3, 2): 10,
    (4, 3, 3): 6,
    (4, 4, 2): 20,
    (4, 4, 3): 20,
    (4, 4, 4): 4,
}


@pytest.mark.parametrize("dlt,expected", sorted(MIN_B_COUNTS.items()))
def test_min_B_counts(dlt, expected):
    assert count_minimal_transversals(hypergraph_B(*dlt)) == expected


@pytest.mark.parametrize("dlt,expected", sorted(MIN_A_COUNTS.items()))
def test_min_A_counts(dlt, expected):
    d, l, t = dlt
    assert count_minimal_transversals(hypergraph_A(d, l, t)) == expected
    assert expected == deg_determinantal(d, l, t)


def test_single_edge():
    h = Hypergraph(("a", "b"), (frozenset("ab"),))
    assert minimal_transversals(h) == [frozenset("a"), frozenset("b")]
    with pytest.raises(ValidationError):
        Hypergraph(("a",), (frozenset(),))


def test_A3_on_3x3():
    h = hypergraph_A(3, 3, 3)
    assert h.edges == (frozenset({(1, 1), (2, 2), (3, 3)}),)
    assert minimal_transversals(h) == [frozenset({c}) for c in [(1, 1), (2, 2), (3, 3)]]


def test_B_for_d_t_2_l_2():
    assert count_minimal_transversals(hypergraph_B(2, 2, 2)) == deg_V_empty_closed_form(2, 2) == 4


@pytest.mark.parametrize("seed", range(40))
def test_mmcs_matches_bruteforce(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 11)
    edges = []
    for _ in range(rng.randint(0, 8)):
        e = frozenset(v for v in range(n) if rng.random() < 0.35) or frozenset({rng.randrange(n)})
        edges.append(e)
    h = Hypergraph(tuple(range(n)), tuple(edges))
    fast = list(iter_minimal_transversals(h))
    assert len(fast) == len(set(fast))
    assert set(fast) == set(minimal_transversals_bruteforce(h))


def test_no_edges_gives_empty_transversal():
    h = Hypergraph((1, 2), ())
    assert minimal_transversals(h) == [frozenset()]


@pytest.mark.parametrize("seed", range(30))
def test_pi_transversal_equivalence(seed):
    rng = random.Random(seed)
    d, l, t = rng.choice([(2, 2, 2), (3, 2, 2), (3, 3, 2), (3, 3, 3), (4, 3, 3)])
    bt = hypergraph_B_t(d, l, t)
    at = hypergraph_A(d, l, t)
    for _ in range(20):
        A = {c for c in grid_cells(d, 2 * l) if rng.random() < 0.6}
        assert is_transversal(bt, A) == is_transversal(at, pi_map(A))


def test_pi_examples():
    assert pi_map(grid_cells(3, 4)) == frozenset(grid_cells(3, 2))
    assert pi_map({(1, 1), (2, 3), (3, 1)}) == frozenset()


@pytest.mark.parametrize("d,l,t", [(2, 2, 2), (3, 2, 2), (3, 3, 2), (3, 3, 3), (4, 2, 2), (3, 4, 3), (4, 3, 3)])
def test_rho_fibres_cover_min_B(d, l, t):
    minB = set(iter_minimal_transversals(hypergraph_B(d, l, t)))
    lifted = []
    for A in iter_minimal_transversals(hypergraph_A(d, l, t)):
        fibre = rho(A, d, l)
        assert len(fibre) == len(set(fibre)) == multiplicity_m(A, d, l)
        assert all(pi_map(T) == A for T in fibre)
        lifted += fibre
    assert len(lifted) == len(set(lifted))
    assert set(lifted) == minB


def test_multiplicity_examples():
    assert multiplicity_m({(1, 1)}, 3, 3) == 18
    assert multiplicity_m(set(), 3, 4) == 81


def test_single_path_count():
    for d, l in [(2, 2), (3, 4), (4, 3), (5, 5)]:
        fams = list(enumerate_path_families(d, l, 2))
        assert len(fams) == len(set(fams)) == deg_determinantal(d, l, 2)


def test_column_profile_with_two_families():
    hits = []
    for f in enumerate_path_families(4, 5, 3):
        cells = family_cells(f)
        if tuple(sum(1 for c in cells if c[1] == j) for j in range(1, 6)) == (3, 3, 3, 3, 2):
            hits.append(f)
    assert len(hits) == 2


def test_staircase():
    f = staircase_family(3, 3, 3)
    assert family_weight(f, 3) == 18
    for d, l, t in [(3, 3, 3), (4, 5, 3), (5, 4, 2), (4, 4, 4)]:
        f = staircase_family(d, l, t)
        block = {(i, j) for i in range(t, d + 1) for j in range(t, l + 1)}
        assert complement_of_family(f, d, l) == block
        assert f in set(enumerate_path_families(d, l, t))


def test_complement_size_when_d_equals_t():
    for d, l in [(2, 3), (3, 3), (3, 5)]:
        for f in enumerate_path_families(d, l, d):
            assert len(complement_of_family(f, d, l)) == l - d + 1


@pytest.mark.parametrize("d,l,t", [(2, 3, 2), (3, 3, 2), (3, 3, 3), (3, 4, 3), (4, 4, 3), (4, 3, 2)])
def test_complements_are_min_A(d, l, t):
    comps = [complement_of_family(f, d, l) for f in enumerate_path_families(d, l, t)]
    assert len(comps) == len(set(comps))
    assert set(comps) == set(iter_minimal_transversals(hypergraph_A(d, l, t)))


def test_parameter_checks():
    with pytest.raises(ValidationError):
        hypergraph_A(2, 3, 3)
    with pytest.raises(ValidationError):
        list(enumerate_path_families(3, 3, 1))
    with pytest.raises(ValidationError):
        minimal_transversals_bruteforce(hypergraph_A(5, 5, 2))
