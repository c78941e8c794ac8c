from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import pytest

from cidecomp.gridmodel import GridShape, ValidationError, column, row, row_complement
from cidecomp.matroid import (
    MatroidView,
    VectorConfig,
    in_F_S,
    in_U_S,
    in_V_Delta,
    intersection_dim,
    matroid_from_point,
    minimal_sets,
    quasi_product_circuits,
    verify_circuit_axioms,
)

K3 = GridShape(3, 6, 4, 4)
S_K3 = {1, 4, 8, 11, 15, 18}
COLUMN_VECTORS = [(0, 0, 1, 1), (0, 0, 1, 2), (1, 0, 0, 1), (1, 0, 0, 2), (0, 1, 0, 1), (0, 1, 0, 2)]


def _circuits(m: MatroidView, n: int) -> list[frozenset]:
    dependent = [frozenset(c) for r in range(1, n + 1) for c in combinations(range(1, n + 1), r) if m.rank(c) < r]
    return minimal_sets(dependent)


def test_fixture_cells(grid_point_k3):
    _, gamma = grid_point_k3
    assert gamma[7] == (2, 0, 0, 2)
    assert gamma[17] == (0, 1, 0, 2)
    assert {p for p in range(1, 19) if gamma.is_zero(p)} == S_K3


def test_rank_examples():
    assert MatroidView.from_vectors(VectorConfig(COLUMN_VECTORS)).rank(set()) == 0
    u24 = MatroidView.from_vectors(VectorConfig([(1, 0), (0, 1), (1, 1), (1, 2)]))
    assert u24.rank({1, 2, 3}) == 2
    m = MatroidView.from_vectors(VectorConfig(COLUMN_VECTORS))
    assert m.rank({1, 2, 3, 4}) == 3


def test_matroid_of_grid_point(grid_point_k3):
    _, gamma = grid_point_k3
    m = matroid_from_point(K3, gamma)
    assert m.full_rank() == 4
    nonspanning = [c for c in _circuits(m, 6) if len(c) <= 4]
    assert sorted(map(sorted, nonspanning)) == [[1, 2, 3, 4], [1, 2, 5, 6], [3, 4, 5, 6]]
    for i in range(1, 4):
        Si = row_complement(K3, S_K3, i)
        assert m.is_flat(Si) and m.rank(Si) == 3
    assert m.closure(range(1, 7)) == frozenset(range(1, 7))


def test_degenerate_points():
    zero = VectorConfig([(0, 0, 0, 0)] * 18)
    m = matroid_from_point(K3, zero)
    assert m.full_rank() == 0
    assert all(m.rank({j}) == 0 for j in range(1, 7))
    assert in_V_Delta(K3, zero)
    one_col = [(0, 0, 0, 0)] * 18
    one_col[3] = (1, 2, 3, 4)
    one_col[4] = (2, 4, 6, 8)
    assert matroid_from_point(K3, VectorConfig(one_col)).full_rank() == 1


def test_non_proportional_column_rejected():
    vs = [(0, 0, 0, 0)] * 18
    vs[0], vs[1] = (1, 0, 0, 0), (0, 1, 0, 0)
    with pytest.raises(ValidationError, match="column 1"):
        matroid_from_point(K3, VectorConfig(vs))


def test_in_V_Delta(grid_point_k3):
    _, gamma = grid_point_k3
    assert in_V_Delta(K3, gamma)
    rng = random.Random(5)
    generic = VectorConfig([[Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(4)] for _ in range(18)])
    assert generic.rank_of(sorted(column(K3, 1))) == 3
    assert not in_V_Delta(K3, generic)


def test_in_U_S(grid_point_k3):
    _, gamma = grid_point_k3
    assert in_U_S(K3, gamma, S_K3)
    assert not in_U_S(K3, gamma, set())
    assert not in_U_S(K3, gamma, S_K3 - {1})


def test_zero_pattern_must_match_S(grid_point_k2):
    data, gamma = grid_point_k2
    shape = GridShape(data["k"], data["l"], data["t"], data["d"])
    S = {2, 4, 7, 9}
    assert in_V_Delta(shape, gamma)
    assert matroid_from_point(shape, gamma).full_rank() == 3
    assert not in_U_S(shape, gamma, S)
    eps = Fraction(1, 1000)
    moved = [list(v) for v in gamma.vectors]
    moved[4] = [0, eps, 0]
    moved[5] = [0, eps, 0]
    assert in_U_S(shape, VectorConfig(moved), S)


def test_in_F_S(grid_point_k3):
    gl = VectorConfig(COLUMN_VECTORS)
    assert in_F_S(K3, gl, S_K3)
    with_zero = VectorConfig([(0, 0, 0, 0)] + COLUMN_VECTORS[1:])
    assert not in_F_S(K3, with_zero, S_K3)
    assert intersection_dim(gl, {1, 2, 3, 4}, {3, 4, 5, 6}) == 2


def test_quasi_product_small():
    assert quasi_product_circuits(2, 2, 2, 2, 1) == [frozenset(c) for c in combinations(range(1, 5), 2)]
    assert verify_circuit_axioms(quasi_product_circuits(3, 3, 2, 2, 1))
    with pytest.raises(ValidationError):
        quasi_product_circuits(2, 2, 2, 2, 2)


def test_circuit_axioms_basic():
    assert verify_circuit_axioms([frozenset(c) for c in combinations(range(1, 6), 3)])
    assert not verify_circuit_axioms([{1, 2}, {1, 2, 3}])


def _sweep(pred):
    for k in range(1, 10):
        for l in range(1, 10 // k + 1):
            if k * l > 9:
                continue
            for s in range(2, k + 1):
                for t in range(2, l + 1):
                    for d in range(1, s + t - 2):
                        if pred(k, l, s, t, d):
                            yield k, l, s, t, d


def test_quasi_product_axioms_and_rank():
    for k, l, s, t, d in _sweep(lambda *a: True):
        cs = quasi_product_circuits(k, l, s, t, d)
        assert verify_circuit_axioms(cs), (k, l, s, t, d)
        assert MatroidView.from_circuits(k * l, cs).full_rank() == d


def test_quasi_product_uniform_restrictions_when_d_large():
    # rows restrict to U_{t-1,l} and columns to U_{s-1,k} once d >= max(s, t) - 1
    cases = list(_sweep(lambda k, l, s, t, d: d >= max(s, t) - 1))
    assert cases
    for k, l, s, t, d in cases:
        m = MatroidView.from_circuits(k * l, quasi_product_circuits(k, l, s, t, d))
        for i in range(1, k + 1):
            cells = [(j - 1) * k + i for j in range(1, l + 1)]
            for r in range(1, l + 1):
                for sub in combinations(cells, r):
                    assert m.rank(sub) == min(r, t - 1), (k, l, s, t, d)
        for j in range(1, l + 1):
            cells = [(j - 1) * k + i for i in range(1, k + 1)]
            for r in range(1, k + 1):
                for sub in combinations(cells, r):
                    assert m.rank(sub) == min(r, s - 1), (k, l, s, t, d)
