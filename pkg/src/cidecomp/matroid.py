"""Matroids from exact vector configurations and from circuit lists.

Ground sets are always {1, ..., n}. Vector views compute rank by exact
elimination; circuit views compute rank greedily, which is valid once the
circuit axioms hold.
"""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .exactmath import parse_rational, rank_rational
from .gridmodel import (
    GridShape,
    ValidationError,
    column,
    delta_hypergraph,
    row,
    row_complement,
    sets_AB,
)


class VectorConfig:
    """An ordered list of n vectors in Q^d."""

    __slots__ = ("vectors", "dim")

    def __init__(self, vectors: Iterable[Sequence], dim: int | None = None):
        vecs = tuple(tuple(Fraction(x) for x in v) for v in vectors)
        if dim is None:
            if not vecs:
                raise ValidationError("dimension of an empty configuration must be given")
            dim = len(vecs[0])
        for v in vecs:
            if len(v) != dim:
                raise ValidationError(f"vector {v} does not have dimension {dim}")
        self.vectors = vecs
        self.dim = dim

    def __len__(self):
        return len(self.vectors)

    def __getitem__(self, p: int) -> tuple:
        """1-based access."""
        return self.vectors[p - 1]

    def __eq__(self, other):
        return isinstance(other, VectorConfig) and (self.dim, self.vectors) == (other.dim, other.vectors)

    def __repr__(self):
        return f"VectorConfig(n={len(self)}, dim={self.dim})"

    def rank_of(self, idx: Iterable[int]) -> int:
        return rank_rational([self.vectors[p - 1] for p in idx])

    def is_zero(self, p: int) -> bool:
        return not any(self.vectors[p - 1])

    def subconfig(self, idx: Sequence[int]) -> "VectorConfig":
        return VectorConfig([self.vectors[p - 1] for p in idx], self.dim)

    def as_matrix(self) -> list[list[Fraction]]:
        """d x n matrix whose columns are the vectors."""
        return [[v[r] for v in self.vectors] for r in range(self.dim)]

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence]) -> "VectorConfig":
        """Build from a d x n matrix (vectors are its columns)."""
        d = len(rows)
        n = len(rows[0]) if d else 0
        return cls([[rows[r][c] for r in range(d)] for c in range(n)], d)

    @classmethod
    def from_json(cls, text: str | list) -> "VectorConfig":
        """Parse a JSON list of vectors with entries like "p/q" or ints."""
        data = json.loads(text) if isinstance(text, str) else text
        if isinstance(data, dict):
            data = data["vectors"]
        return cls([[parse_rational(x) for x in v] for v in data])

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in v] for v in self.vectors]


class MatroidView:
    """Rank oracle on {1..n}, backed by vectors or by circuits."""

    def __init__(self, n: int, vectors: VectorConfig | None = None, circuits: Iterable | None = None):
        if (vectors is None) == (circuits is None):
            raise ValueError("give exactly one of vectors or circuits")
        self.n = n
        self.vectors = vectors
        self.circuits = None
        if circuits is not None:
            self.circuits = [frozenset(c) for c in circuits]
            self._masks = [sum(1 << (p - 1) for p in c) for c in self.circuits]
        self._cache: dict = {}

    @classmethod
    def from_vectors(cls, vc: VectorConfig) -> "MatroidView":
        return cls(len(vc), vectors=vc)

    @classmethod
    def from_circuits(cls, n: int, circuits: Iterable) -> "MatroidView":
        return cls(n, circuits=circuits)

    @property
    def ground(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1))

    def _independent_mask(self, mask: int) -> bool:
        return not any(c & mask == c for c in self._masks)

    def rank(self, F: Iterable[int]) -> int:
        F = frozenset(F)
        if F in self._cache:
            return self._cache[F]
        if not F <= self.ground:
            raise ValidationError(f"{sorted(F - self.ground)} not in the ground set")
        if self.vectors is not None:
            r = self.vectors.rank_of(sorted(F))
        else:
            mask = 0
            r = 0
            for p in sorted(F):
                trial = mask | (1 << (p - 1))
                if self._independent_mask(trial):
                    mask = trial
                    r += 1
        self._cache[F] = r
        return r

    def closure(self, F: Iterable[int]) -> frozenset[int]:
        F = frozenset(F)
        r = self.rank(F)
        return F | frozenset(x for x in self.ground - F if self.rank(F | {x}) == r)

    def is_flat(self, F: Iterable[int]) -> bool:
        F = frozenset(F)
        return self.closure(F) == F

    def is_independent(self, F: Iterable[int]) -> bool:
        F = frozenset(F)
        return self.rank(F) == len(F)

    def full_rank(self) -> int:
        return self.rank(self.ground)


def rank(m: MatroidView, F: Iterable[int]) -> int:
    return m.rank(F)


def closure(m: MatroidView, F: Iterable[int]) -> frozenset[int]:
    return m.closure(F)


def is_flat(m: MatroidView, F: Iterable[int]) -> bool:
    return m.is_flat(F)


def _check_point(shape: GridShape, gamma: VectorConfig) -> None:
    if len(gamma) != shape.n:
        raise ValidationError(f"expected {shape.n} vectors, got {len(gamma)}")


def representatives(shape: GridShape, gamma: VectorConfig) -> VectorConfig:
    """One vector per grid column: the first nonzero entry, or zero."""
    _check_point(shape, gamma)
    reps = []
    for j in range(1, shape.l + 1):
        cells = sorted(column(shape, j))
        nonzero = [p for p in cells if not gamma.is_zero(p)]
        if gamma.rank_of(nonzero) > 1:
            raise ValidationError(
                f"column {j} holds non-proportional vectors at cells {nonzero}; the point is not in V_Delta"
            )
        reps.append(gamma[nonzero[0]] if nonzero else (Fraction(0),) * gamma.dim)
    return VectorConfig(reps, gamma.dim)


def matroid_from_point(shape: GridShape, gamma: VectorConfig) -> MatroidView:
    return MatroidView.from_vectors(representatives(shape, gamma))


def in_V_Delta(shape: GridShape, gamma: VectorConfig) -> bool:
    """Every edge of Delta indexes a linearly dependent set of vectors."""
    _check_point(shape, gamma)
    return all(gamma.rank_of(sorted(e)) < len(e) for e in delta_hypergraph(shape).edges)


def in_U_S(shape: GridShape, gamma: VectorConfig, S: Iterable[int]) -> bool:
    _check_point(shape, gamma)
    S = frozenset(S)
    if not in_V_Delta(shape, gamma):
        return False
    for p in range(1, shape.n + 1):
        if gamma.is_zero(p) != (p in S):
            return False
    m = matroid_from_point(shape, gamma)
    for i in range(1, shape.k + 1):
        Si = row_complement(shape, S, i)
        if m.rank(Si) != shape.t - 1 or not m.is_flat(Si):
            return False
    return True


def in_F_S(shape: GridShape, gl: VectorConfig, S: Iterable[int]) -> bool:
    """Nonzero vectors on [l] whose row complements S_i are rank t-1 flats."""
    if len(gl) != shape.l:
        raise ValidationError(f"expected {shape.l} vectors, got {len(gl)}")
    if any(gl.is_zero(j) for j in range(1, shape.l + 1)):
        return False
    S = frozenset(S)
    m = MatroidView.from_vectors(gl)
    for i in range(1, shape.k + 1):
        Si = row_complement(shape, S, i)
        if m.rank(Si) != shape.t - 1 or not m.is_flat(Si):
            return False
    return True


def intersection_dim(gl: VectorConfig, A: Iterable[int], B: Iterable[int]) -> int:
    """dim(span A cap span B) via rank(A) + rank(B) - rank(A cup B)."""
    A, B = frozenset(A), frozenset(B)
    return gl.rank_of(sorted(A)) + gl.rank_of(sorted(B)) - gl.rank_of(sorted(A | B))


def in_F_S_j(shape: GridShape, gl: VectorConfig, S: Iterable[int], j: int) -> bool:
    A, B, _, _ = sets_AB(shape, S)
    return in_F_S(shape, gl, S) and intersection_dim(gl, A, B) == j


def quasi_product_circuits(k: int, l: int, s: int, t: int, d: int) -> list[frozenset[int]]:
    """Minimal members of the (s, t) grid hypergraph plus all (d+1)-subsets."""
    if d > s + t - 3:
        raise ValidationError(f"need d <= s + t - 3, got d={d}, s={s}, t={t}")
    if d < 0 or k < 1 or l < 1 or s < 2 or t < 2:
        raise ValidationError("need k, l >= 1, s, t >= 2, d >= 0")
    n = k * l
    cand = set()
    for i in range(1, k + 1):
        cells = [(j - 1) * k + i for j in range(1, l + 1)]
        cand.update(frozenset(c) for c in combinations(cells, t))
    for j in range(1, l + 1):
        cells = [(j - 1) * k + i for i in range(1, k + 1)]
        cand.update(frozenset(c) for c in combinations(cells, s))
    cand.update(frozenset(c) for c in combinations(range(1, n + 1), d + 1))
    return minimal_sets(cand)


def minimal_sets(family: Iterable[Iterable]) -> list[frozenset]:
    """Inclusion-minimal members, sorted by (size, sorted tuple)."""
    fam = sorted({frozenset(f) for f in family}, key=lambda f: (len(f), sorted(f)))
    keep: list[frozenset] = []
    for f in fam:
        if not any(g <= f for g in keep):
            keep.append(f)
    return keep


def verify_circuit_axioms(circuits: Iterable[Iterable]) -> bool:
    """Nonempty, antichain, and strong-enough elimination, checked exhaustively."""
    cs = [frozenset(c) for c in circuits]
    if any(not c for c in cs) or len(set(cs)) != len(cs):
        return False
    for a, b in combinations(cs, 2):
        if a <= b or b <= a:
            return False
    for a, b in combinations(cs, 2):
        for e in a & b:
            rest = (a | b) - {e}
            if not any(c <= rest for c in cs):
                return False
    return True
