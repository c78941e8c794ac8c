"""Grid combinatorics for the k x l index matrix.

Cells of the grid are numbered 1..k*l column by column, so cell p sits in
row i and column j with p = (j-1)*k + i. All public functions speak in these
1-based linear indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence


class ValidationError(ValueError):
    """Raised when parameters fall outside the supported range."""


@dataclass(frozen=True)
class GridShape:
    k: int
    l: int
    t: int
    d: int
    s: int = 2

    def __post_init__(self):
        if self.k < 1:
            raise ValidationError(f"k must be >= 1, got {self.k}")
        if not 2 <= self.t <= self.l:
            raise ValidationError(f"need 2 <= t <= l, got t={self.t}, l={self.l}")
        if self.s < 2:
            raise ValidationError(f"s must be >= 2, got {self.s}")
        if self.d < 1:
            raise ValidationError(f"d must be >= 1, got {self.d}")

    @property
    def n(self) -> int:
        return self.k * self.l

    def cell(self, i: int, j: int) -> int:
        """Linear index of row i, column j."""
        if not (1 <= i <= self.k and 1 <= j <= self.l):
            raise ValidationError(f"cell ({i},{j}) outside a {self.k}x{self.l} grid")
        return (j - 1) * self.k + i

    def position(self, p: int) -> tuple[int, int]:
        """(row, column) of linear index p."""
        if not 1 <= p <= self.n:
            raise ValidationError(f"index {p} outside [1, {self.n}]")
        return (p - 1) % self.k + 1, (p - 1) // self.k + 1

    def as_dict(self) -> dict:
        return {"k": self.k, "l": self.l, "t": self.t, "d": self.d, "s": self.s}


def row(shape: GridShape, i: int) -> frozenset[int]:
    return frozenset(shape.cell(i, j) for j in range(1, shape.l + 1))


def column(shape: GridShape, j: int) -> frozenset[int]:
    return frozenset(shape.cell(i, j) for i in range(1, shape.k + 1))


@dataclass(frozen=True)
class Hypergraph:
    """Edges over an ordered vertex tuple; vertices may be any hashables."""

    vertices: tuple
    edges: tuple

    def __post_init__(self):
        vs = set(self.vertices)
        seen = []
        uniq = set()
        for e in self.edges:
            e = frozenset(e)
            if not e:
                raise ValidationError("empty edge")
            if not e <= vs:
                raise ValidationError(f"edge {sorted(e)} uses unknown vertices")
            if e not in uniq:
                uniq.add(e)
                seen.append(e)
        object.__setattr__(self, "edges", tuple(seen))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def edge_set(self) -> frozenset:
        return frozenset(self.edges)


def delta_hypergraph(shape: GridShape) -> Hypergraph:
    """All t-subsets of each row and all s-subsets of each column."""
    edges = []
    for i in range(1, shape.k + 1):
        edges.extend(combinations(sorted(row(shape, i)), shape.t))
    for j in range(1, shape.l + 1):
        edges.extend(combinations(sorted(column(shape, j)), shape.s))
    return Hypergraph(tuple(range(1, shape.n + 1)), tuple(edges))


def _members(shape: GridShape, S: Iterable[int]) -> frozenset[int]:
    S = frozenset(S)
    for p in S:
        if not 1 <= p <= shape.n:
            raise ValidationError(f"index {p} outside [1, {shape.n}]")
    return S


def row_complement(shape: GridShape, S: Iterable[int], i: int) -> frozenset[int]:
    """S_i: the columns j whose cell in row i is not in S."""
    S = frozenset(S)
    return frozenset(j for j in range(1, shape.l + 1) if shape.cell(i, j) not in S)


def is_admissible(shape: GridShape, S: Iterable[int]) -> bool:
    S = _members(shape, S)
    for i in range(1, shape.k + 1):
        if len(row(shape, i) - S) < shape.t - 1:
            return False
    return not any(column(shape, j) <= S for j in range(1, shape.l + 1))


def row_type(shape: GridShape, S: Iterable[int]) -> tuple[int, ...]:
    """(|S cap R_1|, ..., |S cap R_k|); for k=2 this is (u, v)."""
    S = frozenset(S)
    return tuple(len(row(shape, i) & S) for i in range(1, shape.k + 1))


def enumerate_admissible(shape: GridShape) -> Iterator[tuple[int, ...]]:
    """Every admissible S once, as a sorted tuple.

    Ordered by row type first (lexicographic on the type tuple), then
    lexicographically on the sorted member tuple.
    """
    cap = shape.l - shape.t + 1
    cols = range(1, shape.l + 1)
    for typ in product(range(cap + 1), repeat=shape.k):
        batch = []
        for picks in product(*(combinations(cols, u) for u in typ)):
            full = set(picks[0]).intersection(*picks[1:]) if shape.k > 1 else set(picks[0])
            if full:
                continue
            S = sorted(shape.cell(i + 1, j) for i, js in enumerate(picks) for j in js)
            batch.append(tuple(S))
        batch.sort()
        yield from batch


def _require_k2(shape: GridShape) -> None:
    if shape.k != 2:
        raise ValidationError(f"this operation needs k = 2, got k = {shape.k}")


def sets_AB(shape: GridShape, S: Iterable[int]) -> tuple[frozenset, frozenset, int, int]:
    _require_k2(shape)
    S = _members(shape, S)
    A = row_complement(shape, S, 1)
    B = row_complement(shape, S, 2)
    u, v = row_type(shape, S)
    assert u == shape.l - len(A) and v == shape.l - len(B)
    return A, B, u, v


def x_of_S(shape: GridShape, S: Iterable[int]) -> int:
    """Smallest feasible intersection dimension for a nonempty admissible S."""
    S = _members(shape, S)
    if not S:
        raise ValidationError("x(S) is undefined for S = {}")
    if not is_admissible(shape, S):
        raise ValidationError(f"S = {sorted(S)} is not admissible")
    A, B, _, _ = sets_AB(shape, S)
    t, d = shape.t, shape.d
    if A & B:
        return max(1, t - 1 - len(A - B), t - 1 - len(B - A), 2 * t - 2 - d)
    return max(0, 2 * t - 2 - d)


def feasible_js(shape: GridShape, S: Iterable[int]) -> list[int]:
    """The interval [x(S), t-2], possibly empty."""
    return list(range(x_of_S(shape, S), shape.t - 1))


def maximal_js(shape: GridShape, S: Iterable[int]) -> list[int]:
    """Values j for which the j-stratum is an irreducible component."""
    x = x_of_S(shape, S)
    top = shape.t - 2
    if x > top:
        return []
    A, B, _, _ = sets_AB(shape, S)
    m = len(A & B)
    if m > top:
        return list(range(x, top + 1))
    if m < x:
        return [x]
    return list(range(x, m + 1))


@dataclass(frozen=True)
class SubsetS:
    """A set of grid cells together with its derived row data."""

    shape: GridShape
    members: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(_members(self.shape, self.members))))

    def S_i(self, i: int) -> frozenset[int]:
        return row_complement(self.shape, self.members, i)

    @property
    def type(self) -> tuple[int, ...]:
        return row_type(self.shape, self.members)

    def to_json(self) -> dict:
        out: dict = {"S": list(self.members)}
        if self.shape.k == 2:
            A, B, u, v = sets_AB(self.shape, self.members)
            out.update(A=sorted(A), B=sorted(B), u=u, v=v)
            if self.members:
                out["x"] = x_of_S(self.shape, self.members)
                out["maximal_j"] = maximal_js(self.shape, self.members)
            else:
                out["x"] = None
                out["maximal_j"] = []
        else:
            out["S_i"] = [sorted(self.S_i(i)) for i in range(1, self.shape.k + 1)]
        return out


def parse_subset(text: str | Sequence[int]) -> tuple[int, ...]:
    """Accept "1,3,5", "{1,3,5}", "[1, 3]" or a sequence of ints."""
    if isinstance(text, str):
        body = text.strip().strip("{}[]()")
        if not body.strip():
            return ()
        return tuple(sorted(int(x) for x in body.replace(" ", ",").split(",") if x))
    return tuple(sorted(int(x) for x in text))
