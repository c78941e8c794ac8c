"""Brute-force ground truth for the degree computations.

Grid cells are 1-based (row, column) pairs. The d x l grid carries the
hypergraph A_t of diagonals of t x t submatrices; the d x 2l grid carries
B = B_t cup C_t. Minimal transversals, non-intersecting West-South path
families and the projection/multiplicity maps live here too.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

from .gridmodel import Hypergraph, ValidationError

Cell = tuple[int, int]


def _check(d: int, l: int, t: int) -> None:
    if not 2 <= t <= min(d, l):
        raise ValidationError(f"need 2 <= t <= min(d, l), got d={d}, l={l}, t={t}")


def grid_cells(d: int, m: int) -> tuple[Cell, ...]:
    return tuple((i, j) for i in range(1, d + 1) for j in range(1, m + 1))


def _diagonals(rows: Iterable[int], cols: Iterable[int], t: int, col_ok=None):
    for rs in combinations(rows, t):
        for cs in combinations(cols, t):
            if col_ok is None or col_ok(cs):
                yield frozenset(zip(rs, cs))


def hypergraph_A(d: int, l: int, t: int) -> Hypergraph:
    _check(d, l, t)
    edges = tuple(_diagonals(range(1, d + 1), range(1, l + 1), t))
    return Hypergraph(grid_cells(d, l), edges)


def hypergraph_B_t(d: int, l: int, t: int) -> Hypergraph:
    def one_per_pair(cs):
        pairs = [(c + 1) // 2 for c in cs]
        return len(set(pairs)) == len(pairs)

    edges = tuple(_diagonals(range(1, d + 1), range(1, 2 * l + 1), t, one_per_pair))
    return Hypergraph(grid_cells(d, 2 * l), edges)


def hypergraph_C_t(d: int, l: int) -> Hypergraph:
    edges = tuple(
        frozenset({(i, 2 * j - 1), (ii, 2 * j)})
        for j in range(1, l + 1)
        for i, ii in combinations(range(1, d + 1), 2)
    )
    return Hypergraph(grid_cells(d, 2 * l), edges)


def hypergraph_B(d: int, l: int, t: int) -> Hypergraph:
    """B_t together with C_t on the d x 2l grid."""
    if not (2 <= t <= d and l >= 1):
        raise ValidationError(f"need 2 <= t <= d and l >= 1, got d={d}, l={l}, t={t}")
    return Hypergraph(grid_cells(d, 2 * l), hypergraph_B_t(d, l, t).edges + hypergraph_C_t(d, l).edges)


def _mmcs(n: int, edge_masks: list[int]) -> Iterator[int]:
    """Minimal hitting sets of the given edges, as vertex bitmasks.

    Follows the MMCS scheme: branch on the uncovered edge with the fewest
    candidate vertices and keep, for every chosen vertex, the set of edges
    it alone covers. A branch dies as soon as some chosen vertex loses all
    of its private edges, so every output is minimal and none repeats.
    """
    m = len(edge_masks)
    if m == 0:
        yield 0
        return
    vedges = [[e for e in range(m) if edge_masks[e] >> v & 1] for v in range(n)]
    hits = [0] * m          # number of chosen vertices in each edge
    crit = [0] * n          # bitmask over edges: private edges of a chosen vertex
    owner = [-1] * m        # the unique chosen vertex when hits == 1
    chosen: list[int] = []
    uncov = (1 << m) - 1

    def rec(cand: int, uncov: int):
        if not uncov:
            yield sum(1 << v for v in chosen)
            return
        best = None
        best_cnt = n + 1
        rest = uncov
        while rest:
            low = rest & -rest
            e = low.bit_length() - 1
            cnt = bin(edge_masks[e] & cand).count("1")
            if cnt < best_cnt:
                best, best_cnt = e, cnt
                if cnt == 0:
                    break
            rest ^= low
        if best_cnt == 0:
            return
        C = edge_masks[best] & cand
        cand &= ~C
        verts = []
        rest = C
        while rest:
            low = rest & -rest
            verts.append(low.bit_length() - 1)
            rest ^= low
        for v in verts:
            # add v
            lost = []
            new_uncov = uncov
            cv = 0
            for e in vedges[v]:
                h = hits[e]
                if h == 0:
                    cv |= 1 << e
                    owner[e] = v
                    new_uncov &= ~(1 << e)
                elif h == 1:
                    u = owner[e]
                    crit[u] &= ~(1 << e)
                    lost.append((u, e))
                hits[e] = h + 1
            crit[v] = cv
            if all(crit[u] for u in chosen):
                chosen.append(v)
                yield from rec(cand, new_uncov)
                chosen.pop()
            # undo
            for e in vedges[v]:
                hits[e] -= 1
                if hits[e] == 0:
                    owner[e] = -1
            for u, e in lost:
                crit[u] |= 1 << e
                owner[e] = u
            crit[v] = 0
            cand |= 1 << v

    yield from rec((1 << n) - 1, uncov)


def iter_minimal_transversals(h: Hypergraph) -> Iterator[frozenset]:
    """Minimal transversals in enumeration order (no sorting)."""
    index = {v: i for i, v in enumerate(h.vertices)}
    masks = [sum(1 << index[v] for v in e) for e in h.edges]
    for mask in _mmcs(len(h.vertices), masks):
        yield frozenset(h.vertices[i] for i in range(len(h.vertices)) if mask >> i & 1)


def count_minimal_transversals(h: Hypergraph) -> int:
    index = {v: i for i, v in enumerate(h.vertices)}
    masks = [sum(1 << index[v] for v in e) for e in h.edges]
    return sum(1 for _ in _mmcs(len(h.vertices), masks))


def minimal_transversals(h: Hypergraph) -> list[frozenset]:
    """All inclusion-minimal transversals, sorted by their sorted vertex tuples."""
    order = {v: i for i, v in enumerate(h.vertices)}
    return sorted(iter_minimal_transversals(h), key=lambda T: sorted(order[v] for v in T))


def minimal_transversals_bruteforce(h: Hypergraph) -> list[frozenset]:
    """Exhaustive reference for tiny hypergraphs (2^n subsets)."""
    n = len(h.vertices)
    if n > 20:
        raise ValidationError("brute force is limited to 20 vertices")
    index = {v: i for i, v in enumerate(h.vertices)}
    masks = [sum(1 << index[v] for v in e) for e in h.edges]
    hitting = [s for s in range(1 << n) if all(s & e for e in masks)]
    hs = set(hitting)
    out = []
    for s in hitting:
        if all((s & ~(1 << i)) not in hs for i in range(n) if s >> i & 1):
            out.append(frozenset(h.vertices[i] for i in range(n) if s >> i & 1))
    order = {v: i for i, v in enumerate(h.vertices)}
    return sorted(out, key=lambda T: sorted(order[v] for v in T))


def is_transversal(h: Hypergraph, A: Iterable) -> bool:
    A = frozenset(A)
    return all(e & A for e in h.edges)


# West-South path families ------------------------------------------------


def enumerate_path_families(d: int, l: int, t: int) -> Iterator[tuple[tuple[Cell, ...], ...]]:
    """Non-intersecting families of t-1 West-South paths in the d x l grid.

    Path p starts at (p, l) and ends at (d, p); paths are built in order
    p = 1..t-1 and each one avoids the cells already used.
    """
    _check(d, l, t)
    used: set[Cell] = set()
    paths: list[tuple[Cell, ...]] = []

    def walk(p: int, cell: Cell, trail: list[Cell]):
        i, j = cell
        if cell == (d, p):
            yield tuple(trail)
            return
        # south then west keeps the output order stable
        for nxt in ((i + 1, j), (i, j - 1)):
            ni, nj = nxt
            if ni > d or nj < p or nxt in used:
                continue
            used.add(nxt)
            trail.append(nxt)
            yield from walk(p, nxt, trail)
            trail.pop()
            used.discard(nxt)

    def build_clean(p: int):
        if p == t:
            yield tuple(paths)
            return
        start = (p, l)
        if start in used:
            return
        used.add(start)
        for path in list(walk(p, start, [start])):
            cells = set(path)
            paths.append(path)
            used.update(cells)
            yield from build_clean(p + 1)
            used.difference_update(cells - {start})
            paths.pop()
        used.discard(start)

    yield from build_clean(1)


def staircase_family(d: int, l: int, t: int) -> tuple[tuple[Cell, ...], ...]:
    """P_i runs along row i from column l to column i, then down column i."""
    _check(d, l, t)
    fam = []
    for p in range(1, t):
        path = [(p, j) for j in range(l, p - 1, -1)] + [(i, p) for i in range(p + 1, d + 1)]
        fam.append(tuple(path))
    return tuple(fam)


def family_cells(f) -> frozenset[Cell]:
    return frozenset(c for path in f for c in path)


def family_weight(f, l: int | None = None) -> int:
    """Product over columns of the number of cells the family occupies."""
    cells = family_cells(f)
    if l is None:
        l = max(j for _, j in cells)
    w = 1
    for j in range(1, l + 1):
        w *= sum(1 for c in cells if c[1] == j)
    return w


def complement_of_family(f, d: int, l: int) -> frozenset[Cell]:
    return frozenset(grid_cells(d, l)) - family_cells(f)


def pi_map(A: Iterable[Cell]) -> frozenset[Cell]:
    """Cells (i, j) such that both (i, 2j-1) and (i, 2j) are in A."""
    A = frozenset(A)
    return frozenset((i, (c + 1) // 2) for i, c in A if c % 2 == 1 and (i, c + 1) in A)


def multiplicity_m(A: Iterable[Cell], d: int, l: int) -> int:
    """Product over columns j of d - |A cap column j|."""
    A = frozenset(A)
    out = 1
    for j in range(1, l + 1):
        out *= d - sum(1 for _, c in A if c == j)
    return out


def rho(A: Iterable[Cell], d: int, l: int) -> list[frozenset[Cell]]:
    """Minimal transversals of B lying over a minimal transversal A of A_t.

    In each column j the cells of A are doubled to (i, 2j-1), (i, 2j). The
    remaining rows must block every C_t edge {(i, 2j-1), (i', 2j)}, i < i':
    skip one free row, take the odd copies above it and the even copies
    below it. That gives d - |A cap column j| choices per column.
    """
    A = frozenset(A)
    per_col = []
    for j in range(1, l + 1):
        rows_a = {i for i, c in A if c == j}
        free = [i for i in range(1, d + 1) if i not in rows_a]
        base = {(i, 2 * j - 1) for i in rows_a} | {(i, 2 * j) for i in rows_a}
        options = []
        for skip in free:
            # rows above the skipped one take the odd copy, rows below the even
            extra = {(i, 2 * j - 1) for i in free if i < skip} | {(i, 2 * j) for i in free if i > skip}
            options.append(frozenset(base | extra))
        per_col.append(options)
    out = [frozenset()]
    for options in per_col:
        out = [a | o for a in out for o in options]
    return out
