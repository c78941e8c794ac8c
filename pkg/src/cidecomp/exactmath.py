"""Exact arithmetic kernels.

Python ints are arbitrary precision and ``fractions.Fraction`` is always
reduced with a positive denominator, so they serve directly as the integer
and rational types. This module adds the few pieces the stdlib lacks:
fraction-free determinants, exact rank, and a small sparse polynomial type.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Mapping, Sequence


def binomial(n: int, k: int) -> int:
    """C(n, k), with 0 outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def _check_square(m: Sequence[Sequence]) -> int:
    n = len(m)
    for row in m:
        if len(row) != n:
            raise ValueError("matrix is not square")
    return n


def det_int(m: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by Bareiss elimination.

    Every intermediate division is exact, so entries stay integral and
    no rational arithmetic is needed.
    """
    n = _check_square(m)
    if n == 0:
        return 1
    a = [[int(x) for x in row] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * piv - aik * row_k[j]) // prev
        prev = piv
    return sign * a[n - 1][n - 1]


def rank_rational(m: Sequence[Sequence]) -> int:
    """Exact rank of a matrix with int or Fraction entries."""
    rows = [[Fraction(x) for x in row] for row in m if len(row)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        piv = None
        for r in range(rank, len(rows)):
            if rows[r][c] != 0:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        inv = 1 / pr[c]
        for r in range(rank + 1, len(rows)):
            f = rows[r][c]
            if f:
                f *= inv
                row = rows[r]
                for cc in range(c, ncols):
                    if pr[cc]:
                        row[cc] -= f * pr[cc]
        rank += 1
        if rank == len(rows):
            break
    return rank


def transpose(m: Sequence[Sequence]) -> list[list]:
    if not m:
        return []
    return [list(col) for col in zip(*m)]


def parse_rational(text) -> Fraction:
    """Parse "p/q", "p" or a number into a Fraction."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    return Fraction(str(text).strip())


class SparsePoly:
    """Polynomial in z1..zn with int coefficients, stored as {exponents: coeff}.

    Zero coefficients are never stored. Iteration and printing go through
    exponent vectors in ascending lexicographic order.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, int] | None = None):
        self.nvars = nvars
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != nvars or any(x < 0 for x in e):
                raise ValueError(f"bad exponent vector {e} for {nvars} variables")
            c = int(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if clean[e] == 0:
                    del clean[e]
        self.terms = clean

    @classmethod
    def constant(cls, nvars: int, c: int) -> "SparsePoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exps: Sequence[int], c: int = 1) -> "SparsePoly":
        return cls(len(exps), {tuple(exps): c})

    @classmethod
    def variable(cls, nvars: int, j: int) -> "SparsePoly":
        """The variable z_j (1-based)."""
        e = [0] * nvars
        e[j - 1] = 1
        return cls(nvars, {tuple(e): 1})

    def _same(self, other: "SparsePoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other):
        if isinstance(other, int):
            other = SparsePoly.constant(self.nvars, other)
        self._same(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return SparsePoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = SparsePoly.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return SparsePoly(self.nvars)
            return SparsePoly._raw(self.nvars, {e: c * other for e, c in self.terms.items()})
        self._same(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SparsePoly._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    def __eq__(self, other):
        if isinstance(other, int):
            other = SparsePoly.constant(self.nvars, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps: Sequence[int]) -> int:
        return self.terms.get(tuple(exps), 0)

    def items(self):
        """(exponents, coeff) pairs in ascending lexicographic order."""
        return sorted(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def evaluate(self, point: Sequence) -> Fraction | int:
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= x ** k
            total += v
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.items():
            factors = [f"z{j + 1}" if k == 1 else f"z{j + 1}^{k}" for j, k in enumerate(e) if k]
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"SparsePoly({self.nvars}, {str(self)!r})"

    @classmethod
    def parse(cls, text: str, nvars: int) -> "SparsePoly":
        """Inverse of ``str`` for polynomials in z1..z{nvars}."""
        text = text.strip()
        if text == "0":
            return cls(nvars)
        pieces = re.split(r" ([+-]) ", text)
        signs = ["+"] + pieces[1::2]
        terms: dict = {}
        for sign, body in zip(signs, pieces[0::2]):
            coeff = -1 if sign == "-" else 1
            if body.startswith("-"):
                coeff, body = -coeff, body[1:]
            e = [0] * nvars
            for f in body.split("*"):
                m = re.fullmatch(r"z(\d+)(?:\^(\d+))?", f)
                if m:
                    e[int(m.group(1)) - 1] += int(m.group(2) or 1)
                else:
                    coeff *= int(f)
            terms[tuple(e)] = terms.get(tuple(e), 0) + coeff
        return cls(nvars, terms)


def complete_homogeneous(deg: int, first: int, last: int, nvars: int) -> SparsePoly:
    """h_deg(z_first, ..., z_last) as a polynomial in z1..z_nvars.

    An empty range gives 1 for deg 0 and the zero polynomial otherwise.
    """
    if deg < 0:
        return SparsePoly(nvars)
    idx = list(range(first - 1, last))
    if not idx:
        return SparsePoly.constant(nvars, 1) if deg == 0 else SparsePoly(nvars)
    terms = {}
    for choice in combinations_with_replacement(idx, deg):
        e = [0] * nvars
        for j in choice:
            e[j] += 1
        terms[tuple(e)] = 1
    return SparsePoly._raw(nvars, terms)


def det_poly(m: Sequence[Sequence[SparsePoly]]) -> SparsePoly:
    """Determinant of a square matrix of SparsePoly by Laplace expansion.

    Minors are memoised on the set of remaining columns, which keeps the
    cost at O(2^n n) polynomial products.
    """
    n = _check_square(m)
    if n == 0:
        raise ValueError("empty matrix has no ring to live in")
    nvars = m[0][0].nvars

    @lru_cache(maxsize=None)
    def minor(row: int, cols: tuple) -> SparsePoly:
        if row == n:
            return SparsePoly.constant(nvars, 1)
        acc = SparsePoly(nvars)
        for pos, c in enumerate(cols):
            entry = m[row][c]
            if entry.is_zero():
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1:])
            term = entry * sub
            acc = acc - term if pos % 2 else acc + term
        return acc

    return minor(0, tuple(range(n)))


def derivative_sum_at_one(p: SparsePoly) -> int:
    """Value of d/dz1 ... d/dzn p at the all-ones point."""
    total = 0
    for e, c in p.terms.items():
        v = c
        for k in e:
            v *= k
            if not v:
                break
        total += v
    return total
