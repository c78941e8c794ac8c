"""Ideal specifications, point sampling on components, and script export.

An IdealSpec is a sum of generator families on one generic matrix
(``X`` is d x kl, ``Y`` is d x l). Families are variables of whole columns,
all r-minors of a column block, or explicit monomials. A minor family with
r larger than its block is vacuous: it is kept in the IdealSpec but skipped by
``check_vanishing`` and commented out in CAS scripts.

Neutral generator format, one family per line (``#`` starts a comment)::

    ideal <label>
    matrix <name> <rows> <cols>
    variables <col> <col> ...
    minors <r> cols <col> ... [rows <row> ...]
    monomial <row>,<col> <row>,<col> ...
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .exactmath import binomial, rank_rational
from .gridmodel import (
    GridShape,
    ValidationError,
    column,
    is_admissible,
    row,
    row_complement,
    sets_AB,
    x_of_S,
)
from .matroid import VectorConfig, in_F_S_j, minimal_sets


@dataclass(frozen=True)
class Variables:
    columns: tuple

    def vacuous(self, nrows: int) -> bool:
        return not self.columns

    def count(self, nrows: int) -> int:
        return nrows * len(self.columns)


@dataclass(frozen=True)
class Minors:
    size: int
    columns: tuple
    rows: tuple | None = None

    def vacuous(self, nrows: int) -> bool:
        nr = len(self.rows) if self.rows is not None else nrows
        return self.size > min(nr, len(self.columns))

    def count(self, nrows: int) -> int:
        nr = len(self.rows) if self.rows is not None else nrows
        return binomial(nr, self.size) * binomial(len(self.columns), self.size)


@dataclass(frozen=True)
class Monomials:
    monomials: tuple  # each a sorted tuple of (row, col) cells

    def vacuous(self, nrows: int) -> bool:
        return not self.monomials

    def count(self, nrows: int) -> int:
        return len(self.monomials)


@dataclass(frozen=True)
class IdealSpec:
    name: str
    rows: int
    cols: int
    families: tuple = ()
    label: str = ""

    def __post_init__(self):
        for f in self.families:
            cols = f.columns if not isinstance(f, Monomials) else tuple(c for m in f.monomials for _, c in m)
            if any(not 1 <= c <= self.cols for c in cols):
                raise ValidationError(f"family {f} has a column outside 1..{self.cols}")
            if isinstance(f, Minors):
                if f.size < 1:
                    raise ValidationError("minor size must be >= 1")
                if f.rows is not None and any(not 1 <= r <= self.rows for r in f.rows):
                    raise ValidationError(f"family {f} has a row outside 1..{self.rows}")

    def active(self) -> list:
        return [f for f in self.families if not f.vacuous(self.rows)]

    def vacuous_families(self) -> list:
        return [f for f in self.families if f.vacuous(self.rows)]

    def generator_count(self) -> int:
        """Number of listed generators (not a minimal count)."""
        return sum(f.count(self.rows) for f in self.active())

    def monomial_set(self) -> set:
        out = set()
        for f in self.families:
            if isinstance(f, Monomials):
                out.update(frozenset(m) for m in f.monomials)
        return out


def _mk(name, rows, cols, families, label):
    return IdealSpec(name, rows, cols, tuple(families), label)


def ideal_I_Delta(shape: GridShape) -> IdealSpec:
    fams = []
    for i in range(1, shape.k + 1):
        fams.append(Minors(shape.t, tuple(sorted(row(shape, i)))))
    for j in range(1, shape.l + 1):
        fams.append(Minors(shape.s, tuple(sorted(column(shape, j)))))
    return _mk("X", shape.d, shape.n, fams, f"I_Delta k={shape.k} l={shape.l} t={shape.t} s={shape.s}")


def _check_Sj(shape: GridShape, S, j: int):
    if shape.k != 2:
        raise ValidationError("needs k = 2")
    if not S:
        raise ValidationError("S must be nonempty")
    if not is_admissible(shape, S):
        raise ValidationError(f"S = {sorted(S)} is not admissible")
    x = x_of_S(shape, S)
    if not x <= j <= shape.t - 2:
        raise ValidationError(f"j = {j} is outside P(S) = [{x}, {shape.t - 2}]")


def ideal_I_S_j(shape: GridShape, S, j: int) -> IdealSpec:
    _check_Sj(shape, S, j)
    A, B, _, _ = sets_AB(shape, S)
    t = shape.t
    fams = [
        Minors(t, tuple(sorted(A))),
        Minors(t, tuple(sorted(B))),
        Minors(j + 1, tuple(sorted(A & B))),
        Minors(2 * t - j - 1, tuple(range(1, shape.l + 1))),
    ]
    return _mk("Y", shape.d, shape.l, fams, f"I_S_j S={sorted(S)} j={j}")


def _lift(shape: GridShape, cols) -> tuple:
    return tuple(sorted(p for c in cols for p in column(shape, c)))


def ideal_J_S_j(shape: GridShape, S, j: int) -> IdealSpec:
    _check_Sj(shape, S, j)
    S = frozenset(S)
    A, B, _, _ = sets_AB(shape, S)
    t = shape.t
    fams: list = [Variables(tuple(sorted(S)))]
    for c in range(1, shape.l + 1):
        fams.append(Minors(2, tuple(sorted(column(shape, c) - S))))
    fams += [
        Minors(t, _lift(shape, A)),
        Minors(t, _lift(shape, B)),
        Minors(j + 1, _lift(shape, A & B)),
        Minors(2 * t - j - 1, tuple(range(1, shape.n + 1))),
    ]
    return _mk("X", shape.d, shape.n, fams, f"J_S_j S={sorted(S)} j={j}")


def ideal_initial_J_empty(shape: GridShape | None = None, *, d: int = 0, l: int = 0, t: int = 0) -> IdealSpec:
    """Monomial generators of the initial ideal of the V_empty prime.

    Literal list: x_{i,2j-1} x_{i',2j} for i < i', and every diagonal
    monomial of a t x t submatrix of X; then reduced to minimal monomials.
    Pass a k = 2 shape, or d, l, t directly (which also allows l < t).
    """
    if shape is not None:
        if shape.k != 2:
            raise ValidationError("needs k = 2")
        d, l, t = shape.d, shape.l, shape.t
    if not (2 <= t <= d and l >= 1):
        raise ValidationError(f"need 2 <= t <= d and l >= 1, got d={d}, l={l}, t={t}")
    gens = []
    for c in range(1, l + 1):
        for i, ii in combinations(range(1, d + 1), 2):
            gens.append(((i, 2 * c - 1), (ii, 2 * c)))
    for rs in combinations(range(1, d + 1), t):
        for cs in combinations(range(1, 2 * l + 1), t):
            gens.append(tuple(zip(rs, cs)))
    mins = minimal_sets(gens)
    monos = tuple(sorted(tuple(sorted(m)) for m in mins))
    return _mk("X", d, 2 * l, [Monomials(monos)], f"initial ideal of J_empty d={d} l={l} t={t}")


def r_intersections(family, r: int) -> set[frozenset]:
    """All r-intersections of a family of sets.

    F is an r-intersection when F = F_1 cap ... cap F_r for members with
    (F_1 cap ... cap F_i) not inside F_{i+1} at every step.
    """
    fam = [frozenset(f) for f in family]
    out: set = set()

    def grow(cur: frozenset, depth: int):
        if depth == r:
            out.add(cur)
            return
        for f in fam:
            if not cur <= f:
                grow(cur & f, depth + 1)

    if r < 1:
        return out
    for f in fam:
        grow(f, 1)
    return out


def r_intersection_minors(shape: GridShape, S, r: int) -> IdealSpec:
    """Minors of size t - r + 1 on every r-intersection of S_1..S_k (on Y)."""
    comps = [row_complement(shape, S, i) for i in range(1, shape.k + 1)]
    fams = [Minors(shape.t - r + 1, tuple(sorted(F))) for F in sorted(r_intersections(comps, r), key=sorted)]
    fams = [f for f in fams if f.size >= 1]
    return _mk("Y", shape.d, shape.l, fams, f"r-intersection minors r={r} S={sorted(S)}")


def f_S_forced_empty(shape: GridShape, S) -> bool:
    """True when some nonempty t-intersection exists, which rules out F_S."""
    comps = [row_complement(shape, S, i) for i in range(1, shape.k + 1)]
    return any(F for F in r_intersections(comps, shape.t))


# -- points -----------------------------------------------------------------


def _submatrix_rank(point: VectorConfig, cols, rows=None) -> int:
    vecs = [point[c] for c in cols]
    if rows is not None:
        vecs = [[v[r - 1] for r in rows] for v in vecs]
    return rank_rational(vecs)


def check_vanishing(point: VectorConfig, spec: IdealSpec) -> bool:
    """Evaluate every non-vacuous family at a point with spec.cols vectors in Q^rows."""
    if len(point) != spec.cols or point.dim != spec.rows:
        raise ValidationError(
            f"point is {point.dim}x{len(point)} but the ideal lives on a {spec.rows}x{spec.cols} matrix"
        )
    for f in spec.active():
        if isinstance(f, Variables):
            if any(not point.is_zero(c) for c in f.columns):
                return False
        elif isinstance(f, Minors):
            if _submatrix_rank(point, f.columns, f.rows) > f.size - 1:
                return False
        else:
            for m in f.monomials:
                prod = Fraction(1)
                for i, c in m:
                    prod *= point[c][i - 1]
                if prod:
                    return False
    return True


@dataclass
class PhiParams:
    M: list
    N1: list
    N2: list
    N3: list


def _rand_q(rng: random.Random, nonzero: bool = True) -> Fraction:
    while True:
        p = rng.randint(-9, 9)
        if p or not nonzero:
            return Fraction(p, rng.randint(1, 5))


def _rand_mat(rng, r, c):
    return [[_rand_q(rng) for _ in range(c)] for _ in range(r)]


def _rng(seed: int, S, j: int, tag: str = "phi") -> random.Random:
    # string seeds are hashed deterministically, independent of PYTHONHASHSEED
    return random.Random(f"{tag}:{seed}:{','.join(map(str, sorted(S)))}:{j}")


def random_phi_params(shape: GridShape, S, j: int, rng: random.Random) -> PhiParams:
    A, B, _, _ = sets_AB(shape, S)
    t, d = shape.t, shape.d
    return PhiParams(
        M=_rand_mat(rng, d, 2 * t - 2 - j),
        N1=_rand_mat(rng, t - 1, len(A - B)),
        N2=_rand_mat(rng, j, len(A & B)),
        N3=_rand_mat(rng, t - 1, len(B - A)),
    )


def _matmul(X, Y):
    return [[sum((X[i][k] * Y[k][j] for k in range(len(Y))), Fraction(0)) for j in range(len(Y[0]))] for i in range(len(X))]


def phi(shape: GridShape, S, j: int, params: PhiParams) -> VectorConfig:
    """Place M[:, :t-1] N1 on A\\B, M[:, t-1-j:t-1] N2 on A&B, M[:, t-1-j:] N3 on B\\A."""
    A, B, _, _ = sets_AB(shape, S)
    t, d = shape.t, shape.d
    M = params.M
    cols: dict = {}

    def place(block_lo, block_hi, N, where):
        if not where:
            return
        sub = [r[block_lo:block_hi] for r in M]
        if block_hi == block_lo:
            prod = [[Fraction(0)] * len(where) for _ in range(d)]
        else:
            prod = _matmul(sub, N)
        for n, c in enumerate(sorted(where)):
            cols[c] = [prod[r][n] for r in range(d)]

    place(0, t - 1, params.N1, A - B)
    place(t - 1 - j, t - 1, params.N2, A & B)
    place(t - 1 - j, 2 * t - 2 - j, params.N3, B - A)
    return VectorConfig([cols[c] for c in range(1, shape.l + 1)], d)


def sample_phi(shape: GridShape, S, j: int, seed: int, retries: int = 10) -> VectorConfig:
    """A point of F_S^j from seeded random parameters.

    Non-generic draws (which land in a smaller stratum) are redrawn up to
    ``retries`` times.
    """
    _check_Sj(shape, S, j)
    rng = _rng(seed, S, j)
    for _ in range(retries):
        pt = phi(shape, S, j, random_phi_params(shape, S, j, rng))
        if in_F_S_j(shape, pt, S, j):
            return pt
    raise RuntimeError(f"no generic sample for S={sorted(S)}, j={j} after {retries} draws")


def first_phi_draw(shape: GridShape, S, j: int, seed: int) -> VectorConfig:
    """The first seeded draw, without the genericity retry."""
    _check_Sj(shape, S, j)
    return phi(shape, S, j, random_phi_params(shape, S, j, _rng(seed, S, j)))


def lift_psi(shape: GridShape, S, gl: VectorConfig, rng: random.Random) -> VectorConfig:
    """Spread an l-point over the grid: zero on S, lambda_p * gamma_c elsewhere."""
    S = frozenset(S)
    vecs = []
    for p in range(1, shape.n + 1):
        _, c = shape.position(p)
        if p in S:
            vecs.append([Fraction(0)] * gl.dim)
        else:
            lam = _rand_q(rng)
            vecs.append([lam * x for x in gl[c]])
    return VectorConfig(vecs, gl.dim)


def sample_psi(shape: GridShape, S, j: int, seed: int) -> VectorConfig:
    gl = sample_phi(shape, S, j, seed)
    return lift_psi(shape, S, gl, _rng(seed, S, j, "psi"))


# -- text output --------------------------------------------------------------


def _fmt(xs) -> str:
    return " ".join(str(x) for x in xs)


def to_generators(spec: IdealSpec) -> str:
    lines = [f"ideal {spec.label}" if spec.label else "ideal", f"matrix {spec.name} {spec.rows} {spec.cols}"]
    for f in spec.families:
        note = "  # vacuous" if f.vacuous(spec.rows) else ""
        if isinstance(f, Variables):
            lines.append(f"variables {_fmt(f.columns)}{note}")
        elif isinstance(f, Minors):
            tail = f" rows {_fmt(f.rows)}" if f.rows is not None else ""
            lines.append(f"minors {f.size} cols {_fmt(f.columns)}{tail}{note}")
        else:
            for m in f.monomials:
                lines.append("monomial " + " ".join(f"{i},{c}" for i, c in m))
    return "\n".join(lines) + "\n"


def parse_generators(text: str) -> IdealSpec:
    label = ""
    name, rows, cols = "X", 0, 0
    fams: list = []
    monos: list = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        if head == "ideal":
            label = rest.strip()
        elif head == "matrix":
            name, r, c = rest.split()
            rows, cols = int(r), int(c)
        elif head == "variables":
            fams.append(Variables(tuple(int(x) for x in rest.split())))
        elif head == "minors":
            toks = rest.split()
            size = int(toks[0])
            ci = toks.index("cols")
            ri = toks.index("rows") if "rows" in toks else len(toks)
            cs = tuple(int(x) for x in toks[ci + 1:ri])
            rs = tuple(int(x) for x in toks[ri + 1:]) if ri < len(toks) else None
            fams.append(Minors(size, cs, rs))
        elif head == "monomial":
            monos.append(tuple(tuple(int(v) for v in cell.split(",")) for cell in rest.split()))
        else:
            raise ValidationError(f"cannot parse line: {raw!r}")
    if monos:
        fams.append(Monomials(tuple(monos)))
    return IdealSpec(name, rows, cols, tuple(fams), label)


def to_macaulay2(spec: IdealSpec) -> str:
    v = spec.name.lower()
    d, m = spec.rows, spec.cols
    out = [f"-- {spec.label}" if spec.label else "-- ideal"]
    out.append(f"R = QQ[{v}_(1,1)..{v}_({d},{m})];")
    out.append(f"{spec.name} = matrix table({d}, {m}, (i,j) -> {v}_(i+1,j+1));")
    out.append("I = ideal(0_R);")
    for f in spec.families:
        if isinstance(f, Variables):
            cols = ",".join(str(c - 1) for c in f.columns)
            line = f"I = I + ideal({spec.name}_{{{cols}}});"
        elif isinstance(f, Minors):
            cols = ",".join(str(c - 1) for c in f.columns)
            if f.rows is None:
                block = f"{spec.name}_{{{cols}}}"
            else:
                rows = ",".join(str(r - 1) for r in f.rows)
                block = f"submatrix({spec.name}, {{{rows}}}, {{{cols}}})"
            line = f"I = I + minors({f.size}, {block});"
        else:
            terms = ["*".join(f"{v}_({i},{c})" for i, c in mono) for mono in f.monomials]
            line = f"I = I + ideal({', '.join(terms)});" if terms else ""
        if f.vacuous(spec.rows):
            out.append("-- vacuous: " + line)
        elif line:
            out.append(line)
    out.append("I = trim I;")
    out.append("print numgens I;")
    return "\n".join(out) + "\n"


DIALECTS = {"generators": to_generators, "macaulay2": to_macaulay2}


def emit_cas_script(spec: IdealSpec, dialect: str = "generators") -> str:
    try:
        return DIALECTS[dialect](spec)
    except KeyError:
        raise ValidationError(f"unknown dialect {dialect!r}; choose from {sorted(DIALECTS)}") from None
