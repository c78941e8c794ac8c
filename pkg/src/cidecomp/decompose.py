"""Irreducible components of V_Delta and their dimensions.

Two regimes are covered: k = 2 with any t <= l, and t = l with any k.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .gridmodel import (
    GridShape,
    ValidationError,
    column,
    enumerate_admissible,
    is_admissible,
    maximal_js,
    row,
    row_type,
    sets_AB,
    x_of_S,
)


@dataclass(frozen=True)
class ComponentDescriptor:
    kind: str  # "Empty", "TEqL" or "KTwo"
    S: tuple = ()
    j: int | None = None
    dimension: int = 0
    type: tuple = ()

    @property
    def ideal_ref(self) -> dict:
        """Which ideal cuts this component out (built on demand by ``ideals``)."""
        if self.kind == "KTwo":
            return {"target": "J", "S": list(self.S), "j": self.j}
        if self.kind == "Empty":
            return {"target": "closure", "S": []}
        return {"target": "closure", "S": list(self.S)}

    def sort_key(self):
        return (len(self.S), self.S, -1 if self.j is None else self.j)

    def to_json(self) -> dict:
        out = {"kind": self.kind, "S": list(self.S), "dimension": self.dimension, "type": list(self.type)}
        if self.j is not None:
            out["j"] = self.j
        out["ideal"] = self.ideal_ref
        return out


@dataclass
class DecompositionReport:
    shape: GridShape
    components: list = field(default_factory=list)
    dim_V_Delta: int = 0
    dim_source: str = "formula"
    warnings: list = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.components)

    @property
    def top_ids(self) -> list[int]:
        top = max(c.dimension for c in self.components)
        return [n for n, c in enumerate(self.components) if c.dimension == top]

    def type_counts(self) -> dict:
        """Number of nonempty-S components per row type, counting each S once."""
        seen: dict = {}
        for c in self.components:
            if c.S:
                seen.setdefault(c.type, set()).add(c.S)
        return {typ: len(v) for typ, v in sorted(seen.items())}

    def summary(self) -> dict:
        types = {self.components[n].type for n in self.top_ids if self.components[n].S}
        tops: list = ["empty"] if any(not self.components[n].S for n in self.top_ids) else []
        tops += [list(t) for t in sorted(types)]
        return {
            "shape": self.shape.as_dict(),
            "count": self.count,
            "dim_V_Delta": self.dim_V_Delta,
            "dim_source": self.dim_source,
            "top_dimensional_types": tops,
            "type_counts": {",".join(map(str, k)): v for k, v in self.type_counts().items()},
            "warnings": list(self.warnings),
        }

    def to_json(self) -> dict:
        out = self.summary()
        out["top_ids"] = self.top_ids
        out["components"] = [c.to_json() for c in self.components]
        return out


def _nonneg(value: int, what: str) -> int:
    if value < 0:
        raise AssertionError(f"{what} came out negative ({value}); a precondition was violated")
    return value


def dim_transfer(dimF: int, k: int, l: int, sizeS: int) -> int:
    return dimF + l * (k - 1) - sizeS


def _check_j(shape: GridShape, S, j: int):
    if not S:
        raise ValidationError("S must be nonempty")
    if not is_admissible(shape, S):
        raise ValidationError(f"S = {sorted(S)} is not admissible")
    x = x_of_S(shape, S)
    if not x <= j <= shape.t - 2:
        raise ValidationError(f"j = {j} is outside P(S) = [{x}, {shape.t - 2}]")


def _quad(t: int, j: int) -> int:
    return j * j + 2 * (t - 1 - j) ** 2 + 2 * j * (t - 1 - j)


def dim_F_S_j(shape: GridShape, S, j: int) -> int:
    _check_j(shape, S, j)
    _, _, u, v = sets_AB(shape, S)
    d, l, t = shape.d, shape.l, shape.t
    val = d * (2 * t - 2 - j) + (t - 1) * (u + v) + j * (l - u - v) - _quad(t, j)
    return _nonneg(val, "dim F_S^j")


def dim_V_S_j(shape: GridShape, S, j: int) -> int:
    _check_j(shape, S, j)
    _, _, u, v = sets_AB(shape, S)
    d, l, t = shape.d, shape.l, shape.t
    val = d * (2 * t - 2 - j) + (t - 2) * (u + v) + j * (l - u - v) - _quad(t, j) + l
    return _nonneg(val, "dim V_S^j")


def dim_V_empty(shape: GridShape) -> int:
    k, l, t, d = shape.k, shape.l, shape.t, shape.d
    vals = []
    if k == 2:
        vals.append((t - 1) * (d + l - t + 1) + l)
    if t == l:
        vals.append(l * (k + d) - d - 1)
    if not vals:
        raise ValidationError("dim V_empty is only known for k = 2 or t = l")
    if len(set(vals)) != 1:
        raise AssertionError(f"dimension formulas for V_empty disagree: {vals}")
    return _nonneg(vals[0], "dim V_empty")


def in_R(shape: GridShape, S) -> bool:
    """|S cap R_i| = 1 for every row and no column lies inside S."""
    S = frozenset(S)
    if any(len(row(shape, i) & S) != 1 for i in range(1, shape.k + 1)):
        return False
    return not any(column(shape, j) <= S for j in range(1, shape.l + 1))


def dim_V_S_teql(shape: GridShape, S) -> int:
    if shape.t != shape.l:
        raise ValidationError("this dimension formula needs t = l")
    if not in_R(shape, S):
        raise ValidationError(f"S = {sorted(S)} does not pick one cell per row avoiding full columns")
    return _nonneg(shape.l * (shape.k + shape.d - 1) - shape.k, "dim V_S")


def _check_decomp(shape: GridShape):
    if shape.d < shape.t:
        raise ValidationError(f"decomposition needs d >= t, got d={shape.d}, t={shape.t}")


def decompose_t_eq_l(shape: GridShape) -> DecompositionReport:
    if shape.t != shape.l:
        raise ValidationError(f"need t = l, got t={shape.t}, l={shape.l}")
    warnings = []
    if shape.d < shape.t:
        # the index set R and the formulas do not depend on d, but the
        # strata are only nonempty once d >= t
        warnings.append(
            f"d={shape.d} < t={shape.t}: components and dimensions are reported from the "
            "combinatorial index set; the geometric statements need d >= t"
        )
    comps = [ComponentDescriptor("Empty", (), None, dim_V_empty(shape), (0,) * shape.k)]
    for S in enumerate_admissible(shape):
        if in_R(shape, S):
            comps.append(ComponentDescriptor("TEqL", S, None, dim_V_S_teql(shape, S), row_type(shape, S)))
    comps.sort(key=ComponentDescriptor.sort_key)
    rep = DecompositionReport(shape, comps, warnings=warnings)
    rep.dim_V_Delta = max(c.dimension for c in comps)
    if shape.k == 2 and not warnings:
        if rep.dim_V_Delta != dim_V_Delta(shape):
            raise AssertionError("component maximum disagrees with the dimension formula")
    else:
        rep.dim_source = "components"
    return rep


def decompose_k2(shape: GridShape) -> DecompositionReport:
    if shape.k != 2:
        raise ValidationError(f"need k = 2, got k = {shape.k}")
    _check_decomp(shape)
    comps = [ComponentDescriptor("Empty", (), None, dim_V_empty(shape), (0, 0))]
    for S in enumerate_admissible(shape):
        if not S:
            continue
        typ = row_type(shape, S)
        for j in maximal_js(shape, S):
            comps.append(ComponentDescriptor("KTwo", S, j, dim_V_S_j(shape, S, j), typ))
    comps.sort(key=ComponentDescriptor.sort_key)
    rep = DecompositionReport(shape, comps)
    rep.dim_V_Delta = dim_V_Delta(shape)
    return rep


def decompose(shape: GridShape, method: str | None = None) -> DecompositionReport:
    """k = 2 goes through the (S, j) strata; otherwise t = l is required."""
    if method == "teql" or (method is None and shape.k != 2):
        return decompose_t_eq_l(shape)
    return decompose_k2(shape)


def dim_V_Delta(shape: GridShape) -> int:
    if shape.k != 2:
        raise ValidationError("closed dimension formula needs k = 2")
    d, l, t = shape.d, shape.l, shape.t
    dv = dim_V_empty(shape)
    if l < 2 * t - 2:
        return max(d * l + 2 * t - l - 2, dv)
    return max((t - 1) * (2 * d - 2 * t + l + 2), dv)


def top_j0(shape: GridShape) -> int:
    """j of the top-dimensional V_S^j family, by the (l, d) versus 2t-2 table."""
    d, l, t = shape.d, shape.l, shape.t
    m = 2 * t - 2
    if (l < m <= d) or (l <= d < m):
        return m - l
    if (d < m <= l) or (d <= l < m):
        return m - d
    return 0


def top_dimensional_components(shape: GridShape) -> list[tuple]:
    """[((u+v), j0, dim)] for the winning V_S^j family, plus ("empty", None, dim)
    when V_empty ties or wins."""
    if shape.k != 2:
        raise ValidationError("needs k = 2")
    d, l, t = shape.d, shape.l, shape.t
    uv = min(2 * (l - t + 1), l)
    j0 = top_j0(shape)
    fam = d * (2 * t - 2 - j0) + (t - 2) * uv + j0 * (l - uv) - _quad(t, j0) + l
    dv = dim_V_empty(shape)
    out = []
    if fam >= dv:
        out.append((uv, j0, fam))
    if dv >= fam:
        out.append(("empty", None, dv))
    return out
