"""Degrees of the CI variety and of its empty-support component.

The degree of the component V_empty has four independent routes:

* ``lgv``: mixed derivative at 1 of the path generating function G_{d,l,t}
* ``paths``: weighted count of non-intersecting West-South path families
* ``transversal``: sum of m(A) over minimal transversals of A_t
* ``hypergraph``: number of minimal transversals of B

plus the closed form when d = t.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exactmath import (
    SparsePoly,
    binomial,
    complete_homogeneous,
    det_int,
    det_poly,
    derivative_sum_at_one,
)
from .gridmodel import ValidationError

METHODS = ("lgv", "paths", "transversal", "hypergraph", "closed")


class CrossCheckError(RuntimeError):
    """Independent methods returned different values."""


def deg_determinantal(d: int, m: int, t: int) -> int:
    """Degree of the ideal of t-minors of a generic d x m matrix."""
    if t < 1 or t > min(d, m) + 1:
        raise ValidationError(f"need 1 <= t <= min(d, m) + 1, got d={d}, m={m}, t={t}")
    if t == 1:
        return 1
    n = t - 1
    mat = [[binomial(d + m - i - j, d - i) for j in range(1, n + 1)] for i in range(1, n + 1)]
    return det_int(mat)


def alpha(d: int, l: int, t: int) -> int:
    """Sum over u of C(l, u) times the two determinantal degrees of widths u, l-u."""
    total = 0
    for u in range(t - 1, l - t + 2):
        total += binomial(l, u) * deg_determinantal(d, u, t) * deg_determinantal(d, l - u, t)
    return total


def beta(d: int, l: int, t: int) -> int:
    e = 2 * t - 2 - l
    if e < 0:
        return 0
    return binomial(l, t - 1) * binomial(t - 1, e) * d ** e


def _check_degree_args(d: int, l: int, t: int) -> None:
    if not 2 <= t <= min(d, l):
        raise ValidationError(f"need 2 <= t <= min(d, l), got d={d}, l={l}, t={t}")


def lgv_generating_function(d: int, l: int, t: int) -> SparsePoly:
    """G_{d,l,t}: column-profile generating function of path families.

    The monomial prefactor prod z_j^min(j, t-1) times
    det( h_{d-i}(z_j, ..., z_l) ) for i, j = 1..t-1.
    """
    if not 2 <= t <= min(d, l) + 1:
        raise ValidationError(f"need 2 <= t <= min(d, l) + 1, got d={d}, l={l}, t={t}")
    n = t - 1
    mat = [[complete_homogeneous(d - i, j, l, l) for j in range(1, n + 1)] for i in range(1, n + 1)]
    g = det_poly(mat)
    pre = SparsePoly.monomial([min(j, t - 1) for j in range(1, l + 1)])
    return g * pre


def deg_V_empty_lgv(d: int, l: int, t: int) -> int:
    _check_degree_args(d, l, t)
    return derivative_sum_at_one(lgv_generating_function(d, l, t))


def deg_V_empty_paths(d: int, l: int, t: int) -> int:
    from .oracle import enumerate_path_families, family_weight

    _check_degree_args(d, l, t)
    return sum(family_weight(f, l) for f in enumerate_path_families(d, l, t))


def deg_V_empty_transversal(d: int, l: int, t: int) -> int:
    from .oracle import hypergraph_A, iter_minimal_transversals, multiplicity_m

    _check_degree_args(d, l, t)
    return sum(multiplicity_m(A, d, l) for A in iter_minimal_transversals(hypergraph_A(d, l, t)))


def deg_V_empty_hypergraph(d: int, l: int, t: int) -> int:
    from .oracle import count_minimal_transversals, hypergraph_B

    _check_degree_args(d, l, t)
    return count_minimal_transversals(hypergraph_B(d, l, t))


def deg_V_empty_closed_form(d: int, l: int) -> int:
    """d^(d-1) (d-1)^(l-d+1) C(l, d-1); only valid for t = d."""
    if l < d - 1:
        raise ValidationError(f"closed form needs l >= d - 1, got d={d}, l={l}")
    return d ** (d - 1) * (d - 1) ** (l - d + 1) * binomial(l, d - 1)


_DISPATCH = {
    "lgv": deg_V_empty_lgv,
    "paths": deg_V_empty_paths,
    "transversal": deg_V_empty_transversal,
    "hypergraph": deg_V_empty_hypergraph,
}


def applicable_methods(d: int, l: int, t: int) -> tuple[str, ...]:
    out = ["lgv", "paths", "transversal", "hypergraph"]
    if d == t:
        out.append("closed")
    return tuple(out)


def deg_V_empty(d: int, l: int, t: int, method: str = "lgv") -> int:
    if method == "closed":
        _check_degree_args(d, l, t)
        if d != t:
            raise ValidationError("the closed form only applies when d = t")
        return deg_V_empty_closed_form(d, l)
    try:
        fn = _DISPATCH[method]
    except KeyError:
        raise ValidationError(f"unknown method {method!r}; choose from {METHODS}") from None
    return fn(d, l, t)


def deg_V_empty_all(d: int, l: int, t: int, methods=None) -> dict[str, int]:
    """Run several methods and insist they agree."""
    methods = tuple(methods) if methods else applicable_methods(d, l, t)
    vals = {m: deg_V_empty(d, l, t, m) for m in methods}
    if len(set(vals.values())) > 1:
        raise CrossCheckError(f"degree methods disagree for d={d}, l={l}, t={t}: {vals}")
    return vals


@dataclass
class DegreeReport:
    d: int
    l: int
    t: int
    deg_V_empty: int
    deg_V_Delta: int
    case: str
    alpha: int | None = None
    beta: int | None = None
    methods: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "l": self.l,
            "t": self.t,
            "k": 2,
            "deg_V_empty": self.deg_V_empty,
            "deg_V_Delta": self.deg_V_Delta,
            "case": self.case,
            "alpha": self.alpha,
            "beta": self.beta,
            "methods": dict(sorted(self.methods.items())),
        }


def deg_V_Delta(d: int, l: int, t: int, methods=("lgv",)) -> DegreeReport:
    """Degree of V_Delta for k = 2.

    At equality of the two indicator arguments both terms are added, since
    V_empty and the competing family then have the same dimension.
    """
    _check_degree_args(d, l, t)
    vals = deg_V_empty_all(d, l, t, methods)
    dv = next(iter(vals.values()))
    if l > 2 * t - 2:
        a = alpha(d, l, t)
        key = (t - 1) * (d - t + 1)
        total = (a if key >= l else 0) + (dv if key <= l else 0)
        case = "l>2t-2: " + ("alpha+V_empty" if key == l else "alpha" if key > l else "V_empty")
        return DegreeReport(d, l, t, dv, total, case, alpha=a, methods=vals)
    b = beta(d, l, t)
    key = (d - t) * (l - t) + d - 1
    total = (b if key >= l else 0) + (dv if key <= l else 0)
    case = "l<=2t-2: " + ("beta+V_empty" if key == l else "beta" if key > l else "V_empty")
    return DegreeReport(d, l, t, dv, total, case, beta=b, methods=vals)


def dimension_difference(d: int, l: int, t: int) -> int:
    """dim(top V_S^j family) - dim(V_empty) for k = 2."""
    if l <= 2 * t - 2:
        return (d - t) * (l - t) - l + d - 1
    return (t - 1) * (d - t + 1) - l
