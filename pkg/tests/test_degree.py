from __future__ import annotations

import pytest

from cidecomp.decompose import dim_V_empty, top_dimensional_components
from cidecomp.degree import (
    CrossCheckError,
    alpha,
    applicable_methods,
    beta,
    deg_determinantal,
    deg_V_Delta,
    deg_V_empty,
    deg_V_empty_all,
    deg_V_empty_closed_form,
    dimension_difference,
    lgv_generating_function,
)
from cidecomp.exactmath import binomial
from cidecomp.gridmodel import GridShape, ValidationError


def test_determinantal_degree_examples():
    for d, m in [(2, 2), (3, 5), (6, 4)]:
        assert deg_determinantal(d, m, 2) == binomial(d + m - 2, d - 1)
        assert deg_determinantal(d, m, 1) == 1
    assert all(deg_determinantal(d, 2, 2) == d for d in range(1, 8))
    assert deg_determinantal(3, 3, 3) == 3


def test_alpha_beta_examples():
    assert alpha(3, 3, 3) == 0
    assert alpha(5, 5, 4) == 0
    for t in (2, 3, 4):
        assert beta(7, 2 * t - 2, t) == binomial(2 * t - 2, t - 1)
        assert beta(5, t, t) == t * (t - 1) * 5 ** (t - 2)
    assert beta(9, 2, 2) == 2
    assert beta(3, 7, 3) == 0


def test_lgv_coefficient():
    g = lgv_generating_function(4, 5, 3)
    assert g.coefficient((3, 3, 3, 3, 2)) == 2


def test_lgv_single_path_is_profile_sum():
    # t = 2: every term counts lattice paths, so G(1,...,1) is a path count
    g = lgv_generating_function(3, 4, 2)
    assert g.evaluate([1] * 4) == binomial(3 + 4 - 2, 2)


def test_three_by_three():
    assert deg_V_empty(3, 3, 3) == 54
    assert deg_V_empty_closed_form(3, 3) == 54
    assert deg_V_empty_closed_form(2, 2) == 4
    assert deg_V_empty_closed_form(4, 3) == 4 ** 3


@pytest.mark.parametrize("d,l,t", [(2, 2, 2), (3, 2, 2), (3, 3, 2), (2, 5, 2), (4, 3, 3), (3, 4, 3), (4, 4, 4), (3, 5, 3)])
def test_methods_agree(d, l, t):
    vals = deg_V_empty_all(d, l, t)
    assert set(vals) == set(applicable_methods(d, l, t))
    assert len(set(vals.values())) == 1


def test_closed_form_only_for_d_equals_t():
    assert "closed" not in applicable_methods(4, 4, 3)
    with pytest.raises(ValidationError):
        deg_V_empty(4, 4, 3, "closed")
    with pytest.raises(ValidationError):
        deg_V_empty(3, 3, 3, "bogus")


def test_cross_check_error_type():
    assert issubclass(CrossCheckError, RuntimeError)


def test_degree_cases():
    r = deg_V_Delta(3, 6, 3)
    assert r.deg_V_Delta == r.deg_V_empty and r.case.endswith("V_empty")
    r = deg_V_Delta(6, 5, 3)
    assert r.case.endswith("alpha") and r.deg_V_Delta == r.alpha == alpha(6, 5, 3)
    r = deg_V_Delta(5, 6, 3)
    assert r.case.endswith("alpha+V_empty") and r.deg_V_Delta == r.alpha + r.deg_V_empty
    r = deg_V_Delta(5, 4, 3)
    assert r.case.endswith("beta") and r.deg_V_Delta == beta(5, 4, 3) == 6
    r = deg_V_Delta(5, 5, 4)
    assert r.case.endswith("beta+V_empty") and r.deg_V_Delta == r.beta + r.deg_V_empty


@pytest.mark.parametrize("d", range(2, 8))
@pytest.mark.parametrize("l", range(2, 8))
@pytest.mark.parametrize("t", range(2, 5))
def test_case_matches_dimension_comparison(d, l, t):
    if t > min(d, l):
        return
    diff = dimension_difference(d, l, t)
    shape = GridShape(2, l, t, d)
    tops = top_dimensional_components(shape)
    assert (diff <= 0) == any(c[0] == "empty" for c in tops)
    assert (diff >= 0) == any(c[0] != "empty" for c in tops)
    assert max(c[2] for c in tops) == dim_V_empty(shape) + max(diff, 0)
    case = deg_V_Delta(d, l, t).case
    assert ("V_empty" in case) == (diff <= 0)
