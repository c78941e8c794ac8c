from __future__ import annotations

import json
from pathlib import Path

import pytest

from cidecomp.matroid import VectorConfig

FIXTURES = Path(__file__).parent / "fixtures"


def load_point(name: str) -> tuple[dict, VectorConfig]:
    data = json.loads((FIXTURES / name).read_text())
    return data, VectorConfig.from_json(data)


@pytest.fixture
def grid_point_k3():
    """A point of V_Delta for k=3, l=6, t=d=4 with zeros exactly on S={1,4,8,11,15,18}."""
    return load_point("grid_point_k3_l6.json")


@pytest.fixture
def grid_point_k2():
    """A k=2, l=5, d=t=3 point whose zero set is larger than S={2,4,7,9}."""
    return load_point("grid_point_k2_l5.json")


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
