import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cutlattice.skeletons import platonic, regular_4polytope, star_4polytope  # noqa: E402


@lru_cache(maxsize=None)
def _solid(sym):
    return platonic(sym)


@pytest.fixture(scope="session")
def icosahedron():
    return _solid("{3,5}")


@pytest.fixture(scope="session")
def dodecahedron():
    return _solid("{5,3}")


@pytest.fixture(scope="session")
def cube():
    return _solid("{4,3}")


@pytest.fixture(scope="session")
def cell600():
    return regular_4polytope("600-cell")


@pytest.fixture(scope="session")
def cell24():
    return regular_4polytope("24-cell")


@pytest.fixture(scope="session")
def star_5_2_5_3():
    return star_4polytope("{5/2,5,3}")


@pytest.fixture
def cache_dir(tmp_path, monkeypatch):
    d = tmp_path / "cache"
    monkeypatch.setenv("CUTLATTICE_CACHE_DIR", str(d))
    return d


# one summary line per acceptance criterion; tests are named test_criterion_<N>_<what>
_criteria: dict[int, list] = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if not name.startswith("test_criterion_") or report.when != "call" and report.passed:
        return
    num = int(name.split("_")[2])
    _criteria.setdefault(num, []).append((name, report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        rows = _criteria[num]
        ok = all(outcome == "passed" for _, outcome, _ in rows)
        secs = sum(t for _, _, t in rows)
        names = ", ".join(sorted({n.split("_", 3)[3].split("[")[0] for n, _, _ in rows}))
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  ({secs:.1f} s; {names})")
