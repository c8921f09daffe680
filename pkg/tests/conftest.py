from collections import defaultdict
from pathlib import Path

import pytest

import reqlex

CORPUS_DIR = Path(reqlex.__file__).parent / "corpus"

CRITERIA = {
    1: "manifest end-to-end: factorial breakdown and RBC 9.36",
    2: "factorial source: v(G)=3 both ways, regions 3, predicates 2, LOC 19",
    3: "Halstead formula layer on injected counts (n 22, N 45, D 22.5)",
    4: "cognitive layer in paper mode (Wc 3, SBCS 3, CFS 6, KLCID 1.4)",
    5: "corpus trend: positive Spearman rho for D, v(G), CFS, CICM",
    6: "property suites, 100 randomized cases each",
    7: "golden manifest round-trip over the bundled corpus",
}


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "criterion(n): acceptance criterion this test belongs to"
    )


@pytest.fixture(scope="session")
def manifests_dir() -> Path:
    return CORPUS_DIR / "manifests"


@pytest.fixture(scope="session")
def sources_dir() -> Path:
    return CORPUS_DIR / "sources"


@pytest.fixture(scope="session")
def factorial_manifest_text(manifests_dir) -> str:
    return (manifests_dir / "factorial.json").read_text()


@pytest.fixture(scope="session")
def factorial_source(sources_dir) -> str:
    return (sources_dir / "factorial.c").read_text()


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion that ran."""
    outcomes: dict[int, set[str]] = defaultdict(set)
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            marker = _criterion_of(report)
            if marker is not None:
                outcomes[marker].add(status)
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(outcomes):
        verdict = "PASS" if outcomes[number] == {"passed"} else "FAIL"
        terminalreporter.write_line(
            f"criterion {number}: {verdict} - {CRITERIA.get(number, '')}"
        )


def _criterion_of(report):
    for name, value in getattr(report, "user_properties", []) or []:
        if name == "criterion":
            return value
    return None


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and marker.args:
        report.user_properties = list(getattr(report, "user_properties", []))
        report.user_properties.append(("criterion", marker.args[0]))
