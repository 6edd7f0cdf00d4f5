import numpy as np
import pytest

from onws import catalog
from onws.lattice import random_dilation
from onws.wavelet import random_onws

_criteria: dict[str, list[str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    name = report.nodeid.split("::")[-1]
    if "test_acceptance.py" in report.nodeid and name.startswith("test_criterion_"):
        number = name.split("_")[2]
        _criteria.setdefault(number, []).append("PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        outcomes = _criteria[number]
        status = "PASS" if all(o == "PASS" for o in outcomes) else "FAIL"
        detail = f" ({outcomes.count('PASS')}/{len(outcomes)} cases)" if len(outcomes) > 1 else ""
        terminalreporter.write_line(f"criterion {int(number):2d}: {status}{detail}")


@pytest.fixture
def ctx_28():
    return catalog.example_context("2.8")


@pytest.fixture
def ctx_212ii():
    return catalog.example_context("2.12ii")


@pytest.fixture
def fam_212i():
    return catalog.example_family("2.12i")


@pytest.fixture
def fam_212ii():
    return catalog.example_family("2.12ii")


def generated_contexts(count, seed, n_max=16, min_q=1):
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        N = int(rng.integers(2, n_max + 1))
        out.append(random_dilation(N, rng, min_q=min_q))
    return out


def generated_families(count, seed, n_max=12, max_q=None):
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        N = int(rng.integers(2, n_max + 1))
        ctx = random_dilation(N, rng, min_q=2)
        if max_q is not None and ctx.q > max_q:
            continue
        out.append(random_onws(ctx, rng))
    return out
