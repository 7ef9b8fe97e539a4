from __future__ import annotations

import numpy as np
import pytest
from hypothesis import settings
from hypothesis import strategies as st

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

finite = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)


@st.composite
def spinors(draw, min_norm=1e-3):
    """Hypothesis strategy for 4-component complex spinors away from zero."""
    re = draw(st.lists(finite, min_size=4, max_size=4))
    im = draw(st.lists(finite, min_size=4, max_size=4))
    psi = np.array(re) + 1j * np.array(im)
    if np.linalg.norm(psi) < min_norm:
        psi = psi + np.array([1, 0, 0, 0])
    return psi


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def gaussian_spinor(rng, n=None):
    shape = (4,) if n is None else (n, 4)
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)


# Acceptance summary: one line per criterion, printed at the end of the run.

_ACCEPTANCE: dict[str, list[tuple[str, str]]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if not name.startswith("test_criterion_"):
        return
    tag = name[len("test_criterion_"):].split("_")[0]
    number = str(int("".join(ch for ch in tag if ch.isdigit())))
    _ACCEPTANCE.setdefault(number, []).append((tag, "PASS" if report.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE, key=int):
        parts = _ACCEPTANCE[number]
        verdict = "PASS" if all(v == "PASS" for _, v in parts) else "FAIL"
        detail = ""
        if len(parts) > 1:
            detail = " (" + ", ".join(f"{t} {v}" for t, v in parts) + ")"
        terminalreporter.write_line(f"criterion {number}: {verdict}{detail}")
