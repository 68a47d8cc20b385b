import random

import numpy as np
import pytest


@pytest.fixture(autouse=True)
def _seed():
    random.seed(20260809)
    np.random.seed(20260809)


def pytest_runtest_logreport(report):
    """One ACCEPTANCE line per criterion, printed outside capture."""
    if report.when != "call" or "test_acceptance.py::test_c" not in report.nodeid:
        return
    name = report.nodeid.rsplit("::test_c", 1)[1]
    num, _, rest = name.partition("_")
    label = f"{num} {rest.replace('_', '-')}"
    outcome = "PASS" if report.passed else "FAIL"
    print(f"\nACCEPTANCE {label}: {outcome}", flush=True)
