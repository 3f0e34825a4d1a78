import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from schubcycle import kernels  # noqa: E402

_criteria = []


@pytest.fixture
def record_criterion():
    """Call with (label, passed) to get one summary line per criterion."""

    def record(label, passed, detail=""):
        _criteria.append((label, passed, detail))
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, detail in _criteria:
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"{status}  {label}" + (f"  ({detail})" if detail else ""))


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    return kernels.get_backend(request.param)
