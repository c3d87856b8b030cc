import math

import pytest

from studentt import oracle, tcdf

ACCEPTANCE_RESULTS = {}


def record_criterion(num, desc, passed):
    ACCEPTANCE_RESULTS[num] = (desc, passed)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        desc, ok = ACCEPTANCE_RESULTS[num]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {num}: {status} - {desc}")


@pytest.fixture(scope="session")
def frozen_table():
    return oracle.load_frozen_table()


@pytest.fixture(scope="session")
def frozen():
    """frozen('quantile'|'cdf', n, arg) -> mpf from the committed table."""
    table = oracle.load_frozen_table()

    def get(kind, n, arg):
        return oracle.frozen_value(kind, n, arg, table)

    return get


def tail_rel_err(n: float, p: float, x: float) -> float:
    """|F_n(x) - p| / min(p, 1-p) using the package's own CDF."""
    if p <= 0.5:
        return abs(tcdf.cdf(n, x) - p) / p
    q = 1.0 - p
    return abs(tcdf.cdf(n, -x) - q) / q


def rel_diff(a: float, b: float) -> float:
    if a == b:
        return 0.0
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def ulp_of_print(text: str) -> float:
    """Size of one unit in the last printed decimal place of a numeral."""
    mantissa = text.strip().lstrip("+-")
    if "e" in mantissa or "E" in mantissa:
        raise ValueError("plain decimal expected")
    if "." not in mantissa:
        return 1.0
    return 10.0 ** -(len(mantissa) - mantissa.index(".") - 1)


def assert_close(value, expected, rel=0.0, abs_=0.0):
    assert math.isfinite(value)
    assert abs(value - expected) <= max(rel * abs(expected), abs_), \
        f"{value} vs {expected} (rel {rel_diff(value, expected):.3e})"
