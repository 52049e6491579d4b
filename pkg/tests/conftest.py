import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import _acceptance_log  # noqa: E402

SUITE_BUDGET_S = 300.0
_start = time.perf_counter()


def pytest_terminal_summary(terminalreporter):
    elapsed = time.perf_counter() - _start
    if not _acceptance_log.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_acceptance_log.LINES):
        terminalreporter.write_line(_acceptance_log.LINES[k])
    verdict = "PASS" if elapsed < SUITE_BUDGET_S else "FAIL"
    terminalreporter.write_line(
        f"suite runtime: {verdict}  {elapsed:.1f} s against a {SUITE_BUDGET_S:.0f} s budget")
