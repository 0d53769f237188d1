from __future__ import annotations

import os
import sys

from hypothesis import settings

# fixed example generation keeps runs reproducible; deadlines are noisy on shared machines
settings.register_profile("repo", derandomize=True, deadline=None)
settings.register_profile("stress", max_examples=1000, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "repo"))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for result in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.format_result(*result))
