"""The paper-claims acceptance suite, one test per criterion.

Each check asserts exact game values (tolerance zero) and must finish within
its stated wall-clock budget. ``mbgames verify-paper`` runs the same checks
from the command line.
"""

import pytest

from mbgames.acceptance import CHECKS


@pytest.mark.parametrize("check", CHECKS, ids=[c.check_id for c in CHECKS])
def test_acceptance(check):
    result = check.run()
    print(result.line())
    for line in result.details:
        print(f"    {line}")
    assert result.ok, f"{check.check_id} failed:\n" + "\n".join(result.details)
    assert result.within_budget, (
        f"{check.check_id} exceeded its budget: {result.elapsed:.1f}s > "
        f"{result.budget_s:.0f}s"
    )
