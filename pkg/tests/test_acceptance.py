"""Full-scale acceptance criteria, one test per criterion.

Run with -s to see the pass/fail line for every criterion; the CLI
`trigasket selftest` prints the same table.
"""

import pytest

from trigasket.acceptance import CRITERIA, Limits, run_one

KEYS = [key for key, _ in CRITERIA]


@pytest.mark.parametrize("key", KEYS)
def test_criterion(key):
    result = run_one(key, Limits())
    print(f"{'PASS' if result.passed else 'FAIL'} {result.key}: {result.detail}")
    assert result.passed, f"{result.key}: {result.detail}"
