"""Acceptance criteria, each at its stated tolerance and time limit.

One PASS/FAIL line per criterion is printed as it finishes and again in
the terminal summary.
"""

import pytest

from bmestar import acceptance

RESULTS = []


@pytest.mark.parametrize("check", acceptance.CRITERIA, ids=lambda c: c.__name__)
def test_criterion(check, capsys):
    result = check()
    RESULTS.append(result)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.ok, result.detail
    assert result.seconds < result.limit, f"took {result.seconds:.2f}s, limit {result.limit}s"
