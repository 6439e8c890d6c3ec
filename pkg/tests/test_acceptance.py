"""Acceptance criteria 1-14; each prints one PASS/FAIL line."""

import json

import pytest

from rigidkit.verify import CRITERIA, run_check


@pytest.mark.parametrize("name", sorted(CRITERIA))
def test_criterion(name, capsys):
    res = run_check(name)
    num = int(name[1:3])
    with capsys.disabled():
        print(f"\ncriterion {num}: {'PASS' if res.passed else 'FAIL'} {name[4:]} ({res.seconds:.1f}s)")
    assert res.passed, json.dumps(res.details, default=str)[:2000]
