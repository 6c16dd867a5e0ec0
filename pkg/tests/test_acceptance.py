"""Acceptance gate: one experiment per criterion, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import sys

import pytest

from coverideals.experiments import EXPERIMENTS, RunConfig, run_experiment

# criterion number -> (experiment id, time limit in seconds)
CRITERIA = {
    1: ("counterexample-196-195", 600),
    2: ("mapping-cone-vs-oracle", 120),
    3: ("formula-checks", 120),
    4: ("regularity", 120),
    5: ("linear-type", 120),
    6: ("tree-hilbert-invariance", 120),
    7: ("ci-structure", 120),
    8: ("set-formula", 120),
    9: ("chu-vandermonde", 120),
}


def _line(number: int, result, limit: int) -> str:
    ok = result.passed and result.seconds <= limit
    return f"criterion {number} {'PASS' if ok else 'FAIL'} {result.id} ({result.checks} checks, {result.seconds:.2f}s, limit {limit}s)"


def test_every_experiment_is_a_criterion():
    assert sorted(exp_id for exp_id, _ in CRITERIA.values()) == sorted(EXPERIMENTS)


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    exp_id, limit = CRITERIA[number]
    result = run_experiment(exp_id, RunConfig(jobs=1))
    with capsys.disabled():
        print(f"\n{_line(number, result, limit)}")
        for m in result.mismatches:
            print(f"    mismatch: {m}")
    assert result.passed, result.mismatches
    assert result.seconds <= limit


if __name__ == "__main__":
    failed = 0
    for number, (exp_id, limit) in sorted(CRITERIA.items()):
        result = run_experiment(exp_id, RunConfig(jobs=1))
        line = _line(number, result, limit)
        failed += "FAIL" in line
        print(line, flush=True)
    sys.exit(1 if failed else 0)
