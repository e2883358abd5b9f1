"""Acceptance criteria 1-9, exact.

Each criterion is one test; the outcome line of every criterion is printed
(visible with ``pytest -s`` or in verbose runs, and when run as a script).
"""

import time

import pytest

from relnorms import suite

_T0 = time.perf_counter()


@pytest.fixture(scope="module")
def ctx():
    return suite.Context()


def _run(check, ctx, capsys=None):
    res = check(ctx)
    line = res.line()
    if capsys is not None:
        with capsys.disabled():
            print("\n" + line)
            for d in res.details:
                if d.startswith("FAIL"):
                    print("    " + d)
    assert res.passed, "\n".join(d for d in res.details if d.startswith("FAIL"))
    return res


def test_criterion_1_duality(ctx, capsys):
    _run(suite.check_duality, ctx, capsys)


def test_criterion_2_cone_monotone(ctx, capsys):
    _run(suite.check_monotone, ctx, capsys)


def test_criterion_3_cone_lower_bound_and_gap(ctx, capsys):
    _run(suite.check_conto, ctx, capsys)


def test_criterion_4_dual_cone_norm(ctx, capsys):
    _run(suite.check_operator_norm, ctx, capsys)


def test_criterion_5_sandwich(ctx, capsys):
    _run(suite.check_sandwich, ctx, capsys)


def test_criterion_6_straightening(ctx, capsys):
    _run(suite.check_straightening, ctx, capsys)


def test_criterion_7_theta(ctx, capsys):
    _run(suite.check_theta, ctx, capsys)


def test_criterion_8_groups(ctx, capsys):
    _run(suite.check_groups, ctx, capsys)


def test_criterion_9_cone_homology(ctx, capsys):
    res = _run(suite.check_cone_homology, ctx, capsys)
    total = time.perf_counter() - _T0
    with capsys.disabled():
        print(f"acceptance module total {total:.2f}s (limit 300s)")
    assert res.passed and total < 300


if __name__ == "__main__":
    results = suite.run_all()
    for r in results:
        print(r.line())
    raise SystemExit(0 if all(r.passed for r in results) else 1)
