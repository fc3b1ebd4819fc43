import pytest
from hypothesis import given, settings, strategies as st

import loud


def test_bundled_problems_listed():
    names = loud.bundled_problems()
    assert set(loud.bench_pack("core")) <= set(names)


def test_problem_info_modhash():
    info = loud.problem_info(loud.load_problem_text("modhash"))
    assert info["free"] == ["y", "a", "M"]
    assert info["hidden"] == ["x"]
    assert info["examples"] == 15376


def test_run_max2_over():
    report = loud.run("max2", mode="over")
    assert report["schema"] == 1
    assert report["status"] == "Best"
    assert report["mode"] == "over"
    assert len(report["properties"]) == 2


def test_forced_timeout_is_partial():
    report = loud.run("modhash", mode="under", timeout_ms=1)
    assert report["status"] == "PartialTimeout"


def test_oracle_check_passes():
    report = loud.run("philo3", mode="under", oracle_check=True)
    assert report["oracle"]["ok"]


def test_invalid_problem_raises():
    with pytest.raises(ValueError):
        loud.run("problem p vars { x : int[0..1]; } grammar over { S -> x == 0; }")


def test_bench_problem_rg():
    assert loud.bench_problem("rg")["pass"]


THRESHOLD = """
problem threshold
vars {{ x : int[0..6]; exist h : int[{lo}..{hi}]; }}
query {{ x <= h; }}
grammar over {{ S -> x <= K; K -> 0 | 1 | 2 | 3 | 4 | 5 | 6; }}
grammar under {{ S -> x <= K; K -> 0 | 1 | 2 | 3 | 4 | 5 | 6; }}
"""


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 6), st.integers(0, 6))
def test_threshold_best_bound(a, b):
    lo, hi = min(a, b), max(a, b)
    text = THRESHOLD.format(lo=lo, hi=hi)
    over = loud.run(text, mode="over")
    under = loud.run(text, mode="under")
    # x <= h for some h in [lo, hi] is exactly x <= hi.
    # x <= 6 covers the whole domain, so over-mode reports it as true.
    assert [p["text"] for p in over["properties"]] == ["true" if hi == 6 else f"x <= {hi}"]
    assert [p["text"] for p in under["properties"]] == [f"x <= {hi}"]
    assert len(loud.positive_examples(text)) == hi + 1
