"""Python bindings for the loud property synthesizer."""

import json

from ._loud import (
    ValidationError,
    bench_pack,
    bench_problem,
    bundled_problems,
    load_problem_text,
    positive_examples,
    problem_info,
)
from ._loud import run_json as _run_json

__all__ = [
    "ValidationError",
    "bench_pack",
    "bench_problem",
    "bundled_problems",
    "load_problem_text",
    "positive_examples",
    "problem_info",
    "run",
]


def run(problem, mode=None, timeout_ms=None, h_cache=True, oracle_check=False):
    """Synthesize properties for `problem`, a file path, bundled name, or problem text.

    Returns the machine report as a dict.
    """
    text = problem if "{" in problem else load_problem_text(problem)
    return json.loads(_run_json(text, mode, timeout_ms, h_cache, oracle_check))
