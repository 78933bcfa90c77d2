"""Numerical semigroups generated by V_n, V_{n+d}, V_{n+2d}, ... of a Fibonacci-like sequence."""

from ._core import (
    OracleLimitError,
    apery_set,
    embedding_dimension,
    eval_s,
    fib,
    frobenius,
    frobenius_special,
    genfib,
    genus,
    greedy_repr,
    lucas,
    minimal_generators,
    oracle_frobenius,
    oracle_genus,
    oracle_minimal_generators,
    summary,
    two_gen_formulas,
    verify,
)

__all__ = [
    "OracleLimitError",
    "apery_set",
    "embedding_dimension",
    "eval_s",
    "fib",
    "frobenius",
    "frobenius_special",
    "genfib",
    "genus",
    "greedy_repr",
    "lucas",
    "minimal_generators",
    "oracle_frobenius",
    "oracle_genus",
    "oracle_minimal_generators",
    "summary",
    "two_gen_formulas",
    "verify",
]
