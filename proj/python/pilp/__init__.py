"""Probabilistic inductive logic programming."""

from ._core import (
    Constrainer,
    Cost,
    Error,
    InferenceConfig,
    ParseError,
    Program,
    Provenance,
    SearchSettings,
    Tester,
    __version__,
    bce,
    canonicalize,
    evaluate_file,
    evaluate,
    evaluate_binary,
    learn,
    mdl,
    normalize,
    select_threshold,
    synth,
    theta_subsumes,
)

__all__ = [
    "Constrainer",
    "Cost",
    "Error",
    "InferenceConfig",
    "ParseError",
    "Program",
    "Provenance",
    "SearchSettings",
    "Tester",
    "__version__",
    "bce",
    "canonicalize",
    "evaluate_file",
    "evaluate",
    "evaluate_binary",
    "learn",
    "mdl",
    "normalize",
    "select_threshold",
    "synth",
    "theta_subsumes",
]
