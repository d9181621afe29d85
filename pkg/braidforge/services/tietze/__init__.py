"""Tietze transformations, scripts and the shipped elimination scripts."""

from .engine import (
    MoveInvalid,
    NotSolvable,
    ScriptRunner,
    TietzeResult,
    UnknownGenerator,
    add_relator,
    eliminate_generator,
    label_depth,
    remove_redundant_relator,
    replay_script,
    run_script,
    simplify,
    simplify_relators,
)
from .scripts import (
    GeneratorPattern,
    MoveKind,
    ScriptSyntaxError,
    TietzeMove,
    TietzeScript,
    format_script,
    load_script,
    parse_script,
    shipped_scripts,
)

__all__ = [
    "GeneratorPattern",
    "MoveInvalid",
    "MoveKind",
    "NotSolvable",
    "ScriptRunner",
    "ScriptSyntaxError",
    "TietzeMove",
    "TietzeResult",
    "TietzeScript",
    "UnknownGenerator",
    "add_relator",
    "eliminate_generator",
    "format_script",
    "label_depth",
    "load_script",
    "parse_script",
    "remove_redundant_relator",
    "replay_script",
    "run_script",
    "shipped_scripts",
    "simplify",
    "simplify_relators",
]
