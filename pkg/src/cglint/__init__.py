"""cglint: extensible coding-guideline validation.

Parses source artifacts into language-tagged syntax graphs, runs
configurable checker rules over them in a single traversal, and emits
XML results plus an HTML report. Ships a C++-subset frontend with 18
rules and a sequence-chart frontend with 2 rules.
"""

from .core import RuleRegistry, TraversalStats, register_rules, traverse
from .model import (
    AnalysisRoot,
    AstNode,
    Criticality,
    Finding,
    Priority,
    RuleConfig,
    RuleDescriptor,
    RuleReport,
    SourceSpan,
    ValidationResults,
)
from .pipeline import run_pipeline

__version__ = "0.1.0"

__all__ = [
    "AnalysisRoot",
    "AstNode",
    "Criticality",
    "Finding",
    "Priority",
    "RuleConfig",
    "RuleDescriptor",
    "RuleRegistry",
    "RuleReport",
    "SourceSpan",
    "TraversalStats",
    "ValidationResults",
    "register_rules",
    "run_pipeline",
    "traverse",
    "__version__",
]
