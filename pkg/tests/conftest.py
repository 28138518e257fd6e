import os

import pytest

from cglint.cli import build_registry
from cglint.core import default_configs, traverse
from cglint.pipeline import parse_minicpp, parse_seqdiag
from cglint.symtab import build_symbols

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture_path(name):
    return os.path.join(FIXTURES, name)


def analyze_cpp(source, file="test.cpp"):
    """Parse + symbol-build a C++ snippet; fails the test on parse errors."""
    root = parse_minicpp(file, source)
    assert not root.has_fatal_error(), root.diagnostics
    build_symbols(root)
    return root


def analyze_seq(source, file="test.sd"):
    root = parse_seqdiag(file, source)
    assert not root.has_fatal_error(), root.diagnostics
    build_symbols(root)
    return root


def run_rules(root, rule_ids, properties=None, language=None):
    """Traverse with exactly ``rule_ids`` enabled; returns all findings."""
    language = language or root.ast.language
    registry = build_registry(language)
    configs = default_configs(registry)
    for config in configs:
        config.enabled = config.rule_id in rule_ids
        if properties and config.rule_id in properties:
            config.properties.update(properties[config.rule_id])
    reports = traverse(root, registry, configs)
    return [f for r in reports for f in r.findings]


def run_rule(rule_id, source, properties=None, seq=False):
    root = analyze_seq(source) if seq else analyze_cpp(source)
    props = {rule_id: properties} if properties else None
    return run_rules(root, {rule_id}, props)


@pytest.fixture
def cpp_registry():
    return build_registry("minicpp")


@pytest.fixture
def seq_registry():
    return build_registry("seqdiag")
