"""Rule registry and the single-pass dispatching traversal."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .errors import DuplicateRuleIdError, UnknownPropertyError, UnknownRuleIdError
from .model import Finding, RuleConfig, RuleReport


@dataclass
class RuleContext:
    """Read-only view handed to a rule, plus its finding sink."""

    unit: object
    table: object
    properties: dict
    rule_id: str
    findings: list = field(default_factory=list)

    def report(self, span, message):
        self.findings.append(Finding(self.rule_id, span.start_point(), message))

    def prop(self, name, default=""):
        return self.properties.get(name, default)

    def prop_bool(self, name):
        return self.properties.get(name, "").strip().lower() in ("true", "1", "yes")


class Rule:
    """Base class for listeners. Subclasses set ``descriptor`` and override
    ``visit`` (called once per subscribed node, pre-order) and optionally
    ``finish`` (called once after the walk, for whole-unit rules).
    """

    descriptor = None

    def visit(self, node, ctx):
        pass

    def finish(self, ctx):
        pass


class RuleRegistry:
    def __init__(self):
        self._rules = {}  # id -> Rule subclass, registration order preserved
        self._subscriptions = {}  # (language, kind) -> [rule ids]

    def register(self, rule_cls):
        desc = rule_cls.descriptor
        if desc.id in self._rules:
            raise DuplicateRuleIdError(desc.id)
        self._rules[desc.id] = rule_cls
        for language, kind in desc.subscriptions:
            self._subscriptions.setdefault((language, kind), []).append(desc.id)

    def rule_count(self):
        return len(self._rules)

    def rule_ids(self):
        return list(self._rules)

    def descriptors(self):
        return [cls.descriptor for cls in self._rules.values()]

    def get(self, rule_id):
        try:
            return self._rules[rule_id]
        except KeyError:
            raise UnknownRuleIdError(rule_id) from None

    def subscribers(self, language, kind):
        return self._subscriptions.get((language, kind), [])


def register_rules(registry, rule_classes):
    for cls in rule_classes:
        registry.register(cls)
    return registry


def default_configs(registry):
    """One enabled default configuration per registered rule."""
    return [RuleConfig(rule_id=rid) for rid in registry.rule_ids()]


def validate_config(registry, config):
    rule_cls = registry.get(config.rule_id)
    declared = rule_cls.descriptor.defaults()
    for key in config.properties:
        if key not in declared:
            raise UnknownPropertyError(
                "rule %s has no property %r" % (config.rule_id, key)
            )


@dataclass
class TraversalStats:
    visits: int = 0


def traverse(root, registry, configs, stats=None):
    """Walk ``root.ast`` once, notifying every enabled subscribed rule.

    Returns one RuleReport per enabled rule (rules with zero findings
    included), ordered by rule id with findings sorted by position.
    """
    contexts = {}  # rule id -> (rule instance, context), registration order
    for config in configs:
        validate_config(registry, config)
    enabled = {c.rule_id: c for c in configs if c.enabled}
    for rule_id in registry.rule_ids():
        if rule_id not in enabled:
            continue
        config = enabled[rule_id]
        rule_cls = registry.get(rule_id)
        properties = rule_cls.descriptor.defaults()
        properties.update(config.properties)
        ctx = RuleContext(
            unit=root, table=root.symbols, properties=properties, rule_id=rule_id
        )
        contexts[rule_id] = (rule_cls(), ctx)

    if root.ast is not None:
        for node in root.ast.walk():
            if stats is not None:
                stats.visits += 1
            for rule_id in registry.subscribers(node.language, node.kind):
                entry = contexts.get(rule_id)
                if entry is not None:
                    entry[0].visit(node, entry[1])
        for rule, ctx in contexts.values():
            rule.finish(ctx)

    reports = []
    for rule_id, (rule, ctx) in sorted(contexts.items()):
        config = enabled[rule_id]
        descriptor = rule.descriptor
        if config.priority_override is not None:
            descriptor = replace(descriptor, priority=config.priority_override)
        reports.append(
            RuleReport(
                descriptor=descriptor,
                effective_properties=dict(ctx.properties),
                findings=sorted(ctx.findings, key=Finding.sort_key),
            )
        )
    return reports
