"""Loader for the rule configuration file format.

The format is deliberately small::

    # comment
    [rule InterfaceChecker]
    enabled = true
    priority = SHALL
    CloseAPI = false

Rules absent from the file stay enabled with their default properties.
Unknown sections, rule ids, and property keys are hard errors.
"""

from __future__ import annotations

from .errors import ConfigSyntaxError, UnknownPropertyError, UnknownRuleIdError
from .model import Priority, RuleConfig

_BOOLEANS = {"true": True, "false": False}


def load_config(text, registry):
    """Parse configuration ``text`` into one RuleConfig per registered rule."""
    configs = {rid: RuleConfig(rule_id=rid) for rid in registry.rule_ids()}
    current = None  # RuleConfig of the open [rule ...] section
    declared = None  # its declared default property keys

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise ConfigSyntaxError(lineno, "unterminated section header")
            parts = line[1:-1].split()
            if len(parts) != 2 or parts[0] != "rule":
                raise ConfigSyntaxError(
                    lineno, "expected section of the form [rule <Id>]"
                )
            rule_id = parts[1]
            if rule_id not in configs:
                raise UnknownRuleIdError(rule_id)
            current = configs[rule_id]
            declared = registry.get(rule_id).descriptor.defaults()
            continue
        if "=" not in line:
            raise ConfigSyntaxError(lineno, "expected 'key = value'")
        if current is None:
            raise ConfigSyntaxError(lineno, "entry outside of a [rule ...] section")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key == "enabled":
            if value.lower() not in _BOOLEANS:
                raise ConfigSyntaxError(lineno, "enabled must be true or false")
            current.enabled = _BOOLEANS[value.lower()]
        elif key == "priority":
            try:
                current.priority_override = Priority[value]
            except KeyError:
                raise ConfigSyntaxError(
                    lineno, "priority must be SHOULD, SHALL or WILL"
                ) from None
        elif key in declared:
            current.properties[key] = value
        else:
            raise UnknownPropertyError(
                "rule %s has no property %r" % (current.rule_id, key)
            )
    return list(configs.values())
