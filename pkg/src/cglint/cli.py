"""Command-line driver with CI-friendly exit codes.

Exit code 0: no build-breaking findings and no errors.
Exit code 1: at least one SHALL-priority finding (or, with ``--strict``,
any finding at all).
Exit code 2: configuration, parse, or I/O error. The XML output is written
even when findings break the build.
"""

from __future__ import annotations

import argparse
import os
import sys

from .config import load_config
from .core import RuleRegistry, default_configs, register_rules
from .errors import CglintError, UnknownLanguageError
from .model import Priority
from .pipeline import get_frontend, run_pipeline
from .report import render_html, summarize, to_xml
from .rules import RULES_BY_LANGUAGE


def build_registry(language):
    try:
        rules = RULES_BY_LANGUAGE[language]
    except KeyError:
        raise UnknownLanguageError(language) from None
    return register_rules(RuleRegistry(), rules)


def list_rules(language):
    registry = build_registry(language)
    lines = []
    for desc in registry.descriptors():
        props = ", ".join("%s=%s" % (k, v) for k, v in desc.default_properties)
        line = "%s  %s  [%s/%s]" % (
            desc.id,
            desc.title,
            desc.priority.value,
            desc.criticality.value,
        )
        if props:
            line += "  (%s)" % props
        lines.append(line)
    return "\n".join(lines)


def collect_inputs(paths, extensions):
    files = []
    for path in paths:
        if os.path.isdir(path):
            for dirpath, _dirnames, filenames in os.walk(path):
                for name in sorted(filenames):
                    if os.path.splitext(name)[1] in extensions:
                        files.append(os.path.join(dirpath, name))
        else:
            files.append(path)
    return sorted(files)


def make_parser():
    parser = argparse.ArgumentParser(
        prog="cglint", description="Validate sources against coding guidelines."
    )
    parser.add_argument("inputs", nargs="*", help="input files or directories")
    parser.add_argument("--lang", required=True, help="language id (minicpp, seqdiag)")
    parser.add_argument("--config", help="rule configuration file")
    parser.add_argument("--xml-out", default="vfresults.xml", help="XML output path")
    parser.add_argument("--html-out", help="HTML report output path")
    parser.add_argument(
        "--timestamp", help="inject a fixed ISO-8601 timestamp (reproducible output)"
    )
    parser.add_argument(
        "--strict", action="store_true", help="any finding fails the build"
    )
    parser.add_argument(
        "--list-rules", action="store_true", help="list registered rules and exit"
    )
    return parser


def main(argv=None):
    args = make_parser().parse_args(argv)
    try:
        if args.list_rules:
            print(list_rules(args.lang))
            return 0
        registry = build_registry(args.lang)
        if args.config:
            with open(args.config, encoding="utf-8") as handle:
                configs = load_config(handle.read(), registry)
        else:
            configs = default_configs(registry)
        frontend = get_frontend(args.lang)
    except (CglintError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2

    files = collect_inputs(args.inputs, frontend["extensions"])
    diagnostics = []
    results = run_pipeline(
        files,
        args.lang,
        registry,
        configs,
        timestamp=args.timestamp,
        diagnostics=diagnostics,
    )

    with open(args.xml_out, "wb") as handle:
        handle.write(to_xml(results))
    if args.html_out:
        summary = summarize(results, registry.descriptors())
        with open(args.html_out, "w", encoding="utf-8") as handle:
            handle.write(render_html(results, summary))

    for report in results.reports:
        if report.findings:
            print(
                "%s: %d finding(s)" % (report.descriptor.id, len(report.findings))
            )
    for path, diag in diagnostics:
        where = path
        if diag.span is not None:
            where = "%s:%d:%d" % (diag.span.file, diag.span.row, diag.span.col)
        stream = sys.stderr if diag.fatal else sys.stdout
        print("%s: %s" % (where, diag.message), file=stream)

    if any(diag.fatal for _path, diag in diagnostics):
        return 2
    breaking = any(
        report.findings
        and (args.strict or report.descriptor.priority is Priority.SHALL)
        for report in results.reports
    )
    return 1 if breaking else 0


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
