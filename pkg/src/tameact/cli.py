"""Command-line interface.

Exit codes: 0 on success (whatever the verdicts), 2 for malformed or
schema-violating input, 3 for inputs that parse but fail a structure
validator, 4 for an internal invariant breach.
"""
from __future__ import annotations

import json
import sys

import click

from .actions import ActionError
from .catalog import build_case, catalog_names
from .comodule import ComoduleError
from .fields import FieldError
from .geometry import GeometryError
from .groups import GroupError
from .hopf import HopfError
from .report import to_json_bytes, to_text, write_batch
from .runner import run_case
from .schema import CHECK_NAMES, SchemaError, parse_document
from .tameness import TamenessError

EXIT_SCHEMA = 2
EXIT_VALIDATOR = 3
EXIT_INTERNAL = 4

_VALIDATOR_ERRORS = (ComoduleError, HopfError, ActionError, GroupError, FieldError)
_INTERNAL_ERRORS = (TamenessError, GeometryError)


def _load_document(path: str):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        click.echo(f"cannot read document: {exc}", err=True)
        sys.exit(EXIT_SCHEMA)
    try:
        return parse_document(data)
    except SchemaError as exc:
        click.echo(f"schema violation: {exc}", err=True)
        sys.exit(EXIT_SCHEMA)
    except _VALIDATOR_ERRORS as exc:
        click.echo(f"validation failed: {exc}", err=True)
        sys.exit(EXIT_VALIDATOR)


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.buffer.write(to_json_bytes(report))
    else:
        click.echo(to_text(report), nl=False)


def _run_guarded(case, checks, fmt):
    try:
        report = run_case(case, checks)
    except _INTERNAL_ERRORS as exc:
        click.echo(f"internal invariant breach: {exc}", err=True)
        sys.exit(EXIT_INTERNAL)
    _emit(report, fmt)
    return report


@click.group()
def main():
    """Exact verdicts on finite group-scheme actions: tameness, freeness,
    torsors, inertia and slices."""


@main.command()
@click.argument("file", type=click.Path())
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="text")
def validate(file, fmt):
    """Parse FILE and run every structure validator; no checks."""
    case, _ = _load_document(file)
    summary = {"name": case.name, "valid": True,
               "dims": {"hopf": case.algebra.hopf.dim, "algebra": case.algebra.dim}}
    if fmt == "json":
        sys.stdout.buffer.write(to_json_bytes(summary))
    else:
        click.echo(f"{case.name}: valid (dim A = {case.algebra.hopf.dim}, "
                   f"dim B = {case.algebra.dim})")


@main.command()
@click.argument("file", type=click.Path())
@click.option("--only", default=None,
              help="comma-separated subset of: " + ",".join(CHECK_NAMES))
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="text")
def check(file, only, fmt):
    """Run the verdict checks on the document in FILE."""
    case, doc_checks = _load_document(file)
    checks = doc_checks
    if only is not None:
        requested = tuple(s.strip() for s in only.split(",") if s.strip())
        unknown = [c for c in requested if c not in CHECK_NAMES]
        if unknown:
            click.echo(f"unknown checks: {unknown}", err=True)
            sys.exit(EXIT_SCHEMA)
        checks = requested
    _run_guarded(case, checks, fmt)


@main.group()
def catalog():
    """Built-in example catalog."""


@catalog.command("list")
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="text")
def catalog_list(fmt):
    names = catalog_names()
    if fmt == "json":
        sys.stdout.buffer.write(to_json_bytes(names))
    else:
        for name in names:
            click.echo(name)


@catalog.command("run")
@click.argument("names", nargs=-1)
@click.option("--all", "run_all", is_flag=True, help="run every entry")
@click.option("--out", "out_dir", type=click.Path(), default=None,
              help="directory for report.json, verdicts.csv and verdicts.png")
@click.option("--only", default=None,
              help="comma-separated subset of: " + ",".join(CHECK_NAMES))
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="text")
def catalog_run(names, run_all, out_dir, only, fmt):
    """Run checks on catalog entries by name (or --all)."""
    targets = catalog_names() if run_all or not names else list(names)
    unknown = [n for n in targets if n not in catalog_names()]
    if unknown:
        click.echo(f"unknown catalog entries: {unknown}", err=True)
        sys.exit(EXIT_SCHEMA)
    checks = CHECK_NAMES
    if only is not None:
        checks = tuple(s.strip() for s in only.split(",") if s.strip())
        bad = [c for c in checks if c not in CHECK_NAMES]
        if bad:
            click.echo(f"unknown checks: {bad}", err=True)
            sys.exit(EXIT_SCHEMA)
    reports = []
    for name in targets:
        try:
            reports.append(run_case(build_case(name), checks))
        except _INTERNAL_ERRORS as exc:
            click.echo(f"internal invariant breach in {name}: {exc}", err=True)
            sys.exit(EXIT_INTERNAL)
    if out_dir is not None:
        for path in write_batch(reports, out_dir):
            click.echo(path, err=True)
    else:
        for rep in reports:
            _emit(rep, fmt)


if __name__ == "__main__":
    main()
