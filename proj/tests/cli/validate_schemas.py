#!/usr/bin/env python3
"""Runs every h4tool command that writes JSON and validates the output
against the schemas in docs/schemas."""

import argparse
import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema
from referencing import Registry, Resource


def load_registry(schema_dir):
    schemas = {}
    for path in sorted(schema_dir.glob("*.schema.json")):
        schemas[path.name] = json.loads(path.read_text())
    resources = [(s["$id"], Resource.from_contents(s)) for s in schemas.values()]
    return schemas, Registry().with_resources(resources)


def run(tool, args, cwd):
    proc = subprocess.run([tool, *args], cwd=cwd, capture_output=True, text=True)
    if proc.returncode != 0:
        raise RuntimeError(f"h4tool {' '.join(args)} exited {proc.returncode}: {proc.stderr}")
    return proc.stdout


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--tool", required=True)
    parser.add_argument("--schemas", required=True, type=Path)
    args = parser.parse_args()
    args.tool = str(Path(args.tool).resolve())

    schemas, registry = load_registry(args.schemas)
    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        work = Path(tmp)
        run(args.tool, ["coverings", "--emit", "json", "--out", "coverings.json"], work)
        run(args.tool, ["grids", "--emit", "json", "--out", "grids.json"], work)
        run(args.tool, ["build", "--out", "config.json"], work)
        run(args.tool, ["verify", "halfgrid", "--subset", "z2", "--seed", "2", "--out", "halfgrid.json"], work)
        run(args.tool, ["verify", "not-halfgrid", "--out", "refutation.json"], work)
        run(args.tool, ["report", "--seeds", "1", "--out", "report.json"], work)

        # The report embeds a geproci certificate; validate it standalone too.
        report = json.loads((work / "report.json").read_text())
        (work / "geproci.json").write_text(json.dumps(report["geproci"][0]))

        for name in ["config", "coverings", "grids", "halfgrid", "refutation", "geproci", "report"]:
            document = json.loads((work / f"{name}.json").read_text())
            schema = schemas[f"{name}.schema.json"]
            validator = jsonschema.Draft202012Validator(schema, registry=registry)
            errors = sorted(validator.iter_errors(document), key=lambda e: list(e.path))
            status = "ok" if not errors else "INVALID"
            print(f"{name:12s} {status}")
            for e in errors[:5]:
                print(f"    {list(e.path)}: {e.message[:200]}")
            failures += bool(errors)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
