#!/usr/bin/env python3
"""Compares h4tool output with the independent rational-arithmetic oracle in
h4_oracle.py. Lines are matched by their point sets, so the two programs may
number lines differently."""

import argparse
import json
import os
import subprocess
import sys
import tempfile
from pathlib import Path

HERE = Path(__file__).resolve().parent

# Frozen from the oracle; the acceptance binary asserts the same set.
SPECIAL_POINTS = [3, 4, 39, 40, 47, 48, 49, 50, 53, 54]


def tool_json(tool, args, work, name):
    proc = subprocess.run([tool, *args, "--out", name], cwd=work, capture_output=True, text=True)
    if proc.returncode != 0:
        raise RuntimeError(f"h4tool {' '.join(args)} exited {proc.returncode}: {proc.stderr}")
    return json.loads((work / name).read_text())


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--tool", required=True)
    args = parser.parse_args()
    tool = os.path.abspath(args.tool)

    oracle = json.loads(subprocess.run([sys.executable, str(HERE / "h4_oracle.py"), "--grids"],
                                       capture_output=True, text=True, check=True).stdout)
    with tempfile.TemporaryDirectory() as tmp:
        work = Path(tmp)
        planes = tool_json(tool, ["incidences", "--kind", "planes", "--emit", "json"], work, "planes.json")
        lines = tool_json(tool, ["incidences", "--kind", "lines", "--emit", "json"], work, "lines.json")
        covers = tool_json(tool, ["coverings", "--emit", "json"], work, "covers.json")
        grids = tool_json(tool, ["grids", "--emit", "json"], work, "grids.json")

    def by_points(line_table, indices):
        return frozenset(tuple(sorted(line_table[i - 1])) for i in indices)

    checks = []
    checks.append(("plane incidences", [sorted(r) for r in planes] == [sorted(r) for r in oracle["planes"]]))
    checks.append(("five-point lines", sorted(map(sorted, lines)) == sorted(map(sorted, oracle["lines"]))))
    checks.append(("line order", [sorted(l) for l in lines] == sorted(sorted(l) for l in lines)))
    checks.append(("coverings", {by_points(lines, c) for c in covers} ==
                   {by_points(oracle["lines"], c) for c in oracle["cover_list"]}))
    checks.append(("covering count", len(covers) == oracle["coverings"] == 84))
    ours = {frozenset([by_points(lines, g["l"]), by_points(lines, g["m"])]) for g in grids}
    theirs = {frozenset([by_points(oracle["lines"], l), by_points(oracle["lines"], m)]) for l, m in oracle["grid_list"]}
    checks.append(("grids", ours == theirs))
    checks.append(("grid count", len(grids) == oracle["grids_5_5"] == 72))
    checks.append(("special points", oracle["grid1_special_points"] == SPECIAL_POINTS))

    for name, ok in checks:
        print(f"{'ok  ' if ok else 'FAIL'}  {name}")
    return 0 if all(ok for _, ok in checks) else 1


if __name__ == "__main__":
    sys.exit(main())
