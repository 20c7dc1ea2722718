"""Runs the CLI with --format json and validates every output against schemas/."""

import json
import pathlib
import subprocess
import sys

import jsonschema

CASES = [
    ("roots", ["--family", "C", "--rank", "3"], 0),
    ("roots", ["--family", "G2"], 0),
    ("weyl", ["--family", "A", "--rank", "3", "--word", "1,2,1,2"], 0),
    ("weyl", ["--family", "E7"], 0),
    ("coset", ["--family", "D4relabeled", "--omega", "4"], 0),
    ("coset", ["--family", "E7", "--omega", "7"], 0),
    ("graph", ["--family", "E6", "--omega", "6"], 0),
    ("graph", ["--family", "B", "--rank", "3", "--omega", "1"], 0),
    ("dr", ["--family", "C", "--rank", "3"], 0),
    ("dr", ["--family", "A", "--rank", "4", "--word", "4,3,2,1,2"], 0),
    ("crystal", ["--family", "A", "--rank", "2", "--lambda", "1,1"], 0),
    ("crystal", ["--family", "C", "--rank", "2", "--lambda", "0,1", "--stable-only"], 0),
    ("hcoeff", ["--family", "A", "--rank", "2", "--n", "3", "--k", "2,2", "--p", "7"], 0),
    ("hcoeff", ["--family", "A", "--rank", "2", "--n", "3", "--k", "1,1"], 0),
    ("hcoeff", ["--family", "A", "--rank", "2", "--n", "2", "--k", "1,1"], 3),
    ("verify", ["--family", "A", "--rank", "2", "--lambda", "1,1", "--n", "5"], 0),
    ("verify", ["--family", "C", "--rank", "2", "--n", "5", "--p", "11"], 0),
    ("verify", ["--family", "C", "--rank", "2", "--n", "4"], 3),
]


def main() -> int:
    binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    failures = 0
    for sub, args, expected in CASES:
        cmd = [binary, sub, *args, "--format", "json"]
        first = subprocess.run(cmd, capture_output=True, text=True)
        second = subprocess.run(cmd, capture_output=True, text=True)
        label = " ".join(cmd[1:])
        if first.returncode != expected:
            print(f"FAIL {label}: exit {first.returncode}, expected {expected}\n{first.stderr}")
            failures += 1
            continue
        if first.stdout != second.stdout:
            print(f"FAIL {label}: output differs between runs")
            failures += 1
            continue
        schema = json.loads((schema_dir / f"{sub}.schema.json").read_text())
        try:
            jsonschema.validate(json.loads(first.stdout), schema)
        except jsonschema.ValidationError as e:
            print(f"FAIL {label}: {e.message}")
            failures += 1
            continue
        print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
