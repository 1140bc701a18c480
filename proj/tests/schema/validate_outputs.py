"""Checks CLI reports against docs/output-schema.json.

Usage: validate_outputs.py <congruent executable> <schema file>
"""
import json
import subprocess
import sys

import jsonschema

INVOCATIONS = [
    ["rank", "41"],
    ["rank", "3"],
    ["rank", "30"],
    ["rank", "105"],
    ["rank", "210"],
    ["--moduli", "16,9", "rank", "34"],
    ["--bound", "3", "--lifted-bound", "0", "rank", "41"],
    ["triangle", "5"],
    ["--bound", "5", "--lifted-bound", "0", "triangle", "157"],
    ["survey", "p<60"],
    ["survey", "2pq<120"],
    ["forms", "--max-value", "300"],
    ["descent", "--b1", "2", "--a", "0", "--b2", "18"],
    ["descent", "--b1", "2", "--a", "0", "--b2", "-18"],
]


def main():
    exe, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        validator = jsonschema.Draft202012Validator(json.load(f))
    failures = 0
    for args in INVOCATIONS:
        out = subprocess.run([exe] + args, capture_output=True, text=True).stdout
        errors = list(validator.iter_errors(json.loads(out)))
        status = "ok" if not errors else "INVALID"
        print(f"{status:8} {' '.join(args)}")
        for e in errors[:3]:
            print(f"         {list(e.absolute_path)}: {e.message[:200]}")
        failures += bool(errors)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
