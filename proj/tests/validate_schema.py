"""Runs each CLI command with --format json and validates the output."""
import json
import subprocess
import sys
from pathlib import Path

import jsonschema

exe, schema_path = sys.argv[1], Path(sys.argv[2])
schema = json.loads(schema_path.read_text())
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

runs = [
    ["verify", "--n", "2"],
    ["commutator", "D_s", "X_s", "--n", "1"],
    ["commutator", "Y[1,2]", "F[2]", "--n", "2"],
    ["kernel", "--n", "2", "--k", "2", "--m", "2", "--model", "weighted"],
    ["spectrum", "--n", "2", "--kmax", "3"],
    ["table", "--n", "1"],
]

failed = 0
for args in runs:
    proc = subprocess.run([exe, *args, "--format", "json"], capture_output=True, text=True)
    label = " ".join(args)
    if proc.returncode != 0:
        print(f"FAIL {label}: exit {proc.returncode} {proc.stderr.strip()}")
        failed += 1
        continue
    errors = sorted(validator.iter_errors(json.loads(proc.stdout)), key=lambda e: list(e.path))
    if errors:
        failed += 1
        print(f"FAIL {label}: {errors[0].message} at {list(errors[0].path)}")
    else:
        print(f"ok   {label}")

bad = {"schema_version": "1.0.0", "command": "spectrum", "n": 1, "status": "pass", "kmax": 1,
       "levels": [{"k": 0, "eigenvalue": "-1/2", "dimension": -1, "expected": 1}]}
if validator.is_valid(bad):
    print("FAIL schema accepted a negative dimension")
    failed += 1

sys.exit(1 if failed else 0)
