#!/usr/bin/env python3
"""Runs every JSON-emitting CLI command and validates the output against the
schemas shipped in schemas/. Usage: validate_schemas.py <cli> <schema_dir>."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

FAN5 = "plane 5 5\n0 1 2 3\n0 4\n1 4\n2 4\n3 4\n"


def main() -> int:
    cli, schema_dir = sys.argv[1], Path(sys.argv[2])
    tmp = Path(tempfile.mkdtemp(prefix="pgrowth_schema_"))

    pg3 = tmp / "pg3.plane"
    subprocess.run([cli, "plane", "gen", "--order", "3", "--out", str(pg3)],
                   check=True)
    fan = tmp / "fan5.plane"
    fan.write_text(FAN5)

    cases = [
        ("plane_check", ["plane", "check", str(pg3)], (0,)),
        ("plane_check", ["plane", "check", str(fan)], (1,)),
        ("grow", ["grow", "--order", "2", "--points", "0,1,3,6"], (0,)),
        ("grow", ["grow", "--order", "2", "--points", "0,1,2"], (0,)),
        ("grow", ["grow", "--plane", str(pg3), "--points", "0,1,2,3",
                  "--steps", "4"], (0,)),
        ("classify", ["classify", "--order", "3", "--points", "0,1,2,3"], (0,)),
        ("survey", ["survey", "--order", "3", "--trials", "20", "--seed", "5",
                    "--format", "json"], (0,)),
        ("survey", ["survey", "--order", "2", "--exhaustive",
                    "--format", "json"], (0,)),
        ("desargues", ["desargues", "--order", "3"], (0,)),
        ("desargues", ["desargues", "--order", "3", "--alpha", "0",
                       "--ell", "1"], (0,)),
        ("desargues", ["desargues", "--order", "4", "--mode", "sampled",
                       "--samples", "200", "--seed", "3"], (0,)),
        ("ruzsa", ["ruzsa", "--order", "5", "--trials", "10", "--seed", "7"],
         (0,)),
        ("ruzsa", ["ruzsa", "--abelian", "17", "--trials", "5", "--seed", "3"],
         (0,)),
    ]

    failures = 0
    for schema_name, args, expected_codes in cases:
        schema = json.loads((schema_dir / f"{schema_name}.schema.json")
                            .read_text())
        result = subprocess.run([cli] + args, capture_output=True, text=True)
        label = " ".join(args)
        if result.returncode not in expected_codes:
            print(f"FAIL {label}: exit {result.returncode}, "
                  f"stderr: {result.stderr.strip()}")
            failures += 1
            continue
        try:
            doc = json.loads(result.stdout)
            jsonschema.Draft7Validator(schema).validate(doc)
            print(f"ok   {label}")
        except (json.JSONDecodeError, jsonschema.ValidationError) as err:
            print(f"FAIL {label}: {err}")
            failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
