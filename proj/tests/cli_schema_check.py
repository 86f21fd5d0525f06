#!/usr/bin/env python3
# Copyright 2026 The ghzbox Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runs every ghzbox subcommand with --json and validates the report."""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema


def main(argv):
    if len(argv) != 3:
        print("usage: cli_schema_check.py <ghzbox> <schema.json>", file=sys.stderr)
        return 2
    binary, schema_path = argv[1], argv[2]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    validator.check_schema(schema)

    with tempfile.TemporaryDirectory() as tmp:
        csv = os.path.join(tmp, "out.csv")
        runs = [
            ["expand", "position", "position", "position"],
            ["expand", "bonding", "bonding", "position"],
            ["expand", "phase", "phase", "phase"],
            ["rules"],
            ["epr"],
            ["lhv"],
            ["--seed", "11", "measure", "A:position", "B:position"],
            ["--seed", "11", "measure", "--state", "two-box", "A:bonding"],
            ["waveform", "fig2", "--resolution", "16", "--out", csv],
            ["waveform", "fig9", "--resolution", "64", "--out", csv],
            ["waveform", "fig10", "--resolution", "16", "--out", csv],
        ]
        failures = 0
        for args in runs:
            proc = subprocess.run([binary, "--json", *args], capture_output=True, text=True, check=False)
            name = " ".join(args)
            if proc.returncode != 0:
                print(f"FAIL {name}: exit {proc.returncode}: {proc.stderr.strip()}")
                failures += 1
                continue
            errors = sorted(validator.iter_errors(json.loads(proc.stdout)), key=lambda e: list(e.path))
            if errors:
                failures += 1
                for e in errors:
                    print(f"FAIL {name}: {'/'.join(map(str, e.path))}: {e.message}")
            else:
                print(f"ok   {name}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
