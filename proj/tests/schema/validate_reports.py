"""Runs the tool with --json on the example inputs and validates every report."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema

tool, root = sys.argv[1], Path(sys.argv[2])
schema = json.loads((root / "docs/report.schema.json").read_text())
cert_schema = {**schema["$defs"]["certificate"], "$defs": schema["$defs"]}
ex = root / "docs/examples"

runs = [
    ["order", "x(4,11)", "s[1,5,7,11]"],
    ["order", "s[1,2]", "s[2,1]"],
    ["l-check", "x(3,w)", "s[1|2]", "t[4]"],
    ["poset-verify", str(ex / "cyclic.json")],
    ["poset-gdelta", str(ex / "diamond.json"), "--set", "l", "r"],
    ["sup", "--order", "1", "--chain", "x"],
    ["sup", "--order", "2", "--chain", "x", "y4"],
    ["diag", "canonical", "--depth", "12"],
    ["diag", str(ex / "rank_offset.json"), "--depth", "8"],
    ["diag", str(ex / "sequences_only.json"), "--depth", "1", "--budget", "10"],
    ["cert-verify", str(ex / "rank_offset.cert.json"), "--family", str(ex / "rank_offset.json")],
    ["suites", "finite", "--max-elems", "3"],
]

failures = 0
for args in runs:
    proc = subprocess.run([tool, "--json", *args], capture_output=True, text=True)
    try:
        jsonschema.validate(json.loads(proc.stdout), schema)
        print("ok  ", " ".join(args))
    except (json.JSONDecodeError, jsonschema.ValidationError) as err:
        failures += 1
        print("FAIL", " ".join(args), "-", str(err).splitlines()[0])

jsonschema.validate(json.loads((ex / "rank_offset.cert.json").read_text()), cert_schema)
sys.exit(1 if failures else 0)
