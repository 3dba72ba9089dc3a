"""Run `solvknot verify` and validate its JSON output against the report schema."""
import json
import subprocess
import sys

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
proc = subprocess.run([cli, "verify"], capture_output=True, text=True)
if proc.returncode not in (0, 1):
    sys.exit(f"verify exited with {proc.returncode}: {proc.stderr}")
report = json.loads(proc.stdout)
with open(schema_path) as f:
    jsonschema.validate(report, json.load(f))
failing = [c["claimId"] for c in report["claims"] if c["status"] == "fail"]
if (proc.returncode == 1) != bool(failing):
    sys.exit("exit status does not match the failing claims")
print(f"report valid: {report['counts']}")
