import json
import subprocess
import sys

import jsonschema

tool, schema_path, out = sys.argv[1:4]
rc = subprocess.run([tool, "report", "--all", "--format", "json", "--out", out], stdout=subprocess.DEVNULL).returncode
if rc not in (0, 1):
    sys.exit(f"report exited with {rc}")
with open(schema_path) as f:
    schema = json.load(f)
with open(out) as f:
    report = json.load(f)
jsonschema.Draft202012Validator.check_schema(schema)
jsonschema.validate(report, schema, cls=jsonschema.Draft202012Validator)
ids = {r["id"] for r in report["results"]}
if len(ids) != 27:
    sys.exit(f"expected 27 entries in the report, got {len(ids)}")
s = report["summary"]
if s["pass"] + s["fail"] + s["report-only"] != len(report["results"]):
    sys.exit("summary does not add up")
