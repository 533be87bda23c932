"""Validates a claims report against the published schema."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema


def main() -> int:
    cli, schema_path = sys.argv[1], sys.argv[2]
    schema = json.loads(Path(schema_path).read_text())
    with tempfile.TemporaryDirectory() as tmp:
        for args in (["--only", "C01,C02,C15"], ["--only", "C02", "--literal", "--timings"]):
            out = Path(tmp) / "report.json"
            subprocess.run([cli, "claims", *args, "--out", str(out)], check=True, stdout=subprocess.DEVNULL)
            report = json.loads(out.read_text())
            jsonschema.validate(report, schema)
            cells = len(report["corpus"]) * len(report["claims"])
            assert len(report["cells"]) == cells, (len(report["cells"]), cells)
    print("report matches schema")
    return 0


if __name__ == "__main__":
    sys.exit(main())
