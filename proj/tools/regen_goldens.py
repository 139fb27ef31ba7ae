#!/usr/bin/env python3
"""Regenerate docs/examples/golden/*.json from cases.json. Review the diff before committing."""
import json
import pathlib
import subprocess
import sys

root = pathlib.Path(__file__).resolve().parent.parent
examples = root / "docs" / "examples"
binary = sys.argv[1] if len(sys.argv) > 1 else str(root / "build" / "tools" / "vecgo")
(examples / "golden").mkdir(exist_ok=True)
for case in json.loads((examples / "cases.json").read_text()):
    cmd = [binary, "--config", str(examples / case["config"]), "--format", "json", *case["args"]]
    res = subprocess.run(cmd, capture_output=True, text=True)
    if res.returncode != 0:
        sys.exit(f"{case['name']}: exit {res.returncode}\n{res.stderr}")
    (examples / "golden" / f"{case['name']}.json").write_text(res.stdout)
    print(case["name"])
