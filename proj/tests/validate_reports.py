"""Runs the CLI on a few inputs and validates every report against schemas/."""
import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

cdg, root = sys.argv[1], pathlib.Path(sys.argv[2])
schemas = {p.name: json.loads(p.read_text()) for p in (root / "schemas").glob("*.json")}
registry = Registry().with_resources((name, Resource.from_contents(s)) for name, s in schemas.items())
validator = jsonschema.Draft202012Validator(schemas["report.schema.json"], registry=registry)

runs = [
    ["analyze", "--named", "sl23"],
    ["analyze", "--named", "lewis"],
    ["analyze", "--group", str(root / "data" / "trivial.grp")],
    ["analyze", "--degrees", "1,1,1,2,2,2,3"],
    ["analyze", "--recipe", str(root / "data" / "corpus_default.txt"), "--timings"],
    ["verify", "sl23"],
    ["verify", "zsigmondy", "--a-max", "10", "--n-max", "10"],
    ["verify", "palfy"],
    ["verify", "minimal-order", "--min-exp", "15", "--max-exp", "18"],
]
bad = 0
for args in runs:
    out = subprocess.run([cdg, *args], capture_output=True, text=True)
    if out.returncode not in (0, 1):
        print("exit", out.returncode, args, out.stderr)
        bad += 1
        continue
    errors = list(validator.iter_errors(json.loads(out.stdout)))
    for e in errors[:5]:
        print(" ".join(args), "->", "/".join(map(str, e.absolute_path)), e.message[:200])
    bad += bool(errors)
print("schema violations in", bad, "of", len(runs), "reports")
sys.exit(1 if bad else 0)
