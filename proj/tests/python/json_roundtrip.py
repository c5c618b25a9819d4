import json
import subprocess
import sys

cli = sys.argv[1]

cases = [
    ["field", "table", "--p", "2", "--m", "3", "--format", "json"],
    ["ring", "table", "--m", "2", "--format", "json"],
    ["mub", "verify", "--odd-q", "3", "--format", "json"],
    ["code", "distance", "--n", "7", "--q", "2", "--g", "1,1,0,1", "--format", "json"],
    ["pg", "build", "--q", "3", "--format", "json"],
    ["pg", "arcs", "--q", "2", "--format", "json"],
    ["pg", "incidence", "--q", "2", "--format", "json"],
    ["phase", "lock-sweep", "--qmax", "8", "--format", "json"],
]

for args in cases:
    out = subprocess.run([cli] + args, capture_output=True, text=True)
    assert out.returncode == 0, (args, out.returncode, out.stderr)
    parsed = json.loads(out.stdout)
    assert parsed is not None

    # determinism: identical invocation, byte-identical output
    again = subprocess.run([cli] + args, capture_output=True, text=True)
    assert again.stdout == out.stdout, args

print("json roundtrip ok")
