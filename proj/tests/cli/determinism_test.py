import json
import subprocess
import sys

apexis = sys.argv[1]
max_n = sys.argv[2] if len(sys.argv) > 2 else "8"

commands = [
    ["table1"],
    ["edge-bound"],
    ["verify-main", "--max-n", max_n],
    ["classify", "-n", "9", "-e", "21", "--min-deg", "3"],
    ["classify", "-n", "8", "-e", "21", "--min-deg", "0"],
    ["family", "--seed", "K7"],
    ["one-apex"],
]


def body(jobs, args):
    p = subprocess.run([apexis, "--jobs", str(jobs), *args], capture_output=True, text=True)
    doc = json.loads(p.stdout)
    del doc["run"]
    return p.returncode, json.dumps(doc, indent=2)


failed = 0
for args in commands:
    a = body(1, args)
    b = body(8, args)
    same = a == b
    failed += not same
    print(("ok   " if same else "FAIL ") + " ".join(args))
sys.exit(1 if failed else 0)
