import json
import os
import subprocess
import sys
import tempfile

import jsonschema

apexis, schema_path, diagram_dir = sys.argv[1:4]
with open(schema_path) as f:
    schema = json.load(f)
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

failures = []


def run(*args, stdin=None):
    return subprocess.run([apexis, *args], input=stdin, capture_output=True, text=True)


def check(name, ok, detail=""):
    print(("ok   " if ok else "FAIL ") + name + (": " + detail if detail and not ok else ""))
    if not ok:
        failures.append(name)


def report(name, args, code, stdin=None):
    p = run(*args, stdin=stdin)
    check(name + " exit " + str(code), p.returncode == code, "got %d, stderr %s" % (p.returncode, p.stderr.strip()))
    try:
        doc = json.loads(p.stdout)
    except json.JSONDecodeError as e:
        check(name + " json", False, str(e))
        return None
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
    check(name + " schema", not errors, errors[0].message if errors else "")
    return doc


k4 = report("planar K4", ["planar", "C~"], 0)
check("planar K4 certificate", k4 and k4["result"]["certificate"]["kind"] == "embedding")
k5 = report("planar K5", ["planar", "D~{"], 1)
check("planar K5 obstruction", k5 and k5["result"]["certificate"]["pattern"] == "K5")
k33 = report("planar K33 stdin", ["planar", "-"], 1, stdin="EFz_\n")
check("planar K33 obstruction", k33 and k33["result"]["certificate"]["pattern"] == "K3,3")

k7 = report("apex K7 l=2", ["apex", "-l", "2", "F~~~w"], 1)
check("apex K7 verdict", k7 and k7["result"]["apex"] is False)
k5a = report("apex K5 l=1", ["apex", "-l", "1", "D~{"], 0)
report("apex K6 l=1", ["apex", "-l", "1", "E~~w"], 1)
check("apex K5 set", k5a and len(k5a["result"]["certificate"]["apex_set"]) == 1)
report("apex K7 l=3", ["apex", "-l", "3", "F~~~w"], 0)

t1 = report("table1", ["table1"], 0)
check("table1 cells", t1 and len(t1["result"]["cells"]) == 14 and t1["result"]["passed"])

fam = report("family", ["family", "--seed", "K7"], 0)
check("family size", fam and fam["result"]["count"] == 14)

cl = report("classify 9 21", ["classify", "-n", "9", "-e", "21", "--min-deg", "3"], 0)
check("classify names", cl and sorted(c["name"] for c in cl["result"]["classes"]) == ["E9", "F9", "H9"])

report("verify-main 7", ["verify-main", "--max-n", "7"], 0)
report("one-apex", ["one-apex"], 0)
report("edge-bound", ["edge-bound"], 0)

for diag, code in [("triangle_kink.diag", 0), ("two_triangles.diag", 0), ("trefoil_theta.diag", 1)]:
    report("unknot-check " + diag, ["unknot-check", os.path.join(diagram_dir, diag)], code)

p = run("enumerate", "-n", "7", "-e", "11", "--min-deg", "1", "--filter", "nonplanar")
lines = p.stdout.split()
check("enumerate 7 11 lines", p.returncode == 0 and len(lines) == 9, p.stderr)
check("enumerate count line", p.stderr.strip() == "count 9", p.stderr)

with tempfile.TemporaryDirectory() as tmp:
    out = os.path.join(tmp, "g.g6")
    en = report("enumerate -o", ["enumerate", "-n", "6", "-e", "9", "-o", out], 0)
    with open(out) as f:
        check("enumerate -o file", en and len(f.read().split()) == en["result"]["count"])

    ck = os.path.join(tmp, "ck")
    first = report("table1 checkpoint", ["--checkpoint", ck, "table1"], 0)
    check("checkpoint files written", os.path.isdir(ck) and len(os.listdir(ck)) > 0)
    second = report("table1 resumed", ["--checkpoint", ck, "table1"], 0)
    check("resume matches", first and second and first["result"] == second["result"])

    rp = os.path.join(tmp, "r.json")
    p = run("--report", rp, "planar", "C~")
    with open(rp) as f:
        check("--report file", json.load(f)["result"] == json.loads(p.stdout)["result"])

for name, args in [
    ("bad graph6", ["planar", "C!"]),
    ("truncated graph6", ["planar", "D~"]),
    ("empty stdin", ["planar", "-"]),
    ("missing diagram", ["unknot-check", os.path.join(diagram_dir, "absent.diag")]),
    ("bad level", ["apex", "-l", "4", "C~"]),
    ("no subcommand", []),
]:
    p = run(*args, stdin="")
    check(name + " exit 2", p.returncode == 2, "got %d" % p.returncode)
    check(name + " message", p.stderr.strip() != "")

with tempfile.NamedTemporaryFile("w", suffix=".diag", delete=False) as f:
    f.write("vertex a\nvertex b\nedge ab a b : 1o\n")
p = run("unknot-check", f.name)
os.unlink(f.name)
check("malformed diagram exit 2", p.returncode == 2 and "crossing 1" in p.stderr, p.stderr)

print("%d failure(s)" % len(failures))
sys.exit(1 if failures else 0)
