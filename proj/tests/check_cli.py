"""Command-line behaviour: documented examples, exit codes and one-line errors."""

import json
import os
import re
import subprocess
import sys

CLI = sys.argv[1]
failures = []


def run(*args, env=None):
    full_env = dict(os.environ, **(env or {}))
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env)


def check(name, condition, detail=""):
    print(("ok   " if condition else "FAIL ") + name)
    if not condition:
        failures.append(f"{name}: {detail}")


def expect_error(name, args, kind):
    p = run(*args)
    lines = p.stderr.strip().splitlines()
    check(name, p.returncode == 2 and len(lines) == 1 and re.match(rf"^error: {kind}: \S", lines[0]) is not None,
          f"exit {p.returncode}, stderr {p.stderr!r}")


p = run("analyze", "Zmod(8)")
check("analyze Zmod(8)", p.returncode == 0 and "is_UQ=true" in p.stdout and "\nQN: 4 " in p.stdout, p.stdout)
p = run("analyze", "M(2, F2)")
check("analyze M(2, F2)", "is_UQ=false" in p.stdout and "\nU: 6 " in p.stdout, p.stdout)
p = run("analyze", "Zmod(12)")
check("analyze Zmod(12)", "is_UQ=false" in p.stdout, p.stdout)
p = run("analyze", "T(3, Zmod(2))", "--format", "json")
j = json.loads(p.stdout)
check("analyze json", j["size"] == 64 and j["flags"]["is_UQ"] is True and j["sets"]["U"]["size"] == 8, p.stdout)
p = run("analyze", "M(3, F2)")
check("subset listings elided above 64", "U: 168 (members elided)" in p.stdout, p.stdout)
p = run("classify", "groupring(F2, C(3))", "--format", "json")
check("classify group ring", json.loads(p.stdout)["flags"]["is_UQ"] is False, p.stdout)

p = run("claims", "--only", "C15")
check("claims --only C15", p.returncode == 0 and "C15" in p.stdout and "fail=" not in p.stdout, p.stdout)
p = run("claims", "--only", "C31", "--rings", "A(2,2,F2)", "--format", "json")
j = json.loads(p.stdout)
check("claims C31 on A(2,2,F2)", p.returncode == 0 and [c["status"] for c in j["cells"]] == ["pass"], p.stdout)
p = run("claims", "--only", "C02", "--literal")
check("literal C02 flagged", p.returncode == 0 and "flagged C02" in p.stdout and "e=0" in p.stdout, p.stdout)
p = run("claims", "--only", "C02", "--literal", "--strict")
check("literal C02 strict exit", p.returncode == 1, f"exit {p.returncode}")
p = run("claims", "--only", "C11", "--rings", "M(2, F2)", "--rings", "Zmod(4)", "--format", "json")
j = json.loads(p.stdout)
check("repeatable --rings", [c["ring"] for c in j["corpus"]] == ["M(2, F2)", "Zmod(4)"], p.stdout)

p = run("iso", "trivext(F2)", "polyq(F2,2)")
check("iso trivext/polyq", p.returncode == 0 and p.stdout.startswith("isomorphic") and "->" in p.stdout, p.stdout)
p = run("iso", "A(2,2,F2)", "Tnm(2,2,F2)", "--format", "json")
j = json.loads(p.stdout)
check("iso explicit map", j["isomorphic"] and j["method"] == "explicit" and j["exhaustive"], p.stdout)
p = run("iso", "Tnm(2,3,F2)", "A(2,3,F2)", "--format", "json")
j = json.loads(p.stdout)
check("iso explicit map reversed", j["isomorphic"] and j["method"] == "explicit", p.stdout)
p = run("iso", "Zmod(4)", "product(F2,F2)")
check("iso Zmod(4) product", p.returncode == 0 and p.stdout.startswith("not isomorphic"), p.stdout)

p = run("corpus", "--list")
check("corpus --list", p.returncode == 0 and len(p.stdout.splitlines()) == 80, p.stdout[:200])
p = run("explain", "C15")
check("explain C15", p.returncode == 0 and "power of 2" in p.stdout, p.stdout)

p = run("analyze", "Zmod(8)", env={"UQRING_FORMAT": "json"})
check("env format override", p.stdout.lstrip().startswith("{"), p.stdout)
p = run("corpus", "--list", env={"UQRING_TABLE_CAP": "64"})
check("env cap override", all(int(line.split()[0]) <= 64 for line in p.stdout.splitlines()), p.stdout)
p = run("--seed", "7", "claims", "--only", "C01", "--rings", "F2", "--format", "json")
check("seed is logged", json.loads(p.stdout)["config"]["seed"] == 7, p.stdout)

expect_error("unbalanced expression", ["analyze", "M(2, Zmod(2)"], "ParseError")
expect_error("unknown constructor", ["analyze", "Foo(2)"], "ParseError")
expect_error("over cap", ["analyze", "M(3, Zmod(4))"], "SizeCapExceeded")
expect_error("not idempotent", ["analyze", "corner(M(2, F2), 2)"], "NotIdempotent")
expect_error("unknown claim", ["claims", "--only", "C99"], "UnknownClaim")
expect_error("explain unknown", ["explain", "C00"], "UnknownClaim")
expect_error("iso search cap", ["iso", "T(2, Zmod(4))", "polyq(Zmod(4), 3)"], "SizeCapExceeded")
expect_error("missing import", ["analyze", "@/nonexistent/ring.json"], "ImportError")
expect_error("missing subcommand", [], "UsageError")
expect_error("bad format", ["--format", "xml", "corpus", "--list"], "UsageError")
expect_error("bad cap", ["--table-cap", "0", "corpus", "--list"], "UsageError")

if failures:
    print("\n".join(failures))
    sys.exit(1)
