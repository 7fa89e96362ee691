"""CLI contract: JSON output validates against the shipped schema, the table
format carries the same data, exit codes follow 0/1/2, and shipped data
files validate too.

usage: cli_schema_test.py BSWIDTH SCHEMA_DIR DATA_DIR WORK_DIR
"""

import json
import pathlib
import shutil
import subprocess
import sys

import jsonschema

BIN, SCHEMAS, DATA, WORK = (pathlib.Path(a) for a in sys.argv[1:5])

COMMANDS = [
    ["order", "PSU(3,3)"],
    ["order", "Sym(5)"],
    ["classes", "PSU(3,3):phi1"],
    ["classes", "Alt(5)"],
    ["classes", "PSU(4,2)", "--cap-order", "1000", "--budget", "5000"],
    ["radical", "Sym(4)", "--pi", "2"],
    ["radical", "--degree", "4", "--gens", "2,1,4,3;3,4,1,2;2,3,1,4", "--pi", "2,3"],
    ["bswidth", "Sym(4)", "--pi", "2"],
    ["bswidth", "PSL(2,7)", "--pi", "2,3"],
    ["beta", "PSL(2,7)", "--class", "2:21", "--r", "3"],
    ["beta", "PSp(4,3)", "--class", "2:270", "--r", "5", "--mode", "randomized", "--budget", "500"],
    ["alpha", "PSL(2,7)", "--class", "3:56"],
    ["alpha", "PGL(2,5)", "--class", "2:10"],
    ["structconst", "PSU(3,3):phi1", "2A", "2A", "3B"],
    ["structconst", "PSU(4,2)", "2:45", "2:45", "2:270"],
]

failures = []


def fail(msg):
    failures.append(msg)
    print("FAIL", msg)


def run(args):
    return subprocess.run([str(BIN), *args], capture_output=True, text=True, timeout=600)


# Mirror of the CLI's generic table renderer.
def cell(v):
    if isinstance(v, str):
        return v
    if isinstance(v, list):
        return " ".join(cell(e) for e in v)
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "true" if v else "false"
    return json.dumps(v)


def rows(items, indent):
    cols = []
    for r in items:
        for k in r:
            if k not in cols:
                cols.append(k)
    cells = [[cell(r[c]) if c in r else "-" for c in cols] for r in items]
    width = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(cols)]
    out = []
    for line in [cols] + cells:
        text = "".join(s + (" " * (width[i] - len(s) + 2) if i + 1 < len(cols) else "") for i, s in enumerate(line))
        out.append(indent + text)
    return out


def table(obj, indent=""):
    out = []
    for k, v in obj.items():
        if isinstance(v, list) and v and isinstance(v[0], dict):
            out.append(f"{indent}{k}:")
            out += rows(v, indent + "  ")
        elif isinstance(v, dict):
            out.append(f"{indent}{k}:")
            out += table(v, indent + "  ")
        else:
            out.append(f"{indent}{k}: {cell(v)}")
    return out


def main():
    cli_schema = json.loads((SCHEMAS / "cli-output.schema.json").read_text())
    ref_schema = json.loads((SCHEMAS / "reftable.schema.json").read_text())
    cache_schema = json.loads((SCHEMAS / "class-cache.schema.json").read_text())
    for schema in (cli_schema, ref_schema, cache_schema):
        jsonschema.Draft202012Validator.check_schema(schema)
    cli = jsonschema.Draft202012Validator(cli_schema)

    for args in COMMANDS:
        name = " ".join(args)
        js = run(args + ["--format", "json"])
        tb = run(args + ["--format", "table"])
        if js.returncode != 0 or tb.returncode != 0:
            fail(f"{name}: exit {js.returncode}/{tb.returncode}: {js.stderr.strip()}")
            continue
        doc = json.loads(js.stdout, object_pairs_hook=dict)
        errors = sorted(cli.iter_errors(doc), key=str)
        if errors:
            fail(f"{name}: schema: {errors[0].message}")
        if tb.stdout.splitlines() != table(doc):
            fail(f"{name}: table and json differ")
        print("ok  ", name)

    # verify has its own table layout; compare the data it carries
    js = run(["verify", "baer-suzuki", "--format", "json"])
    tb = run(["verify", "baer-suzuki"])
    doc = json.loads(js.stdout)
    if list(cli.iter_errors(doc)) or js.returncode != 0 or tb.returncode != 0:
        fail("verify baer-suzuki: schema or exit code")
    for c in doc["criteria"]:
        head = next((l for l in tb.stdout.splitlines() if c["title"] in l), "")
        if not head.startswith("PASS" if c["pass"] else "FAIL"):
            fail("verify: criterion line missing")
        for k in c["checks"]:
            if f"{k['name']}: {k['detail']}" not in tb.stdout:
                fail(f"verify: check {k['name']} missing from table")
    print("ok   verify baer-suzuki")

    # determinism across seeds and thread counts
    base = run(["beta", "PSL(2,7)", "--class", "2:21", "--r", "3", "--format", "json"]).stdout
    if run(["beta", "PSL(2,7)", "--class", "2:21", "--r", "3", "--format", "json", "--threads", "4"]).stdout != base:
        fail("beta output depends on --threads")
    a = run(["bswidth", "PSL(2,7)", "--pi", "2,3", "--seed", "7", "--format", "json"]).stdout
    if run(["bswidth", "PSL(2,7)", "--pi", "2,3", "--seed", "7", "--format", "json"]).stdout != a:
        fail("bswidth output not reproducible for a fixed seed")
    print("ok   determinism")

    # exit codes
    for args, code in [
        (["order", "PSU(3,"], 1),
        (["order", "PSU(3,3):foo"], 1),
        (["structconst", "PSU(3,3)", "2A", "2A", "9Z"], 1),
        (["beta", "PSL(2,7)", "--class", "2:21", "--r", "5"], 1),
        (["nosuch"], 1),
        (["--help"], 0),
        (["bswidth", "Sym(4)", "--pi", "2", "--m", "1"], 2),
    ]:
        p = run(args)
        if p.returncode != code:
            fail(f"{' '.join(args)}: exit {p.returncode}, expected {code}")
    p = run(["order", "PSU(3,"])
    if "position 6" not in p.stderr or "^" not in p.stderr:
        fail("parse error does not report its position")
    print("ok   exit codes")

    # cache: written, schema-valid, reused
    cache = WORK / "cache"
    shutil.rmtree(cache, ignore_errors=True)
    first = json.loads(run(["classes", "PSU(3,3)", "--cache-dir", str(cache), "--format", "json"]).stdout)
    files = list(cache.glob("*.json"))
    if len(files) != 1:
        fail("class cache not written")
    else:
        errs = list(jsonschema.Draft202012Validator(cache_schema).iter_errors(json.loads(files[0].read_text())))
        if errs:
            fail(f"cache schema: {errs[0].message}")
    second = json.loads(run(["classes", "PSU(3,3)", "--cache-dir", str(cache), "--format", "json"]).stdout)
    if second["method"] != "cache" or second["classes"] != first["classes"]:
        fail("class cache not reused faithfully")
    print("ok   cache")

    ref = jsonschema.Draft202012Validator(ref_schema)
    for f in sorted(DATA.glob("*.json")):
        errs = list(ref.iter_errors(json.loads(f.read_text())))
        if errs:
            fail(f"{f.name}: {errs[0].message}")
    print("ok   reference tables")

    if failures:
        print(f"{len(failures)} failure(s)")
        sys.exit(1)


if __name__ == "__main__":
    main()
