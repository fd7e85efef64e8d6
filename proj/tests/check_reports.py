"""Validates classification reports against the JSON schema and checks
every embedded graph6 string with networkx's decoder."""
import json
import os
import subprocess
import sys
import tempfile

import jsonschema
import networkx as nx

cli, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

cases = [
    ("C6", 4, "Converged"),
    ("G(r=1,m=3)", 4, "Converged"),
    ("G(r=2,m=4)", 5, "DivergedByOrder"),
    ("F7", 6, "DivergedByOrder"),
    ("CL(4,4,4)", 8, "DivergedByOrder"),
    ("6; 0-1, 1-2, 2-3, 3-0, 0-4, 1-5", 5, "DivergedByOrder"),
    ("P5", 4, "Terminated"),
    ("0;", 4, "Terminated"),
]

failures = 0


def edges_of(edge_list):
    head, _, tail = edge_list.partition(";")
    pairs = [p.strip() for p in tail.split(",") if p.strip()]
    return int(head), {tuple(sorted(map(int, p.split("-")))) for p in pairs}


def check_graph(obj, where):
    global failures
    g = nx.from_graph6_bytes(obj["graph6"].encode())
    order, edges = edges_of(obj["edge_list"])
    mine = {tuple(sorted(e)) for e in g.edges()}
    if g.number_of_nodes() != order or mine != edges or obj["size"] != len(edges):
        print(f"graph6 mismatch at {where}: {obj}")
        failures += 1


def walk(node, where):
    if isinstance(node, dict):
        if "graph6" in node and "edge_list" in node:
            check_graph(node, where)
        for k, v in node.items():
            walk(v, f"{where}.{k}")
    elif isinstance(node, list):
        for i, v in enumerate(node):
            walk(v, f"{where}[{i}]")


with tempfile.TemporaryDirectory() as cache:
    env = dict(os.environ, HLINE_CACHE_DIR=cache)
    for text, n, outcome in cases + [("G(r=3,m=3)", 6, "Unknown")]:
        extra = ["--max-iter", "1"] if outcome == "Unknown" else []
        for attempt in ("fresh", "cached"):
            out = subprocess.run([cli, "classify", text, "--n", str(n)] + extra, env=env,
                                 capture_output=True, text=True, check=True).stdout
            report = json.loads(out)
            errors = sorted(validator.iter_errors(report), key=str)
            for e in errors:
                print(f"{text} n={n} ({attempt}): {e.message} at {list(e.absolute_path)}")
            failures += len(errors)
            if report["outcome"] != outcome:
                print(f"{text} n={n}: outcome {report['outcome']}, expected {outcome}")
                failures += 1
            walk(report, text)

    bad = json.loads(subprocess.run([cli, "classify", "F7", "--n", "6", "--no-cache"], capture_output=True,
                                    text=True, check=True).stdout)
    bad["certificate"]["witness"].pop("cycle")
    if validator.is_valid(bad):
        print("schema accepted a Key1 witness without a cycle")
        failures += 1

print("reports checked" if failures == 0 else f"{failures} problem(s)")
sys.exit(1 if failures else 0)
