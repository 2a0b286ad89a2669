#!/usr/bin/env python3
# Copyright 2026 The DeCoDe Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Downloads the benchmark networks that are not vendored under data/.

Writes <name>.tsv (one undirected edge per line) and <name>_labels.csv
(node,label) for polbooks, football and email. Stdlib only.
"""

import argparse
import gzip
import io
import re
import sys
import urllib.request
import zipfile
from collections import defaultdict
from pathlib import Path

NEWMAN = "http://www-personal.umich.edu/~mejn/netdata/"
SNAP = "https://snap.stanford.edu/data/"

# Expected (nodes, edges) after cleaning. No published checksums exist, so
# the counts are the integrity check.
EXPECTED = {
    "polbooks": (105, 441),
    "football": (115, 613),
    "email": (986, None),
}


def fetch(url):
    try:
        with urllib.request.urlopen(url, timeout=60) as resp:
            return resp.read()
    except OSError as err:
        sys.exit(f"cannot download {url}: {err}")


def gml_from_zip(blob, member):
    with zipfile.ZipFile(io.BytesIO(blob)) as zf:
        return zf.read(member).decode("latin-1")


_TOKEN = re.compile(r'"[^"]*"|\[|\]|[^\s\[\]"]+')


def parse_gml(text):
    """Returns ({id: value}, [(source, target)]) from a flat GML graph."""
    tokens = _TOKEN.findall(text)
    nodes, edges = {}, []
    i = 0

    def block(i):
        # tokens[i] == "["; returns (dict, index after "]")
        out, i = {}, i + 1
        while tokens[i] != "]":
            key = tokens[i]
            if tokens[i + 1] == "[":
                _, i = block(i + 1)
                continue
            out[key] = tokens[i + 1].strip('"')
            i += 2
        return out, i + 1

    while i < len(tokens):
        tok = tokens[i]
        if tok in ("node", "edge") and i + 1 < len(tokens) and tokens[i + 1] == "[":
            rec, i = block(i + 1)
            if tok == "node":
                nodes[rec["id"]] = rec.get("value", "")
            else:
                edges.append((rec["source"], rec["target"]))
        else:
            i += 1
    return nodes, edges


def clean(edges):
    """Symmetrizes, drops self-loops and duplicates."""
    out = set()
    for u, v in edges:
        if u == v:
            continue
        out.add((u, v) if _key(u) < _key(v) else (v, u))
    return sorted(out, key=lambda e: (_key(e[0]), _key(e[1])))


def _key(x):
    return (0, int(x)) if str(x).isdigit() else (1, str(x))


def giant_component(edges):
    adj = defaultdict(set)
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen, best = set(), set()
    for start in adj:
        if start in seen:
            continue
        comp, stack = {start}, [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        if len(comp) > len(best):
            best = comp
    return best


def write(out_dir, name, edges, labels):
    nodes = {x for e in edges for x in e}
    want_n, want_m = EXPECTED[name]
    if len(nodes) != want_n or (want_m is not None and len(edges) != want_m):
        sys.exit(f"{name}: got {len(nodes)} nodes / {len(edges)} edges, "
                 f"expected {want_n} / {want_m}")
    with open(out_dir / f"{name}.tsv", "w", encoding="utf-8") as f:
        for u, v in edges:
            f.write(f"{u}\t{v}\n")
    with open(out_dir / f"{name}_labels.csv", "w", encoding="utf-8") as f:
        f.write("node,label\n")
        for x in sorted(nodes, key=_key):
            f.write(f"{x},{labels[x]}\n")
    print(f"{name}: {len(nodes)} nodes, {len(edges)} edges")


def newman(out_dir, name):
    text = gml_from_zip(fetch(NEWMAN + name + ".zip"), name + ".gml")
    nodes, edges = parse_gml(text)
    write(out_dir, name, clean(edges), nodes)


def email(out_dir):
    raw = gzip.decompress(fetch(SNAP + "email-Eu-core.txt.gz")).decode()
    edges = clean(tuple(line.split()) for line in raw.splitlines() if line.strip())
    keep = giant_component(edges)
    edges = [e for e in edges if e[0] in keep]
    raw = gzip.decompress(
        fetch(SNAP + "email-Eu-core-department-labels.txt.gz")).decode()
    labels = dict(line.split() for line in raw.splitlines() if line.strip())
    write(out_dir, "email", edges, labels)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("names", nargs="*", default=["polbooks", "football", "email"],
                    choices=["polbooks", "football", "email"])
    ap.add_argument("--out", type=Path,
                    default=Path(__file__).resolve().parent.parent / "data")
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name in args.names:
        if name == "email":
            email(args.out)
        else:
            newman(args.out, name)


if __name__ == "__main__":
    main()
