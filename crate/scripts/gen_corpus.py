#!/usr/bin/env python3
"""Generate the small-graph corpus: every graph on n vertices up to isomorphism.

Graphs on n vertices are obtained from those on n-1 vertices by adding one
vertex with every possible neighbourhood, then deduplicated by nauty's
canonical certificate. Output is one graph6 string per line, sorted.

    python3 scripts/gen_corpus.py 8 crates/core/tests/data
"""
import sys
from pathlib import Path

import networkx as nx
import pynauty


def certificate(g):
    n = g.number_of_nodes()
    adj = {v: list(g.neighbors(v)) for v in range(n)}
    return pynauty.certificate(pynauty.Graph(n, adjacency_dict=adj))


def extend(graphs, n):
    seen = {}
    for g in graphs:
        for mask in range(1 << (n - 1)):
            h = g.copy()
            h.add_node(n - 1)
            for v in range(n - 1):
                if mask >> v & 1:
                    h.add_edge(v, n - 1)
            key = certificate(h) if n > 1 else b""
            seen.setdefault(key, h)
    return list(seen.values())


def g6(g):
    return nx.to_graph6_bytes(g, header=False).strip().decode()


def main():
    max_n = int(sys.argv[1])
    out = Path(sys.argv[2])
    out.mkdir(parents=True, exist_ok=True)
    graphs = [nx.empty_graph(0)]
    for n in range(1, max_n + 1):
        graphs = extend(graphs, n)
        lines = sorted(g6(g) for g in graphs)
        (out / f"graphs{n}.g6").write_text("".join(l + "\n" for l in lines))
        connected = sum(1 for g in graphs if nx.is_connected(g))
        print(f"n={n}: {len(graphs)} graphs, {connected} connected")


if __name__ == "__main__":
    main()
