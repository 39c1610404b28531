"""Write the unlabelled connected graphs on 1..7 vertices as graph6 files.

The networkx graph atlas lists every graph on up to 7 vertices exactly once
up to isomorphism, so filtering it for connectivity yields the standard
connected-graph lists (counts 1, 1, 2, 6, 21, 112, 853).
"""
import pathlib
import sys

import networkx as nx

out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "data/connected")
out.mkdir(parents=True, exist_ok=True)
by_n = {}
for g in nx.graph_atlas_g():
    n = g.number_of_nodes()
    if n == 0 or not nx.is_connected(g):
        continue
    by_n.setdefault(n, []).append(g)
for n, graphs in sorted(by_n.items()):
    with open(out / f"graph{n}c.g6", "wb") as fh:
        for g in graphs:
            fh.write(nx.to_graph6_bytes(g, header=False))
    print(n, len(graphs))
