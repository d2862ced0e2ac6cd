#!/usr/bin/env python3
"""Generate every connected simple graph on 8 nodes as graph6 lines.

Each 8-node graph is obtained from some 7-node graph by adding one vertex,
so all 1044 graphs of the networkx atlas on 7 nodes are extended with every
possible neighbourhood of the new vertex. Candidates are bucketed by a
Weisfeiler-Lehman hash and deduplicated with a VF2 isomorphism test.

Usage: python3 scripts/gen_connected8.py > crates/core/tests/data/connected8.g6
"""
import sys
from itertools import combinations

import networkx as nx
from networkx.generators.atlas import graph_atlas_g


def main():
    base = [g for g in graph_atlas_g() if g.number_of_nodes() == 7]
    assert len(base) == 1044, len(base)
    buckets = {}
    reps = []
    for g in base:
        for mask in range(1 << 7):
            h = g.copy()
            h.add_node(7)
            for v in range(7):
                if mask >> v & 1:
                    h.add_edge(7, v)
            key = (tuple(sorted(d for _, d in h.degree())),
                   nx.weisfeiler_lehman_graph_hash(h, iterations=3))
            bucket = buckets.setdefault(key, [])
            if any(nx.is_isomorphic(h, r) for r in bucket):
                continue
            bucket.append(h)
            reps.append(h)
    print(f"all graphs on 8 nodes: {len(reps)}", file=sys.stderr)
    lines = sorted(
        nx.to_graph6_bytes(h, header=False).decode().strip()
        for h in reps if nx.is_connected(h)
    )
    print(f"connected: {len(lines)}", file=sys.stderr)
    sys.stdout.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
