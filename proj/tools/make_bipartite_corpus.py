#!/usr/bin/env python3
"""Emit every connected bipartite graph on 1..N vertices, one graph6 line each,
up to isomorphism.

Every connected graph has a non-cut vertex, so each connected bipartite graph on
n vertices arises from one on n-1 vertices by attaching a new vertex to a
nonempty subset of a single colour class. Isomorphs are dropped by nauty's
canonical certificate.
"""

import argparse
import itertools
import sys

import networkx as nx
import pynauty


def certificate(g):
    n = g.number_of_nodes()
    adj = {v: [w for w in g.neighbors(v)] for v in g.nodes}
    return pynauty.certificate(pynauty.Graph(n, adjacency_dict=adj))


def extend(g):
    n = g.number_of_nodes()
    colour = nx.bipartite.color(g)
    sides = [[v for v in g.nodes if colour[v] == c] for c in (0, 1)]
    for side in sides:
        for r in range(1, len(side) + 1):
            for nbrs in itertools.combinations(side, r):
                h = g.copy()
                h.add_node(n)
                h.add_edges_from((n, v) for v in nbrs)
                yield h


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=10)
    args = ap.parse_args()

    level = [nx.empty_graph(1)]
    counts = []
    for n in range(1, args.max_n + 1):
        if n > 1:
            seen = {}
            for g in level:
                for h in extend(g):
                    seen.setdefault(certificate(h), h)
            level = [seen[c] for c in sorted(seen)]
        counts.append(len(level))
        for g in level:
            sys.stdout.write(nx.to_graph6_bytes(g, header=False).decode())
    print("counts:", counts, file=sys.stderr)


if __name__ == "__main__":
    main()
