"""Regenerate tests/fixtures/graphs7.g6 from networkx's graph atlas.

The atlas lists every graph on at most 7 vertices up to isomorphism; the
census ingests the 7-vertex slice instead of generating it.
"""

from pathlib import Path

import networkx as nx

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "graphs7.g6"


def main():
    graphs = [G for G in nx.graph_atlas_g() if G.number_of_nodes() == 7]
    lines = [nx.to_graph6_bytes(G, header=False).strip() for G in graphs]
    OUT.write_bytes(b"\n".join(lines) + b"\n")
    print(f"wrote {len(lines)} graphs to {OUT}")


if __name__ == "__main__":
    main()
