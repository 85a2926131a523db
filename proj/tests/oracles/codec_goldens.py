"""Golden graph6/sparse6 strings from networkx's independent encoder.

Vertex labellings match the C++ atlas constructors.
"""
import networkx as nx


def petersen():
    e = [(i, (i + 1) % 5) for i in range(5)]
    e += [(5 + i, i) for i in range(5)]
    e += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return e


GRAPHS = {
    "k4": (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    "k33": (6, [(a, b) for a in range(3) for b in range(3, 6)]),
    "prism": (6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]),
    "petersen": (10, petersen()),
    "empty5": (5, []),
    "nauty_example": (7, [(0, 1), (0, 2), (1, 2), (5, 6)]),
    "path4": (4, [(0, 1), (1, 2), (2, 3)]),
}

for name, (n, edges) in GRAPHS.items():
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    g6 = nx.to_graph6_bytes(g, header=False).decode().strip()
    s6 = nx.to_sparse6_bytes(g, header=False).decode().strip()
    print(f"{name:14s} g6={g6!r:20s} s6={s6!r}")

# multigraph sparse6: theta graph and the 4-vertex doubled square
for name, n, edges in [("theta", 2, [(0, 1)] * 3), ("square2", 4, [(0, 1), (0, 1), (2, 3), (2, 3), (0, 2), (1, 3)])]:
    g = nx.MultiGraph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    print(f"{name:14s} s6={nx.to_sparse6_bytes(g, header=False).decode().strip()!r}")
