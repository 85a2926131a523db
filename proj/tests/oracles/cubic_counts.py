"""Independent oracle: connected simple cubic graph counts for small n.

Builds labelled cubic graphs in first-touch order (a vertex may only be
introduced once every smaller label has been introduced), then dedups with
networkx isomorphism inside Weisfeiler-Lehman hash buckets. Shares no code
with the C++ enumerator.
"""
import sys
import networkx as nx


def first_touch_cubic(n):
    adj = [set() for _ in range(n)]
    out = []

    def rec(introduced):
        v = next((i for i in range(n) if len(adj[i]) < 3), None)
        if v is None:
            out.append([(a, b) for a in range(n) for b in adj[a] if a < b])
            return
        if v >= introduced:
            return
        lo = max(adj[v]) + 1 if adj[v] else 0
        for w in range(max(lo, v + 1), min(n, introduced + 1)):
            if w in adj[v] or len(adj[w]) >= 3:
                continue
            adj[v].add(w)
            adj[w].add(v)
            rec(max(introduced, w + 1))
            adj[v].discard(w)
            adj[w].discard(v)

    rec(1)
    return out


def classes(n):
    buckets = {}
    reps = []
    for edges in first_touch_cubic(n):
        g = nx.Graph(edges)
        if g.number_of_nodes() != n or not nx.is_connected(g):
            continue
        h = nx.weisfeiler_lehman_graph_hash(g, iterations=4)
        bucket = buckets.setdefault(h, [])
        if any(nx.is_isomorphic(g, r) for r in bucket):
            continue
        bucket.append(g)
        reps.append(g)
    return reps


if __name__ == "__main__":
    top = int(sys.argv[1]) if len(sys.argv) > 1 else 10
    for n in range(4, top + 1, 2):
        reps = classes(n)
        no_pm = sum(1 for g in reps if len(nx.max_weight_matching(g, maxcardinality=True)) * 2 < n)
        bridged = sum(1 for g in reps if nx.has_bridges(g))
        print(f"n={n} classes={len(reps)} no_pm={no_pm} bridged={bridged}")
