"""Brute-force reference computations kept independent of the library code paths."""

from itertools import combinations


def subset_cycles(edges, vertex_count):
    """Edge subsets (as bitmasks) that form a single simple cycle."""
    m = len(edges)
    out = []
    for mask in range(1, 1 << m):
        chosen = [edges[e] for e in range(m) if mask >> e & 1]
        deg = {}
        for a, b in chosen:
            deg[a] = deg.get(a, 0) + 1
            deg[b] = deg.get(b, 0) + 1
        if any(d != 2 for d in deg.values()):
            continue
        # connected?
        start = chosen[0][0]
        seen = {start}
        frontier = [start]
        while frontier:
            x = frontier.pop()
            for a, b in chosen:
                for p, q in ((a, b), (b, a)):
                    if p == x and q not in seen:
                        seen.add(q)
                        frontier.append(q)
        if len(seen) == len(deg):
            out.append(mask)
    return out


def floyd_warshall(vertex_count, edges):
    inf = float("inf")
    d = [[0 if i == j else inf for j in range(vertex_count)] for i in range(vertex_count)]
    for a, b in edges:
        d[a][b] = d[b][a] = 1
    for k in range(vertex_count):
        for i in range(vertex_count):
            for j in range(vertex_count):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def gray_code_minimum(edges, vertex_count, neg):
    """Smallest signature size over all switchings, scanning subsets in Gray-code order."""
    star = [0] * vertex_count
    for e, (a, b) in enumerate(edges):
        star[a] |= 1 << e
        star[b] |= 1 << e
    current = neg
    best = bin(current).count("1")
    for i in range(1, 1 << vertex_count):
        flip = (i & -i).bit_length() - 1
        current ^= star[flip]
        best = min(best, bin(current).count("1"))
    return best


def automorphisms_by_permutation(vertex_count, edges):
    """All vertex permutations preserving the edge set (only for tiny graphs)."""
    from itertools import permutations

    es = {frozenset(e) for e in edges}
    return [p for p in permutations(range(vertex_count))
            if all(frozenset((p[a], p[b])) in es for a, b in edges)]


def pairs(n):
    return combinations(range(n), 2)
