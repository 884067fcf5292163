"""Independent reference implementations used to cross-check the package.

Everything here is deliberately naive: plain exhaustive enumeration and
textbook recursions, sharing no code with the library under test.  Slow but
obviously correct at the sizes the tests use.
"""

from __future__ import annotations

from itertools import combinations, permutations, product


def brute_direct_eval(n, edges, k, m, values, prime):
    """Sum of prod_v values[phi(v)] over all maps phi into k-subsets of
    {1..m} with disjoint blocks on edges -- by full enumeration."""
    blocks = [tuple(c) for c in combinations(range(1, m + 1), k)]
    total = 0
    for phi in product(blocks, repeat=n):
        if all(not set(phi[u]) & set(phi[v]) for u, v in edges):
            p = 1
            for b in phi:
                p = p * values[b] % prime
            total = (total + p) % prime
    return total


def chromatic_polynomial_value(n, edges, m):
    """Proper m-colouring count by deletion-contraction.

    chi(G) = chi(G - e) - chi(G / e), with m^n for the edgeless graph.
    Contraction may create parallel edges; they collapse, since colouring
    constraints do not stack.
    """
    edges = sorted({(min(u, v), max(u, v)) for u, v in edges})
    if not edges:
        return m**n
    u, v = edges[0]
    deleted = chromatic_polynomial_value(n, edges[1:], m)
    merged = set()
    for a, b in edges[1:]:
        a = u if a == v else a
        b = u if b == v else b
        if a != b:
            merged.add((min(a, b), max(a, b)))
    relabel = {w: (w if w < v else w - 1) for w in range(n) if w != v}
    contracted = chromatic_polynomial_value(
        n - 1, [(relabel[a], relabel[b]) for a, b in merged], m
    )
    return deleted - contracted


def brute_min_profile(n, edges, root):
    """Lexicographically least degree sequence over all layer orderings.

    Vertices are laid out layer by layer (BFS distance from the root); any
    permutation inside a layer is allowed.  Tries them all.
    """
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    deg = {v: len(adj[v]) for v in range(n)}
    layers = [[root]]
    seen = {root}
    while len(seen) < n:
        nxt = sorted(
            w for v in layers[-1] for w in adj[v] if w not in seen
        )
        layers.append(nxt)
        seen.update(nxt)
    best = None
    for perms in product(*(list(permutations(layer)) for layer in layers)):
        profile = tuple(deg[v] for layer in perms for v in layer)
        if best is None or profile < best:
            best = profile
    return best


def all_block_bijections(n, edges, blocks):
    """Every bijection of 0..n-1 onto the block multiset with intersecting
    blocks on edges, by trying all slot permutations (deduplicated)."""
    out = set()
    for perm in permutations(range(n)):
        phi = {v: tuple(blocks[perm[v]]) for v in range(n)}
        if all(set(phi[u]) & set(phi[v]) for u, v in edges):
            out.add(tuple(sorted(phi.items())))
    return [dict(items) for items in sorted(out)]


def prufer_decode(seq, n):
    """Textbook Pruefer decoding, independent of the package's decoder."""
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        for leaf in range(n):
            if degree[leaf] == 1:
                edges.append((min(leaf, v), max(leaf, v)))
                degree[leaf] -= 1
                degree[v] -= 1
                break
    last = [v for v in range(n) if degree[v] == 1]
    edges.append((min(last), max(last)))
    return edges
