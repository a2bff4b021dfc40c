"""Independent reference computations used by the tests.

Nothing here calls the package's canonical codes or eigensolvers; the
helpers rely on brute force, networkx or closed-form polynomials.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

import networkx as nx
import numpy as np


def labeled_supertree_count(k: int, m: int) -> int:
    """Labeled k-uniform supertrees with m edges on n = m(k-1)+1 vertices."""
    n = m * (k - 1) + 1
    num = n ** (m - 1) * math.factorial(n - 1)
    den = math.factorial(m) * math.factorial(k - 1) ** m
    assert num % den == 0
    return num // den


def _incidence_is_tree(n: int, edges) -> bool:
    """Incidence graph has n + m nodes and n + m - 1 links; acyclic means tree."""
    m = len(edges)
    if sum(len(e) for e in edges) != n + m - 1:
        return False
    parent = list(range(n + m))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, e in enumerate(edges):
        for v in e:
            ra, rb = find(v), find(n + i)
            if ra == rb:
                return False
            parent[ra] = rb
    return True


def brute_labeled_supertrees(k: int, m: int) -> list[tuple[tuple[int, ...], ...]]:
    """Every labeled k-uniform supertree on m(k-1)+1 vertices, by backtracking.

    Edge sets are grown in increasing lexicographic order with pairwise
    intersections of at most one vertex, then kept if the incidence graph is a tree.
    """
    n = m * (k - 1) + 1
    subsets = list(itertools.combinations(range(n), k))
    out = []

    def grow(start: int, chosen: list[tuple[int, ...]]) -> None:
        if len(chosen) == m:
            if _incidence_is_tree(n, chosen):
                out.append(tuple(chosen))
            return
        for idx in range(start, len(subsets)):
            s = subsets[idx]
            if all(len(set(s) & set(c)) <= 1 for c in chosen):
                chosen.append(s)
                grow(idx + 1, chosen)
                chosen.pop()

    grow(0, [])
    return out


@lru_cache(maxsize=None)
def _perms(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int64)


def brute_canonical(n: int, edges) -> tuple:
    """Lexicographically least sorted edge-bitmask list over all n! relabelings."""
    P = _perms(n)
    weights = np.left_shift(np.int64(1), P)  # weights[p, v] = 2**perm_p(v)
    masks = np.stack([weights[:, list(e)].sum(axis=1) for e in edges], axis=1)
    masks.sort(axis=1)
    order = np.lexsort(masks.T[::-1])
    return tuple(int(v) for v in masks[order[0]])


def brute_isomorphic(n1: int, edges1, n2: int, edges2) -> bool:
    if n1 != n2 or len(edges1) != len(edges2):
        return False
    return brute_canonical(n1, edges1) == brute_canonical(n2, edges2)


def tree_class_count(k: int, m: int) -> int:
    """Isomorphism classes via networkx free trees on n + m nodes.

    A supertree is the same thing as a free tree admitting a 2-colouring whose
    m-node side consists of nodes of degree exactly k.
    """
    n = m * (k - 1) + 1
    count = 0
    for t in nx.nonisomorphic_trees(n + m):
        side_a, side_b = nx.bipartite.sets(t)
        for side in (side_a, side_b):
            if len(side) == m and all(t.degree(v) == k for v in side):
                count += 1
                break
    return count


def incidence_automorphisms(n: int, edges) -> int:
    """Automorphisms of the incidence tree that keep vertex and edge nodes apart."""
    g = nx.Graph()
    for v in range(n):
        g.add_node(v, kind="v")
    for i, e in enumerate(edges):
        g.add_node(("e", i), kind="e")
        for v in e:
            g.add_edge(v, ("e", i))
    matcher = nx.algorithms.isomorphism.GraphMatcher(g, g, node_match=lambda a, b: a["kind"] == b["kind"])
    return sum(1 for _ in matcher.isomorphisms_iter())


def superstar_rho(k: int, m: int) -> float:
    """Positive root of (k-1) r^2 - (k-2) r - m = 0 (centre/leaf orbit reduction)."""
    a, b, c = k - 1, -(k - 2), -m
    return (-b + math.sqrt(b * b - 4 * a * c)) / (2 * a)


def largest_real_root(coeffs) -> float:
    roots = np.roots(coeffs)
    return float(max(r.real for r in roots if abs(r.imag) < 1e-9))


# P(5,3): two edges; reduce by the reflection symmetry -> 2 rho^2 - rho - 2 = 0
HYPERPATH_5_3 = (1 + math.sqrt(17)) / 4
# P(7,3): three edges; reflection-symmetric reduction gives 4r^3 - 4r^2 - 3r + 1 = 0
HYPERPATH_7_3 = largest_real_root([4, -4, -3, 1])
