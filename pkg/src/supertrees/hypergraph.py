"""Hypergraph values, structural predicates and the HGT v1 text format.

Vertices are dense indices ``0..n-1``.  Every edge is stored as a strictly
ascending tuple of at least two vertices; the edge list keeps its input order.

HGT v1 layout::

    n m
    v v v      # one line per edge, ascending, 0-based
    ...

Lines starting with ``#`` are comments.  ``write_hgt(read_hgt(s)) == s`` for
any comment-free input whose edges are already ascending.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdge,
    EdgeNotFound,
    EdgeTooSmall,
    HGTFormatError,
    NotASupertree,
    NotATree,
    VertexOutOfRange,
)

Edge = tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 0:
            raise VertexOutOfRange(f"negative vertex count {self.n}")
        normalized = []
        seen = set()
        for raw in self.edges:
            verts = sorted(int(v) for v in raw)
            if len(verts) < 2:
                raise EdgeTooSmall(f"edge {list(raw)} has fewer than 2 vertices")
            for v in verts:
                if not 0 <= v < self.n:
                    raise VertexOutOfRange(f"vertex {v} not in 0..{self.n - 1}")
            edge = tuple(verts)
            if len(set(edge)) != len(edge):
                raise DuplicateEdge(f"edge {list(raw)} repeats a vertex")
            if edge in seen:
                raise DuplicateEdge(f"edge {list(edge)} appears twice")
            seen.add(edge)
            normalized.append(edge)
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    def uniformity(self) -> int | None:
        """Common edge size, or None for an empty or non-uniform edge set."""
        sizes = {len(e) for e in self.edges}
        return sizes.pop() if len(sizes) == 1 else None

    def incident_edges(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            for v in e:
                out[v].append(i)
        return out

    def relabel(self, perm: Sequence[int]) -> "Hypergraph":
        """Image under the vertex map ``v -> perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise VertexOutOfRange("relabeling is not a permutation of the vertex set")
        return Hypergraph(self.n, tuple(tuple(perm[v] for v in e) for e in self.edges))

    def add_edge(self, edge: Iterable[int]) -> "Hypergraph":
        """``H + e``; vertices beyond ``n - 1`` extend the vertex set."""
        edge = tuple(edge)
        n = max(self.n, max(edge) + 1)
        return Hypergraph(n, self.edges + (edge,))

    def remove_edges(self, drop: Iterable[Sequence[int]]) -> "Hypergraph":
        targets = {tuple(sorted(e)) for e in drop}
        missing = targets - set(self.edges)
        if missing:
            raise EdgeNotFound(f"edges not present: {sorted(missing)}")
        return Hypergraph(self.n, tuple(e for e in self.edges if e not in targets))


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    delta: int
    Delta: int
    regular: bool


@dataclass(frozen=True)
class IncidenceTree:
    """Bipartite tree of a supertree.

    Node ``v < n`` is vertex ``v``; node ``n + i`` is edge ``i``.
    """

    n: int
    m: int
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def node_count(self) -> int:
        return self.n + self.m

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def is_vertex_node(self, node: int) -> bool:
        return node < self.n


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Hypergraph:
    return Hypergraph(n, tuple(tuple(e) for e in edges))


def degree_profile(H: Hypergraph) -> DegreeProfile:
    degrees = [0] * H.n
    for e in H.edges:
        for v in e:
            degrees[v] += 1
    lo = min(degrees, default=0)
    hi = max(degrees, default=0)
    return DegreeProfile(tuple(degrees), lo, hi, lo == hi)


def components(H: Hypergraph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, ordered by least vertex."""
    parent = list(range(H.n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in H.edges:
        root = find(e[0])
        for v in e[1:]:
            r = find(v)
            if r != root:
                parent[r] = root
    groups: dict[int, list[int]] = {}
    for v in range(H.n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values(), key=lambda g: g[0])


def is_connected(H: Hypergraph) -> bool:
    return H.n >= 1 and len(components(H)) == 1


def induced_component(H: Hypergraph, vertices: Sequence[int]) -> tuple[Hypergraph, list[int]]:
    """Sub-hypergraph on a union of components, relabeled to ``0..len-1``.

    Returns the hypergraph and the list mapping new labels back to old ones.
    """
    index = {v: i for i, v in enumerate(vertices)}
    edges = [tuple(index[v] for v in e) for e in H.edges if e[0] in index]
    return Hypergraph(len(vertices), tuple(edges)), list(vertices)


def is_supertree(H: Hypergraph) -> bool:
    if H.m == 0 or not is_connected(H):
        return False
    if H.n - 1 != sum(len(e) - 1 for e in H.edges):
        return False
    seen_pairs: set[tuple[int, int]] = set()
    for e in H.edges:
        for pair in combinations(e, 2):
            if pair in seen_pairs:
                return False
            seen_pairs.add(pair)
    return True


def incidence_tree(H: Hypergraph) -> IncidenceTree:
    if not is_supertree(H):
        raise NotASupertree("incidence tree is defined only for supertrees")
    adj: list[list[int]] = [[] for _ in range(H.n + H.m)]
    for i, e in enumerate(H.edges):
        node = H.n + i
        for v in e:
            adj[v].append(node)
            adj[node].append(v)
    return IncidenceTree(H.n, H.m, tuple(tuple(a) for a in adj))


def _check_tree(tree_edges: Sequence[Sequence[int]]) -> int:
    pairs = [tuple(p) for p in tree_edges]
    if any(len(p) != 2 or p[0] == p[1] or min(p) < 0 for p in pairs):
        raise NotATree("tree edges must be pairs of distinct non-negative vertices")
    order = 1 + max((max(p) for p in pairs), default=0)
    if len(pairs) != order - 1:
        raise NotATree(f"{len(pairs)} edges cannot span a tree on {order} vertices")
    adj: list[list[int]] = [[] for _ in range(order)]
    for a, b in pairs:
        adj[a].append(b)
        adj[b].append(a)
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    if len(seen) != order:
        raise NotATree("tree edges do not form a connected graph")
    return order


def power_k(tree_edges: Sequence[Sequence[int]], k: int) -> Hypergraph:
    """k-th power of an ordinary tree.

    Tree vertices keep their labels; the ``k - 2`` fresh vertices of tree edge
    ``i`` are ``order + i*(k-2) .. order + (i+1)*(k-2) - 1``.
    """
    if k < 3:
        raise ValueError("power_k needs k >= 3")
    order = _check_tree(tree_edges)
    edges = []
    for i, (a, b) in enumerate(tree_edges):
        fresh = range(order + i * (k - 2), order + (i + 1) * (k - 2))
        edges.append((a, b, *fresh))
    return Hypergraph(order + len(edges) * (k - 2), tuple(edges))


def write_hgt(H: Hypergraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {line}" for line in comment.splitlines())
    lines.append(f"{H.n} {H.m}")
    lines.extend(" ".join(map(str, e)) for e in H.edges)
    return "\n".join(lines) + "\n"


def read_hgt(text: str) -> Hypergraph:
    rows = [ln.strip() for ln in text.splitlines()]
    rows = [ln for ln in rows if ln and not ln.startswith("#")]
    if not rows:
        raise HGTFormatError("empty HGT document")
    try:
        header = [int(tok) for tok in rows[0].split()]
        body = [[int(tok) for tok in ln.split()] for ln in rows[1:]]
    except ValueError as exc:
        raise HGTFormatError(f"non-integer token: {exc}") from None
    if len(header) != 2:
        raise HGTFormatError("header must be 'n m'")
    n, m = header
    if len(body) != m:
        raise HGTFormatError(f"header declares {m} edges, found {len(body)}")
    return from_edge_list(n, body)


def load_hgt(path: str | Path) -> Hypergraph:
    return read_hgt(Path(path).read_text(encoding="utf-8"))


def save_hgt(H: Hypergraph, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(write_hgt(H, comment), encoding="utf-8")


def power_root(H: Hypergraph) -> list[tuple[int, int]] | None:
    """Ordinary tree whose k-th power is ``H``, or None if there is none.

    A uniform supertree is a k-th power exactly when every edge has at most
    two vertices of degree >= 2.  The returned tree uses its own dense labels.
    """
    k = H.uniformity()
    if k is None or k < 3 or not is_supertree(H):
        return None
    deg = degree_profile(H).degrees
    pairs = []
    for e in H.edges:
        core = [v for v in e if deg[v] >= 2]
        if len(core) > 2:
            return None
        leaves = [v for v in e if deg[v] == 1]
        pairs.append(tuple((core + leaves)[:2]))
    used = sorted({v for p in pairs for v in p})
    index = {v: i for i, v in enumerate(used)}
    return [(index[a], index[b]) for a, b in pairs]
