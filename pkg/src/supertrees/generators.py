"""Named supertree families and the surgery operators on them.

Labeling conventions (stable, relied on by tests and golden files):

* ``hyperpath(k, m)``: edge ``i`` spans vertices ``i(k-1) .. i(k-1)+k-1``.
* ``superstar(k, m)``: vertex 0 is the center; edge ``i`` is
  ``{0} | {1+i(k-1), .., (i+1)(k-1)}``.
* ``double_hyperstar(k, l1, l2)``: edge 0 is ``{0..k-1}`` with ``u1 = 0`` and
  ``u2 = 1``; then ``l1`` pendant edges at 0, then ``l2`` pendant edges at 1.
* ``graft``: ``D`` keeps its labels, then the pendant path, then the
  connecting path, then ``H`` shifted past them.
* ``branch_split``: ``D``, then the main path, then each branch in order.

Fresh vertices are always numbered consecutively in construction order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    BadShiftShape,
    BranchTooLong,
    EdgeNotFound,
    InvalidAttachment,
    ResultingDuplicateEdge,
    TooManyBranches,
    VertexOutOfRange,
)
from .hypergraph import Hypergraph


def single_vertex() -> Hypergraph:
    return Hypergraph(1, ())


def hyperpath(k: int, m: int) -> Hypergraph:
    if k < 2 or m < 1:
        raise ValueError("hyperpath needs k >= 2 and m >= 1")
    edges = tuple(tuple(range(i * (k - 1), i * (k - 1) + k)) for i in range(m))
    return Hypergraph(m * (k - 1) + 1, edges)


def superstar(k: int, m: int) -> Hypergraph:
    if k < 2 or m < 1:
        raise ValueError("superstar needs k >= 2 and m >= 1")
    edges = tuple((0, *range(1 + i * (k - 1), 1 + (i + 1) * (k - 1))) for i in range(m))
    return Hypergraph(m * (k - 1) + 1, edges)


def double_hyperstar(k: int, l1: int, l2: int) -> Hypergraph:
    if k < 3 or l1 < 1 or l2 < 1:
        raise ValueError("double_hyperstar needs k >= 3 and l1, l2 >= 1")
    edges = [tuple(range(k))]
    nxt = k
    for hub, count in ((0, l1), (1, l2)):
        for _ in range(count):
            edges.append((hub, *range(nxt, nxt + k - 1)))
            nxt += k - 1
    return Hypergraph(nxt, tuple(edges))


class _Builder:
    """Accumulates edges while handing out fresh vertex labels."""

    def __init__(self, base: Hypergraph):
        self.n = base.n
        self.edges = list(base.edges)

    def fresh(self, count: int) -> list[int]:
        out = list(range(self.n, self.n + count))
        self.n += count
        return out

    def path(self, start: int, length: int, k: int) -> list[int]:
        """Append a k-uniform path of ``length`` edges from ``start``.

        Returns the path's joint vertices ``[start, v1, .., v_length]``.
        """
        joints = [start]
        for _ in range(length):
            interior = self.fresh(k - 2)
            nxt = self.fresh(1)[0]
            self.edges.append((joints[-1], *interior, nxt))
            joints.append(nxt)
        return joints

    def interior_of(self, edge_index: int) -> tuple[int, ...]:
        return self.edges[edge_index][1:-1]

    def build(self) -> Hypergraph:
        return Hypergraph(self.n, tuple(self.edges))


@dataclass(frozen=True)
class GraftSpec:
    D: Hypergraph
    v: int
    p: int
    q: int
    k: int
    H: Hypergraph = Hypergraph(1, ())
    w: int = 0

    def __post_init__(self):
        if not 0 <= self.v < self.D.n:
            raise InvalidAttachment(f"v={self.v} is not a vertex of D")
        if not 0 <= self.w < self.H.n:
            raise InvalidAttachment(f"w={self.w} is not a vertex of H")
        if self.p < 0 or self.q < 0 or self.p + self.q < 1:
            raise InvalidAttachment("need p, q >= 0 and p + q >= 1")
        if self.k < 2:
            raise InvalidAttachment("k must be at least 2")


def graft(spec: GraftSpec) -> Hypergraph:
    """Pendant path of length p at v, plus a path of length q from v to w in H.

    ``w`` is identified with the far end of the connecting path; with
    ``q = 0`` it is glued onto ``v`` itself.
    """
    b = _Builder(spec.D)
    b.path(spec.v, spec.p, spec.k)
    far_end = b.path(spec.v, spec.q, spec.k)[-1]
    mapping = {}
    for u in range(spec.H.n):
        mapping[u] = far_end if u == spec.w else b.fresh(1)[0]
    b.edges.extend(tuple(mapping[u] for u in e) for e in spec.H.edges)
    return b.build()


def branch_split(
    D: Hypergraph, v0: int, k: int, L0: int, branches: Sequence[int]
) -> Hypergraph:
    """Main path of length L0 at v0 with branch paths on its first edge.

    Branch ``i`` (length ``branches[i]``) hangs from the ``i``-th interior
    vertex of the first main-path edge.
    """
    f = len(branches)
    if not 0 <= v0 < D.n:
        raise InvalidAttachment(f"v0={v0} is not a vertex of D")
    if f < 1:
        raise ValueError("at least one branch is required")
    if f > k - 2:
        raise TooManyBranches(f"{f} branches but the first edge has only {k - 2} interior vertices")
    if list(branches) != sorted(branches) or branches[0] < 1:
        raise ValueError("branch lengths must be positive and non-decreasing")
    if branches[-1] > L0 - 1:
        raise BranchTooLong(f"branch length {branches[-1]} exceeds L0 - 1 = {L0 - 1}")
    b = _Builder(D)
    first_edge = len(b.edges)
    b.path(v0, L0, k)
    for anchor, length in zip(b.interior_of(first_edge), branches):
        b.path(anchor, length, k)
    return b.build()


def edge_shift(
    H: Hypergraph, shifted: Sequence[tuple[Sequence[int], Sequence[int], Sequence[int]]]
) -> Hypergraph:
    """Replace each listed edge ``e`` by ``(e - removed) | target``.

    ``removed`` and ``target`` are ordered: ``removed[j]`` is the vertex whose
    slot ``target[j]`` takes.  Edge positions in ``H.edges`` are preserved.
    """
    index = {e: i for i, e in enumerate(H.edges)}
    new_edges = list(H.edges)
    touched = set()
    for edge, removed, target in shifted:
        key = tuple(sorted(edge))
        if key not in index:
            raise EdgeNotFound(f"edge {list(edge)} not in hypergraph")
        i = index[key]
        if i in touched:
            raise BadShiftShape(f"edge {list(key)} listed twice")
        touched.add(i)
        removed, target = list(removed), list(target)
        if len(removed) != len(target) or not removed:
            raise BadShiftShape("removed and target must be non-empty and of equal size")
        if len(set(removed)) != len(removed) or len(set(target)) != len(target):
            raise BadShiftShape("removed and target must not repeat vertices")
        if not set(removed) <= set(key):
            raise BadShiftShape(f"removed {removed} not contained in edge {list(key)}")
        if len(removed) >= len(key):
            raise BadShiftShape("must keep at least one vertex of the edge")
        for v in target:
            if not 0 <= v < H.n:
                raise VertexOutOfRange(f"target vertex {v} not in hypergraph")
        kept = set(key) - set(removed)
        new = tuple(sorted(kept | set(target)))
        if new in index or new in new_edges[:i] + new_edges[i + 1:]:
            raise ResultingDuplicateEdge(f"shifted edge {list(new)} already present")
        if kept & set(target) or set(target) <= set(key):
            raise BadShiftShape("targets must lie outside the kept part and not all inside the edge")
        new_edges[i] = new
    if len(set(new_edges)) != len(new_edges):
        raise ResultingDuplicateEdge("two shifted edges coincide")
    return Hypergraph(H.n, tuple(new_edges))


def random_supertree(k: int, m: int, rng: random.Random) -> Hypergraph:
    """Supertree grown by attaching each new edge at a uniformly random vertex."""
    b = _Builder(Hypergraph(k, (tuple(range(k)),)))
    for _ in range(m - 1):
        anchor = rng.randrange(b.n)
        b.edges.append((anchor, *b.fresh(k - 1)))
    return b.build()
