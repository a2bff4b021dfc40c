"""Canonical codes for supertrees and exhaustive enumeration up to isomorphism.

A supertree's incidence tree (vertex nodes and edge nodes) is rooted at its
center and encoded bottom-up, AHU style.  Byte layout of a node's code::

    tag (1 byte: 0x01 vertex node, 0x02 edge node)
    length of payload (4 bytes, big-endian)
    payload = concatenation of the children's codes in ascending byte order

For a bicentral tree both centers are tried and the smaller code wins.  The
code of the whole supertree is the code of its root.  Two supertrees are
isomorphic exactly when their codes are equal.
"""

from __future__ import annotations

import csv
import io
import random
from dataclasses import dataclass
from pathlib import Path
from typing import NewType, Sequence

import numpy as np

from .errors import BudgetExceeded, NotASupertree
from .hypergraph import Hypergraph, degree_profile, incidence_tree, is_supertree, save_hgt
from .spectral import DEFAULT_MAX_ITER, DEFAULT_TOL, SpectralResult, spectral_radius

CanonicalCode = NewType("CanonicalCode", bytes)

VERTEX_TAG = b"\x01"
EDGE_TAG = b"\x02"
DEFAULT_VERTEX_BUDGET = 5000


def _tree_centers(adj: Sequence[Sequence[int]]) -> list[int]:
    size = len(adj)
    if size <= 2:
        return list(range(size))
    deg = [len(a) for a in adj]
    layer = [u for u in range(size) if deg[u] <= 1]
    remaining = size
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for u in layer:
            for w in adj[u]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted_codes(adj: Sequence[Sequence[int]], n_vertices: int, root: int) -> tuple[bytes, dict[int, bytes], dict[int, int]]:
    parent = {root: -1}
    order = [root]
    for u in order:
        for w in adj[u]:
            if w not in parent:
                parent[w] = u
                order.append(w)
    codes: dict[int, bytes] = {}
    for u in reversed(order):
        payload = b"".join(sorted(codes[w] for w in adj[u] if w != parent[u]))
        tag = VERTEX_TAG if u < n_vertices else EDGE_TAG
        codes[u] = tag + len(payload).to_bytes(4, "big") + payload
    return codes[root], codes, parent


def _canonical(H: Hypergraph) -> tuple[bytes, int, dict[int, bytes], dict[int, int]]:
    if not is_supertree(H):
        raise NotASupertree("canonical codes are defined only for supertrees")
    adj = incidence_tree(H).adjacency
    best = None
    for c in _tree_centers(adj):
        code, codes, parent = _rooted_codes(adj, H.n, c)
        if best is None or code < best[0]:
            best = (code, c, codes, parent)
    return best


def canonical_code(H: Hypergraph) -> CanonicalCode:
    return CanonicalCode(_canonical(H)[0])


def canonical_form(H: Hypergraph) -> tuple[CanonicalCode, Hypergraph]:
    """Code plus a relabeled copy that depends only on the isomorphism class.

    Vertices are numbered in depth-first order from the root, visiting
    children in ascending code order; edges are listed in the same order.
    """
    code, root, codes, parent = _canonical(H)
    adj = incidence_tree(H).adjacency
    vertex_label: dict[int, int] = {}
    edge_order: list[int] = []
    stack = [root]
    while stack:
        u = stack.pop()
        if u < H.n:
            vertex_label[u] = len(vertex_label)
        else:
            edge_order.append(u - H.n)
        kids = sorted((w for w in adj[u] if w != parent[u]), key=lambda w: codes[w], reverse=True)
        stack.extend(kids)
    edges = tuple(tuple(vertex_label[v] for v in H.edges[i]) for i in edge_order)
    return CanonicalCode(code), Hypergraph(H.n, edges)


def are_isomorphic(H1: Hypergraph, H2: Hypergraph) -> bool:
    return canonical_code(H1) == canonical_code(H2)


@dataclass(frozen=True, eq=False)
class CatalogEntry:
    code: CanonicalCode
    graph: Hypergraph
    spectrum: SpectralResult


@dataclass(frozen=True, eq=False)
class Catalog:
    k: int
    m: int
    entries: tuple[CatalogEntry, ...]

    def codes(self) -> list[CanonicalCode]:
        return [e.code for e in self.entries]

    def find(self, code: bytes) -> CatalogEntry | None:
        for e in self.entries:
            if e.code == code:
                return e
        return None


def _attach_everywhere(H: Hypergraph, k: int, rng: random.Random | None) -> list[Hypergraph]:
    anchors = list(range(H.n))
    if rng is not None:
        rng.shuffle(anchors)
    fresh = tuple(range(H.n, H.n + k - 1))
    return [Hypergraph(H.n + k - 1, H.edges + ((v, *fresh),)) for v in anchors]


def supertree_classes(k: int, m: int, rng: random.Random | None = None) -> dict[CanonicalCode, Hypergraph]:
    """Canonically labeled representative per isomorphism class, keyed by code.

    Grows level by level from the single edge: every representative with
    ``j`` edges is extended by a fresh pendant edge at each of its vertices,
    and the results are deduplicated by canonical code.
    """
    level = dict([canonical_form(Hypergraph(k, (tuple(range(k)),)))])
    for _ in range(m - 1):
        parents = list(level.values())
        if rng is not None:
            rng.shuffle(parents)
        nxt: dict[CanonicalCode, Hypergraph] = {}
        for H in parents:
            for child in _attach_everywhere(H, k, rng):
                code = canonical_code(child)
                if code not in nxt:
                    nxt[code] = canonical_form(child)[1]
        level = nxt
    return level


def enumerate_supertrees(
    k: int,
    m: int,
    *,
    method: str = "power",
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    vertex_budget: int = DEFAULT_VERTEX_BUDGET,
    rng: random.Random | None = None,
) -> Catalog:
    """All k-uniform supertrees with m edges, one per class, with spectra.

    Entries are sorted by descending spectral radius, ties broken by code.
    """
    if k < 3 or m < 1:
        raise ValueError("enumeration needs k >= 3 and m >= 1")
    n = m * (k - 1) + 1
    if n > vertex_budget:
        raise BudgetExceeded(f"order {n} exceeds vertex budget {vertex_budget}")
    classes = supertree_classes(k, m, rng)
    entries = [
        CatalogEntry(code, H, spectral_radius(H, tol=tol, max_iter=max_iter, method=method))
        for code, H in classes.items()
    ]
    entries.sort(key=lambda e: (-e.spectrum.rho, e.code))
    return Catalog(k, m, tuple(entries))


def format_number(x: float) -> str:
    """Twelve significant digits, trailing zeros kept; scientific below 1e-4."""
    if x != 0 and abs(x) < 1e-4:
        return np.format_float_scientific(x, precision=11, unique=False, trim="k")
    return np.format_float_positional(x, precision=12, unique=False, fractional=False, trim="k")


def degree_multiset(H: Hypergraph) -> str:
    return " ".join(str(d) for d in sorted(degree_profile(H).degrees, reverse=True))


CSV_COLUMNS = ("code_hex", "n", "m", "k", "rho", "degree_multiset")


def catalog_csv(catalog: Catalog) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for e in catalog.entries:
        writer.writerow(
            [e.code.hex(), e.graph.n, e.graph.m, catalog.k, format_number(e.spectrum.rho), degree_multiset(e.graph)]
        )
    return buf.getvalue()


def export_catalog(catalog: Catalog, out_dir: str | Path, csv_path: str | Path | None = None) -> list[Path]:
    """One HGT file per class (``class_000.hgt`` ...) and optionally the CSV."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for i, e in enumerate(catalog.entries):
        path = out / f"class_{i:03d}.hgt"
        note = f"k={catalog.k} m={catalog.m} rho={format_number(e.spectrum.rho)}\ncode={e.code.hex()}"
        save_hgt(e.graph, path, comment=note)
        written.append(path)
    if csv_path is not None:
        Path(csv_path).write_text(catalog_csv(catalog), encoding="utf-8")
    return written
