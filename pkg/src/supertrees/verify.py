"""Desk-scale numerical verification of the extremal results and surgery lemmas.

Every check returns a :class:`VerificationReport`.  A report passes when it
has no failures; checks whose eigenvector hypotheses do not hold on the given
instance are reported with ``applicable = False`` and assert nothing.

JSON schema (stable field names)::

    {"check": str, "params": {...}, "pass": bool, "applicable": bool,
     "witnesses": [{"description": str, "graph": str, "values": {...}}],
     "failures":  [same shape], "notes": [str], "versions": {...}}

``graph`` holds the HGT v1 text of the hypergraph concerned, or "".
"""

from __future__ import annotations

import json
import platform
from dataclasses import asdict, dataclass, field
from typing import Any, Sequence

import numpy as np

from . import __version__
from .enumeration import Catalog, canonical_code, enumerate_supertrees
from .errors import (
    ConfigurationNotFound,
    Disconnected,
    DuplicateEdge,
    PreconditionError,
)
from .generators import GraftSpec, branch_split, double_hyperstar, edge_shift, graft, hyperpath, superstar
from .hypergraph import (
    Hypergraph,
    degree_profile,
    is_connected,
    power_k,
    power_root,
    write_hgt,
)
from .spectral import (
    DEFAULT_MAX_ITER,
    DEFAULT_TOL,
    EdgeOperator,
    SpectralResult,
    edge_quadratic,
    spectral_radius,
    spectral_radius_any,
)

SEP_TOL = 1e-9
STRICT_MARGIN = 1e-10
HYPOTHESIS_SLACK = 1e-12
IDENTITY_TOL = 1e-9


@dataclass
class Witness:
    description: str
    graph: str = ""
    values: dict[str, Any] = field(default_factory=dict)


@dataclass
class VerificationReport:
    check: str
    params: dict[str, Any]
    witnesses: list[Witness] = field(default_factory=list)
    failures: list[Witness] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    applicable: bool = True
    versions: dict[str, str] = field(default_factory=lambda: dict(VERSIONS))

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, description: str, graph: Hypergraph | None = None, **values: Any) -> bool:
        w = Witness(description, write_hgt(graph) if graph is not None else "", _plain(values))
        (self.witnesses if ok else self.failures).append(w)
        return ok

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "params": self.params,
            "pass": self.passed,
            "applicable": self.applicable,
            "witnesses": [asdict(w) for w in self.witnesses],
            "failures": [asdict(w) for w in self.failures],
            "notes": list(self.notes),
            "versions": dict(self.versions),
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "VerificationReport":
        report = cls(
            check=data["check"],
            params=data["params"],
            witnesses=[Witness(**w) for w in data["witnesses"]],
            failures=[Witness(**w) for w in data["failures"]],
            notes=list(data["notes"]),
            applicable=data["applicable"],
            versions=dict(data["versions"]),
        )
        if report.passed != data["pass"]:
            raise ValueError("inconsistent report: 'pass' disagrees with failures")
        return report

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))


VERSIONS = {"supertrees": __version__, "numpy": np.__version__, "python": platform.python_version()}


def _plain(values: dict[str, Any]) -> dict[str, Any]:
    out = {}
    for key, val in values.items():
        if isinstance(val, (bytes, bytearray)):
            val = val.hex()
        elif isinstance(val, np.generic):
            val = val.item()
        elif isinstance(val, (list, tuple)):
            val = [v.item() if isinstance(v, np.generic) else v for v in val]
        out[key] = val
    return out


class _Spectra:
    """Spectral radii for one check, with a dense recheck of close calls."""

    def __init__(self, method: str, tol: float, max_iter: int, sep_tol: float):
        self.method = method
        self.tol = tol
        self.max_iter = max_iter
        self.sep_tol = sep_tol
        self.dense_rechecks = 0

    def result(self, H: Hypergraph) -> SpectralResult:
        if not is_connected(H):
            raise Disconnected("hypergraph must be connected")
        return spectral_radius(H, tol=self.tol, max_iter=self.max_iter, method=self.method)

    def rho(self, H: Hypergraph, dense: bool = False) -> float:
        method = "dense" if dense else self.method
        if is_connected(H):
            return spectral_radius(H, tol=self.tol, max_iter=self.max_iter, method=method).rho
        return spectral_radius_any(H, method=method, tol=self.tol)

    def pair(self, H1: Hypergraph, H2: Hypergraph, r1: float | None = None, r2: float | None = None):
        """Radii of two hypergraphs; both recomputed densely if they are close."""
        r1 = self.rho(H1) if r1 is None else r1
        r2 = self.rho(H2) if r2 is None else r2
        if abs(r1 - r2) < 10 * self.sep_tol and self.method != "dense":
            self.dense_rechecks += 1
            r1, r2 = self.rho(H1, dense=True), self.rho(H2, dense=True)
        return r1, r2


# -- extremal results --------------------------------------------------------


def _is_hypertree(H: Hypergraph, k: int) -> bool:
    tree = power_root(H)
    return tree is not None and canonical_code(power_k(tree, k)) == canonical_code(H)


def verify_extremal(
    k: int,
    m: int,
    sep_tol: float = SEP_TOL,
    *,
    catalog: Catalog | None = None,
    method: str = "power",
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> VerificationReport:
    """Maximum, second maximum and minimum spectral radius over all classes."""
    if m < 1:
        raise PreconditionError("m must be at least 1")
    if catalog is None:
        catalog = enumerate_supertrees(k, m, method=method, tol=tol, max_iter=max_iter)
    report = VerificationReport("extremal", {"k": k, "m": m, "sep_tol": sep_tol, "method": method, "tol": tol})
    spectra = _Spectra(method, tol, max_iter, sep_tol)
    entries = list(catalog.entries)
    report.notes.append(f"{len(entries)} isomorphism classes")

    def unique_extreme(label: str, target: Hypergraph, pool, pick_max: bool) -> None:
        code = canonical_code(target)
        best = max(pool, key=lambda e: e.spectrum.rho) if pick_max else min(pool, key=lambda e: e.spectrum.rho)
        if not report.record(
            best.code == code,
            f"{label}: extreme class is the expected shape",
            best.graph,
            rho=best.spectrum.rho,
            expected_code=code,
            found_code=best.code,
        ):
            return
        for other in pool:
            if other is best:
                continue
            r_best, r_other = spectra.pair(best.graph, other.graph, best.spectrum.rho, other.spectrum.rho)
            gap = (r_best - r_other) if pick_max else (r_other - r_best)
            if gap <= sep_tol:
                report.record(False, f"{label}: non-isomorphic class within sep_tol", other.graph, gap=gap, rho=r_other)
        report.record(True, f"{label}: separated from all {len(pool) - 1} other classes by > sep_tol", rho=best.spectrum.rho)

    unique_extreme("maximum (superstar)", superstar(k, m), entries, True)
    unique_extreme("minimum (hyperpath)", hyperpath(k, m), entries, False)

    if m >= 3:
        star_code = canonical_code(superstar(k, m))
        rest = [e for e in entries if e.code != star_code]
        target = double_hyperstar(k, m - 2, 1)
        if m == 3:
            report.notes.append("m = 3: the double hyperstar S(n,k;1,1) is the hyperpath, so second maximum and minimum coincide")
        unique_extreme("second maximum (double hyperstar m-2,1)", target, rest, True)
    else:
        report.notes.append("second-maximum clause needs m >= 3; not applicable")

    powers = [e for e in entries if _is_hypertree(e.graph, k)]
    report.notes.append(f"{len(powers)} classes are k-th powers of ordinary trees")
    unique_extreme("powers of trees: maximum", superstar(k, m), powers, True)
    unique_extreme("powers of trees: minimum", hyperpath(k, m), powers, False)
    if spectra.dense_rechecks:
        report.notes.append(f"{spectra.dense_rechecks} close comparisons rechecked densely")
    return report


# -- principal eigenvector identities ---------------------------------------


def _pendant_paths(H: Hypergraph, deg: Sequence[int]) -> list[list[int]]:
    """Joint vertices ``[v0, v1, .., vt]`` of every maximal pendant path.

    Walks inward from each pendant edge while the joints have degree 2 and the
    edges carry exactly two vertices of degree >= 2.
    """
    incident = H.incident_edges()
    core = [[v for v in e if deg[v] >= 2] for e in H.edges]
    paths = []
    for i, e in enumerate(H.edges):
        if len(core[i]) != 1:
            continue
        tip = min(v for v in e if deg[v] == 1)
        joints = [tip, core[i][0]]
        prev_edge = i
        while True:
            joint = joints[-1]
            if deg[joint] != 2:
                break
            (nxt_edge,) = [j for j in incident[joint] if j != prev_edge]
            others = [v for v in core[nxt_edge] if v != joint]
            if len(others) == 1:
                joints.append(others[0])
                prev_edge = nxt_edge
            elif not others:
                # the whole hypergraph is a path; end at a pendant vertex
                joints.append(min(v for v in H.edges[nxt_edge] if deg[v] == 1))
                break
            else:
                break
        paths.append(joints[::-1])
    return paths


def verify_pendant_identities(
    H: Hypergraph,
    tol: float = IDENTITY_TOL,
    *,
    margin: float = STRICT_MARGIN,
    method: str = "power",
    spectrum: SpectralResult | None = None,
) -> VerificationReport:
    """Closed forms for interior and pendant edge entries, and path unimodality."""
    if not is_connected(H):
        raise Disconnected("pendant identities need a connected hypergraph")
    if tol <= 0:
        raise ValueError("tol must be positive")
    report = VerificationReport("pendant", {"tol": tol, "margin": margin, "method": method})
    res = spectrum if spectrum is not None else spectral_radius(H, method=method)
    x, rho = res.eigvec, res.rho
    deg = degree_profile(H).degrees
    incident = H.incident_edges()
    counts = {"interior": 0, "pendant_edge": 0, "pendant_path": 0}

    for i, e in enumerate(H.edges):
        size = len(e)
        core = [v for v in e if deg[v] >= 2]
        middle = [v for v in e if deg[v] == 1]
        if size >= 3 and len(core) == 2:
            a, b = core
            counts["interior"] += 1
            expected = (x[a] + x[b]) / ((size - 1) * rho - (size - 3))
            err = max(abs(x[v] - expected) for v in middle)
            gap = min(x[a], x[b]) - max(x[v] for v in middle)
            report.record(err <= tol and gap > margin, "interior edge entries", None,
                          edge=list(e), expected=expected, max_error=err, dominance_gap=gap)
        elif len(core) == 1:
            counts["pendant_edge"] += 1
            u = core[0]
            expected = x[u] / ((size - 1) * rho - (size - 2))
            err = max(abs(x[v] - expected) for v in middle)
            gap = x[u] - max(x[v] for v in middle)
            report.record(err <= tol and gap > margin, "pendant edge entries", None,
                          edge=list(e), expected=expected, max_error=err, dominance_gap=gap)

    if H.uniformity() is not None:
        for joints in _pendant_paths(H, deg):
            counts["pendant_path"] += 1
            vals = [float(x[v]) for v in joints]
            t = len(vals) - 1
            peak = int(np.argmax(vals))
            rising = all(vals[j] <= vals[j + 1] + tol for j in range(peak))
            falling = all(vals[j] >= vals[j + 1] - tol for j in range(peak, t))
            report.record(
                rising and falling and peak <= t - 1 and vals[t] < max(vals) - margin,
                "pendant path entries unimodal with peak before the tip",
                None,
                joints=joints,
                entries=vals,
                peak_index=peak,
                length=t,
            )
    else:
        report.notes.append("pendant-path monotonicity applies to uniform hypergraphs only; skipped")
    report.params["patterns"] = counts
    report.witnesses.insert(0, Witness("spectrum", write_hgt(H), {"rho": rho, "residual": res.residual}))
    return report


# -- surgery lemmas ---------------------------------------------------------


def verify_edge_addition(
    H: Hypergraph,
    e: Sequence[int],
    *,
    margin: float = STRICT_MARGIN,
    method: str = "power",
    tol: float = DEFAULT_TOL,
) -> VerificationReport:
    """Adding an edge to a connected hypergraph strictly raises rho."""
    if not is_connected(H):
        raise Disconnected("H must be connected")
    edge = tuple(sorted(e))
    if edge in H.edges:
        raise DuplicateEdge(f"edge {list(edge)} already present")
    G = H.add_edge(edge)
    if not is_connected(G):
        raise Disconnected("H + e is not connected")
    report = VerificationReport("edge-addition", {"edge": list(edge), "margin": margin, "method": method})
    spectra = _Spectra(method, tol, DEFAULT_MAX_ITER, SEP_TOL)
    r0, r1 = spectra.pair(H, G)
    report.record(r1 > r0 + margin, "rho(H + e) > rho(H)", G, rho_before=r0, rho_after=r1, gap=r1 - r0)
    return report


def verify_edge_shift(
    H: Hypergraph,
    shifted: Sequence[tuple[Sequence[int], Sequence[int], Sequence[int]]],
    *,
    margin: float = STRICT_MARGIN,
    method: str = "power",
    tol: float = DEFAULT_TOL,
) -> VerificationReport:
    """Moving edges onto vertices of no smaller eigenvector weight raises rho.

    All shifted edges must move onto the same target vertices, and
    ``x[target[j]] >= x[removed[j]]`` must hold in the principal eigenvector
    of ``H`` for every edge; otherwise the report is marked not applicable.
    """
    if not is_connected(H):
        raise Disconnected("H must be connected")
    G = edge_shift(H, shifted)
    items = [(tuple(sorted(e)), list(r), list(t)) for e, r, t in shifted]
    report = VerificationReport(
        "edge-shift",
        {"shifted": [[list(e), r, t] for e, r, t in items], "margin": margin, "method": method},
    )
    res = spectral_radius(H, tol=tol, method=method)
    x = res.eigvec
    targets = {tuple(sorted(t)) for _, _, t in items}
    weight_ok = all(x[tv] >= x[rv] - HYPOTHESIS_SLACK for _, r, t in items for rv, tv in zip(r, t))
    if len(targets) != 1 or not weight_ok:
        report.applicable = False
        reason = "shifted edges use different targets" if len(targets) != 1 else "target entries smaller than removed entries"
        report.notes.append(f"hypothesis-not-met: {reason}")
        return report
    # quadratic-form identity behind the lemma, evaluated with H's eigenvector
    form = sum(
        2.0 / (len(e) - 1) * (edge_quadratic(x, tuple(sorted((set(e) - set(r)) | set(t)))) - edge_quadratic(x, e))
        for e, r, t in items
    )
    direct = float(x @ (EdgeOperator(G) @ x) - x @ (EdgeOperator(H) @ x))
    report.record(abs(form - direct) <= 1e-12 and form >= -HYPOTHESIS_SLACK,
                  "X^T (A' - A) X equals the per-edge sum and is non-negative", None,
                  per_edge_sum=form, direct=direct)
    spectra = _Spectra(method, tol, DEFAULT_MAX_ITER, SEP_TOL)
    r0, r1 = spectra.pair(H, G, res.rho)
    report.record(r1 > r0 + margin, "rho(H') > rho(H)", G, rho_before=r0, rho_after=r1, gap=r1 - r0)
    return report


def _check_uniform_base(D: Hypergraph, k: int) -> None:
    # with an edgeless D both sides of the comparison are the same hyperpath
    if D.m == 0:
        raise PreconditionError("D needs at least one edge")
    if D.uniformity() != k:
        raise PreconditionError(f"D must be {k}-uniform")
    if not is_connected(D):
        raise Disconnected("D must be connected")


def verify_grafting(
    D: Hypergraph,
    v: int,
    p: int,
    q: int,
    k: int,
    *,
    margin: float = STRICT_MARGIN,
    method: str = "power",
    tol: float = DEFAULT_TOL,
) -> VerificationReport:
    """Splitting a pendant path of length p+q at v into lengths p and q raises rho."""
    if p <= 0 or q <= 0:
        raise PreconditionError("grafting comparison needs p > 0 and q > 0")
    _check_uniform_base(D, k)
    split = graft(GraftSpec(D, v, p, q, k))
    joined = graft(GraftSpec(D, v, 0, p + q, k))
    report = VerificationReport("graft", {"v": v, "p": p, "q": q, "k": k, "margin": margin, "method": method})
    spectra = _Spectra(method, tol, DEFAULT_MAX_ITER, SEP_TOL)
    r_split, r_joined = spectra.pair(split, joined)
    report.record(r_split > r_joined + margin, "rho(G(Dv;p,q)) > rho(G(Dv;0,p+q))", split,
                  rho_split=r_split, rho_joined=r_joined, gap=r_split - r_joined)
    report.witnesses.append(Witness("joined path", write_hgt(joined), {"rho": r_joined}))
    return report


def verify_branch_split(
    D: Hypergraph,
    v0: int,
    k: int,
    L0: int,
    branches: Sequence[int],
    *,
    margin: float = STRICT_MARGIN,
    method: str = "power",
    tol: float = DEFAULT_TOL,
) -> VerificationReport:
    """A pendant path is beaten by the same edges split into branches on its first edge."""
    _check_uniform_base(D, k)
    branched = branch_split(D, v0, k, L0, branches)
    t = L0 + sum(branches)
    single = graft(GraftSpec(D, v0, 0, t, k))
    report = VerificationReport(
        "branch-split", {"v0": v0, "k": k, "L0": L0, "branches": list(branches), "margin": margin, "method": method}
    )
    spectra = _Spectra(method, tol, DEFAULT_MAX_ITER, SEP_TOL)
    r1, r2 = spectra.pair(single, branched)
    report.record(r1 < r2 - margin, "rho(single path) < rho(branched)", branched,
                  rho_single=r1, rho_branched=r2, gap=r2 - r1)
    report.witnesses.append(Witness("single pendant path", write_hgt(single), {"rho": r1}))
    return report


@dataclass(frozen=True)
class MergeConfiguration:
    e1: tuple[int, ...]
    e2: tuple[int, ...]
    v1: int
    v2: int
    v3: int


def find_merge_configuration(
    H: Hypergraph, e1: Sequence[int] | None = None, e2: Sequence[int] | None = None
) -> MergeConfiguration:
    """Locate two edges meeting at a degree-2 vertex inside a run of degree-2 joints.

    ``e1`` and ``e2`` meet in ``v1``; ``v2`` joins ``e1`` to one further edge
    and ``v3`` joins ``e2`` to another; every other vertex of ``e1 | e2`` has
    degree 1 and all four edges have at least three vertices.
    """
    deg = degree_profile(H).degrees
    incident = H.incident_edges()
    index = {e: i for i, e in enumerate(H.edges)}

    def match(i: int, j: int) -> MergeConfiguration | None:
        a, b = H.edges[i], H.edges[j]
        common = set(a) & set(b)
        if len(common) != 1 or len(a) < 3 or len(b) < 3:
            return None
        (v1,) = common
        ends = []
        for edge, idx in ((a, i), (b, j)):
            core = [v for v in edge if v != v1 and deg[v] >= 2]
            if len(core) != 1 or deg[core[0]] != 2:
                return None
            (outer,) = [o for o in incident[core[0]] if o != idx]
            if len(H.edges[outer]) < 3 or set(H.edges[outer]) & set(edge) != {core[0]}:
                return None
            ends.append(core[0])
        if deg[v1] != 2:
            return None
        return MergeConfiguration(a, b, v1, ends[0], ends[1])

    if e1 is not None and e2 is not None:
        i, j = index.get(tuple(sorted(e1))), index.get(tuple(sorted(e2)))
        found = match(i, j) if i is not None and j is not None else None
        if found is None:
            raise ConfigurationNotFound(f"edges {list(e1)} and {list(e2)} do not form the configuration")
        return found
    for i in range(H.m):
        for j in range(H.m):
            if i != j:
                found = match(i, j)
                if found is not None:
                    return found
    raise ConfigurationNotFound("no pair of edges forms the merge/split configuration")


MERGE_CASES = ("1.1", "1.2", "2.1", "2.2")


def merge_split_graphs(H: Hypergraph, cfg: MergeConfiguration, case: str, t: int) -> dict[str, Hypergraph]:
    """``{"G0": ...}`` for cases 1.x or ``{"G1": ..., "G2": ...}`` for cases 2.x."""
    if case.startswith("1"):
        pool = sorted((set(cfg.e1) | set(cfg.e2)) - {cfg.v2, cfg.v3})
        if not 2 <= t <= len(pool) + 2:
            raise PreconditionError(f"merged edge size {t} out of range 2..{len(pool) + 2}")
        merged = tuple(sorted([cfg.v2, cfg.v3] + pool[: t - 2]))
        if merged in H.edges:
            raise PreconditionError("merged edge already present")
        G0 = H.remove_edges([cfg.e1, cfg.e2]).add_edge(merged) if merged not in (cfg.e1, cfg.e2) else None
        if G0 is None:
            raise PreconditionError("merged edge coincides with an existing edge")
        return {"G0": G0}
    if t < 2:
        raise PreconditionError("inserted edge needs at least 2 vertices")
    u = H.n
    new = tuple([cfg.v1, *range(H.n + 1, H.n + t - 1), u])
    out = {}
    for name, edge in (("G1", cfg.e1), ("G2", cfg.e2)):
        moved = tuple(sorted((set(edge) - {cfg.v1}) | {u}))
        G = Hypergraph(H.n + t - 1, H.edges).remove_edges([edge])
        out[name] = G.add_edge(moved).add_edge(new)
    return out


def verify_merge_split(
    H: Hypergraph,
    case: str,
    t: int,
    *,
    e1: Sequence[int] | None = None,
    e2: Sequence[int] | None = None,
    margin: float = STRICT_MARGIN,
    sep_tol: float = SEP_TOL,
    method: str = "power",
    tol: float = DEFAULT_TOL,
) -> VerificationReport:
    """Merging two edges of a degree-2 run, or splitting one with a new edge.

    Cases 1.1/1.2 merge ``e1, e2`` into one edge of size ``t`` through
    ``v2, v3``; cases 2.1/2.2 insert a new size-``t`` edge at ``v1``.  The
    eigenvector hypotheses of the chosen case are checked on ``H`` first.
    """
    if case not in MERGE_CASES:
        raise ValueError(f"case must be one of {MERGE_CASES}")
    if not is_connected(H):
        raise Disconnected("H must be connected")
    cfg = find_merge_configuration(H, e1, e2)
    graphs = merge_split_graphs(H, cfg, case, t)
    report = VerificationReport(
        "merge-split",
        {"case": case, "t": t, "e1": list(cfg.e1), "e2": list(cfg.e2),
         "v1": cfg.v1, "v2": cfg.v2, "v3": cfg.v3, "margin": margin, "method": method},
    )
    res = spectral_radius(H, tol=tol, method=method)
    x, rho = res.eigvec, res.rho
    x1, x2, x3 = x[cfg.v1], x[cfg.v2], x[cfg.v3]
    s1, s2 = len(cfg.e1), len(cfg.e2)
    v1_high = x1 >= x2 - HYPOTHESIS_SLACK and x1 >= x3 - HYPOTHESIS_SLACK
    v1_low = x1 <= x2 + HYPOTHESIS_SLACK and x1 <= x3 + HYPOTHESIS_SLACK
    if case == "1.1":
        holds, strict, direction = t >= max(s1, s2) and v1_high, t > max(s1, s2), "le"
    elif case == "1.2":
        holds, strict, direction = t <= max(s1, s2) and v1_low, t < max(s1, s2), "ge"
    elif case == "2.1":
        holds, strict, direction = t <= min(s1, s2) and v1_high, t < min(s1, s2), "ge"
    else:
        holds, strict, direction = t >= max(s1, s2) and v1_low, t > max(s1, s2), "le"
    report.witnesses.append(Witness("hypothesis entries", "", {"x_v1": x1, "x_v2": x2, "x_v3": x3, "rho": rho}))
    if not holds:
        report.applicable = False
        report.notes.append("hypothesis-not-met: size or eigenvector condition of the case fails")
        return report

    others = [x[v] for v in (set(cfg.e1) | set(cfg.e2)) - {cfg.v1, cfg.v2, cfg.v3}]
    equality_shape = (
        t == s1 == s2
        and abs(x1 - x2) <= sep_tol
        and abs(x1 - x3) <= sep_tol
        and (max(others) - min(others) <= sep_tol if case.startswith("2") else True)
    )
    spectra = _Spectra(method, tol, DEFAULT_MAX_ITER, sep_tol)
    for name, G in graphs.items():
        r_new, r_old = spectra.pair(G, H, None, rho)
        diff = r_new - r_old
        if direction == "le":
            report.record(diff <= sep_tol, f"rho({name}) <= rho(H)", G, rho_new=r_new, rho_H=r_old, diff=diff)
            if strict:
                report.record(diff < -margin, f"rho({name}) < rho(H) strictly", G, diff=diff)
        else:
            report.record(diff >= -sep_tol, f"rho({name}) >= rho(H)", G, rho_new=r_new, rho_H=r_old, diff=diff)
            if strict:
                report.record(diff > margin, f"rho({name}) > rho(H) strictly", G, diff=diff)
        if equality_shape:
            report.record(abs(diff) <= sep_tol, f"equality instance: rho({name}) = rho(H)", G, diff=diff)
    return report
