from __future__ import annotations

import json
import math

import pytest

from oracles import HYPERPATH_7_3, superstar_rho
from supertrees.enumeration import canonical_code
from supertrees.errors import ConfigurationNotFound, Disconnected, DuplicateEdge, PreconditionError
from supertrees.generators import double_hyperstar, hyperpath, single_vertex, superstar
from supertrees.hypergraph import from_edge_list
from supertrees.spectral import spectral_radius
from supertrees.verify import (
    VerificationReport,
    Witness,
    verify_branch_split,
    verify_edge_addition,
    verify_edge_shift,
    verify_extremal,
    verify_grafting,
    verify_merge_split,
    verify_pendant_identities,
)

SINGLE3 = from_edge_list(3, [[0, 1, 2]])
SINGLE4 = from_edge_list(4, [[0, 1, 2, 3]])
HYPERCYCLE = from_edge_list(8, [[0, 1, 2], [2, 3, 4], [4, 5, 6], [6, 7, 0]])
GOLDEN = (1 + math.sqrt(5)) / 2


def _values(report, needle):
    return next(w.values for w in report.witnesses if needle in w.description)


def test_extremal_3_3():
    r = verify_extremal(3, 3)
    assert r.passed and r.applicable
    assert _values(r, "maximum (superstar): extreme")["rho"] == pytest.approx(1.5, abs=1e-10)
    assert _values(r, "minimum (hyperpath): extreme")["rho"] == pytest.approx(HYPERPATH_7_3, abs=1e-10)
    assert any("coincide" in n for n in r.notes)


def test_extremal_3_4():
    r = verify_extremal(3, 4)
    assert r.passed
    assert _values(r, "maximum (superstar): extreme")["rho"] == pytest.approx((1 + math.sqrt(33)) / 4, abs=1e-10)
    second = _values(r, "second maximum")
    assert second["found_code"] == canonical_code(double_hyperstar(3, 2, 1)).hex()


def test_extremal_4_3():
    r = verify_extremal(4, 3)
    assert r.passed
    top = _values(r, "maximum (superstar): extreme")["rho"]
    assert top == pytest.approx((2 + math.sqrt(40)) / 6, abs=1e-10)
    assert top == pytest.approx(superstar_rho(4, 3), abs=1e-12)


def test_pendant_identities_examples():
    r = verify_pendant_identities(hyperpath(3, 4), method="dense")
    assert r.passed and r.params["patterns"]["interior"] == 2
    middle = next(w.values for w in r.witnesses if w.values.get("edge") == [2, 3, 4])
    assert middle["max_error"] <= 1e-9
    star = verify_pendant_identities(superstar(3, 3))
    assert star.passed
    x = spectral_radius(superstar(3, 3)).eigvec
    assert x[1] / x[0] == pytest.approx(0.5, abs=1e-10)
    path = verify_pendant_identities(hyperpath(3, 5), method="dense")
    assert path.passed and path.params["patterns"]["pendant_path"] == 2
    with pytest.raises(Disconnected):
        verify_pendant_identities(from_edge_list(6, [[0, 1, 2], [3, 4, 5]]))


def test_edge_addition_examples():
    assert verify_edge_addition(hyperpath(3, 3), (0, 3, 6)).passed
    assert verify_edge_addition(superstar(3, 2), (1, 2, 3)).passed
    with pytest.raises(Disconnected):
        verify_edge_addition(SINGLE3, (3, 4, 5))
    with pytest.raises(DuplicateEdge):
        verify_edge_addition(SINGLE3, (2, 1, 0))


def test_edge_shift_examples():
    toward_max = verify_edge_shift(hyperpath(3, 3), [((4, 5, 6), [4], [2])], method="dense")
    assert toward_max.applicable and toward_max.passed
    toward_min = verify_edge_shift(hyperpath(3, 3), [((4, 5, 6), [4], [0])])
    assert not toward_min.applicable and toward_min.passed
    assert toward_min.notes[0].startswith("hypothesis-not-met")
    double = verify_edge_shift(hyperpath(3, 4), [((0, 1, 2), [2], [4]), ((6, 7, 8), [6], [4])])
    assert double.applicable and double.passed
    mixed_targets = verify_edge_shift(hyperpath(3, 4), [((0, 1, 2), [2], [4]), ((6, 7, 8), [6], [3])])
    assert not mixed_targets.applicable


def test_grafting_examples():
    spider = verify_grafting(SINGLE3, 0, 1, 1, 3, method="dense")
    assert spider.passed
    vals = _values(spider, "rho(G(Dv;p,q))")
    assert vals["rho_split"] == pytest.approx(1.5, abs=1e-10)
    assert vals["rho_joined"] == pytest.approx(HYPERPATH_7_3, abs=1e-10)
    assert verify_grafting(superstar(3, 2), 0, 1, 2, 3).passed
    with pytest.raises(PreconditionError):
        verify_grafting(SINGLE3, 0, 0, 2, 3)
    with pytest.raises(PreconditionError):
        verify_grafting(single_vertex(), 0, 1, 1, 3)


def test_branch_split_examples():
    assert verify_branch_split(SINGLE3, 0, 3, 2, [1]).passed
    assert verify_branch_split(SINGLE4, 0, 4, 2, [1, 1]).passed
    assert verify_branch_split(from_edge_list(5, [[0, 1, 2, 3, 4]]), 0, 5, 4, [1, 2, 3]).passed
    with pytest.raises(PreconditionError):
        verify_branch_split(single_vertex(), 0, 3, 2, [1])


def test_merge_on_path_with_larger_edge():
    r = verify_merge_split(hyperpath(3, 4), "1.1", 4, e1=(2, 3, 4), e2=(4, 5, 6), method="dense")
    assert r.applicable and r.passed
    assert any("strictly" in w.description for w in r.witnesses)


def test_merge_split_equality_on_hypercycle():
    for case in ("2.1", "1.1"):
        r = verify_merge_split(HYPERCYCLE, case, 3)
        assert r.applicable and r.passed
        eq = [w for w in r.witnesses if w.description.startswith("equality")]
        assert eq and all(abs(w.values["diff"]) <= 1e-9 for w in eq)
        assert r.witnesses[0].values["rho"] == pytest.approx(GOLDEN, abs=1e-12)


def test_merge_split_guards():
    violated = verify_merge_split(hyperpath(3, 4), "1.2", 3, e1=(2, 3, 4), e2=(4, 5, 6))
    assert not violated.applicable and violated.passed
    with pytest.raises(ConfigurationNotFound):
        verify_merge_split(hyperpath(3, 2), "1.1", 3)
    with pytest.raises(ValueError):
        verify_merge_split(HYPERCYCLE, "3.1", 3)


def test_report_json_round_trip():
    r = verify_edge_shift(hyperpath(3, 3), [((4, 5, 6), [4], [2])])
    text = r.to_json()
    data = json.loads(text)
    assert set(data) == {"check", "params", "pass", "applicable", "witnesses", "failures", "notes", "versions"}
    assert set(data["versions"]) == {"supertrees", "numpy", "python"}
    back = VerificationReport.from_json(text)
    assert back.to_json() == text and back.witnesses == r.witnesses


def test_failed_report_serialization():
    r = VerificationReport("demo", {"x": 1})
    r.record(False, "forced", hyperpath(3, 1), gap=-1.0)
    assert not r.passed
    data = json.loads(r.to_json())
    assert data["pass"] is False and data["failures"][0]["graph"] == "3 1\n0 1 2\n"
    assert VerificationReport.from_json(r.to_json()).failures == [Witness("forced", "3 1\n0 1 2\n", {"gap": -1.0})]
    data["pass"] = True
    with pytest.raises(ValueError):
        VerificationReport.from_dict(data)
