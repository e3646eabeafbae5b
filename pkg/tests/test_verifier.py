from __future__ import annotations

import json
from fractions import Fraction

import pytest

from crossring.association import associated
from crossring.generate import canonical, fuzz_instance
from crossring.verifier import (
    ConfigView,
    certify,
    configuration_inequality,
    disjointness_check,
    extract_configuration,
    hks_statement_bound,
)

from .helpers import double_red_crossing, no_disjoint_partner


def test_canonical_configuration():
    d = canonical(5, 8)
    for j in range(8):
        cv = extract_configuration(d, j, 1)
        assert (cv.s, cv.k) == (2, 0)
        assert cv.indices == [0, 4]
        res = configuration_inequality(d, cv)
        assert (res.x1, res.x2, res.x3) == (0, 0, 0)
        assert res.holds and res.slack == 0


def test_double_crossing_configuration():
    d = double_red_crossing(3)
    cv = extract_configuration(d, 3, 1)
    assert cv.k == 2
    assert cv.s == 1
    res = configuration_inequality(d, cv)
    assert res.holds and res.slack == 1


def test_empty_t_set_rejected():
    d = canonical(5, 8)
    with pytest.raises(ValueError):
        extract_configuration(d, 0, 2)


def test_trivial_configuration_holds():
    # two arcs with nothing crossing them: s - 2 = 0 good crossings are enough
    cv = ConfigView(0, 1, 7, 0, 1, [0, 4], {0: [], 4: []}, {0: [], 4: []}, 0)
    res = configuration_inequality(canonical(5, 8), cv)
    assert (res.x1, res.x2, res.x3) == (0, 0, 0)
    assert res.holds and res.slack == 0


def test_disjointness_on_canonical():
    d = canonical(4, 8)
    assocs = {j: associated(d, j) for j in range(8)}
    assert disjointness_check(d, assocs) == []
    assert disjointness_check(d, {0: assocs[0]}) == []


def test_disjointness_detects_shared_crossing():
    d = canonical(4, 8)
    a0, a1 = associated(d, 0), associated(d, 1)
    clash = next(iter(a0.Y))
    a1.Y = {**a1.Y, clash: "I"}
    try:
        events = disjointness_check(d, {0: a0, 1: a1})
    finally:
        d._cache.clear()
    assert [e.check for e in events] == ["disjoint-y-y"]


@pytest.mark.parametrize("m,n,n0,expected", [(3, 19, 19, 0), (3, 29, 19, 29), (3, 28, 19, 27)])
def test_statement_bound(m, n, n0, expected):
    assert hks_statement_bound(m, n, n0) == expected


def test_statement_bound_below_n0_rejected():
    with pytest.raises(ValueError):
        hks_statement_bound(3, 18, 19)
    assert hks_statement_bound(3, 20) == Fraction(3)


def test_certificate_canonical_4_8():
    cert = certify(canonical(4, 8))
    assert cert.total_crossings == 16
    assert cert.theorem1_holds
    assert cert.to_dict()["slack"] == 0
    assert not cert.falsifications


def test_certificate_canonical_6_12_sizes():
    cert = certify(canonical(6, 12))
    assert [row["size"] for row in cert.per_j] == [4] * 12
    assert cert.pairwise_disjoint


def test_certificate_deterministic():
    d1, d2 = canonical(5, 10), canonical(5, 10)
    assert certify(d1).dumps() == certify(d2).dumps()
    json.loads(certify(d1).dumps())


def test_perturbed_robust_drawings_certify():
    slack = []
    for seed in range(40):
        cert = certify(fuzz_instance(4, 20, seed))
        assert not cert.falsifications, cert.dumps()
        if cert.robust:
            assert cert.theorem1_holds
            slack.append(cert.total_crossings - cert.lower_bound)
    assert slack and min(slack) >= 0 and max(slack) > 0


def test_non_robust_small_drawing_not_certified():
    cert = certify(no_disjoint_partner())
    assert not cert.robust
    assert not cert.theorem1_holds
    assert cert.dichotomy is None


def test_invalid_drawing_rejected():
    from crossring.drawing import Drawing

    d = canonical(3, 7)
    chir = dict(d.chirality)
    key = sorted(chir)[0]
    chir[key] = -chir[key]
    with pytest.raises(ValueError):
        certify(Drawing(d.graph, d.rotations, d.crossings, chir))
