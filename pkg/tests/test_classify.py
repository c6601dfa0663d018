import pytest

from wesym.classify import (ContradictsLemmaError, analyze_infinite,
                            gleason_pierce_corollary_check, pair_sum_code,
                            structural_infinite_case, structural_pair_sum,
                            verify_m_semigroup_generators)
from wesym.codes import (LinearCode, WeightEnumerator, named_code,
                         reed_muller, weight_enumerator)
from wesym.fields import field
from wesym.homopoly import HomPoly

import numpy as np


def _we(hp, q, k):
    return WeightEnumerator(hp.n, tuple(int(c) for c in hp.coeffs), q=q, k=k)


def test_analyze_zero_and_full():
    rep = analyze_infinite(WeightEnumerator(5, (1, 0, 0, 0, 0, 0), q=2, k=0))
    assert rep.case == "zero_code" and not rep.classification_open
    full = _we(HomPoly([1, 4]) ** 5, 5, 5)
    rep = analyze_infinite(full)
    assert rep.case == "full_space" and "F_5" in rep.structure_claim


def test_analyze_pair_sums():
    rep = analyze_infinite(_we(HomPoly([1, 0, 2]) ** 6, 3, 6))
    assert rep.case == "sum_of_pairs"
    assert "direct sum of 6 copies" in rep.structure_claim
    rep = analyze_infinite(_we(HomPoly([1, 0, 1]) ** 7, 2, 7))
    assert rep.case == "sum_of_pairs" and rep.classification_open
    assert rep.structure_claim is None


def test_analyze_finite_rejected():
    w = weight_enumerator(named_code("hamming8"))
    with pytest.raises(ValueError):
        analyze_infinite(w)


def test_contradicts_lemma():
    # (x^2 + y^2)^2 summing to 4 = 4^1, but a = 1 != q - 1 = 3
    with pytest.raises(ContradictsLemmaError):
        analyze_infinite(_we(HomPoly([1, 0, 1]) ** 2, 4, 1))


def test_structural_checks_match_classification():
    f2 = field(2)
    zero = LinearCode(f2, np.zeros((0, 4), dtype=np.uint16))
    assert structural_infinite_case(zero) == "zero_code"
    full = reed_muller(f2, 2, 2)
    assert structural_infinite_case(full) == "full_space"
    assert structural_infinite_case(pair_sum_code(3, 4)) == "sum_of_pairs"
    assert structural_infinite_case(pair_sum_code(5, 2)) == "sum_of_pairs"
    # X1 is a genuine pair; the other generators are irreducible, so the
    # support-splitting construction must fail on them
    assert structural_pair_sum(named_code("x1"))
    for name in ("x2", "x3", "x4", "x5"):
        assert not structural_pair_sum(named_code(name)), name
        assert structural_infinite_case(named_code(name)) is None
    # these all still carry the pair-sum enumerator shape
    for name in ("x1", "x2", "x3", "x4", "x5"):
        w = weight_enumerator(named_code(name))
        rep = analyze_infinite(w, 2)
        assert rep.case == "sum_of_pairs" and rep.classification_open


def test_pair_sum_enumerators():
    for q, copies in [(3, 2), (5, 3), (7, 2)]:
        code = pair_sum_code(q, copies)
        w = weight_enumerator(code)
        assert w.as_hompoly() == HomPoly([1, 0, q - 1]) ** copies


def test_verify_m_semigroup_generators():
    report = verify_m_semigroup_generators()
    assert set(report) == {"X1", "X2", "X3", "X4", "X5"}
    assert [report[k]["n"] for k in ("X1", "X2", "X3", "X4", "X5")] == \
        [2, 6, 14, 14, 14]
    assert all(v["enumerator_is_pair_power"] for v in report.values())


def test_gleason_pierce_corollary():
    r = gleason_pierce_corollary_check(5, 2)
    assert r["in_scope"] and r["formally_self_dual"] and \
        r["divisibility"] % 2 == 0 and r["case"] == "sum_of_pairs" and \
        r["consistent"]
    r = gleason_pierce_corollary_check(7, 3)
    assert r["consistent"]
    r = gleason_pierce_corollary_check(2, 4)
    assert not r["in_scope"]
