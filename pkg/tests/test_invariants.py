from fractions import Fraction

import pytest

from wesym.codes import named_code, reed_muller, weight_enumerator
from wesym.fields import field
from wesym.homopoly import HomPoly
from wesym.invariants import (DegreeMismatchError, NotMemberError, decompose,
                              dihedral_generators, gleason_generators)

F2 = field(2)


def test_gleason_generators():
    f1, f2 = gleason_generators()
    assert f1.coeffs == tuple(Fraction(c) for c in (1, 0, 0, 0, 14, 0, 0, 0, 1))
    assert f2.coeffs[8] == 759
    assert sum(f2.coeffs) == 4096


def test_dihedral_generators():
    f1, f2 = dihedral_generators(3)
    assert f1 == HomPoly([1] + [0] * 7 + [1])
    assert f2 == HomPoly([1] + [0] * 7 + [30] + [0] * 7 + [1])
    f1, f2 = dihedral_generators(1)
    assert f1 == HomPoly([1, 0, 1]) and f2 == HomPoly([1, 0, 6, 0, 1])
    # f2 is the degree-(1, i+1) Reed-Muller enumerator
    for i in range(1, 7):
        assert dihedral_generators(i)[1] == \
            weight_enumerator(reed_muller(F2, 1, i + 1)).as_hompoly()


def test_identity_membership():
    f1, f2 = gleason_generators()
    dec = decompose(f1, f1, f2)
    assert dec.terms == ((1, 0, Fraction(1)),) and dec.unique
    dec = decompose(f2, f1, f2)
    assert dec.terms == ((0, 1, Fraction(1)),) and dec.unique


def test_rm25_decomposition_frozen():
    f1, f2 = gleason_generators()
    w = weight_enumerator(reed_muller(F2, 2, 5)).as_hompoly()
    dec = decompose(w, f1, f2)
    assert dec.unique
    assert dict(((a, b), c) for a, b, c in dec.terms) == \
        {(4, 0): Fraction(-1, 3), (1, 1): Fraction(4, 3)}
    assert dec.reconstruct() == w


def test_rm1m_over_dihedral_frozen():
    for m in range(3, 7):
        w = weight_enumerator(reed_muller(F2, 1, m)).as_hompoly()
        f1, f2 = dihedral_generators(m - 1)
        dec = decompose(w, f1, f2)
        assert dec.terms == ((0, 1, Fraction(1)),), m
        assert dec.reconstruct() == w


def test_not_member():
    f1, f2 = gleason_generators()
    w = list(weight_enumerator(reed_muller(F2, 2, 5)).coeffs)
    w[5] += 1
    with pytest.raises(NotMemberError):
        decompose(HomPoly(w), f1, f2)


def test_degree_mismatch():
    f1, f2 = gleason_generators()
    with pytest.raises(DegreeMismatchError):
        decompose(HomPoly([1, 0, 1]), f1, f2)


def test_non_unique_solution_is_deterministic():
    # f2 = f1^2 makes the degree-4 slice degenerate
    f1 = HomPoly([1, 0, 1])
    f2 = f1 * f1
    p = f1 ** 2
    dec = decompose(p, f1, f2)
    assert not dec.unique
    assert dec.reconstruct() == p
    # minimal lexicographic pivot support: (a, b) = (0, 1) only
    assert dec.terms == ((0, 1, Fraction(1)),)


def test_exactness_zero_tolerance():
    f1, f2 = gleason_generators()
    w = weight_enumerator(named_code("golay24")).as_hompoly()
    dec = decompose(w, f1, f2)
    assert dec.reconstruct() == w  # exact equality of Fractions
