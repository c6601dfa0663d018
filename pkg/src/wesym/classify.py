"""Structure analysis for enumerators with infinite symmetry groups.

An enumerator with fewer than three distinct roots pins the code down to
one of: the zero code, the full space, or (even length) a sum of weight-2
pair codes -- and over F_q with q > 2 the pair-sum shape forces the inner
coefficient to be q-1 and the code to split as a direct sum of <(1,1)>
blocks.  The binary pair-sum case is a known open classification problem;
reports flag it instead of claiming structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .codes import LinearCode, WeightEnumerator, named_code, weight_enumerator
from .homopoly import HomPoly, is_formally_self_dual
from .symmetry import (INFINITE_FULL_SPACE, INFINITE_SUM_OF_PAIRS,
                       INFINITE_ZERO_CODE, classify_finiteness)


class ContradictsLemmaError(ValueError):
    """A pair-sum shape (x^2 + a y^2)^(n/2) with a != q-1 claimed to come
    from a linear code over F_q; no such code exists."""


@dataclass(frozen=True)
class InfiniteCaseReport:
    case: str
    q: Optional[int]
    n: int
    structure_claim: Optional[str]
    classification_open: bool
    notes: str = ""


def _pair_sum_coefficient(hp: HomPoly) -> Optional[Fraction]:
    """If hp == (x^2 + a y^2)^(n/2) for some rational a, return a."""
    n = hp.n
    if n % 2 or hp.coeffs[0] != 1:
        return None
    if n == 0:
        return None
    a = hp.coeffs[2] * 2 / n  # binomial(n/2, 1) * a = c_2
    if a == 0:
        return None
    if hp == HomPoly([1, 0, a]) ** (n // 2):
        return a
    return None


def analyze_infinite(w: WeightEnumerator, q: Optional[int] = None) -> InfiniteCaseReport:
    """Theorem-level report for an enumerator with an infinite group."""
    q = q if q is not None else w.q
    kind, case = classify_finiteness(w, q)
    if kind != "infinite":
        raise ValueError("enumerator has a finite symmetry group")
    hp = w.as_hompoly()
    n = w.n
    if case == INFINITE_ZERO_CODE:
        return InfiniteCaseReport(case, q, n, structure_claim="C = {0}",
                                  classification_open=False)
    if case == INFINITE_FULL_SPACE:
        return InfiniteCaseReport(case, q, n, structure_claim=f"C = F_{q}^{n}",
                                  classification_open=False)
    if case == INFINITE_SUM_OF_PAIRS:
        if q == 2:
            return InfiniteCaseReport(
                case, q, n, structure_claim=None, classification_open=True,
                notes="binary pair-sum enumerators are not classified")
        return InfiniteCaseReport(
            case, q, n,
            structure_claim=f"C = direct sum of {n // 2} copies of <(1,1)> over F_{q}",
            classification_open=False)
    # other two-root shapes: a pair-sum with the wrong inner coefficient
    # cannot come from a code at all
    a = _pair_sum_coefficient(hp)
    if a is not None and q is not None and a != q - 1 and w.coeffs[0] == 1:
        raise ContradictsLemmaError(
            f"(x^2 + {a} y^2)^{n // 2} cannot be the enumerator of a linear "
            f"code over F_{q}: the coefficient is forced to q-1 = {q - 1}")
    return InfiniteCaseReport(case, q, n, structure_claim=None,
                              classification_open=False,
                              notes="no code-level classification applies")


# -- structural verification against the generator matrix ------------------------


def structural_infinite_case(code: LinearCode,
                             budget: int = 1 << 22) -> Optional[str]:
    """Direct generator-matrix check of the infinite cases.

    Returns the matching case tag, or None when the code is none of: zero
    code, full space, or a disjoint-support weight-2 pair sum.
    """
    if code.k == 0:
        return INFINITE_ZERO_CODE
    if code.k == code.n:
        return INFINITE_FULL_SPACE
    if structural_pair_sum(code, budget):
        return INFINITE_SUM_OF_PAIRS
    return None


def structural_pair_sum(code: LinearCode, budget: int = 1 << 22) -> bool:
    """Constructive pair-sum test: weight-2 codewords with pairwise
    disjoint supports spanning the whole code."""
    from .codes import _rank, iter_codewords
    fld = code.field
    q, k, n = fld.q, code.k, code.n
    if n % 2 or k != n // 2 or q ** k > budget:
        return False
    pairs: list[np.ndarray] = []
    supports: list[frozenset[int]] = []
    for word in iter_codewords(code):
        if int(np.count_nonzero(word)) == 2:
            supp = frozenset(int(i) for i in np.nonzero(word)[0])
            if supp not in supports:
                supports.append(supp)
                pairs.append(word.copy())
    if len(supports) != n // 2:
        return False
    union: set[int] = set()
    for s in supports:
        if union & s:
            return False
        union |= s
    if union != set(range(n)):
        return False
    return _rank(fld, np.array(pairs, dtype=np.uint16)) == k


# -- catalog-level reports ---------------------------------------------------------


def verify_m_semigroup_generators() -> dict:
    """The five irreducible pair-sum generators up to length 14: enumerator
    (x^2+y^2)^(n/2) for each, verified by direct enumeration."""
    report = {}
    for name, n in [("x1", 2), ("x2", 6), ("x3", 14), ("x4", 14), ("x5", 14)]:
        code = named_code(name)
        w = weight_enumerator(code)
        expected = HomPoly([1, 0, 1]) ** (n // 2)
        ok = (code.n == n) and (w.as_hompoly() == expected)
        report[name.upper()] = {
            "n": code.n,
            "enumerator_is_pair_power": ok,
            "case": classify_finiteness(w, 2)[1],
        }
        if not ok:
            raise AssertionError(f"{name} does not have the pair-sum enumerator")
    return report


def pair_sum_code(q: int, copies: int) -> LinearCode:
    """Direct sum of ``copies`` blocks of the [2,1] code <(1,1)> over F_q."""
    from .fields import field_from_order
    fld = field_from_order(q)
    gen = np.zeros((copies, 2 * copies), dtype=np.uint16)
    for i in range(copies):
        gen[i, 2 * i] = 1
        gen[i, 2 * i + 1] = 1
    return LinearCode(fld, gen, f"pairsum q={q} n={2 * copies}",
                      _skip_rank_check=True)


def gleason_pierce_corollary_check(q: int, copies: int) -> dict:
    """Consistency demonstration for q > 4: the pair-sum code is formally
    self-dual, divisible by 2, and classified as a pair sum."""
    from .codes import divisibility
    if q <= 4:
        return {"q": q, "in_scope": False,
                "note": "corollary applies to q > 4 only"}
    code = pair_sum_code(q, copies)
    w = weight_enumerator(code)
    fsd = is_formally_self_dual(w.as_hompoly(), q)
    div = divisibility(w)
    rep = analyze_infinite(w, q)
    ok = fsd and div % 2 == 0 and rep.case == INFINITE_SUM_OF_PAIRS
    return {"q": q, "n": code.n, "in_scope": True,
            "formally_self_dual": fsd, "divisibility": div,
            "case": rep.case, "consistent": ok}
