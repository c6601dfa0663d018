"""Expected symmetry-group tables for Reed-Muller enumerators, with the
feasibility rules that decide which cells are recomputed at desk scale.

Dihedral entries follow the order-2n subscript convention (D_k has order
2k), matching the theorems the binary table is checked against.  The two
dihedral cells in the F_4 table's m=1 column are stored as order-8
dihedral groups: a degree-4 enumerator has at most four distinct roots,
so its projective group embeds in S_4 and an order-16 dihedral group is
impossible there; the stored values are confirmed by direct computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .symmetry import IsoType

INF = "inf"
EMPTY = "empty"         # cells with no published value

# q -> largest dimension enumerated directly (2^29, 3^17, 4^13 codewords)
DIM_LIMITS = {2: 29, 3: 17, 4: 13}


def _c(k):
    return IsoType("cyclic", k)


def _d(k):
    return IsoType("dihedral", k)


TABLE1 = {
    # (r, m) -> expected, m = 1..7, rows r = 0..6
    **{(0, m): v for m, v in zip(range(1, 8),
        [INF, _d(4), _d(8), _d(16), _d(32), _d(64), _d(128)])},
    **{(1, m): v for m, v in zip(range(1, 8),
        [INF, _d(4), IsoType("S4"), _d(8), _d(16), _d(32), _d(64)])},
    **{(2, m): v for m, v in zip(range(1, 8),
        [INF, INF, _d(8), _d(8), IsoType("S4"), _d(4), _d(8)])},
    **{(3, m): v for m, v in zip(range(1, 8),
        [INF, INF, INF, _d(16), _d(16), _d(4), IsoType("S4")])},
    **{(4, m): v for m, v in zip(range(1, 8),
        [INF, INF, INF, INF, _d(32), _d(32), _d(8)])},
    **{(5, m): v for m, v in zip(range(1, 8),
        [INF, INF, INF, INF, INF, _d(64), _d(64)])},
    **{(6, m): v for m, v in zip(range(1, 8),
        [INF, INF, INF, INF, INF, INF, _d(128)])},
}

TABLE2 = {
    **{(0, m): v for m, v in zip(range(1, 5), [_d(3), _d(9), _d(27), _d(81)])},
    **{(1, m): v for m, v in zip(range(1, 5), [_d(3), _c(3), _c(9), _c(27)])},
    **{(2, m): v for m, v in zip(range(1, 5), [INF, _c(3), _c(3), _c(3)])},
    **{(3, m): v for m, v in zip(range(1, 5), [INF, _d(9), _c(3), EMPTY])},
    **{(4, m): v for m, v in zip(range(1, 5), [INF, INF, _c(9), EMPTY])},
    **{(5, m): v for m, v in zip(range(1, 5), [INF, INF, _d(27), _c(3)])},
    **{(6, m): v for m, v in zip(range(1, 5), [INF, INF, INF, _c(27)])},
    **{(7, m): v for m, v in zip(range(1, 5), [INF, INF, INF, _d(81)])},
}

TABLE3 = {
    **{(0, m): v for m, v in zip(range(1, 4), [_d(4), _d(16), _d(64)])},
    **{(1, m): v for m, v in zip(range(1, 4), [_d(2), _c(4), _c(16)])},
    **{(2, m): v for m, v in zip(range(1, 4), [_d(4), _c(1), _c(4)])},
    **{(3, m): v for m, v in zip(range(1, 4), [INF, _c(1), _c(1)])},
    **{(4, m): v for m, v in zip(range(1, 4), [INF, _c(4), EMPTY])},
    **{(5, m): v for m, v in zip(range(1, 4), [INF, _d(16), _c(1)])},
    **{(6, m): v for m, v in zip(range(1, 4), [INF, INF, _c(4)])},
    **{(7, m): v for m, v in zip(range(1, 4), [INF, INF, _c(16)])},
    **{(8, m): v for m, v in zip(range(1, 4), [INF, INF, _d(64)])},
}

TABLES = {2: TABLE1, 3: TABLE2, 4: TABLE3}


def rm_dimension(q: int, r: int, m: int) -> int:
    """Number of reduced monomials: per-variable exponent <= q-1, total
    degree <= r."""
    cap = min(r, m * (q - 1))
    counts = [1] + [0] * cap      # counts[d] = #tuples of current length, sum d
    for _ in range(m):
        nxt = [0] * (cap + 1)
        for d in range(cap + 1):
            if counts[d] == 0:
                continue
            for e in range(min(q - 1, cap - d) + 1):
                nxt[d + e] += counts[d]
        counts = nxt
    return sum(counts)


def cell_feasible(q: int, r: int, m: int) -> bool:
    """A cell is computed when the code or its dual fits the budget."""
    k = rm_dimension(q, r, m)
    n = q ** m
    return min(k, n - k) <= DIM_LIMITS[q]


@dataclass(frozen=True)
class CellResult:
    r: int
    m: int
    expected: object            # IsoType | 'inf' | 'empty'
    computed: Optional[object]  # IsoType | 'inf' | None when skipped
    status: str                 # 'ok' | 'mismatch' | 'skipped'


def expected_label(value) -> str:
    if value == INF:
        return "inf"
    if value == EMPTY:
        return "(empty)"
    return value.label


def reproduce_table(q: int, max_m: Optional[int] = None,
                    budget: int = 1 << 32, prec: int = 256, seed: int = 0,
                    cache=None, workers: int = 1,
                    progress=None) -> list[CellResult]:
    """Recompute every feasible cell and diff against the embedded table."""
    from .codes import TooLargeError, reed_muller, weight_enumerator_smart
    from .fields import field_from_order
    from .symmetry import symmetry_group

    table = TABLES[q]
    fld = field_from_order(q)
    results = []
    for (r, m), expected in sorted(table.items()):
        if max_m is not None and m > max_m:
            continue
        if expected == EMPTY or not cell_feasible(q, r, m):
            results.append(CellResult(r, m, expected, None, "skipped"))
            continue
        code = reed_muller(fld, r, m)
        try:
            w = weight_enumerator_smart(code, budget, cache=cache,
                                        workers=workers)
        except TooLargeError:
            results.append(CellResult(r, m, expected, None, "skipped"))
            continue
        group = symmetry_group(w, q=q, prec=prec, seed=seed)
        computed = INF if group.kind == "infinite" else group.iso
        if expected == INF:
            status = "ok" if computed == INF else "mismatch"
        else:
            status = "ok" if computed == expected else "mismatch"
        results.append(CellResult(r, m, expected, computed, status))
        if progress is not None:
            progress(results[-1])
    return results


def render_table(q: int, results: list[CellResult]) -> str:
    ms = sorted({c.m for c in results})
    rs = sorted({c.r for c in results})
    cell = {(c.r, c.m): c for c in results}
    lines = [f"S(w) for RM_{q}(r, m) enumerators"]
    header = "r\\m " + " ".join(f"{m:>8}" for m in ms)
    lines.append(header)
    for r in rs:
        row = [f"{r:<3}"]
        for m in ms:
            c = cell.get((r, m))
            if c is None:
                row.append(f"{'':>8}")
            elif c.status == "skipped":
                row.append(f"{'skip:' + expected_label(c.expected):>8}"
                           if c.expected != EMPTY else f"{'(empty)':>8}")
            else:
                mark = "" if c.status == "ok" else "!"
                row.append(f"{mark + expected_label(c.computed):>8}")
        lines.append(" ".join(row))
    bad = [c for c in results if c.status == "mismatch"]
    if bad:
        lines.append("MISMATCHES: " + ", ".join(
            f"(r={c.r},m={c.m}) expected {expected_label(c.expected)} "
            f"got {expected_label(c.computed)}" for c in bad))
    else:
        lines.append("all computed cells match")
    return "\n".join(lines)
