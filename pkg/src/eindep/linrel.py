"""Linear relations among truncated power series, and reduction of a
family to an independent subfamily with exact expressions.

The relation finder is bound-parameterized: given a degree bound for the
polynomial multipliers and a truncation order M, it solves the exact
linear system  sum_j P_j(z) y_j(z) = 0 (mod z^{M+1})  for the multiplier
coefficients.  Results are relations of the truncations; they are
certified only modulo the supplied bounds and are labeled accordingly by
the CLI.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .scalars import GaussRat
from .unipoly import RatFunc, UniPoly


@dataclass
class Series:
    """Taylor coefficients a_0..a_M of one series, exact."""

    name: str
    coeffs: list

    def order(self) -> int:
        return len(self.coeffs) - 1


def linear_relations(series, degree_bound: int, trunc_order: int):
    """Basis of polynomial-coefficient relations, valid to the truncation.

    Unknowns are the coefficients of the multipliers P_j (degree <=
    degree_bound); one equation per power of z up to trunc_order.  The
    returned vectors are lists of UniPoly, scaled so the first non-zero
    entry is monic.
    """
    if not series:
        raise ValueError("no series given")
    count = len(series)
    if degree_bound < 0:
        raise ValueError("degree bound must be non-negative")
    needed = (degree_bound + 1) * count
    if trunc_order < needed:
        raise ValueError(
            f"underdetermined: with {count} series and degree bound "
            f"{degree_bound}, the truncation order must be at least {needed}")
    for s in series:
        if s.order() < trunc_order:
            raise ValueError(
                f"series {s.name!r} is truncated at order {s.order()}, "
                f"below the requested {trunc_order}")

    width = degree_bound + 1
    zero, one = GaussRat(0), GaussRat(1)
    rows = []
    for m in range(trunc_order + 1):
        row = []
        for s in series:
            for d in range(width):
                row.append(s.coeffs[m - d] if 0 <= m - d else zero)
        rows.append(row)

    basis = linalg.nullspace(rows, width * count, zero, one)
    relations = []
    for vec in basis:
        polys = [UniPoly(vec[j * width:(j + 1) * width]) for j in range(count)]
        lead = next(p for p in polys if p)
        scale = GaussRat(1) / lead.lc
        relations.append([p * scale for p in polys])
    return relations


def check_relation(relation, series, trunc_order: int) -> bool:
    """Re-substitute: does the relation kill the data up to the truncation?"""
    for m in range(trunc_order + 1):
        acc = GaussRat(0)
        for poly, s in zip(relation, series):
            for d, c in enumerate(poly.coeffs):
                if 0 <= m - d <= s.order():
                    acc = acc + c * s.coeffs[m - d]
        if acc:
            return False
    return True


def independent_subset(relations, count: int):
    """Lexicographically first maximal independent indices plus expressions.

    ``relations`` spans the relation space of F_1..F_count over K(z).
    Returns (kept, exprs) with kept a 0-based index tuple and
    exprs[i] = [(j, Q)] meaning F_i = sum Q * F_j over kept j.

    An index is dependent exactly when some relation has its last
    non-zero coordinate there, so eliminating with last-position pivots
    finds the dependent set and the expressions in one pass.
    """
    rows = [[RatFunc(p) for p in rel] for rel in relations]
    for rel in rows:
        if len(rel) != count:
            raise ValueError("relation width disagrees with the series count")

    pivot_rows: dict[int, list] = {}
    for row in rows:
        row = list(row)
        for c, prow in sorted(pivot_rows.items(), reverse=True):
            if row[c]:
                f = row[c]
                row = [x - f * y for x, y in zip(row, prow)]
        last = next((c for c in range(count - 1, -1, -1) if row[c]), None)
        if last is None:
            continue
        p = row[last]
        row = [x / p for x in row]
        for c, prow in pivot_rows.items():
            if prow[last]:
                f = prow[last]
                pivot_rows[c] = [x - f * y for x, y in zip(prow, row)]
        pivot_rows[last] = row

    excluded = sorted(pivot_rows)
    kept = tuple(i for i in range(count) if i not in pivot_rows)
    exprs = {}
    for c in excluded:
        row = pivot_rows[c]
        exprs[c] = [(j, -row[j]) for j in kept if row[j]]
    return kept, exprs
