"""Linear forms in X_1..X_N over K[z] and their change-of-variables frames.

Two levels exist side by side.  At the function level a Frame records
the pivot minor w0, the excluded columns and the exact expression of
each X variable in the new T variables over K(z).  At a point alpha a
PointFrame records the rank of the specialized forms, the chosen kept
form/variable index tuples (lexicographically least, form indices tried
within each variable tuple), the kernel combinations for dropped forms
and the scalar change of variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import linalg
from .mpoly import MultiPoly, substitute_linear
from .scalars import GaussRat
from .unipoly import RatFunc, UniPoly


class LinearForms:
    """p linear forms as a p x N matrix of UniPoly coefficients."""

    def __init__(self, entries):
        if not entries or not entries[0]:
            raise ValueError("need at least one form in at least one variable")
        width = len(entries[0])
        for row in entries:
            if len(row) != width:
                raise ValueError("ragged coefficient matrix")
            for cell in row:
                if not isinstance(cell, UniPoly):
                    raise TypeError("matrix entries must be UniPoly")
        if len(entries) > width:
            raise ValueError(
                f"{len(entries)} forms in {width} variables cannot be independent")
        self.entries = [list(row) for row in entries]

    @property
    def nforms(self) -> int:
        return len(self.entries)

    @property
    def nvars(self) -> int:
        return len(self.entries[0])

    def at(self, alpha: GaussRat):
        """The coefficient matrix evaluated at z = alpha."""
        return [[c.eval(alpha) for c in row] for row in self.entries]

    def form_at(self, j: int, alpha: GaussRat) -> MultiPoly:
        """phi_j(alpha, X) as a linear polynomial over K (j is 0-based)."""
        n = self.nvars
        terms = {}
        for k, c in enumerate(self.entries[j]):
            v = c.eval(alpha)
            if v:
                mono = tuple(1 if t == k else 0 for t in range(n))
                terms[mono] = v
        return MultiPoly(n, terms)

    def rank_generic(self) -> int:
        """Rank over K(z)."""
        rows = [[RatFunc(c) for c in row] for row in self.entries]
        return linalg.rank(rows)


@dataclass
class Frame:
    """Change of variables T_1..T_N attached to a set of forms.

    T_j = phi_j for j < p, then the excluded X variables in index order.
    ``x_in_t[i][k]`` is the K(z) coefficient of T_{k+1} in X_{i+1};
    every denominator divides a power of w0.  Indices are 0-based.
    """

    w0: UniPoly
    excluded: tuple
    x_in_t: list


def build_frame(forms: LinearForms) -> Frame:
    """Scan excluded-column tuples in lex order; first non-zero minor wins."""
    p, n = forms.nforms, forms.nvars
    rat_rows = [[RatFunc(c) for c in row] for row in forms.entries]
    for excluded in combinations(range(n), n - p):
        kept = [k for k in range(n) if k not in excluded]
        minor = linalg.det([[rat_rows[j][k] for k in kept] for j in range(p)])
        if minor:
            break
    else:
        raise ValueError("forms not independent")
    if not minor.is_polynomial:
        raise AssertionError("minor of a polynomial matrix must be polynomial")
    w0 = minor.num.monic()

    # T = C X with C = forms rows stacked over unit rows of the excluded X.
    c_rows = [list(row) for row in rat_rows]
    one, zero = RatFunc.one(), RatFunc.zero()
    for idx in excluded:
        c_rows.append([one if k == idx else zero for k in range(n)])
    x_in_t = linalg.invert(c_rows, zero, one)
    if x_in_t is None:
        raise AssertionError("frame matrix must be invertible when a minor is")
    return Frame(w0=w0, excluded=tuple(excluded), x_in_t=x_in_t)


def rewrite_in_t(gen: MultiPoly, frame: Frame) -> MultiPoly:
    """Substitute X_i -> sum_k x_in_t[i][k] T_k; coefficients live in K(z)."""
    n = gen.n
    images = []
    for i in range(n):
        terms = {}
        for k in range(n):
            c = frame.x_in_t[i][k]
            if c:
                mono = tuple(1 if t == k else 0 for t in range(n))
                terms[mono] = c
        images.append(MultiPoly(n, terms))
    return substitute_linear(gen, images)


@dataclass
class PointFrame:
    """Specialization data of the forms at one point.

    ``form_idx``/``var_idx`` are the 0-based kept tuples (j- and i-tuples);
    ``kernel[j]`` expresses the dropped form j over the kept ones;
    ``x_in_t`` is the scalar change of variables into
    T_1..T_r = kept forms, T_{r+1}.. = kept variables.
    """

    rank: int
    form_idx: tuple
    var_idx: tuple
    kernel: dict
    x_in_t: list


def specialize_forms(forms: LinearForms, alpha: GaussRat) -> PointFrame:
    """Rank, basis tuples (lex least, variable part compared first) and kernel."""
    p, n = forms.nforms, forms.nvars
    mat = forms.at(alpha)
    r = linalg.rank(mat)
    zero, one = GaussRat(0), GaussRat(1)

    chosen = None
    for var_idx in combinations(range(n), n - r):
        for form_idx in combinations(range(p), r):
            rows = [mat[j] for j in form_idx]
            rows += [[one if k == idx else zero for k in range(n)]
                     for idx in var_idx]
            if linalg.rank(rows) == n:
                chosen = (form_idx, var_idx, rows)
                break
        if chosen:
            break
    form_idx, var_idx, c_rows = chosen

    kernel = {}
    basis_rows = [mat[j] for j in form_idx]
    # solve sum_t lambda_t * phi_{j_t}(alpha) = phi_j(alpha) coordinatewise
    a_cols = [[basis_rows[t][k] for t in range(r)] for k in range(n)]
    for j in range(p):
        if j in form_idx:
            continue
        lam = linalg.solve(a_cols, [mat[j][k] for k in range(n)], zero)
        if lam is None:
            raise AssertionError("dropped form must lie in the kept span")
        kernel[j] = lam

    x_in_t = linalg.invert(c_rows, zero, one)
    return PointFrame(rank=r, form_idx=form_idx, var_idx=var_idx,
                      kernel=kernel, x_in_t=x_in_t)
