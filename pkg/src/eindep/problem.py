"""Problem files: a small versioned JSON schema plus exact serialization.

Schema (format 1):

    {
      "format": 1,
      "field": "Q" | "Qi",
      "numX": N,
      "numForms": p,
      "forms": p rows of N coefficient lists (each a UniPoly, index =
               degree in z, entries are scalar strings),
      "ideal": [ [ {"c": [scalar strings], "e": [N ints]}, ... ], ... ],
      "alphas": optional list of scalar strings
    }

All scalars follow the grammar of ``parse_scalar``.  Parsing and
emission round-trip exactly on canonical forms.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .forms import LinearForms
from .mpoly import MultiPoly
from .scalars import GaussRat, parse_scalar, scalar_str
from .unipoly import RatFunc, UniPoly

FORMAT_VERSION = 1

_TOP_KEYS = {"format", "field", "numX", "numForms", "forms", "ideal", "alphas"}


class ProblemError(ValueError):
    """Malformed problem file; the message names the offending field."""


@dataclass
class Problem:
    field: str
    nvars: int
    nforms: int
    forms: LinearForms
    ideal: list  # MultiPoly over RatFunc in X
    alphas: list | None

    def __eq__(self, other):
        if not isinstance(other, Problem):
            return NotImplemented
        return (self.field == other.field and self.nvars == other.nvars
                and self.nforms == other.nforms
                and self.forms.entries == other.forms.entries
                and self.ideal == other.ideal
                and self.alphas == other.alphas)


def _expect(cond, where, message):
    if not cond:
        raise ProblemError(f"{where}: {message}")


def _parse_unipoly(value, where, field) -> UniPoly:
    _expect(isinstance(value, list), where, "expected a list of scalar strings")
    coeffs = []
    for k, s in enumerate(value):
        try:
            coeffs.append(parse_scalar(s, field))
        except ValueError as exc:
            raise ProblemError(f"{where}[{k}]: {exc}") from None
    return UniPoly(coeffs)


def parse_problem_dict(data: dict) -> Problem:
    _expect(isinstance(data, dict), "$", "expected a JSON object")
    unknown = set(data) - _TOP_KEYS
    _expect(not unknown, "$", f"unknown keys {sorted(unknown)}")
    _expect(data.get("format") == FORMAT_VERSION, "format",
            f"expected {FORMAT_VERSION}, got {data.get('format')!r}")
    field = data.get("field")
    _expect(field in ("Q", "Qi"), "field", f"expected 'Q' or 'Qi', got {field!r}")
    nvars = data.get("numX")
    _expect(isinstance(nvars, int) and nvars >= 1, "numX",
            "expected a positive integer")
    nforms = data.get("numForms")
    _expect(isinstance(nforms, int) and 1 <= nforms <= nvars, "numForms",
            f"expected an integer in 1..{nvars}")

    raw_forms = data.get("forms")
    _expect(isinstance(raw_forms, list) and len(raw_forms) == nforms, "forms",
            f"expected {nforms} rows")
    rows = []
    for j, row in enumerate(raw_forms):
        _expect(isinstance(row, list) and len(row) == nvars, f"forms[{j}]",
                f"expected {nvars} coefficient lists")
        rows.append([_parse_unipoly(cell, f"forms[{j}][{k}]", field)
                     for k, cell in enumerate(row)])
    forms = LinearForms(rows)
    _expect(forms.rank_generic() == nforms, "forms", "forms not independent")

    raw_ideal = data.get("ideal")
    _expect(isinstance(raw_ideal, list), "ideal", "expected a list of generators")
    ideal = []
    for g, raw_gen in enumerate(raw_ideal):
        where = f"ideal[{g}]"
        _expect(isinstance(raw_gen, list), where, "expected a list of terms")
        terms = []
        for t, raw_term in enumerate(raw_gen):
            tw = f"{where}.terms[{t}]"
            _expect(isinstance(raw_term, dict) and set(raw_term) == {"c", "e"},
                    tw, "expected an object with keys 'c' and 'e'")
            coeff = _parse_unipoly(raw_term["c"], f"{tw}.c", field)
            exps = raw_term["e"]
            _expect(isinstance(exps, list) and len(exps) == nvars, f"{tw}.e",
                    f"expected {nvars} exponents")
            _expect(all(isinstance(e, int) and e >= 0 for e in exps), f"{tw}.e",
                    "exponents must be non-negative integers")
            if coeff:
                terms.append((tuple(exps), RatFunc(coeff)))
        gen = MultiPoly(nvars, terms)
        if gen:
            ideal.append(gen)

    alphas = None
    if data.get("alphas") is not None:
        raw_alphas = data["alphas"]
        _expect(isinstance(raw_alphas, list), "alphas", "expected a list")
        alphas = []
        for k, s in enumerate(raw_alphas):
            try:
                alphas.append(parse_scalar(s, field))
            except ValueError as exc:
                raise ProblemError(f"alphas[{k}]: {exc}") from None

    return Problem(field=field, nvars=nvars, nforms=nforms, forms=forms,
                   ideal=ideal, alphas=alphas)


def parse_problem(path) -> Problem:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ProblemError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ProblemError(
            f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: "
            f"{exc.msg}") from None
    return parse_problem_dict(data)


# -- emission ----------------------------------------------------------


def unipoly_to_strings(p: UniPoly):
    return [scalar_str(c) for c in p.coeffs]


def ratfunc_to_json(r: RatFunc):
    if r.is_polynomial:
        return unipoly_to_strings(r.num)
    return {"num": unipoly_to_strings(r.num), "den": unipoly_to_strings(r.den)}


def mpoly_to_terms(p: MultiPoly, order=None):
    """Terms as JSON objects, largest first under the given or graded-lex order."""
    keyf = order.key if order else (lambda m: (sum(m), m))
    out = []
    for mono in sorted(p.terms, key=keyf, reverse=True):
        coeff = p.terms[mono]
        if isinstance(coeff, RatFunc):
            c = ratfunc_to_json(coeff)
        elif isinstance(coeff, GaussRat):
            c = [scalar_str(coeff)]
        else:
            c = [scalar_str(GaussRat(coeff))]
        out.append({"c": c, "e": list(mono)})
    return out


def problem_to_dict(problem: Problem) -> dict:
    data = {
        "format": FORMAT_VERSION,
        "field": problem.field,
        "numX": problem.nvars,
        "numForms": problem.nforms,
        "forms": [[unipoly_to_strings(c) for c in row]
                  for row in problem.forms.entries],
        "ideal": [
            [{"c": unipoly_to_strings(coeff.num), "e": list(mono)}
             for mono, coeff in sorted(gen.terms.items(),
                                       key=lambda mc: (sum(mc[0]), mc[0]),
                                       reverse=True)]
            for gen in problem.ideal
        ],
    }
    if problem.alphas is not None:
        data["alphas"] = [scalar_str(a) for a in problem.alphas]
    return data


def save_problem(problem: Problem, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(problem_to_dict(problem), fh, indent=2)
        fh.write("\n")
