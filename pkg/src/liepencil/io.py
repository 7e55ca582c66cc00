"""JSON interchange: algebra files, operator files, polynomial seed lists.

All rationals travel as strings ("p" or "p/q", lowest terms) so files
round-trip bit-exactly.  Algebra files store only the upper triangle i < j of
a skew tensor, coefficients keyed by basis index in ascending order.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .exact import RatMatrix, SparsePoly, format_rat, parse_rat
from .tensors import StructureTensor


class ParseError(ValueError):
    """Malformed input file; context names the offending field."""

    def __init__(self, message, context=""):
        self.context = context
        super().__init__("%s [%s]" % (message, context) if context else message)


def _require(doc, key, context):
    if not isinstance(doc, dict) or key not in doc:
        raise ParseError("missing field %r" % key, context)
    return doc[key]


def _rat(text, context):
    try:
        return parse_rat(text)
    except (ValueError, TypeError, ZeroDivisionError):
        raise ParseError("bad rational %r" % (text,), context)


def algebra_to_dict(tensor, metadata=None):
    """Canonical JSON document for a skew structure tensor."""
    if not tensor.is_skew():
        raise ValueError("algebra files hold skew tensors only")
    entries = []
    for i in range(tensor.dim):
        for j in range(i + 1, tensor.dim):
            vec = tensor.bracket(i, j)
            if vec:
                entries.append({
                    "i": i,
                    "j": j,
                    "coeffs": {str(k): format_rat(vec[k]) for k in sorted(vec)},
                })
    doc = {"dim": tensor.dim, "basis": list(tensor.labels), "brackets": entries}
    if metadata:
        doc["metadata"] = {k: metadata[k] for k in sorted(metadata)}
    return doc


def algebra_from_dict(doc):
    """(tensor, metadata) from a parsed algebra document."""
    dim = _require(doc, "dim", "algebra")
    if not isinstance(dim, int) or dim < 0:
        raise ParseError("dim must be a nonnegative integer", "algebra.dim")
    labels = _require(doc, "basis", "algebra")
    if not isinstance(labels, list) or len(labels) != dim:
        raise ParseError("basis must list %d labels" % dim, "algebra.basis")
    table = {}
    for idx, entry in enumerate(_require(doc, "brackets", "algebra")):
        ctx = "brackets[%d]" % idx
        i = _require(entry, "i", ctx)
        j = _require(entry, "j", ctx)
        if not (isinstance(i, int) and isinstance(j, int) and 0 <= i < j < dim):
            raise ParseError("indices must satisfy 0 <= i < j < dim", ctx)
        if (i, j) in table:
            raise ParseError("duplicate pair (%d, %d)" % (i, j), ctx)
        coeffs = _require(entry, "coeffs", ctx)
        vec = {}
        for key, text in coeffs.items():
            try:
                k = int(key)
            except (TypeError, ValueError):
                raise ParseError("bad basis index %r" % (key,), ctx)
            if not 0 <= k < dim:
                raise ParseError("basis index %d out of range" % k, ctx)
            c = _rat(text, ctx)
            if c:
                vec[k] = c
        if vec:
            table[(i, j)] = vec
            table[(j, i)] = {k: -c for k, c in vec.items()}
    tensor = StructureTensor(dim, table, [str(x) for x in labels])
    meta = doc.get("metadata", {})
    if not isinstance(meta, dict):
        raise ParseError("metadata must be an object", "algebra.metadata")
    return tensor, meta


def operator_to_dict(mat):
    return {"dim": mat.nrows,
            "matrix": [[format_rat(mat[i, j]) for j in range(mat.ncols)]
                       for i in range(mat.nrows)]}


def operator_from_dict(doc):
    dim = _require(doc, "dim", "operator")
    if not isinstance(dim, int) or dim < 0:
        raise ParseError("dim must be a nonnegative integer", "operator.dim")
    rows = _require(doc, "matrix", "operator")
    if not isinstance(rows, list) or len(rows) != dim:
        raise ParseError("matrix must have %d rows" % dim, "operator.matrix")
    out = []
    for r, row in enumerate(rows):
        ctx = "operator.matrix[%d]" % r
        if not isinstance(row, list) or len(row) != dim:
            raise ParseError("row must have %d entries" % dim, ctx)
        out.append([_rat(x, ctx) for x in row])
    return RatMatrix(out)


def poly_to_list(p):
    """Terms as [{"exponents": [...], "coeff": "p/q"}], graded order."""
    return [{"exponents": list(e), "coeff": format_rat(c)}
            for e, c in sorted(p.terms.items(), key=lambda t: (sum(t[0]), t[0]))]


def poly_from_list(nvars, data, context="poly"):
    terms = {}
    for idx, term in enumerate(data):
        ctx = "%s[%d]" % (context, idx)
        exps = _require(term, "exponents", ctx)
        if (not isinstance(exps, list) or len(exps) != nvars
                or any(not isinstance(e, int) or e < 0 for e in exps)):
            raise ParseError("exponents must be %d nonnegative integers" % nvars, ctx)
        c = _rat(_require(term, "coeff", ctx), ctx)
        key = tuple(exps)
        terms[key] = terms.get(key, Fraction(0)) + c
    return SparsePoly(nvars, {e: c for e, c in terms.items() if c})


def seeds_to_dict(polys):
    return {"seeds": [poly_to_list(p) for p in polys]}


def seeds_from_dict(doc, nvars):
    data = _require(doc, "seeds", "seeds")
    if not isinstance(data, list):
        raise ParseError("seeds must be a list", "seeds")
    return [poly_from_list(nvars, entry, "seeds[%d]" % i)
            for i, entry in enumerate(data)]


def _read_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fp:
            return json.load(fp)
    except OSError as exc:
        raise ParseError("cannot read %s: %s" % (path, exc.strerror or exc), "file")
    except json.JSONDecodeError as exc:
        raise ParseError("invalid JSON in %s: %s" % (path, exc), "file")


def _write_json(doc, path):
    with open(path, "w", encoding="utf-8") as fp:
        json.dump(doc, fp, indent=2)
        fp.write("\n")


def load_algebra(path):
    return algebra_from_dict(_read_json(path))


def save_algebra(tensor, path, metadata=None):
    _write_json(algebra_to_dict(tensor, metadata), path)


def load_operator(path):
    return operator_from_dict(_read_json(path))


def save_operator(mat, path):
    _write_json(operator_to_dict(mat), path)


def load_seeds(path, nvars):
    return seeds_from_dict(_read_json(path), nvars)


def save_seeds(polys, path):
    _write_json(seeds_to_dict(polys), path)
