"""JSON encoding of every public type.

Each top-level document carries ``"format": 1`` and a ``"type"`` tag.  Scalars
are strings in the ``"a/b+c/di"`` form; matrices are
``{"rows": r, "cols": c, "entries": [[...], ...]}``.  Sequences in M are
written as their zero-extended square matrices plus the kernel chain, which
determines the restricted maps exactly.
"""

from __future__ import annotations

import json
from typing import Any

from .action import ProjPoint
from .exterior import LambdaVector, WedgeMap
from .hinge import Hinge, LinearRelation
from .limits import EpsFamily
from .linalg import Matrix, Subspace, restrict
from .monoid import MSeq, PMSeq, RawSeq, pi, projectivize, raw_new
from .scalars import GaussianRational, parse_scalar

FORMAT = 1


class ParseError(ValueError):
    """Malformed input document. ``line``/``column`` are set for JSON syntax errors."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.lineno, e.colno) from None


def dumps(obj, compact: bool = False) -> str:
    if compact:
        return json.dumps(obj, separators=(",", ":"))
    return json.dumps(obj, indent=2)


def _require(doc, key, where):
    if not isinstance(doc, dict) or key not in doc:
        raise ParseError(f"{where}: missing field {key!r}")
    return doc[key]


def _check_header(doc, expected_types, where):
    if not isinstance(doc, dict):
        raise ParseError(f"{where}: expected a JSON object")
    fmt = doc.get("format", FORMAT)
    if fmt != FORMAT:
        raise ParseError(f"{where}: unsupported format {fmt!r}")
    t = doc.get("type")
    if t is not None and t not in expected_types:
        raise ParseError(f"{where}: expected type {'/'.join(expected_types)}, got {t!r}")


# scalars / matrices / subspaces

def scalar_to_json(x: GaussianRational) -> str:
    return str(x)


def scalar_from_json(s, where="scalar") -> GaussianRational:
    if isinstance(s, bool):
        raise ParseError(f"{where}: invalid scalar {s!r}")
    if isinstance(s, int):
        return GaussianRational(s)
    if not isinstance(s, str):
        raise ParseError(f"{where}: scalars must be strings, got {s!r}")
    try:
        return parse_scalar(s)
    except ValueError as e:
        raise ParseError(f"{where}: {e}") from None


def matrix_to_json(m: Matrix) -> dict:
    return {"rows": m.rows, "cols": m.cols,
            "entries": [[scalar_to_json(x) for x in m.row(i)] for i in range(m.rows)]}


def matrix_from_json(doc, where="matrix") -> Matrix:
    rows = _require(doc, "rows", where)
    cols = _require(doc, "cols", where)
    entries = _require(doc, "entries", where)
    if not isinstance(entries, list) or len(entries) != rows:
        raise ParseError(f"{where}: expected {rows} rows of entries")
    flat = []
    for i, r in enumerate(entries):
        if not isinstance(r, list) or len(r) != cols:
            raise ParseError(f"{where}: row {i} must have {cols} entries")
        flat.extend(scalar_from_json(x, f"{where}[{i}]") for x in r)
    return Matrix(rows, cols, flat)


def subspace_to_json(s: Subspace) -> dict:
    return {"ambient_dim": s.ambient_dim, "basis": matrix_to_json(s.basis)}


def subspace_from_json(doc, where="subspace") -> Subspace:
    d = _require(doc, "ambient_dim", where)
    b = matrix_from_json(_require(doc, "basis", where), where + ".basis")
    if b.cols != d:
        raise ParseError(f"{where}: basis has {b.cols} columns, ambient dimension is {d}")
    return Subspace.span(b.to_rows(), d)


# sequences

def rawseq_to_json(a: RawSeq) -> dict:
    return {"format": FORMAT, "type": "rawseq", "n": a.n,
            "terms": [matrix_to_json(t) for t in a.terms]}


def mseq_to_json(a: MSeq) -> dict:
    return {"format": FORMAT, "type": "pmseq" if isinstance(a, PMSeq) else "mseq", "n": a.n,
            "terms": [matrix_to_json(t) for t in a.lifted()],
            "chain": [subspace_to_json(v) for v in a.chain],
            "chain_dims": [v.dim for v in a.chain]}


def sequence_from_json(doc, where="sequence"):
    """RawSeq, MSeq or PMSeq depending on the document (``chain`` present => MSeq)."""
    _check_header(doc, ("rawseq", "mseq", "pmseq"), where)
    n = _require(doc, "n", where)
    terms = _require(doc, "terms", where)
    if not isinstance(terms, list) or not terms:
        raise ParseError(f"{where}: 'terms' must be a nonempty list")
    mats = [matrix_from_json(t, f"{where}.terms[{i}]") for i, t in enumerate(terms)]
    for i, m in enumerate(mats):
        if m.shape != (n, n):
            raise ParseError(f"{where}.terms[{i}]: expected a {n}x{n} matrix")
    if "chain" not in doc:
        return raw_new(mats)
    chain = tuple(subspace_from_json(v, f"{where}.chain[{i}]") for i, v in enumerate(doc["chain"]))
    if len(chain) != len(mats) + 1:
        raise ParseError(f"{where}: chain must have one more entry than terms")
    maps = tuple(restrict(t, v) for t, v in zip(mats, chain))
    cls = PMSeq if doc.get("type") == "pmseq" else MSeq
    out = cls(n, chain, maps)
    out.check()
    return out


def as_mseq(seq) -> MSeq:
    if isinstance(seq, RawSeq):
        return pi(seq)
    return seq


def as_pmseq(seq) -> PMSeq:
    seq = as_mseq(seq)
    return seq if isinstance(seq, PMSeq) else projectivize(seq)


# families, points, hinges, wedge maps

def family_to_json(f: EpsFamily) -> dict:
    return {"format": FORMAT, "type": "family", "n": f.n,
            "coeffs": [matrix_to_json(c) for c in f.coeffs]}


def family_from_json(doc, where="family") -> EpsFamily:
    _check_header(doc, ("family",), where)
    n = _require(doc, "n", where)
    coeffs = _require(doc, "coeffs", where)
    if not isinstance(coeffs, list) or not coeffs:
        raise ParseError(f"{where}: 'coeffs' must be a nonempty list")
    return EpsFamily(n, tuple(matrix_from_json(c, f"{where}.coeffs[{i}]")
                              for i, c in enumerate(coeffs)))


def point_to_json(x: ProjPoint) -> list:
    return [scalar_to_json(c) for c in x.coords]


def point_from_json(doc, where="point") -> ProjPoint:
    if not isinstance(doc, list) or not doc:
        raise ParseError(f"{where}: a point is a nonempty list of scalars")
    coords = [scalar_from_json(c, f"{where}[{i}]") for i, c in enumerate(doc)]
    try:
        return ProjPoint(coords)
    except ValueError as e:
        raise ParseError(f"{where}: {e}") from None


def points_from_json(doc, where="points") -> list[ProjPoint]:
    """Accepts a single point or a list of points."""
    if isinstance(doc, dict):
        doc = _require(doc, "points", where)
    if isinstance(doc, list) and doc and not isinstance(doc[0], list):
        return [point_from_json(doc, where)]
    if not isinstance(doc, list):
        raise ParseError(f"{where}: expected a list of points")
    return [point_from_json(p, f"{where}[{i}]") for i, p in enumerate(doc)]


def hinge_to_json(h: Hinge) -> dict:
    return {"format": FORMAT, "type": "hinge", "n": h.n,
            "relations": [subspace_to_json(p.sub) for p in h.relations]}


def hinge_from_json(doc, where="hinge") -> Hinge:
    """Parses without validating the hinge axioms (callers decide)."""
    _check_header(doc, ("hinge",), where)
    n = _require(doc, "n", where)
    rels = _require(doc, "relations", where)
    if not isinstance(rels, list) or not rels:
        raise ParseError(f"{where}: 'relations' must be a nonempty list")
    out = []
    for i, r in enumerate(rels):
        s = subspace_from_json(r, f"{where}.relations[{i}]")
        if s.ambient_dim != 2 * n:
            raise ParseError(f"{where}.relations[{i}]: ambient dimension must be {2 * n}")
        out.append(LinearRelation(s))
    return Hinge(n, tuple(out))


def wedge_to_json(w: WedgeMap) -> dict:
    return {"format": FORMAT, "type": "wedge", "n": w.n, "k": w.k,
            "matrix": matrix_to_json(w.matrix)}


def wedge_from_json(doc, where="wedge") -> WedgeMap:
    _check_header(doc, ("wedge",), where)
    return WedgeMap(_require(doc, "n", where), _require(doc, "k", where),
                    matrix_from_json(_require(doc, "matrix", where), where + ".matrix"))


def lambda_to_json(v: LambdaVector) -> dict:
    return {"format": FORMAT, "type": "lambda",
            "components": [wedge_to_json(w) for w in v.components]}


def lambda_from_json(doc, where="lambda") -> LambdaVector:
    _check_header(doc, ("lambda",), where)
    comps = _require(doc, "components", where)
    return LambdaVector(tuple(wedge_from_json(c, f"{where}.components[{i}]")
                              for i, c in enumerate(comps)))
