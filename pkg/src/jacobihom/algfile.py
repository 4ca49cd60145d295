"""Reading and writing algebra description files.

An algebra file is a JSON document::

    {
      "name": "k[eps]",                      (optional)
      "labels": ["1", "eps"],
      "unit": {"1": "1"},
      "products": [
        {"left": "1", "right": "1", "result": {"1": "1"}},
        {"left": "1", "right": "eps", "result": {"eps": "1"}},
        {"left": "eps", "right": "1", "result": {"eps": "1"}}
      ]
    }

Coefficients are rational strings ``"p/q"`` (integers may be given as JSON
numbers).  Products that are not listed are zero.  Every problem is reported
as an :class:`AlgebraFileError` naming the line/column (for JSON syntax) or
the path inside the document (for content).
"""

import json
from fractions import Fraction

from .algebra import AlgebraError, LieAlgebraData, _action_table, build_algebra


class AlgebraFileError(ValueError):
    def __init__(self, source, location, message):
        self.source = source
        self.location = location
        super().__init__(f"{source}: {location}: {message}")


def _coefficient(x, source, where):
    if isinstance(x, bool):
        raise AlgebraFileError(source, where, "coefficient must be a rational, not a boolean")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            pass
    raise AlgebraFileError(source, where, f"cannot read {x!r} as a rational 'p/q'")


def _vector(obj, index, source, where):
    if not isinstance(obj, dict):
        raise AlgebraFileError(source, where, "expected an object mapping labels to coefficients")
    out = {}
    for lab, c in obj.items():
        if lab not in index:
            raise AlgebraFileError(source, f"{where}.{lab}", f"unknown label {lab!r}")
        x = _coefficient(c, source, f"{where}.{lab}")
        if x:
            out[index[lab]] = out.get(index[lab], 0) + x
    return out


def _load_json(text, source):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraFileError(source, f"line {exc.lineno}, column {exc.colno}", exc.msg) from None
    if not isinstance(doc, dict):
        raise AlgebraFileError(source, "line 1, column 1", "top level must be an object")
    return doc


def _labels(doc, source):
    labels = doc.get("labels")
    if not isinstance(labels, list) or not labels:
        raise AlgebraFileError(source, "labels", "expected a non-empty list of strings")
    for i, lab in enumerate(labels):
        if not isinstance(lab, str) or not lab:
            raise AlgebraFileError(source, f"labels[{i}]", "labels must be non-empty strings")
    if len(set(labels)) != len(labels):
        dup = next(lab for lab in labels if labels.count(lab) > 1)
        raise AlgebraFileError(source, "labels", f"duplicate label {dup!r}")
    return labels


def _table(doc, key, index, source):
    rows = doc.get(key, [])
    if not isinstance(rows, list):
        raise AlgebraFileError(source, key, "expected a list of {left, right, result} records")
    constants = {}
    for n, rec in enumerate(rows):
        where = f"{key}[{n}]"
        if not isinstance(rec, dict):
            raise AlgebraFileError(source, where, "expected an object")
        missing = [f for f in ("left", "right", "result") if f not in rec]
        if missing:
            raise AlgebraFileError(source, where, f"missing field {missing[0]!r}")
        for side in ("left", "right"):
            if not isinstance(rec[side], str) or rec[side] not in index:
                raise AlgebraFileError(source, f"{where}.{side}", f"unknown label {rec[side]!r}")
        pair = (index[rec["left"]], index[rec["right"]])
        if pair in constants:
            raise AlgebraFileError(source, where,
                                   f"product {rec['left']}*{rec['right']} given twice")
        constants[pair] = _vector(rec["result"], index, source, f"{where}.result")
    return constants


def parse_algebra(text, source="<string>"):
    """Parse an algebra document into a verified ``StructureAlgebra``."""
    doc = _load_json(text, source)
    labels = _labels(doc, source)
    index = {lab: i for i, lab in enumerate(labels)}
    if "unit" not in doc:
        raise AlgebraFileError(source, "unit", "missing field 'unit'")
    unit = _vector(doc["unit"], index, source, "unit")
    constants = _table(doc, "products", index, source)
    name = doc.get("name")
    try:
        return build_algebra(labels, constants, unit, name=name if isinstance(name, str) else None)
    except AlgebraError as exc:
        raise AlgebraFileError(source, "products", str(exc)) from None


def parse_lie(text, source="<string>"):
    """Parse ``{labels, brackets: [{left, right, result}]}`` into a Lie algebra.

    Brackets that are not listed are zero unless their reverse is listed, in
    which case antisymmetry fills them in.
    """
    doc = _load_json(text, source)
    labels = _labels(doc, source)
    index = {lab: i for i, lab in enumerate(labels)}
    constants = _table(doc, "brackets", index, source)
    for (i, j), v in list(constants.items()):
        if (j, i) not in constants:
            constants[(j, i)] = {k: -x for k, x in v.items()}
    n = len(labels)
    table = _action_table(n, n, lambda i, j: constants.get((i, j), {}))
    try:
        return LieAlgebraData(labels, table,
                              name=doc.get("name") if isinstance(doc.get("name"), str) else None)
    except AlgebraError as exc:
        raise AlgebraFileError(source, "brackets", str(exc)) from None


def is_lie_document(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError:
        return False
    return isinstance(doc, dict) and "brackets" in doc


def read_algebra(path):
    with open(path, encoding="utf-8") as fh:
        return parse_algebra(fh.read(), source=str(path))


def _fmt(x):
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def dump_algebra(a):
    """Canonical document text for ``a``; ``parse_algebra`` inverts it."""
    def vec(v):
        return {a.labels[k]: _fmt(Fraction(x)) for k, x in sorted(v.items()) if x}
    products = []
    for i in range(a.dim):
        for j in range(a.dim):
            res = dict(a.table[i][j])
            if any(res.values()):
                products.append({"left": a.labels[i], "right": a.labels[j], "result": vec(res)})
    doc = {"name": a.name, "labels": list(a.labels), "unit": vec(a.unit), "products": products}
    return json.dumps(doc, indent=1) + "\n"
