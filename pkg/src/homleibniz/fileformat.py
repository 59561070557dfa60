"""Text file format for algebras (``.alg``).

A JSON document with rationals written as strings ``"p"`` or ``"p/q"`` and
1-based basis indices::

    {
      "format_version": 1,
      "name": "L2",
      "dim": 2,
      "products": [
        {"i": 2, "j": 2, "value": ["1", "0"]}
      ],
      "twist": [
        ["1", "0"],
        ["0", "1"]
      ]
    }

Omitted products are zero. A ``ternary`` block (entries with ``i, j, k``)
marks a Hom-Akivis structure, whose ``products`` are then the bracket.
:func:`serialize` always emits this canonical layout, one entry per line.
"""
from __future__ import annotations

import json
import warnings
from pathlib import Path
from typing import Any, Union

from .akivis import HomAkivisAlgebra
from .algebra import (
    Element,
    HomAlgebra,
    check_multiplicative,
    format_rational,
    parse_rational,
)

FORMAT_VERSION = 1

Loaded = Union[HomAlgebra, HomAkivisAlgebra]


class FormatError(ValueError):
    pass


class MultiplicativityWarning(UserWarning):
    pass


# -- writing ------------------------------------------------------------------

def _vec(v: Element) -> str:
    return json.dumps([format_rational(c) for c in v.coords])


def serialize(obj: Loaded) -> str:
    akivis = isinstance(obj, HomAkivisAlgebra)
    n = obj.dim
    tensor = obj.bracket if akivis else obj.structure
    lines = ["{", f'  "format_version": {FORMAT_VERSION},']
    if obj.name is not None:
        lines.append(f'  "name": {json.dumps(obj.name)},')
    lines.append(f'  "dim": {n},')
    names = None if akivis else obj.basis_names
    if names is not None:
        lines.append(f'  "basis": {json.dumps(list(names))},')

    def block(key: str, entries: list[str], last: bool = False) -> None:
        end = "" if last else ","
        if not entries:
            lines.append(f'  "{key}": []{end}')
            return
        lines.append(f'  "{key}": [')
        lines.extend(f"    {e}," for e in entries[:-1])
        lines.append(f"    {entries[-1]}")
        lines.append(f"  ]{end}")

    block("products", [
        f'{{"i": {i + 1}, "j": {j + 1}, "value": {_vec(tensor[i][j])}}}'
        for i in range(n) for j in range(n) if not tensor[i][j].is_zero()
    ])
    block("twist", [json.dumps([format_rational(c) for c in row]) for row in obj.twist],
          last=not akivis)
    if akivis:
        block("ternary", [
            f'{{"i": {i + 1}, "j": {j + 1}, "k": {k + 1}, "value": {_vec(obj.ternary[i][j][k])}}}'
            for i in range(n) for j in range(n) for k in range(n)
            if not obj.ternary[i][j][k].is_zero()
        ], last=True)
    lines.append("}")
    return "\n".join(lines) + "\n"


def dump(obj: Loaded, path: str | Path) -> None:
    Path(path).write_text(serialize(obj), encoding="utf-8")


# -- reading ------------------------------------------------------------------

def _require(doc: dict, key: str, kind, what: str) -> Any:
    if key not in doc:
        raise FormatError(f"missing field {key!r}")
    val = doc[key]
    if not isinstance(val, kind) or isinstance(val, bool):
        raise FormatError(f"field {key!r} must be {what}")
    return val


def _rationals(values: Any, n: int, where: str) -> tuple:
    if not isinstance(values, list):
        raise FormatError(f"{where}: expected a list of {n} rationals")
    if len(values) != n:
        raise FormatError(f"{where}: expected {n} entries, got {len(values)}")
    try:
        return tuple(parse_rational(v) for v in values)
    except ValueError as exc:
        raise FormatError(f"{where}: {exc}") from None


def _index(entry: dict, key: str, n: int, where: str) -> int:
    v = entry.get(key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise FormatError(f"{where}: index {key!r} must be an integer")
    if not 1 <= v <= n:
        raise FormatError(f"{where}: index {key}={v} out of range 1..{n}")
    return v - 1


def _entries(doc: dict, key: str, n: int, idx_keys: str) -> dict[tuple, tuple]:
    raw = _require(doc, key, list, "a list")
    out = {}
    for pos, entry in enumerate(raw):
        where = f"{key}[{pos}]"
        if not isinstance(entry, dict):
            raise FormatError(f"{where}: expected an object")
        idx = tuple(_index(entry, k, n, where) for k in idx_keys)
        if idx in out:
            raise FormatError(f"{where}: duplicate entry for indices {tuple(i + 1 for i in idx)}")
        out[idx] = _rationals(entry.get("value"), n, where)
    return out


def parse(text: str, strict: bool = False) -> Loaded:
    """Parse a document into a HomAlgebra or HomAkivisAlgebra.

    A non-multiplicative twist is accepted with a MultiplicativityWarning,
    or rejected when ``strict``.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise FormatError("top level must be an object")
    version = _require(doc, "format_version", int, "an integer")
    if version != FORMAT_VERSION:
        raise FormatError(f"unsupported format_version {version}")
    n = _require(doc, "dim", int, "an integer")
    if n < 1:
        raise FormatError(f"dim must be positive, got {n}")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise FormatError("field 'name' must be a string")
    basis = doc.get("basis")
    if basis is not None:
        if not isinstance(basis, list) or len(basis) != n or not all(isinstance(b, str) for b in basis):
            raise FormatError(f"field 'basis' must be a list of {n} names")
        basis = tuple(basis)

    products = _entries(doc, "products", n, "ij")
    rows = _require(doc, "twist", list, "a matrix")
    if len(rows) != n:
        raise FormatError(f"twist: expected {n} rows, got {len(rows)}")
    twist = tuple(_rationals(r, n, f"twist[{i}]") for i, r in enumerate(rows))
    zero = Element.zero(n)
    tensor = tuple(
        tuple(Element(products[(i, j)]) if (i, j) in products else zero for j in range(n))
        for i in range(n)
    )

    if "ternary" in doc:
        ternary_entries = _entries(doc, "ternary", n, "ijk")
        ternary = tuple(
            tuple(
                tuple(Element(ternary_entries.get((i, j, k), zero.coords)) for k in range(n))
                for j in range(n)
            )
            for i in range(n)
        )
        try:
            return HomAkivisAlgebra(n, tensor, ternary, twist, name=name)
        except ValueError as exc:
            raise FormatError(str(exc)) from None

    A = HomAlgebra.unchecked(n, tensor, twist, name=name, basis_names=basis)
    report = check_multiplicative(A)
    if not report.holds:
        i, j = report.witness.data
        msg = f"twist is not multiplicative on the pair (e{i + 1}, e{j + 1})"
        if strict:
            raise FormatError(msg)
        warnings.warn(msg, MultiplicativityWarning, stacklevel=2)
    return A


def load(path: str | Path, strict: bool = False) -> Loaded:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    return parse(text, strict=strict)


def parse_matrix(text: str, n: int | None = None) -> tuple:
    """A matrix file: a JSON list of rows of rational strings."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if isinstance(doc, dict):
        doc = doc.get("matrix")
    if not isinstance(doc, list) or not doc:
        raise FormatError("matrix file must hold a non-empty list of rows")
    size = len(doc) if n is None else n
    if len(doc) != size:
        raise FormatError(f"matrix: expected {size} rows, got {len(doc)}")
    return tuple(_rationals(r, size, f"matrix[{i}]") for i, r in enumerate(doc))
