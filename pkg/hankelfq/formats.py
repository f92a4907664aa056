# -*- coding: utf-8 -*-
"""Text and JSON forms of fields, polynomials, matrices and results

Field:       q=5, 5, q=4 (built-in modulus), q=2^2, q=2^2:1,1,1
Polynomial:  X^2+X+1, 2*X^3+1, coeffs:1,1,1 (ascending codes)
Structured:  H:q=2;n=2;a=1,0,1 and T:q=2;n=2;a=1,0,1

JSON is written with compact separators and a fixed key order so equal
inputs always give byte-identical output.
"""

from __future__ import division

import json
import re

from .field import FiniteField, field_of_order
from .poly import Poly
from .structured import DenseMatrix, HankelMatrix, ToeplitzMatrix
from .correspondence import PadePair, CoprimePair
from .exceptions import ParseError

from typing import Any, Dict, List, Optional, Sequence, Union

_INT_RE = re.compile(r"\d+", re.ASCII)
_FIELD_RE = re.compile(r"^(?:q=)?(\d+)(?:\^(\d+))?(?::(\d+(?:,\d+)*))?$", re.ASCII)
_TERM_RE = re.compile(r"^(?:(\d+)\*?)?X(?:\^(\d+))?$", re.ASCII)

def _parse_int(text: str, what: str) -> int:
    """Nonnegative integer written with ASCII digits"""
    if _INT_RE.fullmatch(text) is None:
        raise ParseError("{} '{}' is not a nonnegative integer".format(what, text))
    return int(text)

def parse_codes(text: str) -> List[int]:
    """Comma-separated nonnegative integers"""
    text = text.strip()
    if not text:
        return []
    return [ _parse_int(t.strip(), "code") for t in text.split(",") ]

def parse_field(text: str) -> FiniteField:
    """Field from its text specification"""
    m = _FIELD_RE.match(text.strip().replace(" ", ""))
    if m is None:
        raise ParseError("'{}' is not a field specification".format(text))
    base = int(m.group(1))
    modulus = parse_codes(m.group(3)) if m.group(3) else None
    if m.group(2) is not None:
        return FiniteField(base, int(m.group(2)), modulus)
    return field_of_order(base, modulus)

def _check_codes(field: FiniteField, codes: Sequence[int], text: str) -> None:
    bad = [ c for c in codes if c >= field.q ]
    if bad:
        raise ParseError("code {} in '{}' is not an element of {}".format(bad[0], text, field))

def parse_poly(text: str, field: FiniteField) -> Poly:
    """Polynomial in symbolic or coeffs: form; codes must lie in [0, q)"""
    s = text.strip().replace(" ", "")
    if s.startswith("coeffs:"):
        codes = parse_codes(s[len("coeffs:"):])
        if not codes:
            raise ParseError("'{}' lists no coefficients".format(text))
        _check_codes(field, codes, text)
        return Poly(field, codes)

    if not s:
        raise ParseError("empty polynomial")
    coeffs: Dict[int, int] = {}
    for term in s.split("+"):
        if _INT_RE.fullmatch(term):
            c, e = int(term), 0
        else:
            m = _TERM_RE.match(term)
            if m is None:
                raise ParseError("cannot read term '{}' of '{}'".format(term, text))
            c = int(m.group(1)) if m.group(1) is not None else 1
            e = int(m.group(2)) if m.group(2) is not None else 1
        _check_codes(field, [c], text)
        coeffs[e] = field.add(coeffs.get(e, 0), c)
    top = max(coeffs)
    return Poly(field, [ coeffs.get(e, 0) for e in range(top + 1) ])

def render_poly(f: Poly) -> str:
    """Canonical coeffs: form; the zero polynomial is coeffs:0"""
    return "coeffs:" + (",".join(str(c) for c in f.coeffs) if f.coeffs else "0")

def render_elements(codes: Sequence[int]) -> str:
    return ",".join(str(int(c)) for c in codes)

def render_dense(M: DenseMatrix, rowsep: str = ";") -> str:
    """Rows of comma-separated codes, e.g. 1,0;0,1"""
    return rowsep.join(render_elements(row) for row in M.tolist())

def render_structured(M: Union[HankelMatrix, ToeplitzMatrix]) -> str:
    return "{}:{};n={};a={}".format(M.kind, M.field.to_text(), M.n, render_elements(M.a))

def parse_structured(text: str, field: Optional[FiniteField] = None) -> Union[HankelMatrix, ToeplitzMatrix]:
    """H:... or T:... string; when field is given the embedded field must agree with it"""
    s = text.strip().replace(" ", "")
    kind, sep, body = s.partition(":")
    if not sep or kind not in ("H", "T"):
        raise ParseError("'{}' does not start with H: or T:".format(text))
    parts: Dict[str, str] = {}
    for item in body.split(";"):
        key, eq, value = item.partition("=")
        if not eq or key in parts:
            raise ParseError("cannot read '{}' in '{}'".format(item, text))
        parts[key] = value
    if set(parts) != { "q", "n", "a" }:
        raise ParseError("'{}' needs exactly the entries q, n and a".format(text))

    embedded = parse_field(parts["q"])
    if field is not None and embedded != field:
        raise ParseError("matrix over {} given where {} was expected".format(embedded.to_text(), field.to_text()))
    n = _parse_int(parts["n"], "order")
    a = parse_codes(parts["a"])
    if n < 1 or len(a) != 2*n - 1:
        raise ParseError("order {} needs {} entries, got {}".format(n, 2*n - 1, len(a)))
    _check_codes(embedded, a, text)
    cls = HankelMatrix if kind == "H" else ToeplitzMatrix
    return cls(embedded, a)

def parse_keyvals(items: Sequence[str], keys: Sequence[str]) -> Dict[str, Any]:
    """Operands such as n=3 r=2 or degrees=2,1,1; degrees reads as a list, the rest as ints"""
    out: Dict[str, Any] = {}
    for item in items:
        key, eq, value = item.partition("=")
        if not eq or key not in keys:
            raise ParseError("unexpected operand '{}', expected {}".format(item, " ".join(k + "=" for k in keys)))
        if key in out:
            raise ParseError("operand {} given twice".format(key))
        if key == "degrees":
            out[key] = parse_codes(value)
            if not out[key]:
                raise ParseError("degrees= needs at least one degree")
        else:
            out[key] = _parse_int(value, "operand " + key)
    missing = [ k for k in keys if k not in out ]
    if missing:
        raise ParseError("missing operand(s): {}".format(", ".join(k + "=" for k in missing)))
    return out

def field_label(field: FiniteField) -> str:
    """Field text without the q= prefix, as used in JSON"""
    return field.to_text()[len("q="):]

def pair_as_dict(p: Union[PadePair, CoprimePair]) -> Dict[str, Any]:
    if isinstance(p, CoprimePair):
        return { "f" : render_poly(p.f), "g" : render_poly(p.g), "n" : p.n, "q" : field_label(p.field) }
    return { "u" : render_poly(p.u), "v" : render_poly(p.v), "n" : p.n, "q" : field_label(p.field) }

def dense_as_dict(M: DenseMatrix) -> Dict[str, Any]:
    return { "q" : field_label(M.field), "rows" : M.rows, "cols" : M.cols, "entries" : M.tolist() }

def structured_as_dict(M: Union[HankelMatrix, ToeplitzMatrix]) -> Dict[str, Any]:
    return { "kind" : M.kind, "q" : field_label(M.field), "n" : M.n, "a" : list(M.a),
            "text" : render_structured(M) }

def dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"))
