"""The ``amub-bundle/1`` JSON file format.

Floats are written with 17 significant digits, which round-trips IEEE
doubles exactly, and keys are emitted in a fixed order, so identical
collections always serialise to identical bytes.
"""
from __future__ import annotations

import json
import math
import os
import tempfile
from pathlib import Path

import numpy as np

from .bases import DEFAULT_TOL, BasisCollection, GammaReport, gamma
from .errors import BundleFormatError

FORMAT_TAG = "amub-bundle/1"


def _num(x: float) -> str:
    x = float(x)
    if not math.isfinite(x):
        raise BundleFormatError(f"non-finite value {x}")
    if x == 0.0:
        x = 0.0  # drop the sign of -0.0
    return format(x, ".17g")


def _encode(obj) -> str:
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _num(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        items = ", ".join(f"{json.dumps(str(k))}: {_encode(v)}" for k, v in sorted(obj.items()))
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_encode(v) for v in obj) + "]"
    raise TypeError(f"cannot encode {type(obj).__name__}")


def _component(z, tag: str) -> str:
    if tag == "C":
        return f"[{_num(z.real)}, {_num(z.imag)}]"
    return _num(z)


def dumps_bundle(coll: BasisCollection, report: GammaReport | None = None) -> str:
    lines = [
        "{",
        f'  "format": {json.dumps(FORMAT_TAG)},',
        f'  "field": {json.dumps(coll.field)},',
        f'  "dimension": {coll.d},',
        f'  "basis_count": {coll.n},',
        f'  "construction": {_encode(coll.construction)},',
        f'  "certificate": {_encode(report.to_dict()) if report is not None else "null"},',
        '  "data": [',
    ]
    for k, basis in enumerate(coll.vectors):
        lines.append("    [")
        for a, vec in enumerate(basis):
            body = ", ".join(_component(z, coll.field) for z in vec)
            lines.append(f"      [{body}]" + ("," if a < coll.d - 1 else ""))
        lines.append("    ]" + ("," if k < coll.n - 1 else ""))
    lines += ["  ]", "}", ""]
    return "\n".join(lines)


def certify(coll: BasisCollection, tol: float | None = None) -> GammaReport | None:
    return gamma(coll, tol) if coll.n >= 2 else None


def write_bundle(coll: BasisCollection, path, report: GammaReport | None = None,
                 certificate: bool = True) -> Path:
    """Atomically write ``coll`` (with a fresh certificate unless given)."""
    if report is None and certificate:
        report = certify(coll)
    text = dumps_bundle(coll, report)
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def parse_bundle(text: str, tol_base: float = DEFAULT_TOL) -> tuple[BasisCollection, dict | None]:
    """Parse bundle text; shape problems raise BundleFormatError, while an
    orthonormality failure surfaces as NotOrthonormal."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BundleFormatError(f"not JSON: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("format") != FORMAT_TAG:
        raise BundleFormatError(f"missing format tag {FORMAT_TAG!r}")
    tag = doc.get("field")
    d, n = doc.get("dimension"), doc.get("basis_count")
    if tag not in ("C", "R") or not isinstance(d, int) or not isinstance(n, int) or d < 1 or n < 1:
        raise BundleFormatError("bad field / dimension / basis_count header")
    data = doc.get("data")
    try:
        arr = np.array(data, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise BundleFormatError(f"ragged or non-numeric data: {exc}") from exc
    want = (n, d, d, 2) if tag == "C" else (n, d, d)
    if arr.shape != want:
        raise BundleFormatError(f"data shape {arr.shape} does not match header {want}")
    vecs = arr[..., 0] + 1j * arr[..., 1] if tag == "C" else arr
    construction = doc.get("construction") or {}
    if not isinstance(construction, dict):
        raise BundleFormatError("construction must be an object")
    coll = BasisCollection(tag, vecs, construction, tol_base)
    return coll, doc.get("certificate")


def read_bundle(path, tol_base: float = DEFAULT_TOL) -> tuple[BasisCollection, dict | None]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise BundleFormatError(f"cannot read {path}: {exc}") from exc
    return parse_bundle(text, tol_base)


def compare_certificate(embedded: dict | None, report: GammaReport | None) -> list[str]:
    """Differences between an embedded certificate and a recomputation."""
    if report is None:
        return [] if embedded is None else ["certificate present for a single basis"]
    if not isinstance(embedded, dict):
        return ["certificate missing"]
    fresh = report.to_dict()
    problems = []
    try:
        if abs(float(embedded["gamma"]) - report.gamma) > report.tol:
            problems.append(f"gamma {embedded['gamma']} != {report.gamma}")
        for key in ("verdict", "witness", "dimension", "basis_count", "field"):
            if embedded[key] != fresh[key]:
                problems.append(f"{key} {embedded[key]!r} != {fresh[key]!r}")
        for t, row in fresh["welch"].items():
            if embedded["welch"][t]["bound"] != row["bound"]:
                problems.append(f"welch t={t} bound differs")
        for t, row in fresh["design"].items():
            if embedded["design"][t]["equal"] != row["equal"]:
                problems.append(f"{t}-design flag differs")
    except (KeyError, TypeError, ValueError) as exc:
        problems.append(f"malformed certificate: {exc!r}")
    return problems

