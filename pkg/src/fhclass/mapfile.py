"""Text persistence for harmonic polynomial maps.

A map file is a JSON object::

    {
      "format": "fhclass-map",
      "version": 1,
      "degree": N,
      "a": [[re, im], ...],     # a_1 .. a_N, a_1 must be [1, 0]
      "b": [[re, im], ...],     # b_1 .. b_N
      "metadata": {"key": "value", ...}
    }

Floats are written with ``repr`` precision, so a write/read cycle
reproduces every coefficient bit for bit.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .harmap import HarmonicPolyMap
from .series import COEFF_TOL

FORMAT_NAME = "fhclass-map"
FORMAT_VERSION = 1


class MapFileError(ValueError):
    pass


def to_dict(f: HarmonicPolyMap, metadata: dict | None = None) -> dict:
    return {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "degree": f.degree,
        "a": [[float(c.real), float(c.imag)] for c in f.a],
        "b": [[float(c.real), float(c.imag)] for c in f.b],
        "metadata": {str(k): str(v) for k, v in (metadata or {}).items()},
    }


def dumps(f: HarmonicPolyMap, metadata: dict | None = None) -> str:
    """JSON text with one ``[re, im]`` pair per line."""
    d = to_dict(f, metadata)
    lines = ["{"]
    for key in ("format", "version", "degree"):
        lines.append(f"  {json.dumps(key)}: {json.dumps(d[key])},")
    for key in ("a", "b"):
        pairs = ",\n".join(f"    {json.dumps(p)}" for p in d[key])
        lines.append(f"  {json.dumps(key)}: [\n{pairs}\n  ],")
    lines.append(f"  \"metadata\": {json.dumps(d['metadata'], sort_keys=True)}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _pairs(raw, name, degree):
    if not isinstance(raw, list) or len(raw) != degree:
        raise MapFileError(f"'{name}' must be a list of {degree} [re, im] pairs")
    out = np.empty(degree, dtype=complex)
    for k, pair in enumerate(raw):
        if (not isinstance(pair, list) or len(pair) != 2
                or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)):
            raise MapFileError(f"'{name}[{k}]' is not a numeric [re, im] pair")
        if not all(math.isfinite(x) for x in pair):
            raise MapFileError(f"'{name}[{k}]' is not finite")
        out[k] = complex(pair[0], pair[1])
    return out


def from_dict(data) -> tuple[HarmonicPolyMap, dict]:
    if not isinstance(data, dict):
        raise MapFileError("map file must hold a JSON object")
    if data.get("format", FORMAT_NAME) != FORMAT_NAME:
        raise MapFileError(f"unknown format {data.get('format')!r}")
    if data.get("version") != FORMAT_VERSION:
        raise MapFileError(f"unsupported version {data.get('version')!r}")
    degree = data.get("degree")
    if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
        raise MapFileError("'degree' must be a positive integer")
    a = _pairs(data.get("a"), "a", degree)
    b = _pairs(data.get("b"), "b", degree)
    if abs(a[0] - 1) > COEFF_TOL:
        raise MapFileError(f"a[1] must be (1, 0), got ({a[0].real}, {a[0].imag})")
    meta = data.get("metadata", {})
    if not isinstance(meta, dict):
        raise MapFileError("'metadata' must be an object")
    return HarmonicPolyMap.from_coeffs(a, b), meta


def loads(text: str) -> tuple[HarmonicPolyMap, dict]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MapFileError(f"not valid JSON: {exc}") from None
    return from_dict(data)


def read(path) -> tuple[HarmonicPolyMap, dict]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise MapFileError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)


def write(path, f: HarmonicPolyMap, metadata: dict | None = None):
    Path(path).write_text(dumps(f, metadata))
