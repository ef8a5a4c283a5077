"""Line-oriented JSON serialization for algebra-valued matrices.

One document per matrix:

    {"format": "algdecomp-mat/1",
     "algebra": "cl(4,1)",
     "m": 3, "n": 2,
     "entries": [[0, 0, [["1", 0.25], ["g1g2", -1.5]]], ...]}

Entries are sorted by (row, col) with coefficients in canonical label
order; omitted entries are zero.  Floats round-trip exactly through
``repr``, so write(read(file)) is byte-identical for well-formed files.
"""

from __future__ import annotations

import json
from pathlib import Path

from .core import AlgebraError, AlgMatrix, Element
from .catalog import algebra_from_descriptor

FORMAT = "algdecomp-mat/1"


class MatrixFileError(AlgebraError):
    """Malformed matrix file."""


def matrix_to_dict(X: AlgMatrix) -> dict:
    spec = X.spec
    entries = []
    for i in range(X.m):
        for j in range(X.n):
            coeffs = X.entries[i][j].coeffs
            if not coeffs:
                continue
            entries.append([i, j, [[spec.label_str(lab), coeffs[lab]]
                                   for lab in sorted(coeffs, key=spec.sort_key)]])
    return {"format": FORMAT, "algebra": spec.descriptor,
            "m": X.m, "n": X.n, "entries": entries}


def matrix_from_dict(doc: dict) -> AlgMatrix:
    try:
        if doc["format"] != FORMAT:
            raise MatrixFileError(f"unsupported format {doc.get('format')!r}")
        spec = algebra_from_descriptor(doc["algebra"])
        m, n = int(doc["m"]), int(doc["n"])
        out = AlgMatrix.zeros(spec, m, n)
        for i, j, pairs in doc["entries"]:
            if not (0 <= i < m and 0 <= j < n):
                raise MatrixFileError(f"entry ({i},{j}) outside {m}x{n}")
            coeffs = {}
            for lab_s, c in pairs:
                lab = spec.parse_label(lab_s)
                if lab in coeffs:
                    raise MatrixFileError(f"duplicate label {lab_s!r} at ({i},{j})")
                coeffs[lab] = float(c)
            out.entries[i][j] = Element(spec, coeffs)
        return out
    except MatrixFileError:
        raise
    except (KeyError, TypeError, ValueError, AlgebraError) as exc:
        raise MatrixFileError(f"malformed matrix file: {exc}") from exc


def write_matrix(path, X: AlgMatrix) -> None:
    Path(path).write_text(json.dumps(matrix_to_dict(X)) + "\n")


def read_matrix(path) -> AlgMatrix:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise MatrixFileError(f"not valid JSON: {exc}") from exc
    return matrix_from_dict(doc)
