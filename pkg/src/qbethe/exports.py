"""Deterministic serializations: Hamiltonians, state tables, Bethe records, relation reports."""
from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import numpy as np

from .params import ModelParams
from .states import enumerate_states, weight


def _encode(obj, depth):
    pad = "  " * (depth + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_encode(v, depth + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * depth + "}"
    if isinstance(obj, (list, tuple)):
        if all(not isinstance(v, (dict, list, tuple)) for v in obj):
            return json.dumps(list(obj))
        return "[\n" + ",\n".join(pad + _encode(v, depth + 1) for v in obj) + "\n" + "  " * depth + "]"
    return json.dumps(obj)


def dumps_json(obj):
    """Stable JSON text: producer key order, scalar arrays on one line, trailing newline."""
    return _encode(obj, 0) + "\n"


def _csv_text(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def matrix_entries(mat, atol=0.0):
    """Nonzero entries as [i, j, re, im], row-major."""
    mat = np.asarray(mat)
    out = []
    for i, j in zip(*np.nonzero(np.abs(mat) > atol)):
        v = complex(mat[i, j])
        out.append([int(i), int(j), float(v.real), float(v.imag)])
    return out


def hamiltonian_record(n, m, p: ModelParams, mat):
    return {"n": n, "m": m, "dim": int(np.asarray(mat).shape[0]), "params": p.to_dict(), "entries": matrix_entries(mat)}


def hamiltonian_text(record, fmt):
    if fmt == "json":
        return dumps_json(record)
    if fmt == "coo":
        return "".join(f"{i} {j} {re!r} {im!r}\n" for i, j, re, im in record["entries"])
    if fmt == "csv":
        return _csv_text(["i", "j", "re", "im"], [[i, j, repr(re), repr(im)] for i, j, re, im in record["entries"]])
    raise ValueError(f"unsupported format {fmt!r}")


def parse_coo(text, dim):
    """Inverse of the coordinate-list format."""
    mat = np.zeros((dim, dim), dtype=complex)
    for line in text.splitlines():
        if line.strip():
            i, j, re, im = line.split()
            mat[int(i), int(j)] = complex(float(re), float(im))
    return mat


def states_records(n, m, p: ModelParams):
    return [{"parts": list(lam), "weight": float(weight(lam, p, m))} for lam in enumerate_states(n, m, as_tuples=True)]


def states_text(records, fmt):
    if fmt == "json":
        return dumps_json(records)
    if fmt == "csv":
        rows = [[k, " ".join(map(str, r["parts"])), repr(r["weight"])] for k, r in enumerate(records)]
        return _csv_text(["index", "parts", "weight"], rows)
    raise ValueError(f"states support json or csv, not {fmt!r}")


def bethe_text(records, fmt):
    if fmt == "json":
        return dumps_json(records)
    if fmt == "csv":
        n = len(records[0]["xi"]) if records else 0
        header = ["mu", "grad_norm", "iterations", "bae_max"] + [f"xi_{j + 1}" for j in range(n)] + [f"E_{r + 1}" for r in range(n)]
        rows = []
        for r in records:
            rows.append(
                [" ".join(map(str, r["mu"])), repr(r["grad_norm"]), r["iterations"], repr(max(r["bae_residual"], default=0.0))]
                + [repr(x) for x in r["xi"]]
                + [repr(e) for e in r["E"]]
            )
        return _csv_text(header, rows)
    raise ValueError(f"Bethe records support json or csv, not {fmt!r}")


def relation_records(results):
    """Relation-check results as [{"relation", "max_residual", "trials"}]."""
    return [r.to_record() for r in results]


def write_text(text, path):
    """Write to ``path``, or return the text when path is None."""
    if path is None:
        return text
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise OSError(exc.errno, f"cannot write {path}: {exc.strerror}") from exc
    return text
