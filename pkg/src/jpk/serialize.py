"""JSON / LaTeX / text renderings and the on-disk coefficient cache."""
from __future__ import annotations

import json
import os
import tempfile

from .partitions import SymPoly, format_partition, format_sympoly
from .scalars import coeff_parts, latex_drat

CACHE_FORMAT_VERSION = 1


class CacheMismatch(ValueError):
    pass


def sympoly_to_json(f: SymPoly, field, jack_basis=None) -> dict:
    out = {
        "r": f.r,
        "basis": "m",
        "terms": [{"partition": list(k), "coeff": field.to_json(c)} for k, c in f.sorted_terms()],
    }
    if jack_basis is not None:
        out["jack_basis"] = jack_basis
    return out


def sympoly_from_json(obj, field) -> SymPoly:
    r = obj["r"]
    return SymPoly._raw(r, {tuple(t["partition"]): field.from_json(t["coeff"])
                            for t in obj["terms"]})


def sympoly_latex(f: SymPoly) -> str:
    if f.is_zero():
        return "0"
    text = ""
    for k, v in f.sorted_terms():
        mono = "m_{(" + format_partition(k) + ")}"
        c = latex_drat(v)
        neg = c.startswith("-") and not any(ch in c[1:] for ch in "+-")
        if neg:
            c = c[1:]
        elif not c.startswith("\\frac") and ("+" in c or "-" in c[1:]):
            c = f"\\left({c}\\right)"
        body = mono if c == "1" else f"{c} {mono}"
        if not text:
            text = ("-" if neg else "") + body
        else:
            text += (" - " if neg else " + ") + body
    return text


def sympoly_text(f: SymPoly) -> str:
    return format_sympoly(f)


def kernel_to_json(kernel, field) -> dict:
    return {
        "r": kernel.r,
        "N": kernel.N,
        "terms": [{"u_partition": list(m), "z_poly": sympoly_to_json(f, field)}
                  for m, f in sorted(kernel.terms.items(), key=lambda t: (sum(t[0]), t[0]))],
    }


def scalar_text(c) -> str:
    neg, s = coeff_parts(c)
    return ("-" if neg else "") + s


# ---------------------------------------------------------------------------
# cache
# ---------------------------------------------------------------------------


def _header(r, field):
    return {"format_version": CACHE_FORMAT_VERSION, "r": r, "d_mode": field.key}


def store_cache(path, table):
    """Write the Jack and interpolation Jack memo tables of ``table``."""
    field = table.field
    it = table.interp()
    doc = dict(_header(table.r, field))
    doc["jack"] = [sympoly_to_json(f, field, jack_basis=list(m))
                   for m, f in sorted(table.snapshot()["P"].items())]
    doc["ijack"] = [sympoly_to_json(f, field, jack_basis=list(m))
                    for m, f in sorted(it.snapshot().items())]
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        json.dump(doc, fh, sort_keys=True)
    os.replace(tmp, path)


def load_cache(path, table) -> bool:
    """Warm ``table`` from ``path``.  False on a cold start (no file)."""
    if not os.path.exists(path):
        return False
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise CacheMismatch(f"cache {path} is not valid JSON") from exc
    want = _header(table.r, table.field)
    got = {k: doc.get(k) for k in want}
    if got != want:
        raise CacheMismatch(f"cache {path} has {got}, expected {want}")
    field = table.field
    table.restore({tuple(e["jack_basis"]): sympoly_from_json(e, field) for e in doc["jack"]})
    table.interp().restore({tuple(e["jack_basis"]): sympoly_from_json(e, field)
                            for e in doc["ijack"]})
    return True
