"""
weilcid store module - survey rows, output formats, the resumable cache and
HDF5 export.

The cache is append-only JSON lines, one record per (p, m, g, coeffs, n).
Reading applies last-writer-wins and skips corrupt lines with a warning, so
an interrupted survey never poisons the next run.
"""

import csv
import io
import json
import os
import sys

import h5py
import numpy as np

WEILCID_VERSION = "1.0.0"

CACHE_DIR_ENV = "WEILCID_CACHE_DIR"
DEFAULT_CACHE_DIR = os.path.join("~", ".cache", "weilcid")

FORMATS = ("json", "csv", "markdown")

H5_FORMAT_ATTR = "weilcid_format"
H5_FORMAT_VALUE = "survey-v1"
H5_VERSION_ATTR = "weilcid_version"


class SurveyRow:
    """One table row: free coefficients, p-rank and the non-monogenic n."""
    __slots__ = ("free_coeffs", "p_rank", "nonmono_n")

    def __init__(self, free_coeffs, p_rank, nonmono_n):
        self.free_coeffs = tuple(free_coeffs)
        self.p_rank = p_rank
        self.nonmono_n = list(nonmono_n)

    def as_dict(self):
        return {
            "coeffs": list(self.free_coeffs),
            "p_rank": self.p_rank,
            "nonmonogenic_n": list(self.nonmono_n),
        }

    def __eq__(self, other):
        if isinstance(other, SurveyRow):
            return self.as_dict() == other.as_dict()
        return NotImplemented

    def __repr__(self):
        return f"SurveyRow({self.free_coeffs}, p_rank={self.p_rank}, n={self.nonmono_n})"


class CacheRecord:
    """Order and verdict for one (polynomial, n) pair."""
    __slots__ = ("p", "m", "g", "coeffs", "n", "ord", "cid", "tool_version")

    def __init__(self, p, m, g, coeffs, n, ord, cid, tool_version=WEILCID_VERSION):
        self.p = p
        self.m = m
        self.g = g
        self.coeffs = tuple(coeffs)
        self.n = n
        self.ord = ord
        self.cid = cid
        self.tool_version = tool_version

    def key(self):
        return (self.p, self.m, self.g, self.coeffs, self.n)

    def to_json(self):
        return json.dumps({
            "p": self.p, "m": self.m, "g": self.g, "coeffs": list(self.coeffs),
            "n": self.n, "ord": self.ord, "cid": self.cid,
            "tool_version": self.tool_version,
        }, sort_keys=True)

    @classmethod
    def from_dict(cls, d):
        return cls(int(d["p"]), int(d.get("m", 1)), int(d["g"]),
                   [int(a) for a in d["coeffs"]], int(d["n"]), int(d["ord"]),
                   bool(d["cid"]), str(d["tool_version"]))

    def __eq__(self, other):
        if isinstance(other, CacheRecord):
            return self.to_json() == other.to_json()
        return NotImplemented

    def __repr__(self):
        return f"CacheRecord({self.to_json()})"


# ---------------------------------------------------------------------------
# Cache
# ---------------------------------------------------------------------------

def default_cache_path(p, m, g):
    base = os.environ.get(CACHE_DIR_ENV) or DEFAULT_CACHE_DIR
    return os.path.join(os.path.expanduser(base), f"survey_p{p}_m{m}_g{g}.jsonl")


def write_records(records, path):
    """Append records to a JSON-lines cache file."""
    path = os.path.expanduser(path)
    parent = os.path.dirname(path)
    if parent:
        os.makedirs(parent, exist_ok=True)
    with open(path, "a", encoding="utf-8") as fh:
        for rec in records:
            fh.write(rec.to_json() + "\n")


def read_records(path, verbose=False):
    """Load a cache file into {key: record}; later lines win."""
    path = os.path.expanduser(path)
    out = {}
    if not os.path.exists(path):
        return out
    skipped = 0
    with open(path, "r", encoding="utf-8", errors="replace") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                rec = CacheRecord.from_dict(json.loads(line))
            except (ValueError, KeyError, TypeError):
                skipped += 1
                print(f"Warning: skipping corrupt cache line {lineno} in {path}",
                      file=sys.stderr)
                continue
            out[rec.key()] = rec
    if verbose and skipped:
        print(f"Note: {skipped} corrupt line(s) ignored in {path}", file=sys.stderr)
    return out


def load_cache(path, verbose=False):
    """Records of the running tool version; stale ones are left to be recomputed."""
    records = read_records(path, verbose=verbose)
    fresh = {k: r for k, r in records.items() if r.tool_version == WEILCID_VERSION}
    if verbose and len(fresh) != len(records):
        print(f"Note: {len(records) - len(fresh)} cache record(s) from another "
              f"version will be recomputed", file=sys.stderr)
    return fresh


def cache_roundtrip(records, path):
    write_records(records, path)
    return list(read_records(path).values())


# ---------------------------------------------------------------------------
# Output formats
# ---------------------------------------------------------------------------

def coeff_names(g):
    return [f"a_{i}" for i in range(2 * g - 1, g - 1, -1)]


def _row_dim(rows, g):
    if rows:
        return len(rows[0].free_coeffs)
    return g or 0


def emit(rows, fmt, g=None, note=None):
    """Render rows as json, csv or markdown text."""
    rows = list(rows)
    if fmt == "json":
        docs = [r.as_dict() for r in rows]
        if note is None:
            return json.dumps(docs)
        return json.dumps({"note": note, "rows": docs})
    dim = _row_dim(rows, g)
    if fmt == "csv":
        buf = io.StringIO()
        if note is not None:
            buf.write(f"# {note}\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(coeff_names(dim) + ["p_rank", "nonmono_n"])
        for r in rows:
            writer.writerow(list(r.free_coeffs) + [r.p_rank, ";".join(map(str, r.nonmono_n))])
        return buf.getvalue()
    if fmt == "markdown":
        header = coeff_names(dim) + ["p-rank", "non-monogenic n"]
        lines = []
        if note is not None:
            lines += [f"> {note}", ""]
        lines.append(" | ".join(header))
        lines.append(" | ".join("---" for _ in header))
        for r in rows:
            cells = [str(a) for a in r.free_coeffs]
            cells += [str(r.p_rank), ", ".join(map(str, r.nonmono_n))]
            lines.append(" | ".join(cells))
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown output format: {fmt}")


# ---------------------------------------------------------------------------
# HDF5 export
# ---------------------------------------------------------------------------

def survey_dtype(g):
    return np.dtype([
        ("coeffs",   np.int64, (g,)),
        ("p_rank",   np.uint8),
        ("n_offset", np.uint64),
        ("n_count",  np.uint32),
    ])


def write_survey_h5(path, rows, p, m, g, n_max, fixed=None, note=None):
    """One compound 'survey' dataset plus the flattened n lists in 'nonmono_n'."""
    rows = list(rows)
    index = np.zeros(len(rows), dtype=survey_dtype(g))
    flat = []
    for i, r in enumerate(rows):
        index[i]["coeffs"] = r.free_coeffs
        index[i]["p_rank"] = r.p_rank
        index[i]["n_offset"] = len(flat)
        index[i]["n_count"] = len(r.nonmono_n)
        flat.extend(r.nonmono_n)
    with h5py.File(os.path.expanduser(path), "w") as h5f:
        h5f.attrs[H5_FORMAT_ATTR] = H5_FORMAT_VALUE
        h5f.attrs[H5_VERSION_ATTR] = WEILCID_VERSION
        h5f.attrs["p"] = np.uint64(p)
        h5f.attrs["m"] = np.uint32(m)
        h5f.attrs["g"] = np.uint32(g)
        h5f.attrs["n_max"] = np.uint64(n_max)
        h5f.attrs["fix"] = json.dumps({str(k): v for k, v in sorted((fixed or {}).items())})
        if note is not None:
            h5f.attrs["hypothesis_note"] = note
        h5f.create_dataset("survey", data=index)
        h5f.create_dataset("nonmono_n", data=np.array(flat, dtype=np.uint64))


def is_survey_h5(path):
    try:
        with h5py.File(path, "r") as h5f:
            return h5f.attrs.get(H5_FORMAT_ATTR) == H5_FORMAT_VALUE
    except (OSError, IOError):
        return False


def read_survey_h5(path):
    """Return (attrs dict, rows) from a file written by write_survey_h5."""
    with h5py.File(os.path.expanduser(path), "r") as h5f:
        attrs = {k: h5f.attrs[k] for k in h5f.attrs}
        index = h5f["survey"][()]
        flat = h5f["nonmono_n"][()]
    rows = []
    for rec in index:
        start = int(rec["n_offset"])
        ns = [int(x) for x in flat[start:start + int(rec["n_count"])]]
        rows.append(SurveyRow([int(a) for a in rec["coeffs"]], int(rec["p_rank"]), ns))
    return attrs, rows
