#!/usr/bin/env python3
"""
<keywords>
python, weil polynomials, abelian varieties, frobenius, common index divisor, monogenic, division field
</keywords>
<description>
Survey irreducible Weil p-polynomials and list the n for which p is a common
index divisor of the n-division field of an abelian variety with that
reduction, or inspect a single polynomial.

  - survey:      every irreducible Weil p^m-polynomial of dimension g, with the
                 non-monogenic n below a bound, as json, csv or markdown.
  - analyze:     Weil/irreducibility status, p-rank, discriminants and the
                 splitting report of p for a list of moduli.
  - gsp-order:   |GSp_2g(Z/nZ)|.
  - irred-count: number of monic irreducible polynomials of degree m over F_p.
  - matrix:      the Frobenius (or Verschiebung) matrix, optionally mod n.
  - tables:      re-run the bundled reference surveys and diff the rows.

Usage Examples:

  # Dimension 2 over F_2, n < 1000, as a markdown table:
  weilcid survey --p 2 --dim 2 --n-max 1000 --format markdown

  # Dimension 3 over F_3 with a5 = a4 = 0, resumable, four worker processes:
  weilcid survey --p 3 --dim 3 --n-max 200 --fix a5=0,a4=0 --cache --workers 4

  # Splitting of 3 in the 2-, 5- and 10-division fields for x^4 + 9:
  weilcid analyze --p 3 0 0 --n 2 5 10

  # Check every bundled reference table:
  weilcid tables -v
</description>
<seealso>
</seealso>
"""

import argparse
import concurrent.futures
import json
import math
import os
import sys
import time

from weilcid_exact import (
    InvariantViolation, factorize, is_probable_prime, is_square, newton_polygon,
    discriminant, set_factor_seed,
)
from weilcid_fixtures import REFERENCE_TABLES
from weilcid_frobenius import (
    basis, frobenius_matrix, guaranteed_applicable,
    order_discriminant, reduce_mod, verschiebung_matrix,
)
from weilcid_mono import (
    HYPOTHESIS_NOTE, gsp_order, irred_count, monogenic_degree_bound, splitting_report,
)
from weilcid_store import (
    FORMATS, WEILCID_VERSION, CacheRecord, SurveyRow, default_cache_path, emit,
    load_cache, write_records, write_survey_h5,
)
from weilcid_weil import (
    WeilPoly, enumerate_weil, from_free_coeffs, is_irreducible, is_weil, p_rank,
    validate_weil,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVARIANT = 2
EXIT_TABLE_MISMATCH = 3


class ProgressBar:
    """Single-phase terminal progress bar counting polynomials surveyed."""
    def __init__(self, verbose):
        self.is_tty = sys.stderr.isatty() and verbose
        self.label = None
        self.total = 0
        self.current = 0
        self.recent = []
        self.prev_lines = 0

    def start(self, label, total):
        self.label = label
        self.total = total
        self.current = 0
        self.recent = []
        if self.is_tty:
            self._render()

    def update(self, item):
        self.current += 1
        self.recent.append(item)
        if len(self.recent) > 5:
            self.recent.pop(0)
        if self.is_tty:
            self._render()

    def _render(self):
        if self.prev_lines > 0:
            sys.stderr.write(f'\x1b[{self.prev_lines}A')
        lines = 0
        bar_width = 40
        if self.label and self.total > 0:
            pct = self.current * 100.0 / self.total
            filled = int(bar_width * self.current / self.total)
            empty = bar_width - filled
            sys.stderr.write(f'\x1b[2K  {self.label:12s} [{"█" * filled}{"░" * empty}] '
                             f'{pct:.1f}% ({self.current} / {self.total})\n')
            lines += 1
            for item in self.recent:
                sys.stderr.write(f'\x1b[2K    ✓ {item}\n')
                lines += 1
        self.prev_lines = lines
        sys.stderr.flush()

    def finish(self):
        if not self.is_tty or self.prev_lines == 0:
            return
        sys.stderr.write(f'\x1b[{self.prev_lines}A')
        for _ in range(self.prev_lines):
            sys.stderr.write('\x1b[2K\n')
        sys.stderr.write(f'\x1b[{self.prev_lines}A')
        sys.stderr.flush()
        self.prev_lines = 0


# ---------------------------------------------------------------------------
# Configuration
# ---------------------------------------------------------------------------

def parse_fix(s):
    """Parse 'a5=0,a4=0' into {5: 0, 4: 0}."""
    out = {}
    if not s:
        return out
    for part in s.split(','):
        part = part.strip()
        if not part:
            continue
        name, sep, value = part.partition('=')
        name = name.strip().lower()
        if not sep or not name.startswith('a') or not name[1:].isdigit():
            raise ValueError(f"invalid --fix entry '{part}' (expected aK=V)")
        try:
            out[int(name[1:])] = int(value)
        except ValueError:
            raise ValueError(f"invalid --fix value in '{part}'")
    return out


class SurveyConfig:
    __slots__ = ("p", "m", "g", "n_max", "fixed", "output_format", "cache_path",
                 "workers", "seed", "verbose")

    def __init__(self, p, g, n_max, m=1, fixed=None, output_format="json",
                 cache_path=None, workers=1, seed=0, verbose=False):
        self.p = p
        self.m = m
        self.g = g
        self.n_max = n_max
        self.fixed = dict(fixed or {})
        self.output_format = output_format
        self.cache_path = cache_path
        self.workers = workers
        self.seed = seed
        self.verbose = verbose

    def validate(self):
        if not is_probable_prime(self.p):
            raise ValueError(f"--p must be prime, got {self.p}")
        if self.m < 1:
            raise ValueError("--m must be >= 1")
        if self.g < 2:
            raise ValueError("--dim must be >= 2")
        if self.n_max < 2:
            raise ValueError("--n-max must be >= 2")
        if self.workers < 1:
            raise ValueError("--workers must be >= 1")
        if self.output_format not in FORMATS:
            raise ValueError(f"unknown format '{self.output_format}'")
        for i in self.fixed:
            if not self.g <= i <= 2 * self.g - 1:
                raise ValueError(f"--fix a{i}: free coefficients are a{self.g}..a{2 * self.g - 1}")
        return self

    @property
    def q(self):
        return self.p ** self.m


def moduli(p, n_max):
    """Every n in [2, n_max) prime to p, composites included."""
    return [n for n in range(2, n_max) if math.gcd(n, p) == 1]


# ---------------------------------------------------------------------------
# Survey
# ---------------------------------------------------------------------------

def survey_polynomial(unit):
    """Orders and verdicts for one polynomial. Unit of work for the process pool."""
    p, m, g, free, ns, seed = unit
    set_factor_seed(seed)
    w = WeilPoly.from_candidate(from_free_coeffs(p, m, g, free))
    out = []
    for n in ns:
        report = splitting_report(w, n)
        out.append((n, report.inertia_degree, report.cid))
    return tuple(free), out


def plan_survey(cfg):
    """Enumerate polynomials and split their moduli into cached and missing."""
    polys = list(enumerate_weil(cfg.p, cfg.g, cfg.m, cfg.fixed))
    ns = moduli(cfg.p, cfg.n_max)
    cache = load_cache(cfg.cache_path, verbose=cfg.verbose) if cfg.cache_path else {}
    known = {w.free_coeffs: {} for w in polys}
    work = []
    for w in polys:
        missing = []
        for n in ns:
            rec = cache.get((cfg.p, cfg.m, cfg.g, w.free_coeffs, n))
            if rec is None:
                missing.append(n)
            else:
                known[w.free_coeffs][n] = rec.cid
        if missing:
            work.append((cfg.p, cfg.m, cfg.g, w.free_coeffs, missing, cfg.seed))
    return polys, known, work


def record_results(cfg, known, free, results):
    for n, _, cid in results:
        known[free][n] = cid
    if cfg.cache_path:
        write_records([CacheRecord(cfg.p, cfg.m, cfg.g, free, n, order, cid)
                       for n, order, cid in results], cfg.cache_path)


def assemble_rows(polys, known):
    return [SurveyRow(w.free_coeffs, p_rank(w),
                      sorted(n for n, cid in known[w.free_coeffs].items() if cid))
            for w in polys]


def survey(cfg):
    """Rows in lexicographic order of free coefficients; independent of cfg.workers."""
    cfg.validate()
    set_factor_seed(cfg.seed)
    t0 = time.time()
    polys, known, work = plan_survey(cfg)
    if cfg.verbose:
        print(f"Polynomials: {len(polys)}, to compute: {len(work)}", file=sys.stderr)

    progress = ProgressBar(cfg.verbose)
    progress.start("Surveying", len(work))
    verbose_poly = cfg.verbose and not progress.is_tty

    def _done(free, results):
        record_results(cfg, known, free, results)
        progress.update(str(free))
        if verbose_poly:
            print(f"  {free}: {sum(1 for _, _, c in results if c)} non-monogenic n",
                  file=sys.stderr)

    if cfg.workers <= 1:
        for unit in work:
            _done(*survey_polynomial(unit))
    else:
        with concurrent.futures.ProcessPoolExecutor(max_workers=cfg.workers) as executor:
            futures = [executor.submit(survey_polynomial, unit) for unit in work]
            for future in concurrent.futures.as_completed(futures):
                _done(*future.result())
    progress.finish()

    if cfg.verbose:
        print(f"Survey completed in {time.time() - t0:.2f} seconds.", file=sys.stderr)
    return assemble_rows(polys, known)


# ---------------------------------------------------------------------------
# Single polynomial
# ---------------------------------------------------------------------------

def analyze(p, m, g, free_coeffs, n_list):
    """Metadata and per-n splitting reports for one polynomial."""
    c = from_free_coeffs(p, m, g, free_coeffs)
    out = {
        "p": p, "m": m, "g": g, "coeffs": list(c.free_coeffs),
        "poly": str(c.poly), "is_weil": is_weil(c),
    }
    if not out["is_weil"]:
        out["status"] = "not a Weil polynomial"
        return out
    w = validate_weil(c)
    if is_square(w.q):
        out["status"] = "irreducibility is not decided for square q"
        return out
    out["is_irreducible"] = is_irreducible(w)
    if not out["is_irreducible"]:
        out["status"] = "reducible"
        return out
    out["p_rank"] = p_rank(w)
    out["newton_polygon"] = [[str(s), n] for s, n in newton_polygon(w.poly, p).segments]
    out["disc_f"] = discriminant(w.poly)
    out["order_discriminant"] = order_discriminant(w)
    primes = sorted({l for n in n_list if n >= 2 for l in factorize(n).primes() if l != p})
    out["applicable"] = {str(l): guaranteed_applicable(w, l) for l in primes}
    reports = []
    for n in n_list:
        try:
            rep = splitting_report(w, n)
        except ValueError as e:
            reports.append({"n": n, "error": str(e)})
            continue
        entry = rep.as_dict()
        entry["monogenic_degree_bound"] = monogenic_degree_bound(rep.inertia_degree, p)
        reports.append(entry)
    out["reports"] = reports
    out["status"] = "ok"
    return out


def matrix_lines(w, n=None, verschiebung=False):
    if n is not None and n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    labels = basis(w.g)
    mats = [("sigma", frobenius_matrix(w))]
    if verschiebung:
        mats.append(("V", verschiebung_matrix(w)))
    lines = []
    for name, mat in mats:
        rows = reduce_mod(mat, n).tolist() if n is not None else mat.tolist()
        title = f"{name} mod {n}" if n is not None else name
        lines.append(f"{title}  (columns: {', '.join(labels)})")
        width = max(len(str(x)) for row in rows for x in row)
        for label, row in zip(labels, rows):
            lines.append(f"  {label:>5s} [" + " ".join(f"{x:>{width}d}" for x in row) + "]")
    return lines


# ---------------------------------------------------------------------------
# Reference tables
# ---------------------------------------------------------------------------

def compare_rows(rows, expected, complete):
    """Return a list of human-readable differences against expected rows."""
    got = {r.free_coeffs: (r.p_rank, r.nonmono_n) for r in rows}
    diffs = []
    for free, (rank, ns) in sorted(expected.items()):
        if free not in got:
            diffs.append(f"missing row {free}")
        elif got[free] != (rank, list(ns)):
            diffs.append(f"row {free}: expected {rank} {list(ns)}, got {got[free][0]} {got[free][1]}")
    if complete:
        for free in sorted(set(got) - set(expected)):
            diffs.append(f"unexpected row {free}")
    return diffs


def run_tables(names, workers=1, cache=None, verbose=False, seed=0):
    mismatches = 0
    for name in names:
        table = REFERENCE_TABLES[name]
        cache_path = None
        if cache:
            cache_path = default_cache_path(table['p'], 1, table['g']) if cache == 'auto' else cache
        cfg = SurveyConfig(table['p'], table['g'], table['n_max'], fixed=table['fix'],
                           cache_path=cache_path, workers=workers, seed=seed,
                           verbose=verbose)
        diffs = compare_rows(survey(cfg), table['rows'], table['complete'])
        print(f"{name}: {len(table['rows'])} reference rows, {len(diffs)} difference(s)")
        for d in diffs:
            print(f"  {d}")
        mismatches += len(diffs)
    return mismatches


# ---------------------------------------------------------------------------
# CLI
# ---------------------------------------------------------------------------

def _write_output(text, path):
    if path:
        with open(os.path.expanduser(path), 'w', encoding='utf-8') as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith('\n'):
            sys.stdout.write('\n')


def _add_poly_args(parser):
    parser.add_argument("--p", type=int, required=True, help="Characteristic p (prime).")
    parser.add_argument("--m", type=int, default=1, help="q = p^m (default: 1).")
    parser.add_argument("coeffs", nargs="+", type=int,
                        help="Free coefficients a_{2g-1} ... a_g; g is their count.")


def build_parser():
    parser = argparse.ArgumentParser(
        description="Weil polynomials, Frobenius matrices and common index divisors "
                    "of division fields.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {WEILCID_VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("survey", help="Survey all irreducible Weil polynomials.")
    sp.add_argument("--p", type=int, required=True, help="Characteristic p (prime).")
    sp.add_argument("--m", type=int, default=1, help="q = p^m (default: 1).")
    sp.add_argument("--dim", type=int, required=True, help="Dimension g.")
    sp.add_argument("--n-max", type=int, required=True, help="Survey n < N_MAX.")
    sp.add_argument("--fix", type=str, default=None,
                    help="Coefficient filter, e.g. a5=0,a4=0.")
    sp.add_argument("--format", choices=FORMATS, default="json", help="Output format (default: json).")
    sp.add_argument("--cache", nargs='?', const='auto', default=None, metavar="PATH",
                    help="Resumable JSON-lines cache (default path if flag given without value).")
    sp.add_argument("--workers", type=int, default=1,
                    help="Number of worker processes (default: 1 = sequential).")
    sp.add_argument("--seed", type=int, default=0, help="Seed for factorization randomness.")
    sp.add_argument("--output", type=str, default=None, help="Write output to a file.")
    sp.add_argument("--h5", type=str, default=None, metavar="PATH",
                    help="Also export the survey to an HDF5 file.")
    sp.add_argument("--mpi", action="store_true",
                    help="Distribute polynomials over MPI ranks (requires mpirun, mpi4py).")
    sp.add_argument("-v", "--verbose", action="store_true", help="Report progress on stderr.")

    ap = sub.add_parser("analyze", help="Analyze a single polynomial.")
    _add_poly_args(ap)
    ap.add_argument("--n", type=int, nargs="+", default=[], help="Moduli to report on.")
    ap.add_argument("--output", type=str, default=None, help="Write output to a file.")

    gp = sub.add_parser("gsp-order", help="Print |GSp_2g(Z/nZ)|.")
    gp.add_argument("--dim", type=int, required=True, help="Dimension g.")
    gp.add_argument("n", type=int, help="Modulus.")

    ip = sub.add_parser("irred-count", help="Count monic irreducibles of degree m over F_p.")
    ip.add_argument("--p", type=int, required=True, help="Prime p.")
    ip.add_argument("degree", type=int, help="Degree m.")

    mp = sub.add_parser("matrix", help="Print the Frobenius matrix of a polynomial.")
    _add_poly_args(mp)
    mp.add_argument("--mod", type=int, default=None, help="Reduce entries modulo N.")
    mp.add_argument("--verschiebung", action="store_true", help="Also print V.")

    tp = sub.add_parser("tables", help="Re-run the bundled reference surveys.")
    tp.add_argument("--only", type=str, default=None, help="Run a single table.")
    tp.add_argument("--list", action="store_true", help="List table names and exit.")
    tp.add_argument("--cache", nargs='?', const='auto', default=None, metavar="PATH",
                    help="Resumable JSON-lines cache.")
    tp.add_argument("--workers", type=int, default=1, help="Number of worker processes.")
    tp.add_argument("--seed", type=int, default=0, help="Seed for factorization randomness.")
    tp.add_argument("-v", "--verbose", action="store_true", help="Report progress on stderr.")
    return parser


def _cmd_survey(args):
    cache_path = args.cache
    if cache_path == 'auto':
        cache_path = default_cache_path(args.p, args.m, args.dim)
    cfg = SurveyConfig(args.p, args.dim, args.n_max, m=args.m, fixed=parse_fix(args.fix),
                       output_format=args.format, cache_path=cache_path,
                       workers=args.workers, seed=args.seed, verbose=args.verbose).validate()
    if args.mpi:
        from weilcid_mpi import mpi_survey
        rows = mpi_survey(cfg)
        if rows is None:
            return EXIT_OK
    else:
        rows = survey(cfg)
    _write_output(emit(rows, cfg.output_format, g=cfg.g, note=HYPOTHESIS_NOTE), args.output)
    if args.h5:
        write_survey_h5(args.h5, rows, cfg.p, cfg.m, cfg.g, cfg.n_max, cfg.fixed,
                        note=HYPOTHESIS_NOTE)
        if cfg.verbose:
            print(f"Note: survey written to {args.h5}", file=sys.stderr)
    return EXIT_OK


def _cmd_tables(args):
    if args.list:
        for name, table in REFERENCE_TABLES.items():
            print(f"{name}: p={table['p']} g={table['g']} n<{table['n_max']} "
                  f"fix={table['fix']} rows={len(table['rows'])}")
        return EXIT_OK
    names = list(REFERENCE_TABLES)
    if args.only:
        if args.only not in REFERENCE_TABLES:
            raise ValueError(f"unknown table '{args.only}'")
        names = [args.only]
    if args.workers < 1:
        raise ValueError("--workers must be >= 1")
    mismatches = run_tables(names, workers=args.workers, cache=args.cache,
                            verbose=args.verbose, seed=args.seed)
    return EXIT_TABLE_MISMATCH if mismatches else EXIT_OK


def run(argv=None):
    """Parse argv and dispatch; returns the process exit code."""
    args = build_parser().parse_args(argv)
    try:
        if args.command == "survey":
            return _cmd_survey(args)
        if args.command == "analyze":
            g = len(args.coeffs)
            doc = {"note": HYPOTHESIS_NOTE,
                   "analysis": analyze(args.p, args.m, g, args.coeffs, args.n)}
            _write_output(json.dumps(doc, indent=2), args.output)
            return EXIT_OK
        if args.command == "gsp-order":
            print(gsp_order(args.dim, args.n))
            return EXIT_OK
        if args.command == "irred-count":
            print(irred_count(args.degree, args.p))
            return EXIT_OK
        if args.command == "matrix":
            w = validate_weil(from_free_coeffs(args.p, args.m, len(args.coeffs), args.coeffs))
            for line in matrix_lines(w, args.mod, args.verschiebung):
                print(line)
            return EXIT_OK
        if args.command == "tables":
            return _cmd_tables(args)
    except InvariantViolation as e:
        print(f"Error: internal invariant violated: {e}", file=sys.stderr)
        return EXIT_INVARIANT
    except ValueError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
