"""
MPI driver for weilcid survey.

Rank 0 enumerates the polynomials and reads the cache, then broadcasts the
work list. Polynomial i is owned by rank i % size; results are gathered back
on rank 0, which alone writes the cache and emits output. Requires mpi4py.
"""

import sys
import time

from weilcid import assemble_rows, plan_survey, record_results, survey_polynomial
from weilcid_exact import set_factor_seed


def _check_mpi():
    try:
        from mpi4py import MPI
    except ImportError:
        print("Error: mpi4py is not available.", file=sys.stderr)
        sys.exit(1)
    return MPI


def mpi_survey(cfg):
    """Survey across MPI ranks; returns the rows on rank 0 and None elsewhere."""
    MPI = _check_mpi()
    comm = MPI.COMM_WORLD
    rank = comm.Get_rank()
    size = comm.Get_size()
    set_factor_seed(cfg.seed)
    t0 = time.time()

    # Phase 1: rank 0 plans, everyone receives the work list
    if rank == 0:
        polys, known, work = plan_survey(cfg)
    else:
        polys, known, work = None, None, None
    work = comm.bcast(work, root=0)

    # Phase 2: round-robin ownership
    mine = [survey_polynomial(unit) for i, unit in enumerate(work) if i % size == rank]
    if cfg.verbose:
        print(f"Rank {rank}: {len(mine)} polynomial(s) surveyed", file=sys.stderr)

    # Phase 3: gather and merge on rank 0
    gathered = comm.gather(mine, root=0)
    if rank != 0:
        return None
    for results in gathered:
        for free, per_n in results:
            record_results(cfg, known, free, per_n)
    if cfg.verbose:
        print(f"Survey completed in {time.time() - t0:.2f} seconds on {size} rank(s).",
              file=sys.stderr)
    return assemble_rows(polys, known)
