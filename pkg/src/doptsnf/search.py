"""Exhaustive searches for design witnesses at desk scale.

All searches are deterministic: candidates are encoded as integer bitmasks
and scanned in ascending mask order, so identical inputs always produce
identical ordered outputs. Candidate spaces larger than the configured cap
are refused with InfeasibleSearchError instead of starting an open-ended
scan; the cap can be raised per call or through the environment variable
DOPT_SNF_MAX_CANDIDATES.

Optional data parallelism partitions the mask range into contiguous chunks
handled by worker processes; the merged result is exactly the sequential
one.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional

from .designs import Tournament, barba_double, is_barba
from .exactmat import IntMatrix, circulant
from .kernels import autocorrelations
from .snf import smith_normal_form
from .verify import ew_tournament_check

DEFAULT_MAX_CANDIDATES = 1 << 20

ENV_MAX_CANDIDATES = "DOPT_SNF_MAX_CANDIDATES"


class InfeasibleSearchError(RuntimeError):
    """The candidate space exceeds the configured cap."""


@dataclass(frozen=True)
class SearchSpec:
    """Parameters of one search run, echoed into reports."""

    kind: str
    order: int
    limit: Optional[int] = None
    deterministic_seed: int = 0


def _candidate_cap(explicit: Optional[int]) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get(ENV_MAX_CANDIDATES)
    if env:
        return int(env)
    return DEFAULT_MAX_CANDIDATES


def _gate(total: int, max_candidates: Optional[int], what: str) -> None:
    cap = _candidate_cap(max_candidates)
    if total > cap:
        raise InfeasibleSearchError(
            f"{what} has {total} candidates, above the cap of {cap}; "
            f"raise it via max_candidates or {ENV_MAX_CANDIDATES} to proceed"
        )


def _chunk_ranges(total: int, workers: int) -> list[tuple[int, int]]:
    size = -(-total // workers)
    return [(lo, min(lo + size, total)) for lo in range(0, total, size)]


def _scan(total: int, chunk_fn, args: tuple, workers: int) -> list[int]:
    """Masks in [0, total) passing chunk_fn, ascending, optionally parallel."""
    if workers <= 1:
        return chunk_fn(args + (0, total))
    out: list[int] = []
    jobs = [args + rng for rng in _chunk_ranges(total, workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(chunk_fn, jobs):
            out.extend(part)
    return out


# ---------------------------------------------------------------------------
# Tournament searches


def _pairs(order: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(order) for j in range(i + 1, order)]


def _tournament_from_mask(order: int, mask: int) -> Tournament:
    """Decode a strictly-upper-triangular bitmask, most significant bit first."""
    pairs = _pairs(order)
    width = len(pairs)
    rows = [[0] * order for _ in range(order)]
    for k, (i, j) in enumerate(pairs):
        bit = (mask >> (width - 1 - k)) & 1
        rows[i][j] = bit
        rows[j][i] = 1 - bit
    return Tournament.from_matrix(IntMatrix.from_rows(rows))


def _ew_tournament_chunk(args: tuple[int, int, int]) -> list[int]:
    order, lo, hi = args
    hits = []
    for mask in range(lo, hi):
        if ew_tournament_check(_tournament_from_mask(order, mask))[0]:
            hits.append(mask)
    return hits


def enumerate_ew_tournaments(
    order: int,
    limit: Optional[int] = None,
    workers: int = 1,
    max_candidates: Optional[int] = None,
) -> list[Tournament]:
    """All EW tournaments of the given order, by exhausting every tournament.

    Results come in lexicographic order of the strictly-upper-triangular
    bit pattern. Order 5 means 2^10 candidates; order 9 already means 2^36
    and is refused unless the candidate cap is raised explicitly.
    """
    if order % 4 != 1:
        raise ValueError(f"order {order} is not 1 (mod 4)")
    if not 5 <= order <= 9:
        raise ValueError("only orders 5 and 9 are supported")
    total = 1 << (order * (order - 1) // 2)
    _gate(total, max_candidates, f"the order-{order} tournament space")
    masks = _scan(total, _ew_tournament_chunk, (order,), workers)
    if limit is not None:
        masks = masks[:limit]
    return [_tournament_from_mask(order, m) for m in masks]


def _circulant_row_from_mask(order: int, mask: int) -> tuple[int, ...]:
    half = (order - 1) // 2
    row = [0] * order
    for i in range(half):
        lag = i + 1
        bit = (mask >> (half - 1 - i)) & 1
        row[lag] = bit
        row[order - lag] = 1 - bit
    return tuple(row)


def search_circulant_tournament(
    order: int,
    limit: Optional[int] = None,
    max_candidates: Optional[int] = None,
) -> list[Tournament]:
    """Circulant tournaments of odd order passing the EW tournament check.

    Candidates are the antisymmetric lag subsets (lag s in the subset iff
    order-s is not), 2^((order-1)/2) in total, scanned in ascending mask
    order. Circulant tournaments are regular of degree (order-1)/2 while
    the EW template forces three distinct out-degrees, so this search is
    expected to come back empty; it exists to make that emptiness a
    computed fact rather than an assumption.
    """
    if order % 2 == 0:
        raise ValueError("circulant tournaments need odd order")
    if order < 1:
        raise ValueError("order must be positive")
    total = 1 << ((order - 1) // 2)
    _gate(total, max_candidates, f"the order-{order} circulant tournament space")
    found = []
    for mask in range(total):
        cand = Tournament.from_matrix(circulant(_circulant_row_from_mask(order, mask)))
        if ew_tournament_check(cand)[0]:
            found.append(cand)
            if limit is not None and len(found) >= limit:
                break
    return found


# ---------------------------------------------------------------------------
# Barba searches


def _barba_row_from_mask(order: int, mask: int) -> tuple[int, ...]:
    return tuple(
        1 if (mask >> (order - 1 - i)) & 1 else -1 for i in range(order)
    )


def _circulant_barba_chunk(args: tuple[int, int, int]) -> list[int]:
    order, lo, hi = args
    hits = []
    for mask in range(lo, hi):
        row = list(_barba_row_from_mask(order, mask))
        if all(c == 1 for c in autocorrelations(row)[1:]):
            hits.append(mask)
    return hits


def search_circulant_barba(
    order: int,
    limit: Optional[int] = None,
    workers: int = 1,
    max_candidates: Optional[int] = None,
) -> list[IntMatrix]:
    """Circulant matrices with every off-diagonal Gram entry equal to one.

    Enumerates all 2^order first rows in ascending mask order (bit i set
    means entry +1), keeps those whose nonzero-lag autocorrelations all
    equal 1, and re-verifies each survivor with is_barba before returning
    it.
    """
    if order % 4 != 1:
        raise ValueError(f"order {order} is not 1 (mod 4)")
    total = 1 << order
    _gate(total, max_candidates, f"the order-{order} circulant space")
    masks = _scan(total, _circulant_barba_chunk, (order,), workers)
    if limit is not None:
        masks = masks[:limit]
    out = []
    for mask in masks:
        r = circulant(_barba_row_from_mask(order, mask))
        if not is_barba(r):
            raise RuntimeError(
                f"autocorrelation filter accepted a non-conforming row (mask {mask})"
            )
        out.append(r)
    return out


@dataclass(frozen=True)
class BarbaScanEntry:
    """One found row and the invariant factors of its doubled matrix."""

    first_row: tuple[int, ...]
    factors: tuple[int, ...]


@dataclass(frozen=True)
class BarbaScanOrderReport:
    """Scan results for one odd order n: doubles have order 2n = 4t+2.

    reference is the conjectured diagonal (1, 2^2t, (2t)^(2t-1),
    2t*sqrt(8t+1)) as displayed — note it has 4t+1 entries, one fewer
    than the doubled order, and it only exists when 8t+1 is a perfect
    square — so it is reported for comparison and no verdict is drawn.
    """

    order: int
    t_param: int
    reference: Optional[tuple[int, ...]]
    entries: tuple[BarbaScanEntry, ...]


@dataclass(frozen=True)
class BarbaScanReport:
    per_order: tuple[BarbaScanOrderReport, ...]


def barba_problem_scan(
    orders: Iterable[int],
    workers: int = 1,
    max_candidates: Optional[int] = None,
) -> BarbaScanReport:
    """Tabulate SNFs of doubled circulant Barba matrices, order by order."""
    reports = []
    for order in orders:
        found = search_circulant_barba(
            order, workers=workers, max_candidates=max_candidates
        )
        t = (order - 1) // 2
        reference: Optional[tuple[int, ...]] = None
        if t >= 1:
            root = math.isqrt(8 * t + 1)
            if root * root == 8 * t + 1:
                reference = (
                    (1,) + (2,) * (2 * t) + (2 * t,) * (2 * t - 1) + (2 * t * root,)
                )
        entries = tuple(
            BarbaScanEntry(r.row(0), smith_normal_form(barba_double(r)).factors)
            for r in found
        )
        reports.append(BarbaScanOrderReport(order, t, reference, entries))
    return BarbaScanReport(tuple(reports))
