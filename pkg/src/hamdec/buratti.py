"""Search for Hamilton paths in the complete graph on Z_k with prescribed edge lengths.

The search is a depth-first extension of a partial path anchored at 0.  Two
symmetry reductions are applied, neither of which can change the
found/exhausted status: translation (any witness can be shifted to start at
0) and reflection through 0 (which maps witnesses to witnesses and swaps the
second vertex w with k - w, so only w <= k - w needs exploring).  At each
step the next edge length is chosen by largest remaining multiplicity first,
smaller length on ties, and the step in the negative direction is tried
before the positive one; the first complete path under this order is the
canonical witness, so results are deterministic.
"""
from __future__ import annotations

import dataclasses
import math
import random
import time
from collections.abc import Iterable, Iterator, Mapping
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations_with_replacement

from .errors import BadMultisetSize, NotPrime
from .model import LengthMultiset

STATUS_FOUND = "found"
STATUS_EXHAUSTED = "exhausted"


@dataclasses.dataclass(frozen=True)
class SearchOutcome:
    witness: tuple[int, ...] | None
    nodes_expanded: int
    elapsed: float

    @property
    def found(self) -> bool:
        return self.witness is not None

    @property
    def status(self) -> str:
        return STATUS_FOUND if self.found else STATUS_EXHAUSTED


def _coerce_multiset(k: int, lengths) -> LengthMultiset:
    if isinstance(lengths, LengthMultiset):
        if lengths.modulus != k:
            raise BadMultisetSize(
                f"multiset has modulus {lengths.modulus}, search asked for {k}")
        return lengths
    return LengthMultiset(k, lengths)


def find_path(k: int, lengths: LengthMultiset | Mapping[int, int] | Iterable[int]) -> SearchOutcome:
    """Complete search for a Hamilton path on Z_k realizing the length multiset."""
    multiset = _coerce_multiset(k, lengths)
    remaining = multiset.as_dict()
    visited = bytearray(k)
    visited[0] = 1
    path = [0]
    nodes = 0
    started = time.perf_counter()

    def extend() -> bool:
        nonlocal nodes
        if len(path) == k:
            return True
        v = path[-1]
        depth = len(path)
        order = sorted((d for d, c in remaining.items() if c),
                       key=lambda d: (-remaining[d], d))
        for d in order:
            down = (v - d) % k
            up = (v + d) % k
            for w in (down,) if down == up else (down, up):
                if visited[w]:
                    continue
                if depth == 1 and 2 * w > k:
                    continue
                nodes += 1
                visited[w] = 1
                path.append(w)
                remaining[d] -= 1
                if extend():
                    return True
                remaining[d] += 1
                path.pop()
                visited[w] = 0
        return False

    witness = tuple(path) if extend() else None
    return SearchOutcome(witness=witness, nodes_expanded=nodes,
                         elapsed=time.perf_counter() - started)


def is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    return all(p % q for q in range(3, math.isqrt(p) + 1, 2))


def multiset_count(p: int) -> int:
    """Number of (p-1)-element multisets over {1..(p-1)/2}, by stars and bars."""
    size = p - 1
    values = (p - 1) // 2
    return math.comb(size + values - 1, values - 1)


def enumerate_multisets(p: int) -> Iterator[tuple[int, ...]]:
    """All candidate length multisets for the modulus p, in lexicographic order."""
    return combinations_with_replacement(range(1, (p - 1) // 2 + 1), p - 1)


def _search_task(task: tuple[int, tuple[int, ...]]) -> tuple[tuple[int, ...] | None, int, float]:
    k, lengths = task
    outcome = find_path(k, lengths)
    return outcome.witness, outcome.nodes_expanded, outcome.elapsed


@dataclasses.dataclass(frozen=True)
class SweepReport:
    p: int
    total: int                   # size of the full multiset space
    sampled: bool
    entries: tuple[tuple[tuple[int, ...], SearchOutcome], ...]
    elapsed: float

    @property
    def failures(self) -> tuple[tuple[int, ...], ...]:
        return tuple(lengths for lengths, outcome in self.entries if not outcome.found)

    @property
    def clean(self) -> bool:
        return not self.failures


def sweep(p: int, *, sample: int | None = None, seed: int = 0, jobs: int = 1) -> SweepReport:
    """Run find_path over every multiset for an odd prime p (or a seeded sample).

    Multisets are enumerated lexicographically; with several workers the
    searches are distributed one multiset per task and the results are merged
    back in enumeration order, so the report is identical for any job count.
    """
    if not is_odd_prime(p):
        raise NotPrime(f"{p} is not an odd prime")
    total = multiset_count(p)
    started = time.perf_counter()

    if sample is not None and sample < total:
        rng = random.Random(seed)
        picked = set(rng.sample(range(total), sample))
        multisets = [m for i, m in enumerate(enumerate_multisets(p)) if i in picked]
        sampled = True
    else:
        multisets = list(enumerate_multisets(p))
        sampled = False

    tasks = [(p, m) for m in multisets]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            raw = list(pool.map(_search_task, tasks, chunksize=max(1, len(tasks) // (jobs * 8) or 1)))
    else:
        raw = [_search_task(t) for t in tasks]

    entries = tuple(
        (m, SearchOutcome(witness=w, nodes_expanded=n, elapsed=e))
        for m, (w, n, e) in zip(multisets, raw))
    return SweepReport(p=p, total=total, sampled=sampled, entries=entries,
                       elapsed=time.perf_counter() - started)
