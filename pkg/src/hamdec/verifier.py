"""Exact and brute-force checks that a certificate witnesses a Hamilton decomposition.

``verify_certificate`` reduces the infinite claim to finitely many exact
conditions on the starter path and the offsets.  ``window_oracle`` is the
independent cross-check: it materializes a finite slab of the infinite graph
and verifies degrees, acyclicity, connectivity and the edge partition
directly.  The two must always agree; ``cross_validate`` asserts that.
"""
from __future__ import annotations

import dataclasses
from collections import Counter

from .admissibility import analyze
from .model import DecompositionCertificate
from .errors import WindowTooSmall

PATH_BROKEN = "PathBroken"
ENDPOINT_MISMATCH = "EndpointMismatch"
RESIDUE_COVERAGE = "ResidueCoverage"
LENGTH_RESIDUE_OVERLAP = "LengthResidueOverlap"
LENGTH_RESIDUE_GAP = "LengthResidueGap"
FOREIGN_EDGE_LENGTH = "ForeignEdgeLength"
OFFSET_COLLISION = "OffsetCollision"


@dataclasses.dataclass(frozen=True)
class VerificationReport:
    accepted: bool
    failures: tuple[str, ...]
    residue_tables: dict[int, tuple[int, ...]]  # length d -> sorted residues of its starter edges


def verify_certificate(cert: DecompositionCertificate) -> VerificationReport:
    """Decide, exactly, whether the certificate describes a Hamilton decomposition.

    Accepted iff all of:

    1. the starter is a path with exactly ``period`` edges running between
       some multiple of the period and that value plus the period
       (canonically 0 and period);
    2. the starter hits each residue class mod period exactly once, except
       the endpoint class exactly twice, which makes the starter's
       period-translates chain into a single two-way-infinite Hamilton path;
    3. every starter edge length lies in S+;
    4. for each length d in S+, the starter's length-d edge residues,
       translated by every offset, tile the residues mod period exactly,
       which makes the offset translates edge-disjoint and collectively
       exhaustive of all length-d edges;
    5. the offsets are distinct mod period.

    For certificates of this shape the five conditions are sound and
    complete, so acceptance is a proof, not a heuristic.
    """
    n = cert.period
    starter = cert.starter
    s_plus = cert.connection_set.s_plus
    failures: list[str] = []

    # (1) edge count and endpoints.  The implied decomposition is a union of
    # edge sets, so it is unchanged by reversing the starter or translating
    # it by a multiple of the period; endpoints are an unordered pair
    # {x, x + period} with x on the period's zero class.
    if starter.edge_count != n:
        failures.append(PATH_BROKEN)
    lo, hi = min(starter.first, starter.last), max(starter.first, starter.last)
    if hi - lo != n or lo % n != 0:
        failures.append(ENDPOINT_MISMATCH)

    # (2) residue coverage of the starter's vertices.
    residue_counts = Counter(v % n for v in starter.vertices)
    endpoint_class = starter.first % n
    coverage_ok = (
        residue_counts.get(endpoint_class, 0) == 2
        and starter.last % n == endpoint_class
        and all(c == 1 for r, c in residue_counts.items() if r != endpoint_class)
        and len(residue_counts) == n
    )
    if not coverage_ok:
        failures.append(RESIDUE_COVERAGE)

    # (3) + (4) edge lengths and per-length residue tiling.
    tables: dict[int, list[int]] = {d: [] for d in s_plus}
    foreign = False
    for u, v in starter.edges():
        d = v - u
        if d in tables:
            tables[d].append(u % n)
        else:
            foreign = True
    if foreign:
        failures.append(FOREIGN_EDGE_LENGTH)

    overlap = gap = False
    for d in s_plus:
        combined = Counter((r + o) % n for r in tables[d] for o in cert.offsets)
        if any(c > 1 for c in combined.values()):
            overlap = True
        if len(combined) < n:
            gap = True
    if overlap:
        failures.append(LENGTH_RESIDUE_OVERLAP)
    if gap:
        failures.append(LENGTH_RESIDUE_GAP)

    # (5) offsets distinct (they are normalized into [0, period), so distinct
    # integers means distinct residues).
    if len(set(cert.offsets)) != len(cert.offsets):
        failures.append(OFFSET_COLLISION)

    accepted = not failures
    if accepted:
        # Forced by condition (4); a violation here is a library bug.
        assert all(len(tables[d]) * len(cert.offsets) == n for d in s_plus)
        # An accepted certificate of a non-admissible set would disprove a
        # necessary condition; that is a bug, never a report.
        assert analyze(cert.connection_set).admissible, \
            "accepted certificate for a non-admissible connection set"

    return VerificationReport(
        accepted=accepted,
        failures=tuple(failures),
        residue_tables={d: tuple(sorted(rs)) for d, rs in tables.items()},
    )


@dataclasses.dataclass(frozen=True)
class WindowCheck:
    accepted: bool
    failure: str | None = None


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _materialize(cert: DecompositionCertificate, offset: int,
                 lo: int, hi: int) -> list[tuple[int, int]]:
    """All edges of one Hamilton path translate with both endpoints in [lo, hi]."""
    n = cert.period
    edges = []
    for u, v in cert.starter.edges():
        i_min = _ceil_div(lo - u - offset, n)
        i_max = (hi - v - offset) // n
        for i in range(i_min, i_max + 1):
            edges.append((u + n * i + offset, v + n * i + offset))
    return edges


class _UnionFind:
    def __init__(self):
        self.parent: dict[int, int] = {}

    def find(self, x: int) -> int:
        parent = self.parent
        root = parent.setdefault(x, x)
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        """Merge the classes of x and y; False if they were already merged."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[rx] = ry
        return True


def window_oracle(cert: DecompositionCertificate, periods: int) -> WindowCheck:
    """Brute-force check on the finite slab [-periods*n, periods*n].

    Materializes every Hamilton path restricted to the slab and checks, inside
    a core sub-window where no boundary effect can bite: degree exactly 2 per
    path, no cycles, a single connected piece per path, pairwise edge
    disjointness, and that every graph edge is covered exactly once.
    """
    if periods < 3:
        raise ValueError("periods must be at least 3")
    n = cert.period
    s_plus = cert.connection_set.s_plus
    max_s = s_plus[-1]
    if periods * n < 2 * max_s:
        raise WindowTooSmall(
            f"window of {periods} periods ({periods * n}) cannot hold edges of length {max_s}")

    w_hi = periods * n
    w_lo = -w_hi
    core_hi = (periods - 1) * n - max_s
    core_lo = -core_hi
    if core_hi < core_lo:
        raise WindowTooSmall("core sub-window is empty; increase periods")

    paths = [_materialize(cert, o, w_lo, w_hi) for o in cert.offsets]

    # Degree 2 at every core vertex, per path.  Core vertices keep all their
    # true neighbours inside the slab, so slab degree equals true degree.
    for edges in paths:
        degree = Counter()
        for u, v in edges:
            degree[u] += 1
            degree[v] += 1
        for x in range(core_lo, core_hi + 1):
            if degree.get(x, 0) != 2:
                return WindowCheck(False, f"vertex {x} has degree {degree.get(x, 0)}")

    # Acyclic inside the slab, and the core vertices lie on one connected
    # piece.  Any translate touching the connectivity core must fit in the
    # slab entirely, so the core shrinks with the starter's span; a starter
    # spanning more than the slab leaves nothing to check and the condition
    # holds vacuously.
    span = max(cert.starter.vertices) - min(cert.starter.vertices)
    conn_hi = min(core_hi, w_hi - span)
    conn_lo = -conn_hi
    for edges in paths:
        uf = _UnionFind()
        for u, v in edges:
            if not uf.union(u, v):
                return WindowCheck(False, "cycle inside the window")
        if conn_hi >= conn_lo:
            roots = {uf.find(x) for x in range(conn_lo, conn_hi + 1)}
            if len(roots) > 1:
                return WindowCheck(False, "path is disconnected inside the window")

    # Pairwise edge-disjoint, and every graph edge inside the core is used
    # exactly once.
    seen: set[tuple[int, int]] = set()
    for edges in paths:
        for e in edges:
            if e in seen:
                return WindowCheck(False, f"edge {e} used by two paths")
            seen.add(e)
    for x in range(core_lo, core_hi + 1):
        for d in s_plus:
            if x + d <= core_hi and (x, x + d) not in seen:
                return WindowCheck(False, f"edge ({x}, {x + d}) not covered")

    return WindowCheck(True)


def cross_validate(cert: DecompositionCertificate, periods: int) -> bool:
    """True iff the exact verifier and the window oracle agree on acceptance."""
    return verify_certificate(cert).accepted == window_oracle(cert, periods).accepted
