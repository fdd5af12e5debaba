"""Value types for connection sets, walks, paths, and decomposition certificates.

Everything in this module is an immutable value; instances can be shared
freely between threads or processes.  Vertices are plain Python integers but
are validated against the signed 64-bit range so that a construction which
would overflow a fixed-width integer fails loudly instead of silently
producing a huge certificate.
"""
from __future__ import annotations

import dataclasses
from collections import Counter
from collections.abc import Iterable, Iterator, Mapping

from .errors import (
    BadMultisetSize,
    EmptyConnectionSet,
    RepeatedVertex,
    VertexOverflow,
)

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def _check_vertex(v: int) -> int:
    if not isinstance(v, int) or isinstance(v, bool):
        raise TypeError(f"vertex must be an int, got {type(v).__name__}")
    if not INT64_MIN <= v <= INT64_MAX:
        raise VertexOverflow(f"vertex {v} outside the signed 64-bit range")
    return v


@dataclasses.dataclass(frozen=True)
class ConnectionSet:
    """Finite inverse-closed generator set, stored by its positive half.

    ``s_plus`` holds the distinct positive generator magnitudes in strictly
    increasing order; the full connection set is the union with the negated
    magnitudes, and the graph it generates on the integers is 2*len(s_plus)
    valent.
    """

    s_plus: tuple[int, ...]

    def __init__(self, s_plus: Iterable[int]):
        entries = sorted(set(s_plus))
        if not entries:
            raise EmptyConnectionSet("connection set must contain at least one generator")
        for a in entries:
            _check_vertex(a)
            if a < 1:
                raise ValueError(f"generator magnitudes must be positive, got {a}")
        object.__setattr__(self, "s_plus", tuple(entries))

    def valency(self) -> int:
        return 2 * len(self.s_plus)

    def __contains__(self, a: int) -> bool:
        return a in self.s_plus

    def __iter__(self) -> Iterator[int]:
        return iter(self.s_plus)

    def __len__(self) -> int:
        return len(self.s_plus)

    def __str__(self) -> str:
        return "{" + ", ".join(map(str, self.s_plus)) + "}"


@dataclasses.dataclass(frozen=True)
class FinitePath:
    """A finite path given by its vertex sequence; all vertices distinct."""

    vertices: tuple[int, ...]

    def __init__(self, vertices: Iterable[int]):
        vs = tuple(_check_vertex(v) for v in vertices)
        if not vs:
            raise ValueError("a path needs at least one vertex")
        if len(set(vs)) != len(vs):
            dup = next(v for v, c in Counter(vs).items() if c > 1)
            raise RepeatedVertex(f"vertex {dup} occurs more than once")
        object.__setattr__(self, "vertices", vs)

    @property
    def edge_count(self) -> int:
        return len(self.vertices) - 1

    @property
    def first(self) -> int:
        return self.vertices[0]

    @property
    def last(self) -> int:
        return self.vertices[-1]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (smaller, larger) endpoint pairs."""
        for u, v in zip(self.vertices, self.vertices[1:]):
            yield (u, v) if u < v else (v, u)

    def canonicalize(self) -> "FinitePath":
        """Orient the path so its first vertex is <= its last vertex.

        Path equality is exact sequence equality; this picks one of the two
        orientations as the canonical representative.
        """
        if self.first <= self.last:
            return self
        return FinitePath(reversed(self.vertices))


@dataclasses.dataclass(frozen=True)
class OmegaWalk:
    """A walk given by a start vertex and a sequence of signed steps."""

    start: int
    steps: tuple[int, ...]

    def __init__(self, start: int, steps: Iterable[int] = ()):
        _check_vertex(start)
        ss = tuple(steps)
        for z in ss:
            _check_vertex(z)
            if z == 0:
                raise ValueError("walk steps must be nonzero")
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "steps", ss)


def realize(walk: OmegaWalk) -> FinitePath:
    """Turn a walk into the path it traces.

    Raises RepeatedVertex if the partial sums collide, i.e. the walk was not
    actually a path.
    """
    vertices = [walk.start]
    for z in walk.steps:
        vertices.append(_check_vertex(vertices[-1] + z))
    return FinitePath(vertices)


def translate(path: FinitePath, t: int) -> FinitePath:
    """Shift every vertex by t; the edge-length multiset is unchanged."""
    _check_vertex(t)
    return FinitePath(_check_vertex(v + t) for v in path.vertices)


def edge_length_multiset(path: FinitePath) -> dict[int, int]:
    """Count |v - u| over the path's edges."""
    return dict(Counter(v - u for u, v in path.edges()))


def circular_length(u: int, v: int, modulus: int) -> int:
    """Distance between residues u and v on a cycle of the given modulus."""
    d = (u - v) % modulus
    return min(d, modulus - d)


@dataclasses.dataclass(frozen=True)
class DecompositionCertificate:
    """Finite witness of an infinite Hamilton decomposition.

    The implied decomposition consists of the Hamilton paths
    ``H_j = union over i of (starter + period*i) + offsets[j]``.  The
    constructor only checks cheap structural facts so that damaged
    certificates (hand-edited files, fuzz mutants) remain representable;
    the semantic conditions live in :func:`hamdec.verifier.verify_certificate`.
    """

    connection_set: ConnectionSet
    period: int
    starter: FinitePath
    offsets: tuple[int, ...]

    def __init__(self, connection_set: ConnectionSet, period: int,
                 starter: FinitePath, offsets: Iterable[int]):
        if not isinstance(connection_set, ConnectionSet):
            connection_set = ConnectionSet(connection_set)
        if not isinstance(starter, FinitePath):
            starter = FinitePath(starter)
        if not isinstance(period, int) or period < 1:
            raise ValueError(f"period must be a positive integer, got {period!r}")
        offs = tuple(sorted(offsets))
        if not offs:
            raise ValueError("at least one offset is required")
        for o in offs:
            _check_vertex(o)
            if not 0 <= o < period:
                raise ValueError(f"offset {o} outside [0, {period})")
        object.__setattr__(self, "connection_set", connection_set)
        object.__setattr__(self, "period", period)
        object.__setattr__(self, "starter", starter)
        object.__setattr__(self, "offsets", offs)


@dataclasses.dataclass(frozen=True)
class LengthMultiset:
    """A multiset of modulus-1 many edge lengths drawn from 1..modulus//2."""

    modulus: int
    counts: tuple[tuple[int, int], ...]  # sorted (length, multiplicity) pairs

    def __init__(self, modulus: int, lengths: Mapping[int, int] | Iterable[int]):
        if not isinstance(modulus, int) or modulus < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {modulus!r}")
        if isinstance(lengths, Mapping):
            counter = Counter()
            for length, count in lengths.items():
                if count < 0:
                    raise BadMultisetSize(f"negative multiplicity for length {length}")
                if count:
                    counter[length] = count
        else:
            counter = Counter(lengths)
        for length in counter:
            if not isinstance(length, int) or not 1 <= length <= modulus // 2:
                raise BadMultisetSize(
                    f"length {length!r} outside 1..{modulus // 2} for modulus {modulus}")
        total = sum(counter.values())
        if total != modulus - 1:
            raise BadMultisetSize(
                f"multiset has {total} lengths, expected exactly {modulus - 1}")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "counts", tuple(sorted(counter.items())))

    @property
    def size(self) -> int:
        return self.modulus - 1

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    def lengths(self) -> tuple[int, ...]:
        """The multiset expanded into a sorted tuple."""
        out = []
        for length, count in self.counts:
            out.extend([length] * count)
        return tuple(out)

    def __str__(self) -> str:
        return ",".join(map(str, self.lengths()))
