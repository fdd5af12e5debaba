"""Necessary conditions for an infinite circulant graph to be Hamilton-decomposable.

The graph generated by S on the integers is connected iff gcd(S) = 1 (it has
gcd(S) many components otherwise, each isomorphic to the graph generated by
S/gcd), and a decomposition into |S+| Hamilton paths forces
sum(S+) = |S+| (mod 2): each path crosses the cut between 0 and 1 an odd
number of times, and the cut carries sum(S+) edges in total.
"""
from __future__ import annotations

import dataclasses
import math

from .model import ConnectionSet


@dataclasses.dataclass(frozen=True)
class AdmissibilityReport:
    gcd: int
    component_count: int
    parity_ok: bool
    admissible: bool


def analyze(s: ConnectionSet) -> AdmissibilityReport:
    """Classify a connection set against both necessary conditions."""
    d = math.gcd(*s.s_plus)
    parity_ok = sum(s.s_plus) % 2 == len(s.s_plus) % 2
    return AdmissibilityReport(
        gcd=d,
        component_count=d,
        parity_ok=parity_ok,
        admissible=(d == 1 and parity_ok),
    )


def component_set(s: ConnectionSet) -> ConnectionSet:
    """The connection set of one connected component: every generator over gcd(S)."""
    d = math.gcd(*s.s_plus)
    return ConnectionSet(a // d for a in s.s_plus)
