"""Shared test machinery: brute-force oracles, fuzz mutations, certificate corpora."""
from __future__ import annotations

import math
import random
from collections import Counter
from itertools import permutations

from hamdec import (
    ConnectionSet,
    DecompositionCertificate,
    FinitePath,
    circular_length,
    construct_4valent,
    construct_consecutive,
    construct_even_run,
    construct_one_two_c,
    construct_skip_k,
    construct_walecki_family,
)


def naive_find(k: int, lengths) -> bool:
    """Permutation-enumeration oracle: does any Hamilton path on Z_k realize L?

    Enumerates the (k-1)!/2 candidate vertex sequences with first vertex 0
    and second vertex in the lower half (reflection through 0 maps witnesses
    to witnesses, so this halving is exact).
    """
    target = Counter(lengths)
    assert sum(target.values()) == k - 1
    for tail in permutations(range(1, k)):
        if 2 * tail[0] > k:
            continue
        seq = (0,) + tail
        if Counter(circular_length(u, v, k) for u, v in zip(seq, seq[1:])) == target:
            return True
    return False


def naive_find_unreduced(k: int, lengths) -> bool:
    """Fully unreduced oracle over all k! vertex sequences (tiny k only)."""
    target = Counter(lengths)
    for seq in permutations(range(k)):
        if Counter(circular_length(u, v, k) for u, v in zip(seq, seq[1:])) == target:
            return True
    return False


def is_hamilton_with_lengths(witness, k: int, lengths) -> bool:
    """Independent re-check of a claimed witness."""
    if witness is None or len(witness) != k or set(witness) != set(range(k)):
        return False
    found = Counter(circular_length(u, v, k) for u, v in zip(witness, witness[1:]))
    return found == Counter(lengths)


def mutate(cert: DecompositionCertificate, rng: random.Random) -> list[DecompositionCertificate]:
    """One mutant per mutation kind: vertex swap, offset change, vertex splice."""
    mutants = []
    vs = list(cert.starter.vertices)

    i, j = rng.sample(range(len(vs)), 2)
    swapped = list(vs)
    swapped[i], swapped[j] = swapped[j], swapped[i]
    mutants.append(DecompositionCertificate(
        cert.connection_set, cert.period, FinitePath(swapped), cert.offsets))

    offs = list(cert.offsets)
    pos = rng.randrange(len(offs))
    offs[pos] = rng.randrange(cert.period)
    mutants.append(DecompositionCertificate(
        cert.connection_set, cert.period, cert.starter, offs))

    if len(vs) > 2:
        spliced = list(vs)
        del spliced[rng.randrange(1, len(vs) - 1)]
        mutants.append(DecompositionCertificate(
            cert.connection_set, cert.period, FinitePath(spliced), cert.offsets))

    return mutants


def walecki_magnitudes(k: int, rng: random.Random, spread: int = 2) -> tuple[int, ...]:
    """Random admissible magnitudes a_i = i + k*m_i with the parity fixed up."""
    m = [rng.randrange(0, spread) for _ in range(k - 1)]
    if sum(m) % 2 != ((k - 1) // 2) % 2:
        m[0] += 1
    return tuple(i + k * m[i - 1] for i in range(1, k))


def family_corpus(*, four_valent_max_b: int = 45, consecutive_max_k: int = 17,
                  skip_max_k: int = 19, even_run_max_t: int = 12,
                  one_two_c_max: int = 40, walecki_ks=(3, 5, 7, 9),
                  seed: int = 7) -> list[DecompositionCertificate]:
    """A mixed corpus of valid certificates across every family."""
    rng = random.Random(seed)
    corpus = []
    for b in range(3, four_valent_max_b + 1, 2):
        for a in range(1, b, 2):
            if math.gcd(a, b) == 1:
                corpus.append(construct_4valent(a, b))
    for k in range(1, consecutive_max_k + 1):
        if k % 4 in (0, 1):
            corpus.append(construct_consecutive(k))
    for k in range(2, skip_max_k + 1):
        if k % 4 in (2, 3):
            corpus.append(construct_skip_k(k))
    for t in range(2, even_run_max_t + 1, 2):
        corpus.append(construct_even_run(t))
    for c in range(4, one_two_c_max + 1, 2):
        corpus.append(construct_one_two_c(c))
    for k in walecki_ks:
        corpus.append(construct_walecki_family(k, walecki_magnitudes(k, rng)))
    return corpus


def non_admissible_sets(count: int, seed: int = 3) -> list[ConnectionSet]:
    """Assorted connection sets violating at least one necessary condition."""
    from hamdec import analyze

    rng = random.Random(seed)
    out = [ConnectionSet([1, 2]), ConnectionSet([2, 4]), ConnectionSet([1, 2, 3]),
           ConnectionSet([5]), ConnectionSet([3, 9]), ConnectionSet([2, 6, 10])]
    while len(out) < count:
        size = rng.randrange(1, 6)
        s = ConnectionSet(rng.sample(range(1, 40), size))
        if not analyze(s).admissible:
            out.append(s)
    return out[:count]
