"""Shared fixtures and independent brute-force oracles.

The oracles work on plain dicts keyed by frozensets of labels and
enumerate entire power sets, deliberately sharing no code with the
bitmask implementation they check.
"""

from itertools import combinations
from math import fsum

import pytest

import belfusion as bf


# ---------------------------------------------------------------------------
# label-set oracles


def powerset(labels):
    s = list(labels)
    return [frozenset(c) for r in range(len(s) + 1) for c in combinations(s, r)]


def nonempty_subsets(labels):
    return [s for s in powerset(labels) if s]


def oracle_bel(masses, a):
    return fsum(v for s, v in masses.items() if s <= a)


def oracle_pl(masses, a):
    return fsum(v for s, v in masses.items() if s & a)


def oracle_dempster(labels, d1, d2):
    """All-pairs Dempster combination; returns (combined, conflict)."""
    acc = {}
    clash = []
    for s1 in nonempty_subsets(labels):
        for s2 in nonempty_subsets(labels):
            p = d1.get(s1, 0.0) * d2.get(s2, 0.0)
            if p == 0.0:
                continue
            inter = s1 & s2
            if inter:
                acc.setdefault(inter, []).append(p)
            else:
                clash.append(p)
    total = fsum(fsum(ps) for ps in acc.values())
    return {s: fsum(ps) / total for s, ps in acc.items()}, fsum(clash)


def oracle_mu(labels, masses):
    """Superset-sum subset weights over the whole power set."""
    out = {}
    for a in nonempty_subsets(labels):
        w = fsum(m / len(h) for h, m in masses.items() if a <= h)
        if w > 0.0:
            out[a] = w
    return out


def oracle_alt(labels, d1, d2):
    """All-4^n-pairs pooling of the transformed measures.

    Returns (combined, conflict_mu, normalizer, intersecting_pair_count).
    """
    mu1 = oracle_mu(labels, d1)
    mu2 = oracle_mu(labels, d2)
    acc = {}
    clash = []
    pairs = 0
    for s1 in nonempty_subsets(labels):
        for s2 in nonempty_subsets(labels):
            p = mu1.get(s1, 0.0) * mu2.get(s2, 0.0)
            if p == 0.0:
                continue
            inter = s1 & s2
            if inter:
                acc.setdefault(inter, []).append(p)
                pairs += 1
            else:
                clash.append(p)
    total = fsum(fsum(ps) for ps in acc.values())
    combined = {s: fsum(ps) / total for s, ps in acc.items()}
    return combined, fsum(clash), total, pairs


def to_label_masses(m: bf.MassFunction) -> dict:
    """Bridge a MassFunction into the oracle representation."""
    return {frozenset(m.frame.decode(s)): v for s, v in m.items()}


def from_label_masses(frame: bf.Frame, masses: dict) -> bf.MassFunction:
    return bf.make_bba(frame, [(frame.encode(sorted(s)), v) for s, v in masses.items()])


# ---------------------------------------------------------------------------
# fixtures


@pytest.fixture
def maradona():
    """Frame {head, hand} with the two football-fan assignments."""
    frame = bf.make_frame(["head", "hand"])
    m1 = bf.make_bba(frame, [(frame.encode("head"), 0.9), (frame.full, 0.1)])
    m2 = bf.make_bba(frame, [
        (frame.encode("head"), 0.6),
        (frame.encode("hand"), 0.3),
        (frame.full, 0.1),
    ])
    return frame, m1, m2


@pytest.fixture
def two_doctors_default():
    params = bf.TwoDoctorsParams(0.3, 0.2, 0.3)
    m1, m2 = bf.two_doctors(params)
    return params, m1, m2


def random_mass_functions(n_labels: int, count: int, seed: int):
    """Deterministic batch of random assignments on a letter frame."""
    import random

    frame = bf.make_frame("ABCDEFGH"[:n_labels])
    rng = random.Random(seed)
    return frame, [bf.random_bba(frame, frame.full, rng) for _ in range(count)]
