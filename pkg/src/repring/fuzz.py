"""Seeded random elements for round-trip checks (library and CLI)."""

from __future__ import annotations

import random

from .lattice import Group, canonicalize, spin_allowed
from .laurent import LaurentPoly


def random_weight(group: Group, rng: random.Random, lo: int = -6, hi: int = 6) -> tuple:
    n = group.ncoords
    if group.is_su:
        return canonicalize([rng.randint(lo, hi) for _ in range(n)], group)
    parity = rng.randint(0, 1) if spin_allowed(group) else 0
    return canonicalize([2 * rng.randint(lo, hi) + parity for _ in range(n)], group)


def random_poly(
    group: Group,
    rng: random.Random,
    max_terms: int = 6,
    lo: int = -6,
    hi: int = 6,
    coeff_lo: int = -9,
    coeff_hi: int = 9,
) -> LaurentPoly:
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        c = 0
        while c == 0:
            c = rng.randint(coeff_lo, coeff_hi)
        terms.append((random_weight(group, rng, lo, hi), c))
    return LaurentPoly.from_terms(group, terms)
