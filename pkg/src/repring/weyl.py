"""Weyl groups as explicit finite permutation/sign groups.

An element is a pair (perm, flips): coordinate i of a weight is sent to
slot perm[i] with sign flips[i].  For SU(n) the flips are all +1 and the
group is the full symmetric group S_n.  For SO(6) the flips carry an
even number of -1 (order 4 * 6 = 24).  For SO(4) the stored variables
are the two independent rank-1 factors, so the group is the four sign
patterns with the identity permutation; SO(2) has the trivial group.

Groups here are small (at most 120 elements for SU(5)), so they are
enumerated explicitly rather than presented by generators and words.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import GroupMismatchError
from .lattice import Group, canonicalize, check_length
from .laurent import LaurentPoly


@dataclass(frozen=True)
class WeylElement:
    perm: tuple
    flips: tuple

    def __str__(self):
        n = len(self.perm)
        seen = [False] * n
        cycles = []
        for i in range(n):
            if seen[i] or self.perm[i] == i:
                seen[i] = True
                continue
            cycle = [i]
            seen[i] = True
            j = self.perm[i]
            while j != i:
                cycle.append(j)
                seen[j] = True
                j = self.perm[j]
            cycles.append("(" + " ".join(str(k + 1) for k in cycle) + ")")
        text = "".join(cycles) if cycles else "()"
        if any(s < 0 for s in self.flips) or len(set(self.flips)) > 1:
            text += "[" + ",".join("+" if s > 0 else "-" for s in self.flips) + "]"
        return text


def identity(group: Group) -> WeylElement:
    n = group.ncoords
    return WeylElement(tuple(range(n)), (1,) * n)


def elements(group: Group):
    """All Weyl group elements, each exactly once, in a fixed order."""
    n = group.ncoords
    if group.is_su:
        return tuple(
            WeylElement(p, (1,) * n) for p in itertools.permutations(range(n))
        )
    if n == 1:
        return (identity(group),)
    if n == 2:
        return tuple(
            WeylElement((0, 1), fl) for fl in itertools.product((1, -1), repeat=2)
        )
    out = []
    for p in itertools.permutations(range(n)):
        for fl in itertools.product((1, -1), repeat=n):
            if fl.count(-1) % 2 == 0:
                out.append(WeylElement(p, fl))
    return tuple(out)


def generators(group: Group):
    """A generating set: adjacent transpositions, plus the group's sign
    flips (one double flip for SO(6); the two single flips for SO(4))."""
    n = group.ncoords
    gens = []
    if group.is_su or n == 3:
        for i in range(n - 1):
            p = list(range(n))
            p[i], p[i + 1] = p[i + 1], p[i]
            gens.append(WeylElement(tuple(p), (1,) * n))
    if not group.is_su:
        if n == 2:
            gens.append(WeylElement((0, 1), (-1, 1)))
            gens.append(WeylElement((0, 1), (1, -1)))
        elif n == 3:
            gens.append(WeylElement((0, 1, 2), (-1, -1, 1)))
    return tuple(gens)


def compose(w2: WeylElement, w1: WeylElement) -> WeylElement:
    """w2 after w1."""
    perm = tuple(w2.perm[w1.perm[i]] for i in range(len(w1.perm)))
    flips = tuple(w1.flips[i] * w2.flips[w1.perm[i]] for i in range(len(w1.perm)))
    return WeylElement(perm, flips)


def inverse(w: WeylElement) -> WeylElement:
    n = len(w.perm)
    perm = [0] * n
    flips = [1] * n
    for i in range(n):
        perm[w.perm[i]] = i
        flips[w.perm[i]] = w.flips[i]
    return WeylElement(tuple(perm), tuple(flips))


def _perm_parity(perm) -> int:
    inv = 0
    n = len(perm)
    for i in range(n):
        for j in range(i + 1, n):
            if perm[i] > perm[j]:
                inv += 1
    return -1 if inv & 1 else 1


def sign(w: WeylElement) -> int:
    """The sign character: permutation parity times the product of flips."""
    s = _perm_parity(w.perm)
    for f in w.flips:
        s *= f
    return s


def act_weight(w: WeylElement, coords, group: Group) -> tuple:
    check_length(coords, group)
    out = [0] * len(coords)
    for i, c in enumerate(coords):
        out[w.perm[i]] = w.flips[i] * c
    return canonicalize(out, group)


def act(w: WeylElement, f: LaurentPoly) -> LaurentPoly:
    """Ring automorphism permuting (and for SOEven possibly inverting)
    the variables; a left action: act(w2, act(w1, f)) = act(compose(w2, w1), f)."""
    if len(w.perm) != f.group.ncoords:
        raise GroupMismatchError(f"element of rank {len(w.perm)} vs {f.group}")
    out = {}
    for coords, c in f.terms.items():
        v = act_weight(w, coords, f.group)
        s = out.get(v, 0) + c
        if s:
            out[v] = s
        elif v in out:
            del out[v]
    return LaurentPoly(f.group, out)


def invariance_witness(f: LaurentPoly):
    """A generator that moves f, or None if f is invariant."""
    for g in generators(f.group):
        if act(g, f) != f:
            return g
    return None


def is_invariant(f: LaurentPoly) -> bool:
    return invariance_witness(f) is None


def antisymmetrize(f: LaurentPoly) -> LaurentPoly:
    """The alternating sum over the whole group: sum_w sign(w) * w(f)."""
    out = {}
    group = f.group
    for w in elements(group):
        s = sign(w)
        for coords, c in f.terms.items():
            v = act_weight(w, coords, group)
            val = out.get(v, 0) + s * c
            if val:
                out[v] = val
            elif v in out:
                del out[v]
    return LaurentPoly(group, out)


def dominant_representative(coords, group: Group):
    """Move a weight into the closed dominant chamber.

    Returns (weight, sign, on_wall).  For SU(n): coordinates sorted in
    descending order; on_wall iff two coordinates coincide (the sign is
    then meaningless and reported as +1), else the parity of the sorting
    permutation.  For SO(6): absolute values sorted descending using an
    even number of sign flips; a leftover odd flip lands on a zero
    coordinate when one exists and otherwise negates the last (smallest)
    coordinate; on_wall iff two absolute values coincide.  For SO(4)
    each variable is flipped independently (no sorting): on_wall iff a
    coordinate is zero.  SO(2) has the trivial group: every weight is
    its own dominant representative.  The rule is validated against the
    antisymmetrization oracle: the alternating sum of a weight vanishes
    exactly on walls.
    """
    coords = canonicalize(coords, group)
    n = len(coords)
    if group.is_su:
        order = sorted(range(n), key=lambda i: (-coords[i], i))
        dom = tuple(coords[i] for i in order)
        wall = any(dom[k] == dom[k + 1] for k in range(n - 1))
        if wall:
            return dom, 1, True
        return dom, _perm_parity(tuple(order)), False
    if n == 1:
        return coords, 1, False
    if n == 2:
        dom = (abs(coords[0]), abs(coords[1]))
        if 0 in coords:
            return dom, 1, True
        s = 1
        for c in coords:
            if c < 0:
                s = -s
        return dom, s, False
    order = sorted(range(n), key=lambda i: (-abs(coords[i]), i))
    mags = [abs(coords[i]) for i in order]
    wall = any(mags[k] == mags[k + 1] for k in range(n - 1))
    if wall:
        return canonicalize(mags, group), 1, True
    if sum(1 for c in coords if c < 0) % 2 and mags[-1] != 0:
        mags[-1] = -mags[-1]
    return canonicalize(mags, group), _perm_parity(tuple(order)), False
