"""Weight lattices for the supported groups.

Two families are supported:

* ``SU(n)`` (n >= 2): weights are integer vectors of length n holding the
  exponents of x_1..x_n, taken modulo the all-ones vector (the relation
  x_1*...*x_n = 1).  The canonical representative of a class is the shift
  with minimum coordinate 0, which keeps the Weyl action a plain
  coordinate permutation.

* ``SOEven(n)`` = SO(2n) for n in {1, 2, 3}: weights are stored as
  DOUBLED exponent vectors, so the half-spin weight sqrt(x*y*z) of SO(6)
  is the all-ones vector (1, 1, 1).  For n = 3 a vector lies in the
  lattice iff all coordinates share one parity (all even: ordinary
  weights; all odd: spin weights).  For n in {1, 2} the torus rings carry
  no half-integer weights, so only even (ordinary) vectors are admitted;
  for n = 2 the variables x, y are the two independent rank-1 factors of
  the rank-2 algebra, whose reflections flip each variable separately.

Weights are plain tuples of ints.  Everything here is immutable and
side-effect free.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionError, LatticeError, RepringError


class Family(enum.Enum):
    SU = "su"
    SO_EVEN = "so-even"


@dataclass(frozen=True)
class Group:
    """A supported compact group, determined by family and rank parameter."""

    family: Family
    n: int

    def __post_init__(self):
        if self.family is Family.SU:
            if self.n < 2:
                raise RepringError(f"SU(n) needs n >= 2, got n={self.n}")
        elif self.family is Family.SO_EVEN:
            if not 1 <= self.n <= 3:
                raise RepringError(f"SO(2n) is supported for n in 1..3, got n={self.n}")
        else:  # pragma: no cover
            raise RepringError(f"unknown family {self.family!r}")

    @property
    def ncoords(self) -> int:
        """Number of stored coordinates (n for both families)."""
        return self.n

    @property
    def is_su(self) -> bool:
        return self.family is Family.SU

    @property
    def weyl_order(self) -> int:
        import math

        if self.is_su:
            return math.factorial(self.n)
        return 2 ** (self.n - 1) * math.factorial(self.n)

    def __str__(self):
        if self.is_su:
            return f"SU({self.n})"
        return f"SO({2 * self.n})"


def SU(n: int) -> Group:
    return Group(Family.SU, n)


def SOEven(n: int) -> Group:
    return Group(Family.SO_EVEN, n)


def spin_allowed(group: Group) -> bool:
    """Whether odd (half-integer) doubled coordinates are lattice points."""
    return group.family is Family.SO_EVEN and group.n == 3


def check_length(coords, group: Group):
    if len(coords) != group.ncoords:
        raise DimensionError(
            f"expected {group.ncoords} coordinates for {group}, got {len(coords)}"
        )


def canonicalize(coords, group: Group) -> tuple:
    """Canonical representative of a weight.

    SU(n): subtract the minimum coordinate from every entry (quotient by
    the all-ones relation); two weights are equal in the lattice iff
    their canonical forms are identical tuples.

    SOEven(n): the identity map, after validating the parity constraint
    on the doubled coordinates.
    """
    coords = tuple(int(c) for c in coords)
    check_length(coords, group)
    if group.is_su:
        m = min(coords)
        if m:
            coords = tuple(c - m for c in coords)
        return coords
    parities = {c & 1 for c in coords}
    if len(parities) > 1:
        raise LatticeError(
            f"mixed parity {coords} is not a weight of {group} (doubled coordinates)"
        )
    if 1 in parities and not spin_allowed(group):
        raise LatticeError(f"{group} has no spin weights, got doubled {coords}")
    return coords


def add_weights(a, b, group: Group) -> tuple:
    return canonicalize(tuple(x + y for x, y in zip(a, b)), group)


def grade(coords) -> int:
    return sum(coords)


def glex_key(coords):
    """Graded-lexicographic sort key (grade first, then lex on the tuple)."""
    return (sum(coords), coords)


def weight_str(coords, group: Group) -> str:
    """Textual weight syntax: "(2,1,0)"; odd doubled coordinates as "k/2"."""
    coords = canonicalize(coords, group)
    if group.is_su:
        return "(" + ",".join(str(c) for c in coords) + ")"
    if coords and coords[0] & 1:
        return "(" + ",".join(f"{c}/2" for c in coords) + ")"
    return "(" + ",".join(str(c // 2) for c in coords) + ")"


def parse_weight(text: str, group: Group) -> tuple:
    """Inverse of :func:`weight_str`."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise LatticeError(f"weight text must be parenthesised: {text!r}")
    parts = [p.strip() for p in s[1:-1].split(",")]
    coords = []
    halved = False
    for p in parts:
        if p.endswith("/2"):
            coords.append(int(p[:-2]))
            halved = True
        else:
            coords.append(int(p))
    if group.is_su:
        if halved:
            raise LatticeError(f"half-integer weight {text!r} outside SOEven context")
        return canonicalize(coords, group)
    if halved:
        return canonicalize(coords, group)
    return canonicalize([2 * c for c in coords], group)


@dataclass(frozen=True)
class RootDatum:
    group: Group
    roots: tuple
    fundamental_weights: tuple
    rho: tuple


def root_datum(group: Group) -> RootDatum:
    """Roots, fundamental weights and rho (the latter two for SU only).

    Roots are raw difference vectors, not canonicalized: for SU(n) the
    L_i - L_j with i != j, for SOEven the +-L_i +- L_j in doubled
    coordinates (for n = 2 these are the adjoint weights of the two
    independent rank-1 factors, i.e. (+-4, 0) and (0, +-4) doubled).
    """
    n = group.n
    roots = []
    if group.is_su:
        for i in range(n):
            for j in range(n):
                if i != j:
                    r = [0] * n
                    r[i] = 1
                    r[j] = -1
                    roots.append(tuple(r))
        fundamental = tuple(tuple(1 if k <= i else 0 for k in range(n)) for i in range(n - 1))
        rho = tuple(range(n - 1, -1, -1))
        return RootDatum(group, tuple(roots), fundamental, rho)
    if n == 1:
        return RootDatum(group, (), (), None)
    if n == 2:
        # doubled coordinates of the rank-1 adjoint weights x^{+-2}, y^{+-2}
        roots = [(4, 0), (-4, 0), (0, 4), (0, -4)]
        return RootDatum(group, tuple(roots), (), None)
    for i in range(n):
        for j in range(i + 1, n):
            for si in (2, -2):
                for sj in (2, -2):
                    r = [0] * n
                    r[i] = si
                    r[j] = sj
                    roots.append(tuple(r))
    return RootDatum(group, tuple(roots), (), None)


def killing_form_cartan(a, b, n: int):
    """Killing form on the diagonal Cartan of the traceless algebra of rank
    n-1: k(sum a_i H_i, sum b_i H_i) = 2n * sum a_i b_i.

    Inputs are rational sequences of length n with zero sum (the trace
    condition); the result is exact.
    """
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    if len(a) != n or len(b) != n:
        raise DimensionError(f"expected sequences of length {n}")
    if sum(a) != 0 or sum(b) != 0:
        raise RepringError("trace condition violated: coordinates must sum to 0")
    total = 2 * n * sum(x * y for x, y in zip(a, b))
    return int(total) if total.denominator == 1 else total
