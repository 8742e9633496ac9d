"""The index inner product R(T) x R(T) -> R(G) for SU(n), Gram matrices,
and exact unimodularity certificates.

The pairing of two monomials with weight sum mu: move mu to the dominant
chamber; if it lands on a wall the pairing is 0; if it equals rho (the
staircase weight (n-1, ..., 1, 0)) the pairing is the moving sign; and
otherwise it is sign times the character with highest weight mu - rho,
computed exactly as the quotient of alternating sums J(e^mu)/J(e^rho).
The exact division must leave no remainder; a failure would indicate a
wall-detection bug and raises InternalError.

A unimodular Gram matrix (determinant a unit) certifies that the paired
family is linearly independent over the invariant subring; together with
the known module rank |W| this certifies a basis.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BasisSizeError,
    ExactDivisionError,
    InternalError,
    NotInvariantError,
    RepringError,
)
from .lattice import Group, canonicalize, root_datum
from .laurent import LaurentPoly, divexact
from .weyl import antisymmetrize, dominant_representative, invariance_witness


@dataclass(frozen=True)
class VirtualCharacter:
    """A Weyl-invariant Laurent value (an invariant-subring element in
    expanded form); invariance is checked at construction."""

    value: LaurentPoly

    def __post_init__(self):
        witness = invariance_witness(self.value)
        if witness is not None:
            raise NotInvariantError(
                f"pairing value is not Weyl-invariant (moved by {witness})", witness
            )

    def is_zero(self) -> bool:
        return self.value.is_zero()

    def __str__(self):
        return str(self.value)


def index_pair(m1, m2, group: Group) -> VirtualCharacter:
    """The inner product of two torus monomials, valued in R(G)."""
    if not group.is_su:
        raise RepringError("the index pairing is implemented for SU groups only")
    m1 = canonicalize(m1, group)
    m2 = canonicalize(m2, group)
    mu = canonicalize(tuple(a + b for a, b in zip(m1, m2)), group)
    dom, s, wall = dominant_representative(mu, group)
    if wall:
        return VirtualCharacter(LaurentPoly.zero(group))
    rho = root_datum(group).rho
    if dom == rho:
        return VirtualCharacter(LaurentPoly.monomial(group, (0,) * group.ncoords, s))
    num = antisymmetrize(LaurentPoly.monomial(group, dom))
    den = antisymmetrize(LaurentPoly.monomial(group, rho))
    try:
        quotient = divexact(num, den)
    except ExactDivisionError as exc:
        raise InternalError(f"character division failed for weight {dom}: {exc}") from exc
    return VirtualCharacter(quotient * s)


def pair_poly(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Bilinear extension of the pairing to whole ring elements."""
    if f.group != g.group:
        raise RepringError("operands of the pairing must share a group")
    out = LaurentPoly.zero(f.group)
    for w1, c1 in f.terms.items():
        for w2, c2 in g.terms.items():
            out = out + index_pair(w1, w2, f.group).value * (c1 * c2)
    return out


@dataclass(frozen=True)
class GramMatrix:
    group: Group
    basis: tuple  # canonical weights
    entries: tuple  # square, entries[i][j] = VirtualCharacter

    def entry(self, i: int, j: int) -> VirtualCharacter:
        return self.entries[i][j]


def gram_matrix(basis, group: Group) -> GramMatrix:
    """Pairwise inner products of a list of monomials (symmetric, since
    the pairing depends only on the weight sum)."""
    if not basis:
        raise RepringError("basis must be non-empty")
    basis = tuple(canonicalize(w, group) for w in basis)
    size = len(basis)
    rows = [[None] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            v = index_pair(basis[i], basis[j], group)
            rows[i][j] = v
            rows[j][i] = v
    return GramMatrix(group, basis, tuple(tuple(r) for r in rows))


def _bareiss_det(rows, group: Group) -> LaurentPoly:
    """Fraction-free determinant; every division is exact by the Sylvester
    identity, and a zero pivot column short-circuits to zero."""
    size = len(rows)
    m = [[rows[i][j] for j in range(size)] for i in range(size)]
    sign = 1
    prev = None
    for k in range(size - 1):
        if m[k][k].is_zero():
            for r in range(k + 1, size):
                if not m[r][k].is_zero():
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly.zero(group)
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                val = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                if prev is not None:
                    val = divexact(val, prev)
                m[i][j] = val
            m[i][k] = LaurentPoly.zero(group)
        prev = m[k][k]
    det = m[size - 1][size - 1]
    return det * sign if sign < 0 else det


def unimodular_check(gm: GramMatrix):
    """(determinant, is_unimodular): the determinant of the Gram matrix
    computed exactly over the Laurent ring; unimodular means +-1."""
    rows = [[v.value for v in row] for row in gm.entries]
    det = _bareiss_det(rows, gm.group)
    return det, det.constant_value() in (1, -1)


def rank_certificate(basis, group: Group) -> bool:
    """True iff the Gram matrix of the |W|-element candidate family is
    unimodular, certifying linear independence and hence (by the known
    free rank |W|) a basis."""
    basis = list(basis)
    if len(basis) != group.weyl_order:
        raise BasisSizeError(
            f"candidate has {len(basis)} elements, expected {group.weyl_order} for {group}"
        )
    _, ok = unimodular_check(gram_matrix(basis, group))
    return ok
