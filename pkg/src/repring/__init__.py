"""Exact bases of torus character rings over the Weyl-invariant subring.

The package models the character ring of a maximal torus as an integer
Laurent polynomial ring on the weight lattice, exposes the Weyl group
action, rewrites invariant elements in fundamental generators, produces
the standard monomial basis (and Steinberg's basis) of the torus ring as
a free module over the invariants, and certifies candidate bases through
an exact index pairing with unimodular Gram determinants.

Supported groups: SU(n) for n >= 2, and SO(2n) for n in {1, 2, 3}.
"""

from .errors import (
    BasisSizeError,
    DimensionError,
    ExactDivisionError,
    ExprSyntaxError,
    GroupMismatchError,
    InternalError,
    LatticeError,
    NotInvariantError,
    RepringError,
    SubstitutionError,
    UnknownVariableError,
)
from .freebasis import (
    BasisContext,
    Decomposition,
    decompose,
    recompose,
    so6_change_of_variables,
    standard_basis,
    steinberg_basis,
)
from .lattice import (
    Family,
    Group,
    RootDatum,
    SOEven,
    SU,
    canonicalize,
    killing_form_cartan,
    parse_weight,
    root_datum,
    weight_str,
)
from .laurent import LaurentPoly, MonomialMap, divexact, monomial_str, parse, substitute
from .pairing import (
    GramMatrix,
    VirtualCharacter,
    gram_matrix,
    index_pair,
    pair_poly,
    rank_certificate,
    unimodular_check,
)
from .symreduce import InvariantPoly, contract, expand, generator_names
from .weyl import (
    WeylElement,
    act,
    antisymmetrize,
    dominant_representative,
    elements,
    generators,
    is_invariant,
    sign,
)

__all__ = [
    "BasisContext",
    "BasisSizeError",
    "Decomposition",
    "DimensionError",
    "ExactDivisionError",
    "ExprSyntaxError",
    "Family",
    "GramMatrix",
    "Group",
    "GroupMismatchError",
    "InternalError",
    "InvariantPoly",
    "LaurentPoly",
    "LatticeError",
    "MonomialMap",
    "NotInvariantError",
    "RepringError",
    "RootDatum",
    "SOEven",
    "SU",
    "SubstitutionError",
    "UnknownVariableError",
    "VirtualCharacter",
    "WeylElement",
    "act",
    "antisymmetrize",
    "canonicalize",
    "contract",
    "decompose",
    "divexact",
    "dominant_representative",
    "elements",
    "expand",
    "generator_names",
    "generators",
    "gram_matrix",
    "index_pair",
    "is_invariant",
    "killing_form_cartan",
    "monomial_str",
    "pair_poly",
    "parse",
    "parse_weight",
    "rank_certificate",
    "recompose",
    "root_datum",
    "sign",
    "so6_change_of_variables",
    "standard_basis",
    "steinberg_basis",
    "substitute",
    "unimodular_check",
    "weight_str",
]
