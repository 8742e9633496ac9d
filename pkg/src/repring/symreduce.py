"""The invariant subring in fundamental generators.

An :class:`InvariantPoly` is an integer polynomial in formal generators
of the Weyl-invariant subring:

* SU(n): e1..e_{n-1}, the elementary symmetric classes of x_1..x_n
  (e_n = 1 by the determinant relation);
* SO(2): the single class x, with negative powers allowed (the
  invariant ring of a bare torus is the full Laurent ring);
* SO(4): wx = x + 1/x and wy = y + 1/y;
* SO(6): std = x + y + z + 1/x + 1/y + 1/z and the two half-spin sums
  spin+ and spin-.

``expand`` multiplies the generator expansions out into the Laurent
model; ``contract`` inverts it by graded-lex leading-term subtraction
(for SO(6) by passing through the rank-3 change of variables into the
SU(4) lattice, where the three generators pull back to e1, e2, e3).
"""

from __future__ import annotations

from . import weyl
from .errors import (
    GroupMismatchError,
    InternalError,
    NotInvariantError,
    RepringError,
)
from .lattice import SU, Group, glex_key
from .laurent import LaurentPoly, MonomialMap, substitute


def generator_names(group: Group):
    n = group.n
    if group.is_su:
        return tuple(f"e{i}" for i in range(1, n))
    if n == 1:
        return ("x",)
    if n == 2:
        return ("wx", "wy")
    return ("std", "spin+", "spin-")


def generator_expansion(group: Group, index: int) -> LaurentPoly:
    """The Laurent expansion of one fundamental generator."""
    n = group.n
    if group.is_su:
        import itertools

        k = index + 1
        terms = []
        for ones in itertools.combinations(range(n), k):
            w = [0] * n
            for i in ones:
                w[i] = 1
            terms.append((tuple(w), 1))
        return LaurentPoly.from_terms(group, terms)
    if n == 1:
        return LaurentPoly.monomial(group, (2,))
    if n == 2:
        w = [0, 0]
        w[index] = 2
        return LaurentPoly.from_terms(group, [(tuple(w), 1), (tuple(-c for c in w), 1)])
    if index == 0:  # std: orbit of x
        terms = []
        for i in range(3):
            for s in (2, -2):
                w = [0, 0, 0]
                w[i] = s
                terms.append((tuple(w), 1))
        return LaurentPoly.from_terms(group, terms)
    import itertools

    want = 0 if index == 1 else 1  # spin+: even number of minus signs
    terms = []
    for signs in itertools.product((1, -1), repeat=3):
        if signs.count(-1) % 2 == want:
            terms.append((signs, 1))
    return LaurentPoly.from_terms(group, terms)


_POWER_CACHE: dict = {}


def _gen_power(group: Group, index: int, k: int) -> LaurentPoly:
    if k < 0:
        key = (group, index, k)
        if key not in _POWER_CACHE:
            _POWER_CACHE[key] = generator_expansion(group, index).inverse_monomial() ** (-k)
        return _POWER_CACHE[key]
    key = (group, index, k)
    if key not in _POWER_CACHE:
        _POWER_CACHE[key] = generator_expansion(group, index) ** k
    return _POWER_CACHE[key]


class InvariantPoly:
    """Integer polynomial in the fundamental generators of one group."""

    __slots__ = ("group", "terms")

    def __init__(self, group: Group, terms: dict):
        self.group = group
        self.terms = terms

    @classmethod
    def zero(cls, group: Group):
        return cls(group, {})

    @classmethod
    def one(cls, group: Group):
        return cls.constant(group, 1)

    @classmethod
    def constant(cls, group: Group, c: int):
        k = len(generator_names(group))
        return cls(group, {(0,) * k: int(c)} if c else {})

    @classmethod
    def generator(cls, group: Group, index: int, power: int = 1):
        k = len(generator_names(group))
        exps = [0] * k
        exps[index] = power
        return cls.from_terms(group, [(tuple(exps), 1)])

    @classmethod
    def from_terms(cls, group: Group, pairs):
        k = len(generator_names(group))
        allow_negative = not group.is_su and group.n == 1
        terms = {}
        for exps, coeff in pairs:
            exps = tuple(int(e) for e in exps)
            if len(exps) != k:
                raise RepringError(f"expected {k} generator exponents for {group}")
            if not allow_negative and any(e < 0 for e in exps):
                raise RepringError(f"negative generator exponent in {exps} for {group}")
            c = terms.get(exps, 0) + int(coeff)
            if c:
                terms[exps] = c
            elif exps in terms:
                del terms[exps]
        return cls(group, terms)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other):
        if self.group != other.group:
            raise GroupMismatchError(f"{self.group} vs {other.group}")

    def __eq__(self, other):
        if not isinstance(other, InvariantPoly):
            return NotImplemented
        return self.group == other.group and self.terms == other.terms

    def __hash__(self):
        return hash((self.group, frozenset(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, int):
            other = InvariantPoly.constant(self.group, other)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            elif e in terms:
                del terms[e]
        return InvariantPoly(self.group, terms)

    __radd__ = __add__

    def __neg__(self):
        return InvariantPoly(self.group, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = InvariantPoly.constant(self.group, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return InvariantPoly.zero(self.group)
            return InvariantPoly(self.group, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return InvariantPoly(self.group, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = InvariantPoly.one(self.group)
        for _ in range(k):
            result = result * self
        return result

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: glex_key(kv[0]), reverse=True)

    def expand(self) -> LaurentPoly:
        return expand(self)

    def __str__(self):
        if not self.terms:
            return "0"
        names = generator_names(self.group)
        pieces = []
        for i, (exps, c) in enumerate(self.sorted_terms()):
            factors = []
            for name, e in zip(names, exps):
                if e == 0:
                    continue
                factors.append(name if e == 1 else f"{name}^{e}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if i == 0:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(pieces)

    def __repr__(self):
        return f"InvariantPoly({self.group}, {str(self)!r})"


def expand(p: InvariantPoly) -> LaurentPoly:
    """Substitute each generator's Laurent expansion and multiply out.

    Evaluation is nested Horner, one generator at a time, so every
    multiplication is by a single short generator expansion rather than
    by a large power product.
    """
    group = p.group
    if not p.terms:
        return LaurentPoly.zero(group)
    if not group.is_su and group.n == 1:
        # the lone generator is the monomial x itself (negative powers fine)
        return LaurentPoly.from_terms(group, (((2 * e[0],), c) for e, c in p.terms.items()))
    k = len(generator_names(group))
    gens = [generator_expansion(group, i) for i in range(k)]
    zero_w = (0,) * group.ncoords

    def ev(sub: dict, i: int) -> LaurentPoly:
        if i == k:
            return LaurentPoly.monomial(group, zero_w, sub.get((), 0))
        buckets = {}
        for key, c in sub.items():
            buckets.setdefault(key[0], {})[key[1:]] = c
        result = LaurentPoly.zero(group)
        for e in range(max(buckets), -1, -1):
            if result:
                result = result * gens[i]
            if e in buckets:
                result = result + ev(buckets[e], i + 1)
        return result

    return ev(dict(p.terms), 0)


# ---------------------------------------------------------------------
# the SO(6) <-> SU(4) change of variables (shared with the basis module)

def so6_su4_maps():
    """Mutually inverse lattice maps between the SO(6) doubled lattice and
    the SU(4) quotient lattice: sqrt(xyz) -> a, sqrt(x/(yz)) -> b,
    sqrt(z/(xy)) -> c, sqrt(y/(xz)) -> d, with abcd = 1."""
    from .lattice import SOEven

    so6 = SOEven(3)
    su4 = SU(4)
    fwd = MonomialMap(
        source=so6,
        target=su4,
        matrix=((1, 0, 1), (1, -1, 0), (0, -1, 1), (0, 0, 0)),
        denom=2,
    )
    inv = MonomialMap(
        source=su4,
        target=so6,
        matrix=((1, 1, -1, -1), (1, -1, -1, 1), (1, -1, 1, -1)),
        denom=1,
    )
    return fwd, inv


# index of the SO(6) generator each SU(4) elementary class pulls back to
_SO6_FROM_SU4 = {0: 1, 1: 0, 2: 2}  # e1 -> spin+, e2 -> std, e3 -> spin-
_so6_dictionary_checked = False


def _check_so6_dictionary():
    """Derive (and verify) the SO(6) generator dictionary from the maps."""
    global _so6_dictionary_checked
    if _so6_dictionary_checked:
        return
    from .lattice import SOEven

    so6 = SOEven(3)
    su4 = SU(4)
    _, inv = so6_su4_maps()
    for su4_index, so6_index in _SO6_FROM_SU4.items():
        pulled = substitute(generator_expansion(su4, su4_index), inv)
        if pulled != generator_expansion(so6, so6_index):
            raise InternalError("SO(6) generator dictionary does not match the change of variables")
    _so6_dictionary_checked = True


# ---------------------------------------------------------------------
# contraction

_CONTRACT_GUARD = 200_000


def _leading_exponents(w, group: Group):
    """Generator exponents whose expansion has graded-lex leading weight w."""
    n = group.n
    if group.is_su:
        if any(w[i] < w[i + 1] for i in range(n - 1)) or w[-1] != 0:
            raise InternalError(f"leading weight {w} of an invariant element is not dominant")
        return tuple(w[i] - w[i + 1] for i in range(n - 1))
    if n == 1:
        return (w[0] // 2,)
    if any(c < 0 or c % 2 for c in w):
        raise InternalError(f"leading weight {w} of an invariant element is not dominant")
    return tuple(c // 2 for c in w)


def contract(f: LaurentPoly) -> InvariantPoly:
    """Rewrite a Weyl-invariant element in the fundamental generators.

    Classical leading-term reduction: repeatedly subtract
    coefficient * (generator monomial) whose expansion matches the
    graded-lex leading term, which strictly decreases the leading
    weight.  Raises NotInvariantError (with a violating group element)
    when f is not invariant.
    """
    group = f.group
    witness = weyl.invariance_witness(f)
    if witness is not None:
        raise NotInvariantError(f"element is not Weyl-invariant (moved by {witness})", witness)
    if not group.is_su and group.n == 3:
        _check_so6_dictionary()
        fwd, _ = so6_su4_maps()
        inner = contract(substitute(f, fwd))
        pairs = []
        for exps, c in inner.terms.items():
            out = [0, 0, 0]
            for su4_index, so6_index in _SO6_FROM_SU4.items():
                out[so6_index] = exps[su4_index]
            pairs.append((tuple(out), c))
        return InvariantPoly.from_terms(f.group, pairs)

    work = f
    out = {}
    previous = None
    steps = 0
    while work:
        steps += 1
        if steps > _CONTRACT_GUARD:
            raise InternalError("contraction failed to terminate")
        w, c = work.leading_term()
        key = glex_key(w)
        if previous is not None and key >= previous:
            raise InternalError("contraction leading weight failed to decrease")
        previous = key
        exps = _leading_exponents(w, group)
        out[exps] = out.get(exps, 0) + c
        term = InvariantPoly.from_terms(group, [(exps, c)])
        work = work - expand(term)
    return InvariantPoly(group, {e: c for e, c in out.items() if c})
