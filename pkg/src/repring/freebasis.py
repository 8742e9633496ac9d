"""Free-module bases of the torus ring over the invariant subring.

For SU(n) the standard basis is the exponent box
{x_1^{a_1} * ... * x_{n-1}^{a_{n-1}} : 0 <= a_i <= n-i}, of size n!, and
decomposition runs by monic reduction against a tower of minimal
polynomials: Q_0(t) = t^n - e1 t^{n-1} + ... +- 1 is the shared minimal
polynomial of every variable, and Q_k is Q_{k-1} with the factor
(t - x_k) removed by synthetic division (the remainder must vanish
identically, which is asserted).  Powers of x_n never appear explicitly:
x_n = (x_1...x_{n-1})^{-1} is folded in Horner fashion using the
inverse-variable identity x^{-1} = +-(x^{n-1} - e1 x^{n-2} + ...) that
the relation's unit constant term provides.

The reduction works on polynomials in formal generator symbols E_i and
variable symbols X_i (a dict keyed by the two exponent tuples).  Keeping
the generators symbolic is what makes monic division well-defined; the
same engine, with one quadratic relation per variable, handles SO(4).
SO(2) is its own torus (basis {1}), and SO(6) routes through the SU(4)
lattice by the half-spin change of variables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import symreduce
from .errors import BasisSizeError, GroupMismatchError, InternalError, RepringError
from .lattice import SOEven, SU, Group, canonicalize
from .laurent import LaurentPoly, MonomialMap, substitute
from .symreduce import InvariantPoly


# ---------------------------------------------------------------------
# formal polynomials: dict keyed by one flat exponent tuple
# (E_1..E_ne generator exponents followed by X_1..X_nv variable exponents)

from operator import add as _add


def _fmerge(dst, key, c):
    s = dst.get(key, 0) + c
    if s:
        dst[key] = s
    elif key in dst:
        del dst[key]


def _fadd(a, b):
    out = dict(a)
    for key, c in b.items():
        _fmerge(out, key, c)
    return out


def _fmul(a, b):
    if len(a) > len(b):
        a, b = b, a
    out = {}
    get = out.get
    for k1, c1 in a.items():
        for k2, c2 in b.items():
            key = tuple(map(_add, k1, k2))
            s = get(key, 0) + c1 * c2
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return out


class _Engine:
    """Monic reduction engine over formal generators and variables.

    rel[v] holds the non-leading coefficients q_0..q_{d-1} of the monic
    degree-d relation of variable v, whose coefficients may involve
    E-symbols and variables of index < v only; the substitution
    X_v^d -> -(q_0 + q_1 X_v + ...) therefore never feeds back into
    already-reduced higher variables.
    """

    def __init__(self, group: Group, nv: int, ne: int, degs):
        self.group = group
        self.nv = nv
        self.ne = ne
        self.width = ne + nv
        self.degs = list(degs)
        self.box = [d - 1 for d in degs]
        self.rel = [None] * nv
        self._powers = [dict() for _ in range(nv)]
        self._stash_pow = {0: self.const(1)}

    # formal constructors
    def const(self, c: int = 1):
        if c == 0:
            return {}
        return {(0,) * self.width: c}

    def evar(self, i: int, c: int = 1):
        k = [0] * self.width
        k[i] = 1
        return {tuple(k): c}

    def xvar(self, v: int, power: int = 1, c: int = 1):
        k = [0] * self.width
        k[self.ne + v] = power
        return {tuple(k): c}

    def _xmono(self, key):
        """Stored weight of the variable part of a formal monomial."""
        x = key[self.ne:]
        if self.group.is_su:
            return x + (0,)
        return tuple(2 * a for a in x)

    def ev(self, p) -> LaurentPoly:
        """Expand a formal polynomial into the Laurent model."""
        out = LaurentPoly.zero(self.group)
        for key, c in p.items():
            term = LaurentPoly.monomial(self.group, self._xmono(key), c)
            for i in range(self.ne):
                if key[i]:
                    term = term * symreduce._gen_power(self.group, i, key[i])
            out = out + term
        return out

    def xpow(self, v: int, d: int):
        """Reduced form of X_v^d (memoized); involves variables <= v."""
        tab = self._powers[v]
        out = tab.get(d)
        if out is not None:
            return out
        if d <= self.box[v]:
            out = self.xvar(v, d)
            tab[d] = out
            return out
        prev = self.xpow(v, d - 1)
        deg = self.degs[v]
        slot = self.ne + v
        out = {}
        for key, c in prev.items():
            k = key[slot] + 1
            if k < deg:
                lifted = list(key)
                lifted[slot] = k
                _fmerge(out, tuple(lifted), c)
            else:
                base = list(key)
                for j in range(deg):
                    base[slot] = j
                    bkey = tuple(base)
                    for qkey, qc in self.rel[v][j].items():
                        _fmerge(out, tuple(map(_add, bkey, qkey)), -c * qc)
        tab[d] = out
        return out

    def reduce(self, p):
        """Bring every X-exponent into the box, last variable first."""
        for v in reversed(range(self.nv)):
            slot = self.ne + v
            bound = self.box[v]
            if all(key[slot] <= bound for key in p):
                continue
            out = {}
            for key, c in p.items():
                d = key[slot]
                if d <= bound:
                    _fmerge(out, key, c)
                    continue
                base = list(key)
                base[slot] = 0
                bkey = tuple(base)
                for k2, c2 in self.xpow(v, d).items():
                    _fmerge(out, tuple(map(_add, bkey, k2)), c * c2)
            p = out
        return p

    def stash_pow(self, k: int):
        """Reduced form of the stashed unit x_n^k (SU engines only)."""
        out = self._stash_pow.get(k)
        if out is None:
            out = self.reduce(_fmul(self.stash_pow(k - 1), self.xn_pre))
            self._stash_pow[k] = out
        return out


def _su_engine(group: Group) -> _Engine:
    n = group.n
    nv = ne = n - 1
    eng = _Engine(group, nv, ne, degs=[n - v for v in range(nv)])

    def e_coeff(i: int, sign: int):
        # coefficient (+-)e_i as a formal term; e_0 = e_n = 1
        if i == 0 or i == n:
            return eng.const(sign)
        return eng.evar(i - 1, sign)

    # shared minimal polynomial P(t) = prod (t - x_i), coefficients low->high
    coeffs = [e_coeff(n - j, (-1) ** ((n - j) % 2)) for j in range(n + 1)]
    for v in range(nv):
        if coeffs[-1] != eng.const(1):
            raise InternalError("tower polynomial lost monicity")
        eng.rel[v] = [dict(c) for c in coeffs[:-1]]
        if v + 1 < nv:
            coeffs = _syndiv(eng, coeffs, v)

    # multiplier for the stashed x_n = prod_v x_{v+1}^{-1}: the product of
    # the inverse-variable identities x^{-1} = sum_j (-1)^{j+1} e_{n-j} x^{j-1}
    pre = eng.const(1)
    for v in range(nv):
        s = {}
        slot = ne + v
        for j in range(1, n + 1):
            for key, c in e_coeff(n - j, (-1) ** ((j + 1) % 2)).items():
                lifted = list(key)
                lifted[slot] += j - 1
                _fmerge(s, tuple(lifted), c)
        pre = _fmul(pre, s)
    eng.xn_pre = eng.reduce(pre)
    want = LaurentPoly.monomial(group, (0,) * (n - 1) + (1,))
    if eng.ev(eng.xn_pre) != want:
        raise InternalError("inverse-product identity failed to evaluate to x_n")
    return eng


def _syndiv(eng: _Engine, coeffs, v: int):
    """Synthetic division of a monic formal polynomial by (t - X_v);
    the remainder must expand to zero in the Laurent model."""
    slot = eng.ne + v

    def times_x(p):
        out = {}
        for key, c in p.items():
            lifted = list(key)
            lifted[slot] += 1
            out[tuple(lifted)] = c
        return out

    d = len(coeffs) - 1
    b = [None] * d
    b[d - 1] = dict(coeffs[d])
    for j in range(d - 1, 0, -1):
        b[j - 1] = _fadd(coeffs[j], times_x(b[j]))
    remainder = _fadd(coeffs[0], times_x(b[0]))
    if not eng.ev(remainder).is_zero():
        raise InternalError("synthetic division remainder is nonzero")
    return b


def _so4_engine(group: Group) -> _Engine:
    eng = _Engine(group, nv=2, ne=2, degs=[2, 2])
    for v in range(2):
        eng.rel[v] = [eng.const(1), eng.evar(v, -1)]  # t^2 - w_v t + 1
    return eng


# ---------------------------------------------------------------------
# contexts and decompositions

@dataclass(frozen=True)
class BasisContext:
    group: Group
    basis: tuple  # canonical weights, ascending lex on box exponents
    tower: tuple = None  # SU: Q_k coefficient lists (LaurentPoly, low->high, monic)
    _engine: object = field(default=None, repr=False, compare=False)
    _su4: object = field(default=None, repr=False, compare=False)
    _maps: tuple = field(default=None, repr=False, compare=False)

    def basis_index(self, coords) -> int:
        return self.basis.index(canonicalize(coords, self.group))


_CONTEXTS: dict = {}


def standard_basis(group: Group) -> BasisContext:
    """The standard monomial basis plus the reduction tower for the group."""
    if group in _CONTEXTS:
        return _CONTEXTS[group]
    n = group.n
    if group.is_su:
        eng = _su_engine(group)
        exps = itertools.product(*(range(n - i) for i in range(n - 1)))
        basis = tuple(e + (0,) for e in exps)
        tower = tuple(
            tuple(eng.ev(c) for c in eng.rel[v]) + (LaurentPoly.one(group),)
            for v in range(eng.nv)
        )
        ctx = BasisContext(group, basis, tower, _engine=eng)
    elif n == 1:
        ctx = BasisContext(group, ((0,),))
    elif n == 2:
        eng = _so4_engine(group)
        basis = tuple((2 * a, 2 * b) for a, b in itertools.product(range(2), range(2)))
        ctx = BasisContext(group, basis, _engine=eng)
    else:
        fwd, inv = so6_change_of_variables()
        su4 = standard_basis(SU(4))
        basis = tuple(inv.apply(w) for w in su4.basis)
        ctx = BasisContext(group, basis, _su4=su4, _maps=(fwd, inv))
    _CONTEXTS[group] = ctx
    return ctx


@dataclass(frozen=True)
class Decomposition:
    """Coefficients of an element over a basis: sum expand(c_m) * m."""

    context: BasisContext
    coeffs: dict  # basis weight -> nonzero InvariantPoly

    def coefficient(self, coords) -> InvariantPoly:
        w = canonicalize(coords, self.context.group)
        return self.coeffs.get(w, InvariantPoly.zero(self.context.group))

    def items(self):
        """(basis monomial, coefficient) pairs in basis order, nonzero only."""
        return [(w, self.coeffs[w]) for w in self.context.basis if w in self.coeffs]

    def __eq__(self, other):
        if not isinstance(other, Decomposition):
            return NotImplemented
        return (
            self.context.group == other.context.group
            and self.context.basis == other.context.basis
            and self.coeffs == other.coeffs
        )

    def __hash__(self):  # pragma: no cover
        return hash((self.context.group, frozenset(self.coeffs)))

    def plus(self, other: "Decomposition") -> "Decomposition":
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            s = out.get(w, InvariantPoly.zero(self.context.group)) + c
            if s:
                out[w] = s
            elif w in out:
                del out[w]
        return Decomposition(self.context, out)

    def scaled(self, p: InvariantPoly) -> "Decomposition":
        out = {}
        for w, c in self.coeffs.items():
            s = p * c
            if s:
                out[w] = s
        return Decomposition(self.context, out)

    def to_obj(self):
        from .laurent import monomial_str

        return [[monomial_str(w, self.context.group), str(c)] for w, c in self.items()]


def _collect(ctx: BasisContext, formal) -> Decomposition:
    eng = ctx._engine
    ne = eng.ne
    per_basis = {}
    for key, c in formal.items():
        per_basis.setdefault(key[ne:], {})[key[:ne]] = c
    coeffs = {}
    for x, emap in per_basis.items():
        w = canonicalize(eng._xmono((0,) * ne + x), ctx.group)
        coeffs[w] = InvariantPoly(ctx.group, emap)
    return Decomposition(ctx, coeffs)


def decompose(f: LaurentPoly, ctx: BasisContext) -> Decomposition:
    """Unique coefficients of f over the basis, with recompose(result) = f.

    SU(n): reduce the x_1..x_{n-1} exponents into the box by monic
    division against the tower and fold each stashed power of
    x_n = (x_1...x_{n-1})^{-1} back in through its cached reduced form.
    SO(4): the same engine with one quadratic relation per variable.
    SO(2): the ring is its own invariant ring.  SO(6): substitute into
    the SU(4) lattice, decompose there, and pull basis monomials and
    generator names back.
    """
    if not isinstance(ctx, BasisContext) or ctx.basis is None:
        raise RepringError("malformed basis context")
    if f.group != ctx.group:
        raise GroupMismatchError(f"{f.group} vs context {ctx.group}")
    group = ctx.group
    n = group.n
    if group.is_su:
        eng = ctx._engine
        ne = eng.ne
        buckets = {}
        for w, c in f.terms.items():
            buckets.setdefault(w[-1], {})[(0,) * ne + w[:-1]] = c
        formal = {}
        for k, bucket in buckets.items():
            part = eng.reduce(bucket)
            if k:
                part = eng.reduce(_fmul(part, eng.stash_pow(k)))
            formal = _fadd(formal, part)
        return _collect(ctx, formal)
    if n == 1:
        if f.is_zero():
            return Decomposition(ctx, {})
        return Decomposition(ctx, {(0,): symreduce.contract(f)})
    if n == 2:
        eng = ctx._engine
        formal = {}
        for w, c in f.terms.items():
            term = eng.const(c)
            for v in range(2):
                k = w[v] // 2
                if k >= 0:
                    factor = eng.xvar(v, k)
                else:
                    inv = _fadd(eng.evar(v), eng.xvar(v, 1, -1))  # w_v - X_v
                    factor = eng.const(1)
                    for _ in range(-k):
                        factor = _fmul(factor, inv)
                term = _fmul(term, factor)
            formal = _fadd(formal, term)
        formal = eng.reduce(formal)
        return _collect(ctx, formal)
    # SO(6) via SU(4)
    fwd, inv = ctx._maps
    inner = decompose(substitute(f, fwd), ctx._su4)
    coeffs = {}
    for w4, ip4 in inner.coeffs.items():
        w6 = inv.apply(w4)
        pairs = []
        for exps, c in ip4.terms.items():
            out = [0, 0, 0]
            for su4_index, so6_index in symreduce._SO6_FROM_SU4.items():
                out[so6_index] = exps[su4_index]
            pairs.append((tuple(out), c))
        coeffs[w6] = InvariantPoly.from_terms(group, pairs)
    return Decomposition(ctx, coeffs)


def recompose(d: Decomposition) -> LaurentPoly:
    """Inverse of decompose: sum expand(coeffs[m]) * m."""
    group = d.context.group
    out = LaurentPoly.zero(group)
    for w, c in d.coeffs.items():
        out = out + symreduce.expand(c) * LaurentPoly.monomial(group, w)
    return out


# ---------------------------------------------------------------------
# Steinberg's basis

def steinberg_basis(n: int):
    """The weights w^{-1}(lambda_w) for w in S_n, where lambda_w is the sum
    of the fundamental weights omega_i over the simple roots that w^{-1}
    sends negative.  Returned in permutation enumeration order, with
    multiplicity preserved."""
    if n < 2:
        raise RepringError("Steinberg basis is generated for SU(n), n >= 2")
    group = SU(n)
    out = []
    for p in itertools.permutations(range(n)):
        q = [0] * n  # inverse permutation
        for i, t in enumerate(p):
            q[t] = i
        lam = [0] * n
        for i in range(n - 1):
            if q[i] > q[i + 1]:  # w^{-1} makes the i-th simple root negative
                for k in range(i + 1):
                    lam[k] += 1
        res = [0] * n
        for k in range(n):
            res[q[k]] = lam[k]
        out.append(canonicalize(res, group))
    return out


def so6_change_of_variables():
    """The mutually inverse monomial maps between the SO(6) and SU(4)
    lattices (sqrt(xyz) -> a and friends, abcd = 1)."""
    return symreduce.so6_su4_maps()
