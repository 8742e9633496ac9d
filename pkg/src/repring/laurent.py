"""Exact integer Laurent polynomial arithmetic over a weight lattice.

A :class:`LaurentPoly` is a finite integer combination of canonical
weights of one group; it is the concrete model of the torus character
ring.  Multiplication adds weights and re-canonicalizes, so for SU(n)
the relation x_1*...*x_n = 1 is applied silently.

Values are immutable in use: no operation mutates its operands, and the
term dictionary of a constructed polynomial is never written to again.

Expression grammar (used by the CLI and by test fixtures)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor | factor)*      # juxtaposition multiplies
    factor := primary ['^' exponent]
    primary:= integer | variable | '(' expr ')'
    exponent := ['-'] integer | '(' ['-'] integer ['/' 2] ')'

Variables: x, y, z when n = 3 (and for SOEven n <= 3); t for SU(2);
x1..xn always.  Half exponents ^(k/2) are accepted only for SOEven
groups.  Division requires an invertible (single-monomial, unit
coefficient) divisor.  Whitespace is insignificant.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DimensionError,
    ExactDivisionError,
    ExprSyntaxError,
    GroupMismatchError,
    LatticeError,
    RepringError,
    SubstitutionError,
    UnknownVariableError,
)
from .lattice import Group, canonicalize, check_length, glex_key


class LaurentPoly:
    """Finite map canonical-weight -> nonzero integer coefficient."""

    __slots__ = ("group", "terms")

    def __init__(self, group: Group, terms: dict):
        # internal constructor: terms must already be canonical and pruned
        self.group = group
        self.terms = terms

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, group: Group) -> "LaurentPoly":
        return cls(group, {})

    @classmethod
    def one(cls, group: Group) -> "LaurentPoly":
        return cls.monomial(group, (0,) * group.ncoords)

    @classmethod
    def monomial(cls, group: Group, coords, coeff: int = 1) -> "LaurentPoly":
        if coeff == 0:
            return cls.zero(group)
        return cls(group, {canonicalize(coords, group): int(coeff)})

    @classmethod
    def from_terms(cls, group: Group, pairs) -> "LaurentPoly":
        terms = {}
        for coords, coeff in pairs:
            w = canonicalize(coords, group)
            c = terms.get(w, 0) + int(coeff)
            if c:
                terms[w] = c
            elif w in terms:
                del terms[w]
        return cls(group, terms)

    # -- basic queries ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def leading_term(self):
        """(weight, coefficient) maximal in graded-lex order."""
        if not self.terms:
            raise RepringError("zero polynomial has no leading term")
        w = max(self.terms, key=glex_key)
        return w, self.terms[w]

    def sorted_terms(self):
        """Terms in descending graded-lex order (deterministic)."""
        return sorted(self.terms.items(), key=lambda kv: glex_key(kv[0]), reverse=True)

    def constant_value(self):
        """The integer value if this is a constant, else None."""
        if not self.terms:
            return 0
        if len(self.terms) == 1:
            zero = (0,) * self.group.ncoords
            if zero in self.terms:
                return self.terms[zero]
        return None

    def coefficient(self, coords) -> int:
        return self.terms.get(canonicalize(coords, self.group), 0)

    # -- ring operations ----------------------------------------------

    def _check(self, other):
        if self.group != other.group:
            raise GroupMismatchError(f"{self.group} vs {other.group}")

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.group == other.group and self.terms == other.terms

    def __hash__(self):
        return hash((self.group, frozenset(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.monomial(self.group, (0,) * self.group.ncoords, other)
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            s = terms.get(w, 0) + c
            if s:
                terms[w] = s
            elif w in terms:
                del terms[w]
        return LaurentPoly(self.group, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.group, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.monomial(self.group, (0,) * self.group.ncoords, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero(self.group)
            return LaurentPoly(self.group, {w: c * other for w, c in self.terms.items()})
        self._check(other)
        su = self.group.is_su
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = tuple(a + b for a, b in zip(w1, w2))
                if su:
                    m = min(w)
                    if m:
                        w = tuple(a - m for a in w)
                s = out.get(w, 0) + c1 * c2
                if s:
                    out[w] = s
                elif w in out:
                    del out[w]
        return LaurentPoly(self.group, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise RepringError("polynomial powers must be nonnegative integers")
        result = LaurentPoly.one(self.group)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def inverse_monomial(self) -> "LaurentPoly":
        """Inverse, defined only for single-term unit-coefficient values."""
        if len(self.terms) != 1:
            raise RepringError("only monomials are invertible")
        ((w, c),) = self.terms.items()
        if c not in (1, -1):
            raise RepringError(f"coefficient {c} is not a unit")
        return LaurentPoly.monomial(self.group, tuple(-a for a in w), c)

    # -- formatting ---------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"LaurentPoly({self.group}, {format_poly(self)!r})"

    def to_obj(self):
        """JSON-compatible serialized form: (weight, coefficient) pairs
        in descending graded-lex order."""
        return [[list(w), c] for w, c in self.sorted_terms()]


# ---------------------------------------------------------------------
# variable tables and formatting

def variable_table(group: Group) -> dict:
    """name -> coordinate index, per group."""
    n = group.n
    table = {}
    if group.is_su:
        if n == 2:
            table["t"] = 0
        elif n == 3:
            table.update({"x": 0, "y": 1, "z": 2})
    else:
        for name, i in zip("xyz", range(n)):
            table[name] = i
    for i in range(n):
        table[f"x{i + 1}"] = i
    return table


def _display_names(group: Group):
    n = group.n
    if group.is_su and n >= 4:
        return [f"x{i + 1}" for i in range(n)]
    return list("xyz"[:n])


def variable_monomial(group: Group, index: int, exponent: int = 1) -> LaurentPoly:
    coords = [0] * group.ncoords
    coords[index] = exponent if group.is_su else 2 * exponent
    return LaurentPoly.monomial(group, coords)


def monomial_str(coords, group: Group) -> str:
    """Render one canonical weight as a product of variable powers."""
    coords = canonicalize(coords, group)
    if group.is_su and group.n == 2:
        k = coords[0] - coords[1]
        if k == 0:
            return "1"
        return "t" if k == 1 else f"t^{k}"
    names = _display_names(group)
    parts = []
    if group.is_su:
        for name, e in zip(names, coords):
            if e == 0:
                continue
            parts.append(name if e == 1 else f"{name}^{e}")
    else:
        for name, p in zip(names, coords):
            if p == 0:
                continue
            if p % 2 == 0:
                k = p // 2
                parts.append(name if k == 1 else f"{name}^{k}")
            else:
                parts.append(f"{name}^({p}/2)")
    return "".join(parts) if parts else "1"


def format_poly(f: LaurentPoly) -> str:
    if not f.terms:
        return "0"
    pieces = []
    for i, (w, c) in enumerate(f.sorted_terms()):
        mono = monomial_str(w, f.group)
        mag = abs(c)
        if mono == "1":
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}{mono}"
        if i == 0:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(pieces)


# ---------------------------------------------------------------------
# parsing

_OPS = set("+-*/^()")


def _lex(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("INT", int(text[i:j]), i))
            i = j
        elif ch.isalpha():
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("NAME", text[i:j], i))
            i = j
        elif ch in _OPS:
            tokens.append((ch, ch, i))
            i += 1
        else:
            raise ExprSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(("END", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, group: Group):
        self.group = group
        self.tokens = _lex(text)
        self.pos = 0
        self.vars = variable_table(group)

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.take()
        if tok[0] != kind:
            raise ExprSyntaxError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse(self) -> LaurentPoly:
        value = self.expr()
        tok = self.peek()
        if tok[0] != "END":
            raise ExprSyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return value

    def expr(self) -> LaurentPoly:
        sign = 1
        if self.peek()[0] in ("+", "-"):
            if self.take()[0] == "-":
                sign = -1
        value = self.term() * sign
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> LaurentPoly:
        value = self.factor()
        while True:
            kind, _, pos = self.peek()
            if kind == "*":
                self.take()
                value = value * self.factor()
            elif kind == "/":
                self.take()
                rhs = self.factor()
                try:
                    value = value * rhs.inverse_monomial()
                except RepringError as exc:
                    raise ExprSyntaxError(f"cannot divide: {exc}", pos) from exc
            elif kind in ("INT", "NAME", "("):
                value = value * self.factor()
            else:
                return value

    def factor(self) -> LaurentPoly:
        base = self.primary()
        if self.peek()[0] == "^":
            _, _, pos = self.take()
            num, den = self.exponent()
            base = self._power(base, num, den, pos)
        return base

    def primary(self) -> LaurentPoly:
        kind, value, pos = self.take()
        if kind == "INT":
            return LaurentPoly.monomial(self.group, (0,) * self.group.ncoords, value)
        if kind == "NAME":
            if value not in self.vars:
                raise UnknownVariableError(f"unknown variable {value!r} for {self.group}", pos)
            return variable_monomial(self.group, self.vars[value])
        if kind == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise ExprSyntaxError(f"unexpected {value!r}", pos)

    def exponent(self):
        kind, value, pos = self.peek()
        if kind == "INT":
            self.take()
            return value, 1
        if kind == "-":
            self.take()
            tok = self.expect("INT")
            return -tok[1], 1
        if kind == "(":
            self.take()
            sign = 1
            if self.peek()[0] == "-":
                self.take()
                sign = -1
            num = self.expect("INT")[1] * sign
            den = 1
            if self.peek()[0] == "/":
                self.take()
                den = self.expect("INT")[1]
            self.expect(")")
            if den not in (1, 2):
                raise ExprSyntaxError(f"unsupported exponent denominator {den}", pos)
            return num, den
        raise ExprSyntaxError(f"expected exponent, found {value!r}", pos)

    def _power(self, base: LaurentPoly, num: int, den: int, pos: int) -> LaurentPoly:
        if den == 2 and num % 2 == 0:
            num, den = num // 2, 1
        if den == 2:
            if self.group.is_su:
                raise ExprSyntaxError("spin exponent outside SOEven context", pos)
            if len(base.terms) != 1:
                raise ExprSyntaxError("half exponent needs a monomial base", pos)
            ((w, c),) = base.terms.items()
            if c != 1:
                raise ExprSyntaxError("half exponent needs coefficient 1", pos)
            if any((a * num) % 2 for a in w):
                raise LatticeError(f"{monomial_str(w, self.group)}^({num}/2) is not a lattice weight")
            return LaurentPoly.monomial(self.group, tuple(a * num // 2 for a in w))
        if num >= 0:
            return base ** num
        try:
            return base.inverse_monomial() ** (-num)
        except RepringError as exc:
            raise ExprSyntaxError(f"cannot invert: {exc}", pos) from exc


def parse(text: str, group: Group) -> LaurentPoly:
    """Parse an expression in the grammar above into a LaurentPoly."""
    return _Parser(text, group).parse()


# ---------------------------------------------------------------------
# monomial lattice maps and substitution

@dataclass(frozen=True)
class MonomialMap:
    """Linear lattice map given by an integer matrix over a denominator.

    ``apply`` sends a stored weight w of the source group to
    (matrix @ w) / denom in the target group's stored coordinates; the
    division must be exact for every lattice point (a failure raises
    SubstitutionError).  Composition with an inverse map must be the
    identity for the map to be a lattice isomorphism; callers verify
    this on lattice generators.
    """

    source: Group
    target: Group
    matrix: tuple  # rows = target coordinates, cols = source coordinates
    denom: int = 1

    @classmethod
    def identity(cls, group: Group) -> "MonomialMap":
        n = group.ncoords
        rows = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        return cls(group, group, rows)

    @classmethod
    def from_images(cls, source: Group, target: Group, images) -> "MonomialMap":
        """Map an SU source given the target image of each variable x_i.

        The images must respect the source relation: the sum of all
        image weights must be the trivial target weight.
        """
        if not source.is_su:
            raise SubstitutionError("from_images expects an SU source lattice")
        if len(images) != source.ncoords:
            raise SubstitutionError("one image per source variable required")
        images = [canonicalize(w, target) for w in images]
        total = tuple(sum(col) for col in zip(*images))
        if canonicalize(total, target) != (0,) * target.ncoords:
            raise SubstitutionError("images do not respect the product-one relation")
        rows = tuple(tuple(images[i][j] for i in range(source.ncoords)) for j in range(target.ncoords))
        return cls(source, target, rows)

    def apply(self, coords) -> tuple:
        check_length(coords, self.source)
        out = []
        for row in self.matrix:
            s = sum(m * c for m, c in zip(row, coords))
            if s % self.denom:
                raise SubstitutionError(
                    f"weight {coords} has no image under this map (non-integral result)"
                )
            out.append(s // self.denom)
        return canonicalize(out, self.target)


def substitute(f: LaurentPoly, mapping: MonomialMap) -> LaurentPoly:
    """Ring homomorphism image of f under a monomial lattice map."""
    if f.group != mapping.source:
        raise GroupMismatchError(f"{f.group} vs map source {mapping.source}")
    out = {}
    for w, c in f.terms.items():
        v = mapping.apply(w)
        s = out.get(v, 0) + c
        if s:
            out[v] = s
        elif v in out:
            del out[v]
    return LaurentPoly(mapping.target, out)


# ---------------------------------------------------------------------
# exact division

def _flatten(w, group: Group):
    if group.is_su:
        wn = w[-1]
        return tuple(a - wn for a in w[:-1])
    return w


def _unflatten(v, group: Group):
    if group.is_su:
        return canonicalize(v + (0,), group)
    return canonicalize(v, group)


_DIV_GUARD = 1_000_000


def divexact(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Exact quotient f / g in the Laurent ring.

    Raises ExactDivisionError if g does not divide f.  Division happens
    in flattened free coordinates (for SU, differences against the last
    exponent), where graded-lex leading-term elimination is valid.
    """
    if f.group != g.group:
        raise GroupMismatchError(f"{f.group} vs {g.group}")
    if g.is_zero():
        raise ExactDivisionError("division by zero")
    if f.is_zero():
        return LaurentPoly.zero(f.group)
    group = f.group
    rem = {_flatten(w, group): c for w, c in f.terms.items()}
    div = {_flatten(w, group): c for w, c in g.terms.items()}
    lt_g = max(div, key=glex_key)
    lc_g = div[lt_g]
    quo = {}
    steps = 0
    while rem:
        steps += 1
        if steps > _DIV_GUARD:
            raise ExactDivisionError("division did not terminate; quotient is not exact")
        lt_r = max(rem, key=glex_key)
        c, r = divmod(rem[lt_r], lc_g)
        if r:
            raise ExactDivisionError(f"leading coefficient {rem[lt_r]} not divisible by {lc_g}")
        shift = tuple(a - b for a, b in zip(lt_r, lt_g))
        quo[shift] = quo.get(shift, 0) + c
        for w, cw in div.items():
            key = tuple(a + b for a, b in zip(w, shift))
            s = rem.get(key, 0) - c * cw
            if s:
                rem[key] = s
            elif key in rem:
                del rem[key]
    return LaurentPoly.from_terms(group, ((_unflatten(v, group), c) for v, c in quo.items()))
