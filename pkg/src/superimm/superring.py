"""Exact arithmetic in free supercommutative algebras over the rationals.

Generators carry a Z2 parity.  Even generators are central; odd generators
anticommute pairwise and square to zero.  A monomial is kept in normal form
(odd factors sorted by generator name, the reordering sign absorbed into the
coefficient), so polynomial equality is a dictionary comparison.

Also provides truncated power series over such an algebra, finite Grassmann
algebras Lambda_N as evaluation targets, a small expression grammar for
ingesting polynomials, and a JSON-able term serialization.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping


class SuperRingError(ValueError):
    """Base class for errors raised by this module."""


class AlgebraMismatchError(SuperRingError):
    """Operands belong to different generator contexts."""


class EvaluationError(SuperRingError):
    """A generator has no assigned value."""


class NotInvertibleError(SuperRingError):
    """Element (or series constant term) has no inverse."""


class ParseError(SuperRingError):
    """Malformed expression text."""


class Parity(enum.IntEnum):
    EVEN = 0
    ODD = 1


def parity_sum(*parities: int) -> Parity:
    return Parity(sum(int(p) for p in parities) % 2)


@dataclass(frozen=True)
class Generator:
    name: str
    parity: Parity


class Algebra:
    """A generator context: a set of named generators with parities."""

    def __init__(self, label: str = ""):
        self.label = label
        self._gens: dict[str, Generator] = {}

    def declare(self, name: str, parity: Parity) -> "SuperPoly":
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
            raise SuperRingError(f"invalid generator name {name!r}")
        existing = self._gens.get(name)
        if existing is not None:
            if existing.parity != parity:
                raise SuperRingError(f"generator {name!r} already declared with other parity")
        else:
            self._gens[name] = Generator(name, Parity(parity))
        return self.gen(name)

    def even(self, *names: str):
        polys = tuple(self.declare(n, Parity.EVEN) for n in names)
        return polys[0] if len(polys) == 1 else polys

    def odd(self, *names: str):
        polys = tuple(self.declare(n, Parity.ODD) for n in names)
        return polys[0] if len(polys) == 1 else polys

    def gen(self, name: str) -> "SuperPoly":
        g = self._gens[name]
        if g.parity == Parity.EVEN:
            key = (((name, 1),), ())
        else:
            key = ((), (name,))
        return SuperPoly(self, {key: Fraction(1)})

    def parity_of(self, name: str) -> Parity:
        return self._gens[name].parity

    def generators(self) -> tuple[Generator, ...]:
        return tuple(self._gens.values())

    def __contains__(self, name: str) -> bool:
        return name in self._gens

    def compatible(self, other: "Algebra") -> bool:
        return self is other or self._gens == other._gens

    def __eq__(self, other):
        return isinstance(other, Algebra) and self._gens == other._gens

    def __hash__(self):
        return id(self)

    def __repr__(self):
        return f"Algebra({self.label or len(self._gens)} gens)"

    def zero(self) -> "SuperPoly":
        return SuperPoly(self, {})

    def one(self) -> "SuperPoly":
        return self.scalar(1)

    def scalar(self, c) -> "SuperPoly":
        c = Fraction(c)
        return SuperPoly(self, {((), ()): c} if c else {})

    def poly(self, text: str) -> "SuperPoly":
        return parse_poly(self, text)


def merge_odd_parts(a: tuple, b: tuple):
    """Interleave two sorted odd-generator tuples, tracking the Koszul sign.

    Returns (sign, merged); sign 0 means a generator repeats and the term dies.
    """
    if not a:
        return 1, b
    if not b:
        return 1, a
    sign = 1
    out = []
    i = j = 0
    la = len(a)
    while i < la and j < len(b):
        if a[i] == b[j]:
            return 0, ()
        if a[i] < b[j]:
            out.append(a[i])
            i += 1
        else:
            if (la - i) % 2:
                sign = -sign
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return sign, tuple(out)


def _merge_even(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    exps: dict[str, int] = dict(a)
    for name, e in b:
        exps[name] = exps.get(name, 0) + e
    return tuple(sorted(exps.items()))


class SuperPoly:
    """Element of a free supercommutative Q-algebra, in normal form.

    Terms map (even_part, odd_part) -> nonzero Fraction, where even_part is a
    sorted tuple of (generator, exponent) and odd_part a sorted tuple of odd
    generator names.  Instances are treated as immutable.
    """

    __slots__ = ("algebra", "_terms")

    def __init__(self, algebra: Algebra, terms: dict):
        self.algebra = algebra
        self._terms = terms

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def zero(algebra: Algebra) -> "SuperPoly":
        return SuperPoly(algebra, {})

    @staticmethod
    def scalar(algebra: Algebra, c) -> "SuperPoly":
        return algebra.scalar(c)

    # -- structure queries -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self):
        """Deterministically ordered (even, odd, coefficient) triples."""
        return sorted(((e, o, c) for (e, o), c in self._terms.items()))

    def constant_term(self) -> Fraction:
        return self._terms.get(((), ()), Fraction(0))

    def term_parity(self, key) -> int:
        return len(key[1]) % 2

    def parity(self):
        """Parity if homogeneous (0, 1, or 0 for the zero poly); None if mixed."""
        parities = {len(o) % 2 for (_, o) in self._terms}
        if not parities:
            return Parity.EVEN
        if len(parities) > 1:
            return None
        return Parity(parities.pop())

    def homogeneous_parts(self):
        """Pair (even_part, odd_part) of this polynomial."""
        even = {}
        odd = {}
        for key, c in self._terms.items():
            (even if len(key[1]) % 2 == 0 else odd)[key] = c
        return SuperPoly(self.algebra, even), SuperPoly(self.algebra, odd)

    def generator_names(self) -> set:
        names = set()
        for e, o in self._terms:
            names.update(name for name, _ in e)
            names.update(o)
        return names

    # -- ring operations -------------------------------------------------------

    def _check(self, other: "SuperPoly"):
        if not self.algebra.compatible(other.algebra):
            raise AlgebraMismatchError("operands come from different algebras")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.algebra.scalar(other)
        self._check(other)
        terms = dict(self._terms)
        for key, c in other._terms.items():
            s = terms.get(key, Fraction(0)) + c
            if s:
                terms[key] = s
            elif key in terms:
                del terms[key]
        return SuperPoly(self.algebra, terms)

    __radd__ = __add__

    def __neg__(self):
        return SuperPoly(self.algebra, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.algebra.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return SuperPoly(self.algebra, {})
            other = Fraction(other)
            return SuperPoly(self.algebra, {k: c * other for k, c in self._terms.items()})
        self._check(other)
        terms: dict = {}
        for (ea, oa), ca in self._terms.items():
            for (eb, ob), cb in other._terms.items():
                sign, odd = merge_odd_parts(oa, ob)
                if sign == 0:
                    continue
                key = (_merge_even(ea, eb), odd)
                s = terms.get(key, Fraction(0)) + sign * ca * cb
                if s:
                    terms[key] = s
                elif key in terms:
                    del terms[key]
        return SuperPoly(self.algebra, terms)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise SuperRingError("negative powers are not defined")
        out = self.algebra.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.algebra.scalar(other)
        if not isinstance(other, SuperPoly):
            return NotImplemented
        return self.algebra.compatible(other.algebra) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- substitution ----------------------------------------------------------

    def substitute(self, images: Mapping[str, "SuperPoly"], target: Algebra) -> "SuperPoly":
        """Ring homomorphism determined by generator images.

        Odd factors are substituted in the monomial's canonical order, so the
        normal-form sign stored in the coefficient stays correct.
        """
        out = SuperPoly.zero(target)
        for (even, odd), c in self._terms.items():
            term = target.scalar(c)
            try:
                for name, exp in even:
                    img = images[name]
                    for _ in range(exp):
                        term = term * img
                    if term.is_zero:
                        break
                for name in odd:
                    term = term * images[name]
                    if term.is_zero:
                        break
            except KeyError as exc:
                raise EvaluationError(f"no value assigned to generator {exc.args[0]!r}") from exc
            out = out + term
        return out

    def evaluate(self, point: "GrassmannPoint") -> "SuperPoly":
        return point.evaluate(self)

    # -- inverses ----------------------------------------------------------------

    def inverse_of_unit(self) -> "SuperPoly":
        """Inverse of body + nilpotent soul; every soul term must be nilpotent.

        Nilpotency is certified by each soul term containing an odd generator,
        which bounds the Neumann series by the number of distinct odd names.
        """
        body = self.constant_term()
        if body == 0:
            raise NotInvertibleError("constant term is zero")
        soul = self - body
        odd_names = set()
        for (_, o), _c in soul._terms.items():
            if not o:
                raise NotInvertibleError("soul contains a non-nilpotent term")
            odd_names.update(o)
        inv_body = Fraction(1) / body
        out = self.algebra.scalar(inv_body)
        power = self.algebra.one()
        for _ in range(len(odd_names)):
            power = power * soul * (-inv_body)
            if power.is_zero:
                break
            out = out + power * inv_body
        return out

    # -- display ----------------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        bits = []
        for even, odd, c in self.terms():
            factors = []
            for name, exp in even:
                factors.append(name if exp == 1 else f"{name}^{exp}")
            factors.extend(odd)
            if not factors:
                body = str(c)
            elif c == 1:
                body = "*".join(factors)
            elif c == -1:
                body = "-" + "*".join(factors)
            else:
                body = f"{c}*" + "*".join(factors)
            bits.append(body)
        text = " + ".join(bits)
        return text.replace("+ -", "- ")

    __repr__ = __str__


# ---------------------------------------------------------------------------
# Truncated power series
# ---------------------------------------------------------------------------


class TruncatedSeries:
    """Power series in one formal variable, truncated at an explicit order.

    Arithmetic never reads or writes coefficients beyond the truncation
    order; combining two series truncates to the smaller order.
    """

    __slots__ = ("algebra", "coeffs", "order")

    def __init__(self, algebra: Algebra, coeffs: Iterable[SuperPoly], order: int):
        coeffs = list(coeffs)
        if order < 0:
            raise SuperRingError("truncation order must be >= 0")
        if len(coeffs) != order + 1:
            raise SuperRingError("need exactly order+1 coefficients")
        self.algebra = algebra
        self.coeffs = tuple(coeffs)
        self.order = order

    @staticmethod
    def from_scalars(algebra: Algebra, values, order: int) -> "TruncatedSeries":
        values = list(values) + [0] * (order + 1 - len(values))
        return TruncatedSeries(algebra, [algebra.scalar(v) for v in values[: order + 1]], order)

    @staticmethod
    def from_polys(algebra: Algebra, polys, order: int) -> "TruncatedSeries":
        polys = list(polys) + [algebra.zero()] * (order + 1 - len(polys))
        return TruncatedSeries(algebra, polys[: order + 1], order)

    @staticmethod
    def one(algebra: Algebra, order: int) -> "TruncatedSeries":
        return TruncatedSeries.from_scalars(algebra, [1], order)

    def coefficient(self, k: int) -> SuperPoly:
        if k > self.order:
            raise SuperRingError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise SuperRingError("cannot extend a truncated series")
        return TruncatedSeries(self.algebra, self.coeffs[: order + 1], order)

    def __add__(self, other):
        order = min(self.order, other.order)
        return TruncatedSeries(
            self.algebra,
            [self.coeffs[k] + other.coeffs[k] for k in range(order + 1)],
            order,
        )

    def __neg__(self):
        return TruncatedSeries(self.algebra, [-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, SuperPoly)):
            return TruncatedSeries(self.algebra, [c * other for c in self.coeffs], self.order)
        order = min(self.order, other.order)
        coeffs = []
        for k in range(order + 1):
            acc = self.algebra.zero()
            for j in range(k + 1):
                a, b = self.coeffs[j], other.coeffs[k - j]
                if not a.is_zero and not b.is_zero:
                    acc = acc + a * b
            coeffs.append(acc)
        return TruncatedSeries(self.algebra, coeffs, order)

    __rmul__ = __mul__

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse to the same truncation order."""
        try:
            c0 = self.coeffs[0].inverse_of_unit()
        except NotInvertibleError as exc:
            raise NotInvertibleError(f"series constant term not invertible: {exc}") from exc
        coeffs = [c0]
        for k in range(1, self.order + 1):
            acc = self.algebra.zero()
            for j in range(1, k + 1):
                if not self.coeffs[j].is_zero:
                    acc = acc + self.coeffs[j] * coeffs[k - j]
            coeffs.append(-(c0 * acc))
        return TruncatedSeries(self.algebra, coeffs, self.order)

    def derivative(self) -> "TruncatedSeries":
        if self.order == 0:
            return TruncatedSeries(self.algebra, [self.algebra.zero()], 0)
        return TruncatedSeries(
            self.algebra,
            [self.coeffs[k] * k for k in range(1, self.order + 1)],
            self.order - 1,
        )

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __str__(self):
        bits = [f"({c})*t^{k}" for k, c in enumerate(self.coeffs) if not c.is_zero]
        return " + ".join(bits) if bits else "0"

    __repr__ = __str__


# ---------------------------------------------------------------------------
# Grassmann algebras and evaluation points
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def grassmann_algebra(n_units: int) -> Algebra:
    """The finite Grassmann algebra on anticommuting units th1..thN."""
    alg = Algebra(f"Lambda_{n_units}")
    for i in range(1, n_units + 1):
        alg.declare(f"th{i}", Parity.ODD)
    return alg


def theta_degree(p: SuperPoly) -> int:
    """Largest number of odd factors in any term (0 for the zero poly)."""
    return max((len(o) for (_, o) in p._terms), default=0)


def soul(p: SuperPoly) -> SuperPoly:
    return p - p.constant_term()


class GrassmannPoint:
    """A parity-respecting assignment of generators to Lambda_N elements."""

    def __init__(self, source: Algebra, assignment: Mapping[str, SuperPoly], n_units: int = 4):
        self.n_units = n_units
        self.source = source
        self.target = grassmann_algebra(n_units)
        self.assignment = dict(assignment)
        for name, value in self.assignment.items():
            if name not in source:
                raise EvaluationError(f"{name!r} is not a generator of the source algebra")
            if not value.algebra.compatible(self.target):
                raise EvaluationError(f"value for {name!r} does not live in Lambda_{n_units}")
            want = source.parity_of(name)
            got = value.parity()
            if not value.is_zero and got != want:
                raise EvaluationError(f"value for {name!r} has parity {got}, expected {want}")
            if want == Parity.EVEN and theta_degree(soul(value)) == 0 and not soul(value).is_zero:
                raise EvaluationError(f"even value for {name!r} has a non-nilpotent soul")

    def body(self, name: str) -> Fraction:
        return self.assignment[name].constant_term()

    def evaluate(self, p: SuperPoly) -> SuperPoly:
        if not p.algebra.compatible(self.source):
            raise AlgebraMismatchError("polynomial does not belong to the point's algebra")
        return p.substitute(self.assignment, self.target)


# ---------------------------------------------------------------------------
# Expression grammar
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([()+\-*/]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ParseError(f"unexpected character at position {pos}: {text[pos:]!r}")
            break
        if m.group(1) is not None:
            tokens.append(("num", int(m.group(1))))
        elif m.group(2) is not None:
            tokens.append(("ident", m.group(2)))
        else:
            tokens.append((m.group(3), None))
        pos = m.end()
    tokens.append(("end", None))
    return tokens


def parse_poly(algebra: Algebra, text: str) -> SuperPoly:
    """Parse `integers, p/q rationals, generators, + - * ( )` into a SuperPoly."""
    tokens = _tokenize(text)
    idx = 0

    def peek():
        return tokens[idx][0]

    def advance():
        nonlocal idx
        tok = tokens[idx]
        idx += 1
        return tok

    def expr():
        node = term()
        while peek() in "+-":
            op, _ = advance()
            rhs = term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def term():
        node = factor()
        while peek() == "*":
            advance()
            node = node * factor()
        return node

    def factor():
        if peek() == "-":
            advance()
            return -factor()
        return atom()

    def atom():
        kind, value = advance()
        if kind == "num":
            if peek() == "/":
                advance()
                dk, dv = advance()
                if dk != "num":
                    raise ParseError("expected an integer denominator")
                if dv == 0:
                    raise ParseError("zero denominator")
                return algebra.scalar(Fraction(value, dv))
            return algebra.scalar(value)
        if kind == "ident":
            if value not in algebra:
                raise ParseError(f"unknown generator {value!r}")
            return algebra.gen(value)
        if kind == "(":
            node = expr()
            k, _ = advance()
            if k != ")":
                raise ParseError("expected ')'")
            return node
        raise ParseError(f"unexpected token {kind!r}")

    node = expr()
    if peek() != "end":
        raise ParseError(f"trailing input from token {idx}")
    return node


# ---------------------------------------------------------------------------
# Term serialization
# ---------------------------------------------------------------------------


def poly_to_terms(p: SuperPoly) -> list[dict]:
    """Serialize to a list of {coefficient, even, odd} dicts (deterministic order)."""
    return [
        {
            "coefficient": f"{c.numerator}/{c.denominator}" if c.denominator != 1 else str(c.numerator),
            "even": [[name, exp] for name, exp in even],
            "odd": list(odd),
        }
        for even, odd, c in p.terms()
    ]


def poly_from_terms(algebra: Algebra, terms: Iterable[Mapping]) -> SuperPoly:
    out = algebra.zero()
    for t in terms:
        c = Fraction(t["coefficient"])
        key = (
            tuple(sorted((name, int(exp)) for name, exp in t.get("even", []))),
            tuple(t.get("odd", [])),
        )
        for name in t.get("odd", []):
            if algebra.parity_of(name) != Parity.ODD:
                raise SuperRingError(f"{name!r} is not an odd generator")
        if list(key[1]) != sorted(key[1]):
            raise SuperRingError("odd part must be listed in canonical sorted order")
        out = out + SuperPoly(algebra, {key: c} if c else {})
    return out
