"""The rational group algebra of S_r.

Permutation arithmetic, Jucys-Murphy elements, the primitive idempotents
attached to standard tableaux (built by spectral projection on the
Jucys-Murphy elements), their fusion-procedure cross-check, and character
elements.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations as iter_permutations

from superimm import tableaux
from superimm.tableaux import StandardTableau, addable_contents, character, hook_product


class SymGroupError(ValueError):
    pass


class Permutation:
    """Permutation of {1..r}, stored as the tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        self.images = tuple(images)
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise SymGroupError(f"{images} is not a permutation")

    @staticmethod
    def identity(r: int) -> "Permutation":
        return Permutation(range(1, r + 1))

    @staticmethod
    def transposition(a: int, b: int, r: int) -> "Permutation":
        images = list(range(1, r + 1))
        images[a - 1], images[b - 1] = b, a
        return Permutation(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition acting left: (s*t)(k) = s(t(k))."""
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for k, v in enumerate(self.images, start=1):
            inv[v - 1] = k
        return Permutation(inv)

    def cycle_type(self) -> tuple[int, ...]:
        seen = [False] * len(self.images)
        sizes = []
        for start in range(1, len(self.images) + 1):
            if seen[start - 1]:
                continue
            size = 0
            k = start
            while not seen[k - 1]:
                seen[k - 1] = True
                k = self.images[k - 1]
                size += 1
            sizes.append(size)
        return tuple(sorted(sizes, reverse=True))

    def sign(self) -> int:
        return (-1) ** (self.degree - len(self.cycle_type()))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Perm{self.images}"


@lru_cache(maxsize=None)
def symmetric_group(r: int) -> tuple[Permutation, ...]:
    return tuple(Permutation(p) for p in iter_permutations(range(1, r + 1)))


class GroupAlgebraElement:
    """Q-linear combination of permutations of a fixed degree."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: dict | None = None):
        self.degree = degree
        self.terms = {p: Fraction(c) for p, c in (terms or {}).items() if c}

    @staticmethod
    def one(degree: int) -> "GroupAlgebraElement":
        return GroupAlgebraElement(degree, {Permutation.identity(degree): Fraction(1)})

    @staticmethod
    def of(perm: Permutation) -> "GroupAlgebraElement":
        return GroupAlgebraElement(perm.degree, {perm: Fraction(1)})

    def _check(self, other):
        if self.degree != other.degree:
            raise SymGroupError("mixed degrees")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = other * GroupAlgebraElement.one(self.degree)
        self._check(other)
        terms = dict(self.terms)
        for p, c in other.terms.items():
            s = terms.get(p, Fraction(0)) + c
            if s:
                terms[p] = s
            elif p in terms:
                del terms[p]
        return GroupAlgebraElement(self.degree, terms)

    __radd__ = __add__

    def __neg__(self):
        return GroupAlgebraElement(self.degree, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = other * GroupAlgebraElement.one(self.degree)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GroupAlgebraElement(self.degree, {p: c * other for p, c in self.terms.items()})
        self._check(other)
        terms: dict = {}
        for p, cp in self.terms.items():
            for q, cq in other.terms.items():
                pq = p * q
                s = terms.get(pq, Fraction(0)) + cp * cq
                if s:
                    terms[pq] = s
                elif pq in terms:
                    del terms[pq]
        return GroupAlgebraElement(self.degree, terms)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def conjugate_by(self, s: Permutation) -> "GroupAlgebraElement":
        s_inv = s.inverse()
        return GroupAlgebraElement(
            self.degree, {s * p * s_inv: c for p, c in self.terms.items()}
        )

    def star(self) -> "GroupAlgebraElement":
        """The involution sending each permutation to its inverse."""
        return GroupAlgebraElement(self.degree, {p.inverse(): c for p, c in self.terms.items()})

    def coefficient(self, p: Permutation) -> Fraction:
        return self.terms.get(p, Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other) * GroupAlgebraElement.one(self.degree)
        return (
            isinstance(other, GroupAlgebraElement)
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = [f"{c}*{p.images}" for p, c in sorted(self.terms.items(), key=lambda t: t[0].images)]
        return " + ".join(bits)


def jucys_murphy(k: int, r: int) -> GroupAlgebraElement:
    """y_k = sum of the transpositions (a,k) for a < k; y_1 = 0."""
    if not 1 <= k <= r:
        raise SymGroupError(f"k={k} out of range for degree {r}")
    terms = {Permutation.transposition(a, k, r): Fraction(1) for a in range(1, k)}
    return GroupAlgebraElement(r, terms)


@lru_cache(maxsize=None)
def primitive_idempotent(tab: StandardTableau) -> GroupAlgebraElement:
    """Spectral projector onto the Jucys-Murphy eigenline labelled by the tableau.

    At each step k the factor kills every other content that entry k could
    have taken, given the shape formed by 1..k-1.
    """
    r = tab.size
    out = GroupAlgebraElement.one(r)
    shape_below: list[int] = []
    for k in range(1, r + 1):
        ck = tab.content(k)
        if k > 1:
            yk = jucys_murphy(k, r)
            for c in addable_contents(tuple(shape_below)):
                if c != ck:
                    out = out * (yk - c) * Fraction(1, ck - c)
        i, _ = tab.position(k)
        if i == len(shape_below):
            shape_below.append(1)
        else:
            shape_below[i] += 1
    return out


def fusion_idempotent(tab: StandardTableau) -> GroupAlgebraElement:
    """Cross-check construction by consecutive evaluation of the ordered
    product of factors 1 - (a,b)/(z_a - z_b) at the content points.

    Coefficients are carried as exact multivariate rational functions and each
    substitution happens after cancellation to lowest terms, where the product
    is regular.
    """
    import sympy

    r = tab.size
    zs = sympy.symbols(f"z1:{r + 1}")
    coeffs: dict[Permutation, object] = {Permutation.identity(r): sympy.Integer(1)}
    for a in range(1, r):
        for b in range(a + 1, r + 1):
            factor = {
                Permutation.identity(r): sympy.Integer(1),
                Permutation.transposition(a, b, r): -1 / (zs[a - 1] - zs[b - 1]),
            }
            new: dict[Permutation, object] = {}
            for p, cp in coeffs.items():
                for q, cq in factor.items():
                    pq = p * q
                    new[pq] = new.get(pq, sympy.Integer(0)) + cp * cq
            coeffs = new
    for k in range(1, r + 1):
        ck = sympy.Integer(tab.content(k))
        subbed = {}
        for p, c in coeffs.items():
            c = sympy.cancel(sympy.together(c))
            num, den = sympy.fraction(c)
            den_val = den.subs(zs[k - 1], ck)
            if den_val == 0:
                raise SymGroupError(f"unremovable pole at z_{k} for tableau {tab!r}")
            subbed[p] = num.subs(zs[k - 1], ck) / den_val
        coeffs = subbed
    h = hook_product(tab.shape)
    terms = {}
    for p, c in coeffs.items():
        val = sympy.nsimplify(sympy.cancel(c))
        q = sympy.Rational(val)
        if q != 0:
            terms[p] = Fraction(q.p, q.q)
    return GroupAlgebraElement(tab.size, terms) * Fraction(1, h)


def character_element(shape) -> GroupAlgebraElement:
    """Sum of chi(s) * s over the group."""
    shape = tableaux.normalize_partition(shape)
    r = sum(shape)
    terms = {}
    for p in symmetric_group(r):
        c = character(shape, p.cycle_type())
        if c:
            terms[p] = Fraction(c)
    return GroupAlgebraElement(r, terms)


def central_idempotent(shape) -> GroupAlgebraElement:
    """(dim/r!) times the character element; squares to itself."""
    from math import factorial

    shape = tableaux.normalize_partition(shape)
    r = sum(shape)
    return character_element(shape) * Fraction(tableaux.dimension(shape), factorial(r))


def transposition_relation(tab: StandardTableau, a: int) -> dict:
    """Exact check of E_T (s_a - 1/d) = E_T s_a E_{s_a T}, with the right-hand
    idempotent zero when the flipped filling is not standard."""
    r = tab.size
    if not 1 <= a < r:
        raise SymGroupError("need 1 <= a < r")
    d = tab.axial_distance(a)
    s = GroupAlgebraElement.of(Permutation.transposition(a, a + 1, r))
    e = primitive_idempotent(tab)
    flipped = tab.swap_entries(a, a + 1)
    lhs = e * (s - Fraction(1, d))
    if flipped is None:
        rhs = GroupAlgebraElement(r)
    else:
        rhs = e * s * primitive_idempotent(flipped)
    return {
        "axial_distance": d,
        "flipped_standard": flipped is not None,
        "lhs": lhs,
        "rhs": rhs,
        "holds": lhs == rhs,
    }
