"""Small exact linear algebra helpers over Fraction matrices.

Matrices are lists of lists of Fractions (or ints).  Sizes here are tiny
(at most 5 or so), so everything is plain Gaussian elimination.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    return [[sum((a[i][t] * b[t][j] for t in range(k)), Fraction(0)) for j in range(m)]
            for i in range(n)]


def mat_vec(a, v):
    return [sum((a[i][j] * v[j] for j in range(len(v))), Fraction(0)) for i in range(len(a))]


def rref(mat):
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    rows = [[Fraction(x) for x in row] for row in mat]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(mat) -> int:
    if not mat:
        return 0
    return len(rref(mat)[1])


def inv(mat):
    """Inverse of a square Fraction matrix; raises ZeroDivisionError if singular."""
    n = len(mat)
    aug = [[Fraction(mat[i][j]) for j in range(n)] + identity(n)[i] for i in range(n)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


def det(mat) -> Fraction:
    n = len(mat)
    rows = [[Fraction(x) for x in row] for row in mat]
    result = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            result = -result
        result *= rows[c][c]
        invp = Fraction(1) / rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] * invp
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return result


def nullspace(mat):
    """Basis of the right nullspace, as a list of Fraction vectors."""
    if not mat:
        return []
    ncols = len(mat[0])
    red, pivots = rref(mat)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -red[r][f]
        basis.append(v)
    return basis


def char_poly(mat):
    """Coefficients of det(t*I - M), highest degree first (monic)."""
    n = len(mat)
    # Expand the permutation sum of det(tI - M) with univariate coefficients.
    coeffs = [Fraction(0)] * (n + 1)
    for perm in permutations(range(n)):
        sign = _perm_sign(perm)
        # product over i of (t*delta - M[i][perm[i]]) as a poly in t
        poly = [Fraction(1)]
        for i in range(n):
            entry = Fraction(mat[i][perm[i]])
            if perm[i] == i:
                poly = _poly_mul(poly, [Fraction(1), -entry])
            else:
                poly = _poly_mul(poly, [-entry])
        if sign < 0:
            poly = [-c for c in poly]
        deg = len(poly) - 1
        for k, c in enumerate(poly):
            coeffs[n - deg + k] += c
    return coeffs


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _perm_sign(perm) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def rational_roots(coeffs):
    """All rational roots (with multiplicity) of a Fraction polynomial.

    Returns (roots, fully_split) where fully_split says whether the
    polynomial factors completely into rational linear factors.
    """
    poly = list(coeffs)
    while poly and poly[0] == 0:
        poly.pop(0)
    if not poly:
        raise ValueError("zero polynomial")
    roots = []
    # strip zero roots
    while poly[-1] == 0 and len(poly) > 1:
        roots.append(Fraction(0))
        poly.pop()
    while len(poly) > 1:
        root = _find_rational_root(poly)
        if root is None:
            return roots, False
        roots.append(root)
        poly = _deflate(poly, root)
    return roots, True


def _find_rational_root(poly):
    from math import gcd

    denom_lcm = 1
    for c in poly:
        denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in poly]
    lead, const = ints[0], ints[-1]
    if const == 0:
        return Fraction(0)
    for p in _divisors(abs(const)):
        for q in _divisors(abs(lead)):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if _poly_eval(poly, cand) == 0:
                    return cand
    return None


def _divisors(n):
    out = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    out += [n // d for d in reversed(out) if d * d != n]
    return out


def _poly_eval(poly, x):
    acc = Fraction(0)
    for c in poly:
        acc = acc * x + c
    return acc


def _deflate(poly, root):
    out = [poly[0]]
    for c in poly[1:-1]:
        out.append(c + out[-1] * root)
    return out
