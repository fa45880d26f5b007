"""Partitions, tableaux, hook/super-hook combinatorics, and S_r characters.

Covers standard and semistandard super tableaux, the triangular-pattern
basis labels in bijection with semistandard super tableaux, Kostka numbers
with their inverse, and irreducible symmetric-group characters via the
border-strip (Murnaghan-Nakayama) recursion.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial


class TableauxError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Partitions
# ---------------------------------------------------------------------------


def normalize_partition(parts) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts if p != 0)
    if any(p < 0 for p in parts) or any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise TableauxError(f"{parts} is not weakly decreasing and positive")
    return parts


@lru_cache(maxsize=None)
def partitions(r: int, max_part: int | None = None) -> tuple[tuple[int, ...], ...]:
    """All partitions of r, largest-first parts, in reverse lexicographic order."""
    if max_part is None:
        max_part = r
    if r == 0:
        return ((),)
    out = []
    for first in range(min(r, max_part), 0, -1):
        for rest in partitions(r - first, first):
            out.append((first,) + rest)
    return tuple(out)


def conjugate(shape) -> tuple[int, ...]:
    shape = tuple(shape)
    if not shape:
        return ()
    return tuple(sum(1 for p in shape if p > i) for i in range(shape[0]))


def part(shape, i: int) -> int:
    """1-based part access with zero padding."""
    return shape[i - 1] if 1 <= i <= len(shape) else 0


def dominates(lam, mu) -> bool:
    """Whether lam >= mu in dominance order (equal sizes assumed)."""
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += part(lam, i + 1)
        b += part(mu, i + 1)
        if a < b:
            return False
    return True


def in_hook(shape, m: int, n: int, r: int | None = None) -> bool:
    """Whether the shape lies in the (m,n) fat hook (and has size r if given)."""
    shape = tuple(shape)
    if r is not None and sum(shape) != r:
        return False
    return part(shape, m + 1) <= n


def hook_partitions(m: int, n: int, r: int) -> tuple[tuple[int, ...], ...]:
    return tuple(lam for lam in partitions(r) if in_hook(lam, m, n))


def hook_product(shape) -> int:
    """Product of the hook lengths of the shape."""
    shape = normalize_partition(shape)
    conj = conjugate(shape)
    h = 1
    for i, row in enumerate(shape):
        for j in range(row):
            h *= row - j + conj[j] - i - 1
    return h


def dimension(shape) -> int:
    """Number of standard tableaux: r!/h(shape)."""
    shape = normalize_partition(shape)
    r = sum(shape)
    return factorial(r) // hook_product(shape) if shape else 1


# ---------------------------------------------------------------------------
# Standard tableaux
# ---------------------------------------------------------------------------


class StandardTableau:
    """Bijective filling of a shape by 1..r, increasing along rows and columns."""

    __slots__ = ("rows", "_positions")

    def __init__(self, rows):
        self.rows = tuple(tuple(row) for row in rows)
        seen = sorted(x for row in self.rows for x in row)
        r = len(seen)
        if seen != list(range(1, r + 1)):
            raise TableauxError("entries must be exactly 1..r")
        for row in self.rows:
            if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
                raise TableauxError("rows must strictly increase")
        for i in range(len(self.rows) - 1):
            if len(self.rows[i + 1]) > len(self.rows[i]):
                raise TableauxError("shape must be a partition")
            for j in range(len(self.rows[i + 1])):
                if self.rows[i][j] >= self.rows[i + 1][j]:
                    raise TableauxError("columns must strictly increase")
        self._positions = {}
        for i, row in enumerate(self.rows):
            for j, k in enumerate(row):
                self._positions[k] = (i, j)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return len(self._positions)

    def position(self, k: int) -> tuple[int, int]:
        return self._positions[k]

    def content(self, k: int) -> int:
        i, j = self._positions[k]
        return j - i

    def axial_distance(self, i: int) -> int:
        """Content gap between entries i+1 and i."""
        return self.content(i + 1) - self.content(i)

    def swap_entries(self, a: int, b: int):
        """Filling with entries a and b exchanged; None if not standard."""
        rows = [list(row) for row in self.rows]
        (ia, ja), (ib, jb) = self._positions[a], self._positions[b]
        rows[ia][ja], rows[ib][jb] = b, a
        try:
            return StandardTableau(rows)
        except TableauxError:
            return None

    def __eq__(self, other):
        return isinstance(other, StandardTableau) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "/".join("".join(f"[{k}]" for k in row) for row in self.rows)


@lru_cache(maxsize=None)
def standard_tableaux(shape) -> tuple[StandardTableau, ...]:
    """All standard tableaux of the given shape."""
    shape = normalize_partition(shape)
    r = sum(shape)
    if r == 0:
        return (StandardTableau(()),)
    out = []

    def grow(filling, k):
        if k > r:
            out.append(StandardTableau(filling))
            return
        for i in range(len(shape)):
            row_len = len(filling[i])
            if row_len < shape[i] and (i == 0 or len(filling[i - 1]) > row_len):
                filling[i].append(k)
                grow(filling, k + 1)
                filling[i].pop()

    grow([[] for _ in shape], 1)
    return tuple(out)


def row_reading_tableau(shape) -> StandardTableau:
    """Shape filled row by row with 1..r."""
    shape = normalize_partition(shape)
    rows, k = [], 1
    for row_len in shape:
        rows.append(tuple(range(k, k + row_len)))
        k += row_len
    return StandardTableau(rows)


def addable_contents(shape) -> tuple[int, ...]:
    """Contents of the boxes that can be appended to the shape."""
    shape = tuple(shape)
    out = []
    for i in range(len(shape) + 1):
        row = part(shape, i + 1)
        above = part(shape, i) if i > 0 else None
        if above is None or row < above:
            out.append(row - i)
    return tuple(out)


# ---------------------------------------------------------------------------
# Semistandard super tableaux
# ---------------------------------------------------------------------------


def is_semistandard_super(rows, m: int, n: int) -> bool:
    """Super semistandardness: weak rows/columns, even entries strict down
    columns, odd entries strict along rows."""
    rows = tuple(tuple(row) for row in rows)
    for i, row in enumerate(rows):
        for j, e in enumerate(row):
            if not 1 <= e <= m + n:
                return False
            if j + 1 < len(row):
                nxt = row[j + 1]
                if nxt < e or (nxt == e and e > m):
                    return False
            if i + 1 < len(rows) and j < len(rows[i + 1]):
                below = rows[i + 1][j]
                if below < e or (below == e and e <= m):
                    return False
    return True


def tableau_weight(rows, m: int, n: int) -> tuple[int, ...]:
    counts = [0] * (m + n)
    for row in rows:
        for e in row:
            counts[e - 1] += 1
    return tuple(counts)


def semistandard_super_tableaux(shape, m: int, n: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All semistandard super fillings of the shape by 1..m+n."""
    shape = normalize_partition(shape)
    if not shape:
        return ((),)
    out = []
    rows: list[list[int]] = [[] for _ in shape]

    def box_candidates(i, j):
        lo = 1
        if j > 0:
            left = rows[i][j - 1]
            lo = max(lo, left if left > m else left)  # weak along row
        if i > 0:
            up = rows[i - 1][j]
            lo = max(lo, up)
        for e in range(lo, m + n + 1):
            if j > 0 and e == rows[i][j - 1] and e > m:
                continue  # odd entries strict along rows
            if i > 0 and e == rows[i - 1][j] and e <= m:
                continue  # even entries strict down columns
            yield e

    def grow(i, j):
        if i == len(shape):
            out.append(tuple(tuple(row) for row in rows))
            return
        ni, nj = (i, j + 1) if j + 1 < shape[i] else (i + 1, 0)
        for e in box_candidates(i, j):
            rows[i].append(e)
            grow(ni, nj)
            rows[i].pop()

    grow(0, 0)
    return tuple(out)


def semistandard_super_tableaux_of_weight(shape, m: int, n: int, weight) -> tuple:
    weight = tuple(weight)
    return tuple(
        t for t in semistandard_super_tableaux(shape, m, n) if tableau_weight(t, m, n) == weight
    )


def relabel_by_weight(tab: StandardTableau, weight) -> tuple[tuple[int, ...], ...]:
    """Replace entry k of a standard tableau by the k-th element of the sorted
    multiset with the given multiplicities."""
    weight = tuple(weight)
    if sum(weight) != tab.size:
        raise TableauxError("weight size must match the tableau")
    multiset = [i + 1 for i, a in enumerate(weight) for _ in range(a)]
    return tuple(tuple(multiset[k - 1] for k in row) for row in tab.rows)


# ---------------------------------------------------------------------------
# Kostka numbers
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def kostka(lam, mu) -> int:
    """Number of classical semistandard tableaux of shape lam and weight mu."""
    lam = normalize_partition(lam)
    mu = tuple(int(x) for x in mu)
    if sum(lam) != sum(mu):
        raise TableauxError("kostka requires |lam| = |mu|")
    return len(semistandard_super_tableaux_of_weight(lam, len(mu), 0, mu))


@lru_cache(maxsize=None)
def _inverse_kostka_table(r: int) -> dict:
    """Inverse of the Kostka matrix over partitions of r.

    Partitions are listed in reverse lexicographic order, which refines
    dominance, so the matrix is unitriangular and inverts by back
    substitution.
    """
    plist = partitions(r)
    size = len(plist)
    K = [[kostka(plist[i], plist[j]) for j in range(size)] for i in range(size)]
    inv = [[Fraction(0)] * size for _ in range(size)]
    for j in range(size):
        for i in range(j, -1, -1):
            if i == j:
                acc = Fraction(1)
            else:
                acc = Fraction(0)
            acc -= sum((Fraction(K[i][t]) * inv[t][j] for t in range(i + 1, j + 1)), Fraction(0))
            inv[i][j] = acc  # K[i][i] == 1
    return {(plist[i], plist[j]): inv[i][j] for i in range(size) for j in range(size)}


def inverse_kostka(lam, mu) -> Fraction:
    """Entry (lam, mu) of the inverse Kostka matrix: sum_nu K[lam,nu] Kinv[nu,mu] = delta."""
    lam, mu = normalize_partition(lam), normalize_partition(mu)
    if sum(lam) != sum(mu):
        raise TableauxError("inverse_kostka requires |lam| = |mu|")
    return _inverse_kostka_table(sum(lam))[(lam, mu)]


# ---------------------------------------------------------------------------
# Characters (border-strip recursion on beta-sets)
# ---------------------------------------------------------------------------


def cycle_type_of_sizes(sizes) -> tuple[int, ...]:
    return tuple(sorted((int(s) for s in sizes), reverse=True))


@lru_cache(maxsize=None)
def character(lam, cycle_type) -> int:
    """Irreducible S_r character value at a conjugacy class."""
    lam = normalize_partition(lam)
    cycle_type = normalize_partition(cycle_type)
    if sum(lam) != sum(cycle_type):
        raise TableauxError("character requires |lam| = |cycle type|")
    beta = tuple(lam[i] + (len(lam) - 1 - i) for i in range(len(lam)))
    return _mn(frozenset(beta), len(lam), cycle_type)


def _mn(beta: frozenset, slots: int, remaining: tuple[int, ...]) -> int:
    if not remaining:
        return 1
    t = remaining[0]
    rest = remaining[1:]
    total = 0
    for b in beta:
        nb = b - t
        if nb >= 0 and nb not in beta:
            jumped = sum(1 for x in beta if nb < x < b)
            sub = (beta - {b}) | {nb}
            total += (-1) ** jumped * _mn(frozenset(sub), slots, rest)
    return total


def class_size(cycle_type) -> int:
    """Conjugacy class size r!/z_rho."""
    cycle_type = normalize_partition(cycle_type)
    r = sum(cycle_type)
    z = 1
    mult: dict[int, int] = {}
    for c in cycle_type:
        mult[c] = mult.get(c, 0) + 1
    for c, k in mult.items():
        z *= c ** k * factorial(k)
    return factorial(r) // z


def induced_sign_character(mu):
    """Class function of the character induced from the sign character of the
    Young subgroup S_mu, expanded through Kostka numbers."""
    mu = normalize_partition(mu)
    r = sum(mu)
    table = {
        rho: sum(kostka(conjugate(lam), mu) * character(lam, rho) for lam in partitions(r))
        for rho in partitions(r)
    }
    return table


def induced_trivial_character(mu):
    """Class function of the character induced from the trivial character of S_mu."""
    mu = normalize_partition(mu)
    r = sum(mu)
    table = {
        rho: sum(kostka(lam, mu) * character(lam, rho) for lam in partitions(r))
        for rho in partitions(r)
    }
    return table


# ---------------------------------------------------------------------------
# Highest-weight dictionary and triangular patterns
# ---------------------------------------------------------------------------


def partition_to_weight(shape, m: int, n: int) -> tuple[int, ...]:
    """Covariant highest weight (a_1..a_m | a_{m+1}..a_{m+n}) of a hook shape."""
    shape = normalize_partition(shape)
    if not in_hook(shape, m, n):
        raise TableauxError(f"{shape} is not inside the ({m},{n}) hook")
    conj = conjugate(shape)
    head = tuple(part(shape, i) for i in range(1, m + 1))
    tail = tuple(max(0, part(conj, i) - m) for i in range(1, n + 1))
    return head + tail


def weight_to_partition(weight, m: int, n: int) -> tuple[int, ...]:
    """Inverse dictionary: rows past m are the conjugate of the odd weight tail."""
    weight = tuple(int(x) for x in weight)
    if len(weight) != m + n:
        raise TableauxError("weight must have m+n components")
    head = list(weight[:m])
    tail = weight[m:]
    below = conjugate(tuple(sorted((x for x in tail if x > 0), reverse=True)))
    shape = tuple(head) + below
    return normalize_partition(shape)


class TriangularPattern:
    """Triangular array of row lengths/column counts labelling a basis vector.

    Row i (1-based) has entries lam[i][0..i-1].  The 0/1 increments across the
    even/odd divide are recorded for inspection.
    """

    __slots__ = ("rows", "m", "n")

    def __init__(self, rows, m: int, n: int):
        self.rows = tuple(tuple(row) for row in rows)
        self.m = m
        self.n = n
        if len(self.rows) != m + n or any(len(self.rows[i]) != i + 1 for i in range(m + n)):
            raise TableauxError("pattern must be triangular of height m+n")

    def entry(self, i: int, j: int) -> int:
        """1-based access lam_{ij}."""
        return self.rows[i - 1][j - 1]

    def increments(self) -> dict:
        """The {0,1} jumps th_{p-1,i} on the first m columns."""
        out = {}
        for p in range(self.m + 1, self.m + self.n + 1):
            for i in range(1, self.m + 1):
                out[(p - 1, i)] = self.entry(p, i) - self.entry(p - 1, i)
        return out

    def weight(self) -> tuple[int, ...]:
        sums = [sum(row) for row in self.rows]
        return tuple(sums[i] - (sums[i - 1] if i else 0) for i in range(len(sums)))

    def __eq__(self, other):
        return isinstance(other, TriangularPattern) and (self.rows, self.m, self.n) == (
            other.rows,
            other.m,
            other.n,
        )

    def __hash__(self):
        return hash((self.rows, self.m, self.n))

    def __repr__(self):
        return " / ".join(",".join(map(str, row)) for row in self.rows)


def _pattern_row_ok(pattern_rows, i, m, n):
    """Local conditions linking row i (1-based) to row i+1, plus per-row rules."""
    row = pattern_rows[i - 1]
    if any(x < 0 for x in row):
        return False
    if i < m + n:
        above = pattern_rows[i]
    else:
        above = None
    if i <= m:
        # even block: standard interlacing with the row above (when it is even-block too)
        if above is not None and i + 1 <= m:
            for j in range(1, i + 1):
                if not (above[j - 1] >= row[j - 1] >= (above[j] if j < len(above) else 0)):
                    return False
        # weakly decreasing inside the row
        if any(row[j] < row[j + 1] for j in range(len(row) - 1)):
            return False
    else:
        # odd zone rows carry row counts (first m) and column counts (rest)
        if above is not None:
            for j in range(1, m + 1):
                if above[j - 1] - row[j - 1] not in (0, 1):
                    return False
            for j in range(m + 1, i + 1):
                if not (above[j - 1] >= row[j - 1] >= (above[j] if j < len(above) else 0)):
                    return False
        # first m entries weakly decreasing (rows strictly under the top)
        if any(row[j] < row[j + 1] for j in range(m - 1)):
            return False
        # the m-th entry bounds how many odd columns are active
        active = sum(1 for j in range(m + 1, i + 1) if row[j - 1] > 0)
        if m >= 1 and row[m - 1] < active:
            return False
    if i == m and m + n > m:
        # increments into the first odd row, with the degenerate-corner rule
        above = pattern_rows[i]
        for j in range(1, m + 1):
            if above[j - 1] - row[j - 1] not in (0, 1):
                return False
        if m >= 1 and above[m - 1] == 0 and row[m - 1] != above[m - 1]:
            return False
    return True


def triangular_patterns(shape, m: int, n: int) -> tuple[TriangularPattern, ...]:
    """All patterns with top row the covariant weight of the shape."""
    top = partition_to_weight(shape, m, n)
    height = m + n
    bound = max(top, default=0)
    out = []
    rows: list[tuple[int, ...] | None] = [None] * height
    rows[height - 1] = top

    def grow(i):
        if i == 0:
            out.append(TriangularPattern(tuple(rows), m, n))
            return
        for cand in product(range(bound + 1), repeat=i):
            rows[i - 1] = cand
            if _pattern_row_ok(rows, i, m, n):
                grow(i - 1)
        rows[i - 1] = None

    if _pattern_row_ok(rows, height, m, n):
        grow(height - 1)
    return tuple(out)


def patterns_for_weight(weight, m: int, n: int) -> tuple[TriangularPattern, ...]:
    """Pattern enumeration keyed by the covariant highest weight."""
    return triangular_patterns(weight_to_partition(weight, m, n), m, n)


def pattern_to_tableau(p: TriangularPattern) -> tuple[tuple[int, ...], ...]:
    """Rebuild the semistandard super tableau counted by a pattern.

    Column j <= m of row i counts entries <= i in tableau row j; column m+k
    counts entries <= i in tableau column k below row m.
    """
    m, n = p.m, p.n
    shape = weight_to_partition(p.rows[-1], m, n)
    rows = [[0] * ln for ln in shape]
    for j in range(1, min(m, len(shape)) + 1):
        for c in range(1, shape[j - 1] + 1):
            entry = next(i for i in range(j, m + n + 1) if p.entry(i, j) >= c)
            rows[j - 1][c - 1] = entry
    conj = conjugate(shape)
    for k in range(1, (shape[m] if len(shape) > m else 0) + 1):
        depth = part(conj, k) - m
        for d in range(1, depth + 1):
            entry = next(i for i in range(m + k, m + n + 1) if p.entry(i, m + k) >= d)
            rows[m + d - 1][k - 1] = entry
    return tuple(tuple(row) for row in rows)
