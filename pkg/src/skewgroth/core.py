"""Partitions, skew shapes, tableaux, and the small combinatorial toolkit
shared by every other module.

Partitions are plain tuples of positive integers in weakly decreasing order
(the empty partition is ``()``).  Skew shapes are ``(outer, inner)`` pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Callable, Iterable, Iterator, Sequence

Partition = tuple[int, ...]
SkewShape = tuple[Partition, Partition]


# -- partitions ---------------------------------------------------------------

def make_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return the canonical tuple without trailing zeros."""
    p = [int(x) for x in parts]
    for i, x in enumerate(p):
        if x < 0:
            raise ValueError(f"negative part in {p}")
        if i and x > p[i - 1]:
            raise ValueError(f"parts not weakly decreasing: {p}")
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def is_partition(parts: Sequence[int]) -> bool:
    return all(x >= 0 for x in parts) and all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def size(lam: Sequence[int]) -> int:
    return sum(lam)


def length(lam: Sequence[int]) -> int:
    return sum(1 for x in lam if x > 0)


def part(lam: Sequence[int], i: int) -> int:
    """1-indexed part, zero-padded."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x >= j) for j in range(1, lam[0] + 1))


def contains(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff mu is contained in lam (zero-padded componentwise)."""
    if len(mu) > len(lam):
        if any(mu[i] > 0 for i in range(len(lam), len(mu))):
            return False
    return all(mu[i] <= lam[i] for i in range(min(len(lam), len(mu))))


def graded_key(lam: Partition):
    return (sum(lam), lam)


def skew_key(shape: SkewShape):
    outer, inner = shape
    return (graded_key(outer), graded_key(inner))


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_upto(n: int) -> list[Partition]:
    """All partitions of size <= n in graded lexicographic order."""
    out = []
    for k in range(n + 1):
        out.extend(sorted(partitions_of(k)))
    return out


def subpartitions(lam: Partition) -> list[Partition]:
    """All partitions contained in lam, graded-lex order."""
    out: list[Partition] = []

    def rec(i: int, bound: int, acc: list[int]):
        if i == len(lam):
            out.append(make_partition(acc))
            return
        for x in range(min(bound, lam[i]) + 1):
            acc.append(x)
            rec(i + 1, x, acc)
            acc.pop()

    rec(0, lam[0] if lam else 0, [])
    return sorted(set(out), key=graded_key)


@lru_cache(maxsize=None)
def superpartitions(lam: Partition, max_size: int) -> tuple[Partition, ...]:
    """All partitions containing lam with size <= max_size, graded-lex order."""
    if sum(lam) > max_size:
        return ()
    out = [mu for mu in partitions_upto(max_size) if contains(mu, lam)]
    return tuple(out)


def skew_size(shape: SkewShape) -> int:
    return sum(shape[0]) - sum(shape[1])


def skew_cells(outer: Partition, inner: Partition) -> list[tuple[int, int]]:
    """Cells (row, col), 0-indexed, of outer/inner in row-major order."""
    return [(i, j) for i in range(len(outer)) for j in range(part(inner, i + 1), outer[i])]


def conjugate_skew(shape: SkewShape) -> SkewShape:
    return conjugate(shape[0]), conjugate(shape[1])


def is_rook_strip(outer: Partition, inner: Partition) -> bool:
    """At most one box in every row and every column of outer/inner."""
    if not contains(outer, inner):
        return False
    cells = skew_cells(outer, inner)
    rows = [i for i, _ in cells]
    cols = [j for _, j in cells]
    return len(set(rows)) == len(rows) and len(set(cols)) == len(cols)


def rook_strip_predecessors(mu: Partition) -> list[tuple[Partition, int]]:
    """Every sigma inside mu with mu/sigma a rook strip, paired with |mu/sigma|.

    Ordered by the number of removed boxes, then by decreasing sigma.
    """
    out = []
    n = len(mu)
    # a rook strip removes at most one box per row; the rows with equal
    # parts below them cannot lose a box without their lower neighbour
    for mask in range(1 << n):
        sigma = [mu[i] - ((mask >> i) & 1) for i in range(n)]
        if not is_partition(sigma):
            continue
        sig = make_partition(sigma)
        if is_rook_strip(mu, sig):
            out.append((sig, bin(mask).count("1")))
    out.sort(key=lambda t: (t[1], tuple(-x for x in t[0])))
    return out


# -- integer sequences and their closures ------------------------------------

def _check_ascent(n: Sequence[int]) -> None:
    for i in range(len(n) - 1):
        if n[i] - n[i + 1] < -1:
            raise ValueError(f"sequence {tuple(n)} violates n_i - n_(i+1) >= -1 at position {i + 1}")


def suffix_max_closure(n: Sequence[int]) -> tuple[Partition, int]:
    """Smallest partition containing ``n``, and the exponent |closure| - |n|.

    A trailing entry -1 is first rewritten to 0 at the cost of one factor
    of -beta; the returned exponent already accounts for that rewrite.
    """
    n = list(n)
    _check_ascent(n)
    if n and n[-1] < -1:
        raise ValueError(f"sequence {tuple(n)} ends below -1")
    closure = []
    running = 0
    for x in reversed(n):
        running = max(running, x)
        closure.append(running)
    closure.reverse()
    return make_partition(closure), sum(closure) - sum(n)


def prefix_min_closure(n: Sequence[int]) -> tuple[Partition, int]:
    """Largest partition contained in ``n``, and the exponent |n| - |closure|."""
    n = list(n)
    _check_ascent(n)
    closure = []
    for i, x in enumerate(n):
        closure.append(x if i == 0 else min(closure[-1], x))
    if closure and closure[-1] < 0:
        raise ValueError(f"prefix-min closure of {tuple(n)} has a negative entry")
    return make_partition(closure), sum(n) - sum(closure)


# -- tableaux -----------------------------------------------------------------

@dataclass(frozen=True)
class Tableau:
    """A filling of a skew shape.  ``rows[i]`` lists the entries of row i
    from left to right, covering columns inner[i] .. outer[i]-1."""

    outer: Partition
    inner: Partition
    rows: tuple[tuple[int, ...], ...]

    @property
    def entries(self) -> dict[tuple[int, int], int]:
        out = {}
        for i, row in enumerate(self.rows):
            start = part(self.inner, i + 1)
            for k, v in enumerate(row):
                out[(i, start + k)] = v
        return out

    def is_semistandard(self) -> bool:
        ent = self.entries
        for (i, j), v in ent.items():
            if (i, j + 1) in ent and ent[(i, j + 1)] < v:
                return False
            if (i + 1, j) in ent and ent[(i + 1, j)] <= v:
                return False
        return True


def enumerate_ssyt(outer: Partition, inner: Partition, max_entry: int) -> list[Tableau]:
    """All semistandard tableaux of shape outer/inner with entries <= max_entry.

    Columns are filled left to right; output is lexicographic in the sequence
    of column fillings.
    """
    if not contains(outer, inner):
        return []
    ncols = outer[0] if outer else 0
    # column j holds rows inner'_j .. outer'_j - 1
    oc, ic = conjugate(outer), conjugate(inner)
    columns = [(part(ic, j + 1), part(oc, j + 1)) for j in range(ncols)]
    nrows = len(outer)
    grid: list[list[int]] = [[0] * part(outer, i + 1) for i in range(nrows)]
    results: list[Tableau] = []

    def column_fillings(j: int) -> Iterator[list[int]]:
        top, bottom = columns[j]
        h = bottom - top

        def rec(k: int, prev: int, acc: list[int]):
            if k == h:
                yield list(acc)
                return
            row = top + k
            lo = prev + 1
            if j > 0 and j - 1 >= part(inner, row + 1):
                lo = max(lo, grid[row][j - 1])
            # leave room for the strictly increasing cells below
            for v in range(lo, max_entry - (h - k - 1) + 1):
                acc.append(v)
                yield from rec(k + 1, v, acc)
                acc.pop()

        yield from rec(0, 0, [])

    def fill(j: int):
        if j == ncols:
            rows = tuple(tuple(grid[i][part(inner, i + 1):outer[i]]) for i in range(nrows))
            results.append(Tableau(outer, inner, rows))
            return
        top, _ = columns[j]
        for col in column_fillings(j):
            for k, v in enumerate(col):
                grid[top + k][j] = v
            fill(j + 1)

    fill(0)
    return results


@lru_cache(maxsize=None)
def count_ssyt(outer: Partition, inner: Partition, max_entry: int) -> int:
    return len(enumerate_ssyt(outer, inner, max_entry))


def column_word(t: Tableau) -> tuple[int, ...]:
    """Entries read bottom to top in each column, columns left to right."""
    ent = t.entries
    word = []
    ncols = t.outer[0] if t.outer else 0
    for j in range(ncols):
        col = sorted((i for (i, jj) in ent if jj == j), reverse=True)
        word.extend(ent[(i, j)] for i in col)
    return tuple(word)


# -- arithmetic helpers -------------------------------------------------------

def binom(a: int, k: int) -> int:
    """Generalized binomial coefficient a(a-1)...(a-k+1)/k!, zero for k < 0."""
    if k < 0:
        return 0
    num = 1
    for t in range(k):
        num *= a - t
    return num // factorial(k)


def laplace_det(matrix: Sequence[Sequence], one, zero=None):
    """Determinant over a commutative ring by cofactor expansion along rows,
    memoizing minors by the set of columns still available.

    Entries need ``+``, ``-``, ``*`` and truthiness (falsy means zero).
    ``one`` is returned for the empty matrix.
    """
    n = len(matrix)
    if n == 0:
        return one
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    memo: dict[int, object] = {}

    def minor(k: int, cols: int):
        if k == n:
            return one
        if cols in memo:
            return memo[cols]
        total = None
        sign = 1
        for j in range(n):
            if not (cols >> j) & 1:
                continue
            a = matrix[k][j]
            if a:
                sub = minor(k + 1, cols & ~(1 << j))
                if sub:
                    term = a * sub
                    if sign < 0:
                        term = -term
                    total = term if total is None else total + term
            sign = -sign
        if total is None:
            total = zero if zero is not None else one - one
        memo[cols] = total
        return total

    return minor(0, (1 << n) - 1)


def tabulate(n: int, entry: Callable[[int, int], object]) -> list[list]:
    """n x n matrix with 1-indexed entry(i, j)."""
    return [[entry(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]
