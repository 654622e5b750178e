"""The space Alt_n(F_q) of alternating n x n matrices.

An alternating matrix is stored through its strictly upper-triangular
entries in row-major order.  Its integer index is the base-q number whose
k-th least significant digit is ``upper[k]``; this gives a bijection between
Alt_n(F_q) and ``range(q ** (n*(n-1)//2))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .gf import FieldSpec


def num_entries(n: int) -> int:
    return n * (n - 1) // 2


def space_size(n: int, q: int) -> int:
    return q ** num_entries(n)


@dataclass(frozen=True)
class AltMatrix:
    n: int
    spec: FieldSpec
    upper: tuple[int, ...]

    def __post_init__(self):
        if len(self.upper) != num_entries(self.n):
            raise ValueError(f"expected {num_entries(self.n)} upper entries, got {len(self.upper)}")
        if any(not 0 <= a < self.spec.q for a in self.upper):
            raise ValueError("entry out of field range")

    @classmethod
    def zero(cls, n: int, spec: FieldSpec) -> AltMatrix:
        return cls(n, spec, (0,) * num_entries(n))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], spec: FieldSpec) -> AltMatrix:
        """Build from a full matrix, checking that it is alternating."""
        n = len(rows)
        upper = []
        for i in range(n):
            if len(rows[i]) != n:
                raise ValueError("matrix is not square")
            if rows[i][i] != 0:
                raise ValueError(f"nonzero diagonal entry at ({i}, {i})")
            for j in range(i + 1, n):
                if rows[j][i] != spec.neg(rows[i][j]):
                    raise ValueError(f"entries ({i}, {j}) and ({j}, {i}) are not negatives")
                upper.append(rows[i][j])
        return cls(n, spec, tuple(upper))

    def rows(self) -> list[list[int]]:
        n, neg = self.n, self.spec.neg
        out = [[0] * n for _ in range(n)]
        k = 0
        for i in range(n):
            for j in range(i + 1, n):
                a = self.upper[k]
                out[i][j] = a
                out[j][i] = neg(a)
                k += 1
        return out

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if i == j:
            return 0
        if i > j:
            return self.spec.neg(self[j, i])
        k = i * self.n - i * (i + 1) // 2 + (j - i - 1)
        return self.upper[k]

    def _check(self, other: AltMatrix) -> None:
        if other.n != self.n or other.spec != self.spec:
            raise ValueError("matrices differ in size or field")

    def __add__(self, other: AltMatrix) -> AltMatrix:
        self._check(other)
        add = self.spec.add
        return AltMatrix(self.n, self.spec, tuple(add(a, b) for a, b in zip(self.upper, other.upper)))

    def __sub__(self, other: AltMatrix) -> AltMatrix:
        self._check(other)
        sub = self.spec.sub
        return AltMatrix(self.n, self.spec, tuple(sub(a, b) for a, b in zip(self.upper, other.upper)))

    def __neg__(self) -> AltMatrix:
        return AltMatrix(self.n, self.spec, tuple(self.spec.neg(a) for a in self.upper))

    def scale(self, c: int) -> AltMatrix:
        return AltMatrix(self.n, self.spec, tuple(self.spec.mul(c, a) for a in self.upper))

    def is_zero(self) -> bool:
        return not any(self.upper)

    def rank(self) -> int:
        return matrix_rank(self.rows(), self.spec)


def matrix_rank(rows: Sequence[Sequence[int]], spec: FieldSpec) -> int:
    """Rank over F_q by Gaussian elimination (rows may be any shape)."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    mul, sub, inv = spec.mul_table, spec.sub, spec.inv
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        prow = m[rank]
        pinv = inv(prow[col])
        if mul:
            prow[:] = [mul[pinv][a] for a in prow]
        else:
            prow[:] = [spec.mul(pinv, a) for a in prow]
        for r in range(rank + 1, len(m)):
            f = m[r][col]
            if f:
                row = m[r]
                for c in range(col, ncols):
                    if prow[c]:
                        row[c] = sub(row[c], spec.mul(f, prow[c]))
        rank += 1
        if rank == len(m):
            break
    return rank


def rank(a: AltMatrix) -> int:
    return a.rank()


def encode(a: AltMatrix) -> int:
    q = a.spec.q
    idx = 0
    for digit in reversed(a.upper):
        idx = idx * q + digit
    return idx


def decode(idx: int, n: int, spec: FieldSpec) -> AltMatrix:
    q = spec.q
    if not 0 <= idx < space_size(n, q):
        raise ValueError(f"index {idx} outside [0, {space_size(n, q)})")
    upper = []
    for _ in range(num_entries(n)):
        idx, digit = divmod(idx, q)
        upper.append(digit)
    return AltMatrix(n, spec, tuple(upper))


def enumerate_alt(n: int, spec: FieldSpec, start: int = 0, stop: int | None = None) -> Iterator[AltMatrix]:
    """Stream Alt_n(F_q) in index order over ``[start, stop)``."""
    total = space_size(n, spec.q)
    stop = total if stop is None else min(stop, total)
    for idx in range(start, stop):
        yield decode(idx, n, spec)


# --- counting ---------------------------------------------------------------

def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Gaussian binomial coefficient [n choose k]_q (product form, exact)."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def count_rank(n: int, q: int, i: int, *, binomial_base: int | None = None) -> int:
    """Number of matrices in Alt_n(F_q) of rank exactly i.

    Evaluates the alternating-sum formula with Gaussian binomials in base
    ``q`` (the convention that agrees with exhaustive enumeration).  Passing
    ``binomial_base`` lets tests evaluate the same sum with another base.
    """
    if not 0 <= i <= n:
        raise ValueError(f"rank {i} outside [0, {n}]")
    if i % 2:
        return 0
    b = q if binomial_base is None else binomial_base
    total = 0
    for s in range(i + 1):
        e = s * (s - 1) // 2 + (i - s) * (i - s - 1) // 2
        total += (-1) ** (i - s) * q**e * gaussian_binomial(i, s, b)
    return gaussian_binomial(n, i, b) * total


@dataclass(frozen=True)
class RankDistribution:
    n: int
    q: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.n + 1:
            raise ValueError("need one count per rank 0..n")
        if any(self.counts[i] for i in range(1, self.n + 1, 2)):
            raise ValueError("odd ranks must have zero count")
        if sum(self.counts) != space_size(self.n, self.q):
            raise ValueError("counts do not sum to the size of the space")


def rank_distribution(n: int, q: int) -> RankDistribution:
    return RankDistribution(n, q, tuple(count_rank(n, q, i) for i in range(n + 1)))


def enumerated_rank_distribution(n: int, spec: FieldSpec) -> RankDistribution:
    counts = [0] * (n + 1)
    for a in enumerate_alt(n, spec):
        counts[a.rank()] += 1
    return RankDistribution(n, spec.q, tuple(counts))


def ball_volume(n: int, q: int, r: int) -> int:
    """Number of matrices of rank at most r."""
    if not 0 <= r <= n:
        raise ValueError(f"radius {r} outside [0, {n}]")
    return sum(count_rank(n, q, i) for i in range(r + 1))


def ball_volume_exponent_asymptotic(n: int, r: int) -> int:
    """Exponent e with ball volume ~ q**e as q grows (diagnostic only)."""
    if not 0 <= r <= n:
        raise ValueError(f"radius {r} outside [0, {n}]")
    if r % 2 == 0:
        return r * n - r * (r + 1) // 2
    return (r - 1) * n - (r - 1) * r // 2


# --- structure --------------------------------------------------------------

def decompose_rank2(a: AltMatrix) -> list[AltMatrix]:
    """Split ``a`` into rank(a)/2 alternating matrices of rank 2.

    Repeatedly takes the lexicographically first nonzero entry (i, j) and
    subtracts the rank-2 matrix agreeing with the remainder on rows and
    columns i and j.
    """
    spec, n = a.spec, a.n
    mul, sub, inv = spec.mul, spec.sub, spec.inv
    parts = []
    rest = a
    while not rest.is_zero():
        m = rest.rows()
        i, j = next((i, j) for i in range(n) for j in range(i + 1, n) if m[i][j])
        ainv = inv(m[i][j])
        ci = [mul(ainv, m[k][i]) for k in range(n)]
        cj = [m[k][j] for k in range(n)]
        # B = ci cj^T - cj ci^T has columns i, j equal to those of rest
        b = [[sub(mul(ci[r], cj[c]), mul(cj[r], ci[c])) for c in range(n)] for r in range(n)]
        piece = AltMatrix.from_rows(b, spec)
        parts.append(piece)
        rest = rest - piece
    return parts


@dataclass(frozen=True)
class MatrixCode:
    spec: FieldSpec
    n: int
    elements: frozenset[AltMatrix]
    declared_min_dist: int | None = None

    def __post_init__(self):
        for x in self.elements:
            if x.n != self.n or x.spec != self.spec:
                raise ValueError("code elements differ in size or field")
        if self.declared_min_dist is not None:
            if self.declared_min_dist % 2:
                raise ValueError("alternating codes have even minimum distance")
            if len(self.elements) >= 2 and min_distance(self) != self.declared_min_dist:
                raise ValueError("declared minimum distance does not match the code")

    @classmethod
    def of(cls, elements: Iterable[AltMatrix], declared_min_dist: int | None = None) -> MatrixCode:
        elements = list(elements)
        if not elements:
            raise ValueError("empty code")
        if len(set(elements)) != len(elements):
            raise ValueError("duplicate codewords")
        return cls(elements[0].spec, elements[0].n, frozenset(elements), declared_min_dist)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(sorted(self.elements, key=encode))


def min_distance(code: MatrixCode) -> int:
    if len(code.elements) < 2:
        raise ValueError("minimum distance needs at least two codewords")
    return min((x - y).rank() for x, y in combinations(list(code.elements), 2))


def max_distance(code: MatrixCode) -> int:
    if len(code.elements) < 2:
        return 0
    return max((x - y).rank() for x, y in combinations(list(code.elements), 2))


def anticode_subspace(n: int, spec: FieldSpec, basis: Sequence[Sequence[int]]) -> MatrixCode:
    """The linear anticode {M : colsp(M) is contained in span(basis)}.

    Built by filtering the full enumeration, so only usable for small n, q.
    """
    t = len(basis)
    if not 1 <= t <= n or any(len(u) != n for u in basis):
        raise ValueError("basis must hold between 1 and n vectors of length n")
    if matrix_rank(basis, spec) != t:
        raise ValueError("basis vectors are linearly dependent")
    members = []
    for a in enumerate_alt(n, spec):
        cols = [list(col) for col in zip(*a.rows())]
        if matrix_rank(list(basis) + cols, spec) == t:
            members.append(a)
    return MatrixCode.of(members)
