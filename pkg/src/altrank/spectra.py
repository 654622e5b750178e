"""Spectral data of the alternating forms graph, computed symbolically.

Everything here is exact: eigenvalues and intersection numbers are Python
integers, multiplicities are integers obtained from the standard sequences,
and the eigenmatrices are ``Fraction`` matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .altforms import space_size


def _check(n: int, q: int) -> None:
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"{what} = {x} is not an integer")
    return x.numerator


def diameter(n: int) -> int:
    return n // 2


def degree(n: int, q: int) -> int:
    """delta = (q^n - 1)(q^(n-1) - 1)/(q^2 - 1)."""
    return _as_int(Fraction((q**n - 1) * (q ** (n - 1) - 1), q**2 - 1), "degree")


def eigenvalue(n: int, q: int, x: int) -> int:
    num = q ** (2 * n - 2 * x - 1) - q**n - q ** (n - 1) + 1
    return _as_int(Fraction(num, q**2 - 1), f"eigenvalue P({x})")


@dataclass(frozen=True)
class SpectrumTable:
    n: int
    q: int
    theta: tuple[int, ...]
    mult: tuple[int, ...] | None = None

    @property
    def D(self) -> int:
        return len(self.theta) - 1

    @property
    def size(self) -> int:
        return space_size(self.n, self.q)

    def check(self) -> None:
        th = self.theta
        if any(a <= b for a, b in zip(th, th[1:])):
            raise AssertionError("eigenvalues are not strictly decreasing")
        if th[0] != degree(self.n, self.q):
            raise AssertionError("largest eigenvalue differs from the degree")
        # the smallest eigenvalue is exactly -1 for n = 2, 3 (complete graphs)
        if not (th[-1] < -1 if self.n >= 4 else th[-1] == -1) or any(t <= 0 for t in th[:-1]):
            raise AssertionError("eigenvalue signs out of order: expected theta_x > 0 for x < D and theta_D <= -1")
        if self.mult is not None:
            if any(m <= 0 for m in self.mult):
                raise AssertionError("non-positive multiplicity")
            if sum(self.mult) != self.size:
                raise AssertionError("multiplicities do not sum to the vertex count")
            if sum(m * t for m, t in zip(self.mult, th)) != 0:
                raise AssertionError("trace of the adjacency matrix is not zero")


def eigenvalues(n: int, q: int) -> SpectrumTable:
    _check(n, q)
    st = SpectrumTable(n, q, tuple(eigenvalue(n, q, x) for x in range(diameter(n) + 1)))
    st.check()
    return st


@dataclass(frozen=True)
class IntersectionArray:
    n: int
    q: int
    b: tuple[int, ...]
    c: tuple[int, ...]
    a: tuple[int, ...]
    k: tuple[int, ...]

    @property
    def D(self) -> int:
        return len(self.b) - 1

    @property
    def degree(self) -> int:
        return self.b[0]

    def check(self) -> None:
        D = self.D
        delta = self.b[0]
        if self.b[D] != 0 or self.c[0] != 0 or self.c[1 if D else 0] != (1 if D else 0):
            raise AssertionError("boundary intersection numbers are wrong")
        if any(self.a[i] != delta - self.b[i] - self.c[i] for i in range(D + 1)):
            raise AssertionError("a_i != delta - b_i - c_i")
        if self.k[0] != 1 or sum(self.k) != space_size(self.n, self.q):
            raise AssertionError("valencies do not partition the vertex set")
        for i in range(D):
            if self.k[i] * self.b[i] != self.k[i + 1] * self.c[i + 1]:
                raise AssertionError("k_i b_i != k_(i+1) c_(i+1)")


@lru_cache(maxsize=None)
def intersection_array(n: int, q: int) -> IntersectionArray:
    _check(n, q)
    D = diameter(n)
    qq = Fraction(q)
    delta = degree(n, q)
    b, c = [], []
    for i in range(D + 1):
        bi = qq ** (4 * i) * (qq ** (n - 2 * i) - 1) * (qq ** (n - 2 * i - 1) - 1) / (q**2 - 1)
        ci = qq ** (2 * i - 2) * (qq ** (2 * i) - 1) / (q**2 - 1)
        b.append(_as_int(bi, f"b_{i}"))
        c.append(_as_int(ci, f"c_{i}"))
    a = [delta - b[i] - c[i] for i in range(D + 1)]
    k = [1]
    for i in range(D):
        k.append(_as_int(Fraction(k[i] * b[i], c[i + 1]), f"k_{i + 1}"))
    ia = IntersectionArray(n, q, tuple(b), tuple(c), tuple(a), tuple(k))
    ia.check()
    return ia


class Polynomial:
    """Dense polynomial with Fraction coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs) if cs else (Fraction(0),)

    @property
    def degree(self) -> int:
        if len(self.coeffs) == 1 and self.coeffs[0] == 0:
            return -1
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        other = other if isinstance(other, Polynomial) else Polynomial([other])
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Polynomial([x + y for x, y in zip(a, b)])

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, Polynomial) else Polynomial([-other]))

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial([c * other for c in self.coeffs])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return Polynomial([c / scalar for c in self.coeffs])

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]})"


X = Polynomial([0, 1])


def distance_polynomials(ia: IntersectionArray) -> list[Polynomial]:
    """v_0, ..., v_D from c_(i+1) v_(i+1) = (x - a_i) v_i - b_(i-1) v_(i-1)."""
    v = [Polynomial([1]), X]
    for i in range(1, ia.D):
        nxt = ((X - ia.a[i]) * v[i] - v[i - 1] * ia.b[i - 1]) / ia.c[i + 1]
        v.append(nxt)
    return v[: ia.D + 1]


def multiplicities(st: SpectrumTable, ia: IntersectionArray) -> SpectrumTable:
    if (st.n, st.q) != (ia.n, ia.q):
        raise ValueError("spectrum and intersection array belong to different graphs")
    v = distance_polynomials(ia)
    mult = []
    for j, th in enumerate(st.theta):
        norm = sum(vi(th) ** 2 / ki for vi, ki in zip(v, ia.k))
        mult.append(_as_int(st.size / norm, f"multiplicity of theta_{j}"))
    out = SpectrumTable(st.n, st.q, st.theta, tuple(mult))
    out.check()
    return out


@lru_cache(maxsize=None)
def spectrum(n: int, q: int) -> SpectrumTable:
    """Eigenvalues together with their multiplicities."""
    return multiplicities(eigenvalues(n, q), intersection_array(n, q))


def _inverse(m: list[list[Fraction]]) -> list[list[Fraction]]:
    size = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(m)]
    for col in range(size):
        piv = next((r for r in range(col, size) if aug[r][col] != 0), None)
        if piv is None:
            raise ArithmeticError("P matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[size:] for row in aug]


@dataclass(frozen=True)
class EigenMatrices:
    """``P[j][i] = v_i(theta_j)`` and ``Q = |X| P^-1``.

    Row index of Q is the distance class i, column index the eigenspace j,
    so ``Q[i][j]`` is the Q-number Q_j(i).
    """

    P: tuple[tuple[Fraction, ...], ...]
    Q: tuple[tuple[Fraction, ...], ...]
    size: int


@lru_cache(maxsize=None)
def _eigenmatrices(n: int, q: int) -> EigenMatrices:
    st, ia = spectrum(n, q), intersection_array(n, q)
    v = distance_polynomials(ia)
    P = [[vi(th) for vi in v] for th in st.theta]
    Pinv = _inverse(P)
    Q = [[x * st.size for x in row] for row in Pinv]
    size = len(P)
    for r in range(size):
        for c in range(size):
            s = sum(P[r][t] * Q[t][c] for t in range(size))
            if s != (st.size if r == c else 0):
                raise ArithmeticError("P Q != |X| I")
    return EigenMatrices(tuple(map(tuple, P)), tuple(map(tuple, Q)), st.size)


def eigenmatrices(st: SpectrumTable, ia: IntersectionArray) -> EigenMatrices:
    if st.mult is None:
        raise ValueError("spectrum needs multiplicities")
    return _eigenmatrices(st.n, st.q)


def delta_walks(n: int, q: int) -> int:
    """Closed 3-walks at a vertex: delta * a_1 (closed form, checked against the product)."""
    _check(n, q)
    num = (q**n - 1) * (q ** (n - 1) - 1) * (
        q ** (n + 2) + q ** (n + 1) - q**n - q ** (n - 1) - q**4 - q**2 + 2
    )
    closed = _as_int(Fraction(num, (q**2 - 1) ** 2), "Delta")
    ia = intersection_array(n, q)
    a1 = ia.a[1] if ia.D >= 1 else 0
    if closed != ia.degree * a1:
        raise ArithmeticError("closed form for Delta disagrees with delta * a_1")
    return closed


def t_threshold(n: int, q: int) -> Fraction:
    """Index threshold for the k = 3 ratio bound, in closed form."""
    if n < 6:
        raise ValueError(f"threshold needs n >= 6, got {n}")
    e = 2 * (n // 2) - 2
    return Fraction(q**2 * (q ** (n - 2) - 1) * (q ** (n - 3) - 1) - q**e + 1, q**e - 1)


def t_threshold_spectral(n: int, q: int) -> Fraction:
    """Same threshold from -(d^2 + d theta_D - Delta) / (d (theta_D + 1))."""
    th = eigenvalues(n, q).theta
    d, last = th[0], th[-1]
    return -Fraction(d * d + d * last - delta_walks(n, q), d * (last + 1))
