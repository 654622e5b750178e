"""Upper bounds on A_q(n, 2d), the largest alternating code with minimum
rank distance 2d.

Spectral bounds are evaluated on the exact spectrum from
:mod:`altrank.spectra`; the two LP bounds are solved with the exact simplex
in :mod:`altrank.ratlp`.  Every bound is returned as an exact value and as
the integer bound actually implied (floor, clamped to the whole space).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .altforms import ball_volume, space_size
from .gf import prime_power
from .ratlp import LinearProgram, LPSolution, solve
from .spectra import delta_walks, eigenmatrices, intersection_array, spectrum, t_threshold

PERFECT_IMPOSSIBLE = "perfect-impossible-even-d"
TIGHT = "tight"
NOT_TIGHT = "not-tight"

# cardinality bounds, in report order
BOUND_NAMES = (
    "singleton",
    "hoffman",
    "ratio-k2",
    "ratio-k3",
    "minor-lp",
    "delsarte-lp",
    "code-anticode",
    "sphere-packing",
    "total-distance",
)
DIMENSION_NAMES = ("code-anticode-dim", "gq-linear-dim")
EQUIVALENCES = (
    "hoffman=singleton",
    "ratio-k2=singleton",
    "ratio-k3=singleton",
    "minor-lp=delsarte-lp",
)


@dataclass(frozen=True)
class BoundValue:
    exact: Fraction
    value: int
    clamped: bool = False

    @classmethod
    def of(cls, exact, n: int, q: int) -> BoundValue:
        exact = Fraction(exact)
        whole = space_size(n, q)
        fl = math.floor(exact)
        if fl > whole:
            return cls(exact, whole, True)
        return cls(exact, fl)


@dataclass(frozen=True)
class NotApplicable:
    reason: str

    def __str__(self) -> str:
        return f"NA:{self.reason}"


Entry = Union[BoundValue, NotApplicable]


def _validate_q(q: int) -> None:
    if prime_power(q) is None:
        raise ValueError(f"q = {q} is not a prime power > 1")


def _validate(q: int, n: int, d: int) -> None:
    _validate_q(q)
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if d > n // 2:
        raise ValueError(f"d = {d} exceeds floor(n/2) = {n // 2}")


# --- closed forms -------------------------------------------------------------

def singleton_like(q: int, n: int, d: int) -> int:
    _validate(q, n, d)
    h = n // 2
    num = n * (n - 1) * (h - d + 1)
    if num % (2 * h):
        raise ArithmeticError("Singleton-like exponent is not integral")
    return q ** (num // (2 * h))


def hoffman(q: int, n: int) -> BoundValue:
    """Ratio bound on the independence number, i.e. on A_q(n, 4)."""
    _validate_q(q)
    st = spectrum(n, q)
    top, low = st.theta[0], st.theta[-1]
    return BoundValue.of(Fraction(st.size * -low, top - low), n, q)


def largest_at_most_minus_one(theta: Sequence[int]) -> int:
    """Index of the largest eigenvalue that is <= -1."""
    for i, t in enumerate(theta):
        if t <= -1:
            return i
    raise ValueError("no eigenvalue <= -1")


def ratio_k2(q: int, n: int) -> BoundValue:
    """Best degree-2 ratio-type bound on alpha_2, i.e. on A_q(n, 6)."""
    _validate_q(q)
    if n < 6:
        raise ValueError(f"ratio_k2 needs n >= 6, got {n}")
    st = spectrum(n, q)
    th = st.theta
    i = largest_at_most_minus_one(th)
    if i < 1:
        raise ValueError("spectrum too small")
    t0, ti, tp = th[0], th[i], th[i - 1]
    return BoundValue.of(Fraction(st.size * (t0 + ti * tp), (t0 - ti) * (t0 - tp)), n, q)


def ratio_k3_index(q: int, n: int) -> int:
    """Largest s with theta_s >= t_n, located by search."""
    th = spectrum(n, q).theta
    t = t_threshold(n, q)
    return max(s for s, x in enumerate(th) if x >= t)


def ratio_k3(q: int, n: int) -> BoundValue:
    """Best degree-3 ratio-type bound on alpha_3, i.e. on A_q(n, 8)."""
    _validate_q(q)
    if n < 8:
        raise ValueError(f"ratio_k3 needs n >= 8, got {n}")
    st = spectrum(n, q)
    th = st.theta
    s = ratio_k3_index(q, n)
    if s + 1 >= len(th) - 1:
        raise ArithmeticError(f"located index s = {s} leaves no room for theta_(s+1) < theta_r")
    t0, ts, ts1, tr = th[0], th[s], th[s + 1], th[-1]
    delta = delta_walks(n, q)
    num = delta - t0 * (ts + ts1 + tr) - ts * ts1 * tr
    den = (t0 - ts) * (t0 - ts1) * (t0 - tr)
    return BoundValue.of(Fraction(st.size * num, den), n, q)


# --- LP bounds ----------------------------------------------------------------

def divided_difference(points: Sequence, values: Sequence):
    """Newton divided difference f[x_0, ..., x_m] by the recursive definition.

    ``values`` may be numbers or coefficient vectors (tuples of equal length);
    vectors are combined linearly, which turns the divided difference into
    a linear form in the unknown function values.
    """
    if len(points) != len(values):
        raise ValueError("points and values differ in length")

    def lin(a, b, scale):
        if isinstance(a, tuple):
            return tuple((y - x) * scale for x, y in zip(a, b))
        return (b - a) * scale

    level = [v if isinstance(v, tuple) else Fraction(v) for v in values]
    m = len(points)
    for width in range(1, m):
        level = [
            lin(level[i], level[i + 1], Fraction(1, points[i + width] - points[i]))
            for i in range(m - width)
        ]
    return level[0]


def minor_polynomial_program(q: int, n: int, k: int) -> LinearProgram:
    """LP over the values x_i = f(theta_i) of the minor polynomial of degree k."""
    _validate_q(q)
    st = spectrum(n, q)
    th, mult = st.theta, st.mult
    r = len(th) - 1
    if not 0 <= k <= r:
        raise ValueError(f"k = {k} outside [0, {r}]")
    names = [f"x{i}" for i in range(r + 1)]
    lp = LinearProgram("min", list(mult), names=names)
    lp.add([1] + [0] * r, "=", 1, name="f(theta_0)")
    unit = [tuple(Fraction(int(i == j)) for j in range(r + 1)) for i in range(r + 1)]
    for s in range(k + 1, r + 1):
        form = divided_difference(th[: s + 1], unit[: s + 1])
        lp.add(list(form), "=", 0, name=f"dd{s}")
    return lp


def ratio_general_lp(q: int, n: int, k: int, *, solution: bool = False):
    """Ratio-type bound on alpha_k from the minor-polynomial LP optimum."""
    sol = solve(minor_polynomial_program(q, n, k))
    if not sol.optimal:
        raise ArithmeticError(f"minor-polynomial LP is {sol.status}")
    bv = BoundValue.of(sol.value, n, q)
    return (bv, sol) if solution else bv


def delsarte_program(q: int, n: int, d: int) -> LinearProgram:
    _validate(q, n, d)
    st = spectrum(n, q)
    Q = eigenmatrices(st, intersection_array(n, q)).Q
    D = len(st.theta) - 1
    names = [f"b{i}" for i in range(D + 1)]
    lp = LinearProgram("max", [1] * (D + 1), names=names)
    lp.add([1] + [0] * D, "=", 1, name="beta_0")
    for i in range(1, d):
        lp.add([int(j == i) for j in range(D + 1)], "=", 0, name=f"beta_{i}")
    for j in range(1, D + 1):
        lp.add([Q[i][j] for i in range(D + 1)], ">=", 0, name=f"Q_{j}")
    return lp


def delsarte_lp(q: int, n: int, d: int, *, solution: bool = False):
    sol: LPSolution = solve(delsarte_program(q, n, d))
    if not sol.optimal:
        raise ArithmeticError(f"Delsarte LP is {sol.status}")
    bv = BoundValue.of(sol.value, n, q)
    return (bv, sol) if solution else bv


# --- coding-theoretic bounds --------------------------------------------------

def code_anticode_dim(n: int, d: int) -> int:
    """Dimension bound for linear codes from the anticode Alt_n(U), dim U = 2d-1."""
    if not 1 <= d <= n // 2 or 2 * d - 1 > n:
        raise ValueError(f"d = {d} outside [1, {n // 2}]")
    num = n * (n - 1) - 2 * (d - 1) * (2 * d - 1)
    assert num % 2 == 0
    return num // 2


def code_anticode(q: int, n: int, d: int) -> int:
    """Cardinality form q ** code_anticode_dim(n, d)."""
    _validate(q, n, d)
    return q ** code_anticode_dim(n, d)


def packing_radius(d: int) -> int:
    return (2 * d - 1) // 2


def sphere_packing(q: int, n: int, d: int) -> int:
    _validate(q, n, d)
    return space_size(n, q) // ball_volume(n, q, packing_radius(d))


def perfectness_check(q: int, n: int, d: int) -> str:
    _validate(q, n, d)
    if d % 2 == 0:
        return PERFECT_IMPOSSIBLE
    whole = space_size(n, q)
    ball = ball_volume(n, q, d - 1)
    if whole % ball == 0 and whole // ball >= 2:
        return TIGHT
    return NOT_TIGHT


def total_distance(q: int, n: int, d: int) -> int | NotApplicable:
    _validate(q, n, d)
    if n % 2 == 0:
        half, eps = Fraction(n, 2), Fraction(1, q ** (n - 1))
    else:
        half, eps = Fraction(n - 1, 2), Fraction(1, q ** (2 * n - 3))
    if not d > half - eps:
        return NotApplicable(f"needs d > {half} - {_inv_power(n)}")
    return math.floor((d - half + 1) / (d - half + eps))


def _inv_power(n: int) -> str:
    return f"q^{1 - n}" if n % 2 == 0 else f"q^{3 - 2 * n}"


def gq_linear_dim(n: int, q: int) -> int | NotApplicable:
    """dim <= n/2 for linear codes with 2d = n, n even and q odd."""
    _validate_q(q)
    if n % 2:
        return NotApplicable("n odd")
    if q % 2 == 0:
        return NotApplicable("q even")
    return n // 2


# --- report -------------------------------------------------------------------

@dataclass
class BoundReport:
    q: int
    n: int
    d: int
    entries: dict[str, Entry] = field(default_factory=dict)
    dimensions: dict[str, Union[int, NotApplicable]] = field(default_factory=dict)
    perfectness: str = ""
    equivalences: dict[str, Union[bool, None]] = field(default_factory=dict)

    @property
    def best(self) -> int:
        vals = [e.value for e in self.entries.values() if isinstance(e, BoundValue)]
        return min(vals)

    def best_names(self) -> list[str]:
        b = self.best
        return [k for k, e in self.entries.items() if isinstance(e, BoundValue) and e.value == b]


def _entry(fn, *args) -> Entry:
    try:
        out = fn(*args)
    except ValueError as exc:
        return NotApplicable(str(exc))
    if isinstance(out, (BoundValue, NotApplicable)):
        return out
    return BoundValue(Fraction(out), out)


def full_report(q: int, n: int, d: int) -> BoundReport:
    _validate(q, n, d)
    rep = BoundReport(q, n, d)
    e = rep.entries
    e["singleton"] = _entry(singleton_like, q, n, d)
    e["hoffman"] = _entry(hoffman, q, n) if d == 2 else NotApplicable("bounds alpha_1, needs d = 2")
    e["ratio-k2"] = _entry(ratio_k2, q, n) if d == 3 else NotApplicable("bounds alpha_2, needs d = 3")
    e["ratio-k3"] = _entry(ratio_k3, q, n) if d == 4 else NotApplicable("bounds alpha_3, needs d = 4")
    e["minor-lp"] = _entry(ratio_general_lp, q, n, d - 1)
    e["delsarte-lp"] = _entry(delsarte_lp, q, n, d)
    e["code-anticode"] = _entry(code_anticode, q, n, d)
    e["sphere-packing"] = _entry(sphere_packing, q, n, d)
    e["total-distance"] = _entry(total_distance, q, n, d)
    rep.dimensions["code-anticode-dim"] = code_anticode_dim(n, d)
    rep.dimensions["gq-linear-dim"] = (
        gq_linear_dim(n, q) if 2 * d == n else NotApplicable("needs 2d = n")
    )
    rep.perfectness = perfectness_check(q, n, d)

    def same(a: str, b: str) -> bool | None:
        x, y = e[a], e[b]
        if isinstance(x, NotApplicable) or isinstance(y, NotApplicable):
            return None
        return x.exact == y.exact

    eq = rep.equivalences
    eq["hoffman=singleton"] = same("hoffman", "singleton")
    eq["ratio-k2=singleton"] = same("ratio-k2", "singleton")
    eq["ratio-k3=singleton"] = same("ratio-k3", "singleton")
    eq["minor-lp=delsarte-lp"] = same("minor-lp", "delsarte-lp")
    return rep


def bound_grid(qs: Sequence[int], ns: Sequence[int], ds: Sequence[int] | None = None):
    """Yield (q, n, d) cells in deterministic order; ``ds=None`` means all valid d."""
    for q in qs:
        for n in ns:
            for d in (range(1, n // 2 + 1) if ds is None else ds):
                yield q, n, d

