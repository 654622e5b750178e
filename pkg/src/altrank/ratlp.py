"""Exact two-phase simplex over the rationals.

Small dense problems only.  Pivoting follows Bland's rule, so the method
terminates, and with ``Fraction`` arithmetic the reported status is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

RELATIONS = ("<=", "=", ">=")
SENSES = ("min", "max")


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def format_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple[Fraction, ...]
    relation: str
    rhs: Fraction
    name: str = ""


@dataclass
class LinearProgram:
    """``sense`` objective . x subject to constraints, with per-variable lower
    bounds (``None`` marks a free variable)."""

    sense: str
    objective: Sequence
    constraints: list[Constraint] = field(default_factory=list)
    lower: Sequence | None = None
    names: Sequence[str] | None = None

    def __post_init__(self):
        if self.sense not in SENSES:
            raise ValueError(f"sense must be one of {SENSES}, got {self.sense!r}")
        self.objective = tuple(_frac(c) for c in self.objective)
        nvar = len(self.objective)
        if self.lower is None:
            self.lower = (Fraction(0),) * nvar
        self.lower = tuple(None if lb is None else _frac(lb) for lb in self.lower)
        if self.names is None:
            self.names = tuple(f"x{j}" for j in range(nvar))
        self.names = tuple(self.names)
        if len(self.lower) != nvar or len(self.names) != nvar:
            raise ValueError("bounds and names must match the number of variables")
        cons = []
        for c in self.constraints:
            if len(c.coeffs) != nvar:
                raise ValueError(f"constraint {c.name!r} has {len(c.coeffs)} coefficients, expected {nvar}")
            if c.relation not in RELATIONS:
                raise ValueError(f"unknown relation {c.relation!r}")
            cons.append(Constraint(tuple(_frac(a) for a in c.coeffs), c.relation, _frac(c.rhs), c.name))
        self.constraints = cons

    @property
    def num_vars(self) -> int:
        return len(self.objective)

    def add(self, coeffs, relation: str, rhs, name: str = "") -> None:
        if len(coeffs) != self.num_vars:
            raise ValueError(f"expected {self.num_vars} coefficients, got {len(coeffs)}")
        if relation not in RELATIONS:
            raise ValueError(f"unknown relation {relation!r}")
        self.constraints.append(Constraint(tuple(_frac(a) for a in coeffs), relation, _frac(rhs), name))

    def dump(self) -> str:
        """Human-readable listing, one constraint per line, rationals as p/q."""

        def linear(coeffs):
            terms = [f"{format_fraction(a)} {v}" for a, v in zip(coeffs, self.names) if a != 0]
            return " + ".join(terms) if terms else "0"

        lines = [("maximize" if self.sense == "max" else "minimize") + ": " + linear(self.objective)]
        lines.append("subject to:")
        for i, c in enumerate(self.constraints):
            label = c.name or f"c{i}"
            lines.append(f"  {label}: {linear(c.coeffs)} {c.relation} {format_fraction(c.rhs)}")
        lines.append("bounds:")
        for v, lb in zip(self.names, self.lower):
            lines.append(f"  {v} free" if lb is None else f"  {v} >= {format_fraction(lb)}")
        return "\n".join(lines)


@dataclass(frozen=True)
class LPSolution:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None = None
    x: tuple[Fraction, ...] | None = None
    basis: tuple[str, ...] = ()

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


class _Tableau:
    def __init__(self, rows, rhs, basis, ncols):
        self.rows = rows  # list of lists of Fraction, length ncols
        self.rhs = rhs
        self.basis = basis
        self.ncols = ncols

    def pivot(self, r: int, c: int) -> None:
        prow = self.rows[r]
        pv = prow[c]
        if pv != 1:
            self.rows[r] = prow = [a / pv for a in prow]
            self.rhs[r] /= pv
        for i, row in enumerate(self.rows):
            if i != r and row[c] != 0:
                f = row[c]
                self.rows[i] = [a - f * b for a, b in zip(row, prow)]
                self.rhs[i] -= f * self.rhs[r]
        self.basis[r] = c

    def minimize(self, cost: list[Fraction], allowed: list[bool]) -> str:
        """Bland's-rule simplex on the current basis; returns optimal or unbounded."""
        while True:
            entering = None
            for j in range(self.ncols):
                if not allowed[j] or j in self.basis:
                    continue
                reduced = cost[j] - sum(cost[b] * row[j] for b, row in zip(self.basis, self.rows))
                if reduced < 0:
                    entering = j
                    break
            if entering is None:
                return "optimal"
            best = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    ratio = self.rhs[i] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return "unbounded"
            self.pivot(best[1], entering)


def solve(lp: LinearProgram) -> LPSolution:
    """Solve ``lp`` exactly.  The status is definitive."""
    # column map: each original variable -> list of (column, sign)
    columns: list[str] = []
    var_cols: list[list[tuple[int, int]]] = []
    for name, lb in zip(lp.names, lp.lower):
        if lb is None:
            var_cols.append([(len(columns), 1), (len(columns) + 1, -1)])
            columns += [name + "+", name + "-"]
        else:
            var_cols.append([(len(columns), 1)])
            columns.append(name)
    nstruct = len(columns)

    rows, rhs, rels = [], [], []
    for con in lp.constraints:
        row = [Fraction(0)] * nstruct
        b = con.rhs
        for j, a in enumerate(con.coeffs):
            if a == 0:
                continue
            lb = lp.lower[j]
            if lb is not None:
                b -= a * lb
            for col, sign in var_cols[j]:
                row[col] += sign * a
        rel = con.relation
        if b < 0:
            row = [-a for a in row]
            b = -b
            rel = {"<=": ">=", ">=": "<=", "=": "="}[rel]
        rows.append(row)
        rhs.append(b)
        rels.append(rel)

    m = len(rows)
    slack_cols, art_cols = [], []
    for i, rel in enumerate(rels):
        if rel in ("<=", ">="):
            slack_cols.append((i, len(columns), 1 if rel == "<=" else -1))
            columns.append(f"s{i}")
    for i, rel in enumerate(rels):
        if rel in (">=", "="):
            art_cols.append((i, len(columns)))
            columns.append(f"a{i}")
    ncols = len(columns)
    full = [r + [Fraction(0)] * (ncols - nstruct) for r in rows]
    basis = [-1] * m
    for i, col, sign in slack_cols:
        full[i][col] = Fraction(sign)
        if sign == 1:
            basis[i] = col
    for i, col in art_cols:
        full[i][col] = Fraction(1)
        basis[i] = col
    tab = _Tableau(full, list(rhs), basis, ncols)
    is_art = [False] * ncols
    for _, col in art_cols:
        is_art[col] = True

    if art_cols:
        cost1 = [Fraction(int(a)) for a in is_art]
        tab.minimize(cost1, [True] * ncols)
        phase1 = sum(tab.rhs[i] for i, b in enumerate(tab.basis) if is_art[b])
        if phase1 > 0:
            return LPSolution("infeasible")
        # drive zero-level artificials out of the basis, dropping redundant rows
        i = 0
        while i < len(tab.rows):
            if is_art[tab.basis[i]]:
                col = next((j for j in range(ncols) if not is_art[j] and tab.rows[i][j] != 0), None)
                if col is None:
                    del tab.rows[i], tab.rhs[i], tab.basis[i]
                    continue
                tab.pivot(i, col)
            i += 1

    sign = -1 if lp.sense == "max" else 1
    cost2 = [Fraction(0)] * ncols
    for j, c in enumerate(lp.objective):
        for col, s in var_cols[j]:
            cost2[col] += sign * s * c
    status = tab.minimize(cost2, [not a for a in is_art])
    if status == "unbounded":
        return LPSolution("unbounded")

    y = [Fraction(0)] * ncols
    for i, b in enumerate(tab.basis):
        y[b] = tab.rhs[i]
    x = []
    for j, lb in enumerate(lp.lower):
        val = sum(s * y[col] for col, s in var_cols[j])
        x.append(val if lb is None else lb + val)
    x = tuple(x)
    _verify(lp, x)
    value = sum(c * v for c, v in zip(lp.objective, x))
    return LPSolution("optimal", value, x, tuple(columns[b] for b in tab.basis))


def _verify(lp: LinearProgram, x: Sequence[Fraction]) -> None:
    for j, lb in enumerate(lp.lower):
        if lb is not None and x[j] < lb:
            raise ArithmeticError(f"solution violates the bound on {lp.names[j]}")
    for con in lp.constraints:
        lhs = sum(a * v for a, v in zip(con.coeffs, x))
        ok = {"<=": lhs <= con.rhs, "=": lhs == con.rhs, ">=": lhs >= con.rhs}[con.relation]
        if not ok:
            raise ArithmeticError(f"solution violates constraint {con.name!r}")


def is_feasible(lp: LinearProgram, x: Sequence) -> bool:
    try:
        _verify(lp, [_frac(v) for v in x])
    except ArithmeticError:
        return False
    return True
