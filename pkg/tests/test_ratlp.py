import random
from fractions import Fraction

import pytest

from altrank.ratlp import LinearProgram, format_fraction, is_feasible, solve


def test_trivial_examples():
    lp = LinearProgram("max", [1])
    lp.add([1], "<=", 3)
    sol = solve(lp)
    assert sol.optimal and sol.value == 3 and sol.x == (3,)

    assert solve(LinearProgram("max", [1])).status == "unbounded"

    lp = LinearProgram("max", [1, 1])
    lp.add([1, 1], "<=", 1)
    lp.add([1, 0], ">=", 2)
    assert solve(lp).status == "infeasible"


def test_equalities_free_and_shifted_variables():
    # min x + y, x free, y >= 2, x + y >= -1, x - y = -5
    lp = LinearProgram("min", [1, 1], lower=[None, 2])
    lp.add([1, 1], ">=", -1)
    lp.add([1, -1], "=", -5)
    sol = solve(lp)
    assert sol.optimal
    assert sol.x == (-3, 2) and sol.value == -1


def test_redundant_equalities():
    lp = LinearProgram("max", [1, 2])
    lp.add([1, 1], "=", 4)
    lp.add([2, 2], "=", 8)
    lp.add([0, 1], "<=", Fraction(5, 2))
    sol = solve(lp)
    assert sol.x == (Fraction(3, 2), Fraction(5, 2))
    assert sol.value == Fraction(13, 2)


def test_degenerate_cycling_example():
    # Beale's example: cycles under the textbook rule, not under Bland's
    lp = LinearProgram("min", [Fraction(-3, 4), 150, Fraction(-1, 50), 6])
    lp.add([Fraction(1, 4), -60, Fraction(-1, 25), 9], "<=", 0)
    lp.add([Fraction(1, 2), -90, Fraction(-1, 50), 3], "<=", 0)
    lp.add([0, 0, 1, 0], "<=", 1)
    sol = solve(lp)
    assert sol.optimal and sol.value == Fraction(-1, 20)


def random_lp(rng: random.Random, nvar: int, ncon: int):
    """An LP whose optimum is a chosen vertex, certified by KKT multipliers."""
    xstar = [Fraction(rng.randint(1, 9), rng.randint(1, 4)) for _ in range(nvar)]
    rows = []
    while len(rows) < ncon:
        row = [Fraction(rng.randint(-5, 5)) for _ in range(nvar)]
        if any(row):
            rows.append(row)
    active = rng.sample(range(ncon), min(nvar, ncon))
    lp_rows = []
    for i, row in enumerate(rows):
        lhs = sum(a * x for a, x in zip(row, xstar))
        slack = 0 if i in active else rng.randint(1, 6)
        lp_rows.append((row, lhs + slack))
    y = {i: Fraction(rng.randint(1, 5)) for i in active}
    c = [sum(y[i] * rows[i][j] for i in active) for j in range(nvar)]
    lp = LinearProgram("max", c, lower=[None] * nvar)
    for row, rhs in lp_rows:
        lp.add(row, "<=", rhs)
    return lp, sum(a * x for a, x in zip(c, xstar))


@pytest.mark.parametrize("seed", range(40))
def test_random_lps_with_known_optimum(seed):
    rng = random.Random(seed)
    nvar = rng.randint(1, 5)
    lp, value = random_lp(rng, nvar, nvar + rng.randint(0, 4))
    sol = solve(lp)
    # c is a nonnegative combination of active rows, so weak duality certifies x*
    assert sol.optimal
    assert sol.value == value
    assert is_feasible(lp, sol.x)


def test_minimisation_matches_negated_maximisation():
    rng = random.Random(99)
    for _ in range(10):
        lp, value = random_lp(rng, 3, 6)
        neg = LinearProgram("min", [-c for c in lp.objective], lp.constraints, lp.lower)
        assert solve(neg).value == -value


def test_deterministic():
    rng = random.Random(5)
    lp, _ = random_lp(rng, 4, 7)
    a, b = solve(lp), solve(lp)
    assert a == b


def test_dump_format():
    lp = LinearProgram("max", [1, Fraction(1, 2)], names=["u", "v"], lower=[0, None])
    lp.add([Fraction(2, 3), -1], "<=", Fraction(7, 5), name="cap")
    text = lp.dump()
    assert text.splitlines() == [
        "maximize: 1 u + 1/2 v",
        "subject to:",
        "  cap: 2/3 u + -1 v <= 7/5",
        "bounds:",
        "  u >= 0",
        "  v free",
    ]
    assert format_fraction(Fraction(-4, 6)) == "-2/3"


def test_malformed_input():
    with pytest.raises(ValueError):
        LinearProgram("maximise", [1])
    lp = LinearProgram("max", [1, 1])
    with pytest.raises(ValueError):
        lp.add([1], "<=", 1)
    with pytest.raises(ValueError):
        lp.add([1, 1], "<", 1)
