from fractions import Fraction

import numpy as np
import pytest

from altrank.altforms import count_rank, space_size
from altrank.spectra import (
    Polynomial,
    X,
    degree,
    delta_walks,
    distance_polynomials,
    eigenmatrices,
    eigenvalues,
    intersection_array,
    spectrum,
    t_threshold,
    t_threshold_spectral,
)

GRID = [(n, q) for n in range(2, 13) for q in (2, 3, 4, 5)]


def test_frozen_values():
    assert eigenvalues(4, 2).theta == (35, 3, -5)
    assert eigenvalues(5, 2).theta == (155, 27, -5)
    assert spectrum(4, 2).mult == (1, 35, 28)
    assert sum(spectrum(5, 2).mult) == 1024
    ia = intersection_array(4, 2)
    assert ia.b[0] == 35 and ia.c[1] == 1 and ia.k == (1, 35, 28)
    assert sum(intersection_array(6, 2).k) == 2**15
    assert delta_walks(4, 2) == 630
    assert delta_walks(2, 2) == 0
    assert t_threshold(6, 2) == 27


@pytest.mark.parametrize("n,q", GRID)
def test_spectrum_invariants(n, q):
    st = spectrum(n, q)
    ia = intersection_array(n, q)
    st.check()
    ia.check()
    assert st.theta[0] == degree(n, q) == count_rank(n, q, 2)
    assert st.mult[0] == 1
    assert ia.a[0] == 0
    assert list(ia.k) == [count_rank(n, q, 2 * i) for i in range(n // 2 + 1)]
    # trace of A^3 over the vertex count is Delta
    assert Fraction(sum(m * t**3 for m, t in zip(st.mult, st.theta)), st.size) == delta_walks(n, q)
    assert sum(m * t**2 for m, t in zip(st.mult, st.theta)) == st.size * st.theta[0]


@pytest.mark.parametrize("n,q", [(n, q) for n, q in GRID if n <= 10])
def test_eigenmatrices(n, q):
    st, ia = spectrum(n, q), intersection_array(n, q)
    em = eigenmatrices(st, ia)
    D = st.D
    assert [em.Q[0][j] for j in range(D + 1)] == list(st.mult)
    assert [em.P[0][i] for i in range(D + 1)] == list(ia.k)
    assert all(em.P[j][0] == 1 for j in range(D + 1))
    assert [em.P[j][1] for j in range(D + 1)] == list(st.theta)
    for r in range(D + 1):
        for c in range(D + 1):
            s = sum(em.P[r][t] * em.Q[t][c] for t in range(D + 1))
            assert s == (st.size if r == c else 0)


def test_eigenmatrices_4_2():
    em = eigenmatrices(spectrum(4, 2), intersection_array(4, 2))
    assert em.P == ((1, 35, 28), (1, 3, -4), (1, -5, 4))
    assert em.Q == ((1, 35, 28), (1, 3, -4), (1, -5, 4))


@pytest.mark.parametrize("n,q", [(4, 2), (5, 3), (8, 2), (9, 4)])
def test_distance_polynomials(n, q):
    st, ia = spectrum(n, q), intersection_array(n, q)
    v = distance_polynomials(ia)
    assert [p.degree for p in v] == list(range(ia.D + 1))
    assert [p(st.theta[0]) for p in v] == list(ia.k)
    for th in st.theta[1:]:
        assert sum(p(th) for p in v) == 0


def test_polynomial_arithmetic():
    p = (X - 1) * (X + 1)
    assert p == Polynomial([-1, 0, 1])
    assert p(3) == 8
    assert (p - p).degree == -1
    assert (p / 2)(2) == Fraction(3, 2)


@pytest.mark.parametrize("n", [4, 5])
@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_strongly_regular_cases(n, q):
    st = spectrum(n, q)
    assert len(st.theta) == 3 and st.mult[0] == 1


@pytest.mark.parametrize("n", range(6, 13))
@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_threshold_forms_agree(n, q):
    assert t_threshold(n, q) == t_threshold_spectral(n, q)
    if n % 2 == 0:
        assert t_threshold(n, q) == q ** (n - 1) - q**2 - 1


def test_threshold_needs_n6():
    with pytest.raises(ValueError):
        t_threshold(5, 2)


@pytest.mark.parametrize("n,q", [(3, 2), (4, 2), (3, 3), (4, 3), (5, 2)])
def test_float_eigensolver_agrees(n, q, graph):
    g = graph(n, q)
    w = np.linalg.eigvalsh(g.adjacency().astype(float))
    vals, counts = np.unique(np.round(w).astype(np.int64), return_counts=True)
    assert np.allclose(w, np.round(w), atol=1e-6)
    st = spectrum(n, q)
    got = dict(zip(vals.tolist(), counts.tolist()))
    assert got == dict(zip(st.theta, st.mult))
    assert st.size == space_size(n, q)


@pytest.mark.parametrize("n", range(4, 13))
@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_displayed_bottom_eigenvalues(n, q):
    th = eigenvalues(n, q).theta
    e = n if n % 2 == 0 else n - 1
    r = len(th) - 1
    assert th[r] == Fraction(1 - q**e, q**2 - 1)
    assert th[r - 1] == Fraction(q ** (2 * n - e + 1) - q**n - q ** (n - 1) + 1, q**2 - 1)
    if r >= 2:
        assert th[r - 2] == Fraction(q ** (2 * n - e + 3) - q**n - q ** (n - 1) + 1, q**2 - 1)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_smallest_eigenvalue_is_minus_one_for_tiny_n(q):
    # n = 2, 3 give complete graphs, so the bottom eigenvalue is exactly -1
    assert eigenvalues(2, q).theta[-1] == -1
    assert eigenvalues(3, q).theta[-1] == -1
    assert eigenvalues(4, q).theta[-1] < -1
