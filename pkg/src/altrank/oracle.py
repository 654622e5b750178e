"""Brute-force ground truth on the explicit alternating forms graph.

The graph is built by enumerating Alt_n(F_q): the rank-2 matrices are found
by Gaussian elimination, and the neighbours of every vertex are obtained by
adding each of them to it.  All checks then work on the explicit graph
(BFS, neighbour counts, integer matrix products) and are compared with the
symbolic results from :mod:`altrank.spectra`.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .altforms import decode, num_entries, space_size
from .gf import FieldSpec, field_of_order
from .spectra import SpectrumTable, delta_walks, intersection_array

log = logging.getLogger(__name__)

MAX_VERTICES = 2**20
# dense adjacency matrices (spectrum checks, all-pairs checks) up to this size
DENSE_LIMIT = 4096
DEFAULT_BUDGET = 10**8


class GraphTooLarge(ValueError):
    pass


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    counterexample: object = None

    def __bool__(self) -> bool:
        return self.passed


@dataclass
class DenseGraph:
    n: int
    q: int
    spec: FieldSpec
    neighbors: np.ndarray  # (N, degree) vertex indices
    ranks: np.ndarray  # rank of decode(v)

    @property
    def N(self) -> int:
        return self.neighbors.shape[0]

    @property
    def degree(self) -> int:
        return self.neighbors.shape[1]

    @cached_property
    def bitsets(self) -> list[int]:
        out = []
        for row in self.neighbors.tolist():
            b = 0
            for v in row:
                b |= 1 << v
            out.append(b)
        return out

    def adjacency(self) -> np.ndarray:
        if self.N > DENSE_LIMIT:
            raise GraphTooLarge(f"dense adjacency for {self.N} vertices exceeds {DENSE_LIMIT}")
        a = np.zeros((self.N, self.N), dtype=np.int64)
        rows = np.repeat(np.arange(self.N), self.degree)
        a[rows, self.neighbors.ravel()] = 1
        return a

    def bfs(self, source: int) -> np.ndarray:
        dist = np.full(self.N, -1, dtype=np.int64)
        dist[source] = 0
        frontier = np.array([source])
        level = 0
        while frontier.size:
            level += 1
            nxt = np.unique(self.neighbors[frontier].ravel())
            nxt = nxt[dist[nxt] < 0]
            dist[nxt] = level
            frontier = nxt
        return dist


def _digit_table(N: int, L: int, q: int) -> np.ndarray:
    idx = np.arange(N, dtype=np.int64)
    digits = np.empty((N, L), dtype=np.int64)
    for k in range(L):
        digits[:, k] = idx % q
        idx //= q
    return digits


def build_graph(n: int, q: int, max_vertices: int = MAX_VERTICES) -> DenseGraph:
    """Explicit graph on Alt_n(F_q) with edges at rank distance 2."""
    spec = field_of_order(q)
    N = space_size(n, q)
    if N > max_vertices:
        raise GraphTooLarge(f"Alt_{n}(F_{q}) has {N} vertices, guard is {max_vertices}")
    L = num_entries(n)
    ranks = np.fromiter((decode(i, n, spec).rank() for i in range(N)), dtype=np.int64, count=N)
    rank2 = np.flatnonzero(ranks == 2)
    digits = _digit_table(N, L, q)
    add = np.array(spec.add_table if spec.add_table else
                   [[spec.add(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
    weights = q ** np.arange(L, dtype=np.int64)
    nbrs = np.empty((N, rank2.size), dtype=np.int64)
    # rank distance is translation invariant: neighbours of v are v + (rank-2 set)
    for j, r in enumerate(rank2):
        nbrs[:, j] = add[digits, digits[r]] @ weights
    return DenseGraph(n, q, spec, nbrs, ranks)


def verify_basic(g: DenseGraph) -> CheckResult:
    """Symmetric, loopless, regular of degree equal to the number of rank-2 matrices."""
    N = g.N
    src = np.repeat(np.arange(N), g.degree)
    dst = g.neighbors.ravel()
    if np.any(src == dst):
        return CheckResult("basic", False, "loop found")
    fwd = np.sort(src * N + dst)
    bwd = np.sort(dst * N + src)
    if not np.array_equal(fwd, bwd):
        return CheckResult("basic", False, "adjacency is not symmetric")
    if np.unique(fwd).size != fwd.size:
        return CheckResult("basic", False, "repeated neighbour")
    expected = int(np.count_nonzero(g.ranks == 2))
    ia = intersection_array(g.n, g.q)
    ok = g.degree == expected == ia.degree
    return CheckResult("basic", ok, f"N={N}, degree={g.degree}, formula={ia.degree}")


def verify_geodesic_rank(g: DenseGraph) -> CheckResult:
    dist = g.bfs(0)
    bad = np.flatnonzero(dist * 2 != g.ranks)
    if bad.size:
        v = int(bad[0])
        return CheckResult("geodesic=rank/2", False, f"vertex {v}: distance {dist[v]}, rank {g.ranks[v]}", v)
    hist = {int(k): int(c) for k, c in zip(*np.unique(dist, return_counts=True))}
    return CheckResult("geodesic=rank/2", True, f"distance histogram {hist}")


def recover_intersection_numbers(g: DenseGraph, sources) -> tuple[dict, CheckResult | None]:
    """Count c_i, a_i, b_i for every vertex pair (u, v) with u in ``sources``."""
    found: dict[int, tuple[int, int, int]] = {}
    for u in sources:
        du = g.bfs(int(u))
        nd = du[g.neighbors]
        lvl = du[:, None]
        c = np.count_nonzero(nd == lvl - 1, axis=1)
        a = np.count_nonzero(nd == lvl, axis=1)
        b = np.count_nonzero(nd == lvl + 1, axis=1)
        for i in range(int(du.max()) + 1):
            mask = du == i
            cm, am, bm = c[mask], a[mask], b[mask]
            if cm.min() != cm.max() or am.min() != am.max() or bm.min() != bm.max():
                v = int(np.flatnonzero(mask)[0])
                return found, CheckResult("distance-regular", False, f"non-constant counts at distance {i} from {u}", (int(u), v))
            t = (int(cm[0]), int(am[0]), int(bm[0]))
            if found.setdefault(i, t) != t:
                return found, CheckResult("distance-regular", False, f"counts at distance {i} depend on the source", int(u))
    return found, None


def verify_distance_regularity(g: DenseGraph, sources=None, seed: int = 0) -> CheckResult:
    if sources is None:
        if g.N <= DENSE_LIMIT:
            sources = range(g.N)
        else:
            rng = random.Random(seed)
            sources = [0] + rng.sample(range(1, g.N), 15)
            log.info("distance-regularity checked from %d sampled sources", len(sources))
    found, failure = recover_intersection_numbers(g, sources)
    if failure is not None:
        return failure
    ia = intersection_array(g.n, g.q)
    D = max(found)
    rec_c = tuple(found[i][0] for i in range(D + 1))
    rec_a = tuple(found[i][1] for i in range(D + 1))
    rec_b = tuple(found[i][2] for i in range(D + 1))
    ok = (D == ia.D and rec_b == ia.b and rec_c == ia.c and rec_a == ia.a)
    detail = f"b={list(rec_b)} c={list(rec_c)} a={list(rec_a)}"
    return CheckResult("distance-regular", ok, detail, None if ok else (rec_b, rec_c, rec_a))


def _exact_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Integer matrix product, exact.

    Every partial sum is bounded by (max row abs-sum of a) * (max |b|); below
    2**53 the float64 BLAS product is therefore exact.
    """
    if a.dtype != object and b.dtype != object:
        bound = int(np.abs(a).sum(axis=1).max(initial=0)) * int(np.abs(b).max(initial=0))
        if bound < 2**53:
            return np.rint(a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64)
        if bound < 2**62:
            return a @ b
    return a.astype(object) @ b.astype(object)


def _trace_of_product(a: np.ndarray, b: np.ndarray) -> int:
    bound = int(np.abs(a).max(initial=0)) * int(np.abs(b).max(initial=0)) * a.size
    if a.dtype != object and b.dtype != object and bound < 2**62:
        return int((a * b.T).sum())
    return int((a.astype(object) * b.T.astype(object)).sum())


def _sparse_apply(g: DenseGraph, w: np.ndarray) -> np.ndarray:
    """A @ w for a vector or matrix w, using the neighbour table."""
    return w[g.neighbors].sum(axis=1)


def verify_spectrum(g: DenseGraph, st: SpectrumTable) -> CheckResult:
    """Annihilating polynomial and trace identities against ``st``."""
    if st.mult is None:
        raise ValueError("spectrum needs multiplicities")
    D = len(st.theta) - 1
    if g.N <= DENSE_LIMIT:
        A = g.adjacency()
        eye = np.eye(g.N, dtype=np.int64)
        M = A - st.theta[0] * eye
        for th in st.theta[1:]:
            M = _exact_matmul(M, A - th * eye)
        if np.any(M != 0):
            return CheckResult("spectrum", False, "prod (A - theta I) is not zero")
        powers = [eye, A]
        for _ in range(2, D + 1):
            powers.append(_exact_matmul(powers[-1], A))
        for s in range(2 * D + 1):
            a, b = min(s, D), s - min(s, D)
            tr = _trace_of_product(powers[a], powers[b]) if s else g.N
            want = sum(m * t**s for m, t in zip(st.mult, st.theta))
            if tr != want:
                return CheckResult("spectrum", False, f"tr(A^{s}) = {tr}, spectrum gives {want}")
        return CheckResult("spectrum", True, f"annihilation and traces s=0..{2 * D} hold")
    # large graphs: the polynomial applied to a few basis vectors, traces from vertex 0
    rng = random.Random(0)
    for u in [0] + rng.sample(range(1, g.N), 4):
        w = np.zeros(g.N, dtype=object)
        w[u] = 1
        for th in st.theta:
            w = _sparse_apply(g, w) - th * w
        if any(w):
            return CheckResult("spectrum", False, f"polynomial does not kill e_{u}")
    for s in range(2 * D + 1):
        want = sum(m * t**s for m, t in zip(st.mult, st.theta))
        if closed_walks(g, s) * g.N != want:
            return CheckResult("spectrum", False, f"closed walks of length {s} disagree")
    return CheckResult("spectrum", True, "sampled annihilation and vertex-0 traces hold")


def closed_walks(g: DenseGraph, s: int, vertex: int = 0) -> int:
    """(A^s)_{v,v} by repeated sparse multiplication."""
    w = np.zeros(g.N, dtype=object)
    w[vertex] = 1
    for _ in range(s):
        w = _sparse_apply(g, w)
    return int(w[vertex])


def verify_walk_regular(g: DenseGraph, s: int, samples: int = 10, seed: int = 0) -> CheckResult:
    rng = random.Random(seed)
    verts = rng.sample(range(g.N), min(samples, g.N))
    counts = {v: closed_walks(g, s, v) for v in verts}
    ok = len(set(counts.values())) == 1
    return CheckResult(f"walk-regular s={s}", ok, str(sorted(set(counts.values()))))


def verify_delta(g: DenseGraph) -> CheckResult:
    got = closed_walks(g, 3)
    want = delta_walks(g.n, g.q)
    return CheckResult("Delta=delta*a1", got == want, f"(A^3)_00 = {got}, formula {want}")


def verify_rank_distribution(g: DenseGraph) -> CheckResult:
    from .altforms import count_rank

    counts = np.bincount(g.ranks, minlength=g.n + 1).tolist()
    want = [count_rank(g.n, g.q, i) for i in range(g.n + 1)]
    return CheckResult("rank distribution", counts == want, f"{counts}")


def structural_suite(g: DenseGraph, st: SpectrumTable) -> list[CheckResult]:
    return [
        verify_basic(g),
        verify_rank_distribution(g),
        verify_geodesic_rank(g),
        verify_distance_regularity(g),
        verify_spectrum(g, st),
        verify_delta(g),
    ]


# --- k-independence ------------------------------------------------------------

@dataclass
class AlphaResult:
    size: int
    witness: tuple[int, ...]
    proven: bool
    nodes: int = 0
    flags: list[str] = field(default_factory=list)


class _BudgetExceeded(Exception):
    pass


def conflict_bitsets(g: DenseGraph, k: int) -> list[int]:
    """For each vertex, the bitset of other vertices within distance k."""
    adj = g.bitsets
    ball = [b | (1 << v) for v, b in enumerate(adj)]
    nbr = g.neighbors.tolist()
    for _ in range(1, k):
        new = []
        for v in range(g.N):
            acc = ball[v]
            for z in nbr[v]:
                acc |= ball[z]
            new.append(acc)
        ball = new
    return [b & ~(1 << v) for v, b in enumerate(ball)]


def exact_alpha_k(g: DenseGraph, k: int, budget: int = DEFAULT_BUDGET) -> AlphaResult:
    """Maximum set of vertices pairwise at distance > k.

    Solved as a maximum clique in the complement of the k-th power graph,
    by branch and bound with greedy colouring bounds.  When ``budget``
    search nodes are exhausted the best set found is returned with
    ``proven=False``.
    """
    N = g.N
    if k <= 0:
        return AlphaResult(N, tuple(range(N)), True)
    everything = (1 << N) - 1
    conflict = conflict_bitsets(g, k)
    compat = [everything & ~(c | (1 << v)) for v, c in enumerate(conflict)]

    # greedy lower bound
    greedy, cand = [], everything
    while cand:
        v = (cand & -cand).bit_length() - 1
        greedy.append(v)
        cand &= compat[v]
    best = list(greedy)
    nodes = 0

    def colour_sort(P: int):
        order, colours = [], []
        colour = 0
        uncol = P
        while uncol:
            colour += 1
            avail = uncol
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~(1 << v) & ~compat[v]
                uncol &= ~(1 << v)
                order.append(v)
                colours.append(colour)
        return order, colours

    def expand(R: list[int], P: int) -> None:
        nonlocal best, nodes
        order, colours = colour_sort(P)
        for idx in range(len(order) - 1, -1, -1):
            if len(R) + colours[idx] <= len(best):
                return
            nodes += 1
            if nodes > budget:
                raise _BudgetExceeded
            v = order[idx]
            newP = P & compat[v]
            if newP:
                expand(R + [v], newP)
            elif len(R) + 1 > len(best):
                best = R + [v]
            P &= ~(1 << v)

    proven = True
    try:
        expand([], everything)
    except _BudgetExceeded:
        proven = False
    flags = [] if proven else ["not-proven-optimal"]
    return AlphaResult(len(best), tuple(sorted(best)), proven, nodes, flags)


def validate_witness(g: DenseGraph, witness, k: int) -> bool:
    """Pairwise rank distance >= 2(k+1), computed directly from the matrices."""
    if len(set(witness)) != len(witness) or any(not 0 <= v < g.N for v in witness):
        return False
    if k <= 0:
        return True  # distinct alternating matrices differ by rank >= 2
    mats = [decode(v, g.n, g.spec) for v in witness]
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            if (mats[i] - mats[j]).rank() < 2 * (k + 1):
                return False
    return True
