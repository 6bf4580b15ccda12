"""Core graph type and structural predicates.

Graphs are simple and undirected, with vertices 0..n-1 and the adjacency of
each vertex stored as one Python integer used as a bit vector.  Common-
neighbour counts, which dominate every census in this package, are then
single ``&``-and-popcount operations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from ._bits import iter_bits, pair_index_table
from .errors import SizeLimitError

CANONICAL_MAX_VERTICES = 8  # factorial blow-up guard for brute-force labelling


@dataclass(frozen=True, slots=True)
class Graph:
    """Immutable simple graph: ``order`` vertices, one bit row per vertex."""

    order: int
    rows: tuple[int, ...]

    def __post_init__(self):
        n = self.order
        if n < 0:
            raise ValueError("order must be non-negative")
        if len(self.rows) != n:
            raise ValueError("adjacency must have one row per vertex")
        full = (1 << n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {v} has bits outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"vertex {v} is adjacent to itself")
        for v, row in enumerate(self.rows):
            for u in iter_bits(row):
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric on ({u}, {v})")

    @classmethod
    def from_edges(cls, order: int, edges) -> "Graph":
        rows = [0] * order
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge ({u}, {v}) outside 0..{order - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, tuple(rows))

    # -- basic accessors -------------------------------------------------

    def row(self, v: int) -> int:
        return self.rows[v]

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        return iter_bits(self.rows[v])

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in lexicographic order."""
        for u in range(self.order):
            for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def common_neighbors(self, u: int, v: int) -> int:
        return (self.rows[u] & self.rows[v]).bit_count()

    def complement(self) -> "Graph":
        full = (1 << self.order) - 1
        return Graph(
            self.order,
            tuple((full ^ row ^ (1 << v)) for v, row in enumerate(self.rows)),
        )

    def relabeled(self, perm) -> "Graph":
        """Return the graph with vertex v renamed perm[v]."""
        rows = [0] * self.order
        for v, row in enumerate(self.rows):
            new = 0
            for u in iter_bits(row):
                new |= 1 << perm[u]
            rows[perm[v]] = new
        return Graph(self.order, tuple(rows))

    def induced(self, vertices) -> "Graph":
        """Induced subgraph on ``vertices`` (kept in the given order)."""
        verts = list(vertices)
        index = {v: i for i, v in enumerate(verts)}
        rows = [0] * len(verts)
        for i, v in enumerate(verts):
            row = self.rows[v]
            for j, u in enumerate(verts):
                if row >> u & 1:
                    rows[i] |= 1 << j
        return Graph(len(verts), tuple(rows))

    def subgraph_code(self, vertices) -> int:
        """Packed edge code of the induced subgraph on a sorted vertex tuple.

        Bit t of the result corresponds to pair t in lexicographic order over
        the positions of ``vertices``; used as a memoisation key by the
        censuses, which never build Graph objects in their inner loops.
        """
        code = 0
        pos = 0
        k = len(vertices)
        rows = self.rows
        for a in range(k):
            ra = rows[vertices[a]]
            for b in range(a + 1, k):
                if ra >> vertices[b] & 1:
                    code |= 1 << pos
                pos += 1
        return code


def graph_from_code(code: int, n: int) -> Graph:
    """Inverse of ``Graph.subgraph_code`` for a graph on n labelled vertices."""
    rows = [0] * n
    pos = 0
    for i in range(n):
        for j in range(i + 1, n):
            if code >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos += 1
    return Graph(n, tuple(rows))


@dataclass(frozen=True, slots=True)
class SrgParams:
    """Parameter quadruple (n, k, lam, mu) of a strongly regular graph."""

    n: int
    k: int
    lam: int = 1
    mu: int = 2

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if not 0 <= self.k < self.n:
            raise ValueError("k must satisfy 0 <= k < n")

    @property
    def is_family(self) -> bool:
        return self.lam == 1 and self.mu == 2


# -- Conditions I and II ------------------------------------------------


@dataclass(frozen=True, slots=True)
class ConditionReport:
    """Outcome of a per-edge or per-non-edge common-neighbour scan."""

    ok: bool
    pairs_checked: int
    violation: Optional[tuple[int, int, int]] = None  # (u, v, count)

    def __bool__(self) -> bool:
        return self.ok


def check_condition_one(g: Graph) -> ConditionReport:
    """Every edge lies in exactly one triangle (common-neighbour count 1)."""
    checked = 0
    for u, v in g.edges():
        checked += 1
        c = g.common_neighbors(u, v)
        if c != 1:
            return ConditionReport(False, checked, (u, v, c))
    return ConditionReport(True, checked)


def check_condition_two(g: Graph) -> ConditionReport:
    """Every non-adjacent pair lies in exactly one quadrilateral (count 2)."""
    checked = 0
    for u in range(g.order):
        row = g.rows[u]
        for v in range(u + 1, g.order):
            if row >> v & 1:
                continue
            checked += 1
            c = g.common_neighbors(u, v)
            if c != 2:
                return ConditionReport(False, checked, (u, v, c))
    return ConditionReport(True, checked)


# -- srg verification ----------------------------------------------------


@dataclass(frozen=True, slots=True)
class SrgReport:
    """Structured outcome of verify_srg; never raises, records every failure."""

    expected: SrgParams
    degenerate: bool
    regular: bool
    degree: Optional[int]  # common degree when regular, else None
    degree_witness: Optional[tuple[int, int]]  # (vertex, its degree)
    lambda_ok: bool
    lambda_witness: Optional[tuple[int, int, int]]
    mu_ok: bool
    mu_vacuous: bool
    mu_witness: Optional[tuple[int, int, int]]
    params_match: bool
    order_relation_ok: bool  # k(k-2) == 2(n-k-1), evaluated for lam=1, mu=2

    @property
    def passed(self) -> bool:
        return (
            self.regular
            and self.lambda_ok
            and self.mu_ok
            and self.params_match
            and self.order_relation_ok
        )


def verify_srg(g: Graph, expected: SrgParams) -> SrgReport:
    """Check regularity and the lambda/mu uniformity of g against ``expected``.

    The report also evaluates the order relation k(k-2) = 2(n-k-1) that pins
    n = (k^2+2)/2 for the lam=1, mu=2 family (skipped for other parameters).
    """
    n = g.order
    degenerate = n <= 1
    if degenerate:
        return SrgReport(
            expected, True, True, 0 if n else None, None,
            True, None, True, True, None,
            params_match=(expected.n == n),
            order_relation_ok=True,
        )

    degs = [g.degree(v) for v in range(n)]
    k = degs[0]
    regular = True
    degree_witness = None
    for v, d in enumerate(degs):
        if d != k:
            regular = False
            degree_witness = (v, d)
            break

    lambda_ok = True
    lambda_witness = None
    mu_ok = True
    mu_witness = None
    nonedges = 0
    for u in range(n):
        row = g.rows[u]
        for v in range(u + 1, n):
            c = (row & g.rows[v]).bit_count()
            if row >> v & 1:
                if lambda_ok and c != expected.lam:
                    lambda_ok = False
                    lambda_witness = (u, v, c)
            else:
                nonedges += 1
                if mu_ok and c != expected.mu:
                    mu_ok = False
                    mu_witness = (u, v, c)
    mu_vacuous = nonedges == 0

    params_match = regular and n == expected.n and k == expected.k
    if expected.is_family and regular:
        order_relation_ok = k * (k - 2) == 2 * (n - k - 1)
    else:
        order_relation_ok = True
    return SrgReport(
        expected, False, regular,
        k if regular else None, degree_witness,
        lambda_ok, lambda_witness,
        mu_ok, mu_vacuous, mu_witness,
        params_match, order_relation_ok,
    )


# -- canonical forms on at most 8 vertices --------------------------------


@dataclass(frozen=True, slots=True)
class CanonicalClass:
    """Order-independent certificate of a graph on <= 8 vertices.

    Certificates of two graphs are equal iff the graphs are isomorphic;
    guaranteed by minimising the packed edge code over all vertex
    permutations.
    """

    certificate: int
    vertex_count: int
    edge_count: int


@lru_cache(maxsize=None)
def _perm_bit_maps(n: int) -> tuple[tuple[int, ...], ...]:
    """For each permutation of range(n), where each edge-code bit lands."""
    pairs = pair_index_table(n)
    maps = []
    for sigma in itertools.permutations(range(n)):
        dest = [0] * len(pairs)
        for (i, j), pos in pairs.items():
            a, b = sigma[i], sigma[j]
            dest[pos] = pairs[(a, b) if a < b else (b, a)]
        maps.append(tuple(dest))
    return tuple(maps)


def canonical_code(code: int, n: int) -> int:
    """Lexicographically minimal relabelling of a packed edge code."""
    if code == 0:
        return 0
    best = None
    for dest in _perm_bit_maps(n):
        cand = 0
        m = code
        while m:
            low = m & -m
            cand |= 1 << dest[low.bit_length() - 1]
            m ^= low
            if best is not None and cand > best:
                break
        else:
            if best is None or cand < best:
                best = cand
    return best


# classification cache: vertex count -> {raw code -> canonical code}
_CODE_CACHE: dict[int, dict[int, int]] = {}


def classify_code(code: int, n: int) -> int:
    cache = _CODE_CACHE.setdefault(n, {})
    cert = cache.get(code)
    if cert is None:
        cert = canonical_code(code, n)
        cache[code] = cert
    return cert


def canonical_class(g: Graph) -> CanonicalClass:
    """Certificate for graphs on at most 8 vertices (brute-force labelling)."""
    if g.order > CANONICAL_MAX_VERTICES:
        raise SizeLimitError(
            f"canonical form limited to {CANONICAL_MAX_VERTICES} vertices, "
            f"got {g.order}"
        )
    code = g.subgraph_code(tuple(range(g.order)))
    cert = classify_code(code, g.order)
    return CanonicalClass(cert, g.order, code.bit_count())


# -- exact determinant and 3-edge covers ----------------------------------


def adjacency_determinant(g: Graph) -> int:
    """Exact determinant of the 0/1 adjacency matrix (<= 8 vertices)."""
    if g.order > 8:
        raise SizeLimitError("determinant limited to 8 vertices")
    return _det_from_rows(g.rows, g.order)


def _det_from_rows(rows, n: int) -> int:
    """Bareiss fraction-free elimination; exact for integer matrices."""
    if n == 0:
        return 1
    m = [[rows[i] >> j & 1 for j in range(n)] for i in range(n)]
    sign = 1
    prev = 1
    for p in range(n - 1):
        if m[p][p] == 0:
            for r in range(p + 1, n):
                if m[r][p] != 0:
                    m[p], m[r] = m[r], m[p]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[p][p]
        for r in range(p + 1, n):
            for c in range(p + 1, n):
                m[r][c] = (m[r][c] * pivot - m[r][p] * m[p][c]) // prev
            m[r][p] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def determinant_of_code(code: int, n: int) -> int:
    rows = [0] * n
    pos = 0
    for i in range(n):
        for j in range(i + 1, n):
            if code >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos += 1
    return _det_from_rows(tuple(rows), n)


def three_edge_cover_count(g: Graph) -> int:
    """Number of perfect matchings of a 6-vertex graph (3 disjoint edges)."""
    if g.order != 6:
        raise SizeLimitError("3-edge covers are defined on exactly 6 vertices")
    return perfect_matching_count(g.rows, 6)


def perfect_matching_count(rows, n: int) -> int:
    """Count perfect matchings by pairing off the lowest unmatched vertex."""
    if n % 2:
        return 0

    def rec(unmatched: int) -> int:
        if not unmatched:
            return 1
        low = unmatched & -unmatched
        v = low.bit_length() - 1
        rest = unmatched ^ low
        total = 0
        for u in iter_bits(rows[v] & rest):
            total += rec(rest ^ (1 << u))
        return total

    return rec((1 << n) - 1)


def matching_count_of_code(code: int, n: int) -> int:
    g_rows = [0] * n
    pos = 0
    for i in range(n):
        for j in range(i + 1, n):
            if code >> pos & 1:
                g_rows[i] |= 1 << j
                g_rows[j] |= 1 << i
            pos += 1
    return perfect_matching_count(g_rows, n)
