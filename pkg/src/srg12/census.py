"""Combinatorial censuses: cycles, coded walks, edge triples, 6-vertex types.

Pentagons and hexagons always mean induced (chordless) cycles.  Every cycle
enumerator fixes a canonical representative (minimum vertex first, the two
cycle neighbours of the start in increasing order) so each cycle is visited
exactly once; nothing is counted with multiplicity and divided afterwards.

Targeted censuses of the named 6-vertex types iterate over structure pairs
(triangle pairs, quadrilaterals through an edge, pentagon sides, ...) because
full 6-subset scans are hopeless beyond small graphs; the exhaustive scan is
kept, guarded to 16 vertices, as the ground-truth oracle.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import NamedTuple, Optional

from ._bits import iter_bits
from .errors import (
    CountingInconsistencyError,
    FamilyViolationError,
    SizeLimitError,
)
from .graph import (
    CanonicalClass,
    Graph,
    SrgParams,
    classify_code,
    determinant_of_code,
    matching_count_of_code,
    verify_srg,
)

EXHAUSTIVE_MAX_VERTICES = 16
_BRUTE_TRIPLE_LIMIT = 2_000_000


# -- named 6-vertex types -------------------------------------------------
#
# Structural definitions of the named types (the literature's numbering of
# six-vertex graphs is replaced by certificates).  Vertices 0..5.

NAMED_TYPE_EDGES = {
    # triangular prism: two disjoint triangles joined by a 3-edge matching
    "n1": [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)],
    # quadrilateral with triangles completed on two adjacent sides
    "n2": [(0, 1), (1, 2), (2, 3), (0, 3), (4, 0), (4, 1), (5, 1), (5, 2)],
    # two disjoint triangles joined by exactly two non-incident edges
    "n3": [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4)],
    # pentagon, triangle on one side, apex also joined to the opposite vertex
    "n4": [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (5, 0), (5, 1), (5, 3)],
    # two disjoint triangles joined by exactly one edge
    "n5": [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3)],
    # pentagon with a triangle on one side, no further edges
    "n8": [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (5, 0), (5, 1)],
    # two quadrilaterals sharing an edge, nothing else
    "n9": [(0, 1), (1, 2), (2, 3), (0, 3), (1, 4), (4, 5), (0, 5)],
    # hexagon
    "n12": [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)],
    # quadrilateral plus a disconnected edge
    "n13": [(0, 1), (1, 2), (2, 3), (0, 3), (4, 5)],
    # two disjoint triangles
    "n14": [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)],
}

# coefficient of each named count in the master identity; the aggregate
# n6+n7+n10+n11 enters with coefficient 2
MASTER_COEFF = {
    "n1": 4, "n2": -2, "n3": 2, "n4": 2, "n5": 4, "n8": -2,
    "n9": 2, "n12": -2, "n13": 2, "n14": 4,
}
MASTER_COEFF_AGGREGATE = 2

_PAIR_POS_6 = {}
_pos = 0
for _i in range(6):
    for _j in range(_i + 1, 6):
        _PAIR_POS_6[(_i, _j)] = _pos
        _pos += 1


def _code_from_edges(edges) -> int:
    code = 0
    for u, v in edges:
        code |= 1 << _PAIR_POS_6[(u, v) if u < v else (v, u)]
    return code


_named_certs: Optional[dict[str, int]] = None


def named_type_certificates() -> dict[str, int]:
    """Canonical certificate of each named 6-vertex type."""
    global _named_certs
    if _named_certs is None:
        _named_certs = {
            name: classify_code(_code_from_edges(edges), 6)
            for name, edges in NAMED_TYPE_EDGES.items()
        }
        assert len(set(_named_certs.values())) == len(_named_certs)
    return _named_certs


# -- family gate -----------------------------------------------------------


def require_family(g: Graph) -> tuple[int, int]:
    """Check g is a verified srg(n,k,1,2); return (n, k) or raise."""
    n = g.order
    if n == 0:
        raise FamilyViolationError("empty graph is not a family member")
    k = g.degree(0)
    report = verify_srg(g, SrgParams(n, k, 1, 2))
    if not report.passed:
        raise FamilyViolationError(
            f"graph is not a verified srg({n},{k},1,2): "
            f"regular={report.regular} lambda_ok={report.lambda_ok} "
            f"mu_ok={report.mu_ok} order_relation={report.order_relation_ok}"
        )
    return n, k


def _above(n: int, v: int) -> int:
    return ((1 << n) - 1) & ~((1 << (v + 1)) - 1)


def _chunks(items, workers: int):
    return [items[i::workers] for i in range(workers) if items[i::workers]]


# -- cycle counts ----------------------------------------------------------


@dataclass(frozen=True, slots=True)
class CycleCensus:
    """Counts of induced cycles C3..C6."""

    p3: int
    p4: int
    p5: int
    p6: int


def iter_triangles(g: Graph):
    """Yield each triangle once as (a, b, c) with a < b < c."""
    rows = g.rows
    n = g.order
    for a, b in g.edges():
        for c in iter_bits(rows[a] & rows[b] & _above(n, b)):
            yield (a, b, c)


def count_triangles(g: Graph) -> int:
    rows = g.rows
    n = g.order
    total = 0
    for a, b in g.edges():
        total += (rows[a] & rows[b] & _above(n, b)).bit_count()
    return total


def _quad_list(rows, n: int, v0_list):
    for a in v0_list:
        abv = _above(n, a)
        na = rows[a] & abv
        for b in iter_bits(na):
            for d in iter_bits(na & _above(n, b) & ~rows[b]):
                for c in iter_bits(rows[b] & rows[d] & abv & ~rows[a]):
                    yield (a, b, c, d)


def iter_quadrilaterals(g: Graph):
    """Yield each induced C4 once as (a, b, c, d) in cycle order, a minimal,
    b < d the two cycle neighbours of a."""
    return _quad_list(g.rows, g.order, range(g.order))


def count_quadrilaterals_by_edges(g: Graph) -> int:
    """Induced C4 count via the canonical quadrilateral iterator."""
    rows = g.rows
    n = g.order
    total = 0
    for a in range(n):
        abv = _above(n, a)
        na = rows[a] & abv
        for b in iter_bits(na):
            for d in iter_bits(na & _above(n, b) & ~rows[b]):
                total += (rows[b] & rows[d] & abv & ~rows[a]).bit_count()
    return total


def count_quadrilaterals(g: Graph, assume_family: bool = False) -> int:
    """Induced C4 count.

    With ``assume_family`` the graph must verify as srg(n,k,1,2); every
    non-adjacent ordered pair then lies on one quadrilateral, counted four
    times in total.  The generic path scans 4-subsets and is guarded to 64
    vertices.
    """
    if assume_family:
        n, _ = require_family(g)
        ordered_nonadjacent = sum(n - 1 - g.degree(v) for v in range(n))
        if ordered_nonadjacent % 4:
            raise CountingInconsistencyError(
                f"non-adjacent pair count {ordered_nonadjacent} not divisible by 4"
            )
        return ordered_nonadjacent // 4
    if g.order > 64:
        raise SizeLimitError("generic quadrilateral scan guarded to 64 vertices")
    count = 0
    for quad in combinations(range(g.order), 4):
        code = g.subgraph_code(quad)
        if code.bit_count() != 4:
            continue
        degs = [0, 0, 0, 0]
        pos = 0
        for i in range(4):
            for j in range(i + 1, 4):
                if code >> pos & 1:
                    degs[i] += 1
                    degs[j] += 1
                pos += 1
        if degs == [2, 2, 2, 2]:
            count += 1
    return count


def _pentagon_scan(rows, n: int, v0_list, collect: bool):
    """Count (or list) induced pentagons whose minimum vertex is in v0_list.

    Cycle order v0-v1-v2-v3-v4-v0 with v1 < v4; the innermost vertex v3 is
    resolved by one popcount when only counting.
    """
    count = 0
    found = [] if collect else None
    for v0 in v0_list:
        abv = _above(n, v0)
        nv0 = rows[v0]
        outer = nv0 & abv
        for v1 in iter_bits(outer):
            r1 = rows[v1]
            for v4 in iter_bits(outer & _above(n, v1) & ~r1):
                r4 = rows[v4]
                base2 = r1 & abv & ~nv0 & ~r4
                if not base2:
                    continue
                base3 = r4 & abv & ~nv0 & ~r1
                if not base3:
                    continue
                for v2 in iter_bits(base2):
                    m3 = rows[v2] & base3
                    if collect:
                        for v3 in iter_bits(m3):
                            found.append((v0, v1, v2, v3, v4))
                    else:
                        count += m3.bit_count()
    return found if collect else count


def _pentagon_count_worker(args):
    rows, n, v0_list = args
    return _pentagon_scan(rows, n, v0_list, collect=False)


def _iter_pentagons_of(rows, n: int, v0_list):
    """Stream pentagons one start vertex at a time (flat memory)."""
    for v0 in v0_list:
        yield from _pentagon_scan(rows, n, (v0,), collect=True)


def count_pentagons(g: Graph, workers: int = 1, progress=None) -> int:
    """Number of induced C5, each counted once via the canonical DFS."""
    n = g.order
    if workers > 1 and n >= 32:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(
                _pentagon_count_worker,
                [(g.rows, n, ch) for ch in _chunks(list(range(n)), workers)],
            )
            return sum(parts)
    total = 0
    for v0 in range(n):
        total += _pentagon_scan(g.rows, n, (v0,), collect=False)
        if progress:
            progress(v0 + 1, n)
    return total


def iter_pentagons(g: Graph):
    """Yield each induced C5 once, in cycle order starting at its minimum."""
    return _iter_pentagons_of(g.rows, g.order, range(g.order))


def pentagons_through_edge(g: Graph, edge) -> int:
    """Number of induced C5 containing the given edge."""
    u, v = edge
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    rows = g.rows
    not_uv = ~(rows[u] | rows[v])
    count = 0
    # cycle u-v-w-x-y-u: w is v's neighbour, y is u's, x joins them
    for w in iter_bits(rows[v] & ~rows[u] & ~(1 << u)):
        rw = rows[w]
        xbase = rw & not_uv
        for y in iter_bits(rows[u] & ~rows[v] & ~(1 << v) & ~rw):
            count += (xbase & rows[y]).bit_count()
    return count


def _hexagon_scan(rows, n: int, v0_list) -> int:
    count = 0
    for v0 in v0_list:
        abv = _above(n, v0)
        nv0 = rows[v0]
        outer = nv0 & abv
        for v1 in iter_bits(outer):
            r1 = rows[v1]
            for v5 in iter_bits(outer & _above(n, v1) & ~r1):
                r5 = rows[v5]
                base2 = r1 & abv & ~nv0 & ~r5
                if not base2:
                    continue
                base4 = r5 & abv & ~nv0 & ~r1
                if not base4:
                    continue
                base3 = abv & ~nv0 & ~r1 & ~r5
                for v2 in iter_bits(base2):
                    r2 = rows[v2]
                    m4 = base4 & ~r2
                    if not m4:
                        continue
                    part3 = r2 & base3
                    if not part3:
                        continue
                    for v4 in iter_bits(m4):
                        count += (part3 & rows[v4]).bit_count()
    return count


def _hexagon_count_worker(args):
    rows, n, v0_list = args
    return _hexagon_scan(rows, n, v0_list)


def count_hexagons(g: Graph, workers: int = 1, progress=None) -> int:
    """Number of induced C6, each counted once via the canonical DFS."""
    n = g.order
    if workers > 1 and n >= 32:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(
                _hexagon_count_worker,
                [(g.rows, n, ch) for ch in _chunks(list(range(n)), workers)],
            )
            return sum(parts)
    total = 0
    for v0 in range(n):
        total += _hexagon_scan(g.rows, n, (v0,))
        if progress:
            progress(v0 + 1, n)
    return total


def cycle_census(g: Graph, workers: int = 1, progress=None) -> CycleCensus:
    return CycleCensus(
        p3=count_triangles(g),
        p4=count_quadrilaterals_by_edges(g),
        p5=count_pentagons(g, workers=workers),
        p6=count_hexagons(g, workers=workers, progress=progress),
    )


# -- coded closed 5-walks --------------------------------------------------


class WalkCensus(NamedTuple):
    """Closed 5-walks whose distance-to-start code is 0 1 2 2 1 0."""

    total: int
    t1: int  # quadrilateral-with-triangle configurations (6 walks each)
    t2: int  # triangle-with-pendant configurations (2 walks each)
    p5_walks: int  # pentagons seen by the walk census (10 walks each)


def _walk_scan(rows, n: int, starts) -> tuple[int, int, int]:
    pent = house = paw = 0
    for s in starts:
        ns = rows[s]
        d2 = 0
        for w in iter_bits(ns):
            d2 |= rows[w]
        d2 &= ~ns & ~(1 << s)
        if not d2:
            continue
        for w1 in iter_bits(ns):
            r1 = rows[w1]
            for w2 in iter_bits(r1 & d2):
                r2 = rows[w2]
                for w3 in iter_bits(r2 & d2):
                    r3 = rows[w3]
                    chord13 = r1 >> w3 & 1
                    for w4 in iter_bits(r3 & ns):
                        if w4 == w1:
                            paw += 1
                            continue
                        chords = chord13 + (r1 >> w4 & 1) + (r2 >> w4 & 1)
                        if chords == 0:
                            pent += 1
                        elif chords == 1:
                            house += 1
                        else:
                            raise CountingInconsistencyError(
                                f"walk ({s},{w1},{w2},{w3},{w4}) has {chords} chords"
                            )
    return pent, house, paw


def _walk_worker(args):
    rows, n, starts = args
    return _walk_scan(rows, n, starts)


def coded_walk_census(g: Graph, workers: int = 1) -> WalkCensus:
    """Enumerate and classify every closed 5-walk coded 0 1 2 2 1 0.

    Walks split into pentagons (10 walks each), quadrilateral-plus-triangle
    configurations T1 (6 walks each) and triangle-plus-pendant configurations
    T2 (2 walks each); any other shape raises CountingInconsistencyError.
    """
    require_family(g)
    n = g.order
    if workers > 1 and n >= 32:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(
                pool.map(
                    _walk_worker,
                    [(g.rows, n, ch) for ch in _chunks(list(range(n)), workers)],
                )
            )
        pent = sum(p[0] for p in parts)
        house = sum(p[1] for p in parts)
        paw = sum(p[2] for p in parts)
    else:
        pent, house, paw = _walk_scan(g.rows, n, range(n))
    for value, mult, label in ((pent, 10, "pentagon"), (house, 6, "T1"), (paw, 2, "T2")):
        if value % mult:
            raise CountingInconsistencyError(
                f"{label} walk count {value} not divisible by {mult}"
            )
    return WalkCensus(pent + house + paw, house // 6, paw // 2, pent // 10)


# -- edge triples ----------------------------------------------------------


class EdgeTripleCensus(NamedTuple):
    """Unordered edge triples by vertex span: <=4, exactly 5, exactly 6."""

    e4: int
    e5: int
    e6: int


def edge_triple_census(g: Graph) -> EdgeTripleCensus:
    """Partition all C(|E|,3) edge triples by the size of their vertex span.

    Small graphs get the literal scan over triples; above the scan limit the
    same partition is built by enumerating the incidence structures (triangle
    triples, stars, paths for span <= 4; cherries plus a disjoint edge for
    span 5), which is exact on any graph.
    """
    m = g.num_edges
    total = comb(m, 3)
    if total <= _BRUTE_TRIPLE_LIMIT:
        e4, e5, e6 = _edge_triples_brute(g)
    else:
        e4 = _count_span4_triples(g)
        e5 = _count_span5_triples(g)
        e6 = total - e4 - e5
    if e4 + e5 + e6 != total:
        raise CountingInconsistencyError(
            f"edge triple partition {e4}+{e5}+{e6} != C({m},3) = {total}"
        )
    return EdgeTripleCensus(e4, e5, e6)


def _edge_triples_brute(g: Graph) -> tuple[int, int, int]:
    masks = [(1 << u) | (1 << v) for u, v in g.edges()]
    e4 = e5 = e6 = 0
    for a, b, c in combinations(masks, 3):
        span = (a | b | c).bit_count()
        if span <= 4:
            e4 += 1
        elif span == 5:
            e5 += 1
        else:
            e6 += 1
    return e4, e5, e6


def _count_span4_triples(g: Graph) -> int:
    rows = g.rows
    n = g.order
    degs = [r.bit_count() for r in rows]
    triangles = count_triangles(g)
    stars = sum(comb(d, 3) for d in degs)
    paths = 0
    for u, v in g.edges():
        paths += (degs[u] - 1) * (degs[v] - 1) - (rows[u] & rows[v]).bit_count()
    return triangles + stars + paths


def _count_span5_triples(g: Graph) -> int:
    rows = g.rows
    m = g.num_edges
    degs = [r.bit_count() for r in rows]
    total = 0
    for v in range(g.order):
        nbrs = list(iter_bits(rows[v]))
        dv = degs[v]
        for i in range(len(nbrs)):
            a = nbrs[i]
            ra = rows[a]
            for j in range(i + 1, len(nbrs)):
                b = nbrs[j]
                inside = 2 + (ra >> b & 1)
                total += m - (dv + degs[a] + degs[b] - inside)
    return total


# -- exhaustive 6-subset census ---------------------------------------------


class ClassStats(NamedTuple):
    count: int
    det: int
    cover_count: int


def exhaustive_six_census(
    g: Graph, limit: int = EXHAUSTIVE_MAX_VERTICES
) -> dict[CanonicalClass, ClassStats]:
    """Classify every 6-subset's induced subgraph; ground truth for censuses.

    Guarded to ``limit`` vertices (default 16, i.e. C(16,6) = 8008 subsets).
    Each isomorphism class carries the adjacency determinant and 3-edge-cover
    count of its representative.
    """
    if g.order > limit:
        raise SizeLimitError(
            f"exhaustive census guarded to {limit} vertices, got {g.order}"
        )
    if g.order < 6:
        return {}
    counts: dict[int, int] = {}
    for subset in combinations(range(g.order), 6):
        cert = classify_code(g.subgraph_code(subset), 6)
        counts[cert] = counts.get(cert, 0) + 1
    out = {}
    for cert, cnt in counts.items():
        stats = ClassStats(cnt, determinant_of_code(cert, 6), matching_count_of_code(cert, 6))
        out[CanonicalClass(cert, 6, cert.bit_count())] = stats
    return out


# -- disjoint triangle pairs -------------------------------------------------


class TrianglePairCensus(NamedTuple):
    """Vertex-disjoint triangle pairs by connection shape."""

    n1: int  # prism: 3-edge matching between the triangles
    n3: int  # two non-incident connecting edges
    n5: int  # one connecting edge
    n14: int  # no connecting edges
    excluded: int  # pairs whose induced subgraph has further triangles
    n3_witness: Optional[tuple[tuple[int, ...], tuple[int, ...], tuple]]


def disjoint_triangle_pair_census(g: Graph) -> TrianglePairCensus:
    """Classify every unordered pair of vertex-disjoint triangles.

    The four buckets are decided by the canonical form of the induced
    6-vertex subgraph; pairs whose induced subgraph contains additional
    triangles belong to other types and are excluded.  Works on any graph.
    """
    rows = g.rows
    tris = list(iter_triangles(g))
    masks = [(1 << a) | (1 << b) | (1 << c) for a, b, c in tris]
    certs = named_type_certificates()
    buckets = {certs["n1"]: 0, certs["n3"]: 0, certs["n5"]: 0, certs["n14"]: 0}
    excluded = 0
    witness = None
    for i in range(len(tris)):
        mi = masks[i]
        ti = tris[i]
        for j in range(i + 1, len(tris)):
            if mi & masks[j]:
                continue
            tj = tris[j]
            # cross edges must form a matching or the pair has extra triangles
            cross = 0
            matching = True
            for x in tj:
                c = (rows[x] & mi).bit_count()
                if c > 1:
                    matching = False
                    break
                cross += c
            if matching:
                for x in ti:
                    if (rows[x] & masks[j]).bit_count() > 1:
                        matching = False
                        break
            if not matching:
                excluded += 1
                continue
            verts = tuple(sorted(ti + tj))
            cert = classify_code(g.subgraph_code(verts), 6)
            if cert in buckets:
                buckets[cert] += 1
                if cert == certs["n3"] and witness is None:
                    edges = tuple(
                        (u, x)
                        for u in ti
                        for x in tj
                        if rows[u] >> x & 1
                    )
                    witness = (ti, tj, edges)
            else:
                excluded += 1
    return TrianglePairCensus(
        buckets[certs["n1"]],
        buckets[certs["n3"]],
        buckets[certs["n5"]],
        buckets[certs["n14"]],
        excluded,
        witness,
    )


# -- quadrilateral pairs through an edge --------------------------------------


class QuadPairCensus(NamedTuple):
    n1: int  # prisms (each holds 3 pairs of quadrilaterals sharing an edge)
    n4: int
    n9: int


def c4s_through_edge(g: Graph, u: int, v: int) -> list[tuple[int, int]]:
    """Induced C4s through edge (u,v), as (w, x) with u-v-w-x-u the cycle."""
    rows = g.rows
    out = []
    for w in iter_bits(rows[v] & ~rows[u] & ~(1 << u)):
        for x in iter_bits(rows[u] & rows[w] & ~rows[v] & ~(1 << v)):
            out.append((w, x))
    return out


def quad_pair_census(g: Graph) -> QuadPairCensus:
    """Classify, for every edge, all pairs of quadrilaterals through it.

    In a family graph each edge lies on exactly k-2 quadrilaterals and the
    union of two of them spans 6 vertices inducing a prism, type n4 or type
    n9; prisms collect 3 incidences each and are divided out.
    """
    n, k = require_family(g)
    certs = named_type_certificates()
    prism_cert, n4_cert, n9_cert = certs["n1"], certs["n4"], certs["n9"]
    prism_inc = n4 = n9 = 0
    pair_total = 0
    for u, v in g.edges():
        quads = c4s_through_edge(g, u, v)
        if len(quads) != k - 2:
            raise FamilyViolationError(
                f"edge ({u},{v}) lies on {len(quads)} quadrilaterals, expected {k - 2}"
            )
        pair_total += comb(len(quads), 2)
        for (w1, x1), (w2, x2) in combinations(quads, 2):
            verts = (u, v, w1, x1, w2, x2)
            if len(set(verts)) != 6:
                raise FamilyViolationError(
                    f"quadrilaterals {verts} through ({u},{v}) share a vertex"
                )
            cert = classify_code(g.subgraph_code(tuple(sorted(verts))), 6)
            if cert == prism_cert:
                prism_inc += 1
            elif cert == n4_cert:
                n4 += 1
            elif cert == n9_cert:
                n9 += 1
            else:
                raise CountingInconsistencyError(
                    f"C4 pair through ({u},{v}) induced an unexpected class"
                )
    if prism_inc % 3:
        raise CountingInconsistencyError(
            f"prism incidences {prism_inc} not divisible by 3"
        )
    n1 = prism_inc // 3
    if 3 * n1 + n4 + n9 != pair_total:
        raise CountingInconsistencyError(
            f"3*{n1} + {n4} + {n9} != {pair_total} quadrilateral pairs"
        )
    return QuadPairCensus(n1, n4, n9)


# -- pentagon sides completed with their triangle apex ------------------------


class PentagonTriangleCensus(NamedTuple):
    n4: int
    n8: int
    p5: int  # pentagons enumerated along the way


def _pentagon_triangle_scan(rows, n: int, v0_list) -> tuple[int, int, int]:
    n4 = n8 = p5 = 0
    for pent in _iter_pentagons_of(rows, n, v0_list):
        p5 += 1
        pmask = 0
        for x in pent:
            pmask |= 1 << x
        for i in range(5):
            a = pent[i]
            b = pent[(i + 1) % 5]
            apex_mask = rows[a] & rows[b]
            if apex_mask.bit_count() != 1:
                raise FamilyViolationError(
                    f"side ({a},{b}) has {apex_mask.bit_count()} triangle apexes"
                )
            if apex_mask & pmask:
                raise CountingInconsistencyError(
                    f"apex of side ({a},{b}) lies inside pentagon {pent}"
                )
            apex_row = rows[apex_mask.bit_length() - 1]
            hits = (
                (apex_row >> pent[(i + 2) % 5] & 1)
                + (apex_row >> pent[(i + 3) % 5] & 1) * 2
                + (apex_row >> pent[(i + 4) % 5] & 1) * 4
            )
            if hits == 2:  # adjacent to the opposite vertex only
                n4 += 1
            elif hits == 0:
                n8 += 1
            else:
                raise CountingInconsistencyError(
                    f"apex of side ({a},{b}) has adjacency pattern {hits:03b} "
                    f"on pentagon {pent}"
                )
    return n4, n8, p5


def _pentagon_triangle_worker(args):
    rows, n, v0_list = args
    return _pentagon_triangle_scan(rows, n, v0_list)


def pentagon_triangle_census(g: Graph, workers: int = 1) -> PentagonTriangleCensus:
    """For every pentagon side, classify pentagon + apex into n4 or n8.

    The apex of a side (its unique common neighbour) always lies outside the
    pentagon in a family graph and can only be joined, beyond the side, to
    the side's opposite vertex; any other pattern raises.
    """
    n, _ = require_family(g)
    if workers > 1 and n >= 32:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(
                pool.map(
                    _pentagon_triangle_worker,
                    [(g.rows, n, ch) for ch in _chunks(list(range(n)), workers)],
                )
            )
        n4 = sum(p[0] for p in parts)
        n8 = sum(p[1] for p in parts)
        p5 = sum(p[2] for p in parts)
    else:
        n4, n8, p5 = _pentagon_triangle_scan(g.rows, n, range(n))
    if n4 + n8 != 5 * p5:
        raise CountingInconsistencyError(
            f"pentagon sides: {n4} + {n8} != 5 * {p5}"
        )
    return PentagonTriangleCensus(n4, n8, p5)


# -- quadrilateral plus disjoint edge -----------------------------------------


class QuadPlusEdgeCensus(NamedTuple):
    """(quadrilateral, disjoint edge) incidences by induced class.

    Incidence multiplicities: a prism holds 3 such incidences, types n4 and
    n9 hold 2, every other reachable class exactly 1; n13 (the disconnected
    class) is separated from the connected aggregate n6+n7+n10+n11.
    """

    total: int
    prism_incidences: int
    n4_incidences: int
    n9_incidences: int
    n13: int
    n6_7_10_11: int
    p4: int  # quadrilaterals enumerated


def _qpe_scan(rows, n: int, m: int, degs, v0_list):
    prism_inc = n4_inc = n9_inc = n13 = total = quads = 0
    full = (1 << n) - 1
    for quad in _quad_list(rows, n, v0_list):
        a, b, c, d = quad
        quads += 1
        qmask = (1 << a) | (1 << b) | (1 << c) | (1 << d)
        ra, rb, rc, rd = rows[a], rows[b], rows[c], rows[d]
        total += m - (degs[a] + degs[b] + degs[c] + degs[d] - 4)

        # side apexes (unique common neighbour of each side)
        apexes = []
        for x, y in ((a, b), (b, c), (c, d), (d, a)):
            am = rows[x] & rows[y]
            if am.bit_count() != 1:
                raise FamilyViolationError(
                    f"side ({x},{y}) has {am.bit_count()} triangle apexes"
                )
            apexes.append(am.bit_length() - 1)
        t_ab, t_bc, t_cd, t_da = apexes
        prism_inc += rows[t_ab] >> t_cd & 1
        prism_inc += rows[t_bc] >> t_da & 1

        # vertices adjacent to exactly one corner
        only = {
            a: ra & ~rb & ~rc & ~rd & ~qmask,
            b: rb & ~ra & ~rc & ~rd & ~qmask,
            c: rc & ~ra & ~rb & ~rd & ~qmask,
            d: rd & ~ra & ~rb & ~rc & ~qmask,
        }
        # type n4: apex of one side joined to a single-corner vertex of a
        # corner off that side
        n4_inc += (rows[t_ab] & (only[c] | only[d])).bit_count()
        n4_inc += (rows[t_bc] & (only[d] | only[a])).bit_count()
        n4_inc += (rows[t_cd] & (only[a] | only[b])).bit_count()
        n4_inc += (rows[t_da] & (only[b] | only[c])).bit_count()
        # type n9: edge between single-corner vertices of adjacent corners
        for x, y in ((a, b), (b, c), (c, d), (d, a)):
            oy = only[y]
            for u in iter_bits(only[x]):
                n9_inc += (rows[u] & oy).bit_count()
        # n13: edges entirely clear of the quadrilateral's neighbourhoods
        u0 = full & ~ra & ~rb & ~rc & ~rd & ~qmask
        mask_left = u0
        for u in iter_bits(u0):
            mask_left ^= 1 << u
            n13 += (rows[u] & mask_left).bit_count()
    return total, prism_inc, n4_inc, n9_inc, n13, quads


def _qpe_worker(args):
    rows, n, m, degs, v0_list = args
    return _qpe_scan(rows, n, m, degs, v0_list)


def quad_plus_edge_census(g: Graph, workers: int = 1) -> QuadPlusEdgeCensus:
    """Classify every (quadrilateral, vertex-disjoint edge) incidence.

    A family graph only realises the prism, n4, n9, n13 and the four
    aggregate classes; the named ones are recognised from the edge's
    adjacency pattern against the quadrilateral (corner apexes and
    single-corner vertices), the aggregate is the remainder.
    """
    n, k = require_family(g)
    m = g.num_edges
    degs = [g.degree(v) for v in range(n)]
    if workers > 1 and n >= 32:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(
                pool.map(
                    _qpe_worker,
                    [
                        (g.rows, n, m, degs, ch)
                        for ch in _chunks(list(range(n)), workers)
                    ],
                )
            )
        total, prism_inc, n4_inc, n9_inc, n13, quads = (
            tuple(sum(p[i] for p in parts) for i in range(6))
        )
    else:
        total, prism_inc, n4_inc, n9_inc, n13, quads = _qpe_scan(
            g.rows, n, m, degs, range(n)
        )
    expected_total = quads * (m - 4 * (k - 2) - 4)
    if total != expected_total:
        raise CountingInconsistencyError(
            f"quadrilateral-edge incidences {total} != {quads} * "
            f"(|E| - 4(k-2) - 4) = {expected_total}"
        )
    aggregate = total - prism_inc - n4_inc - n9_inc - n13
    if aggregate < 0:
        raise CountingInconsistencyError("negative aggregate incidence count")
    return QuadPlusEdgeCensus(
        total, prism_inc, n4_inc, n9_inc, n13, aggregate, quads
    )


# -- direct n2 count ----------------------------------------------------------


def count_n2(g: Graph) -> int:
    """Type n2 count: quadrilateral plus triangle apexes on two adjacent sides.

    Every (quadrilateral, adjacent side pair) completion produces a distinct
    n2 subgraph in a family graph; the result must equal 4*p4 and the class
    of each completion is verified by certificate.
    """
    n, _ = require_family(g)
    rows = g.rows
    n2_cert = named_type_certificates()["n2"]
    count = 0
    quads = 0
    for a, b, c, d in iter_quadrilaterals(g):
        quads += 1
        cycle = (a, b, c, d)
        apexes = []
        for i in range(4):
            x, y = cycle[i], cycle[(i + 1) % 4]
            am = rows[x] & rows[y]
            if am.bit_count() != 1:
                raise FamilyViolationError(
                    f"side ({x},{y}) has {am.bit_count()} triangle apexes"
                )
            apexes.append(am.bit_length() - 1)
        for i in range(4):
            e, f = apexes[i], apexes[(i + 1) % 4]
            verts = tuple(sorted((a, b, c, d, e, f)))
            if len(set(verts)) != 6:
                raise CountingInconsistencyError(
                    f"adjacent-side apexes of {cycle} collide"
                )
            if classify_code(g.subgraph_code(verts), 6) != n2_cert:
                raise CountingInconsistencyError(
                    f"completion of {cycle} on adjacent sides is not type n2"
                )
            count += 1
    if count != 4 * quads:
        raise CountingInconsistencyError(f"n2 count {count} != 4 * p4 = {4 * quads}")
    return count


# -- triangle plus pendant completion ------------------------------------------


class TriangleCompletionCensus(NamedTuple):
    n1: int
    n4: int


def triangle_edge_completion_census(g: Graph) -> TriangleCompletionCensus:
    """Complete every (triangle, pendant vertex) pair to 6 vertices.

    A pendant p hanging off corner x of triangle {x,y,z} determines two more
    vertices: the second common neighbour of (p,y) and of (p,z).  The induced
    6-vertex graph is a prism (reached from 6 pendant choices) or type n4
    (reached once); the identity 6*n1 + n4 = 3(k-2)*p3 follows.
    """
    require_family(g)
    rows = g.rows
    certs = named_type_certificates()
    prism_cert, n4_cert = certs["n1"], certs["n4"]
    prism_inc = n4_inc = 0
    for tri in iter_triangles(g):
        tmask = (1 << tri[0]) | (1 << tri[1]) | (1 << tri[2])
        for idx in range(3):
            x = tri[idx]
            y, z = (tri[(idx + 1) % 3], tri[(idx + 2) % 3])
            for p in iter_bits(rows[x] & ~tmask):
                rp = rows[p]
                if (rp & tmask).bit_count() != 1:
                    raise FamilyViolationError(
                        f"vertex {p} joins triangle {tri} at several corners"
                    )
                completion = [x, y, z, p]
                for other in (y, z):
                    cm = rp & rows[other]
                    if cm.bit_count() != 2:
                        raise FamilyViolationError(
                            f"non-edge ({p},{other}) has {cm.bit_count()} "
                            "common neighbours"
                        )
                    cm &= ~(1 << x)
                    completion.append(cm.bit_length() - 1)
                verts = tuple(sorted(completion))
                if len(set(verts)) != 6:
                    raise CountingInconsistencyError(
                        f"completion of triangle {tri} with pendant {p} collapsed"
                    )
                cert = classify_code(g.subgraph_code(verts), 6)
                if cert == prism_cert:
                    prism_inc += 1
                elif cert == n4_cert:
                    n4_inc += 1
                else:
                    raise CountingInconsistencyError(
                        f"completion of triangle {tri} with pendant {p} is "
                        "neither a prism nor type n4"
                    )
    if prism_inc % 6:
        raise CountingInconsistencyError(
            f"prism completions {prism_inc} not divisible by 6"
        )
    return TriangleCompletionCensus(prism_inc // 6, n4_inc)


# -- assembled type census ------------------------------------------------------


@dataclass(frozen=True, slots=True)
class TypeCensus:
    """Counts of the named 6-vertex types plus edge-triple spans."""

    n1: int
    n2: int
    n3: int
    n4: int
    n5: int
    n8: int
    n9: int
    n12: int
    n13: int
    n14: int
    n6_7_10_11: int
    e4: int
    e5: int
    e6: int

    def master_identity_rhs(self) -> int:
        """Right-hand side of the master identity for c6 + C(|E|,3)."""
        named = sum(
            MASTER_COEFF[name] * getattr(self, name) for name in MASTER_COEFF
        )
        return named + MASTER_COEFF_AGGREGATE * self.n6_7_10_11 + self.e4 + self.e5


def type_census(g: Graph, workers: int = 1) -> TypeCensus:
    """Assemble the full named-type census of a family graph.

    Every count comes from its targeted enumeration; overlapping routes
    (prism via triangle pairs, quadrilateral pairs and the incidence scan)
    are cross-checked and any disagreement raises.
    """
    require_family(g)
    tp = disjoint_triangle_pair_census(g)
    qp = quad_pair_census(g)
    pt = pentagon_triangle_census(g, workers=workers)
    qpe = quad_plus_edge_census(g, workers=workers)
    triples = edge_triple_census(g)
    n2 = count_n2(g)
    n12 = count_hexagons(g, workers=workers)
    if qp.n1 != tp.n1:
        raise CountingInconsistencyError(
            f"prism count disagreement: quad pairs {qp.n1}, triangle pairs {tp.n1}"
        )
    if pt.n4 != qp.n4:
        raise CountingInconsistencyError(
            f"n4 disagreement: pentagon sides {pt.n4}, quad pairs {qp.n4}"
        )
    if qpe.prism_incidences != 3 * tp.n1:
        raise CountingInconsistencyError(
            f"prism incidences {qpe.prism_incidences} != 3 * {tp.n1}"
        )
    if qpe.n4_incidences != 2 * qp.n4:
        raise CountingInconsistencyError(
            f"n4 incidences {qpe.n4_incidences} != 2 * {qp.n4}"
        )
    if qpe.n9_incidences != 2 * qp.n9:
        raise CountingInconsistencyError(
            f"n9 incidences {qpe.n9_incidences} != 2 * {qp.n9}"
        )
    return TypeCensus(
        n1=tp.n1,
        n2=n2,
        n3=tp.n3,
        n4=qp.n4,
        n5=tp.n5,
        n8=pt.n8,
        n9=qp.n9,
        n12=n12,
        n13=qpe.n13,
        n14=tp.n14,
        n6_7_10_11=qpe.n6_7_10_11,
        e4=triples.e4,
        e5=triples.e5,
        e6=triples.e6,
    )
