"""Brute-force oracles the censuses are tested against.

Everything here enumerates subsets or permutations directly and stays
independent of the counting paths under test.
"""

from itertools import combinations

from srg12.graph import Graph


def random_graph(rng, n, p) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def _degrees_of_code(code: int, size: int):
    degs = [0] * size
    pos = 0
    for i in range(size):
        for j in range(i + 1, size):
            if code >> pos & 1:
                degs[i] += 1
                degs[j] += 1
            pos += 1
    return degs


def _connected_code(code: int, size: int) -> bool:
    adj = [0] * size
    pos = 0
    for i in range(size):
        for j in range(i + 1, size):
            if code >> pos & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos += 1
    seen = 1
    frontier = [0]
    while frontier:
        v = frontier.pop()
        rest = adj[v] & ~seen
        while rest:
            low = rest & -rest
            seen |= low
            frontier.append(low.bit_length() - 1)
            rest ^= low
    return seen == (1 << size) - 1


def induced_cycle_count(g: Graph, length: int) -> int:
    """Count induced C_length by scanning all vertex subsets."""
    count = 0
    for subset in combinations(range(g.order), length):
        code = g.subgraph_code(subset)
        if code.bit_count() != length:
            continue
        if _degrees_of_code(code, length) != [2] * length:
            continue
        if _connected_code(code, length):
            count += 1
    return count


def induced_cycles_through_edge(g: Graph, edge, length: int) -> int:
    u, v = edge
    count = 0
    for subset in combinations(range(g.order), length):
        if u not in subset or v not in subset:
            continue
        code = g.subgraph_code(subset)
        if code.bit_count() != length:
            continue
        if _degrees_of_code(code, length) != [2] * length:
            continue
        if _connected_code(code, length):
            count += 1
    return count


def brute_edge_triples(g: Graph):
    """(e4, e5, e6) by scanning every unordered triple of edges."""
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


def quad_edge_incidences(g: Graph) -> int:
    """Pairs (induced C4, vertex-disjoint edge) counted directly."""
    total = 0
    c4s = []
    for subset in combinations(range(g.order), 4):
        code = g.subgraph_code(subset)
        if code.bit_count() == 4 and _degrees_of_code(code, 4) == [2, 2, 2, 2]:
            c4s.append((1 << subset[0]) | (1 << subset[1])
                       | (1 << subset[2]) | (1 << subset[3]))
    edge_masks = [(1 << u) | (1 << v) for u, v in g.edges()]
    for qmask in c4s:
        for em in edge_masks:
            if not qmask & em:
                total += 1
    return total


def laplace_determinant(g: Graph) -> int:
    """Cofactor-expansion determinant of the adjacency matrix."""
    n = g.order
    mat = [[g.rows[i] >> j & 1 for j in range(n)] for i in range(n)]

    def det(m):
        size = len(m)
        if size == 0:
            return 1
        if size == 1:
            return m[0][0]
        total = 0
        sign = 1
        for col in range(size):
            if m[0][col]:
                minor = [row[:col] + row[col + 1:] for row in m[1:]]
                total += sign * m[0][col] * det(minor)
            sign = -sign
        return total

    return det(mat)


def petersen() -> Graph:
    """Kneser graph K(5,2): 2-subsets of a 5-set, adjacent iff disjoint."""
    verts = list(combinations(range(5), 2))
    index = {v: i for i, v in enumerate(verts)}
    edges = [
        (index[a], index[b])
        for a, b in combinations(verts, 2)
        if not set(a) & set(b)
    ]
    return Graph.from_edges(10, edges)
