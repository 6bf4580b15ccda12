"""Exact characteristic-polynomial coefficients, three independent ways.

For the lambda=1, mu=2 family the x^(n-6) coefficient c6 can be computed
from a closed form in (n, k), from a binomial sum over the spectrum, or
from power-sum traces of the adjacency matrix of a concrete graph via
Newton's identities.  All three routes use exact integer arithmetic; the
binomial route needs arbitrary precision (single terms near k=994 exceed
10^38 before cancellation).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .constructions import _solve_spectrum
from .errors import SizeLimitError
from .graph import Graph, SrgParams, adjacency_determinant


@dataclass(frozen=True, slots=True)
class Spectrum:
    """Exact adjacency spectrum of a family member: k, two restricted
    eigenvalues and their multiplicities."""

    k: int
    lambda1: int
    lambda2: int
    r1: int
    r2: int

    @property
    def n(self) -> int:
        return self.r1 + self.r2 + 1

    def check_relations(self) -> None:
        assert self.lambda1 + self.lambda2 == -1
        assert self.lambda1 * self.lambda2 == -(self.k - 2)
        assert self.k + self.r1 * self.lambda1 + self.r2 * self.lambda2 == 0


@dataclass(frozen=True, slots=True)
class CharPolyPrefix:
    """Leading coefficients c0..cm of det(xI - A), c_i multiplying x^(n-i)."""

    coefficients: tuple[int, ...]

    def c(self, i: int) -> int:
        return self.coefficients[i]

    @property
    def c6(self) -> int:
        return self.coefficients[6]


def srg_spectrum(params: SrgParams) -> Spectrum:
    """Exact spectrum of srg(n,k,1,2); raises InfeasibleParametersError
    naming the failed relation when no integer solution exists."""
    lam1, lam2, r1, r2 = _solve_spectrum(params.n, params.k)
    spec = Spectrum(params.k, lam1, lam2, r1, r2)
    spec.check_relations()
    return spec


def c6_closed_form(n: int, k: int) -> int:
    """c6 for a family member directly from (n, k).

    The division by 576 must be exact; a remainder signals parameters
    outside the family.
    """
    if 2 * n != k * k + 2:
        raise ValueError(f"(n={n}, k={k}) violates n = (k^2+2)/2")
    poly = 3 * k**5 + 6 * k**4 - 84 * k**3 + 116 * k**2 + 124 * k - 240
    num = n * k * (k - 2) * poly
    if num % 576:
        raise ValueError(f"c6 closed form not divisible by 576 at (n={n}, k={k})")
    return -(num // 576)


def c6_binomial_sum(spec: Spectrum) -> int:
    """c6 from the spectrum: k*e5 + e6 of the restricted eigenvalue multiset."""
    k, l1, l2, r1, r2 = spec.k, spec.lambda1, spec.lambda2, spec.r1, spec.r2
    e5 = sum(
        comb(r1, 5 - i) * comb(r2, i) * l1 ** (5 - i) * l2**i for i in range(6)
    )
    e6 = sum(
        comb(r1, 6 - i) * comb(r2, i) * l1 ** (6 - i) * l2**i for i in range(7)
    )
    return k * e5 + e6


def adjacency_traces(g: Graph, m: int) -> tuple[int, ...]:
    """(tr A^1, ..., tr A^m) by repeated application to basis vectors.

    Works column by column: three sparse applications give the columns of
    A^2 and A^3, and the higher traces follow from symmetry,
    tr A^(i+j) = sum_{u,v} (A^i)_uv (A^j)_uv.  Supports m <= 6.
    """
    if m > 6:
        raise SizeLimitError("traces implemented up to m = 6")
    n = g.order
    nbrs = [tuple(g.neighbors(v)) for v in range(n)]
    t = [0] * (m + 1)  # t[i] = tr A^i
    for v in range(n):
        w1 = [0] * n
        for u in nbrs[v]:
            w1[u] = 1
        if m >= 2:
            w2 = [sum(w1[x] for x in nbrs[u]) for u in range(n)]
            t[2] += w2[v]
        if m >= 3:
            w3 = [sum(w2[x] for x in nbrs[u]) for u in range(n)]
            t[3] += w3[v]
        if m >= 4:
            t[4] += sum(a * a for a in w2)
        if m >= 5:
            t[5] += sum(a * b for a, b in zip(w2, w3))
        if m >= 6:
            t[6] += sum(a * a for a in w3)
    return tuple(t[1:])


def charpoly_prefix(g: Graph, m: int = 6) -> CharPolyPrefix:
    """c0..cm of the characteristic polynomial via Newton's identities.

    Power sums are the traces of A^i; the elementary-symmetric recurrence
    is kept in integers (each division by i is exact and asserted).
    """
    if m > g.order:
        m = g.order
    traces = adjacency_traces(g, m)
    e = [1]
    for i in range(1, m + 1):
        acc = 0
        sign = 1
        for j in range(1, i + 1):
            acc += sign * e[i - j] * traces[j - 1]
            sign = -sign
        assert acc % i == 0, "Newton recurrence must stay integral"
        e.append(acc // i)
    coeffs = tuple((-1) ** i * e[i] for i in range(m + 1))
    return CharPolyPrefix(coeffs)


def ci_detsum(g: Graph, i: int) -> int:
    """Brute-force oracle for c_i: signed sum of induced-subgraph determinants
    over all i-subsets.  Guarded to 10 vertices and i <= 6."""
    if g.order > 10 or i > 6:
        raise SizeLimitError("determinant-sum oracle guarded to n<=10, i<=6")
    from itertools import combinations

    total = 0
    for subset in combinations(range(g.order), i):
        total += adjacency_determinant(g.induced(subset))
    return (-1) ** i * total
