import json

import pytest

from srg12.census import NAMED_TYPE_EDGES
from srg12.graph import Graph
from srg12.identities import (
    ChainFailure,
    expected_e4,
    expected_e5,
    expected_p3,
    expected_p4,
    expected_p5,
    hexagon_bound,
    jsonable,
    makhnev_condition,
    run_all_checks,
    verify_polynomial_chain,
)


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


class TestClosedForms:
    def test_paley_values(self):
        assert expected_p3(9, 4) == 6
        assert expected_p4(9, 4) == 9
        assert expected_p5(9, 4) == 0
        assert expected_e4(9, 4) == 186
        assert expected_e5(9, 4) == 450

    def test_bvls_values(self):
        assert expected_p3(243, 22) == 891
        assert expected_p4(243, 22) == 13_365
        assert expected_p5(243, 22) == 384_912
        assert expected_e4(243, 22) == 1_551_231
        assert expected_e5(243, 22) == 146_453_670


class TestHexagonBound:
    def test_goldens(self):
        assert hexagon_bound(9, 4) == 6
        assert hexagon_bound(99, 14) == 209_286
        assert hexagon_bound(243, 22) == 4_980_690

    def test_rejects_non_family_order(self):
        with pytest.raises(ValueError):
            hexagon_bound(10, 4)


class TestMakhnev:
    def test_paley_holds(self, paley9):
        result = makhnev_condition(paley9)
        assert result.holds and result.n3 == 0 and result.witness is None

    def test_handbuilt_type3_graph_fails_with_witness(self):
        g = Graph.from_edges(6, NAMED_TYPE_EDGES["n3"])
        result = makhnev_condition(g)
        assert not result.holds
        assert result.n3 == 1
        tri1, tri2, edges = result.witness
        assert len(edges) == 2
        # the two connecting edges are non-incident
        (a, b), (c, d) = edges
        assert len({a, b, c, d}) == 4


@pytest.fixture(scope="module")
def report(paley9):
    return run_all_checks(paley9, source="paley9")


class TestLedgerPaley:
    def test_all_entries_pass(self, report):
        assert report.passed
        assert all(e.status != "fail" for e in report.entries)
        # a family graph skips nothing
        assert all(e.status != "skip" for e in report.entries)

    def test_master_identity_sides(self, report):
        e = report.entry("master_identity")
        assert e.expected == e.actual == 648

    def test_hexagon_identity(self, report):
        e = report.entry("hexagon_identity")
        assert e.expected == e.actual == 6

    def test_conjecture_entries_informational(self, report):
        assert report.entry("makhnev_condition").status == "info"
        assert report.entry("hexagons_equal_bound").status == "info"

    def test_json_schema(self, report):
        payload = report.to_json_dict()
        assert set(payload) == {"graph_meta", "entries"}
        assert payload["graph_meta"]["n"] == 9
        assert payload["graph_meta"]["k"] == 4
        for entry in payload["entries"]:
            assert {"name", "paper_location", "expected", "actual", "pass"} <= set(
                entry
            )
        json.dumps(payload)  # serializable


class TestLedgerK3:
    def test_k3_passes_with_c6_skipped(self, k3):
        report = run_all_checks(k3, source="k3")
        assert report.passed
        assert report.entry("triangle_count").actual == 1
        # c6 does not exist below 6 vertices
        assert report.entry("c6_closed_vs_trace").status == "skip"
        assert report.entry("master_identity").status == "skip"
        assert report.entry("hexagon_identity").status == "pass"


class TestLedgerTamperedCandidate:
    def test_tampered_bvls_fails_cleanly(self, bvls):
        # remove one edge, add a non-edge: a wrong srg(243,22,1,2) candidate
        rows = [r for r in bvls.rows]
        u, v = next(bvls.edges())
        w = next(
            x for x in range(243) if x not in (u, v) and not bvls.has_edge(u, x)
        )
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        rows[u] |= 1 << w
        rows[w] |= 1 << u
        candidate = Graph(243, tuple(rows))
        report = run_all_checks(candidate, source="tampered")
        assert not report.passed
        assert any(e.status == "fail" for e in report.entries)
        assert any(e.status == "skip" for e in report.entries)

    def test_report_stable_across_worker_counts(self, bvls, bvls_report):
        parallel = run_all_checks(bvls, workers=2, source="bvls243")
        assert parallel.to_json_dict() == bvls_report.to_json_dict()


class TestLedgerNonFamily:
    def test_c4_mostly_skipped(self):
        report = run_all_checks(cycle(4), source="c4")
        by_status = {}
        for e in report.entries:
            by_status.setdefault(e.status, []).append(e.name)
        # condition I fails on C4, condition II passes
        assert "condition_one_edge_triangles" in by_status["fail"]
        assert "condition_two_nonedge_quadrilaterals" in by_status["pass"]
        assert by_status.get("skip")
        assert not report.passed

    def test_failing_graph_never_raises(self):
        g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3)])
        report = run_all_checks(g)
        assert not report.passed


class TestPolynomialChain:
    POINTS = list(range(6, 32, 2))

    def test_chain_passes(self):
        report = verify_polynomial_chain(self.POINTS)
        assert report.passed
        assert len(report.points) == 13

    def test_point_validation(self):
        with pytest.raises(ValueError):
            verify_polynomial_chain(self.POINTS[:-1])  # 12 points
        with pytest.raises(ValueError):
            verify_polynomial_chain(self.POINTS[:-1] + [7])  # odd point
        with pytest.raises(ValueError):
            verify_polynomial_chain(self.POINTS[:-1] + [4])  # below 6

    def test_mutation_fails_everywhere(self):
        report = verify_polynomial_chain(self.POINTS, hexagon_poly=(2, -21, 54))
        failed_points = {
            f.k for f in report.failures if f.check == "hexagon count chain"
        }
        assert failed_points == set(self.POINTS)

    def test_mutation_reports_divergent_expression(self):
        report = verify_polynomial_chain(self.POINTS, hexagon_poly=(2, -20, 53))
        assert not report.passed
        assert all(isinstance(f, ChainFailure) for f in report.failures)


class TestJsonable:
    def test_small_ints_unchanged(self):
        assert jsonable(42) == 42
        assert jsonable(-(2**63) + 1) == -(2**63) + 1

    def test_big_ints_become_strings(self):
        big = -2_466_795_174_682_153_663_896_408
        assert jsonable(big) == str(big)
        assert jsonable(2**63) == str(2**63)

    def test_bools_and_none_pass_through(self):
        assert jsonable(True) is True
        assert jsonable(None) is None
