"""Edge-list and DIMACS parsing, serialization round trips, DOT output."""

from __future__ import annotations

import pytest
from hypothesis import given

from bicert import (
    Bipartition,
    CheckOutcome,
    InputError,
    OddCycle,
    ParseError,
    build_graph,
    check,
    parse_dimacs,
    parse_edge_list,
    write_dimacs,
    write_dot,
    write_edge_list,
)
from conftest import four_cycle, graphs, triangle


class TestParseEdgeList:
    def test_basic(self):
        g = parse_edge_list("0 1\n1 2\n")
        assert g.n == 3
        assert g.pairs == [(0, 1), (1, 2)]

    def test_header_after_comment_is_honored(self):
        g = parse_edge_list("# comment\nn 4\n0 1\n")
        assert g.n == 4
        assert g.m == 1

    def test_loop_line(self):
        g = parse_edge_list("0 0\n")
        assert g.n == 1
        assert g.pairs == [(0, 0)]

    def test_duplicate_lines_are_parallel_edges(self):
        g = parse_edge_list("0 1\n0 1\n")
        assert g.m == 2

    def test_empty_input_is_empty_graph(self):
        g = parse_edge_list("")
        assert g.n == 0 and g.m == 0

    def test_blank_lines_and_comments_skipped(self):
        g = parse_edge_list("\n# x\n\n0 1\n\n# y\n")
        assert g.m == 1

    def test_non_integer_token_reports_line(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_edge_list("0 1\n0 x\n")

    def test_wrong_token_count_reports_line(self):
        with pytest.raises(ParseError, match="line 1"):
            parse_edge_list("0 1 2\n")

    def test_vertex_over_declared_count(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_edge_list("n 2\n0 5\n")

    def test_negative_id(self):
        with pytest.raises(ParseError):
            parse_edge_list("-1 0\n")

    def test_header_not_first_is_an_error(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_edge_list("0 1\nn 5\n")

    @given(graphs())
    def test_round_trip(self, g):
        assert parse_edge_list(write_edge_list(g)) == g


class TestParseDimacs:
    def test_basic(self):
        g = parse_dimacs("c comment\np edge 3 2\ne 1 2\ne 2 3\n")
        assert g.n == 3
        assert g.pairs == [(0, 1), (1, 2)]

    def test_edgeless_problem(self):
        g = parse_dimacs("p edge 2 0\n")
        assert g.n == 2 and g.m == 0

    def test_missing_problem_line(self):
        with pytest.raises(ParseError, match="missing problem line"):
            parse_dimacs("c nothing\n")

    def test_duplicate_problem_line(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_dimacs("p edge 2 0\np edge 2 0\n")

    def test_edge_before_problem_line(self):
        with pytest.raises(ParseError, match="line 1"):
            parse_dimacs("e 1 2\np edge 2 1\n")

    def test_vertex_out_of_range(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_dimacs("p edge 2 1\ne 1 3\n")

    def test_count_mismatch(self):
        with pytest.raises(ParseError, match="declared 2"):
            parse_dimacs("p edge 3 2\ne 1 2\n")

    def test_unknown_line_type(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_dimacs("p edge 2 1\nq 1 2\n")

    def test_one_based_loop(self):
        g = parse_dimacs("p edge 1 1\ne 1 1\n")
        assert g.pairs == [(0, 0)]

    @given(graphs())
    def test_round_trip(self, g):
        assert parse_dimacs(write_dimacs(g)) == g


class TestWriteDot:
    def test_bipartite_uses_two_fill_colors(self):
        out = check(four_cycle(), "dsu")
        dot = write_dot(four_cycle(), out)
        fills = {line.split('fillcolor="')[1].split('"')[0]
                 for line in dot.splitlines() if "fillcolor" in line}
        assert len(fills) == 2
        assert dot.count("--") == 4

    def test_odd_cycle_highlights_certificate_edges(self):
        out = check(triangle(), "growth")
        dot = write_dot(triangle(), out)
        assert dot.count("penwidth") == 3
        assert "color=red" in dot

    def test_highlight_matches_edge_ids_not_endpoints(self):
        # parallel edges: only the certified copy is bold
        g = build_graph(1, [(0, 0), (0, 0)])
        dot = write_dot(g, CheckOutcome(odd_cycle=OddCycle([0], [1])))
        lines = [l for l in dot.splitlines() if "--" in l]
        assert "penwidth" not in lines[0]
        assert "penwidth" in lines[1]

    def test_empty_graph_is_valid_empty_dot(self):
        g = build_graph(0, [])
        dot = write_dot(g, CheckOutcome(bipartition=Bipartition([])))
        assert dot == "graph certified {\n}\n"

    def test_unverified_outcome_rejected(self):
        bogus = CheckOutcome(bipartition=Bipartition([0, 0, 0]))
        with pytest.raises(InputError):
            write_dot(triangle(), bogus)

    def test_byte_stable(self):
        out = check(four_cycle(), "flip")
        assert write_dot(four_cycle(), out) == write_dot(four_cycle(), out)


class TestWriters:
    def test_edge_list_header_preserves_isolated(self):
        g = build_graph(5, [(0, 1)])
        assert parse_edge_list(write_edge_list(g)).n == 5

    def test_dimacs_is_one_based(self):
        text = write_dimacs(build_graph(2, [(0, 1)]))
        assert text == "p edge 2 1\ne 1 2\n"
