"""Text and JSON graph documents: parsing, locations, round trips."""

from __future__ import annotations

import pytest
from hypothesis import given, settings

from dsep import (
    CycleDetected,
    DuplicateEdge,
    GraphSyntaxError,
    SelfLoop,
    UnknownEndpoint,
    load_graph_file,
    parse_graph,
    parse_graph_json,
    serialize_graph,
)

from .conftest import DATA_DIR, small_dags


class TestParseGraph:
    def test_fixture_file_matches_builder(self, web7):
        dag = load_graph_file(str(DATA_DIR / "web7.txt"))
        assert dag.node_count == web7.node_count
        assert [dag.node_name(v) for v in range(7)] == [
            "n1", "n4", "n2", "n3", "n5", "n6", "n7"]
        assert {(dag.node_name(t), dag.node_name(h)) for t, h in dag.edges
                } == {(web7.node_name(t), web7.node_name(h))
                      for t, h in web7.edges}

    def test_names_register_in_order_of_first_appearance(self):
        dag = parse_graph("b -> c\na -> b\n")
        assert [dag.node_name(v) for v in range(3)] == ["b", "c", "a"]

    def test_comments_and_blank_lines_ignored(self):
        dag = parse_graph("# heading\n\n  a -> b  # trailing\n\n")
        assert dag.node_count == 2

    def test_node_lines_declare_isolated_nodes(self):
        dag = parse_graph("node lonely\na -> b\n")
        assert dag.node_name(0) == "lonely"
        assert dag.node_count == 3

    def test_duplicate_node_declaration_located(self):
        with pytest.raises(GraphSyntaxError) as info:
            parse_graph("node a\nnode a\n")
        assert info.value.line == 2
        assert "declared twice" in str(info.value)

    def test_self_loop_located(self):
        with pytest.raises(SelfLoop) as info:
            parse_graph("a -> b\nc -> c\n")
        assert info.value.line == 2

    def test_duplicate_edge_located_and_names_first_line(self):
        with pytest.raises(DuplicateEdge) as info:
            parse_graph("a -> b\nb -> c\na -> b\n")
        assert info.value.line == 3
        assert "line 1" in str(info.value)

    def test_unparseable_line_reports_column(self):
        with pytest.raises(GraphSyntaxError) as info:
            parse_graph("a -> b\n   a => b\n")
        assert info.value.line == 2
        assert info.value.column == 4

    def test_prime_character_rejected(self):
        with pytest.raises(GraphSyntaxError) as info:
            parse_graph("a' -> b\n")
        assert "reserved" in str(info.value)

    def test_bad_charset_rejected(self):
        with pytest.raises(GraphSyntaxError):
            parse_graph("node a,b\n")

    def test_cycle_reported_with_a_witness_line(self):
        with pytest.raises(CycleDetected) as info:
            parse_graph("a -> b\nb -> c\nc -> a\n")
        assert info.value.line in (1, 2, 3)
        assert set(info.value.cycle) == {"a", "b", "c"}

    def test_error_message_carries_location_prefix(self):
        with pytest.raises(GraphSyntaxError) as info:
            parse_graph("?!\n")
        assert str(info.value).startswith("line 1, column 1: ")

    def test_empty_document_yields_empty_graph(self):
        dag = parse_graph("")
        assert dag.node_count == 0


class TestParseGraphJson:
    def test_minimal_document(self):
        dag = parse_graph_json('{"edges": [["a", "b"], ["b", "c"]]}')
        assert dag.node_count == 3
        assert dag.has_edge(0, 1)

    def test_explicit_nodes_pin_ids(self):
        dag = parse_graph_json(
            '{"nodes": ["z", "a"], "edges": [["a", "z"]]}')
        assert dag.node_name(0) == "z"
        assert dag.has_edge(1, 0)

    def test_explicit_nodes_make_endpoints_strict(self):
        with pytest.raises(UnknownEndpoint):
            parse_graph_json('{"nodes": ["a"], "edges": [["a", "b"]]}')

    def test_invalid_json_carries_location(self):
        with pytest.raises(GraphSyntaxError) as info:
            parse_graph_json('{"edges": [\n  ["a" "b"]\n]}')
        assert info.value.line == 2

    @pytest.mark.parametrize("doc", [
        '[]',
        '{"edges": "ab"}',
        '{"edges": [["a"]]}',
        '{"edges": [["a", 3]]}',
        '{"nodes": [1], "edges": []}',
        '{"nodes": ["x\'"], "edges": []}',
    ])
    def test_malformed_documents_rejected(self, doc):
        with pytest.raises(GraphSyntaxError):
            parse_graph_json(doc)

    def test_fixture_equivalence_between_formats(self, tmp_path):
        text_dag = load_graph_file(str(DATA_DIR / "diamond4.txt"))
        json_doc = ('{"nodes": ["1", "3", "4", "2"], '
                    '"edges": [["1", "3"], ["1", "4"], ["2", "4"]]}')
        json_path = tmp_path / "diamond4.json"
        json_path.write_text(json_doc)
        json_dag = load_graph_file(str(json_path), json_format=True)
        assert json_dag.edges == text_dag.edges
        assert [json_dag.node_name(v) for v in range(4)] == [
            text_dag.node_name(v) for v in range(4)]


class TestSerializeGraph:
    def test_round_trip_is_identity_on_fixture(self):
        dag = load_graph_file(str(DATA_DIR / "web7.txt"))
        again = parse_graph(serialize_graph(dag))
        assert again.edges == dag.edges
        assert [again.node_name(v) for v in range(again.node_count)] == [
            dag.node_name(v) for v in range(dag.node_count)]

    def test_isolated_nodes_survive_the_round_trip(self):
        dag = parse_graph("node only\n")
        again = parse_graph(serialize_graph(dag))
        assert again.node_count == 1
        assert again.node_name(0) == "only"

    @settings(max_examples=80, deadline=None)
    @given(dag=small_dags())
    def test_round_trip_is_identity_on_random_graphs(self, dag):
        again = parse_graph(serialize_graph(dag))
        assert again.node_count == dag.node_count
        assert again.edges == dag.edges

    def test_empty_graph_serializes_to_empty_text(self):
        dag = parse_graph("")
        assert serialize_graph(dag) == ""
