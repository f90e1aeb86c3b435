from __future__ import annotations

import pytest

from contractia import (
    build_graph,
    matches_k34,
    parse_family,
    parse_graph6,
    petersen,
    random_3_connected,
    read_corpus,
    to_graph6,
    vertex_connectivity,
)
from contractia.generators import (
    CorpusError,
    GenerationError,
    Graph6Error,
    generate,
    icosahedron,
    random_k_connected,
)

from conftest import CORPUS_PATH


class TestFamilies:
    def test_complete_bipartite(self):
        g = generate(parse_family("complete_bipartite:3,4"))
        assert g.n == 7 and g.m == 12 and g.min_degree == 3

    def test_wheel_degrees(self):
        g = generate(parse_family("wheel:6"))
        assert g.degree(0) == 5
        assert all(g.degree(v) == 3 for v in range(1, 6))

    def test_circulant_regular(self):
        g = generate(parse_family("circulant:12,1,2,3"))
        assert g.n == 12 and g.min_degree == 6
        assert all(g.degree(v) == 6 for v in range(12))

    def test_prism_cubic(self):
        g = generate(parse_family("prism:4"))
        assert g.n == 8 and all(g.degree(v) == 3 for v in range(8))

    def test_theta(self):
        g = generate(parse_family("theta:1,1,1"))
        assert g.n == 5 and g.m == 6
        assert g.degree(0) == g.degree(1) == 3

    def test_cycle(self):
        g = generate(parse_family("cycle:6"))
        assert g.n == 6 and g.m == 6

    @pytest.mark.parametrize("spec", [
        "cycle:2", "wheel:3", "circulant:6,0", "circulant:6,4",
        "theta:0,1,1", "complete_bipartite:0,4", "prism:2",
        "nosuch:3", "wheel:", "wheel:4,5", "theta:1,1",
    ])
    def test_invalid_specs(self, spec):
        with pytest.raises(GenerationError):
            generate(parse_family(spec))

    def test_parse_family_requires_params(self):
        with pytest.raises(GenerationError):
            parse_family("wheel")

    def test_classics(self):
        assert petersen().n == 10 and petersen().m == 15
        assert all(petersen().degree(v) == 3 for v in range(10))
        ico = icosahedron()
        assert ico.n == 12 and ico.m == 30
        assert vertex_connectivity(ico) == 5


class TestRandomFamilies:
    def test_deterministic_per_seed(self):
        a, attempts_a = random_3_connected(10, 0.5, 7)
        b, attempts_b = random_3_connected(10, 0.5, 7)
        assert a == b and attempts_a == attempts_b
        assert vertex_connectivity(a) >= 3

    def test_p1_gives_complete(self):
        g, attempts = random_3_connected(4, 1.0, 123)
        assert g.m == 6 and attempts == 1

    def test_sparse_budget_error(self):
        with pytest.raises(GenerationError):
            random_3_connected(5, 0.01, 1, max_attempts=50)

    def test_two_connected_variant(self):
        g, _ = random_k_connected(8, 0.4, 3, k=2)
        assert vertex_connectivity(g) >= 2


class TestGraph6:
    def test_k4_is_C_tilde(self):
        # hand-encoded: size byte 'C' = 4; six upper-triangle bits all 1
        # pack to 111111 -> 63 -> chr(63 + 63) = '~'
        k4 = build_graph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)])
        assert to_graph6(k4) == "C~"
        assert parse_graph6("C~") == k4

    def test_size_char_D_is_5(self):
        assert parse_graph6("D??").n == 5

    def test_header_tolerated(self):
        assert parse_graph6(">>graph6<<C~").n == 4

    def test_roundtrip_on_corpus(self):
        for raw in CORPUS_PATH.read_text().splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            assert to_graph6(parse_graph6(line)) == line

    def test_bad_character(self):
        with pytest.raises(Graph6Error):
            parse_graph6("C" + chr(20))

    def test_truncated(self):
        with pytest.raises(Graph6Error):
            parse_graph6("E~")  # n=6 needs 3 data characters

    def test_long_form_rejected(self):
        with pytest.raises(Graph6Error):
            parse_graph6("~??")

    def test_large_graph_rejected(self):
        g = build_graph(63, [(0, 1)])
        with pytest.raises(Graph6Error):
            to_graph6(g)

    def test_nonzero_padding_rejected(self):
        # C5 needs 10 bits; the last 2 bits of the second data byte are padding
        line = to_graph6(build_graph(5, [(i, (i + 1) % 5) for i in range(5)]))
        corrupted = line[:-1] + chr((ord(line[-1]) - 63 | 1) + 63)
        with pytest.raises(Graph6Error):
            parse_graph6(corrupted)


class TestReadCorpus:
    def test_reads_in_order(self, tmp_path):
        f = tmp_path / "g.g6"
        f.write_text("C~\n# a comment\n\nD??\n")
        got = list(read_corpus(f))
        assert [(ln, g.n) for ln, g in got] == [(1, 4), (4, 5)]

    def test_error_names_line(self, tmp_path):
        f = tmp_path / "bad.g6"
        f.write_text("C~\nE~\n")
        with pytest.raises(CorpusError, match=r"bad\.g6:2"):
            list(read_corpus(f))

    def test_empty_file(self, tmp_path):
        f = tmp_path / "empty.g6"
        f.write_text("")
        assert list(read_corpus(f)) == []

    def test_missing_file(self, tmp_path):
        with pytest.raises(CorpusError):
            list(read_corpus(tmp_path / "nope.g6"))


class TestK34Detector:
    def test_positive(self):
        assert matches_k34(generate(parse_family("complete_bipartite:3,4")))

    def test_negatives(self):
        assert not matches_k34(generate(parse_family("complete:7")))
        assert not matches_k34(generate(parse_family("wheel:7")))
        assert not matches_k34(petersen())
