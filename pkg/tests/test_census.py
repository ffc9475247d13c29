import itertools
import json
import random

import pytest

from zeroforcing import (
    CensusTable,
    Finding,
    GraphRecord,
    canonical_form,
    canonical_graph,
    check_bounds_and_conjecture,
    check_record,
    complete_graph,
    cycle_graph,
    from_edges,
    generate_graphs,
    is_connected,
    parse_graph6,
    path_graph,
    run_census,
    write_graph6,
)

from conftest import random_graph
from naive import are_isomorphic, count_classes_by_dedupe


def test_canonical_form_invariant_under_relabeling():
    rng = random.Random(19)
    for _ in range(300):
        n = rng.randint(1, 9)
        g = random_graph(rng, n, rng.uniform(0.1, 0.9))
        perm = list(range(n))
        rng.shuffle(perm)
        edges = [(perm[u], perm[v]) for u, v in g.edges()]
        h = from_edges(n, edges)
        assert canonical_form(g) == canonical_form(h)


def test_canonical_form_separates_nonisomorphic():
    rng = random.Random(29)
    seen = 0
    for _ in range(200):
        n = rng.randint(2, 7)
        g = random_graph(rng, n, 0.5)
        h = random_graph(rng, n, 0.5)
        same_form = canonical_form(g) == canonical_form(h)
        assert same_form == are_isomorphic(g, h)
        seen += same_form
    assert seen < 50  # sanity: the pairs were mostly distinct


def test_canonical_graph_is_isomorphic_representative():
    rng = random.Random(31)
    for _ in range(100):
        n = rng.randint(1, 8)
        g = random_graph(rng, n, rng.uniform(0.2, 0.8))
        rep = canonical_graph(g)
        assert are_isomorphic(g, rep)
        assert canonical_form(rep) == canonical_form(g)


def test_generated_counts_match_dedupe_oracle():
    for n in range(1, 7):
        classes = list(generate_graphs(n))
        connected = sum(1 for g in classes if is_connected(g))
        assert (len(classes), connected) == count_classes_by_dedupe(n)


def test_generated_classes_are_pairwise_distinct():
    for n in range(1, 7):
        forms = {canonical_form(g) for g in generate_graphs(n)}
        classes = list(generate_graphs(n))
        assert len(forms) == len(classes)
    for g, h in itertools.combinations(generate_graphs(5), 2):
        assert not are_isomorphic(g, h)


def test_generate_rejects_large_n():
    with pytest.raises(ValueError):
        list(generate_graphs(10))


def test_check_record_kinds():
    low = GraphRecord(graph6="X", n=9, zero=2, failed=2)
    kinds = {f.kind for f in check_record(low)}
    assert "lower-bound" in kinds  # 2 < floor(8/2)
    assert "conjecture" in kinds  # F = Z = 2 but n > 6
    high = GraphRecord(graph6="Y", n=3, zero=1, failed=2)
    assert {f.kind for f in check_record(high)} == {"upper-bound"}
    fine = GraphRecord(graph6="Z", n=5, zero=1, failed=2)
    assert check_record(fine) == []


def test_table_tallies_and_exemplars():
    table = CensusTable(max_n=4, k_max=2)
    table.add(GraphRecord(graph6="Bg", n=3, zero=1, failed=1))
    table.add(GraphRecord(graph6="Bw", n=3, zero=2, failed=1))
    table.add(GraphRecord(graph6="C~", n=4, zero=3, failed=2))
    table.finalize()
    assert table.f_counts[(1, 3)] == 2
    assert table.e_counts[(1, 3)] == 1
    assert table.f_total(1) == 2 and table.f_total(2) == 1
    assert table.e_total(1) == 1
    assert table.exemplars[(1, 3)] == ["Bg"]
    assert table.connected_totals[3] == 2


def test_table_text_layout():
    table = run_census(max_n=4, k_max=2)
    text = table.to_text_table()
    lines = text.strip().split("\n")
    assert lines[0].split("\t") == ["quantity", "n=1", "n=2", "n=3", "n=4", "total"]
    rows = {line.split("\t")[0]: line.split("\t")[1:] for line in lines[1:]}
    assert rows["F=1"] == ["0", "0", "2", "1", "3"]
    assert rows["F=Z=1"] == ["0", "0", "1", "1", "2"]
    assert rows["connected"] == ["1", "1", "2", "6", "10"]


def test_table_document_round_trips_json():
    table = run_census(max_n=5, k_max=3)
    doc = json.loads(table.to_json())
    assert doc["schema"] == "zeroforcing-census/1"
    assert doc["max_n"] == 5
    assert doc["f_counts"]["1"]["3"] == 2
    assert doc["e_counts"]["2"]["5"] == 4
    assert doc["connected_totals"]["5"] == 21
    assert doc["violations"] == []
    (exemplar,) = doc["exemplars"]["1"]["3"]
    assert are_isomorphic(parse_graph6(exemplar), path_graph(3))


def test_exemplars_parse_and_have_equal_numbers():
    from zeroforcing import failed_zero_forcing_number, zero_forcing_number

    table = run_census(max_n=5, k_max=2)
    for (k, n), items in table.exemplars.items():
        for text in items:
            g = parse_graph6(text)
            assert g.n == n
            assert failed_zero_forcing_number(g).value == k
            assert zero_forcing_number(g).value == k


def test_census_small_cells():
    table = run_census(max_n=6, k_max=4)
    nonzero_f = {k: v for k, v in table.f_counts.items() if v}
    assert nonzero_f == {
        (1, 3): 2, (1, 4): 1,
        (2, 4): 5, (2, 5): 5, (2, 6): 2,
        (3, 5): 16, (3, 6): 29,
        (4, 6): 81,
    }
    nonzero_e = {k: v for k, v in table.e_counts.items() if v}
    assert nonzero_e == {
        (1, 3): 1, (1, 4): 1,
        (2, 4): 4, (2, 5): 4, (2, 6): 1,
        (3, 5): 9, (3, 6): 10,
        (4, 6): 19,
    }
    assert table.violations == []
    assert check_bounds_and_conjecture(table) == []


def test_census_parallel_matches_serial():
    serial = run_census(max_n=6, k_max=4, jobs=1)
    parallel = run_census(max_n=6, k_max=4, jobs=4)
    assert serial.to_json() == parallel.to_json()
    assert serial.to_text_table() == parallel.to_text_table()


def test_census_reads_sources(tmp_path):
    path = tmp_path / "n4.g6"
    lines = [write_graph6(g) for g in generate_graphs(4)]
    path.write_text("\n".join(lines) + "\n")
    table = run_census(max_n=4, k_max=2, sources={4: str(path)})
    baseline = run_census(max_n=4, k_max=2)
    assert table.f_counts == baseline.f_counts
    assert table.e_counts == baseline.e_counts
    assert table.sources[4] == str(path)


def test_census_source_errors(tmp_path):
    path = tmp_path / "bad.g6"
    path.write_text("Bw\nB\n")
    with pytest.raises(Exception):
        run_census(max_n=3, k_max=1, sources={3: str(path)})
    table = run_census(max_n=3, k_max=1, sources={3: str(path)}, fail_fast=False)
    assert len(table.read_errors) == 1


def test_census_rejects_missing_source_for_large_n():
    with pytest.raises(ValueError):
        run_census(max_n=10, k_max=4)


def test_consistency_checker_spots_planted_violation():
    table = run_census(max_n=5, k_max=3)
    bad = GraphRecord(graph6="H???????", n=9, zero=2, failed=2)
    findings = check_bounds_and_conjecture(table, records=[bad])
    kinds = {f.kind for f in findings}
    assert "lower-bound" in kinds and "conjecture" in kinds
