"""Smoke tests for the python bindings (and, when available, the CLI)."""

import json
import os
import subprocess
import sys

import pytest

import hyperdom as hd


def test_generators_and_graph_surface():
    g = hd.gen_cycle(12)
    assert (g.n, g.m) == (12, 12)
    assert g.degree(0) == 2
    assert g.neighbors(0) == [1, 11]
    assert g.has_edge(3, 4)
    s = g.summary()
    assert s["min_degree"] == s["max_degree"] == 2
    assert hd.is_connected(g)


def test_compute_matches_closed_forms():
    assert hd.compute_hyperbolicity(hd.gen_cycle(12), k=2, r=2.0)["delta_str"] == "3.0"
    assert hd.compute_hyperbolicity(hd.gen_grid(3, 5), k=1, r=2.0)["delta"] == 2.0
    assert hd.compute_hyperbolicity(hd.gen_tree(150, seed=3), k=2, r=2.0)["delta"] == 0.0


def test_engine_equals_oracle():
    for seed in (1, 2, 3):
        g = hd.gen_random_connected(22, 0.18, seed=seed)
        oracle = hd.brute_force_hyperbolicity(g)
        for k in (0, 2):
            res = hd.compute_hyperbolicity(g, k=k, r=2.0)
            assert res["delta_doubled"] == oracle["delta_doubled"]


def test_distance_structures():
    g = hd.gen_grid_perturbed(8, 0.1, seed=7)
    labels = hd.build_hub_labels(g)
    ecc = hd.compute_all_eccentricities(g)
    dist0 = hd.bfs_distances(g, 0)
    for v in range(0, g.n, 3):
        assert labels.query(0, v) == dist0[v]
    assert ecc.diameter <= 2 * ecc.radius
    assert max(dist0) <= ecc.diameter


def test_hierarchy_and_checks():
    g = hd.gen_random_connected(60, 0.1, seed=4)
    seq = hd.derive_sequence(3, 1.5)
    assert seq == [3, 2, 1, 0]
    h = hd.hierarchical_dominating_set(g, seq)
    ok, detail = hd.hierarchy_check(g, h)
    assert ok, detail
    ok, detail = hd.lemma_sandwich_check(g, h, samples=5000, seed=1)
    assert ok, detail
    ok, detail = hd.bound_lemmas_check(g, h, samples=5000, seed=1)
    assert ok, detail


def test_biconnected_and_io(tmp_path):
    g = hd.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    block, original = hd.largest_biconnected_component(g)
    assert block.n == 3 and original == [0, 1, 2]
    path = tmp_path / "graph.txt"
    hd.write_edge_list(g, str(path))
    loaded, ids = hd.load_edge_list(str(path))
    assert loaded.n == g.n and loaded.m == g.m


def test_parameter_errors():
    with pytest.raises(ValueError):
        hd.compute_hyperbolicity(hd.gen_cycle(8), k=2, r=1.0)
    with pytest.raises(ValueError):
        hd.gen_cycle(2)


def test_doubled_arithmetic():
    assert hd.delta4(2, 2, 1, 1, 1, 1) == 1.0
    assert hd.tau4(2, 2, 1, 1, 1, 1) == 1.0
    assert hd.tau4(1, 1, 2, 2, 2, 2) <= 0.0


CLI = os.environ.get("HYPERDOM_CLI")


@pytest.mark.skipif(not CLI, reason="HYPERDOM_CLI not set")
def test_cli_stats_json_deterministic(tmp_path):
    graph = tmp_path / "g.txt"
    subprocess.run(
        [CLI, "gen", "--kind", "grid-perturbed", "--side", "12", "--delete-frac", "0.1",
         "--seed", "5", "-o", str(graph)],
        check=True,
    )
    docs = []
    for i in range(2):
        out = tmp_path / f"stats{i}.json"
        run = subprocess.run(
            [CLI, "compute", "--input", str(graph), "-k", "3", "-r", "2", "--stats-json", str(out)],
            check=True, capture_output=True, text=True,
        )
        assert "hyperbolicity:" in run.stdout
        doc = json.loads(out.read_text())
        doc.pop("timings")
        docs.append(json.dumps(doc, sort_keys=True))
    assert docs[0] == docs[1]


@pytest.mark.skipif(not CLI, reason="HYPERDOM_CLI not set")
def test_cli_exit_codes(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("0 zzz\n")
    assert subprocess.run([CLI, "compute", "--input", str(bad)]).returncode == 2
    good = tmp_path / "good.txt"
    good.write_text("0 1\n1 2\n2 0\n")
    assert (
        subprocess.run([CLI, "compute", "--input", str(good), "--ratio", "0.5"]).returncode == 3
    )


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
