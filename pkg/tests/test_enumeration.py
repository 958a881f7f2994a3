"""The sharded search, its brute-force oracle, and their bookkeeping."""

import json

import pytest

from factorwords import (Budget, BudgetExceededError, FactorSet, Word,
                         bfs_valid_nodes, bfs_with_parents, brute_force_enumerate,
                         enumerate_representable, factors, witness_at_depth)

EXPECTED_ROWS = {
    1: (3, 3, 2, 2),
    2: (6, 14, 4, 5),
    3: (27, 121, 9, 10),
    4: (973, 5921, 24, 24),
}


class TestEnumerate:
    def test_rows(self, enum_results):
        for n, row in EXPECTED_ROWS.items():
            r = enum_results[n]
            assert (r.circ_count, r.rep_count, r.nu, r.mu) == row

    def test_histograms_sum_to_counts(self, enum_results):
        for n, r in enum_results.items():
            assert sum(r.sw_histogram.values()) == r.rep_count
            assert sum(r.scw_histogram.values()) == r.circ_count
            assert max(r.sw_histogram) == r.mu
            assert max(r.scw_histogram) == r.nu
            assert min(r.sw_histogram) == n  # single words witness themselves

    def test_set_listings(self, enum_results):
        r = enum_results[2]
        assert len(r.rep_sets) == 14 and len(r.circ_sets) == 6
        assert set(r.circ_sets) <= set(r.rep_sets)
        # {00, 11} is neither
        absent = (1 << 0) | (1 << 3)
        assert absent not in r.rep_sets

    def test_order_validation(self):
        with pytest.raises(ValueError):
            enumerate_representable(0)
        with pytest.raises(ValueError):
            enumerate_representable(6)
        with pytest.raises(ValueError):
            enumerate_representable(5)  # needs an explicit budget to opt in


class TestOracleAgreement:
    def test_small_orders_all_fields(self, enum_results, brute_small):
        for n in (1, 2, 3):
            assert enum_results[n].to_json_dict() == brute_small[n].to_json_dict()
            assert enum_results[n].rep_sets == brute_small[n].rep_sets
            assert enum_results[n].circ_sets == brute_small[n].circ_sets

    def test_order_four(self, enum_results, brute4):
        r, b = enum_results[4], brute4
        assert (b.circ_count, b.rep_count, b.nu, b.mu) == (973, 5921, 24, 24)
        assert r.to_json_dict() == b.to_json_dict()
        assert r.rep_sets == b.rep_sets and r.circ_sets == b.circ_sets

    def test_brute_validation(self):
        with pytest.raises(ValueError):
            brute_force_enumerate(5, 30)
        with pytest.raises(ValueError):
            brute_force_enumerate(3, 2)


class TestValidNodes:
    def test_roots_and_first_layer_order_one(self):
        nodes = list(bfs_valid_nodes(1))
        d0 = [(str(n.prefix), str(n.suffix), n.covered.to_text())
              for n, d in nodes if d == 0]
        assert ("0", "0", "0") in d0
        d1 = [(n.covered.to_text(), str(n.prefix), str(n.suffix))
              for n, d in nodes if d == 1]
        assert ("0,1", "0", "1") in d1

    def test_example_node_order_two(self):
        nodes = list(bfs_valid_nodes(2))
        hit = [d for n, d in nodes
               if n.covered.to_text() == "00,01"
               and str(n.prefix) == "00" and str(n.suffix) == "01"]
        assert hit == [1]
        assert len({n.covered.members for n, _ in nodes}) == 14

    def test_nodes_unique(self):
        nodes = list(bfs_valid_nodes(3))
        keys = [(n.covered.members, n.prefix.code, n.suffix.code) for n, _ in nodes]
        assert len(keys) == len(set(keys))

    def test_prefix_suffix_in_set(self):
        for node, _ in bfs_valid_nodes(2):
            assert node.prefix in node.covered
            assert node.suffix in node.covered


class TestWitnessReconstruction:
    def test_examples(self):
        nodes, parents = bfs_with_parents(2)
        by_key = {(n.covered.to_text(), str(n.prefix), str(n.suffix)): n
                  for n, _ in nodes}
        root = by_key[("00", "00", "00")]
        assert str(witness_at_depth(root, parents)) == "00"
        node = by_key[("00,01", "00", "01")]
        assert str(witness_at_depth(node, parents)) == "001"

    def test_every_node_reconstructs(self):
        for n in (1, 2, 3):
            nodes, parents = bfs_with_parents(n)
            depth_of = {id(node): d for node, d in nodes}
            for node, d in nodes:
                w = witness_at_depth(node, parents)
                assert len(w) == n + d
                assert factors(w, n) == node.covered
                assert w.segment(1, n) == node.prefix
                assert w.segment(len(w) - n + 1, len(w)) == node.suffix
                if d > 0:
                    parent, _ = parents[node]
                    assert depth_of[id(parent)] == d - 1
                    assert parent.covered.is_subset_of(node.covered)

    def test_unknown_node_rejected(self):
        _, parents = bfs_with_parents(2)
        stranger = next(iter(parents))
        # a raw node whose prefix is not even in its set is never valid
        fake = type(stranger)(FactorSet(2, 0b0001), Word(2, 3), Word(2, 0))
        assert fake not in parents
        with pytest.raises(ValueError):
            witness_at_depth(fake, parents)


class TestDeterminism:
    def test_worker_counts_agree(self):
        docs = []
        for workers in (1, 4):
            r = enumerate_representable(3, Budget.default(workers=workers))
            docs.append(json.dumps(r.to_json_dict(), sort_keys=True))
        assert docs[0] == docs[1]

    def test_brute_worker_counts_agree(self):
        docs = []
        for workers in (1, 4):
            r = brute_force_enumerate(3, 11, Budget.default(workers=workers))
            docs.append(json.dumps(r.to_json_dict(), sort_keys=True))
        assert docs[0] == docs[1]


class TestBudget:
    def test_memory_ceiling_enforced(self):
        with pytest.raises(BudgetExceededError) as exc:
            enumerate_representable(4, Budget(max_memory_bytes=1 << 16))
        assert "charged_bytes" in exc.value.progress

    def test_order_five_attempt_reports_progress(self):
        with pytest.raises(BudgetExceededError) as exc:
            enumerate_representable(5, Budget(max_memory_bytes=8 << 20))
        stats = exc.value.progress
        assert stats.get("states", 0) > 0
        assert "shard" in stats


class TestCheckpoints:
    def test_roundtrip_resume(self, tmp_path):
        path = str(tmp_path / "order3.ckpt")
        first = enumerate_representable(3, checkpoint_path=path)
        lines = open(path).read().splitlines()
        assert json.loads(lines[0])["record"] == "header"
        assert len(lines) == 1 + 8  # header plus one record per shard
        resumed = enumerate_representable(3, checkpoint_path=path)
        assert resumed.to_json_dict() == first.to_json_dict()
        assert len(open(path).read().splitlines()) == 9  # nothing recomputed

    def test_mismatched_checkpoint_rejected(self, tmp_path):
        path = str(tmp_path / "order2.ckpt")
        enumerate_representable(2, checkpoint_path=path)
        with pytest.raises(ValueError):
            enumerate_representable(3, checkpoint_path=path)
