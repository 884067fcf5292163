"""Fingerprints, the series cache, exhaustive verification, collision search."""

from __future__ import annotations

import json

import pytest

from kneserchrom import (
    DEFAULT_SEED,
    SeriesCache,
    SimpleGraph,
    cached_psum,
    canonical_graph6,
    collide_search,
    enumerate_trees,
    fingerprint,
    graph_from_form,
    kneser_psum,
    parse_graph6,
    relabel,
    verify_trees,
    write_graph6,
)

P4 = SimpleGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])


# ---------------------------------------------------------------------------
# fingerprints
# ---------------------------------------------------------------------------


def test_fingerprint_deterministic_and_isomorphism_invariant():
    fp1 = fingerprint(kneser_psum(P4, 2))
    fp2 = fingerprint(kneser_psum(P4, 2))
    assert fp1 == fp2
    shuffled = relabel(P4, [2, 0, 3, 1])
    assert fingerprint(kneser_psum(shuffled, 2)) == fp1
    assert fingerprint(kneser_psum(P4, 2), seed=DEFAULT_SEED + 1) != fp1


def test_fingerprint_ms_cover_k_to_six():
    fp = fingerprint(kneser_psum(P4, 2))
    assert fp.ms == tuple(range(2, 7))
    assert len(fp.residues) == len(fp.ms)
    fp1 = fingerprint(kneser_psum(P4, 1))
    assert fp1.ms == tuple(range(1, 7))


def test_fingerprints_separate_small_trees():
    # observed: fingerprints alone already separate all trees up to n = 6
    seen = {}
    for n in range(1, 7):
        for t in enumerate_trees(n):
            fp = fingerprint(kneser_psum(t, 2))
            key = (n, fp.residues)
            assert key not in seen
            seen[key] = t


# ---------------------------------------------------------------------------
# graph6 canonical key
# ---------------------------------------------------------------------------


def test_canonical_graph6_stable_under_relabelling():
    g = SimpleGraph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)])
    h = relabel(g, [4, 0, 3, 1, 2])
    assert canonical_graph6(g) == canonical_graph6(h)
    assert parse_graph6(canonical_graph6(g)).n == 5


# ---------------------------------------------------------------------------
# the series cache
# ---------------------------------------------------------------------------


def test_cache_round_trip_and_reload(tmp_path):
    path = tmp_path / "series.jsonl"
    cache = SeriesCache(path)
    series = cached_psum(P4, 2, "witness", cache)
    assert cache.get(P4, 2, "witness").terms == series.terms
    # isomorphic graphs share the cache key
    shuffled = relabel(P4, [3, 1, 0, 2])
    assert cache.get(shuffled, 2, "witness") is not None
    # a fresh instance reads the same record back from disk
    reloaded = SeriesCache(path)
    hit = reloaded.get(P4, 2, "witness")
    assert hit is not None and hit.terms == series.terms
    # putting the same key again does not grow the file
    before = path.read_text()
    cached_psum(shuffled, 2, "witness", reloaded)
    assert path.read_text() == before


def test_cache_lines_are_compact_json(tmp_path):
    path = tmp_path / "series.jsonl"
    cache = SeriesCache(path)
    cached_psum(P4, 1, "witness", cache)
    cached_psum(P4, 2, "indicator", cache)
    lines = path.read_text().splitlines()
    assert len(lines) == 2
    for line in lines:
        record = json.loads(line)
        assert record["version"] == "1"
        assert json.dumps(record, separators=(",", ":"), sort_keys=True) == line


def test_cache_rejects_corrupt_line(tmp_path):
    path = tmp_path / "series.jsonl"
    path.write_text('{"version": "1", "graph6"\n')
    with pytest.raises(ValueError, match=r"series\.jsonl:1"):
        SeriesCache(path)
    path.write_text('{"version": "1", "graph6": "A_", "k": 2}\n')
    with pytest.raises(ValueError, match="malformed cache record"):
        SeriesCache(path)


def test_cache_skips_unknown_version(tmp_path):
    path = tmp_path / "series.jsonl"
    path.write_text('{"version": "999", "graph6": "A_", "k": 2, "coeffs": "witness"}\n')
    cache = SeriesCache(path)
    assert not cache.records


# ---------------------------------------------------------------------------
# exhaustive tree verification
# ---------------------------------------------------------------------------


def test_verify_trees_small():
    report = verify_trees(4)
    summary = report["summary"]
    assert summary["n_max"] == 4
    assert summary["trees"] == 5  # free trees on 1..4 vertices: 1+1+1+2
    assert summary["failures"] == 0
    assert summary["all_pass"] is True
    assert summary["injective"] is True
    assert summary["duplicate_class_sets"] == []
    assert len(report["records"]) == 5
    for record in report["records"]:
        assert record["pass"] is True
        assert record["lambda_t_size"] >= record["lambda_t_tilde_size"] >= 1
        assert record["reconstructed"] == record["graph6"]
        g = parse_graph6(record["graph6"])
        assert g.n == record["n"]


def test_verify_trees_witness_mode():
    report = verify_trees(4, witness=True)
    assert report["summary"]["all_pass"] is True
    assert all(record["witness_ok"] for record in report["records"])


def test_verify_trees_rejects_bad_bound():
    with pytest.raises(ValueError):
        verify_trees(0)


# ---------------------------------------------------------------------------
# collision search
# ---------------------------------------------------------------------------


def test_collide_search_k1_finds_the_classical_pair():
    result = collide_search(5, 1)
    summary = result["summary"]
    assert summary["graphs"] == 1 + 2 + 4 + 11 + 34
    assert summary["collisions"] == 1
    (entry,) = result["collisions"]
    pair = {entry["graph6_a"], entry["graph6_b"]}
    assert pair == {canonical_graph6(parse_graph6("D`{")), canonical_graph6(parse_graph6("DR["))}
    # the two representations coincide termwise: for k = 1 the class
    # monomials are algebraically independent, so equal functions have
    # equal representations
    assert entry["representation_equal"] is True
    assert summary["fingerprint_collisions"] == 0


def test_collide_search_k2_separates_all_small_graphs():
    result = collide_search(5, 2)
    summary = result["summary"]
    assert summary["collisions"] == 0
    assert result["collisions"] == []
    # low-symbol fingerprints do clash: these pairs agree on every value
    # map with at most 6 symbols yet differ as invariants
    assert summary["fingerprint_collisions"] == 12
    clashing = {
        frozenset((e["graph6_a"], e["graph6_b"]))
        for e in result["fingerprint_collisions"]
    }
    known = frozenset(
        (canonical_graph6(parse_graph6("DR[")), canonical_graph6(parse_graph6("Dr[")))
    )
    assert known in clashing


def test_collide_search_uses_cache(tmp_path):
    cache = SeriesCache(tmp_path / "series.jsonl")
    first = collide_search(3, 2, cache=cache)
    assert len(cache.records) == 1 + 2 + 4
    again = collide_search(3, 2, cache=cache)
    assert first == again


def test_collide_search_rejects_bad_bound():
    with pytest.raises(ValueError):
        collide_search(0, 2)
