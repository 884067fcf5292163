"""Evaluation fingerprints, a JSONL series cache, and verification drivers.

``verify_trees`` is the machine check behind the package's headline claim:
for every free tree up to a requested size, the tree classes of the k = 2
invariant reconstruct the tree, and no two non-isomorphic trees share a
tree-class set.  ``collide_search`` hunts for equal invariants among *all*
graphs of a given size, using modular evaluation fingerprints to group
candidates cheaply before comparing series exactly.  Both return plain
dictionaries so the command line layer can render them as text or JSON.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from pathlib import Path

from .generate import enumerate_graphs, enumerate_trees
from .graph6 import write_graph6
from .graphs import SimpleGraph, are_isomorphic, canonical_form, graph_from_form
from .kneser import (
    FIXED_PRIME,
    PSeries,
    augment_tree_lambda,
    is_admissible,
    kneser_psum,
    lambda_t,
    lambda_t_tilde,
    pseries_eval,
    random_values,
    true_basis,
)
from .reconstruct import reconstruct_from_lambda_t, verify_tau_isomorphism

#: seed used by fingerprints and collision search when none is given
DEFAULT_SEED = 1729
#: bump when the cache record layout changes
CACHE_VERSION = "1"


# ---------------------------------------------------------------------------
# fingerprints
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Fingerprint:
    """Residues of a series at seeded pseudorandom value maps.

    Equal invariants always produce equal fingerprints (everything is
    deterministic in the seed), so distinct fingerprints certify distinct
    invariants.  Equal fingerprints are only a hint: they probe the
    restriction to at most ``max(ms)`` symbols, which is blind to
    disjoint-support classes spreading over more symbols, so candidates
    must be confirmed by exact comparison in the disjoint-support basis.
    """

    k: int
    seed: int
    prime: int
    ms: tuple[int, ...]
    residues: tuple[int, ...]


def fingerprint(
    series: PSeries,
    seed: int = DEFAULT_SEED,
    ms: tuple[int, ...] | None = None,
    prime: int = FIXED_PRIME,
) -> Fingerprint:
    """Evaluate the series at seeded value maps for a spread of symbol counts."""
    if ms is None:
        ms = tuple(range(series.k, 7))
    residues = tuple(
        pseries_eval(series, m, random_values(series.k, m, seed, prime), prime)
        for m in ms
    )
    return Fingerprint(series.k, seed, prime, ms, residues)


# ---------------------------------------------------------------------------
# JSONL cache of computed series
# ---------------------------------------------------------------------------


def canonical_graph6(g: SimpleGraph) -> str:
    """graph6 string of the canonical representative -- an isomorphism key."""
    rep = graph_from_form(canonical_form(g))
    assert isinstance(rep, SimpleGraph)
    return write_graph6(rep)


class SeriesCache:
    """Append-only JSONL store of computed series, keyed by isomorphism class.

    Each line is one record ``{"version", "graph6", "k", "coeffs",
    "series"}`` with the canonical graph6 string as the graph key, so hits
    are shared across isomorphic inputs and across runs.
    """

    def __init__(self, path: str | Path) -> None:
        self.path = Path(path)
        self.records: dict[tuple[str, int, str], PSeries] = {}
        if self.path.exists():
            with self.path.open() as fh:
                for lineno, line in enumerate(fh, start=1):
                    line = line.strip()
                    if not line:
                        continue
                    try:
                        data = json.loads(line)
                    except json.JSONDecodeError as exc:
                        raise ValueError(
                            f"{self.path}:{lineno}: cache line is not valid JSON: {exc}"
                        ) from exc
                    if data.get("version") != CACHE_VERSION:
                        continue
                    try:
                        key = (data["graph6"], int(data["k"]), data["coeffs"])
                        series = PSeries.from_json_dict(data["series"])
                    except (KeyError, TypeError, ValueError) as exc:
                        raise ValueError(
                            f"{self.path}:{lineno}: malformed cache record: {exc}"
                        ) from exc
                    self.records[key] = series

    def get(self, g: SimpleGraph, k: int, coeffs: str) -> PSeries | None:
        return self.records.get((canonical_graph6(g), k, coeffs))

    def put(self, g: SimpleGraph, k: int, coeffs: str, series: PSeries) -> None:
        key = (canonical_graph6(g), k, coeffs)
        if key in self.records:
            return
        self.records[key] = series
        record = {
            "version": CACHE_VERSION,
            "graph6": key[0],
            "k": k,
            "coeffs": coeffs,
            "series": series.to_json_dict(),
        }
        with self.path.open("a") as fh:
            fh.write(json.dumps(record, separators=(",", ":"), sort_keys=True) + "\n")


def cached_psum(
    g: SimpleGraph, k: int, coeffs: str = "witness", cache: SeriesCache | None = None
) -> PSeries:
    """``kneser_psum`` with an optional persistent cache in front."""
    if cache is not None:
        hit = cache.get(g, k, coeffs)
        if hit is not None:
            return hit
    series = kneser_psum(g, k, coeffs=coeffs)
    if cache is not None:
        cache.put(g, k, coeffs, series)
    return series


# ---------------------------------------------------------------------------
# exhaustive tree verification
# ---------------------------------------------------------------------------


def verify_trees(n_max: int, *, witness: bool = False) -> dict:
    """Round-trip and injectivity check over all free trees up to ``n_max``.

    For each tree: extract the tree classes of its k = 2 invariant, profile
    them, reconstruct, and compare with the original up to isomorphism.
    Afterwards check that no two trees produced the same tree-class set.
    With ``witness`` also confirm, per tree, that an admissibility witness
    of its canonical augmented multiset induces a position isomorphism.
    """
    if n_max < 1:
        raise ValueError("need n_max >= 1")
    records: list[dict] = []
    class_sets: dict[frozenset, str] = {}
    duplicate_pairs: list[tuple[str, str]] = []
    failures = 0
    for n in range(1, n_max + 1):
        for tree in enumerate_trees(n):
            started = time.perf_counter()
            g6 = canonical_graph6(tree)
            classes = lambda_t(tree, 2)
            tilde, profile = lambda_t_tilde(tree)
            result = reconstruct_from_lambda_t(classes)
            ok = are_isomorphic(result.graph, tree)
            record = {
                "n": n,
                "graph6": g6,
                "lambda_t_size": len(classes),
                "lambda_t_tilde_size": len(tilde),
                "min_profile": list(profile),
                "reconstructed": canonical_graph6(result.graph),
                "pass": bool(ok),
            }
            if witness:
                aug = augment_tree_lambda(tree)
                found = is_admissible(aug.lam, tree)
                witness_ok = found is not None and verify_tau_isomorphism(
                    tree, aug.lam, found
                )
                record["witness_ok"] = bool(witness_ok)
                ok = ok and witness_ok
                record["pass"] = bool(ok)
            key = frozenset(classes)
            if key in class_sets:
                duplicate_pairs.append((class_sets[key], g6))
            else:
                class_sets[key] = g6
            if not ok:
                failures += 1
            record["ms"] = round((time.perf_counter() - started) * 1000.0, 3)
            records.append(record)
    summary = {
        "n_max": n_max,
        "k": 2,
        "trees": len(records),
        "failures": failures,
        "injective": not duplicate_pairs,
        "duplicate_class_sets": [list(p) for p in duplicate_pairs],
        "all_pass": failures == 0 and not duplicate_pairs,
    }
    return {"summary": summary, "records": records}


# ---------------------------------------------------------------------------
# collision search over all graphs
# ---------------------------------------------------------------------------


def collide_search(
    n_max: int,
    k: int,
    *,
    seed: int = DEFAULT_SEED,
    cache: SeriesCache | None = None,
) -> dict:
    """Search all graphs (per vertex count) for equal invariants.

    Graphs are grouped by vertex count and fingerprint; groups of size > 1
    are decided exactly in the disjoint-support basis (``true_basis``), the
    canonical form of the invariant as a function.  Equal vectors land in
    ``collisions`` (with a note whether even the stored representations
    agree); unequal vectors whose low-symbol evaluations happened to match
    land in ``fingerprint_collisions``.  The latter genuinely occur: two
    representations can agree on every value map with at most 6 symbols yet
    differ in disjoint-support classes spreading over more symbols.
    """
    if n_max < 1:
        raise ValueError("need n_max >= 1")
    collisions: list[dict] = []
    fp_collisions: list[dict] = []
    graphs_seen = 0
    for n in range(1, n_max + 1):
        groups: dict[tuple[int, ...], list[tuple[str, PSeries]]] = {}
        for g in enumerate_graphs(n):
            graphs_seen += 1
            series = cached_psum(g, k, "witness", cache)
            fp = fingerprint(series, seed)
            groups.setdefault(fp.residues, []).append((canonical_graph6(g), series))
        for members in groups.values():
            if len(members) < 2:
                continue
            vectors = [true_basis(series) for _, series in members]
            for i in range(len(members)):
                for j in range(i + 1, len(members)):
                    g6a, sa = members[i]
                    g6b, sb = members[j]
                    entry = {"n": n, "graph6_a": g6a, "graph6_b": g6b}
                    if vectors[i] == vectors[j]:
                        entry["representation_equal"] = sa.terms == sb.terms
                        collisions.append(entry)
                    else:
                        fp_collisions.append(entry)
    return {
        "summary": {
            "n_max": n_max,
            "k": k,
            "seed": seed,
            "graphs": graphs_seen,
            "collisions": len(collisions),
            "fingerprint_collisions": len(fp_collisions),
        },
        "collisions": collisions,
        "fingerprint_collisions": fp_collisions,
    }
