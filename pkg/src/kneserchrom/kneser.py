"""Kneser chromatic functions of small graphs in the power-sum basis.

For k in {1, 2} and a graph G on n vertices, the invariant computed here is

    X_k(G) = sum over maps phi from V(G) into k-element subsets of {1,2,...}
             with phi(u), phi(v) disjoint for every edge uv
             of the monomial  prod_v x_{phi(v)} ,

a formal power series in variables indexed by k-subsets.  For k = 1 this is
the chromatic symmetric function; evaluating it with m symbols and all
variables 1 counts proper m-colourings.

Inclusion-exclusion over the edge set turns X_k into a signed sum over
spanning subgraphs: writing G_S for the subgraph with edge set S,

    X_k(G) = sum_{S subseteq E(G)} (-1)^{|S|} prod_{components C of G_S} N_C,

    N_C   = sum over functions psi from V(C) into k-subsets with
            *intersecting* images on the edges of C of prod x_{psi(v)} .

Grouping the functions psi by the isomorphism class of their value multiset
lambda (a multiset of |V(C)| blocks) gives

    N_C = sum over admissible classes lambda of  W(C, lambda) * P_lambda ,

where a class is *admissible* when some bijection of V(C) onto a
representative multiset puts intersecting blocks on adjacent vertices,
W(C, lambda) counts the functions realising one fixed representative (the
witness count), and P_lambda is the orbit sum of the representative's
monomial.  For a multiset whose symbol graph splits into several connected
parts, P_lambda is the *product* of the parts' orbit sums -- that product
convention is exactly what absorbs symbol collisions between different
components of G_S, and with it the witness-counted expansion reproduces
X_k identically (the package's strongest self-check evaluates both sides
modulo a large prime).

``kneser_psum`` accumulates this expansion as integer coefficients per
class.  Two normalisations are exposed:

* ``coeffs="witness"`` (default): each admissible class contributes its
  witness count W.  This is the genuine power-sum expansion of X_k; it is
  what evaluation, fingerprinting and collision search use.
* ``coeffs="indicator"``: each admissible class contributes 1 per subgraph
  S, i.e. the signed count of subgraphs admitting the class.  Tree classes
  then carry the bare sign (-1)^(n-1), which is the cleanest form of the
  support structure that reconstruction relies on.

Both normalisations have the same support on tree classes (a tree class
arises from the single spanning subgraph S = E, so no cancellation is
possible there), and for k = 1 they coincide outright because each
component admits exactly one class with exactly one realising function.
"""

from __future__ import annotations

import json
import random
from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from .generate import enumerate_trees
from .graphs import (
    CapExceededError,
    Lambda,
    SimpleGraph,
    _UnionFind,
    automorphism_count,
    canonical_form,
    connected_components,
    component_class_string,
    graph_components,
    graph_from_form,
    induced_subgraph,
    is_connected,
    is_tree,
    lambda_class,
    parse_form,
    singleton_class_string,
)

#: full subset expansions are enumerated only up to this many vertices
PSUM_VERTEX_CAP = 7
#: tree-class extraction by candidate-tree iteration is capped here
LAMBDA_T_CAP = 9
#: fixed public 61-bit prime for all modular evaluation (2^61 - 1)
FIXED_PRIME = (1 << 61) - 1

PClass = tuple[str, ...]


# ---------------------------------------------------------------------------
# admissibility of a given block multiset
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AdmissibleWitness:
    """A bijection from vertices to blocks with intersecting blocks on edges."""

    assignment: tuple[tuple[int, tuple[int, ...]], ...]

    def mapping(self) -> dict[int, tuple[int, ...]]:
        return dict(self.assignment)


def _search_order(g: SimpleGraph) -> tuple[list[int], list[list[int]]]:
    """Vertices component by component in BFS order, plus for each position
    the positions of its already-placed neighbours.

    Every vertex after the first of its component has at least one earlier
    neighbour, so adjacency constraints can be checked incrementally."""
    adj = g.adjacency()
    deg = g.degrees()
    seen = [False] * g.n
    order: list[int] = []
    for comp in graph_components(g):
        start = max(comp, key=lambda v: (deg[v], -v))
        queue = [start]
        seen[start] = True
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    pos = {v: i for i, v in enumerate(order)}
    earlier: list[list[int]] = [[] for _ in order]
    for i, v in enumerate(order):
        for w in adj[v]:
            if pos[w] < i:
                earlier[i].append(pos[w])
    return order, earlier


def is_admissible(lam: Lambda, g: SimpleGraph) -> AdmissibleWitness | None:
    """Decide whether the class of ``lam`` is admissible by ``g``.

    Searches for a bijection of V(G) onto the blocks of ``lam`` (as a
    multiset) such that adjacent vertices receive intersecting blocks;
    returns one witness, or None.  Requires exactly n blocks.
    """
    if len(lam.blocks) != g.n:
        raise ValueError(
            f"block count {len(lam.blocks)} must equal vertex count {g.n}"
        )
    distinct = sorted(set(lam.blocks))
    caps = [0] * len(distinct)
    index = {b: i for i, b in enumerate(distinct)}
    for b in lam.blocks:
        caps[index[b]] += 1
    sets = [set(b) for b in distinct]
    inter = [[bool(sa & sb) for sb in sets] for sa in sets]

    # quick necessary condition: a vertex of degree d needs a block whose
    # intersecting blocks can host d neighbours (threshold bipartite Hall)
    avail = [
        sum(caps[j] for j in range(len(distinct)) if inter[i][j]) - 1
        for i in range(len(distinct))
    ]
    degs = sorted(g.degrees(), reverse=True)
    slots = sorted((a for i, a in enumerate(avail) for _ in range(caps[i])), reverse=True)
    if any(d > a for d, a in zip(degs, slots)):
        return None

    order, earlier = _search_order(g)
    deg = g.degrees()
    chosen: list[int] = []

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        need = deg[order[i]]
        for bi in range(len(distinct)):
            if caps[bi] == 0 or avail[bi] < need:
                continue
            if all(inter[bi][chosen[j]] for j in earlier[i]):
                caps[bi] -= 1
                chosen.append(bi)
                if extend(i + 1):
                    return True
                chosen.pop()
                caps[bi] += 1
        return False

    if not extend(0):
        return None
    assignment = tuple(
        sorted((v, distinct[chosen[i]]) for i, v in enumerate(order))
    )
    return AdmissibleWitness(assignment)


# ---------------------------------------------------------------------------
# admissible classes of one connected component shape
# ---------------------------------------------------------------------------


def _component_order(g: SimpleGraph) -> tuple[list[list[int]], list[int]]:
    """(earlier-neighbour positions, previous-twin position) for a connected g.

    Twins (equal neighbourhoods) are fully interchangeable in any block
    assignment, so the class enumeration may insist on non-decreasing blocks
    along each twin group without losing classes."""
    order, earlier = _search_order(g)
    adj = g.adjacency()
    nbr_key = {v: frozenset(adj[v]) for v in order}
    twin_prev = [-1] * len(order)
    last_of: dict[frozenset, int] = {}
    for i, v in enumerate(order):
        key = nbr_key[v]
        if key in last_of:
            twin_prev[i] = last_of[key]
        last_of[key] = i
    return earlier, twin_prev


@lru_cache(maxsize=None)
def _component_classes(form: str, k: int) -> frozenset[str]:
    """Admissible classes of the connected shape named by ``form``.

    Classes are returned as canonical component strings.  For k = 1
    connectivity forces every vertex onto one repeated symbol; for k = 2 the
    classes are enumerated by assigning blocks in search order with symbols
    named by first use (a connected multigraph with c edges has at most c+1
    symbols), deduplicating multisets, then canonicalising.
    """
    n, pairs = parse_form(form)
    if k == 1:
        return frozenset({singleton_class_string(n)})
    g = SimpleGraph.from_edges(n, pairs)
    earlier, twin_prev = _component_order(g)
    budget = n + 1

    seen: set[bytes] = set()
    assign: list[tuple[int, int]] = []

    def extend(i: int, used: int) -> None:
        if i == n:
            seen.add(bytes(sorted((a << 4) | b for a, b in assign)))
            return
        if not earlier[i]:
            cands = [(0, 1)]
        else:
            first = assign[earlier[i][0]]
            rest = [assign[j] for j in earlier[i][1:]]
            opts = set()
            hi = used + 1 if used < budget else used
            for s in first:
                for o in range(hi):
                    if o == s:
                        continue
                    b = (s, o) if s < o else (o, s)
                    if all(b[0] in r or b[1] in r for r in rest):
                        opts.add(b)
            cands = sorted(opts)
        floor = assign[twin_prev[i]] if twin_prev[i] >= 0 else None
        for b in cands:
            if floor is not None and b < floor:
                continue
            assign.append(b)
            extend(i + 1, max(used, b[1] + 1, b[0] + 1))
            assign.pop()

    extend(0, 0)

    classes: set[str] = set()
    memo: dict[bytes, str] = {}
    for enc in seen:
        blocks = [((byte >> 4) & 15, byte & 15) for byte in enc]
        key = enc
        if key not in memo:
            memo[key] = component_class_string(Lambda.from_blocks(2, blocks))
        classes.add(memo[key])
    return frozenset(classes)


@lru_cache(maxsize=None)
def _component_weights(form: str, k: int) -> dict[str, int]:
    """Witness counts W(shape, class) for every admissible class of a shape.

    W counts the functions from the vertices onto one fixed representative
    multiset (block capacities consumed exactly) with intersecting blocks on
    edges; it is the multiplicity with which the class enters the genuine
    power-sum expansion.
    """
    n, pairs = parse_form(form)
    if k == 1:
        return {singleton_class_string(n): 1}
    g = SimpleGraph.from_edges(n, pairs)
    _, earlier = _search_order(g)
    weights: dict[str, int] = {}
    for cls in sorted(_component_classes(form, k)):
        _, block_pairs = parse_form(cls)
        counts = Counter(tuple(b) for b in block_pairs)
        distinct = sorted(counts)
        caps = [counts[b] for b in distinct]
        sets = [set(b) for b in distinct]
        inter = [[bool(sa & sb) for sb in sets] for sa in sets]
        total = 0
        chosen: list[int] = []

        def count(i: int) -> None:
            nonlocal total
            if i == n:
                total += 1
                return
            for bi in range(len(distinct)):
                if caps[bi] == 0:
                    continue
                if all(inter[bi][chosen[j]] for j in earlier[i]):
                    caps[bi] -= 1
                    chosen.append(bi)
                    count(i + 1)
                    chosen.pop()
                    caps[bi] += 1

        count(0)
        assert total > 0, "admissible class with no realising function"
        weights[cls] = total
    return weights


def enumerate_admissible_classes(g: SimpleGraph, k: int) -> frozenset[PClass]:
    """All classes admissible by a connected graph, as one-component classes."""
    _check_k(k)
    if g.n < 1:
        raise ValueError("need at least one vertex")
    if g.n > PSUM_VERTEX_CAP:
        raise CapExceededError(
            f"class enumeration capped at {PSUM_VERTEX_CAP} vertices (got {g.n})"
        )
    if not is_connected(g):
        raise ValueError("class enumeration is defined for connected graphs")
    return frozenset((c,) for c in _component_classes(canonical_form(g), k))


# ---------------------------------------------------------------------------
# the power-sum series
# ---------------------------------------------------------------------------


def _check_k(k: int) -> None:
    if k not in (1, 2):
        raise ValueError("only k = 1 and k = 2 are supported")


@dataclass
class PSeries:
    """A finite integer combination of block-multiset classes.

    ``terms`` maps each class (sorted tuple of connected component strings)
    to its coefficient; ``coeffs`` records the normalisation ("witness" or
    "indicator").
    """

    n: int
    k: int
    coeffs: str
    terms: dict[PClass, int]

    def support(self) -> frozenset[PClass]:
        return frozenset(self.terms)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "coeffs": self.coeffs,
            "terms": [
                {"class": list(cls), "coeff": coeff}
                for cls, coeff in sorted(self.terms.items())
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"), sort_keys=True)

    @staticmethod
    def from_json_dict(data: dict) -> "PSeries":
        try:
            n = int(data["n"])
            k = int(data["k"])
            coeffs = data.get("coeffs", "witness")
            raw = data["terms"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed series payload: {exc}") from exc
        _check_k(k)
        if coeffs not in ("witness", "indicator"):
            raise ValueError(f"unknown coefficient normalisation {coeffs!r}")
        terms: dict[PClass, int] = {}
        for entry in raw:
            cls = tuple(entry["class"])
            coeff = int(entry["coeff"])
            if not all(isinstance(c, str) and ":" in c for c in cls):
                raise ValueError(f"malformed class {cls!r}")
            if cls != tuple(sorted(cls)):
                raise ValueError("class components must be sorted")
            if coeff:
                terms[cls] = terms.get(cls, 0) + coeff
        return PSeries(n, k, coeffs, terms)

    @staticmethod
    def from_json(text: str) -> "PSeries":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"series payload is not valid JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise ValueError("series payload must be a JSON object")
        return PSeries.from_json_dict(data)


def _subset_components(n: int, subset: list[tuple[int, int]]) -> list[list[int]]:
    uf = _UnionFind(range(n))
    for u, v in subset:
        uf.union(u, v)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(uf.find(v), []).append(v)
    return sorted(groups.values(), key=lambda vs: vs[0])


def _psum_subsets(
    g: SimpleGraph, k: int, witness: bool, collect_union: bool = False
) -> tuple[dict[PClass, int], set[PClass]]:
    """Signed class accumulation over all spanning subgraphs.

    With ``witness`` each component class enters with its witness count and
    assembly choices multiply; otherwise each assembled class counts once
    per subgraph (set semantics).  Optionally also returns the plain union
    of assembled classes over all subgraphs.
    """
    edges = g.sorted_edges()
    terms: dict[PClass, int] = defaultdict(int)
    union: set[PClass] = set()
    for mask in range(1 << len(edges)):
        subset = [edges[i] for i in range(len(edges)) if mask >> i & 1]
        sign = -1 if bin(mask).count("1") & 1 else 1
        tables = []
        for comp in _subset_components(g.n, subset):
            vs = {v: i for i, v in enumerate(comp)}
            sub = SimpleGraph.from_edges(
                len(comp), ((vs[u], vs[v]) for u, v in subset if u in vs and v in vs)
            )
            form = canonical_form(sub)
            if witness:
                tables.append(_component_weights(form, k))
            else:
                tables.append({c: 1 for c in _component_classes(form, k)})
        if witness:
            partial: dict[PClass, int] = {(): 1}
            for table in tables:
                nxt: dict[PClass, int] = defaultdict(int)
                for cls, w in partial.items():
                    for comp_cls, wc in table.items():
                        nxt[tuple(sorted(cls + (comp_cls,)))] += w * wc
                partial = dict(nxt)
            for cls, w in partial.items():
                terms[cls] += sign * w
            if collect_union:
                union.update(partial)
        else:
            assembled: set[PClass] = {()}
            for table in tables:
                assembled = {
                    tuple(sorted(cls + (comp_cls,)))
                    for cls in assembled
                    for comp_cls in table
                }
            for cls in assembled:
                terms[cls] += sign
            if collect_union:
                union.update(assembled)
    return {c: v for c, v in terms.items() if v}, union


# --- fast k = 1 route: partitions into connected pieces ---------------------


@lru_cache(maxsize=None)
def _tutte_10(form: str) -> int:
    """T_G(1, 0) of the connected multigraph named by ``form``.

    Deletion-contraction with the (1,0) specialisation folded in: bridges
    contribute factor 1, any loop kills a branch, so contracting across a
    parallel pair contributes nothing.
    """
    n, pairs = parse_form(form)
    counts = Counter(tuple(p) for p in pairs)
    return _tutte_10_raw(n, tuple(sorted(counts.items())))


def _tutte_10_raw(n: int, edges: tuple[tuple[tuple[int, int], int], ...]) -> int:
    if not edges:
        return 1 if n == 1 else 0
    from .graphs import Multigraph

    mg = Multigraph(n, edges)
    form = canonical_form(mg)
    return _tutte_10_memo(form)


@lru_cache(maxsize=None)
def _tutte_10_memo(form: str) -> int:
    n, pairs = parse_form(form)
    counts = Counter(tuple(p) for p in pairs)
    edges = sorted(counts.items())
    if not edges:
        return 1 if n == 1 else 0
    (u, v), mult = edges[0]

    # deletion of one copy
    if mult > 1:
        del_edges = [(e, m if e != (u, v) else m - 1) for e, m in edges]
        deleted = _tutte_10_raw(n, tuple(del_edges))
    else:
        del_edges = [(e, m) for e, m in edges if e != (u, v)]
        simple = SimpleGraph.from_edges(n, (e for e, _ in del_edges))
        if not is_connected(simple):
            deleted = None  # (u, v) is a bridge
        else:
            deleted = _tutte_10_raw(n, tuple(del_edges))

    # contraction: merge v into u; any surviving (u, v) copy becomes a loop
    if mult > 1:
        contracted = 0
    else:
        merged: Counter = Counter()
        for (a, b), m in edges:
            if (a, b) == (u, v):
                continue
            a2 = u if a == v else a
            b2 = u if b == v else b
            a2, b2 = (a2, b2) if a2 < b2 else (b2, a2)
            merged[(a2, b2)] += m
        relabel = {w: (w if w < v else w - 1) for w in range(n) if w != v}
        shifted = Counter()
        for (a, b), m in merged.items():
            a2, b2 = relabel[a], relabel[b]
            shifted[(a2, b2) if a2 < b2 else (b2, a2)] += m
        contracted = _tutte_10_raw(n - 1, tuple(sorted(shifted.items())))

    if deleted is None:  # bridge: T = x * T(G/e), and x = 1
        return contracted
    return deleted + contracted


def _set_partitions(items: list[int]):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def _psum_k1(g: SimpleGraph, collect_union: bool = False) -> tuple[dict[PClass, int], set[PClass]]:
    """k = 1 series via partitions of V into connected pieces.

    Grouping spanning subgraphs by the partition into their components gives
    coefficient  prod_B (-1)^(|B|-1) T(G[B])(1,0)  per partition; the sign
    only depends on the partition type, so no cancellation can occur and the
    signed support equals the realisable union.
    """
    n = g.n

    @lru_cache(maxsize=None)
    def a_value(vs: frozenset) -> int:
        sub = induced_subgraph(g, sorted(vs))
        if not is_connected(sub):
            return 0
        return (-1) ** (len(vs) - 1) * _tutte_10(canonical_form(sub))

    terms: dict[PClass, int] = defaultdict(int)
    union: set[PClass] = set()
    for part in _set_partitions(list(range(n))):
        prod = 1
        for block in part:
            av = a_value(frozenset(block))
            if av == 0:
                prod = 0
                break
            prod *= av
        if prod:
            cls = tuple(sorted(singleton_class_string(len(b)) for b in part))
            terms[cls] += prod
            if collect_union:
                union.add(cls)
    return {c: v for c, v in terms.items() if v}, union


_PSUM_CACHE: dict[tuple[str, int, str], "PSeries"] = {}


def kneser_psum(g: SimpleGraph, k: int, *, coeffs: str = "witness") -> PSeries:
    """The invariant X_k(G) in the power-sum basis (see module docstring).

    ``coeffs="witness"`` gives the genuine expansion (what the evaluation
    oracle reproduces); ``coeffs="indicator"`` counts each admissible class
    once per spanning subgraph.  Capped at ``PSUM_VERTEX_CAP`` vertices.
    """
    _check_k(k)
    if coeffs not in ("witness", "indicator"):
        raise ValueError(f"unknown coefficient normalisation {coeffs!r}")
    if g.n < 1:
        raise ValueError("need at least one vertex")
    if g.n > PSUM_VERTEX_CAP:
        raise CapExceededError(
            f"power-sum expansion capped at {PSUM_VERTEX_CAP} vertices (got {g.n})"
        )
    key = (canonical_form(g), k, coeffs)
    hit = _PSUM_CACHE.get(key)
    if hit is not None:
        return PSeries(g.n, k, coeffs, dict(hit.terms))
    if k == 1:
        terms, _ = _psum_k1(graph_from_form(key[0]))  # type: ignore[arg-type]
    else:
        terms, _ = _psum_subsets(graph_from_form(key[0]), k, coeffs == "witness")  # type: ignore[arg-type]
    out = PSeries(g.n, k, coeffs, terms)
    _PSUM_CACHE[key] = out
    return PSeries(g.n, k, coeffs, dict(terms))


def admissible_for_subgraph(
    g: SimpleGraph, subset, k: int
) -> frozenset[PClass]:
    """Classes admissible by the spanning subgraph (V(G), subset).

    The subgraph splits into components; each contributes its own class set
    and the results combine as multiset unions (distinct symbol supports).
    """
    _check_k(k)
    subset = [tuple(sorted(e)) for e in subset]
    for e in subset:
        if e not in g.edges:
            raise ValueError(f"edge {e} is not an edge of the graph")
    if g.n > PSUM_VERTEX_CAP:
        raise CapExceededError(
            f"class enumeration capped at {PSUM_VERTEX_CAP} vertices (got {g.n})"
        )
    assembled: set[PClass] = {()}
    for comp in _subset_components(g.n, subset):
        vs = {v: i for i, v in enumerate(comp)}
        sub = SimpleGraph.from_edges(
            len(comp), ((vs[u], vs[v]) for u, v in subset if u in vs and v in vs)
        )
        classes = _component_classes(canonical_form(sub), k)
        assembled = {
            tuple(sorted(cls + (comp_cls,)))
            for cls in assembled
            for comp_cls in classes
        }
    return frozenset(assembled)


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------


def block_universe(m: int, k: int) -> list[tuple[int, ...]]:
    """All k-subsets of {1..m}, as sorted tuples."""
    return [tuple(c) for c in combinations(range(1, m + 1), k)]


def random_values(
    k: int, m: int, seed: int, prime: int = FIXED_PRIME
) -> dict[tuple[int, ...], int]:
    """Deterministic pseudorandom value map on the k-subsets of {1..m}."""
    rng = random.Random(f"{seed}:{k}:{m}")
    return {b: rng.randrange(1, prime) for b in block_universe(m, k)}


def direct_eval(
    g: SimpleGraph,
    k: int,
    m: int,
    values: dict[tuple[int, ...], int],
    prime: int = FIXED_PRIME,
) -> int:
    """Evaluate X_k(G) directly from its definition, modulo ``prime``.

    Sums prod_v values[phi(v)] over all maps phi into k-subsets of {1..m}
    with disjoint images on edges.  Independent of the power-sum machinery;
    used as the ground-truth oracle.
    """
    _check_k(k)
    if m < k:
        raise ValueError("need m >= k")
    blocks = block_universe(m, k)
    missing = [b for b in blocks if b not in values]
    if missing:
        raise ValueError(f"value map is missing blocks, e.g. {missing[0]}")
    sets = [set(b) for b in blocks]
    disjoint = [[not (sa & sb) for sb in sets] for sa in sets]
    vals = [values[b] % prime for b in blocks]

    total = 1
    for comp in graph_components(g):
        sub = induced_subgraph(g, comp)
        order, earlier = _search_order(sub)
        comp_total = 0
        chosen: list[int] = []

        def extend(i: int, running: int) -> None:
            nonlocal comp_total
            if i == len(order):
                comp_total = (comp_total + running) % prime
                return
            for bi in range(len(blocks)):
                if all(disjoint[bi][chosen[j]] for j in earlier[i]):
                    chosen.append(bi)
                    extend(i + 1, running * vals[bi] % prime)
                    chosen.pop()

        extend(0, 1)
        total = total * comp_total % prime
    return total


@lru_cache(maxsize=None)
def _component_blocks(form: str) -> tuple[int, tuple[tuple[int, ...], ...], int]:
    """(symbol count, blocks, automorphism count) for a component string."""
    w, pairs = parse_form(form)
    blocks = tuple(tuple(b) for b in pairs)
    if len(blocks[0]) == 1:
        aut = 1
    else:
        from .graphs import Multigraph

        aut = automorphism_count(Multigraph.from_pairs(w, blocks))
    return w, blocks, aut


def _orbit_sum(
    form: str, m: int, values: dict[tuple[int, ...], int], prime: int
) -> int:
    """Orbit sum of one connected component class, modulo ``prime``.

    Sums the block-monomial over injective symbol labellings into {1..m}
    and divides by the automorphism count of the labelled component; the
    division is exact over the integers (the automorphism group acts freely
    on injective labellings), which doubles as a check on the count.
    """
    w, blocks, aut = _component_blocks(form)
    if w > m:
        return 0
    total = 0
    for perm in permutations(range(1, m + 1), w):
        p = 1
        for b in blocks:
            key = tuple(sorted(perm[s] for s in b))
            p *= values[key]
        total += p
    assert total % aut == 0, "orbit sum not divisible by automorphism count"
    return (total // aut) % prime


def pseries_eval(
    series: PSeries,
    m: int,
    values: dict[tuple[int, ...], int],
    prime: int = FIXED_PRIME,
) -> int:
    """Evaluate a power-sum series at a finite value map, modulo ``prime``.

    Each class evaluates to the product of its components' orbit sums; the
    series evaluates to the coefficient-weighted sum.  For a witness series
    this equals ``direct_eval`` identically.
    """
    if m < series.k:
        raise ValueError("need m >= k")
    cache: dict[str, int] = {}
    total = 0
    for cls, coeff in sorted(series.terms.items()):
        prod = 1
        for comp in cls:
            if comp not in cache:
                cache[comp] = _orbit_sum(comp, m, values, prime)
            prod = prod * cache[comp] % prime
            if prod == 0:
                break
        total = (total + coeff * prod) % prime
    return total % prime


# ---------------------------------------------------------------------------
# the monomial (disjoint-support) basis
# ---------------------------------------------------------------------------
#
# The series stores coefficients over *tuples of connected classes*, and
# evaluation multiplies the components' orbit sums.  Those products are not
# linearly independent: sharing symbols between two components produces a
# merged class, e.g. for single blocks  O_b * O_b = O_bb + 2 O_(b)(b),  so
# the same function can have several representations.  (For k = 1 this is
# the familiar p_1^2 = m_2 + 2 m_11; the power sums themselves stay
# algebraically independent, so k = 1 representations are unique -- but for
# k = 2 they are not.)  Exact equality of invariants must therefore be
# decided in the basis of *disjoint-support* multiset classes, whose orbit
# sums have pairwise disjoint monomial supports.


def _class_rep_blocks(pclass: PClass) -> list[tuple[int, ...]]:
    """A labelled representative of a class: each component's canonical
    representative placed on its own symbol interval."""
    blocks: list[tuple[int, ...]] = []
    offset = 0
    for comp in pclass:
        w, pairs = parse_form(comp)
        blocks.extend(tuple(sorted(s + offset for s in b)) for b in pairs)
        offset += w
    return sorted(blocks)


def _class_of_blocks(blocks) -> PClass:
    if not blocks:
        return ()
    return lambda_class(Lambda.from_blocks(len(blocks[0]), blocks))


def _sub_multisets(items: list[tuple[int, ...]], size: int):
    """Distinct sub-multisets of the given size, each with its complement."""
    counts = Counter(items)
    distinct = sorted(counts)

    def rec(i: int, left: int, taken: list[tuple[int, ...]]):
        if left == 0:
            yield list(taken)
            return
        if i == len(distinct):
            return
        b = distinct[i]
        for j in range(min(counts[b], left), -1, -1):
            yield from rec(i + 1, left - j, taken + [b] * j)

    for sub in rec(0, size, []):
        rest = Counter(items)
        rest.subtract(Counter(sub))
        complement = sorted(rest.elements())
        yield sorted(sub), complement


@lru_cache(maxsize=None)
def _merge_expansion(t_class: PClass, comp: str) -> tuple[tuple[PClass, int], ...]:
    """Expansion of  O_{t_class} * O_{comp}  in disjoint-support classes.

    Candidate result classes are found by overlaying a labelled
    representative of ``comp`` on the representative of ``t_class`` in every
    injective way (fresh symbols included); the coefficient of a candidate D
    counts the splits of D's representative into a ``comp``-part and a
    ``t_class``-part, which is exactly the orbit-sum product coefficient.
    """
    t_blocks = _class_rep_blocks(t_class)
    w_t = sum(parse_form(c)[0] for c in t_class)
    w_c, c_pairs = parse_form(comp)
    candidates: set[PClass] = set()
    for image in permutations(range(w_t + w_c), w_c):
        c_blocks = [tuple(sorted(image[s] for s in b)) for b in c_pairs]
        candidates.add(_class_of_blocks(sorted(t_blocks + c_blocks)))
    out = []
    size = len(c_pairs)
    for cand in sorted(candidates):
        rep = _class_rep_blocks(cand)
        beta = 0
        for sub, complement in _sub_multisets(rep, size):
            if _class_of_blocks(sub) == (comp,) and _class_of_blocks(complement) == t_class:
                beta += 1
        assert beta > 0, "candidate class without a witnessing split"
        out.append((cand, beta))
    return tuple(out)


def true_basis(series: PSeries) -> dict[PClass, int]:
    """Coefficients of the series in the disjoint-support class basis.

    Linear in the series; each stored term (a product of connected classes)
    is expanded component by component via ``_merge_expansion``.  Vectors in
    this basis are canonical: two series are equal as functions of the block
    variables exactly when their vectors agree, so this is the right object
    for exact collision decisions.  (For a witness series of a graph, the
    coefficient of a class D here equals the number of proper block
    assignments realising one labelled representative of D.)
    """
    out: dict[PClass, int] = defaultdict(int)
    for term, coeff in series.terms.items():
        vec: dict[PClass, int] = {(): 1}
        for comp in term:
            nxt: dict[PClass, int] = defaultdict(int)
            for t_cls, c0 in vec.items():
                for merged, beta in _merge_expansion(t_cls, comp):
                    nxt[merged] += c0 * beta
            vec = dict(nxt)
        for cls, v in vec.items():
            out[cls] += coeff * v
    return {c: v for c, v in out.items() if v}


# ---------------------------------------------------------------------------
# support and tree classes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SupportReport:
    """Signed support vs. plain union of admissible classes.

    ``cancelled`` lists classes admissible by some spanning subgraph whose
    signed coefficients nevertheless sum to zero; empirically this stays
    empty at small sizes, but it is computed rather than assumed.
    """

    signed: frozenset[PClass]
    union: frozenset[PClass]
    cancelled: frozenset[PClass]


def lambda_support(g: SimpleGraph, k: int, *, coeffs: str = "witness") -> SupportReport:
    """Support of the series alongside the union over all spanning subgraphs."""
    _check_k(k)
    if g.n < 1:
        raise ValueError("need at least one vertex")
    if g.n > PSUM_VERTEX_CAP:
        raise CapExceededError(
            f"support computation capped at {PSUM_VERTEX_CAP} vertices (got {g.n})"
        )
    if k == 1:
        terms, union = _psum_k1(g, collect_union=True)
    else:
        terms, union = _psum_subsets(g, k, coeffs == "witness", collect_union=True)
    signed = frozenset(terms)
    return SupportReport(signed, frozenset(union), frozenset(union - signed))


def _form_is_tree(form: str) -> bool:
    n, pairs = parse_form(form)
    if any(len(p) != 2 for p in pairs):
        return False
    if len(pairs) != len(set(pairs)) or len(pairs) != n - 1:
        return False
    return is_tree(SimpleGraph.from_edges(n, pairs))


def lambda_t(g: SimpleGraph, k: int = 2) -> frozenset[PClass]:
    """Tree classes of the support: classes whose symbol graph is a tree
    on n+1 symbols.

    For k = 1 no class can span n+1 symbols, so the set is empty.  For a
    tree G the classes are found by testing each free tree on n+1 vertices
    for admissibility (only the full edge set can contribute a connected
    class, so admissibility and support membership agree); for other graphs
    the full series is computed and filtered.
    """
    _check_k(k)
    if k == 1:
        return frozenset()
    n = g.n
    if is_tree(g):
        if n > LAMBDA_T_CAP:
            raise CapExceededError(
                f"tree-class extraction capped at {LAMBDA_T_CAP} vertices (got {n})"
            )
        out = []
        for t in enumerate_trees(n + 1):
            lam = Lambda.from_blocks(2, t.edges)
            if is_admissible(lam, g):
                out.append((canonical_form(t),))
        return frozenset(out)
    series = kneser_psum(g, 2)
    return frozenset(
        cls
        for cls in series.terms
        if len(cls) == 1 and parse_form(cls[0])[0] == n + 1 and _form_is_tree(cls[0])
    )


def lambda_t_tilde(g: SimpleGraph) -> tuple[frozenset[PClass], tuple[int, ...]]:
    """The tree classes of minimal profile, and that minimal profile.

    Each tree class is profiled by the minimum rooted degree sequence of its
    symbol tree; the classes attaining the lexicographic minimum are the
    ones reconstruction deletes a leaf from.
    """
    from .profiles import min_degree_sequence

    classes = lambda_t(g, 2)
    if not classes:
        raise ValueError("graph has no tree classes in its support")
    profiled: dict[PClass, tuple[int, ...]] = {}
    for cls in classes:
        tree = graph_from_form(cls[0])
        assert isinstance(tree, SimpleGraph)
        profiled[cls] = min_degree_sequence(tree)
    best = min(profiled.values())
    return frozenset(c for c, p in profiled.items() if p == best), best


@dataclass(frozen=True)
class TreeAugmentation:
    """Output of ``augment_tree_lambda``: the block multiset, the per-vertex
    assignment realising it, and the rooted order it was read from."""

    lam: Lambda
    assignment: tuple[tuple[int, tuple[int, int]], ...]

    def mapping(self) -> dict[int, tuple[int, int]]:
        return dict(self.assignment)


def augment_tree_lambda(g: SimpleGraph) -> TreeAugmentation:
    """The canonical minimal-profile block multiset of a tree.

    Take a minimum rooted vertex sequence a_1, ..., a_n of T (rooted at the
    label-smallest minimum leaf) and give a_i the block {p_i, i}, where p_i
    is the position of its parent (0 for the root).  The symbol graph is T
    with one pendant symbol attached at the root, so its minimum profile is
    (1, 1 + r(T)_1, r(T)_2, ..., r(T)_n).
    """
    from .profiles import minimum_leaves, rooted_order

    leaf = minimum_leaves(g)[0]
    ro = rooted_order(g, leaf)
    assignment = []
    for i, v in enumerate(ro.order):
        pos = i + 1
        parent = ro.parent_pos[i] + 1  # root: -1 + 1 = 0
        assignment.append((v, (parent, pos)))
    lam = Lambda.from_blocks(2, (b for _, b in assignment))
    return TreeAugmentation(lam, tuple(sorted(assignment)))
