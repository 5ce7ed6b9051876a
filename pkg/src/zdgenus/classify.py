"""Mechanical verification of the genus classification facts.

Each TheoremId names one classification fact about ideal-based zero-divisor
graphs over finite commutative rings.  verify() rebuilds every concrete
instance the fact quantifies over -- catalog rings with their proper nonzero
ideals, plus synthesized products T x Z_t carrying the ideal 0 x Z_t whenever
a fact constrains an abstract pair through its quotient target T and ideal
size t -- recomputes the graph and genus data from scratch, and emits one
ClassificationReport per instance.  A run passes when every report agrees
and none is inconclusive.
"""

from __future__ import annotations

import enum
import json
from dataclasses import asdict, dataclass
from functools import lru_cache
from itertools import combinations

from .catalog import catalog_entries, catalog_ring
from .errors import CliqueHypothesisViolated
from .genus import (
    euler_lower_bound,
    exact_genus,
    is_planar,
    k4_attachment_bound,
    subgraph_lower_bound,
)
from .graphs import (
    SimpleGraph,
    clique_number,
    diameter,
    expand,
    find_biclique,
    find_complete_subgraph,
    girth,
    ideal_zero_divisor_graph,
    is_connected,
    make_graph,
    zero_divisor_graph,
)
from .ideals import (
    IdealSet,
    enumerate_ideals,
    is_prime,
    is_radical,
    minimal_primes_over,
    quotient,
)
from .rings import (
    RingTable,
    build_ring,
    is_local,
    iso_check,
    product_tables,
    quotient_algebra,
    units,
    zmod,
)

INF = float("inf")


class TheoremId(str, enum.Enum):
    """The classification facts the harness can re-verify."""

    REDMOND_PLANAR = "REDMOND_PLANAR"
    GENUS_ONE_CLIQUE_LE2 = "GENUS_ONE_CLIQUE_LE2"
    GENUS_ONE_CLIQUE3 = "GENUS_ONE_CLIQUE3"
    GENUS_GE2 = "GENUS_GE2"
    EXPANSION_BOUNDS = "EXPANSION_BOUNDS"
    QUOTIENT_GRAPH_LAWS = "QUOTIENT_GRAPH_LAWS"
    DIAMETER_LE3 = "DIAMETER_LE3"
    GIRTH_LE4 = "GIRTH_LE4"
    CLIQUE_MINIMAL_PRIMES = "CLIQUE_MINIMAL_PRIMES"
    LOCAL_ORDER_POWER = "LOCAL_ORDER_POWER"
    EXPANSION_GE2_BIG_RESIDUE = "EXPANSION_GE2_BIG_RESIDUE"
    ACYCLIC_RESIDUE_TWO = "ACYCLIC_RESIDUE_TWO"
    Z2_PRODUCT_GRAPHS = "Z2_PRODUCT_GRAPHS"
    TRIPLE_PRODUCT_GENUS = "TRIPLE_PRODUCT_GENUS"
    TRIANGLE_GRAPH_RINGS = "TRIANGLE_GRAPH_RINGS"
    ATTACHED_K4_GRAPH = "ATTACHED_K4_GRAPH"
    QUOTIENT_GENUS2_LIFT = "QUOTIENT_GENUS2_LIFT"
    GENUS_ONE_RESIDUE2_LIFT = "GENUS_ONE_RESIDUE2_LIFT"
    GENUS_ONE_EXAMPLES = "GENUS_ONE_EXAMPLES"
    GENUS_TWO_EXAMPLES = "GENUS_TWO_EXAMPLES"


@dataclass(frozen=True)
class ClassificationReport:
    """Outcome of one verification instance.

    verdict is what the classification fact predicts for the instance, fact
    is what direct computation observed, and the instance agrees when the two
    coincide.  inconclusive flags instances whose genus question could not be
    settled within budget; such reports never count as agreement.
    """

    theorem: str
    ring: str
    ideal: str
    ideal_size: int
    quotient: str
    graph_order: int
    diameter: float
    girth: float
    clique: int
    genus_lower: int | None
    genus_upper: int | None
    verdict: bool
    fact: bool
    agreement: bool
    inconclusive: bool
    detail: str

    def to_json(self) -> str:
        d = asdict(self)
        for key in ("diameter", "girth"):
            d[key] = None if d[key] == INF else d[key]
        return json.dumps(d, sort_keys=True)


# === Instance plumbing ======================================================


@lru_cache(maxsize=None)
def _zt(t: int) -> RingTable:
    return build_ring(zmod(t))


def synthesize(target: RingTable, size: int) -> tuple[RingTable, IdealSet]:
    """Smallest ring realizing the quotient target at the given ideal size:
    the product target x Z_size with the ideal 0 x Z_size."""
    table = product_tables(target, _zt(size))
    assert table.zero == 0
    return table, IdealSet(table, (1 << size) - 1)


def _graph_of(target_name: str, size: int) -> tuple[SimpleGraph, str]:
    table, ideal = synthesize(catalog_ring(target_name), size)
    return ideal_zero_divisor_graph(table, ideal), table.name


def _facts(g: SimpleGraph) -> dict:
    return {
        "graph_order": g.n,
        "diameter": diameter(g),
        "girth": girth(g),
        "clique": clique_number(g) if g.n <= 60 else -1,
    }


def _report(
    theorem: TheoremId,
    ring: str,
    ideal: str,
    ideal_size: int,
    quotient_name: str,
    g: SimpleGraph,
    verdict: bool,
    fact: bool,
    detail: str,
    lower: int | None = None,
    upper: int | None = None,
    inconclusive: bool = False,
) -> ClassificationReport:
    return ClassificationReport(
        theorem=theorem.value,
        ring=ring,
        ideal=ideal,
        ideal_size=ideal_size,
        quotient=quotient_name,
        genus_lower=lower,
        genus_upper=upper,
        verdict=verdict,
        fact=fact,
        agreement=(verdict == fact) and not inconclusive,
        inconclusive=inconclusive,
        detail=detail,
        **_facts(g),
    )


def _lower_bound_ge2(g: SimpleGraph, budget: int) -> tuple[int | None, str]:
    """Cheapest certified genus lower bound that reaches 2, with provenance.

    Falls back to the exhaustive search only when the closed-form bounds
    stall below 2; returns (None, reason) if even that is inconclusive."""
    eb = euler_lower_bound(g)
    if eb >= 2:
        return eb, f"euler bound {eb}"
    sb, prov = subgraph_lower_bound(g)
    if sb >= 2:
        return sb, f"subgraph {prov}"
    b = exact_genus(g, budget)
    if b.lower >= 2:
        return b.lower, "exhaustive search: " + "; ".join(b.provenance)
    if b.upper is None:
        return None, "inconclusive: " + "; ".join(b.provenance)
    return b.upper, "exact genus " + str(b.upper)


def _nonunits(t: RingTable) -> list[int]:
    us = {u.index for u in units(t)}
    return [a for a in range(t.order) if a not in us]


def _msq_zero(t: RingTable) -> bool:
    nu = _nonunits(t)
    return all(int(t.mul[a, b]) == t.zero for a in nu for b in nu)


def _residue_size(t: RingTable) -> int:
    return t.order // len(_nonunits(t)) if is_local(t) else 0


def _zero_ideal(t: RingTable) -> IdealSet:
    return IdealSet(t, 1 << t.zero)


# === Predicates =============================================================


def redmond_planar_predicate(roveri: RingTable, isize: int) -> bool:
    """Planarity test for the ideal-based graph, stated on the quotient:
    the quotient graph must be acyclic and the ideal small (size 2, or up
    to 4 when the quotient graph is a single vertex)."""
    g = zero_divisor_graph(roveri)
    return girth(g) == INF and (isize == 2 or (g.n == 1 and isize <= 4))


_CLIQUE_LE2_CASES: tuple[tuple[str, int], ...] = (
    ("Z_3×Z_3", 2),
    ("Z_2×Z_2", 4),
    ("Z_2×Z_3", 3),
    ("Z_2×Z_4", 2),
    ("Z_2×Z_2[x]/(x²)", 2),
    ("Z_4", 7),
    ("Z_2[x]/(x²)", 7),
    ("Z_9", 3),
    ("Z_3[x]/(x²)", 3),
    ("Z_8", 3),
    ("Z_2[x]/(x³)", 3),
    ("Z_4[x]/(x²-2,x³)", 3),
)

_CLIQUE3_TARGETS: tuple[str, ...] = (
    "Z_2×Z_2×Z_2",
    "Z_16",
    "Z_2[x,y]/(x²,xy,y²)",
    "Z_4[x]/(2x,x²)",
    "F_4[x]/(x²)",
    "Z_4[x]/(x²+x+1)",
)


def _z2_cross_field_order(t: RingTable) -> int | None:
    """Field order q when t is isomorphic to Z_2 x F_q, else None."""
    zero = _zero_ideal(t)
    if not is_radical(zero):
        return None
    primes = minimal_primes_over(zero)
    if len(primes) != 2:
        return None
    res = sorted(t.order // p.size for p in primes)
    if res[0] == 2 and res[0] * res[1] == t.order:
        return res[1]
    return None


def genus_one_clique_le2_predicate(roveri: RingTable, isize: int) -> bool:
    """Membership test for the genus-at-most-one classification when the
    quotient graph has clique number at most 2: the quotient must match one
    of the listed targets and the ideal must respect that target's cap."""
    w = clique_number(zero_divisor_graph(roveri))
    if w > 2:
        raise CliqueHypothesisViolated(
            f"clique number {w} > 2 for {roveri.name}")
    for name, cap in _CLIQUE_LE2_CASES:
        target = catalog_ring(name)
        if roveri.order == target.order and iso_check(roveri, target):
            return isize <= cap
    q = _z2_cross_field_order(roveri)
    if q is not None and q >= 4:
        return isize <= 2
    return False


def genus_one_clique3_predicate(roveri: RingTable, isize: int) -> bool:
    """Membership test for the genus-exactly-one classification when the
    quotient graph has clique number 3: ideal size 2 and one of six targets."""
    w = clique_number(zero_divisor_graph(roveri))
    if w != 3:
        raise CliqueHypothesisViolated(
            f"clique number {w} != 3 for {roveri.name}")
    if isize != 2:
        return False
    return any(
        roveri.order == catalog_ring(name).order
        and iso_check(roveri, catalog_ring(name))
        for name in _CLIQUE3_TARGETS
    )


def genus_ge2_predicate(roveri: RingTable) -> bool:
    """Hypothesis of the genus-at-least-two lift: the quotient graph has
    clique number at least 4 or is nonplanar."""
    g = zero_divisor_graph(roveri)
    return clique_number(g) >= 4 or not is_planar(g)


# === Attachment graph =======================================================


def attached_k4_graph() -> tuple[SimpleGraph, tuple[int, int, int, int]]:
    """The 14-vertex graph with a hub pair joined to twelve satellites, a
    K4 on four of them, and two matched satellite ladders; returns the graph
    and the K4 vertex quadruple.  Its genus is at least 2."""
    labels = ["u", "u'"] + [f"v{i}" for i in range(1, 7)] + [
        f"v{i}'" for i in range(1, 7)]
    u, up = 0, 1
    v = {i: 1 + i for i in range(1, 7)}
    vp = {i: 7 + i for i in range(1, 7)}
    edges = [(u, up)]
    for i in range(1, 7):
        edges += [(u, v[i]), (u, vp[i]), (up, v[i]), (up, vp[i])]
    quad = (v[5], vp[5], v[6], vp[6])
    edges += list(combinations(quad, 2))
    for i in (1, 3):
        edges += [
            (v[i], v[i + 1]), (v[i], vp[i + 1]),
            (vp[i], v[i + 1]), (vp[i], vp[i + 1]),
        ]
    return make_graph(14, edges, tuple(labels)), quad


def _square_zero_universal_witness(t: RingTable):
    """Vertex triples (u, {v5, v6}, matching) of the quotient graph that
    support the attachment-graph embedding: u a universal square-zero
    vertex, v5 v6 an adjacent square-zero pair, and the remaining four
    vertices split into two adjacent pairs."""
    g = zero_divisor_graph(t)
    if g.n != 7:
        return
    elems = sorted(
        x for x in range(t.order)
        if x != t.zero and any(
            int(t.mul[x, y]) == t.zero for y in range(t.order) if y != t.zero)
    )
    sq0 = [j for j, x in enumerate(elems) if int(t.mul[x, x]) == t.zero]
    for ju in sq0:
        if g.degree(ju) != g.n - 1:
            continue
        for j5, j6 in combinations([j for j in sq0 if j != ju], 2):
            if not g.has_edge(j5, j6):
                continue
            rest = [j for j in range(g.n) if j not in (ju, j5, j6)]
            for a, b in combinations(rest, 2):
                c, d = (x for x in rest if x not in (a, b))
                if g.has_edge(a, b) and g.has_edge(c, d):
                    yield ju, (j5, j6), ((a, b), (c, d))


def _h_embedding(t: RingTable):
    """Locate the attachment graph inside the ideal-based graph of the
    synthesized pair (t x Z_2, 0 x Z_2); returns (graph, vertex map, K4
    fiber quadruple) or None."""
    table, ideal = synthesize(t, 2)
    g = ideal_zero_divisor_graph(table, ideal)
    h, _ = attached_k4_graph()
    for ju, (j5, j6), ((a, b), (c, d)) in _square_zero_universal_witness(t):
        order = [ju, a, b, c, d, j5, j6]
        vmap = [2 * order[0], 2 * order[0] + 1]
        vmap += [2 * j for j in order[1:]]
        vmap += [2 * j + 1 for j in order[1:]]
        if all(g.has_edge(vmap[x], vmap[y]) for x, y in h.edges()):
            quad = (2 * j5, 2 * j5 + 1, 2 * j6, 2 * j6 + 1)
            return g, vmap, quad
    return None


# === Catalog sweep cache ====================================================


@dataclass
class _PairFacts:
    ring: str
    ideal: str
    size: int
    prime: bool
    radical: bool
    quotient_table: RingTable
    quotient_name: str
    quotient_graph: SimpleGraph
    graph: SimpleGraph


@lru_cache(maxsize=1)
def _catalog_by_order() -> dict[int, tuple[str, ...]]:
    out: dict[int, list[str]] = {}
    for e in catalog_entries():
        out.setdefault(catalog_ring(e.name).order, []).append(e.name)
    return {k: tuple(v) for k, v in out.items()}


def _match_catalog(table: RingTable) -> str:
    for name in _catalog_by_order().get(table.order, ()):
        if iso_check(table, catalog_ring(name)):
            return name
    return "other"


@lru_cache(maxsize=1)
def _pair_sweep() -> tuple[_PairFacts, ...]:
    """Every catalog ring with every proper nonzero ideal, with the quotient
    identified against the catalog and both graphs built."""
    out = []
    for entry in catalog_entries():
        table = catalog_ring(entry.name)
        for ideal in enumerate_ideals(table):
            if ideal.is_whole() or ideal.size == 1:
                continue
            q = quotient(table, ideal)
            out.append(_PairFacts(
                ring=entry.name,
                ideal=ideal.describe(),
                size=ideal.size,
                prime=is_prime(ideal),
                radical=is_radical(ideal),
                quotient_table=q.table,
                quotient_name=_match_catalog(q.table),
                quotient_graph=zero_divisor_graph(q.table),
                graph=ideal_zero_divisor_graph(table, ideal),
            ))
    return tuple(out)


def _locals() -> list[str]:
    return [e.name for e in catalog_entries() if is_local(catalog_ring(e.name))]


# === Per-theorem instance builders ==========================================


_REDMOND_SYNTH: tuple[tuple[str, int], ...] = (
    ("Z_8", 2), ("Z_8", 3),
    ("Z_2[x]/(x³)", 2),
    ("Z_4", 2), ("Z_4", 3), ("Z_4", 4), ("Z_4", 5),
    ("Z_2[x]/(x²)", 4),
    ("Z_2×Z_2", 2), ("Z_3×Z_3", 2), ("Z_2×Z_2×Z_2", 2),
)


def _verify_redmond(budget: int) -> list[ClassificationReport]:
    tid = TheoremId.REDMOND_PLANAR
    out = []
    for pf in _pair_sweep():
        if pf.prime:
            continue
        verdict = redmond_planar_predicate(pf.quotient_table, pf.size)
        fact = is_planar(pf.graph)
        out.append(_report(
            tid, pf.ring, pf.ideal, pf.size, pf.quotient_name, pf.graph,
            verdict, fact, "catalog pair planarity vs predicate"))
    for name, size in _REDMOND_SYNTH:
        g, ring_name = _graph_of(name, size)
        verdict = redmond_planar_predicate(catalog_ring(name), size)
        fact = is_planar(g)
        out.append(_report(
            tid, ring_name, f"0×Z_{size}", size, name, g,
            verdict, fact, "synthesized planarity vs predicate"))
    return out


_EXACT_ONE_AT_CAP = {
    "Z_3×Z_3", "Z_2×Z_2", "Z_2×Z_3", "Z_4", "Z_2[x]/(x²)",
    "Z_9", "Z_3[x]/(x²)", "Z_8", "Z_2[x]/(x³)", "Z_4[x]/(x²-2,x³)",
}

_Z2_FIELD_CASES: tuple[tuple[str, int], ...] = (
    ("Z_2×F_4", 2), ("Z_2×Z_5", 2), ("Z_2×Z_7", 2),
    ("Z_2×F_8", 2), ("Z_2×F_9", 2),
)


def _genus_one_positive(
    tid: TheoremId,
    name: str,
    size: int,
    budget: int,
    require_exact_one: bool,
) -> ClassificationReport:
    g, ring_name = _graph_of(name, size)
    b = exact_genus(g, budget)
    inconclusive = b.upper is None
    if require_exact_one:
        fact = (b.lower, b.upper) == (1, 1)
        claim = "genus exactly 1"
    else:
        fact = b.upper is not None and b.upper <= 1
        claim = "genus at most 1"
    detail = f"{claim}; " + "; ".join(b.provenance)
    if b.certificate is not None:
        detail += f"; certificate with {b.certificate.faces} faces"
    return _report(
        tid, ring_name, f"0×Z_{size}", size, name, g,
        True, fact, detail, b.lower, b.upper, inconclusive)


def _genus_one_negative(
    tid: TheoremId,
    name: str,
    size: int,
    budget: int,
    verdict: bool = False,
) -> ClassificationReport:
    g, ring_name = _graph_of(name, size)
    lo, prov = _lower_bound_ge2(g, budget)
    inconclusive = lo is None
    fact = bool(lo is not None and lo >= 2)
    return _report(
        tid, ring_name, f"0×Z_{size}", size, name, g,
        verdict, not fact if not inconclusive else True,
        f"lower bound via {prov}", lo, None, inconclusive)


def _verify_genus_one_clique_le2(budget: int) -> list[ClassificationReport]:
    tid = TheoremId.GENUS_ONE_CLIQUE_LE2
    out = []
    for name, cap in _CLIQUE_LE2_CASES + _Z2_FIELD_CASES:
        target = catalog_ring(name)
        for size in range(2, cap + 1):
            assert genus_one_clique_le2_predicate(target, size)
            exact_one = size == cap and name in _EXACT_ONE_AT_CAP
            out.append(_genus_one_positive(tid, name, size, budget, exact_one))
        assert not genus_one_clique_le2_predicate(target, cap + 1)
        out.append(_genus_one_negative(tid, name, cap + 1, budget))
    # non-listed quotient of matching clique number: genus must exceed 1
    control = catalog_ring("Z_12")
    assert not genus_one_clique_le2_predicate(control, 2)
    out.append(_genus_one_negative(tid, "Z_12", 2, budget))
    return out


def _verify_genus_one_clique3(budget: int) -> list[ClassificationReport]:
    tid = TheoremId.GENUS_ONE_CLIQUE3
    out = []
    for name in _CLIQUE3_TARGETS:
        target = catalog_ring(name)
        assert genus_one_clique3_predicate(target, 2)
        out.append(_genus_one_positive(tid, name, 2, budget, True))
        assert not genus_one_clique3_predicate(target, 3)
        out.append(_genus_one_negative(tid, name, 3, budget))
    control = catalog_ring("Z_2×Z_9")
    assert not genus_one_clique3_predicate(control, 2)
    out.append(_genus_one_negative(tid, "Z_2×Z_9", 2, budget))
    return out


def _verify_genus_ge2(budget: int) -> list[ClassificationReport]:
    tid = TheoremId.GENUS_GE2
    out = []
    for entry in catalog_entries():
        target = catalog_ring(entry.name)
        gq = zero_divisor_graph(target)
        if gq.n == 0 or not genus_ge2_predicate(target):
            continue
        if 2 * target.order > 64:
            continue  # no ring of order <= 64 realizes this quotient at size 2
        g, ring_name = _graph_of(entry.name, 2)
        lo, prov = _lower_bound_ge2(g, budget)
        inconclusive = lo is None
        fact = bool(lo is not None and lo >= 2)
        out.append(_report(
            tid, ring_name, "0×Z_2", 2, entry.name, g,
            True, fact, f"lower bound via {prov}", lo, None, inconclusive))
    for pf in _pair_sweep():
        if pf.quotient_graph.n == 0:
            continue
        if not genus_ge2_predicate(pf.quotient_table):
            continue
        lo, prov = _lower_bound_ge2(pf.graph, budget)
        inconclusive = lo is None
        fact = bool(lo is not None and lo >= 2)
        out.append(_report(
            tid, pf.ring, pf.ideal, pf.size, pf.quotient_name, pf.graph,
            True, fact, f"catalog pair; lower bound via {prov}",
            lo, None, inconclusive))
    return out


_EXPANSIONS: tuple[tuple[str, tuple[int, ...], int, int], ...] = (
    # base graph edges, expansion factor, expected genus
    ("K_2", (2,), 5, 3),
    ("K_5", (5,), 2, 3),
    ("K_{1,3}", (1, 3), 3, 2),
    ("K_{2,3}", (2, 3), 2, 2),
)


def _verify_expansion_bounds(budget: int) -> list[ClassificationReport]:
    from .graphs import complete_bipartite, complete_graph

    tid = TheoremId.EXPANSION_BOUNDS
    out = []
    for name, shape, t, expected in _EXPANSIONS:
        base = (complete_graph(shape[0]) if len(shape) == 1
                else complete_bipartite(*shape))
        g = expand(base, t)
        sb, prov = subgraph_lower_bound(g)
        b = exact_genus(g, budget)
        inconclusive = b.upper is None
        fact = sb >= 2 and b.lower >= 2 and b.upper == expected
        out.append(_report(
            tid, f"{name}^({t})", "-", 0, "-", g, True, fact,
            f"subgraph {prov} gives {sb}; exact genus "
            f"[{b.lower},{b.upper}] expected {expected}",
            b.lower, b.upper, inconclusive))
    return out


def _verify_quotient_graph_laws(budget: int) -> list[ClassificationReport]:
    tid = TheoremId.QUOTIENT_GRAPH_LAWS
    out = []
    for pf in _pair_sweep():
        g, gq = pf.graph, pf.quotient_graph
        order_law = g.n == pf.size * gq.n
        ge = expand(gq, pf.size)
        expansion_edges = set(ge.edges())
        graph_edges = set(g.edges())
        subgraph_law = ge.n == g.n and expansion_edges <= graph_edges
        equality = expansion_edges == graph_edges
        radical_law = equality == pf.radical
        table, ideal = synthesize(pf.quotient_table, pf.size)
        g2 = ideal_zero_divisor_graph(table, ideal)
        invariance = g2.n == g.n and set(g2.edges()) == graph_edges
        fact = order_law and subgraph_law and radical_law and invariance
        out.append(_report(
            tid, pf.ring, pf.ideal, pf.size, pf.quotient_name, g, True, fact,
            f"order law {order_law}; expansion subgraph {subgraph_law}; "
            f"equality iff radical {radical_law} (radical={pf.radical}); "
            f"synthesized-copy invariance {invariance}"))
    return out


def _verify_diameter(budget: int) -> list[ClassificationReport]:
    tid = TheoremId.DIAMETER_LE3
    out = []
    for pf in _pair_sweep():
        g = pf.graph
        connected = is_connected(g)
        d = diameter(g)
        fact = connected and d <= 3
        out.append(_report(
            tid, pf.ring, pf.ideal, pf.size, pf.quotient_name, g, True, fact,
            f"connected {connected}; diameter {d}"))
    return out


def _verify_girth(budget: int) -> list[ClassificationReport]:
    tid = TheoremId.GIRTH_LE4
    out = []
    for pf in _pair_sweep():
        gr = girth(pf.graph)
        fact = gr == INF or gr <= 4
        out.append(_report(
            tid, pf.ring, pf.ideal, pf.size, pf.quotient_name, pf.graph,
            True, fact, f"girth {gr}"))
    return out


def _verify_clique_minimal_primes(budget: int) -> list[ClassificationReport]:
    tid = TheoremId.CLIQUE_MINIMAL_PRIMES
    out = []
    for entry in catalog_entries():
        table = catalog_ring(entry.name)
        for ideal in enumerate_ideals(table):
            if ideal.is_whole() or not is_radical(ideal):
                continue
            primes = minimal_primes_over(ideal)
            if len(primes) < 2:
                continue
            g = ideal_zero_divisor_graph(table, ideal)
            w = clique_number(g)
            fact = w == len(primes)
            out.append(_report(
                tid, entry.name, ideal.describe(), ideal.size,
                _match_catalog(quotient(table, ideal).table), g, True, fact,
                f"clique {w} vs {len(primes)} minimal primes"))
    return out


def _verify_local_order_power(budget: int) -> list[ClassificationReport]:
    tid = TheoremId.LOCAL_ORDER_POWER
    out = []
    for name in _locals():
        table = catalog_ring(name)
        res = _residue_size(table)
        power = res
        while power < table.order:
            power *= res
        fact = power == table.order
        out.append(_report(
            tid, name, "-", 0, "-", zero_divisor_graph(table), True, fact,
            f"order {table.order}, residue field size {res}"))
    return out


def _verify_expansion_ge2_big_residue(budget: int) -> list[ClassificationReport]:
    tid = TheoremId.EXPANSION_GE2_BIG_RESIDUE
    out = []
    for name in _locals():
        table = catalog_ring(name)
        if _msq_zero(table) or _residue_size(table) < 3:
            continue
        g = expand(zero_divisor_graph(table), 2)
        lo, prov = _lower_bound_ge2(g, budget)
        inconclusive = lo is None
        fact = bool(lo is not None and lo >= 2)
        out.append(_report(
            tid, name, "-", 0, "-", g, True, fact,
            f"doubled graph lower bound via {prov}", lo, None, inconclusive))
    return out


def _verify_acyclic_residue_two(budget: int) -> list[ClassificationReport]:
    tid = TheoremId.ACYCLIC_RESIDUE_TWO
    out = []
    for name in _locals():
        table = catalog_ring(name)
        g = zero_divisor_graph(table)
        if g.n == 0 or _msq_zero(table) or girth(g) != INF:
            continue
        res = _residue_size(table)
        out.append(_report(
            tid, name, "-", 0, "-", g, True, res == 2,
            f"acyclic graph, nonzero square of the maximal ideal, "
            f"residue field size {res}"))
    return out


def _verify_z2_product_graphs(budget: int) -> list[ClassificationReport]:
    tid = TheoremId.Z2_PRODUCT_GRAPHS
    out = []
    z2 = _zt(2)
    for name in _locals():
        s = catalog_ring(name)
        if 2 * s.order > 64:
            continue  # product would exceed the supported ring order
        gs = zero_divisor_graph(s)
        table = product_tables(z2, s)
        g = zero_divisor_graph(table)
        if gs.n <= 1:
            fact = is_planar(g) and girth(g) == INF
            detail = f"small factor graph ({gs.n} vertices): planar and acyclic"
        else:
            k3 = find_complete_subgraph(g, 3)
            k23 = find_biclique(g, 2, 3)
            fact = k3 is not None and k23 is not None
            detail = (f"large factor graph ({gs.n} vertices): triangle "
                      f"{k3} and K_{{2,3}} {k23}")
        out.append(_report(
            tid, table.name, "-", 0, name, g, True, fact, detail))
    return out


_TRIPLE_NEGATIVE_FACTORS: tuple[tuple[str, ...], ...] = (
    ("Z_2", "Z_2", "Z_3"),
    ("Z_2", "Z_2", "Z_2", "Z_2"),
    ("Z_2", "Z_2", "Z_4"),
    ("Z_2", "Z_3", "Z_3"),
)


def _verify_triple_product_genus(budget: int) -> list[ClassificationReport]:
    tid = TheoremId.TRIPLE_PRODUCT_GENUS
    out = []
    cube = catalog_ring("Z_2×Z_2×Z_2")
    g = expand(zero_divisor_graph(cube), 2)
    b = exact_genus(g, budget)
    inconclusive = b.upper is None
    fact = b.upper is not None and b.upper <= 1
    out.append(_report(
        tid, "Z_2×Z_2×Z_2", "-", 0, "-", g, True, fact,
        f"doubled graph genus [{b.lower},{b.upper}]",
        b.lower, b.upper, inconclusive))
    for factors in _TRIPLE_NEGATIVE_FACTORS:
        table = catalog_ring(factors[0])
        for f in factors[1:]:
            table = product_tables(table, catalog_ring(f))
        name = "×".join(factors)
        g = expand(zero_divisor_graph(table), 2)
        lo, prov = _lower_bound_ge2(g, budget)
        inconclusive = lo is None
        fact = bool(lo is not None and lo >= 2)
        out.append(_report(
            tid, name, "-", 0, "-", g, False,
            not fact if not inconclusive else True,
            f"doubled graph lower bound via {prov}", lo, None, inconclusive))
    return out


_TRIANGLE_RINGS: tuple[str, ...] = (
    "Z_2[x,y]/(x²,xy,y²)",
    "Z_4[x]/(2x,x²)",
    "F_4[x]/(x²)",
    "Z_4[x]/(x²+x+1)",
)


def _verify_triangle_graph_rings(budget: int) -> list[ClassificationReport]:
    tid = TheoremId.TRIANGLE_GRAPH_RINGS
    out = []
    listed_tables = [catalog_ring(n) for n in _TRIANGLE_RINGS]
    for name in _locals():
        table = catalog_ring(name)
        g = zero_divisor_graph(table)
        is_triangle = g.n == 3 and g.m == 3
        listed = any(
            table.order == lt.order and iso_check(table, lt)
            for lt in listed_tables)
        if not (is_triangle or listed):
            continue
        fact = is_triangle and listed and _msq_zero(table)
        out.append(_report(
            tid, name, "-", 0, "-", g, True, fact,
            f"triangle graph {is_triangle}; listed {listed}; "
            f"square-zero maximal ideal {_msq_zero(table)}"))
    return out


_GENUS_TWO_TARGETS: tuple[str, ...] = (
    "Z_4[x,y]/(x²,y²,xy-2)",
    "Z_2[x,y]/(x²,y²)",
    "Z_4[x]/(x²)",
    "Z_2[x,y]/(x³,xy,y²-x²)",
    "Z_4[x]/(x³,x²-2x)",
    "Z_4[x,y]/(x³,x²-2,xy,y²-2)",
    "Z_8[x]/(x²-4,2x)",
)


def _verify_attached_k4_graph(budget: int) -> list[ClassificationReport]:
    tid = TheoremId.ATTACHED_K4_GRAPH
    out = []
    h, quad = attached_k4_graph()
    kb = k4_attachment_bound(h, quad)
    b = exact_genus(h, budget)
    inconclusive = b.upper is None
    fact = kb >= 2 and b.lower >= 2
    out.append(_report(
        tid, "attachment graph", "-", 0, "-", h, True, fact,
        f"attachment bound {kb}; exact genus [{b.lower},{b.upper}]",
        b.lower, b.upper, inconclusive))
    for name in _GENUS_TWO_TARGETS:
        target = catalog_ring(name)
        found = _h_embedding(target)
        if found is None:
            out.append(_report(
                tid, name, "0×Z_2", 2, name, zero_divisor_graph(target),
                True, False, "no attachment-graph embedding found"))
            continue
        g, vmap, fiber_quad = found
        kb = k4_attachment_bound(g, fiber_quad)
        fact = kb >= 2
        out.append(_report(
            tid, f"{name}×Z_2", "0×Z_2", 2, name, g, True, fact,
            f"attachment graph embedded via vertex map {vmap}; "
            f"attachment bound {kb}", kb, None))
    return out


def _extra_genus_two_local() -> RingTable:
    """An order-27 local ring whose maximal ideal squares to zero, giving a
    complete graph on 8 vertices; used to exercise the quotient lift when no
    catalog member has a provably genus-2 graph."""
    return build_ring(quotient_algebra(
        3, ("x", "y"), [("x^2", "0"), ("x*y", "0"), ("y^2", "0")],
        "Z_3[x,y]/(x²,xy,y²)", 27))


def _verify_quotient_genus2_lift(budget: int) -> list[ClassificationReport]:
    tid = TheoremId.QUOTIENT_GENUS2_LIFT
    out = []
    targets: list[RingTable] = []
    for entry in catalog_entries():
        table = catalog_ring(entry.name)
        gq = zero_divisor_graph(table)
        if gq.n == 0 or 2 * table.order > 64:
            continue
        lo = max(euler_lower_bound(gq), subgraph_lower_bound(gq)[0])
        if lo >= 2:
            targets.append(table)
    targets.append(_extra_genus_two_local())
    for target in targets:
        gq = zero_divisor_graph(target)
        qlo = max(euler_lower_bound(gq), subgraph_lower_bound(gq)[0])
        table, ideal = synthesize(target, 2)
        g = ideal_zero_divisor_graph(table, ideal)
        lo, prov = _lower_bound_ge2(g, budget)
        inconclusive = lo is None
        fact = bool(lo is not None and lo >= 2)
        out.append(_report(
            tid, table.name, "0×Z_2", 2, _match_catalog(target), g,
            True, fact,
            f"quotient graph lower bound {qlo}; lifted lower bound via {prov}",
            lo, None, inconclusive))
    return out


def _verify_genus_one_residue2_lift(budget: int) -> list[ClassificationReport]:
    tid = TheoremId.GENUS_ONE_RESIDUE2_LIFT
    out = []
    for name in _locals():
        table = catalog_ring(name)
        if _residue_size(table) != 2 or 2 * table.order > 64:
            continue
        gq = zero_divisor_graph(table)
        if gq.n == 0 or gq.m > 40 or is_planar(gq):
            continue
        bq = exact_genus(gq, budget)
        if (bq.lower, bq.upper) != (1, 1):
            continue
        g, ring_name = _graph_of(name, 2)
        lo, prov = _lower_bound_ge2(g, budget)
        inconclusive = lo is None
        fact = bool(lo is not None and lo >= 2)
        out.append(_report(
            tid, ring_name, "0×Z_2", 2, name, g, True, fact,
            f"quotient graph has genus exactly 1; lifted lower bound "
            f"via {prov}", lo, None, inconclusive))
    return out


_GENUS_ONE_EXAMPLES: tuple[tuple[str, int, bool], ...] = (
    # target, ideal size, whether the graph must be the complete K_6
    ("Z_2×Z_2×Z_2", 2, False),
    ("Z_16", 2, False),
    ("Z_8", 3, False),
    ("Z_2[x]/(x³)", 3, False),
    ("Z_4[x]/(x²-2,x³)", 3, False),
    ("Z_9", 3, True),
    ("Z_3[x]/(x²)", 3, True),
)


def _verify_genus_one_examples(budget: int) -> list[ClassificationReport]:
    tid = TheoremId.GENUS_ONE_EXAMPLES
    out = []
    for name, size, expect_k6 in _GENUS_ONE_EXAMPLES:
        g, ring_name = _graph_of(name, size)
        b = exact_genus(g, budget)
        inconclusive = b.upper is None
        fact = (b.lower, b.upper) == (1, 1)
        detail = f"genus [{b.lower},{b.upper}]"
        if expect_k6:
            complete = g.n == 6 and g.m == 15
            fact = fact and complete
            detail += f"; complete on 6 vertices {complete}"
        out.append(_report(
            tid, ring_name, f"0×Z_{size}", size, name, g, True, fact,
            detail, b.lower, b.upper, inconclusive))
    return out


def _verify_genus_two_examples(budget: int) -> list[ClassificationReport]:
    tid = TheoremId.GENUS_TWO_EXAMPLES
    out = []
    for name in _GENUS_TWO_TARGETS:
        g, ring_name = _graph_of(name, 2)
        lo, prov = _lower_bound_ge2(g, budget)
        inconclusive = lo is None
        fact = bool(lo is not None and lo >= 2)
        out.append(_report(
            tid, ring_name, "0×Z_2", 2, name, g, True, fact,
            f"lower bound via {prov}", lo, None, inconclusive))
    return out


# === Entry points ===========================================================


_BUILDERS = {
    TheoremId.REDMOND_PLANAR: _verify_redmond,
    TheoremId.GENUS_ONE_CLIQUE_LE2: _verify_genus_one_clique_le2,
    TheoremId.GENUS_ONE_CLIQUE3: _verify_genus_one_clique3,
    TheoremId.GENUS_GE2: _verify_genus_ge2,
    TheoremId.EXPANSION_BOUNDS: _verify_expansion_bounds,
    TheoremId.QUOTIENT_GRAPH_LAWS: _verify_quotient_graph_laws,
    TheoremId.DIAMETER_LE3: _verify_diameter,
    TheoremId.GIRTH_LE4: _verify_girth,
    TheoremId.CLIQUE_MINIMAL_PRIMES: _verify_clique_minimal_primes,
    TheoremId.LOCAL_ORDER_POWER: _verify_local_order_power,
    TheoremId.EXPANSION_GE2_BIG_RESIDUE: _verify_expansion_ge2_big_residue,
    TheoremId.ACYCLIC_RESIDUE_TWO: _verify_acyclic_residue_two,
    TheoremId.Z2_PRODUCT_GRAPHS: _verify_z2_product_graphs,
    TheoremId.TRIPLE_PRODUCT_GENUS: _verify_triple_product_genus,
    TheoremId.TRIANGLE_GRAPH_RINGS: _verify_triangle_graph_rings,
    TheoremId.ATTACHED_K4_GRAPH: _verify_attached_k4_graph,
    TheoremId.QUOTIENT_GENUS2_LIFT: _verify_quotient_genus2_lift,
    TheoremId.GENUS_ONE_RESIDUE2_LIFT: _verify_genus_one_residue2_lift,
    TheoremId.GENUS_ONE_EXAMPLES: _verify_genus_one_examples,
    TheoremId.GENUS_TWO_EXAMPLES: _verify_genus_two_examples,
}


def verify(theorem: TheoremId | str, budget: int = 10**8
           ) -> list[ClassificationReport]:
    """All instance reports for one classification fact."""
    tid = TheoremId(theorem)
    return _BUILDERS[tid](budget)


def verify_all(budget: int = 10**8
               ) -> dict[TheoremId, list[ClassificationReport]]:
    """Instance reports for every classification fact, in enum order."""
    return {tid: verify(tid, budget) for tid in TheoremId}


def all_pass(reports: list[ClassificationReport]) -> bool:
    return all(r.agreement and not r.inconclusive for r in reports)
