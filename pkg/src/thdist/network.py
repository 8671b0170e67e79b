"""Cluster networks and distance computations.

A cluster network is a node set with 0-weight equivalence edges and
1-weight step edges; distances are 0/1-weighted shortest paths computed by
deque BFS so that every finite answer carries a path witness mirroring the
b-sequence form (0 = equivalence move, 1 = step move). Values live in
N ∪ {infinity} with saturating arithmetic.

Edges are built from usable certificates (verified or asserted, never
refuted); on sentential same-language node pairs the logical-equivalence
and axiom-adding relations are additionally computed exactly from Sat-sets.
Asserted certificates taint results to status "conditional".
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Mapping

from .errors import LanguageError
from .relations import (
    ASSERTED,
    DECLARED,
    REFUTED,
    VERIFIED_BOUNDED,
    VERIFIED_EXACT,
    CertStatus,
    EdgeCertificate,
    verify_certificate,
)
from .semantics import (
    Caps,
    DEFAULT_BOUND,
    DEFAULT_CAPS,
    Theory,
    sat_assignments,
    spectrum,
)


# ---------------------------------------------------------------------------
# Extended naturals

@total_ordering
@dataclass(frozen=True, eq=True)
class ExtNat:
    """Natural number or infinity, totally ordered, saturating addition."""

    value: int | None = None  # None encodes infinity

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def __add__(self, other: "ExtNat") -> "ExtNat":
        if self.value is None or other.value is None:
            return INFINITY
        return ExtNat(self.value + other.value)

    def __lt__(self, other: "ExtNat") -> bool:
        if self.value is None:
            return False
        if other.value is None:
            return True
        return self.value < other.value

    def to_json(self):
        return "infinity" if self.value is None else self.value

    def __str__(self) -> str:
        return "infinity" if self.value is None else str(self.value)


INFINITY = ExtNat(None)


def fin(n: int) -> ExtNat:
    return ExtNat(n)


# ---------------------------------------------------------------------------
# Networks

@dataclass(frozen=True)
class NetEdge:
    a: str
    b: str
    weight: int  # 0 = equivalence, 1 = step
    kind: str
    status: CertStatus | None = None  # None: derived exactly from Sat-sets
    cert: EdgeCertificate | None = None
    directed: bool = False

    def label(self) -> str:
        if self.cert is not None:
            return self.cert.label()
        return f"{self.kind}(auto)"

    def state(self) -> str:
        return self.status.state if self.status is not None else VERIFIED_EXACT


@dataclass(frozen=True)
class ClusterNetwork:
    name: str
    mode: str  # symmetric | directed
    nodes: tuple[str, ...]
    edges: tuple[NetEdge, ...]

    def __post_init__(self):
        known = set(self.nodes)
        for e in self.edges:
            if e.a not in known or e.b not in known:
                raise LanguageError(f"edge {e.label()} references unknown node")
            if e.status is not None and e.status.state == REFUTED:
                raise LanguageError(f"refuted certificate {e.label()} in network")


_STATE_RANK = {VERIFIED_EXACT: 0, VERIFIED_BOUNDED: 1, ASSERTED: 2}


def _adjacency(net: ClusterNetwork) -> dict[str, list[tuple[str, int, NetEdge]]]:
    adj: dict[str, list[tuple[str, int, NetEdge]]] = {n: [] for n in net.nodes}
    for e in net.edges:
        adj[e.a].append((e.b, e.weight, e))
        if not e.directed:
            adj[e.b].append((e.a, e.weight, e))
    for entries in adj.values():
        entries.sort(key=lambda t: (t[1], _STATE_RANK.get(t[2].state(), 3)))
    return adj


@dataclass(frozen=True)
class PathStep:
    source: str
    target: str
    bit: int
    kind: str
    edge_label: str
    state: str

    def to_json(self) -> dict:
        return {
            "from": self.source,
            "to": self.target,
            "bit": self.bit,
            "kind": self.kind,
            "certificate": self.edge_label,
            "state": self.state,
        }


@dataclass(frozen=True)
class PathWitness:
    nodes: tuple[str, ...]
    steps: tuple[PathStep, ...]

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple(s.bit for s in self.steps)

    @property
    def length(self) -> int:
        return sum(self.bits)

    def to_json(self) -> list:
        return [s.to_json() for s in self.steps]


@dataclass(frozen=True)
class LowerBoundEvidence:
    kind: str  # spectrum-obstruction | growth-certificate | exhausted-search | none
    bound: ExtNat = fin(0)
    size: int | None = None
    factor: int | None = None
    ratio: tuple[int, int] | None = None
    detail: str = ""

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind, "bound": self.bound.to_json()}
        if self.size is not None:
            out["size"] = self.size
        if self.factor is not None:
            out["factor"] = self.factor
        if self.ratio is not None:
            out["ratio"] = list(self.ratio)
        if self.detail:
            out["detail"] = self.detail
        return out


EXHAUSTED = LowerBoundEvidence("exhausted-search", INFINITY, detail="no path in the network")


@dataclass(frozen=True)
class DistanceResult:
    value: ExtNat
    witness: PathWitness | None = None
    status: str = "exact"  # exact | bounded | conditional
    asserted_used: tuple[str, ...] = ()
    lower_bound: LowerBoundEvidence | None = None
    notes: tuple[str, ...] = ()

    def to_json(self) -> dict:
        out: dict = {
            "distance": self.value.to_json(),
            "status": self.status,
            "witness": self.witness.to_json() if self.witness else None,
            "lower_bound": self.lower_bound.to_json() if self.lower_bound else None,
        }
        if self.asserted_used:
            out["asserted_certificates"] = list(self.asserted_used)
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _result_from_path(value: int, witness: PathWitness) -> DistanceResult:
    states = [s.state for s in witness.steps]
    asserted = tuple(
        s.edge_label for s in witness.steps if s.state == ASSERTED
    )
    if asserted:
        status = "conditional"
    elif any(st == VERIFIED_BOUNDED for st in states):
        status = "bounded"
    else:
        status = "exact"
    return DistanceResult(fin(value), witness, status, asserted)


def _zero_one_bfs(net: ClusterNetwork, source: str) -> tuple[dict[str, int], dict[str, tuple[str, NetEdge]]]:
    adj = _adjacency(net)
    dist = {source: 0}
    parent: dict[str, tuple[str, NetEdge]] = {}
    dq: deque[tuple[int, str]] = deque([(0, source)])
    while dq:
        d, u = dq.popleft()
        if d > dist.get(u, math.inf):
            continue
        for v, w, edge in adj[u]:
            nd = d + w
            if nd < dist.get(v, math.inf):
                dist[v] = nd
                parent[v] = (u, edge)
                if w == 0:
                    dq.appendleft((nd, v))
                else:
                    dq.append((nd, v))
    return dist, parent


def _distance(net: ClusterNetwork, a: str, b: str) -> DistanceResult:
    if a not in net.nodes or b not in net.nodes:
        raise LanguageError(f"unknown node in distance query: {a!r} or {b!r}")
    dist, parent = _zero_one_bfs(net, a)
    if b not in dist:
        return DistanceResult(INFINITY, None, "exact", (), EXHAUSTED)
    steps: list[PathStep] = []
    node = b
    while node != a:
        prev, edge = parent[node]
        steps.append(
            PathStep(prev, node, edge.weight, edge.kind, edge.label(), edge.state())
        )
        node = prev
    steps.reverse()
    witness = PathWitness((a, *(s.target for s in steps)), tuple(steps))
    return _result_from_path(dist[b], witness)


def step_distance(net: ClusterNetwork, a: str, b: str) -> DistanceResult:
    """Minimum number of step edges on any path, equivalence edges free."""
    if net.mode != "symmetric":
        raise LanguageError("step_distance runs on symmetric networks")
    return _distance(net, a, b)


def directed_step_distance(net: ClusterNetwork, a: str, b: str) -> DistanceResult:
    """Directed variant: step edges are one-way, equivalence stays symmetric."""
    if net.mode != "directed":
        raise LanguageError("directed_step_distance runs on directed networks")
    return _distance(net, a, b)


# ---------------------------------------------------------------------------
# Building networks from theories and certificates

_EQUIV_KINDS = {"logical": ("equiv",), "defeq": ("defeq", "equiv")}
_STEP_KINDS = {
    "axiom": ("axiom-add", "collapse"),
    "concept": ("concept-add",),
    "faithful": ("faithful",),
}


def build_network(
    name: str,
    theories: Mapping[str, Theory],
    certificates: Iterable[EdgeCertificate] = (),
    equiv: str = "logical",
    step: str = "axiom",
    mode: str = "symmetric",
    bound: int = DEFAULT_BOUND,
    caps: Caps = DEFAULT_CAPS,
    auto_sentential: bool = True,
) -> ClusterNetwork:
    """Assemble a cluster network.

    Equivalence edges come from certificates of the chosen notion; step
    edges from the chosen step relation. Declared certificates are
    verified here; refuted ones never enter. On sentential same-language
    pairs the logical-equivalence and (for axiom networks) axiom-adding
    relations are added exactly from Sat-sets. Logical equivalence also
    yields defeq edges: the identity translations witness them.
    """
    if equiv not in _EQUIV_KINDS or step not in _STEP_KINDS:
        raise LanguageError(f"unknown network declaration {equiv}/{step}")
    step_kinds = set(_STEP_KINDS[step])
    if mode == "directed":
        if step == "concept":
            step_kinds.add("concept-remove")
        if step == "axiom":
            step_kinds.add("theorem-remove")
    equiv_kinds = set(_EQUIV_KINDS[equiv])
    nodes = tuple(theories)
    edges: list[NetEdge] = []
    for cert in certificates:
        if cert.kind not in step_kinds and cert.kind not in equiv_kinds:
            continue
        if cert.source not in theories or cert.target not in theories:
            continue
        if cert.status.state == DECLARED:
            verify_certificate(cert, theories, bound, caps)
        if not cert.status.usable:
            continue
        weight = 0 if cert.kind in equiv_kinds else 1
        edges.append(
            NetEdge(
                cert.source,
                cert.target,
                weight,
                cert.kind,
                cert.status,
                cert,
                directed=(mode == "directed" and weight == 1),
            )
        )
    if auto_sentential:
        names = list(nodes)
        for i, u in enumerate(names):
            for v in names[i + 1 :]:
                tu, tv = theories[u], theories[v]
                if not (tu.lang.is_sentential and tv.lang.is_sentential):
                    continue
                if not tu.lang.same_formulas(tv.lang):
                    continue
                su, sv = sat_assignments(tu), sat_assignments(tv)
                if su == sv:
                    edges.append(NetEdge(u, v, 0, "logical-equivalence"))
                elif step == "axiom":
                    if mode == "symmetric":
                        if sv <= su or su <= sv:
                            edges.append(NetEdge(u, v, 1, "axiom-add"))
                    else:
                        if sv <= su:
                            edges.append(NetEdge(u, v, 1, "axiom-add", directed=True))
                        if su <= sv:
                            edges.append(NetEdge(v, u, 1, "axiom-add", directed=True))
    return ClusterNetwork(name, mode, nodes, tuple(edges))


# ---------------------------------------------------------------------------
# Axiomatic distance and the classification theorem

def axiomatic_distance(
    theories: Mapping[str, Theory],
    a: str,
    b: str,
    certificates: Iterable[EdgeCertificate] = (),
    bound: int = DEFAULT_BOUND,
    caps: Caps = DEFAULT_CAPS,
) -> DistanceResult:
    """Step distance on (X, ≡, −). Theories on different languages are
    infinitely far apart: equivalence presupposes a common language."""
    ta, tb = theories[a], theories[b]
    if not ta.lang.same_formulas(tb.lang):
        return DistanceResult(
            INFINITY, None, "exact", (), EXHAUSTED,
            notes=("different languages admit no equivalence path",),
        )
    net = build_network(
        "axiomatic", theories, certificates, "logical", "axiom", "symmetric", bound, caps
    )
    return step_distance(net, a, b)


def classify_ad(
    theories: Mapping[str, Theory],
    a: str,
    b: str,
    certificates: Iterable[EdgeCertificate] = (),
    bound: int = DEFAULT_BOUND,
    caps: Caps = DEFAULT_CAPS,
    amalgamation: str | None = None,
) -> DistanceResult:
    """The four-way classification {0, 1, 2, infinity} of axiomatic
    distance, valid on classes with the (co-)amalgamation property."""
    from .relations import axiom_add_exists
    from .semantics import logically_equivalent

    if amalgamation not in ("verified", "asserted"):
        raise LanguageError(
            "classification needs the amalgamation or co-amalgamation property "
            "established for the catalog (pass amalgamation='verified'|'asserted')"
        )
    ta, tb = theories[a], theories[b]
    note = f"amalgamation property: {amalgamation}"
    if ta.lang.same_formulas(tb.lang):
        eq_res = logically_equivalent(ta, tb, bound, caps)
        if eq_res.equivalent:
            status = "exact" if eq_res.exact else "bounded"
            return DistanceResult(fin(0), None, status, notes=(note,))
        fwd = axiom_add_exists(ta, tb, bound, caps)
        bwd = axiom_add_exists(tb, ta, bound, caps)
        if fwd.answer == "yes" or bwd.answer == "yes":
            return DistanceResult(fin(1), None, "exact", notes=(note,))
        if fwd.answer == "unknown" or bwd.answer == "unknown":
            raise LanguageError(
                f"axiom-adding between {a} and {b} is undecided at bound {bound}"
            )
    connected = axiomatic_distance(theories, a, b, certificates, bound, caps)
    if not connected.value.is_finite:
        return DistanceResult(INFINITY, None, "exact", (), EXHAUSTED, notes=(note,))
    return DistanceResult(fin(2), connected.witness, connected.status, notes=(note,))


@dataclass(frozen=True)
class AmalgamationReport:
    amalgamation: str  # holds | fails | undecidable
    amalgamation_witness: tuple[str, str, str] | None
    co_amalgamation: str
    co_amalgamation_witness: tuple[str, str, str] | None
    vacuous: bool
    undecided_pairs: tuple[tuple[str, str], ...] = ()

    def to_json(self) -> dict:
        return {
            "amalgamation": self.amalgamation,
            "amalgamation_counterexample": self.amalgamation_witness,
            "co_amalgamation": self.co_amalgamation,
            "co_amalgamation_counterexample": self.co_amalgamation_witness,
            "vacuous": self.vacuous,
            "undecided_pairs": [list(p) for p in self.undecided_pairs],
        }


def _arrow_matrix(
    theories: Mapping[str, Theory],
    certificates: Iterable[EdgeCertificate],
    bound: int,
    caps: Caps,
) -> dict[tuple[str, str], bool | None]:
    """arrow[u, v] decides u <- v (v is u plus one axiom, up to logical
    equivalence). Sentential same-language pairs are exact; elsewhere only
    certificate-derived positives closed under facts (1)-(3) are known."""
    names = list(theories)
    arrow: dict[tuple[str, str], bool | None] = {}
    for u in names:
        for v in names:
            tu, tv = theories[u], theories[v]
            if not tu.lang.same_formulas(tv.lang):
                arrow[u, v] = False
            elif tu.lang.is_sentential:
                arrow[u, v] = sat_assignments(tv) <= sat_assignments(tu)
            else:
                arrow[u, v] = True if u == v else None
    for cert in certificates:
        if cert.kind in ("axiom-add", "collapse") and cert.status.verified:
            if cert.source in theories and cert.target in theories:
                arrow[cert.source, cert.target] = True
    equiv_pairs = [
        (c.source, c.target)
        for c in certificates
        if c.kind == "equiv" and c.status.verified
        and c.source in theories and c.target in theories
    ]
    changed = True
    while changed:
        changed = False
        for u in names:
            for v in names:
                if arrow[u, v]:
                    for w in names:
                        if arrow[v, w] and not arrow[u, w]:
                            arrow[u, w] = True  # fact (1): transitivity
                            changed = True
        for x, y in equiv_pairs:
            for w in names:
                for p, q in ((x, y), (y, x)):
                    if arrow[q, w] and not arrow[p, w]:  # fact (2)
                        arrow[p, w] = True
                        changed = True
                    if arrow[w, q] and not arrow[w, p]:  # fact (3)
                        arrow[w, p] = True
                        changed = True
    return arrow


def check_amalgamation(
    theories: Mapping[str, Theory],
    certificates: Iterable[EdgeCertificate] = (),
    bound: int = DEFAULT_BOUND,
    caps: Caps = DEFAULT_CAPS,
) -> AmalgamationReport:
    """Exhaustively check the theory (co-)amalgamation property over the
    catalog nodes. Reports the first counterexample triple, and errors on
    pairs whose axiom-adding status is undecidable."""
    names = list(theories)
    certificates = list(certificates)
    arrow = _arrow_matrix(theories, certificates, bound, caps)
    undecided = tuple(p for p, v in arrow.items() if v is None)

    def decide(premise, conclusion) -> tuple[str, tuple | None]:
        # a premise pair that is merely undecided still needs its conclusion
        # established, otherwise "holds" would be unsound
        nontrivial = False
        for t in names:
            for t1 in names:
                for t2 in names:
                    if t1 == t2:
                        continue
                    p1, p2 = premise(t, t1), premise(t, t2)
                    if p1 is False or p2 is False:
                        continue
                    decided = p1 is True and p2 is True
                    if decided:
                        nontrivial = True
                    witnesses = [conclusion(t1, t2, tp) for tp in names]
                    if any(w is True for w in witnesses):
                        continue
                    if not decided or any(w is None for w in witnesses):
                        return "undecidable", (t, t1, t2)
                    return "fails", (t, t1, t2)
        return ("holds", None) if nontrivial else ("holds-vacuously", None)

    am, am_w = decide(
        lambda t, ti: arrow[t, ti],
        lambda t1, t2, tp: (
            None
            if arrow[t1, tp] is None or arrow[t2, tp] is None
            else arrow[t1, tp] and arrow[t2, tp]
        ),
    )
    co, co_w = decide(
        lambda t, ti: arrow[ti, t],
        lambda t1, t2, tp: (
            None
            if arrow[tp, t1] is None or arrow[tp, t2] is None
            else arrow[tp, t1] and arrow[tp, t2]
        ),
    )
    vacuous = am == "holds-vacuously" and co == "holds-vacuously"
    return AmalgamationReport(
        "holds" if am.startswith("holds") else am,
        am_w,
        "holds" if co.startswith("holds") else co,
        co_w,
        vacuous,
        undecided,
    )


# ---------------------------------------------------------------------------
# Lower-bound certificates for conceptual distance

def lower_bound_certificates(
    t1: Theory,
    t2: Theory,
    bound: int = DEFAULT_BOUND,
    rank_cap: int | None = None,
    caps: Caps = DEFAULT_CAPS,
) -> LowerBoundEvidence:
    """Spectrum-based lower bounds on conceptual distance.

    A zero/nonzero spectrum mismatch at any computed size forces infinite
    distance. Otherwise, one concept step multiplies the size-k model
    count by at most 2^(k^m), m the maximal admitted rank, so the spectra
    ratio forces at least log_f(ratio) steps.
    """
    from .semantics import enumeration_feasible

    table1: dict[int, int] = {}
    table2: dict[int, int] = {}
    for k in range(1, bound + 1):
        if not (enumeration_feasible(t1, k, caps) and enumeration_feasible(t2, k, caps)):
            break
        table1[k] = spectrum(t1, k, caps)
        table2[k] = spectrum(t2, k, caps)
    for k in sorted(table1):
        c1, c2 = table1[k], table2[k]
        if (c1 == 0) != (c2 == 0):
            return LowerBoundEvidence(
                "spectrum-obstruction", INFINITY, size=k,
                ratio=(c1, c2),
                detail=f"I(T,{k})={c1} but I(T',{k})={c2}: finite distance "
                "preserves which sizes have models",
            )
    if rank_cap is None:
        return LowerBoundEvidence("none", fin(0), detail="no rank cap, no growth bound")
    best = LowerBoundEvidence("none", fin(0))
    for k in sorted(table1):
        c1, c2 = table1[k], table2[k]
        if c1 == 0 or c2 == 0:
            continue
        lo, hi = min(c1, c2), max(c1, c2)
        factor = 1 << (k**rank_cap)
        steps = 0
        acc = lo
        while acc < hi:
            acc *= factor
            steps += 1
        if steps > (best.bound.value or 0):
            best = LowerBoundEvidence(
                "growth-certificate", fin(steps), size=k, factor=factor,
                ratio=(hi, lo),
                detail=f"one step multiplies I(.,{k}) by at most {factor}",
            )
    return best


def conceptual_distance(
    theories: Mapping[str, Theory],
    a: str,
    b: str,
    certificates: Iterable[EdgeCertificate] = (),
    bound: int = DEFAULT_BOUND,
    rank_cap: int | None = None,
    caps: Caps = DEFAULT_CAPS,
) -> DistanceResult:
    """Step distance on (X, defeq, ~), with the strongest available lower
    bound attached. Distances are relative to the declared catalog; larger
    catalogs can only shrink them."""
    net = build_network(
        "conceptual", theories, certificates, "defeq", "concept", "symmetric", bound, caps
    )
    result = step_distance(net, a, b)
    evidence = lower_bound_certificates(theories[a], theories[b], bound, rank_cap, caps)
    notes = result.notes
    if result.value.is_finite:
        if evidence.kind == "spectrum-obstruction":
            notes = notes + (
                "spectrum obstruction contradicts the catalog path; "
                "an asserted or bounded certificate must be wrong",
            )
        elif evidence.bound > result.value:
            notes = notes + ("growth lower bound exceeds the path length",)
    return DistanceResult(
        result.value, result.witness, result.status, result.asserted_used,
        evidence, notes,
    )


def faithful_interpretation_distance(
    theories: Mapping[str, Theory],
    a: str,
    b: str,
    certificates: Iterable[EdgeCertificate] = (),
    bound: int = DEFAULT_BOUND,
    caps: Caps = DEFAULT_CAPS,
) -> DistanceResult:
    """Step distance on (X, ≡, I), I the symmetric faithful-interpretation
    relation supplied through certificates."""
    net = build_network(
        "faithful", theories, certificates, "logical", "faithful", "symmetric", bound, caps
    )
    return step_distance(net, a, b)


def bidirected_conceptual_distance(
    theories: Mapping[str, Theory],
    a: str,
    b: str,
    certificates: Iterable[EdgeCertificate] = (),
    bound: int = DEFAULT_BOUND,
    caps: Caps = DEFAULT_CAPS,
) -> DistanceResult:
    """Directed step distance on (X, defeq, ~> ∪ concept-removal); not
    symmetric, so query both orders to see the asymmetry."""
    net = build_network(
        "bidirected", theories, certificates, "defeq", "concept", "directed", bound, caps
    )
    return directed_step_distance(net, a, b)


# ---------------------------------------------------------------------------
# Exact sentential conceptual-distance solver

@dataclass(frozen=True)
class SolveResult:
    distance: ExtNat
    witness: PathWitness | None
    chain: tuple[Theory, ...]
    certificates: tuple[EdgeCertificate, ...]
    lower_bound: LowerBoundEvidence | None
    notes: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "distance": self.distance.to_json(),
            "witness": self.witness.to_json() if self.witness else None,
            "chain": [t.name for t in self.chain],
            "lower_bound": self.lower_bound.to_json() if self.lower_bound else None,
            "notes": list(self.notes),
        }


def _reachable_cardinalities(start: int, steps: int) -> tuple[int, int]:
    """Interval of |Sat| values reachable in `steps` one-concept moves:
    each move multiplies the count by a factor in [1, 2] or divides it so."""
    lo = start
    for _ in range(steps):
        lo = (lo + 1) // 2
    return max(1, lo), start << steps


def _ladder_theory(index: int, consts: int, sat_rows: list[tuple[bool, ...]]) -> Theory:
    # zero-padded names keep the fresh constant last in alphabetical order
    from .semantics import theory_from_sat
    from .syntax import Language

    lang = Language.make(
        f"cdsolve.L{consts}", {f"K{i + 1:03d}": 0 for i in range(consts)}, 0
    )
    return theory_from_sat(f"cdsolve.{index}", lang, sat_rows)


def sentential_cd_solve(
    t1: Theory, t2: Theory, bound: int = DEFAULT_BOUND, caps: Caps = DEFAULT_CAPS
) -> SolveResult:
    """Exact conceptual distance between sentential theories, searched over
    the space quotiented by definitional-equivalence class.

    The class of a consistent theory is its Sat-set cardinality (the
    empty-language theory sits apart: nothing translates into it), one
    concept step scales the cardinality by a factor in [1,2] up or down,
    and BFS over reachable cardinalities meets the growth lower bound.
    The returned chain materializes concrete ladder theories with verified
    certificates.
    """
    from .relations import _trivial_translations

    for t in (t1, t2):
        if not t.lang.is_sentential:
            raise LanguageError("sentential_cd_solve needs sentential theories")
    s1, s2 = len(sat_assignments(t1)), len(sat_assignments(t2))
    if s1 == 0 and s2 == 0:
        tr12, tr21 = _trivial_translations(t1, t2)
        cert = EdgeCertificate("defeq", t1.name, t2.name, tr12=tr12, tr21=tr21)
        verify_certificate(cert, {t1.name: t1, t2.name: t2}, bound, caps)
        witness = PathWitness(
            (t1.name, t2.name),
            (PathStep(t1.name, t2.name, 0, "defeq", cert.label(), cert.status.state),),
        )
        return SolveResult(fin(0), witness, (t1, t2), (cert,), None)
    if (s1 == 0) != (s2 == 0):
        evidence = LowerBoundEvidence(
            "spectrum-obstruction", INFINITY, size=1, ratio=(s1, s2),
            detail="an inconsistent theory is infinitely far from any consistent one",
        )
        return SolveResult(INFINITY, None, (), (), evidence)

    empty1 = not t1.lang.constants
    empty2 = not t2.lang.constants
    if empty1 and empty2:
        # both are the empty theory on the empty language
        return SolveResult(fin(0), PathWitness((t1.name,), ()), (t1,), (), None)

    lookup: dict[str, Theory] = {t1.name: t1, t2.name: t2}
    certs: list[EdgeCertificate] = []

    def add_cert(cert: EdgeCertificate) -> None:
        verify_certificate(cert, lookup, bound, caps)
        if not cert.status.verified:
            raise AssertionError(f"solver certificate failed: {cert.status}")
        certs.append(cert)

    evidence = lower_bound_certificates(t1, t2, bound=1, rank_cap=0, caps=caps)
    if s1 == s2 and not empty1 and not empty2:
        cert = EdgeCertificate("defeq", t1.name, t2.name)
        add_cert(cert)
        witness = PathWitness(
            (t1.name, t2.name),
            (PathStep(t1.name, t2.name, 0, "defeq", cert.label(), cert.status.state),),
        )
        return SolveResult(fin(0), witness, (t1, t2), tuple(certs), evidence)

    lo_th, hi_th = (t1, t2) if s1 <= s2 else (t2, t1)
    lo_n, hi_n = min(s1, s2), max(s1, s2)
    steps = 0
    while not (
        _reachable_cardinalities(lo_n, steps)[0]
        <= hi_n
        <= _reachable_cardinalities(lo_n, steps)[1]
    ):
        steps += 1
    notes: tuple[str, ...] = ()
    if (empty1 or empty2) and steps == 0:
        steps = 1  # leaving the empty language costs one concept step
        notes = ("empty-language endpoint: one step despite equal Sat size",)

    chain: list[Theory] = [lo_th]
    path_steps: list[PathStep] = []
    if not lo_th.lang.constants:
        base_consts = 0
        current = lo_th
    else:
        base_consts = max(1, (lo_n - 1).bit_length())
        ladder0 = _ladder_theory(0, base_consts, _first_rows(base_consts, lo_n))
        lookup[ladder0.name] = ladder0
        cert0 = EdgeCertificate("defeq", lo_th.name, ladder0.name)
        add_cert(cert0)
        path_steps.append(
            PathStep(lo_th.name, ladder0.name, 0, "defeq", cert0.label(), cert0.status.state)
        )
        chain.append(ladder0)
        current = ladder0

    size_now = lo_n
    for i in range(steps):
        target = min(size_now * 2, hi_n)
        prev_rows = sorted(sat_assignments(current))
        need = target - size_now
        rows: list[tuple[bool, ...]] = []
        for idx, row in enumerate(prev_rows):
            rows.append(row + (False,))
            if idx < need:
                rows.append(row + (True,))
        nxt = _ladder_theory(i + 1, base_consts + i + 1, rows)
        lookup[nxt.name] = nxt
        cert = EdgeCertificate("concept-add", current.name, nxt.name)
        add_cert(cert)
        path_steps.append(
            PathStep(current.name, nxt.name, 1, "concept-add", cert.label(), cert.status.state)
        )
        chain.append(nxt)
        current = nxt
        size_now = target

    if current is not hi_th:
        certN = EdgeCertificate("defeq", current.name, hi_th.name)
        add_cert(certN)
        path_steps.append(
            PathStep(current.name, hi_th.name, 0, "defeq", certN.label(), certN.status.state)
        )
        chain.append(hi_th)

    if lo_th is not t1:
        path_steps = [
            PathStep(s.target, s.source, s.bit, s.kind, s.edge_label, s.state)
            for s in reversed(path_steps)
        ]
        chain.reverse()
    witness = PathWitness(
        (chain[0].name, *(s.target for s in path_steps)), tuple(path_steps)
    )
    return SolveResult(fin(steps), witness, tuple(chain), tuple(certs), evidence, notes)


def _first_rows(constants: int, count: int) -> list[tuple[bool, ...]]:
    import itertools as it

    rows = list(it.product((False, True), repeat=constants))
    return rows[:count]


# ---------------------------------------------------------------------------
# Exports

def export_dot(net: ClusterNetwork) -> str:
    """Equivalence edges dashed and undirected; step edges solid, labeled
    by certificate kind, directed when the network is."""
    lines = [f'digraph "{net.name}" {{']
    for n in net.nodes:
        lines.append(f'  "{n}";')
    for e in net.edges:
        attrs = []
        if e.weight == 0:
            attrs.append("style=dashed")
            attrs.append("dir=none")
        else:
            attrs.append(f'label="{e.kind}"')
            if not e.directed:
                attrs.append("dir=none")
        if e.state() == ASSERTED:
            attrs.append('color=red')
        lines.append(f'  "{e.a}" -> "{e.b}" [{", ".join(attrs)}];')
    lines.append("}")
    return "\n".join(lines)


def export_json(net: ClusterNetwork) -> dict:
    return {
        "name": net.name,
        "mode": net.mode,
        "nodes": list(net.nodes),
        "edges": [
            {
                "from": e.a,
                "to": e.b,
                "weight": e.weight,
                "kind": e.kind,
                "directed": e.directed,
                "state": e.state(),
                "certificate": e.label(),
            }
            for e in net.edges
        ],
    }
