from __future__ import annotations

import itertools

import pytest

from thdist.errors import RemovalError, UnsupportedFragmentError
from thdist.relations import (
    EdgeCertificate,
    axiom_add_exists,
    check_axiom_add,
    check_concept_add,
    collapse_concepts,
    concept_removals,
    theorem_removals,
    verify_certificate,
)
from thdist.semantics import (
    Theory,
    logically_equivalent,
    sat_assignments,
    spectrum,
    theory_from_sat,
)
from thdist.syntax import Language, parse_formula

PQ = Language.make("PQ", {"P": 0, "Q": 0}, 0)
BIN = Language.make("Bin", {"R": 2}, 3)

POSET_AXIOMS = [
    "(forall v0 (R v0 v0))",
    "(forall v0 (forall v1 (implies (and (R v0 v1) (R v1 v0)) (= v0 v1))))",
    "(forall v0 (forall v1 (forall v2 (implies (and (R v0 v1) (R v1 v2)) (R v0 v2)))))",
]
EQREL_AXIOMS = [
    "(forall v0 (R v0 v0))",
    "(forall v0 (forall v1 (implies (R v0 v1) (R v1 v0))))",
    "(forall v0 (forall v1 (forall v2 (implies (and (R v0 v1) (R v1 v2)) (R v0 v2)))))",
]


def _sat_theories():
    rows = list(itertools.product((False, True), repeat=2))
    out = {}
    for bits in range(16):
        sat = [rows[i] for i in range(4) if bits >> i & 1]
        out[bits] = theory_from_sat(f"S{bits:02d}", PQ, sat)
    return out


def test_check_axiom_add_sentential():
    empty = Theory.make("free", PQ, [])
    tp = Theory.make("p", PQ, ["P"])
    assert check_axiom_add(empty, tp, parse_formula("P", PQ)).state == "verified-exact"
    bot = Theory.make("bot", PQ, ["(and P (not P))"])
    contradiction = parse_formula("(and Q (not Q))", PQ)
    assert check_axiom_add(tp, bot, contradiction).state == "verified-exact"
    tq = Theory.make("q", PQ, ["Q"])
    status = check_axiom_add(tp, tq, parse_formula("Q", PQ))
    assert status.state == "refuted"


def test_axiom_add_exists_sentential():
    tp = Theory.make("p", PQ, ["P"])
    tor = Theory.make("or", PQ, ["(or P Q)"])
    res = axiom_add_exists(tp, tor)
    assert res.answer == "no"  # Sat(or) is no subset of Sat(p)
    res = axiom_add_exists(tor, tp)
    assert res.answer == "yes"
    extended = Theory("ext", PQ, (*tor.axioms, res.phi))
    assert logically_equivalent(extended, tp).equivalent


def test_axiom_add_exists_first_order():
    empty = Theory.make("free", BIN, [])
    posets = Theory.make("posets", BIN, POSET_AXIOMS)
    eqrels = Theory.make("eqrels", BIN, EQREL_AXIOMS)
    res = axiom_add_exists(empty, posets)
    assert res.answer == "yes" and res.phi is not None
    res = axiom_add_exists(posets, eqrels, 4)
    assert res.answer == "no" and res.countermodel.size == 2
    res = axiom_add_exists(eqrels, posets, 4)
    assert res.answer == "no" and res.countermodel.size == 2
    # bounded inclusion without a proof stays unknown
    total = Theory.make("serial", BIN, ["(forall v0 (exists v1 (R v0 v1)))"])
    refl = Theory.make("refl", BIN, ["(forall v0 (R v0 v0))"])
    res = axiom_add_exists(total, refl, 3)
    assert res.answer == "unknown" and res.phi is not None


def test_axiom_add_language_mismatch():
    tp = Theory.make("p", PQ, ["P"])
    other = Theory.make("x", Language.make("X", {"P": 0}, 0), [])
    assert axiom_add_exists(tp, other).answer == "no"


def test_facts_one_to_three_exhaustively_on_two_constants():
    theories = _sat_theories()
    sats = {b: sat_assignments(t) for b, t in theories.items()}

    def arrow(a, b):
        return sats[b] <= sats[a]

    for a in theories:
        for b in theories:
            for c in theories:
                if arrow(a, b) and arrow(b, c):
                    assert arrow(a, c)  # (1) transitivity
                if sats[a] == sats[b] and arrow(b, c):
                    assert arrow(a, c)  # (2) equivalence on the left
                if arrow(a, b) and sats[b] == sats[c]:
                    assert arrow(a, c)  # (3) equivalence on the right


def test_concept_add_tstar_chain_and_refutation():
    l0 = Language.make("L0", {}, 0)
    l1 = Language.make("L1", {"C1": 0}, 0)
    t0 = Theory.make("t0", l0, [])
    t1 = Theory.make("t1", l1, [])
    status, symbol = check_concept_add(t0, t1)
    assert status.state == "verified-exact" and symbol == "C1"

    tp = Theory.make("free", Language.make("P1", {"P": 0}, 0), [])
    bad = Theory.make("bad", PQ, ["(not P)", "Q"])
    status, _ = check_concept_add(tp, bad)
    assert status.state == "refuted"


def test_concept_add_spectrum_growth_bound():
    base_lang = Language.make("K", {"IOb": 1, "W": 2}, 3)
    ext_lang = Language.make("KE", {"IOb": 1, "W": 2, "E": 1}, 3)
    base = Theory.make("base", base_lang, ["(exists v0 (IOb v0))"])
    ext = Theory.make("ext", ext_lang, [
        "(exists v0 (IOb v0))",
        "(exists v0 (and (IOb v0) (forall v1 (iff (E v1) (and (IOb v1) (W v0 v1))))))",
    ])
    status, symbol = check_concept_add(base, ext, 3)
    assert status.state == "verified-bounded"
    rank = ext_lang.rank(symbol)
    for k in (1, 2, 3):
        assert spectrum(ext, k) <= (1 << (k**rank)) * spectrum(base, k)


def test_concept_removals_theorem_case():
    t = theory_from_sat("t", PQ, [(True, True)])
    phi = parse_formula("P", PQ)
    removals = concept_removals(t, phi)
    sats = sorted(sorted(sat_assignments(r.theory)) for r in removals)
    assert sats == [[(False, False)], [(False, True)]]
    for r in removals:
        assert r.added_assignment is not None
        # maximality: the removal keeps falsity of phi with one new row
        assert not sat_assignments(r.theory) & sat_assignments(t)


def test_concept_removals_nontheorem_case_matches_paper_example():
    lang4 = Language.make("F4", {"P1": 0, "P2": 0, "P3": 0, "P4": 0}, 0)
    t2 = Theory.make("four-free", lang4, [])
    phi = parse_formula("(or (not (iff P2 P3)) (not (iff P3 P4)))", lang4)
    removals = concept_removals(t2, phi)
    assert len(removals) == 1 and removals[0].added_assignment is None
    sat = sat_assignments(removals[0].theory)
    assert len(sat) == 4  # all P2 = P3 = P4 rows
    assert all(row[1] == row[2] == row[3] for row in sat)


def test_concept_removal_errors():
    t = theory_from_sat("t", PQ, [(True, True)])
    taut = parse_formula("(or P (not P))", PQ)
    with pytest.raises(RemovalError):
        concept_removals(t, taut)
    fo = Theory.make("fo", BIN, [])
    with pytest.raises(UnsupportedFragmentError):
        concept_removals(fo, parse_formula("(R v0 v1)", BIN))


def test_theorem_removals():
    t = theory_from_sat("t", PQ, [(True, True)])
    phi = parse_formula("P", PQ)
    removals = theorem_removals(t, phi)
    sats = sorted(sorted(sat_assignments(r.theory)) for r in removals)
    assert sats == [
        [(False, False), (True, True)],
        [(False, True), (True, True)],
    ]
    free = Theory.make("free", PQ, [])
    with pytest.raises(RemovalError):
        theorem_removals(free, phi)  # phi is not a theorem of the free theory


def test_theorem_removal_round_trip():
    # removing phi and re-adding it as an axiom lands back on T exactly
    t = theory_from_sat("t", PQ, [(True, True), (True, False)])
    phi = parse_formula("P", PQ)
    for removal in theorem_removals(t, phi):
        status = check_axiom_add(removal.theory, t, phi)
        assert status.state == "verified-exact"


def test_collapse_is_axiom_adding():
    free = Theory.make("free", PQ, [])
    collapsed = collapse_concepts(free, parse_formula("P", PQ), parse_formula("Q", PQ))
    expected = Theory.make("iff", PQ, ["(iff P Q)"])
    assert logically_equivalent(collapsed, expected).equivalent
    # collapsing phi with a theorem is the same as adding phi
    tp = Theory.make("p", PQ, ["P"])
    taut = parse_formula("(or P (not P))", PQ)
    collapsed = collapse_concepts(tp, parse_formula("Q", PQ), taut)
    added = Theory.make("pq", PQ, ["P", "Q"])
    assert logically_equivalent(collapsed, added).equivalent
    # phi = psi collapses to the theory itself
    same = collapse_concepts(tp, parse_formula("Q", PQ), parse_formula("Q", PQ))
    assert logically_equivalent(same, tp).equivalent


def test_collapse_symmetric_subclass_first_order():
    # toy version of collapsing a.b=c with b.a=c: collapsing R(v0,v1)
    # with R(v1,v0) over the empty theory shapes the symmetric subclass
    empty = Theory.make("free", BIN, [])
    collapsed = collapse_concepts(
        empty, parse_formula("(R v0 v1)", BIN), parse_formula("(R v1 v0)", BIN)
    )
    symmetric = Theory.make("sym", BIN, [
        "(forall v0 (forall v1 (implies (R v0 v1) (R v1 v0))))",
    ])
    assert logically_equivalent(collapsed, symmetric, 4).equivalent


def test_verify_certificate_dispatch():
    free = Theory.make("free", PQ, [])
    tp = Theory.make("p", PQ, ["P"])
    lookup = {"free": free, "p": tp}
    cert = EdgeCertificate("axiom-add", "free", "p", axiom=parse_formula("P", PQ))
    assert verify_certificate(cert, lookup).state == "verified-exact"
    bad = EdgeCertificate("axiom-add", "free", "p", axiom=parse_formula("Q", PQ))
    assert verify_certificate(bad, lookup).state == "refuted"
    equiv = EdgeCertificate("equiv", "free", "p")
    assert verify_certificate(equiv, lookup).state == "refuted"
    defeq = EdgeCertificate("defeq", "free", "p")
    assert verify_certificate(defeq, lookup).state == "refuted"  # |Sat| differs


def test_concept_removal_maximality_pairwise():
    # the chosen subtheories are exactly the minimal Sat-supersets of
    # Sat(T) that still falsify phi somewhere (maximal consequence sets)
    t = theory_from_sat("t", PQ, [(True, True)])
    phi = parse_formula("P", PQ)
    rows = list(itertools.product((False, True), repeat=2))
    sat = sat_assignments(t)
    candidates = []
    for bits in range(16):
        superset = frozenset(rows[i] for i in range(4) if bits >> i & 1)
        if superset >= sat and any(not row[0] for row in superset):
            candidates.append(superset)
    minimal = [
        c for c in candidates if not any(o < c for o in candidates)
    ]
    chosen = sorted(
        sat | {r.added_assignment} for r in concept_removals(t, phi)
    )
    assert chosen == sorted(minimal)
    for removal in concept_removals(t, phi):
        removed_sat = sat_assignments(removal.theory)
        assert removed_sat  # consistent
        assert all(not row[0] for row in removed_sat)  # proves not-phi
