"""One-step relations between theories and their verifiable certificates.

Each edge of a cluster network is backed by an EdgeCertificate: a typed
witness (axiom added, symbol added, removal data, translation pair, ...)
with a verification status. Sentential instances are decided exactly from
Sat-sets; first-order instances are verified up to a size bound, and
first-order removals are accepted only as asserted certificates.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Mapping

from .errors import (
    CapExceededError,
    InconsistencyError,
    LanguageError,
    RemovalError,
    UnsupportedFragmentError,
)
from .concepts import check_defeq, check_interpretation, sentential_defeq_witness
from .semantics import (
    Caps,
    DEFAULT_BOUND,
    DEFAULT_CAPS,
    ConservativityResult,
    FiniteModel,
    Theory,
    assignment_model,
    conservative_extension,
    enumerate_models,
    is_true,
    logically_equivalent,
    sat_assignments,
    sat_of_formula,
    spectrum,
    theory_from_sat,
)
from .syntax import Formula, big_and, dnf_of_assignments, false_formula, iff, print_formula
from .translation import Translation

CERT_KINDS = (
    "equiv",
    "defeq",
    "axiom-add",
    "concept-add",
    "concept-remove",
    "theorem-remove",
    "collapse",
    "faithful",
)

DECLARED = "declared"
ASSERTED = "asserted"
VERIFIED_EXACT = "verified-exact"
VERIFIED_BOUNDED = "verified-bounded"
REFUTED = "refuted"


@dataclass(frozen=True)
class CertStatus:
    state: str
    bound: int | None = None
    witness: object = None
    note: str = ""

    @property
    def usable(self) -> bool:
        """May the network layer build an edge on this certificate?"""
        return self.state in (ASSERTED, VERIFIED_EXACT, VERIFIED_BOUNDED)

    @property
    def verified(self) -> bool:
        return self.state in (VERIFIED_EXACT, VERIFIED_BOUNDED)

    def to_json(self) -> dict:
        out: dict = {"state": self.state}
        if self.bound is not None:
            out["bound"] = self.bound
        if self.note:
            out["note"] = self.note
        if isinstance(self.witness, Formula):
            out["witness"] = print_formula(self.witness)
        elif self.witness is not None:
            out["witness"] = str(self.witness)
        return out


@dataclass
class EdgeCertificate:
    kind: str
    source: str
    target: str
    name: str = ""
    axiom: Formula | None = None
    symbol: str | None = None
    formula: Formula | None = None
    extra_assignment: tuple[bool, ...] | None = None
    phi: Formula | None = None
    psi: Formula | None = None
    tr12: Translation | None = None
    tr21: Translation | None = None
    tr: Translation | None = None
    bound_override: int | None = None
    status: CertStatus = field(default_factory=lambda: CertStatus(DECLARED))

    def label(self) -> str:
        return self.name or f"{self.kind}:{self.source}->{self.target}"


# ---------------------------------------------------------------------------
# Axiom adding (the <- relation) and collapsing

def check_axiom_add(
    t: Theory, t2: Theory, phi: Formula, bound: int = DEFAULT_BOUND, caps: Caps = DEFAULT_CAPS
) -> CertStatus:
    """Does T + phi axiomatize t2? Exact on Sat-sets in the sentential case."""
    if not t.lang.same_formulas(t2.lang):
        raise LanguageError("axiom adding keeps the language fixed")
    if t.lang.is_sentential:
        expected = sat_assignments(t) & sat_of_formula(t.lang, phi)
        actual = sat_assignments(t2)
        if expected == actual:
            return CertStatus(VERIFIED_EXACT)
        row = sorted(expected ^ actual)[0]
        return CertStatus(
            REFUTED,
            witness=assignment_model(t.lang, row),
            note="Sat(T) ∩ Sat(phi) differs from Sat(T')",
        )
    extended = Theory(f"{t.name}+axiom", t.lang, (*t.axioms, phi))
    res = logically_equivalent(extended, t2, bound, caps)
    if res.equivalent:
        return CertStatus(VERIFIED_BOUNDED, bound=bound)
    return CertStatus(
        REFUTED,
        bound=None if res.exact else res.bound,
        witness=res.witness_model or res.witness_formula,
        note=res.reason,
    )


@dataclass(frozen=True)
class AxiomAddAnswer:
    answer: str  # yes | no | unknown
    phi: Formula | None = None
    countermodel: FiniteModel | None = None
    exact: bool = True
    bound: int | None = None
    note: str = ""


def axiom_add_exists(
    t: Theory, t2: Theory, bound: int = DEFAULT_BOUND, caps: Caps = DEFAULT_CAPS
) -> AxiomAddAnswer:
    """Is there any phi with T + phi equivalent to t2 (T <- T')?

    Sentential: exactly when Sat(t2) is included in Sat(t); the canonical
    DNF of Sat(t2) then witnesses. First-order: model inclusion refutable
    by countermodel up to the bound; provable only when t's axioms already
    sit inside t2's, otherwise unknown-bounded with the candidate axiom.
    """
    if not t.lang.same_formulas(t2.lang):
        return AxiomAddAnswer("no", exact=True, note="language mismatch")
    if t.lang.is_sentential:
        s1, s2 = sat_assignments(t), sat_assignments(t2)
        if s2 <= s1:
            return AxiomAddAnswer("yes", dnf_of_assignments(t.lang, s2))
        row = sorted(s2 - s1)[0]
        return AxiomAddAnswer(
            "no", countermodel=assignment_model(t.lang, row),
            note="a model of T' is no model of T",
        )
    candidate = big_and(t.lang, list(t2.axioms))
    if set(t.axioms) <= set(t2.axioms):
        return AxiomAddAnswer("yes", candidate, note="axioms of T are axioms of T'")
    for k in range(1, bound + 1):
        try:
            models = enumerate_models(t2, k, caps)
        except CapExceededError:
            return AxiomAddAnswer(
                "unknown", candidate, exact=False, bound=k - 1,
                note=f"cap reached before size {k}",
            )
        for m in models:
            if not all(is_true(m, ax) for ax in t.axioms):
                return AxiomAddAnswer(
                    "no", countermodel=m,
                    note=f"size-{k} model of {t2.name} violates {t.name}",
                )
    return AxiomAddAnswer(
        "unknown", candidate, exact=False, bound=bound,
        note="model inclusion holds up to the bound but is not proved",
    )


def collapse_concepts(t: Theory, phi: Formula, psi: Formula) -> Theory:
    """Identify two concepts: T + (phi <-> psi). A special case of axiom
    adding, and conversely adding phi collapses phi with any theorem."""
    return Theory(f"{t.name}|collapse", t.lang, (*t.axioms, iff(phi, psi)))


# ---------------------------------------------------------------------------
# One-concept extension (the ~> relation)

def _language_diff(t: Theory, t2: Theory) -> str:
    small = dict(t.lang.symbols)
    big = dict(t2.lang.symbols)
    extra = [s for s in big if s not in small]
    if (
        len(extra) != 1
        or any(big.get(s) != r for s, r in small.items())
        or t.lang.var_bound != t2.lang.var_bound
    ):
        raise LanguageError(
            f"one-concept extension needs L' = L plus one symbol "
            f"({t.lang.name} vs {t2.lang.name})"
        )
    return extra[0]


def check_concept_add(
    t: Theory, t2: Theory, bound: int = DEFAULT_BOUND, caps: Caps = DEFAULT_CAPS
) -> tuple[CertStatus, str]:
    """T ~> T': languages differ by one symbol and T' is conservative
    over T. Returns the status and the added symbol."""
    symbol = _language_diff(t, t2)
    res = conservative_extension(t, t2, bound, caps)
    return _status_of_conservativity(res, bound), symbol


def _status_of_conservativity(res: ConservativityResult, bound: int) -> CertStatus:
    if res.holds:
        if res.exact:
            return CertStatus(VERIFIED_EXACT)
        return CertStatus(VERIFIED_BOUNDED, bound=res.bound)
    return CertStatus(
        REFUTED,
        bound=None if res.exact else res.bound,
        witness=res.witness_formula or res.witness_model,
        note=res.detail or "conservativity fails",
    )


# ---------------------------------------------------------------------------
# Concept removal and theorem removal (sentential exact mode only)

@dataclass(frozen=True)
class Removal:
    theory: Theory
    added_assignment: tuple[bool, ...] | None


def concept_removals(t: Theory, phi: Formula) -> list[Removal]:
    """All concept-removals of phi from T per the maximal-subtheory reading.

    If T proves phi, the maximal consistent subtheories of Cn(T) not
    proving phi add exactly one falsifying assignment m, and the removal
    pins Sat = {m}. If T does not prove phi, Cn(T) itself is the unique
    maximal subtheory and the single removal has Sat(T) ∩ Sat(¬phi).
    Tautologies admit no removal.
    """
    if not t.lang.is_sentential:
        raise UnsupportedFragmentError(
            "first-order concept removal is not computed; assert the certificate"
        )
    sat = sat_assignments(t)
    if not sat:
        raise InconsistencyError(f"{t.name} is inconsistent")
    falsifiers = frozenset(
        row for row in sat_of_formula(t.lang, phi) ^ _all_rows(t.lang)
    )
    if not falsifiers:
        raise RemovalError("phi is a tautology; no consistent subtheory loses it")
    overlap = sat & falsifiers
    if overlap:
        return [
            Removal(theory_from_sat(f"{t.name}-minus", t.lang, sorted(overlap)), None)
        ]
    return [
        Removal(theory_from_sat(f"{t.name}-minus-{i}", t.lang, [m]), m)
        for i, m in enumerate(sorted(falsifiers))
    ]


def theorem_removals(t: Theory, phi: Formula) -> list[Removal]:
    """Maximal consistent subtheories of Cn(T) that do not prove phi:
    one per falsifying assignment m, with Sat = Sat(T) ∪ {m}."""
    if not t.lang.is_sentential:
        raise UnsupportedFragmentError(
            "first-order theorem removal is not computed; assert the certificate"
        )
    sat = sat_assignments(t)
    if not sat:
        raise InconsistencyError(f"{t.name} is inconsistent")
    falsifiers = sat_of_formula(t.lang, phi) ^ _all_rows(t.lang)
    if sat & falsifiers:
        raise RemovalError(f"{t.name} does not prove the formula")
    if not falsifiers:
        raise RemovalError("phi is a tautology; no consistent subtheory loses it")
    return [
        Removal(
            theory_from_sat(f"{t.name}-unprove-{i}", t.lang, sorted(sat | {m})), m
        )
        for i, m in enumerate(sorted(falsifiers))
    ]


def _all_rows(lang) -> frozenset[tuple[bool, ...]]:
    import itertools

    return frozenset(itertools.product((False, True), repeat=len(lang.constants)))


# ---------------------------------------------------------------------------
# Certificate verification

def _trivial_translations(t1: Theory, t2: Theory) -> tuple[Translation, Translation]:
    """Translation pair between inconsistent theories: images are all falsum."""
    tr12 = Translation.make(
        t1.lang, t2.lang,
        {s: false_formula(t2.lang) for s, _ in t1.lang.symbols},
    )
    tr21 = Translation.make(
        t2.lang, t1.lang,
        {s: false_formula(t1.lang) for s, _ in t2.lang.symbols},
    )
    return tr12, tr21


def _retry_bounded(fn: Callable[[int], CertStatus], bound: int) -> CertStatus:
    """Verify at the strongest achievable bound: back off when the
    enumeration caps out, recording where we stopped."""
    for b in range(bound, 0, -1):
        try:
            status = fn(b)
        except CapExceededError:
            continue
        if b < bound and status.state == VERIFIED_BOUNDED:
            return replace(status, note=(status.note + f" (cap stopped at {b})").strip())
        return status
    raise CapExceededError("verification infeasible even at size 1")


def verify_certificate(
    cert: EdgeCertificate,
    lookup: Mapping[str, Theory],
    bound: int = DEFAULT_BOUND,
    caps: Caps = DEFAULT_CAPS,
) -> CertStatus:
    """Verify one certificate to its strongest achievable status and
    record the result on the certificate."""
    t1 = lookup[cert.source]
    t2 = lookup[cert.target]
    k = cert.bound_override or bound
    sentential = t1.lang.is_sentential and t2.lang.is_sentential

    def finish(status: CertStatus) -> CertStatus:
        cert.status = status
        return status

    try:
        if cert.kind == "equiv":
            def run_eq(b: int) -> CertStatus:
                res = logically_equivalent(t1, t2, b, caps)
                if res.equivalent:
                    state = VERIFIED_EXACT if res.exact else VERIFIED_BOUNDED
                    return CertStatus(state, None if res.exact else res.bound)
                return CertStatus(
                    REFUTED,
                    witness=res.witness_model or res.witness_formula,
                    note=res.reason,
                )

            return finish(_retry_bounded(run_eq, k))

        if cert.kind == "defeq":
            if cert.tr12 is None or cert.tr21 is None:
                if cert.status.state == ASSERTED:
                    return finish(
                        CertStatus(ASSERTED, note="no translations supplied; taken on trust")
                    )
                if not sentential:
                    raise UnsupportedFragmentError(
                        f"{cert.label()}: first-order defeq needs translations"
                    )
                if not sat_assignments(t1) and not sat_assignments(t2):
                    cert.tr12, cert.tr21 = _trivial_translations(t1, t2)
                else:
                    pair = sentential_defeq_witness(t1, t2, k)
                    if pair is None:
                        return finish(
                            CertStatus(
                                REFUTED,
                                note="no witness exists (Sat-set sizes differ or "
                                "one language has no formulas)",
                            )
                        )
                    cert.tr12, cert.tr21 = pair
            def run_de(b: int) -> CertStatus:
                rep = check_defeq(cert.tr12, cert.tr21, t1, t2, b, caps)
                if rep.verdict == "defeq":
                    state = VERIFIED_EXACT if rep.exact else VERIFIED_BOUNDED
                    return CertStatus(state, rep.bound, note=rep.note)
                return CertStatus(
                    REFUTED, rep.bound,
                    witness=rep.witness_model or rep.witness_formula,
                    note=rep.note,
                )

            return finish(_retry_bounded(run_de, k))

        if cert.kind == "axiom-add":
            if cert.axiom is None:
                raise LanguageError(f"{cert.label()}: axiom-add needs :axiom")
            return finish(
                _retry_bounded(lambda b: check_axiom_add(t1, t2, cert.axiom, b, caps), k)
            )

        if cert.kind == "collapse":
            if cert.phi is None or cert.psi is None:
                raise LanguageError(f"{cert.label()}: collapse needs :phi and :psi")
            phi_iff_psi = iff(cert.phi, cert.psi)
            return finish(
                _retry_bounded(lambda b: check_axiom_add(t1, t2, phi_iff_psi, b, caps), k)
            )

        if cert.kind == "concept-add":
            def run(b: int) -> CertStatus:
                status, symbol = check_concept_add(t1, t2, b, caps)
                if cert.symbol is not None and cert.symbol != symbol:
                    return CertStatus(
                        REFUTED, note=f"added symbol is {symbol}, not {cert.symbol}"
                    )
                cert.symbol = symbol
                if status.usable:
                    # one concept step grows the spectrum by at most 2^(k^m)
                    rank = t2.lang.rank(symbol)
                    for size in range(1, min(b, 3) + 1):
                        grown = spectrum(t2, size, caps)
                        limit = (1 << (size**rank)) * spectrum(t1, size, caps)
                        if grown > limit:
                            return CertStatus(
                                REFUTED,
                                note=f"I(T',{size})={grown} exceeds "
                                f"2^({size}^{rank})*I(T,{size})={limit}",
                            )
                return status

            return finish(_retry_bounded(run, k))

        if cert.kind in ("concept-remove", "theorem-remove"):
            if not sentential:
                if cert.status.state == ASSERTED:
                    return finish(
                        CertStatus(ASSERTED, note="first-order removal taken on trust")
                    )
                raise UnsupportedFragmentError(
                    f"{cert.label()}: first-order removals are only accepted asserted"
                )
            if cert.formula is None:
                if cert.status.state == ASSERTED:
                    return finish(
                        CertStatus(ASSERTED, note="no removal data; taken on trust")
                    )
                raise LanguageError(f"{cert.label()}: removal needs :formula")
            if not t1.lang.same_formulas(t2.lang):
                raise LanguageError(f"{cert.label()}: removal keeps the language fixed")
            remover = concept_removals if cert.kind == "concept-remove" else theorem_removals
            candidates = remover(t1, cert.formula)
            if cert.extra_assignment is not None:
                candidates = [
                    r for r in candidates if r.added_assignment == cert.extra_assignment
                ]
            target_sat = sat_assignments(t2)
            for r in candidates:
                if sat_assignments(r.theory) == target_sat:
                    return finish(CertStatus(VERIFIED_EXACT))
            return finish(
                CertStatus(
                    REFUTED,
                    note=f"{t2.name} matches none of the {len(candidates)} removals",
                )
            )

        if cert.kind == "faithful":
            if cert.tr is None:
                if cert.status.state == ASSERTED:
                    return finish(
                        CertStatus(ASSERTED, note="no translation supplied; taken on trust")
                    )
                raise LanguageError(f"{cert.label()}: faithful needs :tr")

            def run_f(b: int) -> CertStatus:
                rep = check_interpretation(cert.tr, t1, t2, b, caps)
                if rep.verdict == "faithful":
                    state = VERIFIED_EXACT if rep.exact else VERIFIED_BOUNDED
                    return CertStatus(state, rep.bound, note=rep.note)
                return CertStatus(
                    REFUTED, rep.bound,
                    witness=rep.witness_model or rep.witness_formula,
                    note=rep.note or f"verdict {rep.verdict}",
                )

            return finish(_retry_bounded(run_f, k))

        raise LanguageError(f"unknown certificate kind {cert.kind!r}")
    except (InconsistencyError, RemovalError) as exc:
        return finish(CertStatus(REFUTED, note=str(exc)))
