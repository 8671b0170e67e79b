"""Concept machinery: conceptual size, definable-relation closures,
interpretation and definitional-equivalence checking.

Concepts of a theory are formula classes modulo provable biconditional.
Over a single finite model they materialize as assignment sets (subsets of
M^n), which is what the closure computes; formula representatives are
recovered from generation traces on demand. Sentential conceptual size is
exact (2^|Sat|); multi-model first-order sizes are only ever reported as
enumeration lower bounds tagged with their search depth.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    CapExceededError,
    InconsistencyError,
    LanguageError,
    UnsupportedFragmentError,
    VariableBudgetError,
)
from .semantics import (
    Caps,
    DEFAULT_BOUND,
    DEFAULT_CAPS,
    FiniteModel,
    Theory,
    assignment_model,
    assignment_set,
    bounded_consequence,
    cylindrify,
    enumerate_models,
    eval_formula,
    sat_assignments,
)
from .syntax import (
    Formula,
    and_,
    atom,
    characteristic_formula,
    dnf_of_assignments,
    eq,
    exists,
    iff,
    make_psi_n,
    not_,
    subformulas,
)
from .translation import Translation, apply_translation, compose


# ---------------------------------------------------------------------------
# Conceptual size

@dataclass(frozen=True)
class CzValue:
    value: int
    method: str  # sentential-exact | closure-exact | enumeration-lower-bound
    lower_bound: bool = False
    depth: int | None = None
    detail: str = ""


def cz_sentential(theory: Theory) -> CzValue:
    """Exact conceptual size of a sentential theory: 2^|Sat(T)|.

    Concepts correspond to the definable subsets of the satisfying
    assignments, and over finitely many constants every subset is definable.
    The inconsistent theory has the single concept.
    """
    if not theory.lang.is_sentential:
        raise UnsupportedFragmentError("cz_sentential needs a sentential theory")
    return CzValue(1 << len(sat_assignments(theory)), "sentential-exact")


# ---------------------------------------------------------------------------
# Definable-relation closure over one finite model

Trace = tuple


@dataclass
class ConceptClosure:
    """Fixpoint of diagonals and atom meanings under complement,
    intersection and per-coordinate cylindrification."""

    model: FiniteModel
    n_vars: int
    traces: dict[int, Trace]  # assignment-set bitmask -> first generator

    @property
    def relations(self) -> frozenset[int]:
        return frozenset(self.traces)

    def __len__(self) -> int:
        return len(self.traces)

    @property
    def universe_bits(self) -> int:
        return self.model.size**self.n_vars


def concept_closure(
    model: FiniteModel,
    n_vars: int | None = None,
    max_elements: int = 1 << 16,
    caps: Caps = DEFAULT_CAPS,
) -> ConceptClosure:
    """Close the model's atom meanings and diagonals under the three
    generator operations. `n_vars` must be the language's varBound."""
    lang = model.lang
    n = lang.var_bound if n_vars is None else n_vars
    if n != lang.var_bound:
        raise LanguageError(
            f"closure runs in the ambient fragment: n={n} != varBound={lang.var_bound}"
        )
    if model.size > caps.max_size:
        raise CapExceededError(f"model size {model.size} exceeds cap {caps.max_size}")
    k = model.size
    full = (1 << (k**n)) - 1
    traces: dict[int, Trace] = {}

    def add(mask: int, trace: Trace, frontier: list[int]) -> None:
        if mask not in traces:
            if len(traces) >= max_elements:
                raise CapExceededError(f"closure exceeded {max_elements} elements")
            traces[mask] = trace
            frontier.append(mask)

    frontier: list[int] = []
    for i in range(n):
        for j in range(n):
            add(assignment_set(model, eq(i, j)), ("diag", i, j), frontier)
    for sym, rank in lang.symbols:
        for args in itertools.product(range(n), repeat=rank):
            add(assignment_set(model, atom(sym, args)), ("atom", sym, args), frontier)

    while frontier:
        fresh = frontier
        frontier = []
        known = list(traces)
        for x in fresh:
            add(full ^ x, ("not", x), frontier)
            for i in range(n):
                add(cylindrify(x, k, n, i), ("exists", i, x), frontier)
            for y in known:
                add(x & y, ("and", x, y), frontier)
    return ConceptClosure(model, n, traces)


def closure_formula(closure: ConceptClosure, mask: int) -> Formula:
    """Recover a defining formula from the generation trace."""
    memo: dict[int, Formula] = {}

    def go(m: int) -> Formula:
        if m in memo:
            return memo[m]
        trace = closure.traces[m]
        op = trace[0]
        if op == "diag":
            out = eq(trace[1], trace[2])
        elif op == "atom":
            out = atom(trace[1], trace[2])
        elif op == "not":
            out = not_(go(trace[1]))
        elif op == "and":
            out = and_(go(trace[1]), go(trace[2]))
        else:
            out = exists(trace[1], go(trace[2]))
        memo[m] = out
        return out

    return go(mask)


def closure_to_json(closure: ConceptClosure) -> dict:
    """Bitset dump in lexicographic assignment order, with traces."""
    bits_of = lambda m: "".join(
        "1" if m >> i & 1 else "0" for i in range(closure.universe_bits)
    )
    order = sorted(closure.traces, key=bits_of)
    index = {m: i for i, m in enumerate(order)}

    def show(trace: Trace):
        op = trace[0]
        if op in ("diag", "atom"):
            return list(trace)
        if op == "not":
            return ["not", index[trace[1]]]
        if op == "and":
            return ["and", index[trace[1]], index[trace[2]]]
        return ["exists", trace[1], index[trace[2]]]

    return {
        "size": closure.model.size,
        "vars": closure.n_vars,
        "count": len(closure),
        "elements": [
            {"bits": bits_of(m), "trace": show(closure.traces[m])} for m in order
        ],
    }


def cz_of_model(model: FiniteModel, caps: Caps = DEFAULT_CAPS) -> CzValue:
    """Exact fragment-relative conceptual size of Th(model)."""
    closure = concept_closure(model, caps=caps)
    return CzValue(len(closure), "closure-exact", detail=f"size-{model.size} model")


def cz_lower_bound(
    theory: Theory,
    bound: int = DEFAULT_BOUND,
    depth: int = 4,
    caps: Caps = DEFAULT_CAPS,
) -> CzValue:
    """Enumeration lower bound on conceptual size for first-order theories.

    Formulas whose assignment sets differ on some model of the theory are
    inequivalent, so counting distinct meaning vectors across the models of
    size <= bound after `depth` generation rounds bounds Cz from below.
    """
    models = [
        m for k in range(1, bound + 1) for m in enumerate_models(theory, k, caps)
    ]
    if not models:
        return CzValue(
            1, "enumeration-lower-bound", True, depth,
            detail=f"no models of size <= {bound}",
        )
    lang = theory.lang
    n = lang.var_bound
    dims = [(m.size, (1 << (m.size**n)) - 1) for m in models]

    def vec(phi: Formula) -> tuple[int, ...]:
        return tuple(assignment_set(m, phi) for m in models)

    seen: set[tuple[int, ...]] = set()
    frontier: list[tuple[int, ...]] = []

    def add(v: tuple[int, ...]) -> None:
        if v not in seen:
            seen.add(v)
            frontier.append(v)

    for i in range(n):
        for j in range(n):
            add(vec(eq(i, j)))
    for sym, rank in lang.symbols:
        for args in itertools.product(range(n), repeat=rank):
            add(vec(atom(sym, args)))

    for _ in range(depth):
        if not frontier:
            break
        fresh, frontier = frontier, []
        known = list(seen)
        for x in fresh:
            add(tuple(fm ^ xc for (_, fm), xc in zip(dims, x)))
            for i in range(n):
                add(
                    tuple(
                        cylindrify(xc, kk, n, i) for (kk, _), xc in zip(dims, x)
                    )
                )
            for y in known:
                add(tuple(xc & yc for xc, yc in zip(x, y)))
    return CzValue(
        len(seen), "enumeration-lower-bound", True, depth,
        detail=f"models up to size {bound}",
    )


# ---------------------------------------------------------------------------
# Interpretation and definitional equivalence checking

@dataclass(frozen=True)
class CheckReport:
    verdict: str  # faithful | interpretation | defeq | refuted
    exact: bool
    bound: int | None
    witness_formula: Formula | None = None
    witness_model: FiniteModel | None = None
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.verdict != "refuted"


def formula_battery(theory: Theory, bound: int) -> list[Formula]:
    """Axioms, their subformulas, all canonical atoms, and the size
    formulas psi(1..bound) the variable bound admits."""
    out: list[Formula] = []
    seen: set[int] = set()

    def push(f: Formula) -> None:
        if f.uid not in seen:
            seen.add(f.uid)
            out.append(f)

    for ax in theory.axioms:
        push(ax)
    for ax in theory.axioms:
        for sub in subformulas(ax):
            push(sub)
    for sym, rank in theory.lang.symbols:
        push(atom(sym, tuple(range(rank))))
    for size in range(1, bound + 1):
        if theory.lang.var_bound >= size + 1:
            push(make_psi_n(size, theory.lang))
    return out


def _sentential_pullback(tr: Translation, row: tuple[bool, ...]) -> tuple[bool, ...]:
    """The source assignment a target assignment induces through tr."""
    model = assignment_model(tr.target, row)
    return tuple(
        eval_formula(model, (), tr.image(c)) for c in tr.source.constants
    )


def check_interpretation(
    tr: Translation,
    t1: Theory,
    t2: Theory,
    bound: int = DEFAULT_BOUND,
    caps: Caps = DEFAULT_CAPS,
) -> CheckReport:
    """Does tr map theorems of t1 to theorems of t2, and does it reflect
    them back? Sentential case exact; otherwise checked over the battery
    up to the bound."""
    if not (tr.source.same_formulas(t1.lang) and tr.target.same_formulas(t2.lang)):
        raise LanguageError("translation endpoints do not match the theories")
    if t1.lang.is_sentential and t2.lang.is_sentential:
        s1, s2 = sat_assignments(t1), sat_assignments(t2)
        image = {_sentential_pullback(tr, b): b for b in sorted(s2)}
        stray = sorted(a for a in image if a not in s1)
        if stray:
            a = stray[0]
            return CheckReport(
                "refuted", True, None,
                not_(characteristic_formula(t1.lang, a)),
                assignment_model(t2.lang, image[a]),
                note=f"{t1.name} proves it, {t2.name} does not prove its translation",
            )
        missing = sorted(s1 - set(image))
        if missing:
            a = missing[0]
            return CheckReport(
                "interpretation", True, None,
                not_(characteristic_formula(t1.lang, a)),
                assignment_model(t1.lang, a),
                note="translation holds but does not reflect this formula",
            )
        return CheckReport("faithful", True, None)

    forward_witness = None
    reflect_witness = None
    for phi in formula_battery(t1, bound):
        try:
            psi = apply_translation(tr, phi)
        except VariableBudgetError:
            continue
        r1 = bounded_consequence(t1, phi, bound, caps)
        r2 = bounded_consequence(t2, psi, bound, caps)
        if r1.holds and not r2.holds and forward_witness is None:
            exact = phi in t1.axioms or r1.exact
            forward_witness = (phi, r2.countermodel, exact)
        if r2.holds and not r1.holds and reflect_witness is None:
            reflect_witness = (phi, r1.countermodel)
    if forward_witness is not None:
        phi, cm, exact = forward_witness
        return CheckReport(
            "refuted", exact, bound, phi, cm,
            note="theoremhood not preserved",
        )
    if reflect_witness is not None:
        phi, cm = reflect_witness
        return CheckReport(
            "interpretation", False, bound, phi, cm,
            note="theoremhood preserved but not reflected on the battery",
        )
    return CheckReport("faithful", False, bound)


def check_defeq(
    tr12: Translation,
    tr21: Translation,
    t1: Theory,
    t2: Theory,
    bound: int = DEFAULT_BOUND,
    caps: Caps = DEFAULT_CAPS,
) -> CheckReport:
    """Verify a definitional-equivalence witness pair: both directions are
    interpretations and both round trips are provable biconditionals."""
    if not (tr12.source.same_formulas(t1.lang) and tr12.target.same_formulas(t2.lang)):
        raise LanguageError("tr12 endpoints do not match the theories")
    if not (tr21.source.same_formulas(t2.lang) and tr21.target.same_formulas(t1.lang)):
        raise LanguageError("tr21 endpoints do not match the theories")

    if t1.lang.is_sentential and t2.lang.is_sentential:
        s1, s2 = sat_assignments(t1), sat_assignments(t2)
        pull12 = {b: _sentential_pullback(tr12, b) for b in s2}
        pull21 = {a: _sentential_pullback(tr21, a) for a in s1}
        for b in sorted(s2):
            if pull12[b] not in s1:
                return CheckReport(
                    "refuted", True, None,
                    not_(characteristic_formula(t1.lang, pull12[b])),
                    assignment_model(t2.lang, b),
                    note="tr12 is not an interpretation",
                )
        for a in sorted(s1):
            if pull21[a] not in s2:
                return CheckReport(
                    "refuted", True, None,
                    not_(characteristic_formula(t2.lang, pull21[a])),
                    assignment_model(t1.lang, a),
                    note="tr21 is not an interpretation",
                )
        for a in sorted(s1):
            if pull12[pull21[a]] != a:
                return CheckReport(
                    "refuted", True, None,
                    characteristic_formula(t1.lang, a),
                    assignment_model(t1.lang, a),
                    note="round trip through tr21;tr12 moves this assignment",
                )
        for b in sorted(s2):
            if pull21[pull12[b]] != b:
                return CheckReport(
                    "refuted", True, None,
                    characteristic_formula(t2.lang, b),
                    assignment_model(t2.lang, b),
                    note="round trip through tr12;tr21 moves this assignment",
                )
        return CheckReport("defeq", True, None)

    for theory, outer, inner in ((t1, tr21, tr12), (t2, tr12, tr21)):
        for phi in formula_battery(theory, bound):
            try:
                trip = iff(compose(outer, inner, phi), phi)
            except VariableBudgetError:
                continue
            r = bounded_consequence(theory, trip, bound, caps)
            if not r.holds:
                return CheckReport(
                    "refuted", r.exact, r.bound, phi, r.countermodel,
                    note=f"round trip fails over {theory.name}",
                )
    for tr, a, b, label in ((tr12, t1, t2, "tr12"), (tr21, t2, t1, "tr21")):
        rep = check_interpretation(tr, a, b, bound, caps)
        if not rep.ok:
            return CheckReport(
                "refuted", rep.exact, rep.bound, rep.witness_formula,
                rep.witness_model, note=f"{label} is not an interpretation",
            )
    return CheckReport("defeq", False, bound)


def sentential_defeq_witness(
    t1: Theory, t2: Theory, bound: int = DEFAULT_BOUND
) -> tuple[Translation, Translation] | None:
    """Construct and verify a definitional-equivalence witness between
    consistent sentential theories of equal Sat-set size, if possible.

    Each constant maps to the disjunction of the characteristic
    conjunctions of the assignments where its image under the Sat-set
    bijection holds. Returns None when the sizes differ or one language
    has no formulas to translate into.
    """
    for t in (t1, t2):
        if not t.lang.is_sentential:
            raise UnsupportedFragmentError("witness construction is sentential-only")
    s1, s2 = sorted(sat_assignments(t1)), sorted(sat_assignments(t2))
    if not s1 or not s2:
        raise InconsistencyError("witness construction needs consistent theories")
    if len(s1) != len(s2):
        return None
    c1, c2 = t1.lang.constants, t2.lang.constants
    if (c1 and not c2) or (c2 and not c1):
        return None  # one side has no formulas at all
    forward = dict(zip(s1, s2))
    backward = dict(zip(s2, s1))
    tr12 = Translation.make(
        t1.lang,
        t2.lang,
        {
            p: dnf_of_assignments(
                t2.lang, [b for b in s2 if backward[b][i]]
            )
            for i, p in enumerate(c1)
        },
    )
    tr21 = Translation.make(
        t2.lang,
        t1.lang,
        {
            q: dnf_of_assignments(
                t1.lang, [a for a in s1 if forward[a][i]]
            )
            for i, q in enumerate(c2)
        },
    )
    report = check_defeq(tr12, tr21, t1, t2, bound)
    if report.verdict != "defeq":
        raise AssertionError(f"constructed witness failed verification: {report}")
    return tr12, tr21
