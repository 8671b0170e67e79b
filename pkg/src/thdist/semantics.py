"""Finite-model semantics: evaluation, enumeration up to isomorphism,
spectra, bounded consequence and equivalence, conservative extensions.

Evaluation comes in two forms. `eval_formula` implements the satisfaction
clauses one assignment at a time. `assignment_set` computes the whole set of
satisfying assignments of a formula in one bottom-up pass, encoded as an
integer bitmask over the k^n assignments in lexicographic order; everything
performance-sensitive (enumeration, bounded checks, concept closures) runs
on these masks. The two agree, which the test suite checks by property.

Every first-order answer carries its exact/bounded provenance; only the
sentential fragment is ever reported exact.
"""

from __future__ import annotations

import hashlib
import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import CapExceededError, LanguageError, UnsupportedFragmentError
from .syntax import (
    And,
    Atom,
    Eq,
    Exists,
    Formula,
    Language,
    Not,
    characteristic_formula,
    make_psi_n,
    not_,
    parse_formula,
    print_formula,
)


@dataclass(frozen=True)
class Caps:
    """Desk-scale guards for enumeration and canonicalization."""

    max_size: int = 6
    max_candidates: int = 1 << 21
    max_perm_size: int = 8


DEFAULT_CAPS = Caps()
DEFAULT_BOUND = 4  # default K for bounded first-order checks


# ---------------------------------------------------------------------------
# Models

class FiniteModel:
    """Non-empty universe {0..size-1} with one relation per symbol."""

    __slots__ = ("lang", "size", "interp", "_key")

    def __init__(self, lang: Language, size: int, interp: Mapping[str, object]):
        if size < 1:
            raise LanguageError("models have non-empty universes")
        norm: dict[str, object] = {}
        for sym, rank in lang.symbols:
            if sym not in interp:
                raise LanguageError(f"symbol {sym} not interpreted")
            value = interp[sym]
            if rank == 0:
                norm[sym] = bool(value)
            else:
                tuples = frozenset(tuple(t) for t in value)  # type: ignore[union-attr]
                for t in tuples:
                    if len(t) != rank or any(not (0 <= e < size) for e in t):
                        raise LanguageError(f"tuple {t} out of bounds for {sym}/{rank}")
                norm[sym] = tuples
        extra = set(interp) - set(norm)
        if extra:
            raise LanguageError(f"interpretation of unknown symbols: {sorted(extra)}")
        self.lang = lang
        self.size = size
        self.interp = norm
        self._key = (size, lang.var_bound, tuple(sorted(
            (sym, v if isinstance(v, bool) else tuple(sorted(v)))
            for sym, v in norm.items()
        )))

    def rel(self, sym: str):
        return self.interp[sym]

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteModel) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"FiniteModel({self.lang.name}, {model_to_json(self)})"


def model_to_json(model: FiniteModel) -> str:
    """Deterministic JSON: symbols alphabetical, tuples lexicographic."""
    interp: dict[str, object] = {}
    for sym, rank in model.lang.symbols:
        v = model.interp[sym]
        interp[sym] = v if isinstance(v, bool) else [list(t) for t in sorted(v)]
    return json.dumps({"size": model.size, "interp": interp}, sort_keys=True)


def model_from_json(text: str, lang: Language) -> FiniteModel:
    data = json.loads(text)
    return FiniteModel(lang, int(data["size"]), data["interp"])


def model_lang_from_json(text: str, var_bound: int) -> tuple[Language, FiniteModel]:
    """Infer a language from a standalone model JSON (needs `ranks` for
    empty relations) and build the model over it."""
    data = json.loads(text)
    ranks = {k: int(v) for k, v in data.get("ranks", {}).items()}
    symbols: dict[str, int] = {}
    for sym, value in data["interp"].items():
        if isinstance(value, bool):
            symbols[sym] = 0
        elif value:
            symbols[sym] = len(value[0])
        elif sym in ranks:
            symbols[sym] = ranks[sym]
        else:
            raise LanguageError(f"empty relation {sym} needs an entry in 'ranks'")
    lang = Language.make("model", symbols, var_bound)
    return lang, FiniteModel(lang, int(data["size"]), data["interp"])


# ---------------------------------------------------------------------------
# Clause-by-clause evaluation

def eval_formula(model: FiniteModel, assignment: Sequence[int], phi: Formula) -> bool:
    """Satisfaction under one assignment (total on v0..varBound-1)."""
    if isinstance(phi, Eq):
        return assignment[phi.i] == assignment[phi.j]
    if isinstance(phi, Atom):
        rel = model.rel(phi.sym)
        if isinstance(rel, bool):
            return rel
        return tuple(assignment[a] for a in phi.args) in rel
    if isinstance(phi, And):
        return eval_formula(model, assignment, phi.lhs) and eval_formula(
            model, assignment, phi.rhs
        )
    if isinstance(phi, Not):
        return not eval_formula(model, assignment, phi.sub)
    assert isinstance(phi, Exists)
    assignment = list(assignment)
    for a in range(model.size):
        assignment[phi.var] = a
        if eval_formula(model, assignment, phi.sub):
            return True
    return False


# ---------------------------------------------------------------------------
# Assignment-set (bitmask) evaluation

_eq_masks: dict[tuple[int, int, int, int], int] = {}
_proj_masks: dict[tuple[int, int, tuple[int, ...]], dict[tuple[int, ...], int]] = {}
_exists_groups: dict[tuple[int, int, int], list[int]] = {}


def _assignments(k: int, n: int) -> list[tuple[int, ...]]:
    return list(itertools.product(range(k), repeat=n))


def _eq_mask(k: int, n: int, i: int, j: int) -> int:
    key = (k, n, i, j)
    mask = _eq_masks.get(key)
    if mask is None:
        mask = 0
        for idx, a in enumerate(_assignments(k, n)):
            if a[i] == a[j]:
                mask |= 1 << idx
        _eq_masks[key] = mask
    return mask


def _proj_mask(k: int, n: int, args: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    key = (k, n, args)
    table = _proj_masks.get(key)
    if table is None:
        table = {}
        for idx, a in enumerate(_assignments(k, n)):
            t = tuple(a[x] for x in args)
            table[t] = table.get(t, 0) | (1 << idx)
        _proj_masks[key] = table
    return table


def exists_groups(k: int, n: int, var: int) -> list[int]:
    """Masks of assignment groups agreeing everywhere but coordinate `var`."""
    key = (k, n, var)
    groups = _exists_groups.get(key)
    if groups is None:
        buckets: dict[tuple[int, ...], int] = {}
        for idx, a in enumerate(_assignments(k, n)):
            rest = a[:var] + a[var + 1 :]
            buckets[rest] = buckets.get(rest, 0) | (1 << idx)
        groups = list(buckets.values())
        _exists_groups[key] = groups
    return groups


def cylindrify(mask: int, k: int, n: int, var: int) -> int:
    out = 0
    for g in exists_groups(k, n, var):
        if g & mask:
            out |= g
    return out


def assignment_set(model: FiniteModel, phi: Formula) -> int:
    """Bitmask of assignments satisfying `phi` (lexicographic order)."""
    k, n = model.size, model.lang.var_bound
    full = (1 << (k**n)) - 1
    memo: dict[int, int] = {}

    def go(f: Formula) -> int:
        cached = memo.get(f.uid)
        if cached is not None:
            return cached
        if isinstance(f, Eq):
            out = _eq_mask(k, n, f.i, f.j)
        elif isinstance(f, Atom):
            rel = model.rel(f.sym)
            if isinstance(rel, bool):
                out = full if rel else 0
            else:
                table = _proj_mask(k, n, f.args)
                out = 0
                for t in rel:
                    out |= table.get(t, 0)
        elif isinstance(f, And):
            out = go(f.lhs) & go(f.rhs)
        elif isinstance(f, Not):
            out = full ^ go(f.sub)
        else:
            assert isinstance(f, Exists)
            out = cylindrify(go(f.sub), k, n, f.var)
        memo[f.uid] = out
        return out

    return go(phi)


def is_true(model: FiniteModel, phi: Formula) -> bool:
    """True in the model: satisfied under every assignment."""
    k, n = model.size, model.lang.var_bound
    return assignment_set(model, phi) == (1 << (k**n)) - 1


# ---------------------------------------------------------------------------
# Theories

class Theory:
    """Named axiom set over a language."""

    __slots__ = ("name", "lang", "axioms", "key")

    def __init__(self, name: str, lang: Language, axioms: Sequence[Formula]):
        self.name = name
        self.lang = lang
        self.axioms = tuple(axioms)
        payload = json.dumps(
            {
                "symbols": list(lang.symbols),
                "vars": lang.var_bound,
                "axioms": [print_formula(a) for a in self.axioms],
            },
            sort_keys=True,
        )
        self.key = hashlib.sha256(payload.encode()).hexdigest()

    @staticmethod
    def make(name: str, lang: Language, axioms: Iterable[Formula | str] = ()) -> "Theory":
        parsed = []
        for a in axioms:
            f = parse_formula(a, lang) if isinstance(a, str) else a
            from .syntax import validate_formula

            validate_formula(f, lang)
            parsed.append(f)
        return Theory(name, lang, parsed)

    def __repr__(self) -> str:
        return f"Theory({self.name!r}, {len(self.axioms)} axioms over {self.lang.name})"


def theory_from_sat(
    name: str, lang: Language, sat: Iterable[Sequence[bool]]
) -> Theory:
    """Sentential theory axiomatized by the canonical DNF of a Sat-set."""
    from .syntax import dnf_of_assignments

    if not lang.is_sentential:
        raise UnsupportedFragmentError("theory_from_sat needs a sentential language")
    return Theory.make(name, lang, [dnf_of_assignments(lang, sat)])


# ---------------------------------------------------------------------------
# Sentential satisfying assignments

_sat_memo: dict[str, frozenset[tuple[bool, ...]]] = {}


def sat_assignments(theory: Theory) -> frozenset[tuple[bool, ...]]:
    """Exact set of satisfying truth assignments (sentential theories)."""
    if not theory.lang.is_sentential:
        raise UnsupportedFragmentError(
            f"{theory.name} is not sentential; use bounded model enumeration"
        )
    cached = _sat_memo.get(theory.key)
    if cached is not None:
        return cached
    consts = theory.lang.constants
    good = []
    for row in itertools.product((False, True), repeat=len(consts)):
        model = FiniteModel(theory.lang, 1, dict(zip(consts, row)))
        if all(is_true(model, a) for a in theory.axioms):
            good.append(row)
    result = frozenset(good)
    _sat_memo[theory.key] = result
    return result


def sat_of_formula(lang: Language, phi: Formula) -> frozenset[tuple[bool, ...]]:
    good = []
    for row in itertools.product((False, True), repeat=len(lang.constants)):
        model = FiniteModel(lang, 1, dict(zip(lang.constants, row)))
        if is_true(model, phi):
            good.append(row)
    return frozenset(good)


def assignment_model(lang: Language, row: Sequence[bool], size: int = 1) -> FiniteModel:
    return FiniteModel(lang, size, dict(zip(lang.constants, row)))


# ---------------------------------------------------------------------------
# Isomorphism and canonical forms

def invariant_key(model: FiniteModel) -> tuple:
    """Cheap isomorphism invariant used for pre-bucketing."""
    parts = []
    for sym, rank in model.lang.symbols:
        v = model.interp[sym]
        if isinstance(v, bool):
            parts.append((sym, v))
        else:
            degrees = sorted(
                tuple(sum(1 for t in v if t[p] == e) for p in range(rank))
                for e in range(model.size)
            )
            parts.append((sym, len(v), tuple(degrees)))
    return (model.size, tuple(parts))


def canonical_form(model: FiniteModel, caps: Caps = DEFAULT_CAPS) -> tuple:
    """Complete isomorphism invariant: minimum serialization over all
    universe permutations. Equal forms iff isomorphic."""
    k = model.size
    if k > caps.max_perm_size:
        raise CapExceededError(f"canonical form capped at size {caps.max_perm_size}")
    syms = model.lang.symbols
    if all(rank == 0 for _, rank in syms):
        return (k, tuple((sym, model.interp[sym]) for sym, _ in syms))
    best = None
    for perm in itertools.permutations(range(k)):
        row = []
        for sym, rank in syms:
            v = model.interp[sym]
            if isinstance(v, bool):
                row.append((sym, v))
            else:
                row.append((sym, tuple(sorted(tuple(perm[e] for e in t) for t in v))))
        candidate = (k, tuple(row))
        if best is None or candidate < best:
            best = candidate
    return best


def canonical_model(model: FiniteModel, caps: Caps = DEFAULT_CAPS) -> FiniteModel:
    k, row = canonical_form(model, caps)
    interp = {sym: payload for sym, payload in row}
    return FiniteModel(model.lang, k, interp)


def isomorphic(a: FiniteModel, b: FiniteModel, caps: Caps = DEFAULT_CAPS) -> bool:
    if a.size != b.size or a.lang.symbols != b.lang.symbols:
        return False
    if invariant_key(a) != invariant_key(b):
        return False
    return canonical_form(a, caps) == canonical_form(b, caps)


# ---------------------------------------------------------------------------
# Enumeration up to isomorphism, spectra, profiles

_model_memo: dict[tuple[str, int], list[FiniteModel]] = {}
_store = None  # optional persistent cache registered by the workbench


def set_profile_store(store) -> None:
    """Install a persistent cache with get(key, k) / put(key, k, payload)."""
    global _store
    _store = store


def clear_memory_caches() -> None:
    _model_memo.clear()
    _sat_memo.clear()
    _base_memo.clear()


def _candidate_count(lang: Language, k: int) -> int:
    total = 1
    for _, rank in lang.symbols:
        total *= 1 << (k**rank)
    return total


def enumeration_feasible(theory: Theory, k: int, caps: Caps = DEFAULT_CAPS) -> bool:
    """Would enumerate_models stay inside the caps? Cheap pre-check that
    lets callers skip a doomed size without paying for one side first."""
    if k < 1 or k > caps.max_size:
        return False
    if theory.lang.is_sentential:
        return True
    return _candidate_count(theory.lang, k) <= caps.max_candidates


_base_memo: dict[tuple, list[FiniteModel]] = {}


def _base_models(lang: Language, k: int, caps: Caps) -> list[FiniteModel]:
    """Canonical representatives of ALL structures of size k for the
    language, sorted by canonical form.

    Interpretations are packed into one bit integer (one bit per possible
    tuple, rank-0 symbols one bit); universe permutations act as bit
    permutations, and an ascending sweep that marks whole orbits keeps
    exactly one representative per isomorphism class.
    """
    key = (lang.symbols, lang.var_bound, k)
    cached = _base_memo.get(key)
    if cached is not None:
        return cached
    blocks: list[tuple[str, int, list[tuple[int, ...]], int]] = []
    offset = 0
    for sym, rank in lang.symbols:
        tuples = list(itertools.product(range(k), repeat=rank))
        blocks.append((sym, rank, tuples, offset))
        offset += len(tuples)
    total_bits = offset
    if (1 << total_bits) > caps.max_candidates:
        raise CapExceededError(
            f"{1 << total_bits} interpretation candidates at size {k} "
            f"exceed cap {caps.max_candidates}"
        )
    tables = []
    for p in itertools.permutations(range(k)):
        table = list(range(total_bits))
        for sym, rank, tuples, off in blocks:
            if rank == 0:
                continue
            index = {t: i for i, t in enumerate(tuples)}
            for i, t in enumerate(tuples):
                table[off + i] = off + index[tuple(p[e] for e in t)]
        tables.append(table)
    marked = bytearray(1 << total_bits)
    reps: list[int] = []
    for c in range(1 << total_bits):
        if marked[c]:
            continue
        reps.append(c)
        for table in tables:
            out = 0
            b = c
            while b:
                low = b & -b
                out |= 1 << table[low.bit_length() - 1]
                b ^= low
            marked[out] = 1
    models = []
    for c in reps:
        interp: dict[str, object] = {}
        for sym, rank, tuples, off in blocks:
            if rank == 0:
                interp[sym] = bool(c >> off & 1)
            else:
                interp[sym] = {
                    tuples[i] for i in range(len(tuples)) if c >> (off + i) & 1
                }
        models.append(FiniteModel(lang, k, interp))
    models.sort(key=lambda m: canonical_form(m, caps))
    _base_memo[key] = models
    return models


def enumerate_models(
    theory: Theory, k: int, caps: Caps = DEFAULT_CAPS
) -> list[FiniteModel]:
    """Canonical representatives of the size-k models of the theory,
    sorted by canonical form."""
    if k < 1:
        raise CapExceededError("model size must be >= 1")
    if k > caps.max_size:
        raise CapExceededError(f"size {k} exceeds cap {caps.max_size}")
    memo_key = (theory.key, k)
    cached = _model_memo.get(memo_key)
    if cached is not None:
        return cached
    if _store is not None:
        payload = _store.get(theory.key, k)
        if payload is not None:
            models = [
                FiniteModel(theory.lang, k, json.loads(m)["interp"])
                for m in payload["models"]
            ]
            _model_memo[memo_key] = models
            return models

    lang = theory.lang
    if lang.is_sentential:
        models = [
            assignment_model(lang, row, k) for row in sorted(sat_assignments(theory))
        ]
    else:
        base = _base_models(lang, k, caps)
        models = [m for m in base if all(is_true(m, a) for a in theory.axioms)]

    _model_memo[memo_key] = models
    if _store is not None:
        _store.put(
            theory.key,
            k,
            {"count": len(models), "models": [model_to_json(m) for m in models]},
        )
    return models


def spectrum(theory: Theory, k: int, caps: Caps = DEFAULT_CAPS) -> int:
    """I(T, k): number of size-k models up to isomorphism."""
    return len(enumerate_models(theory, k, caps))


def spectrum_table(theory: Theory, max_size: int, caps: Caps = DEFAULT_CAPS) -> dict[int, int]:
    return {k: spectrum(theory, k, caps) for k in range(1, max_size + 1)}


@dataclass
class SemanticProfile:
    """Cached semantic data for one theory up to a size bound."""

    theory: Theory
    max_size: int
    spectrum: dict[int, int]
    models: dict[int, list[FiniteModel]]
    sat: frozenset[tuple[bool, ...]] | None
    exact: bool  # sentential profiles are exact; first-order are bounded
    unbounded_models_up_to: bool  # nonzero spectrum at every size <= max_size


def semantic_profile(theory: Theory, max_size: int, caps: Caps = DEFAULT_CAPS) -> SemanticProfile:
    models = {k: enumerate_models(theory, k, caps) for k in range(1, max_size + 1)}
    spec = {k: len(v) for k, v in models.items()}
    sent = theory.lang.is_sentential
    return SemanticProfile(
        theory=theory,
        max_size=max_size,
        spectrum=spec,
        models=models,
        sat=sat_assignments(theory) if sent else None,
        exact=sent,
        unbounded_models_up_to=all(v > 0 for v in spec.values()),
    )


# ---------------------------------------------------------------------------
# Bounded consequence / equivalence / conservativity

@dataclass(frozen=True)
class ConsequenceResult:
    holds: bool
    exact: bool
    bound: int | None
    countermodel: FiniteModel | None = None

    def __bool__(self) -> bool:
        return self.holds


def bounded_consequence(
    theory: Theory, phi: Formula, bound: int = DEFAULT_BOUND, caps: Caps = DEFAULT_CAPS
) -> ConsequenceResult:
    """Is phi a theorem of the theory, up to models of size `bound`?

    Sentential theories are decided exactly; refutations always carry a
    concrete countermodel. A first-order 'holds' is only holds-up-to-K.
    """
    if theory.lang.is_sentential:
        sat = sat_assignments(theory)
        bad = sorted(sat - sat_of_formula(theory.lang, phi))
        if bad:
            return ConsequenceResult(
                False, True, None, assignment_model(theory.lang, bad[0])
            )
        return ConsequenceResult(True, True, None)
    for k in range(1, bound + 1):
        for model in enumerate_models(theory, k, caps):
            if not is_true(model, phi):
                return ConsequenceResult(False, True, k, model)
    return ConsequenceResult(True, False, bound)


@dataclass(frozen=True)
class EquivalenceResult:
    equivalent: bool
    exact: bool
    bound: int | None
    witness_formula: Formula | None = None
    witness_model: FiniteModel | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.equivalent


def logically_equivalent(
    t1: Theory, t2: Theory, bound: int = DEFAULT_BOUND, caps: Caps = DEFAULT_CAPS
) -> EquivalenceResult:
    """Same consequences? Exact for sentential theories, bounded otherwise.

    Theories on different languages are distinguished outright: logical
    equivalence presupposes a shared language.
    """
    if not t1.lang.same_formulas(t2.lang):
        return EquivalenceResult(False, True, None, reason="language mismatch")
    if t1.lang.is_sentential:
        s1, s2 = sat_assignments(t1), sat_assignments(t2)
        if s1 == s2:
            return EquivalenceResult(True, True, None)
        row = (sorted(s1 - s2) or sorted(s2 - s1))[0]
        witness = not_(characteristic_formula(t1.lang, row))
        return EquivalenceResult(
            False, True, None, witness, assignment_model(t1.lang, row),
            reason="satisfying assignments differ",
        )
    for phi in t2.axioms:
        r = bounded_consequence(t1, phi, bound, caps)
        if not r.holds:
            return EquivalenceResult(
                False, r.exact, r.bound, phi, r.countermodel,
                reason=f"{t1.name} does not prove an axiom of {t2.name}",
            )
    for phi in t1.axioms:
        r = bounded_consequence(t2, phi, bound, caps)
        if not r.holds:
            return EquivalenceResult(
                False, r.exact, r.bound, phi, r.countermodel,
                reason=f"{t2.name} does not prove an axiom of {t1.name}",
            )
    return EquivalenceResult(True, False, bound)


@dataclass(frozen=True)
class ConservativityResult:
    holds: bool
    exact: bool
    bound: int | None
    witness_formula: Formula | None = None
    witness_model: FiniteModel | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.holds


def _reduct(model: FiniteModel, lang: Language) -> FiniteModel:
    return FiniteModel(lang, model.size, {s: model.interp[s] for s, _ in lang.symbols})


def conservative_extension(
    t1: Theory, t2: Theory, bound: int = DEFAULT_BOUND, caps: Caps = DEFAULT_CAPS
) -> ConservativityResult:
    """Does t2 prove exactly t1's theorems in t1's language (t1 within t2)?

    Sentential case: the projection of Sat(t2) onto t1's constants must
    equal Sat(t1); exact. First-order case: for each size k <= bound the
    canonicalized t1-reducts of t2's models must equal t1's model list.
    """
    if not t2.lang.includes(t1.lang):
        raise LanguageError(
            f"formulas of {t1.lang.name} are not all formulas of {t2.lang.name}"
        )
    if t1.lang.is_sentential and t2.lang.is_sentential:
        consts2 = t2.lang.constants
        positions = [consts2.index(c) for c in t1.lang.constants]
        projected = frozenset(
            tuple(row[p] for p in positions) for row in sat_assignments(t2)
        )
        s1 = sat_assignments(t1)
        if projected == s1:
            return ConservativityResult(True, True, None)
        row = sorted(projected ^ s1)[0]
        witness = not_(characteristic_formula(t1.lang, row))
        side = (
            f"{t2.name} proves it, {t1.name} does not"
            if row not in projected
            else f"{t1.name} proves it, {t2.name} does not"
        )
        return ConservativityResult(
            False, True, None, witness, assignment_model(t1.lang, row), side
        )

    for k in range(1, bound + 1):
        if not (enumeration_feasible(t1, k, caps) and enumeration_feasible(t2, k, caps)):
            raise CapExceededError(
                f"conservativity check infeasible at size {k} "
                f"({t1.name} vs {t2.name})"
            )
        own = {canonical_form(m, caps) for m in enumerate_models(t1, k, caps)}
        reducts = {
            canonical_form(_reduct(m, t1.lang), caps)
            for m in enumerate_models(t2, k, caps)
        }
        if own == reducts:
            continue
        diff = sorted(own ^ reducts)[0]
        model = FiniteModel(t1.lang, k, {sym: payload for sym, payload in diff[1]})
        witness = None
        if not reducts and own and t1.lang.var_bound >= k + 1:
            # t2 has no size-k models at all, so "not exactly k elements"
            # is a t2-theorem (exactly, at this k) that t1 fails to prove.
            witness = not_(make_psi_n(k, t1.lang))
        detail = (
            f"size-{k} reducts of {t2.name} differ from models of {t1.name}"
        )
        return ConservativityResult(False, False, k, witness, model, detail)
    return ConservativityResult(True, False, bound)


