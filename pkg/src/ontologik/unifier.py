"""Type unification, expectation folding, and whole-form analysis.

Unifying two types picks the more specific one when they are comparable:
casting up the tree is always sound, so the tighter type simply wins. When
the types are incomparable the engine consults the lexicon's salient
relations for a metonymic bridge: unifying omelet with person through
EATING(person, food) re-types the referent as the person and leaves the
omelet as the thing eaten. That bridge is exactly where missing text enters
a form, so each coercion also yields an English gloss of what was elided.

Analysis applies this across a whole logical form. Every bound variable
starts from its declared type (restriction, or the proper-name declaration,
or the root when nothing is said) and folds in the expectation of every
argument slot it occupies, innermost first. A variable gets at most one
coercion; a second incomparable expectation is a hard failure rather than a
second guess.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import LexiconError, TypeCheckError
from .lexicon import Lexicon, SalientRelation
from .logform import (
    And,
    Atom,
    CanonicalForm,
    Form,
    Implies,
    Not,
    Quant,
    QuantKind,
    _sort_pass,
    canonicalize,
    conj,
    pretty,
)
from .ontology import Ontology, SubsumptionVerdict, TypeName

# ----------------------------------------------------------------------
# outcomes and traces
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class Unified:
    """The types were comparable; ``result`` is the more specific."""

    result: TypeName


@dataclass(frozen=True)
class Coerced:
    """An incomparable pair bridged by a salient relation."""

    result: TypeName
    relation: SalientRelation
    relatum_type: TypeName


@dataclass(frozen=True)
class Failed:
    """No subsumption and no salient relation applies."""

    left: TypeName
    right: TypeName


UnificationOutcome = Unified | Coerced | Failed


@dataclass(frozen=True)
class TraceStep:
    """One recorded inference. ``subject`` is the variable or constant concerned."""

    op: str
    subject: str | None
    detail: str
    outcome: str


@dataclass
class DerivationTrace:
    """Ordered record of how an analysis reached its conclusion."""

    steps: list[TraceStep] = field(default_factory=list)

    def add(self, op: str, subject: str | None, detail: str, outcome: str):
        self.steps.append(TraceStep(op, subject, detail, outcome))

    def steps_for(self, subject: str) -> list[TraceStep]:
        return [s for s in self.steps if s.subject == subject]

    def format_lines(self) -> list[str]:
        return [
            (f"[{s.subject}] " if s.subject else "") + f"{s.detail} -> {s.outcome}"
            for s in self.steps
        ]

    def __iter__(self):
        return iter(self.steps)

    def __len__(self):
        return len(self.steps)


@dataclass
class AnalyzedForm:
    """A fully typed form plus the reasoning that produced it."""

    form: CanonicalForm
    trace: DerivationTrace
    missing_text: list[str]


# ----------------------------------------------------------------------
# pairwise unification
# ----------------------------------------------------------------------


def unify_types(
    ont: Ontology, lex: Lexicon, first: TypeName, second: TypeName
) -> UnificationOutcome:
    """Unify two types: specific-wins on comparables, coercion otherwise.

    The primary coercion orientation treats ``second`` as the expectation to
    meet and ``first`` as the source being reconciled; the mirrored
    orientation is tried next so the operation stays commutative up to the
    roles in the outcome.
    """
    ont.require(first)
    ont.require(second)
    match ont.compare(first, second):
        case SubsumptionVerdict.EQUAL:
            return Unified(first)
        case SubsumptionVerdict.FIRST_SUBSUMES_SECOND:
            return Unified(second)
        case SubsumptionVerdict.SECOND_SUBSUMES_FIRST:
            return Unified(first)
    for target, source in ((second, first), (first, second)):
        candidates = lex.coercion_candidates(ont, target, source)
        if candidates:
            rel = candidates[0]
            refined = (
                target if ont.subsumes(rel.domain_type, target) else rel.domain_type
            )
            return Coerced(refined, rel, source)
    return Failed(first, second)


def _pair(left: TypeName, right: TypeName) -> str:
    return f"({left} • {right})"


def _describe(outcome: UnificationOutcome) -> str:
    match outcome:
        case Unified(result):
            return result
        case Coerced(result, rel, relatum):
            return f"coerced: {result} via {rel.name}({result}, {relatum})"
        case Failed(left, right):
            return f"failed: {left} vs {right}"
    raise TypeError(f"not an outcome: {outcome!r}")


def fold_expectations(
    ont: Ontology,
    lex: Lexicon,
    declared: TypeName,
    expectations: list[TypeName],
    subject: str | None = None,
) -> tuple[UnificationOutcome, DerivationTrace]:
    """Fold a declared type with every expectation placed on it.

    Expectations fold right to left (the last pair is innermost and goes
    first), and the declared type joins the folded result at the end. At
    most one coercion may occur along the way; hitting a second incomparable
    pair fails with that pair identified.
    """
    if not expectations:
        raise ValueError("fold_expectations needs at least one expectation")
    trace = DerivationTrace()
    coercion: Coerced | None = None
    acc = expectations[-1]
    pending = list(expectations[:-1])
    # the declared type is the outermost combination of all
    for left in reversed([declared] + pending):
        outcome = unify_types(ont, lex, left, acc)
        if isinstance(outcome, Coerced) and coercion is not None:
            outcome = Failed(left, acc)  # one coercion per variable, no more
        trace.add("unify", subject, _pair(left, acc), _describe(outcome))
        match outcome:
            case Unified(result):
                acc = result
            case Coerced(result, _, _):
                coercion = outcome
                acc = result
            case Failed(_, _):
                return outcome, trace
    if coercion is not None:
        return Coerced(acc, coercion.relation, coercion.relatum_type), trace
    return Unified(acc), trace


# ----------------------------------------------------------------------
# whole-form analysis
# ----------------------------------------------------------------------


@dataclass
class _Binder:
    ident: int
    var: str
    declared: TypeName
    expectations: list[TypeName] = field(default_factory=list)
    adjectives: list[str] = field(default_factory=list)
    final: TypeName = ""
    coercion: Coerced | None = None
    fresh: str = ""


def analyze(form: Form, ont: Ontology, lex: Lexicon) -> AnalyzedForm:
    """Canonicalize, type every variable and constant, and surface missing text.

    Raises :class:`TypeCheckError` when some type can meet none of its
    expectations, even by coercion.
    """
    trace = DerivationTrace()
    cf = canonicalize(form, ont, lex)
    trace.add("canonicalize", None, pretty(form), pretty(cf))

    binders, const_slots = _collect(cf, ont, lex)

    # Variables, in binding order.
    for b in binders.values():
        if not b.expectations:
            b.final = b.declared
            trace.add("type", b.var, b.var, b.declared)
            continue
        outcome, sub = fold_expectations(
            ont, lex, b.declared, list(reversed(b.expectations)), subject=b.var
        )
        trace.steps.extend(sub.steps)
        match outcome:
            case Unified(result):
                b.final = result
            case Coerced(result, _, _):
                b.final = result
                b.coercion = outcome
            case Failed(left, right):
                raise TypeCheckError(b.var, left, right)

    # Constants, in occurrence order: plain comparability only.
    for const, expectation in const_slots:
        declared = lex.names[const].declared_type
        outcome = unify_types(ont, lex, declared, expectation)
        trace.add("unify", const, _pair(declared, expectation), _describe(outcome))
        if not isinstance(outcome, Unified):
            raise TypeCheckError(const, declared, expectation)

    # Allocate fresh relatum variables for the coerced binders.
    used = {b.var for b in binders.values()} | {c for c, _ in const_slots}
    for b in binders.values():
        if b.coercion is not None:
            b.fresh = _fresh_name(b.var, used)
            used.add(b.fresh)

    typed = _sort_conjunctions(_rebuild(cf, binders))
    glosses = [
        _gloss(b) for b in binders.values() if b.coercion is not None
    ]
    return AnalyzedForm(typed, trace, glosses)


def missing_text_report(analyzed: AnalyzedForm) -> str:
    """The elided content an analysis recovered, one gloss per line."""
    if not analyzed.missing_text:
        return "no missing text detected"
    return "\n".join(analyzed.missing_text)


# -- collection --------------------------------------------------------


def _collect(
    cf: Form, ont: Ontology, lex: Lexicon
) -> tuple[dict[int, _Binder], list[tuple[str, TypeName]]]:
    binders: dict[int, _Binder] = {}
    const_slots: list[tuple[str, TypeName]] = []
    counter = iter(range(1 << 30))

    def walk(f: Form, scope: dict[str, int]):
        match f:
            case Quant(_, var, vtype, body):
                ident = next(counter)
                declared = vtype
                if declared is None and var in lex.names:
                    declared = lex.names[var].declared_type
                if declared is None:
                    declared = ont.root
                ont.require(declared)
                binders[ident] = _Binder(ident, var, declared)
                walk(body, {**scope, var: ident})
            case Atom(pred, args):
                sig = lex.atom_signature(pred)  # canonicalize has already vetted preds
                assert sig is not None
                if sig.arity != len(args):
                    raise LexiconError(
                        f"'{pred}' expects {sig.arity} argument(s), got {len(args)}"
                    )
                for slot, arg in enumerate(args):
                    expectation = sig.arg_types[slot]
                    if arg in scope:
                        b = binders[scope[arg]]
                        b.expectations.append(expectation)
                        if sig.arity == 1:
                            b.adjectives.append(pred)
                    else:
                        if arg not in lex.names:
                            raise LexiconError(f"unknown constant '{arg}'")
                        const_slots.append((arg, expectation))
            case And(items):
                for i in items:
                    walk(i, scope)
            case Not(item):
                walk(item, scope)
            case Implies(a, c):
                walk(a, scope)
                walk(c, scope)

    walk(cf, {})
    return binders, const_slots


# -- reconstruction ----------------------------------------------------


def _rebuild(cf: Form, binders: dict[int, _Binder]) -> Form:
    counter = iter(range(1 << 30))

    def walk(f: Form) -> Form:
        match f:
            case Quant(kind, var, _, body):
                b = binders[next(counter)]
                inner = walk(body)
                if b.coercion is not None:
                    bridge = Atom(b.coercion.relation.name, (var, b.fresh))
                    inner = Quant(
                        QuantKind.EXISTS,
                        b.fresh,
                        b.coercion.relatum_type,
                        _conjoin_innermost(inner, bridge),
                    )
                return Quant(kind, var, b.final, inner)
            case And(items):
                return And(tuple(walk(i) for i in items))
            case Not(item):
                return Not(walk(item))
            case Implies(a, c):
                return Implies(walk(a), walk(c))
        return f

    return walk(cf)


def _conjoin_innermost(f: Form, extra: Atom) -> Form:
    # Push the bridging atom below any quantifier prefix so it sits in the
    # same matrix as the predications it explains.
    if isinstance(f, Quant):
        return Quant(f.kind, f.var, f.vtype, _conjoin_innermost(f.body, extra))
    return conj([f, extra])


def _sort_conjunctions(f: Form) -> Form:
    return _sort_pass(f)


def _fresh_name(base: str, used: set[str]) -> str:
    n = 2
    while f"{base}{n}" in used:
        n += 1
    return f"{base}{n}"


def _gloss(b: _Binder) -> str:
    assert b.coercion is not None
    adjs = " ".join(b.adjectives)
    noun = f"{adjs} {b.final}" if adjs else b.final
    return (
        f"some {noun} {b.coercion.relation.name.lower()} the {b.coercion.relatum_type}"
    )
