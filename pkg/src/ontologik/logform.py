"""Logical forms: term structure, surface syntax, and canonical rewriting.

The surface syntax is a small ASCII s-expression language::

    (E! j :: person)(articulate(j))
    (A x)(raven(x) -> black(x))
    (E o)(E b)(and (omelet(o)) (beer(b)) (loud(o)) (want(o, b)))
    (A x)((! black(x)) -> (! raven(x)))

Quantifier kinds are ``E`` (exists), ``E!`` (exists unique) and ``A`` (all);
an optional ``:: type`` after the bound variable restricts it. Atom arguments
are either bound variables or capitalized constants (proper names); a
lowercase argument with no binder in scope is rejected.

Canonicalization rewrites a form to a normal shape so that logically
equivalent statements compare equal: double negations are erased,
contrapositives are turned around, type-membership atoms are lifted into
quantifier restrictions, and conjunctions are flattened and sorted. The
process runs to a fixpoint; any type name still sitting in predicate
position afterwards is an error, never silently kept.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Union

from .errors import CanonicalizationError, LFSyntaxError
from .lexicon import Lexicon
from .ontology import Ontology, TypeName


class QuantKind(Enum):
    EXISTS = "E"
    EXISTS_UNIQUE = "E!"
    FORALL = "A"


@dataclass(frozen=True)
class Atom:
    pred: str
    args: tuple[str, ...]


@dataclass(frozen=True)
class And:
    items: tuple["Form", ...]


@dataclass(frozen=True)
class Not:
    item: "Form"


@dataclass(frozen=True)
class Implies:
    antecedent: "Form"
    consequent: "Form"


@dataclass(frozen=True)
class Quant:
    kind: QuantKind
    var: str
    vtype: TypeName | None
    body: "Form"


Form = Union[Atom, And, Not, Implies, Quant]

# A canonical form is an ordinary Form that the rewrites below have fixed;
# the alias only marks intent in signatures.
CanonicalForm = Form


def conj(items: list[Form] | tuple[Form, ...]) -> Form:
    """Build a conjunction, collapsing the one-element case."""
    flat: list[Form] = []
    for item in items:
        if isinstance(item, And):
            flat.extend(item.items)
        else:
            flat.append(item)
    if not flat:
        raise ValueError("empty conjunction")
    if len(flat) == 1:
        return flat[0]
    return And(tuple(flat))


# ----------------------------------------------------------------------
# parsing
# ----------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(::|->|[()!,]|[A-Za-z_][A-Za-z0-9_]*)")
_QUANT_KINDS = {"E": QuantKind.EXISTS, "E!": QuantKind.EXISTS_UNIQUE, "A": QuantKind.FORALL}


def _tokenize(source: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if m is None or not m.group(1):
            if source[pos:].strip():
                bad = source[pos:].lstrip()
                at = len(source) - len(bad)
                raise LFSyntaxError(f"unexpected character '{bad[0]}'", at)
            break
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    return tokens


def _is_ident(tok: str | None) -> bool:
    return bool(tok) and (tok[0].isalpha() or tok[0] == "_")


class _Parser:
    def __init__(self, source: str):
        self.source = source
        self.tokens = _tokenize(source)
        self.i = 0

    def peek(self, ahead: int = 0) -> str | None:
        j = self.i + ahead
        return self.tokens[j][0] if j < len(self.tokens) else None

    def pos(self, ahead: int = 0) -> int:
        j = self.i + ahead
        return self.tokens[j][1] if j < len(self.tokens) else len(self.source)

    def take(self, expected: str | None = None) -> str:
        if self.i >= len(self.tokens):
            raise LFSyntaxError(
                f"unexpected end of input" + (f", expected '{expected}'" if expected else ""),
                len(self.source),
            )
        tok, at = self.tokens[self.i]
        if expected is not None and tok != expected:
            raise LFSyntaxError(f"expected '{expected}', got '{tok}'", at)
        self.i += 1
        return tok

    def take_ident(self, what: str) -> str:
        tok = self.peek()
        if not _is_ident(tok):
            raise LFSyntaxError(f"expected {what}, got '{tok}'", self.pos())
        return self.take()

    # -- grammar ---------------------------------------------------------

    def form(self, bound: frozenset[str]) -> Form:
        tok = self.peek()
        if tok == "(":
            return self._parenthesized(bound)
        if _is_ident(tok):
            return self._atom(bound)
        raise LFSyntaxError(f"expected a form, got '{tok}'", self.pos())

    def _parenthesized(self, bound: frozenset[str]) -> Form:
        head = self.peek(1)
        if head == "!":
            self.take("(")
            self.take("!")
            inner = self.form(bound)
            self.take(")")
            return Not(inner)
        if head == "and":
            self.take("(")
            self.take("and")
            items = []
            while self.peek() != ")":
                if self.peek() is None:
                    raise LFSyntaxError("unterminated conjunction", self.pos())
                items.append(self.form(bound))
            self.take(")")
            if not items:
                raise LFSyntaxError("empty conjunction", self.pos())
            return conj(items)
        if self._quantifier_ahead():
            return self._quantifier(bound)
        # grouped form or implication
        self.take("(")
        left = self.form(bound)
        if self.peek() == "->":
            self.take("->")
            right = self.form(bound)
            self.take(")")
            return Implies(left, right)
        self.take(")")
        return left

    def _quantifier_ahead(self) -> bool:
        # "(" ident ident  or  "(" "E" "!" ident  means a binder follows.
        head, second = self.peek(1), self.peek(2)
        if head == "E" and second == "!":
            return True
        return _is_ident(head) and _is_ident(second) and self.peek(3) in ("::", ")")

    def _quantifier(self, bound: frozenset[str]) -> Form:
        self.take("(")
        at = self.pos()
        kind_tok = self.take()
        if kind_tok == "E" and self.peek() == "!":
            self.take("!")
            kind_tok = "E!"
        kind = _QUANT_KINDS.get(kind_tok)
        if kind is None:
            raise LFSyntaxError(f"unknown quantifier kind '{kind_tok}'", at)
        var_at = self.pos()
        var = self.take_ident("a variable")
        if var in bound:
            raise LFSyntaxError(f"'{var}' already bound in an enclosing scope", var_at)
        vtype = None
        if self.peek() == "::":
            self.take("::")
            vtype = self.take_ident("a type name")
        self.take(")")
        body = self.form(bound | {var})
        return Quant(kind, var, vtype, body)

    def _atom(self, bound: frozenset[str]) -> Form:
        pred = self.take_ident("a predicate")
        self.take("(")
        args = []
        while True:
            at = self.pos()
            term = self.take_ident("a term")
            if term not in bound and not term[0].isupper():
                raise LFSyntaxError(f"unbound variable '{term}'", at)
            args.append(term)
            if self.peek() == ",":
                self.take(",")
                continue
            break
        self.take(")")
        return Atom(pred, tuple(args))


def parse_lf(source: str) -> Form:
    """Parse surface syntax into a :class:`Form`. Errors carry positions."""
    parser = _Parser(source)
    form = parser.form(frozenset())
    if parser.peek() is not None:
        raise LFSyntaxError(f"trailing input '{parser.peek()}'", parser.pos())
    return form


# ----------------------------------------------------------------------
# printing
# ----------------------------------------------------------------------


def pretty(form: Form) -> str:
    """Render a form in the surface syntax. ``parse_lf(pretty(f)) == f``."""
    match form:
        case Atom(pred, args):
            return f"{pred}({', '.join(args)})"
        case Not(item):
            return f"(! {pretty(item)})"
        case Implies(antecedent, consequent):
            return f"({pretty(antecedent)} -> {pretty(consequent)})"
        case And(items):
            return "(and " + " ".join(_grouped(i) for i in items) + ")"
        case Quant(kind, var, vtype, body):
            head = f"({kind.value} {var} :: {vtype})" if vtype else f"({kind.value} {var})"
            return head + _grouped(body)
    raise TypeError(f"not a form: {form!r}")


def _grouped(form: Form) -> str:
    # Atoms need explicit parentheses when standing where a form is expected;
    # every other node prints its own.
    text = pretty(form)
    return f"({text})" if isinstance(form, Atom) else text


# ----------------------------------------------------------------------
# structural walks
# ----------------------------------------------------------------------


def binders(form: Form) -> list[tuple[str, TypeName | None]]:
    """All (variable, restriction) pairs in binding (pre-order) order."""
    out: list[tuple[str, TypeName | None]] = []

    def walk(f: Form):
        match f:
            case Quant(_, var, vtype, body):
                out.append((var, vtype))
                walk(body)
            case And(items):
                for i in items:
                    walk(i)
            case Not(item):
                walk(item)
            case Implies(a, c):
                walk(a)
                walk(c)
            case Atom():
                pass

    walk(form)
    return out


def atoms(form: Form) -> Iterator[Atom]:
    """All atoms, left to right."""
    match form:
        case Atom():
            yield form
        case And(items):
            for i in items:
                yield from atoms(i)
        case Not(item):
            yield from atoms(item)
        case Implies(a, c):
            yield from atoms(a)
            yield from atoms(c)
        case Quant(_, _, _, body):
            yield from atoms(body)


def constants(form: Form) -> list[str]:
    """Capitalized atom arguments not bound by any enclosing quantifier."""
    out: list[str] = []

    def walk(f: Form, bound: frozenset[str]):
        match f:
            case Atom(_, args):
                out.extend(a for a in args if a not in bound and a not in out)
            case And(items):
                for i in items:
                    walk(i, bound)
            case Not(item):
                walk(item, bound)
            case Implies(a, c):
                walk(a, bound)
                walk(c, bound)
            case Quant(_, var, _, body):
                walk(body, bound | {var})

    walk(form, frozenset())
    return out


# ----------------------------------------------------------------------
# canonicalization
# ----------------------------------------------------------------------


def canonicalize(form: Form, ont: Ontology, lex: Lexicon) -> CanonicalForm:
    """Rewrite ``form`` to canonical shape.

    Each pass applies, in order: double-negation elimination, contraposition
    of negated implications, lifting of type-membership atoms into quantifier
    restrictions, and conjunction flattening plus a lexicographic sort of
    conjuncts by printed form. Passes repeat until nothing changes.
    """
    cur = form
    for _ in range(100):
        nxt = _sort_pass(_lift_pass(_contra_pass(_negneg_pass(cur)), ont))
        if nxt == cur:
            break
        cur = nxt
    else:  # pragma: no cover - the rewrites strictly reduce
        raise CanonicalizationError("rewriting did not reach a fixpoint")
    _validate(cur, ont, lex)
    return cur


def _negneg_pass(f: Form) -> Form:
    match f:
        case Not(Not(inner)):
            return _negneg_pass(inner)
        case Not(item):
            return Not(_negneg_pass(item))
        case And(items):
            return And(tuple(_negneg_pass(i) for i in items))
        case Implies(a, c):
            return Implies(_negneg_pass(a), _negneg_pass(c))
        case Quant(kind, var, vtype, body):
            return Quant(kind, var, vtype, _negneg_pass(body))
    return f


def _contra_pass(f: Form) -> Form:
    match f:
        case Implies(Not(a), Not(c)):
            return Implies(_contra_pass(c), _contra_pass(a))
        case Implies(a, c):
            return Implies(_contra_pass(a), _contra_pass(c))
        case Not(item):
            return Not(_contra_pass(item))
        case And(items):
            return And(tuple(_contra_pass(i) for i in items))
        case Quant(kind, var, vtype, body):
            return Quant(kind, var, vtype, _contra_pass(body))
    return f


def _lift_pass(f: Form, ont: Ontology) -> Form:
    match f:
        # (A x)(T(x) -> body)  becomes  (A x :: T)(body)
        case Quant(QuantKind.FORALL, var, None, Implies(Atom(pred, args), body)) if (
            pred in ont and args == (var,)
        ):
            return Quant(QuantKind.FORALL, var, pred, _lift_pass(body, ont))
        # (E x)(and (T(x)) rest...)  becomes  (E x :: T)(and rest...). The
        # membership atom may sit below further existential binders, as in
        # (E o)(E b)(and (omelet(o)) ...), so the search pierces the
        # quantifier prefix down to the matrix.
        case Quant(kind, var, None, body) if kind is not QuantKind.FORALL:
            lifted = _extract_membership(body, var, ont)
            if lifted is not None:
                vtype, rest = lifted
                return Quant(kind, var, vtype, _lift_pass(rest, ont))
            return Quant(kind, var, None, _lift_pass(body, ont))
        case Quant(kind, var, vtype, body):
            return Quant(kind, var, vtype, _lift_pass(body, ont))
        case And(items):
            return And(tuple(_lift_pass(i, ont) for i in items))
        case Not(item):
            return Not(_lift_pass(item, ont))
        case Implies(a, c):
            return Implies(_lift_pass(a, ont), _lift_pass(c, ont))
    return f


def _extract_membership(
    body: Form, var: str, ont: Ontology
) -> tuple[TypeName, Form] | None:
    """Pull one membership atom for ``var`` out of a conjunction reachable
    through the quantifier prefix of ``body``. A lone membership atom stays
    put: removing it would leave the binder without a scope."""
    match body:
        case And(items):
            for idx, item in enumerate(items):
                if isinstance(item, Atom) and item.pred in ont and item.args == (var,):
                    rest = items[:idx] + items[idx + 1 :]
                    return item.pred, conj(list(rest))
            return None
        case Quant(kind, inner_var, vtype, inner):
            found = _extract_membership(inner, var, ont)
            if found is None:
                return None
            vt, rest = found
            return vt, Quant(kind, inner_var, vtype, rest)
    return None


def _sort_pass(f: Form) -> Form:
    match f:
        case And(items):
            flat: list[Form] = []
            for item in items:
                sorted_item = _sort_pass(item)
                if isinstance(sorted_item, And):
                    flat.extend(sorted_item.items)
                else:
                    flat.append(sorted_item)
            flat.sort(key=pretty)
            return flat[0] if len(flat) == 1 else And(tuple(flat))
        case Not(item):
            return Not(_sort_pass(item))
        case Implies(a, c):
            return Implies(_sort_pass(a), _sort_pass(c))
        case Quant(kind, var, vtype, body):
            return Quant(kind, var, vtype, _sort_pass(body))
    return f


def _validate(f: Form, ont: Ontology, lex: Lexicon):
    for atom in atoms(f):
        if atom.pred in ont:
            raise CanonicalizationError(
                f"type name '{atom.pred}' used as a predicate where no rewrite can lift it: "
                f"{pretty(atom)}"
            )
        if lex.atom_signature(atom.pred) is None:
            raise CanonicalizationError(f"unknown predicate '{atom.pred}'")


# ----------------------------------------------------------------------
# alpha equality
# ----------------------------------------------------------------------


def alpha_equal(a: Form, b: Form) -> bool:
    """Structural equality up to consistent renaming of bound variables."""
    return _alpha(a, b, {}, {})


def _alpha(a: Form, b: Form, env_a: dict[str, int], env_b: dict[str, int]) -> bool:
    match a, b:
        case Atom(pa, aa), Atom(pb, ab):
            if pa != pb or len(aa) != len(ab):
                return False
            for x, y in zip(aa, ab):
                if (x in env_a) != (y in env_b):
                    return False
                if x in env_a:
                    if env_a[x] != env_b[y]:
                        return False
                elif x != y:  # free constants compare literally
                    return False
            return True
        case And(ia), And(ib):
            return len(ia) == len(ib) and all(
                _alpha(x, y, env_a, env_b) for x, y in zip(ia, ib)
            )
        case Not(x), Not(y):
            return _alpha(x, y, env_a, env_b)
        case Implies(xa, xc), Implies(ya, yc):
            return _alpha(xa, ya, env_a, env_b) and _alpha(xc, yc, env_a, env_b)
        case Quant(ka, va, ta, ba), Quant(kb, vb, tb, bb):
            if ka is not kb or ta != tb:
                return False
            serial = len(env_a)
            return _alpha(ba, bb, {**env_a, va: serial}, {**env_b, vb: serial})
    return False
