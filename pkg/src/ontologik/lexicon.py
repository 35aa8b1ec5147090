"""Logical predicates, salient relations, and proper names.

The lexicon is the second sort of the model: predicates carry per-argument
type expectations but are not themselves types, and no identifier may live
in both sorts at once. Salient relations are the bridges metonymic coercion
may walk (who does what to what); proper names map constants to their
declared types.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import LexiconError
from .ontology import Ontology, SubsumptionVerdict, TypeName

_PRED_RE = re.compile(r"pred\s+([A-Za-z_]\w*)\s*\(\s*([^)]*?)\s*\)$")
_REL_RE = re.compile(r"rel\s+([A-Za-z_]\w*)\s*\(\s*([A-Za-z_]\w*)\s*,\s*([A-Za-z_]\w*)\s*\)$")
_NAME_RE = re.compile(r"name\s+([A-Za-z_]\w*)\s*::\s*([A-Za-z_]\w*)$")


@dataclass(frozen=True)
class PredicateSignature:
    """A predicate and the type each argument slot expects."""

    name: str
    arg_types: tuple[TypeName, ...]

    @property
    def arity(self) -> int:
        return len(self.arg_types)


@dataclass(frozen=True)
class SalientRelation:
    """A binary relation coercion may appeal to, e.g. EATING(person, food)."""

    name: str
    domain_type: TypeName
    range_type: TypeName
    priority: int  # declaration order; lower wins ties


@dataclass(frozen=True)
class NameDecl:
    """A proper name and its declared type."""

    name: str
    declared_type: TypeName


@dataclass
class Lexicon:
    """Predicate signatures, salient relations, and names. Load-once."""

    signatures: dict[str, PredicateSignature] = field(default_factory=dict)
    relations: list[SalientRelation] = field(default_factory=list)
    names: dict[str, NameDecl] = field(default_factory=dict)

    def atom_signature(self, pred: str) -> PredicateSignature | None:
        """Signature for anything that may head an atom: a declared predicate,
        or a salient relation standing as its own two-place predicate (the
        shape analysis emits when it surfaces missing text)."""
        sig = self.signatures.get(pred)
        if sig is not None:
            return sig
        for rel in self.relations:
            if rel.name == pred:
                return PredicateSignature(rel.name, (rel.domain_type, rel.range_type))
        return None

    def expectation(self, pred: str, arg_index: int) -> TypeName:
        """The type expected at 1-based ``arg_index`` of ``pred``."""
        sig = self.signatures.get(pred)
        if sig is None:
            raise LexiconError(f"unknown predicate '{pred}'")
        if not 1 <= arg_index <= sig.arity:
            raise LexiconError(
                f"argument index {arg_index} out of range for '{pred}' "
                f"(arity {sig.arity})"
            )
        return sig.arg_types[arg_index - 1]

    def coercion_candidates(
        self, ont: Ontology, target_type: TypeName, source_type: TypeName
    ) -> list[SalientRelation]:
        """Relations that could reconcile ``source_type`` with ``target_type``.

        A relation qualifies when its domain is comparable with the target and
        its range comparable with the source. Candidates come back ordered by
        exactness of the range match, then of the domain match, then priority,
        so callers can commit to the first without a second look.
        """
        ont.require(target_type)
        ont.require(source_type)
        found = [
            rel
            for rel in self.relations
            if ont.compare(rel.domain_type, target_type) is not SubsumptionVerdict.INCOMPARABLE
            and ont.compare(rel.range_type, source_type) is not SubsumptionVerdict.INCOMPARABLE
        ]
        found.sort(
            key=lambda rel: (
                rel.range_type != source_type,
                rel.domain_type != target_type,
                rel.priority,
            )
        )
        return found


# ----------------------------------------------------------------------
# loading
# ----------------------------------------------------------------------


def load_lexicon(source: str, ont: Ontology) -> Lexicon:
    """Parse lexicon source text against an already-loaded ontology.

    Line formats::

        pred <name>(<type>[, <type>]*)
        rel <NAME>(<domain>, <range>)
        name <Name> :: <type>

    Comments (``#``) and blank lines are ignored. All types mentioned must
    exist in the ontology, and no predicate may reuse a type name.
    """
    lex = Lexicon()
    for lineno, raw in enumerate(source.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("pred"):
            m = _PRED_RE.match(line)
            if not m:
                raise LexiconError(f"malformed predicate declaration '{line}'", lineno)
            name, args = m.group(1), [a.strip() for a in m.group(2).split(",")]
            if not all(args) or not args:
                raise LexiconError(f"predicate '{name}' needs at least one argument type", lineno)
            if name in ont:
                raise LexiconError(
                    f"predicate '{name}' clashes with an ontology type", lineno
                )
            if name in lex.signatures:
                raise LexiconError(f"duplicate predicate '{name}'", lineno)
            for a in args:
                _require_type(ont, a, lineno)
            lex.signatures[name] = PredicateSignature(name, tuple(args))
        elif line.startswith("rel"):
            m = _REL_RE.match(line)
            if not m:
                raise LexiconError(f"malformed relation declaration '{line}'", lineno)
            name, dom, rng = m.groups()
            if any(rel.name == name for rel in lex.relations):
                raise LexiconError(f"duplicate relation '{name}'", lineno)
            _require_type(ont, dom, lineno)
            _require_type(ont, rng, lineno)
            lex.relations.append(SalientRelation(name, dom, rng, priority=len(lex.relations)))
        elif line.startswith("name"):
            m = _NAME_RE.match(line)
            if not m:
                raise LexiconError(f"malformed name declaration '{line}'", lineno)
            name, t = m.groups()
            if name in lex.names:
                raise LexiconError(f"duplicate name '{name}'", lineno)
            _require_type(ont, t, lineno)
            lex.names[name] = NameDecl(name, t)
        else:
            raise LexiconError(f"unrecognized declaration '{line}'", lineno)
    return lex


def _require_type(ont: Ontology, name: str, lineno: int):
    if name not in ont:
        raise LexiconError(f"unknown type '{name}'", lineno)
