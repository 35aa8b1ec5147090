import random

import pytest

from ontologik import (
    And,
    Atom,
    CanonicalizationError,
    Implies,
    LFSyntaxError,
    Not,
    Quant,
    QuantKind,
    alpha_equal,
    atoms,
    binders,
    canonicalize,
    conj,
    constants,
    parse_lf,
    pretty,
)

from oracles import random_form

K = QuantKind


# ----------------------------------------------------------------------
# parsing
# ----------------------------------------------------------------------


def test_parse_unique_existential_with_restriction():
    form = parse_lf("(E! j :: person)(articulate(j))")
    assert form == Quant(K.EXISTS_UNIQUE, "j", "person", Atom("articulate", ("j",)))


def test_parse_universal_implication():
    form = parse_lf("(A x)(raven(x) -> black(x))")
    assert form == Quant(
        K.FORALL, "x", None, Implies(Atom("raven", ("x",)), Atom("black", ("x",)))
    )


def test_parse_negated_implication():
    form = parse_lf("(A x)((! black(x)) -> (! raven(x)))")
    assert form == Quant(
        K.FORALL,
        "x",
        None,
        Implies(Not(Atom("black", ("x",))), Not(Atom("raven", ("x",)))),
    )


def test_parse_nested_existentials_with_conjunction():
    form = parse_lf("(E o)(E b)(and (omelet(o)) (beer(b)) (want(o, b)))")
    assert form == Quant(
        K.EXISTS,
        "o",
        None,
        Quant(
            K.EXISTS,
            "b",
            None,
            And((Atom("omelet", ("o",)), Atom("beer", ("b",)), Atom("want", ("o", "b")))),
        ),
    )


def test_parse_constant_argument():
    form = parse_lf("(E x)(want(x, Julie))")
    assert form == Quant(K.EXISTS, "x", None, Atom("want", ("x", "Julie")))


def test_parse_bare_atom_with_constant():
    assert parse_lf("beautiful(Julie)") == Atom("beautiful", ("Julie",))


def test_nested_conjunctions_flatten():
    form = parse_lf("(and (and (loud(Julie)) (red(Julie))) (black(Julie)))")
    assert isinstance(form, And) and len(form.items) == 3


@pytest.mark.parametrize(
    "source, fragment",
    [
        ("(E x)(loud(y))", "unbound variable 'y'"),
        ("loud(x)", "unbound variable 'x'"),
        ("(E x)((E x)(loud(x)))", "already bound"),
        ("(Q x)(loud(x))", "unknown quantifier kind"),
        ("(E x)(loud(x)) extra(x)", "trailing input"),
        ("(E x)(loud(x)", "unexpected end of input"),
        ("(and )", "empty conjunction"),
        ("(E x)(@loud(x))", "unexpected character"),
        ("", "expected a form"),
        ("(E x :: )(loud(x))", "expected a type name"),
    ],
)
def test_parse_rejections(source, fragment):
    with pytest.raises(LFSyntaxError, match=fragment):
        parse_lf(source)


def test_parse_error_positions():
    with pytest.raises(LFSyntaxError) as err:
        parse_lf("(E x)(loud(y))")
    assert err.value.position == 11
    assert "at position 11" in str(err.value)


# ----------------------------------------------------------------------
# printing and round-trips
# ----------------------------------------------------------------------


@pytest.mark.parametrize(
    "source",
    [
        "(E! j :: person)(articulate(j))",
        "(A x)(raven(x) -> black(x))",
        "(A x :: raven)(black(x))",
        "(E o)(E b)(and (omelet(o)) (beer(b)) (loud(o)) (want(o, b)))",
        "(A x)((! black(x)) -> (! raven(x)))",
        "(E x)((loud(x) -> (! red(x))))",
        "beautiful(Julie)",
    ],
)
def test_pretty_reproduces_source(source):
    form = parse_lf(source)
    printed = pretty(form)
    assert parse_lf(printed) == form
    # printing is already in surface syntax, so it is its own fixpoint
    assert pretty(parse_lf(printed)) == printed


def test_pretty_examples():
    assert pretty(Atom("want", ("o", "b"))) == "want(o, b)"
    assert pretty(Not(Atom("red", ("Julie",)))) == "(! red(Julie))"
    # pretty never rewrites, so a double negation survives verbatim
    assert pretty(Not(Not(Atom("red", ("Julie",))))) == "(! (! red(Julie)))"
    assert (
        pretty(Quant(K.EXISTS_UNIQUE, "j", "person", Atom("articulate", ("j",))))
        == "(E! j :: person)(articulate(j))"
    )
    assert (
        pretty(conj([Atom("loud", ("Julie",)), Atom("red", ("Julie",))]))
        == "(and (loud(Julie)) (red(Julie)))"
    )


def test_round_trip_on_random_forms():
    rng = random.Random(902)
    for _ in range(500):
        form = random_form(rng, max_depth=6)
        assert parse_lf(pretty(form)) == form


# ----------------------------------------------------------------------
# structural walks
# ----------------------------------------------------------------------


def test_binders_in_binding_order():
    form = parse_lf("(E o)(E b :: beer)(and (loud(o)) (want(o, b)))")
    assert binders(form) == [("o", None), ("b", "beer")]


def test_atoms_left_to_right():
    form = parse_lf("(A x)(raven(x) -> black(x))")
    assert [a.pred for a in atoms(form)] == ["raven", "black"]


def test_constants_excludes_bound_variables():
    form = parse_lf("(E x)(and (want(x, Julie)) (beautiful(Julie)))")
    assert constants(form) == ["Julie"]
    assert constants(parse_lf("(E x)(loud(x))")) == []


# ----------------------------------------------------------------------
# conj
# ----------------------------------------------------------------------


def test_conj_collapses_and_flattens():
    a, b, c = Atom("loud", ("Julie",)), Atom("red", ("Julie",)), Atom("black", ("Julie",))
    assert conj([a]) == a
    assert conj([And((a, b)), c]) == And((a, b, c))
    with pytest.raises(ValueError):
        conj([])


# ----------------------------------------------------------------------
# canonicalization
# ----------------------------------------------------------------------


def test_membership_lifts_into_universal_restriction(ont, lex):
    got = canonicalize(parse_lf("(A x)(raven(x) -> black(x))"), ont, lex)
    assert got == parse_lf("(A x :: raven)(black(x))")
    assert pretty(got) == "(A x :: raven)(black(x))"


def test_contrapositive_canonicalizes_to_the_direct_form(ont, lex):
    direct = canonicalize(parse_lf("(A x)(raven(x) -> black(x))"), ont, lex)
    contra = canonicalize(parse_lf("(A x)((! black(x)) -> (! raven(x)))"), ont, lex)
    assert direct == contra


def test_random_contrapositive_pairs_share_a_canonical_form(ont, lex):
    rng = random.Random(906)
    unary = ["articulate", "loud", "beautiful", "red", "black"]
    for _ in range(200):
        vtype = rng.choice(ont.nodes)
        literals = [Atom(p, ("x",)) for p in rng.sample(unary, rng.randint(1, 3))]
        if len(literals) > 1:
            # only inner literals may flip: a negated top node would cancel
            # against the contrapositive's outer negation before the
            # contraposition pass ever sees the implication
            literals = [Not(a) if rng.random() < 0.3 else a for a in literals]
        body = conj(literals)
        membership = Atom(vtype, ("x",))
        direct = Quant(QuantKind.FORALL, "x", None, Implies(membership, body))
        flipped = Quant(QuantKind.FORALL, "x", None, Implies(Not(body), Not(membership)))
        assert alpha_equal(canonicalize(direct, ont, lex), canonicalize(flipped, ont, lex))


def test_double_negation_eliminated(ont, lex):
    got = canonicalize(parse_lf("(E x :: person)((! (! loud(x))))"), ont, lex)
    assert got == parse_lf("(E x :: person)(loud(x))")


def test_membership_lifts_through_quantifier_prefix(ont, lex):
    got = canonicalize(
        parse_lf("(E o)(E b)(and (omelet(o)) (beer(b)) (loud(o)) (want(o, b)))"),
        ont,
        lex,
    )
    assert pretty(got) == "(E o :: omelet)(E b :: beer)(and (loud(o)) (want(o, b)))"


def test_conjuncts_sort_by_printed_form(ont, lex):
    got = canonicalize(
        parse_lf("(E x :: person)(and (loud(x)) (articulate(x)) (beautiful(x)))"),
        ont,
        lex,
    )
    assert pretty(got) == "(E x :: person)(and (articulate(x)) (beautiful(x)) (loud(x)))"


def test_canonicalize_keeps_unrestricted_quantifier_without_membership(ont, lex):
    got = canonicalize(parse_lf("(E x)(loud(x))"), ont, lex)
    assert got == parse_lf("(E x)(loud(x))")


def test_relation_atoms_are_valid_predicates(ont, lex):
    source = "(E p :: person)(E f :: omelet)(EATING(p, f))"
    assert pretty(canonicalize(parse_lf(source), ont, lex)) == source


def test_lone_membership_atom_is_stuck(ont, lex):
    with pytest.raises(CanonicalizationError, match="type name 'person'"):
        canonicalize(parse_lf("(E x)(person(x))"), ont, lex)


def test_membership_of_constant_is_stuck(ont, lex):
    with pytest.raises(CanonicalizationError, match="type name 'person'"):
        canonicalize(parse_lf("(E x)(and (person(Julie)) (loud(x)))"), ont, lex)


def test_membership_under_typed_binder_is_stuck(ont, lex):
    with pytest.raises(CanonicalizationError, match="type name 'person'"):
        canonicalize(parse_lf("(E x :: person)(and (person(x)) (loud(x)))"), ont, lex)


def test_unknown_predicate_rejected(ont, lex):
    with pytest.raises(CanonicalizationError, match="unknown predicate 'sings'"):
        canonicalize(parse_lf("(E x)(sings(x))"), ont, lex)


def test_canonicalize_idempotent_on_random_forms(ont, lex):
    rng = random.Random(903)
    for _ in range(500):
        form = random_form(rng, max_depth=6)
        once = canonicalize(form, ont, lex)
        assert canonicalize(once, ont, lex) == once


def test_canonicalize_preserves_atom_content_on_random_forms(ont, lex):
    # none of these forms contain membership atoms, so rewriting may only
    # reorder and restructure: the predicate multiset and the constants stay
    rng = random.Random(904)
    for _ in range(200):
        form = random_form(rng, max_depth=5)
        got = canonicalize(form, ont, lex)
        assert sorted(a.pred for a in atoms(got)) == sorted(a.pred for a in atoms(form))
        assert set(constants(got)) == set(constants(form))


# ----------------------------------------------------------------------
# alpha equality
# ----------------------------------------------------------------------


def test_alpha_equal_renames_bound_variables():
    a = parse_lf("(A x :: raven)(black(x))")
    b = parse_lf("(A y :: raven)(black(y))")
    assert alpha_equal(a, b)


def test_alpha_equal_respects_structure():
    a = parse_lf("(A x :: raven)(black(x))")
    assert not alpha_equal(a, parse_lf("(E x :: raven)(black(x))"))  # kind
    assert not alpha_equal(a, parse_lf("(A x :: bird)(black(x))"))  # restriction
    assert not alpha_equal(a, parse_lf("(A x :: raven)(red(x))"))  # predicate
    assert not alpha_equal(a, parse_lf("(A x)(black(x))"))  # missing restriction


def test_alpha_equal_tracks_bindings_not_spellings():
    a = parse_lf("(E x)(E y)(want(x, y))")
    b = parse_lf("(E y)(E x)(want(y, x))")
    crossed = parse_lf("(E y)(E x)(want(x, y))")
    assert alpha_equal(a, b)
    assert not alpha_equal(a, crossed)


def test_alpha_equal_constants_compare_literally():
    assert alpha_equal(parse_lf("beautiful(Julie)"), parse_lf("beautiful(Julie)"))
    assert not alpha_equal(parse_lf("beautiful(Julie)"), parse_lf("beautiful(Jules)"))


def test_alpha_equal_on_random_forms_is_reflexive():
    rng = random.Random(905)
    for _ in range(100):
        form = random_form(rng, max_depth=5)
        assert alpha_equal(form, form)
