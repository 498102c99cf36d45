from collections import Counter
from fractions import Fraction

import pytest

from wcfg import (
    AnnotatedVariable,
    ExpansiveGrammar,
    GrammarFormatError,
    KTooSmall,
    RegularState,
    at_most_k_grammar,
    degree,
    derivation_index,
    dimension_bound,
    enumerate_trees,
    grammar_series,
    ldf_derivation,
    ldf_sort,
    load_grammar,
    parikh_series_bruteforce,
    project_tree,
    regularize,
    render_grammar,
    replay_derivation,
    tree_weight,
    tree_yield,
    word_weight_map,
)
from wcfg.regularize import is_annotated, level_of, strip_annotation

from fixtures import load_fixture
from grammar_gen import random_nonexpansive_family

BT = load_fixture("binary_tail.wcfg")

ANNOTATED_BT = """\
semiring Q
terminals a b
variables X1.1.e X1.1.m X2.0.e X2.0.m X2.1.e X2.1.m
start X1.1.m
rule X2.0.e -> a : 1
rule X2.0.e -> b X2.0.e : 1
rule X2.1.e -> b X2.1.e : 1
rule X1.1.e -> a X2.1.e X2.0.m : 1
rule X1.1.e -> a X2.0.m X2.1.e : 1
rule X1.1.e -> a X2.0.e X2.0.e : 1
rule X1.1.m -> X1.1.e : 1
rule X2.0.m -> X2.0.e : 1
rule X2.1.m -> X2.0.e : 1
rule X2.1.m -> X2.1.e : 1
"""

REGULAR_BT = """\
semiring Q
terminals a b
variables <X1.1.m> <X1.1.e> <X2.0.m|X2.1.e> <X2.0.e|X2.0.e> <X2.0.e|X2.1.e> <X2.0.e> <X2.1.e>
start <X1.1.m>
rule <X1.1.m> -> <X1.1.e> : 1
rule <X1.1.e> -> a <X2.0.m|X2.1.e> : 2
rule <X1.1.e> -> a <X2.0.e|X2.0.e> : 1
rule <X2.0.m|X2.1.e> -> <X2.0.e|X2.1.e> : 1
rule <X2.0.e|X2.0.e> -> a <X2.0.e> : 1
rule <X2.0.e|X2.0.e> -> b <X2.0.e|X2.0.e> : 1
rule <X2.0.e|X2.1.e> -> a <X2.1.e> : 1
rule <X2.0.e|X2.1.e> -> b <X2.0.e|X2.1.e> : 1
rule <X2.0.e> -> a : 1
rule <X2.0.e> -> b <X2.0.e> : 1
rule <X2.1.e> -> b <X2.1.e> : 1
"""


def test_annotated_variable_names_round_trip():
    v = AnnotatedVariable("X2", 1, "e")
    assert v.name == "X2.1.e"
    assert AnnotatedVariable.parse("X2.1.e") == v
    assert is_annotated("X2.1.e") and not is_annotated("X2")
    assert level_of("X2.1.e") == 1
    assert strip_annotation("X2.1.e") == "X2"


def test_regular_state_names_round_trip():
    s = RegularState(("X2.0.e", "X2.1.e"))
    assert s.name == "<X2.0.e|X2.1.e>"
    assert RegularState.parse("<X2.0.e|X2.1.e>") == s


def test_annotated_binary_tail_golden():
    assert render_grammar(at_most_k_grammar(BT, 1)) == ANNOTATED_BT


def test_annotation_rejects_k_below_the_dimension_bound():
    with pytest.raises(KTooSmall, match="dimension bound is 1"):
        at_most_k_grammar(BT, 0)
    with pytest.raises(KTooSmall):
        at_most_k_grammar(BT, -1)


def test_annotation_rejects_already_annotated_names():
    ann = at_most_k_grammar(BT, 1)
    with pytest.raises(GrammarFormatError):
        at_most_k_grammar(ann, 1)


def test_annotation_preserves_trees_weights_and_words():
    # one annotated tree per original tree, same yield and weight
    for name, bound in (("binary_tail.wcfg", 8), ("two_letter_star.wcfg", 6),
                        ("exponential_ambiguity.wcfg", 9),
                        ("tropical_paths.wcfg", 6)):
        g = load_fixture(name)
        ann = at_most_k_grammar(g, dimension_bound(g))
        original = Counter(
            (tree_yield(g, t), tree_weight(g, t))
            for t in enumerate_trees(g, max_terminals=bound))
        annotated = Counter(
            (tuple(ss for ss in tree_yield(ann, t)), tree_weight(ann, t))
            for t in enumerate_trees(ann, max_terminals=bound))
        assert original == annotated, name
        assert word_weight_map(g, bound) == word_weight_map(ann, bound), name


def test_annotation_with_larger_k_is_still_faithful():
    ann2 = at_most_k_grammar(BT, 2)
    assert word_weight_map(BT, 8) == word_weight_map(ann2, 8)
    assert grammar_series(ann2, 7) == grammar_series(BT, 7)


def test_projection_is_a_bijection_on_complete_trees():
    ann = at_most_k_grammar(BT, 1)
    annotated_trees = enumerate_trees(ann, max_terminals=7)
    projected = [project_tree(ann, t, BT) for t in annotated_trees]
    assert len(set(projected)) == len(projected)
    assert set(projected) == set(enumerate_trees(BT, max_terminals=7))
    for before, after in zip(annotated_trees, projected):
        assert tree_yield(ann, before) == tree_yield(BT, after)
        assert tree_weight(ann, before) == tree_weight(BT, after)


def test_ldf_sort_orders_terminals_first_then_levels():
    assert ldf_sort(("X2.1.e", "a", "X2.0.e", "b")) == \
        ("a", "b", "X2.0.e", "X2.1.e")
    # equal levels keep their relative order
    assert ldf_sort(("X9.1.e", "X2.1.e")) == ("X9.1.e", "X2.1.e")
    assert ldf_sort(()) == ()


def test_ldf_derivations_respect_the_width_bound():
    ann = at_most_k_grammar(BT, 1)
    k = max(level_of(v) for v in ann.variables)
    m = degree(ann)
    for tree in enumerate_trees(ann, max_terminals=7):
        d = ldf_derivation(ann, tree)
        assert derivation_index(ann, d) <= k * m + 1
        assert replay_derivation(ann, d)[-1] == tree_yield(ann, tree)


def test_ldf_derivation_width_bound_on_random_grammars():
    for fam in random_nonexpansive_family(99, 10):
        g = fam["N"]
        k = dimension_bound(g)
        ann = at_most_k_grammar(g, k)
        m = degree(ann)
        for tree in enumerate_trees(ann, max_terminals=5):
            assert derivation_index(ann, ldf_derivation(ann, tree)) <= k * m + 1


def test_regular_binary_tail_golden():
    assert render_grammar(regularize(BT)) == REGULAR_BT


def test_regularize_defaults_k_to_the_dimension_bound():
    assert regularize(BT) == regularize(BT, 1)


def test_regularize_rejects_expansive_grammars():
    for name in ("catalan.wcfg", "unary_double.wcfg", "two_letter_star_cfl.wcfg"):
        with pytest.raises(ExpansiveGrammar):
            regularize(load_fixture(name))


def test_duplicate_projections_pool_their_weights():
    # two annotated rules collapse onto one regular rule of weight 2
    reg = regularize(BT)
    merged = [r for r in reg.rules if r.weight == Fraction(2)]
    assert len(merged) == 1
    assert merged[0].lhs == "<X1.1.e>"
    assert merged[0].rhs == ("a", "<X2.0.m|X2.1.e>")


def test_regular_states_are_sorted_by_level():
    for fam in random_nonexpansive_family(31, 8):
        reg = regularize(fam["Q"])
        for state_name in reg.variables:
            levels = [level_of(v) for v in RegularState.parse(state_name).variables]
            assert levels == sorted(levels), state_name


def test_regular_grammar_is_right_linear():
    reg = regularize(BT)
    for rule in reg.rules:
        variables = [s for s in rule.rhs if reg.is_variable(s)]
        assert len(variables) <= 1
        if variables:
            assert rule.rhs[-1] == variables[0]


def test_regularized_series_match_over_all_semirings():
    for name in ("binary_tail.wcfg", "two_letter_star.wcfg",
                 "exponential_ambiguity.wcfg", "tropical_paths.wcfg"):
        g = load_fixture(name)
        reg = regularize(g)
        assert grammar_series(reg, 6) == grammar_series(g, 6), name
        assert parikh_series_bruteforce(reg, 5) == parikh_series_bruteforce(g, 5), name


def test_regularize_random_family_battery():
    for fam in random_nonexpansive_family(5150, 12):
        k = dimension_bound(fam["Q"])
        for key, g in fam.items():
            ann = at_most_k_grammar(g, k)
            assert word_weight_map(g, 6) == word_weight_map(ann, 6), key
            reg = regularize(g, k)
            assert grammar_series(reg, 5) == grammar_series(g, 5), key
