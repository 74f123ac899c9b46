import itertools

import pytest
from hypothesis import given, settings, strategies as st

from operadtower import coherence
from operadtower.catop import (DIAGRAMS, Iso, WordMorphism, YMor, check_algebra_gamma_compat,
                               check_diagrams, e_compose, e_gamma, e_identity, expression_model,
                               format_yop, iso_compose, iso_identity, iso_tensor, ly_view, parse_yop,
                               structure_morphisms, word_model, y_gamma, y_morphism_action,
                               y_object_action, y_object_on_morphisms, y_op)
from operadtower.coherence import UNIT, Tensor, Var, parse_expr
from operadtower.lsym import LElement, l_act
from operadtower.perm import Permutation, all_permutations, identity, transposition
from operadtower.treeop import LEAF, PAIR, Node
from operadtower.zoperad import BASEPOINT, Z_IDENTITY, Z_PRODUCT, ZElement, parse_z

W = word_model()
X = expression_model()
T = transposition()
MS = structure_morphisms()
PRODUCT = y_op(Z_PRODUCT)
UNIT_OP = y_op(BASEPOINT)


def test_structure_morphisms_are_the_named_generators():
    alpha = MS["alpha"]
    assert alpha.src.base == ZElement(Node(PAIR, LEAF), (1, 2, 3))
    assert alpha.tgt.base == ZElement(Node(LEAF, PAIR), (1, 2, 3))
    assert alpha.src.perm == alpha.tgt.perm == identity(3)
    assert MS["tau"].src == PRODUCT and MS["tau"].tgt == LElement(Z_PRODUCT, T)
    assert MS["eta_l"].src.base == parse_z("[(1,1);{2}]")
    assert MS["eta_r"].src.base == parse_z("[(1,1);{1}]")
    assert MS["eta_l"].tgt == MS["eta_r"].tgt == y_op(Z_IDENTITY)


def test_yop_text_form():
    y = LElement(Z_PRODUCT, T)
    assert format_yop(y) == "[(1,1);{1,2}] | [2,1]"
    assert parse_yop(format_yop(y)) == y
    assert parse_yop("[1;{}]") == UNIT_OP


def test_hom_sets_are_singletons():
    a, b, c = PRODUCT, LElement(Z_PRODUCT, T), y_op(parse_z("[((1,1),1);{1,3}]"))
    assert e_compose(YMor(b, c), YMor(a, b)) == YMor(a, c)
    f = YMor(a, c)
    assert e_compose(f, e_identity(a)) == f == e_compose(e_identity(c), f)
    with pytest.raises(ValueError):
        e_compose(YMor(a, b), YMor(a, c))
    with pytest.raises(ValueError):
        YMor(PRODUCT, UNIT_OP)


def test_e_composition_is_associative_on_samples():
    ys = [y for y in ly_view().all_elements(3) if y.degree == 2]
    for a, b, c, d in itertools.islice(itertools.product(ys, repeat=4), 0, None, 97):
        h, g, f = YMor(c, d), YMor(b, c), YMor(a, b)
        assert e_compose(h, e_compose(g, f)) == e_compose(e_compose(h, g), f)


# the word model

def test_object_action_examples():
    assert y_object_action(PRODUCT, ["ab", "c"], W) == "abc"
    assert y_object_action(LElement(Z_PRODUCT, T), ["ab", "c"], W) == "cab"
    assert y_object_action(UNIT_OP, [], W) == ""
    assert y_object_action(y_op(parse_z("[((1,1),1);{1,3}]")), ["a", "b"], W) == "ab"


def test_generators_act_by_concatenation_and_empty_word():
    words = W.objects(1)
    for (a,), (b,) in itertools.product(words, repeat=2):
        assert y_object_action(PRODUCT, [a, b], W) == a + b
    assert y_object_action(UNIT_OP, [], W) == W.unit


def test_object_action_rejects_wrong_arity():
    with pytest.raises(ValueError):
        y_object_action(PRODUCT, ["a"], W)


def test_morphism_action_examples():
    tau = y_morphism_action(MS["tau"], ["a", "b"], W)
    assert (tau.src, tau.tgt, tau.bij) == ("ab", "ba", Permutation((2, 1)))
    eta = y_morphism_action(MS["eta_r"], ["a"], W)
    assert (eta.src, eta.tgt, eta.bij) == ("a", "a", identity(1))
    y = y_op(parse_z("[((1,1),1);{1,2}]"))
    assert y_morphism_action(e_identity(y), ["ab", "b"], W) == iso_identity("abb", W)


def test_tau_moves_whole_words():
    m = y_morphism_action(MS["tau"], ["ab", "b"], W)
    assert (m.src, m.tgt) == ("abb", "bab")
    assert m.bij == Permutation((2, 3, 1))
    m.check(W)


def test_word_morphism_checks_letters():
    assert WordMorphism is Iso
    Iso("ab", "ba", T).check(W)
    with pytest.raises(ValueError):
        Iso("ab", "ab", T).check(W)
    assert Iso("ab", "ba", T).to_dict() == {"src": "ab", "tgt": "ba", "images": [2, 1]}


def test_iso_composition_needs_matching_objects():
    with pytest.raises(ValueError):
        iso_compose(Iso("ab", "ba", T), Iso("ab", "ba", T))


def test_tensor_of_morphisms_is_product_on_morphisms():
    f = Iso("ab", "ba", T)
    g = iso_identity("a", W)
    assert y_object_on_morphisms(PRODUCT, [f, g], W) == iso_tensor(f, g, W)
    swapped = y_object_on_morphisms(LElement(Z_PRODUCT, T), [f, g], W)
    assert (swapped.src, swapped.tgt, swapped.bij) == ("aab", "aba", Permutation((1, 3, 2)))


@settings(max_examples=100)
@given(st.data())
def test_morphism_action_is_functorial(data):
    ys = [y for y in ly_view().all_elements(3) if y.degree == 2]
    a, b, c = (data.draw(st.sampled_from(ys)) for _ in range(3))
    objs = data.draw(st.sampled_from(W.objects(2)))
    f, g = YMor(a, b), YMor(b, c)
    composite = y_morphism_action(e_compose(g, f), objs, W)
    assert composite == iso_compose(y_morphism_action(g, objs, W), y_morphism_action(f, objs, W))


# the expression model

def test_expression_model_structure_maps_move_brackets():
    a, b, c = Var(1), Var(2), Var(3)
    alpha = y_morphism_action(MS["alpha"], [a, b, c], X)
    assert alpha.src == parse_expr("((x1*x2)*x3)") and alpha.tgt == parse_expr("(x1*(x2*x3))")
    eta_l = y_morphism_action(MS["eta_l"], [a], X)
    assert eta_l.src == parse_expr("(I*x1)") and eta_l.tgt == a


def test_expression_model_bijections_are_label_matching():
    ys = [y for y in ly_view().all_elements(3) if y.degree == 2]
    for objs in X.objects(2):
        for s, t in itertools.product(ys, repeat=2):
            m = y_morphism_action(YMor(s, t), objs, X)
            assert m.bij == coherence.label_bijection(m.src, m.tgt)


def test_expression_objects_have_distinct_variables():
    for objs in X.objects(3):
        vs = [v for o in objs for v in coherence.variables(o)]
        assert vs == list(range(1, len(vs) + 1))
        assert sum(len(coherence.variables(o)) + coherence.unit_count(o) for o in objs) <= 4


# diagrams and compatibility

@pytest.mark.parametrize("model", [W, X], ids=["word", "expression"])
def test_all_diagrams_commute(model):
    report = check_diagrams(model)
    assert report.ok
    for name in DIAGRAMS:
        assert report.passed_by_law[name] > 0


def test_word_pentagon_and_hexagon_examples():
    report = check_diagrams(W)
    assert report.passed_by_law["pentagon"] == 7 ** 4
    assert report.passed_by_law["hexagon"] == 7 ** 3
    from operadtower.catop import _diagram_sides
    sides = _diagram_sides(W)
    lhs, rhs = sides["pentagon"][1]("a", "b", "c", "d")
    assert lhs == rhs == iso_identity("abcd", W)
    lhs, rhs = sides["hexagon"][1]("a", "b", "c")
    assert lhs == rhs and lhs.bij == Permutation((3, 1, 2))
    lhs, _ = sides["tau_squared"][1]("a", "b")
    assert lhs == iso_identity("ab", W)


def test_gamma_compatibility_at_small_bounds():
    report = check_algebra_gamma_compat(W, bound=2, max_degree=2)
    assert report.ok
    assert {"object_gamma", "object_equivariance", "morphism_gamma", "morphism_equivariance",
            "functoriality"} <= set(report.passed_by_law)


def test_gamma_compatibility_in_the_expression_model():
    small = expression_model(max_leaves=3)
    assert check_algebra_gamma_compat(small, bound=2, max_degree=2).ok


def test_compatibility_example_with_transposed_outer():
    outer = LElement(Z_PRODUCT, T)
    inner = [y_op(parse_z("[(1,1);{1,2}]")), y_op(Z_IDENTITY)]
    words = ["a", "b", "ab"]
    composite = y_gamma(outer, inner)
    assert y_object_action(composite, words, W) == "ab" + "ab"
    assert y_object_action(outer, [y_object_action(inner[0], words[:2], W), words[2]], W) == "abab"
