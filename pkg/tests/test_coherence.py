import itertools
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from operadtower.coherence import (UNIT, ExprSyntaxError, Move, MoveError, MoveSeq, Tensor, Var,
                                   apply_move, check_coherence_corpus, eliminate_units, eta_phases_ok,
                                   expressions, label_bijection, move_bound, moveseq_bijection,
                                   normalize, parse_expr, right_associate, sort_leaves, synthesize,
                                   tracked_replay, unit_count, variables)
from operadtower.perm import Permutation, compose, identity, inverse

P = parse_expr


def catalan(m):
    return comb(2 * m, m) // (m + 1)


# an independent rewrite on nested tuples: ("I",), ("x", i), ("*", l, r)

def to_tuple(e):
    if e is UNIT:
        return ("I",)
    if isinstance(e, Var):
        return ("x", e.index)
    return ("*", to_tuple(e.left), to_tuple(e.right))


def rewrite(t, kind, path):
    if path:
        head, rest = path[0], path[1:]
        if head == "L":
            return ("*", rewrite(t[1], kind, rest), t[2])
        return ("*", t[1], rewrite(t[2], kind, rest))
    if kind == "alpha":
        (_, (_, a, b), c) = t
        return ("*", a, ("*", b, c))
    if kind == "alpha_inv":
        (_, a, (_, b, c)) = t
        return ("*", ("*", a, b), c)
    if kind == "tau":
        return ("*", t[2], t[1])
    if kind == "eta_l":
        assert t[1] == ("I",)
        return t[2]
    if kind == "eta_r":
        assert t[2] == ("I",)
        return t[1]
    if kind == "eta_l_inv":
        return ("*", ("I",), t)
    if kind == "eta_r_inv":
        return ("*", t, ("I",))
    raise AssertionError(kind)


def oracle_replay(source, moves):
    t = to_tuple(source)
    for m in moves:
        t = rewrite(t, m.kind, m.path)
    return t


def exprs(max_vars=4):
    """Random expressions over x1..xn (each once) with up to two units."""
    def build(leaves):
        if len(leaves) == 1:
            return st.just(leaves[0])
        return st.integers(1, len(leaves) - 1).flatmap(
            lambda k: st.tuples(build(leaves[:k]), build(leaves[k:])).map(lambda p: Tensor(*p)))

    def shaped(n):
        return st.tuples(st.permutations([Var(i) for i in range(1, n + 1)]), st.integers(0, 2)).flatmap(
            lambda pu: st.permutations(list(pu[0]) + [UNIT] * pu[1]).flatmap(build))

    return st.integers(1, max_vars).flatmap(shaped)


# parsing and single moves

def test_parse_examples():
    assert P("((x1*x2)*x3)") == Tensor(Tensor(Var(1), Var(2)), Var(3))
    assert P("(I*x1)") == Tensor(UNIT, Var(1))
    assert str(P("( x10 * I )")) == "(x10*I)"


@pytest.mark.parametrize("text, position", [("x1*", 2), ("(x1*x2", 6), ("(x1x2)", 3), ("y", 0), ("", 0)])
def test_parse_errors_carry_a_position(text, position):
    with pytest.raises(ExprSyntaxError) as info:
        P(text)
    assert info.value.position == position


def test_move_examples():
    assert apply_move(P("((x1*x2)*x3)"), Move("alpha")) == P("(x1*(x2*x3))")
    assert apply_move(P("(I*x1)"), Move("eta_l")) == P("x1")
    assert apply_move(P("(x1*x2)"), Move("tau")) == P("(x2*x1)")
    assert apply_move(P("(x3*((x1*x2)*x4))"), Move("tau", "RL")) == P("(x3*((x2*x1)*x4))")


@pytest.mark.parametrize("expr, move", [("(x1*x2)", Move("alpha")), ("(x1*x2)", Move("eta_l")),
                                        ("x1", Move("tau")), ("(x1*x2)", Move("tau", "L"))])
def test_shape_violations_raise(expr, move):
    with pytest.raises(MoveError):
        apply_move(P(expr), move)


def test_move_validation():
    with pytest.raises(ValueError):
        Move("beta")
    with pytest.raises(ValueError):
        Move("tau", "LX")
    assert Move("alpha", "LR").inverse() == Move("alpha_inv", "LR")
    assert str(Move("tau")) == "tau@."
    assert Move("tau", "R").to_dict() == {"kind": "tau", "path": "R"}


# normalization phases

def test_eliminate_units_examples():
    seq = eliminate_units(P("(I*x1)"))
    assert [m.kind for m in seq.moves] == ["eta_l"] and seq.replay() == P("x1")
    seq = eliminate_units(P("((x1*I)*I)"))
    assert [m.kind for m in seq.moves] == ["eta_r", "eta_r"] and seq.replay() == P("x1")
    seq = eliminate_units(UNIT)
    assert len(seq) == 0 and seq.replay() == UNIT


def test_right_associate_examples():
    assert [str(m) for m in right_associate(P("((x1*x2)*x3)")).moves] == ["alpha@."]
    seq = right_associate(P("(((x1*x2)*x3)*x4)"))
    assert len(seq) == 3 and seq.replay() == P("(x1*(x2*(x3*x4)))")
    assert len(right_associate(P("x1"))) == 0
    with pytest.raises(ValueError):
        right_associate(P("(x1*I)"))


def test_sort_leaves_examples():
    assert [str(m) for m in sort_leaves(P("(x2*x1)"), [1, 2]).moves] == ["tau@."]
    seq = sort_leaves(P("(x2*(x1*x3))"), [1, 2, 3])
    assert [m.kind for m in seq.moves] == ["alpha_inv", "tau", "alpha"]
    assert seq.moves[1].path == "L"
    assert seq.replay() == P("(x1*(x2*x3))")
    assert len(sort_leaves(P("(x1*(x2*x3))"), [1, 2, 3])) == 0
    with pytest.raises(ValueError):
        sort_leaves(P("(x1*x2)"), [1, 3])


def test_normalize_keeps_leaf_order():
    moves, nf = normalize(P("((x3*I)*(x1*x2))"))
    assert nf == P("(x3*(x1*x2))")
    assert [str(m) for m in moves] == ["eta_r@L"]
    assert normalize(P("(I*I)"))[1] == UNIT


# synthesis

def test_synthesize_examples():
    assert [str(m) for m in synthesize(P("((x1*x2)*x3)"), P("(x1*(x2*x3))")).moves] == ["alpha@."]
    assert [str(m) for m in synthesize(P("(x2*x1)"), P("(x1*x2)")).moves] == ["tau@."]
    seq = synthesize(P("(I*x1)"), P("(x1*I)"))
    assert seq.replay() == P("(x1*I)")
    assert [m.kind for m in seq.moves] == ["eta_l", "eta_r_inv"]


def test_synthesize_rejects_mismatched_or_repeated_variables():
    with pytest.raises(ValueError):
        synthesize(P("(x1*x2)"), P("(x1*x3)"))
    with pytest.raises(ValueError):
        synthesize(P("(x1*x1)"), P("(x1*x1)"))


def test_bijection_examples():
    assert moveseq_bijection(MoveSeq(P("(x1*x2)"), (Move("tau"),))) == Permutation((2, 1))
    assert moveseq_bijection(MoveSeq(P("((x1*x2)*x3)"), (Move("alpha"),))) == identity(3)
    seq = synthesize(P("(x2*x1)"), P("(x1*x2)"))
    assert moveseq_bijection(seq) == Permutation((2, 1))
    assert label_bijection(P("(x2*x1)"), P("(x1*x2)")) == Permutation((2, 1))


def test_move_records():
    seq = synthesize(P("(x2*(x1*x3))"), P("(x1*(x2*x3))"))
    assert seq.to_records() == [{"kind": "alpha_inv", "path": ""}, {"kind": "tau", "path": "L"},
                                {"kind": "alpha", "path": ""}]


@settings(max_examples=300)
@given(exprs(), st.data())
def test_synthesis_properties(source, data):
    vs = variables(source)
    shuffled = data.draw(st.permutations(vs))
    target = data.draw(exprs(len(vs)).filter(lambda e: sorted(variables(e)) == sorted(vs)))
    target = _relabel_to(target, shuffled)
    seq = synthesize(source, target)
    assert oracle_replay(source, seq.moves) == to_tuple(target)
    end, bij = tracked_replay(seq)
    assert end == target
    assert bij == label_bijection(source, target)
    assert compose(moveseq_bijection(synthesize(target, source)), bij) == identity(len(vs))
    assert len(seq) <= move_bound(len(vs), unit_count(source) + unit_count(target))
    assert eta_phases_ok(seq)


def _relabel_to(e, order):
    it = iter(order)

    def walk(x):
        if isinstance(x, Var):
            return Var(next(it))
        if x is UNIT:
            return x
        return Tensor(walk(x.left), walk(x.right))

    return walk(e)


def test_eta_phase_detector():
    ok = MoveSeq(P("(I*(x1*x2))"), (Move("eta_l"), Move("tau"), Move("eta_r_inv")))
    bad = MoveSeq(P("(I*(x1*x2))"), (Move("eta_l"), Move("tau"), Move("eta_l_inv"), Move("eta_l"),
                                     Move("tau"), Move("eta_r_inv")))
    assert eta_phases_ok(ok)
    assert not eta_phases_ok(bad)


# the corpus

def _expected_count(n):
    if n == 0:
        return 1
    return factorial(n) * catalan(n - 1) + (n + 1) * factorial(n) * catalan(n)


@pytest.mark.parametrize("n", range(5))
def test_corpus_sizes(n):
    got = expressions(n)
    assert len(got) == _expected_count(n)
    assert len(set(got)) == len(got)
    assert all(unit_count(e) <= 1 for e in got)


def test_corpus_up_to_three_variables():
    report = check_coherence_corpus(3)
    assert report.ok
    pairs = sum(_expected_count(n) ** 2 for n in range(4))
    for law in ("replay", "bijection", "round_trip", "move_bound", "eta_phases"):
        assert report.passed_by_law[law] == pairs
