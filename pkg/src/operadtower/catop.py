"""Indiscrete categorical operads and executable algebras over Y = E(LZ).

``E`` turns a set into the category with exactly one morphism between any
two objects, so a morphism of ``Y(n)`` is just a pair ``(src, tgt)`` of
elements of ``LZ(n)``. An algebra over ``Y`` on a category is a symmetric
monoidal structure: the product generator acts by the tensor, the basepoint
by the unit object, and the unique morphisms between generator composites
act by the associator, the unitors and the symmetry.

Two concrete models are provided:

* words over an alphabet under concatenation (strict, so only the symmetry
  moves letters);
* expressions from :mod:`operadtower.coherence` (associator and unitors
  change the bracketing for real).

A morphism in either model is an :class:`Iso` carrying the bijection of
atoms (letters, or variable leaves) from source to target.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from dataclasses import dataclass
from typing import Any, Callable, Iterator, Optional, Sequence

from . import coherence
from .coherence import UNIT, Expr, Tensor, Var
from .lsym import LElement, _blocks, compositions, l_act, l_gamma, l_view
from .perm import (Permutation, all_permutations, apply_to_list, compose, direct_sum,
                   identity, parse_perm, transposition)
from .report import Report
from .treeop import LEAF, PAIR, Node
from .zoperad import Z_VIEW, ZElement, parse_z, z_gamma

YOp = LElement


def y_op(z: ZElement, perm: Optional[Permutation] = None) -> YOp:
    return LElement(z, perm if perm is not None else identity(z.degree))


def y_gamma(outer: YOp, args: Sequence[YOp]) -> YOp:
    return l_gamma(outer, args, z_gamma)


def format_yop(y: YOp) -> str:
    return f"{y.base} | {y.perm}"


def parse_yop(text: str) -> YOp:
    """Read ``"[tree;slots] | [perm]"``; the permutation part may be omitted."""
    z_text, bar, p_text = text.partition("|")
    z = parse_z(z_text.strip())
    return y_op(z, parse_perm(p_text.strip()) if bar else None)


@dataclass(frozen=True)
class YMor:
    """The unique morphism ``src -> tgt`` of ``Y(n)``."""

    src: YOp
    tgt: YOp

    def __post_init__(self):
        if self.src.degree != self.tgt.degree:
            raise ValueError(f"no morphism between degrees {self.src.degree} and {self.tgt.degree}")

    @property
    def degree(self) -> int:
        return self.src.degree

    def __str__(self):
        return f"{format_yop(self.src)} -> {format_yop(self.tgt)}"


def e_identity(y: YOp) -> YMor:
    return YMor(y, y)


def e_compose(g: YMor, f: YMor) -> YMor:
    """``g`` after ``f``."""
    if f.tgt != g.src:
        raise ValueError(f"cannot compose: {f} ends at {format_yop(f.tgt)}, "
                         f"{g} starts at {format_yop(g.src)}")
    return YMor(f.src, g.tgt)


def e_gamma(f: YMor, gs: Sequence[YMor]) -> YMor:
    return YMor(y_gamma(f.src, [g.src for g in gs]), y_gamma(f.tgt, [g.tgt for g in gs]))


def e_act(f: YMor, r: Permutation) -> YMor:
    return YMor(l_act(f.src, r), l_act(f.tgt, r))


def structure_morphisms() -> dict[str, YMor]:
    """The associator, symmetry and the two unitors as morphisms of ``Y``."""
    ident1, ident2, ident3 = identity(1), identity(2), identity(3)
    return {
        "alpha": YMor(LElement(ZElement(Node(PAIR, LEAF), (1, 2, 3)), ident3),
                      LElement(ZElement(Node(LEAF, PAIR), (1, 2, 3)), ident3)),
        "tau": YMor(LElement(ZElement(PAIR, (1, 2)), ident2),
                    LElement(ZElement(PAIR, (1, 2)), transposition())),
        "eta_l": YMor(LElement(ZElement(PAIR, (2,)), ident1), LElement(ZElement(LEAF, (1,)), ident1)),
        "eta_r": YMor(LElement(ZElement(PAIR, (1,)), ident1), LElement(ZElement(LEAF, (1,)), ident1)),
    }


# -- models ------------------------------------------------------------------------


@dataclass(frozen=True)
class Model:
    """A symmetric monoidal category given by its objects' atoms.

    ``objects(k)`` lists the k-tuples of objects used to instantiate
    diagrams of k-ary operations.
    """

    name: str
    unit: Any
    tensor: Callable[[Any, Any], Any]
    atoms: Callable[[Any], Sequence]
    objects: Callable[[int], list[tuple]]
    fmt: Callable[[Any], str] = str


def word_model(alphabet: str = "ab", max_length: int = 2) -> Model:
    words = [""] + ["".join(w) for n in range(1, max_length + 1)
                    for w in itertools.product(alphabet, repeat=n)]
    return Model(
        name="word",
        unit="",
        tensor=lambda a, b: a + b,
        atoms=list,
        objects=lambda k: list(itertools.product(words, repeat=k)),
        fmt=repr,
    )


def expression_model(max_leaves: int = 4) -> Model:
    return Model(
        name="expression",
        unit=UNIT,
        tensor=Tensor,
        atoms=coherence.variables,
        objects=lambda k: list(_expression_tuples(k, max_leaves)),
    )


def _expression_tuples(k: int, max_leaves: int) -> Iterator[tuple[Expr, ...]]:
    """k-tuples of expressions with at most ``max_leaves`` leaves in total.

    Any leaf may be the unit; the variables are numbered left to right
    across the whole tuple, so they are distinct.
    """
    for counts in itertools.product(range(1, max_leaves + 1), repeat=k):
        total = sum(counts)
        if total > max_leaves:
            continue
        for shapes in itertools.product(*(list(coherence._shapes(c)) for c in counts)):
            for mask in itertools.product((False, True), repeat=total):
                fill = iter(mask)
                label = itertools.count(1)
                yield tuple(_fill_shape(sh, fill, label) for sh in shapes)


def _fill_shape(shape, units, label):
    if type(shape) is Var:
        return UNIT if next(units) else Var(next(label))
    return Tensor(_fill_shape(shape.left, units, label), _fill_shape(shape.right, units, label))


@dataclass(frozen=True)
class Iso:
    """An isomorphism ``src -> tgt`` in a model: atom ``i`` of ``src`` lands at ``bij(i)``."""

    src: Any
    tgt: Any
    bij: Permutation

    def check(self, model: Model):
        a, b = model.atoms(self.src), model.atoms(self.tgt)
        if len(a) != self.bij.degree or len(b) != self.bij.degree:
            raise ValueError(f"bijection of degree {self.bij.degree} between objects with "
                             f"{len(a)} and {len(b)} atoms")
        if any(b[self.bij(i) - 1] != a[i - 1] for i in range(1, len(a) + 1)):
            raise ValueError(f"{self.bij} does not preserve atoms from {self.src} to {self.tgt}")
        return self

    def to_dict(self) -> dict:
        return {"src": str(self.src), "tgt": str(self.tgt), "images": list(self.bij.images)}

    def __str__(self):
        return f"{self.src} -> {self.tgt} {self.bij}"


WordMorphism = Iso


def iso_identity(x, model: Model) -> Iso:
    return Iso(x, x, identity(len(model.atoms(x))))


def iso_compose(g: Iso, f: Iso) -> Iso:
    """``g`` after ``f``; the middle objects must agree exactly."""
    if f.tgt != g.src:
        raise ValueError(f"cannot compose: {f.tgt} is not {g.src}")
    return Iso(f.src, g.tgt, compose(g.bij, f.bij))


def iso_tensor(f: Iso, g: Iso, model: Model) -> Iso:
    return Iso(model.tensor(f.src, g.src), model.tensor(f.tgt, g.tgt), direct_sum([f.bij, g.bij]))


# -- the action of Y -------------------------------------------------------------


def _fold(tree, slots: tuple[int, ...], inputs: Sequence, unit, tensor):
    """Evaluate ``tree`` with ``inputs`` at the slot leaves and ``unit`` elsewhere."""
    where = {leaf: k for k, leaf in enumerate(slots)}
    counter = itertools.count(1)

    def walk(t):
        if type(t) is Node:
            left = walk(t.left)
            return tensor(left, walk(t.right))
        k = where.get(next(counter))
        return unit if k is None else inputs[k]

    return walk(tree)


def _check_arity(y: YOp, n: int):
    if y.degree != n:
        raise ValueError(f"operation of degree {y.degree} applied to {n} inputs")


def y_object_action(y: YOp, objs: Sequence, model: Model) -> Any:
    """Input position ``i`` of the tree reads ``objs[s^-1(i)]``, where ``s`` is the permutation of ``y``."""
    _check_arity(y, len(objs))
    return _evaluate(y, tuple(objs), model)


@lru_cache(maxsize=1 << 16)
def _evaluate(y: YOp, objs: tuple, model: Model):
    return _fold(y.base.tree, y.base.slots, apply_to_list(y.perm, objs), model.unit, model.tensor)


@lru_cache(maxsize=1 << 14)
def _layout(y: YOp, sizes: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    """The (input, offset) address of every atom of ``y`` applied to inputs of the given sizes."""
    order = apply_to_list(y.perm, range(len(sizes)))
    blocks = [[(i, r) for r in range(sizes[i])] for i in order]
    return tuple(_fold(y.base.tree, y.base.slots, blocks, [], lambda a, b: a + b))


@lru_cache(maxsize=1 << 16)
def _transport(src_layout, tgt_layout) -> Permutation:
    where = {addr: q for q, addr in enumerate(tgt_layout, 1)}
    return Permutation(tuple(where[addr] for addr in src_layout))


def y_morphism_action(m: YMor, objs: Sequence, model: Model) -> Iso:
    """The isomorphism between the two evaluations that keeps each input atom's address."""
    _check_arity(m.src, len(objs))
    sizes = tuple(len(model.atoms(x)) for x in objs)
    return Iso(
        y_object_action(m.src, objs, model),
        y_object_action(m.tgt, objs, model),
        _transport(_layout(m.src, sizes), _layout(m.tgt, sizes)),
    )


def y_object_on_morphisms(y: YOp, fs: Sequence[Iso], model: Model) -> Iso:
    """``y`` applied to a tuple of morphisms, e.g. ``f (x) g`` for the product generator."""
    _check_arity(y, len(fs))
    sizes = tuple(f.bij.degree for f in fs)
    layout = _layout(y, sizes)
    moved = tuple((i, fs[i].bij(r + 1) - 1) for i, r in layout)
    return Iso(
        y_object_action(y, [f.src for f in fs], model),
        y_object_action(y, [f.tgt for f in fs], model),
        _transport(moved, layout),
    )


# -- diagrams --------------------------------------------------------------------

DIAGRAMS = ("left_right_unit", "unit_transposition", "unit_coherence", "tau_squared",
            "hexagon", "pentagon")


def _components(model: Model):
    ms = structure_morphisms()

    def comp(name):
        return lambda *objs: y_morphism_action(ms[name], objs, model)

    return comp("alpha"), comp("tau"), comp("eta_l"), comp("eta_r")


def _diagram_sides(model: Model) -> dict[str, tuple[int, Callable]]:
    """Each diagram as (arity, objects -> (lhs, rhs))."""
    alpha, tau, eta_l, eta_r = _components(model)
    e, x = model.unit, model.tensor

    def ident(a):
        return iso_identity(a, model)

    def tens(f, g):
        return iso_tensor(f, g, model)

    def left_right_unit():
        return eta_l(e), eta_r(e)

    def unit_transposition(a):
        return iso_compose(eta_l(a), tau(a, e)), eta_r(a)

    def unit_coherence(a, b):
        return iso_compose(tens(ident(a), eta_l(b)), alpha(a, e, b)), tens(eta_r(a), ident(b))

    def tau_squared(a, b):
        return iso_compose(tau(b, a), tau(a, b)), ident(x(a, b))

    def hexagon(a, b, c):
        lhs = iso_compose(alpha(b, c, a), iso_compose(tau(a, x(b, c)), alpha(a, b, c)))
        rhs = iso_compose(tens(ident(b), tau(a, c)),
                          iso_compose(alpha(b, a, c), tens(tau(a, b), ident(c))))
        return lhs, rhs

    def pentagon(a, b, c, d):
        lhs = iso_compose(alpha(a, b, x(c, d)), alpha(x(a, b), c, d))
        rhs = iso_compose(tens(ident(a), alpha(b, c, d)),
                          iso_compose(alpha(a, x(b, c), d), tens(alpha(a, b, c), ident(d))))
        return lhs, rhs

    return {
        "left_right_unit": (0, left_right_unit),
        "unit_transposition": (1, unit_transposition),
        "unit_coherence": (2, unit_coherence),
        "tau_squared": (2, tau_squared),
        "hexagon": (3, hexagon),
        "pentagon": (4, pentagon),
    }


def check_diagrams(model: Model, report: Optional[Report] = None) -> Report:
    """Both paths of each coherence diagram give the same morphism on every input tuple.

    In the expression model each path is also compared with the label-matching
    bijection and with the bijection realized by a synthesized move sequence.
    """
    report = report or Report("diagrams", {"model": model.name})
    expr = model.name == "expression"
    for name, (arity, sides) in _diagram_sides(model).items():
        for objs in model.objects(arity):
            try:
                lhs, rhs = sides(*objs)
                lhs.check(model)
                rhs.check(model)
            except Exception as exc:  # noqa: BLE001
                report.record(name, objs, None, exc, False, model.fmt)
                continue
            report.record(name, objs, rhs, lhs, lhs == rhs, model.fmt)
            if expr:
                report.check("label_matching", (lhs,),
                             lambda: coherence.label_bijection(lhs.src, lhs.tgt), lambda: lhs.bij)
                report.check("synthesized", (lhs,),
                             lambda: coherence.moveseq_bijection(coherence.synthesize(lhs.src, lhs.tgt)),
                             lambda: lhs.bij)
    return report


# -- compatibility with composition ----------------------------------------------


def ly_view():
    return l_view(Z_VIEW)


def check_algebra_gamma_compat(model: Optional[Model] = None, bound: int = 3, max_degree: int = 3,
                               report: Optional[Report] = None) -> Report:
    """The action is an operad map ``Y -> End``, on objects and on morphisms.

    Objects: acting by a composite equals acting by the outer operation on
    the inner results, and acting by ``y . r`` equals acting by ``y`` on the
    inputs reordered by ``r``. Morphisms: the same two equations for the
    unique morphisms of ``Y``, plus functoriality along composable pairs.
    """
    model = model or word_model()
    report = report or Report("algebra", {"model": model.name, "bound": bound,
                                          "max_degree": max_degree})
    view = ly_view()
    fmt = model.fmt
    comps = list(compositions(view, bound, max_degree))
    inputs = {n: model.objects(n) for n in range(max_degree + 1)}

    for x, ys in comps:
        sizes = [y.degree for y in ys]
        composite = y_gamma(x, ys)
        for objs in inputs[composite.degree]:
            report.check(
                "object_gamma", (x, ys, objs),
                lambda: y_object_action(x, [y_object_action(y, blk, model)
                                            for y, blk in zip(ys, _blocks(objs, sizes))], model),
                lambda: y_object_action(composite, objs, model),
                fmt,
            )

    elements = view.all_elements(bound)
    by_degree: dict[int, list] = {}
    for y in elements:
        if y.degree <= max_degree:
            by_degree.setdefault(y.degree, []).append(y)
    for n, ys in by_degree.items():
        perms = list(all_permutations(n))
        for y in ys:
            for r in perms:
                for objs in inputs[n]:
                    report.check(
                        "object_equivariance", (y, r, objs),
                        lambda: y_object_action(y, apply_to_list(r, objs), model),
                        lambda: y_object_action(l_act(y, r), objs, model),
                        fmt,
                    )
        for src in ys:
            for tgt in ys:
                m = YMor(src, tgt)
                for r in perms:
                    for objs in inputs[n]:
                        report.check(
                            "morphism_equivariance", (m, r, objs),
                            lambda: y_morphism_action(m, apply_to_list(r, objs), model),
                            lambda: y_morphism_action(e_act(m, r), objs, model),
                        )
                for mid in ys:
                    f, g = YMor(src, mid), YMor(mid, tgt)
                    for objs in inputs[n]:
                        report.check(
                            "functoriality", (f, g, objs),
                            lambda: iso_compose(y_morphism_action(g, objs, model),
                                                y_morphism_action(f, objs, model)),
                            lambda: y_morphism_action(e_compose(g, f), objs, model),
                        )

    # morphism-level composition: pair every composition with every other of the same shape
    shapes: dict[tuple, list] = {}
    for x, ys in comps:
        shapes.setdefault((x.degree, tuple(y.degree for y in ys)), []).append((x, ys))
    for (_, sizes), group in shapes.items():
        m_total = sum(sizes)
        for (x, ys), (x2, ys2) in itertools.product(group, repeat=2):
            f = YMor(x, x2)
            gs = [YMor(a, b) for a, b in zip(ys, ys2)]
            whole = e_gamma(f, gs)
            for objs in inputs[m_total]:
                report.check(
                    "morphism_gamma", (f, gs, objs),
                    lambda: _gamma_of_actions(f, gs, objs, sizes, model),
                    lambda: y_morphism_action(whole, objs, model),
                )
    return report


def _gamma_of_actions(f: YMor, gs: Sequence[YMor], objs, sizes, model: Model) -> Iso:
    """Horizontal composite: ``f`` at the inner targets after ``f.src`` applied to the inner morphisms."""
    inner = [y_morphism_action(g, blk, model) for g, blk in zip(gs, _blocks(objs, sizes))]
    spread = y_object_on_morphisms(f.src, inner, model)
    outer = y_morphism_action(f, [i.tgt for i in inner], model)
    return iso_compose(outer, spread)
