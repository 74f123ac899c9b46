"""Deliberately broken operad views, used to show the law suites can fail.

Each mutant differs from a correct view in one small place:

* ``flattened_v`` forgets the outer tree and right-nests the arguments;
* ``misblocked_lv`` sizes the blocks of the block permutation in permuted
  order instead of argument order;
* ``unshifted_z`` omits the slot shift when joining two pointed trees.
"""

from __future__ import annotations

import dataclasses
from typing import Sequence

from .lsym import LElement, l_view
from .perm import apply_to_list, block_permutation, compose, direct_sum
from .treeop import V_VIEW, Leaf, Node
from .zoperad import Z_VIEW, ZElement, z_decompose


def _right_nest(args):
    out = args[-1]
    for a in reversed(args[:-1]):
        out = Node(a, out)
    return out


def _flat_gamma(outer, args: Sequence):
    if len(args) != outer.degree:
        raise ValueError("arity mismatch")
    return _right_nest(list(args))


def flattened_v():
    return dataclasses.replace(V_VIEW, name="V[flattened]", gamma=_flat_gamma, _cache={})


def _misblocked_gamma(outer: LElement, args, base_gamma):
    s = outer.perm
    base = base_gamma(outer.base, apply_to_list(s, [a.base for a in args]))
    sizes = apply_to_list(s, [a.degree for a in args])
    perm = compose(block_permutation(s, sizes), direct_sum([a.perm for a in args]))
    return LElement(base, perm)


def misblocked_lv():
    good = l_view(V_VIEW)
    return dataclasses.replace(
        good, name="LV[misblocked]",
        gamma=lambda outer, args: _misblocked_gamma(outer, args, V_VIEW.gamma), _cache={})


def _unshifted_dot(a: ZElement, b: ZElement) -> ZElement:
    return ZElement(Node(a.tree, b.tree), a.slots + b.slots)


def _unshifted_gamma(outer: ZElement, args):
    if len(args) != outer.degree:
        raise ValueError("arity mismatch")
    return _walk(outer, args, 0)


def _walk(outer, args, start):
    if isinstance(outer.tree, Leaf):
        return args[start] if outer.slots else outer
    first, second = z_decompose(outer)
    return _unshifted_dot(_walk(first, args, start), _walk(second, args, start + first.degree))


def unshifted_z():
    return dataclasses.replace(Z_VIEW, name="Z[unshifted]", gamma=_unshifted_gamma, _cache={})


MUTANTS = {
    "dropped_parenthesization": (flattened_v, "nonsym"),
    "wrong_block_order": (misblocked_lv, "sym"),
    "missing_shift": (unshifted_z, "nonsym"),
}
