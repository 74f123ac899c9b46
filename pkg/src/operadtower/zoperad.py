"""The operad Z of parenthesizations with selected variable slots.

An element ``(tree, slots)`` has internal degree ``tree.degree`` and operad
degree ``len(slots)``; leaves not listed in ``slots`` hold the basepoint.
Composition recurses on the internal degree through the unique splitting
``(tree, slots) = z_dot(left_part, right_part)``.

Text form: ``[tree;{i,j,...}]``, e.g. ``[(1,1);{1,2}]`` or ``[1;{}]``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .treeop import (LEAF, PAIR, ZERO, Leaf, Node, V0Element, VElement, parse_v,
                     v0_dot, v_enumerate)
from .view import OperadView


@dataclass(frozen=True, slots=True)
class ZElement:
    tree: VElement
    slots: tuple[int, ...]
    internal: int = field(init=False, compare=False)

    def __post_init__(self):
        slots = tuple(self.slots)
        j = self.tree.degree
        if any(b <= a for a, b in zip(slots, slots[1:])) or (slots and not 1 <= slots[0] <= slots[-1] <= j):
            raise ValueError(f"slots {slots} are not an increasing subset of 1..{j}")
        object.__setattr__(self, "slots", slots)
        object.__setattr__(self, "internal", j)

    @property
    def degree(self) -> int:
        return len(self.slots)

    def __str__(self):
        return f"[{self.tree};{{{','.join(map(str, self.slots))}}}]"


BASEPOINT = ZElement(LEAF, ())
Z_IDENTITY = ZElement(LEAF, (1,))
Z_PRODUCT = ZElement(PAIR, (1, 2))


def z_decompose(z: ZElement) -> tuple[ZElement, ZElement]:
    if isinstance(z.tree, Leaf):
        raise ValueError(f"{z} has internal degree 1 and does not decompose")
    k = z.tree.left.degree
    first = tuple(s for s in z.slots if s <= k)
    second = tuple(s - k for s in z.slots if s > k)
    return ZElement(z.tree.left, first), ZElement(z.tree.right, second)


def z_dot(a: ZElement, b: ZElement) -> ZElement:
    shift = a.internal
    return ZElement(Node(a.tree, b.tree), a.slots + tuple(s + shift for s in b.slots))


def z_gamma(outer: ZElement, args: Sequence[ZElement]) -> ZElement:
    if len(args) != outer.degree:
        raise ValueError(f"{outer} has degree {outer.degree} but got {len(args)} arguments")
    return _z_gamma(outer, args, 0)


def _z_gamma(outer, args, start):
    if isinstance(outer.tree, Leaf):
        return args[start] if outer.slots else outer
    first, second = z_decompose(outer)
    return z_dot(_z_gamma(first, args, start), _z_gamma(second, args, start + first.degree))


def z_enumerate(n: int, max_internal: int) -> list[ZElement]:
    """Elements of Z(n) with internal degree at most ``max_internal``.

    Ordered by internal degree, then tree (as ``v_enumerate``), then slot set
    lexicographically.
    """
    if max_internal < 1:
        raise ValueError("max_internal must be at least 1")
    out = []
    for j in range(max(n, 1), max_internal + 1):
        for tree in v_enumerate(j):
            for slots in itertools.combinations(range(1, j + 1), n):
                out.append(ZElement(tree, slots))
    return out


def map_V_to_Z(beta: VElement) -> ZElement:
    return ZElement(beta, tuple(range(1, beta.degree + 1)))


def free_extend_Z(target: OperadView, p, m) -> Callable[[ZElement], object]:
    """The unique operad map Z -> target sending the basepoint to ``p`` and the product to ``m``."""
    memo: dict = {}

    def g(z: ZElement):
        if isinstance(z.tree, Leaf):
            return target.identity if z.slots else p
        try:
            return memo[z]
        except KeyError:
            pass
        first, second = z_decompose(z)
        value = target.gamma(m, [g(first), g(second)])
        memo[z] = value
        return value

    return g


def project_Z_to_V0(z: ZElement) -> V0Element:
    """Replace basepoint leaves by 0 and collapse with ``v0_dot``."""
    selected = set(z.slots)
    counter = iter(range(1, z.internal + 1))

    def walk(t):
        if isinstance(t, Leaf):
            return LEAF if next(counter) in selected else ZERO
        left = walk(t.left)
        return v0_dot(left, walk(t.right))

    return walk(z.tree)


_Z_TEXT = re.compile(r"^\[(?P<tree>[^;]*);\{(?P<slots>[^}]*)\}\]$")


def parse_z(text: str) -> ZElement:
    m = _Z_TEXT.match(text.replace(" ", ""))
    if m is None:
        raise ValueError(f"Z element must look like [(1,1);{{1,2}}], got {text!r}")
    body = m["slots"].strip()
    slots = tuple(int(s) for s in body.split(",")) if body else ()
    return ZElement(parse_v(m["tree"]), slots)


Z_VIEW = OperadView(
    name="Z",
    identity=Z_IDENTITY,
    gamma=z_gamma,
    degree=lambda z: z.degree,
    elements=lambda n, s: z_enumerate(n, s) if n <= s else [],
    size=lambda z: z.internal,
)

