"""The parenthesization operad V, its unital variant V0, and the terminal operad T.

Elements of V are full binary trees: the leaf is the operad identity ``1`` and
a node is an ordered pair ``(left, right)``. The degree is the leaf count, so
V(n) has Catalan(n - 1) elements. V0 adds a single nullary element ``0`` that
is absorbed by the product.

Text form: leaf ``1``, node ``(l,r)``, zero ``0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence, Union

from .view import OperadView


class Leaf:
    """The operad identity ``1``; all instances are equal."""

    __slots__ = ()
    degree = 1

    def __eq__(self, other):
        return type(other) is Leaf

    def __hash__(self):
        return 1

    def __str__(self):
        return "1"

    __repr__ = __str__


class Node:
    """The ordered pair ``(left, right)`` of two trees; treat as immutable."""

    __slots__ = ("left", "right", "degree", "_hash")

    def __init__(self, left: VElement, right: VElement):
        if type(left) is Zero or type(right) is Zero:
            raise ValueError("zero cannot sit inside a tree; use v0_dot")
        self.left = left
        self.right = right
        self.degree = left.degree + right.degree
        self._hash = None

    def __eq__(self, other):
        if self is other:
            return True
        return (type(other) is Node and self.degree == other.degree
                and self.left == other.left and self.right == other.right)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.left, self.right))
        return self._hash

    def __str__(self):
        return f"({self.left},{self.right})"

    __repr__ = __str__


class Zero:
    """The nullary element ``0`` of V0; all instances are equal."""

    __slots__ = ()
    degree = 0

    def __eq__(self, other):
        return type(other) is Zero

    def __hash__(self):
        return 0

    def __str__(self):
        return "0"

    __repr__ = __str__


VElement = Union[Leaf, Node]
V0Element = Union[Zero, Leaf, Node]

LEAF = Leaf()
ZERO = Zero()
PAIR = Node(LEAF, LEAF)


def degree(x) -> int:
    return x.degree


def _check_arity(outer, args):
    if len(args) != outer.degree:
        raise ValueError(f"{outer} has degree {outer.degree} but got {len(args)} arguments")


def v_gamma(outer: VElement, args: Sequence[VElement]) -> VElement:
    """Substitute ``args`` into the leaves of ``outer``, left to right."""
    _check_arity(outer, args)
    return _v_gamma(outer, args, 0)


def _v_gamma(outer, args, start):
    if type(outer) is not Node:
        return args[start]
    left = outer.left
    return Node(_v_gamma(left, args, start), _v_gamma(outer.right, args, start + left.degree))


@lru_cache(maxsize=None)
def _v_enumerate(n: int) -> tuple[VElement, ...]:
    if n <= 0:
        return ()
    if n == 1:
        return (LEAF,)
    out = []
    for k in range(1, n):
        for a in _v_enumerate(k):
            for b in _v_enumerate(n - k):
                out.append(Node(a, b))
    return tuple(out)


def v_enumerate(n: int) -> list[VElement]:
    """All of V(n): split point ascending, then left factor, then right factor."""
    return list(_v_enumerate(n))


def v0_dot(a: V0Element, b: V0Element) -> V0Element:
    if isinstance(b, Zero):
        return a
    if isinstance(a, Zero):
        return b
    return Node(a, b)


def v0_gamma(outer: V0Element, args: Sequence[V0Element]) -> V0Element:
    _check_arity(outer, args)
    return _v0_gamma(outer, args, 0)


def _v0_gamma(outer, args, start):
    t = type(outer)
    if t is Node:
        left = outer.left
        a = _v0_gamma(left, args, start)
        b = _v0_gamma(outer.right, args, start + left.degree)
        if type(b) is Zero:
            return a
        if type(a) is Zero:
            return b
        return Node(a, b)
    if t is Zero:
        return ZERO
    return args[start]


def v0_enumerate(n: int) -> list[V0Element]:
    return [ZERO] if n == 0 else v_enumerate(n)


@dataclass(frozen=True, slots=True)
class TPoint:
    """The single element of T(n)."""

    degree: int

    def __str__(self):
        return f"*{self.degree}"


def t_gamma(outer: TPoint, args: Sequence[TPoint]) -> TPoint:
    _check_arity(outer, args)
    return TPoint(sum(a.degree for a in args))


def map_V0_to_T(x: V0Element) -> TPoint:
    return TPoint(x.degree)


def free_extend_V(target: OperadView, a) -> Callable[[VElement], object]:
    """The unique operad map V -> target sending the pair ``(1,1)`` to ``a``."""
    memo: dict = {}

    def g(beta: VElement):
        if isinstance(beta, Leaf):
            return target.identity
        try:
            return memo[beta]
        except KeyError:
            pass
        value = target.gamma(a, [g(beta.left), g(beta.right)])
        memo[beta] = value
        return value

    return g


# -- text form ---------------------------------------------------------------


class _Reader:
    def __init__(self, text: str):
        self.text = text.replace(" ", "")
        self.pos = 0

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            raise ValueError(f"expected {ch!r} at position {self.pos} in {self.text!r}")
        self.pos += 1

    def done(self):
        if self.pos != len(self.text):
            raise ValueError(f"trailing input at position {self.pos} in {self.text!r}")


def _read_tree(r: _Reader, allow_zero: bool):
    ch = r.peek()
    if ch == "1":
        r.pos += 1
        return LEAF
    if ch == "0" and allow_zero:
        r.pos += 1
        return ZERO
    r.expect("(")
    left = _read_tree(r, False)
    r.expect(",")
    right = _read_tree(r, False)
    r.expect(")")
    return Node(left, right)


def parse_v(text: str) -> VElement:
    r = _Reader(text)
    x = _read_tree(r, False)
    r.done()
    return x


def parse_v0(text: str) -> V0Element:
    r = _Reader(text)
    x = _read_tree(r, True)
    r.done()
    return x


def parse_t(text: str) -> TPoint:
    body = text.strip()
    if not (body.startswith("*") and body[1:].isdigit()):
        raise ValueError(f"T element must look like *3, got {text!r}")
    return TPoint(int(body[1:]))


# -- views -------------------------------------------------------------------

V_VIEW = OperadView(
    name="V",
    identity=LEAF,
    gamma=v_gamma,
    degree=degree,
    elements=lambda n, s: v_enumerate(n) if n <= s else [],
)

V0_VIEW = OperadView(
    name="V0",
    identity=LEAF,
    gamma=v0_gamma,
    degree=degree,
    elements=lambda n, s: v0_enumerate(n) if n <= s else [],
)

T_VIEW = OperadView(
    name="T",
    identity=TPoint(1),
    gamma=t_gamma,
    degree=degree,
    elements=lambda n, s: [TPoint(n)] if n <= s else [],
)
