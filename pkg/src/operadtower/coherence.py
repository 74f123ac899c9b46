"""Symmetric monoidal expressions and constructive coherence isomorphisms.

Expressions are built from the unit ``I``, variables ``x1, x2, ...`` and the
tensor ``(a*b)``. A :class:`Move` applies one structural isomorphism
(associator, symmetry or a unitor, possibly inverted) at a subterm address
given as a string over ``L``/``R``. :func:`synthesize` produces a move
sequence between any two expressions over the same distinct variables by
normalizing both sides to the unit-free right comb.
"""

from __future__ import annotations

import itertools
import weakref
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence, Union

from .perm import Permutation, compose, identity
from .report import Report


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


class MoveError(ValueError):
    """A move was applied where its shape precondition does not hold."""


class Unit:
    __slots__ = ()

    def __eq__(self, other):
        return type(other) is Unit

    def __hash__(self):
        return 7

    def __str__(self):
        return "I"

    __repr__ = __str__


class Var:
    """A variable leaf; instances are interned, so equal leaves are identical."""

    __slots__ = ("index", "__weakref__")
    _pool: dict = {}

    def __new__(cls, index: int):
        v = cls._pool.get(index)
        if v is None:
            v = object.__new__(cls)
            v.index = index
            cls._pool[index] = v
        return v

    def __eq__(self, other):
        return self is other or (type(other) is Var and other.index == self.index)

    def __hash__(self):
        return hash(("x", self.index))

    def __str__(self):
        return f"x{self.index}"

    __repr__ = __str__


class Tensor:
    """A tensor node; hash-consed, so structurally equal trees are one object."""

    __slots__ = ("left", "right", "_hash", "__weakref__")
    _pool = weakref.WeakValueDictionary()

    def __new__(cls, left: Expr, right: Expr):
        key = (id(left), id(right))
        t = cls._pool.get(key)
        if t is not None and t.left is left and t.right is right:
            return t
        t = object.__new__(cls)
        t.left = left
        t.right = right
        t._hash = None
        cls._pool[key] = t
        return t

    def __eq__(self, other):
        if self is other:
            return True
        return type(other) is Tensor and self.left == other.left and self.right == other.right

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.left, self.right))
        return self._hash

    def __str__(self):
        return f"({self.left}*{self.right})"

    __repr__ = __str__


Expr = Union[Unit, Var, Tensor]
UNIT = Unit()


def variables(e: Expr) -> list[int]:
    """Variable indices in left-to-right leaf order."""
    return list(_leaves(e))


@lru_cache(maxsize=1 << 16)
def _leaves(e: Expr) -> tuple[int, ...]:
    if type(e) is Var:
        return (e.index,)
    if type(e) is Tensor:
        return _leaves(e.left) + _leaves(e.right)
    return ()


def unit_count(e: Expr) -> int:
    if type(e) is Tensor:
        return unit_count(e.left) + unit_count(e.right)
    return 1 if type(e) is Unit else 0


def relabel(e: Expr, mapping) -> Expr:
    if type(e) is Var:
        return Var(mapping[e.index])
    if type(e) is Tensor:
        return Tensor(relabel(e.left, mapping), relabel(e.right, mapping))
    return e


def parse_expr(text: str) -> Expr:
    """Parse ``E ::= "I" | "x" digits | "(" E "*" E ")"``; spaces are ignored."""
    src = text.replace(" ", "")
    pos = 0

    def fail(msg):
        raise ExprSyntaxError(msg, text, pos)

    def read() -> Expr:
        nonlocal pos
        if pos >= len(src):
            fail("unexpected end of input")
        ch = src[pos]
        if ch == "I":
            pos += 1
            return UNIT
        if ch == "x":
            pos += 1
            start = pos
            while pos < len(src) and src[pos].isdigit():
                pos += 1
            if start == pos:
                fail("expected variable index")
            return Var(int(src[start:pos]))
        if ch == "(":
            pos += 1
            left = read()
            if pos >= len(src) or src[pos] != "*":
                fail("expected '*'")
            pos += 1
            right = read()
            if pos >= len(src) or src[pos] != ")":
                fail("expected ')'")
            pos += 1
            return Tensor(left, right)
        fail(f"unexpected {ch!r}")

    e = read()
    if pos != len(src):
        fail("trailing input")
    return e


# -- moves -------------------------------------------------------------------

KINDS = ("alpha", "alpha_inv", "tau", "eta_l", "eta_l_inv", "eta_r", "eta_r_inv")
INVERSE_KIND = {
    "alpha": "alpha_inv", "alpha_inv": "alpha", "tau": "tau",
    "eta_l": "eta_l_inv", "eta_l_inv": "eta_l", "eta_r": "eta_r_inv", "eta_r_inv": "eta_r",
}
ETA_KINDS = frozenset(k for k in KINDS if k.startswith("eta"))


@dataclass(frozen=True)
class Move:
    kind: str
    path: str = ""

    def __post_init__(self):
        if self.kind not in INVERSE_KIND:
            raise ValueError(f"unknown move kind {self.kind!r}")
        if set(self.path) - {"L", "R"}:
            raise ValueError(f"path must be a string over L/R, got {self.path!r}")

    def inverse(self) -> Move:
        return Move(INVERSE_KIND[self.kind], self.path)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "path": self.path}

    def __str__(self):
        return f"{self.kind}@{self.path or '.'}"


def _local(e: Expr, kind: str) -> Expr:
    t = type(e)
    if kind == "alpha":
        if t is Tensor and type(e.left) is Tensor:
            return Tensor(e.left.left, Tensor(e.left.right, e.right))
    elif kind == "alpha_inv":
        if t is Tensor and type(e.right) is Tensor:
            return Tensor(Tensor(e.left, e.right.left), e.right.right)
    elif kind == "tau":
        if t is Tensor:
            return Tensor(e.right, e.left)
    elif kind == "eta_l":
        if t is Tensor and type(e.left) is Unit:
            return e.right
    elif kind == "eta_r":
        if t is Tensor and type(e.right) is Unit:
            return e.left
    elif kind == "eta_l_inv":
        return Tensor(UNIT, e)
    elif kind == "eta_r_inv":
        return Tensor(e, UNIT)
    raise MoveError(f"{kind} does not apply to {e}")


def _rewrite(e: Expr, path: str, i: int, kind: str) -> Expr:
    if i == len(path):
        return _local(e, kind)
    if type(e) is not Tensor:
        raise MoveError(f"path {path!r} leaves the expression at {e}")
    if path[i] == "L":
        return Tensor(_rewrite(e.left, path, i + 1, kind), e.right)
    return Tensor(e.left, _rewrite(e.right, path, i + 1, kind))


def apply_move(e: Expr, m: Move) -> Expr:
    return _rewrite(e, m.path, 0, m.kind)


@lru_cache(maxsize=1 << 18)
def _step(e: Expr, m: Move) -> Expr:
    return _rewrite(e, m.path, 0, m.kind)


@dataclass(frozen=True)
class MoveSeq:
    source: Expr
    moves: tuple[Move, ...]

    def states(self) -> Iterator[Expr]:
        e = self.source
        yield e
        for m in self.moves:
            e = apply_move(e, m)
            yield e

    def replay(self) -> Expr:
        e = self.source
        for m in self.moves:
            e = apply_move(e, m)
        return e

    def __len__(self):
        return len(self.moves)

    def then(self, other: MoveSeq) -> MoveSeq:
        return MoveSeq(self.source, self.moves + other.moves)

    def to_records(self) -> list[dict]:
        return [m.to_dict() for m in self.moves]


# -- normalization phases ------------------------------------------------------


def _elim(e: Expr, path: str) -> tuple[list[Move], Expr]:
    if type(e) is not Tensor:
        return [], e
    moves, left = _elim(e.left, path + "L")
    more, right = _elim(e.right, path + "R")
    moves += more
    if type(left) is Unit:
        moves.append(Move("eta_l", path))
        return moves, right
    if type(right) is Unit:
        moves.append(Move("eta_r", path))
        return moves, left
    return moves, Tensor(left, right)


def eliminate_units(e: Expr) -> MoveSeq:
    """Remove unit leaves innermost first; an expression of units collapses to ``I``."""
    return MoveSeq(e, _unit_phase(e)[0])


@lru_cache(maxsize=None)
def _unit_phase(e: Expr) -> tuple[tuple[Move, ...], Expr]:
    moves, out = _elim(e, "")
    return tuple(moves), out


def _merge(left: Expr, right: Expr, path: str) -> tuple[list[Move], Expr]:
    # rotate a right comb ``left`` past the right comb ``right``
    if type(left) is not Tensor:
        return [], Tensor(left, right)
    moves, rest = _merge(left.right, right, path + "R")
    return [Move("alpha", path)] + moves, Tensor(left.left, rest)


def _assoc(e: Expr, path: str) -> tuple[list[Move], Expr]:
    if type(e) is not Tensor:
        return [], e
    moves, left = _assoc(e.left, path + "L")
    more, right = _assoc(e.right, path + "R")
    tail, out = _merge(left, right, path)
    return moves + more + tail, out


def right_associate(e: Expr) -> MoveSeq:
    """Associate a unit-free expression to the right comb of the same leaves."""
    return MoveSeq(e, _assoc_phase(e)[0])


@lru_cache(maxsize=None)
def _assoc_phase(e: Expr) -> tuple[tuple[Move, ...], Expr]:
    if unit_count(e):
        raise ValueError(f"{e} contains unit leaves")
    moves, out = _assoc(e, "")
    return tuple(moves), out


def _comb(leaves: Sequence[int]) -> Expr:
    if not leaves:
        return UNIT
    e: Expr = Var(leaves[-1])
    for v in reversed(leaves[:-1]):
        e = Tensor(Var(v), e)
    return e


def _is_comb(e: Expr) -> bool:
    while type(e) is Tensor:
        if type(e.left) is not Var:
            return False
        e = e.right
    return type(e) is Var


@lru_cache(maxsize=None)
def _sort_moves(current: tuple[int, ...], target: tuple[int, ...]) -> tuple[Move, ...]:
    rank = {v: i for i, v in enumerate(target)}
    order = list(current)
    n = len(order)
    moves: list[Move] = []
    swapped = True
    while swapped:
        swapped = False
        for i in range(n - 1):
            if rank[order[i]] > rank[order[i + 1]]:
                order[i], order[i + 1] = order[i + 1], order[i]
                at = "R" * i
                if i == n - 2:
                    moves.append(Move("tau", at))
                else:
                    moves += [Move("alpha_inv", at), Move("tau", at + "L"), Move("alpha", at)]
                swapped = True
    return tuple(moves)


def sort_leaves(e: Expr, target_order: Sequence[int]) -> MoveSeq:
    """Bubble-sort a right comb of distinct variables into ``target_order``.

    A swap of leaves ``i, i+1`` not at the end of the comb is the pattern
    ``alpha_inv, tau`` on the left factor, ``alpha`` at depth ``i``; the final
    pair is swapped by a single ``tau``.
    """
    if not _is_comb(e):
        raise ValueError(f"{e} is not a right comb of variables")
    current = tuple(variables(e))
    target = tuple(target_order)
    if sorted(current) != sorted(target) or len(set(target)) != len(target):
        raise ValueError(f"{list(target)} is not a permutation of the leaves of {e}")
    return MoveSeq(e, _sort_moves(current, target))


def _check_distinct(e: Expr) -> tuple[int, ...]:
    vs = _leaves(e)
    if not _distinct(vs):
        raise ValueError(f"{e} repeats a variable")
    return vs


@lru_cache(maxsize=1 << 16)
def _distinct(vs: tuple[int, ...]) -> bool:
    return len(set(vs)) == len(vs)


def normalize(e: Expr) -> tuple[tuple[Move, ...], Expr]:
    """Moves from ``e`` to its unit-free right comb (``I`` if no variables)."""
    units, e1 = _unit_phase(e)
    if type(e1) is Unit:
        return units, e1
    assoc, e2 = _assoc_phase(e1)
    return units + assoc, e2


def synthesize(source: Expr, target: Expr) -> MoveSeq:
    """A move sequence rewriting ``source`` into ``target``.

    Both sides are normalized to unit-free right combs; the source comb is
    sorted into the target's leaf order and the target's normalization is
    then undone in reverse.
    """
    vs, vt = _check_distinct(source), _check_distinct(target)
    if set(vs) != set(vt):
        raise ValueError(f"{source} and {target} have different variables")
    down, comb = normalize(source)
    middle = _sort_moves(_leaves(comb), vt)
    return MoveSeq(source, down + middle + _undo(target))


@lru_cache(maxsize=1 << 16)
def _undo(target: Expr) -> tuple[Move, ...]:
    """Moves taking the normal form of ``target`` back to ``target``."""
    up, _ = normalize(target)
    return tuple(m.inverse() for m in reversed(up))


# -- leaf tracking ---------------------------------------------------------------


def label_bijection(source: Expr, target: Expr) -> Permutation:
    """Source leaf position ``p`` goes to the target position holding the same variable."""
    where = {v: q for q, v in enumerate(_check_distinct(target), 1)}
    return Permutation(tuple(where[v] for v in _check_distinct(source)))


def tracked_replay(seq: MoveSeq) -> tuple[Expr, Permutation]:
    """Replay with variable leaves tagged by source position.

    Returns the final expression (original labels) and the permutation
    sending each source leaf position to its final position.
    """
    labels = _leaves(seq.source)
    tagged = _tagged(seq.source)
    for m in seq.moves:
        tagged = _step(tagged, m)
    order = _leaves(tagged)
    images = [0] * len(order)
    for q, p in enumerate(order, 1):
        images[p - 1] = q
    return _untag(tagged, labels), Permutation(tuple(images))


@lru_cache(maxsize=1 << 18)
def _untag(tagged: Expr, labels: tuple[int, ...]) -> Expr:
    return relabel(tagged, {p: labels[p - 1] for p in range(1, len(labels) + 1)})


@lru_cache(maxsize=1 << 16)
def _tagged(e: Expr) -> Expr:
    return _tag_positions(e, iter(range(1, len(_leaves(e)) + 1)))


def _tag_positions(e: Expr, counter) -> Expr:
    if type(e) is Var:
        return Var(next(counter))
    if type(e) is Tensor:
        left = _tag_positions(e.left, counter)
        return Tensor(left, _tag_positions(e.right, counter))
    return e


def moveseq_bijection(seq: MoveSeq) -> Permutation:
    return tracked_replay(seq)[1]


def move_bound(n_vars: int, n_units: int) -> int:
    return 2 * n_vars ** 2 + 4 * n_units


def eta_phases_ok(seq: MoveSeq) -> bool:
    """Unitor moves form a prefix block and a suffix block and nothing in between."""
    kinds = [m.kind in ETA_KINDS for m in seq.moves]
    i = 0
    while i < len(kinds) and kinds[i]:
        i += 1
    j = len(kinds)
    while j > i and kinds[j - 1]:
        j -= 1
    return not any(kinds[i:j])


# -- exhaustive corpus -------------------------------------------------------------


def _shapes(leaves: int) -> Iterator[Expr]:
    """All binary trees with placeholder leaves numbered 1..leaves left to right."""
    def build(lo, hi):
        if lo == hi:
            yield Var(lo)
            return
        for k in range(lo, hi):
            for a in build(lo, k):
                for b in build(k + 1, hi):
                    yield Tensor(a, b)
    if leaves:
        yield from build(1, leaves)


def expressions(n_vars: int, max_units: int = 1) -> list[Expr]:
    """All expressions over ``x1..xn`` (each exactly once) with at most ``max_units`` units.

    Every leaf ordering and every parenthesization is included. With no
    variables the only expression is ``I``.
    """
    if n_vars == 0:
        return [UNIT] if max_units >= 1 else []
    out = []
    for u in range(max_units + 1):
        leaves = n_vars + u
        for unit_spots in itertools.combinations(range(leaves), u):
            for order in itertools.permutations(range(1, n_vars + 1)):
                fill = iter(order)
                labels = [None if i in unit_spots else next(fill) for i in range(leaves)]
                for shape in _shapes(leaves):
                    out.append(_fill(shape, labels))
    return out


def _fill(shape: Expr, labels) -> Expr:
    if type(shape) is Var:
        v = labels[shape.index - 1]
        return UNIT if v is None else Var(v)
    return Tensor(_fill(shape.left, labels), _fill(shape.right, labels))



def check_coherence_corpus(max_vars: int = 4, max_units: int = 1,
                           report: Report | None = None) -> Report:
    """Synthesize between every ordered pair of expressions over the same variables.

    Each unordered pair is handled once with both directions, so the
    round-trip law reuses the two forward results.
    """
    report = report or Report("coherence-corpus", {"max_vars": max_vars, "max_units": max_units})
    laws = ("replay", "bijection", "round_trip", "move_bound", "eta_phases")
    passes = dict.fromkeys(laws, 0)
    for n in range(max_vars + 1):
        exprs = expressions(n, max_units)
        ident = tuple(range(1, n + 1))
        units = [unit_count(e) for e in exprs]
        leaves = [_leaves(e) for e in exprs]
        where = [{v: q for q, v in enumerate(vs, 1)} for vs in leaves]
        for i, s in enumerate(exprs):
            for j in range(i, len(exprs)):
                t = exprs[j]
                bound = move_bound(n, units[i] + units[j])
                pair = ((s, t, i, j),) if i == j else ((s, t, i, j), (t, s, j, i))
                bijs = []
                for src, tgt, a, b in pair:
                    seq = synthesize(src, tgt)
                    end, bij = tracked_replay(seq)
                    bijs.append(bij)
                    expected = tuple(where[b][v] for v in leaves[a])
                    checks = (
                        ("replay", tgt, end),
                        ("bijection", expected, bij.images),
                        ("move_bound", True, len(seq) <= bound),
                        ("eta_phases", True, eta_phases_ok(seq)),
                    )
                    for law, exp, act in checks:
                        if exp == act:
                            passes[law] += 1
                        else:
                            report.record(law, (src, tgt), exp, act, False)
                if i == j:
                    trips = ((bijs[0], bijs[0], s, t),)
                else:
                    trips = ((bijs[1], bijs[0], s, t), (bijs[0], bijs[1], t, s))
                for back, forth, src, tgt in trips:
                    comp = tuple(back.images[k - 1] for k in forth.images)
                    if comp == ident:
                        passes["round_trip"] += 1
                    else:
                        report.record("round_trip", (src, tgt), ident, comp, False)
    for law in laws:
        report.bulk_pass(law, passes[law])
    return report
