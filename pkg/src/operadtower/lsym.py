"""Symmetrization of non-symmetric operads, endomorphism operads, and law checkers.

``LQ(n) = Q(n) x S_n`` with the symmetric group acting by right
multiplication on the permutation factor. Composition is

    gamma((q, s); (r1, t1), ..., (rn, tn))
        = (gamma(q; r[s^-1(1)], ..., r[s^-1(n)]),
           block_permutation(s, [k1, ..., kn]) * direct_sum([t1, ..., tn]))

where ``ki`` is the degree of ``ri``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Callable, Hashable, Iterator, Optional, Sequence

import numpy as np

from .perm import (Permutation, all_permutations, apply_to_list, block_permutation,
                   compose, direct_sum, identity)
from .report import Report
from .view import OperadView


@dataclass(frozen=True, slots=True)
class LElement:
    base: Any
    perm: Permutation

    def __post_init__(self):
        if self.base.degree != self.perm.degree:
            raise ValueError(f"base of degree {self.base.degree} paired with a permutation "
                             f"of degree {self.perm.degree}")

    @property
    def degree(self) -> int:
        return self.perm.degree

    def __str__(self):
        return f"({self.base} | {self.perm})"


def l_gamma(outer: LElement, args: Sequence[LElement],
            base_gamma: Callable[[Any, Sequence[Any]], Any]) -> LElement:
    s = outer.perm
    if len(args) != s.degree:
        raise ValueError(f"{outer} has degree {s.degree} but got {len(args)} arguments")
    base = base_gamma(outer.base, apply_to_list(s, [a.base for a in args]))
    perm = compose(block_permutation(s, [a.degree for a in args]),
                   direct_sum([a.perm for a in args]))
    return LElement(base, perm)


def l_act(x: LElement, r: Permutation) -> LElement:
    return LElement(x.base, compose(x.perm, r))


def l_embed(q) -> LElement:
    """A non-symmetric element with the identity permutation attached."""
    return LElement(q, identity(q.degree))


def l_view(base: OperadView) -> OperadView:
    def elements(n, s):
        perms = list(all_permutations(n))
        return [LElement(b, p) for b in base.elements(n, s) for p in perms]

    return OperadView(
        name="L" + base.name,
        identity=LElement(base.identity, identity(1)),
        gamma=lambda outer, args: l_gamma(outer, args, base.gamma),
        degree=lambda x: x.perm.degree,
        elements=elements,
        size=lambda x: base.measure(x.base),
        act=l_act,
    )


# -- endomorphism operads ------------------------------------------------------


@lru_cache(maxsize=None)
def _splitter(q: int, arities: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """For each input code of total arity, the codes of its consecutive blocks."""
    total = sum(arities)
    out = []
    for code in range(q ** total):
        parts = []
        rest = total
        for k in arities:
            rest -= k
            parts.append((code // q ** rest) % q ** k)
        out.append(tuple(parts))
    return tuple(out)


@lru_cache(maxsize=None)
def _permuter(q: int, images: tuple[int, ...]) -> tuple[int, ...]:
    """Input code of ``x`` -> code of ``apply_to_list(s, x)`` for the permutation ``images``."""
    s = Permutation(images)
    n = len(images)
    out = []
    for xs in itertools.product(range(q), repeat=n):
        ys = apply_to_list(s, xs)
        out.append(_encode(q, ys))
    return tuple(out)


def _encode(q: int, digits: Sequence[int]) -> int:
    code = 0
    for d in digits:
        code = code * q + d
    return code


def _gather(q: int, gs: Sequence[EndElement]) -> list[int]:
    """Index map of substitution: ``gamma(f; gs).table[c] == f.table[idx[c]]``."""
    split = _splitter(q, tuple(g.arity for g in gs))
    gcodes = [g._codes for g in gs]
    idx = []
    for parts in split:
        code = 0
        for gc, p in zip(gcodes, parts):
            code = code * q + gc[p]
        idx.append(code)
    return idx


@dataclass(frozen=True, slots=True)
class EndElement:
    """A function ``X^arity -> X`` stored as a truth table.

    ``table`` lists outputs (as carrier values) for the inputs of
    ``itertools.product(carrier, repeat=arity)`` in order.
    """

    carrier: tuple
    arity: int
    table: tuple

    def __post_init__(self):
        if len(self.table) != len(self.carrier) ** self.arity:
            raise ValueError(f"table of length {len(self.table)} for arity {self.arity} "
                             f"over {len(self.carrier)} points")

    @property
    def degree(self) -> int:
        return self.arity

    @property
    def _codes(self) -> tuple[int, ...]:
        if self.carrier == tuple(range(len(self.carrier))):
            return self.table
        index = {x: i for i, x in enumerate(self.carrier)}
        return tuple(index[v] for v in self.table)

    def __call__(self, *xs):
        if len(xs) != self.arity:
            raise ValueError(f"arity {self.arity} function called with {len(xs)} arguments")
        index = {x: i for i, x in enumerate(self.carrier)}
        return self.table[_encode(len(self.carrier), [index[x] for x in xs])]

    def act(self, s: Permutation) -> EndElement:
        """``(f s)(x1..xn) = f(x[s^-1(1)], ..., x[s^-1(n)])``."""
        if s.degree != self.arity:
            raise ValueError(f"permutation of degree {s.degree} on an arity {self.arity} function")
        move = _permuter(len(self.carrier), s.images)
        table = self.table
        return EndElement(self.carrier, self.arity, tuple(table[c] for c in move))

    def __str__(self):
        return f"<{self.arity}:{''.join(map(str, self.table))}>"


def end_function(carrier: Sequence[Hashable], arity: int, fn: Callable[..., Any]) -> EndElement:
    carrier = tuple(carrier)
    return EndElement(carrier, arity, tuple(fn(*xs) for xs in itertools.product(carrier, repeat=arity)))


def parse_end(text: str, carrier: Sequence[Hashable] = (0, 1)) -> EndElement:
    """Read ``<arity:table>``, e.g. ``<2:0110>`` for exclusive or over ``{0,1}``."""
    body = text.strip()
    if not (body.startswith("<") and body.endswith(">") and ":" in body):
        raise ValueError(f"function must look like <2:0110>, got {text!r}")
    arity_text, table_text = body[1:-1].split(":", 1)
    names = {str(x): x for x in carrier}
    try:
        table = tuple(names[ch] for ch in table_text)
        return EndElement(tuple(carrier), int(arity_text), table)
    except (KeyError, ValueError) as exc:
        raise ValueError(f"bad function {text!r}: {exc}") from None


def end_identity(carrier: Sequence[Hashable]) -> EndElement:
    return end_function(carrier, 1, lambda x: x)


def end_gamma(f: EndElement, gs: Sequence[EndElement]) -> EndElement:
    """Substitution ``(f; g1..gn)(x) = f(g1(x^1), ..., gn(x^n))`` on consecutive blocks."""
    if len(gs) != f.arity:
        raise ValueError(f"arity {f.arity} function composed with {len(gs)} arguments")
    ftable = f.table
    idx = _gather(len(f.carrier), gs)
    return EndElement(f.carrier, sum(g.arity for g in gs), tuple(ftable[i] for i in idx))


def end_enumerate(carrier: Sequence[Hashable], arity: int) -> list[EndElement]:
    carrier = tuple(carrier)
    return [EndElement(carrier, arity, t)
            for t in itertools.product(carrier, repeat=len(carrier) ** arity)]


def end_view(carrier: Sequence[Hashable]) -> OperadView:
    carrier = tuple(carrier)
    if not carrier:
        raise ValueError("carrier must be non-empty")
    return OperadView(
        name=f"End({{{','.join(map(str, carrier))}}})",
        identity=end_identity(carrier),
        gamma=end_gamma,
        degree=lambda f: f.arity,
        elements=lambda n, s: end_enumerate(carrier, n) if n <= s else [],
        act=lambda f, s: f.act(s),
        sym_kernel=lambda bound, max_degree, report: _end_sym_kernel(carrier, bound, max_degree, report),
    )


def _end_sym_kernel(carrier: tuple, bound: int, max_degree: Optional[int], report: Report):
    """``check_sym_axioms`` for ``End(carrier)`` with the outer function vectorized.

    Action and substitution are the same index maps used by ``EndElement.act``
    and ``end_gamma``; here they are applied to a matrix holding every truth
    table of a given arity at once, one row per instance.
    """
    q = len(carrier)
    top = bound if max_degree is None else min(bound, max_degree)
    groups = {k: end_enumerate(carrier, k) for k in range(top + 1)}
    tuples = _tuple_source(groups, max_degree, lambda f: f.arity)
    mats = {k: np.array([f._codes for f in groups[k]], dtype=np.int64).reshape(-1, q ** k)
            for k in groups}

    def move(s):
        return list(_permuter(q, s.images))

    def compare(law, n, expected, actual, operands):
        bad = (expected != actual).any(axis=1)
        if not report.keep_passes:
            report.bulk_pass(law, int((~bad).sum()))
            rows = np.flatnonzero(bad)
        else:
            rows = range(len(bad))
        for r in rows:
            x = groups[n][r]
            report.record(law, (x,) + operands, _end_row(carrier, expected[r]),
                          _end_row(carrier, actual[r]), not bad[r])

    for n in range(top + 1):
        X = mats[n]
        sym = list(all_permutations(n))
        compare("action_unit", n, X, X[:, move(identity(n))], ())
        for s in sym:
            Xs = X[:, move(s)]
            for r in sym:
                compare("action_composition", n, X[:, move(compose(s, r))], Xs[:, move(r)], (s, r))
        for ys in tuples(n, bound):
            sizes = [y.arity for y in ys]
            if max_degree is not None and sum(sizes) > max_degree:
                continue
            direct = X[:, _gather(q, ys)]
            for s in sym:
                expected = X[:, _gather(q, apply_to_list(s, ys))][:, move(block_permutation(s, sizes))]
                actual = X[:, move(s)][:, _gather(q, ys)]
                compare("equivariance_outer", n, expected, actual, (s, ys))
            for ts in itertools.product(*(all_permutations(k) for k in sizes)):
                expected = direct[:, move(direct_sum(ts))]
                actual = X[:, _gather(q, [y.act(t) for y, t in zip(ys, ts)])]
                compare("equivariance_inner", n, expected, actual, (ys, ts))


def _end_row(carrier: tuple, codes) -> EndElement:
    n = len(codes)
    arity = 0
    while len(carrier) ** arity < n:
        arity += 1
    return EndElement(carrier, arity, tuple(carrier[int(c)] for c in codes))


def binary_operations(carrier: Sequence[Hashable]) -> list[EndElement]:
    return end_enumerate(carrier, 2)


def adjoint_lift(h: Callable[[Any], EndElement]) -> Callable[[LElement], EndElement]:
    """Extend a non-symmetric map ``Q -> End(X)`` to the symmetric map ``LQ -> End(X)``."""
    return lambda x: h(x.base).act(x.perm)


# -- law checking ----------------------------------------------------------------


def _tuple_source(groups: dict[int, list], max_degree: Optional[int], degree):
    """``build(arity, budget)``: tuples of ``arity`` elements with sizes summing to at most ``budget``.

    Results are memoized for the lifetime of the returned function.
    """
    memo: dict = {}

    def build(k, b):
        if (k, b) in memo:
            return memo[k, b]
        if k == 0:
            out = [()]
        else:
            out = []
            for s in sorted(groups):
                if s > b:
                    break
                tails = build(k - 1, b - s)
                for y in groups[s]:
                    if max_degree is not None and degree(y) > max_degree:
                        continue
                    out.extend((y,) + rest for rest in tails)
        memo[k, b] = out
        return out

    return build


def compositions(view: OperadView, bound: int, max_degree: Optional[int] = None,
                 tuples=None) -> Iterator[tuple[Any, tuple]]:
    """All ``(x, ys)`` whose composite, and every piece, has size at most ``bound``."""
    tuples = tuples or _tuple_source(view.by_size(bound), max_degree, view.degree)
    for x in view.all_elements(bound):
        n = view.degree(x)
        if max_degree is not None and n > max_degree:
            continue
        budget = bound - (view.measure(x) - n)
        for ys in tuples(n, budget):
            if max_degree is not None and sum(map(view.degree, ys)) > max_degree:
                continue
            yield x, ys


def _blocks(items: Sequence, sizes: Sequence[int]) -> list[tuple]:
    out, start = [], 0
    for k in sizes:
        out.append(tuple(items[start:start + k]))
        start += k
    return out


def check_nonsym_axioms(view: OperadView, bound: int, max_degree: Optional[int] = None,
                        report: Optional[Report] = None) -> Report:
    """Unit laws and associativity of composition, exhaustively within ``bound``."""
    report = report or Report("nonsym", {"operad": view.name, "bound": bound})
    g, e, fmt = view.gamma, view.identity, view.fmt
    for x in view.all_elements(bound):
        n = view.degree(x)
        if max_degree is not None and n > max_degree:
            continue
        report.check("left_unit", (x,), lambda: x, lambda: g(e, [x]), fmt)
        report.check("right_unit", (x,), lambda: x, lambda: g(x, [e] * n), fmt)
    tuples = _tuple_source(view.by_size(bound), max_degree, view.degree)
    for x, ys in compositions(view, bound, max_degree, tuples):
        try:
            inner = g(x, ys)
        except Exception as exc:  # noqa: BLE001
            report.check("associativity", (x, ys), lambda: None, lambda: _raise(exc), fmt)
            continue
        m = view.degree(inner)
        sizes = [view.degree(y) for y in ys]
        budget = bound - (view.measure(inner) - m)
        passes = 0
        for zs in tuples(m, budget):
            # inlined Report.check: this loop carries millions of instances
            try:
                lhs = g(inner, zs)
                rhs = g(x, [g(y, blk) for y, blk in zip(ys, _blocks(zs, sizes))])
            except Exception as exc:  # noqa: BLE001
                lhs, rhs = None, exc
            if lhs is not None and lhs == rhs:
                passes += 1
            else:
                report.record("associativity", (x, ys, zs), lhs, rhs, False, fmt)
        if report.keep_passes:
            for zs in tuples(m, budget):
                report.record("associativity", (x, ys, zs), g(inner, zs), g(inner, zs), True, fmt)
        else:
            report.bulk_pass("associativity", passes)
    return report


def _raise(exc):
    raise exc


def check_sym_axioms(view: OperadView, bound: int, max_degree: Optional[int] = None,
                     report: Optional[Report] = None, vectorized: bool = True) -> Report:
    """Right-action laws and both equivariance laws of composition."""
    if not view.symmetric:
        raise ValueError(f"{view.name} has no symmetric group action")
    report = report or Report("sym", {"operad": view.name, "bound": bound})
    if vectorized and view.sym_kernel is not None:
        view.sym_kernel(bound, max_degree, report)
        return report
    g, act, fmt = view.gamma, view.act, view.fmt
    perms: dict[int, list[Permutation]] = {}

    def sym(n):
        if n not in perms:
            perms[n] = list(all_permutations(n))
        return perms[n]

    for x in view.all_elements(bound):
        n = view.degree(x)
        if max_degree is not None and n > max_degree:
            continue
        report.check("action_unit", (x,), lambda: x, lambda: act(x, identity(n)), fmt)
        for s in sym(n):
            xs = act(x, s)
            for r in sym(n):
                report.check("action_composition", (x, s, r),
                             lambda: act(x, compose(s, r)), lambda: act(xs, r), fmt)

    for x, ys in compositions(view, bound, max_degree):
        n = view.degree(x)
        sizes = [view.degree(y) for y in ys]
        for s in sym(n):
            report.check(
                "equivariance_outer", (x, s, ys),
                lambda: act(g(x, apply_to_list(s, ys)), block_permutation(s, sizes)),
                lambda: g(act(x, s), ys),
                fmt,
            )
        for ts in itertools.product(*(sym(k) for k in sizes)):
            report.check(
                "equivariance_inner", (x, ys, ts),
                lambda: act(g(x, ys), direct_sum(ts)),
                lambda: g(x, [act(y, t) for y, t in zip(ys, ts)]),
                fmt,
            )
    return report


def check_operad_map(f: Callable[[Any], Any], src: OperadView, dst: OperadView, bound: int,
                     max_degree: Optional[int] = None, name: str = "map",
                     report: Optional[Report] = None) -> Report:
    """``f`` preserves identity, composition and (for symmetric views) the action."""
    report = report or Report("map", {"map": name, "source": src.name, "target": dst.name,
                                      "bound": bound})
    fmt = src.fmt
    report.check("identity", (src.identity,), lambda: dst.identity, lambda: f(src.identity), fmt)
    for x, ys in compositions(src, bound, max_degree):
        report.check(
            "composition", (x, ys),
            lambda: dst.gamma(f(x), [f(y) for y in ys]),
            lambda: f(src.gamma(x, ys)),
            fmt,
        )
    if src.symmetric and dst.symmetric:
        for x in src.all_elements(bound):
            n = src.degree(x)
            if max_degree is not None and n > max_degree:
                continue
            for s in all_permutations(n):
                report.check("equivariance", (x, s),
                             lambda: dst.act(f(x), s), lambda: f(src.act(x, s)), fmt)
    return report

