"""Finite permutations, 1-based, with block permutation and direct sum.

A permutation of degree n is stored by its images: ``images[i - 1] == pi(i)``.
Composition is classical, ``compose(s, r)(i) == s(r(i))``, and permutations act
on tuples on the right by sending the item in position ``i`` to position
``pi(i)``, so that position ``i`` of the output holds ``items[pi^-1(i)]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence, TypeVar

T = TypeVar("T")


@dataclass(frozen=True, slots=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{list(images)} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __len__(self):
        return len(self.images)

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, 1))

    def __str__(self):
        return "[" + ",".join(map(str, self.images)) + "]"

    def __repr__(self):
        return f"Permutation({str(self)})"


def identity(n: int) -> Permutation:
    if n < 0:
        raise ValueError("degree must be non-negative")
    return Permutation(tuple(range(1, n + 1)))


def transposition() -> Permutation:
    """The non-identity element of the symmetric group on two letters."""
    return Permutation((2, 1))


def compose(s: Permutation, r: Permutation) -> Permutation:
    if s.degree != r.degree:
        raise ValueError(f"cannot compose degrees {s.degree} and {r.degree}")
    si = s.images
    return Permutation(tuple(si[j - 1] for j in r.images))


def inverse(s: Permutation) -> Permutation:
    out = [0] * s.degree
    for i, v in enumerate(s.images, 1):
        out[v - 1] = i
    return Permutation(tuple(out))


def direct_sum(parts: Sequence[Permutation]) -> Permutation:
    """Act by ``parts[i]`` inside the i-th contiguous block."""
    images = []
    offset = 0
    for p in parts:
        images.extend(v + offset for v in p.images)
        offset += p.degree
    return Permutation(tuple(images))


def block_permutation(s: Permutation, sizes: Sequence[int]) -> Permutation:
    """Permute contiguous blocks of the given sizes the way ``s`` permutes letters.

    Block ``i`` (of length ``sizes[i - 1]``) is carried to block position
    ``s(i)``, so ``apply_to_list`` of the result on ``L1 + ... + Ln`` yields
    ``L[s^-1(1)] + ... + L[s^-1(n)]``.
    """
    if len(sizes) != s.degree:
        raise ValueError(f"{len(sizes)} block sizes for a permutation of degree {s.degree}")
    inv = inverse(s)
    # start offset of each output block position
    out_start = [0] * (s.degree + 1)
    for p in range(1, s.degree + 1):
        out_start[p] = out_start[p - 1] + sizes[inv(p) - 1]
    images = []
    for i, k in enumerate(sizes, 1):
        base = out_start[s(i) - 1]
        images.extend(base + r for r in range(1, k + 1))
    return Permutation(tuple(images))


def apply_to_list(s: Permutation, items: Sequence[T]) -> tuple[T, ...]:
    """Right action on tuples: output position i holds ``items[s^-1(i)]``."""
    if len(items) != s.degree:
        raise ValueError(f"{len(items)} items for a permutation of degree {s.degree}")
    out: list = [None] * len(items)
    for i, v in enumerate(s.images):
        out[v - 1] = items[i]
    return tuple(out)


def all_permutations(n: int) -> Iterator[Permutation]:
    """Every element of the symmetric group on n letters, lexicographic in images."""
    for p in itertools.permutations(range(1, n + 1)):
        yield Permutation(p)


def parse_perm(text: str) -> Permutation:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"permutation must look like [2,3,1], got {text!r}")
    body = text[1:-1].strip()
    if not body:
        return identity(0)
    try:
        return Permutation(tuple(int(t) for t in body.split(",")))
    except ValueError as exc:
        raise ValueError(f"bad permutation {text!r}: {exc}") from None
