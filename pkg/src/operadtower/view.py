"""A uniform handle on an operad for enumeration and law checking."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Sequence

from .perm import Permutation


@dataclass(frozen=True)
class OperadView:
    """Degree-indexed element sets plus identity, composition and (optionally) action.

    ``size`` is the enumeration measure used to bound exhaustive checks: the
    operad degree for most operads, the internal degree for ``Z``. It must
    satisfy ``size(gamma(x, ys)) == size(x) - degree(x) + sum(size(y) for y in ys)``,
    which the checkers rely on for pruning.

    ``elements(n, max_size)`` lists the elements of degree ``n`` whose size is
    at most ``max_size``, in a fixed order.

    ``sym_kernel(bound, max_degree, report)``, when present, replaces the
    per-instance loops of ``check_sym_axioms`` with a vectorized run over the
    same instances.
    """

    name: str
    identity: Any
    gamma: Callable[[Any, Sequence[Any]], Any]
    degree: Callable[[Any], int]
    elements: Callable[[int, int], Sequence[Any]]
    size: Optional[Callable[[Any], int]] = None
    act: Optional[Callable[[Any, Permutation], Any]] = None
    fmt: Callable[[Any], str] = str
    sym_kernel: Optional[Callable[..., None]] = None
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def symmetric(self) -> bool:
        return self.act is not None

    def measure(self, x) -> int:
        return self.degree(x) if self.size is None else self.size(x)

    def by_size(self, max_size: int) -> dict[int, list]:
        """All elements of size at most ``max_size``, grouped by size."""
        key = ("by_size", max_size)
        if key not in self._cache:
            groups: dict[int, list] = {}
            for n in range(max_size + 1):
                for x in self.elements(n, max_size):
                    groups.setdefault(self.measure(x), []).append(x)
            self._cache[key] = groups
        return self._cache[key]

    def all_elements(self, max_size: int) -> list:
        groups = self.by_size(max_size)
        return [x for s in sorted(groups) for x in groups[s]]
