"""Analytic special cases: mutually exclusive properties and pure extensions.

When every property is mutually exclusive and uniformly weighted, both
scoring frameworks collapse to elementary formulas over the counts
(n, m, k): the exact conditional is k/n, while the complexity-based
estimate lands at (m/s)*(k/n). The two disagree unless k = n; the gap is
exposed here as framework_discrepancy rather than silently resolved, and
the exact conditional is what the enumeration engine reproduces.

Extensional inheritance (instance-set overlap) is the further special case
where each property is a singleton instance; singleton_reduction_check
verifies the reduction numerically against the enumeration engine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import EmptyAntecedent, InvalidOverlap, UniverseTooLarge, ZeroOverlap
from .model import MAX_UNIVERSE, Concept, InstanceTable, world_from_instances
from .shannon import shannon_inheritance


@dataclass(frozen=True)
class ExclusiveCaseParams:
    """Counts for the mutually-exclusive uniform case: n, m properties, k shared."""

    n: int
    m: int
    k: int

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError(f"need n >= 1 and m >= 1, got {(self.n, self.m)}")
        if not 0 <= self.k <= min(self.n, self.m):
            raise InvalidOverlap(f"overlap k={self.k} outside [0, min(n, m)={min(self.n, self.m)}]")

    @property
    def s(self) -> int:
        """Total distinct properties."""
        return self.n + self.m - self.k

    @property
    def p(self) -> float:
        """Uniform degree of each property."""
        return 1.0 / self.s


def exclusive_shannon(params: ExclusiveCaseParams) -> float:
    """Exact conditional in the exclusive case: k/n."""
    return params.k / params.n


def exclusive_algorithmic(params: ExclusiveCaseParams) -> tuple[float, float]:
    """(mutual information, conditional) in the complexity framework.

    Mutual information is log2(k/n) bits and the conditional is
    (m/s)*(k/n). Undefined for k = 0 (the log diverges); that case raises
    ZeroOverlap so callers can report an explicit no-overlap flag instead
    of a non-finite number.
    """
    if params.k == 0:
        raise ZeroOverlap("mutual information diverges with no shared properties")
    mi = math.log2(params.k / params.n)
    conditional = (params.m / params.s) * (params.k / params.n)
    return mi, conditional


def framework_discrepancy(params: ExclusiveCaseParams) -> float:
    """exclusive_shannon minus the exclusive_algorithmic conditional.

    Equals (k/n)*(1 - m/s); zero exactly when k = n.
    """
    return exclusive_shannon(params) - exclusive_algorithmic(params)[1]


@dataclass(frozen=True)
class ExtensionalPair:
    """Two instance sets inside a universe of universe_size instances.

    Instance ids are integers 1..universe_size.
    """

    f_extension: frozenset[int]
    w_extension: frozenset[int]
    universe_size: int

    def __post_init__(self):
        object.__setattr__(self, "f_extension", frozenset(self.f_extension))
        object.__setattr__(self, "w_extension", frozenset(self.w_extension))
        if self.universe_size < 1:
            raise ValueError(f"universe_size must be >= 1, got {self.universe_size}")
        for name, ext in (("f", self.f_extension), ("w", self.w_extension)):
            bad = [i for i in ext if not 1 <= i <= self.universe_size]
            if bad:
                raise ValueError(f"{name} extension ids outside 1..{self.universe_size}: {sorted(bad)}")


def extensional_inheritance(pair: ExtensionalPair) -> float:
    """|F intersect W| / |F|."""
    if not pair.f_extension:
        raise EmptyAntecedent("antecedent extension is empty")
    return len(pair.f_extension & pair.w_extension) / len(pair.f_extension)


def singleton_reduction_check(pair: ExtensionalPair) -> tuple[float, float]:
    """Extensional value next to the enumeration engine's exact conditional.

    Builds one singleton property per instance over the uniform instance
    world and scores the two concepts with the full machinery; the pair of
    returned values agrees to 1e-12. Both extensions must be nonempty.
    """
    if pair.universe_size > MAX_UNIVERSE:
        raise UniverseTooLarge(f"{pair.universe_size} instances exceeds the cap of {MAX_UNIVERSE}")
    if not pair.f_extension:
        raise EmptyAntecedent("antecedent extension is empty")
    universe = tuple(f"x{i}" for i in range(1, pair.universe_size + 1))
    rows = tuple((1 << i, 1.0) for i in range(pair.universe_size))
    world = world_from_instances(InstanceTable(universe, rows))
    degree = 1.0 / pair.universe_size
    f = Concept("F", tuple((f"x{i}", degree) for i in sorted(pair.f_extension)))
    w = Concept("W", tuple((f"x{i}", degree) for i in sorted(pair.w_extension)))
    report = shannon_inheritance(f, w, world)
    return extensional_inheritance(pair), report.exact_conditional
