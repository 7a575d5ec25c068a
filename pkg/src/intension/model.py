"""Concepts, property universes, and exact world models.

A concept is a named, weighted set of binary properties. A world model is
an explicit joint distribution over all property variables, stored as a
table of 2**s probabilities indexed by bitmask (bit i set means property i
of the universe holds). Every probabilistic quantity in the library is
computed from such a table by exact enumeration, which is why the universe
is capped at 24 variables.

A concept's event is the union (disjunction) of its property events: "x is
the concept" means x holds at least one of the concept's properties. This
is what makes the one-hot construction below come out to the familiar
count ratios, and it is the only event semantics this package supports.
Declared degrees are read as marginal probabilities; the world model is
ground truth, and a disagreement beyond 1e-6 triggers DegreeMismatchWarning
rather than an error.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    EmptyTable,
    InvalidConcept,
    InvalidDegree,
    InvalidOverlap,
    InvalidProperty,
    UniverseTooLarge,
    UnknownProperty,
)

MAX_UNIVERSE = 24
NORMALIZATION_TOL = 1e-12
DEGREE_MISMATCH_TOL = 1e-6


class DegreeMismatchWarning(UserWarning):
    """A concept's declared degree disagrees with the world marginal."""


def check_property_id(pid: str) -> str:
    """Validate a property identifier: nonempty token, no whitespace."""
    if not isinstance(pid, str) or not pid:
        raise InvalidProperty(f"property id must be a nonempty string, got {pid!r}")
    if any(c.isspace() for c in pid):
        raise InvalidProperty(f"property id may not contain whitespace: {pid!r}")
    return pid


def check_degree(d: float, what: str = "degree") -> float:
    d = float(d)
    if not 0.0 <= d <= 1.0:  # also rejects NaN
        raise InvalidDegree(f"{what} must lie in [0, 1], got {d!r}")
    return d


@dataclass(frozen=True)
class Concept:
    """A named concept defined by (property id, degree) pairs.

    Property order is preserved as given; identity-sensitive consumers
    (serialization) normalize order themselves. Degrees live in [0, 1]
    and are interpreted as marginal probabilities of the property events.
    """

    name: str
    properties: tuple[tuple[str, float], ...]

    def __post_init__(self):
        props = tuple((check_property_id(p), check_degree(d)) for p, d in self.properties)
        if not props:
            raise InvalidConcept(f"concept {self.name!r} has no properties")
        ids = [p for p, _ in props]
        if len(set(ids)) != len(ids):
            dupes = sorted({p for p in ids if ids.count(p) > 1})
            raise InvalidConcept(f"concept {self.name!r} repeats properties: {dupes}")
        object.__setattr__(self, "properties", props)

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(p for p, _ in self.properties)

    def degree(self, pid: str) -> float:
        for p, d in self.properties:
            if p == pid:
                return d
        raise UnknownProperty(f"concept {self.name!r} has no property {pid!r}")


@dataclass(frozen=True, eq=False)
class WorldModel:
    """Joint distribution over s binary property variables.

    probs[mask] is the probability of the assignment where property i of
    the universe holds iff bit i of mask is set. The table is normalized
    once at construction and then frozen (read-only array); instances are
    safe to share across threads.
    """

    universe: tuple[str, ...]
    probs: np.ndarray

    @classmethod
    def from_weights(cls, universe: Sequence[str], weights: Sequence[float] | np.ndarray) -> "WorldModel":
        universe = tuple(check_property_id(p) for p in universe)
        if len(set(universe)) != len(universe):
            raise InvalidProperty(f"universe has duplicate ids: {universe}")
        s = len(universe)
        if s > MAX_UNIVERSE:
            raise UniverseTooLarge(f"universe has {s} properties, cap is {MAX_UNIVERSE}")
        w = np.asarray(weights, dtype=np.float64)
        if w.shape != (1 << s,):
            raise ValueError(f"expected {1 << s} weights for {s} properties, got {w.shape}")
        if not np.all(np.isfinite(w)):
            raise ValueError("weights must be finite")
        if np.any(w < 0):
            raise ValueError("weights must be nonnegative")
        total = float(w.sum())
        if total <= 0.0:
            raise EmptyTable("total weight must be positive")
        probs = w / total
        probs.setflags(write=False)
        world = cls(universe, probs)
        assert abs(float(probs.sum()) - 1.0) <= NORMALIZATION_TOL
        return world

    @property
    def size(self) -> int:
        return len(self.universe)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {p: i for i, p in enumerate(self.universe)}

    @cached_property
    def _masks(self) -> np.ndarray:
        # enumeration of all assignments; uint32 is enough for s <= 24
        return np.arange(1 << self.size, dtype=np.uint32)

    def bit(self, pid: str) -> int:
        """Universe position of a property id."""
        try:
            return self._index[pid]
        except KeyError:
            raise UnknownProperty(f"property {pid!r} is not in the universe") from None

    def event_mask(self, ids: Iterable[str]) -> int:
        """Bitmask with the bit of every given property set."""
        mask = 0
        for pid in ids:
            mask |= 1 << self.bit(pid)
        return mask

    def marginal(self, pid: str) -> float:
        """P(property holds)."""
        bit = self.bit(pid)
        # min() guards against float accumulation drifting a hair past 1
        return min(1.0, float(self.probs[(self._masks >> bit) & 1 == 1].sum()))

    def union_probability(self, mask: int) -> float:
        """P(at least one property in mask holds)."""
        if mask == 0:
            return 0.0
        return min(1.0, float(self.probs[(self._masks & mask) != 0].sum()))

    def marginal_table(self, ids: Sequence[str]) -> np.ndarray:
        """Joint marginal over the given variables, in the order given.

        Returns a table of 2**len(ids) probabilities; bit j of the index
        corresponds to ids[j]. Buckets are filled in one deterministic
        pass over the full table.
        """
        positions = [self.bit(p) for p in ids]
        if len(set(positions)) != len(positions):
            raise ValueError(f"duplicate ids in marginal request: {tuple(ids)}")
        key = np.zeros(len(self.probs), dtype=np.int64)
        for j, pos in enumerate(positions):
            key |= ((self._masks >> pos) & 1).astype(np.int64) << j
        return np.bincount(key, weights=self.probs, minlength=1 << len(positions))


@dataclass(frozen=True)
class InstanceTable:
    """Weighted rows of property assignments, one bitmask per row."""

    universe: tuple[str, ...]
    rows: tuple[tuple[int, float], ...]

    def __post_init__(self):
        universe = tuple(check_property_id(p) for p in self.universe)
        if len(set(universe)) != len(universe):
            raise InvalidProperty(f"universe has duplicate ids: {universe}")
        object.__setattr__(self, "universe", universe)
        top = 1 << len(universe)
        for mask, weight in self.rows:
            if not 0 <= mask < top:
                raise ValueError(f"row mask {mask} out of range for {len(universe)} properties")
            if not np.isfinite(weight) or weight < 0:
                raise ValueError(f"row weight must be finite and nonnegative, got {weight!r}")
        if not any(weight > 0 for _, weight in self.rows):
            raise EmptyTable("instance table needs at least one row with positive weight")


def build_independent_world(universe: Sequence[str], marginals: Sequence[float]) -> WorldModel:
    """Product distribution with the given per-property marginals."""
    universe = tuple(universe)
    if len(universe) != len(marginals):
        raise ValueError(f"{len(universe)} ids but {len(marginals)} marginals")
    if len(universe) > MAX_UNIVERSE:
        raise UniverseTooLarge(f"universe has {len(universe)} properties, cap is {MAX_UNIVERSE}")
    probs = np.array([1.0])
    for mu in marginals:
        mu = check_degree(mu, "marginal")
        probs = np.concatenate([probs * (1.0 - mu), probs * mu])
    return WorldModel.from_weights(universe, probs)


def build_exclusive_world(n: int, m: int, k: int) -> tuple[WorldModel, Concept, Concept]:
    """One-hot world for two concepts with k shared properties.

    The universe has s = n + m - k properties named p1..ps; exactly one
    holds at a time, each with probability 1/s. The first concept owns
    p1..pn, the second owns the last m, so they share k in the middle.
    """
    if n < 1 or m < 1 or k < 0:
        raise ValueError(f"need n >= 1, m >= 1, k >= 0, got {(n, m, k)}")
    if k > min(n, m):
        raise InvalidOverlap(f"overlap k={k} exceeds min(n, m)={min(n, m)}")
    s = n + m - k
    if s > MAX_UNIVERSE:
        raise UniverseTooLarge(f"universe has {s} properties, cap is {MAX_UNIVERSE}")
    universe = tuple(f"p{i + 1}" for i in range(s))
    weights = np.zeros(1 << s)
    for i in range(s):
        weights[1 << i] = 1.0
    world = WorldModel.from_weights(universe, weights)
    degree = 1.0 / s
    f = Concept("F", tuple((universe[i], degree) for i in range(n)))
    w = Concept("W", tuple((universe[i], degree) for i in range(s - m, s)))
    return world, f, w


def world_from_instances(table: InstanceTable) -> WorldModel:
    """World whose mass at each assignment is the table's normalized weight."""
    weights = np.zeros(1 << len(table.universe))
    for mask, weight in table.rows:
        weights[mask] += weight
    return WorldModel.from_weights(table.universe, weights)


def concept_event_probability(concept: Concept, world: WorldModel) -> float:
    """P(concept event) = P(at least one of its properties holds)."""
    return world.union_probability(world.event_mask(concept.ids))


def joint_event_probability(f: Concept, w: Concept, world: WorldModel) -> float:
    """P(both concept events hold)."""
    f_mask = world.event_mask(f.ids)
    w_mask = world.event_mask(w.ids)
    masks = world._masks
    hit = ((masks & f_mask) != 0) & ((masks & w_mask) != 0)
    return min(1.0, float(world.probs[hit].sum()))


def degree_mismatches(concept: Concept, world: WorldModel, tol: float = DEGREE_MISMATCH_TOL) -> list[str]:
    """Human-readable descriptions of degree vs world-marginal disagreements."""
    out = []
    for pid, declared in concept.properties:
        actual = world.marginal(pid)
        if abs(actual - declared) > tol:
            out.append(
                f"degree-mismatch {pid}: concept {concept.name!r} declares "
                f"{declared:.6g}, world marginal is {actual:.6g}"
            )
    return out
