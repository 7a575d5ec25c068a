"""Entropies, mutual information, and the Shannon inheritance estimate.

All quantities are base-2 (bits) with the 0*log 0 = 0 convention, computed
exactly from a WorldModel's probability table. The multivariate interaction
measure uses the McGill inclusion-exclusion convention over subset
entropies, anchored so that two variables give ordinary nonnegative mutual
information and the 3-variable parity (XOR) world gives -1 bit.

The inheritance estimate P(W)*2**I(F;W) comes from a uniformity
simplification and is not a probability in general; it is reported
unclamped, next to the exact conditional, so the failure mode is visible.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import ConditioningOnNull, SubsetTooLarge
from .model import (
    Concept,
    DegreeMismatchWarning,
    WorldModel,
    check_degree,
    concept_event_probability,
    degree_mismatches,
    joint_event_probability,
)

MAX_LATTICE_VARS = 12
INTERACTION_CONVENTION = "McGill-inclusion-exclusion"


def binary_entropy(d: float) -> float:
    """Entropy in bits of a binary variable with success probability d."""
    d = check_degree(d)
    if d == 0.0 or d == 1.0:
        return 0.0
    return -(d * math.log2(d) + (1.0 - d) * math.log2(1.0 - d))


def _table_entropy(probs: np.ndarray) -> float:
    nz = probs[probs > 0]
    return float(-(nz * np.log2(nz)).sum())


def subset_entropy(vars: Sequence[str], world: WorldModel) -> float:
    """Joint entropy of the marginal distribution over the given variables."""
    ids = list(dict.fromkeys(vars))
    if not ids:
        raise ValueError("subset_entropy needs at least one variable")
    return _table_entropy(world.marginal_table(ids))


def _indicator_joint(f: Concept, w: Concept, world: WorldModel) -> np.ndarray:
    """Four-cell joint of the two concept-event indicators: index = 2*f + w."""
    f_mask = world.event_mask(f.ids)
    w_mask = world.event_mask(w.ids)
    masks = world._masks
    in_f = (masks & f_mask) != 0
    in_w = (masks & w_mask) != 0
    p = world.probs
    return np.array(
        [
            float(p[~in_f & ~in_w].sum()),
            float(p[~in_f & in_w].sum()),
            float(p[in_f & ~in_w].sum()),
            float(p[in_f & in_w].sum()),
        ]
    )


def concept_pair_entropies(f: Concept, w: Concept, world: WorldModel) -> tuple[float, float, float]:
    """(H(F), H(W), H(F,W)) of the two concept-event indicator variables."""
    joint = _indicator_joint(f, w, world)
    # cell sums can drift a hair past 1 in float; clamp before validating
    h_f = binary_entropy(min(1.0, float(joint[2] + joint[3])))
    h_w = binary_entropy(min(1.0, float(joint[1] + joint[3])))
    return h_f, h_w, _table_entropy(joint)


def mutual_information(f: Concept, w: Concept, world: WorldModel) -> float:
    """I(F;W) = H(F) + H(W) - H(F,W) of the concept indicators, in bits."""
    h_f, h_w, h_fw = concept_pair_entropies(f, w, world)
    return h_f + h_w - h_fw


@dataclass(frozen=True)
class InteractionReport:
    """Multivariate interaction value for a set of property variables."""

    subset: tuple[str, ...]
    value: float
    convention: str = INTERACTION_CONVENTION


def interaction_information(vars: Iterable[str], world: WorldModel) -> InteractionReport:
    """McGill interaction information over the given property variables.

    value = sum over nonempty T subseteq vars of (-1)**(|T|+1) * H(T).
    Two variables reduce to their mutual information; the 3-variable
    parity world scores -1 bit.
    """
    ids = list(dict.fromkeys(vars))
    t = len(ids)
    if t < 2:
        raise ValueError(f"interaction needs at least two variables, got {t}")
    if t > MAX_LATTICE_VARS:
        raise SubsetTooLarge(f"{t} variables exceeds the lattice cap of {MAX_LATTICE_VARS}")
    # One marginalization onto the subset, then every H(T) from that table.
    table = world.marginal_table(ids)
    idx = np.arange(len(table), dtype=np.int64)
    value = 0.0
    for size in range(1, t + 1):
        sign = 1.0 if size % 2 == 1 else -1.0
        for positions in combinations(range(t), size):
            key = np.zeros(len(table), dtype=np.int64)
            for j, pos in enumerate(positions):
                key |= ((idx >> pos) & 1) << j
            bucket = np.bincount(key, weights=table, minlength=1 << size)
            value += sign * _table_entropy(bucket)
    return InteractionReport(subset=tuple(sorted(ids)), value=value)


def total_interaction_adjustment(f: Concept, w: Concept, world: WorldModel) -> float:
    """Dependency correction that closes the property-entropy decomposition.

    Returns (sum_i H(F_i) + sum_j H(W_j) - H(all properties jointly))
    minus the directly computed I(F;W). Zero when all properties are
    independent and the concepts are disjoint singletons; reported for
    diagnostics, never used as the computation path.
    """
    pooled = list(dict.fromkeys(f.ids + w.ids))
    if len(pooled) > MAX_LATTICE_VARS:
        raise SubsetTooLarge(f"{len(pooled)} pooled properties exceeds the cap of {MAX_LATTICE_VARS}")
    per_property = sum(binary_entropy(world.marginal(pid)) for pid in f.ids)
    per_property += sum(binary_entropy(world.marginal(pid)) for pid in w.ids)
    h_all = subset_entropy(pooled, world)
    return (per_property - h_all) - mutual_information(f, w, world)


@dataclass(frozen=True)
class ShannonInheritance:
    """Exact conditional next to the mutual-information estimate.

    estimate_conditional = prior * 2**mutual_information; it can exceed 1
    when the uniformity simplification behind it fails, and is deliberately
    not clamped.
    """

    mutual_information: float
    exact_conditional: float
    estimate_conditional: float
    prior: float
    discrepancy: float

    @property
    def estimate_exceeds_one(self) -> bool:
        return self.estimate_conditional > 1.0


def uniform_conditional_estimate(f: Concept, w: Concept, world: WorldModel) -> float:
    """P(W) * 2**I(F;W), the uniformity-based conditional estimate."""
    prior = concept_event_probability(w, world)
    return prior * 2.0 ** mutual_information(f, w, world)


def shannon_inheritance(f: Concept, w: Concept, world: WorldModel) -> ShannonInheritance:
    """Score how strongly membership in f predicts membership in w.

    Emits DegreeMismatchWarning for every declared degree that disagrees
    with the world marginal beyond 1e-6; the world always wins. Raises
    ConditioningOnNull when P(f) = 0.
    """
    for message in degree_mismatches(f, world) + degree_mismatches(w, world):
        warnings.warn(message, DegreeMismatchWarning, stacklevel=2)
    p_f = concept_event_probability(f, world)
    if p_f == 0.0:
        raise ConditioningOnNull(f"concept {f.name!r} has probability zero")
    p_w = concept_event_probability(w, world)
    p_fw = joint_event_probability(f, w, world)
    mi = mutual_information(f, w, world)
    exact = p_fw / p_f
    estimate = p_w * 2.0 ** mi
    return ShannonInheritance(
        mutual_information=mi,
        exact_conditional=exact,
        estimate_conditional=estimate,
        prior=p_w,
        discrepancy=estimate - exact,
    )
