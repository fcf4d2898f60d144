"""Qualitative utility criteria over lotteries, and decision ranking.

Three evaluators live here.  The pessimistic criterion takes the min over
prizes of max(reversed mapped possibility, prize utility); the optimistic
criterion is its max-min dual; the pair-valued criterion folds the
extended max of extended mins into the binary utility scale and needs no
auxiliary maps at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence, Union

from .lotteries import OutcomeSet, PossibilityDistribution, StandardLottery
from .scales import (
    BinaryUtility,
    Involution,
    Level,
    Scale,
    ScaleMap,
    ScaleMismatchError,
    UtilityPair,
    ext_max,
    ext_min,
    validate_involution,
    validate_scale_map,
)

UtilityValue = Union[Level, BinaryUtility]
Evaluator = Callable[[PossibilityDistribution], UtilityValue]


def _check_domain(dist: PossibilityDistribution, outcomes: OutcomeSet, scale: Scale) -> None:
    if dist.domain.labels != outcomes.labels:
        raise ValueError(
            f"distribution domain {dist.domain.labels} does not match the "
            f"configured outcomes {outcomes.labels}"
        )
    if dist.scale != scale:
        raise ScaleMismatchError(dist.scale, scale)


@dataclass(frozen=True)
class ScalarUtilityConfig:
    """Everything the scalar (pessimistic/optimistic) criteria need.

    Bundles a prize utility into the utility scale, an order-reversing
    involution on that scale, and an onto map from the uncertainty scale.
    All three are validated at construction, including consistency of the
    prize utility with the declared preference preorder.
    """

    outcomes: OutcomeSet
    scale_map: ScaleMap
    involution: Involution
    prize_indices: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.involution.scale != self.scale_map.target:
            raise ScaleMismatchError(self.involution.scale, self.scale_map.target)
        problem = validate_involution(self.involution)
        if problem:
            raise ValueError(f"invalid involution: {problem}")
        problem = validate_scale_map(self.scale_map)
        if problem:
            raise ValueError(f"invalid scale map: {problem}")
        labels = self.outcomes.labels
        if len(self.prize_indices) != len(labels):
            raise ValueError("prize utility must cover every outcome")
        u_top = len(self.scale_map.target) - 1
        by_label = dict(zip(labels, self.prize_indices))
        if by_label[self.outcomes.best] != u_top:
            raise ValueError(f"best outcome {self.outcomes.best!r} must have utility 1")
        if by_label[self.outcomes.worst] != 0:
            raise ValueError(f"worst outcome {self.outcomes.worst!r} must have utility 0")
        for x in labels:
            for y in labels:
                if self.outcomes.prefers(x, y) != (by_label[x] >= by_label[y]):
                    raise ValueError(
                        f"prize utility is inconsistent with the preference order "
                        f"on {x!r} and {y!r}"
                    )

    @classmethod
    def build(
        cls,
        outcomes: OutcomeSet,
        scale_map: ScaleMap,
        involution: Involution,
        prize_utility: Mapping[str, Level],
    ) -> "ScalarUtilityConfig":
        target = scale_map.target
        indices = []
        for label in outcomes.labels:
            if label not in prize_utility:
                raise ValueError(f"prize utility missing outcome {label!r}")
            level = prize_utility[label]
            if level.scale != target:
                raise ScaleMismatchError(level.scale, target)
            indices.append(level.index)
        return cls(outcomes, scale_map, involution, tuple(indices))

    @property
    def uncertainty_scale(self) -> Scale:
        return self.scale_map.source

    @property
    def utility_scale(self) -> Scale:
        return self.scale_map.target

    @property
    def reversed_map(self) -> tuple[int, ...]:
        """Composition n∘h as target-scale indices per uncertainty level."""
        return tuple(self.involution.images[i] for i in self.scale_map.images)

    def prize_utility_for(self, label: str) -> Level:
        return self.utility_scale.level(
            self.prize_indices[self.outcomes.labels.index(label)]
        )


def pessimistic_utility(pi: PossibilityDistribution, cfg: ScalarUtilityConfig) -> Level:
    """Min over prizes of max(reversed mapped possibility, prize utility)."""
    _check_domain(pi, cfg.outcomes, cfg.uncertainty_scale)
    nh = cfg.reversed_map
    worst = len(cfg.utility_scale) - 1
    for v_idx, u_idx in zip(pi.indices, cfg.prize_indices):
        term = max(nh[v_idx], u_idx)
        if term < worst:
            worst = term
    return cfg.utility_scale.level(worst)


def optimistic_utility(pi: PossibilityDistribution, cfg: ScalarUtilityConfig) -> Level:
    """Max over prizes of min(mapped possibility, prize utility)."""
    _check_domain(pi, cfg.outcomes, cfg.uncertainty_scale)
    h = cfg.scale_map.images
    best = 0
    for v_idx, u_idx in zip(pi.indices, cfg.prize_indices):
        term = min(h[v_idx], u_idx)
        if term > best:
            best = term
    return cfg.utility_scale.level(best)


def pessimistic_utility_decomposed(
    weight1: Level,
    pi1: PossibilityDistribution,
    weight2: Level,
    pi2: PossibilityDistribution,
    cfg: ScalarUtilityConfig,
) -> Level:
    """Pessimistic utility of a two-way mixture, without building the mixture.

    min(max(nh(w1), value of pi1), max(nh(w2), value of pi2)).  Exists as a
    separately callable path purely so the mixture identity can be
    cross-checked; the mixture route stays normative.
    """
    scale = cfg.uncertainty_scale
    if weight1.scale != scale or weight2.scale != scale:
        raise ScaleMismatchError(weight1.scale, scale)
    if max(weight1.index, weight2.index) != len(scale) - 1:
        raise ValueError("mixture weights must include the top level")
    nh = cfg.reversed_map
    left = max(nh[weight1.index], pessimistic_utility(pi1, cfg).index)
    right = max(nh[weight2.index], pessimistic_utility(pi2, cfg).index)
    return cfg.utility_scale.level(min(left, right))


@dataclass(frozen=True)
class BinaryUtilityAssessment:
    """A binary utility for each prize, consistent with the preference order.

    By default the best prize must sit at <1,0> and the worst at <0,1>.
    Families that encode every prize as an equivalent best/worst lottery
    (all weights on one half of the binary scale) relax the anchors via
    ``require_anchors=False``; order consistency is always enforced.
    """

    outcomes: OutcomeSet
    scale: Scale
    pair_indices: tuple[tuple[int, int], ...]
    require_anchors: bool = True

    def __post_init__(self) -> None:
        labels = self.outcomes.labels
        if len(self.pair_indices) != len(labels):
            raise ValueError("assessment must cover every outcome")
        utilities = [
            BinaryUtility.of(self.scale.level(a), self.scale.level(b))
            for a, b in self.pair_indices
        ]
        by_label = dict(zip(labels, utilities))
        top = len(self.scale) - 1
        if self.require_anchors:
            best = by_label[self.outcomes.best]
            if (best.first.index, best.second.index) != (top, 0):
                raise ValueError(
                    f"best outcome {self.outcomes.best!r} must be assessed at "
                    f"{self.scale.levels[top]!r},'0'"
                )
            worst = by_label[self.outcomes.worst]
            if (worst.first.index, worst.second.index) != (0, top):
                raise ValueError(
                    f"worst outcome {self.outcomes.worst!r} must be assessed at "
                    f"'0',{self.scale.levels[top]!r}"
                )
        for x in labels:
            for y in labels:
                if self.outcomes.prefers(x, y) != (by_label[x] >= by_label[y]):
                    raise ValueError(
                        f"assessment is inconsistent with the preference order "
                        f"on {x!r} and {y!r}"
                    )

    @classmethod
    def from_mapping(
        cls,
        outcomes: OutcomeSet,
        scale: Scale,
        table: Mapping[str, BinaryUtility],
        require_anchors: bool = True,
    ) -> "BinaryUtilityAssessment":
        pairs = []
        for label in outcomes.labels:
            if label not in table:
                raise ValueError(f"assessment missing outcome {label!r}")
            value = table[label]
            if value.scale != scale:
                raise ScaleMismatchError(value.scale, scale)
            pairs.append((value.first.index, value.second.index))
        return cls(outcomes, scale, tuple(pairs), require_anchors)

    def utility_for(self, label: str) -> BinaryUtility:
        a, b = self.pair_indices[self.outcomes.labels.index(label)]
        return BinaryUtility.of(self.scale.level(a), self.scale.level(b))

    def all_in_best_half(self) -> bool:
        """True when every prize sits where the best prize is fully possible."""
        top = len(self.scale) - 1
        return all(a == top for a, _ in self.pair_indices)

    def all_in_worst_half(self) -> bool:
        """True when every prize sits where the worst prize is fully possible."""
        top = len(self.scale) - 1
        return all(b == top for _, b in self.pair_indices)


def binary_utility(
    pi: PossibilityDistribution, a: BinaryUtilityAssessment
) -> BinaryUtility:
    """Extended max over prizes of extended min(possibility, prize pair)."""
    _check_domain(pi, a.outcomes, a.scale)
    scale = a.scale
    acc: UtilityPair | None = None
    for v_idx, label in zip(pi.indices, a.outcomes.labels):
        term = ext_min(scale.level(v_idx), a.utility_for(label).pair)
        acc = term if acc is None else ext_max(acc, term)
    assert acc is not None
    # Normalization of pi guarantees the fold lands back on the binary scale.
    return BinaryUtility(acc)


def reduce_to_standard(
    pi: PossibilityDistribution, a: BinaryUtilityAssessment
) -> StandardLottery:
    """The unique standard lottery indifferent to the given lottery.

    Folds each prize's weight against its assessed pair: the best-prize
    weight is max min(possibility, first component), the worst-prize
    weight is max min(possibility, second component).
    """
    _check_domain(pi, a.outcomes, a.scale)
    best = 0
    worst = 0
    for v_idx, (first, second) in zip(pi.indices, a.pair_indices):
        best = max(best, min(v_idx, first))
        worst = max(worst, min(v_idx, second))
    return StandardLottery(a.scale.level(best), a.scale.level(worst))


@dataclass(frozen=True)
class Ranking:
    """Decision ids grouped into ties, best class first."""

    classes: tuple[tuple[str, ...], ...]
    utilities: tuple[UtilityValue, ...]

    def position_of(self, item_id: str) -> int:
        for i, cls in enumerate(self.classes):
            if item_id in cls:
                return i
        raise KeyError(f"unknown item {item_id!r}")


def rank_decisions(
    items: Sequence[tuple[str, PossibilityDistribution]], evaluate: Evaluator
) -> Ranking:
    """Group items by exact utility equality and sort classes best-first.

    Within a class the input order is preserved, so output is fully
    deterministic.
    """
    if not items:
        raise ValueError("nothing to rank")
    domain = items[0][1].domain
    scale = items[0][1].scale
    for _, dist in items:
        if dist.domain.labels != domain.labels or dist.scale != scale:
            raise ValueError("ranked lotteries must share one domain and scale")
    groups: dict[UtilityValue, list[str]] = {}
    for item_id, dist in items:
        groups.setdefault(evaluate(dist), []).append(item_id)
    ordered = sorted(groups, reverse=True)
    return Ranking(
        tuple(tuple(groups[value]) for value in ordered),
        tuple(ordered),
    )
