"""Possibility distributions over outcomes or states, and operations on them.

A distribution ("lottery") assigns each label of its domain a level of an
uncertainty scale, normalized so the maximum assigned level is the top.
The module also hosts the possibilistic mixture, decision-induced
distributions, exhaustive enumeration at desk scale, and the exact
conversion to and from integer disbelief rankings.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Sequence, Union

from .scales import Level, Scale, ScaleMismatchError

INFINITY = float("inf")

DEFAULT_ENUMERATION_LIMIT = 500_000


class NormalizationError(ValueError):
    """A distribution or weight vector fails max-is-top normalization."""


class BoundExceededError(RuntimeError):
    """A desk-scale enumeration would blow past its configured limit."""


@dataclass(frozen=True)
class OutcomeSet:
    """Prizes with distinguished best and worst elements and a preference preorder.

    preference_classes lists equivalence classes best-first; together they
    must partition the outcome labels, with the best prize in the first
    class and the worst in the last.
    """

    outcomes: tuple[str, ...]
    best: str
    worst: str
    preference_classes: tuple[tuple[str, ...], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "outcomes", tuple(self.outcomes))
        if len(self.outcomes) < 2:
            raise ValueError("an outcome set needs at least 2 outcomes")
        if len(set(self.outcomes)) != len(self.outcomes):
            raise ValueError("outcome labels must be distinct")
        if self.best == self.worst:
            raise ValueError("best and worst outcomes must differ")
        for anchor in (self.best, self.worst):
            if anchor not in self.outcomes:
                raise ValueError(f"anchor outcome {anchor!r} is not declared")
        if not self.preference_classes:
            object.__setattr__(
                self, "preference_classes", tuple((o,) for o in self.outcomes)
            )
        else:
            object.__setattr__(
                self,
                "preference_classes",
                tuple(tuple(c) for c in self.preference_classes),
            )
        flat = [o for cls in self.preference_classes for o in cls]
        if sorted(flat) != sorted(self.outcomes):
            raise ValueError("preference classes must partition the outcomes")
        if self.best not in self.preference_classes[0]:
            raise ValueError(f"best outcome {self.best!r} must sit in the first class")
        if self.worst not in self.preference_classes[-1]:
            raise ValueError(f"worst outcome {self.worst!r} must sit in the last class")

    @property
    def labels(self) -> tuple[str, ...]:
        return self.outcomes

    def rank(self, label: str) -> int:
        """Class index of a label; smaller is better."""
        for i, cls in enumerate(self.preference_classes):
            if label in cls:
                return i
        raise KeyError(f"unknown outcome {label!r}")

    def prefers(self, x: str, y: str) -> bool:
        """True if x is weakly preferred to y."""
        return self.rank(x) <= self.rank(y)


@dataclass(frozen=True)
class StateSpace:
    """The possible situations a decision can face."""

    states: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "states", tuple(self.states))
        if not self.states:
            raise ValueError("a state space must be non-empty")
        if len(set(self.states)) != len(self.states):
            raise ValueError("state labels must be distinct")

    @property
    def labels(self) -> tuple[str, ...]:
        return self.states


Domain = Union[OutcomeSet, StateSpace]


class PossibilityDistribution:
    """A normalized mapping from domain labels to levels of one scale.

    Values are stored as level indices aligned with the domain's label
    order, which keeps distributions hashable and comparisons exact.
    Instances are immutable by convention; nothing mutates them after
    construction.
    """

    __slots__ = ("domain", "scale", "indices")

    def __init__(self, domain: Domain, scale: Scale, indices: tuple[int, ...]):
        indices = tuple(indices)
        labels = domain.labels
        if len(indices) != len(labels):
            raise ValueError(
                f"distribution has {len(indices)} values for {len(labels)} labels"
            )
        top = scale.top_index
        highest = max(indices)
        if min(indices) < 0 or highest > top:
            raise ValueError(f"level index out of range for scale {scale.name!r}")
        if highest != top:
            raise NormalizationError(
                f"distribution is not normalized: max level is "
                f"{scale.levels[highest]!r}, not {scale.levels[top]!r}"
            )
        self.domain = domain
        self.scale = scale
        self.indices = indices

    @classmethod
    def _unchecked(cls, domain: Domain, scale: Scale, indices: tuple[int, ...]):
        """Skip validation for results whose normalization is forced.

        Only the mixture operation uses this: a normalized weight vector
        over normalized inputs cannot produce a denormalized output, and
        the exhaustive postcondition tests cover that claim.
        """
        self = object.__new__(cls)
        self.domain = domain
        self.scale = scale
        self.indices = indices
        return self

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PossibilityDistribution):
            return NotImplemented
        return (
            self.indices == other.indices
            and (self.scale is other.scale or self.scale == other.scale)
            and (self.domain is other.domain or self.domain == other.domain)
        )

    def __hash__(self) -> int:
        return hash((self.domain, self.scale, self.indices))

    def value(self, label: str) -> Level:
        try:
            pos = self.domain.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown label {label!r}") from None
        return self.scale.level(self.indices[pos])

    def items(self) -> Iterator[tuple[str, Level]]:
        for label, idx in zip(self.domain.labels, self.indices):
            yield label, self.scale.level(idx)

    def __repr__(self) -> str:
        return f"PossibilityDistribution({self.domain!r}, {self.scale!r}, {self.indices!r})"

    def __str__(self) -> str:
        inner = ", ".join(
            f"{label}:{self.scale.levels[i]}"
            for label, i in zip(self.domain.labels, self.indices)
        )
        return f"({inner})"


def make_distribution(domain: Domain, values: Mapping[str, Level]) -> PossibilityDistribution:
    """Build a distribution from a label-to-level mapping.

    Every domain label must be assigned, all levels must share one scale,
    and the maximum must be the top of that scale.
    """
    labels = domain.labels
    missing = [label for label in labels if label not in values]
    if missing:
        raise ValueError(f"missing value for label {missing[0]!r}")
    unknown = set(values) - set(labels)
    if unknown:
        raise ValueError(f"unknown label {sorted(unknown)[0]!r}")
    scale = next(iter(values.values())).scale
    indices = []
    for label in labels:
        level = values[label]
        if level.scale != scale:
            raise ScaleMismatchError(scale, level.scale)
        indices.append(level.index)
    return PossibilityDistribution(domain, scale, tuple(indices))


def point_mass(domain: Domain, label: str, scale: Scale) -> PossibilityDistribution:
    """The distribution fully possible at one label and impossible elsewhere."""
    labels = domain.labels
    if label not in labels:
        raise ValueError(f"unknown label {label!r}")
    top = len(scale) - 1
    return PossibilityDistribution(
        domain, scale, tuple(top if l == label else 0 for l in labels)
    )


def mixture(
    components: Sequence[tuple[Level, PossibilityDistribution]],
) -> PossibilityDistribution:
    """Max-min combination of lotteries under a normalized weight vector.

    result(x) = max over components of min(weight, dist(x)).  Weights must
    share the distributions' scale and their maximum must be the top; this
    is a precondition, never an automatic rescale.
    """
    if not components:
        raise ValueError("mixture needs at least one component")
    first = components[0][1]
    domain, scale = first.domain, first.scale
    top = scale.top_index

    if len(components) == 2:
        (wa, da), (wb, db) = components
        if (
            (db.domain is not domain and db.domain != domain)
            or (db.scale is not scale and db.scale != scale)
        ):
            raise ValueError("mixture components must share one domain and scale")
        if wa.scale is not scale and wa.scale != scale:
            raise ScaleMismatchError(wa.scale, scale)
        if wb.scale is not scale and wb.scale != scale:
            raise ScaleMismatchError(wb.scale, scale)
        w0, w1 = wa.index, wb.index
        if (w0 if w0 >= w1 else w1) != top:
            raise NormalizationError(
                f"mixture weights are not normalized: max weight is "
                f"{scale.levels[w0 if w0 >= w1 else w1]!r}"
            )
        mixed = []
        for a, b in zip(da.indices, db.indices):
            x = a if a < w0 else w0
            y = b if b < w1 else w1
            mixed.append(x if x >= y else y)
        return PossibilityDistribution._unchecked(domain, scale, tuple(mixed))

    weights = []
    rows = []
    for weight, dist in components:
        if (
            (dist.domain is not domain and dist.domain != domain)
            or (dist.scale is not scale and dist.scale != scale)
        ):
            raise ValueError("mixture components must share one domain and scale")
        if weight.scale is not scale and weight.scale != scale:
            raise ScaleMismatchError(weight.scale, scale)
        weights.append(weight.index)
        rows.append(dist.indices)
    if max(weights) != top:
        raise NormalizationError(
            f"mixture weights are not normalized: max weight is "
            f"{scale.levels[max(weights)]!r}"
        )
    mixed = []
    for column in zip(*rows):
        highest = 0
        for w, v in zip(weights, column):
            t = v if v < w else w
            if t > highest:
                highest = t
        mixed.append(highest)
    return PossibilityDistribution._unchecked(domain, scale, tuple(mixed))


def event_possibility(pi: PossibilityDistribution, event: Sequence[str]) -> Level:
    """Possibility of a set of labels: the max over members, bottom if empty."""
    labels = pi.domain.labels
    best = 0
    for label in event:
        if label not in labels:
            raise ValueError(f"unknown label {label!r}")
        best = max(best, pi.indices[labels.index(label)])
    return pi.scale.level(best)


@dataclass(frozen=True)
class Decision:
    """A total assignment of an outcome to every state."""

    states: StateSpace
    moves: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.moves) != len(self.states.states):
            raise ValueError("decision must map every state")

    @classmethod
    def from_mapping(cls, states: StateSpace, table: Mapping[str, str]) -> "Decision":
        missing = [s for s in states.states if s not in table]
        if missing:
            raise ValueError(f"decision maps no outcome for state {missing[0]!r}")
        unknown = set(table) - set(states.states)
        if unknown:
            raise ValueError(f"decision mentions unknown state {sorted(unknown)[0]!r}")
        return cls(states, tuple(table[s] for s in states.states))

    def outcome_for(self, state: str) -> str:
        return self.moves[self.states.states.index(state)]


def induced_distribution(
    pi_states: PossibilityDistribution, d: Decision, outcomes: OutcomeSet
) -> PossibilityDistribution:
    """The lottery a decision induces from uncertainty over states.

    Each outcome receives the possibility of its preimage; outcomes no
    state maps to get 0.
    """
    if pi_states.domain != d.states:
        raise ValueError("distribution and decision disagree on the state space")
    for move in d.moves:
        if move not in outcomes.outcomes:
            raise ValueError(f"decision maps to unknown outcome {move!r}")
    best: dict[str, int] = {label: 0 for label in outcomes.outcomes}
    for state_idx, move in enumerate(d.moves):
        best[move] = max(best[move], pi_states.indices[state_idx])
    return PossibilityDistribution(
        outcomes, pi_states.scale, tuple(best[label] for label in outcomes.outcomes)
    )


def enumeration_count(domain_size: int, scale_size: int) -> int:
    """How many normalized distributions exist: |V|^|X| - (|V|-1)^|X|."""
    return scale_size**domain_size - (scale_size - 1) ** domain_size


def enumerate_distributions(
    domain: Domain, scale: Scale, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> tuple[PossibilityDistribution, ...]:
    """Every normalized distribution over (domain, scale), in a fixed order.

    Raises if the count would exceed ``limit``.
    """
    n = len(domain.labels)
    m = len(scale)
    count = enumeration_count(n, m)
    if count > limit:
        raise BoundExceededError(
            f"enumeration would generate {count} distributions, over the limit of {limit}"
        )
    top = m - 1
    out = []
    for combo in itertools.product(range(m), repeat=n):
        if max(combo) == top:
            out.append(PossibilityDistribution(domain, scale, combo))
    return tuple(out)


@dataclass(frozen=True)
class StandardLottery:
    """A lottery supported only on the best and worst prizes.

    Weights live on the uncertainty scale and the larger one must be the
    top.  The set of these is in one-to-one correspondence with the
    binary utility scale.
    """

    best_weight: Level
    worst_weight: Level

    def __post_init__(self) -> None:
        if self.best_weight.scale != self.worst_weight.scale:
            raise ScaleMismatchError(self.best_weight.scale, self.worst_weight.scale)
        if not (self.best_weight.is_top() or self.worst_weight.is_top()):
            raise ValueError(
                f"not a standard lottery: neither weight of "
                f"({self.best_weight}, {self.worst_weight}) is the top"
            )

    @property
    def scale(self) -> Scale:
        return self.best_weight.scale

    def best_fully_possible(self) -> bool:
        """Membership in the half where the best prize has full possibility."""
        return self.best_weight.is_top()

    def worst_fully_possible(self) -> bool:
        """Membership in the half where the worst prize has full possibility."""
        return self.worst_weight.is_top()

    def as_distribution(self, outcomes: OutcomeSet) -> PossibilityDistribution:
        values = {label: self.scale.bottom for label in outcomes.outcomes}
        values[outcomes.best] = self.best_weight
        values[outcomes.worst] = self.worst_weight
        return make_distribution(outcomes, values)

    def __str__(self) -> str:
        return f"({self.best_weight}/best, {self.worst_weight}/worst)"


def standard_lotteries(scale: Scale) -> tuple[StandardLottery, ...]:
    """All standard lotteries over ``scale``, worst-first.  There are 2|V|-1."""
    top = len(scale) - 1
    out = [StandardLottery(scale.level(i), scale.top) for i in range(top + 1)]
    out.extend(StandardLottery(scale.top, scale.level(j)) for j in range(top - 1, -1, -1))
    return tuple(out)


@dataclass(frozen=True)
class DisbeliefFunction:
    """Integer-valued implausibility ranking with minimum 0.

    Values are non-negative integers or INFINITY for impossible labels.
    """

    labels: tuple[str, ...]
    values: tuple[Union[int, float], ...]

    def __post_init__(self) -> None:
        if len(self.labels) != len(self.values):
            raise ValueError("disbelief function labels and values differ in length")
        for v in self.values:
            if v is INFINITY or v == INFINITY:
                continue
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"disbelief values must be non-negative integers, got {v!r}")
        if min(self.values) != 0:
            raise NormalizationError(
                f"disbelief function is not normalized: min value is {min(self.values)}"
            )

    @classmethod
    def from_mapping(cls, table: Mapping[str, Union[int, float]]) -> "DisbeliefFunction":
        labels = tuple(table)
        return cls(labels, tuple(table[label] for label in labels))

    def value(self, label: str) -> Union[int, float]:
        return self.values[self.labels.index(label)]


def _as_base(c: Union[int, str, Fraction]) -> Fraction:
    base = Fraction(c)
    if base <= 1:
        raise ValueError(f"conversion base must be a rational > 1, got {c!r}")
    return base


def format_fraction_label(value: Fraction) -> str:
    """Render an exact rational in [0, 1] as a scale label.

    Terminating decimals come out in the ".25" house style; anything else
    falls back to a "p/q" label, which the scale parser also accepts.
    """
    if value == 0:
        return "0"
    if value == 1:
        return "1"
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{value.numerator}/{value.denominator}"
    digits = max(twos, fives)
    scaled = value.numerator * 10**digits // value.denominator
    text = str(scaled).rjust(digits, "0").rstrip("0")
    return f".{text}"


def from_disbelief(
    delta: DisbeliefFunction, c: Union[int, str, Fraction]
) -> PossibilityDistribution:
    """Convert a disbelief ranking to a possibility distribution via c**-value.

    The result lives on a freshly synthesized scale holding 0, 1 and every
    distinct image value; INFINITY maps to 0.
    """
    base = _as_base(c)
    images = []
    for v in delta.values:
        images.append(Fraction(0) if v == INFINITY else base ** -int(v))
    points = sorted(set(images) | {Fraction(0), Fraction(1)})
    scale = Scale(tuple(format_fraction_label(p) for p in points), name="synthesized")
    index_of = {p: i for i, p in enumerate(points)}
    return PossibilityDistribution(
        StateSpace(delta.labels), scale, tuple(index_of[img] for img in images)
    )


def to_disbelief(
    pi: PossibilityDistribution, c: Union[int, str, Fraction]
) -> DisbeliefFunction:
    """Convert a possibility distribution to its integer disbelief ranking.

    Each value v becomes the integer part of -log_c(v), computed exactly on
    rationals; v = 0 becomes INFINITY.
    """
    base = _as_base(c)
    values: list[Union[int, float]] = []
    for idx in pi.indices:
        v = pi.scale.numeric(idx)
        if v == 0:
            values.append(INFINITY)
            continue
        inverse = 1 / v
        k = 0
        power = Fraction(1)
        while power * base <= inverse:
            power *= base
            k += 1
        values.append(k)
    return DisbeliefFunction(tuple(pi.domain.labels), tuple(values))
