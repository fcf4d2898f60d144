"""Finite ordinal scales and the max-min algebra on levels and level pairs.

Everything here is purely ordinal: labels are display metadata parsed once
for validation, and every operation works on positions inside a declared
scale.  Mixing levels from different scales is a hard error, never a
coercion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping


class ScaleMismatchError(ValueError):
    """An operation mixed values from two different scales."""

    def __init__(self, first: "Scale", second: "Scale"):
        super().__init__(
            f"scale mismatch: {first.name!r} {first.levels} vs "
            f"{second.name!r} {second.levels}"
        )
        self.first = first
        self.second = second


def parse_label(label: str) -> Fraction:
    """Parse a level label into an exact rational (no floats anywhere)."""
    try:
        return Fraction(label)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"level label {label!r} is not a rational number") from exc


@dataclass(frozen=True)
class Scale:
    """A finite totally ordered set of levels with bottom 0 and top 1.

    Labels must be distinct rational strings (decimals such as ".5"
    preferred), strictly increasing, starting at 0 and ending at 1.
    Immutable after construction; all validation happens here so every
    downstream operation is total on valid inputs.
    """

    levels: tuple[str, ...]
    name: str = "scale"
    # Cached for hot paths; derived, so excluded from equality and repr.
    top_index: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "levels", tuple(self.levels))
        if len(self.levels) < 2:
            raise ValueError(f"scale {self.name!r} needs at least 2 levels")
        object.__setattr__(self, "top_index", len(self.levels) - 1)
        values = [parse_label(label) for label in self.levels]
        if values[0] != 0:
            raise ValueError(f"scale {self.name!r} must start at 0, got {self.levels[0]!r}")
        if values[-1] != 1:
            raise ValueError(f"scale {self.name!r} must end at 1, got {self.levels[-1]!r}")
        for i, (a, b) in enumerate(zip(values, values[1:])):
            if a >= b:
                raise ValueError(
                    f"scale {self.name!r} labels must strictly increase: "
                    f"{self.levels[i]!r} >= {self.levels[i + 1]!r}"
                )

    def __len__(self) -> int:
        return len(self.levels)

    def __getitem__(self, label: str) -> "Level":
        """Look a level up by its label."""
        try:
            return Level(self, self.levels.index(label))
        except ValueError:
            raise KeyError(f"scale {self.name!r} has no level {label!r}") from None

    def level(self, index: int) -> "Level":
        return Level(self, index)

    @property
    def bottom(self) -> "Level":
        return Level(self, 0)

    @property
    def top(self) -> "Level":
        return Level(self, len(self.levels) - 1)

    def numeric(self, index: int) -> Fraction:
        """Exact rational value of the level at ``index``."""
        return parse_label(self.levels[index])

    def all_levels(self) -> tuple["Level", ...]:
        return tuple(Level(self, i) for i in range(len(self.levels)))


@dataclass(frozen=True)
class Level:
    """A position on a scale.  Comparable only within its own scale."""

    scale: Scale
    index: int

    def __post_init__(self) -> None:
        if not 0 <= self.index < len(self.scale):
            raise ValueError(
                f"level index {self.index} out of range for scale "
                f"{self.scale.name!r} of size {len(self.scale)}"
            )

    @property
    def label(self) -> str:
        return self.scale.levels[self.index]

    def is_bottom(self) -> bool:
        return self.index == 0

    def is_top(self) -> bool:
        return self.index == len(self.scale) - 1

    def _check(self, other: "Level") -> None:
        if self.scale != other.scale:
            raise ScaleMismatchError(self.scale, other.scale)

    def __lt__(self, other: "Level") -> bool:
        self._check(other)
        return self.index < other.index

    def __le__(self, other: "Level") -> bool:
        self._check(other)
        return self.index <= other.index

    def __gt__(self, other: "Level") -> bool:
        self._check(other)
        return self.index > other.index

    def __ge__(self, other: "Level") -> bool:
        self._check(other)
        return self.index >= other.index

    def __str__(self) -> str:
        return self.label


def level_min(a: Level, b: Level) -> Level:
    """Smaller of two levels on the same scale."""
    return a if a <= b else b


def level_max(a: Level, b: Level) -> Level:
    """Larger of two levels on the same scale."""
    return a if a >= b else b


@dataclass(frozen=True)
class UtilityPair:
    """An ordered pair of levels from one scale.

    Intermediate results of the pair algebra live here; they need not
    satisfy the top-normalization required of BinaryUtility.
    """

    first: Level
    second: Level

    def __post_init__(self) -> None:
        if self.first.scale != self.second.scale:
            raise ScaleMismatchError(self.first.scale, self.second.scale)

    @property
    def scale(self) -> Scale:
        return self.first.scale

    def __str__(self) -> str:
        return f"⟨{self.first.label},{self.second.label}⟩"


@dataclass(frozen=True)
class BinaryUtility:
    """A utility pair whose larger component is the top of its scale.

    These are the values of the pair-valued utility scale: one component
    always fully possible, totally ordered with <1,0> on top and <0,1>
    at the bottom.
    """

    pair: UtilityPair

    def __post_init__(self) -> None:
        if not (self.pair.first.is_top() or self.pair.second.is_top()):
            raise ValueError(
                f"not a binary utility: max component of {self.pair} is not "
                f"the top of scale {self.pair.scale.name!r}"
            )

    @classmethod
    def of(cls, first: Level, second: Level) -> "BinaryUtility":
        return cls(UtilityPair(first, second))

    @property
    def first(self) -> Level:
        return self.pair.first

    @property
    def second(self) -> Level:
        return self.pair.second

    @property
    def scale(self) -> Scale:
        return self.pair.scale

    def __lt__(self, other: "BinaryUtility") -> bool:
        return compare_binary(self, other) < 0

    def __le__(self, other: "BinaryUtility") -> bool:
        return compare_binary(self, other) <= 0

    def __gt__(self, other: "BinaryUtility") -> bool:
        return compare_binary(self, other) > 0

    def __ge__(self, other: "BinaryUtility") -> bool:
        return compare_binary(self, other) >= 0

    def __str__(self) -> str:
        return str(self.pair)


def pair_ge_indices(first: int, second: int, first2: int, second2: int, top: int) -> bool:
    """The three-case order on top-normalized pairs, on raw indices.

    (first, second) is at least as high as (first2, second2) iff
      - both seconds are top and first >= first2, or
      - first is top and first2 is not, or
      - both firsts are top and second <= second2.
    """
    return (
        (second == top and second2 == top and first >= first2)
        or (first == top and first2 < top)
        or (first == top and first2 == top and second <= second2)
    )


def compare_binary(u: BinaryUtility, u2: BinaryUtility) -> int:
    """Compare two binary utilities: -1 below, 0 equal, 1 above.

    Implements exactly the three-case disjunction of the pair order,
    which is total, antisymmetric and transitive on the binary scale.
    """
    if u.scale != u2.scale:
        raise ScaleMismatchError(u.scale, u2.scale)
    top = len(u.scale) - 1
    ge = pair_ge_indices(u.first.index, u.second.index, u2.first.index, u2.second.index, top)
    le = pair_ge_indices(u2.first.index, u2.second.index, u.first.index, u.second.index, top)
    if ge and le:
        return 0
    if ge:
        return 1
    if le:
        return -1
    raise AssertionError(f"pair order failed to compare {u} and {u2}")


def binary_rank(u: BinaryUtility) -> int:
    """Integer sort key agreeing with compare_binary.

    <x,1> ranks at index(x); <1,y> ranks at 2*(top) - index(y).  The
    three-case comparison stays the normative definition; tests prove the
    two agree exhaustively.
    """
    top = len(u.scale) - 1
    if u.second.is_top():
        return u.first.index
    return 2 * top - u.second.index


def binary_utilities(scale: Scale) -> tuple[BinaryUtility, ...]:
    """All binary utilities over ``scale``, ascending.  There are 2|V|-1."""
    top = len(scale) - 1
    out = [BinaryUtility.of(scale.level(i), scale.top) for i in range(top + 1)]
    out.extend(
        BinaryUtility.of(scale.top, scale.level(j)) for j in range(top - 1, -1, -1)
    )
    return tuple(out)


def ext_min(alpha: Level, p: UtilityPair) -> UtilityPair:
    """Min of a level with both components; the result may leave the binary scale."""
    if alpha.scale != p.scale:
        raise ScaleMismatchError(alpha.scale, p.scale)
    return UtilityPair(level_min(alpha, p.first), level_min(alpha, p.second))


def ext_max(p: UtilityPair, q: UtilityPair) -> UtilityPair:
    """Componentwise max of two pairs; associative, commutative, idempotent."""
    if p.scale != q.scale:
        raise ScaleMismatchError(p.scale, q.scale)
    return UtilityPair(level_max(p.first, q.first), level_max(p.second, q.second))


def _require_total(scale: Scale, table: Mapping[str, str], what: str) -> None:
    """A label table must cover every level of the scale, and nothing else."""
    for label in scale.levels:
        if label not in table:
            raise ValueError(f"{what} table is incomplete: no image for level {label!r}")
    extra = set(table) - set(scale.levels)
    if extra:
        raise ValueError(f"{what} table maps unknown levels: {sorted(extra)}")


@dataclass(frozen=True)
class Involution:
    """A self-map of a scale given by a full image table.

    Construction only requires totality; use validate_involution to check
    that the table really is an order-reversing involution with the
    0/1 anchors swapped.
    """

    scale: Scale
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.images) != len(self.scale):
            raise ValueError(
                f"involution table is incomplete: {len(self.images)} images "
                f"for {len(self.scale)} levels"
            )
        for i in self.images:
            if not 0 <= i < len(self.scale):
                raise ValueError(f"involution image index {i} out of range")

    @classmethod
    def from_labels(cls, scale: Scale, table: Mapping[str, str]) -> "Involution":
        _require_total(scale, table, "involution")
        return cls(scale, tuple(scale[table[label]].index for label in scale.levels))

    @classmethod
    def order_reversal(cls, scale: Scale) -> "Involution":
        """The canonical reversal; on a finite chain it is the only valid involution."""
        n = len(scale)
        return cls(scale, tuple(n - 1 - i for i in range(n)))

    def apply(self, level: Level) -> Level:
        if level.scale != self.scale:
            raise ScaleMismatchError(level.scale, self.scale)
        return self.scale.level(self.images[level.index])


def validate_involution(n: Involution) -> str | None:
    """Return None if valid, else a report naming the first violation."""
    scale = n.scale
    top = len(scale) - 1
    if n.images[top] != 0:
        return f"anchor violated: image of {scale.levels[top]!r} is {scale.levels[n.images[top]]!r}, not '0'"
    if n.images[0] != top:
        return f"anchor violated: image of '0' is {scale.levels[n.images[0]]!r}, not {scale.levels[top]!r}"
    for i in range(len(scale)):
        if n.images[n.images[i]] != i:
            return (
                f"not an involution: {scale.levels[i]!r} -> "
                f"{scale.levels[n.images[i]]!r} -> {scale.levels[n.images[n.images[i]]]!r}"
            )
    for i in range(len(scale) - 1):
        if n.images[i] <= n.images[i + 1]:
            return (
                f"antitonicity violated: {scale.levels[i]!r} < {scale.levels[i + 1]!r} "
                f"but images {scale.levels[n.images[i]]!r} <= {scale.levels[n.images[i + 1]]!r}"
            )
    return None


@dataclass(frozen=True)
class ScaleMap:
    """A total map from one scale onto another, given by a full image table."""

    source: Scale
    target: Scale
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.images) != len(self.source):
            raise ValueError(
                f"scale map table is incomplete: {len(self.images)} images "
                f"for {len(self.source)} levels"
            )
        for i in self.images:
            if not 0 <= i < len(self.target):
                raise ValueError(f"scale map image index {i} out of range")

    @classmethod
    def from_labels(cls, source: Scale, target: Scale, table: Mapping[str, str]) -> "ScaleMap":
        _require_total(source, table, "scale map")
        return cls(
            source, target, tuple(target[table[label]].index for label in source.levels)
        )

    @classmethod
    def identity(cls, scale: Scale) -> "ScaleMap":
        return cls(scale, scale, tuple(range(len(scale))))

    def apply(self, level: Level) -> Level:
        if level.scale != self.source:
            raise ScaleMismatchError(level.scale, self.source)
        return self.target.level(self.images[level.index])


def validate_scale_map(h: ScaleMap) -> str | None:
    """Return None if valid, else a report naming the first violation.

    Valid means: order preserving, 0 to 0, 1 to 1, and onto the target.
    """
    src, tgt = h.source, h.target
    if h.images[0] != 0:
        return f"anchor violated: image of '0' is {tgt.levels[h.images[0]]!r}, not '0'"
    if h.images[-1] != len(tgt) - 1:
        return (
            f"anchor violated: image of '1' is {tgt.levels[h.images[-1]]!r}, "
            f"not {tgt.levels[-1]!r}"
        )
    for i in range(len(src) - 1):
        if h.images[i] > h.images[i + 1]:
            return (
                f"monotonicity violated: {src.levels[i]!r} < {src.levels[i + 1]!r} "
                f"but images {tgt.levels[h.images[i]]!r} > {tgt.levels[h.images[i + 1]]!r}"
            )
    missing = set(range(len(tgt))) - set(h.images)
    if missing:
        label = tgt.levels[min(missing)]
        return f"not onto: target level {label!r} is never hit"
    return None
