"""Exhaustive desk-scale verification of preference axioms.

Preference relations are materialized as explicit boolean matrices over a
complete universe of lotteries; every axiom is a decidable predicate over
such a matrix, and every violated predicate returns a concrete witness
that can be replayed.  Entailment sweeps run the axiom batteries across
enumerated or seeded-sampled configuration families and report one line
per axiom per configuration.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import partial
from typing import Iterable, Sequence

from .lotteries import (
    OutcomeSet,
    PossibilityDistribution,
    enumerate_distributions,
)
from .scales import (
    BinaryUtility,
    Involution,
    Level,
    Scale,
    ScaleMap,
    binary_rank,
    binary_utilities,
    pair_ge_indices,
)
from .utilities import (
    BinaryUtilityAssessment,
    Evaluator,
    ScalarUtilityConfig,
    binary_utility,
    optimistic_utility,
    pessimistic_utility,
)

DEFAULT_UNIVERSE_LIMIT = 200_000


class LotteryUniverse:
    """Every normalized lottery over one outcome set and scale, indexed.

    Precomputes the raw value tuples, a reverse index for mixture lookups,
    the point masses, and the standard-lottery members with their weights.
    """

    def __init__(self, outcomes: OutcomeSet, scale: Scale, limit: int = DEFAULT_UNIVERSE_LIMIT):
        self.outcomes = outcomes
        self.scale = scale
        self.members = enumerate_distributions(outcomes, scale, limit=limit)
        self.value_tuples = tuple(m.indices for m in self.members)
        self.index_of = {vt: i for i, vt in enumerate(self.value_tuples)}
        labels = outcomes.labels
        top = len(scale) - 1
        self.point_mass_index = {}
        for label in labels:
            key = tuple(top if l == label else 0 for l in labels)
            self.point_mass_index[label] = self.index_of[key]
        best_pos = labels.index(outcomes.best)
        worst_pos = labels.index(outcomes.worst)
        self.standard_info: list[tuple[int, int, int]] = []
        for i, vt in enumerate(self.value_tuples):
            if all(v == 0 for pos, v in enumerate(vt) if pos not in (best_pos, worst_pos)):
                self.standard_info.append((i, vt[best_pos], vt[worst_pos]))
        self.best_half_ids = tuple(i for i, l, m in self.standard_info if l == top)
        self.worst_half_ids = tuple(i for i, l, m in self.standard_info if m == top)

    def __len__(self) -> int:
        return len(self.members)

    def member(self, index: int) -> PossibilityDistribution:
        return self.members[index]

    def describe(self, index: int) -> str:
        return f"#{index}{self.members[index]}"


class PreferenceRelation:
    """An explicit 'at least as good as' matrix over a lottery universe."""

    def __init__(self, universe: LotteryUniverse, holds: Sequence[Sequence[bool]]):
        self.universe = universe
        self.holds = tuple(tuple(bool(v) for v in row) for row in holds)
        self.size = len(self.holds)
        if self.size != len(universe):
            raise ValueError("relation size does not match the universe")
        self.rows = [
            sum(1 << j for j, v in enumerate(row) if v) for row in self.holds
        ]

    def indifferent(self, i: int, j: int) -> bool:
        return self.holds[i][j] and self.holds[j][i]

    def with_flipped(self, i: int, j: int) -> "PreferenceRelation":
        """Copy with one entry negated; used for fault injection."""
        rows = [list(row) for row in self.holds]
        rows[i][j] = not rows[i][j]
        return PreferenceRelation(self.universe, rows)


def induced_relation(universe: LotteryUniverse, evaluate: Evaluator) -> PreferenceRelation:
    """holds(i, j) iff the utility of member i is at least that of member j."""
    values = [evaluate(m) for m in universe.members]
    holds = [[values[i] >= values[j] for j in range(len(values))] for i in range(len(values))]
    return PreferenceRelation(universe, holds)


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of one axiom check; a witness is present iff it failed."""

    axiom: str
    satisfied: bool
    witness: tuple | None = None
    detail: str = ""

    def __post_init__(self) -> None:
        if self.satisfied and self.witness is not None:
            raise ValueError("a satisfied report cannot carry a witness")
        if not self.satisfied and self.witness is None:
            raise ValueError("a violated report must carry a witness")


def check_total_preorder(r: PreferenceRelation, axiom_id: str = "B1") -> AxiomReport:
    """Reflexive, transitive and complete; first failure wins, in that order."""
    n = r.size
    holds = r.holds
    for i in range(n):
        if not holds[i][i]:
            return AxiomReport(
                axiom_id, False, (i, i),
                f"reflexivity fails at {r.universe.describe(i)}",
            )
    rows = r.rows
    for i in range(n):
        row_i = rows[i]
        for j in range(n):
            if holds[i][j]:
                extra = rows[j] & ~row_i
                if extra:
                    k = (extra & -extra).bit_length() - 1
                    return AxiomReport(
                        axiom_id, False, (i, j, k),
                        f"transitivity fails: {r.universe.describe(i)} >= "
                        f"{r.universe.describe(j)} >= {r.universe.describe(k)} "
                        f"but not {r.universe.describe(i)} >= {r.universe.describe(k)}",
                    )
    for i in range(n):
        for j in range(i + 1, n):
            if not holds[i][j] and not holds[j][i]:
                return AxiomReport(
                    axiom_id, False, (i, j),
                    f"completeness fails on {r.universe.describe(i)} and "
                    f"{r.universe.describe(j)}",
                )
    return AxiomReport(axiom_id, True)


def check_uncertainty_attitude(r: PreferenceRelation, direction: str) -> AxiomReport:
    """Aversion: pointwise smaller must be weakly preferred.  Attraction: dual.

    Implication only, per the axiom statements; the biconditional lives in
    qualitative monotonicity.
    """
    if direction not in ("aversion", "attraction"):
        raise ValueError(f"unknown direction {direction!r}")
    axiom_id = "A2-" if direction == "aversion" else "A2+"
    vt = r.universe.value_tuples
    n = r.size
    for i in range(n):
        a = vt[i]
        for j in range(n):
            if i == j:
                continue
            b = vt[j]
            if direction == "aversion":
                premise = all(x <= y for x, y in zip(a, b))
            else:
                premise = all(x >= y for x, y in zip(a, b))
            if premise and not r.holds[i][j]:
                return AxiomReport(
                    axiom_id, False, (i, j),
                    f"{direction} fails: {r.universe.describe(i)} must be weakly "
                    f"preferred to {r.universe.describe(j)}",
                )
    return AxiomReport(axiom_id, True)


def default_weight_pairs(scale: Scale) -> tuple[tuple[int, int], ...]:
    """Every normalized weight pair over the scale, as index pairs."""
    top = len(scale) - 1
    pairs = [(i, top) for i in range(top + 1)]
    pairs.extend((top, j) for j in range(top - 1, -1, -1))
    return tuple(pairs)


def _indifference_classes(r: PreferenceRelation) -> list[int] | None:
    """Class index per member when indifference is an equivalence, else None."""
    n = r.size
    class_of = [-1] * n
    reps: list[int] = []
    for i in range(n):
        if not r.holds[i][i]:
            continue
        for c, rep in enumerate(reps):
            if r.indifferent(i, rep):
                class_of[i] = c
                break
        else:
            class_of[i] = len(reps)
            reps.append(i)
    for i in range(n):
        for j in range(n):
            same = class_of[i] == class_of[j] and class_of[i] >= 0
            if same != r.indifferent(i, j):
                return None
    return class_of


def check_substitutability(
    r: PreferenceRelation,
    weight_pairs: Sequence[tuple[Level, Level]] | None = None,
    axiom_id: str = "B3",
) -> AxiomReport:
    """Mixing two indifferent lotteries with any third must stay indifferent.

    Checked over every normalized weight pair drawn from the scale, every
    indifferent pair, and every companion lottery: complete at desk scale,
    never a sample.  Mixtures that coincide as lotteries count as
    indifferent; self-indifference is the total-preorder check's job.
    """
    universe = r.universe
    scale = universe.scale
    if weight_pairs is None:
        pairs = default_weight_pairs(scale)
    else:
        pairs = tuple((a.index, b.index) for a, b in weight_pairs)
        top = len(scale) - 1
        for a, b in pairs:
            if max(a, b) != top:
                raise ValueError("substitutability weight pairs must be normalized")
    vt = universe.value_tuples
    index_of = universe.index_of
    n = r.size

    def mix(w1: int, t1: tuple[int, ...], w2: int, t2: tuple[int, ...]) -> int:
        out = []
        for x, y in zip(t1, t2):
            a = x if x < w1 else w1
            b = y if y < w2 else w2
            out.append(a if a >= b else b)
        return index_of[tuple(out)]

    class_of = _indifference_classes(r)
    if class_of is not None:
        groups: dict[int, list[int]] = {}
        for i, c in enumerate(class_of):
            if c >= 0:
                groups.setdefault(c, []).append(i)
        for members in groups.values():
            if len(members) < 2:
                continue
            rep = members[0]
            rep_t = vt[rep]
            for wa, wb in pairs:
                for k in range(n):
                    target_id = mix(wa, rep_t, wb, vt[k])
                    target = class_of[target_id]
                    for m in members[1:]:
                        got_id = mix(wa, vt[m], wb, vt[k])
                        if got_id == target_id:
                            continue
                        # Distinct results must share a real class; class -1
                        # members are indifferent to nothing.
                        if class_of[got_id] != target or target < 0:
                            return _substitution_violation(
                                r, axiom_id, rep, m, k, wa, wb, mix
                            )
        return AxiomReport(axiom_id, True)

    # Indifference is not an equivalence here (broken relation); fall back
    # to the direct quantification over indifferent pairs, with the mixed
    # ids precomputed once per weight pair and companion.
    indifferent_pairs = [
        (i, j) for i in range(n) for j in range(i + 1, n) if r.indifferent(i, j)
    ]
    holds = r.holds
    for wa, wb in pairs:
        for k in range(n):
            tk = vt[k]
            mixed = [mix(wa, ti, wb, tk) for ti in vt]
            for i, j in indifferent_pairs:
                m1, m2 = mixed[i], mixed[j]
                if m1 != m2 and not (holds[m1][m2] and holds[m2][m1]):
                    return _substitution_violation(r, axiom_id, i, j, k, wa, wb, mix)
    return AxiomReport(axiom_id, True)


def _substitution_violation(r, axiom_id, i, j, k, wa, wb, mix) -> AxiomReport:
    universe = r.universe
    vt = universe.value_tuples
    m1 = mix(wa, vt[i], wb, vt[k])
    m2 = mix(wa, vt[j], wb, vt[k])
    labels = universe.scale.levels
    return AxiomReport(
        axiom_id, False, (i, j, k, wa, wb, m1, m2),
        f"substitutability fails: {universe.describe(i)} ~ {universe.describe(j)} "
        f"but weights ({labels[wa]}, {labels[wb]}) with {universe.describe(k)} "
        f"mix to {universe.describe(m1)} vs {universe.describe(m2)}",
    )


CONTINUITY_VARIANTS = ("A4-", "A4+", "B4", "B4-", "B4+")


def check_continuity(r: PreferenceRelation, variant: str) -> AxiomReport:
    """Existence of an indifferent standard lottery in the variant's target set.

    The scalar-style variants quantify over every lottery in the universe;
    the weakened ones only over the point masses of prizes.  Targets are
    the full standard set or one of its halves.
    """
    if variant not in CONTINUITY_VARIANTS:
        raise ValueError(f"unknown continuity variant {variant!r}")
    universe = r.universe
    if variant.startswith("A4"):
        sources: Iterable[int] = range(r.size)
    else:
        sources = universe.point_mass_index.values()
    if variant.endswith("-"):
        targets = universe.best_half_ids
    elif variant.endswith("+"):
        targets = universe.worst_half_ids
    else:
        targets = tuple(i for i, _, _ in universe.standard_info)
    for src in sources:
        if not any(r.indifferent(src, t) for t in targets):
            return AxiomReport(
                variant, False, (src,),
                f"continuity fails: no indifferent standard lottery for "
                f"{universe.describe(src)}",
            )
    return AxiomReport(variant, True)


def check_qualitative_monotonicity(r: PreferenceRelation, axiom_id: str = "B2") -> AxiomReport:
    """On standard lotteries, preference must equal the three-case pair order.

    Both directions are checked: the biconditional, not just sufficiency.
    """
    universe = r.universe
    top = len(universe.scale) - 1
    std = universe.standard_info
    for ia, la, ma in std:
        for ib, lb, mb in std:
            expected = pair_ge_indices(la, ma, lb, mb, top)
            if r.holds[ia][ib] != expected:
                direction = "holds but the pair order denies it" if r.holds[ia][ib] \
                    else "fails but the pair order requires it"
                return AxiomReport(
                    axiom_id, False, (ia, ib),
                    f"qualitative monotonicity fails: {universe.describe(ia)} >= "
                    f"{universe.describe(ib)} {direction}",
                )
    return AxiomReport(axiom_id, True)


def check_standard_order_decomposition(r: PreferenceRelation) -> AxiomReport:
    """Preference on standard lotteries must equal the three-part union.

    The union joins the within-half orders (worst-weight order on the
    best-possible half, best-weight order on the worst-possible half) with
    every cross pair from the best-possible half to the worst-possible one.
    """
    universe = r.universe
    top = len(universe.scale) - 1
    std = universe.standard_info
    for ia, la, ma in std:
        for ib, lb, mb in std:
            union = (
                (la == top and lb == top and ma <= mb)
                or (ma == top and mb == top and la >= lb)
                or (la == top and mb == top)
            )
            if r.holds[ia][ib] != union:
                return AxiomReport(
                    "B2-decomposition", False, (ia, ib),
                    f"decomposition fails on {universe.describe(ia)} vs "
                    f"{universe.describe(ib)}",
                )
    return AxiomReport("B2-decomposition", True)


# ---------------------------------------------------------------------------
# Configuration families


SCALE_LABEL_PRESETS = {
    2: ("0", "1"),
    3: ("0", ".5", "1"),
    4: ("0", ".3", ".7", "1"),
    5: ("0", ".2", ".5", ".7", "1"),
    6: ("0", ".1", ".3", ".5", ".7", "1"),
}


def canonical_scale(size: int, name: str = "V") -> Scale:
    if size not in SCALE_LABEL_PRESETS:
        raise ValueError(f"no canonical scale of size {size}")
    return Scale(SCALE_LABEL_PRESETS[size], name=name)


def canonical_outcomes(count: int) -> OutcomeSet:
    labels = tuple(f"x{i}" for i in range(1, count + 1))
    return OutcomeSet(labels, best=labels[0], worst=labels[-1])


def _outcomes_with_ranks(base: OutcomeSet, rank_key: dict[str, int]) -> OutcomeSet:
    """Rebuild an outcome set whose preference classes follow the given keys.

    Larger keys are better.  The best prize must carry the largest key and
    the worst the smallest; generators arrange that.
    """
    distinct = sorted(set(rank_key.values()), reverse=True)
    classes = tuple(
        tuple(label for label in base.labels if rank_key[label] == key)
        for key in distinct
    )
    return OutcomeSet(base.labels, base.best, base.worst, classes)


def enumerate_scale_maps(source: Scale, target: Scale) -> list[ScaleMap]:
    """All order-preserving onto maps with the 0/1 anchors fixed."""
    n, m = len(source), len(target)
    maps = []
    for mid in itertools.combinations_with_replacement(range(m), n - 2):
        images = (0,) + mid + (m - 1,)
        if list(images) != sorted(images):
            continue
        if set(images) != set(range(m)):
            continue
        maps.append(ScaleMap(source, target, images))
    return maps


def enumerate_scalar_configs(
    outcomes: OutcomeSet, scale: Scale
) -> list[ScalarUtilityConfig]:
    """Every valid scalar configuration over canonical utility scales.

    Ranges over utility-scale sizes up to the uncertainty scale, every
    valid onto map, and every anchored prize assignment; the involution is
    forced on a finite chain, and preference classes follow the assignment.
    """
    configs = []
    interior = tuple(
        l for l in outcomes.labels if l not in (outcomes.best, outcomes.worst)
    )
    for u_size in range(2, len(scale) + 1):
        u_scale = canonical_scale(u_size, name="U")
        reversal = Involution.order_reversal(u_scale)
        for h in enumerate_scale_maps(scale, u_scale):
            for combo in itertools.product(range(u_size), repeat=len(interior)):
                rank_key = {outcomes.best: u_size - 1, outcomes.worst: 0}
                rank_key.update(dict(zip(interior, combo)))
                variant = _outcomes_with_ranks(outcomes, rank_key)
                prize = {
                    label: u_scale.level(rank_key[label]) for label in outcomes.labels
                }
                configs.append(
                    ScalarUtilityConfig.build(variant, h, reversal, prize)
                )
    return configs


def sample_scalar_configs(
    seed: int,
    count: int,
    max_outcomes: int = 3,
    max_levels: int = 4,
) -> list[tuple[OutcomeSet, Scale, ScalarUtilityConfig]]:
    """A reproducible sample of valid scalar configurations.

    Dimensions, utility scale, onto map and prize assignment are all drawn
    from one seeded generator, so a fixed seed pins the whole family.
    """
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        nx = rng.randint(2, max_outcomes)
        nv = rng.randint(2, max_levels)
        nu = rng.randint(2, nv)
        base = canonical_outcomes(nx)
        v_scale = canonical_scale(nv)
        u_scale = canonical_scale(nu, name="U")
        h = rng.choice(enumerate_scale_maps(v_scale, u_scale))
        reversal = Involution.order_reversal(u_scale)
        rank_key = {base.best: nu - 1, base.worst: 0}
        for label in base.labels:
            if label not in (base.best, base.worst):
                rank_key[label] = rng.randrange(nu)
        variant = _outcomes_with_ranks(base, rank_key)
        prize = {label: u_scale.level(rank_key[label]) for label in base.labels}
        out.append((base, v_scale, ScalarUtilityConfig.build(variant, h, reversal, prize)))
    return out


def enumerate_assessments(
    outcomes: OutcomeSet, scale: Scale, half: str | None = None
) -> list[BinaryUtilityAssessment]:
    """Every consistent assessment over the given space.

    With ``half=None`` the anchors are fixed at <1,0> and <0,1> and interior
    prizes range over the whole binary scale.  With ``half="best"`` or
    ``half="worst"`` every prize is encoded inside that half of the scale
    (anchors relaxed), best prize highest and worst prize lowest.
    """
    top = len(scale) - 1
    if half is None:
        values = binary_utilities(scale)
        interior = tuple(
            l for l in outcomes.labels if l not in (outcomes.best, outcomes.worst)
        )
        result = []
        for combo in itertools.product(values, repeat=len(interior)):
            table = {
                outcomes.best: BinaryUtility.of(scale.top, scale.bottom),
                outcomes.worst: BinaryUtility.of(scale.bottom, scale.top),
            }
            table.update(dict(zip(interior, combo)))
            rank_key = {label: binary_rank(table[label]) for label in outcomes.labels}
            variant = _outcomes_with_ranks(outcomes, rank_key)
            result.append(
                BinaryUtilityAssessment.from_mapping(variant, scale, table)
            )
        return result
    if half == "best":
        pool = [BinaryUtility.of(scale.top, scale.level(m)) for m in range(top, -1, -1)]
    elif half == "worst":
        pool = [BinaryUtility.of(scale.level(l), scale.top) for l in range(top + 1)]
    else:
        raise ValueError(f"unknown half {half!r}")
    # pool is ascending; draw multisets and hand the extremes to the anchors.
    result = []
    n = len(outcomes.labels)
    for combo in itertools.combinations_with_replacement(pool, n):
        ordered = sorted(combo, key=binary_rank, reverse=True)
        table = dict(zip(_best_first_labels(outcomes), ordered))
        rank_key = {label: binary_rank(table[label]) for label in outcomes.labels}
        variant = _outcomes_with_ranks(outcomes, rank_key)
        result.append(
            BinaryUtilityAssessment.from_mapping(
                variant, scale, table, require_anchors=False
            )
        )
    return result


def _best_first_labels(outcomes: OutcomeSet) -> list[str]:
    labels = [outcomes.best]
    labels.extend(l for l in outcomes.labels if l not in (outcomes.best, outcomes.worst))
    labels.append(outcomes.worst)
    return labels


# ---------------------------------------------------------------------------
# Entailment sweeps


SCALAR_EXPECTATIONS_PESS = {
    "A1-": "satisfied", "A2-": "satisfied", "A3-": "satisfied", "A4-": "satisfied",
    "B1": "satisfied", "B2": "informational", "B3": "satisfied", "B4": "satisfied",
}
SCALAR_EXPECTATIONS_OPT = {
    "A1-": "satisfied", "A2+": "satisfied", "A3-": "satisfied", "A4+": "satisfied",
    "B1": "satisfied", "B2": "informational", "B3": "satisfied", "B4": "satisfied",
}
BINARY_EXPECTATIONS = {
    "B1": "satisfied", "B2": "satisfied", "B3": "satisfied", "B4": "satisfied",
    "A2-": "violated", "A2+": "violated",
    "A4-": "informational", "A4+": "informational",
    "B4-": "informational", "B4+": "informational",
}
BEST_HALF_EXPECTATIONS = {
    "B1": "satisfied", "A2-": "satisfied", "A4-": "satisfied", "B4-": "satisfied",
    "B3": "satisfied", "B4": "satisfied",
    "A2+": "informational", "A4+": "informational", "B4+": "informational",
    "B2": "informational",
}
WORST_HALF_EXPECTATIONS = {
    "B1": "satisfied", "A2+": "satisfied", "A4+": "satisfied", "B4+": "satisfied",
    "B3": "satisfied", "B4": "satisfied",
    "A2-": "informational", "A4-": "informational", "B4-": "informational",
    "B2": "informational",
}


@dataclass
class ConfigOutcome:
    """All axiom reports for one configuration, with their expectations."""

    config_id: str
    family: str
    reports: list[AxiomReport]
    expectations: dict[str, str]

    def unexpected(self) -> list[str]:
        bad = []
        for report in self.reports:
            want = self.expectations.get(report.axiom, "informational")
            if want == "satisfied" and not report.satisfied:
                bad.append(report.axiom)
            elif want == "violated" and report.satisfied:
                bad.append(report.axiom)
        return bad


@dataclass
class EntailmentRun:
    """The full outcome of an entailment sweep."""

    configs: list[ConfigOutcome] = field(default_factory=list)

    def unexpected(self) -> list[tuple[str, str]]:
        return [
            (c.config_id, axiom) for c in self.configs for axiom in c.unexpected()
        ]

    def anomaly_exhibited(self) -> bool:
        """Some mixed assessment must violate both attitude axioms."""
        for c in self.configs:
            if c.family != "binary":
                continue
            down = {r.axiom: r.satisfied for r in c.reports}
            if down.get("A2-") is False and down.get("A2+") is False:
                return True
        return False

    def ok(self) -> bool:
        return not self.unexpected() and self.anomaly_exhibited()


def _run_battery(
    r: PreferenceRelation, axioms_wanted: Sequence[str]
) -> list[AxiomReport]:
    reports = []
    for axiom in axioms_wanted:
        if axiom in ("A1-", "B1"):
            reports.append(check_total_preorder(r, axiom_id=axiom))
        elif axiom == "A2-":
            reports.append(check_uncertainty_attitude(r, "aversion"))
        elif axiom == "A2+":
            reports.append(check_uncertainty_attitude(r, "attraction"))
        elif axiom in ("A3-", "B3"):
            reports.append(check_substitutability(r, axiom_id=axiom))
        elif axiom in CONTINUITY_VARIANTS:
            reports.append(check_continuity(r, axiom))
        elif axiom == "B2":
            reports.append(check_qualitative_monotonicity(r))
        else:
            raise ValueError(f"unknown axiom {axiom!r}")
    return reports


PESS_BATTERY = ("A1-", "A2-", "A3-", "A4-", "B1", "B2", "B3", "B4")
OPT_BATTERY = ("A1-", "A2+", "A3-", "A4+", "B1", "B2", "B3", "B4")
BINARY_BATTERY = ("B1", "B2", "B3", "B4", "A2-", "A2+", "A4-", "A4+", "B4-", "B4+")
HALF_BATTERY = ("B1", "B2", "B3", "B4", "A2-", "A2+", "A4-", "A4+", "B4-", "B4+")


def verify_entailments(
    universe: LotteryUniverse | None = None,
    *,
    scalar_config: ScalarUtilityConfig | None = None,
    assessment: BinaryUtilityAssessment | None = None,
    seed: int = 0,
    sample_size: int = 100,
    sample_max_outcomes: int = 3,
    sample_max_levels: int = 4,
    enumerate_max: tuple[int, int] = (3, 3),
    fault: tuple[int, int] | None = None,
) -> EntailmentRun:
    """Run the axiom batteries across configuration families.

    Families: the caller's own configuration over its universe (if given);
    fully enumerated configurations for every space within
    ``enumerate_max``; and a seeded sample of scalar configurations drawn
    within the sample bounds.  ``fault`` flips one entry of the first
    relation built, for exercising the failure path end to end.
    """
    run = EntailmentRun()
    faulted = fault

    def scalar_outcome(config_id: str, relation, optimistic: bool) -> ConfigOutcome:
        battery = OPT_BATTERY if optimistic else PESS_BATTERY
        expectations = SCALAR_EXPECTATIONS_OPT if optimistic else SCALAR_EXPECTATIONS_PESS
        return ConfigOutcome(
            config_id,
            "optimistic" if optimistic else "pessimistic",
            _run_battery(relation, battery),
            dict(expectations),
        )

    def build(universe_, evaluate):
        nonlocal faulted
        relation = induced_relation(universe_, evaluate)
        if faulted is not None:
            relation = relation.with_flipped(*faulted)
            faulted = None
        return relation

    if scalar_config is not None:
        if universe is None:
            raise ValueError("a universe is required to check the scenario config")
        rel = build(universe, partial(pessimistic_utility, cfg=scalar_config))
        run.configs.append(scalar_outcome("scenario-pessimistic", rel, optimistic=False))
        rel = build(universe, partial(optimistic_utility, cfg=scalar_config))
        run.configs.append(scalar_outcome("scenario-optimistic", rel, optimistic=True))
    if assessment is not None:
        if universe is None:
            raise ValueError("a universe is required to check the scenario assessment")
        rel = build(universe, partial(binary_utility, a=assessment))
        run.configs.append(
            ConfigOutcome(
                "scenario-binary", "binary",
                _run_battery(rel, BINARY_BATTERY), dict(BINARY_EXPECTATIONS),
            )
        )

    cache: dict[tuple[int, int], LotteryUniverse] = {}

    def universe_for(nx: int, nv: int) -> LotteryUniverse:
        if (nx, nv) not in cache:
            cache[(nx, nv)] = LotteryUniverse(canonical_outcomes(nx), canonical_scale(nv))
        return cache[(nx, nv)]

    max_x, max_v = enumerate_max
    for nx in range(2, max_x + 1):
        for nv in range(2, max_v + 1):
            uni = universe_for(nx, nv)
            for i, cfg in enumerate(enumerate_scalar_configs(uni.outcomes, uni.scale)):
                rel = build(uni, partial(pessimistic_utility, cfg=cfg))
                run.configs.append(
                    scalar_outcome(f"pess-enum-{nx}x{nv}-{i:03d}", rel, optimistic=False)
                )
                rel = build(uni, partial(optimistic_utility, cfg=cfg))
                run.configs.append(
                    scalar_outcome(f"opt-enum-{nx}x{nv}-{i:03d}", rel, optimistic=True)
                )
            for i, a in enumerate(enumerate_assessments(uni.outcomes, uni.scale)):
                rel = build(uni, partial(binary_utility, a=a))
                run.configs.append(
                    ConfigOutcome(
                        f"binary-enum-{nx}x{nv}-{i:03d}", "binary",
                        _run_battery(rel, BINARY_BATTERY), dict(BINARY_EXPECTATIONS),
                    )
                )
            for half, family, expectations in (
                ("best", "binary-best-half", BEST_HALF_EXPECTATIONS),
                ("worst", "binary-worst-half", WORST_HALF_EXPECTATIONS),
            ):
                for i, a in enumerate(enumerate_assessments(uni.outcomes, uni.scale, half=half)):
                    rel = build(uni, partial(binary_utility, a=a))
                    run.configs.append(
                        ConfigOutcome(
                            f"{family}-{nx}x{nv}-{i:03d}", family,
                            _run_battery(rel, HALF_BATTERY), dict(expectations),
                        )
                    )

    if sample_size > 0:
        sampled = sample_scalar_configs(
            seed, sample_size, sample_max_outcomes, sample_max_levels
        )
        for i, (base, v_scale, cfg) in enumerate(sampled):
            uni = universe_for(len(base.labels), len(v_scale))
            rel = build(uni, partial(pessimistic_utility, cfg=cfg))
            run.configs.append(scalar_outcome(f"pess-sample-{i:03d}", rel, optimistic=False))
            rel = build(uni, partial(optimistic_utility, cfg=cfg))
            run.configs.append(scalar_outcome(f"opt-sample-{i:03d}", rel, optimistic=True))
    return run


def format_report(run: EntailmentRun) -> str:
    """One record per axiom per configuration, tab separated."""
    lines = []
    for config in run.configs:
        for report in config.reports:
            status = "satisfied" if report.satisfied else "violated"
            expectation = config.expectations.get(report.axiom, "informational")
            witness = report.detail if report.detail else "-"
            lines.append(
                f"{config.config_id}\t{report.axiom}\t{status}\t"
                f"expected={expectation}\t{witness}"
            )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Pair-of-scalar-utilities versus pair-valued utility search


@dataclass(frozen=True)
class SearchResult:
    """Outcome of the counterexample search; never a universal claim."""

    witness: tuple[int, int] | None
    pairs_checked: int
    outcome_count: int
    scale_size: int

    @property
    def found(self) -> bool:
        return self.witness is not None

    def summary(self) -> str:
        scope = f"|X|={self.outcome_count}, |V|={self.scale_size}"
        if self.witness is None:
            return (
                f"no witness found at scale ({scope}); "
                f"{self.pairs_checked} pairs checked"
            )
        i, j = self.witness
        return f"witness found at scale ({scope}): members {i} and {j}"


def search_pair_counterexample(
    universe: LotteryUniverse,
    cfg: ScalarUtilityConfig,
    assessment: BinaryUtilityAssessment,
) -> SearchResult:
    """Look for two lotteries the scalar pair cannot tell apart but the
    pair-valued utility can.

    Exhausts all member pairs in a fixed order and reports the first
    witness, or an explicit none-found-at-this-scale marker.
    """
    pess = [pessimistic_utility(m, cfg) for m in universe.members]
    opt = [optimistic_utility(m, cfg) for m in universe.members]
    pairs = [binary_utility(m, assessment) for m in universe.members]
    checked = 0
    n = len(universe)
    for i in range(n):
        for j in range(i + 1, n):
            checked += 1
            if pess[i] == pess[j] and opt[i] == opt[j] and pairs[i] != pairs[j]:
                return SearchResult(
                    (i, j), checked, len(universe.outcomes.labels), len(universe.scale)
                )
    return SearchResult(None, checked, len(universe.outcomes.labels), len(universe.scale))
