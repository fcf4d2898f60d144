"""Command-line front end.

Subcommands: evaluate, rank, verify, convert-spohn, paper-example.
Scenario files are single JSON documents; levels appear as their decimal
label strings and pair utilities as two-element label arrays.  Exit codes:
0 success, 1 validation or parse error, 2 verification failure, 3 bound
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from typing import Mapping

from . import worked_example
from .axioms import LotteryUniverse, format_report, verify_entailments
from .lotteries import (
    INFINITY,
    BoundExceededError,
    Decision,
    DisbeliefFunction,
    OutcomeSet,
    PossibilityDistribution,
    StateSpace,
    format_fraction_label,
    from_disbelief,
    induced_distribution,
    make_distribution,
    to_disbelief,
)
from .scales import (
    BinaryUtility,
    Involution,
    Scale,
    ScaleMap,
    ext_min,
    level_max,
)
from .utilities import (
    BinaryUtilityAssessment,
    Evaluator,
    ScalarUtilityConfig,
    binary_utility,
    optimistic_utility,
    pessimistic_utility,
    rank_decisions,
)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_VERIFICATION = 2
EXIT_BOUND = 3

HARD_CAP = 6


class ScenarioError(ValueError):
    """A scenario file failed to parse or validate."""


@dataclass
class Scenario:
    """A fully validated scenario document."""

    scale_v: Scale
    scale_u: Scale | None
    outcomes: OutcomeSet
    states: StateSpace | None
    state_possibility: PossibilityDistribution | None
    decisions: dict[str, Decision]
    lotteries: dict[str, PossibilityDistribution]
    assessment: BinaryUtilityAssessment | None
    pessimistic_config: ScalarUtilityConfig | None

    @property
    def utility_scale(self) -> Scale:
        return self.scale_u if self.scale_u is not None else self.scale_v


def load_scenario(path: str) -> Scenario:
    """Read and validate a scenario file."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{path}: parse error: {exc}") from exc
    except OSError as exc:
        raise ScenarioError(f"{path}: {exc}") from exc
    return parse_scenario(data, source=path)


def parse_scenario(data: Mapping, source: str = "<scenario>") -> Scenario:
    """Build a Scenario from parsed JSON, running every module validator."""

    def fail(message: str) -> ScenarioError:
        return ScenarioError(f"{source}: {message}")

    if not isinstance(data, Mapping):
        raise fail("scenario must be a JSON object")
    if "scale_v" not in data:
        raise fail("missing scale_v")
    if "outcomes" not in data:
        raise fail("missing outcomes")
    try:
        scale_v = Scale(tuple(data["scale_v"]), name="V")
    except ValueError as exc:
        raise fail(f"scale_v: {exc}") from exc
    scale_u = None
    if data.get("scale_u") is not None:
        try:
            scale_u = Scale(tuple(data["scale_u"]), name="U")
        except ValueError as exc:
            raise fail(f"scale_u: {exc}") from exc

    decl = data["outcomes"]
    try:
        preference = decl.get("preference")
        outcomes = OutcomeSet(
            tuple(decl["labels"]),
            decl["best"],
            decl["worst"],
            tuple(tuple(c) for c in preference) if preference else (),
        )
    except (KeyError, ValueError, TypeError) as exc:
        raise fail(f"outcomes: {exc}") from exc

    states = None
    if data.get("states") is not None:
        try:
            states = StateSpace(tuple(data["states"]))
        except ValueError as exc:
            raise fail(f"states: {exc}") from exc

    def parse_distribution(domain, table: Mapping[str, str], what: str):
        try:
            values = {label: scale_v[level] for label, level in table.items()}
        except KeyError as exc:
            raise fail(f"{what}: {exc.args[0]}") from exc
        try:
            return make_distribution(domain, values)
        except ValueError as exc:
            raise fail(f"{what}: {exc}") from exc

    state_possibility = None
    if data.get("state_possibility") is not None:
        if states is None:
            raise fail("state_possibility given without states")
        state_possibility = parse_distribution(
            states, data["state_possibility"], "state_possibility"
        )

    decisions: dict[str, Decision] = {}
    for name, table in (data.get("decisions") or {}).items():
        if states is None:
            raise fail(f"decision {name!r} given without states")
        try:
            decision = Decision.from_mapping(states, table)
        except ValueError as exc:
            raise fail(f"decision {name!r}: {exc}") from exc
        for move in decision.moves:
            if move not in outcomes.outcomes:
                raise fail(f"decision {name!r} maps to unknown outcome {move!r}")
        decisions[name] = decision

    lotteries = {
        name: parse_distribution(outcomes, table, f"lottery {name!r}")
        for name, table in (data.get("lotteries") or {}).items()
    }

    assessment = None
    if data.get("assessment") is not None:
        table = {}
        for label, pair in data["assessment"].items():
            if len(pair) != 2:
                raise fail(f"assessment for {label!r} must be a two-element array")
            try:
                table[label] = BinaryUtility.of(scale_v[pair[0]], scale_v[pair[1]])
            except (KeyError, ValueError) as exc:
                raise fail(f"assessment for {label!r}: {exc}") from exc
        try:
            assessment = BinaryUtilityAssessment.from_mapping(outcomes, scale_v, table)
        except ValueError as exc:
            raise fail(f"assessment: {exc}") from exc

    pessimistic_config = None
    if data.get("pessimistic_config") is not None:
        cfg = data["pessimistic_config"]
        target = scale_u if scale_u is not None else scale_v
        try:
            involution = Involution.from_labels(target, cfg["n"])
            scale_map = ScaleMap.from_labels(scale_v, target, cfg["h"])
            prize = {label: target[level] for label, level in cfg["u"].items()}
            pessimistic_config = ScalarUtilityConfig.build(
                outcomes, scale_map, involution, prize
            )
        except KeyError as exc:
            raise fail(f"pessimistic_config: {exc.args[0]}") from exc
        except ValueError as exc:
            raise fail(f"pessimistic_config: {exc}") from exc

    return Scenario(
        scale_v, scale_u, outcomes, states, state_possibility,
        decisions, lotteries, assessment, pessimistic_config,
    )


def serialize_scenario(scenario: Scenario) -> dict:
    """Rebuild the JSON document for a scenario; loading it back compares equal."""
    data: dict = {
        "scale_v": list(scenario.scale_v.levels),
        "outcomes": {
            "labels": list(scenario.outcomes.outcomes),
            "best": scenario.outcomes.best,
            "worst": scenario.outcomes.worst,
            "preference": [list(c) for c in scenario.outcomes.preference_classes],
        },
    }
    if scenario.scale_u is not None:
        data["scale_u"] = list(scenario.scale_u.levels)
    if scenario.states is not None:
        data["states"] = list(scenario.states.states)
    if scenario.state_possibility is not None:
        data["state_possibility"] = {
            label: level.label for label, level in scenario.state_possibility.items()
        }
    if scenario.decisions:
        data["decisions"] = {
            name: dict(zip(d.states.states, d.moves))
            for name, d in scenario.decisions.items()
        }
    if scenario.lotteries:
        data["lotteries"] = {
            name: {label: level.label for label, level in dist.items()}
            for name, dist in scenario.lotteries.items()
        }
    if scenario.assessment is not None:
        data["assessment"] = {
            label: [
                scenario.assessment.utility_for(label).first.label,
                scenario.assessment.utility_for(label).second.label,
            ]
            for label in scenario.outcomes.outcomes
        }
    if scenario.pessimistic_config is not None:
        cfg = scenario.pessimistic_config
        data["pessimistic_config"] = {
            "u": {
                label: cfg.prize_utility_for(label).label
                for label in scenario.outcomes.outcomes
            },
            "n": {
                cfg.utility_scale.levels[i]: cfg.utility_scale.levels[img]
                for i, img in enumerate(cfg.involution.images)
            },
            "h": {
                cfg.uncertainty_scale.levels[i]: cfg.utility_scale.levels[img]
                for i, img in enumerate(cfg.scale_map.images)
            },
        }
    return data


def _resolve_evaluator(scenario: Scenario, method: str) -> Evaluator:
    if method in ("pessimistic", "optimistic"):
        if scenario.pessimistic_config is None:
            raise ScenarioError(
                f"method {method!r} needs a pessimistic_config in the scenario"
            )
        fn = pessimistic_utility if method == "pessimistic" else optimistic_utility
        return partial(fn, cfg=scenario.pessimistic_config)
    if method == "binary":
        if scenario.assessment is None:
            raise ScenarioError("method 'binary' needs an assessment in the scenario")
        return partial(binary_utility, a=scenario.assessment)
    raise ScenarioError(f"unknown method {method!r}")


def _resolve_targets(
    scenario: Scenario, names: list[str]
) -> list[tuple[str, PossibilityDistribution]]:
    if not scenario.lotteries and not scenario.decisions:
        raise ScenarioError("scenario declares neither lotteries nor decisions")
    if not names:
        names = list(scenario.lotteries) + list(scenario.decisions)
    items = []
    for name in names:
        if name in scenario.lotteries:
            items.append((name, scenario.lotteries[name]))
        elif name in scenario.decisions:
            if scenario.state_possibility is None:
                raise ScenarioError(
                    f"decision {name!r} needs states and state_possibility"
                )
            items.append(
                (
                    name,
                    induced_distribution(
                        scenario.state_possibility,
                        scenario.decisions[name],
                        scenario.outcomes,
                    ),
                )
            )
        else:
            raise ScenarioError(f"unknown target {name!r}")
    return items


def cmd_evaluate(args: argparse.Namespace) -> int:
    scenario = load_scenario(args.scenario)
    evaluate = _resolve_evaluator(scenario, args.method)
    items = _resolve_targets(scenario, args.targets)
    width = max(len(name) for name, _ in items)
    for name, dist in items:
        print(f"{name.ljust(width)}  {evaluate(dist)}")
    return EXIT_OK


def cmd_rank(args: argparse.Namespace) -> int:
    scenario = load_scenario(args.scenario)
    evaluate = _resolve_evaluator(scenario, args.method)
    items = _resolve_targets(scenario, [])
    ranking = rank_decisions(items, evaluate)
    for position, group in enumerate(ranking.classes, start=1):
        print(f"{position}. {', '.join(group)}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    for flag, value in (("--max-outcomes", args.max_outcomes), ("--max-levels", args.max_levels)):
        if value > HARD_CAP and not args.unsafe_bounds:
            raise BoundExceededError(
                f"{flag}={value} is above the hard cap of {HARD_CAP}; "
                f"pass --unsafe-bounds to override"
            )
    scenario = load_scenario(args.scenario)
    n_outcomes = len(scenario.outcomes.outcomes)
    n_levels = len(scenario.scale_v)
    if n_outcomes > args.max_outcomes:
        raise BoundExceededError(
            f"scenario has {n_outcomes} outcomes, over the bound of {args.max_outcomes}"
        )
    if n_levels > args.max_levels:
        raise BoundExceededError(
            f"scenario scale has {n_levels} levels, over the bound of {args.max_levels}"
        )
    universe = LotteryUniverse(scenario.outcomes, scenario.scale_v)
    run = verify_entailments(
        universe,
        scalar_config=scenario.pessimistic_config,
        assessment=scenario.assessment,
        seed=args.seed,
        sample_size=args.sample,
        fault=(0, 0) if args.inject_fault else None,
    )
    report = format_report(run)
    with open(args.out, "w", encoding="utf-8") as handle:
        handle.write(report)
    checks = sum(len(c.reports) for c in run.configs)
    unexpected = run.unexpected()
    if run.ok():
        print(
            f"verified {len(run.configs)} configurations, {checks} axiom checks: "
            f"all expected outcomes hold (report: {args.out})"
        )
        return EXIT_OK
    for config_id, axiom in unexpected:
        print(f"unexpected outcome: {config_id} {axiom}", file=sys.stderr)
    if not run.anomaly_exhibited():
        print("no mixed assessment violating both attitude axioms", file=sys.stderr)
    print(
        f"verified {len(run.configs)} configurations, {checks} axiom checks: "
        f"{len(unexpected)} unexpected outcomes (report: {args.out})"
    )
    return EXIT_VERIFICATION


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{path}: parse error: {exc}") from exc
    except OSError as exc:
        raise ScenarioError(f"{path}: {exc}") from exc


def cmd_convert_spohn(args: argparse.Namespace) -> int:
    data = _load_json(args.input)
    if isinstance(data, dict) and "values" in data:
        values = data["values"]
    else:
        values = data
    if args.direction == "to-possibility":
        table = {}
        for label, value in values.items():
            if value == "infinity":
                table[label] = INFINITY
            elif isinstance(value, int) and not isinstance(value, bool):
                table[label] = value
            else:
                raise ScenarioError(
                    f"disbelief value for {label!r} must be a non-negative "
                    f"integer or \"infinity\""
                )
        delta = DisbeliefFunction.from_mapping(table)
        pi = from_disbelief(delta, args.base)
        payload = {
            "scale": list(pi.scale.levels),
            "values": {label: level.label for label, level in pi.items()},
        }
    else:
        if isinstance(data, dict) and "scale" in data:
            scale = Scale(tuple(data["scale"]), name="V")
            dist_values = {label: scale[level] for label, level in values.items()}
        else:
            # Bare label table: synthesize the scale from the values present.
            points = sorted(
                {Fraction(v) for v in values.values()} | {Fraction(0), Fraction(1)}
            )
            scale = Scale(
                tuple(format_fraction_label(p) for p in points), name="synthesized"
            )
            dist_values = {
                label: scale[format_fraction_label(Fraction(v))]
                for label, v in values.items()
            }
        pi = make_distribution(StateSpace(tuple(values)), dist_values)
        delta = to_disbelief(pi, args.base)
        payload = {
            "values": {
                label: ("infinity" if value == INFINITY else value)
                for label, value in zip(delta.labels, delta.values)
            }
        }
    text = json.dumps(payload, indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def paper_example_lines() -> list[str]:
    """The bundled worked example, every intermediate table recomputed."""
    scenario = parse_scenario(worked_example.SCENARIO, source="<bundled>")
    cfg = scenario.pessimistic_config
    assert cfg is not None
    scale_v = scenario.scale_v
    encoded = BinaryUtilityAssessment.from_mapping(
        scenario.outcomes,
        scale_v,
        {
            label: BinaryUtility.of(scale_v[pair[0]], scale_v[pair[1]])
            for label, pair in worked_example.ENCODED_ASSESSMENT.items()
        },
        require_anchors=False,
    )
    labels = scenario.outcomes.outcomes
    u_scale = cfg.utility_scale
    lines = [
        "worked example: two lotteries over four ranked prizes",
        f"uncertainty scale V: {' < '.join(scale_v.levels)}",
        f"utility scale U: {' < '.join(u_scale.levels)}",
        f"prizes, best first: {', '.join(labels)}",
    ]
    for name in ("pi1", "pi2"):
        lines.append(f"{name} = {scenario.lotteries[name]}")
    lines.append("")
    lines.append("pessimistic criterion")
    prize_text = ", ".join(
        f"u({label})={cfg.prize_utility_for(label)}" for label in labels
    )
    lines.append(f"  prize utilities: {prize_text}")
    nh_text = ", ".join(
        f"{scale_v.levels[i]}->{u_scale.levels[cfg.reversed_map[i]]}"
        for i in range(len(scale_v) - 1, -1, -1)
    )
    lines.append(f"  reversed scale map: {nh_text}")
    for name in ("pi1", "pi2"):
        dist = scenario.lotteries[name]
        terms = []
        for label, level in dist.items():
            nh_level = u_scale.level(cfg.reversed_map[level.index])
            u_level = cfg.prize_utility_for(label)
            terms.append((nh_level, u_level, level_max(nh_level, u_level)))
        term_text = ", ".join(f"max({nh},{u})={t}" for nh, u, t in terms)
        lines.append(f"  {name} terms: {term_text}")
        value = pessimistic_utility(dist, cfg)
        arg_text = ", ".join(str(t) for _, _, t in terms)
        lines.append(f"  pessimistic({name}) = min{{{arg_text}}} = {value}")
    lines.append("")
    lines.append("pair-valued criterion")
    pair_text = ", ".join(f"u({label})={encoded.utility_for(label)}" for label in labels)
    lines.append(f"  prize pairs: {pair_text}")
    for name in ("pi1", "pi2"):
        dist = scenario.lotteries[name]
        terms = []
        for label, level in dist.items():
            pair = encoded.utility_for(label).pair
            terms.append((level, pair, ext_min(level, pair)))
        term_text = ", ".join(f"min({lv},{pr})={cut}" for lv, pr, cut in terms)
        lines.append(f"  {name} terms: {term_text}")
        value = binary_utility(dist, encoded)
        arg_text = ", ".join(str(cut) for _, _, cut in terms)
        lines.append(f"  pair-valued({name}) = max{{{arg_text}}} = {value}")
    lines.append("")
    pess_1 = pessimistic_utility(scenario.lotteries["pi1"], cfg)
    pess_2 = pessimistic_utility(scenario.lotteries["pi2"], cfg)
    pair_1 = binary_utility(scenario.lotteries["pi1"], encoded)
    pair_2 = binary_utility(scenario.lotteries["pi2"], encoded)
    if pess_1 > pess_2 and pair_1 > pair_2:
        lines.append("pi1 is strictly preferred to pi2 under both criteria")
    else:
        lines.append("criteria disagree; see the tables above")
    return lines


def cmd_paper_example(args: argparse.Namespace) -> int:
    for line in paper_example_lines():
        print(line)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="posdec",
        description="Ordinal max-min decision engine over possibility distributions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    evaluate = sub.add_parser("evaluate", help="print the utility of named targets")
    evaluate.add_argument("--scenario", required=True, help="scenario JSON path")
    evaluate.add_argument(
        "--method",
        required=True,
        choices=("pessimistic", "optimistic", "binary"),
    )
    evaluate.add_argument("targets", nargs="*", help="lottery or decision names")
    evaluate.set_defaults(func=cmd_evaluate)

    rank = sub.add_parser("rank", help="rank every lottery and decision")
    rank.add_argument("--scenario", required=True)
    rank.add_argument(
        "--method", required=True, choices=("pessimistic", "optimistic", "binary")
    )
    rank.set_defaults(func=cmd_rank)

    verify = sub.add_parser("verify", help="run the axiom verification batteries")
    verify.add_argument("--scenario", required=True)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--sample", type=int, default=100, help="sampled config count")
    verify.add_argument("--max-outcomes", type=int, default=HARD_CAP)
    verify.add_argument("--max-levels", type=int, default=HARD_CAP)
    verify.add_argument("--unsafe-bounds", action="store_true")
    verify.add_argument("--inject-fault", action="store_true",
                        help="flip one relation entry to exercise the failure path")
    verify.add_argument("--out", default="verify-report.txt")
    verify.set_defaults(func=cmd_verify)

    convert = sub.add_parser("convert-spohn", help="convert between rankings")
    convert.add_argument("input", help="JSON file to convert")
    convert.add_argument(
        "--direction", required=True, choices=("to-possibility", "to-disbelief")
    )
    convert.add_argument("--base", default="2", help="rational base > 1")
    convert.add_argument("--out")
    convert.set_defaults(func=cmd_convert_spohn)

    example = sub.add_parser(
        "paper-example", help="print the bundled worked example with all steps"
    )
    example.set_defaults(func=cmd_paper_example)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BoundExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
