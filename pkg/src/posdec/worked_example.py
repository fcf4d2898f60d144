"""Bundled worked-example data.

One scenario with four ranked prizes, a four-level uncertainty scale, two
named lotteries, a scalar configuration and a pair-valued assessment.
The transcript command additionally uses ENCODED_ASSESSMENT, which writes
every prize as its equivalent best/worst lottery (all weights on the
best-fully-possible half), so each table row shows the prize's own
standard-lottery weight pair.
"""

SCENARIO = {
    "scale_v": ["0", ".5", ".7", "1"],
    "scale_u": ["0", ".3", ".5", "1"],
    "outcomes": {
        "labels": ["x1", "x2", "x3", "x4"],
        "best": "x1",
        "worst": "x4",
        "preference": [["x1"], ["x2"], ["x3"], ["x4"]],
    },
    "lotteries": {
        "pi1": {"x1": ".7", "x2": "1", "x3": ".5", "x4": ".5"},
        "pi2": {"x1": "1", "x2": ".7", "x3": "0", "x4": "1"},
    },
    "assessment": {
        "x1": ["1", "0"],
        "x2": ["1", ".5"],
        "x3": ["1", ".7"],
        "x4": ["0", "1"],
    },
    "pessimistic_config": {
        "u": {"x1": "1", "x2": ".5", "x3": ".3", "x4": "0"},
        "n": {"1": "0", ".5": ".3", ".3": ".5", "0": "1"},
        "h": {"1": "1", ".7": ".5", ".5": ".3", "0": "0"},
    },
}

# Prize-by-prize encoding as standard lotteries; x4 sits at the bottom of
# the best-fully-possible half rather than at the anchored <0,1>.
ENCODED_ASSESSMENT = {
    "x1": ["1", "0"],
    "x2": ["1", ".5"],
    "x3": ["1", ".7"],
    "x4": ["1", "1"],
}

# A two-prize scenario exercising the tie the scalar pessimistic criterion
# produces between the sure worst prize and the both-fully-possible lottery.
ANOMALY_SCENARIO = {
    "scale_v": ["0", "1"],
    "outcomes": {
        "labels": ["good", "bad"],
        "best": "good",
        "worst": "bad",
        "preference": [["good"], ["bad"]],
    },
    "lotteries": {
        "hope": {"good": "1", "bad": "1"},
        "sure_worst": {"good": "0", "bad": "1"},
    },
    "assessment": {"good": ["1", "0"], "bad": ["0", "1"]},
    "pessimistic_config": {
        "u": {"good": "1", "bad": "0"},
        "n": {"0": "1", "1": "0"},
        "h": {"0": "0", "1": "1"},
    },
}
