"""Shared corpus of certified systems.

The searched part follows the acceptance recipe: exhaustive enumeration over
GF(7) at d = 1, 2 and seeded random search over the rationals at d = 1..6.
Blind box draws are empty at d >= 3 (the eigenvalue recurrences cut a
measure-zero variety), so the corpus also carries frozen externally supplied
arrays of Krawtchouk type at d = 3..6; each was produced offline by solving
the bidiagonal tridiagonality conditions and is re-certified here by the
oracle before use.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import pytest

from leonard.duality import is_self_dual
from leonard.errors import ExhaustedTrials
from leonard.fields import Field
from leonard.search import SearchConfig, enumerate_prime_field, random_rational
from leonard.systems import LeonardSystem, ParameterArray, certify

GF7 = Field.prime(7)
RATIONAL = Field.rational()

# Externally supplied candidate arrays (offline-derived, oracle-verified).
FROZEN_ARRAYS = [
    {
        "field": {"kind": "rational"}, "d": 3,
        "theta": ["3/1", "1/1", "-1/1", "-3/1"],
        "theta_star": ["3/1", "1/1", "-1/1", "-3/1"],
        "varphi": ["-6/1", "-8/1", "-6/1"],
        "phi": ["6/1", "8/1", "6/1"],
    },
    {
        "field": {"kind": "rational"}, "d": 3,
        "theta": ["3/1", "1/1", "-1/1", "-3/1"],
        "theta_star": ["7/1", "3/1", "-1/1", "-5/1"],
        "varphi": ["-6/1", "-8/1", "-6/1"],
        "phi": ["18/1", "24/1", "18/1"],
    },
    {
        "field": {"kind": "rational"}, "d": 4,
        "theta": ["4/1", "2/1", "0/1", "-2/1", "-4/1"],
        "theta_star": ["4/1", "2/1", "0/1", "-2/1", "-4/1"],
        "varphi": ["-6/1", "-9/1", "-9/1", "-6/1"],
        "phi": ["10/1", "15/1", "15/1", "10/1"],
    },
    {
        "field": {"kind": "rational"}, "d": 5,
        "theta": ["5/1", "3/1", "1/1", "-1/1", "-3/1", "-5/1"],
        "theta_star": ["5/1", "3/1", "1/1", "-1/1", "-3/1", "-5/1"],
        "varphi": ["-6/1", "-48/5", "-54/5", "-48/5", "-6/1"],
        "phi": ["14/1", "112/5", "126/5", "112/5", "14/1"],
    },
    {
        "field": {"kind": "rational"}, "d": 6,
        "theta": ["6/1", "4/1", "2/1", "0/1", "-2/1", "-4/1", "-6/1"],
        "theta_star": ["6/1", "4/1", "2/1", "0/1", "-2/1", "-4/1", "-6/1"],
        "varphi": ["-6/1", "-10/1", "-12/1", "-12/1", "-10/1", "-6/1"],
        "phi": ["18/1", "30/1", "36/1", "36/1", "30/1", "18/1"],
    },
]

SEARCH_PLAN = [
    ("gf7", SearchConfig(GF7, 1, limit=8)),
    ("gf7", SearchConfig(GF7, 2, limit=4)),
    ("gf7", SearchConfig(GF7, 2, self_dual_only=True, limit=3)),
    ("rational", SearchConfig(RATIONAL, 1, limit=4, seed=11)),
    ("rational", SearchConfig(RATIONAL, 1, self_dual_only=True, limit=3, seed=5)),
    ("rational", SearchConfig(RATIONAL, 2, limit=2, seed=7, max_trials=20000)),
    ("rational", SearchConfig(RATIONAL, 2, self_dual_only=True, limit=2, seed=3, max_trials=20000)),
    ("rational", SearchConfig(RATIONAL, 3, limit=1, seed=1, max_trials=3000)),
    ("rational", SearchConfig(RATIONAL, 4, limit=1, seed=1, max_trials=2500)),
    ("rational", SearchConfig(RATIONAL, 5, limit=1, seed=1, max_trials=1500)),
    ("rational", SearchConfig(RATIONAL, 6, limit=1, seed=1, max_trials=1200)),
]


@dataclass
class Corpus:
    searched: list
    frozen: list
    elapsed: float
    random_d_run: set = field(default_factory=set)
    systems: dict = field(default_factory=dict)

    @property
    def arrays(self) -> list:
        return self.searched + self.frozen

    def system(self, pa: ParameterArray) -> LeonardSystem:
        key = id(pa)
        if key not in self.systems:
            self.systems[key] = certify(pa)
        return self.systems[key]

    @property
    def self_dual(self) -> list:
        return [pa for pa in self.arrays if is_self_dual(pa)]

    @property
    def non_self_dual(self) -> list:
        return [pa for pa in self.arrays if not is_self_dual(pa)]


def build_corpus() -> Corpus:
    start = time.monotonic()
    searched = []
    random_d_run = set()
    for kind, cfg in SEARCH_PLAN:
        if kind == "gf7":
            searched.extend(enumerate_prime_field(cfg))
        else:
            random_d_run.add(cfg.d)
            try:
                searched.extend(random_rational(cfg))
            except ExhaustedTrials as exc:
                searched.extend(exc.found)
    elapsed = time.monotonic() - start
    frozen = [ParameterArray.from_json(obj) for obj in FROZEN_ARRAYS]
    corpus = Corpus(searched, frozen, elapsed, random_d_run)
    for pa in corpus.arrays:
        corpus.system(pa)  # oracle-certify everything up front
    return corpus


@pytest.fixture(scope="session")
def corpus() -> Corpus:
    return build_corpus()
