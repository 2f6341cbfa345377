"""Randomized suites checking the relationship between graded maps and credal sets."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Dict

from .bridge import R, check_oplax, encode_recover_roundtrip, kan_witness, phi, star_compose
from .credal import kl_compose
from .errors import ImpError
from .random_instances import random_composable_pair, random_equal_image_pair, random_graded


@dataclass
class OracleReport:
    which: str
    seed: int
    count: int
    passed: int = 0
    failures: list = field(default_factory=list)
    stats: Dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.passed == self.count

    def to_json(self):
        return {"which": self.which, "seed": self.seed, "count": self.count,
                "passed": self.passed, "ok": self.ok, "stats": self.stats,
                "failures": self.failures[:10]}


def _oplax(rng, stats):
    g, f = random_composable_pair(rng)
    report = check_oplax(g, f)
    if report.strict:
        stats["strict"] = stats.get("strict", 0) + 1
    return all(report.pointwise_subset)


def _star(rng, stats):
    g, f = random_composable_pair(rng, closed=True)
    return phi(star_compose(g, f)) == kl_compose(R(g), R(f)).images[0]


def _kan(rng, stats):
    f, f2 = random_equal_image_pair(rng)
    w = kan_witness(f, f2)
    stats["max_extremes"] = max(stats.get("max_extremes", 0), w.mpp.size)
    return w.validates(f, f2)


def _faithful(rng, stats):
    return encode_recover_roundtrip(random_graded(rng))


ORACLES: Dict[str, Callable] = {"oplax": _oplax, "star": _star, "kan": _kan, "faithful": _faithful}


def run_oracle(which: str, seed: int = 0, count: int = 100) -> OracleReport:
    """Run ``count`` seeded random checks of one of :data:`ORACLES`."""
    if which not in ORACLES:
        raise ValueError(f"unknown oracle {which!r}; expected one of {sorted(ORACLES)}")
    check = ORACLES[which]
    rng = random.Random(f"{which}:{seed}")
    report = OracleReport(which, seed, count)
    for i in range(count):
        try:
            ok = check(rng, report.stats)
        except ImpError as e:
            ok = False
            report.failures.append({"index": i, "error": e.to_json()})
        else:
            if not ok:
                report.failures.append({"index": i})
        report.passed += ok
    return report
