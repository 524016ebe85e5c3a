"""Random-restart hill climbing for configurations with many figure-eight cycles.

All randomness is drawn from :class:`random.Random` instances seeded from
explicit integers, so a (seed, budget, bound) triple replays exactly.  The
seed of every restart and every proposed move is recorded in the trace.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable

from .census import count_classes, run_census, verify_bounds
from .diagram import Cycle
from .geometry import Configuration, GeneralPositionError

log = logging.getLogger(__name__)

DEFAULT_BOUND = 100
DEFAULT_STALL = 200
DEFAULT_MAGNITUDE = 25
RETRY_LIMIT = 10_000
_MASK = (1 << 64) - 1


class RetryExhaustedError(RuntimeError):
    pass


class BoundViolation(RuntimeError):
    """A configuration with more than three figure-eight cycles; carries it for dumping."""

    def __init__(self, configuration: Configuration, count: int):
        super().__init__(f"figure-eight count {count} > 3 for {configuration.points}")
        self.configuration = configuration
        self.count = count


def derive_seed(master: int, *salt: int) -> int:
    """Deterministic 64-bit child seed (splitmix64 over the salt sequence)."""
    x = _mix(master & _MASK)
    for s in salt:
        x = _mix(x ^ (s & _MASK))
    return x


def _mix(x: int) -> int:
    z = (x + 0x9E3779B97F4A7C15) & _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def random_configuration(seed: int, bound: int = DEFAULT_BOUND, n: int = 7) -> Configuration:
    """n lattice points uniform in [-bound, bound]^3, resampled until in general position."""
    if bound < 4:
        raise ValueError("coordinate bound must be at least 4")
    rng = random.Random(seed)
    for _ in range(RETRY_LIMIT):
        pts = [[rng.randint(-bound, bound) for _ in range(3)] for _ in range(n)]
        try:
            return Configuration(pts)
        except GeneralPositionError:
            continue
    raise RetryExhaustedError(f"no general-position sample in {RETRY_LIMIT} tries")


def perturb(c: Configuration, seed: int, magnitude: int) -> Configuration:
    """Move one random vertex by an integer offset of max-norm <= magnitude."""
    if magnitude == 0:
        return c
    rng = random.Random(seed)
    base = [list(p) for p in c.int_coords] if _is_lattice(c) else [list(p) for p in c.points]
    for _ in range(RETRY_LIMIT):
        v = rng.randrange(c.n)
        offset = [rng.randint(-magnitude, magnitude) for _ in range(3)]
        pts = [p[:] for p in base]
        pts[v] = [a + b for a, b in zip(pts[v], offset)]
        try:
            return Configuration(pts)
        except GeneralPositionError:
            continue
    raise RetryExhaustedError(f"no general-position perturbation in {RETRY_LIMIT} tries")


def _is_lattice(c: Configuration) -> bool:
    return all(x.denominator == 1 for p in c.points for x in p)


def _score(c: Configuration, counts: tuple[int, int]) -> tuple:
    # higher is better: figure-eights, then trefoils, then smaller coordinates
    flat = tuple(x for p in c.points for x in p)
    return counts + (tuple(-x for x in flat),)


@dataclass
class SearchResult:
    configuration: Configuration
    figure8: int
    trefoil: int
    evaluations: int
    seed: int
    budget: int
    bound: int
    # ("restart", seed) and ("move", seed) events that were accepted, in order
    trace: list[tuple[str, int]] = field(default_factory=list)
    best_trace_len: int = 0


def search_max_fig8(budget: int, seed: int, bound: int = DEFAULT_BOUND,
                    stall: int = DEFAULT_STALL, magnitude: int = DEFAULT_MAGNITUDE,
                    target: int = 3,
                    evaluate: Callable[[Configuration], tuple[int, int]] = count_classes) -> SearchResult:
    """Hill-climb the figure-eight count; stop at ``target`` or when the budget is spent.

    Each census evaluation costs one unit of budget.  Moves that do not lower
    (figure-eight, trefoil) are accepted; ``stall`` evaluations without a
    strict improvement trigger a restart from a fresh random configuration.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    evals = 0
    restart_no = 0
    trace: list[tuple[str, int]] = []
    best = None  # (score, config, counts, trace length)

    def evaluate_checked(c):
        counts = evaluate(c)
        if counts[0] > 3:
            raise BoundViolation(c, counts[0])
        return counts

    while evals < budget:
        rseed = derive_seed(seed, 0, restart_no)
        restart_no += 1
        cur = random_configuration(rseed, bound)
        cur_counts = evaluate_checked(cur)
        evals += 1
        trace.append(("restart", rseed))
        since_improve = 0
        move_no = 0
        while True:
            score = _score(cur, cur_counts)
            if best is None or score > best[0]:
                best = (score, cur, cur_counts, len(trace))
            if cur_counts[0] >= target or evals >= budget or since_improve >= stall:
                break
            mseed = derive_seed(rseed, 1, move_no)
            move_no += 1
            cand = perturb(cur, mseed, magnitude)
            counts = evaluate_checked(cand)
            evals += 1
            if counts > cur_counts:
                since_improve = 0
            else:
                since_improve += 1
            if counts >= cur_counts:
                cur, cur_counts = cand, counts
                trace.append(("move", mseed))
        log.debug("restart %d: best so far %s after %d evaluations", restart_no, best[2], evals)
        if best[2][0] >= target:
            break
    _, config, counts, tlen = best
    return SearchResult(config, counts[0], counts[1], evals, seed, budget, bound,
                        trace, tlen)


def replay(trace: list[tuple[str, int]], bound: int = DEFAULT_BOUND,
           magnitude: int = DEFAULT_MAGNITUDE) -> Configuration:
    """Rebuild the configuration at the end of a trace prefix."""
    cur = None
    for kind, s in trace:
        if kind == "restart":
            cur = random_configuration(s, bound)
        elif kind == "move":
            if cur is None:
                raise ValueError("trace starts with a move")
            cur = perturb(cur, s, magnitude)
        else:
            raise ValueError(f"unknown trace event {kind!r}")
    if cur is None:
        raise ValueError("empty trace")
    return cur


def verify_witness(c: Configuration) -> bool:
    """True iff a fresh census finds exactly three figure-eight cycles and all bounds hold."""
    report = run_census(c)
    return report.figure8_count == 3 and all(v.passed for v in verify_bounds(report))


REFERENCE_TRIPLE = ("1234567", "1236754", "1276345")


def reference_relabeling(cycles) -> tuple[int, ...] | None:
    """A relabelling taking ``cycles`` onto the three-cycle reference pattern, if any.

    The reference is the triple of figure-eight cycles <1234567>, <1236754>,
    <1276345>.  Returns ``perm`` with ``perm[v - 1]`` the new label of ``v``.
    """
    target = {Cycle.parse(s) for s in REFERENCE_TRIPLE}
    cycles = [tuple(c.vertices) if isinstance(c, Cycle) else tuple(c) for c in cycles]
    if len(cycles) != 3:
        return None
    for perm in permutations(range(1, 8)):
        if {Cycle.of(perm[v - 1] for v in cyc) for cyc in cycles} == target:
            return perm
    return None
