"""Label-free cycles in products of a permutation with long cycles.

For a permutation ``D`` of ``[n]`` and a label set ``E``, count the cycles of
``D o gamma`` that avoid ``E`` as ``gamma`` runs over all ``(n-1)!`` long
cycles.  Replacing each ``E``-label by a fresh label turns the question into
one about arrays whose diagonal is the punctured map, which is what
:func:`verify_reduction` checks.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field

from .core import BijectiveMap, ComponentType, MapError, component_type, decompose, partitions
from .enumeration import counts_for

EXHAUSTIVE_LIMIT = 10


@dataclass(frozen=True)
class TrackInstance:
    D: BijectiveMap
    E: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "E", frozenset(self.E))
        n = len(self.D)
        if self.D.domain != frozenset(range(1, n + 1)) or not self.D.is_permutation():
            raise MapError("D must be a permutation of 1..n")
        if len(self.E) < 2:
            raise MapError("E needs at least two labels")
        if not self.E <= self.D.domain:
            raise MapError("E must be a subset of 1..n")

    @property
    def n(self) -> int:
        return len(self.D)

    @property
    def hypothesis(self) -> bool:
        """D has an E-free cycle of length > 1, or a cycle mixing E and non-E labels."""
        for c in decompose(self.D):
            inside = self.E & set(c.elements)
            if not inside and len(c.elements) > 1:
                return True
            if inside and len(inside) < len(c.elements):
                return True
        return False


@dataclass(frozen=True)
class TrackReport:
    theta: int
    histogram: dict[int, int]
    hypothesis: bool


def long_cycles(n: int):
    """All ``(n-1)!`` cyclic permutations of ``[n]`` as dicts, starting the cycle at 1."""
    for tail in itertools.permutations(range(2, n + 1)):
        cyc = (1,) + tail
        yield dict(zip(cyc, cyc[1:] + cyc[:1]))


def products(D: BijectiveMap) -> list[BijectiveMap]:
    """``D o gamma`` (``gamma`` applied first) for every long cycle ``gamma``."""
    d = D.table
    return [BijectiveMap({x: d[g[x]] for x in g}) for g in long_cycles(len(D))]


def free_cycles(p: dict[int, int], E: frozenset[int]) -> int:
    seen = set()
    count = 0
    for start in p:
        if start in seen:
            continue
        clean = True
        x = start
        while x not in seen:
            seen.add(x)
            clean = clean and x not in E
            x = p[x]
        count += clean
    return count


def track_counts(inst: TrackInstance, force: bool = False) -> TrackReport:
    n = inst.n
    if n > EXHAUSTIVE_LIMIT and not force:
        raise ValueError(f"n={n} is above the exhaustive limit {EXHAUSTIVE_LIMIT}; pass force=True")
    d = inst.D.table
    hist: Counter = Counter()
    for g in long_cycles(n):
        hist[free_cycles({x: d[g[x]] for x in g}, inst.E)] += 1
    histogram = dict(sorted(hist.items(), reverse=True))
    return TrackReport(max(histogram), histogram, inst.hypothesis)


def puncture(inst: TrackInstance) -> BijectiveMap:
    """``D'`` on ``([n] - E) | {n+1, n+2, ...}`` with ``D'(n+i) = D(a_i)`` for ``E = {a_1 < a_2 < ...}``."""
    n = inst.n
    d = inst.D.table
    table = {x: d[x] for x in d if x not in inst.E}
    for i, a in enumerate(sorted(inst.E)):
        table[n + 1 + i] = d[a]
    return BijectiveMap(table)


def punctured_type(inst: TrackInstance) -> ComponentType:
    return component_type(puncture(inst))


def theta(inst: TrackInstance) -> int:
    t = punctured_type(inst)
    return inst.n - t.num_cycles - len(inst.E)


@dataclass
class ReductionReport:
    instance: TrackInstance
    ctype: ComponentType
    histogram: dict[int, int]
    w_counts: dict[int, int]
    theta_formula: int
    theta_observed: int
    findings: list[str] = field(default_factory=list)

    @property
    def type_condition(self) -> bool:
        return 2 <= self.ctype.num_paths < self.ctype.max_components

    @property
    def inequality(self) -> bool | None:
        """The ``theta-1`` level holds at least half as many products as level ``theta``;
        ``None`` when the instance falls outside the hypothesis."""
        if not self.instance.hypothesis:
            return None
        h = self.histogram
        return 2 * h.get(self.theta_observed - 1, 0) >= h[self.theta_observed]

    @property
    def ok(self) -> bool:
        return not self.findings


def verify_reduction(inst: TrackInstance, force: bool = False) -> ReductionReport:
    report = track_counts(inst, force)
    Dp = puncture(inst)
    t = component_type(Dp)
    w = counts_for(Dp, 1)
    ell = len(inst.E)
    out = ReductionReport(inst, t, report.histogram, w, theta(inst), report.theta)
    findings = out.findings
    for j in sorted(set(report.histogram) | {k - ell for k in w}):
        if report.histogram.get(j, 0) != w.get(ell + j, 0):
            findings.append(
                f"level {j}: {report.histogram.get(j, 0)} products vs {w.get(ell + j, 0)} arrays"
            )
    if out.theta_formula != out.theta_observed:
        findings.append(f"theta formula {out.theta_formula} != observed {out.theta_observed}")
    if inst.hypothesis != out.type_condition:
        findings.append(f"hypothesis {inst.hypothesis} but type condition {out.type_condition}")
    if out.inequality is False:
        findings.append("fewer than half as many products one level below the maximum")
    return out


def _necklace(bits: tuple[int, ...]) -> tuple[int, ...]:
    return min(bits[i:] + bits[:i] for i in range(len(bits)))


def cycle_type_permutation(shape: tuple[int, ...]) -> BijectiveMap:
    """Permutation with consecutive cycles of the given lengths."""
    cycles, nxt = [], 1
    for size in shape:
        cycles.append(tuple(range(nxt, nxt + size)))
        nxt += size
    return BijectiveMap.from_cycles(cycles, nxt - 1)


def instances(n: int, dedupe: bool = True):
    """``TrackInstance`` for every cycle type of ``[n]`` and every ``E`` with ``|E| >= 2``.

    With ``dedupe`` only one ``E`` is kept per pattern up to rotating each
    cycle and permuting cycles of equal length.
    """
    for shape in partitions(n):
        D = cycle_type_permutation(shape)
        cycles = [c.elements for c in decompose(D)]
        seen = set()
        for size in range(2, n + 1):
            for E in itertools.combinations(range(1, n + 1), size):
                Es = frozenset(E)
                if dedupe:
                    key = tuple(sorted(
                        (len(c), _necklace(tuple(int(x in Es) for x in c))) for c in cycles
                    ))
                    if key in seen:
                        continue
                    seen.add(key)
                yield TrackInstance(D, Es)


def total_products(n: int) -> int:
    return math.factorial(n - 1)
