"""Exhaustive enumeration of arrays with a fixed diagonal, and the sweeps built on it."""
from __future__ import annotations

import itertools
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .arrays import TwoRowArray
from .core import BijectiveMap, ComponentType, canonical_map, count_components, types_of


def _rest(D: BijectiveMap, x: int, prefix: Sequence[int]) -> list[int]:
    labels = D.codomain
    if x not in labels:
        raise ValueError(f"anchor {x} is not in the codomain of the diagonal")
    if not set(prefix) <= labels - {x} or len(set(prefix)) != len(prefix):
        raise ValueError(f"bad top-row prefix {tuple(prefix)}")
    return sorted(labels - {x} - set(prefix))


def _tops(D: BijectiveMap, x: int, prefix: Sequence[int] = ()) -> Iterator[tuple[int, ...]]:
    head = (x, *prefix)
    for tail in itertools.permutations(_rest(D, x, prefix)):
        yield head + tail


def enumerate_arrays(
    D: BijectiveMap, x: int, prefix: Sequence[int] = ()
) -> Iterator[tuple[TwoRowArray, int]]:
    """Every array with diagonal ``D`` and leftmost label ``x``, with its component count.

    Top rows are produced in lexicographic order of ``s_1 s_2 ...``.
    ``prefix`` pins ``s_1 ... s_p`` so the space can be split between workers.
    """
    inv = {a: b for b, a in D.pairs}
    for top in _tops(D, x, prefix):
        bottom = tuple(inv[a] for a in top[1:] + top[:1])
        yield TwoRowArray(top, bottom), count_components(dict(zip(top, bottom)))


def count_by_components(D: BijectiveMap, x: int, prefix: Sequence[int] = ()) -> Counter:
    """``Counter`` of component counts over :func:`enumerate_arrays` (no array objects built)."""
    inv = {a: b for b, a in D.pairs}
    out: Counter = Counter()
    for top in _tops(D, x, prefix):
        out[count_components({a: inv[b] for a, b in zip(top, top[1:] + top[:1])})] += 1
    return out


def _count_job(args):
    D, x, prefix = args
    return count_by_components(D, x, prefix)


@dataclass(frozen=True)
class WTable:
    ctype: ComponentType
    counts: dict[int, int]

    @property
    def n(self) -> int:
        return self.ctype.n

    def __getitem__(self, k: int) -> int:
        return self.counts.get(k, 0)

    def total(self) -> int:
        return sum(self.counts.values())

    def max_k(self) -> int:
        return max(k for k, v in self.counts.items() if v)


def counts_for(D: BijectiveMap, x: int, workers: int = 1) -> dict[int, int]:
    """Component-count histogram over all arrays with diagonal ``D`` anchored at ``x``.

    With ``workers > 1`` the top rows are split on ``s_1`` and the partial
    counts summed, which gives the same result in any completion order.
    """
    if workers <= 1 or len(D) < 3:
        total = count_by_components(D, x)
    else:
        jobs = [(D, x, (y,)) for y in sorted(D.codomain - {x})]
        total = Counter()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_count_job, jobs):
                total.update(part)
    return dict(sorted(total.items()))


def w_table(t: ComponentType, workers: int = 1) -> WTable:
    return WTable(t, counts_for(canonical_map(t), 1, workers))


def _map_types(fn, types: Iterable[ComponentType], workers: int) -> Iterator:
    types = list(types)
    if workers <= 1:
        yield from map(fn, types)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(fn, types, chunksize=4)


def theorem_types(n: int) -> list[ComponentType]:
    """Types ``(lam, mu)`` of size ``n`` with ``2 <= len(lam) < n - len(mu)``."""
    return [t for t in types_of(n, 2) if t.num_paths < t.max_components]


@dataclass(frozen=True)
class Theorem31Entry:
    ctype: ComponentType
    w_max: int
    w_next: int
    total: int
    max_fiber: int | None = None
    mismatches: int | None = None
    counts: dict[int, int] = field(default_factory=dict)

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.w_next, self.w_max)

    @property
    def violation(self) -> bool:
        return 2 * self.w_next < self.w_max

    @property
    def sharp(self) -> bool:
        return 2 * self.w_next == self.w_max

    @property
    def conserved(self) -> bool:
        return self.total == math.factorial(self.ctype.n - 1)


def theorem31_entry(t: ComponentType, check_fibers: bool = True) -> Theorem31Entry:
    """Counts at the top two levels for one type, plus the fiber audit of the map.

    The fiber audit applies the map to every maximal array, groups the
    images, and compares each group with :func:`preimages_direct`.
    """
    from .phi import _phi, _preimages_direct

    D = canonical_map(t)
    top = t.max_components
    if not check_fibers:
        counts = counts_for(D, 1)
        return Theorem31Entry(t, counts.get(top, 0), counts.get(top - 1, 0), sum(counts.values()),
                              counts=counts)
    counts: Counter = Counter()
    groups: dict[TwoRowArray, set[TwoRowArray]] = {}
    for psi, k in enumerate_arrays(D, 1):
        counts[k] += 1
        if k == top - 1:
            groups.setdefault(psi, set())
        elif k == top:
            image = _phi(psi)[0]
            groups.setdefault(image, set()).add(psi)
    mismatches = 0
    for psi2, pre in groups.items():
        if _preimages_direct(psi2, top) != pre:
            mismatches += 1
    max_fiber = max((len(v) for v in groups.values()), default=0)
    counts = dict(sorted(counts.items()))
    return Theorem31Entry(t, counts.get(top, 0), counts.get(top - 1, 0), sum(counts.values()),
                          max_fiber, mismatches, counts)


def _entry_with_fibers(t):
    return theorem31_entry(t, True)


def _entry_plain(t):
    return theorem31_entry(t, False)


@dataclass
class Theorem31Report:
    entries: list[Theorem31Entry]

    @property
    def violations(self) -> list[Theorem31Entry]:
        return [e for e in self.entries if e.violation]

    @property
    def witnesses(self) -> list[Theorem31Entry]:
        return [e for e in self.entries if e.sharp]

    @property
    def fiber_exceptions(self) -> list[Theorem31Entry]:
        return [e for e in self.entries
                if e.max_fiber is not None and (e.max_fiber > 2 or e.mismatches)]

    @property
    def ok(self) -> bool:
        return not self.violations and not self.fiber_exceptions and all(
            e.conserved for e in self.entries
        )


def verify_theorem31(
    n_max: int, n_min: int = 3, workers: int = 1, check_fibers: bool = True
) -> Theorem31Report:
    """Check ``2 W_{top-1} >= W_top`` for every eligible type with ``n_min <= n <= n_max``."""
    if n_max < 3:
        raise ValueError("n_max must be at least 3")
    types = [t for n in range(max(n_min, 3), n_max + 1) for t in theorem_types(n)]
    fn = _entry_with_fibers if check_fibers else _entry_plain
    return Theorem31Report(list(_map_types(fn, types, workers)))


@dataclass(frozen=True)
class RatioReport:
    ctype: ComponentType
    k: int
    w_k: int
    w_next: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.w_k, self.w_next)

    @property
    def small_n(self) -> bool:
        """True for ``n <= 6``, below the size range the inequality is claimed for."""
        return self.ctype.n <= 6


def _ratios(t: ComponentType) -> list[RatioReport]:
    table = w_table(t)
    top = max(table.counts)
    return [
        RatioReport(t, k, table[k], table[k + 1])
        for k in range(t.num_paths, top)
        if table[k + 1] > 0
    ]


def scan_conjecture(n_max: int, n_min: int = 2, workers: int = 1) -> Iterator[RatioReport]:
    """Ratios ``W_k / W_{k+1}`` for every type with at least two paths and ``k >= len(lam)``.

    Levels with ``W_{k+1} = 0`` are skipped.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    types = [t for n in range(max(n_min, 2), n_max + 1) for t in types_of(n, 2)]
    for batch in _map_types(_ratios, types, workers):
        yield from batch


def ratio_minima(reports: Iterable[RatioReport]) -> tuple[dict[int, RatioReport], RatioReport | None]:
    """Smallest ratio per ``n`` and overall (ties keep the first report seen)."""
    per_n: dict[int, RatioReport] = {}
    best = None
    for r in reports:
        cur = per_n.get(r.ctype.n)
        if cur is None or r.ratio < cur.ratio:
            per_n[r.ctype.n] = r
        if best is None or r.ratio < best.ratio:
            best = r
    return dict(sorted(per_n.items())), best
