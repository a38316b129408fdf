"""Bijective maps between label sets and their path/cycle decompositions.

Labels are plain positive integers.  A :class:`BijectiveMap` ``f: A -> B``
induces a functional graph on ``A | B`` with an edge ``x -> f(x)``; every
connected component of that graph is either a directed cycle (living in
``A & B``) or a directed path running from ``A - B`` into ``B - A``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence


class MapError(ValueError):
    pass


@dataclass(frozen=True)
class BijectiveMap:
    """A one-to-one assignment ``domain -> codomain`` of integer labels."""

    pairs: tuple[tuple[int, int], ...]
    _table: dict = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, pairs: Mapping[int, int] | Sequence[tuple[int, int]]):
        items = dict(pairs)
        if len(items) == 0:
            raise MapError("a bijective map needs at least one label")
        if len(set(items.values())) != len(items):
            raise MapError("map is not injective")
        for x, y in items.items():
            if not (isinstance(x, int) and isinstance(y, int)) or x < 1 or y < 1:
                raise MapError(f"labels must be positive integers, got {x}->{y}")
        object.__setattr__(self, "pairs", tuple(sorted(items.items())))
        object.__setattr__(self, "_table", items)

    @classmethod
    def identity(cls, n: int) -> BijectiveMap:
        return cls({i: i for i in range(1, n + 1)})

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], n: int | None = None) -> BijectiveMap:
        """Permutation given by disjoint cycles; labels up to ``n`` not listed are fixed."""
        table: dict[int, int] = {}
        for cyc in cycles:
            for a, b in zip(cyc, tuple(cyc[1:]) + tuple(cyc[:1])):
                if a in table:
                    raise MapError(f"label {a} appears in two cycles")
                table[a] = b
        top = n if n is not None else max(table, default=0)
        for i in range(1, top + 1):
            table.setdefault(i, i)
        return cls(table)

    def __call__(self, x: int) -> int:
        return self._table[x]

    def __len__(self) -> int:
        return len(self._table)

    def __hash__(self) -> int:
        return hash(self.pairs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BijectiveMap):
            return NotImplemented
        return self.pairs == other.pairs

    def __str__(self) -> str:
        return format_map(self)

    @property
    def n(self) -> int:
        return len(self._table)

    @property
    def table(self) -> dict[int, int]:
        """A fresh ``dict`` copy of the assignment."""
        return dict(self._table)

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(self._table)

    @property
    def codomain(self) -> frozenset[int]:
        return frozenset(self._table.values())

    def is_permutation(self) -> bool:
        return self.domain == self.codomain

    def inverse(self) -> BijectiveMap:
        return BijectiveMap({y: x for x, y in self._table.items()})

    def compose(self, other: BijectiveMap) -> BijectiveMap:
        """``self o other``: apply ``other`` first."""
        if other.codomain != self.domain:
            raise MapError("codomain of the inner map must equal the domain of the outer map")
        return BijectiveMap({x: self._table[y] for x, y in other._table.items()})


@dataclass(frozen=True)
class Component:
    """A directed path or cycle of a functional graph.

    Paths list their elements from starting to terminating end.  Cycles are
    rotated so that the smallest label comes first.
    """

    kind: str
    elements: tuple[int, ...]

    @property
    def size(self) -> int:
        if self.kind == "path":
            return len(self.elements) - 1
        return len(self.elements)

    def __str__(self) -> str:
        if self.kind == "path":
            return "->".join(map(str, self.elements))
        return "(" + " ".join(map(str, self.elements)) + ")"


def _rotate_min_first(cyc: list[int]) -> tuple[int, ...]:
    i = cyc.index(min(cyc))
    return tuple(cyc[i:] + cyc[:i])


def decompose(f: BijectiveMap) -> list[Component]:
    """All components of the functional graph of ``f``.

    Paths come first, ordered by their starting label, then cycles ordered by
    their smallest label.
    """
    table = f._table
    codomain = set(table.values())
    seen: set[int] = set()
    paths = []
    for start in sorted(table):
        if start in codomain:
            continue
        chain = [start]
        x = start
        while x in table:
            x = table[x]
            chain.append(x)
        seen.update(chain)
        paths.append(Component("path", tuple(chain)))
    cycles = []
    for start in sorted(table):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        x = table[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = table[x]
        cycles.append(Component("cycle", _rotate_min_first(cyc)))
    return paths + cycles


def count_components(table: Mapping[int, int]) -> int:
    """Number of components of the functional graph of ``table`` (a dict)."""
    state: dict[int, int] = {}
    total = 0
    for start in table:
        if start in state:
            continue
        x = start
        while x in table and x not in state:
            state[x] = start
            x = table[x]
        # x left the domain (path end) or hit a visited label
        if x not in table:
            if x not in state:
                state[x] = start
                total += 1
        elif state[x] == start:
            # closed a new cycle, unless the walk entered an existing path/cycle
            total += 1
    return total


@dataclass(frozen=True, order=True)
class ComponentType:
    """Sorted path sizes ``lam`` and cycle sizes ``mu`` of a bijective map."""

    lam: tuple[int, ...]
    mu: tuple[int, ...]

    def __post_init__(self):
        for name, seq in (("lam", self.lam), ("mu", self.mu)):
            seq = tuple(seq)
            object.__setattr__(self, name, seq)
            if any((not isinstance(v, int)) or v < 1 for v in seq):
                raise MapError(f"{name} must hold positive integers: {seq}")
            if any(a < b for a, b in zip(seq, seq[1:])):
                raise MapError(f"{name} must be non-increasing: {seq}")
        if self.n < 1:
            raise MapError("component-type of an empty map")

    @property
    def n(self) -> int:
        return sum(self.lam) + sum(self.mu)

    @property
    def num_paths(self) -> int:
        return len(self.lam)

    @property
    def num_cycles(self) -> int:
        return len(self.mu)

    @property
    def max_components(self) -> int:
        """``n - len(mu)``, the largest vertical component count when there are two or more paths."""
        return self.n - len(self.mu)

    def __str__(self) -> str:
        def part(seq):
            return ",".join(map(str, seq)) if seq else "-"

        return f"L={part(self.lam)};M={part(self.mu)}"

    @classmethod
    def parse(cls, text: str) -> ComponentType:
        """Parse ``"L=2,2;M=3,1"`` (``-`` or nothing for an empty sequence)."""
        m = re.fullmatch(r"\s*L\s*=\s*([-\d,\s]*);\s*M\s*=\s*([-\d,\s]*)", text)
        if not m:
            raise MapError(f"malformed component-type {text!r}")

        def seq(s):
            s = s.strip()
            if s in ("", "-"):
                return ()
            try:
                return tuple(int(v) for v in s.split(","))
            except ValueError:
                raise MapError(f"malformed component-type {text!r}") from None

        return cls(seq(m.group(1)), seq(m.group(2)))


def component_type(f: BijectiveMap) -> ComponentType:
    lam, mu = [], []
    for comp in decompose(f):
        (lam if comp.kind == "path" else mu).append(comp.size)
    return ComponentType(tuple(sorted(lam, reverse=True)), tuple(sorted(mu, reverse=True)))


def canonical_map(t: ComponentType) -> BijectiveMap:
    """Deterministic ``D: B -> [n]`` of component-type ``t``.

    Labels ``1..len(lam)`` are the terminating ends of the paths and
    ``n+1, n+2, ...`` their starting ends.  Cycles take the smallest remaining
    labels of ``[n]`` in ``mu`` order, then path interiors in ``lam`` order.
    """
    n = t.n
    ell = len(t.lam)
    free = iter(range(ell + 1, n + 1))
    table: dict[int, int] = {}
    for size in t.mu:
        cyc = [next(free) for _ in range(size)]
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            table[a] = b
    for idx, size in enumerate(t.lam):
        chain = [n + 1 + idx] + [next(free) for _ in range(size - 1)] + [idx + 1]
        for a, b in zip(chain, chain[1:]):
            table[a] = b
    return BijectiveMap(table)


def partitions(total: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Integer partitions of ``total`` in reverse lexicographic order."""
    if largest is None:
        largest = total
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in partitions(total - first, first):
            yield (first,) + rest


def types_of(n: int, min_paths: int = 0) -> Iterator[ComponentType]:
    """Every ``(lam, mu)`` with ``|lam| + |mu| = n`` and at least ``min_paths`` paths.

    Ordered by ``|lam|`` ascending, then ``lam`` and ``mu`` in reverse
    lexicographic order.
    """
    if n < 1:
        raise MapError("n must be positive")
    for a in range(n + 1):
        for lam in partitions(a):
            if len(lam) < min_paths:
                continue
            for mu in partitions(n - a):
                yield ComponentType(lam, mu)


_PATH_RE = re.compile(r"^\d+(\s*->\s*\d+)+$")
_CYCLE_RE = re.compile(r"^\(\s*\d+(\s+\d+)*\s*\)$")


def format_map(f: BijectiveMap) -> str:
    return "; ".join(str(c) for c in decompose(f))


def parse_map(text: str) -> BijectiveMap:
    """Parse ``"1->6; 4->5; (2 3)"`` into a map."""
    table: dict[int, int] = {}

    def put(a, b):
        if a in table:
            raise MapError(f"label {a} mapped twice in {text!r}")
        table[a] = b

    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if _PATH_RE.match(chunk):
            labels = [int(v) for v in chunk.split("->")]
            for a, b in zip(labels, labels[1:]):
                put(a, b)
        elif _CYCLE_RE.match(chunk):
            labels = [int(v) for v in chunk[1:-1].split()]
            for a, b in zip(labels, labels[1:] + labels[:1]):
                put(a, b)
        else:
            raise MapError(f"cannot parse component {chunk!r}")
    return BijectiveMap(table)


def parse_cycles(text: str, n: int | None = None) -> BijectiveMap:
    """Permutation from cycle notation such as ``"(1 2)(3 4)"``."""
    text = text.strip()
    if not re.fullmatch(r"(\(\s*\d+(\s+\d+)*\s*\)\s*)*", text):
        raise MapError(f"malformed cycle notation {text!r}")
    cycles = [tuple(int(v) for v in grp.split()) for grp in re.findall(r"\(([^)]*)\)", text)]
    return BijectiveMap.from_cycles(cycles, n)


def format_cycles(p: BijectiveMap) -> str:
    return "".join(str(c) for c in decompose(p))
