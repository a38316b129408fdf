"""Two-row arrays and the diagonal block transposition.

A two-row array ``(s, f)`` on ``A`` and ``B`` is a top row ``s_0 ... s_{n-1}``
(a permutation of ``A``) with ``f(s_i)`` written underneath.  Reading the
columns gives the vertical map ``f: A -> B``; reading ``f(s_i)`` against the
next top element ``s_{i+1}`` (cyclically) gives the diagonal ``B -> A``.  The
cyclic top row equals diagonal o vertical.

Positions are 0-based.  A transposition triple ``(i, j, k)`` satisfies
``1 <= i <= j < k <= n-1`` so the leftmost element never moves.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .core import BijectiveMap, Component, MapError, count_components, decompose


class ArrayError(ValueError):
    pass


@dataclass(frozen=True)
class TwoRowArray:
    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "bottom", tuple(self.bottom))
        if len(self.top) != len(self.bottom) or not self.top:
            raise ArrayError("rows must be non-empty and of equal length")
        if len(set(self.top)) != len(self.top) or len(set(self.bottom)) != len(self.bottom):
            raise ArrayError("rows must not repeat labels")

    @property
    def n(self) -> int:
        return len(self.top)

    @property
    def anchor(self) -> int:
        return self.top[0]

    @property
    def vertical(self) -> BijectiveMap:
        return BijectiveMap(dict(zip(self.top, self.bottom)))

    @property
    def horizontal(self) -> BijectiveMap:
        """The long cycle ``(s_0 s_1 ... s_{n-1})`` on the top row."""
        return BijectiveMap(dict(zip(self.top, self.top[1:] + self.top[:1])))

    def num_components(self) -> int:
        return count_components(dict(zip(self.top, self.bottom)))

    def position(self, label: int) -> int:
        try:
            return self.top.index(label)
        except ValueError:
            raise ArrayError(f"label {label} is not in the top row") from None

    def __str__(self) -> str:
        return format_array(self)


class Triple(NamedTuple):
    i: int
    j: int
    k: int


def check_triple(h: Sequence[int], n: int) -> Triple:
    if len(h) != 3:
        raise ArrayError(f"a triple has three positions, got {h!r}")
    i, j, k = h
    if not (1 <= i <= j < k <= n - 1):
        raise ArrayError(f"triple {tuple(h)} violates 1 <= i <= j < k <= {n - 1}")
    return Triple(i, j, k)


def inverse_triple(h: Triple) -> Triple:
    """The triple that swaps the two relocated blocks back."""
    i, j, k = h
    return Triple(i, i + k - j - 1, k)


def from_top_and_diagonal(top: Sequence[int], D: BijectiveMap) -> TwoRowArray:
    """The unique array with top row ``top`` whose diagonal is ``D``."""
    top = tuple(top)
    if len(top) != len(D) or set(top) != D.codomain:
        raise ArrayError("top row must be a permutation of the codomain of the diagonal")
    inv = {a: b for b, a in D.pairs}
    return TwoRowArray(top, tuple(inv[a] for a in top[1:] + top[:1]))


def diagonal(psi: TwoRowArray) -> BijectiveMap:
    top = psi.top
    return BijectiveMap(dict(zip(psi.bottom, top[1:] + top[:1])))


def transpose(psi: TwoRowArray, h: Sequence[int]) -> TwoRowArray:
    """Swap the blocks ``[s_i..s_j]`` and ``[s_{j+1}..s_k]``.

    The vertical changes only at ``s_{i-1}``, ``s_j`` and ``s_k``, which are
    sent to the old images of ``s_j``, ``s_k`` and ``s_{i-1}`` respectively.
    """
    i, j, k = check_triple(h, psi.n)
    top = psi.top
    f = dict(zip(top, psi.bottom))
    a, b, c = top[i - 1], top[j], top[k]
    f[a], f[b], f[c] = f[b], f[c], f[a]
    new_top = top[:i] + top[j + 1:k + 1] + top[i:j + 1] + top[k + 1:]
    return TwoRowArray(new_top, tuple(f[x] for x in new_top))


def position_order(psi: TwoRowArray, a: int, b: int) -> int:
    """-1, 0 or 1 as ``a`` comes before, equals or comes after ``b`` in the top row."""
    pa, pb = psi.position(a), psi.position(b)
    return (pa > pb) - (pa < pb)


@dataclass(frozen=True)
class TranspositionEffect:
    """How a transposition reshapes the components touching its three elements.

    ``pattern`` is one of ``"2 paths + 1 cycle"`` (merge into two components),
    ``"1 path, split order"`` (the path meets ``s_{i-1}``, then ``s_k``, then
    ``s_j``), or a generic description of the distribution.
    """

    elements: tuple[int, int, int]
    before: tuple[Component, ...]
    after: tuple[Component, ...]
    pattern: str
    delta: int


def _distribution(comps: list[Component], elems: tuple[int, int, int]) -> str:
    where = []
    for e in elems:
        for idx, c in enumerate(comps):
            if e in c.elements[: len(c.elements) - (c.kind == "path")]:
                where.append(idx)
                break
    groups = sorted({w: where.count(w) for w in where}.items())
    parts = [f"{comps[w].kind}x{cnt}" for w, cnt in groups]
    return " | ".join(sorted(parts))


def classify_transposition(psi: TwoRowArray, h: Sequence[int]) -> TranspositionEffect:
    i, j, k = check_triple(h, psi.n)
    elems = (psi.top[i - 1], psi.top[j], psi.top[k])
    comps = decompose(psi.vertical)
    touched = tuple(c for c in comps if set(c.elements[: c.size]) & set(elems))
    out = transpose(psi, h)
    new_comps = decompose(out.vertical)
    after = tuple(c for c in new_comps if set(c.elements[: c.size]) & set(elems))
    kinds = sorted(c.kind for c in touched)
    if len(touched) == 3 and kinds == ["cycle", "path", "path"]:
        pattern = "2 paths + 1 cycle"
    elif len(touched) == 1 and touched[0].kind == "path" and _path_order(touched[0], elems):
        pattern = "1 path, split order"
    else:
        pattern = _distribution(list(touched), elems)
    return TranspositionEffect(elems, touched, after, pattern, len(new_comps) - len(comps))


def _path_order(path: Component, elems: tuple[int, int, int]) -> bool:
    idx = {x: p for p, x in enumerate(path.elements)}
    a, b, c = elems
    return idx[a] < idx[c] < idx[b]


def format_array(psi: TwoRowArray) -> str:
    width = max(len(str(v)) for v in psi.top + psi.bottom)
    row = lambda r: " ".join(str(v).rjust(width) for v in r)
    return f"{row(psi.top)} / {row(psi.bottom)}"


def parse_array(text: str) -> TwoRowArray:
    """Parse ``"1 2 3 4 / 5 4 3 6"`` (rows may also be newline separated)."""
    rows = re.split(r"/|\n", text.strip())
    rows = [r for r in rows if r.strip()]
    if len(rows) != 2:
        raise ArrayError(f"expected two rows in {text!r}")
    try:
        top, bottom = (tuple(int(v) for v in r.split()) for r in rows)
    except ValueError:
        raise ArrayError(f"non-integer label in {text!r}") from None
    return TwoRowArray(top, bottom)


def parse_triple(text: str) -> Triple:
    m = re.fullmatch(r"\s*\(?\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)?\s*", text)
    if not m:
        raise ArrayError(f"malformed triple {text!r}")
    return Triple(*(int(g) for g in m.groups()))


def format_triple(h: Sequence[int]) -> str:
    return "({},{},{})".format(*h)


__all__ = [
    "ArrayError",
    "MapError",
    "TranspositionEffect",
    "Triple",
    "TwoRowArray",
    "check_triple",
    "classify_transposition",
    "diagonal",
    "format_array",
    "format_triple",
    "from_top_and_diagonal",
    "inverse_triple",
    "parse_array",
    "parse_triple",
    "position_order",
    "transpose",
]
