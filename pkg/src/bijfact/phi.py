"""The at-most-two-to-one map from maximal to next-to-maximal arrays.

Fix a diagonal ``D: B -> [n]`` of component-type ``(lam, mu)`` with
``2 <= len(lam) < n - len(mu)`` in which labels 1 and 2 end paths.  Every
array anchored at 1 whose vertical has the maximal ``n - len(mu)``
components is sent to an array with one component fewer by transposing on
the positions of 1, 2 and ``m``, the leftmost top-row element lying on a
cycle of the vertical.  :func:`preimages_direct` inverts the map by locating
``m`` from the image alone; :func:`preimages_oracle` inverts it by brute
force.
"""
from __future__ import annotations

from dataclasses import dataclass

from .arrays import (
    ArrayError,
    Triple,
    TwoRowArray,
    diagonal,
    transpose,
)
from .core import BijectiveMap, ComponentType, component_type

CASE_I = "case_i"
CASE_II = "case_ii"


class PhiDomainError(ValueError):
    pass


@dataclass(frozen=True)
class PhiCase:
    tag: str
    m: int
    triple: Triple


def check_diagonal(D: BijectiveMap) -> ComponentType:
    """Validate ``D`` as a diagonal the map applies to and return its type."""
    t = component_type(D)
    if not 2 <= t.num_paths < t.max_components:
        raise PhiDomainError(f"type {t} needs 2 <= paths < n - cycles")
    if 1 in D.domain or 2 in D.domain or not {1, 2} <= D.codomain:
        raise PhiDomainError("labels 1 and 2 must be terminating ends of paths of the diagonal")
    return t


def _check_member(psi: TwoRowArray, D: BijectiveMap, components: int) -> None:
    if psi.anchor != 1:
        raise PhiDomainError("array must be anchored at 1")
    if diagonal(psi) != D:
        raise PhiDomainError("array does not have the given diagonal")
    if psi.num_components() != components:
        raise PhiDomainError(
            f"vertical has {psi.num_components()} components, expected {components}"
        )


def _cycle_labels(f: dict[int, int]) -> set[int]:
    """Labels of ``f`` lying on cycles (walks that never leave the domain)."""
    on_path: set[int] = set()
    for start in set(f) - set(f.values()):
        x = start
        while x in f:
            on_path.add(x)
            x = f[x]
    return set(f) - on_path


def _path_from(f: dict[int, int], start: int) -> list[int]:
    """Domain labels along the path leaving ``start``, ``start`` excluded."""
    out = []
    x = f[start]
    while x in f:
        out.append(x)
        x = f[x]
    return out


def _phi(psi: TwoRowArray) -> tuple[TwoRowArray, PhiCase]:
    top = psi.top
    f = dict(zip(top, psi.bottom))
    cycles = _cycle_labels(f)
    pos = {x: p for p, x in enumerate(top)}
    m = min(cycles, key=pos.__getitem__)
    p2, pm = pos[2], pos[m]
    if p2 < pm:
        case = PhiCase(CASE_I, m, Triple(1, p2, pm))
    else:
        case = PhiCase(CASE_II, m, Triple(1, pm, p2))
    return transpose(psi, case.triple), case


def phi(psi: TwoRowArray, D: BijectiveMap) -> tuple[TwoRowArray, PhiCase]:
    """Image of a maximal array and the case that produced it."""
    t = check_diagonal(D)
    _check_member(psi, D, t.max_components)
    return _phi(psi)


def case_i_candidates(psi2: TwoRowArray) -> list[int]:
    """Labels that may play ``m`` for a case (i) preimage, in path order.

    Empty unless every cycle label sits right of 2; otherwise the labels on
    the path out of 2 that sit left of 2.
    """
    top = psi2.top
    f = dict(zip(top, psi2.bottom))
    pos = {x: p for p, x in enumerate(top)}
    p2 = pos[2]
    if any(pos[c] < p2 for c in _cycle_labels(f)):
        return []
    return [x for x in _path_from(f, 2) if pos[x] < p2]


def case_ii_candidates(psi2: TwoRowArray) -> list[int]:
    """Labels that may play ``m`` for a case (ii) preimage, in path order.

    ``m`` sits right of 2 on the path out of 1, and the path labels between 1
    and ``m`` as well as all cycle labels sit left of 2 or right of ``m``.
    """
    top = psi2.top
    f = dict(zip(top, psi2.bottom))
    pos = {x: p for p, x in enumerate(top)}
    p2 = pos[2]
    cycles = _cycle_labels(f)
    walk = _path_from(f, 1)
    found = []
    for idx, x in enumerate(walk):
        pm = pos[x]
        if pm <= p2:
            continue
        if all(pos[y] < p2 or pos[y] > pm for y in walk[:idx]) and all(
            pos[c] < p2 or pos[c] > pm for c in cycles
        ):
            found.append(x)
    return found


def _undo(psi2: TwoRowArray, tag: str, m: int) -> TwoRowArray:
    """The array whose case-``tag`` step with this ``m`` would give ``psi2``."""
    p2, pm = psi2.top.index(2), psi2.top.index(m)
    if tag == CASE_I:
        return transpose(psi2, (1, pm, p2))
    return transpose(psi2, (1, p2, pm))


def _verified(psi2: TwoRowArray, tag: str, m: int, top_count: int) -> TwoRowArray | None:
    try:
        cand = _undo(psi2, tag, m)
    except ArrayError:
        return None
    if cand.num_components() != top_count:
        return None
    image, case = _phi(cand)
    if image == psi2 and case.tag == tag and case.m == m:
        return cand
    return None


def preimages_direct(psi2: TwoRowArray, D: BijectiveMap) -> set[TwoRowArray]:
    """Preimages located from the image's own structure, each confirmed by re-applying the map."""
    t = check_diagonal(D)
    _check_member(psi2, D, t.max_components - 1)
    return _preimages_direct(psi2, t.max_components)


def _preimages_direct(psi2: TwoRowArray, top_count: int) -> set[TwoRowArray]:
    out = set()
    # only the first candidate of each case is tried
    for tag, cands in ((CASE_I, case_i_candidates(psi2)), (CASE_II, case_ii_candidates(psi2))):
        if cands:
            cand = _verified(psi2, tag, cands[0], top_count)
            if cand is not None:
                out.add(cand)
    return out


def preimages_oracle(psi2: TwoRowArray, D: BijectiveMap) -> set[TwoRowArray]:
    """Preimages found by applying the map to every maximal array."""
    from .enumeration import enumerate_arrays

    t = check_diagonal(D)
    _check_member(psi2, D, t.max_components - 1)
    return {
        psi
        for psi, k in enumerate_arrays(D, 1)
        if k == t.max_components and _phi(psi)[0] == psi2
    }


def fibers(D: BijectiveMap, arrays=None) -> dict[TwoRowArray, list[TwoRowArray]]:
    """Map every next-to-maximal array to its list of preimages.

    ``arrays`` may supply the already enumerated ``(array, count)`` stream.
    Next-to-maximal arrays without preimages map to an empty list.
    """
    from .enumeration import enumerate_arrays

    t = check_diagonal(D)
    top_count = t.max_components
    if arrays is None:
        arrays = enumerate_arrays(D, 1)
    out: dict[TwoRowArray, list[TwoRowArray]] = {}
    maximal = []
    for psi, k in arrays:
        if k == top_count:
            maximal.append(psi)
        elif k == top_count - 1:
            out.setdefault(psi, [])
    for psi in maximal:
        image, _ = _phi(psi)
        out.setdefault(image, []).append(psi)
    return out


def case_i_postcondition(psi: TwoRowArray) -> bool:
    """After a case (i) step, every cycle label of the image sits right of 2."""
    image, case = _phi(psi)
    if case.tag != CASE_I:
        return True
    f = dict(zip(image.top, image.bottom))
    p2 = image.top.index(2)
    return all(image.top.index(c) > p2 for c in _cycle_labels(f))


def descents_between(psi2: TwoRowArray, m1: int, m2: int) -> list[int]:
    """Labels ``x`` on the path out of 1, from ``m1`` up to but excluding ``m2``,
    whose image sits left of them in the top row."""
    f = dict(zip(psi2.top, psi2.bottom))
    pos = {x: p for p, x in enumerate(psi2.top)}
    walk = _path_from(f, 1)
    a, b = walk.index(m1), walk.index(m2)
    return [x for x in walk[a:b] if f[x] in pos and pos[f[x]] < pos[x]]


__all__ = [
    "CASE_I",
    "CASE_II",
    "PhiCase",
    "PhiDomainError",
    "case_i_candidates",
    "case_i_postcondition",
    "case_ii_candidates",
    "check_diagonal",
    "descents_between",
    "fibers",
    "phi",
    "preimages_direct",
    "preimages_oracle",
]
