import pytest

from bijfact.arrays import parse_array, transpose
from bijfact.core import ComponentType, canonical_map, parse_map
from bijfact.enumeration import enumerate_arrays, theorem_types
from bijfact.phi import (
    CASE_I,
    CASE_II,
    PhiDomainError,
    _path_from,
    _verified,
    case_i_postcondition,
    case_ii_candidates,
    fibers,
    phi,
    preimages_direct,
    preimages_oracle,
)

from conftest import SHARP_T2, SHARP_T3


def levels(D):
    arrays = list(enumerate_arrays(D, 1))
    kmax = max(k for _, k in arrays)
    return [p for p, k in arrays if k == kmax], [p for p, k in arrays if k == kmax - 1], kmax


def test_forward_examples(sharp_d):
    image, case = phi(parse_array("1 2 3 4 / 5 4 3 6"), sharp_d)
    assert image == parse_array("1 3 2 4 / 4 5 3 6")
    assert (case.tag, case.m, tuple(case.triple)) == (CASE_I, 3, (1, 1, 2))
    image, case = phi(parse_array("1 3 4 2 / 4 3 5 6"), sharp_d)
    assert image == parse_array("1 4 2 3 / 3 5 4 6")
    assert (case.tag, case.m) == (CASE_II, 3)


def test_sharpness_fixture_two_to_one(sharp_d):
    images = {}
    for text in SHARP_T3:
        image, _ = phi(parse_array(text), sharp_d)
        images.setdefault(str(image), set()).add(text)
    assert set(images) == set(SHARP_T2)
    assert all(len(v) == 2 for v in images.values())


def test_preimage_examples(sharp_d):
    a, b = (parse_array(t) for t in SHARP_T2)
    expect_a = {parse_array("1 2 3 4 / 5 4 3 6"), parse_array("1 4 3 2 / 3 4 5 6")}
    expect_b = {parse_array("1 2 4 3 / 5 3 4 6"), parse_array("1 3 4 2 / 4 3 5 6")}
    assert preimages_direct(a, sharp_d) == expect_a == preimages_oracle(a, sharp_d)
    assert preimages_direct(b, sharp_d) == expect_b == preimages_oracle(b, sharp_d)


def test_empty_fiber_exists():
    # some next-to-maximal arrays have no preimage at all
    D = canonical_map(ComponentType((2, 2), ()))
    empty = [p for p, pre in fibers(D).items() if not pre]
    assert empty
    for p in empty[:5]:
        assert preimages_direct(p, D) == set() == preimages_oracle(p, D)


def test_direct_matches_oracle_all_paths():
    D = canonical_map(ComponentType((2, 2), ()))
    _, below, _ = levels(D)
    for p in below:
        assert preimages_direct(p, D) == preimages_oracle(p, D)


def test_domain_errors(sharp_d):
    with pytest.raises(PhiDomainError):
        phi(parse_array("1 3 2 4 / 4 5 3 6"), sharp_d)  # not maximal
    with pytest.raises(PhiDomainError):
        phi(parse_array("2 1 3 4 / 6 4 3 5"), sharp_d)  # wrong anchor
    with pytest.raises(PhiDomainError):
        preimages_direct(parse_array("1 2 3 4 / 5 4 3 6"), sharp_d)  # maximal, not one below
    one_path = parse_map("5->1; (2 3); (4)")
    with pytest.raises(PhiDomainError):
        phi(parse_array("1 2 3 4 / 5 4 3 2"), one_path)
    relabeled = parse_map("6->3; 5->4; (1 2)")
    with pytest.raises(PhiDomainError):
        phi(parse_array("1 2 3 4 / 2 5 6 1"), relabeled)


def sweep(n_max):
    for n in range(3, n_max + 1):
        for t in theorem_types(n):
            yield t, canonical_map(t)


@pytest.mark.parametrize("n", range(3, 8))
def test_well_defined_and_fibers(n):
    for t, D in sweep(n):
        if t.n != n:
            continue
        top, below, kmax = levels(D)
        assert kmax == t.max_components
        groups = {p: set() for p in below}
        for psi in top:
            image, case = phi(psi, D)
            assert image.num_components() == kmax - 1
            assert image.anchor == 1
            assert image in groups
            groups[image].add(psi)
            assert case_i_postcondition(psi)
        for p, pre in groups.items():
            assert len(pre) <= 2
            assert preimages_direct(p, D) == pre


@pytest.mark.parametrize("n", range(4, 8))
def test_path_out_of_one_climbs(n):
    """On a next-to-maximal array each step along the path from 1 moves right.

    A step to the left would give a split transposition on (1, x, f(x)) and
    two extra components, beyond the maximum.
    """
    for t, D in sweep(n):
        if t.n != n:
            continue
        _, below, kmax = levels(D)
        for p in below:
            f = dict(zip(p.top, p.bottom))
            walk = [1] + _path_from(f, 1)
            pos = [p.top.index(x) for x in walk]
            assert pos == sorted(pos)
            for x in walk[1:]:
                if f[x] in f and p.top.index(f[x]) < p.top.index(x):
                    h = (1, p.top.index(f[x]), p.top.index(x))
                    assert transpose(p, h).num_components() == kmax + 1


@pytest.mark.parametrize("n", range(4, 8))
def test_second_case_ii_candidate_never_verifies(n):
    for t, D in sweep(n):
        if t.n != n:
            continue
        _, below, kmax = levels(D)
        for p in below:
            verified = [m for m in case_ii_candidates(p) if _verified(p, CASE_II, m, kmax)]
            assert len(verified) <= 1


def test_integer_minimum_would_break_the_bound():
    """Choosing m as the smallest cycle label by value, not by position, gives larger fibers."""
    from bijfact.arrays import Triple
    from bijfact.phi import _cycle_labels

    worst = 0
    for t, D in sweep(6):
        counts = {}
        for psi, k in enumerate_arrays(D, 1):
            if k != t.max_components:
                continue
            m = min(_cycle_labels(dict(zip(psi.top, psi.bottom))))
            p2, pm = psi.top.index(2), psi.top.index(m)
            image = transpose(psi, Triple(1, min(p2, pm), max(p2, pm)))
            counts[image] = counts.get(image, 0) + 1
        worst = max(worst, max(counts.values()))
    assert worst > 2
