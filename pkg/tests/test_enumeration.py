import math
import random
from fractions import Fraction

import pytest

from bijfact.arrays import format_array
from bijfact.core import BijectiveMap, ComponentType, canonical_map, component_type, types_of
from bijfact.enumeration import (
    counts_for,
    enumerate_arrays,
    ratio_minima,
    scan_conjecture,
    theorem31_entry,
    theorem_types,
    verify_theorem31,
    w_table,
)
from bijfact.phi import fibers

from conftest import SHARP_T2, SHARP_T3


def test_sharpness_enumeration(sharp_d):
    got = {format_array(p): k for p, k in enumerate_arrays(sharp_d, 1)}
    assert got == {**{t: 3 for t in SHARP_T3}, **{t: 2 for t in SHARP_T2}}


def test_lexicographic_order(sharp_d):
    tops = [p.top for p, _ in enumerate_arrays(sharp_d, 1)]
    assert tops == sorted(tops) and len(tops) == 6


def test_single_label():
    assert [(p.top, k) for p, k in enumerate_arrays(BijectiveMap({1: 1}), 1)] == [((1,), 1)]
    assert w_table(ComponentType((), (1,))).counts == {1: 1}


def test_w_table_examples():
    assert w_table(ComponentType((1, 1), (2,))).counts == {2: 2, 3: 4}
    assert w_table(ComponentType((2, 2), ())).counts == {2: 2, 3: 3, 4: 1}


def test_bad_anchor(sharp_d):
    with pytest.raises(ValueError):
        list(enumerate_arrays(sharp_d, 5))


def test_prefix_partition_sums(sharp_d):
    D = canonical_map(ComponentType((2, 1), (2, 1)))
    whole = counts_for(D, 1)
    parts = {}
    for y in range(2, 7):
        for p, k in enumerate_arrays(D, 1, (y,)):
            parts[k] = parts.get(k, 0) + 1
    assert dict(sorted(parts.items())) == whole
    assert counts_for(D, 1, workers=2) == whole


@pytest.mark.parametrize("n", range(1, 8))
def test_row_conservation(n):
    for t in types_of(n):
        assert w_table(t).total() == math.factorial(n - 1)


def test_relabeling_invariance():
    rng = random.Random(2024)
    for _ in range(40):
        n = rng.randint(2, 7)
        t = rng.choice(list(types_of(n)))
        D = canonical_map(t)
        labels = sorted(D.domain | D.codomain)
        fresh = rng.sample(range(1, 40), len(labels))
        ren = dict(zip(labels, fresh))
        D2 = BijectiveMap({ren[a]: ren[b] for a, b in D.pairs})
        assert component_type(D2) == t
        x = rng.choice(sorted(D2.codomain))
        assert counts_for(D2, x) == w_table(t).counts


@pytest.mark.parametrize("n", range(3, 8))
def test_maximum_attained(n):
    for t in types_of(n):
        top = w_table(t).max_k()
        if t.num_paths >= 2:
            assert top == t.max_components
            assert min(w_table(t).counts) >= t.num_paths
        elif t.num_paths == 0:
            assert top == n + 1 - t.num_cycles


@pytest.mark.parametrize("n", range(2, 8))
def test_parity(n):
    mixed = False
    for t in types_of(n):
        ks = [k for k, v in w_table(t).counts.items() if v]
        if t.num_paths == 0:
            assert len({k % 2 for k in ks}) == 1
        elif t.num_paths >= 2:
            mixed = mixed or len({k % 2 for k in ks}) == 2
    if n >= 3:
        assert mixed


def test_phi_consistency():
    for n in range(3, 7):
        for t in theorem_types(n):
            fib = fibers(canonical_map(t))
            table = w_table(t)
            assert sum(len(v) for v in fib.values()) == table[t.max_components]
            assert len(fib) == table[t.max_components - 1]
            assert table[t.max_components] <= 2 * len(fib)


def test_theorem31_entry_matches_w_table():
    t = ComponentType((2, 1), (2,))
    e = theorem31_entry(t)
    table = w_table(t)
    assert (e.w_max, e.w_next) == (table[5 - 1], table[5 - 2])
    assert e.counts == table.counts and e.max_fiber <= 2 and e.mismatches == 0
    assert theorem31_entry(t, check_fibers=False).counts == table.counts


def test_verify_theorem31_small():
    rep = verify_theorem31(6)
    assert rep.ok
    sharp = {str(e.ctype) for e in rep.witnesses}
    assert "L=1,1;M=2" in sharp
    e = next(e for e in rep.entries if str(e.ctype) == "L=2,2;M=-")
    assert e.ratio == Fraction(3, 1)
    assert verify_theorem31(6, workers=2).entries == rep.entries
    with pytest.raises(ValueError):
        verify_theorem31(2)


def test_scan_conjecture_small():
    reps = list(scan_conjecture(5))
    first = next(r for r in reps if str(r.ctype) == "L=1,1;M=2" and r.k == 2)
    assert first.ratio == Fraction(1, 2) and first.small_n
    assert all(r.w_next > 0 for r in reps)
    per_n, best = ratio_minima(reps)
    assert best.ratio == Fraction(1, 2)
    assert set(per_n) == {3, 4, 5}
