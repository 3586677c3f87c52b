import itertools
import random

import pytest

from weakschur import (
    Kind,
    Partition,
    Violation,
    WeakPair,
    brute_force_check,
    check_subset,
    enumerate_weak_pairs,
    make_partition,
    verify_partition,
)


def proto6():
    return make_partition(6, [[1, 2, 6], [3, 4, 5]], Kind.WEAK)


def proto21():
    return make_partition(
        21, [[1, 2, 4, 8, 21], [3, 5, 6, 7, 18, 19, 20], list(range(9, 18))], Kind.WEAK
    )


# ---------------------------------------------------------------- check_subset

def test_check_subset_weak_prototype_block():
    assert check_subset([1, 2, 6], 6, Kind.WEAK) == []


def test_check_subset_smallest_distinct_triple():
    assert check_subset([1, 2, 3], 3, Kind.WEAK) == [Violation(1, 1, 2, 3, True)]


def test_check_subset_kind_split_on_doubling():
    assert check_subset([2, 4], 4, Kind.STRONG) == [Violation(1, 2, 2, 4, False)]
    assert check_subset([2, 4], 4, Kind.WEAK) == []


def test_check_subset_strong_prototype_block():
    assert check_subset([3, 4, 5], 6, Kind.STRONG) == []


def test_check_subset_reports_all_triples_sorted():
    got = check_subset([1, 2, 3, 4, 5], 5, Kind.STRONG, subset_id=7)
    assert got == [
        Violation(7, 1, 1, 2, False),
        Violation(7, 1, 2, 3, True),
        Violation(7, 1, 3, 4, True),
        Violation(7, 1, 4, 5, True),
        Violation(7, 2, 2, 4, False),
        Violation(7, 2, 3, 5, True),
    ]


def test_check_subset_rejects_bad_input():
    with pytest.raises(ValueError, match="empty"):
        check_subset([], 5, Kind.WEAK)
    with pytest.raises(ValueError, match="outside"):
        check_subset([1, 9], 5, Kind.WEAK)


# ------------------------------------------------------------ verify_partition

def test_prototype_6_is_weak_valid():
    report = verify_partition(proto6(), Kind.WEAK)
    assert report.valid
    assert report.violations == ()
    assert report.coverage_defects == ()


def test_prototype_21_is_weak_valid():
    assert verify_partition(proto21(), Kind.WEAK).valid


def test_prototype_6_fails_strong_on_its_weak_pair():
    report = verify_partition(proto6(), Kind.STRONG)
    assert not report.valid
    assert Violation(1, 1, 1, 2, False) in report.violations


def test_kind_defaults_to_partition_claim():
    assert verify_partition(proto6()).kind_checked is Kind.WEAK


def test_coverage_defects_detected_on_raw_partition():
    # Built directly, bypassing make_partition, to exercise the verifier's
    # own coverage accounting.
    gap = Partition(5, ((1, 2), (4, 5)), Kind.WEAK)
    report = verify_partition(gap, Kind.WEAK)
    assert not report.valid
    assert report.coverage_defects == (3,)

    dup = Partition(4, ((1, 2, 3), (3, 4)), Kind.WEAK)
    report = verify_partition(dup, Kind.WEAK)
    assert not report.valid
    assert report.coverage_defects == (3,)


def test_violations_collected_across_all_subsets():
    p = make_partition(9, [[1, 2, 3], [4, 5, 6, 7, 8, 9]], Kind.WEAK)
    report = verify_partition(p, Kind.STRONG)
    # subset 1: 1+1=2, 1+2=3; subset 2: 4+4=8, 4+5=9
    assert report.violations == (
        Violation(1, 1, 1, 2, False),
        Violation(1, 1, 2, 3, True),
        Violation(2, 4, 4, 8, False),
        Violation(2, 4, 5, 9, True),
    )


def test_permuting_subsets_permutes_ids_only():
    base = make_partition(9, [[1, 2, 3], [4, 5, 6, 7, 8, 9]], Kind.WEAK)
    for perm in itertools.permutations(range(2)):
        p = make_partition(9, [base.subsets[i] for i in perm], Kind.WEAK)
        report = verify_partition(p, Kind.STRONG)
        assert report.valid == verify_partition(base, Kind.STRONG).valid
        # violation multiset per subset content is invariant
        by_content = {}
        for v in report.violations:
            by_content.setdefault(p.subsets[v.subset - 1], []).append((v.a, v.b, v.c))
        base_report = verify_partition(base, Kind.STRONG)
        base_by_content = {}
        for v in base_report.violations:
            base_by_content.setdefault(base.subsets[v.subset - 1], []).append((v.a, v.b, v.c))
        assert by_content == base_by_content


def test_strong_valid_implies_weak_valid():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(1, 40)
        r = rng.randint(1, 4)
        groups = [[] for _ in range(r)]
        for x in range(1, n + 1):
            groups[rng.randrange(r)].append(x)
        groups = [g for g in groups if g]
        p = make_partition(n, groups, Kind.WEAK)
        strong = verify_partition(p, Kind.STRONG)
        weak = verify_partition(p, Kind.WEAK)
        if strong.valid:
            assert weak.valid
        # weak violations are exactly the distinct-triple subset of strong ones
        assert set(weak.violations) == {
            Violation(v.subset, v.a, v.b, v.c, True) for v in strong.violations if v.distinct
        }


# -------------------------------------------------------- enumerate_weak_pairs

def test_prototype_6_has_single_weak_pair():
    assert enumerate_weak_pairs(proto6()) == [WeakPair(1, 1)]


def test_prototype_21_has_exactly_four_weak_pairs():
    assert enumerate_weak_pairs(proto21()) == [
        WeakPair(1, 1),
        WeakPair(1, 2),
        WeakPair(1, 4),
        WeakPair(2, 3),
    ]


def test_pair_split_across_subsets_not_counted():
    p = make_partition(2, [[1], [2]], Kind.WEAK)
    assert enumerate_weak_pairs(p) == []


def test_weak_pair_is_a_nondistinct_strong_violation_and_nothing_else():
    p = proto21()
    strong = verify_partition(p, Kind.STRONG)
    pair_triples = {
        Violation(pair.subset, pair.a, pair.a, 2 * pair.a, False)
        for pair in enumerate_weak_pairs(p)
    }
    assert set(strong.violations) == pair_triples
    assert verify_partition(p, Kind.WEAK).violations == ()


# ----------------------------------------------------------- brute_force_check

def test_brute_force_examples():
    assert brute_force_check([1, 2, 6], Kind.WEAK) is True
    assert brute_force_check([1, 2, 3], Kind.WEAK) is False
    assert brute_force_check([2, 4], Kind.STRONG) is False
    assert brute_force_check([2, 4], Kind.WEAK) is True


def test_brute_force_guard():
    with pytest.raises(ValueError, match="guard"):
        brute_force_check(range(1, 2500), Kind.WEAK)


def test_oracle_equivalence_exhaustive_small():
    for bits in range(1, 1 << 12):
        subset = [x for x in range(1, 13) if (bits >> (x - 1)) & 1]
        for kind in (Kind.WEAK, Kind.STRONG):
            fast = not check_subset(subset, 12, kind)
            assert fast == brute_force_check(subset, kind), (subset, kind)


def test_oracle_equivalence_random():
    rng = random.Random(23)
    for _ in range(500):
        size = rng.randint(1, 120)
        subset = sorted(rng.sample(range(1, 1001), size))
        for kind in (Kind.WEAK, Kind.STRONG):
            fast = not check_subset(subset, 1000, kind)
            assert fast == brute_force_check(subset, kind), (subset, kind)
