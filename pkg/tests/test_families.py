"""Family generation, counting oracles, and enumerators."""

from functools import lru_cache

import pytest

from qtcomb.families import (
    CapacityError,
    FamilySpec,
    FamilySpecError,
    bucket_index,
    generate,
    partitions,
    qt_enumerator,
    qt_enumerator_by_content,
    validate_family,
)
from qtcomb.qt import QtPolynomial


@lru_cache(maxsize=None)
def catalan(n):
    """Independent recursive counter for unlabelled paths."""
    if n == 0:
        return 1
    return sum(catalan(i) * catalan(n - 1 - i) for i in range(n))


def count_pf2_transfer(m, n):
    """Transfer-matrix count of two-car paths: state is (level, last
    label, cars used)."""
    from functools import lru_cache

    @lru_cache(maxsize=None)
    def go(i, level, last, ones):
        if i == m + n:
            return 1 if ones == n else 0
        total = 0
        for a in range(level + 2) if i else (0,):
            for lab in (1, 2):
                if i and a == level + 1 and lab <= last:
                    continue
                if lab == 1 and ones + 1 > n:
                    continue
                if lab == 2 and (i - ones) + 1 > m:
                    continue
                total += go(i + 1, a, lab, ones + (lab == 1))
        return total

    return go(0, -1, 0, 0)


def test_d_counts_match_catalan():
    for n in range(7):
        members = list(generate(FamilySpec("d", n=n)))
        assert len(members) == catalan(n)
        assert len(set(members)) == len(members)


def test_d3_has_five_members():
    assert sum(1 for _ in generate(FamilySpec("d", n=3))) == 5


def test_pf2_counts_match_transfer_matrix():
    for m in range(7):
        for n in range(7 - m):
            got = sum(1 for _ in generate(FamilySpec("pf2", m=m, n=n)))
            assert got == count_pf2_transfer(m, n), (m, n)


def test_pf2_1_1_members():
    members = list(generate(FamilySpec("pf2", m=1, n=1)))
    assert len(members) == 3
    assert qt_enumerator(FamilySpec("pf2", m=1, n=1)) == QtPolynomial(
        {(0, 0): 1, (1, 0): 1, (0, 1): 1}
    )


def test_rp_0_0():
    members = list(generate(FamilySpec("rp", m=0, n=0)))
    assert len(members) == 1
    assert str(members[0]) == "0"


def test_generated_members_validate():
    cases = [
        FamilySpec("d", n=4, k=1),
        FamilySpec("pf2", m=2, n=2, k=1),
        FamilySpec("pf2", m=1, n=2, ghost=True),
        FamilySpec("catalan-pld", m=1, n=2),
        FamilySpec("two-shuffle", m=2, n=2, k=1),
        FamilySpec("shuffle-knm", m=2, n=2, k=1),
        FamilySpec("rp", m=2, n=2, k=1),
        FamilySpec("pld", m=1, n=2, k=1, content=(1, 1)),
    ]
    for spec in cases:
        members = list(generate(spec))
        assert members, spec
        assert len(set(members)) == len(members)
        for member in members:
            ok, why = validate_family(member, spec)
            assert ok, (spec, member, why)


def test_canonical_order():
    spec = FamilySpec("pf2", m=1, n=2, k=1)
    members = list(generate(spec))
    keys = [
        (m.area_word, m.labels, tuple(sorted(m.decorated_rises)))
        for m in members
    ]
    assert keys == sorted(keys)


def test_ld_without_content_rejected():
    with pytest.raises(FamilySpecError):
        FamilySpec("ld", n=2)


def test_pld_k_bound():
    with pytest.raises(FamilySpecError):
        FamilySpec("pld", m=1, n=2, k=2, content=(1, 1))


def test_capacity_guard():
    with pytest.raises(CapacityError):
        list(generate(FamilySpec("d", n=5), cap=3))


def test_enumerator_ghost_invariant():
    for m in range(4):
        for n in range(1 if m == 0 else 0, 5 - m):
            for k in range(min(m, n) + 1):
                a = qt_enumerator(FamilySpec("pf2", m=m, n=n, k=k))
                b = qt_enumerator(FamilySpec("pf2", m=m, n=n, k=k, ghost=True))
                assert a == b, (m, n, k)


def test_bucketed_sums_to_total():
    for m in range(4):
        for n in range(4 - m + 1):
            for sem, start in (("nonghost", 0), ("ghost", 1)):
                total = QtPolynomial.zero()
                for r in range(start, m + start + 1):
                    total += qt_enumerator(
                        FamilySpec("pf2", m=m, n=n, r=r, r_sem=sem)
                    )
                assert total == qt_enumerator(FamilySpec("pf2", m=m, n=n))


def test_two_shuffle_matches_two_car():
    # the two models carry the same (dinv, area) distribution; the
    # acceptance suite extends this to m+n <= 6 through the three-run map
    for m in range(6):
        for n in range(6 - m):
            for k in range(min(m, n) + 1):
                a = qt_enumerator(FamilySpec("two-shuffle", m=m, n=n, k=k))
                b = qt_enumerator(FamilySpec("pf2", m=m, n=n, k=k))
                assert a == b, (m, n, k)


def test_membership_examples():
    from qtcomb.paths import DecoratedLabelledPath

    single = DecoratedLabelledPath((0,), (1,))
    assert validate_family(single, FamilySpec("ld", n=1, content=(1,)))[0]
    assert validate_family(single, FamilySpec("pld", m=0, n=1, content=(1,)))[0]
    reference = DecoratedLabelledPath(
        (0, 1, 2, 1, 2, 0, 1, 1), (2, 4, 5, 1, 3, 2, 6, 1)
    )
    assert validate_family(
        reference, FamilySpec("ld", n=8, content=(2, 2, 1, 1, 1, 1))
    )[0]
    shuffle = DecoratedLabelledPath(
        (0, 1, 1, 1, 0, 1, 2, 2), (5, 8, 2, 7, 1, 3, 6, 4)
    )
    assert validate_family(shuffle, FamilySpec("shuffle-knm", m=6, n=5, k=3))[0]
    ok, why = validate_family(shuffle, FamilySpec("shuffle-knm", m=5, n=6, k=3))
    assert not ok and "shuffle" in why


def test_catalan_member_reads_canonically():
    from qtcomb.paths import DecoratedLabelledPath

    cat = DecoratedLabelledPath(
        (0, 1, 2, 2, 2, 1, 2, 3, 2, 3, 3, 3),
        (0, 1, 2, 0, 0, 0, 3, 4, 0, 5, 0, 0),
        (2, 3, 7, 8, 10),
    )
    assert cat.reading_word() == (1, 2, 3, 4, 5)
    assert validate_family(cat, FamilySpec("catalan-pld", m=6, n=5))[0]


def test_shuffle_theorem_smoke_symmetry():
    # full-content labelled paths: the enumerator is q,t-symmetric
    for n in range(1, 6):
        poly = qt_enumerator(FamilySpec("ld", n=n, content=(1,) * n))
        assert poly == poly.transpose(), n


def test_increasing_run_collapses_to_unlabelled():
    # reading word forced increasing: one labelling per unlabelled path,
    # with the unlabelled statistics
    for n in range(1, 5):
        lhs = qt_enumerator(FamilySpec("shuffle-knm", m=n, n=n, k=n))
        rhs = qt_enumerator(FamilySpec("d", n=n))
        assert lhs == rhs, n
    assert qt_enumerator(FamilySpec("shuffle-knm", m=3, n=3, k=3)) == QtPolynomial(
        {(3, 0): 1, (2, 1): 1, (1, 1): 1, (1, 2): 1, (0, 3): 1}
    )


def test_reading_word_is_permutation():
    for n in range(1, 5):
        for p in generate(FamilySpec("ld", n=n, content=(1,) * n)):
            assert sorted(p.reading_word()) == list(range(1, n + 1))


def test_enumerator_by_content():
    out = qt_enumerator_by_content(0, 1, 0)
    assert out == {(1,): QtPolynomial.one()}
    out = qt_enumerator_by_content(0, 2, 0)
    assert out[(1, 1)] == QtPolynomial({(0, 0): 1, (1, 0): 1, (0, 1): 1})
    # contents partition the family
    for m, n, k in ((1, 2, 0), (0, 3, 1)):
        total = sum(
            sum(1 for _ in generate(FamilySpec("pld" if m else "ld", m=m, n=n, k=k, content=lam)))
            for lam in partitions(n)
        )
        by = qt_enumerator_by_content(m, n, k)
        counted = sum(poly.eval(1, 1) for poly in by.values())
        assert counted == total


def test_bucket_index_semantics():
    p = next(iter(generate(FamilySpec("pf2", m=1, n=1))))
    assert bucket_index(p, "ghost") == bucket_index(p, "nonghost") + 1


def test_catalan_pld_counts_match_rp():
    for m in range(4):
        for n in range(4 - m):
            a = sum(1 for _ in generate(FamilySpec("catalan-pld", m=m, n=n)))
            b = sum(1 for _ in generate(FamilySpec("rp", m=m, n=n)))
            assert a == b, (m, n)
