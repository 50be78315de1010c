import pytest
from hypothesis import given, strategies as st

from topvertex.errors import EmptyPartition
from topvertex.partitions import (
    check_partition,
    conjugate,
    constant_k,
    diagonal,
    diagonal_s,
    format_partition,
    maya,
    mu_c,
    mu_r,
    mu_rc,
    parse_partition,
    part,
    partition_of_maya,
    surgery_identities,
)


def partitions_of(n):
    """All partitions of exactly n, as tuples."""
    if n == 0:
        yield ()
        return
    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail
    yield from rec(n, n)


def partitions_up_to(n):
    for k in range(n + 1):
        yield from partitions_of(k)


small_partitions = st.integers(0, 8).flatmap(
    lambda n: st.sampled_from(sorted(partitions_of(n)))
)


def test_check_partition():
    assert check_partition((3, 1, 0, 0)) == (3, 1)
    assert check_partition(()) == ()
    with pytest.raises(ValueError):
        check_partition((1, 2))
    with pytest.raises(ValueError):
        check_partition((2, -1))


def test_parse_format():
    assert parse_partition("3,3,1") == (3, 3, 1)
    assert parse_partition("") == ()
    assert parse_partition("0") == ()
    assert format_partition(()) == "0"
    assert format_partition((2, 1)) == "2,1"


def test_conjugate_examples():
    assert conjugate((6, 6, 5, 5, 5, 3, 1)) == (7, 6, 6, 5, 5, 2)
    assert conjugate(()) == ()
    assert conjugate((1,)) == (1,)


@given(small_partitions)
def test_conjugate_involution(mu):
    assert conjugate(conjugate(mu)) == mu
    assert sum(conjugate(mu)) == sum(mu)


def test_diagonal_examples():
    assert diagonal(()) == 0
    assert diagonal((4, 4, 4, 3, 1)) == 3
    assert diagonal((8, 8, 7, 5, 3, 2, 1, 1, 1)) == 4


def test_diagonal_s_examples():
    assert diagonal_s(()) == 1
    assert diagonal_s((4, 4, 4, 3, 1)) == 4


@given(small_partitions)
def test_diagonal_s_range(mu):
    d = diagonal(mu)
    assert diagonal_s(mu) in (max(d, 1), d + 1)


def test_maya_example():
    sp, sm = maya((4, 2, 1), 0)
    assert sp == (7, 1)
    assert sm == (-1, -5)


@given(small_partitions, st.integers(-3, 3))
def test_maya_roundtrip(mu, c):
    sp, sm = maya(mu, c)
    assert len(sp) - len(sm) == c
    back, charge = partition_of_maya(sp, sm)
    assert back == mu
    assert charge == c


def test_mu_r_examples():
    assert mu_r((4, 4, 4, 3, 1)) == (5, 5, 3, 1)
    assert mu_r((8, 8, 7, 5, 3, 2, 1, 1, 1)) == (9, 9, 8, 3, 2, 1, 1, 1)
    assert mu_r((1,)) == ()
    with pytest.raises(EmptyPartition):
        mu_r(())


def test_mu_c_examples():
    assert mu_c((4, 4, 4, 3, 1)) == (3, 3, 3, 2, 2, 1)
    assert mu_c((1,)) == ()
    assert mu_c((2,)) == (1,)
    assert mu_c((4, 4, 3, 2)) == (3, 3, 2, 2, 2)
    assert mu_c((7, 7, 6, 1)) == (6, 6, 5, 2, 1)
    assert mu_c((6, 6, 5, 5, 5, 3, 1)) == (5, 5, 4, 4, 4, 4, 3, 1)
    with pytest.raises(EmptyPartition):
        mu_c(())


def test_mu_rc_examples():
    assert mu_rc((3, 2)) == (3, 1)
    assert mu_rc((2, 2)) == (2, 1)
    assert mu_rc((1,)) == ()
    with pytest.raises(EmptyPartition):
        mu_rc(())


def test_constant_k_examples():
    assert constant_k((3, 2), (2, 2)) == 1
    assert constant_k((1,), (2,)) == 1
    assert constant_k((1,), (1,)) == 1
    with pytest.raises(EmptyPartition):
        constant_k((), (1,))


@given(small_partitions)
def test_surgeries_via_beads(mu):
    """The three surgeries are bead moves: drop min positive / fill max hole."""
    if not mu:
        return
    sp, sm = maya(mu, 0)
    assert partition_of_maya(tuple(b for b in sp if b != min(sp)), sm) == (mu_r(mu), -1)
    assert partition_of_maya(sp, tuple(h for h in sm if h != max(sm))) == (mu_c(mu), 1)
    assert partition_of_maya(
        tuple(b for b in sp if b != min(sp)),
        tuple(h for h in sm if h != max(sm)),
    ) == (mu_rc(mu), 0)


def test_surgery_identity_suite_small():
    for mu in partitions_up_to(10):
        if not mu:
            continue
        report = surgery_identities(mu)
        bad = [name for name, ok in report.items() if not ok]
        assert not bad, f"failed {bad} on {mu}"


def test_part_indexing():
    assert part((3, 1), 1) == 3
    assert part((3, 1), 2) == 1
    assert part((3, 1), 3) == 0
    assert part((), 1) == 0
