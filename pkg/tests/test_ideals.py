import pytest

from zdgenus import (
    IdealSet,
    catalog_ring,
    cyclic_ideal,
    enumerate_ideals,
    ideal_from_generators,
    is_prime,
    is_radical,
    iso_check,
    minimal_primes_over,
    quotient,
    validate_ideal,
)


def test_enumerate_z16():
    t = catalog_ring("Z_16")
    ideals = enumerate_ideals(t)
    assert [(i.describe(), i.size) for i in ideals] == [
        ("(0)", 1), ("(8)", 2), ("(4)", 4), ("(2)", 8), ("(1)", 16)]


def test_enumerate_z12(z12):
    ideals = enumerate_ideals(z12)
    assert [(i.describe(), i.size) for i in ideals] == [
        ("(0)", 1), ("(6)", 2), ("(4)", 3), ("(3)", 4), ("(2)", 6), ("(1)", 12)]


def test_enumerate_counts():
    assert len(enumerate_ideals(catalog_ring("Z_6"))) == 4
    assert len(enumerate_ideals(catalog_ring("F_4"))) == 2


def test_cyclic_ideal(z12):
    assert cyclic_ideal(z12, 4).members() == [0, 4, 8]
    assert cyclic_ideal(z12, 5).size == 12  # unit generates everything


def test_validate_ideal(z12):
    assert validate_ideal(cyclic_ideal(z12, 4))
    assert not validate_ideal(IdealSet(z12, 0b10001))  # {0, 4}: not add-closed
    assert all(validate_ideal(i) for i in enumerate_ideals(z12))


def test_ideal_from_generators(z12):
    i = ideal_from_generators(z12, [4, 6])
    assert i.members() == [0, 2, 4, 6, 8, 10]


def test_quotient_z12_by_4(z12):
    q = quotient(z12, cyclic_ideal(z12, 4))
    assert q.table.order == 4
    assert iso_check(q.table, catalog_ring("Z_4")) is not None
    # the projection is a ring homomorphism onto coset indices
    for a in range(12):
        for b in range(12):
            assert q.projection[int(z12.add[a, b])] == int(
                q.table.add[q.projection[a], q.projection[b]])
            assert q.projection[int(z12.mul[a, b])] == int(
                q.table.mul[q.projection[a], q.projection[b]])


def test_quotient_coset_reps(z12):
    q = quotient(z12, cyclic_ideal(z12, 6))
    assert list(q.coset_reps) == [0, 1, 2, 3, 4, 5]


def test_prime_and_radical(z12):
    t = catalog_ring("Z_16")
    by_desc = {i.describe(): i for i in enumerate_ideals(t)}
    assert is_prime(by_desc["(2)"])
    assert not is_prime(by_desc["(4)"])
    assert not is_radical(by_desc["(4)"])  # 2^2 = 4 lies inside, 2 does not
    assert is_radical(by_desc["(2)"])
    six = cyclic_ideal(z12, 6)
    assert is_radical(six) and not is_prime(six)


def test_radical_zero_ideal():
    reduced = catalog_ring("Z_6")
    assert is_radical(IdealSet(reduced, 1 << reduced.zero))
    nonreduced = catalog_ring("Z_4")
    assert not is_radical(IdealSet(nonreduced, 1 << nonreduced.zero))


def test_minimal_primes_z6():
    t = catalog_ring("Z_6")
    primes = minimal_primes_over(IdealSet(t, 1 << t.zero))
    assert sorted(p.describe() for p in primes) == ["(2)", "(3)"]


def test_minimal_primes_requires_radical(z12):
    from zdgenus import NotRadical

    with pytest.raises(NotRadical):
        minimal_primes_over(cyclic_ideal(z12, 4))
    primes = minimal_primes_over(cyclic_ideal(z12, 6))
    assert sorted(p.describe() for p in primes) == ["(2)", "(3)"]


def test_minimal_primes_domain():
    t = catalog_ring("Z_7")
    primes = minimal_primes_over(IdealSet(t, 1 << t.zero))
    assert len(primes) == 1 and primes[0].is_zero()
