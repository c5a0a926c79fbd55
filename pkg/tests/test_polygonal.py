import pytest
from hypothesis import given
from hypothesis import strategies as st

from polyrep.polygonal import DomainError, Family, is_t_polygonal, polygonal, polygonal_index


@pytest.mark.parametrize("m, c, value", [(3, 2, 3), (5, -1, 2), (7, -3, 27), (4, 5, 25), (9, 0, 0)])
def test_polygonal_examples(m, c, value):
    assert polygonal(m, c) == value


@pytest.mark.parametrize("m, c", [(3, 0), (4, -2), (2, 1)])
def test_polygonal_domain(m, c):
    with pytest.raises(DomainError):
        polygonal(m, c)


@pytest.mark.parametrize("m, v, c", [(3, 6, 3), (7, 27, -3), (5, 3, None), (4, 49, 7), (3, 7, None)])
def test_polygonal_index_examples(m, v, c):
    assert polygonal_index(m, v) == c


@pytest.mark.parametrize("fam, v, c", [((3, 1), 3, 2), ((3, 2), 12, 3), ((3, 5), 15, 2), ((3, 2), 7, None)])
def test_is_t_polygonal_examples(fam, v, c):
    assert is_t_polygonal(Family(*fam), v) == c


def test_family_validation():
    with pytest.raises(DomainError):
        Family(2, 1)
    with pytest.raises(DomainError):
        Family(5, 0)
    assert Family(9, 1).target(1) == 39


def test_triangular_and_square():
    for c in range(1, 1001):
        assert polygonal(3, c) == c * (c + 1) // 2
        assert polygonal(4, c) == c * c


def test_injective_on_domain():
    for m in range(3, 61):
        cs = range(1, 501) if m in (3, 4) else range(-500, 501)
        values = [polygonal(m, c) for c in cs]
        assert len(set(values)) == len(values), m


def test_round_trip_full_domain():
    for m in (3, 4, 5, 6, 7, 9, 13, 31, 60, 144):
        cs = range(1, 1001) if m in (3, 4) else range(-1000, 1001)
        for c in cs:
            v = polygonal(m, c)
            if v >= 1:
                assert polygonal_index(m, v) == c


@given(st.integers(3, 150), st.integers(1, 10**6))
def test_polygonal_index_is_exact_inverse(m, v):
    c = polygonal_index(m, v)
    if c is None:
        lo = 1 if m in (3, 4) else -2000
        assert all(polygonal(m, k) != v for k in range(lo, 2001))
    else:
        assert polygonal(m, c) == v
