from stratum_atlas.stratum import Signature, violations
from stratum_atlas.sweep import enumerate_signatures


def test_genus0_small_bounds():
    found = list(enumerate_signatures(3, 4, genus=0))
    assert Signature((2, -1, -3)) in found and Signature((1, 1, -4)) in found
    assert all(s.genus == 0 for s in found)


def test_two_singularities():
    found = list(enumerate_signatures(2, 4))
    for degrees in [(2, -2), (4, -2), (2, -4)]:
        assert Signature(degrees) in found


def test_empty_range():
    assert list(enumerate_signatures(0, 5)) == []
    assert list(enumerate_signatures(3, 0)) == []


def test_complete_and_unique():
    import itertools

    found = list(enumerate_signatures(3, 3))
    assert len(found) == len(set(found))
    values = [n for n in range(-3, 4) if n]
    expected = set()
    for r in range(1, 4):
        for degrees in itertools.product(values, repeat=r):
            if not violations(degrees):
                expected.add(Signature(degrees))
    assert set(found) == expected


def test_genus_filter_matches_unfiltered():
    everything = list(enumerate_signatures(4, 5))
    for g in range(4):
        assert list(enumerate_signatures(4, 5, genus=g)) == [s for s in everything if s.genus == g]


def test_deterministic():
    assert list(enumerate_signatures(4, 4)) == list(enumerate_signatures(4, 4))
