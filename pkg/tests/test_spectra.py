from itertools import combinations_with_replacement

import pytest

from horrocks.cohomology import Spectrum, h0_p3, spectrum_h1
from horrocks.spectra import (enumerate_spectra, spectrum_by_label, spectrum_index,
                              spectrum_label, validate_spectrum)


def brute_spectra(c2):
    """Every multiset of nonnegative halves, mirrored and filtered by the raw conditions."""
    n = c2 // 2
    found = set()
    for half in combinations_with_replacement(range(n), n):
        values = list(half) + [-k - 1 for k in half]
        check = validate_spectrum(values)
        if check.ok:
            found.add(check.spectrum)
    return found


@pytest.mark.parametrize("c2", [2, 4, 6, 8, 10, 12, 14])
def test_enumeration_matches_brute_force(c2):
    got = enumerate_spectra(c2)
    assert len(got) == len(set(got))
    assert set(got) == brute_spectra(c2)


def test_counts():
    assert [len(enumerate_spectra(c)) for c in (2, 4, 6, 8, 10)] == [1, 2, 4, 7, 12]


def test_c2_10_order():
    expected = [(5,), (4, 1), (3, 2), (3, 1, 1), (2, 3), (2, 2, 1), (2, 1, 1, 1),
                (1, 4), (1, 3, 1), (1, 2, 2), (1, 2, 1, 1), (1, 1, 1, 1, 1)]
    assert [s.mult for s in enumerate_spectra(10)] == expected


def test_c2_8_labels_follow_published_table():
    assert spectrum_by_label(5, 8) == Spectrum((1, 2, 1))
    assert spectrum_by_label(6, 8) == Spectrum((1, 3))
    assert spectrum_label(Spectrum((1, 1, 1, 1))) == "X7^8"


def test_labels_c2_10():
    for i, s in enumerate(enumerate_spectra(10), start=1):
        assert spectrum_index(s) == i
    with pytest.raises(KeyError):
        spectrum_by_label(13, 10)


@pytest.mark.parametrize("c2", [0, 3, -2, 7])
def test_bad_c2(c2):
    with pytest.raises(ValueError):
        enumerate_spectra(c2)


def test_validate_rejects_each_condition():
    assert not validate_spectrum([0, 0, -1]).ok  # asymmetric
    assert any("C.2" in v for v in validate_spectrum([0, 2, -1, -3]).violations)
    # -2 occurs once but -3 twice
    bad = validate_spectrum([-3, -3, -2, -1, 0, 1, 2, 2])
    assert any("C.3" in v for v in bad.violations)
    assert validate_spectrum([-2, -1, -1, 0, 0, 1]).spectrum == Spectrum((2, 1))


def test_h0_p3_cone_recursion():
    for d in range(1, 15):
        assert h0_p3(d) - h0_p3(d - 1) == (d + 2) * (d + 1) // 2
        assert h0_p3(d) >= h0_p3(d - 1)


@pytest.mark.parametrize("spec", enumerate_spectra(10) + enumerate_spectra(12))
def test_spectrum_h1_support_and_growth(spec):
    assert spectrum_h1(spec, -spec.K - 3) == 0
    series = [spectrum_h1(spec, l) for l in range(-spec.K - 2, 0)]
    assert all(b > a for a, b in zip(series, series[1:]))
