import pytest

import narayana

FIGURE = "0b 1 1b 2 2b 3 2 2 2b 1 1b 2 1 1 1b 2 2b 2 2"
IMAGE = "0b 1 1 1b 1b 2 2b 2b 3 3b 3b 4 4 4b 4b 3b 1 1b 1b"


def test_statistics_of_running_example():
    assert narayana.stats(FIGURE) == {"m": 12, "n": 7, "area": 30, "dinv": 35, "bounce": 41}
    upper, lower = narayana.paths(FIGURE)
    assert narayana.area_word_of_paths(upper, lower) == FIGURE
    assert len(narayana.ptd(FIGURE)) == 38


def test_enumeration_counts():
    assert narayana.enumerate_area_words(2, 2) == ["0b 1 1 1b", "0b 1 1b 1", "0b 1 1b 2"]
    assert len(narayana.enumerate_area_words(4, 5)) == narayana.narayana_count(8, 4) == 490


def test_polynomials():
    assert narayana.nara(2, 2) == {(3, 3): 1, (3, 4): 1, (4, 3): 1}
    assert narayana.para(1, 1) == {(0, 0): 1, (0, 1): 1, (1, 0): 1}
    assert narayana.nara(3, 4, method="recursion") == narayana.nara(3, 4)
    assert narayana.tilde_nara(4, 3) == narayana.nara(3, 4)
    assert narayana.nara(3, 3, r=1, s=1) == narayana.nara(3, 3, r=1, s=1, method="recursion")


def test_digamma_round_trip():
    assert narayana.digamma(FIGURE) == IMAGE
    assert narayana.digamma(IMAGE, inverse=True) == FIGURE


def test_parking_example():
    got = narayana.parking_stats([5, 11, 1, 9, 6, 8, 3, 4, 7, 10, 2], [0, 1, 1, 2, 0, 1, 0, 1, 2, 3, 3])
    assert got == {"reading_word": [2, 10, 7, 9, 4, 8, 1, 11, 3, 6, 5], "area": 14, "dinv": 8}


def test_validation_errors():
    assert narayana.validate_area_word("0b 1 1b") == (1, 2)
    with pytest.raises(ValueError, match="condition 3"):
        narayana.stats("0b 1b 1")
    with pytest.raises(ValueError):
        narayana.nara(2, 2, r=0, s=0)
    with pytest.raises(ValueError):
        narayana.para(0, 0)


def test_verify():
    rows = narayana.verify(5, threads=2)
    assert rows and all(row["passed"] for row in rows)
    assert {row["check"] for row in rows} == set(narayana.CHECKS)
    with pytest.raises(ValueError):
        narayana.verify(5, ["bogus"])
