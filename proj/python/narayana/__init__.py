"""Parallelogram polyominoes and their q,t-Narayana polynomials.

Area words are strings of space-separated letters such as ``"0b 1 1b 2"``;
polynomials are dicts mapping ``(q_exponent, t_exponent)`` to integers.
"""

from ._core import (
    CHECKS,
    area_word_of_paths,
    digamma,
    enumerate_area_words,
    nara,
    narayana_count,
    para,
    parking_stats,
    paths,
    ptd,
    stats,
    tilde_nara,
    validate_area_word,
    verify,
)

__all__ = [
    "CHECKS",
    "area_word_of_paths",
    "digamma",
    "enumerate_area_words",
    "nara",
    "narayana_count",
    "para",
    "parking_stats",
    "paths",
    "ptd",
    "stats",
    "tilde_nara",
    "validate_area_word",
    "verify",
]
