"""Exact crossing distance, regression depth and Tukey depth.

Coordinates may be int, str ("n/d"), fractions.Fraction or float (taken
exactly). Results are dicts; rational values come back as Fraction.
"""

from ._flatdepth import (
    InputError,
    UnsupportedFlat,
    crossing_distance,
    crossing_distance_bruteforce,
    regression_depth_line2,
    regression_depth_line3,
    run_instance,
    tukey_depth2,
    verify_result,
)

__all__ = [
    "InputError",
    "UnsupportedFlat",
    "crossing_distance",
    "crossing_distance_bruteforce",
    "regression_depth_line2",
    "regression_depth_line3",
    "run_instance",
    "tukey_depth2",
    "verify_result",
]
