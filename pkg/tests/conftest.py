"""Shared fixtures: the exhaustive and seeded-random diagram corpora.

The two corpora back the move-law and rewrite-structure sweeps:
every diagram with n <= 4 chords, plus 1000 seeded random diagrams
with n <= 8 (seed s yields a diagram with s % 9 chords).  Both are
deterministic, so failures reproduce exactly.
"""

from __future__ import annotations

import os

import pytest
from hypothesis import settings

from gaussdiag import enumerate_diagrams, random_diagram

settings.register_profile("fast", max_examples=50)
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "fast"))

RANDOM_SEEDS = range(1000)


@pytest.fixture(scope="session")
def exhaustive_corpus():
    """Every diagram with at most 4 chords (1 + 4 + 48 + 960 + 26880)."""
    return [d for n in range(5) for d in enumerate_diagrams(n)]


@pytest.fixture(scope="session")
def random_corpus():
    """1000 seeded diagrams, chord counts cycling 0..8."""
    return [random_diagram(seed % 9, seed) for seed in RANDOM_SEEDS]
