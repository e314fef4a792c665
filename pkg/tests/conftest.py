"""Shared test helpers."""

from __future__ import annotations

import random

from jointmutex import Cube, Dnf, Literal, parse


def dnf(text: str) -> Dnf:
    """Parse a formula, asserting nothing was dropped."""
    result = parse(text)
    assert not result.dropped_terms, f"unexpected contradictory term in {text!r}"
    return result.dnf


def cube(text: str) -> Cube:
    """Parse a single-term formula into its cube."""
    d = dnf(text)
    assert len(d.cubes) == 1, f"expected one term in {text!r}"
    return d.cubes[0]


def random_cube(rng: random.Random, n: int, allow_empty: bool = True) -> Cube:
    lits = []
    low = 0 if allow_empty else 1
    for var in rng.sample(range(1, n + 1), rng.randint(low, n)):
        lits.append(Literal(var, rng.random() < 0.5))
    return Cube.of(*lits)


def random_dnf(rng: random.Random, n: int, max_cubes: int = 4) -> Dnf:
    return Dnf.of(
        random_cube(rng, n) for _ in range(rng.randint(0, max_cubes))
    )
