"""Coin-group events over a simultaneous toss of n fair coins.

Coin v maps to variable A_v with Head encoded as 0 and Tail as 1.  Event j
watches the group of all coins except coin n-j+1 and fires when that group
shows exactly one Head, i.e. exactly one variable of the group is 0.  That
is precisely when the family proposition for the excluded coin is true, so
the events inherit the family's behavior: any n-1 of them can occur in one
toss, all n never do.

Exact probabilities come from row counting over the uniform toss; the Monte
Carlo estimator is seeded and deterministic, including under sharding.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .boolcore import DEFAULT_MAX_VARS, Dnf, VarId, truth_table
from .construction import family

#: Samples per logical shard; fixed so results do not depend on worker count.
SHARD_SIZE = 1 << 14


@dataclass(frozen=True)
class CoinEvent:
    """Event ``group_index`` fires when its coin group shows exactly one Head."""

    group_index: int
    excluded_coin: VarId
    predicate: Dnf


def coin_events(n: int) -> tuple[CoinEvent, ...]:
    """The n coin-group events for an n-coin toss (n >= 3).

    Event j excludes coin n-j+1, so the first event watches the last
    coins' complement and the last event excludes coin 1.
    """
    if n < 3:
        raise ValueError(f"coin groups need n >= 3 coins, got {n}")
    fam = family(n)
    return tuple(
        CoinEvent(j, n - j + 1, fam.propositions[n - j]) for j in range(1, n + 1)
    )


def _event_label(indices: tuple[int, ...]) -> str:
    return " ".join(f"S_{i}" for i in indices)


@dataclass(frozen=True)
class ProbReport:
    """Exact event probabilities as fractions with denominator 2**n."""

    n: int
    singles: tuple[Fraction, ...]
    pairs: dict[tuple[int, int], Fraction]
    joint: Fraction

    @property
    def denominator(self) -> int:
        return 1 << self.n

    def _fmt(self, p: Fraction) -> str:
        if p == 0:
            return f"0/{self.denominator}"
        return f"{p.numerator}/{p.denominator}"

    def as_text(self) -> str:
        lines = [f"exact probabilities, n={self.n} coins, {self.n} events"]
        for j, p in enumerate(self.singles, 1):
            lines.append(f"  P[S_{j}] = {self._fmt(p)}")
        for (i, j), p in self.pairs.items():
            lines.append(f"  P[S_{i} S_{j}] = {self._fmt(p)}")
        lines.append(f"  P[{_event_label(tuple(range(1, self.n + 1)))}] = {self._fmt(self.joint)}")
        return "\n".join(lines)

    def as_kv_lines(self) -> list[str]:
        lines = [f"n={self.n}", f"denominator={self.denominator}"]
        lines += [f"single.S{j}={self._fmt(p)}" for j, p in enumerate(self.singles, 1)]
        lines += [f"pair.S{i}S{j}={self._fmt(p)}" for (i, j), p in self.pairs.items()]
        lines.append(f"joint={self._fmt(self.joint)}")
        return lines


def exact_probs(n: int, max_n: int = DEFAULT_MAX_VARS) -> ProbReport:
    """Exact single, pair, and joint probabilities by row counting."""
    events = coin_events(n)
    rows = 1 << n
    tables = [truth_table(e.predicate, n, max_n=max_n).bits for e in events]
    singles = tuple(Fraction(t.bit_count(), rows) for t in tables)
    pairs = {
        (i + 1, j + 1): Fraction((tables[i] & tables[j]).bit_count(), rows)
        for i, j in combinations(range(n), 2)
    }
    joint_bits = tables[0]
    for t in tables[1:]:
        joint_bits &= t
    return ProbReport(n, singles, pairs, Fraction(joint_bits.bit_count(), rows))


@dataclass(frozen=True)
class SimReport:
    """Counts from a seeded Monte Carlo toss experiment."""

    n: int
    samples: int
    seed: int
    single_counts: tuple[int, ...]
    pair_counts: dict[tuple[int, int], int]
    joint_occurrences: int

    def frequency(self, j: int) -> float:
        return self.single_counts[j - 1] / self.samples

    def pair_frequency(self, i: int, j: int) -> float:
        return self.pair_counts[(i, j)] / self.samples

    @property
    def joint_frequency(self) -> float:
        return self.joint_occurrences / self.samples

    def as_text(self) -> str:
        lines = [f"simulation, n={self.n} samples={self.samples} seed={self.seed}"]
        for j in range(1, self.n + 1):
            lines.append(f"  freq[S_{j}] = {self.frequency(j):.5f}")
        for i, j in self.pair_counts:
            lines.append(f"  freq[S_{i} S_{j}] = {self.pair_frequency(i, j):.5f}")
        lines.append(f"  joint occurrences = {self.joint_occurrences}")
        lines.append(f"  joint frequency = {self.joint_frequency:.5f}")
        return "\n".join(lines)

    def as_kv_lines(self) -> list[str]:
        lines = [f"n={self.n}", f"samples={self.samples}", f"seed={self.seed}"]
        lines += [
            f"single.S{j}={self.single_counts[j - 1]}" for j in range(1, self.n + 1)
        ]
        lines += [f"pair.S{i}S{j}={c}" for (i, j), c in self.pair_counts.items()]
        lines.append(f"joint_occurrences={self.joint_occurrences}")
        return lines


def _run_shard(
    preds: list[list[tuple[int, int]]],
    pair_index: list[tuple[int, int]],
    n: int,
    seed: int,
    shard: int,
    count: int,
) -> tuple[list[int], list[int], int]:
    # The shard's substream depends only on (seed, shard index), never on the
    # worker layout.  String seeding is deterministic across processes.
    rng = random.Random(f"{seed}:{shard}")
    singles = [0] * len(preds)
    pairs = [0] * len(pair_index)
    joint = 0
    for _ in range(count):
        m = rng.getrandbits(n)
        sat = [
            any((p & m) == p and (q & m) == 0 for p, q in cubes) for cubes in preds
        ]
        for idx, flag in enumerate(sat):
            singles[idx] += flag
        for slot, (i, j) in enumerate(pair_index):
            if sat[i] and sat[j]:
                pairs[slot] += 1
        if all(sat):
            joint += 1
    return singles, pairs, joint


def simulate(n: int, samples: int, seed: int, workers: int = 1) -> SimReport:
    """Toss n coins ``samples`` times and count the events.

    Deterministic for fixed (n, samples, seed): samples are drawn in logical
    shards of :data:`SHARD_SIZE`, each from its own substream of the seed,
    so the counts do not depend on ``workers``.
    """
    if samples < 1:
        raise ValueError(f"at least one sample is required, got {samples}")
    events = coin_events(n)
    preds = [
        [(c.pos, c.neg) for c in e.predicate.cubes] for e in events
    ]
    pair_index = list(combinations(range(n), 2))

    shards = []
    start = 0
    index = 0
    while start < samples:
        size = min(SHARD_SIZE, samples - start)
        shards.append((index, size))
        index += 1
        start += size

    def run(shard: tuple[int, int]):
        return _run_shard(preds, pair_index, n, seed, shard[0], shard[1])

    if workers <= 1:
        results = [run(s) for s in shards]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, shards))

    singles = [0] * n
    pairs = [0] * len(pair_index)
    joint = 0
    for s_counts, p_counts, j_count in results:
        for idx, c in enumerate(s_counts):
            singles[idx] += c
        for idx, c in enumerate(p_counts):
            pairs[idx] += c
        joint += j_count
    return SimReport(
        n,
        samples,
        seed,
        tuple(singles),
        {(i + 1, j + 1): pairs[slot] for slot, (i, j) in enumerate(pair_index)},
        joint,
    )
