"""Builds the family P_1..P_n of non-zero propositions over A_1..A_n whose
full n-way conjunction is identically false although every conjunction of
fewer members is satisfiable.

For n >= 3, proposition j is the disjunction of its "e-terms": conjunctions
that fix every variable except A_j, with exactly one of them negated.  For
n = 2 that recipe degenerates (it would give P_1 = A2', P_2 = A1', whose
conjunction is satisfiable at 00), so the pair A1'A2 / A1A2' is used
instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from .boolcore import Cube, Dnf, Literal, VarId


@dataclass(frozen=True)
class ExclusionSet:
    """All variables except one: the support of proposition ``excluded``."""

    excluded: VarId
    members: tuple[VarId, ...]


@dataclass(frozen=True)
class ETermSet:
    """The e-terms of proposition j, ordered by their negated variable."""

    j: VarId
    eterms: tuple[Cube, ...]


@dataclass(frozen=True)
class Family:
    n: int
    propositions: tuple[Dnf, ...]


def _check_index(j: VarId, n: int) -> None:
    if n < 2:
        raise ValueError(f"the construction needs at least 2 variables, got {n}")
    if not 1 <= j <= n:
        raise ValueError(f"variable index {j} out of range 1..{n}")


def exclusion_set(j: VarId, n: int) -> ExclusionSet:
    """Variables 1..n without ``j``, ascending."""
    _check_index(j, n)
    return ExclusionSet(j, tuple(v for v in range(1, n + 1) if v != j))


def eterm(j: VarId, n: int, m: VarId) -> Cube:
    """The e-term of proposition j whose single negated variable is ``m``.

    Fixes every variable except A_j: all positive apart from A_m.
    """
    _check_index(j, n)
    if m == j or not 1 <= m <= n:
        raise ValueError(f"negated variable {m} must differ from {j} and lie in 1..{n}")
    neg = 1 << (m - 1)
    pos = ((1 << n) - 1) ^ (1 << (j - 1)) ^ neg
    return Cube(pos, neg)


def eterms(j: VarId, n: int) -> ETermSet:
    """All n-1 e-terms of proposition j, negated variable ascending."""
    _check_index(j, n)
    if n < 3:
        raise ValueError(
            "e-terms need at least two variables besides the excluded one; "
            "use family() for n = 2"
        )
    return ETermSet(j, tuple(eterm(j, n, m) for m in exclusion_set(j, n).members))


def proposition(j: VarId, n: int) -> Dnf:
    """Proposition j for n >= 3: the disjunction of its e-terms."""
    return Dnf(eterms(j, n).eterms)


def family(n: int) -> Family:
    """The full family P_1..P_n.

    n = 2 returns the hand-built pair A1'A2, A1A2'; n >= 3 uses the general
    e-term construction.
    """
    if n < 2:
        raise ValueError(f"the family is defined for n >= 2, got {n}")
    if n == 2:
        p1 = Dnf((Cube.of(Literal(1, False), Literal(2)),))
        p2 = Dnf((Cube.of(Literal(1), Literal(2, False)),))
        return Family(2, (p1, p2))
    return Family(n, tuple(proposition(j, n) for j in range(1, n + 1)))
