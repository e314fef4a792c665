"""Mutual-exclusion checks for formula sets, and two independent verifiers
for the constructed family.

The exhaustive verifier enumerates truth tables.  The symbolic verifier
arranges the family's e-terms in a grid (row = proposition, column = index
of the negated variable, blank diagonal) and checks the conjunction rules
that make the leave-one-out products collapse to single cubes:

1. two entries of one column conjoin to the full cube that negates exactly
   the column variable, and so does the whole column;
2. entries of different columns conjoin to the contradiction, unless they
   sit at mirrored positions (m, j) and (j, m);
3. a mirrored pair conjoins to the cube with exactly those two negations,
   which kills any further entry.

For n past ``symbolic_full_limit``, complete coverage of rules 1-3 is
quartic in n and out of reach, so the verifier checks every column product
and every mirrored pair but only a seeded random sample of the remaining
tuples; the report says exactly what was covered.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .boolcore import (
    BOTTOM,
    DEFAULT_MAX_VARS,
    Assignment,
    Cube,
    Dnf,
    VarId,
    cube_and,
    dnf_and,
    truth_table,
)
from .construction import eterm, family

#: Largest n for which exhaustive mode scans every k-subset by default.
FULL_SCAN_DEFAULT_LIMIT = 12

#: Largest n for which symbolic mode runs complete rule coverage and the
#: explicit leave-one-out products.
SYMBOLIC_FULL_LIMIT = 12


class VerificationError(Exception):
    """A structural claim about the constructed family failed: a bug, not data."""


def _column_cube(n: int, j: VarId) -> Cube:
    """The cube fixing all n variables with A_j as the single negation."""
    bit = 1 << (j - 1)
    return Cube(((1 << n) - 1) ^ bit, bit)


@dataclass(frozen=True)
class Tableau:
    """Grid of the family's e-terms; ``rows[i-1][j-1]`` is entry (i, j)."""

    n: int
    rows: tuple[tuple[Optional[Cube], ...], ...]

    def entry(self, i: int, j: int) -> Optional[Cube]:
        """Entry in row i, column j (1-based); None on the diagonal."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError(f"indices ({i}, {j}) out of range 1..{self.n}")
        return self.rows[i - 1][j - 1]


def tableau(n: int) -> Tableau:
    """E-term grid for the family over n variables (n >= 3)."""
    if n < 3:
        raise ValueError(f"the e-term grid needs n >= 3, got {n}")
    rows = tuple(
        tuple(None if i == j else eterm(i, n, j) for j in range(1, n + 1))
        for i in range(1, n + 1)
    )
    return Tableau(n, rows)


@dataclass(frozen=True)
class ObservationFailure:
    """One conjunction that came out different from the rule's prediction.

    ``indices`` flattens the (row, column) pairs of the entries involved.
    """

    observation: int
    indices: tuple[int, ...]
    got: Cube
    expected: Cube


@dataclass(frozen=True)
class CheckCoverage:
    name: str
    checked: int
    total: int

    @property
    def complete(self) -> bool:
        return self.checked == self.total


@dataclass(frozen=True)
class ObservationReport:
    n: int
    failures: tuple[ObservationFailure, ...]
    coverage: tuple[CheckCoverage, ...]
    #: The whole-column products, one cube per column, as computed and checked.
    column_products: tuple[Cube, ...] = ()

    def _ok(self, k: int) -> bool:
        return not any(f.observation == k for f in self.failures)

    @property
    def obs1_ok(self) -> bool:
        return self._ok(1)

    @property
    def obs2_ok(self) -> bool:
        return self._ok(2)

    @property
    def obs3_ok(self) -> bool:
        return self._ok(3)

    @property
    def all_ok(self) -> bool:
        return not self.failures

    @property
    def complete(self) -> bool:
        return all(c.complete for c in self.coverage)

    def checks_run(self) -> int:
        return sum(c.checked for c in self.coverage)


def _as_cube(p: int, q: int) -> Cube:
    """Wrap raw masks as a value; overlapping masks mean the contradiction."""
    if p & q:
        return BOTTOM
    return Cube(p, q)


def check_observations(
    n: int, *, max_checks_per_class: Optional[int] = None, seed: int = 0
) -> ObservationReport:
    """Check the three conjunction rules over the e-term grid.

    With ``max_checks_per_class=None`` every index combination is computed:
    all ordered same-column pairs, all whole-column products, all
    cross-column pairs, all mirrored pairs, and every product of a mirrored
    pair with a third entry.  A limit caps each of the cubic-or-worse
    classes at a seeded random sample; column products and mirrored pairs
    are only quadratic and stay complete.

    The conjunctions run on the raw literal masks of the entries, so full
    grids of cube objects are never materialized; the mask arithmetic
    mirrors :func:`construction.eterm`.
    """
    if n < 4:
        raise ValueError(f"the conjunction rules are checked for n >= 4, got {n}")

    full = (1 << n) - 1
    bits = [0] + [1 << (v - 1) for v in range(1, n + 1)]

    failures: list[ObservationFailure] = []
    coverage: list[CheckCoverage] = []
    limit = max_checks_per_class

    def fail(obs: int, indices: tuple[int, ...], got: Cube, expected: Cube) -> None:
        failures.append(ObservationFailure(obs, indices, got, expected))

    def pair_check(obs: int, m: int, j: int, o: int, k: int) -> None:
        """Conjoin entries (m, j) and (o, k) and compare with the rule."""
        p = (full ^ bits[m] ^ bits[j]) | (full ^ bits[o] ^ bits[k])
        q = bits[j] | bits[k]
        if j == k:
            if p & q or p != full ^ bits[j]:
                fail(obs, (m, j, o, k), _as_cube(p, q), _column_cube(n, j))
        elif o == j and k == m:
            both = bits[j] | bits[m]
            if p & q or p != full ^ both:
                fail(obs, (m, j, o, k), _as_cube(p, q), Cube(full ^ both, both))
        elif not p & q:
            fail(obs, (m, j, o, k), _as_cube(p, q), BOTTOM)

    # Rule 1, pairs: two entries of one column give the column cube.
    total = n * (n - 1) * (n - 2)
    if limit is None or total <= limit:
        checked = 0
        for j in range(1, n + 1):
            for m in range(1, n + 1):
                if m == j:
                    continue
                for o in range(1, n + 1):
                    if o == m or o == j:
                        continue
                    pair_check(1, m, j, o, j)
                    checked += 1
    else:
        rng = random.Random(f"rule1:{n}:{seed}")
        checked = limit
        for _ in range(limit):
            while True:
                j, m, o = (rng.randint(1, n) for _ in range(3))
                if j != m and j != o and m != o:
                    break
            pair_check(1, m, j, o, j)
    coverage.append(CheckCoverage("same-column pairs", checked, total))

    # Rule 1, whole columns: the product of all n-1 entries of a column must
    # collapse to the column cube, staying satisfiable at every step.
    products: list[Cube] = []
    for j in range(1, n + 1):
        bj = bits[j]
        acc = 0
        ok = True
        for i in range(1, n + 1):
            if i == j:
                continue
            acc |= full ^ bits[i] ^ bj
            if acc & bj:
                ok = False
        if ok and acc == full ^ bj:
            products.append(Cube(acc, bj))
        else:
            got = _as_cube(acc, bj)
            fail(1, (j,), got, _column_cube(n, j))
            products.append(got)
    coverage.append(CheckCoverage("column products", n, n))

    # Rule 2: entries of different columns conjoin to the contradiction,
    # mirrored positions excepted.
    total = n * (n - 1) * ((n - 1) ** 2 - 1)
    if limit is None or total <= limit:
        checked = 0
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                if k == j:
                    continue
                for m in range(1, n + 1):
                    if m == j:
                        continue
                    for o in range(1, n + 1):
                        if o == k or (o == j and k == m):
                            continue
                        pair_check(2, m, j, o, k)
                        checked += 1
    else:
        rng = random.Random(f"rule2:{n}:{seed}")
        checked = limit
        for _ in range(limit):
            while True:
                j, k, m, o = (rng.randint(1, n) for _ in range(4))
                if j != k and m != j and o != k and not (o == j and k == m):
                    break
            pair_check(2, m, j, o, k)
    coverage.append(CheckCoverage("cross-column pairs", checked, total))

    # Rule 3, mirrored pairs: (m, j) with (j, m) leaves both negations.
    total = n * (n - 1) // 2
    for m in range(1, n + 1):
        bm = bits[m]
        base = full ^ bm
        for j in range(m + 1, n + 1):
            bj = bits[j]
            p = base ^ bj  # both entries share this support
            both = bm | bj
            if p & both or p != full ^ both:
                fail(3, (m, j, j, m), _as_cube(p, both), Cube(full ^ both, both))
    coverage.append(CheckCoverage("mirrored pairs", total, total))

    # Rule 3, continued: the mirrored-pair product kills any third entry.
    total = (n * (n - 1) // 2) * (n * (n - 1) - 2)

    def third_check(m: int, j: int, o: int, k: int) -> None:
        both = bits[j] | bits[m]
        p = (full ^ both) | (full ^ bits[o] ^ bits[k])
        q = both | bits[k]
        if not p & q:
            fail(3, (m, j, j, m, o, k), _as_cube(p, q), BOTTOM)

    if limit is None or total <= limit:
        checked = 0
        for m in range(1, n + 1):
            for j in range(m + 1, n + 1):
                for o in range(1, n + 1):
                    for k in range(1, n + 1):
                        if o == k or (o, k) in ((m, j), (j, m)):
                            continue
                        third_check(m, j, o, k)
                        checked += 1
    else:
        rng = random.Random(f"rule3:{n}:{seed}")
        checked = limit
        for _ in range(limit):
            while True:
                m, j, o, k = (rng.randint(1, n) for _ in range(4))
                if m < j and o != k and (o, k) not in ((m, j), (j, m)):
                    break
            third_check(m, j, o, k)
    coverage.append(CheckCoverage("mirrored pair with third entry", checked, total))

    return ObservationReport(n, tuple(failures), tuple(coverage), tuple(products))


def leave_one_out(n: int, j: VarId) -> Cube:
    """Product of all family propositions except P_j, for n >= 4.

    Conjoins the propositions in ascending index with contradiction pruning,
    guarding the intermediate size (the cross terms must die), and checks
    that the result is exactly the single cube negating A_j alone.  Any
    violation raises :class:`VerificationError`; it would mean the
    construction is broken.
    """
    if n < 4:
        raise ValueError(f"the leave-one-out product collapses for n >= 4, got {n}")
    if not 1 <= j <= n:
        raise ValueError(f"index {j} out of range 1..{n}")
    fam = family(n)
    product: Optional[Dnf] = None
    for i in range(1, n + 1):
        if i == j:
            continue
        p = fam.propositions[i - 1]
        product = p if product is None else dnf_and(product, p)
        if len(product.cubes) > n:
            raise VerificationError(
                f"intermediate product for j={j} grew to {len(product.cubes)} cubes"
            )
        if not product.cubes:
            raise VerificationError(f"product without P_{j} collapsed to zero at P_{i}")
    assert product is not None
    expected = _column_cube(n, j)
    if product.cubes != (expected,):
        raise VerificationError(
            f"product without P_{j} is {product}, expected the single cube {expected}"
        )
    return product.cubes[0]


def _pairwise_disjoint(cubes: Sequence[Cube]) -> bool:
    """Whether every pair of cubes conjoins to the contradiction."""
    pos = [c.pos for c in cubes]
    neg = [c.neg for c in cubes]
    size = len(cubes)
    for a in range(size):
        pa, qa = pos[a], neg[a]
        for b in range(a + 1, size):
            if not (pa | pos[b]) & (qa | neg[b]):
                return False
    return True


@dataclass(frozen=True)
class SubsetResult:
    """Outcome for one k-subset; indices are 1-based positions in the input list."""

    indices: tuple[int, ...]
    zero: bool
    witness: Optional[Assignment] = None


@dataclass(frozen=True)
class ExclusionReport:
    n: int
    k: int
    entries: tuple[SubsetResult, ...]

    @property
    def all_zero(self) -> bool:
        return all(e.zero for e in self.entries)

    @property
    def all_nonzero(self) -> bool:
        return not any(e.zero for e in self.entries)


def k_way_report(
    formulas: Sequence[Dnf], k: int, n: int, max_n: int = DEFAULT_MAX_VARS
) -> ExclusionReport:
    """Zero/nonzero status of every k-subset conjunction, with witnesses.

    Subsets are visited in lexicographic order of their index tuples.
    """
    formulas = list(formulas)
    if not 2 <= k <= len(formulas):
        raise ValueError(f"k={k} out of range 2..{len(formulas)}")
    tables = [truth_table(f, n, max_n=max_n).bits for f in formulas]
    entries = []
    for sub in combinations(range(len(formulas)), k):
        acc = tables[sub[0]]
        for i in sub[1:]:
            acc &= tables[i]
            if not acc:
                break
        wit = None
        if acc:
            wit = Assignment.from_row((acc & -acc).bit_length() - 1, n)
        entries.append(SubsetResult(tuple(i + 1 for i in sub), acc == 0, wit))
    return ExclusionReport(n, k, tuple(entries))


@dataclass(frozen=True)
class LeaveOneOutDetail:
    """Per-j result for the product of all propositions except P_j."""

    j: int
    nonzero: bool
    cube: Optional[Cube] = None  # symbolic product, when that mode ran
    witness: Optional[Assignment] = None  # satisfying row, when exhaustive ran
    modes_agree: Optional[bool] = None  # both modes ran and their products match


@dataclass(frozen=True)
class ComponentCheck:
    """Status of the C(n, k) k-way conjunctions for one k."""

    k: int
    checked: int
    nonzero: int
    implied: bool  # nonzero-ness inferred from a larger nonzero conjunction

    @property
    def ok(self) -> bool:
        return self.implied or self.checked == self.nonzero


@dataclass(frozen=True)
class TheoremReport:
    n: int
    mode: str
    component_ok: bool
    joint_zero: bool
    details: tuple[LeaveOneOutDetail, ...]
    components: tuple[ComponentCheck, ...] = ()
    observations: Optional[ObservationReport] = None
    notes: tuple[str, ...] = ()

    @property
    def verified(self) -> bool:
        return self.component_ok and self.joint_zero


def _verify_exhaustive(n: int, full_scan: Optional[bool], max_n: int):
    fam = family(n)
    tables = [truth_table(p, n, max_n=max_n).bits for p in fam.propositions]
    notes: list[str] = []
    component_ok = all(tables)
    if not component_ok:
        notes.append("some proposition is the zero formula")

    joint = tables[0]
    for t in tables[1:]:
        joint &= t
    joint_zero = joint == 0

    full = full_scan if full_scan is not None else n <= FULL_SCAN_DEFAULT_LIMIT
    components: list[ComponentCheck] = []
    for k in range(2, n):
        if full or k == n - 1:
            checked = nonzero = 0
            for sub in combinations(range(n), k):
                acc = tables[sub[0]]
                for i in sub[1:]:
                    acc &= tables[i]
                    if not acc:
                        break
                checked += 1
                nonzero += acc != 0
            components.append(ComponentCheck(k, checked, nonzero, implied=False))
            component_ok &= checked == nonzero
        else:
            components.append(ComponentCheck(k, 0, 0, implied=True))
    if any(c.implied for c in components):
        notes.append(
            "k-way conjunctions below n-1 implied nonzero by the leave-one-out results"
        )

    details = []
    for j in range(1, n + 1):
        acc = (1 << (1 << n)) - 1
        for i in range(1, n + 1):
            if i != j:
                acc &= tables[i - 1]
        wit = None
        if acc:
            wit = Assignment.from_row((acc & -acc).bit_length() - 1, n)
        else:
            component_ok = False
        details.append(LeaveOneOutDetail(j, acc != 0, witness=wit))
    return component_ok, joint_zero, tuple(details), tuple(components), notes


def _verify_symbolic(n: int, symbolic_full_limit: int, observation_samples: int, seed: int):
    notes: list[str] = []
    if n <= symbolic_full_limit:
        obs = check_observations(n)
        cubes = [leave_one_out(n, j) for j in range(1, n + 1)]
    else:
        obs = check_observations(n, max_checks_per_class=observation_samples, seed=seed)
        cubes = list(obs.column_products)
        notes.append(
            "conjunction rules sampled beyond the complete-coverage limit; "
            "column products and mirrored pairs fully covered"
        )
    component_ok = obs.all_ok and all(not c.is_bottom for c in cubes)
    joint_zero = _pairwise_disjoint(cubes)
    details = tuple(
        LeaveOneOutDetail(j, not c.is_bottom, cube=c) for j, c in enumerate(cubes, 1)
    )
    components = tuple(
        ComponentCheck(k, n, n, implied=False) if k == n - 1 else ComponentCheck(k, 0, 0, implied=True)
        for k in range(2, n)
    )
    if n > 3:
        notes.append(
            "k-way conjunctions below n-1 implied nonzero: each is a sub-conjunction "
            "of a nonzero leave-one-out product"
        )
    return component_ok, joint_zero, details, components, obs, notes


def verify_theorem(
    n: int,
    mode: str = "both",
    *,
    full_scan: Optional[bool] = None,
    max_n: int = DEFAULT_MAX_VARS,
    symbolic_full_limit: int = SYMBOLIC_FULL_LIMIT,
    observation_samples: int = 1000,
    seed: int = 0,
) -> TheoremReport:
    """Verify that the family over n variables excludes jointly but not partially.

    Exhaustive mode (n >= 2) enumerates truth tables: the n-way conjunction
    must be zero and the checked k-way conjunctions nonzero.  ``full_scan``
    controls whether every k in 2..n-1 is scanned (defaulting to yes up to
    n = 12) or only k = n-1, with smaller k implied.  Symbolic mode (n >= 4)
    checks the conjunction rules and the leave-one-out products without any
    row enumeration.  Mode "both" runs the two and cross-checks the
    leave-one-out products against each other.
    """
    if mode not in ("exhaustive", "symbolic", "both"):
        raise ValueError(f"unknown mode {mode!r}")
    if n < 2:
        raise ValueError(f"the family needs n >= 2, got {n}")
    if mode in ("symbolic", "both") and n < 4:
        raise ValueError(f"symbolic verification needs n >= 4, got {n}")

    if mode == "exhaustive":
        component_ok, joint_zero, details, components, notes = _verify_exhaustive(
            n, full_scan, max_n
        )
        return TheoremReport(
            n, mode, component_ok, joint_zero, details, components, None, tuple(notes)
        )

    if mode == "symbolic":
        component_ok, joint_zero, details, components, obs, notes = _verify_symbolic(
            n, symbolic_full_limit, observation_samples, seed
        )
        return TheoremReport(
            n, mode, component_ok, joint_zero, details, components, obs, tuple(notes)
        )

    ex_ok, ex_joint, ex_details, ex_components, ex_notes = _verify_exhaustive(
        n, full_scan, max_n
    )
    sy_ok, sy_joint, sy_details, sy_components, obs, sy_notes = _verify_symbolic(
        n, symbolic_full_limit, observation_samples, seed
    )
    fam = family(n)
    details = []
    agree_all = True
    for ex_d, sy_d in zip(ex_details, sy_details):
        j = ex_d.j
        cube = sy_d.cube
        assert cube is not None
        product_bits = (1 << (1 << n)) - 1
        for i in range(1, n + 1):
            if i != j:
                product_bits &= truth_table(fam.propositions[i - 1], n, max_n=max_n).bits
        agree = truth_table(Dnf((cube,)), n, max_n=max_n).bits == product_bits
        agree_all &= agree
        details.append(
            LeaveOneOutDetail(
                j, ex_d.nonzero and sy_d.nonzero, cube=cube, witness=ex_d.witness,
                modes_agree=agree,
            )
        )
    notes = list(ex_notes) + sy_notes
    if agree_all:
        notes.append("exhaustive and symbolic leave-one-out products agree")
    return TheoremReport(
        n,
        "both",
        ex_ok and sy_ok and agree_all,
        ex_joint and sy_joint,
        tuple(details),
        ex_components,
        obs,
        tuple(notes),
    )
