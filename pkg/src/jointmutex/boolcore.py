"""Value-semantics kernel for cubes, DNF formulas, assignments, and truth tables.

Variables are 1-based integers: ``VarId`` 3 is the variable printed ``A3``.
Two bit conventions coexist and must not be confused:

* cube masks (``Cube.pos`` / ``Cube.neg``): bit ``v - 1`` stands for
  variable ``v``;
* truth-table rows: row ``r`` gives variable 1 the most significant bit of
  ``r``, so rows enumerate the assignments 00..0, 00..1, ..., 11..1 in
  ascending order.

Every type here is immutable and hashable.  Operations never mutate their
inputs, so values are safe to share across threads; row-enumeration helpers
may be partitioned across workers without affecting results.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Optional

VarId = int

#: Exhaustive operations refuse more than 2**DEFAULT_MAX_VARS rows unless the
#: caller raises the cap explicitly.
DEFAULT_MAX_VARS = 20


class CapacityError(Exception):
    """An exhaustive enumeration would exceed the configured row cap."""


def _check_capacity(n: int, max_n: int) -> None:
    if n < 0:
        raise ValueError(f"variable count must be non-negative, got {n}")
    if n > max_n:
        raise CapacityError(
            f"enumeration over {n} variables exceeds the cap of {max_n} "
            f"(2**{max_n} rows); raise the cap explicitly to proceed"
        )


def _iter_bits(mask: int) -> Iterator[int]:
    """Yield 1-based variable indices for the set bits of a mask."""
    while mask:
        low = mask & -mask
        yield low.bit_length()
        mask ^= low


@dataclass(frozen=True, order=True)
class Literal:
    """A variable or its negation; ``Literal(3, positive=False)`` prints ``A3'``."""

    var: VarId
    positive: bool = True

    def __post_init__(self) -> None:
        if self.var < 1:
            raise ValueError(f"variable index must be >= 1, got {self.var}")

    def negated(self) -> Literal:
        return Literal(self.var, not self.positive)

    def __str__(self) -> str:
        return f"A{self.var}" if self.positive else f"A{self.var}'"


@dataclass(frozen=True)
class Cube:
    """A conjunction of literals over distinct variables, or the contradiction.

    ``pos`` and ``neg`` are bitmasks of positively and negatively occurring
    variables (bit ``v - 1`` marks variable ``v``).  The empty cube is the
    constant-true conjunction.  The contradiction is the distinguished value
    ``BOTTOM``; it carries no literals and absorbs under conjunction.  It is
    an ordinary value, not an error.
    """

    pos: int = 0
    neg: int = 0
    is_bottom: bool = False

    def __post_init__(self) -> None:
        if self.pos < 0 or self.neg < 0:
            raise ValueError("literal masks must be non-negative")
        if self.is_bottom:
            if self.pos or self.neg:
                raise ValueError("the contradiction cube carries no literals")
        elif self.pos & self.neg:
            raise ValueError(
                "a variable cannot occur positively and negatively in one cube"
            )

    @classmethod
    def of(cls, *literals: Literal) -> Cube:
        """Build a cube from literals.

        Repeated literals of equal polarity collapse; opposite polarities on
        the same variable make the whole conjunction contradictory, so the
        result is ``BOTTOM``.
        """
        pos = neg = 0
        for lit in literals:
            bit = 1 << (lit.var - 1)
            if lit.positive:
                pos |= bit
            else:
                neg |= bit
        if pos & neg:
            return BOTTOM
        return cls(pos, neg)

    @property
    def vars_mask(self) -> int:
        return self.pos | self.neg

    def max_var(self) -> int:
        """Largest variable index mentioned; 0 for BOTTOM and the true cube."""
        return self.vars_mask.bit_length()

    def width(self) -> int:
        """Number of variables the cube fixes."""
        return self.vars_mask.bit_count()

    def is_minterm(self, n: int) -> bool:
        """True when the cube fixes all of variables 1..n."""
        return not self.is_bottom and self.vars_mask == (1 << n) - 1

    def literals(self) -> tuple[Literal, ...]:
        """Literals in ascending variable order (empty for BOTTOM)."""
        out = [Literal(v, True) for v in _iter_bits(self.pos)]
        out.extend(Literal(v, False) for v in _iter_bits(self.neg))
        out.sort(key=lambda lit: lit.var)
        return tuple(out)

    def polarity(self, var: VarId) -> Optional[bool]:
        """Polarity of ``var`` in this cube, or None when it is free."""
        bit = 1 << (var - 1)
        if self.pos & bit:
            return True
        if self.neg & bit:
            return False
        return None

    def satisfied_by(self, asg: Assignment) -> bool:
        if self.is_bottom:
            return False
        m = asg.true_mask
        return (self.pos & m) == self.pos and (self.neg & m) == 0

    def __and__(self, other: Cube) -> Cube:
        return cube_and(self, other)

    def __str__(self) -> str:
        if self.is_bottom:
            return "⊥"
        if not self.vars_mask:
            return "1"
        return " ".join(str(lit) for lit in self.literals())


#: The constant-true (empty) conjunction.
TOP = Cube()

#: The contradiction.
BOTTOM = Cube(is_bottom=True)


def cube_and(a: Cube, b: Cube) -> Cube:
    """Conjunction of two cubes.

    Returns ``BOTTOM`` when either input is ``BOTTOM`` or when some variable
    occurs with opposite polarities; otherwise the union of the literals.
    """
    if a.is_bottom or b.is_bottom:
        return BOTTOM
    pos = a.pos | b.pos
    neg = a.neg | b.neg
    if pos & neg:
        return BOTTOM
    return Cube(pos, neg)


@dataclass(frozen=True)
class Dnf:
    """A disjunction of cubes in a fixed order.

    Stored cubes are never ``BOTTOM`` and never repeat; the empty cube list
    is the constant-false formula.  No minimization beyond dropping exact
    duplicates is performed, so equality is structural.
    """

    cubes: tuple[Cube, ...] = ()

    def __post_init__(self) -> None:
        if any(c.is_bottom for c in self.cubes):
            raise ValueError("a DNF never stores the contradiction cube")
        if len(set(self.cubes)) != len(self.cubes):
            raise ValueError("a DNF never stores duplicate cubes")

    @classmethod
    def of(cls, cubes: Iterable[Cube]) -> Dnf:
        """Build a DNF, dropping contradictions and duplicate cubes.

        The first occurrence of each distinct cube keeps its position.
        """
        out: list[Cube] = []
        seen: set[Cube] = set()
        for c in cubes:
            if c.is_bottom or c in seen:
                continue
            seen.add(c)
            out.append(c)
        return cls(tuple(out))

    def max_var(self) -> int:
        return max((c.max_var() for c in self.cubes), default=0)

    def __and__(self, other: Dnf) -> Dnf:
        return dnf_and(self, other)

    def __str__(self) -> str:
        if not self.cubes:
            return "0"
        return " + ".join(str(c) for c in self.cubes)


#: The constant-false formula.
ZERO = Dnf()


def dnf_and(x: Dnf, y: Dnf) -> Dnf:
    """Conjunction of two DNF formulas by cross-distributing their cubes.

    Contradictory cross products are dropped, as are duplicates; surviving
    cubes appear in cross-product order (x-major).
    """
    out: list[Cube] = []
    seen: set[Cube] = set()
    for a in x.cubes:
        for b in y.cubes:
            c = cube_and(a, b)
            if c.is_bottom or c in seen:
                continue
            seen.add(c)
            out.append(c)
    return Dnf(tuple(out))


@dataclass(frozen=True)
class Assignment:
    """One input row: ``values[k]`` is the value (0 or 1) of variable k+1."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(v not in (0, 1) for v in self.values):
            raise ValueError("assignment values must be 0 or 1")

    @property
    def n(self) -> int:
        return len(self.values)

    @classmethod
    def from_row(cls, row: int, n: int) -> Assignment:
        """Decode a truth-table row index (variable 1 as the most significant bit)."""
        if not 0 <= row < (1 << n):
            raise ValueError(f"row {row} out of range for {n} variables")
        return cls(tuple((row >> (n - k)) & 1 for k in range(1, n + 1)))

    def row(self) -> int:
        r = 0
        for v in self.values:
            r = (r << 1) | v
        return r

    @cached_property
    def true_mask(self) -> int:
        """Cube-mask view: bit ``v - 1`` set when variable v is assigned 1."""
        m = 0
        for k, v in enumerate(self.values):
            if v:
                m |= 1 << k
        return m

    def bitstring(self) -> str:
        return "".join(str(v) for v in self.values)

    def __str__(self) -> str:
        return self.bitstring()


@dataclass(frozen=True)
class TruthTable:
    """Function values on all ``2**n`` rows; bit ``r`` of ``bits`` is row ``r``."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("variable count must be non-negative")
        if not 0 <= self.bits < (1 << (1 << self.n)):
            raise ValueError(f"bits out of range for {self.n} variables")

    def __len__(self) -> int:
        return 1 << self.n

    def __getitem__(self, row: int) -> int:
        if not 0 <= row < len(self):
            raise IndexError(f"row {row} out of range")
        return (self.bits >> row) & 1

    def __iter__(self) -> Iterator[int]:
        return (self[r] for r in range(len(self)))

    def ones(self) -> int:
        return self.bits.bit_count()

    def zeros(self) -> int:
        return len(self) - self.ones()

    def is_zero(self) -> bool:
        return self.bits == 0

    def first_one(self) -> Optional[int]:
        """Index of the first satisfying row, or None."""
        if self.bits == 0:
            return None
        return (self.bits & -self.bits).bit_length() - 1

    def bitstring(self) -> str:
        """Row values as text, row 0 leftmost."""
        return "".join(str((self.bits >> r) & 1) for r in range(len(self)))

    def __and__(self, other: TruthTable) -> TruthTable:
        if self.n != other.n:
            raise ValueError("truth tables disagree on the variable count")
        return TruthTable(self.n, self.bits & other.bits)


@lru_cache(maxsize=512)
def _positive_literal_table(var: VarId, n: int) -> int:
    """Table integer of the bare variable ``var`` over ``2**n`` rows."""
    rows = 1 << n
    block = 1 << (n - var)
    period = block << 1
    # Rows satisfying the variable form the upper half of each period.
    chunk = ((1 << block) - 1) << block
    repeat = ((1 << rows) - 1) // ((1 << period) - 1)
    return chunk * repeat


def _cube_table_bits(c: Cube, n: int) -> int:
    if c.is_bottom:
        return 0
    full = (1 << (1 << n)) - 1
    bits = full
    for v in _iter_bits(c.pos):
        bits &= _positive_literal_table(v, n)
    for v in _iter_bits(c.neg):
        bits &= full ^ _positive_literal_table(v, n)
    return bits


def _dnf_table_bits(x: Dnf, n: int) -> int:
    bits = 0
    for c in x.cubes:
        bits |= _cube_table_bits(c, n)
    return bits


def _require_vars(x: Dnf, n: int) -> None:
    if x.max_var() > n:
        raise ValueError(
            f"formula mentions variable {x.max_var()} but only {n} are declared"
        )


def evaluate(x: Dnf, asg: Assignment) -> bool:
    """True when some cube of ``x`` is satisfied by the assignment."""
    _require_vars(x, asg.n)
    return any(c.satisfied_by(asg) for c in x.cubes)


def truth_table(x: Dnf, n: int, max_n: int = DEFAULT_MAX_VARS) -> TruthTable:
    """Tabulate ``x`` on all ``2**n`` rows (capped at ``max_n`` variables)."""
    _check_capacity(n, max_n)
    _require_vars(x, n)
    return TruthTable(n, _dnf_table_bits(x, n))


def is_zero(x: Dnf, n: int) -> bool:
    """Whether ``x`` is false on every assignment over n variables.

    Decided structurally: a DNF stores no contradiction cubes, so any stored
    cube is satisfiable and a non-empty cube list is non-zero.  No rows are
    enumerated.
    """
    _require_vars(x, n)
    return not x.cubes


def count_sat(x: Dnf, n: int, max_n: int = DEFAULT_MAX_VARS) -> int:
    """Number of the ``2**n`` rows on which ``x`` is true."""
    return truth_table(x, n, max_n=max_n).ones()


def witness(
    xs: Iterable[Dnf], n: int, max_n: int = DEFAULT_MAX_VARS
) -> Optional[Assignment]:
    """First row (in table order) satisfying every formula, or None."""
    _check_capacity(n, max_n)
    acc = (1 << (1 << n)) - 1
    for x in xs:
        _require_vars(x, n)
        acc &= _dnf_table_bits(x, n)
        if acc == 0:
            return None
    return Assignment.from_row((acc & -acc).bit_length() - 1, n)


def equivalent(x: Dnf, y: Dnf, n: int, max_n: int = DEFAULT_MAX_VARS) -> bool:
    """Exhaustive equivalence: identical truth tables over n variables."""
    return truth_table(x, n, max_n=max_n).bits == truth_table(y, n, max_n=max_n).bits
