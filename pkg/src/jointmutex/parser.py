"""Text format for DNF formulas.

Grammar::

    formula  := "0" | term ("+" term)*
    term     := "1" | literal+
    literal  := "A" digits ["'"]

Literals inside a term are separated by whitespace; "&" and "*" are
tolerated as synonyms.  "0" is the constant-false formula and must stand
alone; "1" is the constant-true term.  There are no parentheses and no
negation of compound expressions.

The file format is one formula per line; lines starting with "#" are
comments, blank lines are ignored, and an optional leading header line
``vars=N`` fixes the variable count.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional

from .boolcore import Cube, Dnf, Literal, TOP


class ParseError(ValueError):
    """Formula text violates the grammar; ``position`` is the 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"column {position + 1}: {message}")
        self.position = position


@dataclass(frozen=True)
class ParseResult:
    """A parsed formula plus a warning flag for dropped contradictory terms.

    ``dropped_terms`` holds the 1-based positions of input terms that
    mentioned a variable with both polarities; such terms denote the
    contradiction and are omitted from the DNF rather than rejected.
    """

    dnf: Dnf
    dropped_terms: tuple[int, ...] = ()

    @property
    def has_warnings(self) -> bool:
        return bool(self.dropped_terms)


_TOKEN = re.compile(
    r"[ \t]+"
    r"|(?P<plus>\+)"
    r"|(?P<sep>[&*])"
    r"|(?P<one>1)"
    r"|(?P<zero>0)"
    r"|(?P<lit>A(?P<idx>\d+)(?P<primes>'*))"
)


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens: list[tuple[str, object, int]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup == "lit":
            idx = int(m.group("idx"))
            primes = m.group("primes")
            if idx == 0:
                raise ParseError("variable index must be at least 1", m.start("idx"))
            if len(primes) > 1:
                raise ParseError("at most one negation mark is allowed", m.start("primes") + 1)
            tokens.append(("lit", Literal(idx, not primes), m.start()))
        elif m.lastgroup is not None:
            tokens.append((m.lastgroup, m.group(), m.start()))
        pos = m.end()
    return tokens


def parse(text: str) -> ParseResult:
    """Parse formula text into a DNF.

    Within a term, a repeated variable of equal polarity collapses; with
    opposite polarities the term is contradictory and is dropped, flagged in
    the result.  Raises :class:`ParseError` on grammar violations.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty formula", len(text))
    if any(kind == "zero" for kind, _, _ in tokens):
        if len(tokens) != 1:
            bad = next(t for t in tokens if t[0] == "zero")
            raise ParseError("the constant '0' must stand alone", bad[2])
        return ParseResult(Dnf())

    cubes: list[Cube] = []
    dropped: list[int] = []
    term_no = 0
    i = 0
    while i < len(tokens):
        term_no += 1
        lits: list[Literal] = []
        saw_one = False
        start = i
        while i < len(tokens) and tokens[i][0] != "plus":
            kind, value, pos = tokens[i]
            if kind == "lit":
                lits.append(value)  # type: ignore[arg-type]
            elif kind == "one":
                saw_one = True
            i += 1
        if saw_one and lits:
            raise ParseError("the constant '1' cannot be combined with literals", tokens[start][2])
        if saw_one:
            cubes.append(TOP)
        elif lits:
            c = Cube.of(*lits)
            if c.is_bottom:
                dropped.append(term_no)
            else:
                cubes.append(c)
        else:
            pos = tokens[i][2] if i < len(tokens) else len(text)
            raise ParseError("expected a term", pos)
        i += 1  # skip the '+' (or run past the end)
    if tokens[-1][0] == "plus":
        raise ParseError("expected a term", len(text))
    return ParseResult(Dnf.of(cubes), tuple(dropped))


def render(x: Dnf) -> str:
    """Canonical text for a DNF.

    Cubes appear in stored order joined by " + "; literals within a cube
    ascend by variable, negation as a trailing apostrophe.  The empty DNF
    renders as "0" and the constant-true cube as "1".  ``parse(render(x))``
    reproduces ``x`` exactly.
    """
    return str(x)


@dataclass(frozen=True)
class FormulaFile:
    """Formulas read from a file, with the optional declared variable count."""

    formulas: tuple[Dnf, ...]
    declared_vars: Optional[int] = None
    #: (line number, term number) pairs for dropped contradictory terms.
    dropped_terms: tuple[tuple[int, int], ...] = ()

    def var_count(self) -> int:
        """Declared count if present, else the largest index mentioned."""
        if self.declared_vars is not None:
            return self.declared_vars
        return max((f.max_var() for f in self.formulas), default=0)


_VARS_LINE = re.compile(r"vars\s*=\s*(\d+)\s*$")


def read_formulas(lines: Iterable[str]) -> FormulaFile:
    """Read the one-formula-per-line file format."""
    formulas: list[Dnf] = []
    dropped: list[tuple[int, int]] = []
    declared: Optional[int] = None
    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _VARS_LINE.match(line)
        if m:
            if declared is not None or formulas:
                raise ParseError(
                    f"line {line_no}: 'vars=' header must appear once, before formulas", 0
                )
            declared = int(m.group(1))
            if declared < 1:
                raise ParseError(f"line {line_no}: variable count must be at least 1", 0)
            continue
        try:
            result = parse(line)
        except ParseError as exc:
            raise ParseError(f"line {line_no}: {exc.args[0]}", exc.position) from None
        formulas.append(result.dnf)
        dropped.extend((line_no, t) for t in result.dropped_terms)
    return FormulaFile(tuple(formulas), declared, tuple(dropped))
