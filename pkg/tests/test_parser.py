"""Formula text round trips, grammar errors, and the file format."""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jointmutex import (
    Cube,
    Dnf,
    Literal,
    ParseError,
    TOP,
    ZERO,
    family,
    leave_one_out,
    parse,
    proposition,
    read_formulas,
    render,
)

from conftest import random_dnf


def test_parse_two_cube_formula():
    got = parse("A2' A3 + A2 A3'")
    assert got.dnf == family(3).propositions[0]
    assert not got.has_warnings


def test_parse_zero():
    assert parse("0").dnf == ZERO


def test_parse_contradictory_term_is_dropped_with_warning():
    got = parse("A1 A1'")
    assert got.dnf == ZERO
    assert got.dropped_terms == (1,)
    got = parse("A1 A2 + A3 A3' + A2")
    assert got.dnf == Dnf((Cube.of(Literal(1), Literal(2)), Cube.of(Literal(2))))
    assert got.dropped_terms == (2,)


def test_parse_duplicate_literal_collapses():
    assert parse("A1 A1 A2").dnf == parse("A1 A2").dnf


def test_parse_double_prime_is_an_error():
    with pytest.raises(ParseError) as exc:
        parse("A2''")
    assert exc.value.position == 3


def test_parse_index_zero_is_an_error():
    with pytest.raises(ParseError):
        parse("A0")


def test_parse_reports_position_of_bad_character():
    with pytest.raises(ParseError) as exc:
        parse("A1 + B2")
    assert exc.value.position == 5


def test_parse_rejects_misplaced_zero_and_empty_terms():
    with pytest.raises(ParseError):
        parse("A1 + 0")
    with pytest.raises(ParseError):
        parse("A1 + + A2")
    with pytest.raises(ParseError):
        parse("A1 +")
    with pytest.raises(ParseError):
        parse("   ")


def test_parse_accepts_ampersand_and_star_separators():
    assert parse("A1 & A2 + A3 * A4'").dnf == parse("A1 A2 + A3 A4'").dnf


def test_parse_constant_true_term():
    assert parse("1").dnf == Dnf((TOP,))
    assert parse("A1 + 1").dnf == Dnf((Cube.of(Literal(1)), TOP))
    with pytest.raises(ParseError):
        parse("1 A2")


def test_render_examples():
    assert render(proposition(2, 3)) == "A1' A3 + A1 A3'"
    assert render(ZERO) == "0"
    assert render(Dnf((leave_one_out(4, 4),))) == "A1 A2 A3 A4'"


def test_round_trip_construction_outputs():
    for n in range(2, 11):
        for p in family(n).propositions:
            assert parse(render(p)).dnf == p


def test_round_trip_random_dnfs_seeded():
    rng = random.Random(2024)
    for _ in range(300):
        x = random_dnf(rng, 8, max_cubes=5)
        assert parse(render(x)).dnf == x


_lits = st.builds(Literal, st.integers(1, 9), st.booleans())
_cubes = st.builds(lambda ls: Cube.of(*ls), st.lists(_lits, max_size=6))
_dnfs = st.builds(Dnf.of, st.lists(_cubes, max_size=6))


@given(_dnfs)
def test_round_trip_property(x):
    assert parse(render(x)).dnf == x


@given(_dnfs)
def test_render_is_deterministic(x):
    assert render(x) == render(x)
    assert render(parse(render(x)).dnf) == render(x)


# --- file format -------------------------------------------------------------

def test_read_formulas_with_header_comments_and_blanks():
    ff = read_formulas(
        [
            "# a family of two",
            "",
            "vars=3",
            "A1' A2",
            "A1 A2'",
        ]
    )
    assert ff.declared_vars == 3
    assert ff.var_count() == 3
    assert len(ff.formulas) == 2


def test_read_formulas_infers_var_count():
    ff = read_formulas(["A1 A5'"])
    assert ff.declared_vars is None
    assert ff.var_count() == 5


def test_read_formulas_flags_dropped_terms_with_line_numbers():
    ff = read_formulas(["A1", "A2 A2' + A3"])
    assert ff.dropped_terms == ((2, 1),)


def test_read_formulas_rejects_late_header():
    with pytest.raises(ParseError):
        read_formulas(["A1", "vars=3"])


def test_read_formulas_reports_line_of_syntax_error():
    with pytest.raises(ParseError) as exc:
        read_formulas(["A1", "A2''"])
    assert "line 2" in str(exc.value)
