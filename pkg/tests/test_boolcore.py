"""Unit and property tests for the cube/DNF kernel."""

import random
from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jointmutex import (
    BOTTOM,
    TOP,
    ZERO,
    Assignment,
    CapacityError,
    Cube,
    Dnf,
    Literal,
    count_sat,
    cube_and,
    dnf_and,
    equivalent,
    evaluate,
    family,
    is_zero,
    truth_table,
    witness,
)

from conftest import cube, dnf, random_dnf


# --- cube construction and conjunction -------------------------------------

def test_cube_of_collapses_duplicates():
    assert cube("A1 A1 A2") == cube("A1 A2")


def test_cube_of_opposite_polarities_is_bottom():
    assert Cube.of(Literal(1), Literal(1, False)) is BOTTOM


def test_cube_and_contradicts_on_polarity_clash():
    assert cube_and(cube("A1' A2"), cube("A1 A2'")) is BOTTOM


def test_cube_and_unions_literals():
    assert cube_and(cube("A1' A3 A4"), cube("A1' A2 A4")) == cube("A1' A2 A3 A4")
    assert cube_and(cube("A2' A3 A4"), cube("A1' A3 A4")) == cube("A1' A2' A3 A4")


def test_cube_and_idempotent():
    c = cube("A1 A2' A3")
    assert cube_and(c, c) == c


def _all_cubes(n):
    """Every cube over variables 1..n, plus the contradiction."""
    out = [BOTTOM]
    for polarities in product((None, True, False), repeat=n):
        lits = [
            Literal(v, pol)
            for v, pol in enumerate(polarities, 1)
            if pol is not None
        ]
        out.append(Cube.of(*lits))
    return out


def test_cube_and_laws_by_enumeration():
    cubes = _all_cubes(4)
    for a in cubes:
        assert cube_and(a, BOTTOM) is BOTTOM
        assert cube_and(BOTTOM, a) is BOTTOM
        assert cube_and(a, a) == a
        for b in cubes:
            ab = cube_and(a, b)
            assert ab == cube_and(b, a)
            for c in cubes[:: 9]:
                assert cube_and(ab, c) == cube_and(a, cube_and(b, c))


def test_distinct_minterms_are_disjoint():
    for n in (3, 4):
        minterms = [
            Cube.of(*(Literal(v, bool(bs & (1 << (v - 1)))) for v in range(1, n + 1)))
            for bs in range(1 << n)
        ]
        for a, b in combinations(minterms, 2):
            assert cube_and(a, b) is BOTTOM


# --- DNF construction and conjunction ---------------------------------------

def test_dnf_rejects_bottom_and_duplicates():
    with pytest.raises(ValueError):
        Dnf((BOTTOM,))
    c = cube("A1")
    with pytest.raises(ValueError):
        Dnf((c, c))
    assert Dnf.of([c, BOTTOM, c]) == Dnf((c,))


def test_dnf_and_of_first_two_family_members():
    fam = family(3)
    got = dnf_and(fam.propositions[0], fam.propositions[1])
    assert got == dnf("A1' A2' A3 + A1 A2 A3'")
    tt = truth_table(got, 3)
    assert [r for r in range(8) if tt[r]] == [0b001, 0b110]


def test_dnf_and_annihilator_and_identity():
    x = dnf("A1 A2 + A3'")
    assert dnf_and(x, ZERO) == ZERO
    assert dnf_and(ZERO, x) == ZERO
    top = Dnf((TOP,))
    assert dnf_and(x, top) == x
    assert equivalent(dnf_and(top, x), x, 3)


# --- evaluation and truth tables --------------------------------------------

def test_evaluate_family_member_on_figure_rows():
    p1 = family(3).propositions[0]
    assert evaluate(p1, Assignment((0, 0, 1))) is True
    assert evaluate(p1, Assignment((0, 1, 1))) is False
    assert evaluate(ZERO, Assignment((1, 0, 1))) is False


def test_evaluate_rejects_out_of_range_variable():
    with pytest.raises(ValueError):
        evaluate(dnf("A4"), Assignment((0, 1)))


def test_truth_table_of_first_proposition():
    assert truth_table(family(3).propositions[0], 3).bitstring() == "01100110"


def test_truth_table_of_zero_and_joint():
    assert truth_table(ZERO, 3).bitstring() == "00000000"
    fam = family(4)
    joint = fam.propositions[0]
    for p in fam.propositions[1:]:
        joint = dnf_and(joint, p)
    assert truth_table(joint, 4).bits == 0


def test_truth_table_row_order_uses_first_variable_as_msb():
    tt = truth_table(dnf("A1"), 3)
    assert tt.bitstring() == "00001111"
    assert truth_table(dnf("A3"), 3).bitstring() == "01010101"


def test_truth_table_capacity():
    with pytest.raises(CapacityError):
        truth_table(dnf("A1"), 21)
    # explicit override allows it
    assert truth_table(dnf("A1"), 21, max_n=21).ones() == 1 << 20


def test_is_zero_is_structural():
    fam = family(3)
    joint = fam.propositions[0]
    for p in fam.propositions[1:]:
        joint = dnf_and(joint, p)
    assert is_zero(joint, 3)
    assert not is_zero(fam.propositions[0], 3)
    assert is_zero(ZERO, 3)


def test_count_sat_matches_figures():
    assert count_sat(family(3).propositions[0], 3) == 4
    assert count_sat(family(4).propositions[0], 4) == 6
    assert count_sat(ZERO, 4) == 0


def test_witness_examples():
    fam = family(3)
    assert witness(fam.propositions[:2], 3) == Assignment((0, 0, 1))
    assert witness(fam.propositions, 3) is None
    assert witness([dnf("A1")], 3) == Assignment((1, 0, 0))


def test_equivalent_examples():
    fam = family(4)
    triple = dnf_and(dnf_and(fam.propositions[0], fam.propositions[1]), fam.propositions[2])
    assert equivalent(triple, dnf("A1 A2 A3 A4'"), 4)
    assert equivalent(triple, triple, 4)
    assert not equivalent(family(3).propositions[0], family(3).propositions[1], 3)


# --- properties ---------------------------------------------------------------

_lits = st.builds(
    Literal, st.integers(min_value=1, max_value=8), st.booleans()
)
_cubes = st.builds(lambda ls: Cube.of(*ls), st.lists(_lits, max_size=8))
_dnfs = st.builds(Dnf.of, st.lists(_cubes, max_size=5))
_assignments = st.builds(
    lambda bs: Assignment(tuple(bs)),
    st.lists(st.integers(0, 1), min_size=8, max_size=8),
)


@given(_dnfs, _dnfs, _assignments)
def test_dnf_and_agrees_with_pointwise_and(x, y, asg):
    assert evaluate(dnf_and(x, y), asg) == (evaluate(x, asg) and evaluate(y, asg))


@given(_dnfs, _dnfs)
@settings(max_examples=60)
def test_dnf_and_table_is_bitwise_and(x, y):
    assert (
        truth_table(dnf_and(x, y), 8).bits
        == truth_table(x, 8).bits & truth_table(y, 8).bits
    )


@given(st.lists(_dnfs, min_size=2, max_size=4))
@settings(max_examples=60)
def test_pairwise_zero_implies_joint_zero(formulas):
    products = {
        (i, j): dnf_and(formulas[i], formulas[j])
        for i, j in combinations(range(len(formulas)), 2)
    }
    if any(is_zero(p, 8) for p in products.values()):
        joint = formulas[0]
        for f in formulas[1:]:
            joint = dnf_and(joint, f)
        assert is_zero(joint, 8)


def test_count_sat_complement():
    rng = random.Random(7)
    for _ in range(50):
        x = random_dnf(rng, 6)
        tt = truth_table(x, 6)
        assert count_sat(x, 6) + tt.zeros() == 1 << 6


def test_truth_table_count_invariant_under_partitioning():
    # Counting a table in chunks must match counting it whole.
    x = family(5).propositions[2]
    tt = truth_table(x, 5)
    chunked = sum(sum(tt[r] for r in range(a, a + 8)) for a in range(0, 32, 8))
    assert chunked == tt.ones()
