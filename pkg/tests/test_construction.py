"""Tests for the family construction."""

import pytest

from jointmutex import (
    count_sat,
    cube_and,
    dnf_and,
    eterm,
    eterms,
    exclusion_set,
    family,
    is_zero,
    proposition,
)

from conftest import dnf


def test_exclusion_set_members():
    assert exclusion_set(1, 4).members == (2, 3, 4)
    assert exclusion_set(2, 3).members == (1, 3)
    assert exclusion_set(1, 4).excluded == 1


def test_exclusion_set_out_of_range():
    with pytest.raises(ValueError):
        exclusion_set(5, 4)
    with pytest.raises(ValueError):
        exclusion_set(0, 4)
    with pytest.raises(ValueError):
        exclusion_set(1, 1)


def test_eterms_small_cases():
    assert [str(c) for c in eterms(1, 3).eterms] == ["A2' A3", "A2 A3'"]
    assert [str(c) for c in eterms(4, 4).eterms] == [
        "A1' A2 A3",
        "A1 A2' A3",
        "A1 A2 A3'",
    ]


def test_eterms_rejects_small_n():
    with pytest.raises(ValueError):
        eterms(1, 2)


def test_eterm_rejects_own_variable():
    with pytest.raises(ValueError):
        eterm(2, 4, 2)


@pytest.mark.parametrize("n", range(3, 9))
def test_eterm_shape(n):
    for j in range(1, n + 1):
        ts = eterms(j, n)
        members = exclusion_set(j, n).members
        assert len(ts.eterms) == n - 1
        for pos_k, c in enumerate(ts.eterms):
            # fixes exactly the variables other than j
            assert c.vars_mask == ((1 << n) - 1) ^ (1 << (j - 1))
            # single negation, on the k-th member in canonical order
            assert c.neg.bit_count() == 1
            assert c.neg == 1 << (members[pos_k] - 1)


def test_proposition_examples():
    assert proposition(2, 3) == dnf("A1' A3 + A1 A3'")
    assert proposition(1, 4) == dnf("A2' A3 A4 + A2 A3' A4 + A2 A3 A4'")


@pytest.mark.parametrize("n", range(3, 13))
def test_proposition_count_sat(n):
    # disjoint e-terms, each fixing n-1 variables, so 2 rows apiece
    for j in range(1, n + 1):
        assert count_sat(proposition(j, n), n) == 2 * (n - 1)


def test_family_two_is_the_hand_built_pair():
    fam = family(2)
    assert fam.propositions == (dnf("A1' A2"), dnf("A1 A2'"))
    assert is_zero(dnf_and(*fam.propositions), 2)


def test_family_small_cases_match_explicit_formulas():
    assert [str(p) for p in family(3).propositions] == [
        "A2' A3 + A2 A3'",
        "A1' A3 + A1 A3'",
        "A1' A2 + A1 A2'",
    ]
    assert [str(p) for p in family(4).propositions] == [
        "A2' A3 A4 + A2 A3' A4 + A2 A3 A4'",
        "A1' A3 A4 + A1 A3' A4 + A1 A3 A4'",
        "A1' A2 A4 + A1 A2' A4 + A1 A2 A4'",
        "A1' A2 A3 + A1 A2' A3 + A1 A2 A3'",
    ]


def test_family_rejects_n_below_two():
    with pytest.raises(ValueError):
        family(1)


@pytest.mark.parametrize("n", range(2, 10))
def test_family_invariants(n):
    fam = family(n)
    assert len(fam.propositions) == n
    for j, p in enumerate(fam.propositions, 1):
        assert not is_zero(p, n)
        if n >= 3:
            # proposition j never mentions its own variable
            assert all(c.polarity(j) is None for c in p.cubes)
        # its cubes are pairwise contradictory
        for a_idx in range(len(p.cubes)):
            for b_idx in range(a_idx + 1, len(p.cubes)):
                assert cube_and(p.cubes[a_idx], p.cubes[b_idx]).is_bottom


def test_naive_recipe_at_two_variables_breaks_the_joint_zero():
    # Applying the general recipe at n=2 would give A2' and A1', whose
    # conjunction is satisfied at 00; the hand-built pair is mandatory.
    naive = dnf_and(dnf("A2'"), dnf("A1'"))
    assert not is_zero(naive, 2)
