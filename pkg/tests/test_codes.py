import math

import pytest
from hypothesis import given, strategies as st

from permstat.codes import (CodeVector, a_code, a_code_inverse, b_code, b_code_inverse,
                            format_code, format_pairs, induced_set, lehmer, lehmer_inverse,
                            ones_set, parse_code)
from permstat.perm import PermutationError, all_codes, all_perms, parse
from permstat import stats

import oracles

WORKED_PAIRS = {(5, 6), (5, 7), (6, 7), (2, 3), (2, 4), (1, 3)}


def code_strategy(max_n=9):
    return st.integers(1, max_n).flatmap(
        lambda n: st.tuples(*(st.integers(1, i) for i in range(1, n + 1)))).map(CodeVector)


def test_code_vector_validation():
    with pytest.raises(PermutationError, match="entry 2"):
        CodeVector((1, 3))
    with pytest.raises(PermutationError):
        CodeVector((0,))
    with pytest.raises(PermutationError):
        lehmer_inverse((2, 1))
    assert parse_code("(1,1,3,2,5,5,5)").entries == (1, 1, 3, 2, 5, 5, 5)
    assert format_code(CodeVector((1, 2))) == "(1,2)"


@pytest.mark.parametrize("perm, code", [
    ("3142765", (1, 1, 3, 2, 5, 5, 5)),
    ("1234", (1, 2, 3, 4)),
    ("321", (1, 1, 1)),
])
def test_lehmer_examples(perm, code):
    assert lehmer(parse(perm)).entries == code
    assert lehmer_inverse(CodeVector(code)) == parse(perm)


@pytest.mark.parametrize("perm, code", [
    ("2413765", (1, 1, 3, 2, 5, 5, 5)),
    ("1234567", (1, 2, 3, 4, 5, 6, 7)),
    ("21", (1, 1)),
])
def test_a_code_examples(perm, code):
    assert a_code(parse(perm)).entries == code


def test_a_code_rebuild_yields_2413765():
    # The vacancy procedure gives 2413765, the permutation whose A-code this is.
    assert a_code_inverse(CodeVector((1, 1, 3, 2, 5, 5, 5))) == parse("2413765")


@pytest.mark.parametrize("perm, code", [
    ("2431756", (1, 1, 3, 2, 5, 5, 5)),
    ("579328164", (1, 1, 3, 3, 1, 6, 2, 6, 3)),
    ("123456", (1, 2, 3, 4, 5, 6)),
])
def test_b_code_examples(perm, code):
    assert b_code(parse(perm)).entries == code
    assert b_code_inverse(CodeVector(code)) == parse(perm)


@pytest.mark.parametrize("n", range(1, 7))
def test_codes_match_oracles(n):
    for p in all_perms(n):
        assert lehmer(p).entries == oracles.lehmer(p.word)
        assert a_code(p).entries == oracles.lehmer(oracles.inverse(p.word))
        assert b_code(p).entries == oracles.b_code(p.word)


@pytest.mark.parametrize("n", range(1, 8))
def test_round_trips_exhaustive(n):
    for p in all_perms(n):
        assert lehmer_inverse(lehmer(p)) == p
        assert b_code_inverse(b_code(p)) == p
        assert a_code_inverse(a_code(p)) == p
    for c in all_codes(n):
        assert lehmer(lehmer_inverse(c)) == c
        assert b_code(b_code_inverse(c)) == c
        assert a_code(a_code_inverse(c)) == c


@pytest.mark.parametrize("coder", [lehmer, a_code, b_code])
def test_codes_are_bijections(coder):
    images = {coder(p) for p in all_perms(6)}
    assert len(images) == math.factorial(6)
    assert all(1 <= v <= i for c in images for i, v in enumerate(c, 1))


@given(code_strategy())
def test_code_round_trip_property(c):
    assert lehmer(lehmer_inverse(c)) == c
    assert b_code(b_code_inverse(c)) == c


def test_induced_set_worked_table():
    u = induced_set(CodeVector((1, 1, 3, 2, 5, 5, 5)))
    assert u == WORKED_PAIRS
    assert format_pairs(u) == "{(1,3),(2,3),(2,4),(5,6),(5,7),(6,7)}"


def test_induced_set_small():
    assert induced_set(CodeVector((1, 2, 3, 4))) == frozenset()
    assert induced_set(CodeVector((1, 1))) == {(1, 2)}


@given(code_strategy())
def test_induced_set_size(c):
    # at step i exactly i - l_i survivors exceed the chosen element
    u = induced_set(c)
    assert len(u) == sum(i - v for i, v in enumerate(c, 1))
    assert all(i < j for i, j in u)


@pytest.mark.parametrize("code, ones", [
    ((1, 1, 3, 3, 1, 6, 2, 6, 3), {1, 2, 5}),
    ((1, 2, 3, 4, 5), {1}),
    ((1, 1, 1), {1, 2, 3}),
])
def test_ones_set(code, ones):
    assert ones_set(CodeVector(code)) == ones


@pytest.mark.parametrize("n", range(1, 8))
def test_code_lemmas_exhaustive(n):
    for p in all_perms(n):
        assert ones_set(lehmer(p)) == oracles.Lmip(p.word)
        assert ones_set(a_code(p)) == oracles.Lmil(p.word)
        assert induced_set(a_code(p)) == oracles.Inv(p.word)
        assert sum(i - b for i, b in enumerate(b_code(p), 1)) == stats.sor(p)
