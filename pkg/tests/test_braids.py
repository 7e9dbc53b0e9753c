import pytest
from hypothesis import given, strategies as st

from braidlink.braids import (
    BraidParseError,
    BraidWord,
    Permutation,
    braid_text,
    closure_permutation,
    components,
    components_of_antipodal_closure,
    concat,
    conjugate,
    crossing_strands,
    exponent_sum,
    free_reduce,
    invert,
    linking_matrix,
    parse_braid,
    stabilize,
    tau,
)
from strategies import braid_words


# -- construction and parsing ------------------------------------------------

def test_word_validation():
    BraidWord(1, ())
    BraidWord(3, (1, -2, 1))
    with pytest.raises(ValueError):
        BraidWord(0, ())
    with pytest.raises(ValueError):
        BraidWord(2, (2,))
    with pytest.raises(ValueError):
        BraidWord(3, (0,))


def test_parse_header_and_macro():
    assert parse_braid("B9 1 D45 8") == BraidWord(9, (1, 4, 5, 4, 8))
    assert parse_braid("B2") == BraidWord(2, ())
    assert parse_braid("1 -2 1 -2") == BraidWord(3, (1, -2, 1, -2))


def test_parse_generator_names_and_commas():
    assert parse_braid("s3, s2^-1, -1") == BraidWord(4, (3, -2, -1))
    assert parse_braid("B5 s4") == BraidWord(5, (4,))


@pytest.mark.parametrize(
    "bad",
    ["", "   ", "B3 4", "B1 1", "x7", "s0", "0", "B2 s1^2", "1 2 zz"],
)
def test_parse_rejects_malformed(bad):
    with pytest.raises(BraidParseError):
        parse_braid(bad)


def test_print_canonical():
    assert braid_text(BraidWord(9, (1, 4, 5, 4, 8))) == "B9 1 4 5 4 8"
    assert braid_text(BraidWord(2, ())) == "B2"


@given(braid_words())
def test_parse_print_round_trip(w):
    assert parse_braid(braid_text(w)) == w


# -- group operations ----------------------------------------------------------

def test_concat():
    assert concat(BraidWord(3, (1,)), BraidWord(3, (2,))) == BraidWord(3, (1, 2))
    w = BraidWord(3, (1, -2))
    assert concat(w, BraidWord(3, ())) == w
    with pytest.raises(ValueError):
        concat(BraidWord(2, (1,)), BraidWord(3, (1,)))


def test_invert():
    assert invert(BraidWord(3, (1, -2))) == BraidWord(3, (2, -1))
    assert invert(BraidWord(3, ())) == BraidWord(3, ())
    assert invert(BraidWord(6, (4, 5, 4))) == BraidWord(6, (-4, -5, -4))


def test_free_reduce():
    assert free_reduce(BraidWord(2, (1, -1))) == BraidWord(2, ())
    assert free_reduce(BraidWord(3, (1, 2, -2, -1))) == BraidWord(3, ())
    stays = BraidWord(3, (1, -2, 1))
    assert free_reduce(stays) == stays


@given(braid_words())
def test_word_times_inverse_reduces_to_identity(w):
    assert free_reduce(concat(w, invert(w))).letters == ()


def test_tau():
    assert tau(BraidWord(9, (1, 4, 5, 4, 8))) == BraidWord(9, (8, 5, 4, 5, 1))
    assert tau(BraidWord(9, (-2,))) == BraidWord(9, (-7,))


@given(braid_words())
def test_tau_is_involution_preserving_exponent_sum(w):
    assert tau(tau(w)) == w
    assert exponent_sum(tau(w)) == exponent_sum(w)
    assert tau(w).strand_count == w.strand_count


def test_exponent_sum():
    assert exponent_sum(BraidWord(3, (1, -2, 1))) == 1
    assert exponent_sum(BraidWord(2, ())) == 0


@given(braid_words(), braid_words())
def test_exponent_sum_additive(a, b):
    if a.strand_count != b.strand_count:
        return
    assert exponent_sum(concat(a, b)) == exponent_sum(a) + exponent_sum(b)


def test_conjugate_and_stabilize():
    w = BraidWord(3, (1,))
    assert conjugate(w, BraidWord(3, ())) == w
    assert conjugate(w, BraidWord(3, (2,))) == BraidWord(3, (2, 1, -2))
    assert stabilize(BraidWord(2, (1,)), 1) == BraidWord(3, (1, 2))
    with pytest.raises(ValueError):
        stabilize(w, 2)


# -- closure combinatorics ------------------------------------------------------

def test_closure_permutation_basics():
    assert closure_permutation(BraidWord(2, (1,))).cycles() == ((1, 2),)
    assert closure_permutation(BraidWord(3, ())).is_identity


@given(braid_words(), braid_words())
def test_closure_permutation_composes(a, b):
    if a.strand_count != b.strand_count:
        return
    left = closure_permutation(concat(a, b))
    right = closure_permutation(b) * closure_permutation(a)
    assert left == right


def test_components_fixtures():
    hopf = components(BraidWord(2, (1, 1)))
    assert hopf.component_count == 2
    assert hopf.component_of_strand[0] != hopf.component_of_strand[1]
    assert components(BraidWord(2, (1,))).component_count == 1
    unlink = components(BraidWord(2, ()))
    assert unlink.component_count == 2


@given(braid_words())
def test_component_count_preserved_by_stabilization(w):
    base = components(w).component_count
    assert components(stabilize(w, 1)).component_count == base
    assert components(stabilize(w, -1)).component_count == base


def test_crossing_strands_traces_positions():
    # strand names are starting positions; each letter swaps two of them
    trace = crossing_strands(BraidWord(3, (1, 2, 1)))
    assert trace == [(1, 2, 1), (1, 3, 1), (2, 3, 1)]


def test_linking_matrix_hopf():
    assert linking_matrix(BraidWord(2, (1, 1))) == ((0, 1), (1, 0))
    assert linking_matrix(BraidWord(2, (-1, -1))) == ((0, -1), (-1, 0))


def test_linking_matrix_diagonal_zero_and_symmetry():
    m = linking_matrix(BraidWord(4, (1, 1, 3, 3, 2, -2)))
    assert all(m[i][i] == 0 for i in range(len(m)))
    assert all(m[i][j] == m[j][i] for i in range(len(m)) for j in range(len(m)))


@given(braid_words(max_strands=5, max_len=12), braid_words(max_strands=5, max_len=6))
def test_linking_values_invariant_under_conjugation(w, g):
    if w.strand_count != g.strand_count:
        return
    before = sorted(
        value for row in linking_matrix(w) for value in row
    )
    after = sorted(
        value for row in linking_matrix(conjugate(w, g)) for value in row
    )
    assert before == after


def test_permutation_type():
    p = Permutation((2, 3, 1))
    assert p(1) == 2 and p(3) == 1
    assert (p * p).images == (3, 1, 2)
    assert p.cycles() == ((1, 2, 3),)
    with pytest.raises(ValueError):
        Permutation((1, 1, 3))


# -- reference braids ------------------------------------------------------------

def test_reference_closure_structure():
    from braidlink.fixtures import reference_braids

    braids = reference_braids()
    for word, singleton in ((braids.axis, 9), (braids.infinity, 5)):
        assert len(word.letters) == 58
        assert exponent_sum(word) == 54
        assert sum(1 for e in word.letters if e < 0) == 2
        comp = components(word)
        assert comp.component_count == 3
        sizes = sorted(len(comp.strands_in(c)) for c in range(3))
        assert sizes == [1, 4, 4]
        single = [c for c in range(3) if len(comp.strands_in(c)) == 1][0]
        assert comp.strands_in(single) == (singleton,)


def test_reference_cycles():
    from braidlink.fixtures import reference_braids

    braids = reference_braids()
    assert closure_permutation(braids.axis).cycles() == ((1, 3, 5, 7), (2, 8, 4, 6), (9,))
    assert closure_permutation(braids.infinity).cycles() == ((1, 3, 6, 8), (2, 9, 4, 7), (5,))


def test_antipodal_closure_of_half_words():
    from braidlink.fixtures import axis_half_braid, infinity_half_braid

    for half in (axis_half_braid(), infinity_half_braid()):
        anti = components_of_antipodal_closure(half)
        assert anti.component_count == 2
        assert sorted(len(anti.strands_in(c)) for c in range(2)) == [1, 8]
