import pytest
import fastcore.test as fct
from hypothesis import given, strategies as st

from cjm_sign_posets.core.sign_vectors import (SignVector, BlockTuple, normalize, to_block_tuple, from_block_tuple,
                                               canonical_sign_vectors, sign_changes)

raw_vectors = st.text(alphabet="+-0", min_size=1, max_size=9).filter(lambda s: set(s) != {"0"})


def test_normalize_flips_to_plus_first():
    fct.test_eq(str(normalize("-+0")), "+-0")
    fct.test_eq(str(normalize("00-+")), "00+-")
    fct.test_eq(normalize([0, 1, -1]).entries, (0, 1, -1))
    fct.test_eq(normalize("+−0").entries, (1, -1, 0))


def test_normalize_rejects_zero_and_junk():
    fct.test_fail(lambda: normalize("000"), contains="zero vector")
    fct.test_fail(lambda: normalize(""), contains="at least one entry")
    fct.test_fail(lambda: normalize("+x"), contains="Invalid sign symbol")


def test_sign_vector_properties():
    v = normalize("++0+0-0-+")
    fct.test_eq(v.n, 9)
    fct.test_eq(v.sign_changes, 2)
    fct.test_eq(v.support, (1, 2, 4, 6, 8, 9))
    fct.test_eq(v.rank, 6)
    fct.test_eq(sign_changes((1, 0, -1, -1, 0, 1)), 2)


def test_block_tuple_encoding():
    v = normalize("++0+0-0-+")
    t = to_block_tuple(v)
    fct.test_eq(t, BlockTuple.of(9, {1, 2, 4}, {6, 8}, {9}))
    fct.test_eq(t.l, 2)
    fct.test_eq(t.rank, 4)
    fct.test_eq(str(t), "({1,2,4},{6,8},{9})")
    fct.test_eq(str(from_block_tuple(t)), "++0+0-0-+")


def test_block_tuple_validation():
    fct.test_fail(lambda: BlockTuple.of(3, {1, 3}, {2}), contains="not ordered")
    fct.test_fail(lambda: BlockTuple.of(3, {1}, set()), contains="Empty block")
    fct.test_fail(lambda: BlockTuple.of(3, {4}), contains="not ordered")
    fct.test_fail(lambda: BlockTuple(3, ()), contains="at least one block")


def test_with_element():
    x = BlockTuple.of(9, {2, 4}, {6}, {8})
    fct.test_eq(x.with_element(2, 7), BlockTuple.of(9, {2, 4}, {6, 7}, {8}))
    fct.test_fail(lambda: x.with_element(1, 7), contains="not ordered")


def test_canonical_sign_vectors():
    vs = list(canonical_sign_vectors(3))
    fct.test_eq(len(vs), 13)
    fct.test_eq([str(v) for v in vs], sorted(str(v) for v in vs))
    fct.test_eq(len(set(vs)), 13)
    fct.test_eq(len(list(canonical_sign_vectors(4))), 40)


@pytest.mark.parametrize("n", range(1, 8))
def test_round_trip_exhaustive(n):
    for v in canonical_sign_vectors(n):
        fct.test_eq(from_block_tuple(to_block_tuple(v)), v)


@given(raw_vectors)
def test_encoding_preserves_sign_changes_and_support(raw):
    v = normalize(raw)
    t = to_block_tuple(v)
    fct.test_eq(t.l, v.sign_changes)
    fct.test_eq(t.support, v.support)
    fct.test_eq(from_block_tuple(t), v)


@given(raw_vectors)
def test_normalize_is_projective(raw):
    flipped = raw.translate(str.maketrans("+-", "-+"))
    fct.test_eq(normalize(raw), normalize(flipped))


def test_sign_vector_rejects_non_canonical():
    fct.test_fail(lambda: SignVector((-1, 1)), contains="not canonical")
    fct.test_fail(lambda: SignVector((0, -1, 1)), contains="not canonical")
    fct.test_fail(lambda: SignVector((0, 0)), contains="zero vector")
    fct.test_fail(lambda: SignVector((1, 2)), contains="must be 1, -1 or 0")
    fct.test_eq(SignVector((0, 1, -1)), normalize("0-+"))
