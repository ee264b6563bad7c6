import json

import pytest
from hypothesis import given, strategies as st

from oracles import conjugate_by_counting, hook_by_counting
from symplectic_csp.core import (
    InvalidTableau,
    KNTableau,
    Letter,
    Partition,
    alphabet,
    conjugate,
    hook,
    kappa,
    kn_violation,
    r_value,
    rank_to_signed,
    signed_to_rank,
)


@st.composite
def partitions(draw, max_size=12):
    parts = draw(st.lists(st.integers(1, 6), max_size=5))
    return Partition(tuple(sorted(parts, reverse=True)))


def test_alphabet_order():
    letters = alphabet(3)
    assert [str(x) for x in letters] == ["1", "2", "3", "3̄", "2̄", "1̄"]
    shuffled = [letters[k] for k in (4, 0, 5, 2, 1, 3)]
    assert sorted(shuffled) == letters
    assert all(a < b for a, b in zip(letters, letters[1:]))


def test_letter_rank_roundtrip():
    for m in range(1, 5):
        for r in range(1, 2 * m + 1):
            x = Letter.from_rank(r, m)
            assert x.rank(m) == r
            assert signed_to_rank(rank_to_signed(r, m), m) == r
    assert Letter.parse("3̄") == Letter(3, True) == Letter.parse("-3")
    assert Letter(2, True).weight(3) == (0, -1, 0)


def test_letter_out_of_range():
    with pytest.raises(ValueError):
        Letter(3).rank(2)
    with pytest.raises(ValueError):
        Letter.from_signed(0)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    assert Partition(()).size == 0
    assert Partition.parse("4,2,1") == Partition((4, 2, 1))
    assert Partition.parse("") == Partition(())


@pytest.mark.parametrize(
    "shape, expected",
    [((2, 1), (2, 1)), ((3,), (1, 1, 1)), ((4, 2, 1), (3, 2, 1, 1)), ((), ())],
)
def test_conjugate(shape, expected):
    assert conjugate(shape).parts == expected
    assert conjugate_by_counting(shape) == expected


@given(partitions())
def test_conjugate_involution(lam):
    assert lam.conjugate.conjugate == lam
    assert lam.conjugate.size == lam.size
    assert lam.conjugate.parts == conjugate_by_counting(lam.parts)


@given(partitions())
def test_hook_matches_counting(lam):
    for i, j in lam.cells():
        assert lam.hook((i, j)) == hook_by_counting(lam.parts, i, j) > 0


def test_hook_values():
    assert hook((2, 1), (1, 1)) == 3
    assert hook((1,), (1, 1)) == 1
    assert hook((2, 2, 2), (1, 1)) == 4
    with pytest.raises(ValueError):
        hook((2, 1), (2, 2))


def test_r_value():
    assert r_value((2, 1), (1, 1)) == -2
    assert r_value((2, 1), (2, 1)) == 2
    # (2,2,2): conjugate (3,3); rows i>j use lambda_i+lambda_j-i-j+2, others i+j-6
    table = {(i, j): r_value((2, 2, 2), (i, j)) for i in (1, 2, 3) for j in (1, 2)}
    assert table == {(1, 1): -4, (1, 2): -3, (2, 1): 3, (2, 2): -2, (3, 1): 2, (3, 2): 1}
    with pytest.raises(ValueError):
        r_value((2, 1), (3, 1))


def test_kappa():
    assert kappa((2, 1)) == 1
    assert kappa((5,)) == 0
    assert kappa((2, 2, 2)) == 6


def test_worked_tableau_weight():
    t = KNTableau.from_letters([[1, 3], [-3, -3], [-2, -1]], 3)
    assert t.weight == (0, -1, -1)
    assert KNTableau.highest_weight((3, 1), 3).weight == (3, 1, 0)
    assert KNTableau.from_letters([[-1]], 2).weight == (-1, 0)


def test_invalid_tableau_condition_two():
    rows = [[1, 2], [-3, -2], [-2, -1]]
    with pytest.raises(InvalidTableau) as exc:
        KNTableau.from_letters(rows, 3)
    v = exc.value.violation
    assert v.condition == 2 and v.column == 2
    assert "p+q=3>2" in v.detail


def test_valid_tableau_accepted():
    t = KNTableau.from_letters([[1, 3], [-3, -3], [-2, -1]], 3)
    assert t.is_valid()


def test_condition_one_and_three():
    ranks = lambda rows, m: [[signed_to_rank(x, m) for x in r] for r in rows]
    assert kn_violation(ranks([[2, 1]], 2), 2).condition == 1
    assert kn_violation(ranks([[1], [1]], 2), 2).condition == 1
    # 2,2-bar in both columns: i = j = 2 configuration
    v = kn_violation(ranks([[2, 2], [-2, -2]], 2), 2)
    assert v.condition == 3


def test_weight_parity_on_highest_weight():
    t = KNTableau.highest_weight((2, 2, 1), 4)
    assert sum(t.weight) % 2 == t.shape.size % 2


def test_json_roundtrip():
    t = KNTableau.from_letters([[1, 3], [-3, -3], [-2, -1]], 3)
    text = t.to_json()
    assert json.loads(text) == {"shape": [2, 2, 2], "rows": [["1", "3"], ["-3", "-3"], ["-2", "-1"]]}
    assert KNTableau.from_json(text, 3) == t
    assert KNTableau.from_json(text, 3).to_json() == text


def test_json_shape_mismatch():
    with pytest.raises(ValueError):
        KNTableau.from_dict({"shape": [2, 1], "rows": [["1", "2"]]}, 2)


def test_constructor_rejects_bad_fill():
    with pytest.raises(ValueError):
        KNTableau(Partition((2,)), ((1,),), 2)
    with pytest.raises(ValueError):
        KNTableau(Partition((1,)), ((5,),), 2)
    with pytest.raises(InvalidTableau):
        KNTableau.from_letters([[1], [2], [-2]], 2)
