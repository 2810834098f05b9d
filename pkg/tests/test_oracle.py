import random

import pytest

from conftest import random_framework
from prefarg import (
    Framework,
    Labelling,
    SizeLimitError,
    brute_force_ex,
    enumerate_orders,
    is_complete,
    reduce,
    validate_order,
    weak_orders,
)

ORDERED_BELL = {0: 1, 1: 1, 2: 3, 3: 13, 4: 75}


def test_weak_orders_on_two_elements():
    found = set(weak_orders("ab"))
    assert found == {
        (frozenset("a"), frozenset("b")),
        (frozenset("b"), frozenset("a")),
        (frozenset("ab"),),
    }


@pytest.mark.parametrize("size", [0, 1, 2, 3, 4])
def test_weak_order_counts(size):
    items = [f"e{i}" for i in range(size)]
    orders = list(weak_orders(items))
    assert len(orders) == ORDERED_BELL[size]
    assert len(set(orders)) == len(orders)


def test_two_singleton_components_have_one_order():
    fw = Framework("ab")
    assert len(list(enumerate_orders(fw))) == 1


def test_component_product_law():
    fw = Framework("abpqr", [("a", "b"), ("p", "q"), ("q", "r")])
    assert len(list(enumerate_orders(fw))) == ORDERED_BELL[2] * ORDERED_BELL[3]


def test_enumerated_orders_are_unique_and_valid():
    rng = random.Random(61)
    for _ in range(25):
        fw = random_framework(rng, rng.randrange(0, 6), rng.random())
        orders = list(enumerate_orders(fw))
        assert len({o.classes for o in orders}) == len(orders)
        for order in orders:
            assert validate_order(fw, order)


def test_enumerate_orders_respects_component_cap():
    fw = Framework("abc", [("a", "b"), ("b", "c")])
    with pytest.raises(SizeLimitError):
        list(enumerate_orders(fw, component_cap=2))


def test_brute_force_mutual_undec_pair_only_under_reduction_three():
    fw = Framework("ab", [("a", "b")])
    both_undec = Labelling(undec_args="ab")
    found, order = brute_force_ex(fw, both_undec, 3)
    assert found
    assert is_complete(reduce(fw, order, 3), both_undec)
    assert brute_force_ex(fw, both_undec, 1) == (False, None)


def test_brute_force_complete_labelling_under_reduction_two(example1):
    found, order = brute_force_ex(example1, Labelling(in_args="ad", out_args="bc"), 2)
    assert found
    assert validate_order(example1, order)


def test_brute_force_witness_is_first_in_enumeration_order():
    fw = Framework("ab", [("a", "b")])
    labelling = Labelling(in_args="b", out_args="a")
    found, order = brute_force_ex(fw, labelling, 1)
    assert found
    expected = next(
        o for o in enumerate_orders(fw) if is_complete(reduce(fw, o, 1), labelling)
    )
    assert order == expected
