import random

import pytest

from conftest import random_framework
from prefarg import Framework, UnknownArgumentError


def test_attackers_example1(example1):
    assert example1.attackers("c") == {"a", "b", "d"}


def test_attackers_isolated_argument():
    assert Framework("x").attackers("x") == frozenset()


def test_attackers_self_attack():
    fw = Framework("x", [("x", "x")])
    assert fw.attackers("x") == {"x"}


def test_attackers_unknown_argument(example1):
    with pytest.raises(UnknownArgumentError):
        example1.attackers("z")


def test_defends_example1(example1):
    assert example1.defends({"a", "d"}, "a")


def test_defends_unattacked_is_vacuous(example1):
    fw = Framework("xy", [("x", "y")])
    assert fw.defends(set(), "x")


def test_defends_uncountered_attacker():
    fw = Framework("xy", [("x", "y")])
    assert not fw.defends(set(), "y")


def test_defends_unknown_argument():
    fw = Framework("xy", [("x", "y")])
    with pytest.raises(UnknownArgumentError):
        fw.defends({"z"}, "y")


def test_connected_components_example1(example1):
    assert example1.connected_components() == (frozenset("abcd"),)


def test_connected_components_two_blocks():
    fw = Framework("abcd", [("a", "b"), ("c", "d")])
    assert fw.connected_components() == (frozenset("ab"), frozenset("cd"))


def test_connected_components_isolated_singletons():
    fw = Framework("abc")
    assert fw.connected_components() == (frozenset("a"), frozenset("b"), frozenset("c"))


def test_restrict_example1(example1):
    sub = example1.restrict({"a", "b"})
    assert sub == Framework("ab", [("a", "b")])


def test_restrict_identity(example1):
    assert example1.restrict(example1.arguments) == example1


def test_restrict_empty(example1):
    assert example1.restrict(set()) == Framework()


def test_restrict_unknown_argument(example1):
    with pytest.raises(UnknownArgumentError):
        example1.restrict({"a", "z"})


def test_has_cycle_three_cycle():
    fw = Framework("abc", [("a", "c"), ("c", "b"), ("b", "a")])
    assert fw.has_cycle()


def test_has_cycle_single_argument():
    assert not Framework("a").has_cycle()


def test_has_cycle_self_attack():
    assert Framework("a", [("a", "a")]).has_cycle()


def test_bidirectional_attacks_example1(example1):
    assert example1.bidirectional_attacks() == {
        ("a", "c"),
        ("c", "a"),
        ("b", "c"),
        ("c", "b"),
        ("c", "d"),
        ("d", "c"),
    }


def test_bidirectional_attacks_one_way():
    assert Framework("xy", [("x", "y")]).bidirectional_attacks() == frozenset()


def test_bidirectional_attacks_self_attack():
    assert Framework("x", [("x", "x")]).bidirectional_attacks() == {("x", "x")}


def test_attack_endpoints_must_exist():
    with pytest.raises(UnknownArgumentError):
        Framework("a", [("a", "b")])


def test_bad_argument_name_rejected():
    with pytest.raises(ValueError):
        Framework(["not ok"])


def test_components_partition_properties():
    rng = random.Random(11)
    for _ in range(60):
        fw = random_framework(rng, rng.randrange(0, 9), rng.random())
        components = fw.connected_components()
        union = set()
        for block in components:
            assert block, "components must be nonempty"
            assert not (block & union), "components must be disjoint"
            union |= block
        assert union == set(fw.arguments)


def test_restriction_properties():
    rng = random.Random(12)
    for _ in range(60):
        fw = random_framework(rng, rng.randrange(1, 9), rng.random())
        subset = {a for a in fw.arguments if rng.random() < 0.6}
        sub = fw.restrict(subset)
        assert sub.attacks <= fw.attacks
        if sub.has_cycle():
            assert fw.has_cycle()
        for name in subset:
            assert sub.attackers(name) == fw.attackers(name) & subset
