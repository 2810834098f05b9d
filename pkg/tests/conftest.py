import random

import pytest

from prefarg import IN, OUT, UNDEC, Framework, Labelling, PreferenceOrder

EXAMPLE1_ATTACKS = [
    ("a", "b"),
    ("a", "c"),
    ("c", "a"),
    ("b", "c"),
    ("c", "b"),
    ("d", "c"),
    ("c", "d"),
]

EXAMPLE1_APX = """\
arg(a). arg(b). arg(c). arg(d).
att(a,b). att(a,c). att(c,a). att(b,c). att(c,b). att(d,c). att(c,d).
"""

RANK_FIGURE_ATTACKS = [
    ("b", "a"),
    ("f", "b"),
    ("e", "b"),
    ("c", "e"),
    ("d", "c"),
    ("e", "c"),
]


@pytest.fixture
def example1() -> Framework:
    return Framework("abcd", EXAMPLE1_ATTACKS)


@pytest.fixture
def two_arg() -> Framework:
    return Framework("ab", [("a", "b")])


@pytest.fixture
def rank_figure() -> Framework:
    return Framework("abcdef", RANK_FIGURE_ATTACKS)


@pytest.fixture
def rank_figure_labelling() -> Labelling:
    return Labelling(in_args="abdf", undec_args="ce")


def random_framework(rng: random.Random, size: int, prob: float) -> Framework:
    names = [f"x{i}" for i in range(size)]
    attacks = [(s, t) for s in names for t in names if rng.random() < prob]
    return Framework(names, attacks)


def random_labelling(rng: random.Random, framework: Framework) -> Labelling:
    return Labelling.from_map(
        {name: rng.choice((IN, OUT, UNDEC)) for name in sorted(framework.arguments)}
    )


def random_order(rng: random.Random, framework: Framework) -> PreferenceOrder:
    """Random CC-wise total order in canonical component grouping."""
    classes = []
    for component in framework.connected_components():
        members = sorted(component)
        rng.shuffle(members)
        chain = [[members[0]]]
        for name in members[1:]:
            if rng.random() < 0.5:
                chain[-1].append(name)
            else:
                chain.append([name])
        classes.extend(frozenset(cls) for cls in chain)
    return PreferenceOrder(classes)


def all_labellings(framework: Framework):
    """Every total labelling of a small framework."""
    import itertools

    names = sorted(framework.arguments)
    for combo in itertools.product((IN, OUT, UNDEC), repeat=len(names)):
        yield Labelling.from_map(dict(zip(names, combo)))


def all_frameworks(names: tuple[str, ...]):
    """Every framework over the given argument names."""
    pairs = [(s, t) for s in names for t in names]
    for mask in range(1 << len(pairs)):
        yield Framework(names, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
