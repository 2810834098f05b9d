import itertools
import random

import pytest

from conftest import random_framework
from prefarg import (
    IN,
    OUT,
    UNDEC,
    DomainMismatchError,
    Framework,
    Labelling,
    SizeLimitError,
    completeness_violation,
    enumerate_complete,
    grounded_labelling,
    is_complete,
)


def as_triple(labelling):
    return (
        tuple(sorted(labelling.in_args)),
        tuple(sorted(labelling.out_args)),
        tuple(sorted(labelling.undec_args)),
    )


def test_is_complete_example1(example1):
    assert is_complete(example1, Labelling(in_args="ad", out_args="bc"))


def test_is_complete_rejects_all_undec_on_one_way_pair(two_arg):
    assert not is_complete(two_arg, Labelling(undec_args="ab"))


def test_is_complete_empty_framework():
    assert is_complete(Framework(), Labelling())


def test_violation_reports_first_argument_and_clause(two_arg):
    violation = completeness_violation(two_arg, Labelling(undec_args="ab"))
    assert violation.argument == "a"
    assert violation.clause == 3


def test_violation_in_clause():
    fw = Framework("ab", [("a", "b")])
    violation = completeness_violation(fw, Labelling(in_args="ab"))
    assert violation.argument == "b"
    assert violation.clause == 1


def test_violation_out_clause():
    fw = Framework("ab", [("a", "b")])
    violation = completeness_violation(fw, Labelling(out_args="a", in_args="b"))
    assert violation.argument == "a"
    assert violation.clause == 2


def test_labelling_domain_mismatch(example1):
    with pytest.raises(DomainMismatchError):
        is_complete(example1, Labelling(in_args="a"))


def test_labelling_overlap_rejected():
    with pytest.raises(ValueError):
        Labelling(in_args="a", out_args="a")


def test_enumerate_complete_example1(example1):
    found = {as_triple(l) for l in enumerate_complete(example1)}
    assert found == {
        ((), (), ("a", "b", "c", "d")),
        (("a", "d"), ("b", "c"), ()),
        (("c",), ("a", "b", "d"), ()),
    }


def test_enumerate_complete_single_unattacked():
    labellings = enumerate_complete(Framework("a"))
    assert [as_triple(l) for l in labellings] == [(("a",), (), ())]


def test_enumerate_complete_self_attacker_matches_brute_force():
    fw = Framework("a", [("a", "a")])
    brute = [
        Labelling.from_map({"a": label})
        for label in (IN, OUT, UNDEC)
        if is_complete(fw, Labelling.from_map({"a": label}))
    ]
    assert [as_triple(l) for l in brute] == [((), (), ("a",))]
    assert [as_triple(l) for l in enumerate_complete(fw)] == [((), (), ("a",))]


def test_enumerate_complete_respects_cap():
    fw = Framework([f"n{i}" for i in range(5)])
    with pytest.raises(SizeLimitError):
        enumerate_complete(fw, cap=4)


def test_enumeration_matches_exhaustive_scan():
    rng = random.Random(21)
    for _ in range(40):
        fw = random_framework(rng, rng.randrange(0, 6), rng.random())
        names = sorted(fw.arguments)
        expected = set()
        for combo in itertools.product((IN, OUT, UNDEC), repeat=len(names)):
            lab = Labelling.from_map(dict(zip(names, combo)))
            if is_complete(fw, lab):
                expected.add(as_triple(lab))
        assert {as_triple(l) for l in enumerate_complete(fw)} == expected


def test_all_enumerated_labellings_are_complete():
    rng = random.Random(22)
    for _ in range(40):
        fw = random_framework(rng, rng.randrange(0, 8), rng.random() * 0.5)
        for lab in enumerate_complete(fw):
            assert is_complete(fw, lab)


def test_grounded_is_among_complete_labellings():
    rng = random.Random(23)
    for _ in range(40):
        fw = random_framework(rng, rng.randrange(0, 8), rng.random() * 0.5)
        grounded = grounded_labelling(fw)
        assert is_complete(fw, grounded)
        assert as_triple(grounded) in {as_triple(l) for l in enumerate_complete(fw)}


def test_is_complete_invariant_under_renaming():
    rng = random.Random(24)
    for _ in range(40):
        fw = random_framework(rng, rng.randrange(1, 7), rng.random())
        names = sorted(fw.arguments)
        shuffled = names[:]
        rng.shuffle(shuffled)
        mapping = dict(zip(names, (f"r{n}" for n in shuffled)))
        renamed = Framework(
            mapping.values(), [(mapping[s], mapping[t]) for s, t in fw.attacks]
        )
        labels = {n: rng.choice((IN, OUT, UNDEC)) for n in names}
        lab = Labelling.from_map(labels)
        renamed_lab = Labelling.from_map({mapping[n]: labels[n] for n in names})
        assert is_complete(fw, lab) == is_complete(renamed, renamed_lab)


def test_enumeration_output_is_sorted(example1):
    keys = [
        (tuple(sorted(l.in_args)), tuple(sorted(l.out_args)))
        for l in enumerate_complete(example1)
    ]
    assert keys == sorted(keys)
