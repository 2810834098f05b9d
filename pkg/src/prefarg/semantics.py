"""Complete labellings: verification, the grounded fixpoint, and enumeration."""

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .errors import DomainMismatchError, SizeLimitError, UnknownArgumentError
from .framework import Framework

IN = "in"
OUT = "out"
UNDEC = "undec"
LABELS = (IN, OUT, UNDEC)

DEFAULT_LABELLING_CAP = 20


@dataclass(frozen=True)
class Labelling:
    """Total assignment of in/out/undec, stored as the three argument sets."""

    in_args: frozenset[str]
    out_args: frozenset[str]
    undec_args: frozenset[str]

    def __init__(
        self,
        in_args: Iterable[str] = (),
        out_args: Iterable[str] = (),
        undec_args: Iterable[str] = (),
    ):
        i, o, u = frozenset(in_args), frozenset(out_args), frozenset(undec_args)
        if i & o or i & u or o & u:
            raise ValueError("labelling sets overlap")
        object.__setattr__(self, "in_args", i)
        object.__setattr__(self, "out_args", o)
        object.__setattr__(self, "undec_args", u)

    @classmethod
    def from_map(cls, mapping: Mapping[str, str]) -> "Labelling":
        sets: dict[str, set[str]] = {IN: set(), OUT: set(), UNDEC: set()}
        for name, label in mapping.items():
            if label not in sets:
                raise ValueError(f"bad label {label!r} for argument {name!r}")
            sets[label].add(name)
        return cls(sets[IN], sets[OUT], sets[UNDEC])

    @cached_property
    def _label_of(self) -> dict[str, str]:
        table = {a: IN for a in self.in_args}
        table.update((a, OUT) for a in self.out_args)
        table.update((a, UNDEC) for a in self.undec_args)
        return table

    def label(self, name: str) -> str:
        try:
            return self._label_of[name]
        except KeyError:
            raise UnknownArgumentError(f"argument {name!r} is not labelled") from None

    def arguments(self) -> frozenset[str]:
        return self.in_args | self.out_args | self.undec_args

    def as_map(self) -> dict[str, str]:
        return dict(self._label_of)

    def restrict(self, keep: Iterable[str]) -> "Labelling":
        keep_set = frozenset(keep)
        return Labelling(
            self.in_args & keep_set, self.out_args & keep_set, self.undec_args & keep_set
        )


@dataclass(frozen=True)
class Violation:
    """First argument at which a labelling breaks one of the three clauses."""

    argument: str
    clause: int
    message: str


def require_total(framework: Framework, labelling: Labelling) -> None:
    """Raise unless the labelling covers the framework's arguments exactly."""
    if labelling.arguments() != framework.arguments:
        missing = sorted(framework.arguments - labelling.arguments())
        extra = sorted(labelling.arguments() - framework.arguments)
        raise DomainMismatchError(
            f"labelling does not match the framework (missing {missing}, extra {extra})"
        )


def completeness_violation(framework: Framework, labelling: Labelling) -> Violation | None:
    """Check the three completeness clauses; report the first failure.

    Clause 1: an argument is in exactly when all its attackers are out.
    Clause 2: an argument is out exactly when some attacker is in.
    Clause 3: an argument is undec exactly when neither of the above holds.
    """
    require_total(framework, labelling)
    for name in sorted(framework.arguments):
        attackers = framework.attackers(name)
        all_out = attackers <= labelling.out_args
        some_in = bool(attackers & labelling.in_args)
        label = labelling.label(name)
        if label == IN and not all_out:
            return Violation(name, 1, f"{name} is in but has a non-out attacker")
        if label == OUT and not some_in:
            return Violation(name, 2, f"{name} is out but has no in attacker")
        if label == UNDEC and (all_out or some_in):
            reason = "all attackers out" if all_out else "an in attacker"
            return Violation(name, 3, f"{name} is undec but has {reason}")
    return None


def is_complete(framework: Framework, labelling: Labelling) -> bool:
    return completeness_violation(framework, labelling) is None


def grounded_labelling(framework: Framework) -> Labelling:
    """Least fixpoint: unattacked arguments in, their targets out, and so on."""
    in_set: set[str] = set()
    out_set: set[str] = set()
    changed = True
    while changed:
        changed = False
        for name in framework.arguments:
            if name in in_set or name in out_set:
                continue
            attackers = framework.attackers(name)
            if attackers <= out_set:
                in_set.add(name)
                changed = True
            elif attackers & in_set:
                out_set.add(name)
                changed = True
    undec = framework.arguments - in_set - out_set
    return Labelling(in_set, out_set, undec)


def enumerate_complete(
    framework: Framework, cap: int = DEFAULT_LABELLING_CAP
) -> list[Labelling]:
    """All complete labellings, ordered by sorted in-set then out-set.

    The grounded labels are forced and fixed up front; the remaining
    arguments are branched over {in, out, undec} with pruning as soon as a
    clause is unsatisfiable. Refuses frameworks above `cap` arguments.
    """
    count = len(framework.arguments)
    if count > cap:
        raise SizeLimitError(
            f"enumeration over {count} arguments exceeds the cap of {cap}"
        )
    grounded = grounded_labelling(framework)
    assign: dict[str, str] = {a: IN for a in grounded.in_args}
    assign.update((a, OUT) for a in grounded.out_args)
    free = sorted(framework.arguments - set(assign))
    results: list[Labelling] = []

    def alive_around(name: str) -> bool:
        # Only the freshly assigned argument and its neighbours can newly fail.
        affected = {name} | set(framework.targets(name)) | set(framework.attackers(name))
        for node in affected:
            label = assign.get(node)
            if label is None:
                continue
            attacker_labels = [assign.get(b) for b in framework.attackers(node)]
            open_slots = any(lb is None for lb in attacker_labels)
            if label == IN:
                if any(lb in (IN, UNDEC) for lb in attacker_labels):
                    return False
            elif label == OUT:
                if not open_slots and IN not in attacker_labels:
                    return False
            else:
                if IN in attacker_labels:
                    return False
                if not open_slots and all(lb == OUT for lb in attacker_labels):
                    return False
        return True

    def search(index: int) -> None:
        if index == len(free):
            candidate = Labelling.from_map(assign)
            if is_complete(framework, candidate):
                results.append(candidate)
            return
        name = free[index]
        for label in LABELS:
            assign[name] = label
            if alive_around(name):
                search(index + 1)
        del assign[name]

    search(0)
    results.sort(key=lambda l: (tuple(sorted(l.in_args)), tuple(sorted(l.out_args))))
    return results
