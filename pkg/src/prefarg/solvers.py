"""Polynomial-time deciders for the four inverse problems, with witnesses.

Each decider answers whether some CC-wise total order turns the target
labelling into a complete labelling of the reduced framework. A positive
answer carries a witness order that `verify_witness` accepts; a negative
answer carries a certificate naming the violated condition and a witnessing
argument or attack.
"""

from collections import deque
from dataclasses import dataclass

from .errors import DomainMismatchError, InvalidOrderError
from .framework import Framework
from .preferences import PreferenceFunction, PreferenceOrder, pref_fn_to_order, validate_order
from .reductions import reduce
from .semantics import (
    OUT,
    Labelling,
    completeness_violation,
    is_complete,
    require_total,
)


@dataclass(frozen=True)
class Certificate:
    """Violated condition number plus one witnessing argument or attack."""

    condition: int
    witness: tuple[str, ...]
    detail: str = ""


@dataclass(frozen=True)
class Decision:
    yes: bool
    reduction: int
    witness: PreferenceOrder | None = None
    certificate: Certificate | None = None

    @property
    def verdict(self) -> str:
        return "yes" if self.yes else "no"


def _attack_between_in_and_undec(framework: Framework, labelling: Labelling):
    """First attack inside I x I, I x U or U x I, if any (condition 1)."""
    in_args, undec = labelling.in_args, labelling.undec_args
    for src, dst in sorted(framework.attacks):
        src_in, dst_in = src in in_args, dst in in_args
        if (src_in and dst_in) or (src_in and dst in undec) or (src in undec and dst_in):
            return (src, dst)
    return None


def _out_without_in_neighbour(framework: Framework, labelling: Labelling):
    """First out argument with no in-labelled attacker or target (condition 2)."""
    in_args = labelling.in_args
    for name in sorted(labelling.out_args):
        if not ((framework.attackers(name) | framework.targets(name)) & in_args):
            return name
    return None


def _shortest_cycle(framework: Framework) -> frozenset[str]:
    """Vertex set of a shortest directed cycle; the framework must have one.

    Ties break towards the smallest starting argument name.
    """
    best: tuple[int, str, frozenset[str]] | None = None
    for start in sorted(framework.arguments):
        dist = {start: 0}
        parent: dict[str, str] = {}
        queue = deque([start])
        while queue:
            node = queue.popleft()
            for nxt in sorted(framework.targets(node)):
                if nxt not in dist:
                    dist[nxt] = dist[node] + 1
                    parent[nxt] = node
                    queue.append(nxt)
        closers = [u for u in framework.attackers(start) if u in dist]
        if not closers:
            continue
        closer = min(closers, key=lambda u: (dist[u], u))
        length = dist[closer] + 1
        if best is None or length < best[0]:
            nodes = [closer]
            while nodes[-1] != start:
                nodes.append(parent[nodes[-1]])
            best = (length, start, frozenset(nodes))
    if best is None:
        raise AssertionError("no directed cycle found")
    return best[2]


def _layer_from(sub: Framework, seed: frozenset[str]) -> dict[str, int]:
    """Undirected breadth-first layers over a connected subframework."""
    neighbours: dict[str, set[str]] = {a: set() for a in sub.arguments}
    for src, dst in sub.attacks:
        neighbours[src].add(dst)
        neighbours[dst].add(src)
    layer = {a: 0 for a in seed}
    queue = deque(sorted(seed))
    while queue:
        node = queue.popleft()
        for nxt in neighbours[node]:
            if nxt not in layer:
                layer[nxt] = layer[node] + 1
                queue.append(nxt)
    return layer


def _discharge_out_attacks(framework: Framework, labelling: Labelling, bits: dict) -> None:
    """Keep attacks into out arguments, reverse attacks leaving them."""
    out_args = labelling.out_args
    for src, dst in framework.attacks:
        if src in out_args or dst in out_args:
            bits[(src, dst)] = 1 if dst in out_args else 0


def _trivial_yes(framework: Framework, reduction: int) -> Decision:
    return Decision(True, reduction, witness=PreferenceOrder.all_equivalent(framework))


def decide_ex1(framework: Framework, labelling: Labelling) -> Decision:
    """Inverse problem under reduction 1 (attack reflection).

    Positive exactly when no attack touches two in/undec arguments other
    than undec-undec pairs, every out argument has an in neighbour, and
    every component of the undec subframework contains a cycle.
    """
    require_total(framework, labelling)
    if completeness_violation(framework, labelling) is None:
        return _trivial_yes(framework, 1)
    bad_attack = _attack_between_in_and_undec(framework, labelling)
    if bad_attack is not None:
        return Decision(
            False,
            1,
            certificate=Certificate(1, bad_attack, "attack between in/undec labelled arguments"),
        )
    lonely_out = _out_without_in_neighbour(framework, labelling)
    if lonely_out is not None:
        return Decision(
            False,
            1,
            certificate=Certificate(2, (lonely_out,), "out argument with no in-labelled neighbour"),
        )
    undec_part = framework.restrict(labelling.undec_args)
    blocks = [undec_part.restrict(c) for c in undec_part.connected_components()]
    for sub in blocks:
        if not sub.has_cycle():
            return Decision(
                False,
                1,
                certificate=Certificate(
                    3, tuple(sorted(sub.arguments)), "undec component without a cycle"
                ),
            )
    bits: dict = {}
    for sub in blocks:
        layer = _layer_from(sub, _shortest_cycle(sub))
        for src, dst in sub.attacks:
            bits[(src, dst)] = 1 if layer[src] <= layer[dst] else 0
    _discharge_out_attacks(framework, labelling, bits)
    order = pref_fn_to_order(framework, PreferenceFunction(bits))
    return Decision(True, 1, witness=order)


def decide_ex2(framework: Framework, labelling: Labelling) -> Decision:
    """Inverse problem under reduction 2: positive iff already complete."""
    require_total(framework, labelling)
    violation = completeness_violation(framework, labelling)
    if violation is None:
        return _trivial_yes(framework, 2)
    return Decision(
        False,
        2,
        certificate=Certificate(violation.clause, (violation.argument,), violation.message),
    )


def decide_ex3(framework: Framework, labelling: Labelling) -> Decision:
    """Inverse problem under reduction 3 (reflection plus weak removal).

    Conditions 1 and 2 are as for reduction 1; condition 3 relaxes to
    requiring an undec neighbour for every undec argument.
    """
    require_total(framework, labelling)
    if completeness_violation(framework, labelling) is None:
        return _trivial_yes(framework, 3)
    bad_attack = _attack_between_in_and_undec(framework, labelling)
    if bad_attack is not None:
        return Decision(
            False,
            3,
            certificate=Certificate(1, bad_attack, "attack between in/undec labelled arguments"),
        )
    lonely_out = _out_without_in_neighbour(framework, labelling)
    if lonely_out is not None:
        return Decision(
            False,
            3,
            certificate=Certificate(2, (lonely_out,), "out argument with no in-labelled neighbour"),
        )
    undec = labelling.undec_args
    for name in sorted(undec):
        if not ((framework.attackers(name) | framework.targets(name)) & undec):
            return Decision(
                False,
                3,
                certificate=Certificate(3, (name,), "undec argument isolated among undec arguments"),
            )
    undec_part = framework.restrict(undec)
    bits: dict = {}
    for component in undec_part.connected_components():
        sub = undec_part.restrict(component)
        if all(sub.attackers(v) for v in component):
            for att in sub.attacks:
                bits[att] = 1
        elif sub.has_cycle():
            layer = _layer_from(sub, _shortest_cycle(sub))
            for src, dst in sub.attacks:
                bits[(src, dst)] = 1 if layer[src] <= layer[dst] else 0
        else:
            # No cycle to anchor on: reverse one attack to seed a mutual pair,
            # then layer outwards from its two endpoints.
            seed = min(sub.attacks)
            layer = _layer_from(sub, frozenset(seed))
            for src, dst in sub.attacks:
                bits[(src, dst)] = 1 if layer[src] <= layer[dst] else 0
            bits[seed] = 0
    _discharge_out_attacks(framework, labelling, bits)
    order = pref_fn_to_order(framework, PreferenceFunction(bits))
    return Decision(True, 3, witness=order)


def _rank_detail(framework: Framework, labelling: Labelling):
    """Fixpoint sweeps computing a ranking, or the reason none exists.

    Returns (psi, None, trace) on success and (None, (kind, argument), trace)
    on failure, where kind is "undec-unattacked" or "overflow". The trace
    records the value map after each sweep.
    """
    require_total(framework, labelling)
    if labelling.out_args:
        raise DomainMismatchError("ranking requires a labelling without out arguments")
    names = sorted(framework.arguments)
    bound = len(names)
    in_args, undec = labelling.in_args, labelling.undec_args
    targets = {u: sorted(framework.targets(u)) for u in names}
    undec_attackers = {u: sorted(framework.attackers(u) & undec) for u in names}
    in_targets = {u: [v for v in targets[u] if v in in_args] for u in names}
    psi = {u: 0 for u in names}
    trace: list[dict[str, int]] = []
    for _ in range((bound + 2) ** 2):
        changed = False
        for name in names:
            if name in in_args:
                value = psi[name]
                for other in targets[name]:
                    value = max(value, psi[other] + 1)
            elif name in undec:
                if not undec_attackers[name]:
                    return None, ("undec-unattacked", name), trace
                value = max(psi[name], min(psi[v] for v in undec_attackers[name]))
                for other in in_targets[name]:
                    value = max(value, psi[other] + 1)
            else:
                continue
            if value > bound:
                return None, ("overflow", name), trace
            if value != psi[name]:
                psi[name] = value
                changed = True
        trace.append(dict(psi))
        if not changed:
            return psi, None, trace
    raise AssertionError("rank sweep bound exceeded")


def rank(framework: Framework, labelling: Labelling) -> dict[str, int] | None:
    """Ranking of the arguments compatible with the labelling, or None.

    A ranking gives every attack touching an in argument a strictly larger
    value at the source, and every undec argument a value at least the
    minimum over its undec attackers. Requires a labelling without out
    arguments; values never exceed the argument count.
    """
    psi, _, _ = _rank_detail(framework, labelling)
    return psi


def is_valid_ranking(framework: Framework, labelling: Labelling, psi) -> bool:
    """Check the two ranking conditions for an out-free labelling."""
    require_total(framework, labelling)
    if labelling.out_args:
        raise DomainMismatchError("ranking validation requires an out-free labelling")
    if not framework.arguments <= set(psi):
        return False
    in_args, undec = labelling.in_args, labelling.undec_args
    for src, dst in framework.attacks:
        if (src in in_args or dst in in_args) and not psi[src] > psi[dst]:
            return False
    for name in undec:
        attackers = framework.attackers(name) & undec
        if not attackers:
            return False
        if psi[name] < min(psi[v] for v in attackers):
            return False
    return True


def decide_ex4(framework: Framework, labelling: Labelling) -> Decision:
    """Inverse problem under reduction 4 (attack removal).

    Out arguments must keep an in-labelled attacker since removal never adds
    attacks; the rest reduces to finding a ranking of the in/undec part, and
    a ranking yields the witness by dropping every attack that runs strictly
    downhill.
    """
    require_total(framework, labelling)
    if completeness_violation(framework, labelling) is None:
        return _trivial_yes(framework, 4)
    in_args, out_args = labelling.in_args, labelling.out_args
    for name in sorted(out_args):
        if not (framework.attackers(name) & in_args):
            return Decision(
                False,
                4,
                certificate=Certificate(1, (name,), "out argument without an in-labelled attacker"),
            )
    keep = framework.arguments - out_args
    core = framework.restrict(keep)
    psi, failure, _ = _rank_detail(core, labelling.restrict(keep))
    if psi is None:
        kind, argument = failure
        detail = (
            "undec argument without an undec attacker"
            if kind == "undec-unattacked"
            else "rank value exceeded the argument count"
        )
        return Decision(False, 4, certificate=Certificate(2, (argument,), detail))
    bits: dict = {}
    for src, dst in framework.attacks:
        if src in out_args or dst in out_args:
            bits[(src, dst)] = 1 if labelling.label(dst) == OUT else 0
        else:
            bits[(src, dst)] = 0 if psi[src] > psi[dst] else 1
    order = pref_fn_to_order(framework, PreferenceFunction(bits))
    return Decision(True, 4, witness=order)


DECIDERS = {1: decide_ex1, 2: decide_ex2, 3: decide_ex3, 4: decide_ex4}


def decide(framework: Framework, labelling: Labelling, reduction: int) -> Decision:
    try:
        decider = DECIDERS[reduction]
    except KeyError:
        raise ValueError(f"reduction index must be 1..4, got {reduction!r}") from None
    return decider(framework, labelling)


def verify_witness(
    framework: Framework, labelling: Labelling, reduction: int, order: PreferenceOrder
) -> bool:
    """True when the labelling is complete on the reduced framework."""
    if not validate_order(framework, order):
        raise InvalidOrderError("witness is not a CC-wise total order on the framework")
    return is_complete(reduce(framework, order, reduction), labelling)
