"""CC-wise preference orders, per-attack preference functions, conversions.

The bit convention throughout: assigning 1 to an attack (a, b) states that
the source is at least as preferred as the target (b is weakly below a);
assigning 0 states that the target is strictly preferred (a is strictly
below b). A function is consistent when no chain of these constraints
closes into a cycle containing a strict step.
"""

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Mapping

from .errors import (
    DomainMismatchError,
    InconsistentPreferenceError,
    InvalidOrderError,
    UnknownArgumentError,
)
from .framework import Attack, Framework


@dataclass(frozen=True)
class PreferenceOrder:
    """Ranked partition of arguments into equivalence classes, least first.

    Two arguments of the same connected component compare by class rank; the
    relative placement of classes from different components carries no
    meaning and is fixed only to keep serialisation deterministic.
    """

    classes: tuple[frozenset[str], ...]

    def __init__(self, classes: Iterable[Iterable[str]] = ()):
        tup = tuple(frozenset(c) for c in classes)
        seen: set[str] = set()
        for cls in tup:
            if not cls:
                raise InvalidOrderError("empty preference class")
            if cls & seen:
                raise InvalidOrderError("preference classes overlap")
            seen |= cls
        object.__setattr__(self, "classes", tup)

    @cached_property
    def _rank(self) -> dict[str, int]:
        return {a: i for i, cls in enumerate(self.classes) for a in cls}

    def arguments(self) -> frozenset[str]:
        return frozenset(self._rank)

    def rank(self, name: str) -> int:
        try:
            return self._rank[name]
        except KeyError:
            raise UnknownArgumentError(
                f"argument {name!r} is not covered by the order"
            ) from None

    def leq(self, a: str, b: str) -> bool:
        """a is at most as preferred as b (same-component pairs only)."""
        return self.rank(a) <= self.rank(b)

    def lt(self, a: str, b: str) -> bool:
        """a is strictly less preferred than b (same-component pairs only)."""
        return self.rank(a) < self.rank(b)

    @classmethod
    def all_equivalent(cls, framework: Framework) -> "PreferenceOrder":
        """The order that sees the arguments of each component as equals."""
        return cls(framework.connected_components())


def validate_order(framework: Framework, order: PreferenceOrder) -> bool:
    """True when the order is a CC-wise total order on the framework."""
    if order.arguments() != framework.arguments:
        return False
    component_of: dict[str, int] = {}
    for index, component in enumerate(framework.connected_components()):
        for name in component:
            component_of[name] = index
    for cls in order.classes:
        if len({component_of[a] for a in cls}) != 1:
            return False
    return True


@dataclass(frozen=True, eq=True)
class PreferenceFunction:
    """Total assignment of a 0/1 preference bit to every attack."""

    bits: dict[Attack, int]

    def __init__(self, bits: Mapping[Attack, int]):
        clean: dict[Attack, int] = {}
        for (src, dst), bit in dict(bits).items():
            if bit not in (0, 1):
                raise ValueError(f"bit for attack ({src},{dst}) must be 0 or 1")
            clean[(src, dst)] = int(bit)
        object.__setattr__(self, "bits", clean)

    def bit(self, attack: Attack) -> int:
        try:
            return self.bits[attack]
        except KeyError:
            raise DomainMismatchError(f"no bit assigned to attack {attack}") from None

    @property
    def zero_attacks(self) -> frozenset[Attack]:
        return frozenset(att for att, bit in self.bits.items() if bit == 0)

    @property
    def one_attacks(self) -> frozenset[Attack]:
        return frozenset(att for att, bit in self.bits.items() if bit == 1)


def _require_total_fn(framework: Framework, fn: PreferenceFunction) -> None:
    if set(fn.bits) != set(framework.attacks):
        raise DomainMismatchError(
            "preference function domain differs from the framework's attacks"
        )


def _strongly_connected(
    nodes: Iterable[str], successors: Callable[[str], Iterable[str]]
) -> dict[str, int]:
    """Iterative Tarjan; maps every node to a component id."""
    index: dict[str, int] = {}
    low: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    component: dict[str, int] = {}
    counter = 0
    next_id = 0
    for root in nodes:
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        work: list[tuple[str, Iterable[str]]] = [(root, iter(successors(root)))]
        while work:
            node, it = work[-1]
            pushed = False
            for nxt in it:
                if nxt not in index:
                    index[nxt] = low[nxt] = counter
                    counter += 1
                    stack.append(nxt)
                    on_stack.add(nxt)
                    work.append((nxt, iter(successors(nxt))))
                    pushed = True
                    break
                if nxt in on_stack:
                    low[node] = min(low[node], index[nxt])
            if pushed:
                continue
            work.pop()
            if low[node] == index[node]:
                while True:
                    top = stack.pop()
                    on_stack.discard(top)
                    component[top] = next_id
                    if top == node:
                        break
                next_id += 1
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
    return component


def _bfs_path(start: str, goal: str, successors: Callable[[str], Iterable[str]]) -> list[str]:
    """Shortest node path from start to goal (inclusive); assumes one exists."""
    if start == goal:
        return [start]
    parent: dict[str, str] = {}
    seen = {start}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        for nxt in sorted(successors(node)):
            if nxt in seen:
                continue
            parent[nxt] = node
            if nxt == goal:
                path = [goal]
                while path[-1] != start:
                    path.append(parent[path[-1]])
                return list(reversed(path))
            seen.add(nxt)
            queue.append(nxt)
    raise AssertionError("no path found inside a strongly connected set")


def consistency_certificate(
    framework: Framework, fn: PreferenceFunction
) -> tuple[str, ...] | None:
    """Return an inconsistent preference cycle as a node tuple, or None.

    The walk graph has an edge for every 1-bit attack and the converse of
    every 0-bit attack. A function is inconsistent exactly when some cycle
    of that graph uses a converse-of-0 edge, i.e. a strict preference step.
    """
    _require_total_fn(framework, fn)
    strict_edges = frozenset((t, s) for s, t in fn.zero_attacks)
    edges = strict_edges | fn.one_attacks
    succ: dict[str, list[str]] = {a: [] for a in framework.arguments}
    for src, dst in edges:
        succ[src].append(dst)
    component = _strongly_connected(sorted(framework.arguments), lambda a: succ[a])
    for src, dst in sorted(strict_edges):
        if component[src] == component[dst]:
            path = _bfs_path(dst, src, lambda a: succ[a])
            return (src,) + tuple(path[:-1])
    return None


def is_consistent(framework: Framework, fn: PreferenceFunction) -> bool:
    return consistency_certificate(framework, fn) is None


def order_to_pref_fn(framework: Framework, order: PreferenceOrder) -> PreferenceFunction:
    """Bit 0 on attacks whose source is strictly below the target, else 1."""
    if not validate_order(framework, order):
        raise InvalidOrderError("order is not a CC-wise total order on the framework")
    return PreferenceFunction(
        {(s, t): 0 if order.lt(s, t) else 1 for s, t in framework.attacks}
    )


def pref_fn_to_order(framework: Framework, fn: PreferenceFunction) -> PreferenceOrder:
    """Canonical CC-wise total order realising a consistent function.

    Constraints are read off the bits (0 on (a,b): a strictly below b; 1 on
    (a,b): b weakly below a), equal arguments are found as strongly
    connected sets of the constraint graph, and classes are ranked by the
    longest chain of strict constraints leading into them, which merges
    unconstrained arguments as low as possible.
    """
    certificate = consistency_certificate(framework, fn)
    if certificate is not None:
        raise InconsistentPreferenceError(
            "preference function has an inconsistent cycle", cycle=certificate
        )
    nodes = sorted(framework.arguments)
    weak: dict[str, set[str]] = {a: set() for a in nodes}
    strict: dict[str, set[str]] = {a: set() for a in nodes}
    for (src, dst), bit in fn.bits.items():
        if bit == 0:
            strict[src].add(dst)
        else:
            weak[dst].add(src)

    component = _strongly_connected(nodes, lambda a: weak[a] | strict[a])
    members: dict[int, list[str]] = {}
    for name in nodes:
        members.setdefault(component[name], []).append(name)

    # Condense to class-level edges; a strict edge forces a rank increase.
    edge_strict: dict[tuple[int, int], bool] = {}
    for src in nodes:
        for dst in strict[src]:
            key = (component[src], component[dst])
            if key[0] == key[1]:
                raise AssertionError("strict constraint inside an equivalence class")
            edge_strict[key] = True
    for src in nodes:
        for dst in weak[src]:
            key = (component[src], component[dst])
            if key[0] != key[1]:
                edge_strict.setdefault(key, False)

    indegree = {c: 0 for c in members}
    out: dict[int, list[tuple[int, bool]]] = {c: [] for c in members}
    for (a, b), is_strict in edge_strict.items():
        indegree[b] += 1
        out[a].append((b, is_strict))
    rank = {c: 0 for c in members}
    queue = deque(c for c in members if indegree[c] == 0)
    while queue:
        cls = queue.popleft()
        for nxt, is_strict in out[cls]:
            rank[nxt] = max(rank[nxt], rank[cls] + (1 if is_strict else 0))
            indegree[nxt] -= 1
            if indegree[nxt] == 0:
                queue.append(nxt)

    classes: list[frozenset[str]] = []
    for block in framework.connected_components():
        by_rank: dict[int, set[str]] = {}
        for name in block:
            by_rank.setdefault(rank[component[name]], set()).add(name)
        for level in sorted(by_rank):
            classes.append(frozenset(by_rank[level]))
    return PreferenceOrder(classes)
