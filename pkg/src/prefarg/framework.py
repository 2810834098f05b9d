"""Immutable argumentation frameworks and the graph queries built on them."""

import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import UnknownArgumentError

Attack = tuple[str, str]

NAME_PATTERN = re.compile(r"[A-Za-z0-9_]+\Z")


@dataclass(frozen=True)
class Framework:
    """A finite set of named arguments plus a directed attack relation.

    Instances are immutable after construction and safe to share between
    threads. Argument names are nonempty strings over letters, digits and
    underscores; attacks may include self-attacks.
    """

    arguments: frozenset[str]
    attacks: frozenset[Attack]

    def __init__(self, arguments: Iterable[str] = (), attacks: Iterable[Attack] = ()):
        args = frozenset(arguments)
        atts = frozenset((src, dst) for src, dst in attacks)
        for name in args:
            if not isinstance(name, str) or not NAME_PATTERN.match(name):
                raise ValueError(f"bad argument name: {name!r}")
        for src, dst in atts:
            if src not in args or dst not in args:
                raise UnknownArgumentError(
                    f"attack ({src},{dst}) references an unknown argument"
                )
        object.__setattr__(self, "arguments", args)
        object.__setattr__(self, "attacks", atts)

    def _require(self, name: str) -> None:
        if name not in self.arguments:
            raise UnknownArgumentError(f"unknown argument: {name!r}")

    @cached_property
    def _attackers(self) -> dict[str, frozenset[str]]:
        table: dict[str, set[str]] = {a: set() for a in self.arguments}
        for src, dst in self.attacks:
            table[dst].add(src)
        return {a: frozenset(v) for a, v in table.items()}

    @cached_property
    def _targets(self) -> dict[str, frozenset[str]]:
        table: dict[str, set[str]] = {a: set() for a in self.arguments}
        for src, dst in self.attacks:
            table[src].add(dst)
        return {a: frozenset(v) for a, v in table.items()}

    def attackers(self, name: str) -> frozenset[str]:
        """All direct attackers of the given argument."""
        self._require(name)
        return self._attackers[name]

    def targets(self, name: str) -> frozenset[str]:
        """All arguments the given argument attacks."""
        self._require(name)
        return self._targets[name]

    def defends(self, defenders: Iterable[str], name: str) -> bool:
        """True when every attacker of `name` is attacked by some defender."""
        defender_set = frozenset(defenders)
        for d in defender_set:
            self._require(d)
        self._require(name)
        return all(
            any((d, attacker) in self.attacks for d in defender_set)
            for attacker in self._attackers[name]
        )

    def connected_components(self) -> tuple[frozenset[str], ...]:
        """Partition of the arguments into undirected components.

        Components are returned ordered by their smallest member name and
        isolated arguments form singleton components.
        """
        neighbours: dict[str, set[str]] = {a: set() for a in self.arguments}
        for src, dst in self.attacks:
            neighbours[src].add(dst)
            neighbours[dst].add(src)
        seen: set[str] = set()
        components = []
        for start in sorted(self.arguments):
            if start in seen:
                continue
            block = {start}
            seen.add(start)
            queue = deque([start])
            while queue:
                node = queue.popleft()
                for other in neighbours[node]:
                    if other not in seen:
                        seen.add(other)
                        block.add(other)
                        queue.append(other)
            components.append(frozenset(block))
        return tuple(components)

    def restrict(self, subset: Iterable[str]) -> "Framework":
        """Subframework induced by the given argument subset."""
        keep = frozenset(subset)
        for name in keep:
            self._require(name)
        return Framework(
            keep, {(s, t) for s, t in self.attacks if s in keep and t in keep}
        )

    def has_cycle(self) -> bool:
        """True when a directed attack cycle exists; self-attacks count."""
        indegree = {a: 0 for a in self.arguments}
        out: dict[str, list[str]] = {a: [] for a in self.arguments}
        for src, dst in self.attacks:
            indegree[dst] += 1
            out[src].append(dst)
        queue = deque(a for a in self.arguments if indegree[a] == 0)
        removed = 0
        while queue:
            node = queue.popleft()
            removed += 1
            for other in out[node]:
                indegree[other] -= 1
                if indegree[other] == 0:
                    queue.append(other)
        return removed < len(self.arguments)

    def bidirectional_attacks(self) -> frozenset[Attack]:
        """Attacks whose converse is also an attack; self-attacks qualify."""
        return frozenset((s, t) for s, t in self.attacks if (t, s) in self.attacks)
