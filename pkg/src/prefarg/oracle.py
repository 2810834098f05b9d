"""Exhaustive ground truth: try every CC-wise total order directly."""

import itertools
from typing import Iterable, Iterator

from .errors import SizeLimitError
from .framework import Framework
from .preferences import PreferenceOrder
from .reductions import reduce
from .semantics import Labelling, is_complete, require_total

DEFAULT_COMPONENT_CAP = 8


def weak_orders(items: Iterable[str]) -> Iterator[tuple[frozenset[str], ...]]:
    """All ordered set partitions of the items, least-preferred class first.

    Built by inserting elements one at a time, each either joining an
    existing class or opening a new class at any position, so every weak
    order appears exactly once. The count for n items is the ordered Bell
    number: 1, 1, 3, 13, 75, ...
    """
    elements = sorted(items)

    def build(k: int) -> Iterator[tuple[frozenset[str], ...]]:
        if k == 0:
            yield ()
            return
        new = elements[k - 1]
        for base in build(k - 1):
            for i in range(len(base)):
                yield base[:i] + (base[i] | {new},) + base[i + 1 :]
            for i in range(len(base) + 1):
                yield base[:i] + (frozenset((new,)),) + base[i:]

    yield from build(len(elements))


def enumerate_orders(
    framework: Framework, component_cap: int = DEFAULT_COMPONENT_CAP
) -> Iterator[PreferenceOrder]:
    """Every CC-wise total order, as independent weak orders per component."""
    components = framework.connected_components()
    for component in components:
        if len(component) > component_cap:
            raise SizeLimitError(
                f"component of {len(component)} arguments exceeds the cap of {component_cap}"
            )
    pools = [tuple(weak_orders(component)) for component in components]
    for combo in itertools.product(*pools):
        yield PreferenceOrder(tuple(itertools.chain.from_iterable(combo)))


def brute_force_ex(
    framework: Framework,
    labelling: Labelling,
    reduction: int,
    component_cap: int = DEFAULT_COMPONENT_CAP,
) -> tuple[bool, PreferenceOrder | None]:
    """Search every order; return the first one making the labelling complete."""
    require_total(framework, labelling)
    for order in enumerate_orders(framework, component_cap):
        if is_complete(reduce(framework, order, reduction), labelling):
            return True, order
    return False, None
