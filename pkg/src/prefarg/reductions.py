"""The four preference reductions, from an order or from a preference function.

Reduction 1 reverses attacks from strictly less preferred sources, 2 deletes
the losing side of a mutual attack, 3 is the union of 1 and 2, and 4 deletes
every attack from a strictly less preferred source.
"""

from .errors import InconsistentPreferenceError, InvalidOrderError, WpsgConstraintError
from .framework import Framework
from .preferences import (
    PreferenceFunction,
    PreferenceOrder,
    consistency_certificate,
    validate_order,
)

REDUCTIONS = (1, 2, 3, 4)


def _check_index(index: int) -> None:
    if index not in REDUCTIONS:
        raise ValueError(f"reduction index must be one of {REDUCTIONS}, got {index!r}")


def reduce(framework: Framework, order: PreferenceOrder, index: int) -> Framework:
    """Apply reduction `index` to the framework under the given order."""
    _check_index(index)
    if not validate_order(framework, order):
        raise InvalidOrderError("order is not a CC-wise total order on the framework")
    attacks = framework.attacks
    if index == 4:
        kept = {(a, b) for a, b in attacks if order.leq(b, a)}
        return Framework(framework.arguments, kept)
    c1 = {(a, b) for a, b in attacks if order.leq(b, a)}
    c1 |= {(b, a) for a, b in attacks if order.lt(a, b)}
    if index == 1:
        return Framework(framework.arguments, c1)
    c2 = {(a, b) for a, b in attacks if order.leq(b, a) or (b, a) not in attacks}
    if index == 2:
        return Framework(framework.arguments, c2)
    return Framework(framework.arguments, c1 | c2)


def graph_from_pref_fn(
    framework: Framework,
    fn: PreferenceFunction,
    index: int,
    *,
    strict: bool = False,
) -> Framework:
    """Defeat graph induced directly by a consistent preference function.

    Index 1 keeps the 1-bit attacks and reverses the 0-bit ones; index 2 is
    the same after forcing the bit to 1 on one-way attacks, which reduction
    2 never touches (pass strict=True to reject such bits instead); index 3
    additionally keeps every one-way attack; index 4 keeps exactly the
    1-bit attacks.
    """
    _check_index(index)
    certificate = consistency_certificate(framework, fn)
    if certificate is not None:
        raise InconsistentPreferenceError(
            "preference function has an inconsistent cycle", cycle=certificate
        )
    bits = dict(fn.bits)
    mutual = framework.bidirectional_attacks()
    if index == 2:
        offenders = sorted(att for att, bit in bits.items() if bit == 0 and att not in mutual)
        if offenders:
            if strict:
                raise WpsgConstraintError(
                    f"one-way attacks mapped to 0 under reduction 2: {offenders}"
                )
            for att in offenders:
                bits[att] = 1
    ones = {att for att, bit in bits.items() if bit == 1}
    reversed_zeros = {(t, s) for (s, t), bit in bits.items() if bit == 0}
    if index in (1, 2):
        kept = reversed_zeros | ones
    elif index == 3:
        kept = (set(framework.attacks) - set(mutual)) | reversed_zeros | ones
    else:
        kept = ones
    return Framework(framework.arguments, kept)
