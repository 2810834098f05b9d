#!/usr/bin/env python3
"""Cross-check the polynomial deciders against the exhaustive oracle.

Draws random frameworks and labellings, runs every decider, and compares each
verdict with a brute-force search over all CC-wise total orders. Witnesses
from positive verdicts are verified by reducing and testing completeness.
"""

import random

from prefarg import IN, OUT, UNDEC, Framework, Labelling, brute_force_ex, decide, verify_witness

rng = random.Random(2024)
instances = 200
size = 4

cells = 0
positives = 0
for _ in range(instances):
    names = [f"x{i}" for i in range(size)]
    attacks = [(s, t) for s in names for t in names if rng.random() < 0.3]
    framework = Framework(names, attacks)
    labelling = Labelling.from_map({n: rng.choice((IN, OUT, UNDEC)) for n in names})
    for index in (1, 2, 3, 4):
        decision = decide(framework, labelling, index)
        expected, _ = brute_force_ex(framework, labelling, index)
        assert decision.yes == expected, (framework, labelling, index)
        if decision.yes:
            positives += 1
            assert verify_witness(framework, labelling, index, decision.witness)
        cells += 1

print(f"{cells} decider/oracle cells agreed; {positives} witnesses verified")
