#!/usr/bin/env python3
"""Ask the inverse question on one attack and three target labellings.

For a -> b, which reductions admit a preference order making each labelling
complete? The three rows separate the four reductions from one another.
"""

from prefarg import Framework, Labelling, decide, emit_result, verify_witness

framework = Framework("ab", [("a", "b")])
rows = {
    "both undec": Labelling(undec_args="ab"),
    "a out, b in": Labelling(in_args="b", out_args="a"),
    "a undec, b in": Labelling(in_args="b", undec_args="a"),
}

for title, labelling in rows.items():
    print(f"labelling {title}:")
    for index in (1, 2, 3, 4):
        decision = decide(framework, labelling, index)
        print(f"  reduction {index}: {emit_result(decision, fmt='text')}")
        if decision.yes:
            assert verify_witness(framework, labelling, index, decision.witness)
    print()

print("every witness above was re-checked by reducing and testing completeness")
