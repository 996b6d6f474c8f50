"""The Zelevinsky involution by peeling off one cuspidal at a time."""
import random

from multiseg import dual, dual_with_trace, parse_multisegment
from multiseg.duality import dual_random_peel

for text in ["[0..2]", "[0..1]+[1..2]", "[1..1]+[2..2]", "[0..3]+[1..2]+[1..1]"]:
    m = parse_multisegment(text)
    tr = dual_with_trace(m)
    print(f"{text:24s} -> {tr.result}")
    for c, rest in tr.steps:
        print(f"    peel at {c}: left with {rest}")
    assert dual(tr.result) == m
    assert tr.replay_result() == tr.result

# Peeling at any admissible point gives the same answer.
m = parse_multisegment("[0..2]+[1..3]+[2..2]+[0..0]")
rng = random.Random(0)
print("\n", m, "->", {str(dual_random_peel(m, rng)) for _ in range(20)})
