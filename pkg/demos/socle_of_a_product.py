"""Socles and cosocles of products with a cuspidal character.

Walks through the matching at a point, the creation operator Q_c, and the
way the four (side, mode) combinations are dispatched.
"""
from multiseg import (COSOCLE, LEFT, RIGHT, SOCLE, IrreducibleParam, Param, Point, SocleQuery,
                      parse_multisegment, socle_cosocle)
from multiseg.matching import candidates_socle, matching
from multiseg.socle import Q, S, l_prime_invariant

m = parse_multisegment("[1..3]+[1..1]+[0..2]+[0..0]")
print("m =", m)

# Both segments beginning at 0 find a partner beginning at 1, so nothing is free.
rep = matching(m, 0)
print("matching at 0:", rep.as_dict())

# The socle of <m>^t x nu^0 adjoins {0}; l' stays 0 before and grows by one after.
q = Q(m, 0)
print("Q_0(m) =", q, " l'(m) =", l_prime_invariant(m, 0), " l'(Q_0 m) =", l_prime_invariant(q, 0))
print("S_0(Q_0(m)) =", S(q, 0))

# A free partner is extended on its left instead.
m = parse_multisegment("[1..2]")
print("\ncandidates for", m, "at 0:", [str(x) for x in candidates_socle(m, 0)])
print("Q_0 picks", Q(m, 0))

# The same question asked on both sides and in both parametrizations.
for param in Param:
    pi = IrreducibleParam(param, m)
    for side in (RIGHT, LEFT):
        for mode in (SOCLE, COSOCLE):
            out = socle_cosocle(SocleQuery(pi, Point(0), side, mode))
            print(f"{param.value:10s} {side:14s} {mode:8s} -> {out}")
