"""Theta transport of Langlands parameters and its commutation with socles."""
from fractions import Fraction

from multiseg import Multisegment, ThetaQuery, parse_multisegment, theta_star
from multiseg.theta import cor_comb_check, lemma_com_check

m = parse_multisegment("[-1/2..1/2]")
for M in range(2, 6):
    print(f"theta*_{M}({m}) =", theta_star(ThetaQuery(m, 2, M)))

print("\nadjoining a chain of singletons commutes with the socle away from two points:")
for c in range(-3, 3):
    r = lemma_com_check(Multisegment(), 1, 1, c)
    print(f"  b=1, a=1, c={c:2d}: equal={r.equal!s:5s} guaranteed={r.condition_holds}")

print("\ntheta* of a socle against the socle of a lifted product (n=2, M=3):")
m1 = parse_multisegment("[0..0]")
for k in range(-6, 7):
    c = Fraction(k, 2)
    r = cor_comb_check(m1, 2, 3, c)
    print(f"  c={str(c):5s} lhs={str(r.lhs):30s} equal={r.equal!s:5s} excluded={not r.condition_holds}")
