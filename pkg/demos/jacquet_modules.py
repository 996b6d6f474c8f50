"""Jacquet restrictions of standard products through margin matrices."""
from multiseg import Segment, StandardProduct, jacquet, margin_matrices, multiplicity
from multiseg.core import Multisegment
from multiseg.ring import jac_filter, l_sup_standard, lemme2_jac

print("margin matrices with rows (2, 1) and columns (1, 2):")
for mat in margin_matrices((2, 1), (1, 2)):
    print("   ", mat)

std = StandardProduct.of([Segment(0, 1), Segment(2, 3)])
v = jacquet(std, (3, 1))
print("\nJacquet of", std, "to (3, 1):\n   ", v)
print("part with nu^0 on the right:\n   ", jac_filter(v, [0]))

# 1 x |.| x 1 of GL_3: the diagonal term appears twice.
nu = lambda x: Segment(x, x)
triple = StandardProduct.of([nu(0), nu(1), nu(0)])
one = Multisegment([nu(0)])
print("\nmultiplicity of nu0 (x) nu1 (x) nu0:",
      multiplicity(triple, [one, Multisegment([nu(1)]), one], (1, 1, 1)))

for d, dp in [(Segment(0, 1), Segment(1, 2)), (Segment(0, 1), Segment(2, 3))]:
    print(f"\nJac_b of <{d}, {dp}>^t:", lemme2_jac(d, dp))

print("\nlargest drop of <[0..2]>^t toward {nu^0}:", l_sup_standard(StandardProduct.of([Segment(0, 2)]), [0]))
