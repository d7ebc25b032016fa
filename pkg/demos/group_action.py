"""The affine Weyl group behind the flips.

The flip operations satisfy the defining relations of the affine
Coxeter group of type C: involutions, commutations, one order-3 braid
between adjacent middle generators and order-4 braids at both ends.
The group acts transitively on the triangulations, and the stabilizer
of the star has index (n+4) * 2^n -- computed three independent ways.
"""

from tftflip.coxeter import (
    coxeter_length,
    g0_word,
    gn_word,
    gram_and_volumes,
    orbit_of_base,
    stabilizer_generators,
    verify_relations,
    verify_stabilizer,
    word_to_affine,
)

n = 3

report = verify_relations(n)
print(f"defining relations checked: {report['checked']}, failures: {report['failures']}")

# the generators realize as signed permutations with even translations;
# for example the long stabilizer element g_0
m = word_to_affine(n, g0_word(n))
print(f"g_0 as an affine map: (10, 20, 30) -> {m.apply((10, 20, 30))}"
      "   i.e. x -> (x3 - 2, x2, x1 + 2)")
print(f"g_0 word length {len(g0_word(n))}, oracle length {coxeter_length(m)}")
print()

# three computations of the same index
orbit = len(orbit_of_base(n))
_, det_b, ratio = gram_and_volumes(n)
print(f"orbit of the star:        {orbit}")
print(f"volume ratio (exact):     {ratio}")
print(f"counting formula:         {(n + 4) * 2 ** n}")
print()

# the stabilizer generators really fix the star
report = verify_stabilizer(n)
for word, fixes in report["generators_fix_base"].items():
    shown = word if len(word) < 30 else word[:27] + "..."
    print(f"  fixes star: {fixes}   word: {shown}")

# g_n is a translation: trivial-looking on the star, far from trivial
gn = word_to_affine(n, gn_word(n))
print()
print(f"g_n translation part: {gn.shift}, length {coxeter_length(gn)}")
