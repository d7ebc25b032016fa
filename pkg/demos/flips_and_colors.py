"""Tour of colored triangle-free triangulations and their flips.

A triangulation of a convex (n+4)-gon with no inner triangle has
exactly two "short" chords (chords cutting off a single ear).  Its
n+1 chords admit exactly two proper colorings by 0..n, and the whole
family is parametrized by a center vertex and n direction bits.
"""

from tftflip import ColoredTriangulation, enumerate_ctft, phi_inv
from tftflip.geometry import PhiVector
from tftflip.render import render_svg

n = 3

cts = enumerate_ctft(n)
print(f"colored triangle-free triangulations of a {n + 4}-gon: {len(cts)}")
print(f"underlying uncolored triangulations: {len(cts) // 2}")
print()

# the base point of everything: the star (fan) at vertex 1
star = phi_inv(PhiVector(n, 0, (0,) * n))
print("the star triangulation:", star)
print("its parameters (center : direction bits):", star.phi())
print()

# flipping a chord replaces it by the other diagonal of its
# quadrilateral -- unless that would create an inner triangle or
# break the coloring, in which case the flip simply does nothing
for i in range(n + 1):
    flipped = star.flip(i)
    if flipped == star:
        print(f"flip {i}: blocked (would close an inner triangle)")
    else:
        print(f"flip {i}: {flipped}  ->  {flipped.phi()}")
print()

# every flip is an involution
assert all(star.flip(i).flip(i) == star for i in range(n + 1))

# reversing the colors of the chords gives the second proper coloring
# of the same chord set; rotating relabels the polygon
rev = star.reverse_colors()
print("color reversal:", rev.phi())
print("rotation by 2: ", star.rotate(2).phi())

with open("star.svg", "w") as fh:
    fh.write(render_svg(star))
print()
print("wrote star.svg")
