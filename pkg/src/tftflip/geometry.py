"""Geometric model of colored triangle-free triangulations.

Vertices of the convex polygon P_{n+4} are labeled 0..n+3
counterclockwise and read modulo n+4.  A chord is an unordered pair of
non-adjacent vertices; a chord {a-1, a+1} spanning two boundary edges
is *short* with center a.  A triangulation is triangle-free when no
triangle of it has three chord sides, which happens exactly when it has
two short chords.  A proper coloring labels one short chord 0 and
extends inductively: chord i shares a triangle with chord i-1.

The bijection ``phi`` encodes a colored triangulation as the center of
chord 0 plus one growth bit per color: chord i extends the fan of
chords 0..i-1 by one vertex counterclockwise (bit 0) or clockwise
(bit 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

__all__ = [
    "Chord",
    "PhiVector",
    "ColoredTriangulation",
    "enumerate_ctft",
    "phi_inv",
    "parse_triangulation",
    "parse_phi",
]

Chord = frozenset  # two distinct, non-adjacent vertex labels


def _check_chord(chord: Chord, m: int) -> None:
    if len(chord) != 2:
        raise ValueError(f"chord must have two endpoints: {set(chord)}")
    x, y = chord
    if not (0 <= x < m and 0 <= y < m):
        raise ValueError(f"chord endpoints out of range 0..{m - 1}: {set(chord)}")
    if (y - x) % m in (1, m - 1):
        raise ValueError(f"chord endpoints are adjacent on the boundary: {set(chord)}")


def chord(x: int, y: int, m: int) -> Chord:
    """Chord between vertices x and y of an m-gon (labels taken mod m)."""
    c = frozenset((x % m, y % m))
    _check_chord(c, m)
    return c


def is_short(c: Chord, m: int) -> bool:
    x, y = c
    return (y - x) % m in (2, m - 2)


def short_center(c: Chord, m: int) -> int:
    """Center a of a short chord {a-1, a+1}."""
    x, y = c
    if (y - x) % m == 2:
        return (x + 1) % m
    if (x - y) % m == 2:
        return (y + 1) % m
    raise ValueError(f"chord {set(c)} is not short in an {m}-gon")


def chords_cross(c1: Chord, c2: Chord, m: int) -> bool:
    """Whether two chords of an m-gon cross in the interior."""
    if c1 & c2:
        return False
    a, b = c1
    c, d = c2
    arc = (b - a) % m
    in_arc_c = 0 < (c - a) % m < arc
    in_arc_d = 0 < (d - a) % m < arc
    return in_arc_c != in_arc_d


@dataclass(frozen=True)
class PhiVector:
    """Image of a colored triangulation under phi: a center mod n+4 and n bits."""

    n: int
    a: int
    bits: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if not 0 <= self.a < self.n + 4:
            raise ValueError(f"center {self.a} out of range mod {self.n + 4}")
        if len(self.bits) != self.n or any(b not in (0, 1) for b in self.bits):
            raise ValueError(f"need {self.n} bits in {{0,1}}, got {self.bits}")

    def __str__(self) -> str:
        return f"{self.a}:" + "".join(str(b) for b in self.bits)


def parse_phi(text: str, n: int) -> PhiVector:
    """Parse the ``a:bits`` text form, e.g. ``0:000``."""
    head, _, tail = text.partition(":")
    try:
        a = int(head)
        bits = tuple(int(ch) for ch in tail)
    except ValueError:
        raise ValueError(f"malformed phi vector {text!r}") from None
    return PhiVector(n, a, bits)


@dataclass(frozen=True)
class ColoredTriangulation:
    """A triangulation of P_{n+4} whose chords carry colors 0..n.

    ``chords[i]`` is the chord colored i.  Construction does not
    validate the triangle-free or proper-coloring invariants; use
    :meth:`violations` / :meth:`is_valid` for that, so that candidate
    structures can be inspected.
    """

    n: int
    chords: tuple[Chord, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        m = self.n + 4
        for c in self.chords:
            _check_chord(c, m)

    @property
    def m(self) -> int:
        """Number of polygon vertices."""
        return self.n + 4

    # -- structure ---------------------------------------------------

    def edges(self) -> set[Chord]:
        m = self.m
        boundary = {frozenset(((i, (i + 1) % m))) for i in range(m)}
        return boundary | set(self.chords)

    def triangles(self) -> list[frozenset]:
        """All triangular faces, as vertex triples.

        With vertices in convex position every 3-cycle of edges bounds
        an empty triangle, so faces are exactly the pairwise-connected
        triples.
        """
        edges = self.edges()
        tris = []
        for t in combinations(range(self.m), 3):
            x, y, z = t
            if (
                frozenset((x, y)) in edges
                and frozenset((y, z)) in edges
                and frozenset((x, z)) in edges
            ):
                tris.append(frozenset(t))
        return tris

    def violations(self) -> list[str]:
        """Names of violated invariants; empty means valid."""
        m = self.m
        out = []
        if len(self.chords) != self.n + 1:
            out.append(f"wrong chord count: {len(self.chords)} != {self.n + 1}")
            return out
        if len(set(self.chords)) != self.n + 1:
            out.append("duplicate chords")
            return out
        for c1, c2 in combinations(self.chords, 2):
            if chords_cross(c1, c2, m):
                out.append(f"crossing chords {sorted(c1)} and {sorted(c2)}")
                return out
        # n+1 pairwise non-crossing chords triangulate the polygon
        chord_set = set(self.chords)
        for t in self.triangles():
            sides = [frozenset(p) for p in combinations(sorted(t), 2)]
            if all(s in chord_set for s in sides):
                out.append(f"inner triangle {sorted(t)} with three chord sides")
        if not is_short(self.chords[0], m):
            out.append("chord 0 is not short")
        else:
            tris = self.triangles()
            for i in range(1, self.n + 1):
                prev, cur = self.chords[i - 1], self.chords[i]
                if not any(prev <= t and cur <= t for t in tris):
                    out.append(
                        f"improper coloring: chord {i} shares no triangle with chord {i - 1}"
                    )
                    break
        return out

    def is_valid(self) -> bool:
        return not self.violations()

    def short_chords(self) -> list[Chord]:
        return [c for c in self.chords if is_short(c, self.m)]

    # -- phi ---------------------------------------------------------

    def phi(self) -> PhiVector:
        """Encode as (center of chord 0; growth bits).  Requires validity."""
        m = self.m
        a = short_center(self.chords[0], m)
        bits = []
        k = mm = 1  # chord i-1 is [a-k, a+mm]
        for i in range(1, self.n + 1):
            grown_left = chord(a - k - 1, a + mm, m)
            grown_right = chord(a - k, a + mm + 1, m)
            if self.chords[i] == grown_left:
                bits.append(0)
                k += 1
            elif self.chords[i] == grown_right:
                bits.append(1)
                mm += 1
            else:
                raise ValueError(
                    f"chord {i} does not extend chord {i - 1}: not a valid "
                    "colored triangle-free triangulation"
                )
        return PhiVector(self.n, a, tuple(bits))

    # -- moves -------------------------------------------------------

    def flip(self, i: int) -> "ColoredTriangulation":
        """Flip the chord colored i, keeping colors.

        Returns the flipped triangulation when it is again a valid
        colored triangle-free triangulation, and ``self`` unchanged
        otherwise.  Always an involution.
        """
        if not 0 <= i <= self.n:
            raise ValueError(f"color {i} out of range 0..{self.n}")
        if not self.is_valid():
            raise ValueError("flip requires a valid triangulation")
        c = self.chords[i]
        wings = [t for t in self.triangles() if c <= t]
        assert len(wings) == 2, "each chord lies in exactly two triangles"
        quad = (wings[0] | wings[1]) - c
        new_chord = frozenset(quad)
        flipped = ColoredTriangulation(
            self.n, self.chords[:i] + (new_chord,) + self.chords[i + 1 :]
        )
        return flipped if flipped.is_valid() else self

    def rotate(self, k: int) -> "ColoredTriangulation":
        """Rotate all vertex labels by k (mod n+4); colors are preserved."""
        m = self.m
        return ColoredTriangulation(
            self.n,
            tuple(frozenset((x + k) % m for x in c) for c in self.chords),
        )

    def reverse_colors(self) -> "ColoredTriangulation":
        """Swap to the other proper coloring: color i becomes n-i."""
        return ColoredTriangulation(self.n, self.chords[::-1])

    # -- text form ---------------------------------------------------

    def __str__(self) -> str:
        parts = " ".join(
            f"{i}:({','.join(str(v) for v in sorted(c))})"
            for i, c in enumerate(self.chords)
        )
        return f"n={self.n}; chords: {parts}"


def parse_triangulation(text: str) -> ColoredTriangulation:
    """Parse the text form ``n=3; chords: 0:(1,6) 1:(1,5) ...``."""
    head, _, tail = text.partition(";")
    if not head.strip().startswith("n="):
        raise ValueError(f"malformed triangulation text {text!r}")
    n = int(head.strip()[2:])
    tail = tail.strip()
    if not tail.startswith("chords:"):
        raise ValueError(f"malformed triangulation text {text!r}")
    chords: dict[int, Chord] = {}
    for item in tail[len("chords:") :].split():
        color, _, pair = item.partition(":")
        x, y = pair.strip("()").split(",")
        chords[int(color)] = frozenset((int(x), int(y)))
    if sorted(chords) != list(range(n + 1)):
        raise ValueError(f"colors must be 0..{n}, got {sorted(chords)}")
    return ColoredTriangulation(n, tuple(chords[i] for i in range(n + 1)))


def phi_inv(v: PhiVector) -> ColoredTriangulation:
    """Rebuild the triangulation encoded by a phi vector."""
    m = v.n + 4
    chords = [chord(v.a - 1, v.a + 1, m)]
    k = mm = 1
    for b in v.bits:
        if b == 0:
            k += 1
        else:
            mm += 1
        chords.append(chord(v.a - k, v.a + mm, m))
    return ColoredTriangulation(v.n, tuple(chords))


def enumerate_ctft(n: int) -> list[ColoredTriangulation]:
    """All (n+4)*2^n colored triangle-free triangulations of P_{n+4}.

    Enumerated through the phi codomain in lexicographic (a, bits)
    order; each underlying uncolored triangulation appears with both of
    its proper colorings.
    """
    if n <= 0:
        raise ValueError("n must be positive")
    return [
        phi_inv(PhiVector(n, a, bits))
        for a in range(n + 4)
        for bits in product((0, 1), repeat=n)
    ]
