"""Words in the affine C-type generators and their realizations.

The group is generated by s_0..s_n with s_i^2 = 1, commuting braid
relations for |i-j| > 1, order-3 braids for adjacent middle generators
and order-4 braids at both ends.  It is realized faithfully on R^n by

    s_0: negate x_1,   s_i: swap x_i and x_{i+1},   s_n: x_n -> 2 - x_n,

composed here as signed permutations with even integer translations.
The same words also act on phi vectors; that action is the
phi-conjugate of the geometric flip and is cross-checked against
:mod:`tftflip.geometry` in the test suite.

The exact word-length function counts reflection hyperplanes
separating the base alcove 0 < x_1 < ... < x_n < 1 from its image,
with rational arithmetic throughout.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .geometry import PhiVector

__all__ = [
    "Word",
    "AffineMap",
    "word_to_affine",
    "act_on_phi",
    "coxeter_length",
    "g0_word",
    "gn_word",
    "stabilizer_generators",
    "verify_stabilizer",
    "orbit_of_base",
    "relation_words",
    "verify_relations",
    "gram_and_volumes",
    "parse_word",
    "format_word",
]

Word = tuple  # sequence of generator indices in 0..n


def _check_word(word: Sequence[int], n: int) -> None:
    if n < 2:
        raise ValueError("group features require n >= 2")
    for letter in word:
        if not 0 <= letter <= n:
            raise ValueError(f"letter {letter} out of range 0..{n}")


def parse_word(text: str) -> tuple[int, ...]:
    """Parse the space-separated text form, e.g. ``3 2 1 0``."""
    return tuple(int(tok) for tok in text.split())


def format_word(word: Sequence[int]) -> str:
    return " ".join(str(i) for i in word)


@dataclass(frozen=True)
class AffineMap:
    """x |-> M x + t with M a signed permutation and t in (2Z)^n.

    Row i of M reads source coordinate ``cols[i]`` with sign
    ``signs[i]``.  The type is closed under composition and inversion,
    and equality of maps is the group-equality oracle: the realization
    is faithful.
    """

    n: int
    cols: tuple[int, ...]
    signs: tuple[int, ...]
    shift: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.cols) != list(range(self.n)):
            raise ValueError("cols must be a permutation")
        if any(s not in (-1, 1) for s in self.signs):
            raise ValueError("signs must be +-1")
        if any(t % 2 for t in self.shift):
            raise ValueError("translation entries must be even")

    @staticmethod
    def identity(n: int) -> "AffineMap":
        return AffineMap(n, tuple(range(n)), (1,) * n, (0,) * n)

    @staticmethod
    def generator(n: int, i: int) -> "AffineMap":
        cols = list(range(n))
        signs = [1] * n
        shift = [0] * n
        if i == 0:
            signs[0] = -1
        elif i == n:
            signs[n - 1] = -1
            shift[n - 1] = 2
        elif 0 < i < n:
            cols[i - 1], cols[i] = cols[i], cols[i - 1]
        else:
            raise ValueError(f"generator index {i} out of range 0..{n}")
        return AffineMap(n, tuple(cols), tuple(signs), tuple(shift))

    def compose(self, other: "AffineMap") -> "AffineMap":
        """self after other: (self . other)(x) = self(other(x))."""
        cols = tuple(other.cols[c] for c in self.cols)
        signs = tuple(s * other.signs[c] for s, c in zip(self.signs, self.cols))
        shift = tuple(
            s * other.shift[c] + t
            for s, c, t in zip(self.signs, self.cols, self.shift)
        )
        return AffineMap(self.n, cols, signs, shift)

    def inverse(self) -> "AffineMap":
        cols = [0] * self.n
        signs = [1] * self.n
        shift = [0] * self.n
        for i, (c, s, t) in enumerate(zip(self.cols, self.signs, self.shift)):
            cols[c] = i
            signs[c] = s
            shift[c] = -s * t
        return AffineMap(self.n, tuple(cols), tuple(signs), tuple(shift))

    def apply(self, x: Sequence) -> tuple:
        return tuple(
            s * x[c] + t for s, c, t in zip(self.signs, self.cols, self.shift)
        )

    def is_identity(self) -> bool:
        return self == AffineMap.identity(self.n)

    def to_json(self) -> str:
        return json.dumps(
            {"perm": list(self.cols), "signs": list(self.signs), "trans": list(self.shift)}
        )


def word_to_affine(n: int, word: Sequence[int]) -> AffineMap:
    """Product of generator maps, leftmost letter outermost."""
    _check_word(word, n)
    m = AffineMap.identity(n)
    for letter in word:
        m = m.compose(AffineMap.generator(n, letter))
    return m


# -- action on phi vectors ------------------------------------------


def _generator_on_phi(i: int, v: PhiVector) -> PhiVector:
    n = v.n
    bits = list(v.bits)
    a = v.a
    if i == 0:
        # moving the short chord 0; direction fixed by the geometric
        # flip under counterclockwise labels (the reverse of one
        # published convention -- see the verification findings)
        a = (a - 1) % (n + 4) if bits[0] == 0 else (a + 1) % (n + 4)
        bits[0] ^= 1
    elif i == n:
        bits[n - 1] ^= 1
    else:
        bits[i - 1], bits[i] = bits[i], bits[i - 1]
    return PhiVector(n, a, tuple(bits))


def act_on_phi(word: Sequence[int], v: PhiVector) -> PhiVector:
    """Apply a word to a phi vector, rightmost letter first."""
    _check_word(word, v.n)
    for letter in reversed(word):
        v = _generator_on_phi(letter, v)
    return v


def all_phi_vectors(n: int) -> list[PhiVector]:
    return [
        PhiVector(n, a, bits)
        for a in range(n + 4)
        for bits in product((0, 1), repeat=n)
    ]


def base_vector(n: int) -> PhiVector:
    """Phi vector of the canonical star triangulation."""
    return PhiVector(n, 0, (0,) * n)


# -- exact length ---------------------------------------------------


def _ints_strictly_between(lo: Fraction, hi: Fraction) -> int:
    if lo > hi:
        lo, hi = hi, lo
    count = math.floor(hi) - math.ceil(lo) + 1
    if hi == math.floor(hi):
        count -= 1
    if lo == math.ceil(lo):
        count -= 1
    return max(count, 0)


def _evens_strictly_between(lo: Fraction, hi: Fraction) -> int:
    return _ints_strictly_between(lo / 2, hi / 2)


def coxeter_length(m: AffineMap) -> int:
    """Exact group length of the element realized by ``m``.

    Counts the reflection hyperplanes x_i = k, x_i - x_j = 2k and
    x_i + x_j = 2k separating the base alcove from its image, via a
    rational interior point.
    """
    n = m.n
    p = [Fraction(i, n + 1) for i in range(1, n + 1)]
    q = m.apply(p)
    total = 0
    for i in range(n):
        total += _ints_strictly_between(p[i], q[i])
    for i in range(n):
        for j in range(i + 1, n):
            total += _evens_strictly_between(p[i] - p[j], q[i] - q[j])
            total += _evens_strictly_between(p[i] + p[j], q[i] + q[j])
    return total


# -- stabilizer of the base triangulation ---------------------------


def g0_word(n: int) -> tuple[int, ...]:
    """s_0 s_1 ... s_{n-2} s_n s_{n-1} s_n s_{n-2} ... s_1 s_0."""
    rising = list(range(0, n - 1))
    return tuple(rising + [n, n - 1, n] + rising[::-1])


def gn_word(n: int) -> tuple[int, ...]:
    """(s_n s_{n-1} ... s_0)^(n+4)."""
    return tuple(range(n, -1, -1)) * (n + 4)


def stabilizer_generators(n: int) -> list[tuple[int, ...]]:
    """Generator words of the stabilizer of the star triangulation."""
    _check_word((), n)
    return [g0_word(n)] + [(i,) for i in range(1, n)] + [gn_word(n)]


def orbit_of_base(n: int) -> set[PhiVector]:
    """Orbit of the star triangulation under all generators (BFS)."""
    start = base_vector(n)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(n + 1):
                w = _generator_on_phi(i, v)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen


def verify_stabilizer(n: int) -> dict:
    """Check the stabilizer generators fix the base vector and the
    action is transitive (orbit size (n+4)*2^n)."""
    base = base_vector(n)
    fixed = {
        format_word(w): act_on_phi(w, base) == base
        for w in stabilizer_generators(n)
    }
    orbit_size = len(orbit_of_base(n))
    expected = (n + 4) * 2**n
    return {
        "generators_fix_base": fixed,
        "orbit_size": orbit_size,
        "expected_orbit_size": expected,
        "ok": all(fixed.values()) and orbit_size == expected,
    }


# -- defining relations ---------------------------------------------


def relation_words(n: int) -> list[tuple[str, tuple[int, ...]]]:
    """The defining relations, as words that must equal the identity."""
    rels = [(f"s{i}^2", (i, i)) for i in range(n + 1)]
    for i in range(n + 1):
        for j in range(i + 2, n + 1):
            rels.append((f"(s{i} s{j})^2", (i, j) * 2))
    for i in range(1, n - 1):
        rels.append((f"(s{i} s{i + 1})^3", (i, i + 1) * 3))
    for i in (0, n - 1):
        rels.append((f"(s{i} s{i + 1})^4", (i, i + 1) * 4))
    return rels


def verify_relations(n: int, on_vectors: bool | None = None) -> dict:
    """Check every defining relation as an affine-map identity and,
    for small n, as the identity action on every phi vector."""
    if on_vectors is None:
        on_vectors = n <= 6
    failures = []
    vectors = all_phi_vectors(n) if on_vectors else []
    for name, word in relation_words(n):
        if not word_to_affine(n, word).is_identity():
            failures.append(f"{name} not the identity map")
        for v in vectors:
            if act_on_phi(word, v) != v:
                failures.append(f"{name} moves vector {v}")
                break
    return {"checked": len(relation_words(n)), "failures": failures, "ok": not failures}


# -- exact volume arithmetic ----------------------------------------


def _det(rows: list[list[Fraction]]) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    a = [row[:] for row in rows]
    size = len(a)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, size):
            factor = a[r][col] * inv
            if factor:
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return det


def _exact_sqrt(x: Fraction) -> Fraction:
    num, den = x.numerator, x.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        raise ValueError(f"{x} is not a rational square")
    return Fraction(rn, rd)


def gram_and_volumes(n: int) -> tuple[int, Fraction, Fraction]:
    """Gram determinants of the two fundamental regions and their
    exact volume ratio.

    Returns ``(det A, det B, vol ratio)`` where A = (min(i, j)) is the
    n x n Gram matrix of the alcove simplex, B is the (n-1) x (n-1)
    Gram matrix (4/n) min(i, j) min(n-i, n-j) of the prism base, and
    the ratio is the index of the stabilizer: it must equal
    (n+4) * 2^n.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    A = [[Fraction(min(i, j)) for j in range(1, n + 1)] for i in range(1, n + 1)]
    det_a = _det(A)
    assert det_a.denominator == 1
    B = [
        [
            Fraction(4, n) * min(i, j) * min(n - i, n - j)
            for j in range(1, n)
        ]
        for i in range(1, n)
    ]
    det_b = _det(B)
    vol1 = _exact_sqrt(det_a) / math.factorial(n)
    # the prism height direction contributes sqrt(n); fold it into the
    # radicand so everything stays rational
    vol2 = (
        Fraction(2 * (n + 4), n)
        * _exact_sqrt(n * det_b)
        / math.factorial(n - 1)
    )
    return int(det_a), det_b, vol2 / vol1
