"""Invariant suites shared by the CLI ``verify`` subcommand and the
acceptance tests.

Every check returns ``(ok, detail)`` and is exact: no tolerances
anywhere.  Checks marked as findings report an observation (a
convention comparison or an unproved identity) without being part of
the pass/fail contract; they still return their outcome honestly.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass
from typing import Callable

from . import coxeter, flipgraph, geometry
from . import representatives as reps

__all__ = ["Check", "SUITES", "run_suite", "suite_names"]


@dataclass(frozen=True)
class Check:
    name: str
    suite: str
    max_n: int  # default n-cap keeping runtime sane
    run: Callable[[int], tuple[bool, str]]
    finding: bool = False


# -- geometry -------------------------------------------------------


def check_counting(n):
    cts = geometry.enumerate_ctft(n)
    expected = (n + 4) * 2**n
    if len(cts) != expected:
        return False, f"enumerated {len(cts)}, expected {expected}"
    invalid = [ct for ct in cts if not ct.is_valid()]
    if invalid:
        return False, f"{len(invalid)} enumerated triangulations invalid"
    if len(set(cts)) != expected:
        return False, "duplicate triangulations enumerated"
    by_chords = defaultdict(int)
    for ct in cts:
        by_chords[frozenset(ct.chords)] += 1
    wrong = {k: v for k, v in by_chords.items() if v != 2}
    if wrong:
        return False, f"{len(wrong)} uncolored triangulations without 2 colorings"
    return True, f"#CTFT={expected}, #TFT={expected // 2}, 2 colorings each"


def check_short_chords(n):
    for ct in geometry.enumerate_ctft(n):
        shorts = ct.short_chords()
        if len(shorts) != 2:
            return False, f"{ct} has {len(shorts)} short chords"
        if set(shorts) != {ct.chords[0], ct.chords[n]}:
            return False, f"{ct}: short chords not colored 0 and {n}"
    return True, "every triangulation has exactly 2 short chords, colored 0 and n"


def check_phi_roundtrip(n):
    for ct in geometry.enumerate_ctft(n):
        if geometry.phi_inv(ct.phi()) != ct:
            return False, f"phi roundtrip fails on {ct}"
    return True, "phi_inv . phi is the identity on all triangulations"


def check_flip_involution(n):
    cts = geometry.enumerate_ctft(n)
    for ct in cts:
        for i in range(n + 1):
            flipped = ct.flip(i)
            if flipped.flip(i) != ct:
                return False, f"flip {i} is not an involution at {ct}"
            if i in (0, n) and flipped == ct:
                return False, f"flip {i} fixes {ct} (short chords never stick)"
            v = ct.phi()
            fixed = 0 < i < n and v.bits[i - 1] == v.bits[i]
            if (flipped == ct) != fixed:
                return False, f"flip {i} fixed-point rule fails at {ct}"
    return True, "flips are involutions; fixed exactly when adjacent bits agree"


# -- coxeter --------------------------------------------------------


def check_relations(n):
    rep = coxeter.verify_relations(n)
    if not rep["ok"]:
        return False, "; ".join(rep["failures"])
    return True, f"all {rep['checked']} defining relations hold"


def check_stabilizer(n):
    rep = coxeter.verify_stabilizer(n)
    if not rep["ok"]:
        bad = [w for w, ok in rep["generators_fix_base"].items() if not ok]
        return False, (
            f"orbit {rep['orbit_size']} (expected {rep['expected_orbit_size']}); "
            f"generators not fixing base: {bad}"
        )
    return True, (
        f"all {len(rep['generators_fix_base'])} stabilizer generators fix the "
        f"base; orbit size {rep['orbit_size']}"
    )


def check_volumes(n):
    det_a, det_b, ratio = coxeter.gram_and_volumes(n)
    from fractions import Fraction

    expect_b = Fraction(4 ** (n - 1), n)
    expect_ratio = (n + 4) * 2**n
    if det_a != 1:
        return False, f"det A = {det_a} != 1"
    if det_b != expect_b:
        return False, f"det B = {det_b} != {expect_b}"
    if ratio != expect_ratio:
        return False, f"volume ratio {ratio} != {expect_ratio}"
    return True, f"det A = 1, det B = {det_b}, ratio = {ratio}"


def check_action_matches_geometry(n):
    for v in coxeter.all_phi_vectors(n):
        ct = geometry.phi_inv(v)
        for i in range(n + 1):
            via_vector = coxeter.act_on_phi((i,), v)
            via_flip = ct.flip(i).phi()
            if via_vector != via_flip:
                return False, f"generator {i} on {v}: {via_vector} != {via_flip}"
    return True, "the vector action is the phi-conjugate of the geometric flip"


def check_generator_lengths(n):
    for i in range(n + 1):
        length = coxeter.coxeter_length(coxeter.word_to_affine(n, (i,)))
        if length != 1:
            return False, f"generator {i} has oracle length {length}"
    ident = coxeter.coxeter_length(coxeter.AffineMap.identity(n))
    if ident != 0:
        return False, f"identity has oracle length {ident}"
    return True, "identity has length 0, every generator length 1"


def check_rep_lengths(n):
    for r in reps.all_reps(n):
        word = reps.rep_to_word(r)
        oracle = coxeter.coxeter_length(coxeter.word_to_affine(n, word))
        if oracle != reps.rep_length(r):
            return False, f"rep {r}: formula {reps.rep_length(r)} != oracle {oracle}"
    return True, f"closed-form length matches the hyperplane oracle on all {(n + 4) * 2**n} reps"


def check_rep_phi_correspondence(n):
    base = coxeter.base_vector(n)
    seen = set()
    for r in reps.all_reps(n):
        by_word = coxeter.act_on_phi(reps.rep_to_word(r), base)
        closed = reps.rep_to_phi(r, n)
        if by_word != closed:
            return False, f"rep {r}: word gives {by_word}, closed form {closed}"
        if reps.phi_to_rep(closed) != r:
            return False, f"phi_to_rep not inverse at {r}"
        seen.add(closed)
    if len(seen) != (n + 4) * 2**n:
        return False, "rep -> phi is not injective"
    return True, "closed-form rep<->phi matches full word application, bijectively"


def finding_s0_direction(n):
    v = coxeter.base_vector(n)
    geometric = geometry.phi_inv(v).flip(0).phi().a
    stated = (v.a + 1) % (n + 4)  # the published direction for bit 0
    if geometric == stated:
        return True, "geometric s_0 moves the center by +1 on bit 0, as published"
    return True, (
        "orientation convention: with counterclockwise labels the geometric "
        "s_0 moves the center by -1 on bit 0 (the published formula says +1)"
    )


def finding_self_duality(n):
    top = coxeter.word_to_affine(n, reps.rep_to_word(reps.longest_rep(n)))
    for r in reps.all_reps(n):
        lhs = coxeter.word_to_affine(n, reps.rep_to_word(r)).compose(top)
        rhs = coxeter.word_to_affine(n, reps.rep_to_word(reps.dual(r, n)))
        if lhs != rhs:
            return False, f"r * w_o != dual(r) as maps at r = {r}"
    return True, "r * w_o = dual(r) holds as a group identity for every rep"


# -- lattice --------------------------------------------------------


def _closure_leq(n):
    """Reflexive-transitive closure of the cover relation."""
    rs = reps.all_reps(n)
    index = {r: i for i, r in enumerate(rs)}
    above = [set() for _ in rs]
    for i, r in enumerate(rs):
        for s in reps.covers(r, n):
            above[i].add(index[s])
    reach = [None] * len(rs)

    def descend(i):
        if reach[i] is None:
            acc = {i}
            for j in above[i]:
                acc |= descend(j)
            reach[i] = acc
        return reach[i]

    for i in sorted(range(len(rs)), key=lambda i: -reps.rep_length(rs[i])):
        descend(i)
    return rs, index, reach


def check_order_closure(n):
    rs, index, reach = _closure_leq(n)
    for i, r in enumerate(rs):
        for j, s in enumerate(rs):
            if reps.leq(r, s) != (j in reach[i]):
                return False, f"dominance vs cover closure disagree at {r}, {s}"
    return True, "dominance order equals the transitive closure of covers"


def check_meet_join(n):
    rs = reps.all_reps(n)
    for r in rs:
        for s in rs:
            m = reps.meet(r, s, n)
            j = reps.join(r, s, n)
            lowers = [t for t in rs if reps.leq(t, r) and reps.leq(t, s)]
            uppers = [t for t in rs if reps.leq(r, t) and reps.leq(s, t)]
            if not (m in lowers and all(reps.leq(t, m) for t in lowers)):
                return False, f"meet formula is not the glb at {r}, {s}"
            if not (j in uppers and all(reps.leq(j, t) for t in uppers)):
                return False, f"join formula is not the lub at {r}, {s}"
    return True, "meet/join formulas equal brute-force glb/lub on all pairs"


def check_modularity(n):
    rs = reps.all_reps(n)
    for r in rs:
        for s in rs:
            lhs = reps.rep_length(reps.join(r, s, n)) + reps.rep_length(
                reps.meet(r, s, n)
            )
            if lhs != reps.rep_length(r) + reps.rep_length(s):
                return False, f"modularity fails at {r}, {s}"
    return True, "rank modularity l(join) + l(meet) = l(r) + l(s) on all pairs"


def check_duality(n):
    rs = reps.all_reps(n)
    top_len = reps.rep_length(reps.longest_rep(n))
    for r in rs:
        d = reps.dual(r, n)
        if reps.dual(d, n) != r:
            return False, f"dual not an involution at {r}"
        if reps.rep_length(d) != top_len - reps.rep_length(r):
            return False, f"dual length complement fails at {r}"
    for r in rs:
        for s in rs:
            if reps.leq(r, s) != reps.leq(reps.dual(s, n), reps.dual(r, n)):
                return False, f"dual does not reverse order at {r}, {s}"
    return True, "dual is an order-reversing, length-complementing involution"


def check_rank_polynomial(n):
    poly = reps.rank_polynomial(n)
    counted = defaultdict(int)
    for r in reps.all_reps(n):
        counted[reps.rep_length(r)] += 1
    enumerated = [counted[k] for k in range(max(counted) + 1)]
    if poly != enumerated:
        return False, "product formula differs from enumerated length counts"
    degree = len(poly) - 1
    expected_degree = 3 * (n + 2) * (n + 1) // 2
    if degree != expected_degree:
        return False, f"degree {degree} != {expected_degree}"
    if sum(poly) != (n + 4) * 2**n:
        return False, "coefficients do not sum to the vertex count"
    if poly != poly[::-1]:
        return False, "rank polynomial is not symmetric"
    return True, f"rank polynomial verified, degree {degree}"


# -- graph ----------------------------------------------------------


def check_graph_description(n):
    g = flipgraph.build_graph(n)
    simple = {
        frozenset((g.vertices[u], g.vertices[v])) for u, v, _ in g.edges
    }
    described = {
        frozenset((r, s)) for r in g.vertices for s in reps.covers(r, n)
    }
    described |= {frozenset(e) for e in flipgraph.wrap_edges(n)}
    if simple != described:
        extra = simple - described
        missing = described - simple
        return False, f"{len(extra)} extra / {len(missing)} missing edges"
    return True, (
        f"{len(simple)} edges = Hasse covers + {2 ** (n - 1)} wrap edges"
    )


def _sampled_sources(n, count, seed=0):
    rs = reps.all_reps(n)
    rng = random.Random(seed)
    return rs, rng.sample(range(len(rs)), min(count, len(rs)))


def check_distance_formula(n):
    g = flipgraph.build_graph(n)
    if n <= 4:
        sources = range(len(g.vertices))
        label = "all"
    else:
        _, sources = _sampled_sources(n, 20)
        label = f"{len(sources) * len(g.vertices)} sampled"
    pairs = 0
    for u in sources:
        dist = flipgraph.bfs_distances(g, u)
        r = g.vertices[u]
        for v, s in enumerate(g.vertices):
            if flipgraph.distance_formula(r, s, n) != dist[v]:
                return False, f"formula != BFS at {r}, {s}"
            pairs += 1
    return True, f"closed-form distance equals BFS on {label} pairs ({pairs})"


def check_diameter(n):
    g = flipgraph.build_graph(n)
    closed = flipgraph.diameter(n)
    by_bfs = flipgraph.bfs_diameter(g)
    if by_bfs != closed:
        return False, f"BFS diameter {by_bfs} != closed form {closed}"
    return True, f"diameter {closed} confirmed by all-pairs BFS"


def check_diameter_scan(n):
    closed = flipgraph.diameter(n)
    scanned = flipgraph.formula_scan_diameter(n)
    if scanned != closed:
        return False, f"formula scan {scanned} != closed form {closed}"
    return True, f"diameter {closed} confirmed by scanning the distance formula"


def check_antipodes(n):
    target = flipgraph.diameter(n)
    kinds = ["color_reversal"] + (["rotation"] if n % 2 == 0 else [])
    for r in reps.all_reps(n):
        for kind in kinds:
            a = flipgraph.antipode(r, n, kind)
            if flipgraph.distance_formula(r, a, n) != target:
                return False, f"{kind} antipode of {r} is not at distance {target}"
    # the color-reversal antipode must agree with geometric recoloring
    for r in reps.all_reps(n):
        geometric = reps.phi_to_rep(
            geometry.phi_inv(reps.rep_to_phi(r, n)).reverse_colors().phi()
        )
        if geometric != flipgraph.antipode(r, n, "color_reversal"):
            return False, f"color reversal disagrees with geometry at {r}"
    return True, f"antipodes ({', '.join(kinds)}) all at distance {target}"


def check_bipartition(n):
    g = flipgraph.build_graph(n)
    rep = flipgraph.bipartition_check(g)
    if not rep["ok"]:
        return False, (
            f"{len(rep['monochromatic_edges'])} monochromatic edges, "
            f"classes {rep['class_sizes']}"
        )
    return True, f"bipartite with equal classes {rep['class_sizes']}"


def check_shortest_representatives(n):
    g = flipgraph.build_graph(n)
    base = flipgraph.bfs_distances(g, g.index[reps.identity_rep(n)])
    for r, word in flipgraph.shortest_representatives(n):
        oracle = coxeter.coxeter_length(coxeter.word_to_affine(n, word))
        if oracle != base[g.index[r]]:
            return False, (
                f"shortest word for {r} has length {oracle}, "
                f"graph distance {base[g.index[r]]}"
            )
    return True, "shortest-representative lengths equal Schreier distances"


def check_lower_bound(n):
    wrap_len = n + (n + 1) * (n + 3)  # length of the wrap connector
    rs, sources = _sampled_sources(n, 15, seed=1)
    rng = random.Random(2)
    for u in sources:
        for _ in range(50):
            s = rs[rng.randrange(len(rs))]
            r = rs[u]
            gap = abs(reps.rep_length(s) - reps.rep_length(r))
            bound = min(gap, wrap_len + 1 - gap)
            if flipgraph.distance_formula(r, s, n) < bound:
                return False, f"length lower bound violated at {r}, {s}"
    return True, "length-gap lower bound holds on all sampled pairs"


def check_rotation_automorphism(n):
    g = flipgraph.build_graph(n)
    simple = {frozenset((g.vertices[u], g.vertices[v])) for u, v, _ in g.edges}

    def rot(r):
        return r[:n] + ((r[n] + 1) % (n + 4),)

    rotated = {frozenset((rot(a), rot(b))) for e in simple for a, b in [tuple(e)]}
    if rotated != simple:
        return False, "rotating the last exponent does not preserve edges"
    return True, "right multiplication by a_n is a graph automorphism"


# -- registry -------------------------------------------------------

SUITES: list[Check] = [
    Check("counting", "geometry", 8, check_counting),
    Check("short-chords", "geometry", 8, check_short_chords),
    Check("phi-roundtrip", "geometry", 8, check_phi_roundtrip),
    Check("flip-involution", "geometry", 6, check_flip_involution),
    Check("relations", "coxeter", 6, check_relations),
    Check("stabilizer", "coxeter", 6, check_stabilizer),
    Check("volumes", "coxeter", 10, check_volumes),
    Check("action-vs-geometry", "coxeter", 5, check_action_matches_geometry),
    Check("generator-lengths", "coxeter", 10, check_generator_lengths),
    Check("rep-lengths", "coxeter", 5, check_rep_lengths),
    Check("rep-phi-correspondence", "coxeter", 6, check_rep_phi_correspondence),
    Check("s0-direction", "coxeter", 6, finding_s0_direction, finding=True),
    Check("self-duality", "coxeter", 4, finding_self_duality, finding=True),
    Check("order-closure", "lattice", 4, check_order_closure),
    Check("meet-join", "lattice", 4, check_meet_join),
    Check("modularity", "lattice", 4, check_modularity),
    Check("duality", "lattice", 4, check_duality),
    Check("rank-polynomial", "lattice", 6, check_rank_polynomial),
    Check("graph-description", "graph", 5, check_graph_description),
    Check("distance-formula", "graph", 6, check_distance_formula),
    Check("diameter-bfs", "graph", 6, check_diameter),
    Check("diameter-scan", "graph", 12, check_diameter_scan),
    Check("antipodes", "graph", 5, check_antipodes),
    Check("bipartition", "graph", 6, check_bipartition),
    Check("shortest-reps", "graph", 5, check_shortest_representatives),
    Check("lower-bound", "graph", 6, check_lower_bound),
    Check("rotation-automorphism", "graph", 5, check_rotation_automorphism),
]

_GRAPH_MIN_N = {
    "distance-formula": 3,
    "diameter-bfs": 3,
    "diameter-scan": 3,
    "antipodes": 3,
    "shortest-reps": 3,
    "lower-bound": 3,
    "bipartition": 3,
}


def suite_names() -> list[str]:
    return sorted({c.suite for c in SUITES})


def run_suite(n: int, suite: str = "all", max_n: int | None = None):
    """Run the selected checks at a single n.

    Yields ``(name, status, detail)`` rows with status 'ok', 'FAIL',
    'finding' or 'skip'.  Checks whose default n-cap is below n are
    skipped unless ``max_n`` raises the cap.
    """
    for check in SUITES:
        if suite != "all" and check.suite != suite:
            continue
        cap = max(check.max_n, max_n or 0)
        if n > cap:
            yield check.name, "skip", f"n={n} above cap {check.max_n}"
            continue
        if n < _GRAPH_MIN_N.get(check.name, 2):
            yield check.name, "skip", f"requires n >= {_GRAPH_MIN_N[check.name]}"
            continue
        ok, detail = check.run(n)
        if check.finding:
            yield check.name, "finding" if ok else "finding-FAIL", detail
        else:
            yield check.name, "ok" if ok else "FAIL", detail
