"""The package's acceptance suite: ten numbered criteria, each exact.

Every criterion returns a CriterionResult with a pass flag and a short
human-readable detail; ``run_all`` evaluates all of them (deterministic
for a fixed seed) and is what both the test suite and the command-line
``verify-all`` execute.  Where a criterion carries a time budget the
elapsed time is checked as well.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from math import comb
from typing import Callable

from . import bott, flopgeom, kgroup, main_component, weyl
from .partitions import BoxShape, Partition, enumerate_box, lr_coefficients, partitions_of


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    elapsed: float


def _result(number, name, passed, detail, started, budget=None):
    elapsed = time.monotonic() - started
    if budget is not None and elapsed >= budget:
        passed = False
        detail += f"; exceeded {budget}s budget ({elapsed:.2f}s)"
    return CriterionResult(number, name, passed, detail, elapsed)


def criterion_1_basis_ranks() -> CriterionResult:
    """Basis count equals C(h,t) for every h <= 8, t <= h/2."""
    started = time.monotonic()
    bad = []
    for h in range(2, 9):
        for t in range(1, h // 2 + 1):
            box = BoxShape.for_grassmannian(t, h)
            n = len(enumerate_box(box))
            if n != comb(h, t):
                bad.append((t, h, n))
    return _result(
        1, "basis ranks", not bad,
        "C(h,t) matched for all (t,h), h<=8" if not bad else f"mismatches: {bad}",
        started, budget=1.0,
    )


_FLOP_CASES = [(1, 2), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 6)]


def criterion_2_flop_unimodular() -> CriterionResult:
    """det = +-1 for the flop matrix on the listed Grassmannians."""
    started = time.monotonic()
    dets = {}
    for t, h in _FLOP_CASES:
        box = BoxShape.for_grassmannian(t, h)
        dets[(t, h)] = kgroup.flop_matrix(box).det()
    bad = {k: d for k, d in dets.items() if d not in (1, -1)}
    return _result(
        2, "flop isomorphism certificates", not bad,
        f"dets {dets}" if not bad else f"non-unit dets: {bad}",
        started, budget=30.0,
    )


def criterion_3_involution() -> CriterionResult:
    """The flop matrix squares to the identity on the same set."""
    started = time.monotonic()
    bad = []
    for t, h in _FLOP_CASES:
        box = BoxShape.for_grassmannian(t, h)
        m = kgroup.flop_matrix(box)
        if (m @ m) != kgroup.IntegerMatrix.identity(box.rank):
            bad.append((t, h))
    return _result(
        3, "flop involution", not bad,
        "matrix squared is the identity on all cases" if not bad else f"failures: {bad}",
        started,
    )


def criterion_4_main_component() -> CriterionResult:
    """Image vectors, Smith form (1,1,2) and index 2 of the main component."""
    started = time.monotonic()
    m = main_component.main_component_matrix("line")
    cols = [m.column(j) for j in range(3)]
    ok_cols = cols == [(1, 0, 0), (0, 1, 0), (-3, 6, -2)]
    snf = kgroup.smith_normal_form(m)
    idx = main_component.image_index(m)
    ok = ok_cols and snf == (1, 1, 2) and idx == 2
    return _result(
        4, "main-component index 2", ok,
        f"columns {cols}, snf {snf}, index {idx}",
        started, budget=1.0,
    )


def criterion_5_koszul_intermediates() -> CriterionResult:
    """The two intermediate Koszul classes in the line-bundle basis."""
    started = time.monotonic()
    box = BoxShape.for_grassmannian(1, 3)
    v1 = kgroup.expand_in_basis(
        kgroup.wedge_tangent(1) * kgroup.line_bundle(-1), box
    )
    v2 = kgroup.expand_in_basis(
        kgroup.wedge_tangent(2) * kgroup.line_bundle(-1), box
    )
    got1 = main_component.to_line_basis(v1)
    got2 = main_component.to_line_basis(v2)
    ok = got1 == (0, 3, -1) and got2 == (3, -3, 1)
    return _result(
        5, "Koszul intermediate classes", ok,
        f"[Tangent(-1)] -> {got1} (want (0,3,-1)); "
        f"[wedge2 Tangent(-1)] -> {got2} (want (3,-3,1))",
        started,
    )


def criterion_6_bott_anchors() -> CriterionResult:
    """Cohomology anchors: O(-2) on G(2,4) vanishes, Hodge diagonal, twists."""
    started = time.monotonic()
    g24 = BoxShape.for_grassmannian(2, 4)
    p2 = BoxShape.for_grassmannian(1, 3)
    problems = []
    if bott.bott_cohomology(bott.line_bundle_weight(-2, g24)) is not None:
        problems.append("O(-2) on G(2,4) has cohomology")
    table = bott.hodge_numbers(g24)
    diag = [table[p][p] for p in range(5)]
    if diag != [1, 1, 2, 1, 1]:
        problems.append(f"Hodge diagonal {diag}")
    if table[2][2] != 2 or table[3][3] != 1:
        problems.append("middle Hodge numbers wrong")
    for d in range(6):
        res = bott.bott_cohomology(bott.line_bundle_weight(d, p2))
        want = (d + 1) * (d + 2) // 2
        if res != bott.BottResult(0, want):
            problems.append(f"sections of O({d}) on the plane: {res}")
    return _result(
        6, "cohomology anchors", not problems,
        "all anchors hold" if not problems else "; ".join(problems),
        started, budget=5.0,
    )


def criterion_7_quadric_identity(seed: int = 0) -> CriterionResult:
    """The limit map lands on the Pluecker quadric, symbolically and at
    1000 random points over the 32003-element field."""
    started = time.monotonic()
    problems = []
    if not flopgeom.quadric_vanishes_identically():
        problems.append("symbolic expansion is nonzero")
    field = flopgeom.PrimeField(32003)
    rng = random.Random(seed)
    for _ in range(1000):
        pt = tuple(field(rng.randrange(32003)) for _ in range(5))
        if flopgeom.quadric_value(flopgeom.pluecker_limit_map(pt)) != 0:
            problems.append(f"quadric nonzero at {pt}")
            break
    return _result(
        7, "Pluecker quadric identity", not problems,
        "zero polynomial and zero at 1000 random points"
        if not problems else "; ".join(problems),
        started, budget=1.0,
    )


def criterion_8_weyl_words(seed: int = 0) -> CriterionResult:
    """Palindromic duality words for h = 2..8 and chamber sorting on 500
    seeded random regular vectors."""
    started = time.monotonic()
    problems = []
    for h in range(2, 9):
        word = weyl.duality_word(h)
        if len(word) != 2 * h - 3:
            problems.append(f"word length at h={h}")
        if weyl.word_permutation(word, h) != weyl.duality_permutation(h).inverse():
            problems.append(f"word product at h={h}")
    rng = random.Random(seed)
    for _ in range(500):
        h = rng.randint(2, 8)
        vec = rng.sample(range(-50, 51), h)
        sigma, word = weyl.chamber_sort(vec)
        sorted_vec = weyl.apply_word(word, vec)
        if any(a <= b for a, b in zip(sorted_vec, sorted_vec[1:])):
            problems.append(f"not decreasing for {vec}")
            break
        if len(word) != sigma.inversions():
            problems.append(f"word not reduced for {vec}")
            break
    return _result(
        8, "duality words and chamber sorting", not problems,
        "words and 500 chamber sorts verified" if not problems else "; ".join(problems),
        started, budget=1.0,
    )


def _brute_force_lr(nu: Partition, lam: Partition, mu: Partition) -> int:
    """Independent Littlewood-Richardson count: enumerate semistandard
    fillings of the skew shape row by row, then check the lattice
    condition on the completed reverse reading word."""
    if not nu.contains(lam) or nu.size != lam.size + mu.size:
        return 0
    inner = tuple(lam) + (0,) * (len(nu) - len(lam))
    rows = [(inner[r], nu[r]) for r in range(len(nu))]
    nvals = len(mu)
    fillings = [[]]
    for r, (lo, hi) in enumerate(rows):
        new = []
        for partial in fillings:
            row_sets = _semistandard_rows(partial, r, lo, hi, nvals, rows)
            for row in row_sets:
                new.append(partial + [row])
        fillings = new
    count = 0
    for tab in fillings:
        word = [v for row in tab for v in reversed(row)]
        counts = [0] * (nvals + 1)
        ok = True
        for v in word:
            counts[v] += 1
            if v > 1 and counts[v] > counts[v - 1]:
                ok = False
                break
        content = [0] * (nvals + 1)
        for v in word:
            content[v] += 1
        if ok and all(content[i + 1] == mu[i] for i in range(nvals)):
            count += 1
    return count


def _semistandard_rows(partial, r, lo, hi, nvals, rows):
    width = hi - lo
    if width == 0:
        return [[]]
    out = []

    def above(c):
        if r == 0 or c < rows[r - 1][0]:
            return 0
        prev_lo = rows[r - 1][0]
        row_above = partial[r - 1]
        return row_above[c - prev_lo] if c - prev_lo < len(row_above) else 0

    def rec(c, row):
        if c == hi:
            out.append(list(row))
            return
        lower = max(row[-1] if row else 1, above(c) + 1)
        for v in range(lower, nvals + 1):
            row.append(v)
            rec(c + 1, row)
            row.pop()

    rec(lo, [])
    return out


def criterion_9_oracles() -> CriterionResult:
    """LR agreement with an independent brute-force counter, basis round
    trips, and absence of non-integral expansions."""
    started = time.monotonic()
    problems = []
    pairs = checked = 0
    for n1 in range(0, 9):
        for n2 in range(0, 9 - n1):
            for lam in partitions_of(n1):
                for mu in partitions_of(n2):
                    got = lr_coefficients(lam, mu)
                    pairs += 1
                    for nu in partitions_of(n1 + n2, lam.rows + mu.rows):
                        if nu.contains(lam):
                            want = _brute_force_lr(nu, lam, mu)
                            checked += 1
                            if got.get(nu, 0) != want:
                                problems.append(f"c^{nu}_{lam},{mu}")
    box = BoxShape.for_grassmannian(2, 5)
    expansions = 0
    try:
        for alpha in enumerate_box(box):
            v = kgroup.expand_in_basis(kgroup.schur_sub(alpha), box)
            expansions += 1
            if v != kgroup.KVector.basis_vector(box, alpha):
                problems.append(f"round trip failed at {alpha}")
        for k in range(-4, 5):
            kgroup.line_bundle_class(k, box)
            kgroup.line_bundle_class(k, BoxShape(1, 2))
            expansions += 2
        for alpha in enumerate_box(box):
            kgroup.dual_class(alpha, box)
            expansions += 1
    except kgroup.NonIntegralExpansion as exc:
        problems.append(f"NonIntegralExpansion: {exc}")
    return _result(
        9, "oracle equivalences", not problems,
        f"{checked} LR values over {pairs} products match brute force; "
        f"basis round trips hold and {expansions} expansions were integral"
        if not problems else "; ".join(problems[:5]),
        started,
    )


def criterion_10_serre_duality(seed: int = 0) -> CriterionResult:
    """Matching dimensions in complementary degrees for 100 random weights
    on G(2,4)."""
    started = time.monotonic()
    rng = random.Random(seed)
    box = BoxShape.for_grassmannian(2, 4)
    problems = []
    for _ in range(100):
        a = tuple(sorted((rng.randint(-6, 6) for _ in range(2)), reverse=True))
        b = tuple(sorted((rng.randint(-6, 6) for _ in range(2)), reverse=True))
        w = bott.Weight(a, b)
        first = bott.bott_cohomology(w)
        second = bott.bott_cohomology(bott.serre_dual_weight(w))
        if first is None:
            if second is not None:
                problems.append(f"{w}")
        elif second != bott.BottResult(box.dim - first.degree, first.dim):
            problems.append(f"{w}")
    return _result(
        10, "Serre duality", not problems,
        "100 weights dualize correctly" if not problems else f"failures: {problems[:5]}",
        started,
    )


_CRITERIA: list[Callable[..., CriterionResult]] = [
    criterion_1_basis_ranks,
    criterion_2_flop_unimodular,
    criterion_3_involution,
    criterion_4_main_component,
    criterion_5_koszul_intermediates,
    criterion_6_bott_anchors,
    criterion_7_quadric_identity,
    criterion_8_weyl_words,
    criterion_9_oracles,
    criterion_10_serre_duality,
]

_SEEDED = {criterion_7_quadric_identity, criterion_8_weyl_words, criterion_10_serre_duality}


def run_all(seed: int = 0) -> list[CriterionResult]:
    """Run every acceptance criterion; deterministic for a fixed seed."""
    results = []
    for fn in _CRITERIA:
        results.append(fn(seed) if fn in _SEEDED else fn())
    return sorted(results, key=lambda r: r.number)
