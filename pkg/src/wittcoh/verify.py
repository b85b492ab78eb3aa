"""The verification suites: every structural claim as an executable check.

Each suite returns a CheckResult; all expected values are either computed
independently (combinatorial predictions vs. linear algebra) or are exact
cochain identities.  Default bounds are the ones the package commits to;
passing a smaller ``n_max`` scales every suite down (0 is a vacuous pass).
"""

from __future__ import annotations

import math
import random
import time
from itertools import combinations

from . import caching
from .cochains import (
    Cochain,
    boundary,
    coboundary,
    generator,
    generator_action,
    graded_slice,
    max_length,
    wedge,
)
from .cohomology import (
    check_action_identities,
    check_central_extensions,
    check_cocycle_family_basis,
    check_low_index_dims,
    check_tensor_blocks,
    class_of,
    cohomology_basis,
    cup,
    poincare_computed,
    poincare_predicted,
    poly_str,
    representative,
)
from .conjecture import check_projection_kills_relations, scan
from .gf2 import BitMatrix
from .monomials import (
    corrected_wedge,
    decompose,
    e_cocycle,
    marked_wedge,
    predicted_coboundary,
    regular_basis,
    x_cocycle,
    y_cocycle,
    z_cocycle,
)
from .partitions import (
    MarkedPartition,
    Order,
    compare,
    count_special,
    is_regular_marked,
    marked_regular_partitions,
    max_regular_length,
    regular_partitions,
    strict_partitions,
)
from .report import CheckResult


def _bound(default: int, n_max: int | None) -> int:
    return default if n_max is None else min(default, n_max)


def criterion_worked_example(n_max: int | None = None) -> CheckResult:
    """Degree 12 at minimal index 1: dimensions t + 3t^2 + 3t^3, from cold caches."""
    res = CheckResult("worked example, degree 12")
    if _bound(12, n_max) < 12:
        res.note("skipped: bound below 12")
        return res
    caching.clear_all()
    start = time.perf_counter()
    got = poincare_computed(12, 1)
    elapsed = time.perf_counter() - start
    res.count()
    if got != {1: 1, 2: 3, 3: 3}:
        res.fail(f"degree 12: computed {poly_str(got)}")
    res.count()
    if elapsed >= 1.0:
        res.fail(f"degree 12 took {elapsed:.3f}s (budget 1s)")
    res.note(f"{elapsed * 1000:.0f} ms")
    return res


def criterion_dims_min_index_1(n_max: int | None = None) -> CheckResult:
    """Prediction vs. brute force for every degree and length, minimal index 1."""
    res = CheckResult("dimension formula, minimal index 1")
    for n in range(1, _bound(40, n_max) + 1):
        res.count()
        predicted = poincare_predicted(n, 1)
        computed = poincare_computed(n, 1)
        if predicted != computed:
            res.fail(f"n={n}: predicted {poly_str(predicted)}, computed {poly_str(computed)}")
    return res


def criterion_dims_min_index_k(n_max: int | None = None, k_bound: int = 4) -> CheckResult:
    res = CheckResult(f"dimension formula, minimal indices 2..{k_bound}")
    for k in range(2, k_bound + 1):
        for n in range(k, _bound(30, n_max) + 1):
            res.count()
            predicted = poincare_predicted(n, k)
            computed = poincare_computed(n, k)
            if predicted != computed:
                res.fail(
                    f"k={k} n={n}: predicted {poly_str(predicted)}, computed {poly_str(computed)}"
                )
    return res


def criterion_wedge_basis(n_max: int | None = None) -> CheckResult:
    """The regular marked-wedge matrix is square and invertible in every block,
    and every singular wedge decomposes strictly below its shape."""
    res = CheckResult("marked-wedge basis and triangularity")
    for n in range(1, _bound(30, n_max) + 1):
        top = max_length(1, n)
        for q in range(1, top + 3):
            res.count()
            n_strict = len(strict_partitions(n, q))
            n_marked = len(marked_regular_partitions(n, q, 1))
            if n_strict != n_marked:
                res.fail(f"(n={n}, q={q}): {n_strict} strict vs {n_marked} regular marked")
            if q <= top and n_strict:
                try:
                    regular_basis(n, q)  # raises when not square/invertible
                except ValueError as exc:
                    res.fail(f"(n={n}, q={q}): {exc}")
        for base in (p for q in range(1, top + 1) for p in strict_partitions(n, q)):
            for r in range(len(base.parts) + 1):
                for marks in combinations(base.parts, r):
                    mp = MarkedPartition(base, marks)
                    value = marked_wedge(mp)
                    if value is None:
                        continue
                    res.count()
                    terms = decompose(value)
                    if is_regular_marked(mp, 1):
                        if set(terms) != {mp}:
                            res.fail(f"{mp}: regular wedge does not decompose to itself")
                    else:
                        bad = [t for t in terms if compare(t, mp) is not Order.LESS]
                        if bad:
                            res.fail(f"{mp}: term {bad[0]} not strictly below")
    return res


def criterion_pair_identities(n_max: int | None = None) -> CheckResult:
    """The three exact quadratic identities between generators and their
    coboundaries, each on its true domain.

    The double-coboundary sum vanishes only for n % 4 != 2 (for n = 4i it is
    what makes the marked pair cocycles closed); at n % 4 == 2, n >= 10 the
    sum is a nonzero regular wedge combination, which this check pins down
    rather than hides.
    """
    res = CheckResult("quadratic cochain identities")
    for n in range(2, _bound(60, n_max) + 1):
        delta_of = {i: coboundary(generator(i), 1) for i in range(1, n)}
        if n % 2:
            res.count()
            total = Cochain.zero()
            for a in range(1, (n + 1) // 2):
                total = total + wedge(generator(a), generator(n - a))
            if total != coboundary(generator(n), 1):
                res.fail(f"n={n}: pair sum is not the generator coboundary")
        res.count()
        total = Cochain.zero()
        for a in range(1, n):
            total = total + wedge(generator(a), delta_of[n - a])
        if total:
            res.fail(f"n={n}: mixed sum does not vanish")
        res.count()
        total = Cochain.zero()
        for a in range(1, n // 2 + 1):
            total = total + wedge(delta_of[a], delta_of[n - a])
        if n % 4 != 2:
            if total:
                res.fail(f"n={n}: double-coboundary sum does not vanish")
        elif n >= 10:
            if not total:
                res.fail(f"n={n}: double-coboundary counterexample unexpectedly vanished")
    return res


def criterion_corrected_coboundary(n_max: int | None = None) -> CheckResult:
    """The coboundary of every corrected wedge equals its closed form."""
    res = CheckResult("corrected-wedge coboundary closed form")
    for n in range(1, _bound(24, n_max) + 1):
        for q in range(1, max_length(1, n) + 1):
            for mp in marked_regular_partitions(n, q, 1):
                res.count()
                actual = coboundary(corrected_wedge(mp), 1)
                if actual != predicted_coboundary(mp):
                    res.fail(f"{mp}: coboundary differs from the closed form")
    return res


def criterion_product_relations(i_max: int = 8) -> CheckResult:
    """Ring relations as class identities, and their exact witnesses."""
    res = CheckResult(f"product relations, i <= {i_max}")
    if i_max < 1:
        res.note("skipped: bound below 1")
        return res
    res.count()
    if wedge(e_cocycle(), e_cocycle()):
        res.fail("square of the weight-1 generator is nonzero")
    res.count()
    if not class_of(wedge(e_cocycle(), x_cocycle(1)), 1, n=3, q=2).is_zero:
        res.fail("e*x1 is a nonzero class")
    res.count()
    if wedge(e_cocycle(), y_cocycle(1)):
        res.fail("e^y1 is nonzero as a cochain")
    for i in range(1, i_max + 1):
        res.count()
        if wedge(x_cocycle(i), x_cocycle(i)) or wedge(y_cocycle(i), y_cocycle(i)):
            res.fail(f"i={i}: a generator square is nonzero")
        # first family: the 3-classes decompose as products
        if i >= 2:
            res.count()
            sum_cls = class_of(Cochain.zero(), 1, n=4 * i, q=3)
            for a in range(1, i):
                sum_cls = sum_cls + cup(class_of(x_cocycle(2 * a)), class_of(y_cocycle(i - a)))
            if sum_cls != class_of(z_cocycle(i)):
                res.fail(f"i={i}: z relation fails as classes")
            res.count()
            witness = Cochain.zero()
            for m in range((i - 2) // 2 + 1):
                witness = witness + wedge(generator(2 * i - 4 * m - 3), generator(2 * i + 4 * m + 3))
            rhs = coboundary(witness, 1)
            for a in range(1, i):
                rhs = rhs + wedge(x_cocycle(2 * a), y_cocycle(i - a))
            if z_cocycle(i) != rhs:
                res.fail(f"i={i}: z witness identity fails as cochains")
        # second family: odd-x products vanish
        res.count()
        sum_cls = class_of(Cochain.zero(), 1, n=4 * i + 2, q=3)
        for a in range(i):
            sum_cls = sum_cls + cup(class_of(x_cocycle(2 * a + 1)), class_of(y_cocycle(i - a)))
        if not sum_cls.is_zero:
            res.fail(f"i={i}: odd-x relation fails as classes")
        res.count()
        witness = Cochain.zero()
        beta = i % 2
        for m in range(1, (i + 1) // 2 + 1):
            witness = witness + wedge(
                generator(4 * m - 1 - 2 * beta), generator(4 * (i - m) + 3 + 2 * beta)
            )
        lhs = Cochain.zero()
        for a in range(i):
            lhs = lhs + wedge(x_cocycle(2 * a + 1), y_cocycle(i - a))
        if lhs != coboundary(witness, 1):
            res.fail(f"i={i}: odd-x witness identity fails as cochains")
        # third family: the y-antisymmetry sum is exactly zero
        res.count()
        total = Cochain.zero()
        for a in range(i):
            total = total + wedge(y_cocycle(i - a), y_cocycle(i + a + 1))
        if total:
            res.fail(f"i={i}: y-family sum is nonzero as a cochain")
    return res


def criterion_low_min_index(n_max: int | None = None, ext_max: int | None = None) -> CheckResult:
    """Minimal indices 0 and -1: dimension transfer, odd-degree vanishing,
    the explicit second-cohomology basis, and the action identities."""
    res = CheckResult("minimal indices 0 and -1")
    top = _bound(30, n_max)
    for k in (0, -1):
        for n in range(k, top + 1):
            res.absorb(check_low_index_dims(n, k))
    for n in range(2, _bound(60, ext_max if ext_max is not None else n_max) + 1, 2):
        res.absorb(check_central_extensions(n))
    for a in range(1, min(15, top) + 1, 2):
        res.absorb(check_action_identities(a))
    return res


def criterion_special_counts(n_max: int | None = None) -> CheckResult:
    res = CheckResult("special partition counts")
    q_top = 8 if n_max is None else min(8, n_max)
    for q in range(1, q_top + 1):
        for k in range(1, 6):
            res.count()
            got = count_special(q, k)
            want = math.comb(q + k - 1, k - 1)
            if got != want:
                res.fail(f"q={q} k={k}: counted {got}, expected {want}")
    return res


def _boundary_matrix(k: int, n: int, q: int) -> BitMatrix:
    source = graded_slice(k, n, q)
    target = graded_slice(k, n, q - 1)
    cols = []
    for mono in source.basis:
        cols.append(target.coords(boundary(Cochain(frozenset({mono})), k)))
    return BitMatrix.from_columns(cols, target.dim)


def criterion_structural(n_max: int | None = None, trials: int = 100, seed: int = 0) -> CheckResult:
    """Squared differentials vanish, the two differentials are adjoint,
    the degree -1 action is a chain map, and products do not depend on the
    choice of representatives."""
    res = CheckResult("structural properties")
    top = _bound(30, n_max)
    for k in (-1, 0, 1, 2, 3, 4):
        for n in range(k, top + 1):
            for q in range(1, max_length(k, n) + 1):
                res.count()
                sl = graded_slice(k, n, q)
                if not (graded_slice(k, n, q + 1).delta @ sl.delta).is_zero():
                    res.fail(f"k={k} n={n} q={q}: coboundary does not square to zero")
                if q >= 2:
                    res.count()
                    if _boundary_matrix(k, n, q) != graded_slice(k, n, q - 1).delta.transpose():
                        res.fail(f"k={k} n={n} q={q}: boundary is not adjoint to coboundary")
    for n in range(1, min(20, top) + 1):
        for q in range(1, max_length(1, n) + 1):
            for mono in graded_slice(1, n, q).basis:
                res.count()
                c = Cochain(frozenset({mono}))
                if generator_action(-1, coboundary(c, 1), 1) != coboundary(
                    generator_action(-1, c, 1), 1
                ):
                    res.fail(f"n={n} q={q}: action does not commute with the coboundary")
    rng = random.Random(seed)
    prod_top = min(20, top)
    cells = [
        (n, q)
        for n in range(1, prod_top)
        for q in range(1, max_length(1, n) + 1)
        if cohomology_basis(1, n, q).dim > 0
    ]
    pairs = [
        (c1, c2) for c1 in cells for c2 in cells if c1[0] + c2[0] <= prod_top
    ]
    for _ in range(trials if pairs else 0):
        res.count()
        (n1, q1), (n2, q2) = rng.choice(pairs)
        b1 = cohomology_basis(1, n1, q1)
        b2 = cohomology_basis(1, n2, q2)
        cls1 = class_of(b1.slice.cochain(rng.choice(b1.rep_vecs)))
        cls2 = class_of(b2.slice.cochain(rng.choice(b2.rep_vecs)))
        expected = cup(cls1, cls2)
        perturbed = b1.slice.coords(representative(cls1))
        for col in b1.image_vecs:
            if rng.random() < 0.5:
                perturbed ^= col
        moved = wedge(b1.slice.cochain(perturbed), representative(cls2))
        got = class_of(moved, 1, n=n1 + n2, q=q1 + q2)
        if got != expected:
            res.fail(f"cup not representative-independent at ({n1},{q1})x({n2},{q2})")
    return res


def criterion_tensor_blocks(n_max: int | None = None) -> CheckResult:
    """Block decomposition: each regular base spans a subcomplex whose
    homology is the product over its simple components."""
    res = CheckResult("tensor blocks")
    for n in range(1, _bound(20, n_max) + 1):
        for q in range(1, max_regular_length(n, 1) + 1):
            for base in regular_partitions(n, q, 1):
                res.absorb(check_tensor_blocks(base))
    return res


def criterion_cocycle_families(n_max: int | None = None) -> CheckResult:
    """The closed families index a basis of the cohomology in every length."""
    res = CheckResult("cocycle family bases")
    for n in range(1, _bound(24, n_max) + 1):
        res.absorb(check_cocycle_family_basis(n))
    return res


def criterion_conjecture(n_max: int | None = None) -> CheckResult:
    """Conjecture evidence: both reductions must agree with each other;
    mismatched cells are reported as findings, not failures."""
    res = CheckResult("conjecture evidence")
    report = scan(_bound(24, n_max))
    res.count(len(report.hilbert_cells) + len(report.counting_cells))
    for finding in report.findings():
        res.note(finding)
    if not report.internally_consistent:
        res.fail("the two reductions disagree about the conjecture")
    proj = check_projection_kills_relations(min(6, _bound(24, n_max) // 4))
    res.absorb(proj)
    return res


def run_suites(
    n_max: int | None = None, k_bound: int = 4, seed: int = 0, trials: int = 100
) -> list[CheckResult]:
    """Run every suite at (possibly scaled-down) committed bounds."""
    i_max = 8 if n_max is None else min(8, n_max // 4)
    suites = [
        ("worked example", lambda: criterion_worked_example(n_max)),
        ("dims, minimal index 1", lambda: criterion_dims_min_index_1(n_max)),
        ("dims, minimal index k", lambda: criterion_dims_min_index_k(n_max, k_bound)),
        ("wedge basis", lambda: criterion_wedge_basis(n_max)),
        ("pair identities", lambda: criterion_pair_identities(n_max)),
        ("corrected coboundary", lambda: criterion_corrected_coboundary(n_max)),
        ("cocycle families", lambda: criterion_cocycle_families(n_max)),
        ("product relations", lambda: criterion_product_relations(i_max)),
        ("low minimal index", lambda: criterion_low_min_index(n_max)),
        ("special counts", lambda: criterion_special_counts(n_max)),
        ("structural", lambda: criterion_structural(n_max, trials, seed)),
        ("tensor blocks", lambda: criterion_tensor_blocks(n_max)),
        ("conjecture evidence", lambda: criterion_conjecture(n_max)),
    ]
    results = []
    for name, suite in suites:
        try:
            results.append(suite())
        except Exception as exc:  # a corrupted complex raises deep inside a suite
            broken = CheckResult(name)
            broken.fail(f"aborted: {type(exc).__name__}: {exc}")
            results.append(broken)
    return results
