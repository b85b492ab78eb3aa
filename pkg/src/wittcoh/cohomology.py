"""Brute-force cohomology of the graded blocks, with the structure checks.

Every block (k, n, q) is finite, so kernels and images of the coboundary are
computed exactly over GF(2).  Representatives of a cohomology basis are the
kernel basis vectors that enlarge the span of the incoming coboundaries,
taken greedily in the fixed monomial order — deterministic by construction.

The module also houses the checkable predictions:

* the combinatorial generating function for the dimensions at minimal index
  k >= 1 (sum over the indexing partitions of (1+t)^leading * t^length);
* the dimension transfers from minimal index 1 to minimal indices 0 and -1;
* the explicit closed 2-cochains spanning the degree-n part of the second
  cohomology at minimal index -1 (the central extension classes);
* the index-raising action identities feeding the connecting-map argument.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations

from .caching import cached
from .cochains import (
    Cochain,
    coboundary,
    generator,
    generator_action,
    graded_slice,
    max_length,
    wedge,
)
from .gf2 import BitMatrix, Gf2Span
from .monomials import corrected_wedge, marked_subsets, pair_cocycle
from .partitions import (
    MarkedPartition,
    Partition,
    canonical_decomposition,
    cohomology_partitions,
    leading_parts,
)
from .report import CheckResult


class NotACocycleError(ValueError):
    pass


@dataclass(frozen=True)
class CohomologyClass:
    """Coordinates of a cohomology class in the fixed representative basis."""

    k: int
    n: int
    q: int
    coords: tuple[int, ...]

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "CohomologyClass") -> "CohomologyClass":
        if (self.k, self.n, self.q) != (other.k, other.n, other.q):
            raise ValueError("classes live in different blocks")
        return CohomologyClass(
            self.k, self.n, self.q, tuple(a ^ b for a, b in zip(self.coords, other.coords))
        )


class CohomologyBasis:
    """Representatives of one block's cohomology plus solving data."""

    __slots__ = ("k", "n", "q", "dim", "representatives", "rep_vecs", "image_vecs", "slice", "_solver")

    def __init__(self, k, n, q, rep_vecs, image_vecs, slice_):
        self.k = k
        self.n = n
        self.q = q
        self.rep_vecs = rep_vecs
        self.image_vecs = image_vecs
        self.slice = slice_
        self.dim = len(rep_vecs)
        self.representatives = tuple(slice_.cochain(v) for v in rep_vecs)
        self._solver = None

    def _solve_matrix(self) -> BitMatrix:
        if self._solver is None:
            self._solver = BitMatrix.from_columns(
                list(self.rep_vecs) + list(self.image_vecs), self.slice.dim
            )
        return self._solver

    def class_coords(self, vec: int) -> tuple[int, ...]:
        """Express a kernel vector modulo the image; unique by construction."""
        x = self._solve_matrix().solve(vec)
        if x is None:
            raise NotACocycleError("vector is closed but outside kernel span — corrupted complex")
        return tuple((x >> j) & 1 for j in range(self.dim))


@cached
def cohomology_basis(k: int, n: int, q: int) -> CohomologyBasis:
    if q < 1:
        raise ValueError("cohomology lives in lengths >= 1")
    sl = graded_slice(k, n, q)
    image_vecs: list[int] = []
    if q > 1:
        prev = graded_slice(k, n, q - 1)
        span = Gf2Span()
        for col in prev.delta.transpose().rows():
            if span.add(col):
                image_vecs.append(col)
    kernel = sl.delta.kernel_basis()
    span = Gf2Span(image_vecs)
    rep_vecs = [v for v in kernel if span.add(v)]
    expected = len(kernel) - len(image_vecs)
    if len(rep_vecs) != expected:
        raise ValueError(
            f"image not contained in kernel at (k={k}, n={n}, q={q}) — the complex is corrupted"
        )
    return CohomologyBasis(k, n, q, rep_vecs, image_vecs, sl)


def cohomology_dim(k: int, n: int, q: int) -> int:
    if q < 1:
        return 0
    return cohomology_basis(k, n, q).dim


def class_of(c: Cochain, k: int = 1, n: int | None = None, q: int | None = None) -> CohomologyClass:
    """The class of a closed cochain; zero cochains need explicit (n, q)."""
    if not c:
        if n is None or q is None:
            raise ValueError("zero cochain: pass n and q explicitly")
        return CohomologyClass(k, n, q, (0,) * cohomology_dim(k, n, q))
    n, q = c.degree, c.length
    basis = cohomology_basis(k, n, q)
    vec = basis.slice.coords(c)
    if basis.slice.delta.mul_vec(vec):
        raise NotACocycleError(f"cochain {c} is not closed at minimal index {k}")
    return CohomologyClass(k, n, q, basis.class_coords(vec))


def representative(cls: CohomologyClass) -> Cochain:
    basis = cohomology_basis(cls.k, cls.n, cls.q)
    vec = 0
    for j, bit in enumerate(cls.coords):
        if bit:
            vec ^= basis.rep_vecs[j]
    return basis.slice.cochain(vec)


def cup(a: CohomologyClass, b: CohomologyClass) -> CohomologyClass:
    """Product of classes via the wedge of their representatives."""
    if a.k != b.k:
        raise ValueError("classes live over different minimal indices")
    w = wedge(representative(a), representative(b))
    return class_of(w, a.k, n=a.n + b.n, q=a.q + b.q)


# ---------------------------------------------------------------------------
# dimension predictions


def poincare_computed(n: int, k: int = 1) -> dict[int, int]:
    """Brute-force dimensions by length; zero coefficients omitted."""
    out = {}
    for q in range(1, max_length(k, n) + 1):
        d = cohomology_dim(k, n, q)
        if d:
            out[q] = d
    return out


def poincare_predicted(n: int, k: int = 1) -> dict[int, int]:
    """The combinatorial prediction sum_I (1+t)^leading(I) * t^length(I)."""
    if k < 1:
        raise ValueError("the combinatorial prediction needs k >= 1")
    out: dict[int, int] = defaultdict(int)
    for p in cohomology_partitions(n, k):
        ind = len(leading_parts(p, k))
        for j in range(ind + 1):
            out[p.length + j] += math.comb(ind, j)
    return dict(out)


def poly_str(coeffs: dict[int, int]) -> str:
    if not coeffs:
        return "0"
    pieces = []
    for q in sorted(coeffs):
        c = coeffs[q]
        head = "" if c == 1 else f"{c}*"
        pieces.append(f"{head}t" if q == 1 else f"{head}t^{q}")
    return " + ".join(pieces)


def predicted_low_index_dim(n: int, q: int, k: int) -> int:
    """Dimensions at minimal index 0 or -1, predicted from the index-1 table."""
    if k not in (0, -1):
        raise ValueError("prediction exists for minimal indices 0 and -1 only")
    if n % 2 or q < 1:
        return 0
    if q == 1:
        return 1
    if k == 0:
        return cohomology_dim(1, n, q - 1) + cohomology_dim(1, n, q)
    return (
        cohomology_dim(1, n + 1, q - 2)
        + cohomology_dim(1, n, q - 1)
        + cohomology_dim(1, n + 1, q - 1)
        + cohomology_dim(1, n, q)
    )


def central_extension_basis(n: int) -> list[tuple[str, Cochain]]:
    """The labelled closed 2-cochains spanning H^2 of degree n at minimal
    index -1: products of two even generators, plus (when 4 divides n) the
    symmetric odd sum reaching down to index -1."""
    if n < 2 or n % 2:
        raise ValueError("central extension classes live in even degrees >= 2")
    out: list[tuple[str, Cochain]] = []
    half = n // 2
    for a in range(0, (half + 1) // 2):
        b = half - a
        if a < b:
            out.append((f"u({a},{b})", wedge(generator(2 * a), generator(2 * b))))
    if n % 4 == 0:
        v = Cochain.zero()
        for r in range(n // 4 + 1):
            v = v + wedge(generator(half - 2 * r - 1), generator(half + 2 * r + 1))
        out.append(("v", v))
    return out


# ---------------------------------------------------------------------------
# theorem checks


def check_cocycle_family_basis(n: int) -> CheckResult:
    """The corrected wedges over the indexing partitions of degree n are
    nonzero closed cochains whose classes form a basis in every length."""
    res = CheckResult(f"cocycle family basis, n={n}")
    by_q: dict[int, list[Cochain]] = defaultdict(list)
    for base in cohomology_partitions(n, 1):
        for mp in marked_subsets(base, 1):
            eps = corrected_wedge(mp)
            res.count()
            if not eps:
                res.fail(f"{mp}: corrected wedge is zero")
                continue
            if coboundary(eps, 1):
                res.fail(f"{mp}: corrected wedge is not closed")
                continue
            by_q[mp.length].append(eps)
    for q in sorted(set(by_q) | set(range(1, max_length(1, n) + 1))):
        fam = by_q.get(q, [])
        basis = cohomology_basis(1, n, q)
        res.count()
        if len(fam) != basis.dim:
            res.fail(f"n={n} q={q}: family size {len(fam)} != dim {basis.dim}")
            continue
        span = Gf2Span(basis.image_vecs)
        for eps in fam:
            if not span.add(basis.slice.coords(eps)):
                res.fail(f"n={n} q={q}: family dependent modulo coboundaries")
                break
    return res


def check_low_index_dims(n: int, k: int) -> CheckResult:
    res = CheckResult(f"low-index dims, k={k}, n={n}")
    for q in range(1, max_length(k, n) + 1):
        res.count()
        got = cohomology_dim(k, n, q)
        want = predicted_low_index_dim(n, q, k)
        if got != want:
            res.fail(f"k={k} n={n} q={q}: computed {got}, predicted {want}")
    return res


def check_central_extensions(n: int) -> CheckResult:
    res = CheckResult(f"central extensions, n={n}")
    family = central_extension_basis(n)
    expected = n // 4 + 1
    res.count()
    if len(family) != expected:
        res.fail(f"n={n}: {len(family)} cocycles, expected {expected}")
    basis = cohomology_basis(-1, n, 2)
    res.count()
    if basis.dim != expected:
        res.fail(f"n={n}: dim H^2 = {basis.dim}, expected {expected}")
    span = Gf2Span(basis.image_vecs)
    for label, c in family:
        res.count()
        if coboundary(c, -1):
            res.fail(f"n={n} {label}: not closed at minimal index -1")
            continue
        if not span.add(basis.slice.coords(c)):
            res.fail(f"n={n} {label}: dependent modulo coboundaries")
    return res


def check_action_identities(a: int) -> CheckResult:
    """The index-raising action of the degree -1 generator on the length-2
    cocycle families lands on explicit coboundaries; even generators die.

    The marked potential needs all tail terms sum_s e_{a-2s} ^ e_{a+3+2s};
    its first term alone only suffices for a <= 3.
    """
    if a < 1 or a % 2 == 0:
        raise ValueError("needs odd a >= 1")
    res = CheckResult(f"action identities, a={a}")
    res.count()
    if generator_action(-1, pair_cocycle(a), 1) != coboundary(generator(2 * a + 3), 1):
        res.fail(f"a={a}: action on the plain pair sum is not the expected coboundary")
    res.count()
    potential = Cochain.zero()
    for s in range((a - 1) // 2 + 1):
        potential = potential + wedge(generator(a - 2 * s), generator(a + 3 + 2 * s))
    if generator_action(-1, pair_cocycle(a, marked=True), 1) != coboundary(potential, 1):
        res.fail(f"a={a}: action on the marked pair sum is not the expected coboundary")
    for i in range(2, 2 * a + 3, 2):
        res.count()
        if generator_action(-1, generator(i), 1):
            res.fail(f"even generator {i}: action should vanish")
    return res


def _block_total_homology(base: Partition) -> tuple[int, list[str]]:
    """Total homology dimension of the span of one base's corrected wedges.

    Levels are mark counts; also reports any coboundary escaping the block.
    """
    problems: list[str] = []
    n = base.degree
    leads = leading_parts(base, 1)
    prev_rank = 0
    total = 0
    for r in range(len(leads) + 1):
        q = base.length + r
        sl = graded_slice(1, n, q)
        shapes = [MarkedPartition(base, m) for m in combinations(leads, r)]
        vecs = [sl.coords(corrected_wedge(mp)) for mp in shapes]
        next_span = Gf2Span()
        if r < len(leads):
            next_sl = graded_slice(1, n, q + 1)
            for m2 in combinations(leads, r + 1):
                next_span.add(next_sl.coords(corrected_wedge(MarkedPartition(base, m2))))
        image = Gf2Span()
        for mp, v in zip(shapes, vecs):
            dv = sl.delta.mul_vec(v)
            if dv and dv not in next_span:
                problems.append(f"{mp}: coboundary leaves its block")
            image.add(dv)
        total += len(vecs) - image.rank - prev_rank
        prev_rank = image.rank
    if prev_rank:
        problems.append(f"{base}: fully marked level is not closed")
    return total, problems


def check_tensor_blocks(base: Partition) -> CheckResult:
    """Each regular base spans a subcomplex whose homology dimension is the
    product over its simple components."""
    res = CheckResult(f"tensor block {base}")
    total, problems = _block_total_homology(base)
    for p in problems:
        res.fail(p)
    expected = 1
    for comp in canonical_decomposition(base, 1):
        expected *= _block_total_homology(comp)[0]
    res.count()
    if total != expected:
        res.fail(f"{base}: block homology {total} != component product {expected}")
    return res
