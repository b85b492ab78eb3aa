"""Evidence gathering for the conjectured presentation of the cohomology ring.

The ring at minimal index 1 is generated by the class e of the weight-1
generator, the even 1-classes x_i, and the 2-classes y_i.  The conjecture
says the kernel of the surjection from the free bigraded exterior algebra
P[E, X, Y] (deg E = (1,1), deg X_i = (1,2i), deg Y_i = (2,4i)) is the ideal
generated by

    E^X_1,   E^Y_1,   sum_{a<i} X_{2a+1}^Y_{i-a},   sum_{a<i} Y_{i-a}^Y_{i+a+1}.

Two independent reductions are checked per bidegree and never asserted:

* Hilbert: dim of the quotient equals the brute-force cohomology dimension;
* counting: the strict/regular pair count equals the count of marked regular
  partitions with all simple components of even degree.

Mismatches are findings, not failures; only disagreement *between* the two
reductions is an internal error.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cochains import Cochain, wedge
from .cohomology import class_of, cohomology_dim
from .gf2 import Gf2Span
from .monomials import e_cocycle, x_cocycle, y_cocycle
from .partitions import (
    ascending_tuples,
    even_component_marked,
    strict_regular_pairs,
)
from .report import CheckResult


@dataclass(frozen=True)
class BigradedMonomial:
    """Square-free word E^eps * X_(xs) * Y_(ys) with its bidegree."""

    has_e: bool
    xs: tuple[int, ...]
    ys: tuple[int, ...]

    @property
    def bidegree(self) -> tuple[int, int]:
        q = int(self.has_e) + len(self.xs) + 2 * len(self.ys)
        n = int(self.has_e) + 2 * sum(self.xs) + 4 * sum(self.ys)
        return (q, n)

    def __str__(self) -> str:
        parts = (["E"] if self.has_e else []) + [f"X{i}" for i in self.xs] + [f"Y{i}" for i in self.ys]
        return "^".join(parts) if parts else "1"


def _merge_square_free(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...] | None:
    if set(a) & set(b):
        return None
    return tuple(sorted(a + b))


def multiply(a: BigradedMonomial, b: BigradedMonomial) -> BigradedMonomial | None:
    """Product in the exterior algebra; None when a generator repeats."""
    if a.has_e and b.has_e:
        return None
    xs = _merge_square_free(a.xs, b.xs)
    ys = _merge_square_free(a.ys, b.ys)
    if xs is None or ys is None:
        return None
    return BigradedMonomial(a.has_e or b.has_e, xs, ys)


def monomials_in_bidegree(q: int, n: int) -> list[BigradedMonomial]:
    if q < 0 or n < 0:
        return []
    out = []
    for has_e in (False, True):
        qq, nn = q - has_e, n - has_e
        if qq < 0 or nn < 0 or nn % 2:
            continue
        for b in range(qq // 2 + 1):
            a = qq - 2 * b
            for y_deg in range(0, nn // 4 + 1):
                rest = nn - 4 * y_deg
                if rest % 2:
                    continue
                x_deg = rest // 2
                xs_list = ascending_tuples(x_deg, a, 1, 1)
                ys_list = ascending_tuples(y_deg, b, 1, 1)
                for xs in xs_list:
                    for ys in ys_list:
                        out.append(BigradedMonomial(bool(has_e), xs, ys))
    out.sort(key=lambda m: (m.has_e, m.xs, m.ys))
    return out


def relation_generators(n_cap: int) -> list[tuple[str, list[BigradedMonomial]]]:
    """The ideal generators with degree at most n_cap, as monomial sums."""
    gens: list[tuple[str, list[BigradedMonomial]]] = []
    if n_cap >= 3:
        gens.append(("E^X1", [BigradedMonomial(True, (1,), ())]))
    if n_cap >= 5:
        gens.append(("E^Y1", [BigradedMonomial(True, (), (1,))]))
    i = 1
    while 4 * i + 2 <= n_cap:
        gens.append(
            (f"G{i}", [BigradedMonomial(False, (2 * a + 1,), (i - a,)) for a in range(i)])
        )
        i += 1
    i = 1
    while 8 * i + 4 <= n_cap:
        gens.append(
            (f"H{i}", [BigradedMonomial(False, (), tuple(sorted((i - a, i + a + 1)))) for a in range(i)])
        )
        i += 1
    return gens


def ideal_rank(q: int, n: int) -> int:
    """Rank of the ideal's intersection with one bidegree: the span of
    generator-times-monomial products landing there."""
    ambient = monomials_in_bidegree(q, n)
    pos = {m: i for i, m in enumerate(ambient)}
    span = Gf2Span()
    for _, terms in relation_generators(n):
        gq, gn = terms[0].bidegree
        if gq > q or gn > n:
            continue
        for m in monomials_in_bidegree(q - gq, n - gn):
            vec = 0
            for t in terms:
                prod = multiply(t, m)
                if prod is not None:
                    vec ^= 1 << pos[prod]
            span.add(vec)
    return span.rank


@dataclass(frozen=True)
class Cell:
    q: int
    n: int
    lhs: int
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def hilbert_cell(q: int, n: int) -> Cell:
    quotient = len(monomials_in_bidegree(q, n)) - ideal_rank(q, n)
    return Cell(q, n, quotient, cohomology_dim(1, n, q))


def counting_cell(q: int, n: int) -> Cell:
    return Cell(q, n, len(strict_regular_pairs(n, q)), len(even_component_marked(n, q)))


@dataclass
class ConjectureReport:
    n_max: int
    hilbert_cells: list[Cell]
    counting_cells: list[Cell]

    @property
    def hilbert_ok(self) -> bool:
        return all(c.equal for c in self.hilbert_cells)

    @property
    def counting_ok(self) -> bool:
        return all(c.equal for c in self.counting_cells)

    @property
    def internally_consistent(self) -> bool:
        # the two reductions test the same statement; their verdicts must match
        return self.hilbert_ok == self.counting_ok

    def findings(self) -> list[str]:
        out = []
        for c in self.hilbert_cells:
            if not c.equal:
                out.append(f"hilbert (q={c.q}, n={c.n}): quotient {c.lhs} != dim {c.rhs}")
        for c in self.counting_cells:
            if not c.equal:
                out.append(f"counting (q={c.q}, n={c.n}): pairs {c.lhs} != marked {c.rhs}")
        return out


def scan(n_max: int) -> ConjectureReport:
    hilbert = []
    counting = []
    for n in range(1, n_max + 1):
        for q in range(1, n + 1):
            hilbert.append(hilbert_cell(q, n))
            counting.append(counting_cell(q, n))
    return ConjectureReport(n_max, hilbert, counting)


def check_projection_kills_relations(i_max: int) -> CheckResult:
    """Each ideal generator maps to the zero class under E -> e, X_i -> x_i,
    Y_i -> y_i, so the projection factors through the quotient.

    Both families are cut at the degree the X-family reaches at i_max.
    """
    res = CheckResult(f"projection kills relations, i <= {i_max}")
    if i_max < 1:
        return res
    res.count()
    if not class_of(wedge(e_cocycle(), x_cocycle(1)), 1, n=3, q=2).is_zero:
        res.fail("E^X1 image is a nonzero class")
    res.count()
    if not class_of(wedge(e_cocycle(), y_cocycle(1)), 1, n=5, q=3).is_zero:
        res.fail("E^Y1 image is a nonzero class")
    degree_cap = 4 * i_max + 2
    for i in range(1, i_max + 1):
        res.count()
        acc = Cochain.zero()
        for a in range(i):
            acc = acc + wedge(x_cocycle(2 * a + 1), y_cocycle(i - a))
        if not class_of(acc, 1, n=4 * i + 2, q=3).is_zero:
            res.fail(f"G{i} image is a nonzero class")
        if 8 * i + 4 > degree_cap:
            continue
        res.count()
        acc = Cochain.zero()
        for a in range(i):
            acc = acc + wedge(y_cocycle(i - a), y_cocycle(i + a + 1))
        if acc and not class_of(acc).is_zero:
            res.fail(f"H{i} image is a nonzero class")
    return res
