"""Integer partitions, marked partitions, and their enumerators.

A partition is a weakly increasing tuple of positive parts.  Most of the
structure theory lives relative to a minimal allowed part ``k >= 1``:

* *regular*: successive gaps are at least 2;
* *dense*: successive gaps are exactly 2;
* *special* (relative to k): regular with largest part below ``2*(k+q-1)``
  where q is the length — for ``k=1`` these are exactly ``<1,3,...,2q-1>``;
* *simple*: dense or special.

Every regular partition splits uniquely into simple components of maximal
length (the canonical decomposition).  The minimal parts of the odd
non-special components are its *leading parts*; marked partitions carry a
subset of those (or, for singular ones, any subset of their parts).

``compare`` implements the degree-preserving partial order used for all
triangularity statements: fewer parts first, then prefix-sum dominance,
then lexicographic comparison of mark sets.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations


@dataclass(frozen=True)
class Partition:
    """Weakly increasing tuple of positive integer parts (may be empty)."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"part {p} is not a positive integer")
            if i and parts[i - 1] > p:
                raise ValueError(f"parts not weakly increasing: {parts}")

    @property
    def degree(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.parts)) + ">"


@dataclass(frozen=True)
class MarkedPartition:
    """A partition with a subset of its (distinct) part values marked."""

    base: Partition
    marks: tuple[int, ...] = ()

    def __post_init__(self):
        marks = tuple(self.marks)
        object.__setattr__(self, "marks", marks)
        for i, m in enumerate(marks):
            if m not in self.base.parts:
                raise ValueError(f"mark {m} is not a part of {self.base}")
            if i and marks[i - 1] >= m:
                raise ValueError(f"marks not strictly increasing: {marks}")

    @property
    def degree(self) -> int:
        return self.base.degree

    @property
    def length(self) -> int:
        return self.base.length + len(self.marks)

    @property
    def reduced_length(self) -> int:
        return self.base.length

    def __str__(self) -> str:
        marked = set(self.marks)
        body = ",".join(f"{p}*" if p in marked else str(p) for p in self.base.parts)
        return "<" + body + ">"


def unmarked(p: Partition) -> MarkedPartition:
    return MarkedPartition(p, ())


def _require_nonempty(p: Partition) -> None:
    if p.length == 0:
        raise ValueError("operation undefined for the empty partition")


def _require_min_part(p: Partition, k: int) -> None:
    _require_nonempty(p)
    if p.parts[0] < k:
        raise ValueError(f"{p} has a part below the minimal part {k}")


def is_strict(p: Partition) -> bool:
    _require_nonempty(p)
    return all(a < b for a, b in zip(p.parts, p.parts[1:]))


def is_regular(p: Partition) -> bool:
    _require_nonempty(p)
    return all(b - a >= 2 for a, b in zip(p.parts, p.parts[1:]))


def is_dense(p: Partition) -> bool:
    _require_nonempty(p)
    return all(b - a == 2 for a, b in zip(p.parts, p.parts[1:]))


def is_special(p: Partition, k: int = 1) -> bool:
    """Regular with max part < 2*(k+q-1); rejects parts below k."""
    _require_min_part(p, k)
    return is_regular(p) and p.parts[-1] < 2 * (k + p.length - 1)


def is_simple(p: Partition, k: int = 1) -> bool:
    return is_dense(p) or is_special(p, k)


def is_odd(p: Partition) -> bool:
    _require_nonempty(p)
    return all(x % 2 == 1 for x in p.parts)


def is_even(p: Partition) -> bool:
    _require_nonempty(p)
    return all(x % 2 == 0 for x in p.parts)


def _require_regular(p: Partition, k: int) -> None:
    _require_min_part(p, k)
    if not is_regular(p):
        raise ValueError(f"{p} is not regular")


def canonical_decomposition(p: Partition, k: int = 1) -> list[Partition]:
    """Split a regular partition into simple components of maximal length.

    Greedy from the left: every prefix of a simple partition is simple, so
    taking the longest simple prefix at each step is well defined.
    """
    _require_regular(p, k)
    parts = p.parts
    out = []
    start = 0
    while start < len(parts):
        end = start + 1
        while end < len(parts) and is_simple(Partition(parts[start : end + 1]), k):
            end += 1
        out.append(Partition(parts[start:end]))
        start = end
    return out


def leading_parts(p: Partition, k: int = 1) -> list[int]:
    """Minimal parts of the odd non-special simple components."""
    out = []
    for comp in canonical_decomposition(p, k):
        if is_odd(comp) and not is_special(comp, k):
            out.append(comp.parts[0])
    return out


def is_regular_marked(mp: MarkedPartition, k: int = 1) -> bool:
    base = mp.base
    if base.length == 0 or base.parts[0] < max(k, 1) or not is_regular(base):
        return False
    return set(mp.marks) <= set(leading_parts(base, k))


class Order(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def compare(a: MarkedPartition, b: MarkedPartition) -> Order:
    """The triangular order; defined only between equal degrees.

    Shorter base wins; equal-length bases compare by prefix-sum dominance;
    equal bases compare mark tuples lexicographically (a proper prefix
    precedes its extensions).
    """
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    if a == b:
        return Order.EQUAL
    if a.base != b.base:
        la, lb = a.base.length, b.base.length
        if la != lb:
            return Order.LESS if la < lb else Order.GREATER
        below = above = True
        sa = sb = 0
        for xa, xb in zip(a.base.parts, b.base.parts):
            sa += xa
            sb += xb
            if sa > sb:
                below = False
            if sa < sb:
                above = False
        if below:
            return Order.LESS
        if above:
            return Order.GREATER
        return Order.INCOMPARABLE
    return Order.LESS if a.marks < b.marks else Order.GREATER


def union(a: Partition, b: Partition) -> Partition:
    return Partition(tuple(sorted(a.parts + b.parts)))


def union_marked(a: MarkedPartition, b: MarkedPartition) -> MarkedPartition:
    """Disjoint union; mark sets must not collide (marks are value-based)."""
    if set(a.marks) & set(b.marks):
        raise ValueError("mark sets collide")
    return MarkedPartition(union(a.base, b.base), tuple(sorted(a.marks + b.marks)))


# ---------------------------------------------------------------------------
# enumerators (all lists are in lexicographic order on part tuples)


def ascending_tuples(total: int, count: int, lowest: int, min_gap: int) -> list[tuple[int, ...]]:
    """All tuples of `count` integers summing to `total`, first entry >= lowest,
    successive entries increasing by at least `min_gap`."""
    out: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], remaining: int, lo: int, slots: int) -> None:
        if slots == 0:
            if remaining == 0:
                out.append(prefix)
            return
        if slots == 1:
            if remaining >= lo:
                out.append(prefix + (remaining,))
            return
        hi = (remaining - min_gap * slots * (slots - 1) // 2) // slots
        for a in range(lo, hi + 1):
            rec(prefix + (a,), remaining - a, a + min_gap, slots - 1)

    rec((), total, lowest, count)
    return out


def strict_index_tuples(n: int, q: int, min_index: int) -> list[tuple[int, ...]]:
    """Strictly increasing index tuples (entries may be <= 0) of sum n."""
    return ascending_tuples(n, q, min_index, 1)


def strict_partitions(n: int, q: int, min_part: int = 1) -> list[Partition]:
    if min_part < 1:
        raise ValueError("strict partitions need a positive minimal part")
    return [Partition(t) for t in ascending_tuples(n, q, min_part, 1)]


def all_partitions(n: int, q: int) -> list[Partition]:
    return [Partition(t) for t in ascending_tuples(n, q, 1, 0)]


def regular_partitions(n: int, q: int, min_part: int = 1) -> list[Partition]:
    if min_part < 1:
        raise ValueError("regular partitions need a positive minimal part")
    return [Partition(t) for t in ascending_tuples(n, q, min_part, 2)]


def max_regular_length(n: int, min_part: int) -> int:
    q = 0
    while (q + 1) * min_part + q * (q + 1) <= n:  # min sum of q+1 parts with gap 2
        q += 1
    return q


def marked_regular_partitions(n: int, q: int, k: int = 1) -> list[MarkedPartition]:
    """Regular marked partitions of degree n and length (parts + marks) q."""
    if k < 1:
        raise ValueError("marked enumeration needs k >= 1")
    out = []
    for m in range(1, q + 1):
        for base in regular_partitions(n, m, k):
            need = q - m
            if need == 0:
                out.append(MarkedPartition(base, ()))
                continue
            leads = leading_parts(base, k)
            if need > len(leads):
                continue
            for marks in combinations(leads, need):
                out.append(MarkedPartition(base, marks))
    out.sort(key=lambda mp: (mp.base.parts, mp.marks))
    return out


def cohomology_partitions(n: int, k: int = 1) -> list[Partition]:
    """Regular k-partitions of degree n whose simple components are all
    special or of even degree; these index the cohomology basis."""
    if k < 1:
        raise ValueError("needs k >= 1")
    out = []
    for q in range(1, max_regular_length(n, k) + 1):
        for p in regular_partitions(n, q, k):
            comps = canonical_decomposition(p, k)
            if all(is_special(c, k) or c.degree % 2 == 0 for c in comps):
                out.append(p)
    out.sort(key=lambda p: p.parts)
    return out


def strict_regular_pairs(n: int, q: int) -> list[tuple[Partition, Partition]]:
    """Pairs (K, L): K strict, L regular, |K| + 2|L| = q and
    2*deg(K) + 4*deg(L) = n, with every odd part of K at distance >= 2
    from every part of L.  Either partition may be empty."""
    out = []
    for b in range(q // 2 + 1):
        a = q - 2 * b
        l_degs = [0] if b == 0 else list(range(b * b, n // 4 + 1))  # b*b = 1+3+...+(2b-1)
        for l_deg in l_degs:
            rem = n - 4 * l_deg
            if rem < 0 or rem % 2:
                continue
            k_deg = rem // 2
            if a == 0 and k_deg != 0:
                continue
            ks = [Partition(())] if a == 0 else strict_partitions(k_deg, a)
            ls = [Partition(())] if b == 0 else regular_partitions(l_deg, b)
            for K in ks:
                for L in ls:
                    if all(
                        abs(ki - lj) >= 2
                        for ki in K.parts
                        if ki % 2 == 1
                        for lj in L.parts
                    ):
                        out.append((K, L))
    out.sort(key=lambda kl: (kl[0].parts, kl[1].parts))
    return out


def even_component_marked(n: int, q: int) -> list[MarkedPartition]:
    """Regular marked partitions all of whose simple components have even degree."""
    return [
        mp
        for mp in marked_regular_partitions(n, q, 1)
        if all(c.degree % 2 == 0 for c in canonical_decomposition(mp.base, 1))
    ]


def special_partitions(q: int, k: int) -> list[Partition]:
    """All special k-partitions of length q, by direct enumeration."""
    if q < 1 or k < 1:
        raise ValueError("needs q >= 1 and k >= 1")
    hi = 2 * (k + q - 1) - 1
    out: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], lo: int, slots: int) -> None:
        if slots == 0:
            out.append(prefix)
            return
        for a in range(lo, hi - 2 * (slots - 1) + 1):
            rec(prefix + (a,), a + 2, slots - 1)

    rec((), k, q)
    return [Partition(t) for t in out]


def count_special(q: int, k: int) -> int:
    return len(special_partitions(q, k))
