"""The graded wedge complex of the vector-field algebras over GF(2).

The algebra with minimal index k is spanned by generators e_i (i >= k,
representing t^{i+1} d/dt) with bracket [e_a, e_b] = (b-a) e_{a+b}.  Chains
and cochains are identified through the monomial basis, so a cochain here is
just a GF(2) set of strictly increasing index tuples.  All three operators
reduce their integer coefficients mod 2 at insertion time:

* coboundary: e_i -> sum of e_a ^ e_b over a+b = i, k <= a < b,
  with coefficient a+b, extended as a derivation;
* boundary: contracts index pairs (i_a, i_b) with coefficient i_a + i_b,
  prepending e_{i_a + i_b};
* generator action: e_r sends each index i_a to i_a - r with coefficient i_a
  (the module structure of the cochains of an ideal).

The complex splits into finite blocks by degree n (index sum) and length q;
``graded_slice`` materializes one block's monomial basis together with the
matrix of the coboundary into the next block.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .caching import cached
from .gf2 import BitMatrix
from .partitions import strict_index_tuples

Monomial = tuple[int, ...]

# Test hook: the verification suite's negative control drops the last
# expansion term of this generator's coboundary.  Clear the caches around it.
_corrupted_generator: int | None = None


def _merge(m1: Monomial, m2: Monomial) -> Monomial | None:
    """Merge two sorted index tuples; None if they share an index."""
    out = []
    i = j = 0
    while i < len(m1) and j < len(m2):
        a, b = m1[i], m2[j]
        if a == b:
            return None
        if a < b:
            out.append(a)
            i += 1
        else:
            out.append(b)
            j += 1
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out)


@dataclass(frozen=True)
class Cochain:
    """A GF(2) combination of wedge monomials; addition is symmetric difference."""

    terms: frozenset[Monomial] = frozenset()

    @staticmethod
    def zero() -> "Cochain":
        return Cochain(frozenset())

    @staticmethod
    def unit() -> "Cochain":
        """The empty wedge; multiplicative identity."""
        return Cochain(frozenset({()}))

    @staticmethod
    def from_terms(terms: Iterable[Iterable[int]]) -> "Cochain":
        acc: set[Monomial] = set()
        for t in terms:
            mono = tuple(t)
            if any(a >= b for a, b in zip(mono, mono[1:])):
                raise ValueError(f"indices not strictly increasing: {mono}")
            acc ^= {mono}
        return Cochain(frozenset(acc))

    def support(self) -> list[Monomial]:
        return sorted(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "Cochain") -> "Cochain":
        return Cochain(self.terms ^ other.terms)

    def __mul__(self, other: "Cochain") -> "Cochain":
        return wedge(self, other)

    def is_homogeneous(self) -> bool:
        return len({(len(t), sum(t)) for t in self.terms}) <= 1

    def _grading(self) -> tuple[int, int]:
        grades = {(len(t), sum(t)) for t in self.terms}
        if len(grades) != 1:
            raise ValueError("cochain is zero or not homogeneous")
        return next(iter(grades))

    @property
    def length(self) -> int:
        return self._grading()[0]

    @property
    def degree(self) -> int:
        return self._grading()[1]

    def min_index(self) -> int:
        return min(min(t) for t in self.terms if t)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            "^".join(f"e{i}" for i in t) if t else "1" for t in self.support()
        )


def generator(i: int) -> Cochain:
    """The basis 1-cochain dual to e_i."""
    return Cochain(frozenset({(i,)}))


def wedge(a: Cochain, b: Cochain) -> Cochain:
    acc: set[Monomial] = set()
    for m1 in a.terms:
        for m2 in b.terms:
            m = _merge(m1, m2)
            if m is not None:
                acc ^= {m}
    return Cochain(frozenset(acc))


def _generator_pairs(i: int, k: int) -> list[tuple[int, int]]:
    if i % 2 == 0:  # the coefficient a+b = i vanishes mod 2
        return []
    pairs = [(a, i - a) for a in range(k, (i - 1) // 2 + 1)]
    if _corrupted_generator == i and pairs:
        pairs = pairs[:-1]
    return pairs


def _check_min_index(mono: Monomial, k: int) -> None:
    if mono and mono[0] < k:
        raise ValueError(f"index {mono[0]} below the minimal index {k}")


def coboundary(c: Cochain, k: int = 1) -> Cochain:
    """Raises length by one, preserves degree."""
    acc: set[Monomial] = set()
    for mono in c.terms:
        _check_min_index(mono, k)
        for pos, idx in enumerate(mono):
            rest = mono[:pos] + mono[pos + 1 :]
            for a, b in _generator_pairs(idx, k):
                m = _merge(rest, (a, b))
                if m is not None:
                    acc ^= {m}
    return Cochain(frozenset(acc))


def boundary(c: Cochain, k: int = 1) -> Cochain:
    """Lowers length by one, preserves degree (the dual contraction)."""
    acc: set[Monomial] = set()
    for mono in c.terms:
        _check_min_index(mono, k)
        for i in range(len(mono)):
            for j in range(i + 1, len(mono)):
                s = mono[i] + mono[j]
                if s % 2 == 0:
                    continue
                rest = mono[:i] + mono[i + 1 : j] + mono[j + 1 :]
                m = _merge(rest, (s,))
                if m is not None:
                    acc ^= {m}
    return Cochain(frozenset(acc))


def generator_action(r: int, c: Cochain, min_index: int = 1) -> Cochain:
    """Action of e_r on cochains: index i_a shifts to i_a - r, coefficient i_a."""
    acc: set[Monomial] = set()
    for mono in c.terms:
        for pos, idx in enumerate(mono):
            if idx % 2 == 0:
                continue
            shifted = idx - r
            if shifted < min_index:
                raise ValueError(f"shifted index {shifted} below the minimal index {min_index}")
            rest = mono[:pos] + mono[pos + 1 :]
            m = _merge(rest, (shifted,))
            if m is not None:
                acc ^= {m}
    return Cochain(frozenset(acc))


def pairing(a: Cochain, b: Cochain) -> int:
    """Orthonormal-basis pairing: parity of the common support."""
    return len(a.terms & b.terms) & 1


class GradedSlice:
    """Monomial basis of one (degree, length) block and its coboundary matrix.

    ``delta`` has one column per basis monomial of this block and one row per
    basis monomial of the (q+1)-block of the same degree.
    """

    __slots__ = ("k", "n", "q", "basis", "delta", "_pos")

    def __init__(self, k: int, n: int, q: int, basis: tuple[Monomial, ...], delta: BitMatrix):
        self.k = k
        self.n = n
        self.q = q
        self.basis = basis
        self.delta = delta
        self._pos = {m: i for i, m in enumerate(basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, c: Cochain) -> int:
        v = 0
        for mono in c.terms:
            pos = self._pos.get(mono)
            if pos is None:
                raise ValueError(f"monomial {mono} is not in slice (k={self.k}, n={self.n}, q={self.q})")
            v |= 1 << pos
        return v

    def cochain(self, vec: int) -> Cochain:
        acc = set()
        while vec:
            low = vec & -vec
            acc.add(self.basis[low.bit_length() - 1])
            vec ^= low
        return Cochain(frozenset(acc))

    def __repr__(self) -> str:
        return f"GradedSlice(k={self.k}, n={self.n}, q={self.q}, dim={self.dim})"


@cached
def graded_slice(k: int, n: int, q: int) -> GradedSlice:
    if k < -1:
        raise ValueError("minimal index must be >= -1")
    if q < 1:
        raise ValueError("length must be >= 1")
    basis = tuple(strict_index_tuples(n, q, k))
    target = strict_index_tuples(n, q + 1, k)
    tpos = {m: i for i, m in enumerate(target)}
    cols = []
    for mono in basis:
        col = 0
        for term in coboundary(Cochain(frozenset({mono})), k).terms:
            col ^= 1 << tpos[term]
        cols.append(col)
    return GradedSlice(k, n, q, basis, BitMatrix.from_columns(cols, len(target)))


def max_length(k: int, n: int) -> int:
    """Largest q with a nonempty (n, q) slice for minimal index k."""
    q = 0
    while (q + 1) * k + q * (q + 1) // 2 <= n:  # minimal sum of q+1 distinct indices >= k
        q += 1
    return q
