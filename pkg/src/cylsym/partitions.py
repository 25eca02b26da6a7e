"""Partitions, weights, alcoves and the index combinatorics shared by all modules.

Partitions are plain tuples of weakly decreasing positive ints (canonical form
has no trailing zeros).  Weights are plain int tuples of a fixed rank and may
contain zeros or repeats.  Alcove and boxed weights carry their (n, k) context
so that mixing contexts is a detectable error rather than a silent bug.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, combinations
from math import factorial, prod

Partition = tuple[int, ...]
Weight = tuple[int, ...]


class ContextMismatchError(ValueError):
    """Raised when alcove/boxed weights from different (n, k) contexts are mixed."""


# ---------------------------------------------------------------------------
# basic partition algebra


def normalize(parts) -> Partition:
    """Canonical partition: weakly decreasing, trailing zeros removed."""
    p = tuple(sorted((x for x in parts if x != 0), reverse=True))
    if any(x < 0 for x in p):
        raise ValueError(f"negative part in {parts!r}")
    return p


def is_partition(parts) -> bool:
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1)) and all(
        x >= 0 for x in parts
    )


def size(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len([x for x in lam if x > 0])


def conjugate(lam: Partition) -> Partition:
    """conjugate(lam)[i-1] = #{j : lam_j >= i}."""
    lam = normalize(lam)
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x >= i) for i in range(1, lam[0] + 1))


def multiplicity(lam, value: int) -> int:
    return sum(1 for x in lam if x == value)


def z_factor(lam: Partition) -> int:
    """Order of the centraliser of a permutation of cycle type lam."""
    z = 1
    for v in set(lam):
        if v > 0:
            m = multiplicity(lam, v)
            z *= v**m * factorial(m)
    return z


def stab_order(mu: Weight) -> int:
    """Order of the stabiliser of mu in S_len(mu); counts repeats of every value, zeros included."""
    out = 1
    for v in set(mu):
        out *= factorial(multiplicity(mu, v))
    return out


def quantum_dim(lam: Weight, k: int) -> int:
    """Multinomial k! / prod over value multiplicities; an integer."""
    if len(lam) != k:
        raise ValueError(f"weight {lam} does not have rank {k}")
    d, rem = divmod(factorial(k), stab_order(lam))
    assert rem == 0
    return d


def hooks(lam: Partition) -> list[int]:
    lam = normalize(lam)
    lamc = conjugate(lam)
    return [
        lam[i] + lamc[j] - i - j - 1
        for i in range(len(lam))
        for j in range(lam[i])
    ]


def standard_tableaux_count(lam: Partition) -> int:
    """Number of standard Young tableaux, by the hook length formula."""
    lam = normalize(lam)
    f, rem = divmod(factorial(size(lam)), prod(hooks(lam)) if lam else 1)
    assert rem == 0
    return f


def partitions_of(m: int, max_part: int | None = None, max_len: int | None = None):
    """Yield all partitions of m (descending parts), optionally bounded."""
    if m < 0:
        return
    first = m if max_part is None else min(m, max_part)

    def rec(remaining, biggest, acc):
        if remaining == 0:
            yield tuple(acc)
            return
        if max_len is not None and len(acc) >= max_len:
            return
        for part in range(min(biggest, remaining), 0, -1):
            acc.append(part)
            yield from rec(remaining - part, part, acc)
            acc.pop()

    if m == 0:
        yield ()
    else:
        yield from rec(m, first, [])


def distinct_permutations(mu: Weight):
    """All distinct rearrangements of a weight, as tuples."""
    return _distinct_perms_cached(tuple(sorted(mu, reverse=True)))


@lru_cache(maxsize=None)
def _distinct_perms_cached(mu_sorted: Weight) -> tuple[Weight, ...]:
    k = len(mu_sorted)
    if k == 0:
        return ((),)
    out = set()

    def rec(remaining, acc):
        if not remaining:
            out.add(tuple(acc))
            return
        used = set()
        for i, v in enumerate(remaining):
            if v in used:
                continue
            used.add(v)
            rec(remaining[:i] + remaining[i + 1 :], acc + [v])

    rec(list(mu_sorted), [])
    return tuple(sorted(out, reverse=True))


# ---------------------------------------------------------------------------
# text syntax: comma separated descending parts, "-" for the empty partition

_PART_RE = re.compile(r"^\s*(-|\d+(\s*,\s*\d+)*)\s*$")


def parse_partition(text: str) -> Partition:
    """Parse "4,3,2" (descending, zeros allowed and stripped); "-" is empty."""
    if not _PART_RE.match(text or ""):
        raise ValueError(f"cannot parse partition from {text!r}")
    if text.strip() == "-":
        return ()
    parts = tuple(int(x) for x in text.split(","))
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {text!r}")
    return normalize(parts)


def format_partition(lam: Partition) -> str:
    return ",".join(str(x) for x in lam) if lam else "-"


# ---------------------------------------------------------------------------
# n-cores via beta numbers (abacus)


def beta_numbers(lam: Partition, slots: int | None = None) -> list[int]:
    """First-column hook lengths lam_i + slots - i, a strictly decreasing set."""
    lam = normalize(lam)
    ell = len(lam) if slots is None else slots
    if ell < len(lam):
        raise ValueError("slots must cover all parts")
    padded = list(lam) + [0] * (ell - len(lam))
    return [padded[i] + ell - (i + 1) for i in range(ell)]


def partition_from_betas(betas) -> Partition:
    bs = sorted(betas, reverse=True)
    ell = len(bs)
    return normalize(tuple(bs[i] - (ell - (i + 1)) for i in range(ell)))


def n_core(lam: Partition, n: int) -> tuple[Partition, int, int]:
    """n-core of lam with its n-weight and the removal height-sum parity.

    A ribbon removal is a bead slide b -> b-n on the abacus; its height is one
    more than the number of occupied positions strictly between b-n and b.  The
    core, the number of slides and the height-sum parity do not depend on the
    slide order.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    occupied = set(beta_numbers(lam))
    weight = 0
    parity = 0
    moved = True
    while moved:
        moved = False
        for b in sorted(occupied):
            if b >= n and (b - n) not in occupied:
                crossed = sum(1 for x in occupied if b - n < x < b)
                parity = (parity + crossed + 1) % 2
                occupied.remove(b)
                occupied.add(b - n)
                weight += 1
                moved = True
    return partition_from_betas(occupied), weight, parity


def partitions_with_core(core: Partition, n: int, weight: int, max_len: int | None = None):
    """All partitions with the given n-core and n-weight (brute scan by size)."""
    target = size(core) + n * weight
    out = []
    for lam in partitions_of(target, max_len=max_len):
        c, w, _ = n_core(lam, n)
        if c == normalize(core) and w == weight:
            out.append(lam)
    return out


# ---------------------------------------------------------------------------
# alcove / boxed weights with explicit (n, k) context


@dataclass(frozen=True, order=True)
class AlcoveWeight:
    """A partition with exactly k parts, each in [1, n]."""

    parts: Partition
    n: int
    k: int

    def __post_init__(self):
        p = self.parts
        if len(p) != self.k:
            raise ValueError(f"{p} does not have {self.k} parts")
        if not is_partition(p) or (p and (p[0] > self.n or p[-1] < 1)):
            raise ValueError(f"{p} is not in the (n={self.n}, k={self.k}) alcove")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def stab_order(self) -> int:
        return stab_order(self.parts)

    def quantum_dim(self) -> int:
        return quantum_dim(self.parts, self.k)

    def is_strict(self) -> bool:
        return len(set(self.parts)) == self.k

    def star(self) -> "AlcoveWeight":
        """Swap the part-value multiplicities i <-> n - i, fixing n."""
        mapped = tuple(self.n if p == self.n else self.n - p for p in self.parts)
        return AlcoveWeight(normalize(mapped), self.n, self.k)

    def vee(self) -> "AlcoveWeight":
        return AlcoveWeight(
            tuple(self.n + 1 - p for p in reversed(self.parts)), self.n, self.k
        )

    def rot(self, a: int) -> "AlcoveWeight":
        """Shift every part value by a modulo n, staying inside (0, n]."""
        mapped = tuple((p - 1 + a) % self.n + 1 for p in self.parts)
        return AlcoveWeight(normalize(mapped), self.n, self.k)

    def same_context(self, other: "AlcoveWeight"):
        if (self.n, self.k) != (other.n, other.k):
            raise ContextMismatchError(
                f"mixing contexts (n={self.n},k={self.k}) and (n={other.n},k={other.k})"
            )


@dataclass(frozen=True, order=True)
class BoxedPartition:
    """A partition with at most k parts, each at most n - k."""

    parts: Partition
    n: int
    k: int

    def __post_init__(self):
        p = normalize(self.parts)
        object.__setattr__(self, "parts", p)
        if len(p) > self.k or (p and p[0] > self.n - self.k):
            raise ValueError(f"{p} does not fit the {self.k} x {self.n - self.k} box")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def padded(self) -> Weight:
        return tuple(self.parts) + (0,) * (self.k - len(self.parts))

    def to_strict(self) -> AlcoveWeight:
        """Add the staircase (k, ..., 1); lands in the strict alcove."""
        rho = staircase(self.k)
        return AlcoveWeight(
            tuple(a + b for a, b in zip(self.padded(), rho)), self.n, self.k
        )

    def conjugate_boxed(self) -> "BoxedPartition":
        """Conjugate partition inside the transposed (n-k) x k box."""
        return BoxedPartition(conjugate(self.parts), self.n, self.n - self.k)

    def vee(self) -> "BoxedPartition":
        """Complement-reverse; matches the vee involution on strict weights."""
        strict = self.to_strict().vee()
        return boxed_from_strict(strict)

    def same_context(self, other: "BoxedPartition"):
        if (self.n, self.k) != (other.n, other.k):
            raise ContextMismatchError(
                f"mixing contexts (n={self.n},k={self.k}) and (n={other.n},k={other.k})"
            )


def staircase(k: int) -> Partition:
    return tuple(range(k, 0, -1))


def boxed_from_strict(lam: AlcoveWeight) -> BoxedPartition:
    if not lam.is_strict():
        raise ValueError(f"{lam.parts} is not strict")
    rho = staircase(lam.k)
    return BoxedPartition(
        normalize(tuple(a - b for a, b in zip(lam.parts, rho))), lam.n, lam.k
    )


def enumerate_alcove(n: int, k: int) -> tuple[AlcoveWeight, ...]:
    """All k-part partitions with parts in [1, n], lexicographically sorted."""
    out = [
        AlcoveWeight(tuple(sorted(c, reverse=True)), n, k)
        for c in combinations_with_replacement(range(1, n + 1), k)
    ]
    return tuple(sorted(out, key=lambda a: a.parts))


def enumerate_strict(n: int, k: int) -> tuple[AlcoveWeight, ...]:
    """Strictly decreasing alcove weights; empty when k > n."""
    out = [
        AlcoveWeight(tuple(sorted(c, reverse=True)), n, k)
        for c in combinations(range(1, n + 1), k)
    ]
    return tuple(sorted(out, key=lambda a: a.parts))


def enumerate_boxed(n: int, k: int) -> tuple[BoxedPartition, ...]:
    return tuple(
        sorted(
            (boxed_from_strict(s) for s in enumerate_strict(n, k)),
            key=lambda b: b.parts,
        )
    )


def reduce_to_alcove(nu: Weight, n: int, k: int) -> tuple[AlcoveWeight, int]:
    """Unique alcove point of the level-n orbit of nu, with the winding number d.

    Each entry is shifted by a multiple of n into (0, n], the result sorted;
    d satisfies n*d + |reduced| = |nu|.
    """
    if len(nu) != k:
        raise ValueError(f"weight {nu} does not have rank {k}")
    shifted = tuple((v - 1) % n + 1 for v in nu)
    lam = AlcoveWeight(tuple(sorted(shifted, reverse=True)), n, k)
    d, rem = divmod(sum(nu) - lam.size, n)
    assert rem == 0
    return lam, d
