"""Cylindric reverse plane partitions and the cylindric complete/elementary functions.

Everything is organised around layered loop-to-loop transitions: a CRPP is a
chain of cylindric loops, each step carrying a binomial weight (theta for
general steps, psi for vertical strips, phi for adjacent-column strips).  The
same transfer engine produces single weighted counts, full monomial expansions
and explicit CRPP enumerations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .affine import CylindricShape, is_valid_shape, is_vertical_strip, loop_value
from .fusion import fusion_count
from .partitions import (
    AlcoveWeight,
    Partition,
    Weight,
    conjugate,
    distinct_permutations,
    enumerate_alcove,
    multiplicity,
    normalize,
    partitions_of,
    reduce_to_alcove,
    size,
    stab_order,
    z_factor,
)
from .symfunc import SymFunc, antipode


def _comb0(a: int, b: int) -> int:
    """Binomial that vanishes on negative arguments."""
    if a < 0 or b < 0:
        return 0
    return comb(a, b)


def _conj_padded(parts: Partition, n: int) -> tuple[int, ...]:
    """Conjugate padded to n entries; alcove parts never exceed n."""
    c = conjugate(parts)
    return tuple(c) + (0,) * (n - len(c))


# ---------------------------------------------------------------------------
# one-step weights


@lru_cache(maxsize=None)
def _theta_cyl(lam: Partition, d: int, mu: Partition, n: int) -> int:
    lamc = _conj_padded(lam, n)
    muc = _conj_padded(mu, n) + (0,)

    def prod(shift: int) -> int:
        out = 1
        for i in range(n):
            out *= _comb0(lamc[i] + shift - muc[i + 1], muc[i] - muc[i + 1])
            if out == 0:
                return 0
        return out

    return prod(d) - prod(d - 1)


def theta_cyl(lam: AlcoveWeight, d: int, mu: AlcoveWeight) -> int:
    """Number of affine coset elements w with mu.w <= lam.tau^d, in closed form.

    Vanishes exactly when lam/d/mu is not a valid cylindric skew shape.
    """
    lam.same_context(mu)
    if d < 0:
        return 0
    return _theta_cyl(lam.parts, d, mu.parts, lam.n)


def theta_cyl_oracle(lam: AlcoveWeight, d: int, mu: AlcoveWeight) -> int:
    """Brute count of pairs (w, beta): mu.w <= lam + n*beta, beta >= 0, |beta| = d."""
    lam.same_context(mu)
    if d < 0:
        return 0
    n, k = lam.n, lam.k
    count = 0
    for alpha in distinct_permutations(mu.parts):
        for beta in _compositions(d, k):
            if all(a <= l + n * b for a, l, b in zip(alpha, lam.parts, beta)):
                count += 1
    return count


@lru_cache(maxsize=None)
def _compositions(total: int, slots: int) -> tuple[tuple[int, ...], ...]:
    if slots == 0:
        return ((),) if total == 0 else ()
    out = []
    for first in range(total + 1):
        for rest in _compositions(total - first, slots - 1):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def _psi_cyl(lam: Partition, d: int, mu: Partition, n: int) -> int:
    lamc = _conj_padded(lam, n) + (0,)
    muc = _conj_padded(mu, n)
    out = 1
    for i in range(n):
        out *= _comb0(lamc[i] - lamc[i + 1], lamc[i] + d - muc[i])
        if out == 0:
            return 0
    return out


def psi_cyl(lam: AlcoveWeight, d: int, mu: AlcoveWeight) -> int:
    """Vertical-strip step weight; vanishes unless lam/d/mu is a cylindric vertical strip."""
    lam.same_context(mu)
    if d < 0:
        return 0
    return _psi_cyl(lam.parts, d, mu.parts, lam.n)


def psi_cyl_oracle(lam: AlcoveWeight, d: int, mu: AlcoveWeight) -> int:
    """Brute count of (w, alpha) with lam - mu.w + n*alpha having all entries 0 or 1."""
    lam.same_context(mu)
    if d < 0:
        return 0
    n, k = lam.n, lam.k
    count = 0
    for perm in distinct_permutations(mu.parts):
        for alpha in _compositions(d, k):
            if all(l - p + n * a in (0, 1) for l, p, a in zip(lam.parts, perm, alpha)):
                count += 1
    return count


def _loop_window(lam: AlcoveWeight, d: int) -> Weight:
    """(lam . tau^d) restricted to [k]."""
    from .affine import loop_value

    return tuple(loop_value(lam, d, i) for i in range(1, lam.k + 1))


def phi_cyl(lam: AlcoveWeight, d: int, mu: AlcoveWeight) -> int:
    """Adjacent-column-strip weight.

    Recognition reduces the shape with tau^-1 until fewer than n boxes remain
    (the reduced degree can only be 0 or 1), then checks for a horizontal strip
    in adjacent columns.  The weight is the multiplicity, along one period of
    the loop of lam.tau^d, of the value at the strip's last column.
    """
    lam.same_context(mu)
    n, k = lam.n, lam.k
    if d < 0:
        return 0
    r = lam.size - mu.size + n * d
    if r < 0:
        return 0
    if r == 0:
        return 1 if lam == mu else 0
    if r % n == 0:
        return k if lam == mu else 0
    r_red = r % n
    d_red = d - (r - r_red) // n
    if d_red not in (0, 1):
        return 0
    shape = CylindricShape(lam, d_red, mu)
    if not shape.is_valid():
        return 0
    cols = shape.column_counts()
    if any(c > 1 for c in cols.values()):
        return 0
    residues = {j % n for j in cols}
    if len(residues) != r_red:
        return 0
    starts = [a for a in residues if (a - 1) % n not in residues]
    if len(starts) != 1:
        return 0
    a = starts[0]
    if residues != {(a + t) % n for t in range(r_red)}:
        return 0
    target = (a - 1 + r) % n
    window = _loop_window(lam, d)
    return sum(1 for v in window if v % n == target)


def phi_cyl_oracle(lam: AlcoveWeight, d: int, mu: AlcoveWeight) -> int:
    """Pieri-style count: positions l where replacing lam_l by lam_l + n*d - r
    turns lam into a rearrangement of mu."""
    lam.same_context(mu)
    n = lam.n
    r = lam.size - mu.size + n * d
    if d < 0 or r < 0:
        return 0
    if r == 0:
        return 1 if lam == mu else 0
    count = 0
    for l in range(lam.k):
        value = lam.parts[l] + n * d - r
        if value < 1:
            continue
        replaced = lam.parts[:l] + (value,) + lam.parts[l + 1 :]
        if normalize(replaced) == mu.parts:
            count += 1
    return count


# ---------------------------------------------------------------------------
# generic layered transfer


@lru_cache(maxsize=None)
def _successors(mu: AlcoveWeight, r: int, kind: str) -> tuple:
    """All (lam, extra_degree, weight) with a nonzero one-step weight adding r boxes."""
    n, k = mu.n, mu.k
    step = {"theta": theta_cyl, "psi": psi_cyl, "phi": phi_cyl}[kind]
    out = []
    for de in range(0, (mu.size + r - k) // n + 1):
        target_size = mu.size + r - n * de
        if target_size < k or target_size > n * k:
            continue
        for lam in enumerate_alcove(n, k):
            if lam.size != target_size:
                continue
            w = step(lam, de, mu)
            if w:
                out.append((lam, de, w))
    return tuple(out)


def _apply_layer(vec: dict, r: int, kind: str, dmax: int) -> dict:
    out: dict = {}
    for (w1, e1), c in vec.items():
        for w2, de, coef in _successors(w1, r, kind):
            e2 = e1 + de
            if e2 > dmax:
                continue
            key = (w2, e2)
            out[key] = out.get(key, 0) + c * coef
    return out


def _transfer_value(
    lam: AlcoveWeight, d: int, mu: AlcoveWeight, weight, kind: str
) -> int:
    vec = {(mu, 0): 1}
    for r in weight:
        if r < 0:
            raise ValueError("weights must be non-negative")
        if r == 0:
            continue
        vec = _apply_layer(vec, r, kind, d)
        if not vec:
            return 0
    return vec.get((lam, d), 0)


def theta_weight(lam: AlcoveWeight, d: int, mu: AlcoveWeight, nu) -> int:
    """Weighted count of CRPPs of shape lam/d/mu and weight nu."""
    lam.same_context(mu)
    if d < 0 or sum(nu) != lam.size - mu.size + lam.n * d:
        return 0
    return _transfer_value(lam, d, mu, tuple(nu), "theta")


def psi_weight(lam: AlcoveWeight, d: int, mu: AlcoveWeight, nu) -> int:
    lam.same_context(mu)
    if d < 0 or sum(nu) != lam.size - mu.size + lam.n * d:
        return 0
    return _transfer_value(lam, d, mu, tuple(nu), "psi")


def phi_weight(lam: AlcoveWeight, d: int, mu: AlcoveWeight, nu) -> int:
    lam.same_context(mu)
    if d < 0 or sum(nu) != lam.size - mu.size + lam.n * d:
        return 0
    return _transfer_value(lam, d, mu, tuple(nu), "phi")


def _weight_expansion(lam: AlcoveWeight, d: int, mu: AlcoveWeight, kind: str) -> dict:
    """Coefficients {partition nu: weighted CRPP count}, sharing partition prefixes."""
    n = lam.n
    deg = lam.size - mu.size + n * d
    if d < 0 or deg < 0:
        return {}
    if deg == 0:
        return {(): 1} if (d == 0 and lam == mu) else {}
    out: dict[Partition, int] = {}

    def rec(prefix: tuple, vec: dict, remaining: int, max_part: int):
        if remaining == 0:
            c = vec.get((lam, d), 0)
            if c:
                out[prefix] = c
            return
        for r in range(min(max_part, remaining), 0, -1):
            nxt = _apply_layer(vec, r, kind, d)
            if nxt:
                rec(prefix + (r,), nxt, remaining - r, r)

    rec((), {(mu, 0): 1}, deg, deg)
    return out


# ---------------------------------------------------------------------------
# the cylindric complete and elementary symmetric functions


def cyl_h(lam: AlcoveWeight, d: int, mu: AlcoveWeight) -> SymFunc:
    """Cylindric complete symmetric function, expanded over monomials."""
    table = _weight_expansion(lam, d, mu, "theta")
    return SymFunc.make("m", {nu: Fraction(c) for nu, c in table.items()})


def cyl_e(lam: AlcoveWeight, d: int, mu: AlcoveWeight) -> SymFunc:
    """Cylindric elementary symmetric function, expanded over monomials."""
    table = _weight_expansion(lam, d, mu, "psi")
    return SymFunc.make("m", {nu: Fraction(c) for nu, c in table.items()})


def cyl_h_in_h(lam: AlcoveWeight, d: int, mu: AlcoveWeight) -> SymFunc:
    """Complete-basis expansion with extended fusion coefficients as weights."""
    lam.same_context(mu)
    n, k = lam.n, lam.k
    deg = lam.size - mu.size + n * d
    if d < 0 or deg < 0:
        return SymFunc.make("h", {})
    out = {}
    for nu in partitions_of(deg, max_len=k):
        c = fusion_count(lam.parts, mu.parts, nu, n, k)
        if c:
            out[nu] = Fraction(c)
    return SymFunc.make("h", out)


def cyl_e_in_e(lam: AlcoveWeight, d: int, mu: AlcoveWeight) -> SymFunc:
    f = cyl_h_in_h(lam, d, mu)
    return SymFunc.make("e", dict(f.coeffs))


def cyl_p_expand(lam: AlcoveWeight, d: int, mu: AlcoveWeight, kind: str = "h") -> SymFunc:
    """Power-sum expansion via adjacent-column plane partitions."""
    if kind not in ("h", "e"):
        raise ValueError(kind)
    table = _weight_expansion(lam, d, mu, "phi")
    out = {}
    for nu, c in table.items():
        coef = Fraction(c, z_factor(nu))
        if kind == "e" and (size(nu) - len(nu)) % 2:
            coef = -coef
        out[nu] = coef
    return SymFunc.make("p", out)


def nonskew_cyl_h(lam: AlcoveWeight, d: int) -> SymFunc:
    """Orbit-sum expansion of the non-skew cylindric complete function.

    Sums |S_lam|/|S_nu| h_nu over dominant weights nu in the level-n orbit of
    lam with |nu| = |lam| + d*n; identically zero below d = -mult_n(lam).
    """
    n, k = lam.n, lam.k
    if d < -multiplicity(lam.parts, n):
        return SymFunc.make("h", {})
    target = lam.size + d * n
    out = {}
    s_lam = stab_order(lam.parts)
    for nu in partitions_of(target, max_len=k):
        padded = tuple(nu) + (0,) * (k - len(nu))
        rep, _ = reduce_to_alcove(padded, n, k)
        if rep == lam:
            num, rem = divmod(s_lam, stab_order(padded))
            assert rem == 0, "orbit coefficient must be an integer"
            out[nu] = Fraction(num)
    return SymFunc.make("h", out)


def cyl_in_nonskew(lam: AlcoveWeight, d: int, mu: AlcoveWeight) -> dict:
    """Coefficients {(sigma, e): N} with h_{lam/d/mu} = sum N * h_{sigma/e/n^k}."""
    lam.same_context(mu)
    n, k = lam.n, lam.k
    out = {}
    for d_prime in range(0, d + k + 1):
        target = d_prime * n + lam.size - mu.size
        for sigma in enumerate_alcove(n, k):
            if sigma.size != target:
                continue
            c = fusion_count(lam.parts, mu.parts, sigma.parts, n, k)
            if c:
                out[(sigma, k + d - d_prime)] = c
    return out


# ---------------------------------------------------------------------------
# explicit CRPPs


KINDS = ("general", "row-strict", "adjacent-column", "ribbon")


@dataclass(frozen=True)
class Crpp:
    """Chain of cylindric loops (weight, offset) from the inner to the outer one."""

    loops: tuple  # ((AlcoveWeight, d_i), ...) with d_i weakly increasing
    kind: str = "general"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        if len(self.loops) < 1:
            raise ValueError("a CRPP needs at least the inner loop")
        for (w1, e1), (w2, e2) in zip(self.loops, self.loops[1:]):
            w1.same_context(w2)
            if e2 < e1:
                raise ValueError("offsets must be weakly increasing")
            if not _step_allowed(w2, e2 - e1, w1, self.kind):
                raise ValueError(
                    f"step {w1.parts}[{e1}] -> {w2.parts}[{e2}] is not a {self.kind} layer"
                )

    @property
    def inner(self) -> AlcoveWeight:
        return self.loops[0][0]

    @property
    def outer(self) -> AlcoveWeight:
        return self.loops[-1][0]

    @property
    def degree(self) -> int:
        return self.loops[-1][1]

    def weight(self) -> tuple[int, ...]:
        n = self.inner.n
        return tuple(
            w2.size - w1.size + n * (e2 - e1)
            for (w1, e1), (w2, e2) in zip(self.loops, self.loops[1:])
        )

    def theta_value(self) -> int:
        out = 1
        for (w1, e1), (w2, e2) in zip(self.loops, self.loops[1:]):
            out *= theta_cyl(w2, e2 - e1, w1)
        return out

    def psi_value(self) -> int:
        out = 1
        for (w1, e1), (w2, e2) in zip(self.loops, self.loops[1:]):
            out *= psi_cyl(w2, e2 - e1, w1)
        return out

    def vee(self) -> "Crpp":
        """Reverse the chain, replacing every loop weight by its complement."""
        d = self.degree
        new = tuple(
            (w.vee(), d - e) for (w, e) in reversed(self.loops)
        )
        return Crpp(new, self.kind)

    def render(self) -> str:
        """Fundamental-strip picture, rows 1..k top to bottom."""
        k = self.inner.k
        from .affine import loop_value

        inner_at = [loop_value(self.inner, 0, i) for i in range(1, k + 1)]
        outer_at = [
            loop_value(self.outer, self.degree, i) for i in range(1, k + 1)
        ]
        lo = min(inner_at)
        lines = []
        for i in range(1, k + 1):
            row = []
            for j in range(lo + 1, outer_at[i - 1] + 1):
                if j <= inner_at[i - 1]:
                    row.append(".")
                else:
                    layer = next(
                        idx
                        for idx, (w, e) in enumerate(self.loops)
                        if j <= loop_value(w, e, i)
                    )
                    row.append(str(layer))
            lines.append(" ".join(row))
        return "\n".join(lines)


def _step_allowed(lam: AlcoveWeight, de: int, mu: AlcoveWeight, kind: str) -> bool:
    if de < 0:
        return False
    if lam.size - mu.size + lam.n * de == 0:
        return lam == mu and de == 0
    if kind == "general":
        return is_valid_shape(lam, de, mu)
    if kind == "row-strict":
        return is_vertical_strip(lam, de, mu)
    if kind == "adjacent-column":
        return phi_cyl(lam, de, mu) > 0
    if kind == "ribbon":
        return lam.is_strict() and mu.is_strict() and phi_cyl(lam, de, mu) > 0
    raise ValueError(kind)


def enumerate_crpp(
    lam: AlcoveWeight,
    d: int,
    mu: AlcoveWeight,
    weight=None,
    max_level: int | None = None,
    kind: str = "general",
):
    """All CRPPs of shape lam/d/mu, of fixed weight or with at most max_level layers.

    Output is sorted by the loop sequence so golden files stay stable.
    """
    lam.same_context(mu)
    if (weight is None) == (max_level is None):
        raise ValueError("provide exactly one of weight, max_level")
    if not is_valid_shape(lam, d, mu) or d < 0:
        return []
    n, k = lam.n, lam.k
    results = []

    if weight is not None:
        weight = tuple(weight)
        if sum(weight) != lam.size - mu.size + n * d:
            return []

        def rec(chain, level):
            if level == len(weight):
                if chain[-1] == (lam, d):
                    results.append(Crpp(chain, kind))
                return
            r = weight[level]
            w1, e1 = chain[-1]
            if r == 0:
                rec(chain + ((w1, e1),), level + 1)
                return
            for w2, de, _ in _successors(w1, r, _engine_kind(kind)):
                if e1 + de <= d and _step_allowed(w2, de, w1, kind):
                    rec(chain + ((w2, e1 + de),), level + 1)

        rec(((mu, 0),), 0)
    else:

        def rec(chain, level):
            if chain[-1] == (lam, d):
                results.append(Crpp(chain, kind))
            if level == max_level:
                return
            w1, e1 = chain[-1]
            budget = lam.size + n * d - (w1.size + n * e1)
            for r in range(1, budget + 1):
                for w2, de, _ in _successors(w1, r, _engine_kind(kind)):
                    if e1 + de <= d and _step_allowed(w2, de, w1, kind):
                        rec(chain + ((w2, e1 + de),), level + 1)

        rec(((mu, 0),), 0)

    key = lambda c: tuple((w.parts, e) for w, e in c.loops)
    return sorted(results, key=key)


def _engine_kind(kind: str) -> str:
    return {
        "general": "theta",
        "row-strict": "psi",
        "adjacent-column": "phi",
        "ribbon": "phi",
    }[kind]


def vee_involution(crpp: Crpp) -> Crpp:
    return crpp.vee()


# ---------------------------------------------------------------------------
# coproduct identity


def coproduct_cyl_check(
    lam: AlcoveWeight, d: int, mu: AlcoveWeight, degree_bound: int | None = None, kind: str = "h"
) -> bool:
    """Check Delta(f_{lam/d/mu}) = sum over d1+d2=d, nu of f_{lam/d1/nu} (x) f_{nu/d2/mu}."""
    from .symfunc import TensorSymFunc, coproduct, tensor

    fn = cyl_h if kind == "h" else cyl_e
    lhs = coproduct(fn(lam, d, mu), bases=("m", "m"))
    rhs: dict = {}
    for d1 in range(0, d + 1):
        d2 = d - d1
        for nu in enumerate_alcove(lam.n, lam.k):
            left = fn(lam, d1, nu)
            if left.is_zero():
                continue
            right = fn(nu, d2, mu)
            if right.is_zero():
                continue
            for key, c in tensor(left, right).coeffs:
                rhs[key] = rhs.get(key, Fraction(0)) + c
    rhs_t = TensorSymFunc.make(("m", "m"), rhs)

    def trim(t: TensorSymFunc) -> TensorSymFunc:
        if degree_bound is None:
            return t
        kept = {
            key: c
            for key, c in t.coeffs
            if size(key[0]) <= degree_bound and size(key[1]) <= degree_bound
        }
        return TensorSymFunc.make(t.bases, kept)

    return trim(lhs) == trim(rhs_t)


def antipode_check(lam: AlcoveWeight, d: int, mu: AlcoveWeight) -> bool:
    """gamma(h_{lam/d/mu}) = (-1)^(degree) e_{lam/d/mu}."""
    deg = lam.size - mu.size + lam.n * d
    lhs = antipode(cyl_h(lam, d, mu))
    rhs = cyl_e(lam, d, mu) * (-1 if deg % 2 else 1)
    return lhs == rhs
