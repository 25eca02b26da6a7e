"""The graded ring of symmetric functions over Q, in five bases.

Internally every product, pairing and coproduct pivots through the power-sum
basis, where multiplication is concatenation of indices and the Hall pairing
is diagonal.  Basis conversions are computed degree by degree with memoized
expansions; the only triangular solve is monomial -> power sum.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .partitions import (
    Partition,
    conjugate,
    length,
    multiplicity,
    normalize,
    partitions_of,
    size,
    z_factor,
)

BASES = ("p", "m", "h", "e", "s")

Coeffs = dict[Partition, Fraction]


def _clean(coeffs: Coeffs) -> Coeffs:
    return {lam: c for lam, c in coeffs.items() if c != 0}


@dataclass(frozen=True)
class SymFunc:
    """Sparse symmetric function: a basis tag and a partition -> rational map."""

    basis: str
    coeffs: tuple  # canonical sorted tuple of (partition, Fraction)

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")

    @staticmethod
    def make(basis: str, coeffs: Coeffs) -> "SymFunc":
        items = tuple(sorted(_clean(coeffs).items()))
        return SymFunc(basis, items)

    def dict(self) -> Coeffs:
        return dict(self.coeffs)

    def __getitem__(self, lam) -> Fraction:
        lam = normalize(lam)
        return dict(self.coeffs).get(lam, Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degrees(self) -> set[int]:
        return {size(lam) for lam, _ in self.coeffs}

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if self.basis != other.basis:
            other = other.to(self.basis)
        out = dict(self.coeffs)
        for lam, c in other.coeffs:
            out[lam] = out.get(lam, Fraction(0)) + c
        return SymFunc.make(self.basis, out)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (other * -1)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymFunc.make(
                self.basis, {lam: c * Fraction(other) for lam, c in self.coeffs}
            )
        return multiply(self, other)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.basis == other.basis:
            return self.coeffs == other.coeffs
        return self.to("p").coeffs == other.to("p").coeffs

    def __hash__(self):
        return hash((self.basis, self.coeffs))

    def to(self, basis: str) -> "SymFunc":
        return convert(self, basis)

    def to_json(self) -> str:
        terms = [
            {"partition": list(lam), "num": c.numerator, "den": c.denominator}
            for lam, c in self.coeffs
        ]
        return json.dumps({"basis": self.basis, "terms": terms})

    @staticmethod
    def from_json(text: str) -> "SymFunc":
        data = json.loads(text)
        coeffs = {
            normalize(t["partition"]): Fraction(t["num"], t["den"])
            for t in data["terms"]
        }
        return SymFunc.make(data["basis"], coeffs)


def sym(basis: str, lam) -> SymFunc:
    """Basis element, e.g. sym('h', (2,1))."""
    return SymFunc.make(basis, {normalize(lam): Fraction(1)})


def sym_one() -> SymFunc:
    return sym("p", ())


# ---------------------------------------------------------------------------
# expansions of single basis elements into power sums


@lru_cache(maxsize=None)
def _h_to_p(r: int) -> tuple:
    """h_r = sum over rho |- r of p_rho / z_rho."""
    return tuple((rho, Fraction(1, z_factor(rho))) for rho in partitions_of(r))


@lru_cache(maxsize=None)
def _e_to_p(r: int) -> tuple:
    return tuple(
        (rho, Fraction(_eps(rho), z_factor(rho))) for rho in partitions_of(r)
    )


def _eps(rho: Partition) -> int:
    return -1 if (size(rho) - length(rho)) % 2 else 1


def _p_concat(a: Partition, b: Partition) -> Partition:
    return tuple(sorted(a + b, reverse=True))


def _pmul(f: Coeffs, g: Coeffs) -> Coeffs:
    out: Coeffs = {}
    for lam, c in f.items():
        for mu, d in g.items():
            key = _p_concat(lam, mu)
            out[key] = out.get(key, Fraction(0)) + c * d
    return _clean(out)


@lru_cache(maxsize=None)
def _basis_elem_to_p(basis: str, lam: Partition) -> tuple:
    """p-expansion of a single basis element, as a sorted coefficient tuple."""
    if basis == "p":
        return ((lam, Fraction(1)),)
    if basis == "s":
        out = {}
        for mu in partitions_of(size(lam)):
            chi = mn_character(lam, mu)
            if chi:
                out[mu] = Fraction(chi, z_factor(mu))
        return tuple(sorted(out.items()))
    if basis in ("h", "e"):
        table = _h_to_p if basis == "h" else _e_to_p
        acc: Coeffs = {(): Fraction(1)}
        for part in lam:
            acc = _pmul(acc, dict(table(part)))
        return tuple(sorted(acc.items()))
    if basis == "m":
        return tuple(sorted(_m_to_p(lam).items()))
    raise ValueError(basis)


def _m_to_p(lam: Partition) -> Coeffs:
    """Solve for m_lam against the triangular p -> m transition at its degree."""
    deg = size(lam)
    order = _dominance_order(deg)
    rows = {rho: p_to_m_row(rho) for rho in order}
    # back substitution: p_rho = sum_mu R[rho][mu] m_mu, R triangular wrt the
    # order with nonzero diagonal, so m_lam = (p_lam - sum_{mu > lam} ...) / R[lam][lam]
    return _m_to_p_solved(deg)[lam]


@lru_cache(maxsize=None)
def _m_to_p_solved(deg: int) -> dict[Partition, Coeffs]:
    order = _dominance_order(deg)
    rows = {rho: p_to_m_row(rho) for rho in order}
    solved: dict[Partition, Coeffs] = {}
    # order is sorted so that dominance-larger partitions come first
    for lam in order:
        row = rows[lam]
        expr: Coeffs = {lam: Fraction(1)}
        for mu, coef in row.items():
            if mu == lam:
                continue
            for rho, c in solved[mu].items():
                expr[rho] = expr.get(rho, Fraction(0)) - coef * c
        diag = row[lam]
        solved[lam] = _clean({rho: c / diag for rho, c in expr.items()})
    # solved[lam] expresses m_lam in p after dividing by the diagonal; note the
    # recursion subtracts R[lam][mu] * (m_mu in p) for dominance-larger mu
    return solved


@lru_cache(maxsize=None)
def _dominance_order(deg: int) -> tuple[Partition, ...]:
    """Partitions of deg, dominance-compatible: lex-descending refines dominance."""
    return tuple(sorted(partitions_of(deg), reverse=True))


@lru_cache(maxsize=None)
def p_to_m_row(rho: Partition) -> Coeffs:
    """Expansion p_rho = sum_mu R[rho][mu] m_mu via the one-power-sum Pieri rule."""
    acc: Coeffs = {(): Fraction(1)}
    for r in rho:
        nxt: Coeffs = {}
        for sig, c in acc.items():
            for tau, mult in _monomial_times_power(sig, r):
                nxt[tau] = nxt.get(tau, Fraction(0)) + c * mult
        acc = nxt
    return _clean(acc)


@lru_cache(maxsize=None)
def _monomial_times_power(sig: Partition, r: int) -> tuple:
    """m_sig * p_r = sum (m_x(sig') + ... ) m_sig'; one part grows by r."""
    out: dict[Partition, int] = {}
    candidates = {0} | set(sig)
    for y in candidates:
        grown = y + r
        stripped = list(sig)
        if y:
            stripped.remove(y)
        new = normalize(tuple(stripped) + (grown,))
        out[new] = out.get(new, 0) + multiplicity(new, grown)
    return tuple(sorted(out.items()))


# ---------------------------------------------------------------------------
# conversions


def to_p(f: SymFunc) -> SymFunc:
    if f.basis == "p":
        return f
    out: Coeffs = {}
    for lam, c in f.coeffs:
        for rho, d in _basis_elem_to_p(f.basis, lam):
            out[rho] = out.get(rho, Fraction(0)) + c * d
    return SymFunc.make("p", out)


def convert(f: SymFunc, basis: str) -> SymFunc:
    """Exact change of basis; the inverse directions pair against dual bases."""
    if basis == f.basis:
        return f
    fp = to_p(f)
    if basis == "p":
        return fp
    if basis == "m":
        out: Coeffs = {}
        for rho, c in fp.coeffs:
            for mu, r in p_to_m_row(rho).items():
                out[mu] = out.get(mu, Fraction(0)) + c * r
        return SymFunc.make("m", out)
    if basis == "s":
        # <f, s_sig> over orthonormal Schur functions
        out = {}
        for deg in fp.degrees():
            for sig in partitions_of(deg):
                val = Fraction(0)
                for rho, c in fp.coeffs:
                    if size(rho) == deg:
                        val += c * mn_character(sig, rho)
                if val:
                    out[sig] = val
        return SymFunc.make("s", out)
    if basis == "h":
        # f = sum <f, m_nu> h_nu since h and m are dual
        out = {}
        for deg in fp.degrees():
            for nu in partitions_of(deg):
                val = hall_inner(fp, sym("m", nu))
                if val:
                    out[nu] = val
        return SymFunc.make("h", out)
    if basis == "e":
        return SymFunc.make("e", dict(convert(omega(fp), "h").coeffs))
    raise ValueError(basis)


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product, computed in the p basis and returned in f's basis."""
    prod_p = SymFunc.make("p", _pmul(to_p(f).dict(), to_p(g).dict()))
    return convert(prod_p, f.basis)


def hall_inner(f: SymFunc, g: SymFunc) -> Fraction:
    """Hall pairing: <p_lam, p_mu> = delta * z_lam, extended bilinearly."""
    fp, gp = to_p(f).dict(), to_p(g).dict()
    if len(gp) < len(fp):
        fp, gp = gp, fp
    total = Fraction(0)
    for rho, c in fp.items():
        d = gp.get(rho)
        if d:
            total += c * d * z_factor(rho)
    return total


def omega(f: SymFunc) -> SymFunc:
    """Involution p_r -> (-1)^(r-1) p_r; swaps h and e."""
    out = {rho: c * _eps(rho) for rho, c in to_p(f).coeffs}
    return convert(SymFunc.make("p", out), f.basis)


def antipode(f: SymFunc) -> SymFunc:
    """Hopf antipode: p_r -> -p_r, so p_rho picks up (-1)^length."""
    out = {
        rho: c * (-1 if length(rho) % 2 else 1) for rho, c in to_p(f).coeffs
    }
    return convert(SymFunc.make("p", out), f.basis)


def project_nvars(f: SymFunc, k: int) -> SymFunc:
    """Set the variables beyond the first k to zero.

    In the m and s bases this kills the terms with more than k rows.
    """
    basis = f.basis if f.basis in ("m", "s") else "m"
    g = convert(f, basis)
    return SymFunc.make(
        basis, {lam: c for lam, c in g.coeffs if length(lam) <= k}
    )


# ---------------------------------------------------------------------------
# tensor square, coproduct


@dataclass(frozen=True)
class TensorSymFunc:
    """Element of Lambda (x) Lambda with a basis tag per factor."""

    bases: tuple[str, str]
    coeffs: tuple  # sorted ((lam, mu), Fraction) pairs

    @staticmethod
    def make(bases, coeffs) -> "TensorSymFunc":
        items = tuple(sorted((k, v) for k, v in coeffs.items() if v != 0))
        return TensorSymFunc(tuple(bases), items)

    def dict(self):
        return dict(self.coeffs)

    def __add__(self, other: "TensorSymFunc") -> "TensorSymFunc":
        assert self.bases == other.bases
        out = dict(self.coeffs)
        for k, v in other.coeffs:
            out[k] = out.get(k, Fraction(0)) + v
        return TensorSymFunc.make(self.bases, out)

    def to(self, bases) -> "TensorSymFunc":
        bases = tuple(bases)
        if bases == self.bases:
            return self
        out: dict = {}
        for (lam, mu), c in self.coeffs:
            left = convert(sym(self.bases[0], lam), bases[0])
            right = convert(sym(self.bases[1], mu), bases[1])
            for a, ca in left.coeffs:
                for b, cb in right.coeffs:
                    key = (a, b)
                    out[key] = out.get(key, Fraction(0)) + c * ca * cb
        return TensorSymFunc.make(bases, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorSymFunc):
            return NotImplemented
        return self.to(("p", "p")).coeffs == other.to(("p", "p")).coeffs

    def __hash__(self):
        return hash((self.bases, self.coeffs))


def tensor(f: SymFunc, g: SymFunc) -> TensorSymFunc:
    out = {}
    for lam, c in f.coeffs:
        for mu, d in g.coeffs:
            out[(lam, mu)] = c * d
    return TensorSymFunc.make((f.basis, g.basis), out)


@lru_cache(maxsize=None)
def _p_splits(rho: Partition) -> tuple:
    """All multiset splits of rho with multinomial multiplicities."""
    values = sorted(set(rho))
    splits = [((), (), 1)]
    for v in values:
        m = multiplicity(rho, v)
        new = []
        for left, right, mult in splits:
            for take in range(m + 1):
                from math import comb

                new.append(
                    (
                        left + (v,) * take,
                        right + (v,) * (m - take),
                        mult * comb(m, take),
                    )
                )
        splits = new
    return tuple(
        (normalize(l), normalize(r), mult) for l, r, mult in splits
    )


def coproduct(f: SymFunc, bases=("p", "p")) -> TensorSymFunc:
    """Delta with primitive power sums: Delta(p_r) = p_r (x) 1 + 1 (x) p_r."""
    out: dict = {}
    for rho, c in to_p(f).coeffs:
        for left, right, mult in _p_splits(rho):
            key = (left, right)
            out[key] = out.get(key, Fraction(0)) + c * mult
    return TensorSymFunc.make(("p", "p"), out).to(bases)


# ---------------------------------------------------------------------------
# symmetric group characters (Murnaghan-Nakayama on beta numbers)


@lru_cache(maxsize=None)
def mn_character(lam: Partition, mu: Partition) -> int:
    """Character of the symmetric group: shape lam at cycle type mu."""
    lam, mu = normalize(lam), normalize(mu)
    if size(lam) != size(mu):
        raise ValueError(f"|{lam}| != |{mu}|")
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    betas = frozenset(b for b in _betas(lam))
    total = 0
    for b in betas:
        if b >= r and (b - r) not in betas:
            crossed = sum(1 for x in betas if b - r < x < b)
            sub = _partition_from_betaset(betas - {b} | {b - r})
            total += (-1) ** crossed * mn_character(sub, rest)
    return total


def _betas(lam: Partition) -> tuple[int, ...]:
    ell = max(len(lam), 1)
    padded = list(lam) + [0] * (ell - len(lam))
    return tuple(padded[i] + ell - (i + 1) for i in range(ell))


def _partition_from_betaset(bs: frozenset) -> Partition:
    xs = sorted(bs, reverse=True)
    ell = len(xs)
    return normalize(tuple(xs[i] - (ell - (i + 1)) for i in range(ell)))


def sign_character(mu: Partition) -> int:
    return _eps(mu)


# ---------------------------------------------------------------------------
# skew complete/elementary functions and their binomial weights


def _comb0(a: int, b: int) -> int:
    """Binomial that vanishes whenever an argument is negative."""
    if a < 0 or b < 0:
        return 0
    from math import comb

    return comb(a, b)


def theta_flat(lam: Partition, mu: Partition) -> int:
    """Number of distinct rearrangements of mu fitting under lam, in closed form."""
    lam, mu = normalize(lam), normalize(mu)
    lc, mc = conjugate(lam), conjugate(mu)
    top = max(len(lc), len(mc))
    out = 1
    for i in range(1, top + 1):
        li = lc[i - 1] if i <= len(lc) else 0
        mi = mc[i - 1] if i <= len(mc) else 0
        mi1 = mc[i] if i < len(mc) else 0
        out *= _comb0(li - mi1, mi - mi1)
    return out


def psi_flat(lam: Partition, mu: Partition) -> int:
    """Number of rearrangements of mu making lam/alpha a vertical strip."""
    lam, mu = normalize(lam), normalize(mu)
    lc, mc = conjugate(lam), conjugate(mu)
    top = max(len(lc), len(mc))
    out = 1
    for i in range(1, top + 1):
        li = lc[i - 1] if i <= len(lc) else 0
        li1 = lc[i] if i < len(lc) else 0
        mi = mc[i - 1] if i <= len(mc) else 0
        out *= _comb0(li - li1, li - mi)
    return out


def act_phi_flat(lam: Partition, mu: Partition) -> int:
    """Pieri weight of an adjacent-column horizontal strip lam/mu, else 0.

    lam must arise from mu by removing one part equal to y and adding one part
    y + r (y = 0 allowed); the weight is the multiplicity of the grown part.
    """
    lam, mu = normalize(lam), normalize(mu)
    r = size(lam) - size(mu)
    if r <= 0:
        return 1 if (r == 0 and lam == mu) else 0
    for y in {0} | set(mu):
        stripped = list(mu)
        if y:
            stripped.remove(y)
        if normalize(tuple(stripped) + (y + r,)) == lam:
            return multiplicity(lam, y + r)
    return 0


def _skew_layers(lam: Partition, mu: Partition, weight, step_fn):
    """Sum of products of step weights over partition chains mu -> lam.

    weight is a composition; step_fn(bigger, smaller) gives the layer factor.
    """
    lam, mu = normalize(lam), normalize(mu)
    if size(mu) + sum(weight) != size(lam):
        return 0
    states = {mu: 1}
    for r in weight:
        nxt: dict[Partition, int] = {}
        for sig, c in states.items():
            for tau in partitions_of(size(sig) + r, max_len=len(lam) or 1):
                if all(
                    (tau[i] if i < len(tau) else 0) >= (sig[i] if i < len(sig) else 0)
                    for i in range(len(tau))
                ) and _contains(lam, tau):
                    w = step_fn(tau, sig)
                    if w:
                        nxt[tau] = nxt.get(tau, 0) + c * w
        states = nxt
        if not states:
            return 0
    return states.get(lam, 0)


def _contains(outer: Partition, inner: Partition) -> bool:
    return all(
        (outer[i] if i < len(outer) else 0) >= v for i, v in enumerate(inner)
    )


def theta_weight_flat(lam, mu, nu) -> int:
    """Weighted count of RPP of shape lam/mu and weight nu."""
    return _skew_layers(lam, mu, tuple(nu), theta_flat)


def psi_weight_flat(lam, mu, nu) -> int:
    return _skew_layers(lam, mu, tuple(nu), psi_flat)


def adjacent_column_weight(lam, mu, nu) -> int:
    """Weighted sum over adjacent column tableaux of shape lam/mu, weight nu."""
    return _skew_layers(lam, mu, tuple(nu), act_phi_flat)


def skew_h(lam: Partition, mu: Partition) -> SymFunc:
    """Skew complete symmetric function, in the monomial basis."""
    lam, mu = normalize(lam), normalize(mu)
    deg = size(lam) - size(mu)
    if deg < 0:
        return SymFunc.make("m", {})
    out: Coeffs = {}
    for nu in partitions_of(deg):
        w = theta_weight_flat(lam, mu, nu)
        if w:
            out[nu] = Fraction(w)
    return SymFunc.make("m", out)


def skew_e(lam: Partition, mu: Partition) -> SymFunc:
    lam, mu = normalize(lam), normalize(mu)
    deg = size(lam) - size(mu)
    if deg < 0:
        return SymFunc.make("m", {})
    out: Coeffs = {}
    for nu in partitions_of(deg):
        w = psi_weight_flat(lam, mu, nu)
        if w:
            out[nu] = Fraction(w)
    return SymFunc.make("m", out)


# ---------------------------------------------------------------------------
# straightening and the raising-operator expansion of monomial functions


def schur_straighten(v) -> tuple[int, Partition] | None:
    """Normalise a Schur index by the exchange rule; None when the term vanishes.

    Applies (..., a, b, ...) -> -(..., b-1, a+1, ...) until the sequence is
    weakly decreasing, then drops trailing zeros.  Sequences with a negative
    entry at the end, or hitting the (a, a+1) pattern, vanish.
    """
    v = list(v)
    sign = 1
    for _ in range(10000):
        pos = next((i for i in range(len(v) - 1) if v[i] < v[i + 1]), None)
        if pos is None:
            while v and v[-1] == 0:
                v.pop()
            if any(x < 0 for x in v):
                return None
            return sign, tuple(v)
        a, b = v[pos], v[pos + 1]
        if b == a + 1:
            return None
        v[pos], v[pos + 1] = b - 1, a + 1
        sign = -sign
    raise AssertionError("straightening did not terminate")


def monomial_in_schur(lam: Partition) -> SymFunc:
    """Expansion of m_lam in Schur functions by raising operators with straightening."""
    lam = normalize(lam)
    if not lam:
        return sym("s", ())
    n_slots = max(size(lam), len(lam))
    padded = tuple(lam) + (0,) * (n_slots - len(lam))
    pairs = [
        (i, j)
        for i in range(n_slots)
        for j in range(i + 1, n_slots)
        if padded[i] > padded[j]
    ]
    out: Coeffs = {}

    def rec(idx: int, vec: tuple, sign: int):
        if idx == len(pairs):
            res = schur_straighten(vec)
            if res is not None:
                s2, part = res
                out[part] = out.get(part, Fraction(0)) + sign * s2
            return
        rec(idx + 1, vec, sign)
        i, j = pairs[idx]
        lowered = list(vec)
        lowered[i] -= 1
        lowered[j] += 1
        rec(idx + 1, tuple(lowered), -sign)

    rec(0, padded, 1)
    return SymFunc.make("s", out)
