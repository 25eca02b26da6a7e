"""Fusion coefficients by three independent routes, modular matrices and the
Frobenius identity suite.

The three routes: counting pairs of rearrangements (the defining cardinality),
the root-of-unity orthogonality sum (Verlinde), and reduction of out-of-alcove
indices by stabiliser multinomials.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from .cyclotomic import CycloNum, eval_msym, sqrt_int, zeta_pow
from .partitions import (
    AlcoveWeight,
    Partition,
    Weight,
    distinct_permutations,
    enumerate_alcove,
    format_partition,
    multiplicity,
    normalize,
    reduce_to_alcove,
    stab_order,
)


@dataclass
class Report:
    """Outcome of a verification suite: ok flag plus failure witnesses."""

    name: str
    failures: list[str] = field(default_factory=list)
    checks: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def run(self, condition: bool, witness: str):
        self.checks += 1
        if not condition:
            self.failures.append(witness)

    def summary(self) -> str:
        status = "ok" if self.ok else f"FAILED ({len(self.failures)})"
        head = f"{self.name}: {self.checks} checks, {status}"
        if self.failures:
            head += "\n  first counterexample: " + self.failures[0]
        return head


# ---------------------------------------------------------------------------
# route 1: the counting definition, valid for dominant weights of rank k


@lru_cache(maxsize=None)
def fusion_count(lam: Partition, mu: Partition, nu: Partition, n: int, k: int) -> int:
    """Pairs of rearrangements of mu and nu summing to lam modulo n, entrywise."""
    lam_p = tuple(lam) + (0,) * (k - len(lam))
    mu_p = tuple(mu) + (0,) * (k - len(mu))
    nu_p = tuple(nu) + (0,) * (k - len(nu))
    count = 0
    for a in distinct_permutations(mu_p):
        for b in distinct_permutations(nu_p):
            if all((x + y - z) % n == 0 for x, y, z in zip(a, b, lam_p)):
                count += 1
    return count


def n_count(lam: AlcoveWeight, mu: AlcoveWeight, nu) -> int:
    """Fusion coefficient N_{mu nu}^lam by the counting definition.

    nu may be any dominant weight of rank at most k (parts may repeat or exceed n).
    """
    lam.same_context(mu)
    nu_parts = nu.parts if isinstance(nu, AlcoveWeight) else normalize(nu)
    return fusion_count(lam.parts, mu.parts, nu_parts, lam.n, lam.k)


# ---------------------------------------------------------------------------
# context with cached root-of-unity data


class FusionContext:
    """Caches alcove enumeration and the monomial evaluations at zeta powers.

    All caches are read-only after construction, so instances may be shared
    between threads.
    """

    def __init__(self, n: int, k: int):
        self.n = n
        self.k = k
        self.alcove = enumerate_alcove(n, k)
        self.index = {a.parts: i for i, a in enumerate(self.alcove)}
        # msym[lam][sigma] = m_lam(zeta^sigma), and the conjugate evaluation
        self.msym = {
            a.parts: {
                s.parts: eval_msym(a.parts, s.parts, n) for s in self.alcove
            }
            for a in self.alcove
        }
        self.msym_neg = {
            a.parts: {
                s.parts: eval_msym(a.parts, tuple(-x for x in s.parts), n)
                for s in self.alcove
            }
            for a in self.alcove
        }
        self.stab = {a.parts: stab_order(a.parts) for a in self.alcove}

    def unit(self) -> AlcoveWeight:
        return AlcoveWeight((self.n,) * self.k, self.n, self.k)


def n_verlinde(ctx: FusionContext, lam: AlcoveWeight, mu: AlcoveWeight, nu: AlcoveWeight) -> int:
    """Verlinde route: the pre-cancelled orthogonality sum over the alcove.

    N_{lam mu}^nu = sum_sigma m_lam(z^s) m_mu(z^s) m^{nu*}(z^s) / (n^k |S_sigma|),
    evaluated exactly in Q(zeta_n) and coerced to an integer.
    """
    n, k = ctx.n, ctx.k
    nu_star = nu.star()
    total = CycloNum.zero(n)
    for sigma in ctx.alcove:
        term = (
            ctx.msym[lam.parts][sigma.parts]
            * ctx.msym[mu.parts][sigma.parts]
            * ctx.msym[nu_star.parts][sigma.parts]
        )
        total = total + term * Fraction(ctx.stab[nu_star.parts], n**k * ctx.stab[sigma.parts])
    return total.to_integer()


def n_reduce(ctx: FusionContext, lam: AlcoveWeight, mu: AlcoveWeight, nu) -> int:
    """Reduction route: pull a dominant nu back into the alcove by multinomials."""
    nu_parts = nu.parts if isinstance(nu, AlcoveWeight) else normalize(nu)
    padded = tuple(nu_parts) + (0,) * (ctx.k - len(nu_parts))
    if len(padded) != ctx.k:
        raise ValueError(f"{nu_parts} has more than {ctx.k} parts")
    nu_check, _ = reduce_to_alcove(padded, ctx.n, ctx.k)
    mult = comb_multinomial(
        multiplicity(nu_check.parts, ctx.n),
        [multiplicity(padded, j) for j in range(0, max(padded) + ctx.n + 1, ctx.n)],
    )
    for i in range(1, ctx.n):
        mult *= comb_multinomial(
            multiplicity(nu_check.parts, i),
            [multiplicity(padded, i + j) for j in range(0, max(padded) + ctx.n + 1, ctx.n)],
        )
    base = fusion_count(lam.parts, mu.parts, nu_check.parts, ctx.n, ctx.k)
    return base * mult


def comb_multinomial(total: int, parts) -> int:
    parts = [p for p in parts if p]
    if sum(parts) != total:
        # multiplicities must refill the alcove class exactly
        return 0 if total or parts else 1
    out = 1
    remaining = total
    for p in parts:
        out *= comb(remaining, p)
        remaining -= p
    return out


# ---------------------------------------------------------------------------
# tables


@dataclass
class CoeffTable:
    """Keyed integer table (lambda, mu, nu, d) -> value, JSON/CSV serialisable."""

    n: int
    k: int
    value_key: str = "N"
    entries: dict = field(default_factory=dict)
    metadata: dict = field(default_factory=dict)

    def sorted_items(self):
        return sorted(self.entries.items())

    def to_json(self) -> str:
        # d = -1 is the internal sentinel for degree-law violations (value 0)
        payload = {
            "n": self.n,
            "k": self.k,
            "entries": [
                {
                    "lambda": list(lam),
                    "mu": list(mu),
                    "nu": list(nu),
                    "d": d if d >= 0 else None,
                    self.value_key: v,
                }
                for (lam, mu, nu, d), v in self.sorted_items()
            ],
        }
        if self.metadata:
            payload["metadata"] = self.metadata
        return json.dumps(payload, indent=0, sort_keys=True)

    @staticmethod
    def from_json(text: str, value_key: str = "N") -> "CoeffTable":
        data = json.loads(text)
        table = CoeffTable(data["n"], data["k"], value_key, {}, data.get("metadata", {}))
        for e in data["entries"]:
            d = e["d"] if e["d"] is not None else -1
            key = (tuple(e["lambda"]), tuple(e["mu"]), tuple(e["nu"]), d)
            table.entries[key] = e[value_key]
        return table

    def to_csv(self, include_zero: bool = False) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["lambda", "mu", "nu", "d", "value"])
        for (lam, mu, nu, d), v in self.sorted_items():
            if v == 0 and not include_zero:
                continue
            writer.writerow(
                [format_partition(lam), format_partition(mu), format_partition(nu), d, v]
            )
        return buf.getvalue()


def build_table(ctx: FusionContext, dmax: int | None = None, keep_zero: bool = False) -> CoeffTable:
    """Fusion table over the whole alcove; d = (|lam|+|mu|-|nu|)/n per entry."""
    table = CoeffTable(ctx.n, ctx.k, "N")
    for lam in ctx.alcove:
        for mu in ctx.alcove:
            for nu in ctx.alcove:
                total = lam.size + mu.size - nu.size
                if total % ctx.n != 0 or total < 0:
                    value, d = 0, -1
                else:
                    d = total // ctx.n
                    value = fusion_count(nu.parts, lam.parts, mu.parts, ctx.n, ctx.k)
                if dmax is not None and d > dmax:
                    continue
                if value or keep_zero:
                    table.entries[(lam.parts, mu.parts, nu.parts, d)] = value
    return table


# ---------------------------------------------------------------------------
# symmetry and Frobenius suites


def symmetry_suite(ctx: FusionContext) -> Report:
    """Unit, commutativity, star/rotation covariance, associativity and the
    quantum-dimension sum rule, checked exhaustively over the alcove."""
    rep = Report(f"fusion symmetries (n={ctx.n}, k={ctx.k})")
    A = ctx.alcove
    unit = ctx.unit()

    def N(l, m, u):
        return fusion_count(u.parts, l.parts, m.parts, ctx.n, ctx.k)

    for lam in A:
        for mu in A:
            rep.run(
                N(lam, unit, mu) == (1 if lam == mu else 0),
                f"unit: N_({lam.parts},{unit.parts})^{mu.parts}",
            )
            u_val = N(lam, mu, unit)
            expect = lam.quantum_dim() if lam.star() == mu else 0
            rep.run(u_val == expect, f"eta: N_({lam.parts},{mu.parts})^{unit.parts}")
            for nu in A:
                v = N(lam, mu, nu)
                rep.run(v == N(mu, lam, nu), f"commutativity at {lam.parts},{mu.parts},{nu.parts}")
                rep.run(
                    v == N(lam.star(), mu.star(), nu.star()),
                    f"star covariance at {lam.parts},{mu.parts},{nu.parts}",
                )
                rep.run(
                    v * nu.quantum_dim() == lam.quantum_dim() * N(mu, nu.star(), lam.star()),
                    f"dual symmetry at {lam.parts},{mu.parts},{nu.parts}",
                )
                rep.run(
                    v == N(lam.rot(1), mu.rot(2), nu.rot(3)),
                    f"rotation covariance at {lam.parts},{mu.parts},{nu.parts}",
                )
    # associativity and quantum dimension sum rule
    for lam in A:
        for mu in A:
            rep.run(
                lam.quantum_dim() * mu.quantum_dim()
                == sum(N(lam, mu, nu) * nu.quantum_dim() for nu in A),
                f"dimension rule at {lam.parts},{mu.parts}",
            )
            for nu in A:
                for rho in A:
                    left = sum(N(lam, mu, s) * N(s, nu, rho) for s in A)
                    right = sum(N(mu, nu, s) * N(lam, s, rho) for s in A)
                    rep.run(
                        left == right,
                        f"associativity at {lam.parts},{mu.parts},{nu.parts},{rho.parts}",
                    )
    return rep


def orthogonality_check(ctx: FusionContext) -> Report:
    """Scaled S-matrix orthogonality: the alcove sum of m_lam * m^{mu*} / (n^k |S_sigma|)."""
    rep = Report(f"monomial orthogonality (n={ctx.n}, k={ctx.k})")
    n, k = ctx.n, ctx.k
    for lam in ctx.alcove:
        for mu in ctx.alcove:
            mu_star = mu.star()
            total = CycloNum.zero(n)
            for sigma in ctx.alcove:
                term = ctx.msym[lam.parts][sigma.parts] * ctx.msym[mu_star.parts][sigma.parts]
                total = total + term * Fraction(ctx.stab[mu_star.parts], n**k * ctx.stab[sigma.parts])
            expected = 1 if lam == mu else 0
            ok = (total - CycloNum.from_rational(n, expected)).is_zero()
            rep.run(ok, f"orthogonality at {lam.parts},{mu.parts}")
    return rep


def s_matrix(ctx: FusionContext):
    """Scaled modular S-matrix entries m_lam(zeta^mu); the sqrt(n^k) factor is omitted.

    Returns (matrix, metadata); matrix[i][j] corresponds to (alcove[i], alcove[j]).
    """
    mat = [
        [ctx.msym[lam.parts][mu.parts] for mu in ctx.alcove] for lam in ctx.alcove
    ]
    meta = {"scaling": f"entries are sqrt(n^k) * S, n^k = {ctx.n ** ctx.k}"}
    return mat, meta


def s_matrix_inverse_check(ctx: FusionContext) -> Report:
    """S * S^{-1} = id with the inverse built from m_lam(zeta^{-mu})-type entries.

    With both scalings omitted the product must equal n^k times the identity;
    the middle index carries the stabiliser weight.
    """
    rep = Report(f"S-matrix inverse (n={ctx.n}, k={ctx.k})")
    n, k = ctx.n, ctx.k
    for lam in ctx.alcove:
        for nu in ctx.alcove:
            total = CycloNum.zero(n)
            for mu in ctx.alcove:
                total = total + ctx.msym[lam.parts][mu.parts] * ctx.msym_neg[mu.parts][nu.parts]
            expected = n**k if lam == nu else 0
            rep.run(
                (total - CycloNum.from_rational(n, expected)).is_zero(),
                f"inverse at {lam.parts},{nu.parts}",
            )
    return rep


def t_matrix(ctx: FusionContext):
    """Diagonal T-matrix data in Q(zeta_{24n}): a 24th-root phase times zeta powers."""
    n, k = ctx.n, ctx.k
    big = 24 * n
    out = []
    for lam in ctx.alcove:
        exponent = -k * n * (n - 1) + 12 * sum(p * (n - p) for p in lam.parts)
        out.append((lam, zeta_pow(big, exponent)))
    return out


def t_unitarity_check(ctx: FusionContext) -> Report:
    rep = Report(f"T unitarity (n={ctx.n}, k={ctx.k})")
    for lam, t in t_matrix(ctx):
        val = t * t.conjugate()
        rep.run(val.to_integer() == 1, f"|T|^2 at {lam.parts}")
    return rep


def modular_relations_check(n: int) -> Report:
    """k = 1 presentation: S^2 = (ST)^3 = C with the charge conjugation C.

    Runs in Q(zeta_{24n}) where both sqrt(n) and the T phase exist exactly.
    """
    rep = Report(f"modular relations (n={n}, k=1)")
    big = 24 * n
    sqrt_n = sqrt_int(n, big)
    inv_sqrt = sqrt_n.inv()
    S = [
        [zeta_pow(big, 24 * a * b) * inv_sqrt for b in range(1, n + 1)]
        for a in range(1, n + 1)
    ]
    T = [
        [
            zeta_pow(big, -n * (n - 1) + 12 * a * (n - a)) if a == b else CycloNum.zero(big)
            for b in range(1, n + 1)
        ]
        for a in range(1, n + 1)
    ]
    C = [
        [
            CycloNum.from_rational(big, 1 if (a + b) % n == 0 else 0)
            for b in range(1, n + 1)
        ]
        for a in range(1, n + 1)
    ]

    def matmul(X, Y):
        return [
            [
                sum((X[i][m] * Y[m][j] for m in range(n)), CycloNum.zero(big))
                for j in range(n)
            ]
            for i in range(n)
        ]

    def equal(X, Y):
        return all((X[i][j] - Y[i][j]).is_zero() for i in range(n) for j in range(n))

    S2 = matmul(S, S)
    rep.run(equal(S2, C), "S^2 = C")
    ST = matmul(S, T)
    rep.run(equal(matmul(matmul(ST, ST), ST), C), "(ST)^3 = C")
    S_conj = [[S[i][j].conjugate() for j in range(n)] for i in range(n)]
    ident = [
        [CycloNum.from_rational(big, 1 if i == j else 0) for j in range(n)]
        for i in range(n)
    ]
    rep.run(equal(matmul(S, S_conj), ident), "S S* = id")
    return rep


def frobenius_suite(ctx: FusionContext) -> Report:
    """Bilinear form non-degeneracy and the quotient-ring ideal annihilation."""
    rep = Report(f"Frobenius structure (n={ctx.n}, k={ctx.k})")
    n, k = ctx.n, ctx.k
    A = ctx.alcove
    unit = ctx.unit()
    # eta(v_lam, v_mu) proportional to N^{n^k}: a monomial pairing delta_{lam*, mu} d_lam
    for lam in A:
        nonzero = []
        for mu in A:
            v = fusion_count(unit.parts, lam.parts, mu.parts, n, k)
            expect = lam.quantum_dim() if lam.star() == mu else 0
            rep.run(v == expect, f"eta entry at {lam.parts},{mu.parts}")
            if v:
                nonzero.append(mu)
        rep.run(len(nonzero) == 1, f"eta row at {lam.parts} is monomial")
    # the ideal generators p_{n+r} - p_r vanish at every alcove evaluation point
    for sigma in A:
        for r in range(0, k):
            val = _power_sum_eval(sigma.parts, n + r, n) - _power_sum_eval(sigma.parts, r, n)
            rep.run(val.is_zero(), f"ideal generator p_{n + r} - p_{r} at {sigma.parts}")
        p_n = _power_sum_eval(sigma.parts, n, n)
        rep.run(
            (p_n - CycloNum.from_rational(n, k)).is_zero(),
            f"p_n = k at {sigma.parts}",
        )
    return rep


def _power_sum_eval(sigma: Weight, r: int, n: int) -> CycloNum:
    total = CycloNum.zero(n)
    for s in sigma:
        total = total + zeta_pow(n, r * s)
    return total


def mfusion_pointwise_check(ctx: FusionContext, samples: int = 50, seed: int = 7) -> Report:
    """Pointwise product expansion of monomial functions at random zeta powers."""
    import random

    rng = random.Random(seed)
    rep = Report(f"pointwise fusion expansion (n={ctx.n}, k={ctx.k})")
    n, k = ctx.n, ctx.k
    pairs = [(a, b) for a in ctx.alcove for b in ctx.alcove]
    for _ in range(samples):
        lam, mu = rng.choice(pairs)
        p = tuple(rng.randrange(-2 * n, 2 * n + 1) for _ in range(k))
        lhs = eval_msym(lam.parts, p, n) * eval_msym(mu.parts, p, n)
        rhs = CycloNum.zero(n)
        for nu in ctx.alcove:
            c = fusion_count(nu.parts, lam.parts, mu.parts, n, k)
            if c:
                rhs = rhs + eval_msym(nu.parts, p, n) * c
        rep.run((lhs - rhs).is_zero(), f"pointwise at {lam.parts},{mu.parts},p={p}")
    return rep
