import json
import os

import pytest

from cylsym.fusion import CoeffTable
from cylsym.grassmannian import (
    chi_matrix_check,
    chi_weight,
    conjugate_in,
    core_fiber,
    cyl_schur,
    cyl_schur_p,
    cyl_schur_to_schur,
    grass_context,
    gw_bvi,
    gw_ribbon,
    gw_symmetry_suite,
    gw_table,
    level_rank_check,
    mcnamara_expand,
    nonskew_cyl_schur,
    nonskew_orthogonality,
    quantum_kostka,
    ribbon_data,
    schur_product_coeff,
    toric_schur,
)
from cylsym.grassmannian import _strip_ok
from cylsym.partitions import (
    BoxedPartition,
    conjugate,
    partitions_of,
    partitions_with_core,
)
from cylsym.symfunc import convert, sym

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "golden")


def boxed(parts, n, k):
    return BoxedPartition(parts, n, k)


def test_bvi_classical_anchors():
    ctx = grass_context(4, 2)
    one = boxed((1,), 4, 2)
    assert gw_bvi(ctx, one, one, boxed((2,), 4, 2), 0) == 1
    assert gw_bvi(ctx, one, one, boxed((1, 1), 4, 2), 0) == 1
    # d = 0 equals the classical Littlewood-Richardson coefficient
    for lam in ctx.boxed:
        for mu in ctx.boxed:
            for nu in ctx.boxed:
                if lam.size + mu.size != nu.size:
                    continue
                assert gw_bvi(ctx, lam, mu, nu, 0) == schur_product_coeff(
                    lam.parts, mu.parts, nu.parts
                )


def test_bvi_delta_normalisation():
    for n, k in [(4, 2), (5, 2)]:
        ctx = grass_context(n, k)
        empty = boxed((), n, k)
        for mu in ctx.boxed:
            for nu in ctx.boxed:
                assert gw_bvi(ctx, empty, mu, nu, 0) == (1 if mu == nu else 0)


def test_gw_max_degree_entry():
    ctx = grass_context(4, 2)
    full = boxed((2, 2), 4, 2)
    assert gw_bvi(ctx, full, full, boxed((), 4, 2), 2) == 1


@pytest.mark.parametrize("n,k,dmax", [(4, 2, 2), (5, 2, 2)])
def test_dual_route(n, k, dmax):
    ctx = grass_context(n, k)
    for lam in ctx.boxed:
        for mu in ctx.boxed:
            for nu in ctx.boxed:
                total = lam.size + mu.size - nu.size
                if total < 0 or total % n or total // n > dmax:
                    continue
                d = total // n
                a = gw_bvi(ctx, lam, mu, nu, d)
                b = gw_ribbon(ctx, lam, mu, nu, d)
                assert a == b >= 0, (lam.parts, mu.parts, nu.parts, d)


def test_gw_symmetries_and_level_rank():
    for n, k in [(4, 2), (5, 2)]:
        ctx = grass_context(n, k)
        assert gw_symmetry_suite(ctx, 2).ok
        assert level_rank_check(ctx, 2).ok


def test_quantum_pieri_matches_horizontal_strips():
    for n, k in [(4, 2), (5, 2)]:
        ctx = grass_context(n, k)
        for r in range(1, n - k + 1):
            row = boxed((r,), n, k)
            for mu in ctx.boxed:
                for lam in ctx.boxed:
                    total = r + mu.size - lam.size
                    if total < 0 or total % n:
                        continue
                    d = total // n
                    expect = 1 if _strip_ok(lam, d, mu, False) else 0
                    assert gw_bvi(ctx, row, mu, lam, d) == expect


# -- quantum Kostka numbers ------------------------------------------------------


def test_kostka_trivial_and_validation():
    ctx = grass_context(4, 2)
    lam = boxed((2, 1), 4, 2)
    assert quantum_kostka(ctx, lam, 0, lam, ()) == 1
    with pytest.raises(ValueError):
        quantum_kostka(ctx, lam, 0, lam, (3,))  # exceeds n - k


def test_kostka_level_rank_duality():
    ctx = grass_context(5, 2)
    other = ctx.conjugate_context()
    for lam in ctx.boxed:
        for mu in ctx.boxed:
            for d in range(2):
                deg = lam.size - mu.size + 5 * d
                if deg < 0:
                    continue
                for alpha in partitions_of(deg, max_part=min(3, 2)):
                    a = quantum_kostka(ctx, lam, d, mu, alpha)
                    b = quantum_kostka(
                        other,
                        conjugate_in(ctx, lam),
                        d,
                        conjugate_in(ctx, mu),
                        alpha,
                        row_strict=True,
                    )
                    assert a == b, (lam.parts, d, mu.parts, alpha)


def test_kostka_single_row_matches_pieri():
    # sigma_r sigma_mu = sum q^d sigma_lam over cylindric horizontal strips
    ctx = grass_context(4, 2)
    for r in range(1, 3):
        for mu in ctx.boxed:
            for lam in ctx.boxed:
                total = r + mu.size - lam.size
                if total < 0 or total % 4:
                    continue
                d = total // 4
                k_count = quantum_kostka(ctx, lam, d, mu, (r,))
                assert k_count == gw_bvi(ctx, boxed((r,), 4, 2), mu, lam, d)


# -- cylindric ribbons -------------------------------------------------------------


def test_ribbon_figure_anchors():
    ctx = grass_context(5, 2)
    lam = boxed((2, 1), 5, 2)
    mu = boxed((2, 2), 5, 2)
    assert ribbon_data(ctx, lam, 1, mu) == (4, 2)
    assert ribbon_data(ctx, lam, 2, mu) == (9, 3)
    assert chi_weight(ctx, lam, 1, mu, (4,)) == -1
    assert chi_weight(ctx, lam, 2, mu, (9,)) == 1


def test_chi_degree_law_and_recursion():
    for n, k in [(4, 2), (5, 2)]:
        ctx = grass_context(n, k)
        rep = chi_matrix_check(ctx, 2)
        assert rep.ok, rep.summary()


def test_chi_single_small_ribbon_signs():
    ctx = grass_context(5, 2)
    for lam in ctx.boxed:
        for mu in ctx.boxed:
            r = lam.size - mu.size
            if not 1 <= r < 5:
                continue
            data = ribbon_data(ctx, lam, 0, mu)
            val = chi_weight(ctx, lam, 0, mu, (r,))
            if data is None:
                assert val == 0
            else:
                assert val == (-1) ** ((data[1] - 1) % 2)


# -- cylindric Schur functions -------------------------------------------------------


def test_cyl_schur_degree_zero_is_skew_schur():
    ctx = grass_context(4, 2)
    for lam in ctx.boxed:
        for mu in ctx.boxed:
            f = cyl_schur(ctx, lam, 0, mu)
            expect = sym("s", ()) * 0
            for nu in partitions_of(lam.size - mu.size) if lam.size >= mu.size else []:
                c = schur_product_coeff(mu.parts, nu, lam.parts)
                if c:
                    expect = expect + sym("s", nu) * c
            assert f == expect


@pytest.mark.parametrize("n,k,dmax", [(4, 2, 2), (5, 2, 2)])
def test_cyl_schur_dual_route(n, k, dmax):
    ctx = grass_context(n, k)
    for lam in ctx.boxed:
        for mu in ctx.boxed:
            for d in range(dmax + 1):
                assert cyl_schur(ctx, lam, d, mu) == convert(
                    cyl_schur_p(ctx, lam, d, mu), "m"
                ), (lam.parts, d, mu.parts)


def test_signed_schur_expansion_matches_conversion():
    ctx = grass_context(4, 2)
    for lam in ctx.boxed:
        for mu in ctx.boxed:
            for d in range(2):
                assert cyl_schur_to_schur(ctx, lam, d, mu) == convert(
                    cyl_schur(ctx, lam, d, mu), "s"
                )


def test_non_schur_positive_witness():
    # some cylindric Schur function on Gr(2,5) has a negative Schur coefficient
    ctx = grass_context(5, 2)
    witness = None
    for lam in ctx.boxed:
        for mu in ctx.boxed:
            for d in range(1, 3):
                f = cyl_schur_to_schur(ctx, lam, d, mu)
                if any(c < 0 for _, c in f.coeffs):
                    witness = (lam.parts, d, mu.parts)
                    break
    assert witness is not None


def test_nonskew_core_route():
    ctx = grass_context(4, 2)
    empty = boxed((), 4, 2)
    for lam in ctx.boxed:
        for d in range(3):
            assert nonskew_cyl_schur(ctx, lam, d) == convert(
                cyl_schur(ctx, lam, d, empty), "s"
            )


def test_core_fiber_vs_brute_scan():
    ctx = grass_context(4, 2)
    for lam in ctx.boxed:
        for d in range(3):
            fiber = core_fiber(ctx, lam, d)
            brute = [
                p
                for p in partitions_with_core(conjugate(lam.parts), 4, d)
                if len(p) <= 2
            ]
            assert sorted(fiber) == sorted(brute)


def test_nonskew_orthogonality():
    ctx = grass_context(4, 2)
    rep = nonskew_orthogonality(ctx, 2)
    assert rep.ok, rep.summary()


def test_mcnamara_reconstruction():
    ctx = grass_context(4, 2)
    empty = boxed((), 4, 2)
    for lam in ctx.boxed:
        for mu in ctx.boxed:
            for d in range(3):
                target = cyl_schur(ctx, lam, d, mu)
                acc = sym("m", ()) * 0
                for (nu, e), c in mcnamara_expand(ctx, lam, d, mu).items():
                    assert c > 0
                    acc = acc + cyl_schur(ctx, nu, e, empty) * c
                assert acc == target, (lam.parts, d, mu.parts)
    # empty inner shape expands onto itself
    for lam in ctx.boxed:
        for d in range(2):
            table = mcnamara_expand(ctx, lam, d, empty)
            assert table == {(lam, d): 1}


def test_toric_schur_matches_gw():
    ctx = grass_context(4, 2)
    for lam in ctx.boxed:
        for mu in ctx.boxed:
            for d in range(2):
                if lam.size + 4 * d - mu.size < 0:
                    continue
                tor = toric_schur(ctx, lam, d, mu)
                for sig, c in tor.coeffs:
                    assert len(sig) <= 2 and (not sig or sig[0] <= 2), (
                        "coefficient outside the box",
                        lam.parts,
                        d,
                        mu.parts,
                        sig,
                    )
                for nu in ctx.boxed:
                    assert tor[nu.parts] == gw_bvi(ctx, mu, nu, lam, d)


def test_cyl_schur_coproduct():
    # Delta(s_{lam/d/mu}) = sum over splittings, degree-truncated on Gr(2,4)
    from cylsym.symfunc import TensorSymFunc, coproduct, tensor
    from fractions import Fraction

    ctx = grass_context(4, 2)
    for lam in ctx.boxed[:4]:
        for mu in ctx.boxed[:4]:
            for d in range(2):
                lhs = coproduct(cyl_schur(ctx, lam, d, mu), bases=("m", "m"))
                rhs: dict = {}
                for d1 in range(d + 1):
                    for nu in ctx.boxed:
                        left = cyl_schur(ctx, lam, d1, nu)
                        if left.is_zero():
                            continue
                        right = cyl_schur(ctx, nu, d - d1, mu)
                        if right.is_zero():
                            continue
                        for key, c in tensor(left, right).coeffs:
                            rhs[key] = rhs.get(key, Fraction(0)) + c
                assert lhs == TensorSymFunc.make(("m", "m"), rhs), (
                    lam.parts,
                    d,
                    mu.parts,
                )


def test_gw_golden_table():
    path = os.path.join(GOLDEN_DIR, "gw_n4_k2_d2.json")
    with open(path) as fh:
        golden = fh.read()
    fresh = gw_table(grass_context(4, 2), 2).to_json()
    assert fresh == golden.strip()


def test_gw_table_schema():
    table = gw_table(grass_context(4, 2), 1)
    data = json.loads(table.to_json())
    for e in data["entries"]:
        assert set(e) == {"lambda", "mu", "nu", "d", "C"}
    back = CoeffTable.from_json(table.to_json(), value_key="C")
    assert back.entries == table.entries
