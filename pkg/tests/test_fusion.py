import json
import os

import pytest

from cylsym.fusion import (
    CoeffTable,
    FusionContext,
    build_table,
    frobenius_suite,
    fusion_count,
    mfusion_pointwise_check,
    modular_relations_check,
    n_count,
    n_reduce,
    n_verlinde,
    orthogonality_check,
    s_matrix,
    s_matrix_inverse_check,
    symmetry_suite,
    t_unitarity_check,
)
from cylsym.partitions import AlcoveWeight, enumerate_alcove, partitions_of

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "golden")


def test_counting_anchors():
    one = AlcoveWeight((1,), 2, 1)
    two = AlcoveWeight((2,), 2, 1)
    assert n_count(two, one, one) == 1
    assert n_count(two, two, two) == 1
    assert n_count(one, one, one) == 0
    # unit law N_{lam n^k}^mu = delta
    for n, k in [(3, 2), (4, 2)]:
        unit = AlcoveWeight((n,) * k, n, k)
        for lam in enumerate_alcove(n, k):
            for mu in enumerate_alcove(n, k):
                assert n_count(mu, lam, unit) == (1 if lam == mu else 0)


@pytest.mark.parametrize("n,k", [(2, 2), (3, 2), (4, 2), (3, 3)])
def test_triple_route_equality(n, k):
    ctx = FusionContext(n, k)
    for lam in ctx.alcove:
        for mu in ctx.alcove:
            for nu in ctx.alcove:
                count = n_count(nu, lam, mu)
                verl = n_verlinde(ctx, lam, mu, nu)
                red = n_reduce(ctx, nu, lam, mu)
                assert count == verl == red, (lam, mu, nu)


def test_degree_law():
    ctx = FusionContext(3, 2)
    for lam in ctx.alcove:
        for mu in ctx.alcove:
            for nu in ctx.alcove:
                if (lam.size + mu.size - nu.size) % 3:
                    assert n_count(nu, lam, mu) == 0


def test_n_reduce_extended():
    # dominant nu with parts <= 2n, against the direct extended count
    ctx = FusionContext(3, 2)
    for lam in ctx.alcove:
        for mu in ctx.alcove:
            for total in range(0, 13):
                for nu in partitions_of(total, max_part=6, max_len=2):
                    direct = fusion_count(lam.parts, mu.parts, nu, 3, 2)
                    assert n_reduce(ctx, lam, mu, nu) == direct, (lam, mu, nu)


@pytest.mark.parametrize("n,k", [(3, 2), (4, 3)])
def test_symmetry_suite(n, k):
    rep = symmetry_suite(FusionContext(n, k))
    assert rep.ok, rep.summary()


def test_orthogonality_and_matrices():
    for n, k in [(2, 2), (3, 2), (4, 2), (3, 3)]:
        ctx = FusionContext(n, k)
        assert orthogonality_check(ctx).ok
        assert s_matrix_inverse_check(ctx).ok
        assert t_unitarity_check(ctx).ok


def test_s_matrix_entries():
    ctx = FusionContext(2, 1)
    mat, meta = s_matrix(ctx)
    values = [[e.to_integer() for e in row] for row in mat]
    assert values == [[-1, 1], [1, 1]]
    assert "sqrt" in meta["scaling"]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_modular_relations_rank_one(n):
    rep = modular_relations_check(n)
    assert rep.ok, rep.summary()


@pytest.mark.parametrize("n,k", [(3, 2), (4, 2)])
def test_frobenius_suite(n, k):
    rep = frobenius_suite(FusionContext(n, k))
    assert rep.ok, rep.summary()


def test_pointwise_product_expansion():
    for n, k in [(3, 2), (4, 2)]:
        rep = mfusion_pointwise_check(FusionContext(n, k), samples=50)
        assert rep.ok, rep.summary()


def test_verlinde_error_propagation():
    # feeding mismatched weights must fail loudly, not silently truncate
    ctx = FusionContext(3, 2)
    with pytest.raises(ValueError):
        n_reduce(ctx, ctx.alcove[0], ctx.alcove[0], (1, 1, 1))


# -- tables -------------------------------------------------------------------


def test_table_roundtrip_and_schema():
    ctx = FusionContext(3, 2)
    table = build_table(ctx)
    text = table.to_json()
    data = json.loads(text)
    assert set(data) >= {"n", "k", "entries"}
    for e in data["entries"]:
        assert set(e) == {"lambda", "mu", "nu", "d", "N"}
        assert e["N"] != 0
        lam, mu, nu = tuple(e["lambda"]), tuple(e["mu"]), tuple(e["nu"])
        assert (sum(lam) + sum(mu) - sum(nu)) == 3 * e["d"]
    back = CoeffTable.from_json(text)
    assert back.entries == table.entries
    # byte stability
    assert build_table(FusionContext(3, 2)).to_json() == text


def test_table_csv():
    ctx = FusionContext(2, 1)
    table = build_table(ctx, keep_zero=True)
    assert len(table.entries) == 8
    csv_text = table.to_csv()
    rows = [r for r in csv_text.strip().splitlines()[1:]]
    assert len(rows) == 4  # nonzero entries only
    assert any(r.startswith("1,1,2,0,1") for r in rows)


def test_golden_fusion_tables():
    for name, n, k in [("fusion_n2_k1.json", 2, 1), ("fusion_n3_k2.json", 3, 2)]:
        path = os.path.join(GOLDEN_DIR, name)
        with open(path) as fh:
            golden = fh.read()
        fresh = build_table(FusionContext(n, k)).to_json()
        assert fresh == golden.strip(), f"regenerate {name} explicitly if this change is intended"
