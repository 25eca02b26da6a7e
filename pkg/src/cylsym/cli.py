"""Command line surface: tables, expansions and verification suites.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
Output is byte-stable for fixed arguments: keys are sorted and rationals
rendered canonically.
"""

from __future__ import annotations

import argparse
import sys

from . import fusion as fu
from . import grassmannian as gr
from .cylindric import (
    cyl_e,
    cyl_h,
    coproduct_cyl_check,
    cyl_in_nonskew,
    phi_cyl,
    phi_cyl_oracle,
    psi_cyl,
    psi_cyl_oracle,
    theta_cyl,
    theta_cyl_oracle,
)
from .partitions import AlcoveWeight, BoxedPartition, enumerate_alcove, format_partition, parse_partition


class UsageError(Exception):
    pass


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _write(text: str, path: str | None):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _table_text(table: fu.CoeffTable) -> str:
    rows = [("lambda", "mu", "nu", "d", "value")]
    for (lam, mu, nu, d), v in table.sorted_items():
        rows.append(
            (
                format_partition(lam),
                format_partition(mu),
                format_partition(nu),
                str(d) if d >= 0 else "-",
                str(v),
            )
        )
    widths = [max(len(r[i]) for r in rows) for i in range(5)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines) + "\n"


def cmd_fusion(args) -> int:
    ctx = fu.FusionContext(args.n, args.k)
    if args.format == "csv":
        table = fu.build_table(ctx, dmax=args.dmax, keep_zero=False)
        _write(table.to_csv(), args.out)
    else:
        table = fu.build_table(ctx, dmax=args.dmax, keep_zero=True)
        if args.format == "json":
            _write(table.to_json(), args.out)
        else:
            _write(_table_text(table), args.out)
    return 0


def cmd_gw(args) -> int:
    ctx = gr.grass_context(args.n, args.k)
    table = gr.gw_table(ctx, args.dmax)
    if args.format == "csv":
        _write(table.to_csv(), args.out)
    elif args.format == "json":
        _write(table.to_json(), args.out)
    else:
        _write(_table_text(table), args.out)
    return 0


def cmd_cyl(args) -> int:
    lam = _partition_arg(args.lam)
    mu = _partition_arg(args.mu)
    if args.kind in ("h", "e"):
        try:
            lam_w = AlcoveWeight(lam, args.n, args.k)
            mu_w = AlcoveWeight(mu, args.n, args.k)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        f = cyl_h(lam_w, args.d, mu_w) if args.kind == "h" else cyl_e(lam_w, args.d, mu_w)
    else:
        try:
            ctx = gr.grass_context(args.n, args.k)
            lam_b = BoxedPartition(lam, args.n, args.k)
            mu_b = BoxedPartition(mu, args.n, args.k)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        f = gr.cyl_schur(ctx, lam_b, args.d, mu_b)
    if args.format == "json":
        _write(f.to_json(), args.out)
    else:
        lines = [
            f"{format_partition(p)}  {c}"
            for p, c in sorted(f.coeffs)
        ]
        _write(f"basis {f.basis}\n" + "\n".join(lines) + ("\n" if lines else ""), args.out)
    return 0


SUITES = ("formula-oracle", "symmetry", "route-equivalence", "coalgebra", "orthogonality", "all")


def _suite_formula_oracle(n: int, k: int) -> fu.Report:
    rep = fu.Report(f"formula vs oracle (n={n}, k={k})")
    alcove = enumerate_alcove(n, k)
    for lam in alcove:
        for mu in alcove:
            for d in range(0, 4):
                rep.run(
                    theta_cyl(lam, d, mu) == theta_cyl_oracle(lam, d, mu),
                    f"theta at {lam.parts}/{d}/{mu.parts}",
                )
                rep.run(
                    psi_cyl(lam, d, mu) == psi_cyl_oracle(lam, d, mu),
                    f"psi at {lam.parts}/{d}/{mu.parts}",
                )
                rep.run(
                    phi_cyl(lam, d, mu) == phi_cyl_oracle(lam, d, mu),
                    f"phi at {lam.parts}/{d}/{mu.parts}",
                )
    return rep


def _suite_route_equivalence(n: int, k: int) -> fu.Report:
    ctx = fu.FusionContext(n, k)
    rep = fu.Report(f"fusion route equivalence (n={n}, k={k})")
    for lam in ctx.alcove:
        for mu in ctx.alcove:
            for nu in ctx.alcove:
                # all three give N_{lam mu}^nu; the top index comes first in
                # the counting and reduction signatures
                a = fu.n_count(nu, lam, mu)
                b = fu.n_verlinde(ctx, lam, mu, nu)
                c = fu.n_reduce(ctx, nu, lam, mu)
                rep.run(a == b == c, f"routes at {lam.parts},{mu.parts},{nu.parts}: {a},{b},{c}")
    if 1 <= k < n:
        gctx = gr.grass_context(n, k)
        for lam in gctx.boxed:
            for mu in gctx.boxed:
                for nu in gctx.boxed:
                    total = lam.size + mu.size - nu.size
                    if total < 0 or total % n or total // n > 1:
                        continue
                    d = total // n
                    rep.run(
                        gr.gw_bvi(gctx, lam, mu, nu, d) == gr.gw_ribbon(gctx, lam, mu, nu, d),
                        f"GW routes at {lam.parts},{mu.parts},{nu.parts},{d}",
                    )
    return rep


def _suite_coalgebra(n: int, k: int) -> fu.Report:
    rep = fu.Report(f"coalgebra (n={n}, k={k})")
    alcove = enumerate_alcove(n, k)
    from .cylindric import antipode_check

    for lam in alcove:
        for mu in alcove:
            rep.run(antipode_check(lam, 1, mu), f"antipode at {lam.parts}/1/{mu.parts}")
            for (sigma, e), c in cyl_in_nonskew(lam, 1, mu).items():
                rep.run(c >= 0, f"positivity at {lam.parts}/1/{mu.parts} -> {sigma.parts},{e}")
    small = alcove[: min(3, len(alcove))]
    for lam in small:
        for mu in small:
            rep.run(
                coproduct_cyl_check(lam, 1, mu, degree_bound=5),
                f"coproduct at {lam.parts}/1/{mu.parts}",
            )
    return rep


def _suite_symmetry(n: int, k: int) -> fu.Report:
    return fu.symmetry_suite(fu.FusionContext(n, k))


def _suite_orthogonality(n: int, k: int) -> fu.Report:
    ctx = fu.FusionContext(n, k)
    rep = fu.orthogonality_check(ctx)
    inv = fu.s_matrix_inverse_check(ctx)
    rep.checks += inv.checks
    rep.failures.extend(inv.failures)
    uni = fu.t_unitarity_check(ctx)
    rep.checks += uni.checks
    rep.failures.extend(uni.failures)
    if k == 1:
        mod = fu.modular_relations_check(n)
        rep.checks += mod.checks
        rep.failures.extend(mod.failures)
    return rep


def cmd_verify(args) -> int:
    chosen = SUITES[:-1] if args.suite == "all" else (args.suite,)
    runners = {
        "formula-oracle": _suite_formula_oracle,
        "symmetry": _suite_symmetry,
        "route-equivalence": _suite_route_equivalence,
        "coalgebra": _suite_coalgebra,
        "orthogonality": _suite_orthogonality,
    }
    failed = False
    for name in chosen:
        rep = runners[name](args.n, args.k)
        print(rep.summary())
        failed = failed or not rep.ok
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cylsym",
        description="cylindric symmetric functions, fusion coefficients and Gromov-Witten invariants",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_fusion = sub.add_parser("fusion", help="fusion coefficient table")
    p_fusion.add_argument("--n", type=int, required=True)
    p_fusion.add_argument("--k", type=int, required=True)
    p_fusion.add_argument("--dmax", type=int, default=None)
    p_fusion.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p_fusion.add_argument("--out", default=None)
    p_fusion.set_defaults(func=cmd_fusion)

    p_gw = sub.add_parser("gw", help="Gromov-Witten invariant table")
    p_gw.add_argument("--n", type=int, required=True)
    p_gw.add_argument("--k", type=int, required=True)
    p_gw.add_argument("--dmax", type=int, required=True)
    p_gw.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p_gw.add_argument("--out", default=None)
    p_gw.set_defaults(func=cmd_gw)

    p_cyl = sub.add_parser("cyl", help="expand a cylindric function")
    p_cyl.add_argument("kind", choices=("h", "e", "s"))
    p_cyl.add_argument("--n", type=int, required=True)
    p_cyl.add_argument("--k", type=int, required=True)
    p_cyl.add_argument("--lambda", dest="lam", required=True, help='outer weight, e.g. "2,1"')
    p_cyl.add_argument("--mu", required=True, help='inner weight; "-" for empty')
    p_cyl.add_argument("--d", type=int, required=True)
    p_cyl.add_argument("--format", choices=("json", "text"), default="text")
    p_cyl.add_argument("--out", default=None)
    p_cyl.set_defaults(func=cmd_cyl)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=SUITES)
    p_verify.add_argument("--n", type=int, required=True)
    p_verify.add_argument("--k", type=int, required=True)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalise other codes
        return int(exc.code) if exc.code else 0
    if args.command in ("fusion", "gw", "cyl", "verify") and (args.n < 1 or args.k < 1):
        print("error: n and k must be positive", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
