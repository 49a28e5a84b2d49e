"""Command-line surface.

Subcommands map one-to-one onto library operations: table emission,
classification queries, exhaustive verification suites, shadow-config
validation and parabolic synthesis.  Output is deterministic for fixed flags
and seed (machine output on stdout or --out; human summaries on stderr), and
the exit status is 0 exactly when no check failed.

CSV columns: `roots` emits eps,del,dc,class,parity,component with coordinate
lists space-separated; `tables` emits table,dot_eps,dot_del,mod,residues.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .families import AffineFamily, AlgebraParams, InvalidParamsError
from .lattice import RootVector
from .parabolic import (
    Functional,
    InfeasibleSystemError,
    combine_functionals,
    decompose_over_generators,
    dot_parabolic_from_config,
    generator_set,
    is_parabolic,
    synthesize_functional,
)
from .rootsys import (
    classify,
    component_empty,
    dot_roots,
    dot_roots_0,
    enumerate_window,
    even_table,
    is_root,
    root_table,
)
from .sampling import DEFAULT_SEED
from .shadow import (
    ConfigError,
    ShadowConfig,
    check_mixed_components,
    check_parabolic,
    is_tight,
    validate,
)
from .tables import EVEN_CLAUSES, ROOT_CLAUSES, expand_pattern, resolve_progression
from .texout import roots_tex, tables_tex
from .verify import run_all


def _params(args) -> AlgebraParams:
    try:
        family = AffineFamily.from_token(args.family)
        return AlgebraParams(family, args.k, args.l)
    except InvalidParamsError as exc:
        raise SystemExit(f"error: {exc}")


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _load_json(path: str, what: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SystemExit(
            f"error: {what} {path}: invalid JSON at line {exc.lineno}, column {exc.colno}"
        )
    except OSError as exc:
        raise SystemExit(f"error: cannot read {what} {path}: {exc}")


def _parse_root(p: AlgebraParams, text: str) -> RootVector:
    try:
        doc = json.loads(text)
        v = RootVector.from_json(doc)
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise SystemExit(f"error: bad root encoding {text!r}: {exc}")
    if v.ambient != p.ambient:
        raise SystemExit(
            f"error: root ambient {v.ambient} does not match (k, l) = {p.ambient}"
        )
    return v


def _load_functional(p: AlgebraParams, path: str) -> Functional:
    doc = _load_json(path, "functional file")
    try:
        zeta = Functional.from_json(doc)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise SystemExit(f"error: functional file {path}: {exc}")
    if (len(zeta.eps), len(zeta.dels)) != p.ambient:
        raise SystemExit(
            f"error: functional ambient does not match (k, l) = {p.ambient}"
        )
    return zeta


def _load_config(p: AlgebraParams, path: str) -> ShadowConfig:
    doc = _load_json(path, "config file")
    try:
        return ShadowConfig.from_json(p, doc)
    except ConfigError as exc:
        raise SystemExit(f"error: config file {path}: {exc}")


def _classify_fields(p: AlgebraParams, v: RootVector) -> tuple[str, str, str]:
    if v.is_zero:
        return ("zero", "unspecified", "all")
    info = classify(p, v)
    parity = info.parity.value if info.parity is not None else "unspecified"
    return (info.root_class.value, parity, info.component.value)


# --- subcommand handlers -------------------------------------------------------


def _cmd_roots(args) -> int:
    p = _params(args)
    window = enumerate_window(p, args.mmax)
    entries = []
    for v in window:
        cls, parity, comp = _classify_fields(p, v)
        entries.append((v, cls, parity, comp))
    if args.format == "json":
        doc = {
            "family": p.family.token,
            "k": p.k,
            "l": p.l,
            "mmax": args.mmax,
            "count": len(entries),
            "roots": [
                {"root": v.to_json(), "class": cls, "parity": parity, "component": comp}
                for v, cls, parity, comp in entries
            ],
        }
        _emit(args, _json_text(doc))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["eps", "del", "dc", "class", "parity", "component"])
        for v, cls, parity, comp in entries:
            writer.writerow(
                [" ".join(map(str, v.eps)), " ".join(map(str, v.dels)), v.dc,
                 cls, parity, comp]
            )
        _emit(args, buf.getvalue())
    else:
        rows = [
            (" ".join(map(str, v.eps)), " ".join(map(str, v.dels)), str(v.dc),
             cls, parity, comp)
            for v, cls, parity, comp in entries
        ]
        _emit(args, roots_tex(p, rows))
    return 0


def _cmd_classify(args) -> int:
    p = _params(args)
    v = _parse_root(p, args.root)
    if not is_root(p, v):
        _emit(args, _json_text({"root": v.to_json(), "is_root": False}))
        return 1
    cls, parity, comp = _classify_fields(p, v)
    _emit(args, _json_text({
        "root": v.to_json(), "is_root": True,
        "class": cls, "parity": parity, "component": comp,
    }))
    return 0


def _clauses_json(p: AlgebraParams, rows) -> list[dict]:
    out = []
    for token, pats in rows:
        dots = sorted({d for pat in pats for d in expand_pattern(pat, p.k, p.l)})
        out.append({
            "dot": [d.to_json() for d in dots],
            "progression": resolve_progression(token, p).to_json(),
        })
    return out


def _cmd_tables(args) -> int:
    p = _params(args)
    if args.format == "tex":
        _emit(args, tables_tex(p))
        return 0
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["table", "dot_eps", "dot_del", "mod", "residues"])
        sections = [("R", root_table(p))]
        for i in (1, 2):
            sections.append((f"R0_{i}", even_table(p, i)))
        for name, table in sections:
            for dot in sorted(table):
                prog = table[dot]
                writer.writerow(
                    [name, " ".join(map(str, dot.eps)), " ".join(map(str, dot.dels)),
                     prog.modulus, " ".join(map(str, prog.residues))]
                )
        _emit(args, buf.getvalue())
        return 0
    doc = {
        "family": p.family.token,
        "k": p.k,
        "l": p.l,
        "clauses": _clauses_json(p, ROOT_CLAUSES[p.family]),
        "R0": {
            str(i): (None if component_empty(p, i)
                     else {"clauses": _clauses_json(p, EVEN_CLAUSES[p.family][i])})
            for i in (1, 2)
        },
        "S": [
            {"dot": dot.to_json(), "progression": root_table(p)[dot].to_json()}
            for dot in sorted(dot_roots(p)) if not dot.is_zero
        ],
        "S0": {
            str(i): [
                {"dot": dot.to_json(), "progression": even_table(p, i)[dot].to_json()}
                for dot in sorted(dot_roots_0(p, i)) if not dot.is_zero
            ]
            for i in (1, 2)
        },
        "Rdot": [d.to_json() for d in sorted(dot_roots(p))],
        "Rdot0": {
            str(i): [d.to_json() for d in sorted(dot_roots_0(p, i))] for i in (1, 2)
        },
    }
    _emit(args, _json_text(doc))
    return 0


def _cmd_verify(args) -> int:
    p = _params(args)
    reports = run_all(
        p,
        seed=args.seed,
        mmax=args.mmax,
        n_configs=args.configs,
        n_adversarial=args.adversarial,
        n_functionals=args.functionals,
        n_roundtrip=args.roundtrip,
    )
    for r in reports:
        print(r.summary(), file=sys.stderr)
    doc = {
        "family": p.family.token, "k": p.k, "l": p.l,
        "seed": args.seed, "mmax": args.mmax,
        "reports": [r.to_json() for r in reports],
        "ok": all(r.ok for r in reports),
    }
    _emit(args, _json_text(doc))
    return 0 if all(r.ok for r in reports) else 1


def _cmd_shadow_validate(args) -> int:
    p = _params(args)
    cfg = _load_config(p, args.config)
    verdict = validate(cfg)
    _emit(args, _json_text({
        "valid": verdict.ok,
        "checks": verdict.checks,
        "failures": [{"check": f.check, "witness": f.witness} for f in verdict.failures],
    }))
    return 0 if verdict.ok else 1


def _cmd_shadow_derive_p(args) -> int:
    p = _params(args)
    cfg = _load_config(p, args.config)
    verdict = validate(cfg)
    if not verdict.ok:
        _emit(args, _json_text({
            "valid": False,
            "failures": [{"check": f.check, "witness": f.witness} for f in verdict.failures],
        }))
        return 1
    closure = check_parabolic(cfg, args.mmax)
    components = {}
    propers = []
    for i in (1, 2):
        if component_empty(p, i):
            components[str(i)] = None
            continue
        dp = dot_parabolic_from_config(cfg, i, args.mmax)
        ip = is_parabolic(dp)
        propers.append(dp.proper)
        components[str(i)] = {
            "dots": [d.to_json() for d in dp.sorted_members()],
            "proper": dp.proper,
            "parabolic": ip.ok,
        }
    findings = []
    if (is_tight(cfg) and check_mixed_components(cfg, args.mmax).ok
            and propers and not any(propers)):
        findings.append(
            "every component trace is improper although the config is tight "
            "with mixed components; at least one should be proper")
    doc = {
        "valid": True,
        "tight": is_tight(cfg),
        "mixed_components": check_mixed_components(cfg, args.mmax).ok,
        "closure": {
            "ok": closure.ok,
            "checks": closure.checks,
            "failures": [{"check": f.check, "witness": f.witness} for f in closure.failures],
        },
        "components": components,
        "findings": findings,
    }
    _emit(args, _json_text(doc))
    return 0 if closure.ok and not findings else 1


def _cmd_parabolic_synth(args) -> int:
    p = _params(args)
    cfg = _load_config(p, args.config)
    verdict = validate(cfg)
    if not verdict.ok:
        raise SystemExit(f"error: config invalid: {verdict.summary()}")
    components = {}
    functionals = []
    for i in (1, 2):
        if component_empty(p, i):
            components[str(i)] = None
            functionals.append(None)
            continue
        dp = dot_parabolic_from_config(cfg, i, args.mmax)
        try:
            zeta_i = synthesize_functional(dp)
        except InfeasibleSystemError as exc:
            raise SystemExit(f"error: {exc}")
        components[str(i)] = {
            "dots": [d.to_json() for d in dp.sorted_members()],
            "proper": dp.proper,
            "functional": zeta_i.to_json(),
        }
        functionals.append(zeta_i)
    z1, z2 = functionals
    combined = combine_functionals(z1, z2) if z1 is not None else z2
    doc = {
        "components": components,
        "combined": combined.to_json(),
        "trivial": combined.is_zero,
    }
    if combined.is_zero:
        doc["note"] = ("combined functional is zero: no component trace is proper, "
                       "which violates the nontriviality the induction step needs")
    _emit(args, _json_text(doc))
    return 0


def _cmd_phi_pi(args) -> int:
    p = _params(args)
    zeta = _load_functional(p, args.functional)
    if zeta.delta != 0:
        raise SystemExit("error: the functional must vanish on delta")
    gens = generator_set(p, zeta, args.mmax)
    doc = {
        "family": p.family.token, "k": p.k, "l": p.l,
        "functional": zeta.to_json(),
        "modulus": gens.modulus,
        "shifted_real": [v.to_json() for v in gens.shifted_real],
        "shifted_full": [v.to_json() for v in gens.shifted_full],
        "positive": [v.to_json() for v in gens.positive],
        "generators": [v.to_json() for v in gens.generators],
        "note": ("shifted_real ranges over real dots (the generator combinatorics); "
                 "shifted_full over all nonzero dots (the window covering identity); "
                 "they differ on the nonsingular shapes"),
    }
    _emit(args, _json_text(doc))
    return 0


def _cmd_decompose(args) -> int:
    p = _params(args)
    zeta = _load_functional(p, args.functional)
    target = _parse_root(p, args.root)
    gens = generator_set(p, zeta, args.mmax)
    if target not in set(gens.positive):
        raise SystemExit(f"error: {target} is not in the positive slice")
    coeffs = decompose_over_generators(target, gens)
    doc = {
        "root": target.to_json(),
        "coefficients": [
            {"generator": g.to_json(), "count": coeffs[g]} for g in sorted(coeffs)
        ],
    }
    _emit(args, _json_text(doc))
    return 0


# --- parser ----------------------------------------------------------------------


def _add_params(sub) -> None:
    sub.add_argument("--family", required=True,
                     choices=[f.token for f in AffineFamily],
                     help="affine family token")
    sub.add_argument("--k", type=int, required=True, help="eps rank (k >= 0)")
    sub.add_argument("--l", type=int, required=True, help="del rank (l >= 1)")


def _add_out(sub) -> None:
    sub.add_argument("--out", help="write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistroots",
        description="Exact root-system combinatorics for twisted affine Lie superalgebras.",
    )
    parser.add_argument("--list-families", action="store_true",
                        help="print the family tokens with their parameter constraints")
    subs = parser.add_subparsers(dest="command")

    sp = subs.add_parser(
        "roots", help="enumerate a window of roots",
        epilog="CSV columns: eps, del, dc, class, parity, component "
               "(eps/del are space-separated coordinate lists).")
    _add_params(sp)
    sp.add_argument("--mmax", type=int, default=4, help="window bound on |dc|")
    sp.add_argument("--format", choices=("json", "csv", "tex"), default="json")
    _add_out(sp)
    sp.set_defaults(func=_cmd_roots)

    sp = subs.add_parser("classify", help="classify a single root")
    _add_params(sp)
    sp.add_argument("--root", required=True,
                    help='root as JSON, e.g. {"eps":[1],"del":[0],"dc":0}')
    _add_out(sp)
    sp.set_defaults(func=_cmd_classify)

    sp = subs.add_parser(
        "tables", help="emit the family's closed-form tables",
        epilog="CSV columns: table (R, R0_1, R0_2), dot_eps, dot_del, mod, "
               "residues (coordinate and residue lists space-separated).")
    _add_params(sp)
    sp.add_argument("--format", choices=("json", "csv", "tex"), default="json")
    _add_out(sp)
    sp.set_defaults(func=_cmd_tables)

    sp = subs.add_parser("verify", help="run the full invariant battery")
    _add_params(sp)
    sp.add_argument("--mmax", type=int, default=8)
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--configs", type=int, default=100,
                    help="seeded shadow configs per run")
    sp.add_argument("--adversarial", type=int, default=50,
                    help="adversarial mutations per run")
    sp.add_argument("--functionals", type=int, default=50,
                    help="seeded functionals for the generator suite")
    sp.add_argument("--roundtrip", type=int, default=200,
                    help="functionals per component for the synthesis round trip")
    _add_out(sp)
    sp.set_defaults(func=_cmd_verify)

    sp = subs.add_parser("shadow-validate", help="validate a shadow config file")
    _add_params(sp)
    sp.add_argument("--config", required=True, help="shadow config JSON file")
    _add_out(sp)
    sp.set_defaults(func=_cmd_shadow_validate)

    sp = subs.add_parser("shadow-derive-p",
                         help="derive the parabolic set of a config and check it")
    _add_params(sp)
    sp.add_argument("--config", required=True)
    sp.add_argument("--mmax", type=int, default=8)
    _add_out(sp)
    sp.set_defaults(func=_cmd_shadow_derive_p)

    sp = subs.add_parser("parabolic-synth",
                         help="synthesize defining functionals for a config's traces")
    _add_params(sp)
    sp.add_argument("--config", required=True)
    sp.add_argument("--mmax", type=int, default=8)
    _add_out(sp)
    sp.set_defaults(func=_cmd_parabolic_synth)

    sp = subs.add_parser("phi-pi",
                         help="shifted dot roots, positive slice and its generators")
    _add_params(sp)
    sp.add_argument("--functional", required=True, help="functional JSON file")
    sp.add_argument("--mmax", type=int, default=8)
    _add_out(sp)
    sp.set_defaults(func=_cmd_phi_pi)

    sp = subs.add_parser("decompose",
                         help="decompose a positive-slice root over the generators")
    _add_params(sp)
    sp.add_argument("--functional", required=True)
    sp.add_argument("--root", required=True)
    sp.add_argument("--mmax", type=int, default=8)
    _add_out(sp)
    sp.set_defaults(func=_cmd_decompose)

    return parser


_FAMILY_CONSTRAINTS = {
    AffineFamily.A_EVEN_2: "k >= 0, l >= 1",
    AffineFamily.A_ODD_2: "k >= 1, l >= 1, (k, l) != (1, 1)",
    AffineFamily.A_4: "k >= 0, l >= 1",
    AffineFamily.D_2: "k >= 0, l >= 1",
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.list_families:
        for fam in AffineFamily:
            print(f"{fam.token:12s} {fam.tex_name():24s} {_FAMILY_CONSTRAINTS[fam]}")
        return 0
    if not getattr(args, "command", None):
        parser.print_help(sys.stderr)
        return 2
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
