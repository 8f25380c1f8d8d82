"""``wh``: command-line front end.

Exit codes: 0 on success (including "open" answers), 1 on user error,
2 when an internal cross-validation fails.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

import mpmath

from . import classification as cls_
from .cobordism import InvertibleCobordism, ManifoldProfile, compose, dual, inverse, is_s_cobordism
from .group_ring import (
    CyclicGroupSpec,
    augmentation,
    circulant_determinant,
    format_element,
    is_trivial_unit,
    parse_element,
)
from .verdict import Verdict
from .whitehead import (
    DEFAULT_PRECISION,
    ROUNDING_TOL,
    CrossValidationError,
    GeneratorRegistry,
    NotInSpan,
    PrecisionError,
    bass_lattice_rank,
    class_of,
    express_in_generators,
    generators,
    involution_trivial_on,
    is_zero,
    log_vector,
    rank,
)

REGISTRY_ENV = "WH_REGISTRY"
TABLE_CAP = 24


class UserError(Exception):
    pass


@dataclass
class CliConfig:
    precision_digits: int = DEFAULT_PRECISION
    registry_path: str | None = None
    output_format: str = "text"

    def __post_init__(self):
        if self.precision_digits < 20:
            raise UserError("--precision must be at least 20 digits")
        if self.output_format not in ("text", "json"):
            raise UserError(f"unknown format {self.output_format!r}")

    def registry(self) -> GeneratorRegistry:
        path = self.registry_path or os.environ.get(REGISTRY_ENV) or None
        try:
            return GeneratorRegistry.load(path)
        except (OSError, ValueError) as exc:
            raise UserError(f"cannot load registry {path}: {exc}") from exc


def _fmt_real(x) -> str:
    return mpmath.nstr(mpmath.chop(x, ROUNDING_TOL), 10)


def _emit(cfg: CliConfig, payload: dict, lines: list[str]) -> None:
    if cfg.output_format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def _basis_label(exact: bool) -> str:
    return "exact basis" if exact else "Bass units, subgroup of finite index"


def _coordinates(c, gens, exact, cfg):
    """(coords or None, note)."""
    try:
        return express_in_generators(c, gens, cfg.precision_digits), _basis_label(exact)
    except NotInSpan:
        return None, "not in the span of the generators"
    except PrecisionError as exc:
        raise UserError(str(exc)) from exc


# info / class


def cmd_wh_info(cfg: CliConfig, n: int, epsilon: int = 1) -> None:
    if n < 1:
        raise UserError("n must be positive")
    group = CyclicGroupSpec(n, epsilon)
    gens, exact = generators(n, cfg.registry(), epsilon, cfg.precision_digits)
    r = rank(n)
    trivial_inv = involution_trivial_on(gens)
    payload = {
        "n": n,
        "epsilon": epsilon,
        "rank": r,
        "generators": [format_element(g.rep) for g in gens],
        "exact_basis": exact,
        "involution_trivial": trivial_inv,
    }
    lines = [f"Wh({group})", f"rank: {r}"]
    if r == 0:
        lines.append("trivial group")
    else:
        lines.append(f"generators ({_basis_label(exact)}):")
        lines += [f"  {format_element(g.rep)}" for g in gens]
    lines.append(f"involution trivial on generators: {'yes' if trivial_inv else 'no'}")
    _emit(cfg, payload, lines)


def cmd_class_eval(cfg: CliConfig, expr: str, n: int, epsilon: int = 1) -> None:
    group = CyclicGroupSpec(n, epsilon)
    x = parse_element(expr, group)
    det = circulant_determinant(x)
    unit = abs(det) == 1
    payload = {
        "element": format_element(x),
        "n": n,
        "epsilon": epsilon,
        "determinant": det,
        "augmentation": augmentation(x),
        "unit": unit,
    }
    lines = [
        f"element: {format_element(x)}",
        f"determinant: {det}",
        f"augmentation: {augmentation(x)}",
        f"unit: {'yes' if unit else 'no'}",
    ]
    if unit:
        c = class_of(x)
        gens, exact = generators(n, cfg.registry(), epsilon, cfg.precision_digits)
        coords, note = _coordinates(c, gens, exact, cfg)
        logs = [_fmt_real(v) for v in log_vector(c, cfg.precision_digits)]
        payload.update({
            "trivial_unit": is_trivial_unit(x),
            "class": format_element(c.rep),
            "zero_class": is_zero(c),
            "log_vector": logs,
            "coordinates": coords,
            "exact_basis": exact,
        })
        lines += [
            f"trivial unit: {'yes' if is_trivial_unit(x) else 'no'}",
            f"class representative: {format_element(c.rep)}",
            f"zero class: {'yes' if is_zero(c) else 'no'}",
            f"log vector: ({', '.join(logs)})",
            f"coordinates: {coords if coords is not None else '-'} ({note})",
        ]
    _emit(cfg, payload, lines)


# cobordisms


def load_cobordism(path: str) -> InvertibleCobordism:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UserError(f"cannot read {path}: {exc}") from exc
    return InvertibleCobordism.loads(text)


def _cob_summary(cfg: CliConfig, W: InvertibleCobordism) -> tuple[dict, list[str]]:
    gens, exact = generators(W.n, cfg.registry(), W.source.pi.epsilon, cfg.precision_digits)
    coords, note = _coordinates(W.torsion, gens, exact, cfg)
    payload = {
        "cobordism": W.to_json(),
        "coordinates": coords,
        "exact_basis": exact,
        "s_cobordism": is_s_cobordism(W),
    }
    lines = [
        f"{W.source.name} -> {W.target.name}  (dim {W.dim}, pi_1 = {W.source.pi})",
        f"torsion: {format_element(W.torsion.rep)}",
        f"ident: t -> t^{W.ident}",
        f"coordinates: {coords if coords is not None else '-'} ({note})",
        f"s-cobordism: {'yes' if is_s_cobordism(W) else 'no'}",
    ]
    return payload, lines


def cmd_cob(cfg: CliConfig, verb: str, files: list[str], out: str | None = None) -> None:
    arity = {"compose": 2, "dual": 1, "invert": 1, "torsion": 1, "is-s": 1}
    if len(files) != arity[verb]:
        raise UserError(f"'cob {verb}' takes {arity[verb]} file(s), got {len(files)}")
    ws = [load_cobordism(f) for f in files]
    if verb == "compose":
        result = compose(ws[0], ws[1])
    elif verb == "dual":
        result = dual(ws[0])
    elif verb == "invert":
        result = inverse(ws[0])
    else:
        result = ws[0]
    payload, lines = _cob_summary(cfg, result)
    if verb == "is-s":
        payload = {"s_cobordism": payload["s_cobordism"], "torsion": payload["cobordism"]["torsion"]}
        lines = [lines[-1]]
    elif verb == "torsion":
        payload.pop("cobordism")
        lines = lines[1:]
        payload["torsion"] = format_element(result.torsion.rep)
    else:
        lines += ["", result.dumps()]
    if out:
        Path(out).write_text(result.dumps() + "\n")
    _emit(cfg, payload, lines)


# classification


def _verdict_lines(label: str, verdicts: list[Verdict]) -> list[str]:
    return [f"{label}: {vd}" for vd in verdicts]


def _profile_from_args(args, name: str = "M") -> ManifoldProfile:
    if args.dim is None:
        raise UserError("--dim is required")
    flags = {f: True for f in (args.flag or [])}
    try:
        return ManifoldProfile.make(name, args.dim, args.n, args.epsilon, **flags)
    except ValueError as exc:
        raise UserError(str(exc)) from exc


def cmd_classify(cfg: CliConfig, verb: str, args) -> None:
    reg = cfg.registry()
    if verb in ("decomposable", "c-decomposable", "inertial"):
        if args.file:
            W = load_cobordism(args.file)
            M, tau = W.source, W.torsion
        else:
            M = _profile_from_args(args)
            if args.torsion is None:
                raise UserError("give a cobordism file or --torsion")
            tau = class_of(parse_element(args.torsion, M.pi))
            W = InvertibleCobordism(M, M, tau, 1)
        gens, exact = generators(M.pi.n, reg, M.pi.epsilon, cfg.precision_digits)
        if verb == "decomposable":
            vd = cls_.decide_decomposable(W)
        elif verb == "c-decomposable":
            vd = cls_.decide_c_decomposable(W, gens, exact, cfg.precision_digits)
        else:
            vd = cls_.inertial_status(tau, M, gens, exact, cfg.precision_digits)
        _emit(cfg, vd.to_json(), _verdict_lines(verb, [vd]))
    elif verb in ("D", "Dc"):
        M = _profile_from_args(args)
        st = cls_.D_structure(M, reg) if verb == "D" else cls_.Dc_structure(M, reg, cfg.precision_digits)
        _emit(cfg, st.to_json(), [f"{verb}(M) = {st}  ({st.exactness})"])
    elif verb == "r-diffeo":
        if args.file:
            W = load_cobordism(args.file)
            M, N = W.source, W.target
        else:
            M = _profile_from_args(args, "M")
            N = _profile_from_args(args, "N")
        vds = cls_.r_diffeo_conclusion(M, N)
        _emit(cfg, {"conclusions": [vd.to_json() for vd in vds]}, _verdict_lines("r-diffeo", vds))
    else:
        raise UserError(f"unknown classify verb {verb!r}")


# tables


def cmd_table(cfg: CliConfig, kind: str, max_n: int, cap: int = TABLE_CAP) -> None:
    if max_n < 1:
        raise UserError("max_n must be positive")
    if max_n > cap:
        raise UserError(f"max_n = {max_n} exceeds the cap {cap}")
    reg = cfg.registry()
    rows = []
    for n in range(1, max_n + 1):
        r = rank(n)
        lat = bass_lattice_rank(n, cfg.precision_digits)
        if lat != r:
            raise CrossValidationError(f"Z/{n}: closed-form rank {r}, Bass lattice rank {lat}")
        row = {"n": n, "rank": r, "lattice_rank": lat}
        if kind == "dc":
            odd = cls_.Dc_structure(ManifoldProfile.make("M", 5, n), reg, cfg.precision_digits)
            even = cls_.Dc_structure(ManifoldProfile.make("M", 6, n), reg, cfg.precision_digits)
            row.update({"D": str(cls_.D_structure(ManifoldProfile.make("M", 5, n), reg)),
                        "Dc_odd_dim": str(odd), "Dc_even_dim": str(even),
                        "exactness": odd.exactness})
        rows.append(row)
    if kind == "ranks":
        lines = [f"{'n':>3}  {'rank':>4}  {'lattice':>7}"]
        lines += [f"{r['n']:>3}  {r['rank']:>4}  {r['lattice_rank']:>7}" for r in rows]
    else:
        lines = [f"{'n':>3}  {'rank':>4}  {'D':<6}  {'Dc odd':<6}  {'Dc even':<9}  exactness"]
        lines += [
            f"{r['n']:>3}  {r['rank']:>4}  {r['D']:<6}  {r['Dc_odd_dim']:<6}  {r['Dc_even_dim']:<9}  {r['exactness']}"
            for r in rows
        ]
    _emit(cfg, {"kind": kind, "rows": rows}, lines)


# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=int, default=argparse.SUPPRESS,
                        help=f"working precision in decimal digits (default {DEFAULT_PRECISION})")
    common.add_argument("--registry", default=argparse.SUPPRESS,
                        help=f"generator registry JSON (overrides ${REGISTRY_ENV})")
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)

    group_opts = argparse.ArgumentParser(add_help=False)
    group_opts.add_argument("--n", type=int, default=1, help="order of the cyclic fundamental group")
    group_opts.add_argument("--epsilon", type=int, choices=(1, -1), default=1,
                            help="orientation character on the generator")

    p = argparse.ArgumentParser(prog="wh", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    info = sub.add_parser("info", parents=[common], help="rank and generators of Wh(Z/n)")
    info.add_argument("n", type=int)
    info.add_argument("--epsilon", type=int, choices=(1, -1), default=1)

    cl = sub.add_parser("class", parents=[common, group_opts], help="evaluate a group ring element")
    cl.add_argument("expr")

    cob = sub.add_parser("cob", parents=[common], help="operate on cobordism JSON files")
    cob.add_argument("verb", choices=("compose", "dual", "invert", "torsion", "is-s"))
    cob.add_argument("files", nargs="+")
    cob.add_argument("--out", help="also write the resulting cobordism JSON here")

    cf = sub.add_parser("classify", parents=[common, group_opts], help="theorem-backed verdicts")
    cf.add_argument("verb", choices=("decomposable", "c-decomposable", "inertial", "D", "Dc", "r-diffeo"))
    cf.add_argument("file", nargs="?", help="cobordism JSON (instead of --dim/--n/--torsion)")
    cf.add_argument("--dim", type=int)
    cf.add_argument("--torsion", help="torsion as a unit, e.g. '1 - t - t^4'")
    cf.add_argument("--flag", action="append", help="profile flag set to true (repeatable)")

    tb = sub.add_parser("table", parents=[common], help="rank or D_c tables, cross-validated")
    tb.add_argument("kind", choices=("ranks", "dc"))
    tb.add_argument("max_n", type=int)
    tb.add_argument("--cap", type=int, default=TABLE_CAP)
    return p


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = CliConfig(
            getattr(args, "precision", DEFAULT_PRECISION),
            getattr(args, "registry", None),
            getattr(args, "format", "text"),
        )
        if args.command == "info":
            cmd_wh_info(cfg, args.n, args.epsilon)
        elif args.command == "class":
            cmd_class_eval(cfg, args.expr, args.n, args.epsilon)
        elif args.command == "cob":
            cmd_cob(cfg, args.verb, args.files, args.out)
        elif args.command == "classify":
            cmd_classify(cfg, args.verb, args)
        elif args.command == "table":
            cmd_table(cfg, args.kind, args.max_n, args.cap)
    except (CrossValidationError, ArithmeticError) as exc:
        if isinstance(exc, PrecisionError):
            print(f"wh: error: {exc}", file=sys.stderr)
            return 1
        print(f"wh: internal error: {exc}", file=sys.stderr)
        return 2
    except (UserError, ValueError) as exc:
        print(f"wh: error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
