"""Command-line front end: compute lattice objects and run the verifiers.

All I/O is JSON with scalars rendered as "p/q" strings and a top-level
schema tag.  Exit codes: 0 success, 2 malformed configuration, 3 violated
precondition.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .scalar import (ParamPoint, Scalar, ZERO, format_scalar, parse_scalar,
                     DegenerateSpectral)
from .lattice import dual_wavefunction, dwbp, wavefunction
from .symfunc import SymParams, o_lambda, sp_lambda
from .identities import IDENTITY_CATALOGUE, verify_all

SCHEMA = "1"

EXIT_OK = 0
EXIT_MALFORMED = 2
EXIT_PRECONDITION = 3


class ConfigError(Exception):
    """Malformed configuration (exit code 2)."""


class PreconditionError(Exception):
    """Well-formed configuration violating an operation precondition."""


def _load_params(spec: str) -> dict:
    if spec is None:
        raise ConfigError("--params is required for compute commands")
    try:
        if spec.lstrip().startswith("{"):
            return json.loads(spec)
        with open(spec) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError("cannot read parameter JSON: %s" % exc)


def _scalar_list(raw, name: str):
    if not isinstance(raw, list):
        raise ConfigError("%s must be a JSON array of scalar strings" % name)
    try:
        return [parse_scalar(x) for x in raw]
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError("bad scalar in %s: %s" % (name, exc))


def _site_array(raw, name: str, M: int):
    """Site parameter array padded with zeros up to index M."""
    if raw is None:
        return [ZERO] * (M + 1)
    vals = _scalar_list(raw, name)
    if len(vals) > M + 1:
        raise ConfigError("%s has more than M + 1 entries" % name)
    return vals + [ZERO] * (M + 1 - len(vals))


def build_point(kind: str, M: int, N: int, params: dict) -> ParamPoint:
    if kind not in ("I", "II"):
        raise ConfigError("kind must be I or II")
    alpha = _site_array(params.get("alpha"), "alpha", M)
    gamma = _site_array(params.get("gamma"), "gamma", M)
    if kind == "II":
        if "t" in params or "z" in params:
            raise ConfigError(
                "type II parameters must supply u and w, not t or z")
        if "u" not in params or "w" not in params:
            raise ConfigError("type II parameters require u and w")
        u = parse_scalar(params["u"])
        w = _scalar_list(params["w"], "w")
        if len(w) != N:
            raise ConfigError("w must have exactly N entries")
        t = -u * u
        z = [wj * wj for wj in w]
    else:
        if "u" in params or "w" in params:
            raise ConfigError("type I parameters take t and z, not u or w")
        if "t" not in params or "z" not in params:
            raise ConfigError("type I parameters require t and z")
        t = parse_scalar(params["t"])
        z = _scalar_list(params["z"], "z")
        if len(z) != N:
            raise ConfigError("z must have exactly N entries")
        u = w = None
    try:
        return ParamPoint(M, N, t, z, alpha, gamma, u, w)
    except ValueError as exc:
        raise PreconditionError(str(exc))


def _parse_int_list(raw: str, name: str):
    if raw is None:
        return None
    try:
        return [int(x) for x in raw.split(",") if x != ""]
    except ValueError:
        raise ConfigError("%s must be a comma-separated integer list" % name)


def _echo(args, extra: dict) -> dict:
    out = {"schema": SCHEMA, "command": args.command}
    out.update(extra)
    return out


def _run_compute(args) -> dict:
    params = _load_params(args.params)
    if args.M is None or args.N is None:
        raise ConfigError("--M and --N are required")
    point = build_point(args.kind, args.M, args.N, params)
    echo = {"kind": args.kind, "M": args.M, "N": args.N}
    try:
        if args.command == "compute-wavefunction":
            positions = _parse_int_list(args.positions, "--positions")
            if positions is None:
                raise ConfigError("--positions is required")
            value = wavefunction(args.kind, point, positions)
            echo["positions"] = positions
        elif args.command == "compute-dual":
            positions = _parse_int_list(args.positions, "--positions")
            if positions is None:
                raise ConfigError("--positions is required")
            value = dual_wavefunction(args.kind, point, positions)
            echo["positions"] = positions
        else:  # compute-dwbp
            if args.N != args.M:
                raise PreconditionError("domain-wall case needs N = M")
            value = dwbp(args.kind, point)
    except (ValueError, ZeroDivisionError) as exc:
        raise PreconditionError(str(exc))
    echo["value"] = format_scalar(value)
    return _echo(args, echo)


def _run_symfunc(args) -> dict:
    params = _load_params(args.params)
    lam = _parse_int_list(args.lam, "--lambda")
    if lam is None:
        raise ConfigError("--lambda is required")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)) \
            or any(p < 0 for p in lam):
        raise PreconditionError(
            "lambda must be weakly decreasing and non-negative")
    N = len(lam)
    top = (lam[0] if lam else 0) + N
    echo = {"lambda": lam}
    try:
        if args.command == "compute-sp":
            if "z" not in params:
                raise ConfigError("compute-sp requires z")
            zs = _scalar_list(params["z"], "z")
            if len(zs) != N:
                raise PreconditionError("need one z per part of lambda")
            alpha = _site_array(params.get("alpha"), "alpha", top)
            gamma = _site_array(params.get("gamma"), "gamma", top)
            value = sp_lambda(zs, SymParams(alpha, gamma, 0), tuple(lam))
        else:  # compute-whittaker
            if "t" in params or "z" in params:
                raise ConfigError(
                    "compute-whittaker takes u and w, not t or z")
            if "u" not in params or "w" not in params:
                raise ConfigError("compute-whittaker requires u and w")
            u = parse_scalar(params["u"])
            ws = _scalar_list(params["w"], "w")
            if len(ws) != N:
                raise PreconditionError("need one w per part of lambda")
            zs = [w * w for w in ws]
            sign = params.get("sign", "+")
            if sign not in ("+", "-"):
                raise ConfigError('sign must be "+" or "-"')
            alpha = _site_array(params.get("alpha"), "alpha", top)
            gamma = _site_array(params.get("gamma"), "gamma", top)
            value = o_lambda(zs, u, SymParams(alpha, gamma, 1), tuple(lam),
                             1 if sign == "+" else -1)
            echo["sign"] = sign
    except DegenerateSpectral as exc:
        raise PreconditionError(str(exc))
    except (ValueError, ZeroDivisionError) as exc:
        raise PreconditionError(str(exc))
    echo["value"] = format_scalar(value)
    return _echo(args, echo)


def _run_verify(args):
    seed = args.seed
    if seed is None:
        env = os.environ.get("REFLECTICE_SEED")
        if env is not None:
            try:
                seed = int(env)
            except ValueError:
                raise ConfigError("REFLECTICE_SEED must be an integer")
    if seed is None:
        raise ConfigError("verify needs --seed or REFLECTICE_SEED")
    reports = verify_all(seed, max_M=args.max_M, max_N=args.max_N,
                         jobs=args.jobs)
    body = {"schema": SCHEMA, "command": "verify", "seed": seed,
            "max_M": args.max_M, "max_N": args.max_N,
            "reports": [r.to_json() for r in reports]}
    ok = all(r.all_passed for r in reports)
    return body, EXIT_OK if ok else 1


def _run_list_identities(args) -> dict:
    return {"schema": SCHEMA, "command": "list-identities",
            "identities": [{"identity_id": iid, "description": desc}
                           for iid, desc in IDENTITY_CATALOGUE]}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reflectice",
        description="Exact computations for reflecting-boundary "
                    "free-fermionic six-vertex models.")
    sub = parser.add_subparsers(dest="command")
    compute = ("compute-wavefunction", "compute-dual", "compute-dwbp")
    for name in compute + ("compute-sp", "compute-whittaker"):
        p = sub.add_parser(name)
        p.add_argument("--kind", choices=("I", "II"), default="I")
        p.add_argument("--M", type=int)
        p.add_argument("--N", type=int)
        p.add_argument("--positions")
        p.add_argument("--lambda", dest="lam")
        p.add_argument("--params")
        p.add_argument("--output")
    v = sub.add_parser("verify")
    v.add_argument("--seed", type=int)
    v.add_argument("--max-M", dest="max_M", type=int, default=5)
    v.add_argument("--max-N", dest="max_N", type=int, default=3)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--output")
    li = sub.add_parser("list-identities")
    li.add_argument("--output")
    return parser


def _emit(body: dict, output) -> None:
    text = json.dumps(body, indent=2, sort_keys=True) + "\n"
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_MALFORMED
    try:
        if args.command in ("compute-wavefunction", "compute-dual",
                            "compute-dwbp"):
            body, code = _run_compute(args), EXIT_OK
        elif args.command in ("compute-sp", "compute-whittaker"):
            body, code = _run_symfunc(args), EXIT_OK
        elif args.command == "verify":
            body, code = _run_verify(args)
        else:
            body, code = _run_list_identities(args), EXIT_OK
    except ConfigError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_MALFORMED
    except PreconditionError as exc:
        sys.stderr.write("precondition violated: %s\n" % exc)
        return EXIT_PRECONDITION
    _emit(body, args.output)
    return code


if __name__ == "__main__":
    sys.exit(main())
