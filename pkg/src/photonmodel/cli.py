"""Command-line front end.

Every subcommand prints one JSON report on stdout.  Exit status is 0 on
success, 2 for invalid input and 1 for anything else.  Vectors are given as
comma-separated triples; use ``--k=-1,0,0`` when the first entry is negative.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

import numpy as np

from . import io, schrodinger, tensor, toymodels
from .helicity import helicity_basis

VERDICT = (
    "Reading Psi = E + iB identifies spin space with physical space; the "
    "agreement shown here is formal and can not be considered to be a "
    "derivation of Maxwell's equations."
)


class UsageError(ValueError):
    pass


def _triple(text: str):
    try:
        parts = [float(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected three comma-separated numbers, got {text!r}") from None
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected three comma-separated numbers, got {text!r}")
    return parts


def _read_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise UsageError(f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: malformed JSON ({exc})") from None


def _load_tensor(path: str):
    doc = _read_json(path)
    return io.tensor_from_dict(doc), io.tensor_k(doc)


# ------------------------------------------------------------- handlers


def cmd_tensor(args) -> dict:
    action = args.action
    if action == "make":
        if args.k is None or args.helicity is None or args.omega is None:
            raise UsageError("tensor make requires --k, --helicity and --omega")
        p = tensor.photon_snapshot(args.k, args.helicity, args.omega, args.t, args.phase)
        out = io.tensor_to_dict(p)
        out["helix_length"] = tensor.helix_length(p.omega)
        return out
    if action == "boost":
        if args.beta is None:
            raise UsageError("tensor boost requires --beta")
        lb = tensor.LorentzBoost(args.beta)
    if args.input is None:
        raise UsageError(f"tensor {action} requires --in FILE")
    f, k = _load_tensor(args.input)
    base = f.tensor if isinstance(f, tensor.PhotonTensor) else f
    if action == "boost":
        if isinstance(f, tensor.PhotonTensor):
            return io.tensor_to_dict(tensor.boost_photon(f, lb))
        k_in = k if k is not None else [1.0, 0.0, 0.0]
        g, k_out = tensor.boost(f, k_in, lb)
        return io.tensor_to_dict(g, k_out if k is not None else None)
    if action == "dual":
        return io.tensor_to_dict(tensor.dual(base))
    if action == "invariants":
        trace, ff, ffstar = tensor.invariants(base)
        return {"trace": trace, "ff": ff, "ffstar": ffstar}
    if action == "symmetry":
        return io.tensor_to_dict(tensor.discrete_symmetry(base, args.op))
    if action == "transversality":
        kk = args.k if args.k is not None else k
        if kk is None:
            raise UsageError("tensor transversality needs --k or a 'k' field in the input")
        r1, r2 = tensor.transversality_residual(base, kk)
        return {"residual": r1, "dual_residual": r2}
    raise UsageError(f"unknown tensor action {action!r}")


def cmd_helicity(args) -> dict:
    return io.basis_to_dict(helicity_basis(args.k))


def cmd_evolve(args) -> dict:
    cfg_doc = _read_json(args.config)
    cfg = io.config_from_dict(cfg_doc)
    try:
        state = io.load_state(args.state)
    except FileNotFoundError:
        raise UsageError(f"no such file: {args.state}") from None
    if state.representation != schrodinger.MOMENTUM:
        state = schrodinger.to_momentum(state)
    rows = []
    final = schrodinger.evolve(state, cfg, rows)
    Path(args.out).write_text(io.observables_csv(rows))
    if args.final is not None:
        io.save_state(final, args.final)
    first, last = rows[0], rows[-1]
    return {
        "grid": {"n": state.grid.n, "p_max": state.grid.p_max},
        "config": {"dt": cfg.dt, "steps": cfg.steps, "project_transverse": cfg.project_transverse,
                   "observables_every": cfg.observables_every},
        "rows": len(rows),
        "final": last,
        "drift": {key: abs(last[key] - first[key]) for key in ("norm", "energy", "helicity")},
        "observables_csv": str(args.out),
    }


def cmd_toymodel(args) -> dict:
    params = {}
    if args.model == "ring":
        if args.k is None:
            raise UsageError("ring model requires --k")
        params["k"] = args.k
    elif args.k is not None:
        raise UsageError("--k only applies to the ring model")
    return toymodels.report(toymodels.make_model(args.model, args.omega0, **params)).as_dict()


def cmd_maxwell_demo(args) -> dict:
    doc = _read_json(args.config)
    grid = schrodinger.MomentumGrid(doc.get("n", 32), doc.get("p_max", 8.0))
    p0 = io._vec(doc, "p0", "maxwell-demo config")
    sigma = float(doc.get("sigma", grid.p_max / 16))
    helicity = int(doc.get("helicity", 1))
    dt = float(io._field(doc, "dt", "maxwell-demo config"))
    state = schrodinger.to_position(schrodinger.gaussian_packet(grid, p0, sigma, helicity))
    coarse = schrodinger.maxwell_residual(state, dt)
    fine = schrodinger.maxwell_residual(state, dt / 2)
    return {
        "packet": {"n": grid.n, "p_max": grid.p_max, "p0": p0, "sigma": sigma, "helicity": helicity},
        "residuals": [coarse, fine],
        "curl_ratio": {
            "curl_e": coarse["curl_e_residual"] / fine["curl_e_residual"],
            "curl_b": coarse["curl_b_residual"] / fine["curl_b_residual"],
        },
        "note": VERDICT,
    }


TOLERANCES = {
    "tensor": {"construct": tensor.CONSTRUCT_TOL, "transform": tensor.TRANSFORM_TOL},
    "helicity": {"closed_form_threshold": 1e-6},
    "evolve": {"transverse": schrodinger.TRANSVERSE_TOL},
    "toymodel": {"quad_rtol": toymodels.QUAD_RTOL},
    "maxwell-demo": {"transverse": schrodinger.TRANSVERSE_TOL},
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="photonmodel", description=__doc__.splitlines()[0])
    parser.add_argument("--no-timing", action="store_true", help="omit wall time so reports are byte-identical")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tensor", help="photon tensor algebra")
    p.add_argument("action", choices=["make", "boost", "dual", "invariants", "symmetry", "transversality"])
    p.add_argument("--k", type=_triple)
    p.add_argument("--helicity", type=int, choices=[1, -1])
    p.add_argument("--omega", type=float)
    p.add_argument("--phase", type=float, default=0.0)
    p.add_argument("--t", type=float, default=0.0, help="snapshot time for make")
    p.add_argument("--beta", type=_triple)
    p.add_argument("--op", default="P", help="symmetry word from P, T, C, D")
    p.add_argument("--in", dest="input")
    p.set_defaults(handler=cmd_tensor)

    p = sub.add_parser("helicity", help="helicity eigenbasis for a direction")
    p.add_argument("--k", type=_triple, required=True)
    p.set_defaults(handler=cmd_helicity)

    p = sub.add_parser("evolve", help="evolve a state file and write observables CSV")
    p.add_argument("--config", required=True)
    p.add_argument("--state", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--final", help="optional path for the evolved state")
    p.set_defaults(handler=cmd_evolve)

    p = sub.add_parser("toymodel", help="energy and spin of a rotating toy model")
    p.add_argument("--model", choices=sorted(toymodels.MODELS), required=True)
    p.add_argument("--omega0", type=float, required=True)
    p.add_argument("--k", type=float)
    p.set_defaults(handler=cmd_toymodel)

    p = sub.add_parser("maxwell-demo", help="residuals of the Psi = E + iB reading")
    p.add_argument("--config", required=True)
    p.set_defaults(handler=cmd_maxwell_demo)
    return parser


def dispatch(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    start = time.perf_counter()
    try:
        outputs = args.handler(args)
    except ValueError as exc:
        # SchemaError, UsageError and domain validation errors
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:
        print(f"error: internal: {exc!r}", file=sys.stderr)
        return 1
    run = {
        "command": args.command,
        "argv": list(argv) if argv is not None else sys.argv[1:],
        "tolerances": TOLERANCES[args.command],
    }
    if not args.no_timing:
        run["wall_time_s"] = time.perf_counter() - start
    outputs["run"] = run
    print(io.dumps(_plain(outputs)))
    return 0


def _plain(obj):
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.generic):
        return obj.item()
    return obj


def main() -> None:
    sys.exit(dispatch())
