"""Command-line interface.

Exit codes separate operational failure from mathematical inconclusiveness:
a certificate full of Unknowns still exits 0; only bad input (2), network
failure in RemoteFirst mode (3), or a missing fixture in OfflineOnly mode
(4) are nonzero.
"""

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .arith import is_prime
from .cohom import central_scalar_shortcut, close_group, cohomology
from .curve import CurveModel, compute_invariants, minimal_model, parse_curve_spec
from .engine import analyze, certificate_to_json, certificate_to_text
from .errors import (
    InvalidInput,
    NetworkError,
    NotFound,
    ShaclassError,
)
from .localred import local_data
from .selmerdata import (
    OFFLINE_ONLY,
    REMOTE_FIRST,
    apply_user_overrides,
    default_config,
    fetch_curve_record,
    user_record,
)

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_NETWORK = 3
EXIT_FIXTURE_MISSING = 4


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="shaclass",
        description="Certified bounds relating Sha of an elliptic curve to the "
        "class group of its p-division field.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_curve_args(sp):
        sp.add_argument("--label", help="Cremona or LMFDB label")
        sp.add_argument(
            "--curve",
            help="coefficients a1,a2,a3,a4,a6 or short form [A,B]",
        )
        sp.add_argument("--offline", action="store_true", help="never touch the network")
        sp.add_argument("--fixtures", help="directory of fixture records")
        sp.add_argument("--cache-dir", help="cache directory (SHACLASS_CACHE_DIR)")
        sp.add_argument("--base-url", help="remote database endpoint")

    an = sub.add_parser("analyze", help="full pipeline: certificate on stdout")
    add_curve_args(an)
    an.add_argument("-p", type=int, required=True, help="odd prime p")
    an.add_argument("--sample-bound", type=int, default=1000)
    an.add_argument("--assume-wild-ramification", action="store_true")
    an.add_argument(
        "--no-assume-sha-finite",
        dest="assume_sha_finite",
        action="store_false",
        help="drop the finiteness-of-Sha assumption (odd Sha[p]-ranks allowed)",
    )
    an.add_argument("--format", choices=("text", "json"), default="text")
    an.add_argument("--mw-rank", type=int, help="user-supplied Mordell-Weil rank")
    an.add_argument("--sha-order", type=int, help="user-supplied Sha order")
    an.add_argument(
        "--sha-structure", help="user-supplied Sha invariant factors, e.g. 5,5"
    )
    an.add_argument("--batch", help="file with one label per line")
    an.add_argument("--workers", type=int, default=4)

    iv = sub.add_parser("invariants", help="b/c invariants, discriminant, j")
    add_curve_args(iv)

    ta = sub.add_parser("tate", help="local reduction data at bad primes")
    add_curve_args(ta)
    ta.add_argument("-v", type=int, help="single prime (default: all bad primes)")

    co = sub.add_parser("cohomology", help="H^0/H^1 of a matrix group on F_p^2")
    co.add_argument("--p", type=int, required=True)
    co.add_argument(
        "--generators",
        required=True,
        help="semicolon-separated matrices, each a,b,c,d row-major mod p",
    )
    co.add_argument("--cap", type=int, default=5000)
    return parser


def _store_config(args):
    return default_config(
        cache_dir=getattr(args, "cache_dir", None),
        fixtures_dir=getattr(args, "fixtures", None),
        base_url=getattr(args, "base_url", None),
    )


def _resolve_curve(args, config):
    """Returns (model, record, label). record is None without a label."""
    if bool(args.label) == bool(args.curve):
        raise InvalidInput("exactly one of --label / --curve is required")
    mode = OFFLINE_ONLY if args.offline else REMOTE_FIRST
    if args.curve:
        return parse_curve_spec(args.curve), None, None
    record = fetch_curve_record(args.label, mode, config)
    if record.ainvs is None:
        raise InvalidInput(f"record for {args.label} carries no coefficients")
    return CurveModel(*record.ainvs), record, args.label


def _user_overrides(args, model, record, label):
    structure = None
    if args.sha_structure:
        structure = tuple(int(s) for s in args.sha_structure.split(","))
    if record is not None:
        return apply_user_overrides(
            record,
            mw_rank=args.mw_rank,
            sha_order=args.sha_order,
            sha_structure=structure,
        )
    if args.mw_rank is not None or args.sha_order is not None or structure is not None:
        return user_record(
            label or "user-curve",
            model.ainvs(),
            args.mw_rank or 0,
            sha_order=args.sha_order,
            sha_structure=structure,
        )
    return None


def _analyze_one(args, config, label=None):
    if label is not None:
        ns = argparse.Namespace(**vars(args))
        ns.label, ns.curve = label, None
        args = ns
    model, record, lbl = _resolve_curve(args, config)
    record = _user_overrides(args, model, record, lbl)
    cert = analyze(
        model,
        args.p,
        record=record,
        sample_bound=args.sample_bound,
        assume_wild_ramification=args.assume_wild_ramification,
        assume_sha_finite=args.assume_sha_finite,
        label=lbl,
    )
    if args.format == "json":
        return certificate_to_json(cert)
    return certificate_to_text(cert)


def cmd_analyze(args):
    if not is_prime(args.p) or args.p == 2:
        raise InvalidInput(f"p must be an odd prime, got {args.p}")
    config = _store_config(args)
    if args.batch:
        with open(args.batch) as fh:
            labels = [line.strip() for line in fh if line.strip()]
        with ThreadPoolExecutor(max_workers=max(1, args.workers)) as pool:
            outputs = list(pool.map(lambda l: _analyze_one(args, config, l), labels))
        for out in outputs:
            sys.stdout.write(out)
        return EXIT_OK
    sys.stdout.write(_analyze_one(args, config))
    return EXIT_OK


def cmd_invariants(args):
    config = _store_config(args)
    model, _record, label = _resolve_curve(args, config)
    inv = compute_invariants(model)
    mm = minimal_model(model)
    print(f"curve {label or model}")
    print(f"  b2, b4, b6, b8 = {inv.b2}, {inv.b4}, {inv.b6}, {inv.b8}")
    print(f"  c4, c6 = {inv.c4}, {inv.c6}")
    print(f"  disc = {inv.disc}")
    print(f"  j = {inv.j}")
    print(f"  minimal model: {mm}")
    return EXIT_OK


def cmd_tate(args):
    config = _store_config(args)
    model, _record, label = _resolve_curve(args, config)
    print(f"curve {label or model}")
    if args.v is not None:
        data = {args.v: local_data(model, args.v)}
    else:
        data = local_data(model)
    for q, d in sorted(data.items()):
        print(
            f"  v = {q}: {d.kodaira} ({d.reduction_class}), c_v = {d.c_v}, "
            f"v(disc_min) = {d.val_delta_min}, f = {d.conductor_exponent}"
        )
    return EXIT_OK


def cmd_cohomology(args):
    p = args.p
    if not is_prime(p) or p == 2:
        raise InvalidInput(f"p must be an odd prime, got {p}")
    gens = []
    for part in args.generators.split(";"):
        entries = [int(s) for s in part.split(",")]
        if len(entries) != 4:
            raise InvalidInput(f"matrix needs 4 entries: {part!r}")
        gens.append(tuple(entries))
    group = close_group(gens, p, cap=args.cap)
    result = cohomology(group, use_shortcut=False)
    scalar = central_scalar_shortcut(group)
    print(f"group order = {len(group)}")
    print(f"h0 = {result.h0_dim}")
    print(f"h1 = {result.h1_dim}")
    if scalar is not None:
        print(f"central scalar {scalar} present: vanishing also follows without elimination")
    return EXIT_OK


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID_INPUT if exc.code else EXIT_OK
    handlers = {
        "analyze": cmd_analyze,
        "invariants": cmd_invariants,
        "tate": cmd_tate,
        "cohomology": cmd_cohomology,
    }
    try:
        return handlers[args.command](args)
    except NotFound as err:
        print(f"error: {err}", file=sys.stderr)
        offline = getattr(args, "offline", False) or os.environ.get("SHACLASS_OFFLINE") == "1"
        return EXIT_FIXTURE_MISSING if offline else EXIT_INVALID_INPUT
    except NetworkError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_NETWORK
    except (InvalidInput, ShaclassError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INVALID_INPUT


if __name__ == "__main__":
    sys.exit(main())
