"""Command-line interface.

Exit codes: 0 success, 2 invalid input, 3 a requested certificate failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import List, Optional

from . import __version__
from .cache import ENV_VAR, load_root_table
from .classify import (
    gc_pairs_compact,
    gc_subsets,
    root_action,
    symmetric_closed_subsets,
)
from .errors import CapExceeded, GCStructuresError, InvalidPartition, UnsupportedType
from .moduli import build_moduli_graph
from .nilpotent_sl import (
    Partition,
    centralizer_nilpotent,
    certify_pair_centralizer_zero,
    certify_slice_generation,
    gc_params_nilpotent,
    probe_prop_ij,
    triple_from_partition,
)
from .rootsys import (
    DEFAULT_BUDGET,
    DEFAULT_MAX_RANK,
    RootSubset,
    RootSystem,
    build_root_system,
    enumerate_closed_subsets,
    is_closed,
    is_parabolic_subset,
    is_symmetric,
    parse_type,
    span_rank,
    split_subset,
)

EXIT_INPUT = 2
EXIT_CERT = 3


class InputError(GCStructuresError, ValueError):
    """Malformed command-line input."""


def _root_system(args) -> RootSystem:
    series, rank = parse_type(args.type)
    return build_root_system(series, rank, max_rank=args.rank_cap)


def parse_isotropy(rs: RootSystem, spec: str) -> RootSubset:
    """``"cartan"`` or a comma-separated root list such as ``+a1,-a1``."""
    spec = (spec or "cartan").strip()
    if spec.lower() in ("cartan", "h", ""):
        return rs.empty()
    try:
        S = rs.subset(rs.parse_root(tok) for tok in spec.split(","))
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if not is_symmetric(S) or not is_closed(S):
        raise InputError(f"isotropy roots {S!r} are not symmetric and closed")
    return S


def _emit(payload, rows: Optional[List[dict]], fmt: str, out) -> None:
    if fmt == "csv":
        if rows is None:
            raise InputError("csv output is not available for this command")
        buf = io.StringIO()
        keys = list(rows[0].keys()) if rows else []
        w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in r.items()})
        out.write(buf.getvalue())
    else:
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


# ---------------------------------------------------------------------------


def cmd_roots(args, out) -> int:
    rs = _root_system(args)
    table = load_root_table(args.cache_dir, rs)
    closed = enumerate_closed_subsets(rs, budget=args.budget, jobs=args.jobs)
    rows = [
        {"index": k, "root": rs.root_name(k), "coordinates": list(r), "height": sum(r)}
        for k, r in enumerate(rs.roots)
    ]
    payload = {
        "type": rs.label,
        "rank": rs.rank,
        "cartan_matrix": table["cartan_matrix"],
        "num_roots": len(rs.roots),
        "roots": rows,
        "closed_subsets": len(closed),
        "parabolic_subsets": sum(1 for S in closed if is_parabolic_subset(S)),
        "symmetric_closed_subsets": len(symmetric_closed_subsets(rs)),
    }
    _emit(payload, rows, args.format, out)
    return 0


def cmd_classify(args, out) -> int:
    rs = _root_system(args)
    iso = parse_isotropy(rs, args.isotropy)
    if args.sigma == "compact":
        rows = [fam.as_dict() for fam in gc_pairs_compact(rs, iso, jobs=args.jobs)]
    else:
        act = root_action(rs, args.sigma)
        rows = []
        free = rs.rank - span_rank(iso)
        for A in gc_subsets(rs, act, iso):
            A0, _ = split_subset(A)
            inter = [k for k in A.indices() if act[k] in A and k not in iso]
            rows.append(
                {
                    "subset_mask": A.mask,
                    "subset": A.names(),
                    "parabolic": is_parabolic_subset(A),
                    "levi_core": A0.mask,
                    "phi_space_dim": free,
                    "gc_predicate": (
                        "phi(coroot) != conj(phi(sigma coroot)) for "
                        + ", ".join(rs.root_name(k) for k in inter if rs.is_positive(k))
                        if inter
                        else "true"
                    ),
                }
            )
    payload = {
        "type": rs.label,
        "sigma": args.sigma,
        "isotropy": iso.names(),
        "count": len(rows),
        "rows": rows,
    }
    _emit(payload, rows, args.format, out)
    return 0


def cmd_moduli(args, out) -> int:
    rs = _root_system(args)
    iso = parse_isotropy(rs, args.isotropy)
    g = build_moduli_graph(rs, iso, jobs=args.jobs)
    if args.format == "dot":
        out.write(g.to_dot())
        return 0
    payload = g.to_json()
    payload["num_nodes"] = len(g.nodes)
    payload["component_sizes"] = g.component_sizes()
    _emit(payload, [n.as_dict() for n in g.nodes], args.format, out)
    return 0


def cmd_nilpotent(args, out) -> int:
    n = args.n
    lam = Partition.parse(args.partition or str(n), n)
    triple = triple_from_partition(n, lam)
    Z = centralizer_nilpotent(n, lam)
    params = gc_params_nilpotent(n, lam)
    report = {
        "n": n,
        "partition": str(lam),
        "triple_ok": triple.relations_hold(),
        "dim_Ze": Z.dim,
        "pair_cert": certify_pair_centralizer_zero(n),
        "slice_cert": certify_slice_generation(n, lam),
        "zz_dim": len(params.basis),
    }
    ok = report["triple_ok"] and report["pair_cert"] and report["slice_cert"]
    if args.probe_trials:
        probe = probe_prop_ij(n, lam, args.probe_trials, args.seed)
        report["probe"] = {k: probe[k] for k in ("trials", "seed", "considered", "proper_subalgebras", "violations")}
        ok = ok and probe["violations"] == 0
    _emit(report, [dict(report, probe=report.get("probe"))], args.format, out)
    return 0 if ok else EXIT_CERT


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gcstructures", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats=("json", "csv")):
        sp.add_argument("--format", choices=formats, default="json")
        sp.add_argument("--jobs", type=int, default=1, help="worker processes for enumeration")
        sp.add_argument("--cache-dir", default=os.environ.get(ENV_VAR), help=f"cache directory (env {ENV_VAR})")
        sp.add_argument("--seed", type=int, default=0)

    def typed(sp):
        sp.add_argument("--type", required=True, help="root system type, e.g. A2, B3, G2")
        sp.add_argument("--rank-cap", "--max-rank", type=int, default=DEFAULT_MAX_RANK, dest="rank_cap")
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="maximum 2^|roots| to enumerate")

    sp = sub.add_parser("roots", help="roots, Cartan matrix and subset counts")
    typed(sp)
    common(sp)
    sp.set_defaults(func=cmd_roots)

    sp = sub.add_parser("classify", help="generalized complex pairs / subsets")
    typed(sp)
    sp.add_argument("--isotropy", default="cartan")
    sp.add_argument("--sigma", choices=("compact", "split"), default="compact")
    common(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("moduli", help="orbit graph of invariant Dirac structures")
    typed(sp)
    sp.add_argument("--isotropy", default="cartan")
    common(sp, ("json", "csv", "dot"))
    sp.set_defaults(func=cmd_moduli)

    sp = sub.add_parser("nilpotent", help="sl_n nilpotent orbit certificates")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--partition", default=None, help="comma-separated parts (default: regular)")
    sp.add_argument("--probe-trials", type=int, default=0)
    common(sp)
    sp.set_defaults(func=cmd_nilpotent)
    return p


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_INPUT
    if getattr(args, "cache_dir", None):
        os.environ[ENV_VAR] = args.cache_dir
    try:
        return args.func(args, out)
    except (UnsupportedType, InvalidPartition, CapExceeded, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
