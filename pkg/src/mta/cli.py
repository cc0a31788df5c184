"""Command line interface.

Subcommands mirror the library layers: partition combinatorics, the
free-boson engine, even-lattice module data, structure-constant corner
algebras, block descriptors, and a built-in self-verification battery.
Output is deterministic JSON by default (byte-identical across runs) or
plain text with --format text.  Exit codes: 0 success, 1 a verification or
validation reported failure, 2 usage errors (including desk-scale limits,
which --unsafe-no-limits lifts).  MTA_THREADS bounds worker threads for the
pairing-matrix computations.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import heisenberg as hb
from . import lattice as lat
from . import peirce as pc
from . import zhu
from .exact import frac_str, parse_frac
from .partitions import (
    LabeledPartition,
    enumerate_labeled_partitions,
    labeled_partition_count,
)

MAX_RANK = 4
MAX_DEGREE = 8
MAX_LATTICE_RANK = 4


@dataclass
class RunConfig:
    """Validated knobs shared by all subcommands."""

    format: str = "json"
    unsafe_no_limits: bool = False
    threads: int = 1
    seed: int = 0

    def check_heisenberg(self, parser, n: int, d: int):
        if self.unsafe_no_limits:
            return
        if n > MAX_RANK or d > MAX_DEGREE:
            parser.error(
                f"rank {n} / degree {d} exceeds the desk-scale limits "
                f"(rank <= {MAX_RANK}, degree <= {MAX_DEGREE}); "
                "pass --unsafe-no-limits to override"
            )

    def check_lattice(self, parser, rank: int):
        if self.unsafe_no_limits:
            return
        if rank > MAX_LATTICE_RANK:
            parser.error(
                f"lattice rank {rank} exceeds the desk-scale limit "
                f"(rank <= {MAX_LATTICE_RANK}); pass --unsafe-no-limits to override"
            )


def _threads_from_env(parser) -> int:
    raw = os.environ.get("MTA_THREADS", "").strip()
    if not raw:
        return 1
    try:
        value = int(raw)
    except ValueError:
        parser.error(f"MTA_THREADS must be a positive integer, got {raw!r}")
    if value < 1:
        parser.error(f"MTA_THREADS must be a positive integer, got {raw!r}")
    return value


def _emit(cfg: RunConfig, payload: dict, text_lines) -> None:
    if cfg.format == "json":
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def _load_json(parser, path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        parser.error(f"cannot read {path}: {exc}")


def _load_lattice(parser, cfg, path) -> lat.EvenLattice:
    try:
        lattice = lat.load_gram(path)
    except (OSError, ValueError) as exc:
        parser.error(f"cannot read gram file {path}: {exc}")
    cfg.check_lattice(parser, lattice.rank)
    return lattice


def _load_peirce(parser, path) -> pc.PeirceAlgebra:
    data = _load_json(parser, path)
    try:
        return pc.PeirceAlgebra.from_json_dict(data)
    except (KeyError, TypeError, ValueError) as exc:
        parser.error(f"malformed algebra file {path}: {exc}")


def _cmd_partitions(parser, cfg, args) -> int:
    n, m = args.rank, args.weight
    if args.action == "count":
        count = labeled_partition_count(n, m)
        _emit(
            cfg,
            {"rank": n, "weight": m, "count": count},
            [f"rank {n} weight {m}: {count} labeled partitions"],
        )
        return 0
    items = enumerate_labeled_partitions(n, m)
    _emit(
        cfg,
        {"rank": n, "weight": m, "items": [lp.to_json() for lp in items]},
        [repr(lp) for lp in items],
    )
    return 0


def _cmd_heisenberg(parser, cfg, args) -> int:
    n, d = args.rank, args.degree
    cfg.check_heisenberg(parser, n, d)
    if args.action == "identity":
        terms = hb.strong_identity(n, d)
        _emit(
            cfg,
            {"rank": n, "degree": d, "terms": hb.strong_identity_to_json(terms)},
            [f"{frac_str(c)}  {lp!r}" for lp, c in terms],
        )
        return 0
    if args.action == "verify":
        report = hb.verify_strong_identity(n, d, threads=cfg.threads)
        verdict = "verified" if report.ok else "FAILED"
        _emit(
            cfg,
            report.to_json(),
            [
                f"rank {n} degree {d}: strong identity {verdict} "
                f"(size {len(report.labels)}, diagonal {report.expected_diagonal})"
            ],
        )
        return 0 if report.ok else 1
    descriptor = zhu.heisenberg_zhu_descriptor(n, d)
    _emit(cfg, descriptor.to_json(), [descriptor.render_text()])
    return 0


def _cmd_lattice(parser, cfg, args) -> int:
    lattice = _load_lattice(parser, cfg, args.gram)
    cosets = lat.dual_cosets(lattice)
    if args.action == "cosets":
        _emit(
            cfg,
            {
                "rank": lattice.rank,
                "determinant": lattice.determinant(),
                "cosets": [
                    {"index": c.index, "vector": [frac_str(x) for x in c.vector]}
                    for c in cosets
                ],
            },
            [f"{c.index}: ({', '.join(frac_str(x) for x in c.vector)})" for c in cosets],
        )
        return 0
    if args.action == "weights":
        rows = [
            {
                "coset": c.index,
                "vector": [frac_str(x) for x in c.vector],
                "conformal_weight": frac_str(lat.conformal_weight(lattice, c.vector)),
            }
            for c in cosets
        ]
        _emit(
            cfg,
            {"weights": rows},
            [f"coset {r['coset']}: weight {r['conformal_weight']}" for r in rows],
        )
        return 0
    if not 0 <= args.coset < len(cosets):
        parser.error(f"coset index {args.coset} out of range 0..{len(cosets) - 1}")
    rep = cosets[args.coset]
    weight = lat.conformal_weight(lattice, rep.vector)
    dims = lat.graded_dims(lattice, rep.vector, args.max)
    _emit(
        cfg,
        {"coset": rep.index, "conformal_weight": frac_str(weight), "dims": dims},
        [f"coset {rep.index}: weight {frac_str(weight)}, dims {dims}"],
    )
    return 0


def _cmd_peirce(parser, cfg, args) -> int:
    algebra = _load_peirce(parser, args.algebra)
    if args.action == "validate":
        report = pc.validate_peirce(algebra)
        lines = [f"{name}: {'pass' if ok else 'FAIL'}" for name, ok in report.axioms.items()]
        if report.first_violation:
            lines.append(f"first violation: {report.first_violation}")
        _emit(cfg, report.to_json(), lines)
        return 0 if report.ok else 1
    d = args.degree
    if not 0 <= d <= algebra.max_degree:
        parser.error(f"degree {d} out of range 0..{algebra.max_degree}")
    if args.action == "zigzag":
        z = pc.zigzag(algebra, d)
        ideal = pc.zd_ideal(algebra, d)
        check = pc.action_through_A_check(z)
        star_rank = pc.Subspace((0, 0), algebra.dims[0][0], z.star).dim
        alg = z.as_algebra()
        associative = alg.is_associative()
        split = pc.ideal_unit_and_split(algebra, ideal)
        payload = {
            "degree": d,
            "dim": z.dim,
            "ideal_dim": ideal.dim,
            "star_rank": star_rank,
            "star_bijective": star_rank == z.dim == ideal.dim,
            "associative": associative,
            "action_through_corner": check.ok,
            "ideal_unital": split is not None,
        }
        if split is not None:
            payload["epsilon"] = [frac_str(x) for x in split.epsilon]
            payload["idempotent_ideal"] = split.idempotent_ideal
        ok = associative and check.ok
        _emit(
            cfg,
            payload,
            [f"{k}: {v}" for k, v in payload.items()],
        )
        return 0 if ok else 1
    # morita: roundtrip on the regular module of the degree-d component
    try:
        w_mod = pc.regular_module(algebra, d)
        report = pc.verify_roundtrip(algebra, d, w_mod)
    except ValueError as exc:
        _emit(cfg, {"degree": d, "ok": False, "error": str(exc)}, [f"FAILED: {exc}"])
        return 1
    payload = {"degree": d, **report.to_json()}
    _emit(
        cfg,
        payload,
        [f"{k}: {v}" for k, v in payload.items()],
    )
    return 0 if report.ok else 1


def _cmd_zhu(parser, cfg, args) -> int:
    if args.action == "rational":
        data = _load_json(parser, args.modules)
        try:
            modules = [
                zhu.SimpleModuleData(
                    label=str(item["label"]),
                    graded_dims=tuple(int(x) for x in item["graded_dims"]),
                    conformal_weight=(
                        parse_frac(item["conformal_weight"])
                        if item.get("conformal_weight") is not None
                        else None
                    ),
                )
                for item in data
            ]
            descriptor = zhu.rational_zhu_descriptor(modules, args.degree)
            support = zhu.zd_support(modules, args.degree)
        except (KeyError, TypeError, ValueError) as exc:
            parser.error(f"bad module data: {exc}")
        payload = descriptor.to_json()
        payload["support"] = support
        _emit(cfg, payload, [descriptor.render_text(), f"support: {support}"])
        return 0
    if args.action == "heisenberg":
        cfg.check_heisenberg(parser, args.rank, args.degree)
        descriptor = zhu.heisenberg_zhu_descriptor(args.rank, args.degree)
        _emit(cfg, descriptor.to_json(), [descriptor.render_text()])
        return 0
    try:
        dims = [int(x) for x in args.dims.split(",")]
    except ValueError:
        parser.error(f"--dims expects a comma-separated integer list, got {args.dims!r}")
    try:
        exceptional = zhu.exceptional_degrees(dims, args.max)
    except ValueError as exc:
        parser.error(str(exc))
    lines = [f"exceptional degrees up to {args.max}: {exceptional}"]
    lines += [f"level {j}: degree component and corner ideal are zero rings" for j in exceptional]
    _emit(cfg, {"d_max": args.max, "exceptional": exceptional}, lines)
    return 0


def _selftest_checks(cfg: RunConfig, fast: bool):
    rng = random.Random(cfg.seed)

    def check_counts():
        for n in (1, 2, 3):
            for m in range(0, 9):
                if labeled_partition_count(n, m) != len(enumerate_labeled_partitions(n, m)):
                    return False, f"count mismatch at rank {n} weight {m}"
        return True, "counts equal enumeration sizes for rank <= 3, weight <= 8"

    def check_pairing_diagonal():
        ranges = {1: 4 if fast else 6, 2: 3 if fast else 4}
        for n, dmax in ranges.items():
            for d in range(dmax + 1):
                report = hb.verify_strong_identity(n, d, threads=cfg.threads)
                if not report.ok:
                    return False, f"pairing matrix not diagonal at rank {n} degree {d}"
        return True, f"pairing matrices diagonal with symmetry factors, ranges {ranges}"

    def check_associativity():
        trials = 10 if fast else 25
        for _ in range(trials):
            n = rng.choice((1, 2))
            words = []
            for _w in range(3):
                modes = [
                    hb.Mode(rng.randint(1, n), rng.randint(-3, 3))
                    for _m in range(rng.randint(0, 3))
                ]
                words.append(hb.ModeElement.from_modes(n, modes))
            a, b, c = words
            if (a * b) * c != a * (b * c):
                return False, "associativity failed on a random triple"
        return True, f"{trials} random triples associate"

    def check_matrix_model():
        p = pc.matrix_model([[1, 2], [1, 1], [2, 1]])
        if not pc.validate_peirce(p).ok:
            return False, "matrix model failed validation"
        for d in range(p.max_degree + 1):
            if not pc.verify_roundtrip(p, d, pc.regular_module(p, d)).ok:
                return False, f"roundtrip failed at degree {d}"
        return True, "matrix model validates and regular modules roundtrip"

    def check_truncation():
        entries = None
        for point in ([Fraction(0)], [Fraction(1)], [Fraction(-3, 2)]):
            p = pc.heisenberg_truncation(1, 2, point)
            if not pc.validate_peirce(p).ok:
                return False, f"truncation failed validation at point {point}"
            if entries is None:
                entries = p.entries()
            elif p.entries() != entries:
                return False, "structure constants depend on the evaluation point"
        return True, "rank-1 truncations validate and agree across three points"

    def check_lattice():
        lattice = lat.EvenLattice.from_rows([[8]])
        cosets = lat.dual_cosets(lattice)
        weights = [lat.conformal_weight(lattice, c.vector) for c in cosets]
        expect = [Fraction(x) for x in ("0", "1/16", "1/4", "9/16", "1", "9/16", "1/4", "1/16")]
        if weights != expect:
            return False, f"weights {weights} differ from {expect}"
        if lat.graded_dims(lattice, cosets[4].vector, 0) != [2]:
            return False, "level-0 dimension of the half-shift coset is not 2"
        return True, "determinant-8 rank-1 example reproduces its weight table"

    return [
        ("partition-counts", check_counts),
        ("pairing-diagonal", check_pairing_diagonal),
        ("random-associativity", check_associativity),
        ("matrix-model", check_matrix_model),
        ("heisenberg-truncation", check_truncation),
        ("lattice-example", check_lattice),
    ]


def _cmd_selftest(parser, cfg, args) -> int:
    results = []
    ok_all = True
    for name, fn in _selftest_checks(cfg, args.fast):
        ok, detail = fn()
        ok_all &= ok
        results.append({"name": name, "ok": ok, "detail": detail})
    _emit(
        cfg,
        {"ok": ok_all, "seed": cfg.seed, "checks": results},
        [f"{'PASS' if r['ok'] else 'FAIL'}  {r['name']}: {r['detail']}" for r in results]
        + [f"selftest: {'ok' if ok_all else 'FAILED'}"],
    )
    return 0 if ok_all else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument(
        "--unsafe-no-limits",
        action="store_true",
        help="lift the desk-scale rank/degree limits",
    )

    parser = argparse.ArgumentParser(prog="mta", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_part = sub.add_parser("partitions", help="partition combinatorics")
    part_sub = p_part.add_subparsers(dest="action", required=True)
    for name in ("count", "list"):
        sp = part_sub.add_parser(name, parents=[common])
        sp.add_argument("--rank", type=int, default=1)
        sp.add_argument("--weight", type=int, required=True)

    p_h = sub.add_parser("heisenberg", help="free-boson engine")
    h_sub = p_h.add_subparsers(dest="action", required=True)
    for name in ("identity", "verify", "zhu"):
        sp = h_sub.add_parser(name, parents=[common])
        sp.add_argument("--rank", type=int, default=1)
        sp.add_argument("--degree", type=int, required=True)

    p_l = sub.add_parser("lattice", help="even-lattice module data")
    l_sub = p_l.add_subparsers(dest="action", required=True)
    for name in ("cosets", "weights", "dims"):
        sp = l_sub.add_parser(name, parents=[common])
        sp.add_argument("--gram", required=True, help="gram file: rank line, then rows")
        if name == "dims":
            sp.add_argument("--coset", type=int, required=True)
            sp.add_argument("--max", type=int, default=0)

    p_p = sub.add_parser("peirce", help="structure-constant corner algebras")
    p_sub = p_p.add_subparsers(dest="action", required=True)
    for name in ("validate", "zigzag", "morita"):
        sp = p_sub.add_parser(name, parents=[common])
        sp.add_argument("--algebra", required=True, help="algebra JSON file")
        if name != "validate":
            sp.add_argument("--degree", type=int, required=True)

    p_z = sub.add_parser("zhu", help="block descriptors")
    z_sub = p_z.add_subparsers(dest="action", required=True)
    sp = z_sub.add_parser("rational", parents=[common])
    sp.add_argument("--modules", required=True, help="JSON list of simple module data")
    sp.add_argument("--degree", type=int, required=True)
    sp = z_sub.add_parser("heisenberg", parents=[common])
    sp.add_argument("--rank", type=int, default=1)
    sp.add_argument("--degree", type=int, required=True)
    sp = z_sub.add_parser("exceptional", parents=[common])
    sp.add_argument("--dims", required=True, help="comma-separated level dimensions")
    sp.add_argument("--max", type=int, required=True)

    sp = sub.add_parser("selftest", parents=[common], help="built-in verification battery")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--fast", action="store_true")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(
        format=args.format,
        unsafe_no_limits=args.unsafe_no_limits,
        threads=_threads_from_env(parser),
        seed=getattr(args, "seed", 0),
    )
    if args.command == "partitions":
        return _cmd_partitions(parser, cfg, args)
    if args.command == "heisenberg":
        return _cmd_heisenberg(parser, cfg, args)
    if args.command == "lattice":
        return _cmd_lattice(parser, cfg, args)
    if args.command == "peirce":
        return _cmd_peirce(parser, cfg, args)
    if args.command == "zhu":
        return _cmd_zhu(parser, cfg, args)
    if args.command == "selftest":
        return _cmd_selftest(parser, cfg, args)
    parser.error(f"unknown command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
