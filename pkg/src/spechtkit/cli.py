"""Command-line interface.

One binary with subcommands; all output goes to stdout, diagnostics to
stderr with machine-parsable one-line prefixes.  Exit codes: 0 success,
2 usage/domain/io error, 3 resource-guard refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import fields, replace

from . import __version__
from .cache import CacheStore
from .chow import chow_graded_dimensions, chow_presentation, hilbert_series_text
from .coefficients import (
    kronecker_coefficient,
    kronecker_matrix,
    lr_coefficient,
    lr_matrix,
    plethysm_coefficient,
    plethysm_matrix,
)
from .combinatorics import Partition, classify_pair, format_word, word_from_text
from .config import Limits, limits_from_env
from .conjectures import (
    check_conjecture1,
    check_conjecture2,
    cyclic_orbit_structures,
    derangement_excedance_counts,
)
from .errors import DomainError, ResourceLimitError
from .matroid import (
    LinearMatroid,
    format_poly1,
    format_poly2,
    poly1_to_json,
    poly2_to_json,
    specht_matroid,
)
from .polytope import polytope_from_columns, root_polytope_structure_check
from .specht import SpechtMatrix, specht_matrix


def _add_limit_flags(parser: argparse.ArgumentParser) -> None:
    for f in fields(Limits):
        flag = "--" + f.name.replace("_", "-")
        parser.add_argument(flag, type=int, default=None, help=argparse.SUPPRESS)


def _resolve_limits(args) -> Limits:
    limits = limits_from_env()
    overrides = {}
    for f in fields(Limits):
        value = getattr(args, f.name, None)
        if value is not None:
            if value <= 0:
                raise DomainError(f"guard {f.name} must be positive")
            overrides[f.name] = value
    return replace(limits, **overrides) if overrides else limits


def _parse_partition(text: str) -> Partition:
    return Partition.parse(text)


def _load_matrix_columns(path: str):
    """Columns + labels from a matrix JSON file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise IOError(f"cannot read {path}: {exc}") from exc
    except ValueError as exc:
        raise IOError(f"invalid JSON in {path}: {exc}") from exc
    entries = data.get("entries")
    if not isinstance(entries, list) or not entries:
        raise DomainError(f"{path}: missing entries")
    n_cols = len(entries[0])
    labels = data.get("col_labels") or list(range(n_cols))
    columns = [tuple(int(row[j]) for row in entries) for j in range(n_cols)]
    return tuple(labels), tuple(columns)


def _matroid_from_args(args, limits: Limits) -> LinearMatroid:
    if getattr(args, "matrix", None):
        labels, columns = _load_matrix_columns(args.matrix)
        return LinearMatroid(labels, columns, limits)
    if getattr(args, "lam", None):
        m = specht_matroid(_parse_partition(args.lam))
        return LinearMatroid(m.labels, m.columns, limits)
    raise DomainError("provide --lambda or --matrix")


def _columns_from_args(args, limits: Limits):
    if getattr(args, "matrix", None):
        labels, columns = _load_matrix_columns(args.matrix)
        return labels, columns
    if getattr(args, "lam", None):
        mat = specht_matrix(_parse_partition(args.lam), limits)
        return mat.col_labels, tuple(mat.columns())
    raise DomainError("provide --lambda or --matrix")


def _specht_matrix_cached(p: Partition, limits: Limits, cache_dir: str | None):
    if not cache_dir:
        return specht_matrix(p, limits)
    store = CacheStore(cache_dir)
    key = "specht-matrix-" + str(p)
    payload = store.get(key)
    if payload is not None:
        return SpechtMatrix.from_json_dict(payload)
    mat = specht_matrix(p, limits)
    store.put(key, mat.to_json_dict())
    return mat


def _emit(args, text_value, json_value, csv_value=None) -> None:
    fmt = getattr(args, "format", "text") or "text"
    if fmt == "json":
        print(json.dumps(json_value, indent=2))
    elif fmt == "csv":
        if csv_value is None:
            raise DomainError("csv format not available for this command")
        sys.stdout.write(csv_value)
    else:
        print(text_value)


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_specht_matrix(args, limits):
    p = _parse_partition(args.lam)
    mat = _specht_matrix_cached(p, limits, args.cache_dir)
    header = " ".join(format_word(w) for w in mat.col_labels)
    lines = ["# columns: " + header]
    for label, row in zip(mat.row_labels, mat.entries):
        lines.append(
            format_word(label) + ": " + " ".join(f"{x:2d}" for x in row)
        )
    _emit(args, "\n".join(lines), mat.to_json_dict(), mat.to_csv())


def _cmd_classify(args, limits):
    w1 = word_from_text(args.w1)
    w2 = word_from_text(args.w2)
    cls = classify_pair(w1, w2)
    if not cls.rearrangeable:
        _emit(
            args,
            "not complementary-rearrangeable",
            {"rearrangeable": False},
        )
        return
    _emit(
        args,
        f"partition {cls.partition}; complementary: {cls.is_complementary}",
        {
            "rearrangeable": True,
            "partition": list(cls.partition.parts),
            "is_complementary": cls.is_complementary,
        },
    )


def _cmd_matroid(args, limits):
    m = _matroid_from_args(args, limits)
    if args.action == "flats":
        flats = [sorted(format_word(x) if isinstance(x, tuple) else x for x in f) for f in m.flats()]
        text = "\n".join(str(f) for f in flats)
        _emit(args, text, flats)
    elif args.action == "circuits":
        circ = [
            sorted(format_word(x) if isinstance(x, tuple) else x for x in c)
            for c in m.circuits(args.max_size)
        ]
        _emit(args, "\n".join(str(c) for c in circ), circ)
    elif args.action == "bases":
        count = m.bases_count()
        _emit(args, str(count), {"bases": count})
    elif args.action == "tutte":
        t = m.tutte_polynomial(args.strategy)
        _emit(args, format_poly2(t), poly2_to_json(t))
    elif args.action == "charpoly":
        c = m.characteristic_polynomial()
        _emit(args, format_poly1(c), poly1_to_json(c))


def _cmd_chow(args, limits):
    m = _matroid_from_args(args, limits)
    if args.action == "dims":
        dims = chow_graded_dimensions(m)
        _emit(
            args,
            hilbert_series_text(dims),
            {"dims": dims, "hilbert": hilbert_series_text(dims)},
        )
    else:
        pres = chow_presentation(m)
        if args.format == "macaulay2-text":
            print(pres.to_macaulay2())
        else:
            _emit(args, pres.to_macaulay2(), pres.to_json_dict())


def _label_text(lab):
    return format_word(lab) if isinstance(lab, tuple) else str(lab)


def _cmd_polytope(args, limits):
    if args.action == "root-check":
        if args.k is None:
            raise DomainError("root-check requires --k")
        rep = root_polytope_structure_check(args.k, limits)
        claims = [
            ("vertices", rep.n_vertices, args.k * (args.k - 1)),
            ("edges", rep.n_edges, (args.k - 2) * (args.k - 1) * args.k),
            ("facets", rep.n_facets, 2**args.k - 2),
            ("lattice_points", rep.n_lattice_points, args.k * (args.k - 1) + 1),
        ]
        lines = []
        for name, got, want in claims:
            ok = "pass" if got == want else "FAIL"
            lines.append(f"{name}: {got} (expected {want}) {ok}")
        lines.append(f"facet_grids: {'pass' if rep.facet_grids_ok else 'FAIL'}")
        lines.append(
            f"matches_pair_matrix_columns: {rep.matches_pair_matrix_columns}"
        )
        _emit(
            args,
            "\n".join(lines),
            {
                "k": rep.k,
                "dim": rep.dim,
                "vertices": rep.n_vertices,
                "edges": rep.n_edges,
                "facets": rep.n_facets,
                "lattice_points": rep.n_lattice_points,
                "facet_grids_ok": rep.facet_grids_ok,
                "matches_pair_matrix_columns": rep.matches_pair_matrix_columns,
            },
        )
        return
    labels, columns = _columns_from_args(args, limits)
    poly = polytope_from_columns(columns, limits)
    if args.action == "fvector":
        fv = poly.f_vector()
        _emit(args, "(" + ", ".join(map(str, fv)) + ")", {"f_vector": fv})
    elif args.action == "dim":
        _emit(args, str(poly.dim), {"dim": poly.dim})
    elif args.action == "faces":
        point_label = {}
        for lab, col in zip(labels, columns):
            point_label.setdefault(tuple(col), _label_text(lab))
        faces = [
            sorted(point_label[poly.ambient_points[i]] for i in face)
            for face in poly.face_lattice()
        ]
        _emit(args, "\n".join(str(f) for f in faces), faces)
    elif args.action == "lattice-points":
        pts = poly.lattice_points(limits)
        _emit(args, "\n".join(str(list(p)) for p in pts), [list(p) for p in pts])


def _cmd_coeff(args, limits):
    lam = _parse_partition(args.lam)
    mu = _parse_partition(args.mu)
    nu = _parse_partition(args.nu)
    builders = {
        "kronecker": (kronecker_matrix, kronecker_coefficient),
        "lr": (lr_matrix, lr_coefficient),
        "plethysm": (plethysm_matrix, plethysm_coefficient),
    }
    build_matrix, build_value = builders[args.kind]
    if args.emit_matrix:
        mat = build_matrix(lam, mu, nu, limits)
        with open(args.emit_matrix, "w", encoding="utf-8") as fh:
            fh.write(mat.to_json())
        value = mat.rank()
        shape = list(mat.shape)
    else:
        value = build_value(lam, mu, nu, limits)
        shape = None
    payload = {
        "kind": args.kind,
        "partitions": [list(p.parts) for p in (lam, mu, nu)],
        "coefficient": value,
    }
    if shape is not None:
        payload["shape"] = shape
    _emit(args, str(value), payload)


def _cmd_check(args, limits):
    if args.what == "conjecture1":
        rep = check_conjecture1(
            args.n, args.mode, samples=args.samples, seed=args.seed, limits=limits
        )
        status = "pass" if rep.passed else "FAIL"
        _emit(
            args,
            f"conjecture1 n={rep.n} mode={rep.mode} pairs={rep.pairs_checked}: {status}",
            rep.to_json_dict(),
        )
        if not rep.passed:
            raise SystemExit(1)
    elif args.what == "conjecture2":
        rep = check_conjecture2(args.n, limits)
        status = "pass" if rep.passed else "FAIL"
        _emit(
            args,
            f"conjecture2 n={rep.n}: chow={list(rep.chow_dims)} "
            f"excedance={list(rep.excedance_counts)}: {status}",
            rep.to_json_dict(),
        )
        if not rep.passed:
            raise SystemExit(1)
    else:
        if args.k is None:
            raise DomainError("orbits requires --k")
        conj, fy = cyclic_orbit_structures(args.n, args.k, limits)
        match = conj.sizes == fy.sizes
        _emit(
            args,
            f"orbits n={args.n} k={args.k}: derangements {conj.multiset()} "
            f"chain-basis {fy.multiset()}: {'match' if match else 'MISMATCH'}",
            {
                "n": args.n,
                "k": args.k,
                "derangement_orbits": list(conj.sizes),
                "fy_orbits": list(fy.sizes),
                "match": match,
            },
        )


# ---------------------------------------------------------------------------
# parser assembly


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spechtkit")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, matrix_input=False):
        p.add_argument("--format", choices=["text", "json", "csv", "macaulay2-text"], default="text")
        p.add_argument("--cache-dir", default=None)
        p.add_argument("--seed", type=int, default=0)
        if matrix_input:
            p.add_argument("--matrix", default=None, metavar="FILE")
        _add_limit_flags(p)

    p = sub.add_parser("specht-matrix", help="pairing matrix of a partition")
    p.add_argument("--lambda", dest="lam", required=True)
    common(p)
    p.set_defaults(func=_cmd_specht_matrix)

    p = sub.add_parser("classify", help="classify a pair of words")
    p.add_argument("--w1", required=True)
    p.add_argument("--w2", required=True)
    common(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("matroid", help="column matroid computations")
    p.add_argument("action", choices=["flats", "circuits", "bases", "tutte", "charpoly"])
    p.add_argument("--lambda", dest="lam", default=None)
    p.add_argument("--strategy", default="auto")
    p.add_argument("--max-size", type=int, default=None)
    common(p, matrix_input=True)
    p.set_defaults(func=_cmd_matroid)

    p = sub.add_parser("chow", help="Chow ring of the column matroid")
    p.add_argument("action", choices=["dims", "presentation"])
    p.add_argument("--lambda", dest="lam", default=None)
    common(p, matrix_input=True)
    p.set_defaults(func=_cmd_chow)

    p = sub.add_parser("polytope", help="column polytope computations")
    p.add_argument(
        "action",
        choices=["fvector", "dim", "faces", "lattice-points", "root-check"],
    )
    p.add_argument("--lambda", dest="lam", default=None)
    p.add_argument("--k", type=int, default=None)
    common(p, matrix_input=True)
    p.set_defaults(func=_cmd_polytope)

    p = sub.add_parser("coeff", help="coefficient matrices and ranks")
    p.add_argument("kind", choices=["kronecker", "lr", "plethysm"])
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--emit-matrix", default=None, metavar="FILE")
    common(p)
    p.set_defaults(func=_cmd_coeff)

    p = sub.add_parser("check", help="conjecture suites")
    p.add_argument("what", choices=["conjecture1", "conjecture2", "orbits"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--mode", choices=["full", "sampled"], default="full")
    p.add_argument("--samples", type=int, default=200)
    common(p)
    p.set_defaults(func=_cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses code 2 for usage errors and 0 for --help/--version
        return int(exc.code or 0)
    try:
        limits = _resolve_limits(args)
        args.func(args, limits)
        return 0
    except ResourceLimitError as exc:
        print(f"error: resource: {exc}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"error: usage: {exc}", file=sys.stderr)
        return 2
    except IOError as exc:
        print(f"error: io: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        return int(exc.code or 0)


if __name__ == "__main__":
    raise SystemExit(main())
