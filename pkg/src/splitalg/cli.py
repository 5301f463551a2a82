"""Command-line front end: check identities and operators, run the
constructions, search for operators on small grids.

Exit codes: 0 all checks passed, 1 violations found, 2 input/usage error.
All output is deterministic; repeated runs on the same input are
byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .constructions import (
    PreconditionFailure,
    action_semidirect,
    aguiar_dendriform,
    aguiar_diassociative,
    differential_quadri,
    dual_extension,
    hemisemidirect,
    induced_quadri,
    induced_six,
    semidirect,
    sum_collapse_quadri,
    sum_collapse_six,
)
from .documents import Document, DocumentError, parse_document, serialize_document
from .identities import CATALOG_NAMES, check
from .model import Algebra, SpecError
from .operators import (
    SearchCapExceeded,
    DEFAULT_SEARCH_CAP,
    check_homomorphic_relative,
    check_operator,
    check_relative_averaging,
    check_dend_averaging,
    operator_map_shape,
    search_operators,
)
from .quotients import (
    QuotientError,
    embed_averaging,
    quadri_to_relative_setup,
    quotient_algebra,
    six_to_homomorphic_setup,
    splitting_ideal,
)
from .identities import QUADRI_TO_DENDRIFORM_COLLAPSE

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_USAGE = 2

KIND_ALIASES = {
    "rota-baxter": "rota_baxter",
    "assoc-averaging": "assoc_averaging",
    "averaging": "dend_averaging",
    "dend-averaging": "dend_averaging",
    "relative-averaging": "relative_averaging",
    "homomorphic-relative": "homomorphic_relative",
}


class UsageError(Exception):
    pass


def _load_document(path: str) -> Document:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e}") from None
    return parse_document(text)


def _emit(args, payload: dict, human: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def _worker_count() -> int:
    raw = os.environ.get("SPLITALG_WORKERS")
    if raw is None:
        return os.cpu_count() or 1
    try:
        count = int(raw)
    except ValueError:
        raise UsageError(f"SPLITALG_WORKERS must be an integer, got {raw!r}") from None
    if count < 1:
        raise UsageError("SPLITALG_WORKERS must be at least 1")
    return count


def cmd_check(args) -> int:
    doc = _load_document(args.file)
    obj = doc.lookup_object(args.object)
    report = check(obj, args.catalog, paranoid=args.paranoid)
    _emit(
        args,
        {"object": args.object, "catalog": args.catalog, **report.to_dict()},
        f"{args.object} against {args.catalog}:\n{report.render()}",
    )
    return EXIT_OK if report.ok else EXIT_VIOLATIONS


def _resolve_subject(doc: Document, kind: str, name: str | None):
    wanted = {
        "rota_baxter": ("associative", doc.algebras),
        "assoc_averaging": ("associative", doc.algebras),
        "dend_averaging": ("dendriform", doc.algebras),
        "relative_averaging": (None, {**doc.representations, **doc.actions}),
        "homomorphic_relative": (None, doc.actions),
    }[kind]
    signature, section = wanted
    if name is not None:
        obj = doc.lookup_object(name)
        if signature and (not isinstance(obj, Algebra) or obj.signature != signature):
            raise UsageError(f"{name!r} is not a {signature} algebra")
        return obj
    candidates = {
        n: o
        for n, o in section.items()
        if signature is None or (isinstance(o, Algebra) and o.signature == signature)
    }
    if len(candidates) != 1:
        raise UsageError(
            f"--on is required: {len(candidates)} candidate object(s) for kind {kind!r}"
        )
    return next(iter(candidates.values()))


def _kind(raw: str) -> str:
    try:
        return KIND_ALIASES[raw]
    except KeyError:
        raise UsageError(
            f"unknown kind {raw!r}; known: {', '.join(sorted(KIND_ALIASES))}"
        ) from None


def cmd_check_operator(args) -> int:
    doc = _load_document(args.file)
    kind = _kind(args.kind)
    if args.map not in doc.maps:
        raise UsageError(f"no map named {args.map!r}")
    subject = _resolve_subject(doc, kind, args.on)
    verdict = check_operator(subject, kind, doc.maps[args.map])
    _emit(
        args,
        {"map": args.map, **verdict.to_dict()},
        f"{args.map}:\n{verdict.render()}",
    )
    return EXIT_OK if verdict.ok else EXIT_VIOLATIONS


def _need(doc: Document, section: dict, flag: str, name: str | None):
    if name is None:
        raise UsageError(f"recipe requires --{flag}")
    if name not in section:
        raise UsageError(f"no {flag} named {name!r}")
    return section[name]


def _run_recipe(args, doc: Document) -> tuple[Document, list[tuple[str, object]]]:
    """Returns (output document, [(label, report-or-verdict), ...])."""
    recipe = args.recipe
    alg = lambda: _need(doc, doc.algebras, "algebra", args.algebra)
    rep = lambda: _need(doc, doc.representations, "rep", args.rep)
    act = lambda: _need(doc, doc.actions, "action", args.action)
    lmap = lambda: _need(doc, doc.maps, "map", args.map)
    verify = not args.no_verify

    if recipe == "semidirect":
        out = semidirect(rep(), verify=verify)
        return Document(algebras={"semidirect": out}), [
            ("semidirect:dendriform", check(out, "dendriform")) if verify else None
        ]
    if recipe == "hemisemidirect":
        out = hemisemidirect(rep(), verify=verify)
        return Document(algebras={"hemisemidirect": out}), [
            ("hemisemidirect:quadri", check(out, "quadri")) if verify else None
        ]
    if recipe == "action-semidirect":
        out = action_semidirect(act(), verify=verify)
        return Document(algebras={"action_semidirect": out}), [
            ("action_semidirect:dendriform", check(out, "dendriform")) if verify else None
        ]
    if recipe == "aguiar-dendriform":
        out = aguiar_dendriform(alg(), lmap())
        return Document(algebras={"dendriform": out}), [
            ("dendriform", check(out, "dendriform")) if verify else None
        ]
    if recipe == "aguiar-diass":
        out = aguiar_diassociative(alg(), lmap())
        return Document(algebras={"diassociative": out}), [
            ("diassociative", check(out, "diassociative")) if verify else None
        ]
    if recipe == "induced-quadri":
        out = induced_quadri(rep(), lmap())
        return Document(algebras={"induced_quadri": out}), [
            ("induced_quadri:quadri", check(out, "quadri")) if verify else None
        ]
    if recipe == "induced-six":
        out = induced_six(act(), lmap())
        checks = None
        if verify:
            checks = [("induced_six:six", check(out, "six"))]
        return Document(algebras={"induced_six": out}), checks or [None]
    if recipe == "differential-quadri":
        out = differential_quadri(alg(), lmap())
        return Document(algebras={"differential_quadri": out}), [
            ("differential_quadri:quadri", check(out, "quadri")) if verify else None
        ]
    if recipe == "dual-extension":
        base = alg()
        action, projection = dual_extension(base)
        out = Document(
            algebras={"base": action.base, "extension": action.target},
            maps={"projection": projection},
            actions={"dual_extension": action},
        )
        checks = None
        if verify:
            checks = [
                ("dual_extension:dend-action", check(action, "dend-action")),
                (
                    "projection:homomorphic_relative",
                    check_homomorphic_relative(action, projection),
                ),
            ]
        return out, checks or [None]
    if recipe == "sum-diass":
        out = sum_collapse_quadri(alg())
        return Document(algebras={"sum_diass": out}), [
            ("sum_diass:diassociative", check(out, "diassociative")) if verify else None
        ]
    if recipe == "sum-triass":
        out = sum_collapse_six(alg())
        return Document(algebras={"sum_triass": out}), [
            ("sum_triass:triassociative", check(out, "triassociative")) if verify else None
        ]
    if recipe == "quotient-dend":
        a = alg()
        ideal = splitting_ideal(a)
        quotient, projection = quotient_algebra(
            a, ideal, QUADRI_TO_DENDRIFORM_COLLAPSE, signature="dendriform"
        )
        out = Document(algebras={"quotient": quotient}, maps={"quotient_map": projection})
        return out, [
            ("quotient:dendriform", check(quotient, "dendriform")) if verify else None
        ]
    if recipe == "embed-averaging":
        ambient, averaging, inclusion = embed_averaging(alg())
        out = Document(
            algebras={"ambient": ambient},
            maps={"averaging": averaging, "inclusion": inclusion},
        )
        checks = None
        if verify:
            checks = [
                ("ambient:dendriform", check(ambient, "dendriform")),
                ("averaging:dend_averaging", check_dend_averaging(ambient, averaging)),
            ]
        return out, checks or [None]
    if recipe == "quadri-to-relative":
        representation, projection = quadri_to_relative_setup(alg())
        out = Document(
            algebras={"quotient": representation.base},
            representations={"representation": representation},
            maps={"quotient_map": projection},
        )
        checks = None
        if verify:
            checks = [
                ("representation:dend-representation", check(representation, "dend-representation")),
                (
                    "quotient_map:relative_averaging",
                    check_relative_averaging(representation, projection),
                ),
            ]
        return out, checks or [None]
    if recipe == "six-to-homomorphic":
        action, projection = six_to_homomorphic_setup(alg())
        out = Document(
            algebras={"quotient": action.base, "perp": action.target},
            actions={"action": action},
            maps={"quotient_map": projection},
        )
        checks = None
        if verify:
            checks = [
                ("action:dend-action", check(action, "dend-action")),
                (
                    "quotient_map:homomorphic_relative",
                    check_homomorphic_relative(action, projection),
                ),
            ]
        return out, checks or [None]
    raise UsageError(f"unknown recipe {args.recipe!r}")


RECIPES = (
    "semidirect",
    "hemisemidirect",
    "action-semidirect",
    "aguiar-dendriform",
    "aguiar-diass",
    "induced-quadri",
    "induced-six",
    "differential-quadri",
    "dual-extension",
    "sum-diass",
    "sum-triass",
    "quotient-dend",
    "embed-averaging",
    "quadri-to-relative",
    "six-to-homomorphic",
)


def cmd_construct(args) -> int:
    doc = _load_document(args.file)
    out_doc, raw_checks = _run_recipe(args, doc)
    checks = [c for c in raw_checks if c is not None]
    text = serialize_document(out_doc)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text)
    all_ok = all(item.ok for _, item in checks)
    payload = {
        "recipe": args.recipe,
        "out": args.out,
        "verifications": [
            {"label": label, **item.to_dict()} for label, item in checks
        ],
    }
    lines = [f"{args.recipe}: wrote {args.out}"]
    for label, item in checks:
        lines.append(f"[{label}] {item.render()}")
    if not checks:
        lines.append("(verification skipped)")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if all_ok else EXIT_VIOLATIONS


def _parse_grid(raw: str) -> list[Fraction]:
    grid = []
    for part in raw.split(","):
        part = part.strip()
        try:
            grid.append(Fraction(part))
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"invalid rational {part!r} in grid") from None
    if not grid:
        raise UsageError("empty grid")
    return grid


def cmd_search(args) -> int:
    doc = _load_document(args.file)
    kind = _kind(args.kind)
    subject = _resolve_subject(doc, kind, args.object)
    grid = _parse_grid(args.grid)
    maps = search_operators(subject, kind, grid, cap=args.cap)
    source_dim, target_dim = operator_map_shape(subject, kind)
    from .documents import scalar_to_json

    rendered = [
        [[scalar_to_json(e) for e in row] for row in m.matrix] for m in maps
    ]
    payload = {
        "kind": kind,
        "count": len(maps),
        "shape": [target_dim, source_dim],
        "matrices": rendered,
    }
    lines = [f"{len(maps)} passing map(s) of shape {target_dim}x{source_dim}"]
    for m in rendered:
        lines.append(json.dumps(m))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splitalg",
        description="Exact verification and construction for split-operation algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="check an object against an identity catalog")
    p.add_argument("file")
    p.add_argument("--object", required=True)
    p.add_argument("--catalog", required=True, choices=CATALOG_NAMES)
    p.add_argument("--paranoid", action="store_true",
                   help="also check the mathematically redundant chain pairs")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("check-operator", help="check an operator property of a map")
    p.add_argument("file")
    p.add_argument("--map", required=True)
    p.add_argument("--kind", required=True)
    p.add_argument("--on", help="object the operator lives on (if ambiguous)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_check_operator)

    p = sub.add_parser("construct", help="run a construction and write the result")
    p.add_argument("file")
    p.add_argument("--recipe", required=True, choices=RECIPES)
    p.add_argument("--out", required=True)
    p.add_argument("--algebra")
    p.add_argument("--rep")
    p.add_argument("--action")
    p.add_argument("--map")
    p.add_argument("--no-verify", action="store_true",
                   help="skip re-verification of the constructed objects")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("search", help="enumerate operators over a finite grid")
    p.add_argument("file")
    p.add_argument("--object", help="object to search on (if ambiguous)")
    p.add_argument("--kind", required=True)
    p.add_argument("--grid", required=True, help="comma-separated rationals")
    p.add_argument("--cap", type=int, default=DEFAULT_SEARCH_CAP)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_search)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits with 2 on usage errors already
        return int(e.code or 0)
    try:
        _worker_count()
        return args.fn(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except DocumentError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionFailure, QuotientError) as e:
        print(f"error: {e}", file=sys.stderr)
        verdict = getattr(e, "verdict", None)
        if verdict is not None:
            print(verdict.render(), file=sys.stderr)
        return EXIT_USAGE
    except (SearchCapExceeded, SpecError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
