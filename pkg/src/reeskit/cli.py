"""Command-line front end.

Subcommands: analyze, height, gs, bounds, classify, pfaffian, generic.
Problem files are JSON documents with a versioned ``format: 1`` field (the
schema is documented in the README); `generic` builds a generic matrix
in-memory instead of reading a file.

Output is a deterministic text report by default, or the loss-free
structured form with --json.  Every number a report takes from the built-in
criteria catalog carries that criterion's label in brackets.  Exit codes:
0 success, 1 input error, 2 precondition failure (including --timeout
expiry of a Groebner run).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

from . import bounds as bounds_mod
from . import groebner, gs, matrixalg
from .errors import InputError, PreconditionError, SchemaError, ToolkitError
from .gs import ProblemInstance
from .matrixalg import MatrixKind, PolyMatrix
from .poly import FieldSpec, MonomialOrder, PolyRing, parse_poly

_ANALYSES = ("height", "gs", "specialize", "bounds", "classify", "forms")
_FILE_ANALYSES = ("height", "gs", "specialize", "bounds", "classify")

_GENERIC_HEIGHT_SOURCES = {
    MatrixKind.ORDINARY: "Notation 2.1a",
    MatrixKind.SYMMETRIC: "Notation 2.1b",
    MatrixKind.ALTERNATING: "Notation 2.1c",
}
_THRESHOLD_SOURCES = {
    MatrixKind.ORDINARY: "Prop 3.2a",
    MatrixKind.SYMMETRIC: "Prop 3.2b",
    MatrixKind.ALTERNATING: "Prop 3.2c",
}
_MAX_GS_SOURCES = {
    MatrixKind.ORDINARY: "Cor 3.3",
    MatrixKind.SYMMETRIC: "Cor 3.4",
    MatrixKind.ALTERNATING: "Cor 3.5",
}
_MIN_GENS_SOURCES = {
    MatrixKind.ORDINARY: "Lemma 4.4a",
    MatrixKind.SYMMETRIC: "Lemma 4.4b",
    MatrixKind.ALTERNATING: "Lemma 4.4c",
}

DEFAULT_FIELD = FieldSpec.prime(32003)


def _ext(value) -> object:
    """JSON-safe rendering of extended integers."""
    if value == math.inf:
        return "inf"
    if value == -math.inf:
        return "-inf"
    return value


@dataclass(frozen=True)
class Request:
    analysis: str
    s: object = None  # int or "inf"
    k_range: tuple[int, int] | None = None


@dataclass(frozen=True)
class ProblemFile:
    """Validated problem document (polynomials still as text)."""

    format: int
    field: FieldSpec | None
    variables: tuple[str, ...]
    kind: MatrixKind
    entries: tuple[tuple[str, ...], ...]
    t: int
    requested: tuple[Request, ...]


def _parse_field_value(value, key: str) -> FieldSpec:
    if isinstance(value, str):
        name = value.strip().lower()
        if name in ("rationals", "qq", "q"):
            return FieldSpec.rationals()
        if name.startswith("prime:"):
            name = name[len("prime:") :]
        if name.isdigit():
            return FieldSpec.prime(int(name))
        raise SchemaError(f"unrecognized field {value!r}", key=key)
    if isinstance(value, dict):
        kind = value.get("kind")
        if kind == "rationals":
            return FieldSpec.rationals()
        if kind == "prime-field":
            p = value.get("p")
            if not isinstance(p, int):
                raise SchemaError("prime-field needs an integer 'p'", key=f"{key}.p")
            return FieldSpec.prime(p)
        raise SchemaError(f"unrecognized field kind {kind!r}", key=f"{key}.kind")
    raise SchemaError("field must be a string or an object", key=key)


def _parse_s_value(value, key: str):
    if value in ("inf", "+inf", None):
        return "inf"
    if isinstance(value, str) and value.isdigit():
        value = int(value)
    if isinstance(value, int) and value >= 1:
        return value
    raise SchemaError(f"s must be a positive integer or 'inf', got {value!r}", key=key)


def _parse_k_value(value, key: str) -> tuple[int, int]:
    if isinstance(value, int):
        lo = hi = value
    elif isinstance(value, str) and ".." in value:
        a, _, b = value.partition("..")
        try:
            lo, hi = int(a), int(b)
        except ValueError:
            raise SchemaError(f"bad k range {value!r}", key=key) from None
    elif isinstance(value, str) and value.isdigit():
        lo = hi = int(value)
    else:
        raise SchemaError(f"k must be an integer or 'a..b', got {value!r}", key=key)
    if lo < 1 or hi < lo:
        raise SchemaError(f"bad k range {value!r}", key=key)
    return lo, hi


def load_problem(source) -> ProblemFile:
    """Load and validate a problem document from a path or a JSON string."""
    if isinstance(source, dict):
        doc = source
    else:
        text = source
        if not source.lstrip().startswith("{"):
            try:
                with open(source, "r", encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise InputError(f"cannot read problem file: {exc}") from None
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"problem file is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise SchemaError("problem document must be a JSON object")
    known = {"format", "field", "variables", "matrix", "t", "requested"}
    for key in doc:
        if key not in known:
            raise SchemaError("unknown key", key=key)
    if doc.get("format") != 1:
        raise SchemaError("missing or unsupported format version (expected format: 1)", key="format")
    field_spec = _parse_field_value(doc["field"], "field") if "field" in doc else None
    variables = doc.get("variables")
    if not isinstance(variables, list) or not all(isinstance(v, str) for v in variables):
        raise SchemaError("variables must be a list of names", key="variables")
    matrix = doc.get("matrix")
    if not isinstance(matrix, dict):
        raise SchemaError("matrix must be an object with kind and entries", key="matrix")
    for key in matrix:
        if key not in ("kind", "entries"):
            raise SchemaError("unknown key", key=f"matrix.{key}")
    try:
        kind = MatrixKind(matrix.get("kind"))
    except ValueError:
        raise SchemaError(f"unknown matrix kind {matrix.get('kind')!r}", key="matrix.kind") from None
    entries = matrix.get("entries")
    if (
        not isinstance(entries, list)
        or not entries
        or not all(isinstance(row, list) and all(isinstance(e, str) for e in row) for row in entries)
    ):
        raise SchemaError("entries must be a non-empty grid of strings", key="matrix.entries")
    width = len(entries[0])
    if width == 0 or any(len(row) != width for row in entries):
        raise SchemaError("entries grid must be rectangular and non-empty", key="matrix.entries")
    t = doc.get("t")
    if not isinstance(t, int):
        raise SchemaError("t must be an integer", key="t")
    requested: list[Request] = []
    raw_requests = doc.get("requested", [])
    if not isinstance(raw_requests, list):
        raise SchemaError("requested must be a list", key="requested")
    for idx, item in enumerate(raw_requests):
        key = f"requested[{idx}]"
        if isinstance(item, str):
            item = {"analysis": item}
        if not isinstance(item, dict):
            raise SchemaError("each request must be a name or an object", key=key)
        name = item.get("analysis")
        if name not in _FILE_ANALYSES:
            raise SchemaError(f"unknown analysis {name!r}", key=f"{key}.analysis")
        req = Request(analysis=name)
        if name == "gs":
            req = Request(analysis=name, s=_parse_s_value(item.get("s", "inf"), f"{key}.s"))
        elif name == "bounds":
            if "k" not in item:
                raise SchemaError("bounds request needs k", key=f"{key}.k")
            req = Request(analysis=name, k_range=_parse_k_value(item["k"], f"{key}.k"))
        requested.append(req)
    return ProblemFile(
        format=1,
        field=field_spec,
        variables=tuple(variables),
        kind=kind,
        entries=tuple(tuple(row) for row in entries),
        t=t,
        requested=tuple(requested),
    )


def emit_problem(pf: ProblemFile) -> str:
    """Canonical serialization; load(emit(load(f))) == load(f)."""
    doc: dict = {
        "format": pf.format,
        "variables": list(pf.variables),
        "matrix": {"kind": pf.kind.value, "entries": [list(row) for row in pf.entries]},
        "t": pf.t,
    }
    if pf.field is not None:
        doc["field"] = (
            {"kind": "rationals"} if pf.field.p is None else {"kind": "prime-field", "p": pf.field.p}
        )
    if pf.requested:
        doc["requested"] = []
        for req in pf.requested:
            item: dict = {"analysis": req.analysis}
            if req.analysis == "gs":
                item["s"] = req.s
            elif req.analysis == "bounds":
                lo, hi = req.k_range
                item["k"] = str(lo) if lo == hi else f"{lo}..{hi}"
            doc["requested"].append(item)
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def build_matrix(pf: ProblemFile, field: FieldSpec, order: MonomialOrder) -> PolyMatrix:
    ring = PolyRing(pf.variables, field=field, order=order)
    rows = [[parse_poly(text, ring) for text in row] for row in pf.entries]
    return PolyMatrix(pf.kind, rows)


# -- report assembly ---------------------------------------------------------


def _height_section(M: PolyMatrix, t: int, cache: groebner.LowerIdealCache) -> dict:
    size = 2 * t if M.kind is MatrixKind.ALTERNATING else t
    if M.kind is MatrixKind.ALTERNATING:
        ideal_name = f"pfaffians({size})"
        count = len(matrixalg.enumerate_pfaffians(M, size)) if 2 <= size <= M.n else 0
    else:
        ideal_name = f"minors({size})"
        count = len(matrixalg.enumerate_minors(M, size)) if 1 <= size <= min(M.m, M.n) else 0
    report = cache.generic_report(size)
    return {
        "analysis": "height",
        "ideal": ideal_name,
        "generators": count,
        "height": _ext(report.actual),
        "expected_generic": report.expected,
        "expected_source": _GENERIC_HEIGHT_SOURCES[M.kind],
        "generic": report.ok,
    }


def _gs_section(M: PolyMatrix, t: int, s, cache: groebner.LowerIdealCache) -> dict:
    s_value = math.inf if s == "inf" else s
    report = gs.check_Gs(M, t, s_value, cache=cache)
    return {
        "analysis": "gs",
        "s": _ext(s_value),
        "threshold_source": _THRESHOLD_SOURCES[M.kind],
        "rows": [
            {
                "j": r.j,
                "threshold": r.threshold,
                "height": _ext(r.actual_height),
                "required": r.required,
                "satisfied": r.satisfied,
            }
            for r in report.per_j
        ],
        "max_s": _ext(report.max_s),
        "satisfied": report.satisfied,
    }


def _specialize_section(M: PolyMatrix, t: int, cache: groebner.LowerIdealCache) -> dict:
    result = bounds_mod.specialization_check(M, t, cache=cache)
    return {
        "analysis": "specialize",
        "source": result.source,
        "rows": [
            {"j": r.j, "required": r.required, "height": _ext(r.actual), "satisfied": r.satisfied}
            for r in result.report.per_j
        ],
        "specializes": result.specializes,
        "cohen_macaulay": result.cohen_macaulay,
    }


def _bound_value_json(v: bounds_mod.BoundValue | None) -> object:
    if v is None:
        return None
    out: dict = {"tag": v.tag, "rendered": v.render()}
    if v.finite_part is not None:
        out["finite_part"] = v.finite_part
    if v.symbol is not None:
        out["symbol"] = v.symbol
    if v.note is not None:
        out["note"] = v.note
    return out


def _bounds_section(M: PolyMatrix, t: int, k_range: tuple[int, int], cache: groebner.LowerIdealCache) -> dict:
    hyp = bounds_mod.hypothesis_check(M, t, "bounds", cache=cache)
    section: dict = {
        "analysis": "bounds",
        "hypotheses": {
            "source": hyp.source,
            "rows": [
                {"j": r.j, "required": r.required, "height": _ext(r.actual), "satisfied": r.satisfied}
                for r in hyp.per_j
            ],
            "satisfied": hyp.all_satisfied,
        },
    }
    if not hyp.all_satisfied:
        failing = next(r for r in hyp.per_j if not r.satisfied)
        raise PreconditionError(
            f"height hypothesis violated at j = {failing.j}: "
            f"height {_ext(failing.actual)} < required {failing.required} [{hyp.source}]"
        )
    inst = ProblemInstance.from_matrix(M, t)
    rows = []
    lo, hi = k_range
    for k in range(lo, hi + 1):
        result = bounds_mod.degree_bounds(inst, k, hypotheses_attested=True)
        row: dict = {"k": k, "applicable": result.applicable, "source": result.source}
        if result.applicable:
            row["b0"] = _bound_value_json(result.b0)
            row["td"] = _bound_value_json(result.td)
        if result.note is not None:
            row["note"] = result.note
        rows.append(row)
    section["rows"] = rows
    return section


def _classify_section(M: PolyMatrix, t: int, cache: groebner.LowerIdealCache) -> dict:
    report = bounds_mod.classify(M, t, cache=cache)
    return {
        "analysis": "classify",
        "conclusions": [
            {
                "claim": c.claim,
                "source": c.source,
                "hypotheses_verified": c.hypotheses_verified,
                **({"detail": c.detail} if c.detail else {}),
            }
            for c in report.conclusions
        ],
    }


def _forms_section(inst: ProblemInstance) -> dict:
    status = bounds_mod.generic_status(inst)
    section = {
        "analysis": "forms",
        "max_gs": _ext(gs.max_Gs_generic(inst)),
        "max_gs_source": _MAX_GS_SOURCES[inst.kind],
        "min_generators": gs.min_gens_generic(inst),
        "min_generators_source": _MIN_GENS_SOURCES[inst.kind],
        "status": {
            "linear_type": status.linear_type,
            "fiber_type": status.fiber_type,
            "td_finite_all_k": status.td_finite_all_k,
            "td_infinite_some_k": status.td_infinite_some_k,
            "sources": list(status.sources),
        },
    }
    return section


def _pfaffian_section(M: PolyMatrix) -> dict:
    return {"analysis": "pfaffian", "pfaffian": str(matrixalg.pfaffian(M))}


# -- text rendering -----------------------------------------------------------


def _flag(value: bool | None) -> str:
    return "no statement" if value is None else ("yes" if value else "no")


def render_text(report: dict) -> str:
    lines: list[str] = []
    banner = report["banner"]
    lines.append(f"field {banner['field']} | order {banner['order']}")
    mat = report["matrix"]
    delta = mat["entry_degree"]
    lines.append(
        f"matrix {mat['kind']} {mat['m']}x{mat['n']}, t = {mat['t']}, "
        f"entry degree {'none' if delta is None else delta}, ring variables {mat['d']}"
    )
    for section in report["analyses"]:
        kind = section["analysis"]
        lines.append("")
        if kind == "height":
            lines.append("height")
            lines.append(f"  ideal {section['ideal']}, {section['generators']} generators")
            lines.append(f"  height = {section['height']}")
            lines.append(f"  expected generic height = {section['expected_generic']} [{section['expected_source']}]")
            lines.append(f"  generic height: {'yes' if section['generic'] else 'no'}")
        elif kind == "gs":
            lines.append(f"gs (s = {section['s']})")
            for row in section["rows"]:
                verdict = "ok" if row["satisfied"] else "FAIL"
                lines.append(
                    f"  j = {row['j']}: height = {row['height']}, required >= {row['required']}, "
                    f"threshold = {row['threshold']} [{section['threshold_source']}] -> {verdict}"
                )
            lines.append(f"  max_s = {section['max_s']} [{section['threshold_source']} (derived)]")
            lines.append(f"  G_s holds at requested s: {'yes' if section['satisfied'] else 'no'}")
        elif kind == "specialize":
            lines.append("specialize")
            for row in section["rows"]:
                verdict = "ok" if row["satisfied"] else "FAIL"
                lines.append(
                    f"  j = {row['j']}: height = {row['height']}, required >= {row['required']} "
                    f"[{section['source']}] -> {verdict}"
                )
            lines.append(f"  Rees algebra specializes: {'yes' if section['specializes'] else 'no'} [{section['source']}]")
            lines.append(f"  Cohen-Macaulay: {section['cohen_macaulay']} [{section['source']}]")
        elif kind == "bounds":
            lines.append("bounds")
            hyp = section["hypotheses"]
            for row in hyp["rows"]:
                verdict = "ok" if row["satisfied"] else "FAIL"
                lines.append(
                    f"  hypothesis j = {row['j']}: height = {row['height']}, required >= {row['required']} "
                    f"[{hyp['source']}] -> {verdict}"
                )
            lines.append(f"  hypotheses satisfied: {'yes' if hyp['satisfied'] else 'no'} [{hyp['source']}]")
            for row in section["rows"]:
                if not row["applicable"]:
                    lines.append(f"  k = {row['k']}: not applicable ({row['note']}) [{row['source']}]")
                    continue
                b0 = row["b0"]["rendered"]
                td = row["td"]["rendered"]
                lines.append(f"  k = {row['k']}: b0 <= {b0}, td <= {td} [{row['source']}]")
                if row.get("note"):
                    lines.append(f"      note: {row['note']}")
                for part in ("b0", "td"):
                    note = row[part].get("note")
                    if note:
                        lines.append(f"      {part} note: {note}")
        elif kind == "classify":
            lines.append("classify")
            if not section["conclusions"]:
                lines.append("  no conclusion applies")
            for c in section["conclusions"]:
                verified = "verified" if c["hypotheses_verified"] else "UNVERIFIED"
                detail = f" ({c['detail']})" if c.get("detail") else ""
                lines.append(f"  conclusion: {c['claim']}{detail} [{c['source']}] hypotheses {verified}")
        elif kind == "forms":
            lines.append("generic closed forms")
            lines.append(f"  max s with G_s = {section['max_gs']} [{section['max_gs_source']}]")
            lines.append(f"  min generators = {section['min_generators']} [{section['min_generators_source']}]")
            status = section["status"]
            srcs = ", ".join(status["sources"]) if status["sources"] else "none"
            lines.append(f"  linear type: {_flag(status['linear_type'])} [{srcs}]")
            lines.append(f"  fiber type: {_flag(status['fiber_type'])} [{srcs}]")
            lines.append(f"  td finite for all k: {_flag(status['td_finite_all_k'])} [{srcs}]")
            lines.append(f"  td infinite for some k: {_flag(status['td_infinite_some_k'])} [{srcs}]")
        elif kind == "pfaffian":
            lines.append("pfaffian")
            lines.append(f"  Pf = {section['pfaffian']}")
    return "\n".join(lines) + "\n"


def render_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def emit_report(report: dict, fmt: str = "text") -> str:
    """Render a report; 'structured' (JSON) is loss-free for the text form."""
    if fmt in ("structured", "json"):
        return render_json(report)
    return render_text(report)


# -- argument plumbing ---------------------------------------------------------


def _field_from_flag(value: str | None) -> FieldSpec | None:
    if value is None:
        return None
    return _parse_field_value(value, "--field")


def _add_common(sub: argparse.ArgumentParser):
    sub.add_argument("--field", help="coefficient field: 'rationals' or a prime (default GF(32003))")
    sub.add_argument("--order", choices=["grevlex", "lex"], default="grevlex")
    sub.add_argument("--json", action="store_true", help="structured output")
    sub.add_argument("--timeout", type=float, help="abort Groebner work after this many seconds (exit 2)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="reeskit", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="command", required=True)

    for name, needs_file in (
        ("analyze", True),
        ("height", True),
        ("gs", True),
        ("bounds", True),
        ("classify", True),
        ("pfaffian", True),
        ("generic", False),
    ):
        sub = subs.add_parser(name)
        if needs_file:
            sub.add_argument("file", help="problem file (JSON, format 1)")
        _add_common(sub)
        if name in ("gs", "generic"):
            sub.add_argument("--s", default=None, help="G_s level: a positive integer or 'inf'")
        if name in ("bounds", "generic"):
            sub.add_argument("--k", default=None, help="power k or range 'a..b'")
        if name == "generic":
            sub.add_argument("--kind", required=True, choices=[k.value for k in MatrixKind])
            sub.add_argument("--m", type=int)
            sub.add_argument("--n", type=int, required=True)
            sub.add_argument("--t", type=int, required=True)
            sub.add_argument(
                "--analyses",
                default="forms,height,gs,specialize,classify",
                help="comma list from: " + ",".join(_ANALYSES),
            )
    return parser


def _run_analyses(
    M: PolyMatrix,
    t: int,
    requests: list[Request],
    field: FieldSpec,
    order: MonomialOrder,
    generic_inst: ProblemInstance | None = None,
) -> dict:
    cache = groebner.LowerIdealCache(M)
    sections = []
    for req in requests:
        if req.analysis == "height":
            sections.append(_height_section(M, t, cache))
        elif req.analysis == "gs":
            sections.append(_gs_section(M, t, req.s if req.s is not None else "inf", cache))
        elif req.analysis == "specialize":
            sections.append(_specialize_section(M, t, cache))
        elif req.analysis == "bounds":
            sections.append(_bounds_section(M, t, req.k_range, cache))
        elif req.analysis == "classify":
            sections.append(_classify_section(M, t, cache))
        elif req.analysis == "forms":
            inst = generic_inst if generic_inst is not None else ProblemInstance.from_matrix(M, t)
            sections.append(_forms_section(inst))
    return {
        "format": 1,
        "banner": {"field": str(field), "order": order.value},
        "matrix": {
            "kind": M.kind.value,
            "m": M.m,
            "n": M.n,
            "t": t,
            "entry_degree": M.entry_degree,
            "d": M.ring.nvars,
        },
        "analyses": sections,
    }


def run(argv) -> int:
    """Parse argv, run the requested analyses, print the report."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0

    try:
        order = MonomialOrder(args.order)
        flag_field = _field_from_flag(args.field)

        if args.command == "generic":
            kind = MatrixKind(args.kind)
            n = args.n
            m = args.m if args.m is not None else n
            if kind in (MatrixKind.SYMMETRIC, MatrixKind.ALTERNATING):
                if args.m is not None and args.m != n:
                    raise InputError(f"{kind.value} matrices are square; --m {args.m} conflicts with --n {n}")
                m = n
            field = flag_field if flag_field is not None else DEFAULT_FIELD
            M = matrixalg.generic_matrix(m, n, kind, field=field, order=order)
            t = args.t
            requests = []
            for name in args.analyses.split(","):
                name = name.strip()
                if not name:
                    continue
                if name not in _ANALYSES:
                    raise InputError(f"unknown analysis {name!r}")
                if name == "gs":
                    requests.append(Request("gs", s=_parse_s_value(args.s if args.s else "inf", "--s")))
                elif name == "bounds":
                    if args.k is None:
                        raise InputError("bounds analysis needs --k")
                    requests.append(Request("bounds", k_range=_parse_k_value(args.k, "--k")))
                else:
                    requests.append(Request(name))
            if args.k is not None and not any(r.analysis == "bounds" for r in requests):
                requests.append(Request("bounds", k_range=_parse_k_value(args.k, "--k")))
            inst = ProblemInstance.from_matrix(M, t)
        else:
            pf = load_problem(args.file)
            field = flag_field if flag_field is not None else (pf.field if pf.field is not None else DEFAULT_FIELD)
            M = build_matrix(pf, field, order)
            t = pf.t
            inst = None
            if args.command == "analyze":
                requests = list(pf.requested) or [
                    Request("height"),
                    Request("gs", s="inf"),
                    Request("specialize"),
                    Request("classify"),
                ]
            elif args.command == "height":
                requests = [Request("height")]
            elif args.command == "gs":
                requests = [Request("gs", s=_parse_s_value(getattr(args, "s", None) or "inf", "--s"))]
            elif args.command == "bounds":
                if args.k is None:
                    raise InputError("bounds needs --k")
                requests = [Request("bounds", k_range=_parse_k_value(args.k, "--k"))]
            elif args.command == "classify":
                requests = [Request("classify")]
            elif args.command == "pfaffian":
                requests = []

        def produce() -> dict:
            if args.command == "pfaffian":
                report = _run_analyses(M, t, [], field, order)
                report["analyses"].append(_pfaffian_section(M))
                return report
            return _run_analyses(M, t, requests, field, order, generic_inst=inst)

        if args.timeout is not None:
            with groebner.time_limit(args.timeout):
                report = produce()
        else:
            report = produce()

        sys.stdout.write(emit_report(report, "structured" if args.json else "text"))
        return 0
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except PreconditionError as exc:
        sys.stderr.write(f"precondition failure: {exc}\n")
        return 2
    except ToolkitError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
