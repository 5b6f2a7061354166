"""Command-line front end.

Parses JSON spec files describing decorated graphs (or product factor
lists), runs the invariant pipeline, and emits deterministic text or JSON
reports.  Exit codes: 0 report produced, 1 invalid spec, 2 internal
invariant violation (an oracle or self-check mismatch, which must never be
silently absorbed).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Any, Optional, Sequence

from .exactlinalg import (
    AlgorithmMismatchError,
    IntMatrix,
    NotUnimodularError,
    SymmetryError,
)
from .forms import (
    BilinearForm,
    ClassificationError,
    classified_form_type,
    classify_indefinite,
    form_type,
)
from .graphmodel import (
    BlackVertex,
    DecoratedGraph,
    Edge,
    GraphValidationError,
    UnsupportedShapeError,
    WhiteVertex,
    black_vertices,
    graph_counts,
    validate_graph,
)
from .hopflink import (
    FiberDescriptor,
    HopfLinkSpec,
    admissibility_check,
    derived_linking_matrix,
    oracle_matches_column,
    presentation_oracle,
)
from .invariants import (
    ProductFactor,
    assemble_cup_form,
    cup_form_for_graph,
    invariant_report,
    product_phi_bound,
)
from . import sampling


class SpecFileError(ValueError):
    """Invalid spec file; carries a field locus in the message."""


class OracleMismatchError(RuntimeError):
    """The presentation oracle contradicted the derived linking matrix."""


# ---------------------------------------------------------------------------
# spec files


@dataclass(frozen=True)
class SpecFile:
    n: int
    k: int
    theta: int
    assume_cobounding: bool
    graphs: tuple[DecoratedGraph, ...]
    factors: tuple[ProductFactor, ...]


def _expect_keys(obj: dict, allowed: set[str], required: set[str], locus: str) -> None:
    for key in obj:
        if key not in allowed:
            raise SpecFileError(f"{locus}: unknown field {key!r}")
    for key in required:
        if key not in obj:
            raise SpecFileError(f"{locus}: missing field {key!r}")


def _expect_int(value: Any, locus: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise SpecFileError(f"{locus}: expected an integer, got {value!r}")
    return value


def _parse_matrix(value: Any, locus: str) -> IntMatrix:
    if not isinstance(value, list) or not value or not all(isinstance(r, list) for r in value):
        raise SpecFileError(f"{locus}: expected a nonempty array of arrays of integers")
    rows = [[_expect_int(x, f"{locus}[{i}][{j}]") for j, x in enumerate(r)] for i, r in enumerate(value)]
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise SpecFileError(f"{locus}: ragged rows")
    return IntMatrix.from_rows(rows)


def _parse_fiber(value: Any, locus: str) -> FiberDescriptor:
    if not isinstance(value, dict):
        raise SpecFileError(f"{locus}: expected an object")
    _expect_keys(value, {"betti", "boundary_components"}, {"betti", "boundary_components"}, locus)
    betti = value["betti"]
    if not isinstance(betti, list) or not betti:
        raise SpecFileError(f"{locus}.betti: expected a nonempty array of integers")
    betti_ints = [_expect_int(b, f"{locus}.betti[{i}]") for i, b in enumerate(betti)]
    bc = _expect_int(value["boundary_components"], f"{locus}.boundary_components")
    try:
        return FiberDescriptor.from_betti(betti_ints, bc)
    except ValueError as exc:
        raise SpecFileError(f"{locus}: {exc}") from exc


def _parse_vertex(value: Any, n: int, k: int, theta: int, locus: str):
    if not isinstance(value, dict):
        raise SpecFileError(f"{locus}: expected an object")
    color = value.get("color")
    if color == "black":
        _expect_keys(value, {"color", "matrix"}, {"color", "matrix"}, locus)
        matrix = _parse_matrix(value["matrix"], f"{locus}.matrix")
        eps = (-1) ** n
        try:
            form = BilinearForm(matrix, eps)
            link = HopfLinkSpec(form, n=n, k=k, theta=theta)
        except (SymmetryError, ValueError) as exc:
            raise SpecFileError(f"{locus}.matrix: {exc}") from exc
        return BlackVertex(link)
    if color == "white":
        _expect_keys(value, {"color", "fiber"}, {"color", "fiber"}, locus)
        return WhiteVertex(_parse_fiber(value["fiber"], f"{locus}.fiber"))
    raise SpecFileError(f"{locus}.color: expected 'black' or 'white', got {color!r}")


def _parse_edge(value: Any, locus: str) -> Edge:
    if not isinstance(value, dict):
        raise SpecFileError(f"{locus}: expected an object")
    _expect_keys(value, {"u", "v", "u_comp", "v_comp", "twist"}, {"u", "v", "u_comp", "v_comp"}, locus)
    twist = value.get("twist")
    if twist is not None and not isinstance(twist, str):
        raise SpecFileError(f"{locus}.twist: expected a string")
    return Edge(
        u=_expect_int(value["u"], f"{locus}.u"),
        v=_expect_int(value["v"], f"{locus}.v"),
        u_comp=_expect_int(value["u_comp"], f"{locus}.u_comp"),
        v_comp=_expect_int(value["v_comp"], f"{locus}.v_comp"),
        twist=twist,
    )


def _parse_factor(value: Any, locus: str) -> ProductFactor:
    if not isinstance(value, dict):
        raise SpecFileError(f"{locus}: expected an object")
    kind = value.get("kind")
    if kind == "S4":
        _expect_keys(value, {"kind"}, {"kind"}, locus)
        return ProductFactor("S4")
    if kind == "connsum":
        _expect_keys(value, {"kind", "r"}, {"kind", "r"}, locus)
        return ProductFactor("connsum", _expect_int(value["r"], f"{locus}.r"))
    raise SpecFileError(f"{locus}.kind: expected 'S4' or 'connsum', got {kind!r}")


def parse_spec_data(data: Any, source: str = "<data>") -> SpecFile:
    """Validate a decoded spec document; raises SpecFileError with a locus."""
    if not isinstance(data, dict):
        raise SpecFileError(f"{source}: top level must be an object")
    allowed = {"n", "k", "theta", "assume_cobounding", "graphs", "factors"}
    _expect_keys(data, allowed, set(), source)

    has_graphs = "graphs" in data
    has_factors = "factors" in data
    if has_graphs == has_factors:
        raise SpecFileError(f"{source}: exactly one of 'graphs' or 'factors' is required")

    if has_factors:
        factors_raw = data["factors"]
        if not isinstance(factors_raw, list) or not factors_raw:
            raise SpecFileError(f"{source}.factors: expected a nonempty array")
        for key in ("n", "k", "theta", "assume_cobounding"):
            if key in data:
                raise SpecFileError(f"{source}.{key}: not used with 'factors'")
        factors = tuple(_parse_factor(f, f"{source}.factors[{i}]") for i, f in enumerate(factors_raw))
        return SpecFile(0, 0, 1, False, (), factors)

    for key in ("n", "k"):
        if key not in data:
            raise SpecFileError(f"{source}: missing field {key!r}")
    n = _expect_int(data["n"], f"{source}.n")
    k = _expect_int(data["k"], f"{source}.k")
    theta = _expect_int(data.get("theta", 1), f"{source}.theta")
    cobound = data.get("assume_cobounding", False)
    if not isinstance(cobound, bool):
        raise SpecFileError(f"{source}.assume_cobounding: expected a boolean")
    if n < 3:
        raise SpecFileError(f"{source}.n: n >= 3 required, got {n}")
    if k < 0 or n - k < 2:
        raise SpecFileError(f"{source}.k: need 0 <= k <= n - 2, got {k}")
    if theta < 1:
        raise SpecFileError(f"{source}.theta: positive integer required")

    graphs_raw = data["graphs"]
    if not isinstance(graphs_raw, list) or not graphs_raw:
        raise SpecFileError(f"{source}.graphs: expected a nonempty array")
    graphs = []
    for g_idx, graw in enumerate(graphs_raw):
        locus = f"{source}.graphs[{g_idx}]"
        if not isinstance(graw, dict):
            raise SpecFileError(f"{locus}: expected an object")
        _expect_keys(graw, {"vertices", "edges"}, {"vertices", "edges"}, locus)
        vraw, eraw = graw["vertices"], graw["edges"]
        if not isinstance(vraw, list) or not vraw:
            raise SpecFileError(f"{locus}.vertices: expected a nonempty array")
        if not isinstance(eraw, list):
            raise SpecFileError(f"{locus}.edges: expected an array")
        vertices = tuple(
            _parse_vertex(v, n, k, theta, f"{locus}.vertices[{i}]") for i, v in enumerate(vraw)
        )
        edges = tuple(_parse_edge(e, f"{locus}.edges[{i}]") for i, e in enumerate(eraw))
        graph = DecoratedGraph(vertices, edges)
        report = validate_graph(graph)
        if not report.ok:
            first = report.first
            raise SpecFileError(f"{locus}.{first.locus}: {first.message}")
        graphs.append(graph)
    return SpecFile(n, k, theta, cobound, tuple(graphs), ())


def parse_spec(path: str) -> SpecFile:
    """Parse and fully validate a spec file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise SpecFileError(f"{path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SpecFileError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    return parse_spec_data(data, source=path)


def spec_to_data(spec: SpecFile) -> dict:
    """Normalized JSON document for a spec (defaults made explicit)."""
    if spec.factors:
        return {
            "factors": [
                {"kind": f.kind} if f.kind == "S4" else {"kind": f.kind, "r": f.r}
                for f in spec.factors
            ]
        }
    graphs = []
    for graph in spec.graphs:
        vertices = []
        for v in graph.vertices:
            if isinstance(v, BlackVertex):
                vertices.append({"color": "black", "matrix": v.link.form.matrix.to_rows()})
            else:
                vertices.append(
                    {
                        "color": "white",
                        "fiber": {
                            "betti": list(v.fiber.betti),
                            "boundary_components": v.fiber.boundary_components,
                        },
                    }
                )
        edges = []
        for e in graph.edges:
            entry = {"u": e.u, "v": e.v, "u_comp": e.u_comp, "v_comp": e.v_comp}
            if e.twist is not None:
                entry["twist"] = e.twist
            edges.append(entry)
        graphs.append({"vertices": vertices, "edges": edges})
    return {
        "n": spec.n,
        "k": spec.k,
        "theta": spec.theta,
        "assume_cobounding": spec.assume_cobounding,
        "graphs": graphs,
    }


# ---------------------------------------------------------------------------
# report assembly


def _link_section(spec: SpecFile) -> list[dict]:
    out = []
    for g_idx, graph in enumerate(spec.graphs):
        for v_idx, v in black_vertices(graph):
            link = v.link
            adm = admissibility_check(link)
            klass = classified_form_type(link.form)
            classification: Optional[dict] = (
                {"p": klass.p, "q": klass.q} if klass.p is not None else None
            )
            try:
                linking: Optional[list[list[int]]] = derived_linking_matrix(link).to_rows()
            except NotUnimodularError:
                linking = None
            out.append(
                {
                    "graph": g_idx,
                    "vertex": v_idx,
                    "size": link.d,
                    "determinant": adm.determinant,
                    "unimodular": adm.unimodular,
                    "skew_rank_even": adm.skew_rank_even,
                    "admissible": adm.admissible,
                    "directly_fibered": adm.directly_fibered,
                    "parity": klass.parity,
                    "definiteness": klass.definiteness,
                    "classification": classification,
                    "linking_matrix": linking,
                    "notes": list(adm.notes),
                }
            )
    return out


def _oracle_section(spec: SpecFile) -> dict:
    checks = []
    all_match = True
    for g_idx, graph in enumerate(spec.graphs):
        for v_idx, v in black_vertices(graph):
            form = v.link.form
            try:
                lk = derived_linking_matrix(form)
            except NotUnimodularError as exc:
                checks.append(
                    {"graph": g_idx, "vertex": v_idx, "component": None, "group": None,
                     "match": False, "error": str(exc)}
                )
                all_match = False
                continue
            for s in range(form.dim + 1):
                result = presentation_oracle(form, s)
                column = tuple(lk.at(j, s) for j in range(form.dim + 1))
                match = oracle_matches_column(result, column)
                checks.append(
                    {
                        "graph": g_idx,
                        "vertex": v_idx,
                        "component": s,
                        "group": result.group_description(),
                        "match": match,
                    }
                )
                all_match = all_match and match
    return {"checks": checks, "all_match": all_match}


def build_report(spec: SpecFile, oracle: bool = False) -> dict:
    """Assemble the full report document for a parsed spec."""
    if spec.factors:
        bound = product_phi_bound(list(spec.factors))
        return {
            "kind": "product",
            "spec": spec_to_data(spec),
            "chi": bound.euler,
            "phi": {"lower": bound.lower, "upper": bound.upper},
            "notes": list(bound.notes),
        }

    report = invariant_report(list(spec.graphs), spec.n, spec.k, spec.assume_cobounding)
    if spec.k == 0:
        cup = assemble_cup_form(list(spec.graphs))
    else:
        cup, _ = cup_form_for_graph(spec.graphs[0])
    doc: dict[str, Any] = {
        "kind": "graphs",
        "spec": spec_to_data(spec),
        "graphs": [],
        "links": _link_section(spec),
        "cup_form": {"epsilon": cup.epsilon, "matrix": cup.matrix.to_rows()},
        "chi": report.chi,
        "sigma": report.sigma,
        "inertia": None
        if report.inertia is None
        else {
            "n_plus": report.inertia.n_plus,
            "n_minus": report.inertia.n_minus,
            "n_zero": report.inertia.n_zero,
        },
        "kernel_dim": report.kernel_dim,
        "kernel_basis": [[str(x) for x in vec] for vec in report.kernel_basis],
        "homology_ranks": None
        if report.homology_ranks is None
        else {str(i): r for i, r in sorted(report.homology_ranks.items())},
        "phi": None
        if report.phi_lower is None
        else {"lower": report.phi_lower, "upper": report.phi_upper},
        "notes": list(report.notes),
        "verdicts": list(report.verdicts),
    }
    for g_idx, graph in enumerate(spec.graphs):
        counts = graph_counts(graph)
        doc["graphs"].append(
            {
                "index": g_idx,
                "m": counts.m,
                "s_black": counts.s_black,
                "g": counts.g,
                "t": counts.t,
            }
        )
    if oracle:
        doc["oracle"] = _oracle_section(spec)
    return doc


def _render_text(doc: dict) -> str:
    lines: list[str] = []
    push = lines.append
    if doc["kind"] == "product":
        push("product report")
        spec = doc["spec"]
        for i, f in enumerate(spec["factors"]):
            desc = "S^4" if f["kind"] == "S4" else f"connected sum of {f['r']} copies of S^2 x S^2"
            push(f"  factor {i}: {desc}")
        push(f"  chi = {doc['chi']}")
        push(f"  critical points over S^3: between {doc['phi']['lower']} and {doc['phi']['upper']}")
        for note in doc["notes"]:
            push(f"  note: {note}")
        return "\n".join(lines) + "\n"

    spec = doc["spec"]
    push("graph report")
    push(
        f"  n = {spec['n']}, k = {spec['k']}, theta = {spec['theta']}, "
        f"assume_cobounding = {str(spec['assume_cobounding']).lower()}"
    )
    for g in doc["graphs"]:
        push(
            f"  graph {g['index']}: edges m = {g['m']}, black vertices s = {g['s_black']}, "
            f"loops g = {g['g']}, handles t = {g['t']}"
        )
    for link in doc["links"]:
        c = link["classification"]
        cls = f"(p, q) = ({c['p']}, {c['q']})" if c else "not classified"
        push(
            f"  link at graph {link['graph']} vertex {link['vertex']}: size {link['size']}, "
            f"det {link['determinant']}, {link['parity']}, {link['definiteness']}, "
            f"admissible = {str(link['admissible']).lower()}, "
            f"directly fibered = {str(link['directly_fibered']).lower()}, {cls}"
        )
        for note in link["notes"]:
            push(f"    note: {note}")
    push("  cup form (edge basis):")
    for row in doc["cup_form"]["matrix"]:
        push(f"    [{', '.join(str(x) for x in row)}]")
    push(f"  chi = {doc['chi']}")
    if doc["inertia"] is not None:
        ine = doc["inertia"]
        push(
            f"  inertia = ({ine['n_plus']}, {ine['n_minus']}, {ine['n_zero']}), sigma = {doc['sigma']}"
        )
    else:
        push(f"  sigma = {doc['sigma']} (skew convention)")
    push(f"  kernel dimension = {doc['kernel_dim']}")
    for vec in doc["kernel_basis"]:
        push(f"    kernel vector: ({', '.join(vec)})")
    if doc["homology_ranks"] is not None:
        ranks = ", ".join(f"b_{i} = {r}" for i, r in sorted(doc["homology_ranks"].items(), key=lambda kv: int(kv[0])) if r)
        push(f"  homology ranks: {ranks}")
    if doc["phi"] is not None:
        push(f"  critical points over S^{spec['n'] - spec['k']}: between {doc['phi']['lower']} and {doc['phi']['upper']}")
    for note in doc["notes"]:
        push(f"  note: {note}")
    for verdict in doc["verdicts"]:
        push(f"  verdict: {verdict}")
    if "oracle" in doc:
        push(f"  oracle: all_match = {str(doc['oracle']['all_match']).lower()}")
        for chk in doc["oracle"]["checks"]:
            push(
                f"    graph {chk['graph']} vertex {chk['vertex']} component {chk['component']}: "
                f"group {chk['group']}, match = {str(chk['match']).lower()}"
            )
    return "\n".join(lines) + "\n"


def emit_report(spec: SpecFile, fmt: str = "text", oracle: bool = False) -> str:
    """Render the report document; output is byte-deterministic per input."""
    doc = build_report(spec, oracle=oracle)
    if fmt == "json":
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if fmt == "text":
        return _render_text(doc)
    raise ValueError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# subcommands


def _load_matrix_file(path: str) -> IntMatrix:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise SpecFileError(f"{path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SpecFileError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    return _parse_matrix(data, path)


def _cmd_report(args) -> int:
    spec = parse_spec(args.spec)
    doc = build_report(spec, oracle=args.oracle)
    if args.format == "json":
        sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write(_render_text(doc))
    if args.oracle and not doc.get("oracle", {}).get("all_match", True):
        raise OracleMismatchError("presentation oracle mismatch; see report")
    return 0


def _cmd_check_link(args) -> int:
    matrix = _load_matrix_file(args.matrix)
    eps = (-1) ** args.n
    try:
        form = BilinearForm(matrix, eps)
        link = HopfLinkSpec(form, n=args.n, k=args.k, theta=args.theta)
    except (SymmetryError, ValueError) as exc:
        raise SpecFileError(f"{args.matrix}: {exc}") from exc
    adm = admissibility_check(link)
    doc = {
        "n": args.n,
        "k": args.k,
        "size": link.d,
        "determinant": adm.determinant,
        "unimodular": adm.unimodular,
        "skew_rank_even": adm.skew_rank_even,
        "admissible": adm.admissible,
        "directly_fibered": adm.directly_fibered,
        "notes": list(adm.notes),
    }
    if args.format == "json":
        sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write(
            f"link check: size {doc['size']}, n = {doc['n']}, k = {doc['k']}\n"
            f"  determinant = {doc['determinant']}\n"
            f"  admissible = {str(doc['admissible']).lower()}\n"
            f"  directly fibered = {str(doc['directly_fibered']).lower()}\n"
            + "".join(f"  note: {note}\n" for note in doc["notes"])
        )
    return 0


def _cmd_classify(args) -> int:
    matrix = _load_matrix_file(args.matrix)
    if matrix.is_symmetric():
        eps = 1
    elif matrix.is_skew_symmetric():
        eps = -1
    else:
        raise SpecFileError(f"{args.matrix}: matrix is neither symmetric nor skew-symmetric")
    form = BilinearForm(matrix, eps)
    klass = form_type(form)
    doc: dict[str, Any] = {
        "size": form.dim,
        "epsilon": eps,
        "determinant": form.det(),
        "parity": klass.parity,
        "definiteness": klass.definiteness,
        "unimodular": klass.unimodular,
    }
    try:
        p, q = classify_indefinite(form)
        doc["classification"] = {"p": p, "q": q}
    except ClassificationError as exc:
        doc["classification"] = None
        doc["classification_note"] = str(exc)
    if args.format == "json":
        sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    else:
        lines = [
            f"form: size {doc['size']}, epsilon {doc['epsilon']}, det {doc['determinant']}",
            f"  parity = {doc['parity']}, definiteness = {doc['definiteness']}, "
            f"unimodular = {str(doc['unimodular']).lower()}",
        ]
        if doc["classification"]:
            c = doc["classification"]
            lines.append(f"  classification: (p, q) = ({c['p']}, {c['q']})")
        else:
            lines.append(f"  classification: not applicable ({doc['classification_note']})")
        sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _cmd_oracle(args) -> int:
    spec = parse_spec(args.spec)
    if spec.factors:
        sys.stdout.write("oracle: no links to check in a product spec\n")
        return 0
    section = _oracle_section(spec)
    if args.format == "json":
        sys.stdout.write(json.dumps(section, sort_keys=True, indent=2) + "\n")
    else:
        for chk in section["checks"]:
            sys.stdout.write(
                f"graph {chk['graph']} vertex {chk['vertex']} component {chk['component']}: "
                f"group {chk['group']}, match = {str(chk['match']).lower()}\n"
            )
        sys.stdout.write(f"all_match = {str(section['all_match']).lower()}\n")
    if not section["all_match"]:
        raise OracleMismatchError("presentation oracle disagrees with the derived linking matrix")
    return 0


def _selftest(seed: int, trials: int) -> list[str]:
    import random

    from .exactlinalg import inertia_charpoly, inertia_ldlt, nullspace_rational

    rng = random.Random(seed)
    lines = []
    failures = 0

    ok = True
    for _ in range(trials):
        eps = rng.choice([1, -1])
        form = sampling.random_zero_diagonal_form(rng, eps)
        lk = derived_linking_matrix(form)
        if any(sum(lk.row(i)) != 0 for i in range(lk.rows)):
            ok = False
    lines.append(f"row-sum identity on {trials} random forms: {'pass' if ok else 'FAIL'}")
    failures += not ok

    ok = True
    for _ in range(trials):
        m = sampling.random_symmetric(rng, rng.randint(1, 8), bound=6)
        if inertia_ldlt(m) != inertia_charpoly(m):
            ok = False
    lines.append(
        f"dual inertia agreement on {trials} random symmetric matrices: {'pass' if ok else 'FAIL'}"
    )
    failures += not ok

    ok = True
    for _ in range(trials):
        eps = rng.choice([1, -1])
        form = sampling.random_zero_diagonal_form(rng, eps)
        basis = nullspace_rational(derived_linking_matrix(form))
        if len(basis) != 1 or any(x != basis[0][0] for x in basis[0]):
            ok = False
    lines.append(f"all-ones kernel on {trials} derived matrices: {'pass' if ok else 'FAIL'}")
    failures += not ok

    if failures:
        raise AlgorithmMismatchError(f"{failures} selftest group(s) failed")
    return lines


def _cmd_selftest(args) -> int:
    for line in _selftest(args.seed, args.trials):
        sys.stdout.write(line + "\n")
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage errors are spec errors, not internal ones
        raise SpecFileError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hopfcalc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_report = sub.add_parser("report", help="full invariant report for a spec file")
    p_report.add_argument("spec")
    p_report.add_argument("--format", choices=("text", "json"), default="text")
    p_report.add_argument("--oracle", action="store_true", help="include oracle cross-checks")
    p_report.set_defaults(func=_cmd_report)

    p_check = sub.add_parser("check-link", help="admissibility report for one decoration matrix")
    p_check.add_argument("--matrix", required=True)
    p_check.add_argument("--n", type=int, required=True)
    p_check.add_argument("--k", type=int, default=0)
    p_check.add_argument("--theta", type=int, default=1)
    p_check.add_argument("--format", choices=("text", "json"), default="text")
    p_check.set_defaults(func=_cmd_check_link)

    p_classify = sub.add_parser("classify", help="classify a bilinear form")
    p_classify.add_argument("--matrix", required=True)
    p_classify.add_argument("--format", choices=("text", "json"), default="text")
    p_classify.set_defaults(func=_cmd_classify)

    p_oracle = sub.add_parser("oracle", help="presentation-oracle cross-checks for a spec file")
    p_oracle.add_argument("spec")
    p_oracle.add_argument("--format", choices=("text", "json"), default="text")
    p_oracle.set_defaults(func=_cmd_oracle)

    p_self = sub.add_parser("selftest", help="randomized property checks")
    p_self.add_argument("--seed", type=int, default=0)
    p_self.add_argument("--trials", type=int, default=25)
    p_self.set_defaults(func=_cmd_selftest)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SpecFileError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except (GraphValidationError, UnsupportedShapeError, NotUnimodularError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except (OracleMismatchError, AlgorithmMismatchError) as exc:
        sys.stderr.write(f"internal invariant violation: {exc}\n")
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
