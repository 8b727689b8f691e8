"""Reading problem files (CSV and JSON) and the bundled fixtures.

CSV layout, for plain decision problems::

    alternative,C1,C2,C3
    direction,max,max,min
    weight,0.25,0.33,0.42
    A1,0.93,600,8.25
    ...

JSON layout: ``alternatives``, ``criteria`` (label/direction/weight objects)
and row-major ``values``, plus optional ``ahp`` and ``anp`` sections whose
pairwise judgments are upper-triangle triples ``[row_label, col_label, value]``.
Values in triples may be written as fractions such as ``"1/3"``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .ahp import AhpModel
from .anp import AnpNetwork, Cluster, InfluenceBlock
from .core import Criterion, DecisionProblem, Direction, validate_problem
from .errors import ParseError, ValidationError
from .pairwise import build_pairwise

FIXTURES = ("table8_1", "ahp_8_4", "anp_8_5", "e8_1", "e8_2", "e8_3")


@dataclass(frozen=True, eq=False)
class AnpSection:
    network: AnpNetwork
    goal: str
    alternatives_cluster: str


@dataclass(frozen=True, eq=False)
class ProblemFile:
    problem: DecisionProblem | None = None
    ahp: AhpModel | None = None
    anp: AnpSection | None = None
    source: str = ""


def parse_number(value, where: str | None = None) -> float:
    """Accept ints, floats and numeric strings including fractions like ``"1/3"``."""
    if isinstance(value, bool):
        raise ParseError(f"expected a number, got {value!r}", where)
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, str):
        try:
            return float(Fraction(value.strip()))
        except (ValueError, ZeroDivisionError):
            pass
    raise ParseError(f"expected a number, got {value!r}", where)


def fixture_path(name: str):
    for ext in (".csv", ".json"):
        res = resources.files("mcdm") / "fixtures" / f"{name}{ext}"
        if res.is_file():
            return res
    raise ParseError(f"no bundled fixture named {name!r}; available: {', '.join(FIXTURES)}")


def _read_source(path) -> tuple[str, str]:
    """Return (text, suffix); bare names fall back to the bundled fixtures."""
    p = Path(path)
    if p.is_file():
        return p.read_text(encoding="utf-8"), p.suffix.lower()
    if p.suffix == "" and str(path) in FIXTURES:
        res = fixture_path(str(path))
        return res.read_text(encoding="utf-8"), Path(res.name).suffix.lower()
    raise ParseError(f"cannot read {str(path)!r}: no such file or bundled fixture")


def load_problem(path, format: str = "auto", renormalize: bool = False) -> ProblemFile:
    text, suffix = _read_source(path)
    if format == "auto":
        format = {".csv": "csv", ".json": "json"}.get(suffix)
        if format is None:
            format = "json" if text.lstrip().startswith("{") else "csv"
    if format == "csv":
        pf = ProblemFile(problem=parse_csv(text, renormalize))
    elif format == "json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, f"line {exc.lineno}, column {exc.colno}") from exc
        pf = parse_json(data, renormalize)
    else:
        raise ParseError(f"unknown input format {format!r}")
    return ProblemFile(pf.problem, pf.ahp, pf.anp, str(path))


def parse_csv(text: str, renormalize: bool = False) -> DecisionProblem:
    rows = [r for r in csv.reader(io.StringIO(text)) if any(cell.strip() for cell in r)]
    if len(rows) < 4:
        raise ParseError("CSV needs a header, a direction row, a weight row and at least one alternative")
    header, directions, weights, body = rows[0], rows[1], rows[2], rows[3:]
    n = len(header) - 1
    for line, (row, tag) in enumerate(((directions, "direction"), (weights, "weight")), start=2):
        if row[0].strip().lower() != tag:
            raise ParseError(f"expected row label {tag!r}, got {row[0]!r}", f"line {line}, column 1")
        if len(row) - 1 != n:
            raise ParseError(f"expected {n} entries, got {len(row) - 1}", f"line {line}")
    labels = [h.strip() for h in header[1:]]
    criteria = []
    for j, lab in enumerate(labels):
        try:
            direction = Direction.parse(directions[j + 1])
        except ValueError as exc:
            raise ParseError(str(exc), f"line 2, column {j + 2} ({lab})") from None
        w = parse_number(weights[j + 1], f"line 3, column {j + 2} ({lab})")
        criteria.append(Criterion(lab, direction, w))
    alternatives, values = [], []
    for k, row in enumerate(body, start=4):
        if len(row) - 1 != n:
            raise ParseError(f"expected {n} values, got {len(row) - 1}", f"line {k}")
        alternatives.append(row[0].strip())
        try:
            values.append([float(cell) for cell in row[1:]])
        except ValueError:
            j = next(j for j, cell in enumerate(row[1:]) if not _is_float(cell))
            raise ParseError(f"non-numeric value {row[j + 1]!r}",
                             f"line {k}, column {j + 2} (row {row[0]!r}, criterion {labels[j]!r})") from None
    return validate_problem(DecisionProblem(tuple(alternatives), tuple(criteria), values), renormalize)


def _is_float(cell: str) -> bool:
    try:
        float(cell)
        return True
    except ValueError:
        return False


def _require(obj, key, where):
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"missing field {key!r}", where)
    return obj[key]


def _triples(raw, where):
    if not isinstance(raw, list):
        raise ParseError("expected a list of [row, column, value] triples", where)
    out = []
    for k, t in enumerate(raw):
        if not isinstance(t, (list, tuple)) or len(t) != 3:
            raise ParseError("expected a [row, column, value] triple", f"{where}[{k}]")
        out.append((t[0], t[1], parse_number(t[2], f"{where}[{k}][2]")))
    return out


def _pairwise(raw, labels, where):
    try:
        return build_pairwise(_triples(raw, where), labels=labels)
    except ValidationError as exc:
        raise type(exc)(f"{where}: {exc}") from None


def parse_problem_dict(data, renormalize: bool = False) -> DecisionProblem:
    alternatives = _require(data, "alternatives", "$")
    raw_criteria = _require(data, "criteria", "$")
    raw_values = _require(data, "values", "$")
    criteria = []
    for j, c in enumerate(raw_criteria):
        where = f"criteria[{j}]"
        try:
            direction = Direction.parse(c.get("direction", "max"))
        except (ValueError, AttributeError) as exc:
            raise ParseError(str(exc), where) from None
        criteria.append(Criterion(str(_require(c, "label", where)), direction,
                                  parse_number(_require(c, "weight", where), f"{where}.weight")))
    if not isinstance(raw_values, list):
        raise ParseError("values must be a list of rows", "values")
    values = []
    for i, row in enumerate(raw_values):
        if not isinstance(row, list) or len(row) != len(criteria):
            raise ParseError(f"expected {len(criteria)} values", f"values[{i}]")
        values.append([parse_number(v, f"values[{i}][{j}]") for j, v in enumerate(row)])
    if len(values) != len(alternatives):
        raise ParseError(f"{len(alternatives)} alternatives but {len(values)} value rows", "values")
    return validate_problem(DecisionProblem(tuple(alternatives), tuple(criteria), values), renormalize)


def parse_ahp(section, problem: DecisionProblem | None) -> AhpModel:
    crit_labels = problem.labels if problem else section.get("criteria")
    if crit_labels is None:
        raise ParseError("an AHP section without a decision problem must list 'criteria'", "ahp")
    crit_labels = tuple(crit_labels)
    criteria_matrix = weights = None
    if "criteria_matrix" in section:
        criteria_matrix = _pairwise(section["criteria_matrix"], crit_labels, "ahp.criteria_matrix")
    if "weights" in section:
        weights = tuple(parse_number(w, f"ahp.weights[{k}]") for k, w in enumerate(section["weights"]))
    raw_alt = section.get("alternative_matrices", "derive")
    mats = None
    if raw_alt != "derive":
        alt_labels = problem.alternatives if problem else section.get("alternatives")
        if alt_labels is None:
            raise ParseError("alternative matrices need alternative labels", "ahp.alternatives")
        if not isinstance(raw_alt, dict):
            raise ParseError("expected 'derive' or an object keyed by criterion", "ahp.alternative_matrices")
        missing = [c for c in crit_labels if c not in raw_alt]
        if missing:
            raise ParseError(f"no matrix for criteria {missing}", "ahp.alternative_matrices")
        mats = tuple(_pairwise(raw_alt[c], tuple(alt_labels), f"ahp.alternative_matrices.{c}")
                     for c in crit_labels)
    try:
        return AhpModel(criteria_matrix, weights, mats)
    except ValidationError as exc:
        raise type(exc)(f"ahp: {exc}") from None


def parse_anp(section) -> AnpSection:
    clusters = []
    for k, c in enumerate(_require(section, "clusters", "anp")):
        where = f"anp.clusters[{k}]"
        clusters.append(Cluster(str(_require(c, "label", where)),
                                tuple(str(x) for x in _require(c, "nodes", where))))
    members = {c.label: c.nodes for c in clusters}
    blocks = {}
    for parent, raw_blocks in _require(section, "influence_blocks", "anp").items():
        parsed = []
        for k, b in enumerate(raw_blocks):
            where = f"anp.influence_blocks.{parent}[{k}]"
            cluster = str(_require(b, "cluster", where))
            if cluster not in members:
                raise ValidationError(f"{where}: unknown cluster {cluster!r}")
            comparisons = _triples(b.get("comparisons", []), f"{where}.comparisons")
            if "nodes" in b:
                children = tuple(str(x) for x in b["nodes"])
            else:
                named = {x for t in comparisons for x in t[:2]}
                children = tuple(x for x in members[cluster] if x in named)
            if not children:
                raise ParseError("block names no child nodes", where)
            try:
                matrix = build_pairwise(comparisons, labels=children)
            except ValidationError as exc:
                raise type(exc)(f"{where}: {exc}") from None
            parsed.append(InfluenceBlock(cluster, matrix))
        blocks[str(parent)] = parsed
    splits = {}
    for parent, split in section.get("cluster_splits", {}).items():
        splits[str(parent)] = {str(c): parse_number(w, f"anp.cluster_splits.{parent}.{c}")
                               for c, w in split.items()}
    network = AnpNetwork(tuple(clusters), blocks, splits, section.get("nodes"))
    goal = str(_require(section, "goal", "anp"))
    alt_cluster = str(_require(section, "alternatives_cluster", "anp"))
    if goal not in network.nodes:
        raise ValidationError(f"anp.goal: unknown node {goal!r}")
    network.cluster(alt_cluster)
    return AnpSection(network, goal, alt_cluster)


def parse_json(data, renormalize: bool = False) -> ProblemFile:
    if not isinstance(data, dict):
        raise ParseError("top-level JSON value must be an object", "$")
    problem = parse_problem_dict(data, renormalize) if "values" in data else None
    ahp = parse_ahp(data["ahp"], problem) if "ahp" in data else None
    try:
        anp = parse_anp(data["anp"]) if "anp" in data else None
    except (AttributeError, TypeError) as exc:
        raise ParseError(f"malformed ANP section ({exc})", "anp") from None
    if problem is None and ahp is None and anp is None:
        raise ParseError("file holds no decision problem, AHP or ANP section", "$")
    return ProblemFile(problem, ahp, anp)


def problem_to_dict(problem: DecisionProblem) -> dict:
    """JSON-ready echo of a problem; :func:`parse_problem_dict` reads it back unchanged."""
    return {
        "alternatives": list(problem.alternatives),
        "criteria": [{"label": c.label, "direction": c.direction.value, "weight": c.weight}
                     for c in problem.criteria],
        "values": problem.values.tolist(),
    }

