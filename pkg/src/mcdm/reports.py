"""Commands behind the CLI. Each returns a JSON-ready report dict; ``render``
turns a report into table, JSON or CSV text."""

from __future__ import annotations

import csv
import io
import json
import math
from typing import Callable, Sequence

import numpy as np

from .ahp import ahp_criteria_weights, run_ahp
from .anp import anp_priorities, block_consistency, build_supermatrix
from .core import DecisionProblem, RankingResult
from .errors import LambdaOutOfRange, MissingSection, ParseError, UnknownMethod, ValidationError
from .loaders import ProblemFile, problem_to_dict
from .ratio import copras, fuca, moora
from .simple import DEFAULT_LAMBDA, mew, saw, waspas, waspas_sweep

ACM_METHODS: dict[str, Callable[..., RankingResult]] = {
    "saw": saw,
    "mew": mew,
    "copras": copras,
    "moora": moora,
    "fuca": fuca,
    "waspas": waspas,
}


def run_method(problem: DecisionProblem, method: str, lam: float = DEFAULT_LAMBDA) -> RankingResult:
    key = method.lower()
    if key not in ACM_METHODS:
        raise UnknownMethod(f"unknown method {method!r}; choose from {', '.join(ACM_METHODS)}")
    if key == "waspas":
        return waspas(problem, lam)
    return ACM_METHODS[key](problem)


def ranking_to_dict(result: RankingResult) -> dict:
    return {
        "method": result.method,
        "ordering": result.ordering.value,
        "alternatives": [{"label": a, "score": float(s), "rank": float(r)}
                         for a, s, r in zip(result.alternatives, result.scores, result.ranks)],
        "ranking": result.ranking_string(),
        "diagnostics": dict(result.diagnostics),
    }


def _need_problem(pf: ProblemFile | DecisionProblem) -> DecisionProblem:
    problem = pf if isinstance(pf, DecisionProblem) else pf.problem
    if problem is None:
        raise MissingSection("this command needs a decision problem (alternatives, criteria, values)")
    return problem


def cmd_rank(pf, method: str, lam: float = DEFAULT_LAMBDA) -> dict:
    problem = _need_problem(pf)
    return {"command": "rank", "problem": problem_to_dict(problem),
            "result": ranking_to_dict(run_method(problem, method, lam))}


def cmd_compare(pf, methods: Sequence[str] | None = None, lam: float = DEFAULT_LAMBDA) -> dict:
    problem = _need_problem(pf)
    chosen = list(dict.fromkeys(m.lower() for m in (methods or ACM_METHODS)))
    for m in chosen:
        if m not in ACM_METHODS:
            raise UnknownMethod(f"unknown method {m!r}; choose from {', '.join(ACM_METHODS)}")
    if len(chosen) < 2:
        raise ValidationError("compare needs at least two distinct methods")
    results = [run_method(problem, m, lam) for m in chosen]
    return {
        "command": "compare",
        "problem": problem_to_dict(problem),
        "methods": chosen,
        "ranks": {a: {r.method: float(r.ranks[i]) for r in results}
                  for i, a in enumerate(problem.alternatives)},
        "top": {r.method: list(r.top) for r in results},
        "results": [ranking_to_dict(r) for r in results],
    }


def cmd_ahp(pf: ProblemFile, strict: bool = False, weights_only: bool = False,
            hybrid: str | None = None, lam: float = DEFAULT_LAMBDA) -> dict:
    model = pf.ahp
    if model is None:
        raise MissingSection("file has no 'ahp' section")
    report: dict = {"command": "ahp"}
    if pf.problem is not None:
        report["problem"] = problem_to_dict(pf.problem)
    if weights_only or hybrid:
        if model.criteria_matrix is not None:
            weights, rep = ahp_criteria_weights(model.criteria_matrix, strict)
            report["criteria_consistency"] = rep.as_dict()
        else:
            weights = np.array(model.explicit_weights)
            report["criteria_consistency"] = None
        report["criteria_weights"] = weights.tolist()
        if hybrid:
            problem = _need_problem(pf).with_weights(weights)
            report["hybrid"] = ranking_to_dict(run_method(problem, hybrid, lam))
        return report
    res = run_ahp(model, pf.problem, strict)
    report["criteria_weights"] = res.weights.tolist()
    report["criteria_consistency"] = (res.criteria_consistency.as_dict()
                                      if res.criteria_consistency else None)
    report["local_priorities"] = res.local.tolist()
    report["local_consistency"] = [r.as_dict() for r in res.local_consistency]
    report["alternative_matrices"] = [M.entries.tolist() for M in res.alternative_matrices]
    report["result"] = ranking_to_dict(res.ranking)
    return report


def cmd_anp(pf: ProblemFile, strict: bool = False) -> dict:
    if pf.anp is None:
        raise MissingSection("file has no 'anp' section")
    net = pf.anp.network
    weighted = build_supermatrix(net, strict)
    ranking, limit = anp_priorities(net, pf.anp.goal, pf.anp.alternatives_cluster, strict=strict)
    return {
        "command": "anp",
        "nodes": list(net.nodes),
        "goal": pf.anp.goal,
        "weighted_supermatrix": weighted.matrix.tolist(),
        "limit_supermatrix": limit.matrix.tolist(),
        "block_consistency": [{"parent": p, "cluster": c, **rep.as_dict()}
                              for (p, c), rep in block_consistency(net).items()],
        "result": ranking_to_dict(ranking),
    }


def parse_grid(text: str) -> list[float]:
    """``"A:B:STEP"`` -> [A, A+STEP, ..., B]; values snapped to 12 decimals."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ParseError(f"grid must look like START:STOP:STEP, got {text!r}", "--grid")
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError:
        raise ParseError(f"non-numeric grid {text!r}", "--grid") from None
    if not all(math.isfinite(x) for x in (start, stop, step)) or step <= 0:
        raise ParseError("grid step must be a positive number", "--grid")
    if stop < start:
        raise ParseError("grid stop must not be below its start", "--grid")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    grid = [round(start + k * step, 12) for k in range(count)]
    for lam in grid:
        if not 0.0 <= lam <= 1.0:
            raise LambdaOutOfRange(f"grid value {lam} outside [0, 1]")
    return grid


def cmd_waspas_sweep(pf, grid: str | Sequence[float] = "0:1:0.1") -> dict:
    problem = _need_problem(pf)
    lambdas = parse_grid(grid) if isinstance(grid, str) else [float(x) for x in grid]
    results = waspas_sweep(problem, lambdas)
    rows, previous = [], None
    for lam, r in zip(lambdas, results):
        changed = previous is not None and not np.array_equal(previous, r.ranks)
        rows.append({"lambda": lam, "scores": r.scores.tolist(), "ranks": r.ranks.tolist(),
                     "ranking": r.ranking_string(), "rank_change": bool(changed)})
        previous = r.ranks
    return {
        "command": "waspas-sweep",
        "problem": problem_to_dict(problem),
        "alternatives": list(problem.alternatives),
        "rows": rows,
        "rank_changes": any(row["rank_change"] for row in rows),
        "top": sorted({a for r in results for a in r.top}, key=problem.alternatives.index),
    }


# ---------------------------------------------------------------- rendering

def _fmt(x) -> str:
    return f"{x:.4f}" if isinstance(x, float) else str(x)


def _rank_fmt(r: float) -> str:
    return str(int(r)) if float(r).is_integer() else f"{r:g}"


def _grid(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [max(len(str(c)) for c in col) for col in zip(header, *rows)]

    def line(cells):
        return "  ".join(str(c).rjust(w) if k else str(c).ljust(w)
                         for k, (c, w) in enumerate(zip(cells, widths)))

    return "\n".join([line(header), line(["-" * w for w in widths]), *map(line, rows)])


def _ranking_table(res: dict) -> str:
    rows = [[a["label"], f"{a['score']:.4f}", _rank_fmt(a["rank"])] for a in res["alternatives"]]
    score = "R_i" if res["ordering"] == "lower" else "P_i"
    out = [f"method: {res['method']}", _grid(["alternative", score, "rank"], rows),
           f"ranking: {res['ranking']}"]
    for k, v in res.get("diagnostics", {}).items():
        out.append(f"{k}: {_fmt(v)}")
    return "\n".join(out)


def _consistency_line(rep: dict) -> str:
    flag = "acceptable" if rep["acceptable"] else "NOT acceptable"
    return (f"lambda_max = {rep['lambda_max']:.4f}, CI = {rep['ci']:.4f}, "
            f"CR = {rep['cr']:.4f} ({flag})")


def _matrix_table(nodes, matrix) -> str:
    return _grid(["", *nodes], [[n, *(f"{x:.4f}" for x in row)] for n, row in zip(nodes, matrix)])


def render_table(report: dict) -> str:
    cmd = report["command"]
    if cmd == "rank":
        return _ranking_table(report["result"])
    if cmd == "compare":
        methods = report["methods"]
        rows = [[a, *(_rank_fmt(ranks[m]) for m in methods)] for a, ranks in report["ranks"].items()]
        rows.append(["top", *(" = ".join(report["top"][m]) for m in methods)])
        lines = [_grid(["alternative", *methods], rows), ""]
        lines += [f"{r['method']}: {r['ranking']}" for r in report["results"]]
        return "\n".join(lines)
    if cmd == "ahp":
        labels = [c["label"] for c in report["problem"]["criteria"]] if "problem" in report else \
            [f"C{j + 1}" for j in range(len(report["criteria_weights"]))]
        out = ["criteria weights:",
               _grid(["criterion", "weight"],
                     [[c, f"{w:.4f}"] for c, w in zip(labels, report["criteria_weights"])])]
        if report.get("criteria_consistency"):
            out.append(_consistency_line(report["criteria_consistency"]))
        if "hybrid" in report:
            out += ["", "hybrid ranking with AHP weights:", _ranking_table(report["hybrid"])]
        if "local_priorities" in report:
            alts = [a["label"] for a in report["result"]["alternatives"]]
            out += ["", "local priorities:",
                    _grid(["alternative", *labels],
                          [[a, *(f"{x:.4f}" for x in row)]
                           for a, row in zip(alts, report["local_priorities"])])]
            out += [f"{c}: {_consistency_line(rep)}"
                    for c, rep in zip(labels, report["local_consistency"])]
            out += ["", _ranking_table(report["result"])]
        return "\n".join(out)
    if cmd == "anp":
        nodes = report["nodes"]
        out = ["weighted supermatrix:", _matrix_table(nodes, report["weighted_supermatrix"]), "",
               "limit supermatrix:", _matrix_table(nodes, report["limit_supermatrix"]), ""]
        out += [f"{b['parent']} -> {b['cluster']}: {_consistency_line(b)}"
                for b in report["block_consistency"]]
        out += ["", _ranking_table(report["result"])]
        return "\n".join(out)
    if cmd == "waspas-sweep":
        alts = report["alternatives"]
        rows = [[f"{row['lambda']:.2f}", *(f"{s:.4f}" for s in row["scores"]),
                 row["ranking"], "*" if row["rank_change"] else ""] for row in report["rows"]]
        out = [_grid(["lambda", *alts, "ranking", "changed"], rows)]
        out.append("rank changes across the grid: " + ("yes" if report["rank_changes"] else "none"))
        return "\n".join(out)
    raise ValueError(f"no table layout for command {cmd!r}")


def _ranking_csv(res: dict, writer) -> None:
    writer.writerow(["alternative", "score", "rank"])
    for a in res["alternatives"]:
        writer.writerow([a["label"], repr(a["score"]), repr(a["rank"])])


def render_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    cmd = report["command"]
    if cmd in ("rank", "anp"):
        _ranking_csv(report["result"], writer)
    elif cmd == "ahp":
        ranked = report.get("hybrid") or report.get("result")
        if ranked is not None:
            _ranking_csv(ranked, writer)
        else:
            writer.writerow(["criterion", "weight"])
            for j, w in enumerate(report["criteria_weights"]):
                writer.writerow([j + 1, repr(w)])
    elif cmd == "compare":
        writer.writerow(["alternative", *report["methods"]])
        for a, ranks in report["ranks"].items():
            writer.writerow([a, *(repr(ranks[m]) for m in report["methods"])])
    elif cmd == "waspas-sweep":
        alts = report["alternatives"]
        writer.writerow(["lambda", *(f"score_{a}" for a in alts), *(f"rank_{a}" for a in alts),
                         "rank_change"])
        for row in report["rows"]:
            writer.writerow([repr(row["lambda"]), *map(repr, row["scores"]),
                             *map(repr, row["ranks"]), int(row["rank_change"])])
    return buf.getvalue()


def render(report: dict, fmt: str = "table") -> str:
    if fmt == "json":
        # json writes floats with repr, so full binary precision survives
        return json.dumps(report, indent=2)
    if fmt == "csv":
        return render_csv(report)
    if fmt == "table":
        return render_table(report)
    raise ValueError(f"unknown output format {fmt!r}")
