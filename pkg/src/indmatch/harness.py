"""Bound verification and batch benchmarking.

Every pass/fail decision is made with exact integer or rational
arithmetic; floats only ever appear in the human-readable decimal
renderings next to the exact values.
"""

from __future__ import annotations

import csv
import io
import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exact import exact_induced_matching, upper_bound_regular
from .graph import (
    Graph,
    GraphError,
    conflict_set,
    degeneracy,
    is_c3c5_free,
    is_induced_matching,
    private_conflicts,
    read_edge_list,
    regular_degree,
)
from .greedy import (
    approx_bip_detail,
    degenerate_greedy,
    find_cheap_edge,
    greedy_f,
    greedy_strong_coloring,
    lemma_threshold,
    local_search,
)
from .generators import GenSpec, GenerationError

CSV_COLUMNS = ["instance", "n", "m", "d_or_irregular", "k", "alg", "size",
               "exact", "bound_name", "required", "achieved", "pass", "millis"]


def frac_str(x) -> str:
    """Exact rendering of an int/Fraction: '3', '51/20', ...; '' for None."""
    if x is None:
        return ""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def frac_decimal(x, places: int = 6) -> str:
    if x is None:
        return ""
    return f"{float(Fraction(x)):.{places}f}"


def ceil_frac(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


@dataclass
class BoundCheck:
    name: str
    alg: str
    direction: str  # "lower": achieved >= required; "upper": achieved <= required
    required: Optional[Fraction] = None
    achieved: Optional[Fraction] = None
    passed: Optional[bool] = None
    skipped: bool = False
    reason: str = ""

    def decide(self) -> "BoundCheck":
        if not self.skipped:
            if self.direction == "lower":
                self.passed = self.achieved >= self.required
            else:
                self.passed = self.achieved <= self.required
        return self

    def to_json(self) -> dict:
        out = {"name": self.name, "alg": self.alg, "direction": self.direction,
               "required": frac_str(self.required),
               "achieved": frac_str(self.achieved)}
        if self.skipped:
            out["skipped"] = True
            out["reason"] = self.reason
        else:
            out["pass"] = self.passed
            out["required_decimal"] = frac_decimal(self.required)
            out["achieved_decimal"] = frac_decimal(self.achieved)
        return out


@dataclass
class BoundReport:
    instance: str
    n: int
    m: int
    d_or_irregular: str
    k: int
    sizes: dict = field(default_factory=dict)
    exact: Optional[int] = None
    exact_budget_exhausted: bool = False
    checks: list = field(default_factory=list)
    errors: list = field(default_factory=list)
    millis: Optional[float] = None

    def to_json(self) -> dict:
        out = {
            "instance": self.instance, "n": self.n, "m": self.m,
            "d_or_irregular": self.d_or_irregular, "k": self.k,
            "sizes": dict(sorted(self.sizes.items())),
            "exact": self.exact,
            "checks": [c.to_json() for c in self.checks],
        }
        if self.exact_budget_exhausted:
            out["exact_budget_exhausted"] = True
        if self.errors:
            out["errors"] = list(self.errors)
        if self.millis is not None:
            out["millis"] = round(self.millis, 3)
        return out

    def check(self, name: str) -> BoundCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


@dataclass(frozen=True)
class VerifyConfig:
    algorithms: tuple = ("trivial-greedy", "approx-bip", "local-search",
                         "degenerate", "strong-coloring")
    d: Optional[int] = None  # degree parameter; defaults to max degree
    oracle: bool = True
    oracle_edge_limit: int = 40
    node_budget: int = 10_000_000
    timings: bool = False


def theorem1_ratio_bound(d: int) -> Fraction:
    return Fraction(17, 24) * d + Fraction(17 * d, 48 * d - 24)


def verify_lemma2_residual(Gp: Graph, d: int, Mp) -> list[BoundCheck]:
    """Check that every local-search edge of a post-greedy residual has few
    private conflicts: 6*pc <= 5d^2 + 6. Skipped when the residual does not
    satisfy the hypotheses (min conflict size > 17d^2/12, no C3/C5, degree
    and d constraints); an edgeless residual passes vacuously."""
    check = BoundCheck("lemma2_pc_max", "local-search", "upper",
                       required=Fraction(5 * d * d + 6, 6))
    if Gp.m == 0:
        check.achieved = Fraction(0)
        return [check.decide()]
    reasons = []
    if d < 3:
        reasons.append(f"d={d} < 3")
    if Gp.max_degree() > d:
        reasons.append(f"max degree {Gp.max_degree()} > d")
    if not is_c3c5_free(Gp):
        reasons.append("contains a C3 or C5")
    min_c = min(len(conflict_set(Gp, e)) for e in Gp.edge_ids())
    if not min_c * 12 > 17 * d * d:
        reasons.append(f"min conflict size {min_c} <= 17d^2/12")
    if reasons:
        check.skipped = True
        check.reason = "; ".join(reasons)
        return [check]
    pc_max = max((len(private_conflicts(Gp, Mp, e)) for e in Mp), default=0)
    check.achieved = Fraction(pc_max)
    return [check.decide()]


def verify_instance(G: Graph, config: VerifyConfig = VerifyConfig(),
                    instance_id: str = "instance") -> BoundReport:
    """Run the configured algorithms on one graph and evaluate every
    applicable bound; inapplicable bounds are reported as skipped."""
    t0 = time.perf_counter()
    d_reg = regular_degree(G)
    dmax = G.max_degree()
    k = degeneracy(G).k
    m = G.m
    c3c5 = is_c3c5_free(G)
    d = config.d if config.d is not None else (d_reg if d_reg else dmax)

    report = BoundReport(
        instance=instance_id, n=G.n, m=m,
        d_or_irregular=str(d_reg) if d_reg is not None else "irregular",
        k=k)
    checks = report.checks

    if "trivial-greedy" in config.algorithms:
        f = 2 * dmax * dmax - 2 * dmax + 1
        M, trace = greedy_f(G, f)
        report.sizes["trivial-greedy"] = len(M)
        checks.append(BoundCheck("trivial_greedy_empties", "trivial-greedy",
                                 "upper", required=Fraction(0),
                                 achieved=Fraction(trace.residual.m)).decide())
        checks.append(BoundCheck("trivial_greedy_size", "trivial-greedy",
                                 "lower",
                                 required=Fraction(ceil_frac(Fraction(m, f))),
                                 achieved=Fraction(len(M))).decide())

    if "approx-bip" in config.algorithms:
        M1, M2, trace, ab_report = approx_bip_detail(G, d)
        union = M1 | M2
        report.sizes["approx-bip"] = len(union)
        residual = trace.residual
        flags = ab_report["preconditions"]
        lem3b = BoundCheck("lemma3b_size", "approx-bip", "lower",
                           required=Fraction(ceil_frac(Fraction(12 * m, 17 * d * d))),
                           achieved=Fraction(len(union)))
        if flags["c3c5_free"] and flags["d_ok"]:
            lem3b.decide()
        else:
            lem3b.skipped = True
            lem3b.reason = "needs {C3,C5}-free, max degree <= d, d >= 3"
        checks.append(lem3b)
        checks.extend(verify_lemma2_residual(residual, d, M2))
        induced = BoundCheck("approx_bip_induced", "approx-bip", "lower",
                             required=Fraction(1),
                             achieved=Fraction(int(is_induced_matching(G, union))))
        checks.append(induced.decide())

    if "local-search" in config.algorithms:
        report.sizes["local-search"] = len(local_search(G))

    if "degenerate" in config.algorithms:
        if k >= dmax or m == 0:
            checks.append(BoundCheck("theorem2_size", "degenerate", "lower",
                                     skipped=True,
                                     reason=f"needs k < d and edges, got k={k}, d={dmax}, m={m}"))
        else:
            T = lemma_threshold(k, dmax)
            M = degenerate_greedy(G, k, dmax)
            report.sizes["degenerate"] = len(M)
            checks.append(BoundCheck("theorem2_size", "degenerate", "lower",
                                     required=Fraction(ceil_frac(Fraction(m, T))),
                                     achieved=Fraction(len(M))).decide())
            cheap = find_cheap_edge(G, k, dmax)
            checks.append(BoundCheck("lemma4_cheap_edge", "degenerate", "upper",
                                     required=Fraction(T),
                                     achieved=Fraction(len(conflict_set(G, cheap)))).decide())

    if "strong-coloring" in config.algorithms:
        coloring = greedy_strong_coloring(G)
        report.sizes["strong-coloring"] = coloring.num_colors
        limit = 2 * dmax * dmax - 2 * dmax + 1 if dmax else 0
        checks.append(BoundCheck("strong_coloring_count", "strong-coloring",
                                 "upper", required=Fraction(limit),
                                 achieved=Fraction(coloring.num_colors)).decide())
        classes = coloring.classes()
        ok = (sum(len(c) for c in classes) == m
              and set().union(*classes, frozenset()) == G.present
              and all(is_induced_matching(G, c) for c in classes))
        checks.append(BoundCheck("strong_coloring_classes", "strong-coloring",
                                 "lower", required=Fraction(1),
                                 achieved=Fraction(int(ok))).decide())

    if config.oracle and m <= config.oracle_edge_limit:
        res = exact_induced_matching(G, config.node_budget)
        report.exact = res.optimum
        report.exact_budget_exhausted = res.budget_exhausted
        for alg, size in sorted(report.sizes.items()):
            if alg == "strong-coloring":
                continue
            checks.append(BoundCheck(f"oracle_dominates_{alg}", alg, "upper",
                                     required=Fraction(res.optimum),
                                     achieved=Fraction(size)).decide())
        if "approx-bip" in report.sizes:
            size = report.sizes["approx-bip"]
            ratio = BoundCheck("theorem1_ratio", "approx-bip", "upper",
                               required=theorem1_ratio_bound(d))
            if d_reg == d and c3c5 and d >= 3 and size > 0 and not res.budget_exhausted:
                ratio.achieved = Fraction(res.optimum, size)
                ratio.decide()
            else:
                ratio.skipped = True
                ratio.reason = "needs {C3,C5}-free d-regular, d >= 3, exact optimum"
            checks.append(ratio)

    if d_reg is not None and d_reg >= 1:
        cap = upper_bound_regular(m, d_reg)
        for alg, size in sorted(report.sizes.items()):
            if alg == "strong-coloring":
                continue
            checks.append(BoundCheck(f"regular_upper_{alg}", alg, "upper",
                                     required=Fraction(cap),
                                     achieved=Fraction(size)).decide())

    if config.timings:
        report.millis = (time.perf_counter() - t0) * 1000.0
    return report


# --- algorithm-run JSON reports (CLI `run` path) ---

def algorithm_report(G: Graph, algorithm: str, params: dict, M,
                     bounds: Optional[list[BoundCheck]] = None,
                     preconditions: Optional[dict] = None,
                     trace=None) -> dict:
    matching = [{"id": e, "u": G.endpoints(e)[0], "v": G.endpoints(e)[1]}
                for e in sorted(M)]
    out = {
        "algorithm": algorithm,
        "params": params,
        "matching": matching,
        "size": len(matching),
        "bounds": [b.to_json() for b in (bounds or [])],
    }
    if preconditions is not None:
        out["preconditions"] = preconditions
    if trace is not None:
        out["trace"] = [{"chosen": s.chosen,
                         "removed": sorted(s.removed),
                         "conflict_size": s.conflict_size}
                        for s in trace.steps]
    return out


# --- benchmarking over a manifest ---

def load_manifest(path) -> list[dict]:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, list):
        raise GraphError("manifest must be a JSON list of instance entries")
    return data


def _resolve_entry(entry: dict, base_dir: str) -> tuple[str, Graph]:
    if "file" in entry:
        path = entry["file"]
        if not os.path.isabs(path):
            path = os.path.join(base_dir, path)
        label = entry.get("id", os.path.basename(path))
        return label, read_edge_list(path)
    spec = GenSpec.from_json(entry)
    return spec.label(), spec.build()


def run_benchmark(manifest: list[dict], config: VerifyConfig = VerifyConfig(),
                  base_dir: str = ".") -> tuple[list[BoundReport], list[dict]]:
    """Verify every manifest instance; unreadable entries become error
    entries and the run continues. Output order follows the manifest
    regardless of worker scheduling. Returns (reports, errors)."""
    resolved: list = []
    errors: list[dict] = []
    for idx, entry in enumerate(manifest):
        try:
            label, G = _resolve_entry(entry, base_dir)
            resolved.append((label, G))
        except (GraphError, GenerationError, OSError, ValueError, KeyError) as exc:
            errors.append({"index": idx, "entry": entry, "error": str(exc)})

    threads = max(1, int(os.environ.get("IMK_THREADS", "1")))

    def work(item):
        label, G = item
        return verify_instance(G, config, instance_id=label)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(work, resolved))
    else:
        reports = [work(item) for item in resolved]
    return reports, errors


def aggregate_reports(reports: list[BoundReport]) -> dict:
    by_bound: dict[str, dict] = {}
    ratios: list[Fraction] = []
    for rep in reports:
        for c in rep.checks:
            slot = by_bound.setdefault(c.name, {"pass": 0, "fail": 0, "skipped": 0})
            if c.skipped:
                slot["skipped"] += 1
            elif c.passed:
                slot["pass"] += 1
            else:
                slot["fail"] += 1
            if c.name == "theorem1_ratio" and not c.skipped:
                ratios.append(c.achieved)
    out = {"instances": len(reports), "bounds": dict(sorted(by_bound.items()))}
    if ratios:
        mean = sum(ratios, Fraction(0)) / len(ratios)
        out["theorem1_ratio"] = {
            "min": frac_str(min(ratios)), "max": frac_str(max(ratios)),
            "mean": frac_str(mean), "mean_decimal": frac_decimal(mean),
        }
    return out


def reports_to_csv(reports: list[BoundReport], timings: bool = False) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rep in reports:
        millis = f"{rep.millis:.3f}" if (timings and rep.millis is not None) else ""
        for c in rep.checks:
            writer.writerow([
                rep.instance, rep.n, rep.m, rep.d_or_irregular, rep.k,
                c.alg, rep.sizes.get(c.alg, ""),
                "" if rep.exact is None else rep.exact,
                c.name, frac_str(c.required), frac_str(c.achieved),
                "skip" if c.skipped else ("pass" if c.passed else "fail"),
                millis,
            ])
    return buf.getvalue()


def benchmark_json(reports: list[BoundReport], errors: list[dict]) -> dict:
    return {
        "reports": [r.to_json() for r in reports],
        "errors": errors,
        "aggregates": aggregate_reports(reports),
    }
