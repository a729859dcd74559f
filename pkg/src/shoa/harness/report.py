"""Report generation from matrix results: per-problem mean/std, pairwise
rank-sum p-values against the reference algorithm, per-problem mean
ranks with the summed overall ranking, and round-averaged convergence
curves.

Comparison budget note: all algorithms get the same iteration count, as
in the standard protocol, even though the shrike optimizer spends more
objective evaluations per iteration than a 30-agent baseline; the
evaluations column in results.csv shows the actual totals.

Infeasible rounds (no feasible point found) are excluded from samples;
cells left empty by the exclusion are reported as NA and skipped in the
ranking sums.
"""

from __future__ import annotations

import csv
import math
from pathlib import Path

import numpy as np

from ..stats import friedman, mean_std, ordinal_ranks, wilcoxon_rank_sum
from .runner import CurveRecord, ResultRow

P_FLAG = 0.05
NA = "NA"


def _ordered_unique(items) -> list:
    seen = []
    for item in items:
        if item not in seen:
            seen.append(item)
    return seen


def _finals(rows: list[ResultRow]) -> dict[tuple[str, str], dict[int, float]]:
    """(algorithm, problem) -> {round: final best}, feasible rows only."""
    finals: dict[tuple[str, str], dict[int, float]] = {}
    for r in rows:
        if r.feasible:
            finals.setdefault((r.algorithm, r.problem), {})[r.round] = r.best_fitness
    return finals


def _fmt(x: float) -> str:
    return f"{x:.4E}"


def _write_text_table(path: Path, header: list[str], body: list[list[str]]) -> None:
    widths = [len(h) for h in header]
    for row in body:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = [
        "  ".join(h.ljust(widths[i]) for i, h in enumerate(header)),
        "  ".join("-" * w for w in widths),
    ]
    for row in body:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)))
    path.write_text("\n".join(lines) + "\n")


def _write_csv(path: Path, header: list[str], body: list[list[str]]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(body)


def summarize(
    rows: list[ResultRow],
    curves: list[CurveRecord],
    output_dir: str | Path,
    reference: str | None = None,
) -> dict[str, Path]:
    """Emit the report files; returns {report name: path}."""
    if not rows:
        raise ValueError("no result rows to summarize")
    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)
    algorithms = _ordered_unique(r.algorithm for r in rows)
    problems = _ordered_unique(r.problem for r in rows)
    finals = _finals(rows)
    written: dict[str, Path] = {}

    # mean / std per (algorithm, problem)
    header = ["problem"]
    for algo in algorithms:
        header += [f"{algo}_mean", f"{algo}_std"]
    body = []
    for problem in problems:
        line = [problem]
        for algo in algorithms:
            sample = sorted(finals.get((algo, problem), {}).values())
            if len(sample) >= 2:
                mean, std = mean_std(sample)
                line += [_fmt(mean), _fmt(std)]
            elif len(sample) == 1:
                line += [_fmt(sample[0]), NA]
            else:
                line += [NA, NA]
        body.append(line)
    _write_csv(out / "summary_mean_std.csv", header, body)
    _write_text_table(out / "summary_mean_std.txt", header, body)
    written["mean_std"] = out / "summary_mean_std.csv"

    # pairwise rank-sum: reference algorithm against every other
    if reference is None:
        reference = "shoa" if "shoa" in algorithms else algorithms[0]
    others = [a for a in algorithms if a != reference]
    if others:
        header = ["problem"] + [f"{reference}_vs_{a}" for a in others]
        body = []
        for problem in problems:
            ref_sample = [v for _, v in sorted(finals.get((reference, problem), {}).items())]
            line = [problem]
            for algo in others:
                sample = [v for _, v in sorted(finals.get((algo, problem), {}).items())]
                if len(ref_sample) < 2 or len(sample) < 2:
                    line.append(NA)
                else:
                    res = wilcoxon_rank_sum(ref_sample, sample)
                    flag = "*" if res.p_value < P_FLAG else ""
                    line.append(_fmt(res.p_value) + flag)
            body.append(line)
        _write_csv(out / "wilcoxon.csv", header, body)
        _write_text_table(out / "wilcoxon.txt", header, body)
        written["wilcoxon"] = out / "wilcoxon.csv"

    # per-problem mean ranks (rank per round, average over rounds),
    # then the summed mean rank and final placement
    if len(algorithms) >= 2:
        header = ["problem"] + list(algorithms)
        body = []
        totals = np.zeros(len(algorithms))
        for problem in problems:
            per_algo = [finals.get((algo, problem), {}) for algo in algorithms]
            rounds = sorted(set().union(*[set(d) for d in per_algo]))
            rank_sum = np.zeros(len(algorithms))
            rank_cnt = np.zeros(len(algorithms))
            for rnd in rounds:
                present = [i for i, d in enumerate(per_algo) if rnd in d]
                if len(present) < 2:
                    continue
                values = [per_algo[i][rnd] for i in present]
                row_ranks = friedman([values]).mean_ranks
                for pos, i in enumerate(present):
                    rank_sum[i] += row_ranks[pos]
                    rank_cnt[i] += 1
            line = [problem]
            for i in range(len(algorithms)):
                if rank_cnt[i] == 0:
                    line.append(NA)
                else:
                    mean_rank = rank_sum[i] / rank_cnt[i]
                    totals[i] += mean_rank
                    line.append(f"{mean_rank:.2f}")
            body.append(line)
        body.append(["Mean Rank"] + [f"{t:.2f}" for t in totals])
        body.append(["Rank"] + [str(r) for r in ordinal_ranks(totals)])
        _write_csv(out / "friedman.csv", header, body)
        _write_text_table(out / "friedman.txt", header, body)
        written["friedman"] = out / "friedman.csv"

    # per-(algorithm, problem) mean convergence curves
    curve_dir = out / "mean_curves"
    curve_dir.mkdir(exist_ok=True)
    grouped: dict[tuple[str, str], list[CurveRecord]] = {}
    for c in curves:
        grouped.setdefault((c.algorithm, c.problem), []).append(c)
    for (algo, problem), records in sorted(grouped.items()):
        length = len(records[0].values)
        stack = np.array([rec.values for rec in records], dtype=float)
        mean_curve = stack.mean(axis=0)
        path = curve_dir / f"{algo}__{problem}.csv"
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["iteration", "mean_global_best"])
            for i in range(length):
                writer.writerow([i, repr(float(mean_curve[i]))])
    written["mean_curves"] = curve_dir
    return written
