"""Report emitters: canonical JSON, human-readable text, and for catalog
batches a CSV verdict table with a rendered verdict-matrix figure.
"""
from __future__ import annotations

import csv
import io
import json
import os

VERDICT_COLUMNS = ("tame", "free", "torsor", "equivalence_agree")


def to_json_bytes(report) -> bytes:
    """Canonical serialization: sorted keys, no whitespace drift, so that
    identical inputs yield byte-identical reports."""
    return (json.dumps(report, sort_keys=True, separators=(",", ": "),
                       indent=2) + "\n").encode()


def _verdict_row(report: dict) -> dict:
    checks = report.get("checks", {})
    row = {"name": report["name"]}
    ti = checks.get("total-integral", {})
    tor = checks.get("torsor", {})
    eq = checks.get("equivalence", {})
    row["tame"] = ti.get("tame")
    row["free"] = tor.get("free")
    row["torsor"] = tor.get("torsor")
    row["equivalence_agree"] = eq.get("agree")
    return row


def to_text(report: dict) -> str:
    lines = [f"== {report['name']} =="]
    if report.get("description"):
        lines.append(report["description"])
    dims = report["dims"]
    lines.append(f"field {report['field']['kind']}, dim A = {dims['hopf']}, "
                 f"dim B = {dims['algebra']}, dim C = {dims['invariants']}")
    lines.append(f"input digest {report['digest'][:16]}")
    checks = report.get("checks", {})
    if "total-integral" in checks:
        ti = checks["total-integral"]
        lines.append(f"tame: {ti['tame']}")
        if ti.get("trace_witness") is not None:
            lines.append("  trace witness present")
        if "infeasibility_certificate" in ti:
            lines.append("  infeasibility certificate attached")
    if "torsor" in checks:
        t = checks["torsor"]
        lines.append(f"free: {t['free']} (Galois rank {t['absolute_rank']} of {t['target_dim']})")
        lines.append(f"torsor: {t['torsor']} (rank over C: {t['rank_over_invariants']}, "
                     f"relative bijective: {t['relative_bijective']})")
    if "inertia" in checks:
        for pt in checks["inertia"]["points"]:
            extra = ""
            if "tame_at" in pt:
                extra = f", tame at point: {pt['tame_at']}"
            lines.append(f"inertia at {pt['label']}: dimension {pt['dimension']}{extra}")
    if "slice" in checks:
        s = checks["slice"]
        if s.get("applicable"):
            lines.append(f"slice: {s['coset_count']} coset(s) x local dim {s['local_dim']}, "
                         f"isomorphism verified: {s['algebra_isomorphism'] and s['equivariant']}")
        else:
            lines.append(f"slice: not applicable ({s.get('reason')})")
    if "equivalence" in checks:
        e = checks["equivalence"]
        lines.append(f"equivalence verdicts: integral={e['total_integral']} "
                     f"exact={e['battery_exact']} reynold={e['reynold_feasible']} "
                     f"inertia={e['inertia_reductive']} agree={e['agree']}"
                     + ("" if e["applicable"] else " (freeness over C failed; not applicable)"))
    return "\n".join(lines) + "\n"


def verdicts_csv(reports) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=("name",) + VERDICT_COLUMNS)
    writer.writeheader()
    for rep in reports:
        writer.writerow(_verdict_row(rep))
    return buf.getvalue()


def render_verdict_matrix(reports, path: str) -> None:
    """Render the boolean verdict table as a figure next to the CSV."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    rows = [_verdict_row(r) for r in reports]
    names = [r["name"] for r in rows]
    data = [[1.0 if r[c] else 0.0 if r[c] is not None else 0.5
             for c in VERDICT_COLUMNS] for r in rows]
    fig, ax = plt.subplots(figsize=(6, 0.35 * len(rows) + 1.5))
    ax.imshow(data, cmap="RdYlGn", vmin=0, vmax=1, aspect="auto")
    ax.set_xticks(range(len(VERDICT_COLUMNS)))
    ax.set_xticklabels(VERDICT_COLUMNS, rotation=30, ha="right", fontsize=8)
    ax.set_yticks(range(len(names)))
    ax.set_yticklabels(names, fontsize=8)
    ax.set_title("catalog verdicts")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def write_batch(reports, out_dir: str) -> list:
    """Write report.json, verdicts.csv and verdicts.png; returns the paths."""
    os.makedirs(out_dir, exist_ok=True)
    paths = []
    json_path = os.path.join(out_dir, "report.json")
    with open(json_path, "wb") as fh:
        fh.write(to_json_bytes(list(reports)))
    paths.append(json_path)
    csv_path = os.path.join(out_dir, "verdicts.csv")
    with open(csv_path, "w") as fh:
        fh.write(verdicts_csv(reports))
    paths.append(csv_path)
    png_path = os.path.join(out_dir, "verdicts.png")
    render_verdict_matrix(reports, png_path)
    paths.append(png_path)
    return paths
