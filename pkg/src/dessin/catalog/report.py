"""Aligned text rendering of catalog reports."""

from __future__ import annotations

from .catalog import CatalogReport, Discrepancy, _fmt


def _orbit_sizes(record) -> str:
    if record.expected is None:
        return "-"
    return "+".join(str(o.size) for o in record.expected.orbits)


def _class_sizes(record) -> str:
    return "+".join(str(c.size) for c in record.partition)


def render_table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in headers]
    for r in rows:
        widths = [max(w, len(c)) for w, c in zip(widths, r)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for r in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines)


def format_report(report: CatalogReport, discrepancies: list[Discrepancy] | None = None) -> str:
    headers = ["#", "passport", "trees", "w", "w(table)", "classes", "orbits", "status"]
    body = []
    for r in report.rows:
        body.append([
            "-" if r.index is None else str(r.index),
            str(r.passport),
            str(r.tree_count),
            _fmt(r.w_computed),
            "-" if r.w_paper is None else _fmt(r.w_paper),
            _class_sizes(r),
            _orbit_sizes(r),
            r.status,
        ])
    parts = [f"{report.n}-edge trees: {len(report.rows)} types, "
             f"{sum(r.tree_count for r in report.rows)} trees", render_table(headers, body)]
    if report.polynomials:
        prows = []
        for c in report.polynomials:
            prows.append([str(c.type_index), c.label, "ok" if c.ok else "FAIL", c.summary()])
            if c.printed_outcome is not None:
                prows.append(["", "  as printed", "", c.printed_outcome])
        parts.append("Shabat polynomials\n" + render_table(["type", "label", "result", "detail"], prows))
    if discrepancies is not None:
        if discrepancies:
            parts.append("Discrepancies\n" + "\n".join(str(d) for d in discrepancies))
        else:
            parts.append("No discrepancies with the reference data.")
    return "\n\n".join(parts) + "\n"
