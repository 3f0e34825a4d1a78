"""Machine-readable output: one canonical JSON object per line.

Keys are sorted, separators are fixed and all values are integers, booleans,
strings or lists of them, so emit(parse(text)) == text byte for byte.
"""

from __future__ import annotations

import json

from .gorenstein import GorensteinReport
from .irreducible import FilterShape, filter_shape, phi
from .minor import GammaContext, Minor

FORMAT = "schubcycle"
VERSION = 1

KINDS = ("gorenstein", "irreducibles", "sweep-summary")


class DocumentError(ValueError):
    pass


def emit(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=True) + "\n"


def parse(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not a JSON document: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("format") != FORMAT:
        raise DocumentError("not a schubcycle document")
    if doc.get("version") != VERSION:
        raise DocumentError(f"unsupported document version {doc.get('version')!r}")
    if doc.get("kind") not in KINDS:
        raise DocumentError(f"unknown document kind {doc.get('kind')!r}")
    return doc


def parse_stream(text: str) -> list[dict]:
    return [parse(line) for line in text.splitlines() if line.strip()]


def _header(kind: str, ctx: GammaContext) -> dict:
    return {
        "format": FORMAT,
        "version": VERSION,
        "kind": kind,
        "n": ctx.n,
        "m": ctx.m,
        "gamma": list(ctx.gamma),
    }


def _filter_section(shape: FilterShape) -> dict:
    return {
        "arm_limits": [[q, top] for q, top in sorted(shape.arm_limits.items())],
        "point_count": shape.point_count,
    }


def gorenstein_document(report: GorensteinReport) -> dict:
    ctx = report.ctx
    doc = _header("gorenstein", ctx)
    doc.update(
        l_set=list(report.l_set),
        criterion_values=list(report.criterion_values),
        gorenstein=report.gorenstein,
        minimal_join_irreducibles=[
            {"minor": list(c), "pq": list(phi(c, ctx)), "coheight": h}
            for c, h in report.minimal_irreducibles
        ],
        filter=_filter_section(filter_shape(ctx)),
    )
    if report.oracle is not None:
        doc["oracle"] = {
            "lattice_size": report.oracle.lattice_size,
            "p_size": report.oracle.p_size,
            "pure": report.oracle.pure,
        }
    return doc


def irreducibles_document(
    ctx: GammaContext, rows: list[tuple[Minor, tuple[int, int], int]], source: str
) -> dict:
    doc = _header("irreducibles", ctx)
    doc.update(
        source=source,
        count=len(rows),
        elements=[{"minor": list(c), "pq": list(pq), "coheight": h} for c, pq, h in rows],
    )
    return doc


def summary_document(n: int, m: int | None, counts: dict[str, int]) -> dict:
    doc = {"format": FORMAT, "version": VERSION, "kind": "sweep-summary", "n": n}
    if m is not None:
        doc["m"] = m
    doc.update(counts)
    return doc
