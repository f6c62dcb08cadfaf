"""JSON and SVG serialisation of analysed boards.

Both writers are byte-stable: keys appear in a fixed order, floats are
rounded to 9 decimals and negative zero is normalised.
"""

from __future__ import annotations

import json
import math
from xml.sax.saxutils import escape

from .geometry import mean_point
from .graph import BoardGraph, ElementId, SiteType, assemble
from .relations import RelationType
from .traversal import RadialIndex

SCHEMA_VERSION = "1"
RELATION_ORDER = tuple(RelationType)


def _num(x: float) -> float:
    return round(float(x), 9) + 0.0


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, float):
        return _num(obj)
    return obj


def to_dict(graph: BoardGraph, *, radials: RadialIndex | None = None, include_meta: bool = True) -> dict:
    rel = graph.relations
    dirs = graph.directions
    pts = [(_num(v.position[0]), _num(v.position[1])) for v in graph.vertices]
    # centroids from the written positions, so re-exporting an import is byte-identical
    cens = [mean_point([pts[v] for v in c.vertices]) for c in graph.cells]
    out = {
        "schemaVersion": SCHEMA_VERSION,
        "defaultSite": graph.default_site.name,
        "vertices": [{"id": i, "x": x, "y": y} for i, (x, y) in enumerate(pts)],
        "edges": [{"id": i, "v0": e.endpoints[0], "v1": e.endpoints[1]} for i, e in enumerate(graph.edges)],
        "cells": [{"id": i, "vertexIds": list(c.vertices), "centroidX": _num(cens[i][0]),
                   "centroidY": _num(cens[i][1])} for i, c in enumerate(graph.cells)],
        "relations": {st.name: {r.value: [list(x) for x in rel.table(st, r)] for r in RELATION_ORDER}
                      for st in SiteType},
        "directions": {st.name: [{d.value: j for d, j in m.items()} for m in dirs.maps[st]] for st in SiteType},
        "radials": [
            {"origin": str(r.origin), "siteType": r.origin.site_type.name, "relation": r.relation.value,
             "direction": r.direction.value, "path": [p.index for p in r.path], "branch": r.branch}
            for r in (radials if radials is not None else graph.radials).radials
        ],
    }
    if include_meta:
        out["meta"] = _jsonable(dict(graph.meta))
    return out


def to_json(graph: BoardGraph, **kw) -> str:
    return json.dumps(to_dict(graph, **kw), separators=(",", ":"), ensure_ascii=True) + "\n"


def from_dict(data: dict) -> BoardGraph:
    """Rebuild a board from its export, keeping every element id."""
    if str(data.get("schemaVersion")) != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema version {data.get('schemaVersion')!r}")
    verts = sorted(data["vertices"], key=lambda v: v["id"])
    positions = [(v["x"], v["y"]) for v in verts]
    edges = [(e["v0"], e["v1"]) for e in sorted(data["edges"], key=lambda e: e["id"])]
    cycles = [c["vertexIds"] for c in sorted(data["cells"], key=lambda c: c["id"])]
    meta = data.get("meta", {})
    return assemble(positions, edges, cycles, default_site=SiteType.parse(data["defaultSite"]),
                    meta=meta, canonical=False)


def from_json(text: str) -> BoardGraph:
    return from_dict(json.loads(text))


# ---------------------------------------------------------------------------
# SVG

CELL_FILL = "#efe6d2"
EDGE_STROKE = "#5b5346"
VERTEX_FILL = "#2f2a24"
FOCUS_FILL = "#f2c14e"
RELATION_COLORS = {
    RelationType.Orthogonal: "#1f77b4",
    RelationType.Diagonal: "#d62728",
    RelationType.OffDiagonal: "#2ca02c",
    RelationType.Adjacent: "#9467bd",
    RelationType.All: "#8c564b",
}
RADIAL_STROKE = "#e4572e"
LABEL_FILL = "#17324d"


def _f(x: float) -> str:
    s = f"{_num(x):.4f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _edge_scale(graph: BoardGraph) -> float:
    lengths = sorted(math.dist(graph.vertices[a].position, graph.vertices[b].position)
                     for a, b in (e.endpoints for e in graph.edges))
    return lengths[len(lengths) // 2] if lengths else 1.0


def to_svg(graph: BoardGraph, *, show=(), focus: ElementId | None = None,
           relation: RelationType | None = None, radials: RadialIndex | None = None) -> str:
    """Cells, edges and vertices, with optional overlays around ``focus``.

    ``show`` may contain "relations", "radials" and "directions". Relation
    fans draw every base relation (or just ``relation``) from the focus.
    """
    show = set(show)
    pts = graph.positions
    if not pts:
        pts = [(0.0, 0.0)]
    xs = [p[0] for p in pts]
    ys = [-p[1] for p in pts]
    w = max(xs) - min(xs)
    h = max(ys) - min(ys)
    span = max(w, h, 1e-9)
    mx, my = 0.05 * max(w, span * 0.1), 0.05 * max(h, span * 0.1)
    box = (min(xs) - mx, min(ys) - my, w + 2 * mx, h + 2 * my)
    unit = _edge_scale(graph)
    sw = unit * 0.04

    def P(p):
        return f"{_f(p[0])},{_f(-p[1])}"

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{_f(box[0])} {_f(box[1])} {_f(box[2])} {_f(box[3])}">',
        f'<g id="cells" fill="{CELL_FILL}" stroke="none">',
    ]
    for i, c in enumerate(graph.cells):
        fill = ""
        if focus is not None and focus == (SiteType.Cell, i):
            fill = f' fill="{FOCUS_FILL}"'
        lines.append(f'<polygon id="c{i}"{fill} points="{" ".join(P(pts[v]) for v in c.vertices)}"/>')
    lines.append("</g>")
    lines.append(f'<g id="edges" stroke="{EDGE_STROKE}" stroke-width="{_f(sw)}" stroke-linecap="round">')
    for i, e in enumerate(graph.edges):
        a, b = (pts[v] for v in e.endpoints)
        lines.append(f'<line id="e{i}" x1="{_f(a[0])}" y1="{_f(-a[1])}" x2="{_f(b[0])}" y2="{_f(-b[1])}"/>')
    lines.append("</g>")
    lines.append(f'<g id="vertices" fill="{VERTEX_FILL}">')
    for i, v in enumerate(graph.vertices):
        lines.append(f'<circle id="v{i}" cx="{_f(v.position[0])}" cy="{_f(-v.position[1])}" r="{_f(sw * 1.5)}"/>')
    lines.append("</g>")

    if focus is not None:
        st, idx = graph.check_element(ElementId(*focus))
        here = graph.location(st, idx)
        if "relations" in show:
            rels = [relation] if relation is not None else [RelationType.Orthogonal, RelationType.Diagonal,
                                                             RelationType.OffDiagonal]
            lines.append(f'<g id="relations" stroke-width="{_f(sw * 1.5)}" stroke-dasharray="{_f(sw * 3)}">')
            for r in rels:
                for j in graph.relations.neighbors(st, r, idx):
                    q = graph.location(st, j)
                    lines.append(f'<line class="{r.value}" stroke="{RELATION_COLORS[r]}" x1="{_f(here[0])}" '
                                 f'y1="{_f(-here[1])}" x2="{_f(q[0])}" y2="{_f(-q[1])}"/>')
            lines.append("</g>")
        if "radials" in show:
            index = radials if radials is not None else graph.radials
            lines.append(f'<g id="radials" fill="none" stroke="{RADIAL_STROKE}" stroke-width="{_f(sw * 2)}" '
                         'stroke-linejoin="round">')
            for r in index.from_site(ElementId(st, idx), relation or RelationType.Adjacent):
                path = [here] + [graph.location(st, p.index) for p in r.path]
                lines.append(f'<polyline class="{escape(r.direction.value)}" points="{" ".join(P(p) for p in path)}"/>')
            lines.append("</g>")
        if "directions" in show:
            size = unit * 0.3
            lines.append(f'<g id="directions" fill="{LABEL_FILL}" font-family="sans-serif" '
                         f'font-size="{_f(size)}" text-anchor="middle" dominant-baseline="central">')
            for d, j in graph.directions.of(st, idx).items():
                q = graph.location(st, j)
                lines.append(f'<text x="{_f(q[0])}" y="{_f(-q[1])}">{escape(d.value)}</text>')
            lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
