"""ASCII and SVG pictures of diagrams in their frame, inner segments highlighted."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence
from xml.sax.saxutils import quoteattr

from .diagram import HORIZONTAL, PlacedDiagram, UnitSegment, inner_segment_runs, inner_unit_segments
from .enumeration import DiagramSet

# thin lines for the frame and the box grid, double lines for inner segments
H_LINE, V_LINE = "─", "│"
H_INNER, V_INNER = "═", "║"
CORNER = "+"
SHADE = "#"
CELL_WIDTH = 3

ANSI_SHADE = "\x1b[90m"
ANSI_INNER = "\x1b[1;31m"
ANSI_RESET = "\x1b[0m"


@dataclass(frozen=True)
class RenderSpec:
    cell_px: int = 20
    shade: bool = True
    mark_inner: bool = True
    color: bool = False
    columns: int = 4  # gallery width in diagrams

    def __post_init__(self):
        if self.cell_px < 4:
            raise ValueError(f"cell_px must be at least 4, got {self.cell_px}")
        if self.columns < 1:
            raise ValueError(f"columns must be positive, got {self.columns}")


def _box_edges(boxes: Iterable[tuple[int, int]]) -> set[UnitSegment]:
    edges = set()
    for i, c in boxes:
        top, bottom = -(i - 1), -i
        edges.add(((c, top), (c + 1, top)))
        edges.add(((c, bottom), (c + 1, bottom)))
        edges.add(((c, bottom), (c, top)))
        edges.add(((c + 1, bottom), (c + 1, top)))
    return edges


def frame_outline(d: PlacedDiagram) -> set[UnitSegment]:
    """Unit segments bounding exactly one box of the frame."""
    seen: dict[UnitSegment, int] = {}
    for i, c in d.frame.box_set:
        for e in _box_edges([(i, c)]):
            seen[e] = seen.get(e, 0) + 1
    return {e for e, k in seen.items() if k == 1}


def _segments(d: PlacedDiagram, spec: RenderSpec) -> tuple[set[UnitSegment], set[UnitSegment]]:
    inner = inner_unit_segments(d) if spec.mark_inner else set()
    plain = (frame_outline(d) | _box_edges(d.box_set)) - inner
    return plain, inner


def render_ascii(d: PlacedDiagram, spec: RenderSpec = RenderSpec()) -> str:
    rows, cols = d.frame.rows, d.frame.cols
    height = 2 * rows + 1
    width = (CELL_WIDTH + 1) * cols + 1
    grid = [[" "] * width for _ in range(height)]

    def pos(x: int, y: int) -> tuple[int, int]:
        # lattice x runs 1..cols+1
        return -y * 2, (x - 1) * (CELL_WIDTH + 1)

    def paint(r: int, c: int, ch: str, ansi: str = "") -> None:
        grid[r][c] = f"{ansi}{ch}{ANSI_RESET}" if (ansi and spec.color) else ch

    if spec.shade:
        for i, c in d.box_set:
            r, col = pos(c, -(i - 1))
            for k in range(1, CELL_WIDTH + 1):
                paint(r + 1, col + k, SHADE, ANSI_SHADE)

    plain, inner = _segments(d, spec)
    for segs, marked in ((plain, False), (inner, True)):
        for (x0, y0), (x1, y1) in segs:
            r, c = pos(x0, y0)
            if y0 == y1:
                for k in range(1, CELL_WIDTH + 1):
                    paint(r, c + k, H_INNER if marked else H_LINE, ANSI_INNER if marked else "")
            else:
                paint(r - 1, c, V_INNER if marked else V_LINE, ANSI_INNER if marked else "")
            for px, py in ((x0, y0), (x1, y1)):
                paint(*pos(px, py), CORNER)

    lines = ["".join(row).rstrip() for row in grid]
    return "\n".join(lines) + "\n"


def render_ascii_gallery(ds: DiagramSet, spec: RenderSpec = RenderSpec()) -> str:
    blocks = []
    for d in ds.diagrams():
        blocks.append(f"{d.partition}  weight {sum(d.parts)}\n" + render_ascii(d, spec))
    return "\n".join(blocks)


def _fmt(v: float) -> str:
    return f"{v:g}"


def _diagram_group(d: PlacedDiagram, spec: RenderSpec, ox: int, oy: int) -> list[str]:
    px = spec.cell_px

    def tx(x: int) -> str:
        return _fmt(ox + (x - 1) * px)

    def ty(y: int) -> str:
        return _fmt(oy - y * px)

    label = ",".join(map(str, d.parts))
    out = [
        f'<g class="diagram" data-parts={quoteattr(label)} '
        f'data-origin="{ox} {oy}">'
    ]
    if spec.shade:
        for i, c in sorted(d.box_set):
            out.append(
                f'<rect class="box" x="{tx(c)}" y="{ty(-(i - 1))}" width="{px}" height="{px}" '
                'fill="#000000" fill-opacity="0.2" stroke="none"/>'
            )
    plain, _ = _segments(d, RenderSpec(spec.cell_px, spec.shade, False))
    for (x0, y0), (x1, y1) in sorted(plain):
        out.append(
            f'<line class="grid" x1="{tx(x0)}" y1="{ty(y0)}" x2="{tx(x1)}" y2="{ty(y1)}" '
            'stroke="#000000" stroke-width="1"/>'
        )
    if spec.mark_inner:
        for run in inner_segment_runs(d):
            (x0, y0), (x1, y1) = run.start, run.end
            kind = "h" if run.orientation == HORIZONTAL else "v"
            out.append(
                f'<line class="inner" data-orientation="{kind}" x1="{tx(x0)}" y1="{ty(y0)}" '
                f'x2="{tx(x1)}" y2="{ty(y1)}" stroke="#000000" stroke-width="3"/>'
            )
    caption_y = oy + d.frame.rows * px + px * 0.8
    out.append(
        f'<text x="{tx(1)}" y="{_fmt(caption_y)}" font-family="monospace" '
        f'font-size="{_fmt(px * 0.6)}">({label})</text>'
    )
    out.append("</g>")
    return out


def render_svg_diagrams(diagrams: Sequence[PlacedDiagram], spec: RenderSpec = RenderSpec()) -> str:
    px = spec.cell_px
    if diagrams:
        cell_w = (max(d.frame.cols for d in diagrams) + 1) * px
        cell_h = (max(d.frame.rows for d in diagrams) + 2) * px
    else:
        cell_w = cell_h = px
    ncols = min(spec.columns, max(len(diagrams), 1))
    nrows = (len(diagrams) + spec.columns - 1) // spec.columns
    width = ncols * cell_w + px
    height = max(nrows, 1) * cell_h + px

    body = []
    for k, d in enumerate(diagrams):
        row, col = divmod(k, spec.columns)
        body.extend(_diagram_group(d, spec, px // 2 + col * cell_w, px // 2 + row * cell_h))

    head = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}" data-cell-px="{px}">',
    ]
    return "\n".join(head + body + ["</svg>"]) + "\n"


def render_svg(ds: DiagramSet, spec: RenderSpec = RenderSpec()) -> str:
    return render_svg_diagrams(ds.diagrams(), spec)


def parse_svg_inner_segments(svg_text: str) -> list[tuple[tuple[int, ...], set[UnitSegment]]]:
    """Read an SVG gallery back into ``(parts, inner unit segments)`` per diagram."""
    import xml.etree.ElementTree as ET

    ns = {"svg": "http://www.w3.org/2000/svg"}
    root = ET.fromstring(svg_text)
    px = int(root.get("data-cell-px"))
    result = []
    for g in root.findall("svg:g", ns):
        label = g.get("data-parts")
        parts = tuple(int(p) for p in label.split(",")) if label else ()
        ox, oy = (int(v) for v in g.get("data-origin").split())
        units: set[UnitSegment] = set()
        for line in g.findall("svg:line", ns):
            if line.get("class") != "inner":
                continue
            x0 = round((float(line.get("x1")) - ox) / px) + 1
            x1 = round((float(line.get("x2")) - ox) / px) + 1
            y0 = -round((float(line.get("y1")) - oy) / px)
            y1 = -round((float(line.get("y2")) - oy) / px)
            (x0, y0), (x1, y1) = sorted([(x0, y0), (x1, y1)])
            if y0 == y1:
                units.update(((x, y0), (x + 1, y0)) for x in range(x0, x1))
            else:
                units.update(((x0, y), (x0, y + 1)) for y in range(y0, y1))
        result.append((parts, units))
    return result
