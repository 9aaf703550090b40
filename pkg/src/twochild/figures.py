"""Deterministic SVG box diagrams of two-child families.

Each family type (BB, BG, GB, GG) is a 100 x 100 px box. Inside a box the
horizontal axis belongs to the older child and the vertical axis to the
younger, so a name given to the older boy is a vertical stripe and one given
to the younger boy a horizontal stripe. Stripe sizes are exact rationals
rounded half-even to whole pixels.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional
from xml.sax.saxutils import escape

from .prob import as_rational

__all__ = ["FIGURES", "PALETTE", "Rect", "Figure", "build", "render_svg", "box_fill_fraction"]

BOX = 100
GAP = 20
LABEL_SPACE = 30
BOXES = ("BB", "BG", "GB", "GG")

# first entry is the target name ("Adam")
PALETTE = ("#1f5fbf", "#d62728", "#2ca02c", "#ff9f1c")
CROSS = "#7f7f7f"
NAMES_SHOWN = 4

FIGURES = ("boxes", "adam-stripes", "walk-halves", "disjoint-names", "overlapping-names")
NEEDS_P = frozenset({"adam-stripes", "disjoint-names", "overlapping-names"})

_TITLES = {
    "boxes": "Two-child family types",
    "adam-stripes": "Families with a boy named Adam (blue)",
    "walk-halves": "Randomly selected child is a boy (blue)",
    "disjoint-names": "First-born boy's name by colour",
    "overlapping-names": "Boys' names by colour",
}


@dataclass(frozen=True)
class Rect:
    box: int
    x: int
    y: int
    w: int
    h: int
    fill: str
    opacity: Optional[str] = None


@dataclass(frozen=True)
class Figure:
    name: str
    rects: tuple
    crossed: tuple


def _px(q: Fraction) -> int:
    return round(q * BOX)


def _older_names(box: int, stripe: int, count: int, opacity=None) -> list:
    return [Rect(box, k * stripe, 0, stripe, BOX, PALETTE[k], opacity) for k in range(count)]


def _younger_names(box: int, stripe: int, count: int, older_stripes: bool, opacity=None) -> list:
    """Horizontal stripes; with an older brother, name ``k`` skips his stripe ``k``."""
    rects = []
    for k in range(count):
        y = k * stripe
        if not older_stripes:
            rects.append(Rect(box, 0, y, BOX, stripe, PALETTE[k], opacity))
            continue
        left, right = k * stripe, (k + 1) * stripe
        if left > 0:
            rects.append(Rect(box, 0, y, left, stripe, PALETTE[k], opacity))
        if right < BOX:
            rects.append(Rect(box, right, y, BOX - right, stripe, PALETTE[k], opacity))
    return rects


def build(name: str, p=None) -> Figure:
    if name not in FIGURES:
        raise ValueError(f"unknown figure {name!r} (known: {', '.join(FIGURES)})")
    if name in NEEDS_P:
        if p is None:
            raise ValueError(f"figure {name} needs --p")
        p = as_rational(p)
        if not 0 < p <= 1:
            raise ValueError(f"p must satisfy 0 < p <= 1, got {p}")
    bb, bg, gb, gg = range(4)
    rects: list = []
    crossed: tuple = (gg,)

    if name == "adam-stripes":
        s = _px(p)
        rects += _older_names(bb, s, 1)
        rects += _younger_names(bb, s, 1, older_stripes=True)
        rects += _older_names(bg, s, 1)
        rects += _younger_names(gb, s, 1, older_stripes=False)
    elif name == "walk-halves":
        half = BOX // 2
        rects += [
            Rect(bb, 0, 0, BOX, BOX, PALETTE[0]),
            Rect(bg, 0, 0, half, BOX, PALETTE[0]),
            Rect(gb, half, 0, BOX - half, BOX, PALETTE[0]),
        ]
        crossed = ()
    elif name in ("disjoint-names", "overlapping-names"):
        if NAMES_SHOWN * p > 1:
            raise ValueError(f"p must be at most 1/{NAMES_SHOWN} to draw {NAMES_SHOWN} names")
        s = _px(p)
        if name == "disjoint-names":
            # only the first-born boy's name is drawn, so regions never overlap
            rects += _older_names(bb, s, NAMES_SHOWN)
        else:
            rects += _older_names(bb, s, NAMES_SHOWN, "0.7")
            rects += _younger_names(bb, s, NAMES_SHOWN, older_stripes=True, opacity="0.7")
        rects += _older_names(bg, s, NAMES_SHOWN)
        rects += _younger_names(gb, s, NAMES_SHOWN, older_stripes=False)
    return Figure(name, tuple(r for r in rects if r.w > 0 and r.h > 0), crossed)


def box_fill_fraction(fig: Figure, box: str, fill: str = PALETTE[0]) -> Fraction:
    """Area fraction of ``box`` covered by rects of colour ``fill``.

    Same-coloured rects in one box never overlap, so areas simply add.
    """
    i = BOXES.index(box)
    area = sum(r.w * r.h for r in fig.rects if r.box == i and r.fill == fill)
    return Fraction(area, BOX * BOX)


def _origin(box: int) -> int:
    return GAP + box * (BOX + GAP)


def render_svg(fig: Figure) -> str:
    width = len(BOXES) * (BOX + GAP) + GAP
    height = GAP + BOX + LABEL_SPACE
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<title>{escape(_TITLES[fig.name])}</title>",
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
    ]
    for r in fig.rects:
        x0 = _origin(r.box)
        extra = f' fill-opacity="{r.opacity}"' if r.opacity else ""
        out.append(
            f'<rect x="{x0 + r.x}" y="{GAP + r.y}" width="{r.w}" height="{r.h}" fill="{r.fill}"{extra}/>'
        )
    for i, label in enumerate(BOXES):
        x0 = _origin(i)
        out.append(
            f'<rect x="{x0}" y="{GAP}" width="{BOX}" height="{BOX}" fill="none" stroke="#000000" stroke-width="1"/>'
        )
        if i in fig.crossed:
            out.append(f'<line x1="{x0}" y1="{GAP}" x2="{x0 + BOX}" y2="{GAP + BOX}" stroke="{CROSS}" stroke-width="2"/>')
            out.append(f'<line x1="{x0 + BOX}" y1="{GAP}" x2="{x0}" y2="{GAP + BOX}" stroke="{CROSS}" stroke-width="2"/>')
        out.append(
            f'<text x="{x0 + BOX // 2}" y="{GAP + BOX + 20}" font-family="sans-serif" font-size="14" '
            f'text-anchor="middle">{label}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
