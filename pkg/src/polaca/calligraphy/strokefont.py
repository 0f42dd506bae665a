"""Stroke font loading and glyph rasterization.

The bundled font is a JSON file of polyline skeletons; rendering is done
here rather than through a system text stack so a pinned font file always
produces identical pixels. Glyphs are drawn centered with a 10% margin and
antialiased by 4x4 subpixel coverage.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from polaca import data_path

# Pinned digest of the bundled font; regenerate with tools/build_strokefont.py.
BUNDLED_FONT_SHA256 = "ef49949f143e4d5443900222760eaed76e627137e2bc51aa958ce8c636f08342"

MARGIN_FRAC = 0.10
SUPERSAMPLE = 4
MIN_SIZE = 16

INK_RATIO_LOW = 0.0   # exclusive
INK_RATIO_HIGH = 0.9  # exclusive


class MissingGlyphError(KeyError):
    def __init__(self, char: str) -> None:
        super().__init__(f"no glyph for U+{ord(char):04X} ({char!r})")
        self.char = char


class FontHashError(RuntimeError):
    """Loaded font bytes do not match the pinned digest."""


@dataclass(frozen=True)
class GlyphImage:
    """Square grayscale glyph; 1.0 is white paper, 0.0 is full ink."""

    char: str
    pixels: np.ndarray
    source: str = "standard"  # standard | stylized

    def __post_init__(self) -> None:
        if self.pixels.ndim != 2 or self.pixels.shape[0] != self.pixels.shape[1]:
            raise ValueError(f"glyph must be square, got {self.pixels.shape}")
        if self.pixels.min() < 0.0 or self.pixels.max() > 1.0:
            raise ValueError("glyph pixel values must lie in [0,1]")
        if self.source not in ("standard", "stylized"):
            raise ValueError(f"bad glyph source {self.source!r}")

    @property
    def size(self) -> int:
        return self.pixels.shape[0]

    def ink_ratio(self) -> float:
        return float((self.pixels < 0.5).mean())

    def pixel_hash(self) -> str:
        return hashlib.sha256(self.pixels.astype("<f4").tobytes()).hexdigest()


@dataclass(frozen=True)
class StrokeFont:
    name: str
    version: int
    glyphs: dict[str, list[dict]]
    sha256: str

    def has(self, char: str) -> bool:
        return char in self.glyphs

    @property
    def charset(self) -> list[str]:
        return sorted(self.glyphs)


def load_stroke_font(path: str | Path, expected_sha256: str | None = None) -> StrokeFont:
    raw = Path(path).read_bytes()
    digest = hashlib.sha256(raw).hexdigest()
    if expected_sha256 is not None and digest != expected_sha256:
        raise FontHashError(f"{path}: sha256 {digest} != pinned {expected_sha256}")
    obj = json.loads(raw.decode("utf-8"))
    return StrokeFont(
        name=obj["name"], version=int(obj["version"]), glyphs=obj["glyphs"], sha256=digest
    )


def bundled_font() -> StrokeFont:
    return load_stroke_font(data_path("strokefont.json"), expected_sha256=BUNDLED_FONT_SHA256)


def _segment_coverage(px: np.ndarray, py: np.ndarray, a, b, half_w: float) -> np.ndarray:
    ax, ay = a
    bx, by = b
    dx, dy = bx - ax, by - ay
    seg_len2 = dx * dx + dy * dy
    if seg_len2 == 0.0:
        dist2 = (px - ax) ** 2 + (py - ay) ** 2
    else:
        t = np.clip(((px - ax) * dx + (py - ay) * dy) / seg_len2, 0.0, 1.0)
        dist2 = (px - (ax + t * dx)) ** 2 + (py - (ay + t * dy)) ** 2
    return dist2 <= half_w * half_w


def render_glyph(char: str, font: StrokeFont, size: int) -> GlyphImage | None:
    """Rasterize one character; whitespace returns None (the skip sentinel)."""
    if len(char) != 1:
        raise ValueError(f"render_glyph takes a single codepoint, got {char!r}")
    if size < MIN_SIZE:
        raise ValueError(f"glyph size must be >= {MIN_SIZE}, got {size}")
    if char.isspace():
        return None
    if not font.has(char):
        raise MissingGlyphError(char)

    grid = size * SUPERSAMPLE
    # Subpixel centers in glyph-box coordinates (10% margin on every side).
    coords = (np.arange(grid) + 0.5) / grid
    box = (coords - MARGIN_FRAC) / (1.0 - 2.0 * MARGIN_FRAC)
    px, py = np.meshgrid(box, box)  # py indexes rows (y grows downward)

    ink = np.zeros((grid, grid), dtype=bool)
    for stroke in font.glyphs[char]:
        pts = stroke["p"]
        half_w = stroke["w"] / 2.0
        for a, b in zip(pts[:-1], pts[1:]):
            ink |= _segment_coverage(px, py, a, b, half_w)

    coverage = ink.astype(np.float32).reshape(size, SUPERSAMPLE, size, SUPERSAMPLE).mean(axis=(1, 3))
    pixels = (1.0 - coverage).astype(np.float32)
    return GlyphImage(char=char, pixels=pixels, source="standard")


def render_text(text: str, font: StrokeFont, size: int) -> list[GlyphImage]:
    """Render every non-whitespace character of `text`, in order."""
    glyphs = []
    for ch in text:
        g = render_glyph(ch, font, size)
        if g is not None:
            glyphs.append(g)
    return glyphs
