#!/usr/bin/env python3
"""Build the bundled stroke font JSON.

Each glyph is a list of strokes in a [0,1]x[0,1] box (y grows downward);
a stroke is a polyline plus a line width. The shapes are hand-placed
skeleton forms of the covered characters, good enough for rendering,
layout and style-transfer experiments at desk scale.

Run from the repo root:  python3 tools/build_strokefont.py
"""

import hashlib
import json
from pathlib import Path

W = 0.075   # default stroke width
WD = 0.06   # dot / tick width


def s(points, w=W):
    return {"p": [[round(x, 3), round(y, 3)] for x, y in points], "w": w}


GLYPHS = {
    # numerals / primitives
    "一": [s([(0.1, 0.5), (0.9, 0.5)])],
    "二": [s([(0.18, 0.33), (0.82, 0.33)]), s([(0.1, 0.67), (0.9, 0.67)])],
    "三": [s([(0.15, 0.22), (0.85, 0.22)]), s([(0.22, 0.5), (0.78, 0.5)]),
          s([(0.08, 0.78), (0.92, 0.78)])],
    "十": [s([(0.1, 0.48), (0.9, 0.48)]), s([(0.5, 0.08), (0.5, 0.92)])],
    "口": [s([(0.22, 0.22), (0.78, 0.22), (0.78, 0.78), (0.22, 0.78), (0.22, 0.22)])],
    "田": [s([(0.18, 0.18), (0.82, 0.18), (0.82, 0.82), (0.18, 0.82), (0.18, 0.18)]),
          s([(0.5, 0.18), (0.5, 0.82)]), s([(0.18, 0.5), (0.82, 0.5)])],
    "人": [s([(0.52, 0.08), (0.42, 0.4), (0.14, 0.88)]), s([(0.5, 0.38), (0.84, 0.88)])],
    "上": [s([(0.5, 0.1), (0.5, 0.78)]), s([(0.5, 0.42), (0.8, 0.42)], WD),
          s([(0.12, 0.82), (0.88, 0.82)])],

    # nature
    "山": [s([(0.5, 0.08), (0.5, 0.72)]),
          s([(0.14, 0.3), (0.14, 0.78), (0.86, 0.78), (0.86, 0.3)])],
    "日": [s([(0.28, 0.1), (0.72, 0.1), (0.72, 0.9), (0.28, 0.9), (0.28, 0.1)]),
          s([(0.28, 0.5), (0.72, 0.5)])],
    "月": [s([(0.34, 0.08), (0.3, 0.55), (0.18, 0.9)]),
          s([(0.34, 0.08), (0.74, 0.08), (0.74, 0.84), (0.64, 0.92)]),
          s([(0.34, 0.34), (0.7, 0.34)], WD), s([(0.33, 0.58), (0.71, 0.58)], WD)],
    "木": [s([(0.1, 0.32), (0.9, 0.32)]), s([(0.5, 0.06), (0.5, 0.92)]),
          s([(0.48, 0.38), (0.14, 0.8)]), s([(0.52, 0.38), (0.86, 0.8)])],
    "水": [s([(0.5, 0.06), (0.5, 0.82), (0.4, 0.74)]),
          s([(0.4, 0.22), (0.12, 0.42)]), s([(0.14, 0.52), (0.36, 0.78)]),
          s([(0.6, 0.22), (0.88, 0.42)]), s([(0.86, 0.52), (0.6, 0.8)])],
    "云": [s([(0.2, 0.24), (0.8, 0.24)]), s([(0.1, 0.44), (0.9, 0.44)]),
          s([(0.56, 0.48), (0.3, 0.76)]), s([(0.3, 0.76), (0.74, 0.76), (0.62, 0.64)])],
    "风": [s([(0.26, 0.12), (0.14, 0.86)]),
          s([(0.26, 0.12), (0.76, 0.12), (0.86, 0.82), (0.76, 0.88)]),
          s([(0.36, 0.32), (0.64, 0.68)], WD), s([(0.64, 0.32), (0.36, 0.68)], WD)],
    "花": [s([(0.18, 0.16), (0.82, 0.16)]), s([(0.34, 0.05), (0.34, 0.26)], WD),
          s([(0.66, 0.05), (0.66, 0.26)], WD),
          s([(0.34, 0.34), (0.16, 0.62)]), s([(0.25, 0.5), (0.25, 0.9)]),
          s([(0.44, 0.46), (0.74, 0.34)], WD),
          s([(0.58, 0.3), (0.58, 0.76), (0.84, 0.76), (0.84, 0.64)])],
    "鸟": [s([(0.5, 0.05), (0.36, 0.16)], WD),
          s([(0.36, 0.18), (0.7, 0.18), (0.7, 0.44), (0.36, 0.44), (0.36, 0.18)]),
          s([(0.46, 0.28), (0.52, 0.33)], WD),
          s([(0.7, 0.44), (0.7, 0.74), (0.2, 0.74), (0.2, 0.62)]),
          s([(0.3, 0.56), (0.55, 0.56)], WD)],
    "雨": [s([(0.14, 0.1), (0.86, 0.1)]), s([(0.2, 0.24), (0.2, 0.86)]),
          s([(0.2, 0.24), (0.8, 0.24), (0.8, 0.84), (0.72, 0.9)]),
          s([(0.5, 0.24), (0.5, 0.86)]),
          s([(0.3, 0.38), (0.37, 0.47)], WD), s([(0.62, 0.38), (0.69, 0.47)], WD),
          s([(0.3, 0.58), (0.37, 0.67)], WD), s([(0.62, 0.58), (0.69, 0.67)], WD)],
    "雪": [s([(0.16, 0.07), (0.84, 0.07)], WD), s([(0.24, 0.16), (0.24, 0.42)], WD),
          s([(0.24, 0.16), (0.76, 0.16), (0.76, 0.42)], WD),
          s([(0.5, 0.16), (0.5, 0.44)], WD),
          s([(0.33, 0.24), (0.39, 0.3)], WD), s([(0.6, 0.24), (0.66, 0.3)], WD),
          s([(0.24, 0.56), (0.76, 0.56), (0.76, 0.86)]),
          s([(0.3, 0.7), (0.7, 0.7)], WD), s([(0.22, 0.86), (0.78, 0.86)])],
    "石": [s([(0.1, 0.14), (0.9, 0.14)]), s([(0.46, 0.16), (0.14, 0.52)]),
          s([(0.3, 0.5), (0.76, 0.5), (0.76, 0.86), (0.3, 0.86), (0.3, 0.5)])],
    "泉": [s([(0.52, 0.02), (0.4, 0.1)], WD),
          s([(0.3, 0.1), (0.7, 0.1), (0.7, 0.4), (0.3, 0.4), (0.3, 0.1)]),
          s([(0.3, 0.25), (0.7, 0.25)], WD),
          s([(0.5, 0.42), (0.5, 0.88), (0.42, 0.82)]),
          s([(0.42, 0.5), (0.16, 0.64)]), s([(0.2, 0.7), (0.38, 0.88)]),
          s([(0.58, 0.5), (0.84, 0.64)]), s([(0.82, 0.7), (0.6, 0.88)])],
    "天": [s([(0.16, 0.18), (0.84, 0.18)]), s([(0.08, 0.42), (0.92, 0.42)]),
          s([(0.5, 0.42), (0.4, 0.62), (0.14, 0.88)]), s([(0.52, 0.48), (0.84, 0.88)])],
    "江": [s([(0.12, 0.16), (0.2, 0.26)], WD), s([(0.08, 0.42), (0.16, 0.52)], WD),
          s([(0.1, 0.74), (0.24, 0.62)], WD),
          s([(0.4, 0.18), (0.92, 0.18)]), s([(0.66, 0.18), (0.66, 0.82)]),
          s([(0.36, 0.82), (0.96, 0.82)])],
    "河": [s([(0.12, 0.16), (0.2, 0.26)], WD), s([(0.08, 0.42), (0.16, 0.52)], WD),
          s([(0.1, 0.74), (0.24, 0.62)], WD),
          s([(0.34, 0.14), (0.94, 0.14)]),
          s([(0.42, 0.34), (0.66, 0.34), (0.66, 0.6), (0.42, 0.6), (0.42, 0.34)], WD),
          s([(0.84, 0.14), (0.84, 0.84), (0.74, 0.78)])],
    "湖": [s([(0.1, 0.16), (0.17, 0.26)], WD), s([(0.06, 0.42), (0.13, 0.52)], WD),
          s([(0.08, 0.72), (0.2, 0.6)], WD),
          s([(0.26, 0.2), (0.52, 0.2)], WD), s([(0.39, 0.08), (0.39, 0.44)], WD),
          s([(0.3, 0.44), (0.48, 0.44), (0.48, 0.64), (0.3, 0.64), (0.3, 0.44)], WD),
          s([(0.62, 0.1), (0.59, 0.55), (0.54, 0.88)], WD),
          s([(0.62, 0.1), (0.9, 0.1), (0.9, 0.82), (0.82, 0.9)], WD),
          s([(0.62, 0.32), (0.88, 0.32)], WD), s([(0.61, 0.55), (0.88, 0.55)], WD)],
    "海": [s([(0.1, 0.16), (0.17, 0.26)], WD), s([(0.06, 0.42), (0.13, 0.52)], WD),
          s([(0.08, 0.72), (0.2, 0.6)], WD),
          s([(0.52, 0.05), (0.34, 0.2)], WD), s([(0.3, 0.26), (0.94, 0.26)]),
          s([(0.42, 0.4), (0.36, 0.84)], WD),
          s([(0.42, 0.4), (0.86, 0.4), (0.84, 0.84), (0.36, 0.84)], WD),
          s([(0.4, 0.62), (0.85, 0.62)], WD), s([(0.6, 0.5), (0.64, 0.56)], WD),
          s([(0.58, 0.7), (0.62, 0.76)], WD)],
    "流": [s([(0.1, 0.16), (0.17, 0.26)], WD), s([(0.06, 0.42), (0.13, 0.52)], WD),
          s([(0.08, 0.72), (0.2, 0.6)], WD),
          s([(0.56, 0.04), (0.62, 0.12)], WD), s([(0.32, 0.2), (0.94, 0.2)]),
          s([(0.6, 0.24), (0.42, 0.4)], WD), s([(0.42, 0.4), (0.82, 0.4), (0.72, 0.32)], WD),
          s([(0.44, 0.5), (0.34, 0.86)]), s([(0.62, 0.5), (0.62, 0.84)], WD),
          s([(0.8, 0.5), (0.8, 0.76), (0.92, 0.86)])],

    # seasons / time
    "春": [s([(0.2, 0.14), (0.8, 0.14)]), s([(0.13, 0.28), (0.87, 0.28)]),
          s([(0.06, 0.44), (0.94, 0.44)]),
          s([(0.5, 0.44), (0.36, 0.62), (0.1, 0.82)]), s([(0.52, 0.5), (0.9, 0.82)]),
          s([(0.36, 0.62), (0.64, 0.62), (0.64, 0.9), (0.36, 0.9), (0.36, 0.62)], WD)],
    "秋": [s([(0.34, 0.05), (0.2, 0.13)], WD), s([(0.08, 0.26), (0.46, 0.26)]),
          s([(0.27, 0.1), (0.27, 0.88)]),
          s([(0.26, 0.36), (0.1, 0.56)], WD), s([(0.28, 0.36), (0.44, 0.56)], WD),
          s([(0.6, 0.24), (0.67, 0.36)], WD), s([(0.93, 0.22), (0.85, 0.34)], WD),
          s([(0.78, 0.1), (0.66, 0.52), (0.52, 0.86)]),
          s([(0.74, 0.44), (0.94, 0.86)])],
    "夜": [s([(0.5, 0.03), (0.5, 0.12)], WD), s([(0.1, 0.18), (0.9, 0.18)]),
          s([(0.32, 0.2), (0.16, 0.52)]), s([(0.23, 0.44), (0.23, 0.88)]),
          s([(0.62, 0.22), (0.44, 0.62)]),
          s([(0.6, 0.3), (0.78, 0.48), (0.56, 0.74)], WD),
          s([(0.52, 0.5), (0.88, 0.86)])],
    "晚": [s([(0.08, 0.2), (0.3, 0.2), (0.3, 0.82), (0.08, 0.82), (0.08, 0.2)], WD),
          s([(0.08, 0.5), (0.3, 0.5)], WD),
          s([(0.6, 0.04), (0.46, 0.14)], WD),
          s([(0.44, 0.16), (0.8, 0.16), (0.8, 0.4), (0.44, 0.4), (0.44, 0.16)], WD),
          s([(0.56, 0.4), (0.48, 0.66), (0.36, 0.84)]),
          s([(0.68, 0.4), (0.68, 0.72), (0.92, 0.72), (0.92, 0.6)])],
    "明": [s([(0.08, 0.16), (0.36, 0.16), (0.36, 0.84), (0.08, 0.84), (0.08, 0.16)]),
          s([(0.08, 0.5), (0.36, 0.5)], WD),
          s([(0.52, 0.1), (0.49, 0.55), (0.42, 0.88)]),
          s([(0.52, 0.1), (0.9, 0.1), (0.9, 0.82), (0.8, 0.9)]),
          s([(0.52, 0.34), (0.88, 0.34)], WD), s([(0.51, 0.58), (0.89, 0.58)], WD)],

    # poem chars
    "空": [s([(0.5, 0.02), (0.5, 0.1)], WD), s([(0.14, 0.18), (0.86, 0.18)]),
          s([(0.14, 0.18), (0.14, 0.3)], WD), s([(0.86, 0.18), (0.86, 0.3)], WD),
          s([(0.42, 0.26), (0.26, 0.44)], WD), s([(0.58, 0.26), (0.74, 0.44)], WD),
          s([(0.26, 0.54), (0.74, 0.54)]), s([(0.5, 0.54), (0.5, 0.84)]),
          s([(0.16, 0.84), (0.84, 0.84)])],
    "新": [s([(0.26, 0.04), (0.26, 0.12)], WD), s([(0.1, 0.18), (0.44, 0.18)], WD),
          s([(0.2, 0.26), (0.16, 0.34)], WD), s([(0.34, 0.26), (0.38, 0.34)], WD),
          s([(0.07, 0.4), (0.47, 0.4)]), s([(0.27, 0.4), (0.27, 0.88)]),
          s([(0.26, 0.54), (0.12, 0.72)], WD), s([(0.28, 0.54), (0.42, 0.72)], WD),
          s([(0.78, 0.06), (0.56, 0.2)], WD), s([(0.6, 0.2), (0.6, 0.86)]),
          s([(0.58, 0.44), (0.96, 0.44)]), s([(0.82, 0.44), (0.82, 0.88)])],
    "后": [s([(0.4, 0.04), (0.18, 0.16)], WD), s([(0.16, 0.22), (0.82, 0.22)]),
          s([(0.18, 0.24), (0.1, 0.86)]),
          s([(0.3, 0.44), (0.82, 0.44)]),
          s([(0.3, 0.62), (0.76, 0.62), (0.76, 0.86), (0.3, 0.86), (0.3, 0.62)])],
    "气": [s([(0.34, 0.04), (0.18, 0.16)], WD), s([(0.2, 0.2), (0.78, 0.2)]),
          s([(0.17, 0.38), (0.66, 0.38)]),
          s([(0.14, 0.56), (0.64, 0.56), (0.82, 0.72), (0.84, 0.9), (0.72, 0.9)])],
    "来": [s([(0.16, 0.2), (0.84, 0.2)]),
          s([(0.36, 0.28), (0.43, 0.4)], WD), s([(0.64, 0.28), (0.57, 0.4)], WD),
          s([(0.07, 0.5), (0.93, 0.5)]), s([(0.5, 0.06), (0.5, 0.92)]),
          s([(0.46, 0.56), (0.16, 0.86)]), s([(0.54, 0.56), (0.84, 0.86)])],
    "松": [s([(0.05, 0.3), (0.45, 0.3)]), s([(0.25, 0.07), (0.25, 0.9)]),
          s([(0.24, 0.38), (0.08, 0.6)], WD), s([(0.26, 0.38), (0.42, 0.6)], WD),
          s([(0.64, 0.1), (0.52, 0.36)]), s([(0.76, 0.1), (0.92, 0.36)]),
          s([(0.74, 0.44), (0.56, 0.7)], WD), s([(0.56, 0.7), (0.88, 0.7), (0.78, 0.58)], WD)],
    "间": [s([(0.16, 0.04), (0.23, 0.12)], WD), s([(0.18, 0.16), (0.18, 0.88)]),
          s([(0.26, 0.14), (0.84, 0.14), (0.84, 0.86), (0.74, 0.8)]),
          s([(0.36, 0.34), (0.66, 0.34), (0.66, 0.72), (0.36, 0.72), (0.36, 0.34)], WD),
          s([(0.36, 0.53), (0.66, 0.53)], WD)],
    "照": [s([(0.06, 0.08), (0.3, 0.08), (0.3, 0.58), (0.06, 0.58), (0.06, 0.08)], WD),
          s([(0.06, 0.33), (0.3, 0.33)], WD),
          s([(0.42, 0.08), (0.74, 0.08), (0.64, 0.28)], WD),
          s([(0.74, 0.1), (0.94, 0.1), (0.94, 0.3)], WD),
          s([(0.46, 0.36), (0.72, 0.36), (0.72, 0.58), (0.46, 0.58), (0.46, 0.36)], WD),
          s([(0.14, 0.72), (0.08, 0.86)], WD), s([(0.38, 0.72), (0.35, 0.86)], WD),
          s([(0.6, 0.72), (0.63, 0.86)], WD), s([(0.84, 0.72), (0.92, 0.86)], WD)],
    "清": [s([(0.1, 0.16), (0.17, 0.26)], WD), s([(0.06, 0.42), (0.13, 0.52)], WD),
          s([(0.08, 0.72), (0.2, 0.6)], WD),
          s([(0.34, 0.12), (0.92, 0.12)], WD), s([(0.4, 0.24), (0.86, 0.24)], WD),
          s([(0.32, 0.36), (0.94, 0.36)]), s([(0.63, 0.06), (0.63, 0.36)], WD),
          s([(0.46, 0.46), (0.44, 0.88)], WD),
          s([(0.46, 0.46), (0.82, 0.46), (0.82, 0.82), (0.74, 0.9)], WD),
          s([(0.46, 0.64), (0.81, 0.64)], WD)],
    "树": [s([(0.05, 0.28), (0.42, 0.28)]), s([(0.23, 0.06), (0.23, 0.9)]),
          s([(0.22, 0.36), (0.08, 0.56)], WD), s([(0.24, 0.36), (0.38, 0.56)], WD),
          s([(0.5, 0.3), (0.95, 0.3)]),
          s([(0.78, 0.12), (0.78, 0.82), (0.68, 0.76)]),
          s([(0.58, 0.5), (0.64, 0.6)], WD)],
    "林": [s([(0.03, 0.3), (0.43, 0.3)]), s([(0.23, 0.06), (0.23, 0.9)]),
          s([(0.22, 0.38), (0.08, 0.6)], WD), s([(0.24, 0.38), (0.38, 0.6)], WD),
          s([(0.57, 0.3), (0.97, 0.3)]), s([(0.77, 0.06), (0.77, 0.9)]),
          s([(0.76, 0.38), (0.62, 0.6)], WD), s([(0.78, 0.38), (0.92, 0.6)], WD)],
    "舟": [s([(0.42, 0.04), (0.3, 0.14)], WD),
          s([(0.32, 0.16), (0.24, 0.86)]),
          s([(0.32, 0.16), (0.74, 0.16), (0.8, 0.82), (0.7, 0.9)]),
          s([(0.1, 0.52), (0.92, 0.52)]), s([(0.52, 0.3), (0.52, 0.76)], WD),
          s([(0.42, 0.32), (0.46, 0.4)], WD)],
    "桥": [s([(0.05, 0.28), (0.42, 0.28)]), s([(0.23, 0.06), (0.23, 0.9)]),
          s([(0.22, 0.36), (0.08, 0.56)], WD), s([(0.24, 0.36), (0.38, 0.56)], WD),
          s([(0.8, 0.04), (0.62, 0.12)], WD), s([(0.5, 0.18), (0.96, 0.18)]),
          s([(0.72, 0.2), (0.56, 0.44)], WD), s([(0.74, 0.2), (0.9, 0.44)], WD),
          s([(0.63, 0.52), (0.63, 0.88)], WD), s([(0.83, 0.52), (0.83, 0.88)], WD)],
}

CHARSET_NOTE = "hand-placed skeleton glyphs; coordinates y-down in a unit box"


def main() -> None:
    out = Path(__file__).resolve().parents[1] / "src" / "polaca" / "data" / "strokefont.json"
    font = {
        "name": "polaca-strokes",
        "version": 1,
        "license": "same as the repository (hand-authored for this project)",
        "note": CHARSET_NOTE,
        "glyphs": {ch: strokes for ch, strokes in sorted(GLYPHS.items())},
    }
    text = json.dumps(font, ensure_ascii=False, indent=1, sort_keys=True)
    out.write_text(text, encoding="utf-8")
    digest = hashlib.sha256(out.read_bytes()).hexdigest()
    print(f"wrote {out} ({len(font['glyphs'])} glyphs)")
    print(f"sha256 {digest}")


if __name__ == "__main__":
    main()
