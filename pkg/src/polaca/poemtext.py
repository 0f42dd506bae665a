"""Poem tokenization, keyword ranking and entity canonicalization.

Classical Chinese poetry is handled at character level: each non-whitespace
character is one token. Keywords are ranked with the weighted TextRank
recursion over a within-line co-occurrence graph, then mapped to a closed
vocabulary of canonical entity tags ("mountain", "water", ...) through a
synonym lexicon.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path

# Line-splitting punctuation: CJK comma/stop/bang/question/enum-comma/semicolon/colon.
PUNCTUATION = "，。！？、；："

_SPLIT_RE = re.compile("[" + PUNCTUATION + r"\n\r]+")

DEFAULT_WINDOW = 2
DEFAULT_DAMPING = 0.85
DEFAULT_TOL = 1e-6
DEFAULT_MAX_ITER = 200
DEFAULT_TOP_K = 5


@dataclass(frozen=True)
class Poem:
    """A poem split into punctuation-delimited lines of single-character tokens."""

    id: str
    raw: str
    lines: tuple[str, ...]
    tokens: tuple[tuple[str, ...], ...]

    def all_tokens(self) -> list[str]:
        return [t for line in self.tokens for t in line]


class LexiconError(ValueError):
    """Malformed lexicon file."""


@dataclass(frozen=True)
class EntityLexicon:
    """Surface term -> canonical tag mapping with a closed tag vocabulary."""

    entries: dict[str, str]
    tags: frozenset[str]
    version: str = "1"

    def __post_init__(self) -> None:
        bad = {t for t in self.entries.values() if t not in self.tags}
        if bad:
            raise LexiconError(f"entries map to undeclared tags: {sorted(bad)}")

    def lookup(self, term: str) -> str | None:
        return self.entries.get(term)


def load_lexicon(path: str | Path) -> EntityLexicon:
    """Parse the two-column TSV lexicon.

    First non-blank line must be ``#tags: a,b,c`` declaring the tag
    vocabulary; the body is ``term<TAB>tag`` rows. ``#`` lines elsewhere are
    comments.
    """
    entries: dict[str, str] = {}
    tags: frozenset[str] | None = None
    version = "1"
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            if line.startswith("#tags:"):
                tags = frozenset(t.strip() for t in line[len("#tags:"):].split(",") if t.strip())
            elif line.startswith("#version:"):
                version = line[len("#version:"):].strip()
            continue
        if tags is None:
            raise LexiconError(f"{path}:{lineno}: entry before #tags: header")
        parts = line.split("\t")
        if len(parts) != 2:
            raise LexiconError(f"{path}:{lineno}: expected 'term<TAB>tag', got {line!r}")
        term, tag = parts[0].strip(), parts[1].strip()
        if tag not in tags:
            raise LexiconError(f"{path}:{lineno}: tag {tag!r} not in declared vocabulary")
        entries[term] = tag
    if tags is None:
        raise LexiconError(f"{path}: missing #tags: header")
    return EntityLexicon(entries=entries, tags=tags, version=version)


@dataclass
class KeywordGraph:
    """Symmetric co-occurrence graph; edge weight = co-occurrence count."""

    nodes: set[str] = field(default_factory=set)
    adj: dict[str, dict[str, int]] = field(default_factory=dict)
    window: int = DEFAULT_WINDOW

    def add_edge(self, a: str, b: str, w: int = 1) -> None:
        if a == b:
            return
        self.nodes.add(a)
        self.nodes.add(b)
        self.adj.setdefault(a, {})[b] = self.adj.get(a, {}).get(b, 0) + w
        self.adj.setdefault(b, {})[a] = self.adj.get(b, {}).get(a, 0) + w

    def weight(self, a: str, b: str) -> int:
        return self.adj.get(a, {}).get(b, 0)

    def degree_weight(self, a: str) -> int:
        return sum(self.adj.get(a, {}).values())


@dataclass(frozen=True)
class EntitySet:
    """Canonical tags extracted from a poem with their TextRank scores."""

    poem_id: str
    tags: frozenset[str]
    scores: dict[str, float]

    def to_json(self) -> str:
        return json.dumps(
            {"poem_id": self.poem_id, "tags": sorted(self.tags),
             "scores": {t: self.scores[t] for t in sorted(self.scores)}},
            ensure_ascii=False,
        )

    @staticmethod
    def from_json(text: str) -> "EntitySet":
        obj = json.loads(text)
        return EntitySet(poem_id=obj["poem_id"], tags=frozenset(obj["tags"]),
                         scores={k: float(v) for k, v in obj["scores"].items()})


def tokenize_poem(raw: str, poem_id: str = "") -> Poem:
    """Split on CJK punctuation and line breaks, then into character tokens.

    Whitespace is dropped entirely; empty segments are dropped. Empty input
    yields a poem with zero lines.
    """
    lines: list[str] = []
    tokens: list[tuple[str, ...]] = []
    for segment in _SPLIT_RE.split(raw):
        chars = tuple(c for c in segment if not c.isspace())
        if not chars:
            continue
        lines.append("".join(chars))
        tokens.append(chars)
    return Poem(id=poem_id, raw=raw, lines=tuple(lines), tokens=tuple(tokens))


def build_cooccurrence_graph(poem: Poem, window: int = DEFAULT_WINDOW) -> KeywordGraph:
    """Within-line co-occurrence counts for token pairs at distance <= window."""
    if window < 1:
        raise ValueError(f"window must be >= 1, got {window}")
    graph = KeywordGraph(window=window)
    for line in poem.tokens:
        graph.nodes.update(line)
        for i, a in enumerate(line):
            for j in range(i + 1, min(i + window + 1, len(line))):
                graph.add_edge(a, line[j])
    return graph


def textrank_scores(
    graph: KeywordGraph,
    damping: float = DEFAULT_DAMPING,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> dict[str, float]:
    """Weighted TextRank over the co-occurrence graph.

    Iterates ``WS(v) = (1-d) + d * sum_u w(u,v)/deg_w(u) * WS(u)`` from an
    all-ones start until the largest absolute change drops below ``tol``.
    Isolated nodes end up at exactly ``1-d``.
    """
    if not 0.0 < damping < 1.0:
        raise ValueError(f"damping must be in (0,1), got {damping}")
    if tol <= 0:
        raise ValueError(f"tol must be > 0, got {tol}")
    nodes = sorted(graph.nodes)
    if not nodes:
        return {}
    out_weight = {v: graph.degree_weight(v) for v in nodes}
    scores = {v: 1.0 for v in nodes}
    for _ in range(max_iter):
        delta = 0.0
        new_scores = {}
        for v in nodes:
            acc = 0.0
            for u, w in graph.adj.get(v, {}).items():
                acc += w / out_weight[u] * scores[u]
            s = (1.0 - damping) + damping * acc
            new_scores[v] = s
            delta = max(delta, abs(s - scores[v]))
        scores = new_scores
        if delta < tol:
            break
    return scores


def canonicalize(term: str, lexicon: EntityLexicon) -> str | None:
    """Exact-match synonym lookup; None when the term is not in the lexicon."""
    return lexicon.lookup(term)


def extract_entities(
    poem: Poem,
    lexicon: EntityLexicon,
    k: int = DEFAULT_TOP_K,
    window: int = DEFAULT_WINDOW,
    damping: float = DEFAULT_DAMPING,
) -> EntitySet:
    """Top-k canonical tags of a poem ranked by max constituent token score.

    TextRank runs per poem; only tokens present in the lexicon survive.
    Ties break lexicographically on the tag so output is reproducible.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    graph = build_cooccurrence_graph(poem, window=window)
    token_scores = textrank_scores(graph, damping=damping)
    tag_scores: dict[str, float] = {}
    for token in poem.all_tokens():
        tag = lexicon.lookup(token)
        if tag is None:
            continue
        score = token_scores.get(token, 1.0 - damping)
        if tag not in tag_scores or score > tag_scores[tag]:
            tag_scores[tag] = score
    ranked = sorted(tag_scores.items(), key=lambda kv: (-kv[1], kv[0]))[:k]
    return EntitySet(
        poem_id=poem.id,
        tags=frozenset(t for t, _ in ranked),
        scores={t: s for t, s in ranked},
    )
