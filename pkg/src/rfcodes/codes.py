"""Codes and codewords on ``n`` neurons, parsing, and the connectivity test.

A codeword is stored as a plain ``int`` bit mask: neuron ``i`` (1-based) is
bit ``i - 1``. A :class:`Code` is an immutable set of such masks that always
contains the empty word ``0``.
"""

from __future__ import annotations

import itertools
import json
import re
import warnings
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_NEURONS = 64


class CodeParseError(ValueError):
    """Raised for malformed code text."""


class CodeWarning(UserWarning):
    """Emitted when parsing repairs the input (missing empty word, duplicates)."""


class NotConnectedError(ValueError):
    """The code is not a connected code; ``witness`` is ``(i, sigma, tau)``."""

    def __init__(self, witness):
        self.witness = witness
        i, sigma, tau = witness
        super().__init__(
            f"neuron {i}, codewords {fmt_set(sigma)} and {fmt_set(tau)}"
        )


# -- codeword helpers -------------------------------------------------------

def word(*neurons: int) -> int:
    """Mask for the codeword containing the given 1-based neurons."""
    mask = 0
    for i in neurons:
        if not 1 <= i <= MAX_NEURONS:
            raise ValueError(f"neuron index {i} out of range 1..{MAX_NEURONS}")
        mask |= 1 << (i - 1)
    return mask


def neurons_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def sort_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """(cardinality, lexicographic) order used everywhere for determinism."""
    ns = neurons_of(mask)
    return (len(ns), ns)


def is_subset(a: int, b: int) -> bool:
    return a & b == a


def strictly_comparable(a: int, b: int) -> bool:
    return a != b and (a & b == a or a & b == b)


def comparable(a: int, b: int) -> bool:
    return a & b == a or a & b == b


def fmt_word(mask: int) -> str:
    """Shorthand form: ``"e"`` for the empty word, ``"12"`` for {1,2}."""
    ns = neurons_of(mask)
    if not ns:
        return "e"
    if ns[-1] <= 9:
        return "".join(map(str, ns))
    return "{" + ",".join(map(str, ns)) + "}"


def fmt_set(mask: int) -> str:
    return "{" + ",".join(map(str, neurons_of(mask))) + "}"


# -- Code -------------------------------------------------------------------

@dataclass(frozen=True)
class Code:
    """A combinatorial code on ``n`` neurons; the empty word is always present."""

    n: int
    words: frozenset[int]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_NEURONS:
            raise ValueError(f"neuron count {self.n} out of range 1..{MAX_NEURONS}")
        words = frozenset(int(w) for w in self.words) | {0}
        limit = 1 << self.n
        for w in words:
            if w < 0 or w >= limit:
                raise ValueError(
                    f"codeword {fmt_set(w)} references a neuron above n={self.n}"
                )
        object.__setattr__(self, "words", words)

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable[int]], n: int | None = None) -> "Code":
        masks = [word(*s) for s in sets]
        if n is None:
            n = max(1, max((m.bit_length() for m in masks), default=1))
        return cls(n, frozenset(masks))

    @property
    def sorted_words(self) -> tuple[int, ...]:
        return tuple(sorted(self.words, key=sort_key))

    @property
    def nonempty(self) -> tuple[int, ...]:
        return tuple(w for w in self.sorted_words if w)

    def __contains__(self, mask) -> bool:
        return mask in self.words

    def __iter__(self) -> Iterator[int]:
        return iter(self.sorted_words)

    def __len__(self) -> int:
        return len(self.words)

    def empty_neurons(self) -> tuple[int, ...]:
        """Neurons that occur in no codeword (their receptive field is empty)."""
        used = 0
        for w in self.words:
            used |= w
        return tuple(i for i in range(1, self.n + 1) if not used >> (i - 1) & 1)

    def permute(self, perm: Sequence[int]) -> "Code":
        """Relabel neurons: neuron ``i`` becomes ``perm[i - 1]``."""
        return Code(self.n, frozenset(permute_word(w, perm) for w in self.words))

    def shorthand(self) -> str:
        return ",".join(fmt_word(w) for w in self.sorted_words)

    def to_dict(self) -> dict:
        return {"n": self.n, "codewords": [list(neurons_of(w)) for w in self.sorted_words]}

    def serialize(self) -> str:
        return json.dumps(self.to_dict())

    def __str__(self) -> str:
        return "{" + ",".join("∅" if not w else fmt_word(w) for w in self.sorted_words) + "}"


def permute_word(mask: int, perm: Sequence[int]) -> int:
    out = 0
    for i in neurons_of(mask):
        out |= 1 << (perm[i - 1] - 1)
    return out


# -- parsing ----------------------------------------------------------------

_BRACE = re.compile(r"\{([^{}]*)\}")


def _check_index(i: int) -> int:
    if i == 0 or i > MAX_NEURONS:
        raise CodeParseError(f"neuron index {i} out of range 1..{MAX_NEURONS}")
    return i


def _parse_brace_group(body: str) -> tuple[int, ...]:
    body = body.strip()
    if not body:
        return ()
    out = []
    for tok in body.split(","):
        tok = tok.strip()
        if not tok.isdigit():
            raise CodeParseError(f"malformed neuron index {tok!r}")
        out.append(_check_index(int(tok)))
    return tuple(out)


def _parse_short_token(tok: str) -> tuple[int, ...]:
    if tok in ("e", "∅", "{}", ""):
        return ()
    if not tok.isdigit():
        raise CodeParseError(f"malformed token {tok!r}")
    ids = tuple(_check_index(int(c)) for c in tok)
    if len(set(ids)) != len(ids):
        raise CodeParseError(f"token {tok!r} repeats a neuron")
    return ids


def parse_code(text: str, n: int | None = None) -> Code:
    """Parse a code from shorthand, brace syntax, or the canonical JSON format.

    Shorthand is ``"e,1,12,2"``; brace syntax lists neuron indices per
    codeword, ``"{}, {1}, {1,2}"``; the canonical form is a JSON object with
    ``n`` and ``codewords``. The empty word is inserted when missing and
    duplicate codewords are dropped, each with a :class:`CodeWarning`.
    """
    text = text.strip()
    if text.startswith("{") and '"' in text:
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CodeParseError(f"bad JSON code document: {exc}") from None
        if not isinstance(doc, dict) or "codewords" not in doc:
            raise CodeParseError("JSON code document needs a 'codewords' field")
        groups = []
        for cw in doc["codewords"]:
            if not isinstance(cw, list) or not all(isinstance(i, int) for i in cw):
                raise CodeParseError(f"malformed codeword {cw!r}")
            groups.append(tuple(_check_index(i) for i in cw))
        n = doc.get("n", n)
    elif text.startswith("{"):
        rest = _BRACE.sub("", text).replace(",", "").strip()
        if rest:
            raise CodeParseError(f"unexpected text outside braces: {rest!r}")
        groups = [_parse_brace_group(g) for g in _BRACE.findall(text)]
    else:
        if n is not None and n > 9:
            raise CodeParseError("shorthand syntax requires n <= 9; use braces")
        groups = [_parse_short_token(t.strip()) for t in text.split(",")]

    masks = []
    for g in groups:
        if len(set(g)) != len(g):
            raise CodeParseError(f"codeword {g} repeats a neuron")
        masks.append(word(*g))
    if len(set(masks)) != len(masks):
        warnings.warn("duplicate codewords removed", CodeWarning, stacklevel=2)
    if 0 not in masks:
        warnings.warn("empty codeword added", CodeWarning, stacklevel=2)
    top = max((m.bit_length() for m in masks), default=0)
    if n is None:
        n = max(1, top)
    elif top > n:
        raise CodeParseError(f"codeword references neuron {top} > n={n}")
    try:
        return Code(int(n), frozenset(masks))
    except ValueError as exc:
        raise CodeParseError(str(exc)) from None


# -- connectivity -----------------------------------------------------------

def neuron_graph(code: Code, i: int) -> tuple[tuple[int, ...], list[tuple[int, int]]]:
    """Codewords containing neuron ``i`` and the strict-containment pairs among them.

    Returns ``(vertices, edges)`` with vertices in sorted order and edges as
    ``(smaller, larger)`` mask pairs.
    """
    if not 1 <= i <= code.n:
        raise ValueError(f"neuron {i} out of range 1..{code.n}")
    bit = 1 << (i - 1)
    verts = tuple(w for w in code.sorted_words if w & bit)
    edges = [
        (a, b) if is_subset(a, b) else (b, a)
        for a, b in itertools.combinations(verts, 2)
        if strictly_comparable(a, b)
    ]
    return verts, edges


def _components(verts, edges) -> dict[int, int]:
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra
    return {v: find(v) for v in verts}


@dataclass(frozen=True)
class Connectivity:
    connected: bool
    witness: tuple[int, int, int] | None = None

    def __bool__(self) -> bool:
        return self.connected


def is_connected_code(code: Code) -> Connectivity:
    """Check that every neuron's containment graph is connected.

    On failure the witness ``(i, sigma, tau)`` is the lexicographically
    smallest: smallest neuron, then ``sigma`` the first codeword of that
    neuron and ``tau`` the first codeword outside sigma's component.
    """
    for i in range(1, code.n + 1):
        verts, edges = neuron_graph(code, i)
        if len(verts) < 2:
            continue
        comp = _components(verts, edges)
        first = verts[0]
        for v in verts[1:]:
            if comp[v] != comp[first]:
                return Connectivity(False, (i, first, v))
    return Connectivity(True)


def require_connected(code: Code) -> None:
    verdict = is_connected_code(code)
    if not verdict:
        raise NotConnectedError(verdict.witness)


def automorphisms(code: Code, max_n: int = 7) -> list[tuple[int, ...]]:
    """Neuron permutations mapping the code onto itself (identity first).

    Only computed for ``n <= max_n``; larger codes report just the identity.
    """
    ident = tuple(range(1, code.n + 1))
    if code.n > max_n:
        return [ident]
    out = []
    for perm in itertools.permutations(ident):
        if all(permute_word(w, perm) in code.words for w in code.words):
            out.append(perm)
    return out
