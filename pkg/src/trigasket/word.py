"""Addresses and eventually periodic words over the gasket alphabet {l, r, u}.

A vertex of the level-n triangle graph is a word of n letters, position 1
at the finest scale and position n selecting the top-level copy.  Gluing
the three copies identifies the spellings ``t^k s v`` and ``s^k t v``
(t != s, any tail v, including the empty one), so every vertex has at most
two spellings; `canonicalize` returns the smaller one in the letter order
l < r < u, which happens to coincide with plain string order.

Infinite words are kept in the eventually periodic form ``prefix(cycle)``
and serve double duty: they select a graph, and the words cofinal with the
chosen one name its vertices.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from math import lcm

LETTERS = "lru"  # sorted; ASCII order equals the canonical letter order

_ADDRESS_RE = re.compile(r"[lru]+\Z")
_WORD_RE = re.compile(r"(?P<prefix>[lru]*)\((?P<cycle>[lru]+)\)\Z")


class DomainError(ValueError):
    """Invalid address, word, level, or argument combination."""


def parse_address(text: str) -> str:
    """Validate an address string (nonempty, letters l/r/u only)."""
    if not text:
        raise DomainError("zero-level address")
    if not _ADDRESS_RE.match(text):
        bad = next(ch for ch in text if ch not in LETTERS)
        raise DomainError(f"invalid address {text!r}: unknown letter {bad!r}")
    return text


def partner(word: str) -> str | None:
    """The other spelling of the same vertex, or None for constant words."""
    first = word[0]
    n = len(word)
    k = 1
    while k < n and word[k] == first:
        k += 1
    if k == n:
        return None
    return word[k] * k + first + word[k + 1:]


def canonicalize(word: str) -> str:
    """The representative spelling of a vertex: the smaller of the pair."""
    word = parse_address(word)
    other = partner(word)
    if other is None or word <= other:
        return word
    return other


def is_canonical(word: str) -> bool:
    return word == canonicalize(word)


def identification_class(word: str) -> tuple[str, ...]:
    """All spellings of the vertex named by `word` (one or two)."""
    rep = canonicalize(word)
    other = partner(rep)
    if other is None:
        return (rep,)
    return (rep, other)


def corner_address(t: str, n: int) -> str:
    """The extremal corner t^n of the level-n graph."""
    if t not in LETTERS:
        raise DomainError(f"unknown letter {t!r}")
    if n < 1:
        raise DomainError("level must be >= 1")
    return t * n


def all_vertices(n: int) -> list[str]:
    """Sorted canonical spellings of every level-n vertex."""
    if n < 1:
        raise DomainError("level must be >= 1")
    seen = {canonicalize("".join(w)) for w in itertools.product(LETTERS, repeat=n)}
    return sorted(seen)


@dataclass(frozen=True)
class WordSpec:
    """An eventually periodic infinite word ``prefix (cycle)^omega``."""

    prefix: str = ""
    cycle: str = "l"

    def __post_init__(self):
        if not self.cycle:
            raise DomainError("cycle must be nonempty")
        for ch in self.prefix + self.cycle:
            if ch not in LETTERS:
                raise DomainError(f"invalid word letter {ch!r}")

    @classmethod
    def parse(cls, text: str) -> "WordSpec":
        m = _WORD_RE.match(text)
        if m is None:
            raise DomainError(
                f"invalid word {text!r}: expected prefix(cycle) over letters lru")
        return cls(m["prefix"], m["cycle"])

    def __str__(self) -> str:
        return f"{self.prefix}({self.cycle})"

    def normalized(self) -> "WordSpec":
        """Shortest-prefix, primitive-cycle form; equal infinite words
        normalize to the identical spec."""
        cyc = self.cycle
        k = len(cyc)
        for d in range(1, k + 1):
            if k % d == 0 and cyc[:d] * (k // d) == cyc:
                cyc = cyc[:d]
                break
        pre = self.prefix
        while pre and pre[-1] == cyc[-1]:
            cyc = cyc[-1] + cyc[:-1]
            pre = pre[:-1]
        return WordSpec(pre, cyc)

    def tail_letter(self) -> str | None:
        """The letter the word eventually repeats forever, if any."""
        norm = self.normalized()
        return norm.cycle if len(norm.cycle) == 1 else None


def as_word(w: "WordSpec | str") -> WordSpec:
    if isinstance(w, WordSpec):
        return w
    return WordSpec.parse(w)


def letter_at(w: WordSpec | str, i: int) -> str:
    """The i-th letter of the infinite word, 1-based."""
    w = as_word(w)
    if i < 1:
        raise DomainError("letter index must be >= 1")
    p = len(w.prefix)
    if i <= p:
        return w.prefix[i - 1]
    return w.cycle[(i - p - 1) % len(w.cycle)]


def same_word(a: WordSpec | str, b: WordSpec | str) -> bool:
    return as_word(a).normalized() == as_word(b).normalized()


def pad(x: str, w: WordSpec | str, n: int) -> str:
    """The level-h vertex x viewed inside the level-n graph of w (n >= h).

    The level-h graph sits in the copy selected by the (h+1)-th letter of
    w, so padding appends the letters of w beyond position h.
    """
    x = parse_address(x)
    w = as_word(w)
    h = len(x)
    if n < h:
        raise DomainError(f"cannot truncate: level {n} below address level {h}")
    tail = "".join(letter_at(w, i) for i in range(h + 1, n + 1))
    return canonicalize(x + tail)


@dataclass(frozen=True)
class Permutation:
    """A bijection of the three letters; `images` maps l, r, u in order."""

    images: tuple[str, str, str]

    def __post_init__(self):
        if sorted(self.images) != list(LETTERS):
            raise DomainError(f"not a permutation of {LETTERS!r}: {self.images!r}")

    def apply(self, letter: str) -> str:
        return self.images[LETTERS.index(letter)]

    def compose(self, other: "Permutation") -> "Permutation":
        """self applied after other."""
        return Permutation(tuple(self.apply(c) for c in other.images))

    def inverse(self) -> "Permutation":
        back = {img: src for src, img in zip(LETTERS, self.images)}
        return Permutation(tuple(back[c] for c in LETTERS))

    def __str__(self) -> str:
        parts = []
        seen = set()
        for start in LETTERS:
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self.apply(start)
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self.apply(nxt)
            if len(cyc) > 1:
                parts.append("(" + " ".join(cyc) + ")")
        return "".join(parts) or "id"


PERMUTATIONS: tuple[Permutation, ...] = tuple(
    Permutation(p) for p in itertools.permutations(LETTERS))
IDENTITY = PERMUTATIONS[0]


def apply_permutation(sigma: Permutation, x: "str | WordSpec"):
    """Letterwise relabelling; addresses are re-canonicalized."""
    if isinstance(x, WordSpec):
        mapped = lambda s: "".join(sigma.apply(c) for c in s)
        return WordSpec(mapped(x.prefix), mapped(x.cycle))
    parse_address(x)
    return canonicalize("".join(sigma.apply(c) for c in x))


def _agree_window(v: WordSpec, w: WordSpec) -> range:
    # Two eventually periodic words agree from some index on iff they agree
    # on one aligned full period beyond both prefixes.
    n0 = max(len(v.prefix), len(w.prefix))
    p = lcm(len(v.cycle), len(w.cycle))
    return range(n0 + 1, n0 + p + 1)


def cofinal_up_to_permutation(v: WordSpec | str, w: WordSpec | str) -> tuple[Permutation, ...]:
    """Every relabelling sigma such that sigma(v) and w eventually agree."""
    v, w = as_word(v), as_word(w)
    hits = []
    for sigma in PERMUTATIONS:
        sv = apply_permutation(sigma, v)
        if all(letter_at(sv, i) == letter_at(w, i) for i in _agree_window(sv, w)):
            hits.append(sigma)
    return tuple(hits)


def orbit(w: WordSpec | str) -> set[WordSpec]:
    """The distinct relabellings of w (3 for constant words, else 6)."""
    w = as_word(w)
    return {apply_permutation(sigma, w).normalized() for sigma in PERMUTATIONS}


def vertex_of(x: WordSpec | str, w: WordSpec | str) -> str | None:
    """The finite address of x inside the graph of w, or None when x is
    not cofinal with w (and hence not a vertex of that graph)."""
    x, w = as_word(x), as_word(w)
    if any(letter_at(x, i) != letter_at(w, i) for i in _agree_window(x, w)):
        return None
    n0 = max(len(x.prefix), len(w.prefix))
    last = 0
    for i in range(1, n0 + 1):
        if letter_at(x, i) != letter_at(w, i):
            last = i
    n = max(1, last)
    return canonicalize("".join(letter_at(x, i) for i in range(1, n + 1)))


def minimal_form(x: str, w: WordSpec | str = "(l)") -> str:
    """Shortest address naming the same vertex of the graph of w.

    Strips trailing letters that agree with w, switching to the other
    spelling when that is the one exposing a strippable letter.
    """
    w = as_word(w)
    cur = canonicalize(x)
    while len(cur) > 1:
        want = letter_at(w, len(cur))
        if cur[-1] == want:
            cur = canonicalize(cur[:-1])
            continue
        alt = partner(cur)
        if alt is not None and alt[-1] == want:
            cur = canonicalize(alt[:-1])
            continue
        break
    return cur
