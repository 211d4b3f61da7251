"""Limit behaviour of distance differences on the standard graph.

The standard graph is the one with tail word (l); its basepoint o is the
degree-2 corner l, l, l, ...  For an escaping vertex sequence x_1, x_2,
... the probe tables hold d(x_n, o) - d(x_n, y) on a finite ball around o.
Three limit functions occur: the two corner (Busemann) limits along u^n
and r^n, and the symmetric-point limit along r^n u, which bounded
perturbations reproduce up to a bounded difference.

Classification compares stabilized tables against the three closed forms
over a growing radius schedule.  Exact table equality is decisive; the
bounded-difference criterion is a finite-radius proxy for equivalence and
results carry that label.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .metric import ball, corner_distances, distance
from .word import (
    DomainError,
    WordSpec,
    as_word,
    canonicalize,
    letter_at,
    minimal_form,
    pad,
    parse_address,
)

BASE_WORD = WordSpec("", "l")

CORNER_U = "cornerU"
CORNER_R = "cornerR"
SYMMETRIC = "symmetric"
ALTERNATING = "alternating"
FAMILIES = (CORNER_U, CORNER_R, SYMMETRIC, ALTERNATING)

VERDICT_BUSEMANN_U = "BusemannU"
VERDICT_BUSEMANN_R = "BusemannR"
VERDICT_SYMMETRIC = "SymmetricClass"
VERDICT_DIVERGENT = "Divergent"
VERDICT_UNRESOLVED = "Unresolved"

DEFAULT_RADII = (2, 4, 8, 16, 32, 64, 128)


def basepoint(level: int) -> str:
    return "l" * level


def horo_value(x: str, y: str, w: WordSpec | str = BASE_WORD) -> int:
    """d(x, o) - d(x, y) with both addresses padded to a common level."""
    w = as_word(w)
    x = parse_address(x)
    y = parse_address(y)
    n = max(len(x), len(y))
    o = canonicalize("".join(letter_at(w, i) for i in range(1, n + 1)))
    xp = pad(x, w, n)
    yp = pad(y, w, n)
    return distance(xp, o) - distance(xp, yp)


def busemann(t: str, y: str) -> int:
    """Limit value at y along the corner ray t^n, t in {u, r}.

    Level-stable closed form: 2^(h-1) minus the corner distance at t.
    """
    if t not in ("u", "r"):
        raise DomainError(
            f"busemann rays run to the u or r corner, got {t!r} "
            "(l is the basepoint direction)")
    y = parse_address(y)
    return (1 << (len(y) - 1)) - corner_distances(y).component(t)


def symmetric_limit(y: str) -> int:
    """Limit value at y along the symmetric points r^n u.

    Equals the pointwise max of the two busemann values: the escaping
    point reaches y through whichever of the u / r corners is closer.
    """
    y = parse_address(y)
    trip = corner_distances(y)
    return (1 << (len(y) - 1)) - min(trip.du, trip.dr)


@dataclass(frozen=True)
class VertexSequence:
    """An escaping vertex sequence: a builtin family or an explicit list."""

    kind: str
    entries: tuple[str, ...] = ()

    @classmethod
    def family(cls, kind: str) -> "VertexSequence":
        if kind not in FAMILIES:
            raise DomainError(f"unknown family {kind!r}; expected one of {FAMILIES}")
        return cls(kind)

    @classmethod
    def explicit(cls, addresses) -> "VertexSequence":
        entries = tuple(canonicalize(a) for a in addresses)
        if not entries:
            raise DomainError("explicit sequence is empty")
        for k in range(1, len(entries)):
            if len(entries[k]) <= len(entries[k - 1]):
                raise DomainError(
                    f"sequence must escape: level of entry {k + 1} "
                    f"({entries[k]!r}) does not exceed entry {k}")
        return cls("explicit", entries)

    def vertex(self, n: int) -> str | None:
        """The n-th vertex (1-based); None once an explicit list is exhausted."""
        if n < 1:
            raise DomainError("sequence index must be >= 1")
        if self.kind == "explicit":
            return self.entries[n - 1] if n <= len(self.entries) else None
        if self.kind == CORNER_U:
            return "u" * n
        if self.kind == CORNER_R:
            return "r" * n
        if self.kind == SYMMETRIC:
            return "r" * n + "u"
        return "u" * n if n % 2 == 0 else "r" * n  # alternating


def parse_sequence(text: str) -> VertexSequence:
    """One address per line; blank lines and # comments ignored."""
    addresses = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        addresses.append(parse_address(line))
    if not addresses:
        raise DomainError("sequence file contains no addresses")
    return VertexSequence.explicit(addresses)


def probe_level(radius: int) -> int:
    """Smallest level whose graph contains the whole radius-r ball at o."""
    h = 1
    while (1 << (h - 1)) < radius:
        h += 1
    return h


@dataclass
class HoroTable:
    """Values of one d(x_n, o) - d(x_n, .) on the probe ball."""

    radius: int
    level: int
    index: int
    values: dict[str, int] = field(repr=False)
    dist_to_o: dict[str, int] = field(repr=False)


@dataclass
class TableReport:
    stabilized: bool
    stable_from: int | None
    evaluated: int
    window: int
    history: dict[str, list[int]] = field(repr=False)
    exhausted: bool = False


def evaluate_table(seq: VertexSequence, radius: int, max_level: int,
                   stability_window: int = 3) -> tuple[list[HoroTable], TableReport]:
    """Tables of the sequence's distance differences on the probe ball.

    Stops early once `stability_window` consecutive tables agree; the
    report then carries the fixed table's index.  Explicit sequences that
    run out beforehand are flagged exhausted.
    """
    if radius < 1:
        raise DomainError("radius must be >= 1")
    if stability_window < 2:
        raise DomainError("stability window must be >= 2")
    if max_level < stability_window:
        raise DomainError("max level must be at least the stability window")
    h = probe_level(radius)
    probes = sorted(ball("l", radius, BASE_WORD, level=h))
    o = basepoint(h)
    dist_o = {y: distance(o, y) for y in probes}
    history: dict[str, list[int]] = {y: [] for y in probes}
    tables: list[HoroTable] = []
    prev = None
    run = 0
    stable_from = None
    exhausted = False
    for n in range(1, max_level + 1):
        x = seq.vertex(n)
        if x is None:
            exhausted = True
            break
        vals = {y: horo_value(x, y) for y in probes}
        for y in probes:
            history[y].append(vals[y])
        tables.append(HoroTable(radius=radius, level=h, index=n,
                                values=vals, dist_to_o=dist_o))
        run = run + 1 if vals == prev else 1
        prev = vals
        if run >= stability_window:
            stable_from = n - stability_window + 1
            break
    report = TableReport(stabilized=stable_from is not None,
                         stable_from=stable_from, evaluated=len(tables),
                         window=stability_window, history=history,
                         exhausted=exhausted)
    return tables, report


@dataclass
class Classification:
    verdict: str
    radii: tuple[int, ...]
    exact: bool | None = None
    bound: int | None = None
    witness: str | None = None
    witness_values: tuple[int, ...] | None = None
    table: HoroTable | None = None
    note: str = ""


_CANONICAL = (
    (VERDICT_BUSEMANN_U, lambda y: busemann("u", y)),
    (VERDICT_BUSEMANN_R, lambda y: busemann("r", y)),
    (VERDICT_SYMMETRIC, symmetric_limit),
)


def _recurs_alternately(vals, a, b, swings: int = 3) -> bool:
    # a, b, a, b, ... as a subsequence, `swings` pairs deep
    want = (a, b) * swings
    k = 0
    for v in vals:
        if v == want[k]:
            k += 1
            if k == len(want):
                return True
    return False


# corner presentation order, for deterministic witness selection
_CORNER_RANK = str.maketrans("ulr", "012")


def _witness_rank(addr: str, dist_o) -> tuple:
    short = minimal_form(addr, BASE_WORD)
    return dist_o.get(addr, 0), len(short), short.translate(_CORNER_RANK)


def _oscillation_witness(history, dist_o):
    order = sorted(history, key=lambda a: _witness_rank(a, dist_o))
    for addr in order:
        vals = history[addr]
        distinct = sorted(set(vals))
        for i, a in enumerate(distinct):
            for b in distinct[i + 1:]:
                if _recurs_alternately(vals, a, b) or _recurs_alternately(vals, b, a):
                    return addr, (a, b)
    return None


def classify(seq: VertexSequence, radii, max_level: int,
             stability_window: int = 3) -> Classification:
    """Decide which limit class the sequence's tables settle into.

    Oscillation between two recurring values on any probe vertex means no
    limit exists.  Otherwise stabilized tables are compared with the three
    canonical closed forms on every radius of the schedule: exact equality
    wins outright, else the unique canonical whose difference stays
    bounded (not increasing over the last two radii) names the class.
    """
    radii = tuple(radii)
    if not radii:
        raise DomainError("radius schedule is empty")
    stable_tables = []
    for r in radii:
        tables, report = evaluate_table(seq, r, max_level, stability_window)
        if not report.stabilized:
            dist_o = tables[0].dist_to_o if tables else {}
            hit = _oscillation_witness(report.history, dist_o)
            if hit is not None:
                addr, (a, b) = hit
                return Classification(
                    VERDICT_DIVERGENT, radii,
                    witness=minimal_form(addr, BASE_WORD),
                    witness_values=(a, b),
                    note=f"radius {r}: values {a} and {b} recur alternately")
            note = f"radius {r}: no stable window of {stability_window} within " \
                   f"{report.evaluated} terms"
            if report.exhausted:
                note += " (sequence exhausted)"
            return Classification(VERDICT_UNRESOLVED, radii, note=note)
        stable_tables.append(tables[-1])

    exact_hits = []
    bounded_hits = []
    for name, fn in _CANONICAL:
        diffs = [max((abs(tab.values[y] - fn(y)) for y in tab.values), default=0)
                 for tab in stable_tables]
        if all(d == 0 for d in diffs):
            exact_hits.append(name)
        else:
            tail_ok = diffs[-1] <= diffs[-2] if len(diffs) >= 2 else True
            if tail_ok:
                bounded_hits.append((name, max(diffs)))
    if len(exact_hits) == 1:
        return Classification(exact_hits[0], radii, exact=True, bound=0,
                              table=stable_tables[-1])
    if not exact_hits and len(bounded_hits) == 1:
        name, bound = bounded_hits[0]
        return Classification(name, radii, exact=False, bound=bound,
                              table=stable_tables[-1],
                              note="bounded-difference proxy on finite radii")
    return Classification(VERDICT_UNRESOLVED, radii,
                          table=stable_tables[-1] if stable_tables else None,
                          note="no unique canonical match on the radius schedule")


def table_to_csv(tab: HoroTable) -> str:
    lines = ["address,distance_to_o,value"]
    for y in sorted(tab.values):
        lines.append(f"{y},{tab.dist_to_o[y]},{tab.values[y]}")
    return "\n".join(lines) + "\n"


def table_to_json(tab: HoroTable) -> str:
    payload = {
        "radius": tab.radius,
        "probe_level": tab.level,
        "index": tab.index,
        "rows": [
            {"address": y, "distance_to_o": tab.dist_to_o[y], "value": tab.values[y]}
            for y in sorted(tab.values)
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
