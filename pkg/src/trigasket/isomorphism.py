"""Isomorphism of the infinite graphs named by eventually periodic words.

Two graphs coincide exactly when some relabelling of the three letters
makes the words agree from some index on, so the decision reduces to six
permutations checked over one aligned period.  The finite-level multiset
search and the degree-2 census give independent cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .gasket import DEFAULT_ORACLE_CAP, degree_in_limit
from .metric import corner_distances
from .word import (
    LETTERS,
    PERMUTATIONS,
    DomainError,
    Permutation,
    WordSpec,
    all_vertices,
    apply_permutation,
    as_word,
    cofinal_up_to_permutation,
    letter_at,
)


@dataclass
class IsoVerdict:
    isomorphic: bool
    witnesses: tuple[Permutation, ...] = ()
    census: tuple[int, int] | None = None
    # per permutation: first tail index where the relabelled word disagrees
    exhausted: tuple[tuple[str, int], ...] = ()


def degree_two_census(w: WordSpec | str) -> tuple[int, WordSpec | None]:
    """Count (0 or 1) of degree-2 vertices in the infinite graph of w.

    Only an eventually constant word keeps one corner extremal forever;
    the vertex is returned as the constant word it spells.
    """
    w = as_word(w)
    start = len(w.prefix) + 1
    for t in LETTERS:
        if degree_in_limit(t * start, w) == 2:
            return 1, WordSpec("", t)
    return 0, None


def decide_iso(v: WordSpec | str, w: WordSpec | str) -> IsoVerdict:
    """Isomorphic iff some relabelling of v is cofinal with w."""
    v, w = as_word(v), as_word(w)
    witnesses = cofinal_up_to_permutation(v, w)
    if witnesses:
        return IsoVerdict(True, witnesses=witnesses)
    census = (degree_two_census(v)[0], degree_two_census(w)[0])
    record = []
    for sigma in PERMUTATIONS:
        sv = apply_permutation(sigma, v)
        n0 = max(len(sv.prefix), len(w.prefix))
        period = lcm(len(sv.cycle), len(w.cycle))
        first = next(i for i in range(n0 + 1, n0 + period + 1)
                     if letter_at(sv, i) != letter_at(w, i))
        record.append((str(sigma), first))
    return IsoVerdict(False, census=census, exhausted=tuple(record))


def finite_level_check(v: WordSpec | str, w: WordSpec | str, n: int,
                       max_level: int = DEFAULT_ORACLE_CAP) -> bool:
    """Search level n for a vertex pair whose corner-distance multisets
    coincide at every level k <= n.

    One-sided: isomorphic words must pass at every n, and a failure at any
    n would certify non-isomorphism.  The unmarked finite levels carry the
    same vertex set for every word, so in practice the search succeeds and
    refutations come from `decide_iso` or the census.
    """
    as_word(v)
    as_word(w)
    if n < 1:
        raise DomainError("level must be >= 1")
    if n > max_level:
        raise DomainError(f"scale cap exceeded: level {n} above cap {max_level}")
    groups: dict[tuple[int, int, int], list[str]] = {}
    for x in all_vertices(n):
        groups.setdefault(corner_distances(x).as_multiset(), []).append(x)
    for xs in groups.values():
        for x in xs:
            for y in xs:
                if all(corner_distances(x[:k]).as_multiset() ==
                       corner_distances(y[:k]).as_multiset()
                       for k in range(1, n + 1)):
                    return True
    return False
