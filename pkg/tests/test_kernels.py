import itertools
import random

import pytest

from trigasket import kernels
from trigasket.word import DomainError


def test_backend_reported():
    assert kernels.BACKEND in ("compiled", "python")
    assert kernels.HAVE_COMPILED == (kernels.BACKEND == "compiled")


def test_encode_validates():
    assert kernels.encode("lru") == bytes((0, 1, 2))
    assert kernels.decode(bytes((2, 0))) == "ul"
    with pytest.raises(DomainError, match="zero-level"):
        kernels.encode("")
    with pytest.raises(DomainError, match="'x'"):
        kernels.encode("lxr")


@pytest.mark.skipif(not kernels.HAVE_COMPILED, reason="compiled kernels not built")
def test_twins_agree_exhaustively_at_small_levels():
    for n in range(1, 4):
        codes = [bytes(c) for c in itertools.product(range(3), repeat=n)]
        for x in codes:
            assert kernels.COMPILED.corner_triple(x) == kernels.PYTHON.corner_triple(x)
            for y in codes:
                assert (kernels.COMPILED.pair_distance(x, y)
                        == kernels.PYTHON.pair_distance(x, y))


@pytest.mark.skipif(not kernels.HAVE_COMPILED, reason="compiled kernels not built")
def test_twins_agree_on_random_levels():
    rng = random.Random(99)
    for level in (5, 12, 23, 40, 60):
        for _ in range(200):
            x = bytes(rng.randrange(3) for _ in range(level))
            y = bytes(rng.randrange(3) for _ in range(level))
            assert kernels.COMPILED.pair_distance(x, y) == kernels.PYTHON.pair_distance(x, y)
            assert kernels.COMPILED.corner_triple(x) == kernels.PYTHON.corner_triple(x)


def test_levels_past_the_compiled_cap_stay_exact():
    # dispatch must route to the unbounded pure twin above level 60
    n = 100
    x = kernels.encode("l" * n)
    y = kernels.encode("u" * n)
    assert kernels.pair_distance(x, y) == 1 << (n - 1)
    triple = kernels.corner_triple(x)
    assert triple == (0, 1 << (n - 1), 1 << (n - 1))


def test_pair_distance_rejects_level_mismatch():
    with pytest.raises(ValueError):
        kernels.PYTHON.pair_distance(bytes((0,)), bytes((0, 1)))
