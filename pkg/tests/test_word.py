import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from trigasket.word import (
    IDENTITY,
    PERMUTATIONS,
    DomainError,
    Permutation,
    WordSpec,
    all_vertices,
    apply_permutation,
    canonicalize,
    cofinal_up_to_permutation,
    corner_address,
    identification_class,
    is_canonical,
    letter_at,
    minimal_form,
    orbit,
    pad,
    parse_address,
    partner,
    same_word,
    vertex_of,
)

addresses = st.text(alphabet="lru", min_size=1, max_size=8)
word_specs = st.builds(WordSpec,
                       st.text(alphabet="lru", min_size=0, max_size=4),
                       st.text(alphabet="lru", min_size=1, max_size=4))


def raw_words(n):
    return ("".join(w) for w in itertools.product("lru", repeat=n))


def test_parse_address_rejects_empty_and_unknown():
    with pytest.raises(DomainError, match="zero-level"):
        parse_address("")
    with pytest.raises(DomainError, match="'a'"):
        parse_address("lar")


@pytest.mark.parametrize("raw,canonical", [
    ("ul", "lu"),
    ("lll", "lll"),
    ("ull", "lul"),
    ("uul", "llu"),
    ("rl", "lr"),
    ("ru", "ru"),
    ("ulu", "luu"),
    ("rrl", "llr"),
    ("lru", "lru"),
])
def test_canonicalize_examples(raw, canonical):
    assert canonicalize(raw) == canonical


def test_canonicalize_idempotent_exhaustive():
    for n in range(1, 7):
        for w in raw_words(n):
            c = canonicalize(w)
            assert canonicalize(c) == c


@given(addresses)
def test_canonicalize_idempotent(word):
    c = canonicalize(word)
    assert canonicalize(c) == c
    assert is_canonical(c)


@given(addresses)
def test_partner_is_an_involution(word):
    p = partner(word)
    if p is None:
        assert word == word[0] * len(word)
    else:
        assert partner(p) == word
        assert canonicalize(p) == canonicalize(word)


def test_identification_classes_have_size_at_most_two():
    for n in range(1, 7):
        seen = {}
        for w in raw_words(n):
            seen.setdefault(canonicalize(w), set()).add(w)
        for rep, members in seen.items():
            assert members == set(identification_class(rep))
            assert 1 <= len(members) <= 2


def test_corner_address():
    assert corner_address("u", 3) == "uuu"
    assert corner_address("l", 1) == "l"
    assert corner_address("r", 4) == "rrrr"
    with pytest.raises(DomainError):
        corner_address("u", 0)
    with pytest.raises(DomainError):
        corner_address("x", 2)


def test_all_vertices_counts():
    for n in range(1, 8):
        vs = all_vertices(n)
        assert len(vs) == (3 ** n + 3) // 2
        assert vs == sorted(vs)
        assert all(is_canonical(v) for v in vs)


def test_wordspec_parse_and_str():
    w = WordSpec.parse("ul(ur)")
    assert (w.prefix, w.cycle) == ("ul", "ur")
    assert str(w) == "ul(ur)"
    assert str(WordSpec.parse("(l)")) == "(l)"
    for bad in ("", "l", "()", "x(l)", "(lr", "l)"):
        with pytest.raises(DomainError):
            WordSpec.parse(bad)


def test_same_word_normalization():
    assert same_word("l(l)", "(l)")
    assert same_word("(ll)", "(l)")
    assert same_word("lr(lr)", "(lr)")
    assert same_word("u(lu)", "(ul)")
    assert not same_word("(lr)", "(rl)")
    assert not same_word("(l)", "(ul)")


def test_letter_at():
    assert letter_at("ul(ur)", 1) == "u"
    assert letter_at("ul(ur)", 2) == "l"
    assert letter_at("ul(ur)", 3) == "u"
    assert letter_at("ul(ur)", 4) == "r"
    assert letter_at("ul(ur)", 5) == "u"
    assert letter_at("(l)", 10 ** 6) == "l"
    with pytest.raises(DomainError):
        letter_at("(l)", 0)


def test_pad():
    assert pad("rru", "(l)", 5) == "rrull"
    assert pad("rru", "(l)", 3) == "rru"
    assert pad("u", "(ul)", 3) == "luu"
    with pytest.raises(DomainError, match="truncate"):
        pad("rru", "(l)", 2)


def test_apply_permutation():
    swap_lr = Permutation(("r", "l", "u"))
    assert apply_permutation(swap_lr, "ul") == "ru"
    assert apply_permutation(IDENTITY, "rru") == "rru"
    swap_ul = Permutation(("u", "r", "l"))
    assert same_word(apply_permutation(swap_ul, WordSpec.parse("(l)")), "(u)")


def test_permutations_form_the_symmetric_group():
    assert len(set(PERMUTATIONS)) == 6
    for a in PERMUTATIONS:
        assert a.compose(a.inverse()) == IDENTITY
        for b in PERMUTATIONS:
            assert a.compose(b) in PERMUTATIONS
    assert sorted(str(p) for p in PERMUTATIONS) == [
        "(l r u)", "(l r)", "(l u r)", "(l u)", "(r u)", "id"]


def test_apply_permutation_respects_identification_classes():
    # exhaustive through level 8, per the class-compatibility invariant
    for n in range(1, 9):
        for w in raw_words(n):
            cw = canonicalize(w)
            for sigma in PERMUTATIONS:
                assert apply_permutation(sigma, w) == apply_permutation(sigma, cw)


def test_cofinal_witnesses():
    hits = cofinal_up_to_permutation("(l)", "(u)")
    assert Permutation(("u", "r", "l")) in hits  # the (l u) transposition
    assert all(s.apply("l") == "u" for s in hits)
    assert cofinal_up_to_permutation("(l)", "(ul)") == ()
    assert cofinal_up_to_permutation("(lr)", "(rl)") == (Permutation(("r", "l", "u")),)


@given(word_specs)
def test_cofinal_with_self_contains_identity(w):
    assert IDENTITY in cofinal_up_to_permutation(w, w)


def test_orbit_sizes():
    assert {str(w) for w in orbit("(l)")} == {"(l)", "(r)", "(u)"}
    assert len(orbit("(ul)")) == 6
    assert orbit("l(l)") == orbit("(l)")
    assert len(orbit("(lru)")) == 6


@given(word_specs)
def test_orbit_size_is_three_for_constant_words_else_six(w):
    constant = w.tail_letter() is not None and not w.normalized().prefix
    assert len(orbit(w)) == (3 if constant else 6)


def test_vertex_of():
    assert vertex_of("rru(l)", "(l)") == "rru"
    assert vertex_of("(l)", "(l)") == "l"
    assert vertex_of("(u)", "(l)") is None
    assert vertex_of("(lr)", "(rl)") is None


@given(addresses, st.integers(min_value=0, max_value=4))
def test_pad_vertex_of_roundtrip(x, extra):
    # a vertex padded into a larger level names the same vertex of the word
    spec = WordSpec(prefix=x, cycle="l")
    h = len(x)
    padded = pad(x, "(l)", h + extra)
    assert pad(vertex_of(spec, "(l)"), "(l)", h + extra) == padded


def test_minimal_form():
    assert minimal_form(pad("u", "(l)", 5)) == "u"
    assert minimal_form(pad("uu", "(l)", 6)) == "uu"
    assert minimal_form("lll") == "l"
    assert minimal_form("lr") == "r"
    assert minimal_form("lru") == "lru"
