from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from groupca.errors import InvalidElementError, UnsupportedError
from groupca.group import GroupContext, parse_group

Z = GroupContext.integers(1)
Z2 = GroupContext.integers(2)
F2 = GroupContext.free(2)


def w(text):
    return F2.parse_element(text)


def test_op_examples():
    assert Z.op((2,), (3,)) == (5,)
    assert F2.op(w("ab"), w("B")) == w("a")
    assert GroupContext.cyclic(4).op(3, 2) == 1


def test_inv_examples():
    assert Z.inv((3,)) == (-3,)
    assert F2.format_element(F2.inv(w("ab"))) == "BA"
    for ctx in (Z, F2, GroupContext.cyclic(5)):
        assert ctx.inv(ctx.identity) == ctx.identity


@pytest.mark.parametrize("ctx,bad", [(GroupContext.cyclic(4), 4), (GroupContext.cyclic(4), -1), (Z, (1, 2))])
def test_invalid_elements_rejected(ctx, bad):
    with pytest.raises(InvalidElementError):
        ctx.op(bad, ctx.identity)


def test_free_words_must_be_reduced():
    with pytest.raises(InvalidElementError):
        F2.check((1, -1))
    assert w("aA") == ()


def test_ball_examples():
    assert Z.ball(1) == ((-1,), (0,), (1,))
    assert [F2.format_element(g) for g in F2.ball(1)] == ["", "a", "A", "b", "B"]
    assert len(F2.ball(2)) == 17


def _reduced_words_brute(r, max_len):
    letters = [1, -1, 2, -2]
    out = set()
    for n in range(max_len + 1):
        for word in product(letters, repeat=n):
            if all(a != -b for a, b in zip(word, word[1:])):
                out.add(word)
    return out


def test_free_ball_growth_against_word_enumeration():
    sizes = [len(F2.ball(r)) for r in range(4)]
    assert sizes == [1, 5, 17, 53]
    for r in range(4):
        assert set(F2.ball(r)) == _reduced_words_brute(2, r)
        assert set(F2.ball(r)) <= set(F2.ball(r + 1))


def test_integer_ball_is_l1_ball():
    for r in range(4):
        brute = {(a, b) for a in range(-r, r + 1) for b in range(-r, r + 1) if abs(a) + abs(b) <= r}
        assert set(Z2.ball(r)) == brute


def test_finite_ball_saturates():
    G = GroupContext.cyclic(5, generators=(1, 4))
    assert G.ball(0) == (0,)
    assert G.ball(1) == (0, 1, 4)
    assert G.ball(2) == G.ball(10) == (0, 1, 2, 3, 4)


def test_product_set_examples():
    assert Z.product_set([(0,), (1,)], [(0,), (1,)]) == ((0,), (1,), (2,))
    Z3 = GroupContext.cyclic(3)
    brute = sorted({(a + b) % 3 for a in (0, 1) for b in (0, 2)})
    assert Z3.product_set((0, 1), (0, 2)) == tuple(brute) == (0, 1, 2)
    S = F2.ball(1)
    assert F2.product_set(S, [F2.identity]) == S


def test_enumerate():
    assert GroupContext.cyclic(2).enumerate() == (0, 1)
    assert GroupContext.cyclic(3).enumerate() == (0, 1, 2)
    with pytest.raises(UnsupportedError):
        Z.enumerate()


def test_canonical_orders():
    assert Z2.subset([(1, 0), (0, 1), (0, -1), (0, 1)]) == ((0, -1), (0, 1), (1, 0))
    assert [F2.format_element(g) for g in F2.subset([w("ba"), w("b"), w("A"), w("aa")])] == ["A", "b", "aa", "ba"]


def _s3():
    # symmetric group on 3 points, elements are permutations in lexicographic order
    from itertools import permutations

    perms = list(permutations(range(3)))
    table = [[perms.index(tuple(p[q[i]] for i in range(3))) for q in perms] for p in perms]
    return GroupContext.finite(table, perms.index((0, 1, 2)))


def test_cayley_validation():
    with pytest.raises(ValueError):
        GroupContext.finite([[0, 1], [0, 1]])
    with pytest.raises(ValueError):
        GroupContext.finite([[1, 0], [0, 1]], identity=0)
    with pytest.raises(ValueError):
        GroupContext.cyclic(3, generators=(1,))


@pytest.mark.parametrize("ctx", [GroupContext.cyclic(n) for n in range(1, 9)] + [_s3()], ids=lambda c: c.describe())
def test_finite_group_laws_exhaustive(ctx):
    G = ctx.enumerate()
    e = ctx.identity
    for g, h, k in product(G, repeat=3):
        assert ctx.op(ctx.op(g, h), k) == ctx.op(g, ctx.op(h, k))
    for g in G:
        assert ctx.op(g, ctx.inv(g)) == e == ctx.op(ctx.inv(g), g)


def test_s3_is_nonabelian():
    ctx = _s3()
    assert any(ctx.op(g, h) != ctx.op(h, g) for g in ctx.enumerate() for h in ctx.enumerate())


free_words = st.lists(st.sampled_from([1, -1, 2, -2]), max_size=8).map(lambda ws: F2.op((), tuple(ws)))
int_elems = st.tuples(st.integers(-50, 50), st.integers(-50, 50))


@given(free_words, free_words, free_words)
def test_free_associativity(g, h, k):
    assert F2.op(F2.op(g, h), k) == F2.op(g, F2.op(h, k))
    assert F2.op(g, F2.inv(g)) == ()
    F2.check(F2.op(g, h))


@given(int_elems, int_elems, int_elems)
def test_integer_associativity(g, h, k):
    assert Z2.op(Z2.op(g, h), k) == Z2.op(g, Z2.op(h, k))
    assert Z2.op(g, Z2.inv(g)) == (0, 0)


@given(
    st.lists(free_words, min_size=1, max_size=3),
    st.lists(free_words, min_size=1, max_size=3),
    st.lists(free_words, min_size=1, max_size=3),
)
def test_product_set_associative(a, b, c):
    lhs = F2.product_set(F2.product_set(a, b), c)
    rhs = F2.product_set(a, F2.product_set(b, c))
    assert lhs == rhs


@given(free_words)
def test_free_text_roundtrip(g):
    assert F2.parse_element(F2.format_element(g)) == g


def test_element_text_encoding():
    assert Z.format_element((-1,)) == "[-1]"
    assert Z2.format_element((1, -2)) == "[1,-2]"
    assert Z.parse_element("[-1]") == (-1,)
    assert F2.format_element(w("aB")) == "aB"
    assert F2.format_element(()) == ""
    assert GroupContext.cyclic(4).parse_element("3") == 3


def test_parse_group():
    assert parse_group("Z") == Z
    assert parse_group("Z^2") == Z2
    assert parse_group("F2") == F2
    assert parse_group("Z/4") == GroupContext.cyclic(4)
    assert parse_group({"cayley": [[0, 1], [1, 0]]}) == GroupContext.cyclic(2)
    with pytest.raises(ValueError):
        parse_group("Q8")


def test_word_length():
    assert Z2.length((2, -3)) == 5
    assert F2.length(w("abA")) == 3
    assert GroupContext.cyclic(6, generators=(1, 5)).length(3) == 3
