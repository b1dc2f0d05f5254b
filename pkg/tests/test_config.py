from itertools import permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from groupca.config import (
    Alphabet,
    FiniteSupport,
    FullTable,
    Pattern,
    Periodic,
    all_configurations,
    config_from_json,
    config_index,
    pattern_from_json,
    pattern_to_json,
)
from groupca.errors import CapExceededError, InvalidElementError
from groupca.group import GroupContext

Z = GroupContext.integers(1)
Z2 = GroupContext.integers(2)
F2 = GroupContext.free(2)


def s3():
    perms = list(permutations(range(3)))
    table = [[perms.index(tuple(p[q[i]] for i in range(3))) for q in perms] for p in perms]
    return GroupContext.finite(table, perms.index((0, 1, 2)))


def test_eval_examples():
    assert FiniteSupport.delta(Z).at((5,)) == 0
    assert Periodic(Z, (2,), (0, 1)).at((7,)) == 1
    assert FullTable(GroupContext.cyclic(2), (1, 0)).at(1) == 0


def test_eval_rejects_foreign_elements():
    with pytest.raises(InvalidElementError):
        FiniteSupport.delta(Z).at((1, 2))
    with pytest.raises(InvalidElementError):
        Periodic(Z, (2,), (0, 1)).at(3)


def test_shift_examples():
    d0 = FiniteSupport.delta(Z)
    assert d0.shift((1,)) == FiniteSupport.delta(Z, (1,))
    assert d0.shift((0,)) == d0
    assert FullTable(GroupContext.cyclic(2), (1, 0)).shift(1) == FullTable(GroupContext.cyclic(2), (0, 1))


def test_shift_periodic_by_wrong_family():
    with pytest.raises(InvalidElementError):
        Periodic(Z, (2,), (0, 1)).shift(1)


def test_restrict_examples():
    d0 = FiniteSupport.delta(Z)
    assert d0.restrict(Z.ball(1)).values == (0, 1, 0)
    assert d0.restrict(()).values == ()
    assert Periodic(Z, (2,), (0, 1)).restrict([(0,), (1,), (2,)]).values == (0, 1, 0)


def test_all_configurations():
    Z2g = GroupContext.cyclic(2)
    assert [c.cells for c in all_configurations(Z2g, Alphabet(2))] == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert len(all_configurations(GroupContext.cyclic(1), Alphabet(3))) == 3
    assert len(all_configurations(GroupContext.cyclic(3), Alphabet(2))) == 8
    configs = all_configurations(GroupContext.cyclic(3), Alphabet(3))
    assert [config_index(c, 3) for c in configs] == list(range(27))


def test_all_configurations_cap():
    with pytest.raises(CapExceededError) as info:
        all_configurations(GroupContext.cyclic(13), Alphabet(2))
    assert info.value.required == 2**13
    assert info.value.allowed == 4096


def test_finite_support_canonical():
    x = FiniteSupport(Z, 0, {(0,): 1, (3,): 0})
    assert x.support == (((0,), 1),)
    assert x == FiniteSupport.delta(Z)


@pytest.mark.parametrize("ctx", [GroupContext.cyclic(4), s3()], ids=["Z/4", "S3"])
def test_action_law_exhaustive_finite(ctx):
    G = ctx.enumerate()
    for x in all_configurations(ctx, Alphabet(2)):
        assert x.shift(ctx.identity) == x
        for g, h in product(G, repeat=2):
            assert x.shift(h).shift(g) == x.shift(ctx.op(g, h))
        for g in G:
            y = x.shift(g)
            for s in G:
                assert y.at(s) == x.at(ctx.op(ctx.inv(g), s))


def _free_word(letters):
    return F2.op((), tuple(letters))


free_elems = st.lists(st.sampled_from([1, -1, 2, -2]), max_size=4).map(_free_word)


@st.composite
def free_configs(draw):
    region = F2.ball(3)
    keys = draw(st.lists(st.sampled_from(region), max_size=10, unique=True))
    values = draw(st.lists(st.integers(0, 2), min_size=len(keys), max_size=len(keys)))
    return FiniteSupport(F2, draw(st.integers(0, 2)), dict(zip(keys, values)))


@settings(max_examples=60)
@given(free_configs(), free_elems, free_elems)
def test_action_law_free_group(x, g, h):
    probe = F2.ball(2)
    lhs = x.shift(h).shift(g)
    rhs = x.shift(F2.op(g, h))
    assert lhs == rhs
    for s in probe:
        assert x.shift(g).at(s) == x.at(F2.op(F2.inv(g), s))
    # canonical form survives shifting
    assert all(a != x.background for _, a in x.shift(g).support)


@given(
    st.lists(st.integers(0, 2), min_size=6, max_size=6),
    st.tuples(st.integers(-5, 5), st.integers(-5, 5)),
    st.tuples(st.integers(-5, 5), st.integers(-5, 5)),
)
def test_action_law_periodic_z2(cells, g, h):
    x = Periodic(Z2, (2, 3), cells)
    assert x.shift(h).shift(g) == x.shift(Z2.op(g, h))
    for s in Z2.ball(3):
        assert x.shift(g).at(s) == x.at(Z2.op(Z2.inv(g), s))
    assert x.shift((2, 3)) == x


def test_restrict_of_shift_is_defining_formula():
    x = FiniteSupport(F2, 0, {F2.parse_element("ab"): 1, F2.parse_element("B"): 2})
    S = F2.ball(2)
    for g in F2.ball(2):
        vals = x.shift(g).restrict(S).values
        assert vals == tuple(x.at(F2.op(F2.inv(g), s)) for s in S)


def test_json_roundtrip():
    cases = [
        (Z, FiniteSupport(Z, 0, {(0,): 1})),
        (Z, Periodic(Z, (2,), (0, 1))),
        (GroupContext.cyclic(2), FullTable(GroupContext.cyclic(2), (1, 0))),
        (F2, FiniteSupport(F2, 1, {F2.parse_element("aB"): 0})),
    ]
    for ctx, x in cases:
        assert config_from_json(ctx, x.to_json()) == x
    assert FiniteSupport(Z, 0, {(0,): 1}).to_json() == {"kind": "finite_support", "background": 0, "support": {"[0]": 1}}


def test_pattern_json():
    p = Pattern(((0,), (1,)), (1, 1))
    data = pattern_to_json(Z, p)
    assert data == {"domain": ["[0]", "[1]"], "values": [1, 1]}
    assert pattern_from_json(Z, data) == p
    # domain listed out of order is re-sorted with its values
    assert pattern_from_json(Z, {"domain": ["[1]", "[0]"], "values": [0, 1]}) == Pattern(((0,), (1,)), (1, 0))


def test_alphabet_validation():
    with pytest.raises(ValueError):
        Alphabet(0)
    with pytest.raises(ValueError):
        Alphabet(2, ("a", "a"))
    assert Alphabet(2, ("dead", "alive")).names == ("dead", "alive")
