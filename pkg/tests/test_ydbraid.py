import pytest

from beerkoszul.reflgroups import Group, GroupSpec, Label
from beerkoszul.ydbraid import (
    braiding,
    build_yd,
    check_braid_relation,
    check_display_consistency,
    check_yd_condition,
    factorize,
    generator_action,
)
from beerkoszul.reflgroups import reflection_element

SPECS = ["A:3", "A:4", "D:3", "D:4", "B:2", "B:3"]


def closed_form_action(g, v):
    """g acts on labels by moving indices; reversing their order costs a sign,
    and a sign change on exactly one index swaps u and uu."""
    if v.kind == "r":
        return 1, Label.r(g.perm[v.idx[0] - 1] + 1)
    i, j = v.idx[0] - 1, v.idx[1] - 1
    a, b = g.perm[i], g.perm[j]
    kind = v.kind if g.signs[i] == g.signs[j] else ("uu" if v.kind == "u" else "u")
    return (1 if a < b else -1), Label(kind, (min(a, b) + 1, max(a, b) + 1))


@pytest.mark.parametrize("spec", SPECS + ["B:1", "D:2"])
def test_factorization_reproduces_every_element(spec):
    s = GroupSpec.parse(spec)
    for g in Group(s).elements:
        prod = None
        for lab in factorize(g, s.series):
            h = reflection_element(s.rank, lab)
            prod = h if prod is None else prod * h
        if prod is None:
            assert g.is_identity()
        else:
            assert prod == g


@pytest.mark.parametrize("spec", ["A:4", "D:3", "D:4", "B:2", "B:3"])
def test_action_matches_closed_form(spec):
    s = GroupSpec.parse(spec)
    y = build_yd(s)
    for g in Group(s).elements:
        for v in y.labels:
            assert y.act(g, v) == closed_form_action(g, v)


@pytest.mark.parametrize("spec", ["D:3", "B:3"])
def test_action_is_a_group_action(spec):
    s = GroupSpec.parse(spec)
    y = build_yd(s)
    els = Group(s).elements
    for g in els[::5]:
        for h in els[::7]:
            for v in y.labels:
                s1, w1 = y.act(h, v)
                s2, w2 = y.act(g, w1)
                assert y.act(g * h, v) == (s1 * s2, w2)


@pytest.mark.parametrize("spec", SPECS)
def test_braid_equation(spec):
    assert check_braid_relation(build_yd(GroupSpec.parse(spec)))


@pytest.mark.parametrize("spec", SPECS)
def test_yd_condition_on_all_elements(spec):
    s = GroupSpec.parse(spec)
    assert check_yd_condition(build_yd(s), Group(s).elements)


@pytest.mark.parametrize("spec", SPECS)
def test_display_consistency(spec):
    assert check_display_consistency(build_yd(GroupSpec.parse(spec)))


def test_displayed_cases():
    u, uu, r = Label.u, Label.uu, Label.r
    assert generator_action(u(1, 2), u(1, 3)) == (1, u(2, 3))
    assert generator_action(u(1, 2), u(1, 2)) == (-1, u(1, 2))
    assert generator_action(uu(1, 2), uu(1, 2)) == (-1, uu(1, 2))
    assert generator_action(uu(1, 2), u(3, 4)) == (1, u(3, 4))
    assert generator_action(uu(1, 2), u(2, 3)) == (1, uu(1, 3))
    assert generator_action(r(1), u(1, 2)) == (1, uu(1, 2))
    assert generator_action(r(3), r(1)) == (1, r(1))
    assert generator_action(r(1), r(1)) == (1, r(1))
    assert generator_action(u(1, 2), r(1)) == (1, r(2))


def test_braiding_convention():
    y = build_yd(GroupSpec.parse("D:3"))
    a, b = Label.u(1, 2), Label.u(2, 3)
    assert braiding(y, a, b) == (1, Label.u(1, 3), a)


def test_coaction_is_the_reflection():
    s = GroupSpec.parse("B:2")
    y = build_yd(s)
    for lab in y.labels:
        assert y.coaction(lab) == reflection_element(2, lab)
    with pytest.raises(KeyError):
        y.coaction(Label.u(1, 3))
