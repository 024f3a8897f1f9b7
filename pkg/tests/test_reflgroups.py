import warnings

import pytest

from beerkoszul.reflgroups import (
    Group,
    GroupSpec,
    Label,
    ReducibleGroupWarning,
    SignedPermutation,
    closure,
    conjugate,
    enumerate_reflections,
    group_elements,
    label_of,
    reflections_by_brute_force,
)


@pytest.mark.parametrize("spec,count", [("A:3", 3), ("A:4", 6), ("D:4", 12), ("B:4", 16), ("B:1", 1), ("D:3", 6)])
def test_reflection_counts(spec, count):
    assert len(enumerate_reflections(GroupSpec.parse(spec))) == count


@pytest.mark.parametrize("spec", ["A:3", "A:4", "D:3", "D:4", "B:2", "B:3"])
def test_reflections_agree_with_codimension_one_elements(spec):
    s = GroupSpec.parse(spec)
    assert {r.element for r in enumerate_reflections(s)} == set(reflections_by_brute_force(s))


@pytest.mark.parametrize("spec", ["A:3", "D:3", "D:4", "B:2", "B:3"])
def test_group_order_and_generation(spec):
    s = GroupSpec.parse(spec)
    elements = set(group_elements(s))
    assert len(elements) == s.order()
    assert closure([r.element for r in enumerate_reflections(s)]) == elements


def test_canonical_order():
    labels = [r.label for r in enumerate_reflections(GroupSpec.parse("B:2"))]
    assert [str(l) for l in labels] == ["u(1,2)", "uu(1,2)", "r(1)", "r(2)"]


@pytest.mark.parametrize("spec", ["D:3", "B:3"])
def test_reflection_geometry(spec):
    for r in enumerate_reflections(GroupSpec.parse(spec)):
        root = r.root
        assert sum(a * b for a, b in zip(r.coroot, root)) == 2
        assert r.reflect(root) == tuple(-x for x in root)
        assert r.element.apply(root) == tuple(-x for x in root)
        assert r.element * r.element == SignedPermutation.identity(r.element.n)


def test_d2_warns_reducible():
    with pytest.warns(ReducibleGroupWarning):
        enumerate_reflections(GroupSpec("D", 2))


def test_invalid_specs():
    with pytest.raises(ValueError):
        GroupSpec("E", 6)
    with pytest.raises(ValueError):
        GroupSpec("A", 0)
    with pytest.raises(ValueError):
        GroupSpec.parse("D4")


def test_labels_round_trip_and_validation():
    for text in ["u(1,2)", "uu(3,4)", "r(2)"]:
        assert str(Label.parse(text)) == text
    with pytest.raises(ValueError):
        Label.parse("u(2,1)")
    with pytest.raises(ValueError):
        Label.parse("v(1,2)")


def test_label_of_non_reflections():
    assert label_of(SignedPermutation.identity(3)) is None
    assert label_of(SignedPermutation.sign_flip(3, 1, 2)) is None
    assert label_of(SignedPermutation.sign_flip(3, 2)) == Label.r(2)


def test_conjugation_closes_on_reflections():
    g = Group(GroupSpec.parse("B:3"))
    labels = {r.label for r in g.reflections}
    for h in g.elements[::7]:
        for s in g.reflections:
            assert conjugate(h, s).label in labels


def test_inverse_and_matrix():
    g = SignedPermutation((1, 2, 0), (1, -1, 1))
    assert g * g.inverse() == SignedPermutation.identity(3)
    m = g.matrix()
    v = (1, 2, 3)
    assert g.apply(v) == tuple(sum(m[r][c] * v[c] for c in range(3)) for r in range(3))
