import pytest

from beerkoszul.morphcheck import (
    GeneratorMap,
    build_map,
    coaction_compatible,
    equivariant,
    parse_kind,
    perfect_subquotient_degree2,
    relations_preserved,
)
from beerkoszul.reflgroups import GroupSpec, Label, SignedPermutation

KINDS = ["AtoD:2", "AtoD:3", "AtoD:4", "AtoB:2", "AtoB:3", "AtoB:4",
         "step:A:2", "step:A:3", "step:D:2", "step:D:3", "step:B:2", "step:B:3", "identity:D:3"]  # fmt: skip


@pytest.mark.parametrize("kind", KINDS)
def test_maps_pass_every_check(kind):
    m = build_map(kind)
    assert coaction_compatible(m) == []
    assert equivariant(m) == []
    for which in ("lambda", "quad"):
        ok, failing = relations_preserved(m, which)
        assert ok and failing == []
        assert perfect_subquotient_degree2(m, which)


def test_parse_kind():
    assert parse_kind("AtoB:3") == ("AtoB", GroupSpec("A", 3), GroupSpec("B", 3))
    assert parse_kind("step:d:3") == ("step", GroupSpec("D", 3), GroupSpec("D", 4))
    for bad in ("AtoC:3", "step:D", "AtoD:x", "identity:Q:2"):
        with pytest.raises(ValueError):
            parse_kind(bad)


def test_embedding_pads_fixed_coordinates():
    m = build_map("step:B:2")
    g = SignedPermutation((1, 0), (1, -1))
    assert m.embed(g) == SignedPermutation((1, 0, 2), (1, -1, 1))


def test_swapped_generators_are_caught():
    s = GroupSpec("D", 3)
    images = []
    for lab in build_map("identity:D:3").table:
        img = {Label.u(1, 2): Label.uu(1, 2), Label.uu(1, 2): Label.u(1, 2)}.get(lab, lab)
        images.append((lab, 1, img))
    m = GeneratorMap("identity", s, s, tuple(images))
    assert set(coaction_compatible(m)) == {Label.u(1, 2), Label.uu(1, 2)}


def test_sign_flip_breaks_relations():
    s = GroupSpec("D", 3)
    images = tuple((lab, -1 if lab == Label.u(1, 2) else 1, lab) for lab in build_map("identity:D:3").table)
    m = GeneratorMap("identity", s, s, images)
    assert equivariant(m)
    ok, failing = relations_preserved(m, "quad")
    assert not ok and failing
