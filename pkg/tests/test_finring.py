import itertools
import json

import pytest

from wuni import finring as fr
from wuni._modules import CapExceeded
from wuni.presets import KXY_X, KXY_Y, PRESET_NAMES, preset, zmod


def ideal(ring, elems):
    """Right ideal from a list of ring-element indices."""
    return fr._from_elements(ring, elems)


def principal(ring, a):
    return ideal(ring, {ring.mul[a][s] for s in range(ring.size)})


def test_presets_build_and_have_expected_orders():
    orders = {"z4": 4, "z6": 6, "z8": 8, "f2": 2, "f4": 4, "f5": 5, "m2f2": 16, "t2f2": 8,
              "struct3f2": 8, "kxyf2": 32}
    for name in PRESET_NAMES:
        assert preset(name).size == orders[name]
    assert preset("z12").size == 12
    with pytest.raises(KeyError):
        preset("f6")
    with pytest.raises(KeyError):
        preset("q8")


def test_ring_axioms_are_checked():
    r = zmod(4)
    bad = [list(row) for row in r.mul]
    bad[2][3] = 1  # breaks commutativity with distributivity
    with pytest.raises(fr.RingAxiomError) as info:
        fr.FiniteRing(r.add, bad)
    assert info.value.axiom
    with pytest.raises(fr.RingAxiomError, match="identity"):
        fr.FiniteRing([[0, 1], [1, 0]], [[0, 0], [0, 0]])
    with pytest.raises(fr.RingAxiomError):
        fr.FiniteRing([[0, 1], [1, 1]], [[0, 0], [0, 1]])


def test_json_roundtrip(tmp_path):
    r = preset("t2f2")
    path = tmp_path / "t2.json"
    path.write_text(json.dumps(r.to_json()))
    s = fr.FiniteRing.from_json(path)
    assert s.add == r.add and s.mul == r.mul and s.name == "t2f2"
    assert (s.zero, s.one) == (r.zero, r.one)
    with pytest.raises(fr.RingAxiomError):
        fr.FiniteRing.from_json({**r.to_json(), "size": 9})


@pytest.mark.parametrize("name, count", [("z6", 4), ("z8", 4), ("z4", 3), ("f4", 2), ("m2f2", 5),
                                          ("t2f2", 7), ("struct3f2", 6), ("kxyf2", 14)])
def test_right_ideal_counts(name, count):
    ideals = fr.enumerate_right_ideals(preset(name))
    assert len(ideals) == count


@pytest.mark.parametrize("name", PRESET_NAMES)
def test_enumerated_ideals_are_right_ideals(name):
    r = preset(name)
    mod = r.regular_module
    for i in fr.enumerate_right_ideals(r):
        elems = {mod.labels[x] for x in i.ids}
        elems_idx = set(i.ids)
        assert 0 in elems_idx
        for a, b in itertools.product(elems_idx, repeat=2):
            assert mod.add[a][b] in elems_idx
        for a in elems_idx:
            for s in range(r.size):
                assert mod.act(a, s) in elems_idx
        assert len(elems) == i.order


def test_left_ideals_of_upper_triangular():
    r = preset("t2f2")
    assert len(fr.enumerate_left_ideals(r)) == 7
    # right and left ideal lattices differ as sets of elements
    right = {i.elements for i in fr.enumerate_right_ideals(r)}
    left = {i.elements for i in fr.enumerate_left_ideals(r)}
    assert right != left


def test_z6_and_z8_ideals():
    z6 = preset("z6")
    assert sorted(i.elements for i in fr.enumerate_right_ideals(z6)) == [(0,), (0, 1, 2, 3, 4, 5), (0, 2, 4), (0, 3)]
    assert fr.is_right_uniserial(preset("z8"))
    assert not fr.is_right_uniserial(preset("t2f2"))


def test_monomorphisms_between_ideals():
    s3 = preset("struct3f2")
    ones = [i for i in fr.enumerate_right_ideals(s3) if i.order == 2]
    assert len(ones) == 3
    for a, b in itertools.product(ones, repeat=2):
        assert fr.exists_right_module_mono(a, b)
    zero = fr.enumerate_right_ideals(s3)[0]
    assert zero.order == 1
    assert all(fr.exists_right_module_mono(zero, i) for i in fr.enumerate_right_ideals(s3))

    t2 = preset("t2f2")
    v = fr.is_right_weakly_uniserial(t2)
    a, b = v.witness
    assert not fr.exists_right_module_mono(a, b) and not fr.exists_right_module_mono(b, a)
    ra, rb = fr.right_annihilator(a), fr.right_annihilator(b)
    assert not ra <= rb or not rb <= ra


@pytest.mark.parametrize("name, right, left", [
    ("z6", False, False), ("struct3f2", True, True), ("kxyf2", False, False), ("t2f2", False, False),
    ("z8", True, True), ("z4", True, True), ("m2f2", True, True), ("f4", True, True),
])
def test_weak_uniseriality(name, right, left):
    r = preset(name)
    assert fr.is_right_weakly_uniserial(r).value is right
    assert fr.is_left_weakly_uniserial(r).value is left


def test_kxy_witness_is_x_and_y():
    r = preset("kxyf2")
    v = fr.is_right_weakly_uniserial(r)
    a, b = v.witness
    assert {a, b} == {principal(r, KXY_X), principal(r, KXY_Y)}


def test_central_idempotents():
    assert set(fr.central_idempotents(preset("z6"))) == {0, 1, 3, 4}
    assert set(fr.central_idempotents(preset("z4"))) == {0, 1}
    m2 = preset("m2f2")
    assert set(fr.central_idempotents(m2)) == {m2.zero, m2.one}


def test_radical_socle_and_predicates():
    z4 = preset("z4")
    assert fr.jacobson_radical(z4).elements == (0, 2)
    assert fr.is_local(z4)
    z6 = preset("z6")
    assert not fr.is_prime(z6) and fr.is_semiprime(z6)
    assert fr.is_prime(preset("f5")) and fr.is_prime(preset("m2f2"))
    s3 = preset("struct3f2")
    assert fr.jacobson_radical(s3) == fr.socle_right(s3)
    assert not fr.is_semiprime(s3)
    assert fr.is_kasch_right(z6)
    assert len(fr.maximal_right_ideals(z6)) == 2
    assert len(fr.minimal_right_ideals(preset("m2f2"))) == 3


def test_simple_module_classes():
    assert len(fr.simple_module_classes(preset("z6"))) == 2
    assert len(fr.simple_module_classes(preset("t2f2"))) == 2
    assert len(fr.simple_module_classes(preset("m2f2"))) == 1


@pytest.mark.parametrize("name, expected", [
    ("m2f2", True), ("z4", False), ("f5", True), ("f4", True), ("z6", False), ("t2f2", False),
])
def test_every_module_weakly_uniserial(name, expected):
    assert fr.every_module_weakly_uniserial(preset(name)) is expected


def test_2generated_counterexample_z4():
    r = preset("z4")
    n, k = fr.check_2generated_counterexample(r)
    assert set(k.elements) == {(a, b) for a in (0, 2) for b in (0, 2)}
    assert n.order == 4 and fr._is_cyclic(n)
    assert not fr.exists_right_module_mono(n, k) and not fr.exists_right_module_mono(k, n)
    # the textbook generator (1,1) spans a submodule of the same shape
    subs = fr.enumerate_double_submodules(r)
    diag = next(s for s in subs if set(s.elements) == {(a, a) for a in range(4)})
    assert not fr.exists_right_module_mono(diag, k) and not fr.exists_right_module_mono(k, diag)
    assert fr.exists_right_module_mono(diag, n) and fr.exists_right_module_mono(n, diag)


def test_2generated_counterexample_none():
    assert fr.check_2generated_counterexample(preset("m2f2")) is None
    assert fr.check_2generated_counterexample(preset("f2")) is None


def test_caps(monkeypatch):
    with pytest.raises(CapExceeded):
        fr.check_2generated_counterexample(preset("kxyf2"))
    monkeypatch.setenv("WU_CAP", "16")
    with pytest.raises(CapExceeded):
        fr.enumerate_right_ideals(zmod(20))


@pytest.mark.parametrize("name", PRESET_NAMES)
def test_opposite_of_opposite(name):
    r = preset(name)
    assert r.opposite.opposite.mul == r.mul
    assert r.is_commutative == (r.opposite.mul == r.mul)
