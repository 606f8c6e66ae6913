import pytest
from hypothesis import given, strategies as st

from wuni.abelian import ElementaryPower, FgZModule, Partition, Prufer, parse_module
from wuni.classifier import (
    CLAUSES,
    DomainError,
    classify,
    classify_socle_nonzero,
    fg_embeds,
    is_homogeneous_semisimple,
    is_weakly_uniserial_fg,
    pgroup_embeds,
)
from wuni.oracle import ConcreteGroup, exists_monomorphism


@pytest.mark.parametrize("lam, mu, expected", [
    ((2,), (1, 1), False),
    ((1, 1), (2,), False),
    ((1,), (3,), True),
    ((2, 1), (2, 2), True),
    ((), (), True),
    ((), (1,), True),
    ((1,), (), False),
    ((3, 1), (2, 2), False),
    ((1, 1, 1), (3, 3), False),
])
def test_pgroup_embeds(lam, mu, expected):
    assert pgroup_embeds(lam, mu) is expected


def test_pgroup_embeds_derived_example_matches_oracle():
    assert exists_monomorphism(ConcreteGroup((4, 2)), ConcreteGroup((4, 4)))


@pytest.mark.parametrize("src, dst, expected", [
    ("Z^2", "Z", False),
    ("Z", "Z^2", True),
    ("Z/2 + Z/2", "Z/4 + Z/2", True),
    ("Z/3", "Z + Z/9", True),
    ("Z/3", "Z^5", False),
    ("Z/6", "Z/2 + Z/9", True),
    ("0", "0", True),
])
def test_fg_embeds(src, dst, expected):
    assert fg_embeds(parse_module(src), parse_module(dst)) is expected


@pytest.mark.parametrize("text, value, reason", [
    ("Z^3", True, "free"),
    ("Z/6", False, "mixed-primes"),
    ("Z + Z/2", False, "torsion-and-free"),
    ("Z/2 + Z/4", False, "bad-p-shape"),
    ("(Z/3)^4", True, "elementary"),
    ("Z/27", True, "cyclic"),
    ("0", True, "free"),
    ("Z/4 + Z/4", False, "bad-p-shape"),
])
def test_is_weakly_uniserial_fg(text, value, reason):
    v = is_weakly_uniserial_fg(parse_module(text))
    assert (v.value, v.reason) == (value, reason)
    assert v.clause == CLAUSES[reason]


def test_clauses_quote_the_formulas():
    assert CLAUSES["free"] == "M ≅ R^n"
    assert CLAUSES["prufer"] == "M ≅ Z_{p^∞}"
    assert CLAUSES["elementary-infinite"] == "M ≅ ⊕_I Z_p"


@pytest.mark.parametrize("text, expected", [
    ("(Z/3)^5", True), ("Z/2 + Z/3", False), ("Z/4", False), ("0", True), ("Z", False),
])
def test_homogeneous_semisimple(text, expected):
    assert is_homogeneous_semisimple(parse_module(text)) is expected


def test_socle_nonzero_classification():
    assert classify_socle_nonzero(Prufer(2)).reason == "prufer"
    assert classify_socle_nonzero(ElementaryPower(3)).value
    assert not classify_socle_nonzero(FgZModule(0, {2: (2, 1)}))
    assert classify_socle_nonzero(FgZModule(0, {5: (3,)})).value
    assert classify_socle_nonzero(ElementaryPower(3, 4)).value
    with pytest.raises(DomainError):
        classify_socle_nonzero(FgZModule(2))
    with pytest.raises(DomainError):
        classify_socle_nonzero(FgZModule())


def test_classify_dispatch():
    assert classify(parse_module("Z/2^inf")).clause == "M ≅ Z_{p^∞}"
    assert classify(parse_module("(Z/5)^inf")).value
    assert classify(ElementaryPower(2, 3)).reason == "elementary"
    assert classify(parse_module("Z^2")).value


# -- properties ------------------------------------------------------------

partitions = st.lists(st.integers(1, 4), max_size=4).map(Partition)
fg_modules = st.builds(
    FgZModule,
    st.integers(0, 2),
    st.dictionaries(st.sampled_from([2, 3, 5]), partitions, max_size=2),
)


@given(fg_modules, fg_modules)
def test_mutual_embedding_means_equal(m, n):
    if fg_embeds(m, n) and fg_embeds(n, m):
        assert m == n


@given(fg_modules, fg_modules)
def test_submodule_shapes_of_weakly_uniserial_modules(m, n):
    if is_weakly_uniserial_fg(m) and fg_embeds(n, m):
        assert is_weakly_uniserial_fg(n)


@given(fg_modules, fg_modules, fg_modules)
def test_fg_embeds_transitive(a, b, c):
    if fg_embeds(a, b) and fg_embeds(b, c):
        assert fg_embeds(a, c)


@given(fg_modules)
def test_verdict_true_only_for_three_shapes(m):
    v = is_weakly_uniserial_fg(m)
    shapes = (
        not m.torsion,
        m.free_rank == 0 and len(m.torsion) == 1 and len(m.torsion[0][1]) == 1,
        m.free_rank == 0 and len(m.torsion) == 1 and m.torsion[0][1][0] == 1,
    )
    assert v.value == any(shapes)
