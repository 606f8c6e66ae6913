import pytest

from wuni import oracle, sweeps
from wuni.abelian import FgZModule, abelian_groups_of_order


def test_pgroup_partitions_bound():
    parts = sweeps.pgroup_partitions(2, 16)
    assert len(parts) == 1 + 1 + 2 + 3 + 5
    assert all(2 ** sum(p) <= 16 for p in parts)


@pytest.mark.parametrize("n", [8, 16, 27, 36, 48, 64])
def test_shape_recovered_from_subgroups(n):
    for m in abelian_groups_of_order(n):
        g = oracle.ConcreteGroup.from_module(m)
        for h in oracle.enumerate_subgroups(g):
            rebuilt = oracle.ConcreteGroup.from_module(FgZModule(0, sweeps._shape_of(h)))
            assert oracle.iso_signature(rebuilt) == oracle.iso_signature(h)


def test_parallel_matches_serial():
    a = sweeps.sweep_pgroup_verdicts(pmax=3, omax=27)
    b = sweeps.sweep_pgroup_verdicts(pmax=3, omax=27, parallel=True)
    assert (a.checked, a.divergences) == (b.checked, b.divergences)


def test_result_serialisation():
    res = sweeps.sweep_type_fixtures()
    d = res.as_dict()
    assert d["passed"] and d["checked"] == res.checked
    assert res.summary().startswith("PASS")


def test_unknown_suite():
    with pytest.raises(KeyError):
        sweeps.run_suite("nope")


def test_random_height_sequences_reproducible():
    a = sweeps.random_height_sequences(50, seed=3)
    b = sweeps.random_height_sequences(50, seed=3)
    assert a == b
    assert all(len(s.exceptions) <= 5 for s in a)
