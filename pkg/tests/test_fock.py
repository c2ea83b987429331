
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbert_hecke import fock
from hilbert_hecke.fock import (
    VACUUM,
    Color,
    ColorSpec,
    CommutatorConstants,
    FockState,
    FockVector,
    annihilate,
    basis_states,
    check_relations,
    create,
    graded_character,
    super_commutator_check,
)
from hilbert_hecke.goettsche import SurfaceTopology, goettsche_series
from oracles import colored_partition_counts

MIXED = ColorSpec.from_topology(SurfaceTopology((1, 2, 1, 2, 1)))


def _squares(i):
    return i * i


def _negated(i):
    return -i


@st.composite
def states(draw, spec=MIXED, max_weight=4):
    w = draw(st.integers(0, max_weight))
    return draw(st.sampled_from(list(basis_states(spec, w))))


generators = st.tuples(st.integers(0, len(MIXED) - 1), st.integers(1, 3))


@settings(max_examples=60, deadline=None)
@given(generators, generators, states())
def test_relations_on_random_state(x, y, s):
    (a, i), (b, j) = x, y
    ca, cb = MIXED[a], MIXED[b]
    sign = (-1) ** (ca.parity * cb.parity)
    E = lambda col, k: (lambda v: annihilate(col, k, v))
    F = lambda col, k: (lambda v: create(col, k, v))
    scalar = i if (a, i) == (b, j) else 0
    assert super_commutator_check(E(ca, i), E(cb, j), 0, sign, [s]).ok
    assert super_commutator_check(F(ca, i), F(cb, j), 0, sign, [s]).ok
    assert super_commutator_check(E(ca, i), F(cb, j), scalar, sign, [s]).ok


@settings(max_examples=30, deadline=None)
@given(states())
def test_fermionic_creators_square_to_zero(s):
    for c in MIXED:
        if c.parity:
            v = FockVector.basis(s)
            assert create(c, 2, create(c, 2, v)).is_zero()


@settings(max_examples=30, deadline=None)
@given(states(), st.integers(0, len(MIXED) - 1), st.integers(1, 3))
def test_creation_raises_weight_and_degree(s, a, i):
    c = MIXED[a]
    for t in create(c, i, FockVector.basis(s)).terms:
        assert t.weight() == s.weight() + i
        assert t.cohomological_degree(MIXED) == s.cohomological_degree(MIXED) + 2 * i - 2 + c.degree


@settings(max_examples=10, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=5, max_size=5))
def test_character_equals_product_formula(betti):
    topo = SurfaceTopology(betti)
    assert graded_character(ColorSpec.from_topology(topo), 5) == goettsche_series(topo, 5)


def test_bosonic_state_counts_are_partitions():
    spec = ColorSpec.from_topology(SurfaceTopology((1, 0, 2, 0, 0)))
    counts = [sum(1 for _ in basis_states(spec, n)) for n in range(8)]
    assert counts == colored_partition_counts(3, 7)


def test_vacuum_and_annihilation():
    c0 = MIXED[0]
    assert annihilate(c0, 1, FockVector.basis(VACUUM)).is_zero()
    v = create(c0, 2, create(c0, 2, FockVector.basis(VACUUM)))
    # E_2 F_2 F_2 |0> = 2 c_2 F_2 |0>
    assert annihilate(c0, 2, v) == create(c0, 2, FockVector.basis(VACUUM)) * 4


def test_fermionic_sign():
    odd = [c for c in MIXED if c.parity]
    x, y = odd[0], odd[1]
    v = FockVector.basis(VACUUM)
    assert create(x, 1, create(y, 1, v)) == create(y, 1, create(x, 1, v)) * -1


def test_exhaustive_small_weight():
    report = check_relations(MIXED, 3, 3)
    assert report.ok and report.checked > 0


@pytest.mark.parametrize("c", [_squares, _negated])
def test_other_constants(c):
    assert check_relations(MIXED, 2, 3, CommutatorConstants(c)).ok


def test_workers_give_same_count():
    one = check_relations(MIXED, 2, 2)
    two = check_relations(MIXED, 2, 2, workers=2)
    assert two.ok and two.checked == one.checked


def test_zero_constant_rejected():
    with pytest.raises(ValueError):
        CommutatorConstants(lambda i: 0)(1)


def test_detects_broken_sign(monkeypatch):
    orig = fock._create_state

    def bad(color, i, s):
        r = orig(color, i, s)
        return None if r is None else (abs(r[0]), r[1])

    monkeypatch.setattr(fock, "_create_state", bad)
    assert not check_relations(MIXED, 2, 2).ok


def test_state_validation():
    with pytest.raises(ValueError):
        FockState(((2, 0), (1, 0)))
    with pytest.raises(ValueError):
        FockState((), ((1, 1), (1, 1)))
    with pytest.raises(ValueError):
        Color(0, 5)
    s = FockState(((1, 0), (1, 0)), ((2, 1),))
    assert s.weight() == 4 and str(s) == "|1_0 1_0; 2_1>"
