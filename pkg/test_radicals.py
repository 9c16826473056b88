import pytest

from algebra.errors import CapExceeded, SizeCap
from algebra.radicals import (
    Module,
    QuotientRingStatus,
    is_nilpotent_element,
    jacobson_radical,
    left_annihilator,
    module_length,
    nilpotency_index,
    prime_radical,
    radical_profile,
    regular_elements_quotient,
    uniform_dimension,
)
from algebra.ring_core import Side


def test_radicals_of_z12(named):
    ring = named["Z12/trivial"].ring
    profile = radical_profile(ring)
    assert profile.prime_radical.elements() == [(0,), (6,)]
    assert profile.jacobson_radical.elements() == [(0,), (6,)]
    assert profile.nilpotency_index_of_rad == 2
    assert not profile.semiprime


def test_radicals_agree_on_named_catalog(named):
    for instance in named.values():
        assert prime_radical(instance.ring).subgroup == jacobson_radical(instance.ring).subgroup


def test_group_algebra_in_characteristic_two(named):
    ring = named["F2[C2]/trivial"].ring
    assert prime_radical(ring).elements() == [(0, 0), (1, 1)]
    assert not radical_profile(ring).semisimple_artinian


def test_matrix_rings_are_semisimple(named):
    for name in ("M2(F2)/inner", "M2(F3)/diag", "F3xF3/swap", "F4/frob"):
        profile = radical_profile(named[name].ring)
        assert profile.semiprime and profile.semisimple_artinian


def test_nilpotent_ring_without_identity(named):
    ring = named["2Z8/neg"].ring
    assert nilpotency_index(ring) == 3
    assert prime_radical(ring).subgroup == ring.carrier
    assert is_nilpotent_element(ring, (1,))


def test_nilpotency_index_stabilises_on_unital_rings(named):
    assert nilpotency_index(named["Z12/trivial"].ring) is None


def test_nilpotency_cap(named):
    with pytest.raises(CapExceeded):
        nilpotency_index(named["2Z8/neg"].ring, cap=1)


def test_uniform_dimension_values(named):
    assert uniform_dimension(named["F3xF3/swap"].ring, Side.LEFT).value == 2
    certificate = uniform_dimension(named["M2(F2)/inner"].ring, Side.LEFT)
    assert certificate.value == 2
    assert not certificate.capped
    assert uniform_dimension(named["Z12/trivial"].ring, Side.LEFT).value == 2
    assert uniform_dimension(named["F4/frob"].ring, Side.RIGHT).value == 1


def test_uniform_dimension_sampled_above_cap(named):
    certificate = uniform_dimension(named["M2(F3)/diag"].ring, Side.LEFT, cap=16, samples=8, seed=3)
    assert certificate.capped
    assert 1 <= certificate.value <= 2


def test_regular_elements_are_units(named):
    status = regular_elements_quotient(named["Z12/trivial"].ring)
    assert status.units == [(1,), (5,), (7,), (11,)]
    assert status.regular_are_units
    assert status.classical_quotient == "Q = R"
    assert status.regular_non_units == []


def test_regular_non_units_are_listed():
    status = QuotientRingStatus(regular=[(1,), (2,)], units=[(1,)], unital=True,
                                classical_quotient="regular-not-units")
    assert not status.regular_are_units
    assert status.regular_non_units == [(2,)]


def test_quotient_ring_degenerate_without_identity(named):
    status = regular_elements_quotient(named["2Z8/neg"].ring)
    assert not status.unital
    assert status.classical_quotient == "degenerate-undefined"


def test_left_annihilator(named):
    ring = named["F3xF3/swap"].ring
    assert left_annihilator(ring, [(1, 0)]).elements() == [(0, 0), (0, 1), (0, 2)]


def test_module_lengths(named):
    f3f3 = named["F3xF3/swap"].ring
    assert module_length(Module(f3f3, Side.LEFT, f3f3.carrier, f3f3.span([]))) == 2
    m2 = named["M2(F2)/inner"].ring
    assert module_length(Module(m2, Side.LEFT, m2.carrier, m2.span([]))) == 2
    assert module_length(Module(m2, Side.TWOSIDED, m2.carrier, m2.span([]))) == 1
    z12 = named["Z12/trivial"].ring
    assert module_length(Module(z12, Side.LEFT, z12.carrier, z12.span([]))) == 3


def test_module_length_cap(named):
    m2 = named["M2(F3)/diag"].ring
    with pytest.raises(SizeCap):
        module_length(Module(m2, Side.LEFT, m2.carrier, m2.span([])), cap=16)
