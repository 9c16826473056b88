import pytest

from algebra.errors import GroupTooLarge, InvalidAutomorphism, NotDividing, NotNormal, NotPGroup, NotPModule
from algebra.groups import (
    RingAutomorphism,
    close_group,
    fixed_subgroup,
    h_constant,
    induced_group,
    p_group_fixed_point,
    p_normal_complement,
    p_part,
    quotient_action,
    validate_automorphism,
)
from algebra.invariants import fixed_ring
from algebra.radicals import prime_radical
from algebra.ring_core import quotient_by_ideal, validate_ring


def test_h_constant_table():
    assert [h_constant(n) for n in range(1, 5)] == [2, 6, 32, 350]


def test_p_part():
    assert p_part(12, 2) == (2, 3)
    assert p_part(6, 3) == (1, 2)


def test_validate_automorphism_rejects_non_multiplicative_map():
    z12 = validate_ring("Z12", (12,), [[(1,)]])
    with pytest.raises(InvalidAutomorphism):
        validate_automorphism(z12, [(5,)], name="times5")


def test_validate_automorphism_rejects_non_bijective_map(named):
    ring = named["F3xF3/swap"].ring
    with pytest.raises(InvalidAutomorphism):
        validate_automorphism(ring, [(1, 0), (1, 0)], name="collapse")


def test_symmetric_group_on_f4_zero(named):
    group = named["F4_0/sym3"].group
    assert group.order == 6
    orders = sorted(group.element_order(g) for g in group.elements)
    assert orders == [1, 2, 2, 2, 3, 3]
    assert fixed_subgroup(group).is_zero


def test_group_closure_cap(named):
    instance = named["F4_0/sym3"]
    with pytest.raises(GroupTooLarge):
        close_group(instance.ring, instance.generators, cap=3)


def test_inverse_and_composition(named):
    group = named["F2^3/sym3"].group
    for g in group.elements:
        assert group.is_identity(g.compose(group.inverse(g)))


def test_normal_complements(named):
    group = named["F4_0/sym3"].group
    complement = p_normal_complement(group, 2)
    assert complement is not None
    assert complement.order == 3
    assert complement.is_normal_in(group)
    assert p_normal_complement(group, 3) is None
    with pytest.raises(NotDividing):
        p_normal_complement(group, 5)


def test_quotient_action_on_fixed_ring(named):
    instance = named["F4_0/sym3"]
    complement = p_normal_complement(instance.group, 2)
    action = quotient_action(instance.group, complement, fixed_ring(instance.ring, complement))
    assert action.quotient_order == 2
    assert len(action.representatives) == 2


def test_quotient_action_needs_normal_subgroup(named):
    instance = named["F2^3/sym3"]
    transposition = [g for g in instance.generators if g.name == "transp"][0]
    subgroup = close_group(instance.ring, [transposition], name="C2")
    with pytest.raises(NotNormal):
        quotient_action(instance.group, subgroup, fixed_ring(instance.ring, subgroup))


def test_p_group_fixed_point(named):
    instance = named["F2xF2/swap"]
    assert p_group_fixed_point(instance.group, instance.ring.carrier) == (1, 1)
    assert p_group_fixed_point(instance.group, instance.ring.span([])) is None


def test_p_group_fixed_point_rejects_bad_inputs(named):
    with pytest.raises(NotPGroup):
        p_group_fixed_point(named["F4_0/sym3"].group, named["F4_0/sym3"].ring.carrier)
    swap = named["F3xF3/swap"]
    with pytest.raises(NotPModule):
        p_group_fixed_point(swap.group, swap.ring.carrier, 2)


def test_induced_group_on_quotient(named):
    instance = named["Z12/trivial"]
    quotient = quotient_by_ideal(instance.ring, prime_radical(instance.ring))
    induced = induced_group(instance.group, quotient, name="bar")
    assert induced.order == 1
    assert induced.ring is quotient.ring


def test_automorphisms_compare_by_images(named):
    ring = named["F2xF2/swap"].ring
    a = RingAutomorphism(ring, [(0, 1), (1, 0)])
    b = validate_automorphism(ring, [(0, 1), (1, 0)], name="other")
    assert a == b
    assert a.compose(b) == RingAutomorphism.identity(ring)
