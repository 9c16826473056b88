import pytest

from algebra.errors import IllDefined, NonAssociative, NotUnital, RingError, ValidationError, WrongSide
from algebra.ring_core import (
    AdditiveGroup,
    Ideal,
    Side,
    SubringView,
    direct_product,
    embed_in_unitalization,
    generated_ideal,
    is_ideal,
    matrix_ring,
    quotient_by_ideal,
    unit_inverse,
    unitalize,
    validate_ring,
    zero_mult_ring,
)


def z(n):
    return validate_ring(f"Z{n}", (n,), [[(1,)]])


def test_cyclic_ring_identity_detected():
    ring = z(12)
    assert ring.order == 12
    assert ring.identity == (1,)
    assert ring.mul((5,), (7,)) == (11,)


def test_non_associative_table_reports_triple():
    with pytest.raises(NonAssociative) as exc:
        validate_ring("bad", (2, 2), [[(0, 1), (0, 0)], [(0, 1), (0, 0)]])
    assert exc.value.witness == (0, 0, 0)


def test_ill_defined_product():
    with pytest.raises(IllDefined) as exc:
        validate_ring("bad", (2, 3), [[(0, 1), (0, 0)], [(0, 0), (0, 0)]])
    assert exc.value.witness == (0, 0)


def test_table_shape_checked():
    with pytest.raises(ValidationError):
        validate_ring("bad", (2, 2), [[(1, 0), (0, 1)]])


def test_declared_identity_checked():
    with pytest.raises(ValidationError):
        validate_ring("Z6", (6,), [[(1,)]], identity=(5,))


def test_subgroup_arithmetic():
    group = AdditiveGroup((12,))
    fours = group.span([(4,)])
    sixes = group.span([(6,)])
    assert fours.order == 3
    assert (fours + sixes).order == 6
    assert (fours + sixes) == group.span([(2,)])
    assert fours.intersection(sixes).is_zero
    assert sixes.issubset(group.span([(2,)]))
    assert fours.elements() == [(0,), (4,), (8,)]


def test_subgroup_is_canonical():
    group = AdditiveGroup((2, 4))
    assert group.span([(1, 2), (0, 2)]) == group.span([(1, 0), (0, 2)])
    assert hash(group.span([(1, 2), (0, 2)])) == hash(group.span([(1, 0), (0, 2)]))


def test_direct_product_identity():
    f3 = z(3)
    ring = direct_product([f3, f3], name="F3xF3")
    assert ring.order == 9
    assert ring.identity == (1, 1)
    assert ring.mul((1, 0), (0, 1)) == (0, 0)


def test_matrix_ring_coordinates():
    m2 = matrix_ring(z(2), 2)
    assert m2.order == 16
    assert m2.identity == (1, 0, 0, 1)
    # e12 * e21 = e11, e21 * e12 = e22
    assert m2.mul((0, 1, 0, 0), (0, 0, 1, 0)) == (1, 0, 0, 0)
    assert m2.mul((0, 0, 1, 0), (0, 1, 0, 0)) == (0, 0, 0, 1)


def test_matrix_ring_needs_identity():
    with pytest.raises(NotUnital):
        matrix_ring(zero_mult_ring(AdditiveGroup((2,))), 2)


def test_unitalization_of_even_integers_mod_8():
    two_z8 = validate_ring("2Z8", (4,), [[(2,)]])
    assert not two_z8.is_unital
    big = unitalize(two_z8)
    assert big.order == 16
    assert big.identity == (1, 0)
    x = embed_in_unitalization((1,))
    assert big.mul(x, x) == embed_in_unitalization((2,))


def test_generated_ideals_and_quotient():
    ring = z(12)
    six = generated_ideal(ring, [(6,)], Side.TWOSIDED)
    assert six.order == 2
    assert is_ideal(ring, six.subgroup, Side.TWOSIDED)
    quotient = quotient_by_ideal(ring, six)
    assert quotient.ring.order == 6
    assert quotient.ring.is_unital
    assert quotient.projection((7,)) == quotient.projection((1,))


def test_quotient_needs_two_sided_ideal():
    ring = z(12)
    left = Ideal(ring, Side.LEFT, ring.span([(6,)]))
    with pytest.raises(WrongSide):
        quotient_by_ideal(ring, left)


def test_one_sided_ideals_of_matrices():
    m2 = matrix_ring(z(2), 2)
    left = generated_ideal(m2, [(1, 0, 0, 0)], Side.LEFT)
    right = generated_ideal(m2, [(1, 0, 0, 0)], Side.RIGHT)
    assert left.order == 4
    assert right.order == 4
    assert left.subgroup != right.subgroup
    assert generated_ideal(m2, [(1, 0, 0, 0)], Side.TWOSIDED).subgroup == m2.carrier


def test_subring_view_closure():
    m2 = matrix_ring(z(2), 2)
    upper = m2.span([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 1)])
    view = SubringView.of(m2, upper, name="upper")
    assert view.order == 8
    assert view.identity == (1, 0, 0, 1)
    with pytest.raises(RingError):
        SubringView.of(m2, m2.span([(0, 1, 0, 0), (0, 0, 1, 0)]))


def test_unit_inverse():
    ring = z(12)
    assert unit_inverse(ring, (5,)) == (5,)
    assert unit_inverse(ring, (7,)) == (7,)
    assert unit_inverse(ring, (6,)) is None
    assert unit_inverse(zero_mult_ring(AdditiveGroup((2,))), (1,)) is None
