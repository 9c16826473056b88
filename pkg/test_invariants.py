import pytest

from algebra.errors import NotInFixedRing, NotInvertible
from algebra.groups import p_normal_complement, quotient_action
from algebra.invariants import (
    averaging_idempotent,
    bad_primes,
    centralizer_normalizer,
    extension,
    fixed_ring,
    inner_automorphism,
    invariant_ideals,
    is_invariant,
    is_proper_splitting,
    iter_splittings,
    least_nilpotent_power,
    make_context,
    nondegenerate_trace_check,
    relative_trace,
    restriction,
    splitting_search,
    torsion_subgroup,
    trace,
    trace_image,
    transport_splitting,
)
from algebra.ring_core import Side


def context(instance):
    return make_context(instance.ring, instance.group)


def test_fixed_ring_and_trace_of_negation(named):
    ctx = context(named["2Z8/neg"])
    assert ctx.fixed.elements() == [(0,), (2,)]
    assert trace_image(ctx, ctx.ring.carrier).is_zero


def test_trace_lands_in_fixed_ring(named):
    for instance in named.values():
        ctx = context(instance)
        for x in instance.ring.elements():
            assert ctx.fixed.contains(trace(ctx, x))


def test_torsion_subgroups():
    from algebra.ring_core import validate_ring
    z12 = validate_ring("Z12", (12,), [[(1,)]])
    assert torsion_subgroup(z12, 2).elements() == [(0,), (3,), (6,), (9,)]
    assert torsion_subgroup(z12, 3).elements() == [(0,), (4,), (8,)]
    assert torsion_subgroup(z12, 6).order == 12
    assert torsion_subgroup(z12, 5).is_zero


def test_torsion_is_invariant(named):
    for instance in named.values():
        tor = torsion_subgroup(instance.ring, instance.group.order)
        assert is_invariant(instance.group, tor)


def test_bad_primes_of_f4_zero(named):
    profile = bad_primes(context(named["F4_0/sym3"]))
    assert profile.primes == [2]
    data = profile.data[2]
    assert data.complement.order == 3
    assert data.action.quotient_order == 2
    assert data.trace_image.is_zero
    assert (data.d, data.d_status) == (1, "found")


def test_no_bad_primes_when_order_invertible(named):
    assert bad_primes(context(named["F3xF3/swap"])).is_empty
    assert bad_primes(context(named["Z12/trivial"])).is_empty


def test_relative_trace_needs_fixed_element(named):
    instance = named["F4_0/sym3"]
    complement = p_normal_complement(instance.group, 2)
    action = quotient_action(instance.group, complement, fixed_ring(instance.ring, complement))
    assert relative_trace(action, (0, 0)) == (0, 0)
    with pytest.raises(NotInFixedRing):
        relative_trace(action, (1, 0))


def test_least_nilpotent_power(named):
    ring = named["F3^2_0/swap"].ring
    assert least_nilpotent_power(ring, ring.carrier, 16) == (2, "found")
    assert least_nilpotent_power(ring, ring.span([]), 16) == (1, "found")
    z12 = named["Z12/trivial"].ring
    assert least_nilpotent_power(z12, z12.carrier, 16) == (None, "not-nilpotent")


def test_averaging_idempotent_splits_product_of_fields(named):
    ctx = context(named["F3xF3/swap"])
    splitting = averaging_idempotent(ctx)
    assert splitting.bimodule_checked
    assert splitting.complement == ctx.ring.span([(1, 2)])
    fixed_part, rest = splitting.decompose((1, 0))
    assert fixed_part == (2, 2)
    assert rest == (2, 1)


def test_averaging_needs_invertible_order(named):
    with pytest.raises(NotInvertible):
        averaging_idempotent(context(named["F2xF2/swap"]))


def test_splitting_search_linear_case(named):
    result = splitting_search(context(named["F2xF2/swap"]))
    assert result.found
    assert result.method == "linear"
    splittings, complete = iter_splittings(context(named["F2xF2/swap"]))
    assert complete
    assert len(splittings) == 2


def test_splitting_search_exhausts_without_complement(named):
    result = splitting_search(context(named["2Z8/neg"]))
    assert not result.found
    assert result.exhaustive


def test_trivial_group_splits_trivially(named):
    result = splitting_search(context(named["Z12/trivial"]))
    assert result.method == "trivial"
    assert result.splitting.complement.is_zero


def test_extension_and_restriction(named):
    ctx = context(named["F3xF3/swap"])
    j = ctx.fixed.carrier
    ext = extension(ctx, j, Side.LEFT)
    assert ext.subgroup == ctx.ring.carrier
    assert restriction(ctx, ext).subgroup == j


def test_invariant_ideals_of_swap(named):
    ctx = context(named["F3xF3/swap"])
    ideals, exhaustive = invariant_ideals(ctx, Side.LEFT)
    assert exhaustive
    assert [i.order for i in ideals] == [1, 9]


def test_averaging_is_proper_on_both_sides(named):
    ctx = context(named["F3xF3/swap"])
    splitting = averaging_idempotent(ctx)
    for side in (Side.LEFT, Side.RIGHT):
        outcome = is_proper_splitting(ctx, splitting, side)
        assert outcome.holds and outcome.exhaustive


def test_inner_automorphisms(named):
    ring = named["M2(F2)/inner"].ring
    with pytest.raises(NotInvertible):
        inner_automorphism(ring, (1, 0, 0, 0))
    omega = inner_automorphism(ring, (1, 1, 0, 1))
    assert omega((0, 1, 0, 0)) == (0, 1, 0, 0)
    assert omega.compose(omega) == omega.identity(ring)


def test_centralizer_normalizer_and_transport(named):
    instance = named["M2(F3)/diag"]
    ctx = context(instance)
    data = centralizer_normalizer(instance.ring, ctx.fixed)
    assert data.centralizer == ctx.fixed.carrier
    assert data.units_normal
    splitting = averaging_idempotent(ctx)
    for omega in data.inner_maps(instance.ring):
        moved = transport_splitting(ctx, splitting, omega)
        assert moved is not None
        assert moved.bimodule_checked


def test_nondegenerate_trace(named):
    outcome = nondegenerate_trace_check(context(named["F3xF3/swap"]))
    assert outcome.holds and outcome.fixed_semiprime and outcome.exhaustive
