"""
Objects induced by a finite group acting on a finite ring: the ring of invariants, traces,
torsion ideals, bad primes, extension and restriction of ideals, splitting complements and
centralizer/normalizer data.
"""
import logging
import math
import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from sympy import isprime, primefactors

from algebra.errors import NotInFixedRing, NotInvertible, RingError
from algebra.groups import (
    AutomorphismGroup,
    QuotientAction,
    RingAutomorphism,
    fixed_subgroup,
    p_normal_complement,
    quotient_action,
)
from algebra.lattice import solve_mod_p
from algebra.radicals import is_semiprime
from algebra.ring_core import (
    AdditiveMap,
    Elem,
    FiniteRing,
    Ideal,
    RingLike,
    Side,
    Subgroup,
    SubringView,
    generated_ideal,
    unit_inverse,
)

logger = logging.getLogger(__name__)


@dataclass
class GActionContext:
    ring: RingLike
    group: AutomorphismGroup
    fixed: SubringView

    @property
    def n(self) -> int:
        return self.group.order

    @property
    def name(self) -> str:
        return f"{self.ring.name}/{self.group.name}"


def fixed_ring(ring: RingLike, group: AutomorphismGroup) -> SubringView:
    if group.domain.carrier != ring.carrier:
        raise RingError(f"group {group.name!r} does not act on {ring.name}")
    return SubringView.of(ring.parent, fixed_subgroup(group), name=f"{ring.name}^{group.name or 'G'}")


def make_context(ring: RingLike, group: AutomorphismGroup) -> GActionContext:
    ctx = GActionContext(ring, group, fixed_ring(ring, group))
    logger.debug(f"context {ctx.name}: |R| = {ring.order}, |G| = {group.order}, |R^G| = {ctx.fixed.order}")
    return ctx


def trace(ctx: GActionContext, r: Elem) -> Elem:
    return ctx.ring.additive.total(g(r) for g in ctx.group.elements)


def trace_image(ctx: GActionContext, xs) -> Subgroup:
    """Additive span of t(x) for x in xs (a Subgroup or any iterable of elements)."""
    if isinstance(xs, Subgroup):
        xs = xs.gens
    return ctx.ring.span(trace(ctx, x) for x in xs)


def relative_trace(action: QuotientAction, r: Elem) -> Elem:
    """Sum of r^g over coset representatives of G/N, for r fixed by N."""
    fixed = action.group.domain
    if not fixed.contains(r):
        raise NotInFixedRing(f"{r} is not fixed by the normal subgroup")
    return fixed.additive.total(g(r) for g in action.representatives)


def relative_trace_image(action: QuotientAction) -> Subgroup:
    fixed = action.group.domain
    return fixed.span(relative_trace(action, s) for s in fixed.generators())


def _n_part(d: int, n: int) -> int:
    return math.gcd(d, n ** max(d.bit_length(), 1))


def torsion_subgroup(ring: RingLike, n: int) -> Subgroup:
    if n < 1:
        raise RingError("torsion index must be >= 1")
    additive = ring.additive
    gens = []
    for i, d in enumerate(additive.cyclic_orders):
        v = [0] * additive.rank
        v[i] = d // _n_part(d, n)
        gens.append(v)
    torsion = additive.span(gens)
    if isinstance(ring, FiniteRing):
        return torsion
    return torsion.intersection(ring.carrier)


def torsion_ideal(ring: RingLike, n: int) -> Ideal:
    """tor_n(R): elements killed by some power of n."""
    return Ideal(ring, Side.TWOSIDED, torsion_subgroup(ring, n))


def is_invariant(group: AutomorphismGroup, subgroup: Subgroup) -> bool:
    return all(g.image(subgroup).issubset(subgroup) for g in group.elements)


@dataclass
class BadPrimeData:
    p: int
    torsion: Ideal
    complement: Optional[AutomorphismGroup] = None
    action: Optional[QuotientAction] = None
    trace_image: Optional[Subgroup] = None
    d: Optional[int] = None
    d_status: str = "no-complement"


@dataclass
class BadPrimeProfile:
    primes: List[int]
    data: Dict[int, BadPrimeData] = field(default_factory=dict)

    @property
    def is_empty(self) -> bool:
        return not self.primes


def least_nilpotent_power(ring: RingLike, subgroup: Subgroup, cap: int) -> Tuple[Optional[int], str]:
    """Least d <= cap with subgroup^d = 0, with status found / not-nilpotent / capped."""
    power = subgroup
    for d in range(1, cap + 1):
        if power.is_zero:
            return d, "found"
        grown = ring.product(power, subgroup)
        if grown == power:
            return None, "not-nilpotent"
        power = grown
    return None, "capped"


def bad_primes(ctx: GActionContext, d_cap: int = 16) -> BadPrimeProfile:
    profile = BadPrimeProfile(primes=[])
    for p in primefactors(ctx.n):
        torsion = torsion_ideal(ctx.ring, p)
        if torsion.is_zero:
            continue
        profile.primes.append(p)
        entry = BadPrimeData(p, torsion)
        complement = p_normal_complement(ctx.group, p)
        if complement is not None:
            fixed_n = fixed_ring(ctx.ring, complement)
            action = quotient_action(ctx.group, complement, fixed_n)
            image = relative_trace_image(action)
            entry.complement = complement
            entry.action = action
            entry.trace_image = image
            entry.d, entry.d_status = least_nilpotent_power(ctx.ring, image, d_cap)
        profile.data[p] = entry
    logger.debug(f"bad primes of {ctx.name}: {profile.primes}")
    return profile


def extension(ctx: GActionContext, j: Subgroup, side: Side) -> Ideal:
    """J^e, the sided ideal of R generated by J."""
    return generated_ideal(ctx.ring, j.gens, side)


def restriction(ctx: GActionContext, ideal: Ideal) -> Ideal:
    """I^r = I intersected with R^G."""
    return Ideal(ctx.fixed, ideal.side, ideal.subgroup.intersection(ctx.fixed.carrier))


@dataclass
class SplittingData:
    fixed: Subgroup
    complement: Subgroup
    projection: AdditiveMap
    bimodule_checked: bool = False
    source: str = ""

    def decompose(self, r: Elem) -> Tuple[Elem, Elem]:
        e_r = self.projection(r)
        return e_r, self.fixed.group.sub(r, e_r)


def is_splitting_complement(ctx: GActionContext, complement: Subgroup) -> bool:
    fixed = ctx.fixed.carrier
    if not fixed.intersection(complement).is_zero:
        return False
    if fixed + complement != ctx.ring.carrier:
        return False
    for a in fixed.gens:
        for b in complement.gens:
            if not complement.contains(ctx.ring.mul(a, b)) or not complement.contains(ctx.ring.mul(b, a)):
                return False
    return True


def projection_along(ctx: GActionContext, complement: Subgroup) -> AdditiveMap:
    """The projection of R onto R^G with kernel `complement`."""
    if not isinstance(ctx.ring, FiniteRing):
        raise RingError("splittings are computed on whole rings only")
    additive = ctx.ring.additive
    fixed_elements = ctx.fixed.elements()
    images = []
    for x in additive.basis():
        image = next((f for f in fixed_elements if complement.contains(additive.sub(x, f))), None)
        if image is None:
            raise RingError("complement does not split the fixed ring off")
        images.append(image)
    return AdditiveMap(additive, additive, tuple(images))


def make_splitting(ctx: GActionContext, complement: Subgroup, source: str) -> SplittingData:
    checked = is_splitting_complement(ctx, complement)
    if not checked:
        raise RingError(f"{complement.describe()} is not an R^G-bimodule complement of R^G")
    return SplittingData(ctx.fixed.carrier, complement, projection_along(ctx, complement), True, source)


def averaging_idempotent(ctx: GActionContext) -> SplittingData:
    """e = |G|^-1 sum g, defined when |G| is invertible on R."""
    exponent = ctx.ring.additive.exponent
    if math.gcd(ctx.n, exponent) != 1:
        raise NotInvertible(f"|G| = {ctx.n} is not invertible in characteristic {exponent}")
    inverse = pow(ctx.n, -1, exponent) if exponent > 1 else 0
    additive = ctx.ring.additive
    images = tuple(additive.scale(inverse, trace(ctx, x)) for x in additive.basis())
    e = AdditiveMap(additive, additive, images)
    for s in ctx.ring.generators():
        if e(e(s)) != e(s):
            raise RingError("averaging map is not idempotent")
    if e.image(ctx.ring.carrier) != ctx.fixed.carrier:
        raise RingError("averaging map does not land onto R^G")
    complement = ctx.ring.span(additive.sub(s, e(s)) for s in ctx.ring.generators())
    return SplittingData(ctx.fixed.carrier, complement, e, is_splitting_complement(ctx, complement), "averaging")


def _bimodule_closure(ctx: GActionContext, subgroup: Subgroup) -> Subgroup:
    actors = ctx.fixed.generators()
    current = subgroup
    while True:
        new = list(current.gens)
        for b in current.gens:
            for a in actors:
                new.append(ctx.ring.mul(a, b))
                new.append(ctx.ring.mul(b, a))
        grown = ctx.ring.span(new)
        if grown == current:
            return current
        current = grown


@dataclass
class SplittingSearchResult:
    splitting: Optional[SplittingData]
    exhaustive: bool
    method: str
    explored: int = 0

    @property
    def found(self) -> bool:
        return self.splitting is not None


def _linear_splitting(ctx: GActionContext, p: int) -> Optional[Subgroup]:
    """Solve for a complement as the graph of a linear map into R^G, over Z/p."""
    additive = ctx.ring.additive
    k = additive.rank
    f_basis = list(ctx.fixed.generators())
    pivots = [next(i for i, v in enumerate(f) if v) for f in f_basis]
    free = [c for c in range(k) if c not in pivots]
    m = len(f_basis)

    def alpha(y):
        return [y[c] for c in pivots]

    def beta(y):
        rest = list(y)
        for coef, f in zip(alpha(y), f_basis):
            rest = [(a - coef * b) % p for a, b in zip(rest, f)]
        return [rest[c] for c in free]

    def unit(c):
        v = [0] * k
        v[c] = 1
        return tuple(v)

    columns = len(free) * m
    matrix, rhs = [], []
    for a in f_basis:
        for left in (True, False):
            def act(x, _a=a, _left=left):
                return ctx.ring.mul(_a, x) if _left else ctx.ring.mul(x, _a)

            products_f = [alpha(act(f)) for f in f_basis]
            for ci, c in enumerate(free):
                ae = act(unit(c))
                a_alpha, a_beta = alpha(ae), beta(ae)
                for r2 in range(m):
                    row = [0] * columns
                    for r in range(m):
                        row[ci * m + r] += products_f[r][r2]
                    for cj in range(len(free)):
                        row[cj * m + r2] -= a_beta[cj]
                    matrix.append(row)
                    rhs.append(-a_alpha[r2])
    if columns == 0:
        solution = []
    else:
        solution = solve_mod_p(matrix, rhs, p, columns)
        if solution is None:
            return None
    gens = []
    for ci, c in enumerate(free):
        v = list(unit(c))
        for r, f in enumerate(f_basis):
            v = [(a + solution[ci * m + r] * b) % p for a, b in zip(v, f)]
        gens.append(v)
    return additive.span(gens)


def _complement_search(ctx: GActionContext, budget: int, first_only: bool):
    """Depth-first search over R^G-subbimodules meeting R^G trivially; yields complements."""
    ring = ctx.ring
    fixed = ctx.fixed.carrier
    target = ring.order // fixed.order
    visited = set()
    state = {"explored": 0, "exhausted": True}
    found: List[Subgroup] = []

    def visit(current: Subgroup) -> bool:
        if current in visited:
            return True
        visited.add(current)
        state["explored"] += 1
        if state["explored"] > budget:
            state["exhausted"] = False
            return False
        if current.order == target:
            found.append(current)
            return not first_only
        span_with_fixed = fixed + current
        for x in ring.elements():
            if span_with_fixed.contains(x):
                continue
            grown = _bimodule_closure(ctx, current + ring.span([x]))
            if not grown.intersection(fixed).is_zero or grown.order > target:
                continue
            if not visit(grown):
                return False
        return True

    visit(_bimodule_closure(ctx, ring.span([])))
    return found, state["exhausted"], state["explored"]


def splitting_search(ctx: GActionContext, budget: int = 20000) -> SplittingSearchResult:
    fixed = ctx.fixed.carrier
    if fixed == ctx.ring.carrier:
        zero = ctx.ring.span([])
        return SplittingSearchResult(make_splitting(ctx, zero, "trivial"), True, "trivial")
    exponent = ctx.ring.additive.exponent
    if isinstance(ctx.ring, FiniteRing) and isprime(exponent):
        complement = _linear_splitting(ctx, exponent)
        if complement is None:
            return SplittingSearchResult(None, True, "linear")
        return SplittingSearchResult(make_splitting(ctx, complement, "linear"), True, "linear")
    found, exhaustive, explored = _complement_search(ctx, budget, first_only=True)
    if found:
        return SplittingSearchResult(make_splitting(ctx, found[0], "search"), True, "search", explored)
    return SplittingSearchResult(None, exhaustive, "search", explored)


def iter_splittings(ctx: GActionContext, budget: int = 20000) -> Tuple[List[SplittingData], bool]:
    """Every splitting complement reachable within the budget, and whether the list is complete."""
    if ctx.fixed.carrier == ctx.ring.carrier:
        return [make_splitting(ctx, ctx.ring.span([]), "trivial")], True
    found, exhaustive, _ = _complement_search(ctx, budget, first_only=False)
    return [make_splitting(ctx, b, "search") for b in found], exhaustive


def orbit_ideal(ctx: GActionContext, x: Elem, side: Side) -> Ideal:
    return generated_ideal(ctx.ring, [g(x) for g in ctx.group.elements], side)


def _ideal_lattice(ring: RingLike, side: Side, principal: Callable[[Elem], Ideal], cap: int, samples: int,
                   seed: int, label: str) -> Tuple[List[Ideal], bool]:
    """Sums of the principal ideals: all of them when |R| <= cap, else a seeded sample."""
    zero = Ideal(ring, side, ring.span([]))
    if ring.order <= cap:
        principals = {}
        for x in ring.elements():
            ideal = principal(x)
            principals.setdefault(ideal.subgroup, ideal)
        joins = {zero.subgroup}
        for subgroup in principals:
            joins |= {j + subgroup for j in joins}
        ideals = [Ideal(ring, side, s) for s in joins]
        exhaustive = True
    else:
        rng = random.Random(seed)
        elements = ring.elements()
        found = {zero.subgroup: zero, ring.carrier: Ideal(ring, side, ring.carrier)}
        for _ in range(samples):
            ideal = principal(rng.choice(elements))
            found.setdefault(ideal.subgroup, ideal)
        ideals = list(found.values())
        exhaustive = False
        logger.info(f"{ring.name}: sampled {len(ideals)} {label} {side.value} ideals (|R| = {ring.order} > {cap})")
    ideals.sort(key=lambda i: (i.order, i.subgroup.rows))
    return ideals, exhaustive


def invariant_ideals(ctx: GActionContext, side: Side, cap: int = 256, samples: int = 32,
                     seed: int = 0) -> Tuple[List[Ideal], bool]:
    """G-invariant sided ideals, each a sum of ideals generated by G-orbits."""
    side = Side(side)
    return _ideal_lattice(ctx.ring, side, lambda x: orbit_ideal(ctx, x, side), cap, samples, seed, "invariant")


def sided_ideals(ring: RingLike, side: Side, cap: int = 256, samples: int = 32,
                 seed: int = 0) -> Tuple[List[Ideal], bool]:
    side = Side(side)
    return _ideal_lattice(ring, side, lambda x: generated_ideal(ring, [x], side), cap, samples, seed, "one-sided")


@dataclass
class ProperSplittingResult:
    holds: bool
    side: Side
    exhaustive: bool
    witness: Optional[Ideal] = None
    forward_holds: bool = True
    backward_holds: bool = True
    checked: int = 0


def is_proper_splitting(ctx: GActionContext, splitting: SplittingData, side: Side, cap: int = 256,
                        samples: int = 32, seed: int = 0) -> ProperSplittingResult:
    """e(I) inside I ∩ R^G for every G-invariant sided ideal I; both inclusions are recorded."""
    side = Side(side)
    ideals, exhaustive = invariant_ideals(ctx, side, cap, samples, seed)
    result = ProperSplittingResult(True, side, exhaustive, checked=len(ideals))
    for ideal in ideals:
        projected = splitting.projection.image(ideal.subgroup)
        restricted = ideal.subgroup.intersection(splitting.fixed)
        if not projected.issubset(restricted):
            result.forward_holds = False
            if result.witness is None:
                result.witness = ideal
        if not restricted.issubset(projected):
            result.backward_holds = False
    result.holds = result.forward_holds
    return result


@dataclass
class ProperSplittingGroupResult:
    splitting: Optional[SplittingData]
    decided: bool
    candidates: int


def proper_splitting_group(ctx: GActionContext, side: Side, budget: int = 20000, cap: int = 256,
                           samples: int = 32, seed: int = 0) -> ProperSplittingGroupResult:
    """Look for a splitting that is proper on `side`; decided when enumeration and ideal scans were complete."""
    splittings, complete = iter_splittings(ctx, budget)
    scans_complete = True
    for splitting in splittings:
        outcome = is_proper_splitting(ctx, splitting, side, cap, samples, seed)
        scans_complete = scans_complete and outcome.exhaustive
        if outcome.holds:
            return ProperSplittingGroupResult(splitting, outcome.exhaustive, len(splittings))
    return ProperSplittingGroupResult(None, complete and scans_complete, len(splittings))


def inner_automorphism(ring: FiniteRing, u: Elem) -> RingAutomorphism:
    """omega_u(b) = u b u^-1."""
    u_inv = unit_inverse(ring, u)
    if u_inv is None:
        raise NotInvertible(f"{u} is not a unit of {ring.name}")
    images = [ring.mul(ring.mul(u, x), u_inv) for x in ring.additive.basis()]
    return RingAutomorphism(ring, images, name=f"omega{u}")


@dataclass
class CentralizerData:
    centralizer: Subgroup
    normalizer: List[Elem]
    centralizer_units: List[Elem]
    normalizer_units: List[Elem]
    units_normal: bool

    def inner_maps(self, ring: FiniteRing) -> List[RingAutomorphism]:
        return [inner_automorphism(ring, u) for u in self.normalizer_units]


def centralizer_normalizer(ring: FiniteRing, sub: RingLike) -> CentralizerData:
    a_gens = sub.generators()
    central = []
    normal = []
    for b in ring.elements():
        left = [ring.mul(b, a) for a in a_gens]
        right = [ring.mul(a, b) for a in a_gens]
        if left == right:
            central.append(b)
        if ring.span(left) == ring.span(right):
            normal.append(b)
    centralizer = ring.span(central)
    units = {}
    for b in normal:
        inverse = unit_inverse(ring, b)
        if inverse is not None:
            units[b] = inverse
    normalizer_units = sorted(units)
    centralizer_units = [u for u in normalizer_units if centralizer.contains(u)]
    c_set = set(centralizer_units)
    units_normal = all(
        ring.mul(ring.mul(n, c), units[n]) in c_set for n in normalizer_units for c in centralizer_units
    )
    return CentralizerData(centralizer, normal, centralizer_units, normalizer_units, units_normal)


def transport_splitting(ctx: GActionContext, splitting: SplittingData,
                        omega: RingAutomorphism) -> Optional[SplittingData]:
    """omega(B) for an automorphism preserving R^G, re-verified as a splitting."""
    if omega.image(ctx.fixed.carrier) != ctx.fixed.carrier:
        return None
    moved = omega.image(splitting.complement)
    if not is_splitting_complement(ctx, moved):
        return None
    return make_splitting(ctx, moved, "transported")


@dataclass
class NondegenerateTraceResult:
    holds: bool
    fixed_semiprime: bool
    exhaustive: bool
    witness: Optional[Ideal] = None


def nondegenerate_trace_check(ctx: GActionContext, cap: int = 256, samples: int = 32,
                              seed: int = 0) -> NondegenerateTraceResult:
    """R^G semiprime and t(I) != 0 for every nonzero G-invariant one-sided ideal I."""
    semiprime = is_semiprime(ctx.fixed)
    exhaustive = True
    witness = None
    for side in (Side.LEFT, Side.RIGHT):
        ideals, complete = invariant_ideals(ctx, side, cap, samples, seed)
        exhaustive = exhaustive and complete
        for ideal in ideals:
            if not ideal.is_zero and trace_image(ctx, ideal.subgroup).is_zero:
                witness = ideal
                break
        if witness is not None:
            break
    return NondegenerateTraceResult(semiprime and witness is None, semiprime, exhaustive, witness)
