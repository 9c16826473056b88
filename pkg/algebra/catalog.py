"""
Instance catalog: named (ring, group) pairs, seeded random instances, tags and fingerprints.
"""
import logging
import math
import random
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from algebra.errors import InvalidAutomorphism, RingError
from algebra.groups import AutomorphismGroup, RingAutomorphism, close_group, validate_automorphism
from algebra.invariants import inner_automorphism, torsion_subgroup, trace_image
from algebra.lattice import smith_form
from algebra.radicals import prime_radical, uniform_dimension
from algebra.ring_core import (
    AdditiveGroup,
    FiniteRing,
    Side,
    cyclic_cayley,
    direct_product,
    group_ring,
    matrix_ring,
    unit_inverse,
    validate_ring,
    zero_mult_ring,
)
from algebra.theorems import Analysis, background_checks, check
from models.report_models import Caps, TheoremId
from models.ring_models import Fingerprint, GenerationStats, InstanceProfile, InstanceSummary
from sympy import primefactors

logger = logging.getLogger(__name__)


@dataclass
class Instance:
    name: str
    ring: FiniteRing
    group: AutomorphismGroup
    generators: List[RingAutomorphism]
    provenance: str = "constructed"
    tags: List[str] = field(default_factory=list)

    def summary(self, caps: Optional[Caps] = None) -> InstanceSummary:
        return InstanceSummary(
            name=self.name,
            provenance=self.provenance,
            ring_order=self.ring.order,
            group_order=self.group.order,
            tags=self.tags,
            fingerprint=fingerprint(self.ring, caps),
        )


def derive_tags(ring: FiniteRing, group: AutomorphismGroup, caps: Optional[Caps] = None) -> List[str]:
    """Tags recomputed from scratch; never read from files."""
    analysis = Analysis(ring, group, caps)
    tags = []
    if ring.is_unital:
        tags.append("unital")
    if group.order == 1:
        tags.append("trivial-group")
    if analysis.radicals.semiprime:
        tags.append("semiprime")
    if analysis.radicals.semisimple_artinian:
        tags.append("semisimple")
    k, status = analysis.nilpotency
    if status == "found":
        tags.append("nilpotent")
    if analysis.fixed.carrier.is_zero:
        tags.append("fixed-zero")
    if analysis.torsion_free:
        tags.append("torsion-free")
    tags.extend(f"bad-prime-{p}" for p in analysis.bad.primes)
    if analysis.inverse_in_ring:
        tags.append("order-invertible")
    if analysis.splitting.found:
        tags.append("splitting-exists")
    n1 = check(TheoremId.N1, analysis)
    if all(h.status.ok for h in n1.hypotheses):
        tags.append("n1-hypotheses-hold")
    return sorted(tags)


def make_instance(name: str, ring: FiniteRing, generators: Sequence[RingAutomorphism], group_name: str,
                  provenance: str = "constructed", caps: Optional[Caps] = None, tags: bool = True) -> Instance:
    caps = caps or Caps()
    group = close_group(ring, generators, cap=caps.group, name=group_name)
    instance = Instance(name, ring, group, list(generators), provenance)
    if tags:
        instance.tags = derive_tags(ring, group, caps)
    return instance


def _field(p: int) -> FiniteRing:
    return validate_ring(f"F{p}", (p,), [[(1,)]])


def _f4() -> FiniteRing:
    return validate_ring("F4", (2, 2), [[(1, 0), (0, 1)], [(0, 1), (1, 1)]], identity=(1, 0))


def _f4_actions(ring: FiniteRing, offset: int = 0) -> Tuple[RingAutomorphism, RingAutomorphism]:
    """Multiplication by a cube root of unity and the Frobenius, on the coordinates from `offset` on."""
    k = ring.additive.rank

    def extend(block):
        images = []
        for i in range(k):
            if offset <= i < offset + 2:
                v = [0] * k
                v[offset:offset + 2] = block[i - offset]
                images.append(tuple(v))
            else:
                images.append(tuple(int(i == j) for j in range(k)))
        return images

    omega = validate_automorphism(ring, extend([(0, 1), (1, 1)]), name="omega")
    frobenius = validate_automorphism(ring, extend([(1, 0), (1, 1)]), name="frob")
    return omega, frobenius


def _swap(ring: FiniteRing) -> RingAutomorphism:
    return validate_automorphism(ring, [(0, 1), (1, 0)], name="swap")


def named_instances(caps: Optional[Caps] = None, tags: bool = True) -> List[Instance]:
    f2, f3 = _field(2), _field(3)
    instances = []

    z12 = validate_ring("Z12", (12,), [[(1,)]])
    instances.append(make_instance("Z12/trivial", z12, [], "trivial", caps=caps, tags=tags))

    f3f3 = direct_product([f3, f3], name="F3xF3")
    instances.append(make_instance("F3xF3/swap", f3f3, [_swap(f3f3)], "swap", caps=caps, tags=tags))

    f2f2 = direct_product([f2, f2], name="F2xF2")
    instances.append(make_instance("F2xF2/swap", f2f2, [_swap(f2f2)], "swap", caps=caps, tags=tags))

    two_z8 = validate_ring("2Z8", (4,), [[(2,)]])
    negation = validate_automorphism(two_z8, [(3,)], name="neg")
    instances.append(make_instance("2Z8/neg", two_z8, [negation], "neg", caps=caps, tags=tags))

    m2f2 = matrix_ring(f2, 2, name="M2(F2)")
    unipotent = inner_automorphism(m2f2, (1, 1, 0, 1))
    unipotent.name = "conj_u"
    instances.append(make_instance("M2(F2)/inner", m2f2, [unipotent], "inner", caps=caps, tags=tags))

    f4_zero = zero_mult_ring(AdditiveGroup((2, 2)), name="F4_0")
    omega, frobenius = _f4_actions(f4_zero)
    instances.append(make_instance("F4_0/sym3", f4_zero, [omega, frobenius], "sym3", caps=caps, tags=tags))

    f2c2 = group_ring(f2, cyclic_cayley(2), name="F2[C2]")
    instances.append(make_instance("F2[C2]/trivial", f2c2, [], "trivial", caps=caps, tags=tags))

    m2f3 = matrix_ring(f3, 2, name="M2(F3)")
    diagonal = inner_automorphism(m2f3, (1, 0, 0, 2))
    diagonal.name = "conj_d"
    instances.append(make_instance("M2(F3)/diag", m2f3, [diagonal], "diag", caps=caps, tags=tags))

    composite = direct_product([f2, f4_zero], name="F2xF4_0")
    c_omega, c_frobenius = _f4_actions(composite, offset=1)
    instances.append(make_instance("F2xF4_0/sym3", composite, [c_omega, c_frobenius], "sym3", caps=caps, tags=tags))

    f3_zero = zero_mult_ring(AdditiveGroup((3, 3)), name="F3^2_0")
    instances.append(make_instance("F3^2_0/swap", f3_zero, [_swap(f3_zero)], "swap", caps=caps, tags=tags))

    f2_cubed = direct_product([f2, f2, f2], name="F2^3")
    cycle = validate_automorphism(f2_cubed, [(0, 1, 0), (0, 0, 1), (1, 0, 0)], name="cycle")
    transposition = validate_automorphism(f2_cubed, [(0, 1, 0), (1, 0, 0), (0, 0, 1)], name="transp")
    instances.append(make_instance("F2^3/sym3", f2_cubed, [cycle, transposition], "sym3", caps=caps, tags=tags))

    f4 = _f4()
    galois = validate_automorphism(f4, [(1, 0), (1, 1)], name="frob")
    instances.append(make_instance("F4/frob", f4, [galois], "frob", caps=caps, tags=tags))

    logger.info(f"built {len(instances)} named instances")
    return instances


def invariant_factors(orders: Sequence[int]) -> List[int]:
    if not orders:
        return []
    matrix = [[d if i == j else 0 for j in range(len(orders))] for i, d in enumerate(orders)]
    diag, _, _ = smith_form(matrix)
    return [d for d in diag if d > 1]


def fingerprint(ring: FiniteRing, caps: Optional[Caps] = None) -> Fingerprint:
    caps = caps or Caps()
    udim = uniform_dimension(ring, Side.LEFT, caps.udim, caps.samples)
    units = sum(1 for x in ring.elements() if unit_inverse(ring, x) is not None) if ring.is_unital else 0
    return Fingerprint(
        order=ring.order,
        invariant_factors=invariant_factors(ring.orders),
        units=units,
        prime_radical_order=prime_radical(ring, caps.nilpotency).order,
        udim=None if udim.capped else udim.value,
        unital=ring.is_unital,
    )


def dedup(instances: Iterable[Instance], caps: Optional[Caps] = None) -> Tuple[List[Instance], int]:
    """Keep the first instance per (fingerprint, group order); returns the kept list and the drop count."""
    seen = set()
    kept = []
    dropped = 0
    for instance in instances:
        key = (fingerprint(instance.ring, caps).key(), instance.group.order)
        if key in seen:
            dropped += 1
            continue
        seen.add(key)
        kept.append(instance)
    return kept, dropped


def _random_orders(rng: random.Random, max_order: int) -> Tuple[int, ...]:
    choices = [2, 3, 4, 5, 8, 9]
    orders = []
    total = 1
    for _ in range(rng.randint(1, 3)):
        fitting = [d for d in choices if total * d <= max_order]
        if not fitting:
            break
        d = rng.choice(fitting)
        orders.append(d)
        total *= d
    return tuple(sorted(orders)) or (2,)


def _random_table(rng: random.Random, orders: Sequence[int]):
    k = len(orders)
    table = []
    for i in range(k):
        row = []
        for j in range(k):
            entry = []
            for t in range(k):
                g = math.gcd(orders[t], math.gcd(orders[i], orders[j]))
                if rng.random() < 0.5 or g == 1:
                    entry.append(0)
                else:
                    entry.append(rng.randrange(g) * (orders[t] // g))
            row.append(tuple(entry))
        table.append(row)
    return table


def find_automorphisms(ring: FiniteRing, limit: int = 64) -> List[RingAutomorphism]:
    """Ring automorphisms by depth-first image search over generators, pruned on partial products."""
    additive = ring.additive
    k = additive.rank
    candidates = [[x for x in additive.elements() if additive.additive_order(x) == d] for d in ring.orders]
    found: List[RingAutomorphism] = []
    images: List[Tuple[int, ...]] = []

    def consistent(j: int) -> bool:
        # a pair is compared once its product is supported on the generators placed so far
        partial = RingAutomorphism(ring, images + [additive.zero] * (k - len(images)))
        for a in range(j + 1):
            for b in range(j + 1):
                product = ring.table[a][b]
                if any(product[j + 1:]):
                    continue
                if partial(product) != ring.mul(images[a], images[b]):
                    return False
        return True

    def extend(j: int):
        if len(found) >= limit:
            return
        if j == k:
            if additive.span(images).order != ring.order:
                return
            try:
                found.append(validate_automorphism(ring, list(images), name=f"aut{len(found)}"))
            except InvalidAutomorphism as exc:
                logger.debug(f"{ring.name}: rejected candidate {images}: {exc}")
            return
        for x in candidates[j]:
            images.append(x)
            if consistent(j):
                extend(j + 1)
            images.pop()

    extend(0)
    return found


def random_instances(max_order: int = 16, count: int = 10, seed: int = 0, attempts: int = 2000,
                     caps: Optional[Caps] = None, tags: bool = True) -> Tuple[List[Instance], GenerationStats]:
    caps = caps or Caps()
    rng = random.Random(seed)
    stats = GenerationStats(seed=seed)
    instances: List[Instance] = []
    while len(instances) < count and stats.attempted < attempts:
        stats.attempted += 1
        orders = _random_orders(rng, max_order)
        try:
            ring = validate_ring(f"rand{seed}-{stats.attempted}", orders, _random_table(rng, orders))
        except RingError:
            continue
        stats.valid += 1
        automorphisms = [g for g in find_automorphisms(ring) if g.images != tuple(ring.additive.basis())]
        if automorphisms:
            size = 2 if len(automorphisms) > 1 and rng.random() < 0.5 else 1
            generators = rng.sample(automorphisms, size)
            group_name = "+".join(g.name for g in generators)
        else:
            stats.rigid += 1
            generators = []
            group_name = "trivial"
        instance = make_instance(f"{ring.name}/{group_name}", ring, generators, group_name,
                                 provenance=f"random({seed})", caps=caps, tags=tags)
        if tags and not automorphisms:
            instance.tags = sorted(instance.tags + ["rigid"])
        instances.append(instance)
    logger.info(f"random batch seed={seed}: {stats.valid}/{stats.attempted} valid tables, {len(instances)} instances")
    return instances, stats


def by_name(instances: Iterable[Instance]) -> Dict[str, Instance]:
    return {instance.name: instance for instance in instances}


def _splitting_outcome(analysis: Analysis) -> str:
    result = analysis.splitting
    if result.found:
        return f"{result.method}: complement {result.splitting.complement.describe()}"
    if result.exhaustive:
        return f"{result.method}: no splitting exists"
    return f"{result.method}: none within {result.explored} nodes"


def _proper_outcome(analysis: Analysis, side: Side) -> str:
    result = analysis.proper_group(side)
    if result.splitting is not None:
        return f"proper splitting: complement {result.splitting.complement.describe()}"
    if result.decided:
        return f"no proper splitting among {result.candidates} complements"
    return f"undecided after {result.candidates} complements"


def profile(instance: Instance, caps: Optional[Caps] = None, seed: int = 0) -> InstanceProfile:
    """Invariants of one instance, as printed by the profile command."""
    analysis = Analysis(instance.ring, instance.group, caps, seed)
    ring = instance.ring
    bad = analysis.bad
    udim = {}
    for which in ("ring", "fixed"):
        for side in (Side.LEFT, Side.RIGHT):
            certificate = analysis.udim(which, side)
            udim[f"{which}_{side.value}"] = None if certificate.capped else certificate.value
    k, status = analysis.nilpotency
    return InstanceProfile(
        name=instance.name,
        order=ring.order,
        group_order=instance.group.order,
        unital=ring.is_unital,
        prime_radical=analysis.radicals.prime_radical.subgroup.describe(),
        jacobson_radical=analysis.radicals.jacobson_radical.subgroup.describe(),
        fixed_ring=analysis.fixed.carrier.describe(),
        trace_image=trace_image(analysis.ctx, ring.carrier).describe(),
        torsion={str(p): torsion_subgroup(ring, p).describe() for p in primefactors(analysis.n)},
        bad_primes=bad.primes,
        complements={
            str(p): None if bad.data[p].complement is None else f"order {bad.data[p].complement.order}"
            for p in bad.primes
        },
        trace_nilpotency={str(p): bad.data[p].d for p in bad.primes},
        averaging=None if analysis.averaging is None else analysis.averaging.complement.describe(),
        splitting=_splitting_outcome(analysis),
        proper_splitting={side.value: _proper_outcome(analysis, side) for side in (Side.LEFT, Side.RIGHT)},
        udim=udim,
        nilpotency_index=k if status == "found" else None,
        background=background_checks(analysis),
    )
