"""
Finite groups of ring automorphisms, stored as explicit element sets.

A group acts on a domain (a whole ring or a subring view of it). Elements are automorphisms
of the parent ring; two of them are identified when they agree on the domain, which is how
induced actions such as G/N on R^N are represented.
"""
import logging
import math
from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy import isprime, primefactors

from algebra.errors import (
    GroupTooLarge,
    InvalidAutomorphism,
    NotDividing,
    NotFixedRing,
    NotNormal,
    NotPGroup,
    NotPModule,
    RingError,
)
from algebra.ring_core import AdditiveMap, Elem, FiniteRing, Quotient, RingLike, Subgroup, SubringView, format_element

logger = logging.getLogger(__name__)

DEFAULT_GROUP_CAP = 720


class RingAutomorphism:
    def __init__(self, ring: FiniteRing, images: Sequence[Elem], name: str = ""):
        self.ring = ring
        self.images: Tuple[Elem, ...] = tuple(ring.additive.reduce(img) for img in images)
        self.name = name
        self._map = AdditiveMap(ring.additive, ring.additive, self.images)

    def __call__(self, x: Elem) -> Elem:
        return self._map(x)

    def compose(self, other: "RingAutomorphism") -> "RingAutomorphism":
        """self after other."""
        return RingAutomorphism(self.ring, [self(img) for img in other.images])

    def image(self, subgroup: Subgroup) -> Subgroup:
        return self._map.image(subgroup)

    @classmethod
    def identity(cls, ring: FiniteRing) -> "RingAutomorphism":
        return cls(ring, ring.additive.basis(), name="id")

    def __eq__(self, other) -> bool:
        return isinstance(other, RingAutomorphism) and self.ring is other.ring and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        label = self.name or "aut"
        return f"{label}[" + " ".join(format_element(x) for x in self.images) + "]"


def validate_automorphism(ring: FiniteRing, images: Sequence[Sequence[int]], name: str = "") -> RingAutomorphism:
    k = ring.additive.rank
    if len(images) != k:
        raise InvalidAutomorphism(f"{name or 'automorphism'} needs {k} generator images, got {len(images)}")
    sigma = RingAutomorphism(ring, [tuple(img) for img in images], name=name)
    for i, (d, img) in enumerate(zip(ring.orders, sigma.images)):
        if any(ring.additive.scale(d, img)):
            raise InvalidAutomorphism(f"{name}: image of e{i + 1} is not killed by {d}")
    basis = ring.additive.basis()
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            if sigma(ring.table[i][j]) != ring.mul(sigma.images[i], sigma.images[j]):
                raise InvalidAutomorphism(f"{name}: does not preserve e{i + 1}e{j + 1}")
    if ring.additive.span(sigma.images).order != ring.order:
        raise InvalidAutomorphism(f"{name}: not bijective")
    return sigma


class AutomorphismGroup:
    def __init__(self, domain: RingLike, elements: Iterable[RingAutomorphism], name: str = ""):
        self.domain = domain
        self.name = name
        by_key: Dict[Tuple[Elem, ...], RingAutomorphism] = {}
        for g in elements:
            by_key.setdefault(self.key(g), g)
        self._by_key = dict(sorted(by_key.items()))
        self.elements: List[RingAutomorphism] = list(self._by_key.values())
        identity_key = tuple(domain.generators())
        if identity_key not in self._by_key:
            raise RingError(f"group {name!r} does not contain the identity")
        self._identity_key = identity_key

    @property
    def ring(self) -> FiniteRing:
        return self.domain.parent

    @property
    def order(self) -> int:
        return len(self.elements)

    def key(self, g: RingAutomorphism) -> Tuple[Elem, ...]:
        return tuple(g(s) for s in self.domain.generators())

    def contains(self, g: RingAutomorphism) -> bool:
        return self.key(g) in self._by_key

    def canonical(self, g: RingAutomorphism) -> RingAutomorphism:
        return self._by_key[self.key(g)]

    def is_identity(self, g: RingAutomorphism) -> bool:
        return self.key(g) == self._identity_key

    def element_order(self, g: RingAutomorphism) -> int:
        power = g
        for k in range(1, self.order + 1):
            if self.is_identity(power):
                return k
            power = g.compose(power)
        raise RingError("element order exceeds the group order")

    def inverse(self, g: RingAutomorphism) -> RingAutomorphism:
        k = self.element_order(g)
        result = RingAutomorphism.identity(self.ring)
        for _ in range(k - 1):
            result = g.compose(result)
        return self.canonical(result)

    def is_subgroup_of(self, other: "AutomorphismGroup") -> bool:
        return all(other.contains(g) for g in self.elements)

    def is_normal_in(self, other: "AutomorphismGroup") -> bool:
        if not self.is_subgroup_of(other):
            return False
        for g in other.elements:
            g_inv = other.inverse(g)
            for h in self.elements:
                if not self.contains(g.compose(h).compose(g_inv)):
                    return False
        return True

    def __repr__(self) -> str:
        return f"AutomorphismGroup({self.name!r}, order={self.order})"


def close_group(ring: FiniteRing, gens: Iterable[RingAutomorphism], domain: Optional[RingLike] = None,
                cap: int = DEFAULT_GROUP_CAP, name: str = "") -> AutomorphismGroup:
    """Subgroup generated by gens, by breadth-first closure under composition."""
    domain = domain or ring
    gens = list(gens)
    identity = RingAutomorphism.identity(ring)

    def key(g):
        return tuple(g(s) for s in domain.generators())

    seen = {key(identity): identity}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = g.compose(x)
            k = key(y)
            if k not in seen:
                seen[k] = y
                if len(seen) > cap:
                    raise GroupTooLarge(cap)
                queue.append(y)
    group = AutomorphismGroup(domain, seen.values(), name=name)
    logger.debug(f"closed group {name!r} on {domain.name}: order {group.order}")
    return group


def fixed_subgroup(group: AutomorphismGroup) -> Subgroup:
    domain = group.domain
    movers = [g for g in group.elements if not group.is_identity(g)]
    return domain.span(x for x in domain.elements() if all(g(x) == x for g in movers))


def p_part(n: int, p: int) -> Tuple[int, int]:
    """(s, m) with n = p^s * m and p not dividing m."""
    s = 0
    while n % p == 0:
        n //= p
        s += 1
    return s, n


def p_normal_complement(group: AutomorphismGroup, p: int) -> Optional[AutomorphismGroup]:
    """N(p), found by the element-order census, or None when no p-normal complement exists."""
    n = group.order
    if n % p:
        raise NotDividing(f"{p} does not divide |G| = {n}")
    _, m = p_part(n, p)
    members = [g for g in group.elements if group.element_order(g) % p]
    if len(members) != m:
        return None
    complement = AutomorphismGroup(group.domain, members, name=f"N({p})")
    for a in members:
        for b in members:
            if not complement.contains(a.compose(b)):
                return None
    if not complement.is_normal_in(group):
        return None
    return complement


@dataclass
class QuotientAction:
    """The action of G/N on a ring fixed by N."""

    group: AutomorphismGroup
    representatives: List[RingAutomorphism]
    coset_index: Dict[Tuple[Elem, ...], int]
    quotient_order: int

    def coset_of(self, g: RingAutomorphism, parent: AutomorphismGroup) -> int:
        return self.coset_index[parent.key(g)]


def quotient_action(group: AutomorphismGroup, normal: AutomorphismGroup, fixed: SubringView) -> QuotientAction:
    if not normal.is_normal_in(group):
        raise NotNormal(f"{normal.name or 'N'} is not a normal subgroup of {group.name or 'G'}")
    if fixed.carrier != fixed_subgroup(normal):
        raise NotFixedRing("the ring given is not the fixed ring of the normal subgroup")
    coset_index: Dict[Tuple[Elem, ...], int] = {}
    representatives: List[RingAutomorphism] = []
    for g in group.elements:
        if group.key(g) in coset_index:
            continue
        index = len(representatives)
        representatives.append(g)
        reference = tuple(g(s) for s in fixed.generators())
        for h in normal.elements:
            member = g.compose(h)
            coset_index[group.key(member)] = index
            if tuple(member(s) for s in fixed.generators()) != reference:
                raise NotFixedRing("coset members act differently on the fixed ring")
    induced = AutomorphismGroup(fixed, representatives, name=f"{group.name}/{normal.name}")
    return QuotientAction(induced, representatives, coset_index, len(representatives))


def h_constant(n: int) -> int:
    """prod_{i=1}^{n} (C(n, i) + 1), the nilpotency constant attached to a group of order n."""
    if n < 1:
        raise RingError("group order must be >= 1")
    return math.prod(math.comb(n, i) + 1 for i in range(1, n + 1))


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def p_group_fixed_point(group: AutomorphismGroup, module: Subgroup, p: Optional[int] = None) -> Optional[Elem]:
    """A nonzero element of `module` fixed by the p-group, or None when the module is zero."""
    n = group.order
    if p is None:
        primes = primefactors(n)
        if len(primes) != 1:
            raise NotPGroup(f"|P| = {n} is not a power of a single prime")
        p = primes[0]
    elif not isprime(p) or not _is_power_of(n, p):
        raise NotPGroup(f"|P| = {n} is not a power of {p}")
    if not _is_power_of(module.order, p):
        raise NotPModule(f"|V| = {module.order} is not a power of {p}")
    if module.is_zero:
        return None
    for g in group.elements:
        if not g.image(module).issubset(module):
            raise NotPModule("module is not stable under the group")
    movers = [g for g in group.elements if not group.is_identity(g)]
    for v in module.elements():
        if any(v) and all(g(v) == v for g in movers):
            return v
    raise RingError("p-group action without a nonzero fixed point")


def induced_group(group: AutomorphismGroup, quotient: Quotient, name: str = "") -> AutomorphismGroup:
    """The image of G in Aut(R/I) for a G-invariant ideal I."""
    ring = group.ring
    target = quotient.ring
    projection = quotient.projection
    induced = []
    for g in group.elements:
        images = [projection(g(lift)) for lift in quotient.lifts]
        g_bar = validate_automorphism(target, images, name=f"{g.name or 'g'}~")
        for x in ring.additive.basis():
            if projection(g(x)) != g_bar(projection(x)):
                raise RingError("ideal is not invariant under the group")
        induced.append(g_bar)
    if not induced:
        induced.append(RingAutomorphism.identity(target))
    return close_group(target, induced, cap=max(len(induced), 1), name=name or f"{group.name}~")
