"""
Radical and structure theory of finite rings.

The prime radical and the Jacobson radical are computed by two unrelated procedures
(nilpotent generated ideals against quasi-regularity) so that each checks the other.
"""
import logging
import random
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional

from algebra.errors import CapExceeded, RadicalDisagreement, RingError, SizeCap
from algebra.ring_core import Elem, Ideal, RingLike, Side, Subgroup, generated_ideal, is_ideal, unit_inverse

logger = logging.getLogger(__name__)

DEFAULT_NILPOTENCY_CAP = 64


def nilpotency_index(ring: RingLike, subgroup: Optional[Subgroup] = None,
                     cap: int = DEFAULT_NILPOTENCY_CAP) -> Optional[int]:
    """Least k with I^k = 0 (I defaults to R); None when the powers stabilise at a nonzero ideal."""
    base = ring.carrier if subgroup is None else subgroup
    power = base
    for k in range(1, cap + 1):
        if power.is_zero:
            return k
        grown = ring.product(power, base)
        if grown == power:
            return None
        power = grown
    raise CapExceeded(f"nilpotency index of {ring.name} exceeds {cap}")


def is_nilpotent_element(ring: RingLike, x: Elem) -> bool:
    power = x
    for _ in range(ring.order + 1):
        if not any(power):
            return True
        power = ring.mul(power, x)
    return False


def prime_radical(ring: RingLike, cap: int = DEFAULT_NILPOTENCY_CAP) -> Ideal:
    """The largest nilpotent ideal: elements whose generated two-sided ideal is nilpotent."""
    current = ring.span([])
    for x in ring.elements():
        if current.contains(x) or not is_nilpotent_element(ring, x):
            continue
        candidate = generated_ideal(ring, current.gens + (x,), Side.TWOSIDED).subgroup
        if nilpotency_index(ring, candidate, cap) is not None:
            current = candidate
    if not is_ideal(ring, current, Side.TWOSIDED):
        raise RingError(f"prime radical of {ring.name} is not an ideal")
    return Ideal(ring, Side.TWOSIDED, current)


class _QuasiRegularity:
    def __init__(self, ring: RingLike):
        self.ring = ring
        self.gens = ring.generators()
        self._memo: Dict[Elem, bool] = {}

    def left(self, y: Elem) -> bool:
        """y is left quasi-regular iff z + y + zy = 0 for some z, i.e. -y lies in {z + zy}."""
        if y not in self._memo:
            image = self.ring.span(self.ring.add(g, self.ring.mul(g, y)) for g in self.gens)
            self._memo[y] = image.contains(self.ring.additive.neg(y))
        return self._memo[y]


def jacobson_radical(ring: RingLike) -> Ideal:
    """x lies in rad(R) iff every element of the left ideal R'x is left quasi-regular."""
    qr = _QuasiRegularity(ring)
    members: List[Elem] = []
    current = ring.span([])
    for x in ring.elements():
        if current.contains(x):
            continue
        left = generated_ideal(ring, [x], Side.LEFT)
        if all(qr.left(y) for y in left.elements()):
            members.append(x)
            current = ring.span(members)
    return Ideal(ring, Side.TWOSIDED, current)


@dataclass
class RadicalProfile:
    prime_radical: Ideal
    jacobson_radical: Ideal
    nilpotency_index_of_rad: Optional[int]
    semiprime: bool
    semisimple_artinian: bool


def radical_profile(ring: RingLike, cap: int = DEFAULT_NILPOTENCY_CAP) -> RadicalProfile:
    prime = prime_radical(ring, cap)
    jacobson = jacobson_radical(ring)
    if prime.subgroup != jacobson.subgroup:
        raise RadicalDisagreement(
            f"{ring.name}: prime radical {prime.subgroup.describe()} != Jacobson radical {jacobson.subgroup.describe()}"
        )
    index = nilpotency_index(ring, jacobson.subgroup, cap)
    return RadicalProfile(prime, jacobson, index, prime.is_zero, jacobson.is_zero)


def is_semiprime(ring: RingLike) -> bool:
    return prime_radical(ring).is_zero


def is_semisimple_artinian(ring: RingLike) -> bool:
    return jacobson_radical(ring).is_zero


@dataclass
class UdimCertificate:
    value: int
    side: Side
    witness: List[Ideal] = field(default_factory=list)
    maximality: str = "exhaustive"

    @property
    def capped(self) -> bool:
        return self.maximality != "exhaustive"


def _minimal_principal(ring: RingLike, side: Side, elements: Iterable[Elem]) -> List[Subgroup]:
    principal = {}
    for x in elements:
        if any(x):
            sub = generated_ideal(ring, [x], side).subgroup
            principal.setdefault(sub, sub)
    ordered = sorted(principal, key=lambda s: (s.order, s.rows))
    minimal = []
    for sub in ordered:
        if not any(m.issubset(sub) for m in minimal):
            minimal.append(sub)
    return minimal


def uniform_dimension(ring: RingLike, side: Side = Side.LEFT, cap: int = 256, samples: int = 32,
                      seed: int = 0) -> UdimCertificate:
    """
    Size of a maximal direct sum of nonzero sided ideals.

    A maximal independent family of minimal ideals spans the socle, which is essential, so its
    size is the uniform dimension; the family is exact once every minimal ideal has been seen.
    """
    side = Side(side)
    if ring.order <= cap:
        elements = ring.elements()
        maximality = "exhaustive"
    else:
        rng = random.Random(seed)
        elements = [rng.choice(ring.elements()) for _ in range(samples)]
        maximality = "capped"
    total = ring.span([])
    witness: List[Ideal] = []
    for minimal in _minimal_principal(ring, side, elements):
        if minimal.intersection(total).is_zero:
            witness.append(Ideal(ring, side, minimal))
            total = total + minimal
    certificate = UdimCertificate(len(witness), side, witness, maximality)
    _verify_udim(ring, certificate)
    if maximality == "exhaustive" and is_semisimple_artinian(ring) and total != ring.carrier:
        raise RingError(f"{ring.name}: minimal {side.value} ideals do not decompose the semisimple ring")
    return certificate


def _verify_udim(ring: RingLike, certificate: UdimCertificate) -> None:
    running = ring.span([])
    for ideal in certificate.witness:
        if ideal.is_zero or not ideal.subgroup.intersection(running).is_zero:
            raise RingError("uniform dimension witness is not a direct sum of nonzero ideals")
        running = running + ideal.subgroup


@dataclass
class QuotientRingStatus:
    regular: List[Elem]
    units: List[Elem]
    unital: bool
    classical_quotient: str
    goldie: str = "trivially-Goldie"

    @property
    def regular_are_units(self) -> bool:
        return self.regular == self.units

    @property
    def regular_non_units(self) -> List[Elem]:
        units = set(self.units)
        return [x for x in self.regular if x not in units]


def regular_elements_quotient(ring: RingLike) -> QuotientRingStatus:
    """C_R and the status of the classical quotient ring of a finite ring."""
    gens = ring.generators()
    regular = []
    for x in ring.elements():
        left = ring.span(ring.mul(x, g) for g in gens)
        right = ring.span(ring.mul(g, x) for g in gens)
        if left == ring.carrier and right == ring.carrier:
            regular.append(x)
    if not ring.is_unital:
        return QuotientRingStatus(regular, [], False, "degenerate-undefined")
    units = [x for x in ring.elements() if unit_inverse(ring, x) is not None]
    if regular != units:
        logger.warning(f"{ring.name}: regular elements and units differ")
        return QuotientRingStatus(regular, units, True, "regular-not-units")
    return QuotientRingStatus(regular, units, True, "Q = R")


def left_annihilator(ring: RingLike, xs: Iterable[Elem]) -> Ideal:
    xs = list(xs)
    killed = ring.span(r for r in ring.elements() if all(not any(ring.mul(r, x)) for x in xs))
    if not is_ideal(ring, killed, Side.LEFT):
        raise RingError("left annihilator is not a left ideal")
    return Ideal(ring, Side.LEFT, killed)


@dataclass
class Module:
    """The sided module top/bottom over `ring`; both subgroups are stable under the action."""

    ring: RingLike
    side: Side
    top: Subgroup
    bottom: Subgroup

    @property
    def order(self) -> int:
        return self.top.order // self.bottom.order

    def submodule(self, gens: Iterable[Elem]) -> Subgroup:
        side = Side(self.side)
        current = self.bottom + self.ring.span(gens)
        actors = self.ring.generators()
        while True:
            new = list(current.gens)
            for s in current.gens:
                for a in actors:
                    if side.acts_left:
                        new.append(self.ring.mul(a, s))
                    if side.acts_right:
                        new.append(self.ring.mul(s, a))
            grown = self.ring.span(new)
            if grown == current:
                return current
            current = grown


def module_length(module: Module, cap: int = 4096) -> int:
    """Composition length, splitting off the least (by order, then rows) minimal submodule each step."""
    if module.top.order > cap:
        raise SizeCap(f"module of order {module.top.order} exceeds {cap}")
    if not module.bottom.issubset(module.top):
        raise RingError("module bottom is not inside its top")
    length = 0
    current = module.bottom
    while current != module.top:
        step = Module(module.ring, module.side, module.top, current)
        candidates = {step.submodule([x]) for x in module.top.elements() if not current.contains(x)}
        current = min(candidates, key=lambda s: (s.order, s.rows))
        length += 1
    return length
