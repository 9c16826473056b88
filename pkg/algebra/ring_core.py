"""
Finite, possibly non-unital rings given by structure constants on Z/d1 + ... + Z/dk.

Elements are tuples of canonical coordinates. A `FiniteRing` owns the multiplication;
a `SubringView` is a multiplicatively closed subgroup of a parent ring and supports the
same operations, so radicals, ideals and modules work on fixed rings without copying.
"""
import itertools
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from algebra.errors import IllDefined, NonAssociative, NotUnital, RingError, ValidationError, WrongSide
from algebra.lattice import Rows, hermite_rows, lattice_coefficients, smith_form

logger = logging.getLogger(__name__)

Elem = Tuple[int, ...]

PRODUCT_CACHE_LIMIT = 4096
IDENTITY_SCAN_LIMIT = 4096


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"
    TWOSIDED = "twosided"

    @property
    def acts_left(self) -> bool:
        return self in (Side.LEFT, Side.TWOSIDED)

    @property
    def acts_right(self) -> bool:
        return self in (Side.RIGHT, Side.TWOSIDED)


def format_element(x: Elem) -> str:
    return "(" + ",".join(str(c) for c in x) + ")"


@dataclass(frozen=True)
class AdditiveGroup:
    cyclic_orders: Tuple[int, ...]

    def __post_init__(self):
        if any(d < 2 for d in self.cyclic_orders):
            raise RingError(f"cyclic orders must be >= 2, got {list(self.cyclic_orders)}")

    @property
    def rank(self) -> int:
        return len(self.cyclic_orders)

    @property
    def order(self) -> int:
        return math.prod(self.cyclic_orders)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.cyclic_orders) if self.cyclic_orders else 1

    @property
    def zero(self) -> Elem:
        return (0,) * self.rank

    def reduce(self, v: Iterable[int]) -> Elem:
        return tuple(c % d for c, d in zip(v, self.cyclic_orders))

    def add(self, x: Elem, y: Elem) -> Elem:
        return tuple((a + b) % d for a, b, d in zip(x, y, self.cyclic_orders))

    def neg(self, x: Elem) -> Elem:
        return tuple(-a % d for a, d in zip(x, self.cyclic_orders))

    def sub(self, x: Elem, y: Elem) -> Elem:
        return tuple((a - b) % d for a, b, d in zip(x, y, self.cyclic_orders))

    def scale(self, n: int, x: Elem) -> Elem:
        return tuple(n * a % d for a, d in zip(x, self.cyclic_orders))

    def total(self, xs: Iterable[Elem]) -> Elem:
        acc = [0] * self.rank
        for x in xs:
            for i, c in enumerate(x):
                acc[i] += c
        return self.reduce(acc)

    def basis(self) -> List[Elem]:
        return [tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)]

    def elements(self) -> Iterable[Elem]:
        """All elements, lexicographic on coordinates."""
        return itertools.product(*(range(d) for d in self.cyclic_orders))

    def additive_order(self, x: Elem) -> int:
        return math.lcm(*(d // math.gcd(d, c) for c, d in zip(x, self.cyclic_orders))) if x else 1

    def span(self, vectors: Iterable[Sequence[int]]) -> "Subgroup":
        return Subgroup(self, hermite_rows(list(vectors), self.cyclic_orders))

    def whole(self) -> "Subgroup":
        return self.span(self.basis())

    def trivial(self) -> "Subgroup":
        return self.span([])


class Subgroup:
    """Additive subgroup kept as canonical Hermite rows of its preimage lattice."""

    __slots__ = ("group", "rows", "_elements")

    def __init__(self, group: AdditiveGroup, rows: Rows):
        self.group = group
        self.rows = rows
        self._elements = None

    @property
    def gens(self) -> Tuple[Elem, ...]:
        orders = self.group.cyclic_orders
        return tuple(self.group.reduce(row) for c, row in enumerate(self.rows) if row[c] < orders[c])

    @property
    def order(self) -> int:
        return math.prod(d // row[c] for c, (d, row) in enumerate(zip(self.group.cyclic_orders, self.rows)))

    @property
    def is_zero(self) -> bool:
        return self.order == 1

    def contains(self, x: Elem) -> bool:
        return lattice_coefficients(self.rows, self.group.cyclic_orders, x) is not None

    __contains__ = contains

    def elements(self) -> List[Elem]:
        """Members in lexicographic order."""
        if self._elements is None:
            orders = self.group.cyclic_orders
            ranges = [range(d // row[c]) for c, (d, row) in enumerate(zip(orders, self.rows))]
            found = set()
            for ts in itertools.product(*ranges):
                acc = [0] * self.group.rank
                for t, row in zip(ts, self.rows):
                    if t:
                        for j, r in enumerate(row):
                            acc[j] += t * r
                found.add(self.group.reduce(acc))
            self._elements = sorted(found)
        return self._elements

    def __add__(self, other: "Subgroup") -> "Subgroup":
        return self.group.span(self.gens + other.gens)

    def intersection(self, other: "Subgroup") -> "Subgroup":
        small, big = (self, other) if self.order <= other.order else (other, self)
        return self.group.span(x for x in small.elements() if big.contains(x))

    def issubset(self, other: "Subgroup") -> bool:
        return all(other.contains(g) for g in self.gens)

    __le__ = issubset

    def scaled(self, n: int) -> "Subgroup":
        return self.group.span(self.group.scale(n, g) for g in self.gens)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and self.rows == other.rows and self.group == other.group

    def __hash__(self) -> int:
        return hash((self.group.cyclic_orders, self.rows))

    def describe(self, limit: int = 16) -> str:
        if self.order <= limit:
            return "{" + ", ".join(format_element(x) for x in self.elements()) + "}"
        return f"<order {self.order}, gens {', '.join(format_element(g) for g in self.gens)}>"

    def __repr__(self) -> str:
        return f"Subgroup{self.describe()}"


class RingLike:
    """Operations shared by whole rings and subring views."""

    name: str

    @property
    def parent(self) -> "FiniteRing":
        raise NotImplementedError

    @property
    def carrier(self) -> Subgroup:
        raise NotImplementedError

    @property
    def additive(self) -> AdditiveGroup:
        return self.parent.additive

    @property
    def order(self) -> int:
        return self.carrier.order

    @property
    def zero(self) -> Elem:
        return self.additive.zero

    def generators(self) -> Tuple[Elem, ...]:
        return self.carrier.gens

    def elements(self) -> List[Elem]:
        return self.carrier.elements()

    def contains(self, x: Elem) -> bool:
        return self.carrier.contains(x)

    def mul(self, x: Elem, y: Elem) -> Elem:
        return self.parent.mul(x, y)

    def add(self, x: Elem, y: Elem) -> Elem:
        return self.additive.add(x, y)

    def span(self, vectors: Iterable[Sequence[int]]) -> Subgroup:
        return self.additive.span(vectors)

    def product(self, x: Subgroup, y: Subgroup) -> Subgroup:
        """Additive span of all products xy, computed on generators by bilinearity."""
        return self.span(self.mul(a, b) for a in x.gens for b in y.gens)

    def power(self, x: Subgroup, k: int) -> Subgroup:
        result = x
        for _ in range(k - 1):
            result = self.product(result, x)
            if result.is_zero:
                break
        return result

    def pow_elem(self, x: Elem, k: int) -> Elem:
        result = x
        for _ in range(k - 1):
            result = self.mul(result, x)
        return result

    @property
    def identity(self) -> Optional[Elem]:
        raise NotImplementedError

    @property
    def is_unital(self) -> bool:
        return self.identity is not None

    def _scan_identity(self) -> Optional[Elem]:
        gens = self.generators()
        if not gens:
            return self.zero
        if self.order > IDENTITY_SCAN_LIMIT:
            return None
        for u in self.elements():
            if all(self.mul(u, g) == g and self.mul(g, u) == g for g in gens):
                return u
        return None

    def whole(self) -> Subgroup:
        return self.carrier


class FiniteRing(RingLike):
    def __init__(self, name: str, additive: AdditiveGroup, table, identity: Optional[Elem] = None):
        self.name = name
        self._additive = additive
        self.table: Tuple[Tuple[Elem, ...], ...] = tuple(tuple(tuple(c) for c in row) for row in table)
        self._identity = identity
        self._carrier = additive.whole()
        self._products: Dict[Tuple[Elem, Elem], Elem] = {}
        self._cache_products = additive.order <= PRODUCT_CACHE_LIMIT

    @property
    def parent(self) -> "FiniteRing":
        return self

    @property
    def carrier(self) -> Subgroup:
        return self._carrier

    @property
    def additive(self) -> AdditiveGroup:
        return self._additive

    @property
    def orders(self) -> Tuple[int, ...]:
        return self._additive.cyclic_orders

    @property
    def identity(self) -> Optional[Elem]:
        return self._identity

    def mul(self, x: Elem, y: Elem) -> Elem:
        if self._cache_products:
            key = (x, y)
            hit = self._products.get(key)
            if hit is not None:
                return hit
        k = self._additive.rank
        acc = [0] * k
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.table[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                prod = row[j]
                for t in range(k):
                    if prod[t]:
                        acc[t] += c * prod[t]
        result = self._additive.reduce(acc)
        if self._cache_products:
            self._products[(x, y)] = result
        return result

    def __repr__(self) -> str:
        return f"FiniteRing({self.name!r}, orders={list(self.orders)})"


class SubringView(RingLike):
    def __init__(self, parent: FiniteRing, carrier: Subgroup, name: str = ""):
        self._parent = parent
        self._carrier = carrier
        self.name = name or f"subring of {parent.name}"
        self._identity_checked = False
        self._identity = None

    @classmethod
    def of(cls, parent: FiniteRing, carrier: Subgroup, name: str = "") -> "SubringView":
        for a in carrier.gens:
            for b in carrier.gens:
                if not carrier.contains(parent.mul(a, b)):
                    raise RingError(f"{carrier.describe()} is not closed under multiplication")
        return cls(parent, carrier, name)

    @property
    def parent(self) -> FiniteRing:
        return self._parent

    @property
    def carrier(self) -> Subgroup:
        return self._carrier

    @property
    def identity(self) -> Optional[Elem]:
        if not self._identity_checked:
            self._identity = self._scan_identity()
            self._identity_checked = True
        return self._identity

    def __repr__(self) -> str:
        return f"SubringView({self.name!r}, {self._carrier.describe()})"


@dataclass(frozen=True, eq=False)
class Ideal:
    ring: RingLike
    side: Side
    subgroup: Subgroup

    @property
    def gens(self) -> Tuple[Elem, ...]:
        return self.subgroup.gens

    @property
    def order(self) -> int:
        return self.subgroup.order

    @property
    def is_zero(self) -> bool:
        return self.subgroup.is_zero

    def elements(self) -> List[Elem]:
        return self.subgroup.elements()

    def contains(self, x: Elem) -> bool:
        return self.subgroup.contains(x)

    def __eq__(self, other) -> bool:
        return isinstance(other, Ideal) and self.side == other.side and self.subgroup == other.subgroup

    def __hash__(self) -> int:
        return hash((self.side, self.subgroup))

    def __repr__(self) -> str:
        return f"Ideal[{self.side.value}]{self.subgroup.describe()}"


@dataclass(frozen=True)
class AdditiveMap:
    """Additive map given by the images of the source generators e_i."""

    source: AdditiveGroup
    target: AdditiveGroup
    images: Tuple[Elem, ...]

    def __call__(self, x: Elem) -> Elem:
        acc = [0] * self.target.rank
        for c, img in zip(x, self.images):
            if c:
                for t, v in enumerate(img):
                    acc[t] += c * v
        return self.target.reduce(acc)

    def image(self, subgroup: Subgroup) -> Subgroup:
        return self.target.span(self(g) for g in subgroup.gens)


@dataclass(frozen=True)
class Quotient:
    ring: FiniteRing
    projection: AdditiveMap
    lifts: Tuple[Elem, ...] = field(default=())


def _check_table_shape(orders: Sequence[int], table) -> None:
    k = len(orders)
    if len(table) != k or any(len(row) != k for row in table):
        raise ValidationError(f"multiplication table must be {k}x{k}")
    for i, row in enumerate(table):
        for j, entry in enumerate(row):
            if len(entry) != k:
                raise ValidationError(f"product e{i + 1}e{j + 1} must have {k} coordinates", witness=(i, j))


def validate_ring(name: str, orders: Sequence[int], table, identity: Optional[Sequence[int]] = None,
                  detect_identity: bool = True) -> FiniteRing:
    """Build a ring from structure constants, checking well-definedness and associativity."""
    additive = AdditiveGroup(tuple(orders))
    _check_table_shape(additive.cyclic_orders, table)
    reduced = [[additive.reduce(entry) for entry in row] for row in table]
    for i, di in enumerate(additive.cyclic_orders):
        for j, dj in enumerate(additive.cyclic_orders):
            if any(additive.scale(di, reduced[i][j])) or any(additive.scale(dj, reduced[i][j])):
                raise IllDefined(i, j)
    ring = FiniteRing(name, additive, reduced)
    basis = additive.basis()
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            ab = reduced[i][j]
            for l, c in enumerate(basis):
                if ring.mul(ab, c) != ring.mul(a, reduced[j][l]):
                    raise NonAssociative(i, j, l)
    if identity is not None:
        unit = additive.reduce(identity)
        if any(ring.mul(unit, g) != g or ring.mul(g, unit) != g for g in basis):
            raise ValidationError(f"{format_element(unit)} is not a two-sided identity", witness=unit)
        ring._identity = unit
    elif detect_identity:
        ring._identity = ring._scan_identity()
    logger.debug(f"validated ring {name}: order {additive.order}, unital={ring.is_unital}")
    return ring


def _unit_table(k: int):
    return [[(0,) * k for _ in range(k)] for _ in range(k)]


def zero_mult_ring(additive: AdditiveGroup, name: str = "") -> FiniteRing:
    k = additive.rank
    return validate_ring(name or f"zero{list(additive.cyclic_orders)}", additive.cyclic_orders,
                         _unit_table(k), detect_identity=True)


def unitalize(ring: FiniteRing) -> FiniteRing:
    """Z/e + R with (m,x)(n,y) = (mn, my + nx + xy), e the additive exponent of R."""
    e = ring.additive.exponent
    k = ring.additive.rank
    if e == 1:
        return validate_ring(f"{ring.name}'", (), [], identity=())
    orders = (e,) + ring.orders
    table = _unit_table(k + 1)
    table[0][0] = (1,) + (0,) * k
    for i in range(k):
        gen = (0,) + tuple(int(i == j) for j in range(k))
        table[0][i + 1] = gen
        table[i + 1][0] = gen
        for j in range(k):
            table[i + 1][j + 1] = (0,) + ring.table[i][j]
    return validate_ring(f"{ring.name}'", orders, table, identity=(1,) + (0,) * k)


def embed_in_unitalization(x: Elem) -> Elem:
    return (0,) + tuple(x)


def direct_product(rings: Sequence[FiniteRing], name: str = "") -> FiniteRing:
    if not rings:
        raise RingError("direct product needs at least one factor")
    if len(rings) == 1:
        return rings[0]
    orders = tuple(d for r in rings for d in r.orders)
    k = len(orders)
    table = _unit_table(k)
    offset = 0
    for r in rings:
        kr = r.additive.rank
        for i in range(kr):
            for j in range(kr):
                entry = [0] * k
                entry[offset:offset + kr] = r.table[i][j]
                table[offset + i][offset + j] = tuple(entry)
        offset += kr
    identity = None
    if all(r.is_unital for r in rings):
        identity = tuple(c for r in rings for c in r.identity)
    return validate_ring(name or " x ".join(r.name for r in rings), orders, table, identity=identity,
                         detect_identity=False)


def matrix_ring(ring: FiniteRing, n: int, name: str = "") -> FiniteRing:
    """M_n(R) on generators E_ij (x) b_t, indexed ((i*n + j)*k + t)."""
    if not ring.is_unital:
        raise NotUnital(f"{ring.name} has no identity")
    if n < 1:
        raise RingError("matrix size must be >= 1")
    k = ring.additive.rank
    size = n * n * k
    orders = tuple(ring.orders[t] for _ in range(n * n) for t in range(k))
    table = _unit_table(size)
    for i, j, s in itertools.product(range(n), range(n), range(k)):
        for l, m, t in itertools.product(range(n), range(n), range(k)):
            if j != l:
                continue
            entry = [0] * size
            base = (i * n + m) * k
            entry[base:base + k] = ring.table[s][t]
            table[(i * n + j) * k + s][(l * n + m) * k + t] = tuple(entry)
    identity = [0] * size
    for i in range(n):
        base = (i * n + i) * k
        identity[base:base + k] = ring.identity
    return validate_ring(name or f"M{n}({ring.name})", orders, table, identity=identity, detect_identity=False)


def _cayley_identity(cayley: Sequence[Sequence[int]]) -> int:
    m = len(cayley)
    for e in range(m):
        if all(cayley[e][x] == x and cayley[x][e] == x for x in range(m)):
            return e
    raise RingError("Cayley table has no identity element")


def group_ring(ring: FiniteRing, cayley: Sequence[Sequence[int]], name: str = "") -> FiniteRing:
    """R[H] on generators h (x) b_t, indexed (h*k + t)."""
    if not ring.is_unital:
        raise NotUnital(f"{ring.name} has no identity")
    m = len(cayley)
    e = _cayley_identity(cayley)
    k = ring.additive.rank
    size = m * k
    orders = tuple(ring.orders[t] for _ in range(m) for t in range(k))
    table = _unit_table(size)
    for h, s in itertools.product(range(m), range(k)):
        for g, t in itertools.product(range(m), range(k)):
            entry = [0] * size
            base = cayley[h][g] * k
            entry[base:base + k] = ring.table[s][t]
            table[h * k + s][g * k + t] = tuple(entry)
    identity = [0] * size
    identity[e * k:e * k + k] = ring.identity
    return validate_ring(name or f"{ring.name}[H{m}]", orders, table, identity=identity, detect_identity=False)


def cyclic_cayley(m: int) -> List[List[int]]:
    return [[(a + b) % m for b in range(m)] for a in range(m)]


def generated_ideal(ring: RingLike, gens: Iterable[Elem], side: Side = Side.TWOSIDED) -> Ideal:
    """Smallest sided ideal containing gens (closure under R', so gens are always inside)."""
    side = Side(side)
    current = ring.span(gens)
    actors = ring.generators()
    while True:
        new = list(current.gens)
        for s in current.gens:
            for a in actors:
                if side.acts_left:
                    new.append(ring.mul(a, s))
                if side.acts_right:
                    new.append(ring.mul(s, a))
        grown = ring.span(new)
        if grown == current:
            return Ideal(ring, side, current)
        current = grown


def is_ideal(ring: RingLike, subgroup: Subgroup, side: Side) -> bool:
    side = Side(side)
    if not subgroup.issubset(ring.carrier):
        return False
    for s in subgroup.gens:
        for a in ring.generators():
            if side.acts_left and not subgroup.contains(ring.mul(a, s)):
                return False
            if side.acts_right and not subgroup.contains(ring.mul(s, a)):
                return False
    return True


def presentation_of_quotient(subgroup: Subgroup):
    """(orders, projection images, lifts) describing A / subgroup as a sum of cyclic groups."""
    group = subgroup.group
    diag, v, v_inv = smith_form([list(row) for row in subgroup.rows])
    kept = [i for i, s in enumerate(diag) if s > 1]
    orders = tuple(diag[i] for i in kept)
    images = tuple(tuple(v[j][i] % diag[i] for i in kept) for j in range(group.rank))
    lifts = tuple(group.reduce(v_inv[i]) for i in kept)
    return orders, images, lifts


def quotient_by_ideal(ring: FiniteRing, ideal: Ideal, name: str = "") -> Quotient:
    if ideal.side != Side.TWOSIDED:
        raise WrongSide(f"quotients need a two-sided ideal, got {ideal.side.value}")
    orders, images, lifts = presentation_of_quotient(ideal.subgroup)
    target = AdditiveGroup(orders)
    projection = AdditiveMap(ring.additive, target, images)
    table = [[projection(ring.mul(a, b)) for b in lifts] for a in lifts]
    identity = projection(ring.identity) if ring.is_unital else None
    quotient = validate_ring(name or f"{ring.name}/I", orders, table, identity=identity,
                             detect_identity=identity is None)
    basis = ring.additive.basis()
    if target.span(images) != target.whole():
        raise RingError("quotient projection is not surjective")
    for a in basis:
        for b in basis:
            if projection(ring.mul(a, b)) != quotient.mul(projection(a), projection(b)):
                raise RingError("quotient projection is not multiplicative")
    return Quotient(quotient, projection, lifts)


def unit_inverse(ring: RingLike, u: Elem) -> Optional[Elem]:
    """Two-sided inverse of u found on its power sequence, or None when u is not a unit."""
    one = ring.identity
    if one is None:
        return None
    power = u
    previous = one
    for _ in range(ring.order + 1):
        if power == one:
            return previous
        previous = power
        power = ring.mul(power, u)
    return None
