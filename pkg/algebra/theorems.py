"""
Theorem checkers: each statement is evaluated on a concrete (ring, group) instance, hypothesis by
hypothesis and clause by clause, and the instance is classified as verified, vacuous,
counterexample or skipped(cap).
"""
import logging
import math
from functools import cached_property
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Set, Tuple

from algebra.errors import CapExceeded, RadicalDisagreement, RingError, SizeCap
from algebra.groups import AutomorphismGroup, h_constant, induced_group
from algebra.invariants import (
    GActionContext,
    SplittingData,
    averaging_idempotent,
    bad_primes,
    extension,
    invariant_ideals,
    is_invariant,
    is_proper_splitting,
    iter_splittings,
    least_nilpotent_power,
    make_context,
    proper_splitting_group,
    sided_ideals,
    splitting_search,
    torsion_subgroup,
    trace_image,
)
from algebra.radicals import (
    Module,
    module_length,
    nilpotency_index,
    prime_radical,
    radical_profile,
    regular_elements_quotient,
    uniform_dimension,
)
from algebra.ring_core import FiniteRing, RingLike, Side, Subgroup, SubringView, format_element, quotient_by_ideal
from models.report_models import (
    Caps,
    ClauseResult,
    ConclusionResult,
    HypothesisResult,
    Status,
    TheoremId,
    TheoremReport,
    Verdict,
)

logger = logging.getLogger(__name__)

NOTE_BAD_PRIMES = "'B(R,G) != 0' is read as B(R,G) nonempty"
NOTE_FINITE_SEMIPRIME = (
    "finite semiprime ring with a bad prime p: the central idempotent of the p-primary component is "
    "G-invariant and p-torsion, so R^G is never |G|-torsion free here"
)
NOTE_FINITE_QUOTIENTS = (
    "finite rings: regular elements of a unital ring are units, so Q_l(R) = Q_r(R) = R and every finite "
    "ring is Goldie"
)
NOTE_EXTENSION = "J^e is the one-sided ideal generated by J, which contains J"
NOTE_LENGTH_READING = "item 3 is evaluated as l_{R^G}(R^G/R^G∩I) <= l_R(R/I)"
NOTE_FINITE_CHAINS = "item 4 holds for every finite ring: all modules are Artinian and Noetherian"
NOTE_DOMINATED = "bound clause proved through a nilpotency index below the iteration cap, which implies it"
NOTE_RAD_CONVENTION = "rad(R) of a ring without identity uses left quasi-regularity of R'x"

SIDES = (Side.LEFT, Side.RIGHT)


def _h_capped(n: int, limit: int) -> int:
    """min(h(n), limit)."""
    if n >= limit.bit_length():
        return limit
    return min(h_constant(n), limit)


def _power_capped(base: int, exponent: int, limit: int) -> int:
    """min(base ** exponent, limit) for base >= 2."""
    if exponent >= limit.bit_length():
        return limit
    return min(base ** exponent, limit)


def _index(ring: RingLike, cap: int, subgroup: Optional[Subgroup] = None) -> Tuple[Optional[int], str]:
    try:
        k = nilpotency_index(ring, subgroup, cap)
    except CapExceeded:
        return None, "capped"
    return k, "found" if k is not None else "not-nilpotent"


def _describe(x) -> Optional[str]:
    if x is None:
        return None
    if isinstance(x, Subgroup):
        return x.describe()
    if isinstance(x, tuple):
        return format_element(x)
    return str(x)


def _first_difference(a: Subgroup, b: Subgroup) -> Optional[str]:
    for x in a.elements():
        if not b.contains(x):
            return f"{format_element(x)} only on the left side"
    for x in b.elements():
        if not a.contains(x):
            return f"{format_element(x)} only on the right side"
    return None


class Analysis:
    """Lazily computed invariants of one instance, shared by every checker."""

    def __init__(self, ring: FiniteRing, group: AutomorphismGroup, caps: Optional[Caps] = None, seed: int = 0):
        self.ring = ring
        self.group = group
        self.caps = caps or Caps()
        self.seed = seed
        self._proper: Dict[Side, object] = {}
        self._udim: Dict[Tuple[str, Side], object] = {}
        self._invariant: Dict[Side, object] = {}

    @property
    def name(self) -> str:
        return f"{self.ring.name}/{self.group.name}"

    @cached_property
    def ctx(self) -> GActionContext:
        return make_context(self.ring, self.group)

    @property
    def fixed(self) -> SubringView:
        return self.ctx.fixed

    @property
    def n(self) -> int:
        return self.group.order

    @cached_property
    def radicals(self):
        return radical_profile(self.ring, self.caps.nilpotency)

    @cached_property
    def fixed_radicals(self):
        return radical_profile(self.fixed, self.caps.nilpotency)

    @cached_property
    def bad(self):
        return bad_primes(self.ctx, self.caps.d_search)

    @cached_property
    def torsion_free(self) -> bool:
        return torsion_subgroup(self.ring, self.n).is_zero

    def fixed_torsion(self, m: int) -> Subgroup:
        return torsion_subgroup(self.fixed, m)

    @cached_property
    def inverse_in_ring(self) -> bool:
        """|G|^-1 lies in R."""
        return self.ring.is_unital and math.gcd(self.n, self.ring.additive.exponent) == 1

    @cached_property
    def averaging(self) -> Optional[SplittingData]:
        if not self.inverse_in_ring:
            return None
        return averaging_idempotent(self.ctx)

    @cached_property
    def splitting(self):
        return splitting_search(self.ctx, self.caps.splitting_budget)

    @cached_property
    def splittings(self) -> Tuple[List[SplittingData], bool]:
        found, complete = iter_splittings(self.ctx, self.caps.splitting_budget)
        if self.averaging is not None and all(s.complement != self.averaging.complement for s in found):
            found = [self.averaging] + found
        return found, complete

    def proper_group(self, side: Side):
        if side not in self._proper:
            self._proper[side] = proper_splitting_group(
                self.ctx, side, self.caps.splitting_budget, self.caps.ideal_scan, self.caps.samples, self.seed
            )
        return self._proper[side]

    def invariant(self, side: Side):
        if side not in self._invariant:
            self._invariant[side] = invariant_ideals(self.ctx, side, self.caps.ideal_scan, self.caps.samples,
                                                     self.seed)
        return self._invariant[side]

    def udim(self, which: str, side: Side):
        key = (which, side)
        if key not in self._udim:
            ring = self.ring if which == "ring" else self.fixed
            self._udim[key] = uniform_dimension(ring, side, self.caps.udim, self.caps.samples, self.seed)
        return self._udim[key]

    @cached_property
    def nilpotency(self) -> Tuple[Optional[int], str]:
        return _index(self.ring, self.caps.nilpotency)

    @cached_property
    def prime_quotient(self) -> Tuple["Analysis", object]:
        quotient = quotient_by_ideal(self.ring, self.radicals.prime_radical, name=f"{self.ring.name}/n")
        group = induced_group(self.group, quotient, name=f"{self.group.name}~")
        return Analysis(quotient.ring, group, self.caps, self.seed), quotient

    @cached_property
    def jacobson_quotient(self) -> Tuple["Analysis", object]:
        quotient = quotient_by_ideal(self.ring, self.radicals.jacobson_radical, name=f"{self.ring.name}/rad")
        group = induced_group(self.group, quotient, name=f"{self.group.name}~")
        return Analysis(quotient.ring, group, self.caps, self.seed), quotient

    def n2_conditions(self) -> Tuple[Optional[str], Optional[str]]:
        """Witnesses against conditions 1 and 2 of the semiprimeness transfer (None when they hold)."""
        missing = [p for p in self.bad.primes if self.bad.data[p].complement is None]
        first = f"no {missing[0]}-normal complement" if missing else None
        torsion = self.fixed_torsion(self.n)
        second = None if torsion.is_zero else f"|G|-torsion of R^G: {torsion.describe()}"
        return first, second

    def alternative_branch(self) -> Tuple[bool, Optional[str]]:
        """R is |G|-torsion free, or B(R,G) is nonempty and conditions 1 and 2 hold."""
        if self.torsion_free:
            return True, None
        if not self.bad.primes:
            return False, "B(R,G) is empty"
        first, second = self.n2_conditions()
        if first or second:
            return False, f"R has |G|-torsion and {first or second}"
        return True, None


class _Report:
    def __init__(self, theorem: TheoremId, analysis: Analysis, masked: Set[str]):
        self.theorem = theorem
        self.analysis = analysis
        self.masked = masked
        self.hypotheses: List[HypothesisResult] = []
        self.clauses: List[ClauseResult] = []
        self.notes: List[str] = []
        self.skipped = False

    def hypothesis(self, key: str, text: str, ok: Optional[bool], witness=None, status: Optional[Status] = None):
        if status is None:
            status = Status.CAPPED if ok is None else (Status.HOLDS if ok else Status.FAILS)
        self.hypotheses.append(HypothesisResult(
            key=key, text=text, status=status, witness=_describe(witness), masked=key in self.masked,
        ))

    def clause(self, text: str, ok: Optional[bool], witness=None, status: Optional[Status] = None):
        if status is None:
            status = Status.CAPPED if ok is None else (Status.HOLDS if ok else Status.FAILS)
        if status == Status.FAILS and witness is None:
            witness = text
        self.clauses.append(ClauseResult(text=text, status=status, witness=_describe(witness)))

    def note(self, text: str):
        if text not in self.notes:
            self.notes.append(text)

    def finish(self, conclusion_text: str) -> TheoremReport:
        statuses = [c.status for c in self.clauses]
        if Status.FAILS in statuses:
            status = Status.FAILS
        elif Status.CAPPED in statuses or not statuses:
            status = Status.CAPPED
        elif Status.DOMINATED in statuses:
            status = Status.DOMINATED
        else:
            status = Status.HOLDS
        witness = next((c.witness for c in self.clauses if c.status == Status.FAILS), None)
        active = [h for h in self.hypotheses if not h.masked]
        if any(h.status == Status.FAILS for h in active):
            verdict = Verdict.VACUOUS
        elif self.skipped or any(h.status == Status.CAPPED for h in active) or status == Status.CAPPED:
            verdict = Verdict.SKIPPED
        elif status == Status.FAILS:
            verdict = Verdict.COUNTEREXAMPLE
        else:
            verdict = Verdict.VERIFIED
        a = self.analysis
        return TheoremReport(
            theorem=self.theorem,
            ring=a.ring.name,
            group=a.group.name,
            hypotheses=self.hypotheses,
            conclusion=ConclusionResult(text=conclusion_text, status=status, witness=witness, clauses=self.clauses),
            verdict=verdict,
            caps=a.caps,
            seed=a.seed,
            notes=self.notes,
        )


def _nilpotency_bound_clause(r: _Report, text: str, k_status: Tuple[Optional[int], str], bound: int, limit: int,
                             witness_ring: str = "R"):
    """R^bound = 0 checked through the nilpotency index k: k <= bound (bound is min(true bound, limit))."""
    k, status = k_status
    if status == "capped":
        r.clause(text, None, f"nilpotency index of {witness_ring} exceeds the iteration cap")
    elif k is None:
        r.clause(text, False, f"{witness_ring} is not nilpotent: its powers stabilise at a nonzero ideal")
    elif k > bound:
        r.clause(text, False, f"nilpotency index {k} exceeds the bound {bound}")
    elif bound >= limit:
        r.clause(text, True, status=Status.DOMINATED)
        r.note(NOTE_DOMINATED)
    else:
        r.clause(text, True)


def _hyp_torsion_free(r: _Report, a: Analysis):
    witness = None if a.torsion_free else torsion_subgroup(a.ring, a.n)
    r.hypothesis("torsion-free", "R is |G|-torsion free", a.torsion_free, witness)


def _hyp_semiprime(r: _Report, a: Analysis):
    prime = a.radicals.prime_radical
    r.hypothesis("semiprime", "R is a semiprime ring", prime.is_zero, None if prime.is_zero else prime.subgroup)


def _hyp_n2(r: _Report, a: Analysis):
    r.hypothesis("bad-primes", "B(R,G) is nonempty", bool(a.bad.primes), None if a.bad.primes else "B(R,G) = {}")
    first, second = a.n2_conditions()
    r.hypothesis("1", "for every p in B(R,G), G has a p-normal complement N(p)", first is None, first)
    r.hypothesis("2", "R^G is |G|-torsion free", second is None, second)
    r.note(NOTE_BAD_PRIMES)
    if a.radicals.semiprime and a.bad.primes:
        r.note(NOTE_FINITE_SEMIPRIME)


def _hyp_unit(r: _Report, a: Analysis):
    witness = None
    if not a.ring.is_unital:
        witness = "R has no identity"
    elif not a.inverse_in_ring:
        witness = f"|G| = {a.n} is not invertible in characteristic {a.ring.additive.exponent}"
    r.hypothesis("unit", "|G|^-1 lies in R", a.inverse_in_ring, witness)


def _hyp_proper_group(r: _Report, a: Analysis):
    results = [a.proper_group(side) for side in SIDES]
    if any(res.splitting is not None for res in results):
        r.hypothesis("proper-splitting", "G is a left or right proper splitting group", True)
    elif all(res.decided for res in results):
        r.hypothesis("proper-splitting", "G is a left or right proper splitting group", False,
                     f"none of {max(res.candidates for res in results)} splittings is proper")
    else:
        r.hypothesis("proper-splitting", "G is a left or right proper splitting group", None,
                     "splitting enumeration or ideal scan was capped")


def _hyp_alternative(r: _Report, a: Analysis):
    ok, witness = a.alternative_branch()
    r.hypothesis("alt", "R is |G|-torsion free, or B(R,G) is nonempty and for every p in B(R,G) G has a "
                        "p-normal complement and R^G is |G|-torsion free", ok, witness)


def _semiprime_clause(r: _Report, ring: RingLike, text: str, cap: int):
    prime = prime_radical(ring, cap)
    r.clause(text, prime.is_zero, None if prime.is_zero else prime.subgroup)


def _trace_clauses(r: _Report, a: Analysis, powers: bool):
    exhaustive = True
    zero_witness = None
    power_witness = None
    for side in SIDES:
        ideals, complete = a.invariant(side)
        exhaustive = exhaustive and complete
        for ideal in ideals:
            if ideal.is_zero:
                continue
            image = trace_image(a.ctx, ideal.subgroup)
            if image.is_zero:
                zero_witness = zero_witness or ideal.subgroup
            elif powers and power_witness is None:
                d, status = least_nilpotent_power(a.ring, image, a.caps.d_search)
                if status == "found":
                    power_witness = f"t(I)^{d} = 0 for I = {ideal.subgroup.describe()}"
                elif status == "capped":
                    exhaustive = False
    text = "t(I) != 0 for all nonzero G-invariant left or right ideals I"
    r.clause(text, False if zero_witness is not None else (True if exhaustive else None), zero_witness)
    if powers:
        text = "t(I)^i != 0 for all i >= 1 and all such I"
        witness = power_witness or zero_witness
        r.clause(text, False if witness is not None else (True if exhaustive else None), witness)


def _radical_equality_clause(r: _Report, a: Analysis, text: str):
    left = a.fixed_radicals.jacobson_radical.subgroup
    right = a.radicals.jacobson_radical.subgroup.intersection(a.fixed.carrier)
    r.clause(text, left == right, _first_difference(left, right))
    if not a.ring.is_unital:
        r.note(NOTE_RAD_CONVENTION)


def _udim_clauses(r: _Report, a: Analysis):
    for side in SIDES:
        fixed = a.udim("fixed", side)
        whole = a.udim("ring", side)
        text = f"udim(R^G) <= udim(R) <= |G| udim(R^G) ({side.value})"
        if fixed.capped or whole.capped:
            r.clause(text, None, "uniform dimension computed on a sample")
            continue
        ok = fixed.value <= whole.value <= a.n * fixed.value
        r.clause(text, ok, f"udim(R^G) = {fixed.value}, udim(R) = {whole.value}, |G| = {a.n}")


def check_bi(r: _Report, a: Analysis) -> str:
    _hyp_torsion_free(r, a)
    image = trace_image(a.ctx, a.ring.carrier)
    d, status = least_nilpotent_power(a.ring, image, a.caps.d_search)
    witness = {"not-nilpotent": "powers of t(R) stabilise at a nonzero subgroup",
               "capped": f"t(R)^{a.caps.d_search} != 0"}.get(status)
    ok = True if status == "found" else (None if status == "capped" else False)
    r.hypothesis("1", "t(R)^d = 0 for some d >= 1", ok, witness)
    text = "R^(h(G)^d) = 0"
    if d is None:
        r.clause(text, None, "d undefined")
    else:
        limit = a.caps.nilpotency + 1
        _nilpotency_bound_clause(r, text, a.nilpotency, _power_capped(_h_capped(a.n, limit), d, limit), limit)
    return text


def check_mont_1_7(r: _Report, a: Analysis) -> str:
    r.hypothesis("1", "R^G = {0}", a.fixed.carrier.is_zero, None if a.fixed.carrier.is_zero else a.fixed.carrier)
    first, _ = a.n2_conditions()
    r.hypothesis("2", "for every p in B(R,G), G has a p-normal complement", first is None, first)
    text = "R is nilpotent"
    k, status = a.nilpotency
    r.clause(text, None if status == "capped" else k is not None,
             None if k is not None else "powers of R stabilise at a nonzero ideal")
    return text


def check_n1(r: _Report, a: Analysis) -> str:
    primes = a.bad.primes
    r.hypothesis("bad-primes", "B(R,G) is nonempty", bool(primes), None if primes else "B(R,G) = {}")
    missing = [p for p in primes if a.bad.data[p].complement is None]
    r.hypothesis("1", "for each p in B(R,G), G has a p-normal complement N(p)", not missing,
                 f"no {missing[0]}-normal complement" if missing else None)
    torsion = [(p, a.fixed_torsion(p)) for p in primes]
    bad_torsion = [(p, t) for p, t in torsion if not t.is_zero]
    r.hypothesis("2", "R^G is p-torsion free for each p in B(R,G)", not bad_torsion,
                 f"p = {bad_torsion[0][0]}: {bad_torsion[0][1].describe()}" if bad_torsion else None)
    statuses = {p: a.bad.data[p].d_status for p in primes}
    if any(s in ("no-complement", "not-nilpotent") for s in statuses.values()):
        p = next(p for p, s in statuses.items() if s in ("no-complement", "not-nilpotent"))
        r.hypothesis("3", "t_G(p)(R^N(p))^d(p) = 0 for some d(p) >= 1", False, f"p = {p}: {statuses[p]}")
    elif any(s == "capped" for s in statuses.values()):
        r.hypothesis("3", "t_G(p)(R^N(p))^d(p) = 0 for some d(p) >= 1", None, f"no d(p) <= {a.caps.d_search}")
    else:
        found = ", ".join(f"d({p}) = {a.bad.data[p].d}" for p in primes)
        r.hypothesis("3", "t_G(p)(R^N(p))^d(p) = 0 for some d(p) >= 1", True, found or None)

    limit = a.caps.nilpotency + 1
    ready = primes and all(statuses[p] == "found" for p in primes)
    text_l = "R^l = 0 with l = max l(p), l(p) = h(N(p))^(h(G(p))^d(p))"
    if not ready:
        r.clause(text_l, None, "l(p) undefined")
    else:
        bound = 0
        for p in primes:
            data = a.bad.data[p]
            exponent = _power_capped(_h_capped(data.action.quotient_order, limit.bit_length()), data.d,
                                     limit.bit_length())
            bound = max(bound, _power_capped(_h_capped(data.complement.order, limit), exponent, limit))
        _nilpotency_bound_clause(r, text_l, a.nilpotency, bound, limit)
    for p in primes:
        data = a.bad.data[p]
        text = f"R^N({p}) is {p}-torsion free and (R^N({p}))^m({p}) = 0, m(p) = h(G(p))^d(p)"
        if data.d is None or data.complement is None:
            r.clause(text, None, "m(p) undefined")
            continue
        sub = data.action.group.domain
        torsion = torsion_subgroup(sub, p)
        if not torsion.is_zero:
            r.clause(text, False, f"{p}-torsion of R^N({p}): {torsion.describe()}")
            continue
        bound = _power_capped(_h_capped(data.action.quotient_order, limit), data.d, limit)
        _nilpotency_bound_clause(r, text, _index(sub, a.caps.nilpotency), bound, limit, f"R^N({p})")
    return "R is nilpotent with the stated bounds"


def check_c1_5(r: _Report, a: Analysis) -> str:
    _hyp_semiprime(r, a)
    _hyp_torsion_free(r, a)
    _semiprime_clause(r, a.fixed, "R^G is a semiprime ring", a.caps.nilpotency)
    _trace_clauses(r, a, powers=False)
    return "G has non-degenerate trace"


def check_n2(r: _Report, a: Analysis) -> str:
    _hyp_semiprime(r, a)
    _hyp_n2(r, a)
    _semiprime_clause(r, a.fixed, "R^G is a semiprime ring", a.caps.nilpotency)
    _trace_clauses(r, a, powers=True)
    return "R^G is semiprime and traces of invariant one-sided ideals are not nilpotent"


def check_cor_a8(r: _Report, a: Analysis) -> str:
    _hyp_semiprime(r, a)
    _hyp_n2(r, a)
    r.note(NOTE_FINITE_QUOTIENTS)
    whole = regular_elements_quotient(a.ring)
    fixed = regular_elements_quotient(a.fixed)
    r.clause("R is left and right Goldie iff R^G is", True)
    regular = set(whole.regular)
    outside = [x for x in fixed.regular if x not in regular]
    r.clause("C_{R^G} is contained in C_R", not outside, format_element(outside[0]) if outside else None)
    if whole.unital and fixed.unital:
        # both quotient rings are the rings themselves exactly when every regular element is a unit
        loose = whole.regular_non_units + fixed.regular_non_units
        r.clause("Q_l(R)^G = Q_l(R^G) and Q_r(R)^G = Q_r(R^G)", not loose,
                 format_element(loose[0]) if loose else None)
        units = set(whole.units)
        stray = [x for x in fixed.regular if x not in units]
        r.clause("Q_l(R) = C_{R^G}^-1 R and Q_r(R) = R C_{R^G}^-1", not stray,
                 format_element(stray[0]) if stray else None)
    else:
        r.note("quotient rings are degenerate without an identity")
    _udim_clauses(r, a)
    return "Goldie transfer, quotient rings and udim bounds"


def check_th_1_9(r: _Report, a: Analysis) -> str:
    _hyp_torsion_free(r, a)
    text = "n(R^G) = R^G ∩ n(R)"
    left = a.fixed_radicals.prime_radical.subgroup
    right = a.radicals.prime_radical.subgroup.intersection(a.fixed.carrier)
    r.clause(text, left == right, _first_difference(left, right))
    return text


def check_th_4apr(r: _Report, a: Analysis) -> str:
    bar, quotient = a.prime_quotient
    missing = [p for p in bar.bad.primes if bar.bad.data[p].complement is None]
    r.hypothesis("1", "for every p in B(R/n(R), G~), G~ has a p-normal complement", not missing,
                 f"no {missing[0]}-normal complement" if missing else None)
    torsion = bar.fixed_torsion(a.n)
    needed = bool(bar.bad.primes)
    r.hypothesis("2", "if B(R/n(R), G~) is nonempty, (R/n(R))^G~ is |G|-torsion free",
                 not needed or torsion.is_zero, torsion if needed and not torsion.is_zero else None)
    left = a.fixed_radicals.prime_radical.subgroup
    right = a.radicals.prime_radical.subgroup.intersection(a.fixed.carrier)
    r.clause("n(R^G) = R^G ∩ n(R)", left == right, _first_difference(left, right))
    image = quotient.projection.image(a.fixed.carrier)
    image_ring = SubringView.of(bar.ring, image, name="image of R^G")
    _semiprime_clause(r, bar.fixed, "(R/n(R))^G~ is semiprime", a.caps.nilpotency)
    _semiprime_clause(r, image_ring, "the image of R^G in R/n(R) is semiprime", a.caps.nilpotency)
    scaled = bar.fixed.carrier.scaled(a.n)
    r.clause("|G| (R/n(R))^G~ ⊆ image of R^G ⊆ (R/n(R))^G~",
             scaled.issubset(image) and image.issubset(bar.fixed.carrier),
             None if scaled.issubset(image) else scaled)
    return "prime radical restriction and semiprime images"


def check_rad_1_4(r: _Report, a: Analysis) -> str:
    _hyp_unit(r, a)
    text = "rad(R^G) = rad(R) ∩ R^G"
    _radical_equality_clause(r, a, text)
    return text


def check_b5apr(r: _Report, a: Analysis) -> str:
    bar, quotient = a.jacobson_quotient
    image = quotient.projection.image(a.fixed.carrier)
    r.hypothesis("fixed-image", "the image of R^G in R/rad(R) equals (R/rad(R))^G~",
                 image == bar.fixed.carrier, _first_difference(image, bar.fixed.carrier))
    results = [bar.proper_group(side) for side in SIDES]
    text = "G~ is a left or right proper splitting group for R/rad(R)"
    if any(res.splitting is not None for res in results):
        r.hypothesis("proper-splitting", text, True)
    elif all(res.decided for res in results):
        r.hypothesis("proper-splitting", text, False, "no proper splitting of R/rad(R)")
    else:
        r.hypothesis("proper-splitting", text, None, "splitting enumeration or ideal scan was capped")
    ok, witness = bar.alternative_branch()
    r.hypothesis("alt", "R/rad(R) is |G~|-torsion free, or B(R/rad(R), G~) is nonempty and the complement and "
                        "torsion conditions hold for it", ok, witness)
    text = "rad(R^G) = rad(R) ∩ R^G"
    _radical_equality_clause(r, a, text)
    return text


def check_levitzki(r: _Report, a: Analysis) -> str:
    _hyp_unit(r, a)
    rad = a.radicals.jacobson_radical
    r.hypothesis("semisimple", "R is a semisimple Artinian ring", rad.is_zero, None if rad.is_zero else rad.subgroup)
    fixed_rad = a.fixed_radicals.jacobson_radical
    text = "R^G is a semisimple Artinian ring"
    r.clause(text, fixed_rad.is_zero, None if fixed_rad.is_zero else fixed_rad.subgroup)
    return text


def check_th_8apr(r: _Report, a: Analysis) -> str:
    rad = a.radicals.jacobson_radical
    r.hypothesis("semisimple", "R is a semisimple Artinian ring", rad.is_zero, None if rad.is_zero else rad.subgroup)
    _hyp_proper_group(r, a)
    _hyp_alternative(r, a)
    fixed_rad = a.fixed_radicals.jacobson_radical
    text = "R^G is a semisimple Artinian ring"
    r.clause(text, fixed_rad.is_zero, None if fixed_rad.is_zero else fixed_rad.subgroup)
    return text


def check_cor_b8(r: _Report, a: Analysis) -> str:
    _hyp_semiprime(r, a)
    _hyp_n2(r, a)
    whole = a.radicals.semisimple_artinian
    fixed = a.fixed_radicals.semisimple_artinian
    r.clause("R is semisimple Artinian iff R^G is", whole == fixed,
             f"R semisimple: {whole}, R^G semisimple: {fixed}")
    if whole and fixed:
        _udim_clauses(r, a)
    return "semisimplicity transfer and udim bounds"


def check_a5apr(r: _Report, a: Analysis) -> str:
    rad = a.radicals.jacobson_radical
    r.hypothesis("rad-zero", "rad(R) = 0", rad.is_zero, None if rad.is_zero else rad.subgroup)
    _hyp_proper_group(r, a)
    _hyp_alternative(r, a)
    fixed_rad = a.fixed_radicals.jacobson_radical
    text = "rad(R^G) = 0"
    r.clause(text, fixed_rad.is_zero, None if fixed_rad.is_zero else fixed_rad.subgroup)
    return text


def _hyp_splitting(r: _Report, a: Analysis):
    search = a.splitting
    if search.found:
        r.hypothesis("splitting", "R = R^G ⊕ B for an R^G-subbimodule B", True)
    else:
        r.hypothesis("splitting", "R = R^G ⊕ B for an R^G-subbimodule B", False if search.exhaustive else None,
                     "no complement" if search.exhaustive else "complement search budget exhausted")


def check_lem_a6(r: _Report, a: Analysis) -> str:
    _hyp_splitting(r, a)
    splittings, complete = a.splittings
    for side in SIDES:
        text = f"proper ({side.value}) iff e(I) = I ∩ R^G for all G-invariant {side.value} ideals"
        witness = None
        exhaustive = complete
        for splitting in splittings:
            outcome = is_proper_splitting(a.ctx, splitting, side, a.caps.ideal_scan, a.caps.samples, a.seed)
            exhaustive = exhaustive and outcome.exhaustive
            equality = outcome.forward_holds and outcome.backward_holds
            if outcome.holds != equality:
                witness = f"B = {splitting.complement.describe()}"
                break
        r.clause(text, False if witness else (True if exhaustive else None), witness)
    return "proper splitting is equivalent to e(I) = I ∩ R^G"


def _lengths(ring: RingLike, side: Side, top: Subgroup, bottom: Subgroup, cap: int) -> int:
    return module_length(Module(ring, side, top, bottom), cap)


def check_lem_b6(r: _Report, a: Analysis) -> str:
    _hyp_splitting(r, a)
    r.note(NOTE_EXTENSION)
    if a.fixed.order > a.caps.ideal_scan:
        r.clause("J^er = J for all one-sided ideals J of R^G", None, "R^G above the ideal scan cap")
        r.clause("l_{R^G}(R^G/J) <= l_R(R/J^e)", None, "R^G above the ideal scan cap")
        return "extension is injective and lengths grow"
    restriction_witness = None
    length_witness = None
    capped = False
    for side in SIDES:
        ideals, _ = sided_ideals(a.fixed, side, a.caps.ideal_scan, a.caps.samples, a.seed)
        for j in ideals:
            ext = extension(a.ctx, j.subgroup, side)
            back = ext.subgroup.intersection(a.fixed.carrier)
            if back != j.subgroup and restriction_witness is None:
                restriction_witness = f"J = {j.subgroup.describe()} ({side.value})"
            try:
                small = _lengths(a.fixed, side, a.fixed.carrier, j.subgroup, a.caps.module_length)
                big = _lengths(a.ring, side, a.ring.carrier, ext.subgroup, a.caps.module_length)
            except SizeCap:
                capped = True
                continue
            if small > big and length_witness is None:
                length_witness = f"J = {j.subgroup.describe()} ({side.value}): {small} > {big}"
    r.clause("J^er = J for all one-sided ideals J of R^G", restriction_witness is None, restriction_witness)
    r.clause("l_{R^G}(R^G/J) <= l_R(R/J^e)",
             False if length_witness else (None if capped else True), length_witness)
    return "extension is injective and lengths grow"


def _lemma_c6_clauses(r: _Report, a: Analysis, splitting: SplittingData, side: Side, label: str):
    ideals, exhaustive = a.invariant(side)
    fixed = a.fixed.carrier
    decomposition = None
    correspondence = None
    length = None
    capped = not exhaustive
    fixed_ideals, _ = sided_ideals(a.fixed, side, a.caps.ideal_scan, a.caps.samples, a.seed)
    for ideal in ideals:
        restricted = ideal.subgroup.intersection(fixed)
        inside_b = ideal.subgroup.intersection(splitting.complement)
        if restricted + inside_b != ideal.subgroup and decomposition is None:
            decomposition = f"I = {ideal.subgroup.describe()}"
        for j in fixed_ideals:
            if not restricted.issubset(j.subgroup):
                continue
            moved = extension(a.ctx, j.subgroup, side).subgroup + ideal.subgroup
            if moved.intersection(fixed) != j.subgroup and correspondence is None:
                correspondence = f"I = {ideal.subgroup.describe()}, J = {j.subgroup.describe()}"
        try:
            small = _lengths(a.fixed, side, fixed, restricted, a.caps.module_length)
            big = _lengths(a.ring, side, a.ring.carrier, ideal.subgroup, a.caps.module_length)
        except SizeCap:
            capped = True
            continue
        if small > big and length is None:
            length = f"I = {ideal.subgroup.describe()}: {small} > {big}"
    r.clause(f"{label}I = (I ∩ R^G) ⊕ (I ∩ B) for every G-invariant {side.value} ideal I",
             False if decomposition else (None if capped else True), decomposition)
    r.clause(f"{label}(RJ + I) ∩ R^G = J for every J containing I ∩ R^G",
             False if correspondence else (None if capped else True), correspondence)
    r.clause(f"{label}l_{{R^G}}(R^G/R^G∩I) <= l_R(R/I)", False if length else (None if capped else True), length)
    r.clause(f"{label}R^G/R^G∩I is Artinian and Noetherian whenever R/I is", True)
    r.note(NOTE_LENGTH_READING)
    r.note(NOTE_FINITE_CHAINS)


def check_lem_c6(r: _Report, a: Analysis) -> str:
    results = {side: a.proper_group(side) for side in SIDES}
    proper = {side: res.splitting for side, res in results.items() if res.splitting is not None}
    if proper:
        r.hypothesis("proper-splitting", "R = R^G ⊕ B is a left or right proper splitting", True)
    elif all(res.decided for res in results.values()):
        r.hypothesis("proper-splitting", "R = R^G ⊕ B is a left or right proper splitting", False,
                     "no proper splitting on either side")
    else:
        r.hypothesis("proper-splitting", "R = R^G ⊕ B is a left or right proper splitting", None,
                     "splitting enumeration or ideal scan was capped")
    if not proper:
        r.clause("items 1-4 for the proper side", None, "no proper splitting to evaluate")
    for side, splitting in proper.items():
        _lemma_c6_clauses(r, a, splitting, side, f"[{side.value}] ")
    return "ideal correspondence under a proper splitting"


def check_cor_c8(r: _Report, a: Analysis) -> str:
    _hyp_unit(r, a)
    if a.averaging is None:
        r.clause("e = |G|^-1 sum g is a left and right proper splitting", None, "e undefined")
        return "Lemma on proper splittings holds for e = |G|^-1 sum g"
    for side in SIDES:
        outcome = is_proper_splitting(a.ctx, a.averaging, side, a.caps.ideal_scan, a.caps.samples, a.seed)
        ok = False if not outcome.holds else (True if outcome.exhaustive else None)
        r.clause(f"e is a {side.value} proper splitting", ok,
                 outcome.witness.subgroup if outcome.witness else None)
        _lemma_c6_clauses(r, a, a.averaging, side, f"[{side.value}] ")
    return "Lemma on proper splittings holds for e = |G|^-1 sum g"


CHECKERS: Dict[TheoremId, Callable[[_Report, Analysis], str]] = {
    TheoremId.BI_1_4: check_bi,
    TheoremId.MONT_1_7: check_mont_1_7,
    TheoremId.N1: check_n1,
    TheoremId.C1_5: check_c1_5,
    TheoremId.N2: check_n2,
    TheoremId.COR_A8: check_cor_a8,
    TheoremId.TH_1_9: check_th_1_9,
    TheoremId.TH_4APR: check_th_4apr,
    TheoremId.RAD_1_4: check_rad_1_4,
    TheoremId.B5APR: check_b5apr,
    TheoremId.LEVITZKI: check_levitzki,
    TheoremId.TH_8APR: check_th_8apr,
    TheoremId.COR_B8: check_cor_b8,
    TheoremId.A5APR: check_a5apr,
    TheoremId.LEM_A6: check_lem_a6,
    TheoremId.LEM_B6: check_lem_b6,
    TheoremId.LEM_C6: check_lem_c6,
    TheoremId.COR_C8: check_cor_c8,
}


def check(theorem: TheoremId, analysis: Analysis, masks: Optional[Set[str]] = None) -> TheoremReport:
    theorem = TheoremId(theorem)
    report = _Report(theorem, analysis, masks or set())
    try:
        conclusion = CHECKERS[theorem](report, analysis)
    except (CapExceeded, SizeCap) as exc:
        logger.warning(f"{theorem.value} on {analysis.name} hit a cap: {exc}")
        report.skipped = True
        report.note(f"cap reached: {exc}")
        conclusion = "not evaluated"
    except RadicalDisagreement:
        raise
    except RingError as exc:
        logger.error(f"{theorem.value} on {analysis.name} could not be evaluated: {exc}")
        report.skipped = True
        report.note(f"not evaluated: {type(exc).__name__}: {exc}")
        conclusion = "not evaluated"
    result = report.finish(conclusion)
    logger.debug(f"{theorem.value} on {analysis.name}: {result.verdict.value}")
    return result


def check_instance(ring: FiniteRing, group: AutomorphismGroup, theorems: Optional[Iterable[TheoremId]] = None,
                   caps: Optional[Caps] = None, seed: int = 0,
                   masks: Optional[Dict[TheoremId, Set[str]]] = None) -> List[TheoremReport]:
    analysis = Analysis(ring, group, caps, seed)
    masks = masks or {}
    return [check(t, analysis, masks.get(TheoremId(t), set())) for t in (theorems or list(TheoremId))]


def background_checks(analysis: Analysis) -> List[ClauseResult]:
    """Inclusions that hold for every instance, independent of any theorem hypothesis."""
    r = _Report(TheoremId.TH_1_9, analysis, set())
    a = analysis
    fixed = a.fixed.carrier
    rad_cap = a.radicals.jacobson_radical.subgroup.intersection(fixed)
    r.clause("rad(R) ∩ R^G ⊆ rad(R^G)", rad_cap.issubset(a.fixed_radicals.jacobson_radical.subgroup), rad_cap)
    prime_cap = a.radicals.prime_radical.subgroup.intersection(fixed)
    r.clause("n(R) ∩ R^G ⊆ n(R^G)", prime_cap.issubset(a.fixed_radicals.prime_radical.subgroup), prime_cap)
    image = trace_image(a.ctx, a.ring.carrier)
    r.clause("t(R) ⊆ R^G", image.issubset(fixed), image)
    for m in sorted({a.n} | set(a.bad.primes)):
        torsion = torsion_subgroup(a.ring, m)
        r.clause(f"tor_{m}(R) is G-invariant", is_invariant(a.group, torsion), torsion)
    return r.clauses


def counterexample_search(theorems: Iterable[TheoremId], instances: Sequence, budget: int,
                          caps: Optional[Caps] = None, seed: int = 0,
                          masks: Optional[Dict[TheoremId, Set[str]]] = None) -> List[TheoremReport]:
    """Counterexample reports over the first `budget` instances, each re-verified from a fresh analysis."""
    theorems = [TheoremId(t) for t in theorems]
    masks = masks or {}
    hits: List[TheoremReport] = []
    for instance in list(instances)[:max(budget, 0)]:
        reports = check_instance(instance.ring, instance.group, theorems, caps, seed, masks)
        for report in reports:
            if report.verdict != Verdict.COUNTEREXAMPLE:
                continue
            again = check(report.theorem, Analysis(instance.ring, instance.group, caps, seed),
                          masks.get(report.theorem, set()))
            if again.model_dump(mode="json") == report.model_dump(mode="json"):
                hits.append(report)
                logger.info(f"counterexample to {report.theorem.value} on {report.ring}/{report.group}")
            else:
                logger.error(f"{report.theorem.value} on {report.ring}/{report.group} did not reproduce")
    return hits
