from pydantic import BaseModel, ConfigDict, Field
from typing import Dict, List, Optional

from models.report_models import ClauseResult


class AutomorphismSpec(BaseModel):
    name: str = Field(..., description="Name used by group lines")
    images: List[List[int]] = Field(..., description="Image of each additive generator")


class GroupSpec(BaseModel):
    name: str = Field(..., description="Group name")
    generators: List[str] = Field(default_factory=list, description="Names of generating automorphisms")


class RingSpec(BaseModel):
    name: str = Field(..., description="Ring name")
    orders: List[int] = Field(..., description="Cyclic orders d_i of the additive generators")
    table: List[List[List[int]]] = Field(..., description="Product e_i e_j as coordinates, for every pair")
    identity: Optional[List[int]] = Field(None, description="Declared identity element")
    automorphisms: List[AutomorphismSpec] = Field(default_factory=list, description="Declared automorphisms")
    groups: List[GroupSpec] = Field(default_factory=list, description="Groups acting on the ring")
    line: int = Field(0, description="Line of the ring header in its file")


class Fingerprint(BaseModel):
    model_config = ConfigDict(frozen=True)

    order: int = Field(..., description="Number of elements")
    invariant_factors: List[int] = Field(..., description="Invariant factors of the additive group")
    units: int = Field(..., description="Number of units (0 without identity)")
    prime_radical_order: int = Field(..., description="|n(R)|")
    udim: Optional[int] = Field(None, description="Left uniform dimension, None when capped")
    unital: bool = Field(..., description="Whether the ring has an identity")

    def key(self):
        return (self.order, tuple(self.invariant_factors), self.units, self.prime_radical_order, self.udim,
                self.unital)


class InstanceSummary(BaseModel):
    name: str = Field(..., description="Instance name")
    provenance: str = Field(..., description="constructed, file or random(seed)")
    ring_order: int = Field(..., description="|R|")
    group_order: int = Field(..., description="|G|")
    tags: List[str] = Field(default_factory=list, description="Tags derived from fresh computations")
    fingerprint: Optional[Fingerprint] = Field(None, description="Ring fingerprint")


class GenerationStats(BaseModel):
    seed: int = Field(..., description="Seed of the batch")
    attempted: int = Field(0, description="Random tables tried")
    valid: int = Field(0, description="Tables that passed validation")
    rigid: int = Field(0, description="Rings where no nontrivial automorphism was found")
    duplicates: int = Field(0, description="Instances dropped by fingerprint dedup")


class InstanceProfile(BaseModel):
    name: str = Field(..., description="Instance name")
    order: int = Field(..., description="|R|")
    group_order: int = Field(..., description="|G|")
    unital: bool = Field(..., description="Whether R has an identity")
    prime_radical: str = Field(..., description="n(R)")
    jacobson_radical: str = Field(..., description="rad(R)")
    fixed_ring: str = Field(..., description="R^G")
    trace_image: str = Field(..., description="t(R)")
    torsion: Dict[str, str] = Field(default_factory=dict, description="tor_p(R) for each p dividing |G|")
    bad_primes: List[int] = Field(default_factory=list, description="B(R,G)")
    complements: Dict[str, Optional[str]] = Field(default_factory=dict, description="N(p) order per bad prime")
    trace_nilpotency: Dict[str, Optional[int]] = Field(default_factory=dict, description="d(p) per bad prime")
    averaging: Optional[str] = Field(None, description="Complement image(1 - e) when |G|^-1 lies in R")
    splitting: str = Field(..., description="Outcome of the splitting search")
    proper_splitting: Dict[str, str] = Field(default_factory=dict, description="Proper splitting group, per side")
    udim: Dict[str, Optional[int]] = Field(default_factory=dict, description="Uniform dimensions of R and R^G")
    nilpotency_index: Optional[int] = Field(None, description="Nilpotency index of R, if nilpotent")
    background: List[ClauseResult] = Field(default_factory=list, description="Unconditional inclusions")
