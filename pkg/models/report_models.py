from pydantic import BaseModel, Field, field_validator, model_validator
from typing import Dict, List, Optional, Set, Tuple
from enum import Enum


class TheoremId(str, Enum):
    BI_1_4 = "BI_1_4"
    MONT_1_7 = "MONT_1_7"
    N1 = "N1"
    C1_5 = "C1_5"
    N2 = "N2"
    COR_A8 = "COR_A8"
    TH_1_9 = "TH_1_9"
    TH_4APR = "TH_4APR"
    RAD_1_4 = "RAD_1_4"
    B5APR = "B5APR"
    LEVITZKI = "LEVITZKI"
    TH_8APR = "TH_8APR"
    COR_B8 = "COR_B8"
    A5APR = "A5APR"
    LEM_A6 = "LEM_A6"
    LEM_B6 = "LEM_B6"
    LEM_C6 = "LEM_C6"
    COR_C8 = "COR_C8"


class Status(str, Enum):
    HOLDS = "holds"
    DOMINATED = "holds (dominated)"
    FAILS = "fails"
    CAPPED = "capped"

    @property
    def ok(self) -> bool:
        return self in (Status.HOLDS, Status.DOMINATED)


class Verdict(str, Enum):
    VERIFIED = "verified"
    VACUOUS = "vacuous"
    COUNTEREXAMPLE = "counterexample"
    SKIPPED = "skipped(cap)"


VERDICT_GLYPHS = {
    Verdict.VERIFIED: "+",
    Verdict.VACUOUS: ".",
    Verdict.COUNTEREXAMPLE: "X",
    Verdict.SKIPPED: "?",
}


class Caps(BaseModel):
    ideal_scan: int = Field(256, gt=0, description="Largest ring order for exhaustive ideal scans")
    d_search: int = Field(16, gt=0, description="Largest d tried when looking for a nilpotent trace image")
    nilpotency: int = Field(64, gt=0, description="Most power iterations when computing nilpotency indices")
    udim: int = Field(256, gt=0, description="Largest ring order for an exhaustive uniform dimension")
    group: int = Field(720, gt=0, description="Largest group order produced by closure")
    splitting_budget: int = Field(20000, gt=0, description="Node budget of the complement search")
    samples: int = Field(32, gt=0, description="Sampled invariant ideals above the scan cap")
    module_length: int = Field(4096, gt=0, description="Largest module order for length computations")

    @classmethod
    def parse(cls, text: str, base: Optional["Caps"] = None) -> "Caps":
        """Parse `key=value,key=value` on top of `base`."""
        values = (base or cls()).model_dump()
        for item in filter(None, (part.strip() for part in text.split(","))):
            key, sep, value = item.partition("=")
            key = key.strip().replace("-", "_")
            if not sep or key not in values:
                raise ValueError(f"unknown cap setting: {item!r}")
            values[key] = int(value)
        return cls(**values)


class HypothesisResult(BaseModel):
    key: str = Field(..., description="Stable name of the hypothesis, used by masks")
    text: str = Field(..., description="The hypothesis as stated")
    status: Status = Field(..., description="Evaluation outcome")
    witness: Optional[str] = Field(None, description="Element or ideal exhibiting a failure")
    masked: bool = Field(False, description="Disabled by a mask and ignored by the verdict")


class ClauseResult(BaseModel):
    text: str = Field(..., description="One item of the conclusion")
    status: Status = Field(..., description="Evaluation outcome")
    witness: Optional[str] = Field(None, description="Element or ideal exhibiting a failure")


class ConclusionResult(BaseModel):
    text: str = Field(..., description="The conclusion as stated")
    status: Status = Field(..., description="Combined outcome of the clauses")
    witness: Optional[str] = Field(None, description="Witness of the first failing clause")
    clauses: List[ClauseResult] = Field(default_factory=list, description="Each conclusion item separately")


class TheoremReport(BaseModel):
    theorem: TheoremId = Field(..., description="Statement checked")
    ring: str = Field(..., description="Ring name of the instance")
    group: str = Field(..., description="Group name of the instance")
    hypotheses: List[HypothesisResult] = Field(default_factory=list, description="Hypotheses item by item")
    conclusion: ConclusionResult = Field(..., description="Conclusion outcome")
    verdict: Verdict = Field(..., description="Overall classification of the instance")
    caps: Caps = Field(default_factory=Caps, description="Caps in force for the check")
    seed: int = Field(0, description="Seed in force for the check")
    notes: List[str] = Field(default_factory=list, description="Interpretation notes and conventions")

    @model_validator(mode="after")
    def counterexample_has_witness(self) -> "TheoremReport":
        if self.verdict == Verdict.COUNTEREXAMPLE:
            if any(not h.status.ok for h in self.hypotheses if not h.masked):
                raise ValueError("counterexample with a failing hypothesis")
            if self.conclusion.status != Status.FAILS or self.conclusion.witness is None:
                raise ValueError("counterexample without a failing, witnessed conclusion")
        return self

    @property
    def key(self) -> Tuple[str, str, str]:
        return (self.theorem.value, self.ring, self.group)

    @property
    def failed_hypotheses(self) -> List[str]:
        return [h.key for h in self.hypotheses if not h.masked and h.status == Status.FAILS]


class RunConfig(BaseModel):
    caps: Caps = Field(default_factory=Caps, description="Search and scan caps")
    seed: int = Field(0, description="Single seed all randomness flows from")
    jobs: int = Field(1, ge=1, description="Instances checked in parallel")
    out: str = Field("report.json", description="Report output path")
    theorems: List[TheoremId] = Field(default_factory=lambda: list(TheoremId), description="Theorems to check")
    masks: List[str] = Field(default_factory=list, description="Disabled hypotheses as THEOREM:key")

    @field_validator("masks")
    @classmethod
    def masks_name_theorems(cls, masks: List[str]) -> List[str]:
        for mask in masks:
            theorem, sep, key = mask.partition(":")
            if not sep or not key or theorem not in TheoremId.__members__:
                raise ValueError(f"mask must look like THEOREM:key, got {mask!r}")
        return masks

    def mask_map(self) -> Dict[TheoremId, Set[str]]:
        masked: Dict[TheoremId, Set[str]] = {}
        for mask in self.masks:
            theorem, _, key = mask.partition(":")
            masked.setdefault(TheoremId(theorem), set()).add(key)
        return masked
