from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field
from typing import List, Optional
from algebra import catalog, ringfile
from algebra.errors import RingError
from algebra.theorems import check_instance
from config.settings import load_config, log_level
from models.report_models import TheoremReport, Verdict
from models.ring_models import InstanceProfile, InstanceSummary
import logging

# Configure logging
logging.basicConfig(level=log_level("INFO"))
logger = logging.getLogger(__name__)

app = FastAPI(
    title="Ring Invariants API",
    description="Fixed rings, radicals and theorem checks for finite rings under finite automorphism groups",
    version="1.0.0"
)

# Add CORS middleware
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


class InstanceSource(BaseModel):
    text: Optional[str] = Field(None, description="Ring file contents")
    named: bool = Field(False, description="Include the named catalog")
    caps: Optional[str] = Field(None, description="Cap overrides, key=value,...")
    seed: Optional[int] = Field(None, description="Seed for sampled scans")


class CheckRequest(InstanceSource):
    theorems: Optional[List[str]] = Field(None, description="Theorem ids, all when omitted")
    masks: List[str] = Field(default_factory=list, description="Disabled hypotheses as THEOREM:key")


class CheckResponse(BaseModel):
    reports: List[TheoremReport]
    counterexamples: int


class ProfileRequest(InstanceSource):
    instance: Optional[str] = Field(None, description="Instance name; every instance when omitted")


class ValidateRequest(BaseModel):
    text: str = Field(..., description="Ring file contents")


class CatalogResponse(BaseModel):
    text: str
    instances: List[InstanceSummary]


def _instances(source: InstanceSource, config, tags: bool = False) -> List[catalog.Instance]:
    instances = []
    if source.text:
        instances.extend(ringfile.loads(source.text, config.caps, tags=tags))
    if source.named:
        instances.extend(catalog.named_instances(config.caps, tags=tags))
    return instances


@app.post("/api/validate", response_model=List[InstanceSummary])
async def validate(request: ValidateRequest):
    """Parse and validate a ring file; tags are derived from fresh computations."""
    try:
        instances = ringfile.loads(request.text)
        logger.info(f"Validated {len(instances)} instances")
        return [InstanceSummary(name=i.name, provenance=i.provenance, ring_order=i.ring.order,
                                group_order=i.group.order, tags=i.tags) for i in instances]
    except RingError as e:
        logger.error(f"Invalid ring file: {str(e)}")
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error(f"Error in validate endpoint: {str(e)}")
        raise HTTPException(status_code=500, detail=str(e))


@app.post("/api/check", response_model=CheckResponse)
async def check(request: CheckRequest):
    """Check theorems on the given instances."""
    try:
        config = load_config({"caps": request.caps, "seed": request.seed, "theorems": request.theorems,
                              "masks": request.masks})
        reports = []
        for instance in _instances(request, config):
            logger.info(f"Checking {len(config.theorems)} theorems on {instance.name}")
            reports.extend(check_instance(instance.ring, instance.group, config.theorems, config.caps,
                                          config.seed, config.mask_map()))
        reports.sort(key=lambda r: r.key)
        bad = sum(1 for r in reports if r.verdict == Verdict.COUNTEREXAMPLE)
        return CheckResponse(reports=reports, counterexamples=bad)
    except (RingError, ValueError) as e:
        logger.error(f"Bad check request: {str(e)}")
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error(f"Error in check endpoint: {str(e)}")
        raise HTTPException(status_code=500, detail=str(e))


@app.post("/api/profile", response_model=List[InstanceProfile])
async def profile(request: ProfileRequest):
    """Invariants of the selected instances."""
    try:
        config = load_config({"caps": request.caps, "seed": request.seed})
        chosen = [i for i in _instances(request, config) if request.instance in (None, i.name)]
        if not chosen:
            raise HTTPException(status_code=404, detail=f"No instance named {request.instance!r}")
        return [catalog.profile(i, config.caps, config.seed) for i in chosen]
    except HTTPException:
        raise
    except (RingError, ValueError) as e:
        logger.error(f"Bad profile request: {str(e)}")
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error(f"Error in profile endpoint: {str(e)}")
        raise HTTPException(status_code=500, detail=str(e))


@app.get("/api/catalog", response_model=CatalogResponse)
async def named_catalog():
    """The named catalog as a ring file, with tags."""
    try:
        instances = catalog.named_instances()
        summaries = [InstanceSummary(name=i.name, provenance=i.provenance, ring_order=i.ring.order,
                                     group_order=i.group.order, tags=i.tags) for i in instances]
        return CatalogResponse(text=ringfile.dumps(instances), instances=summaries)
    except Exception as e:
        logger.error(f"Error in catalog endpoint: {str(e)}")
        raise HTTPException(status_code=500, detail=str(e))


@app.get("/api/health")
async def health_check():
    """Health check endpoint."""
    return {"status": "healthy"}


if __name__ == "__main__":
    import uvicorn
    uvicorn.run(app, host="0.0.0.0", port=8000)
