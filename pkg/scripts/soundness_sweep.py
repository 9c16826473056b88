import os
import sys
import argparse
import logging
import time

# Add the project root directory to Python path
project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.append(project_root)

from sympy import primefactors

from algebra import catalog
from algebra.errors import RadicalDisagreement
from algebra.groups import h_constant, p_group_fixed_point
from algebra.invariants import torsion_subgroup
from algebra.radicals import radical_profile
from algebra.theorems import check_instance
from config.settings import load_config, log_level
from models.report_models import Verdict

logging.basicConfig(level=log_level("WARNING"))
logger = logging.getLogger(__name__)


def main():
    parser = argparse.ArgumentParser(description="Radical agreement, fixed points and theorem soundness over a sweep")
    parser.add_argument("--random", type=int, default=500)
    parser.add_argument("--max-order", type=int, default=16)
    args = parser.parse_args()

    config = load_config()
    start = time.time()
    instances = catalog.named_instances(config.caps, tags=False)
    batch, stats = catalog.random_instances(args.max_order, args.random, config.seed, caps=config.caps, tags=False)
    instances.extend(batch)
    print(f"{len(instances)} instances ({stats.valid}/{stats.attempted} random tables valid)")

    print("h(n): " + ", ".join(f"h({n})={h_constant(n)}" for n in range(1, 5)))

    failures = 0
    for instance in instances:
        try:
            radical_profile(instance.ring, config.caps.nilpotency)
        except RadicalDisagreement as e:
            failures += 1
            logger.error(str(e))

        primes = primefactors(instance.group.order)
        if len(primes) == 1:
            module = torsion_subgroup(instance.ring, primes[0])
            if not module.is_zero and p_group_fixed_point(instance.group, module, primes[0]) is None:
                failures += 1
                logger.error(f"{instance.name}: no fixed point on tor_{primes[0]}(R)")

        for report in check_instance(instance.ring, instance.group, config.theorems, config.caps, config.seed,
                                     config.mask_map()):
            if report.verdict == Verdict.COUNTEREXAMPLE:
                failures += 1
                logger.error(f"counterexample: {report.theorem.value} on {instance.name}")
            elif report.verdict == Verdict.VACUOUS and not report.failed_hypotheses:
                failures += 1
                logger.error(f"{report.theorem.value} on {instance.name} is vacuous without a failed hypothesis")

    print(f"Done in {time.time() - start:.1f}s with {failures} failures.")
    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()
