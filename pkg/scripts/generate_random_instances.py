import os
import sys
import argparse
import logging

# Add the project root directory to Python path
project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.append(project_root)

from algebra import catalog, ringfile
from config.settings import load_config, log_level

logging.basicConfig(level=log_level("INFO"))
logger = logging.getLogger(__name__)


def main():
    parser = argparse.ArgumentParser(description="Write a seeded batch of random instances")
    parser.add_argument("--count", type=int, default=100)
    parser.add_argument("--max-order", type=int, default=16)
    parser.add_argument("--seeds", type=int, default=1, help="number of consecutive seeds, from the config seed")
    parser.add_argument("--out", default="catalog/random.ring")
    args = parser.parse_args()

    config = load_config()
    os.makedirs(os.path.dirname(args.out) or ".", exist_ok=True)
    instances = []
    for seed in range(config.seed, config.seed + args.seeds):
        batch, stats = catalog.random_instances(args.max_order, args.count, seed, caps=config.caps)
        batch, stats.duplicates = catalog.dedup(batch, config.caps)
        print(f"seed {seed}: {stats.valid}/{stats.attempted} valid tables, {stats.rigid} rigid, "
              f"{stats.duplicates} duplicates dropped, {len(batch)} kept")
        instances.extend(batch)

    ringfile.save(instances, args.out)
    ringfile.write_manifest(instances, os.path.splitext(args.out)[0] + ".json", config.caps)
    print(f"Wrote {len(instances)} instances to {args.out}")


if __name__ == "__main__":
    main()
