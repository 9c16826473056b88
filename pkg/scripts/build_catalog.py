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
    parser = argparse.ArgumentParser(description="Write the named catalog and its manifest")
    parser.add_argument("--out", default="catalog/named.ring")
    parser.add_argument("--manifest", default="catalog/named.json")
    args = parser.parse_args()

    config = load_config()
    os.makedirs(os.path.dirname(args.out) or ".", exist_ok=True)
    instances = catalog.named_instances(config.caps)
    ringfile.save(instances, args.out)
    ringfile.write_manifest(instances, args.manifest, config.caps)

    # the written file must reload to the same canonical text
    again = ringfile.load(args.out, config.caps)
    if ringfile.dumps(again) != ringfile.dumps(instances):
        logger.error(f"{args.out} does not round-trip")
        sys.exit(1)
    for instance in instances:
        print(f"{instance.name:<16} |R|={instance.ring.order:<4} |G|={instance.group.order:<3} {', '.join(instance.tags)}")
    print(f"Wrote {len(instances)} instances to {args.out}")


if __name__ == "__main__":
    main()
