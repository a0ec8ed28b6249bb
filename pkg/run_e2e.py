import logging
import os

from online_manip.model.election import validate_oms
from online_manip.oracle.game import decide_schedule_robust
from online_manip.parser.instance import InstanceFile, load_instance, parse_instance, serialize_instance
from online_manip.parser.sources import build_from_source
from online_manip.solvers.routing import solve

# Configure Logging
logging.basicConfig(level=logging.INFO, format='%(levelname)s: %(message)s')
logger = logging.getLogger(__name__)

SOURCES = [
    ("qbf", "sources/exists_forall_or.qbf", {}),
    ("qbf", "sources/exists_forall_equal.qbf", {}),
    ("partition-plurality", "sources/even_split.txt", {"m": 2}),
    ("partition-plurality", "sources/no_split.txt", {"m": 3}),
    ("partition-veto3", "sources/even_split.txt", {}),
    ("partition-veto3", "sources/no_split.txt", {}),
    ("maxsatasg", "sources/same_largest.cnf", {}),
    ("maxsatasg", "sources/different_largest.cnf", {}),
]


def decide(instance: InstanceFile):
    if instance.schedule_free:
        return decide_schedule_robust(instance.to_schedule_free(), instance.rule, instance.variant), "oracle-exhaustive"
    return solve(validate_oms(instance.to_oms(), instance.variant), instance.rule, instance.variant)


def main():
    logger.info("=== Starting E2E Run ===")
    mismatches = 0

    # 1. Generate from source problems and decide the written files
    for kind, path, options in SOURCES:
        with open(path, "r", encoding="utf-8") as f:
            generated, label = build_from_source(kind, f.read(), source=path, **options)
        instance = parse_instance(serialize_instance(InstanceFile.from_generated(generated, label)))
        verdict, solver = decide(instance)
        status = "ok" if verdict == label else "MISMATCH"
        mismatches += verdict != label
        logger.info(f"{kind} {path}: label={label} verdict={verdict} via {solver} [{status}]")

    # 2. Decide the hand-written instances
    for name in sorted(os.listdir("instances")):
        path = os.path.join("instances", name)
        instance = load_instance(path)
        verdict, solver = decide(instance)
        if instance.label is not None and verdict != instance.label:
            mismatches += 1
            logger.error(f"{path}: expected {instance.label}, got {verdict} via {solver}")
        else:
            logger.info(f"{path}: {'YES' if verdict else 'NO'} via {solver}")

    logger.info(f"Finished with {mismatches} mismatches.")


if __name__ == "__main__":
    main()
