from .instance import (
    InstanceFile,
    InstanceParser,
    load_instance,
    parse_instance,
    serialize_instance,
    write_instance,
)
from .sources import (
    GENERATOR_KINDS,
    build_from_source,
    parse_cnf_pair,
    parse_dimacs,
    parse_partition_source,
    parse_qbf_source,
)

__all__ = [
    "InstanceFile",
    "InstanceParser",
    "load_instance",
    "parse_instance",
    "serialize_instance",
    "write_instance",
    "GENERATOR_KINDS",
    "build_from_source",
    "parse_cnf_pair",
    "parse_dimacs",
    "parse_partition_source",
    "parse_qbf_source",
]
