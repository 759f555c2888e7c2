"""Bijection between 210-avoiding ascent sequences and 3-nonnesting set
partitions, built on growth diagrams for 01-fillings of Ferrers shapes."""
from .bijection import (
    ascent_to_partition,
    partition_to_ascent,
    phi,
    phi_inverse,
    psi,
    psi_inverse,
)
from .errors import InvalidObjectError
from .partition import Partition
from .setpartition import SetPartition

__all__ = [
    "InvalidObjectError",
    "Partition",
    "SetPartition",
    "ascent_to_partition",
    "partition_to_ascent",
    "phi",
    "phi_inverse",
    "psi",
    "psi_inverse",
]
