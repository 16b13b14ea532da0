"""Witness sets with alpha+1 vertices and induced maximum degree 1 in H(n, k), k >= 3."""

from .construction import SetSpec, enumerate_set, in_W, in_X, in_Y, partner, size_W
from .core import GraphParams, are_adjacent, coord_sum, last_nonzero, neighbors, rank, unrank
from .verifier import MatchingCertificate, InducedSubgraphReport, verify_W

__all__ = [
    "GraphParams",
    "InducedSubgraphReport",
    "MatchingCertificate",
    "SetSpec",
    "are_adjacent",
    "coord_sum",
    "enumerate_set",
    "in_W",
    "in_X",
    "in_Y",
    "last_nonzero",
    "neighbors",
    "partner",
    "rank",
    "size_W",
    "unrank",
    "verify_W",
]
