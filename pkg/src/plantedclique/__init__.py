"""Planted-clique one-way function workbench."""

from ._backend import BACKEND
from .graph import Graph, GraphInputError, VertexSet, common_neighbors, degree_in, induced_subgraph, is_clique
from .instance import PlantedInstance, PlantParams, owf_evaluate, plant_clique, sample_gnp
from .rng import RngState

__all__ = [
    "BACKEND",
    "Graph",
    "GraphInputError",
    "PlantParams",
    "PlantedInstance",
    "RngState",
    "VertexSet",
    "common_neighbors",
    "degree_in",
    "induced_subgraph",
    "is_clique",
    "owf_evaluate",
    "plant_clique",
    "sample_gnp",
]
