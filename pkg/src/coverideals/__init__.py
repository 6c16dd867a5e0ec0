"""Cover ideals of graphs: Betti numbers of powers, linear quotients and Rees algebras."""

from __future__ import annotations

from .graphs import SimpleGraph, cover_ideal, edge_ideal, graph_from_ideal, ideal_from_graph
from .kernels import BACKEND
from .monomial import Monomial, MonomialIdeal, RingContext, hilbert_function, power
from .oracle import FieldSpec, betti_table_oracle, hochster_entry
from .quotients import compute_set_data, linear_quotient_betti, revlex_order
from .tables import BettiTable, pdim, regularity

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BettiTable",
    "FieldSpec",
    "Monomial",
    "MonomialIdeal",
    "RingContext",
    "SimpleGraph",
    "betti_table_oracle",
    "compute_set_data",
    "cover_ideal",
    "edge_ideal",
    "graph_from_ideal",
    "hilbert_function",
    "hochster_entry",
    "ideal_from_graph",
    "linear_quotient_betti",
    "pdim",
    "power",
    "regularity",
    "revlex_order",
]
