"""Exact-arithmetic tools for the structure of linear time-invariant systems.

Four views of one system are supported: the complete computational
structure of a (generalized) state realization, its subsystem structure as
a block-diagonal LFT, its signal structure through the dynamical structure
function ``(Q, P)``, and the sparsity structure of ``G(s)``.  All arithmetic
is over the rationals, so every comparison is exact.
"""
from .errors import (AlgebraicLoop, BadNode, DimensionMismatch, IndexNotZero, InconsistentComponent,
                     NoManifestOutputs, ParseError, SingularLoop, SingularMatrix, StructureError,
                     ZeroDenominator)
from .polyrat import (Polynomial, Properness, RationalFunction, RationalMatrix, S, parse_rational,
                      poly_gcd, poly_lcm)
from .qmatrix import QMatrix, resolvent, sandwich
from .realization import (GeneralizedRealization, OutputNormalForm, StateRealization,
                          is_controllable, is_observable, minimize_intricacy, output_normal_form,
                          transfer_function)
from .structure import (Block, CompStructure, LftForm, SubsystemStructure, Vertex, admissible,
                        comp_structure, lft_transfer, subsystem_structure, subsystem_tf, to_lft)
from .dsf import (DynamicalStructureFunction, RelationCheck, SignalStructureGraph, check_relation,
                  dsf, dsf_transfer, signal_structure_graph, split_q)
from .sparsity import SparsityStructure, sparsity
from .gds import Gds, Trajectory, dependency_graph, linear_dependency_graph, simulate, step
from .io import dump_realization, load_realization
from . import corpus

__all__ = [
    "AlgebraicLoop",
    "BadNode",
    "DimensionMismatch",
    "IndexNotZero",
    "InconsistentComponent",
    "NoManifestOutputs",
    "ParseError",
    "SingularLoop",
    "SingularMatrix",
    "StructureError",
    "ZeroDenominator",
    "Polynomial",
    "Properness",
    "RationalFunction",
    "RationalMatrix",
    "S",
    "parse_rational",
    "poly_gcd",
    "poly_lcm",
    "QMatrix",
    "resolvent",
    "sandwich",
    "GeneralizedRealization",
    "OutputNormalForm",
    "StateRealization",
    "is_controllable",
    "is_observable",
    "minimize_intricacy",
    "output_normal_form",
    "transfer_function",
    "Block",
    "CompStructure",
    "LftForm",
    "SubsystemStructure",
    "Vertex",
    "admissible",
    "comp_structure",
    "lft_transfer",
    "subsystem_structure",
    "subsystem_tf",
    "to_lft",
    "DynamicalStructureFunction",
    "RelationCheck",
    "SignalStructureGraph",
    "check_relation",
    "dsf",
    "dsf_transfer",
    "signal_structure_graph",
    "split_q",
    "SparsityStructure",
    "sparsity",
    "Gds",
    "Trajectory",
    "dependency_graph",
    "linear_dependency_graph",
    "simulate",
    "step",
    "dump_realization",
    "load_realization",
    "corpus",
]

__version__ = "0.1.0"
