"""Exact computations of cohomology jump loci for DGLA pairs over artinian test rings."""

from .ce import CeComplex, ce_build, ce_cohomology, ce_module_action, ce_product
from .complexes import FreeComplex, JumpIndex, jump_ideal, minors_ideal, stabilize, tensor_along
from .dgla import Dgla, Representation, dgla_from_entries, representation_from_entries, validate_dgla, validate_representation
from .jump import JumpQuery, jump_membership, jump_subscheme, resonance_scan, sheaf_predicates
from .mc import GaugeElement, MCCandidate, aomoto, gauge, h0_pushforward, is_maurer_cartan, mc_defect
from .rings import ArtinianAlgebra, DgArtinianAlgebra, Ideal, artinian_from_truncation, field

__version__ = "0.1.0"

__all__ = [
    "CeComplex",
    "ce_build",
    "ce_cohomology",
    "ce_module_action",
    "ce_product",
    "FreeComplex",
    "JumpIndex",
    "jump_ideal",
    "minors_ideal",
    "stabilize",
    "tensor_along",
    "Dgla",
    "Representation",
    "dgla_from_entries",
    "representation_from_entries",
    "validate_dgla",
    "validate_representation",
    "JumpQuery",
    "jump_membership",
    "jump_subscheme",
    "resonance_scan",
    "sheaf_predicates",
    "GaugeElement",
    "MCCandidate",
    "aomoto",
    "gauge",
    "h0_pushforward",
    "is_maurer_cartan",
    "mc_defect",
    "ArtinianAlgebra",
    "DgArtinianAlgebra",
    "Ideal",
    "artinian_from_truncation",
    "field",
    "__version__",
]
