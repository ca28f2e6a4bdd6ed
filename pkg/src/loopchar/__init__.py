"""Symbolic loop weights for quantum loop algebras.

Exact combinatorics over formal spectral parameters: the loop-weight
lattice and its braid-group action, the loop-root sublattice with exact
decomposition, block membership through elliptic classes, and
q-characters of the representations whose shape is forced by weight
combinatorics alone.  Everything is integer arithmetic; there are no
floating-point parameters anywhere.
"""

from .blocks import (
    EllipticCharacter,
    blocks_linked,
    classes_equal,
    elliptic_class,
    parse_elliptic,
    relation_set,
    seed_family,
    tensor_class,
    trivial_sets,
)
from .braid import (
    braid_act,
    braid_act_word,
    cone_check,
    expand_lroots,
    lroot_decompose,
    simple_lroot,
    twist_by_w0,
)
from .cartan import CartanData, LieType, cartan_data
from .errors import DomainError, ParseError
from .lweight import (
    LCharacter,
    LWeight,
    dual_lweight,
    fundamental_lweight,
    parse_lweight,
    weight_of,
)
from .qchar import (
    Sl2String,
    cyclicity_order,
    dn_node2_char,
    fundamental_char,
    is_minuscule,
    minuscule_char,
    sl2_eval_char,
    sl2_tensor_irreducible,
    tensor_char,
    weight_projection,
    weyl_module_dim,
)
from .verify import SUITE_NAMES, run_all, run_suite
from .weyl import (
    WeylElement,
    coroot_pairing,
    dominance_diff,
    element_from_word,
    fundamental_weight,
    is_reduced_word,
    longest_element,
    min_coset_reps,
    positive_roots,
    reflect,
    weight_orbit,
    zero_weight,
)

__version__ = "0.1.0"

__all__ = [
    "CartanData",
    "DomainError",
    "EllipticCharacter",
    "LCharacter",
    "LieType",
    "LWeight",
    "ParseError",
    "SUITE_NAMES",
    "Sl2String",
    "WeylElement",
    "blocks_linked",
    "braid_act",
    "braid_act_word",
    "cartan_data",
    "classes_equal",
    "cone_check",
    "coroot_pairing",
    "cyclicity_order",
    "dn_node2_char",
    "dominance_diff",
    "dual_lweight",
    "element_from_word",
    "elliptic_class",
    "expand_lroots",
    "fundamental_char",
    "fundamental_lweight",
    "fundamental_weight",
    "is_minuscule",
    "is_reduced_word",
    "longest_element",
    "lroot_decompose",
    "min_coset_reps",
    "minuscule_char",
    "parse_elliptic",
    "parse_lweight",
    "positive_roots",
    "reflect",
    "relation_set",
    "run_all",
    "run_suite",
    "seed_family",
    "simple_lroot",
    "sl2_eval_char",
    "sl2_tensor_irreducible",
    "tensor_char",
    "tensor_class",
    "trivial_sets",
    "twist_by_w0",
    "weight_of",
    "weight_orbit",
    "weight_projection",
    "weyl_module_dim",
    "zero_weight",
]
