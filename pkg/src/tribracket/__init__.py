"""Tribracket colorings of link diagrams and the tribracket-module enhancement."""
from .core import (
    Tribracket,
    alexander_tribracket,
    dehn_tribracket,
    enumerate_tribrackets,
    validate_tribracket,
)
from .diagram import Diagram, PDCode, add_kink, diagram_from_pd, parse_pd, poke
from .invariants import (
    EnhancementValue,
    alexander_counting,
    counting_invariant,
    enumerate_colorings,
    module_enhancement,
    sticker_matrix,
)
from .linalg import ModMatrix, is_unit, kernel_rank, kernel_size, row_reduce
from .xmodule import XModule, constant_module, search_modules, validate_module

__version__ = "0.1.0"
