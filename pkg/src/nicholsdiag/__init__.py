"""Exact diagnostics for Nichols algebras of diagonal type."""

from .balgebra import BRAIDED, MINUS, Element, bracket, bracket_of_word, is_zero_nichols, pairing
from .lattice import Bicharacter, is_connected, m_value
from .lie import bracket_pairing_checks, infinite_witness, iterated_bracket, lie_dims
from .nichols import DisconnectedError, decide_finiteness, hard_super_letters, hilbert
from .parser_io import InstanceSpec, ParseError, emit_report, format_instance, parse_instance
from .scalars import INFINITE, CycloContext, order
from .weyl import generate_groupoid, is_arithmetic_root_system, reflect

__all__ = [
    "BRAIDED", "MINUS", "Element", "bracket", "bracket_of_word", "is_zero_nichols", "pairing",
    "Bicharacter", "is_connected", "m_value",
    "infinite_witness", "iterated_bracket", "bracket_pairing_checks", "lie_dims",
    "DisconnectedError", "decide_finiteness", "hard_super_letters", "hilbert",
    "InstanceSpec", "ParseError", "emit_report", "format_instance", "parse_instance",
    "INFINITE", "CycloContext", "order",
    "generate_groupoid", "is_arithmetic_root_system", "reflect",
]
