"""Words in x and y, their Fock space, the duality operator H, and chord diagrams."""

from .diagrams import (CLOSED_LOOP, VACUUM, BypassArc, ChordDiagram, DiagramError,
                       basis_diagram, basis_word, bypass_arcs, bypass_surgery,
                       bypass_triple, decompose, diagram_annihilate, diagram_create,
                       enumerate_bypass_triples, enumerate_diagrams, glue, rotate, stack)
from .duality import (H_apply, H_inv, H_matrix, H_period, Q_minus, Q_minus_inv, Q_plus,
                      Q_plus_inv, exceptional_set, pawn_cycle, psi)
from .fock import (FockElement, OperatorIndexError, T, Tstar, U, annihilate, create,
                   differential, dot, pairing, parse_element)
from .fullrank import SignedPairingMatrix, construct_full_rank_pairing
from .operators import OperatorSpec, normal_form, parse_spec
from .sutures import SutureElement, connecting_chain, generate_C, is_suture_element, suture_set
from .verify import VerificationReport, run_suite
from .words import Word, WordError, enumerate_words, leq, min_max, parse_word, profile

__version__ = "0.1.0"
