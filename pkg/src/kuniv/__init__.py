"""Subsequence universality of regular languages: decision, indices, counting."""

from .automaton import Nfa, NormalizedNfa, normalize, parse_nfa, remove_epsilon
from .counting import count_at_most, count_exact, count_total, rank
from .errors import CapacityError
from .oracle import enumerate_language, max_universality_product, usu_decide
from .regex import k_esu_regex, max_universality_regex, parse_regex, star_free_reduce
from .sigma_dp import k_esu_sigma, max_universality_sigma
from .states_fpt import k_esu_states, max_universality_states
from .words import arch_factorize, universality_index

__version__ = "0.1.0"
