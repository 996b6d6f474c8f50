"""Multisegment combinatorics for products of irreducible representations of ``GL_n``.

Irreducible representations are indexed by multisegments (in the Langlands
or the Zelevinsky parametrization).  The package computes the socle and
cosocle of a product with a cuspidal representation, the Zelevinsky
involution, Jacquet restrictions of standard products, and the theta
transport of Langlands parameters.
"""
from .core import (DEFAULT_LINE, IrreducibleParam, Line, Multisegment, Param, ParseError,
                   Point, Segment, contragredient, format_multisegment, linked,
                   parse_multisegment, parse_point, parse_segment, precedes, twist)
from .matching import MatchingReport, candidates_quotient, candidates_socle
from .socle import (COSOCLE, LEFT, NOT_IN_IMAGE, RIGHT, SOCLE, Q, Q_primed, S, SocleQuery,
                    condition_C, is_irreducible_with_cuspidal, l_prime_invariant, socle_cosocle)
from .duality import DualTrace, dual, dual_with_trace
from .ring import GrothVector, StandardProduct, jacquet, margin_matrices, multiplicity
from .theta import ThetaQuery, theta_star
from .corpus import CorpusSpec, enumerate_corpus
from .grammar import parse

__version__ = "0.1.0"
