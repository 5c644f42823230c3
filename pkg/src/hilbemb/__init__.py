"""Hilbert function posets of monomial quotient rings, embedding orders,
segments in extension rings, distraction/stabilization/polarization
transports, and the classical growth bounds they refine.

The workhorse objects are :class:`QuotientRing` (a polynomial ring modulo a
monomial ideal, truncated at a degree cap), :class:`MonomialIdeal`,
:class:`GradedOrder` (a per-degree listing of the standard basis), and
:class:`ExtensionRing` (adjoining one variable with an optional power
relation).  Every constructive pipeline is re-checked against brute-force
oracles that live next to it.
"""

from .bounds import (MacaulayRep, cl_min_growth, is_macaulay_lex, lex_segment,
                     macaulay_growth_formula, macaulay_min_growth, macaulay_rep)
from .distraction import (DistractionMatrix, FieldConfig, Polarization,
                          apply_distraction, clements_lindstrom_extend,
                          distraction_embedding, distraction_ideal,
                          initial_space, polarization_embedding, polarize,
                          stabilize, stabilize_truncated)
from .errors import (BudgetExceeded, HilbembError, ParseError,
                     PreconditionError, VerificationError)
from .extension import (CoefficientSequence, ExtensionRing, extend_embedding,
                        extended_order, ideal_z_stable, is_z_stable,
                        materialize_truncation, segment, strong_hyp_check,
                        z_stable_representatives_exist)
from .linalg import QQ, PolySpace, PrimeField
from .orders import (EmbeddingCertificate, GradedOrder, betti1_dominance_check,
                     certify, embed, find_embedding_order, find_embedding_orders,
                     gotzmann_check, hilbert_poset, inherit_order,
                     is_embedding_order, is_monomial_order, lattice_check,
                     lex_refinement_check, socle_segment_check, veronese_restrict)
from .registry import REGISTRY, run_example
from .rings import (HilbertSeries, Monomial, MonomialIdeal, QuotientRing,
                    betti1, cmp_grlex, enumerate_monomial_ideals, grlex_key,
                    hilbert_series, series_realizable)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
