"""Orbit and refinement expansivity on finite spaces and shifts of finite type."""
from .constructions import (Duplication, chain_space, closed_invariant_sets, discrete_example,
                            duplicate, duplicated_cover, enumerate_covers, enumerate_homeos,
                            enumerate_spaces, enumerate_spaces_upto, indiscrete_example)
from .decision import (CopyPairWitness, CoverWitness, Decision, FamilyCycle, SequenceWitness,
                       ShiftWitness, SmallnessWitness, UniformRadius, WitnessPair)
from .dynamics import (Cover, Homeo, WindowFamily, canonical_cover, decide_orbit_expansive,
                       decide_refinement_expansive, homeo_new, identity, is_cover_small,
                       is_o_expansive_cover, is_r_expansive_cover, min_o_expansive_cover,
                       min_o_expansive_cover_size, o_expansive_oracle, pair_covered,
                       power_cover, r_expansive_oracle, refines, restrict,
                       uniform_refinement_N, verify, window_cover)
from .errors import ExpansoError
from .instance import dumps, load_instance, parse_instance
from .sft import (Sft, SymbolCover, check_duplicated_shift_cover, full_shift, golden_mean,
                  is_o_expansive_symbol_cover, periodic_count, sft_new, symbol_cover)
from .suite import run_suite
from .topology import (FiniteSpace, closure, discrete, indiscrete, is_extension_closed,
                       separation_axioms, space_from_open_family, subspace, t0_quotient)

__version__ = "0.1.0"
