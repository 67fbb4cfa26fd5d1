"""Weighted tree automata over strong bimonoids, with crisp determinization."""

from .algebra import (BOOLEAN, CUT, INF, NATURAL, TROPICAL, TROPICAL_BIMONOID, Bimonoid,
                      FiniteOrderInfo, finite_order, get_bimonoid, mult_closure, nfold_sum)
from .data import load_example
from .errors import (AlphabetMismatch, BudgetExceeded, MalformedAcceptor, NotCrispDeterministic,
                     NotEstablished, NotRepresentable, ParseError, SafetyCapExceeded, WtaError)
from .fileformat import (load_mealy, load_stepmap, load_wta, parse_mealy, parse_stepmap, parse_wta,
                         write_algebra, write_mealy, write_wta)
from .nerode import NerodeResult, build_nerode, minimality_probe
from .rootalg import (RootWeightAlgebra, accessible_part, alg_eval, direct_product, isomorphic,
                      to_algebra)
from .rundet import (OrderData, PiState, build_run_det, check_finite_order_property, compute_pi,
                     j_map, pi_of_tree)
from .stepmap import StepMapping, crisp_to_step, step_eval, step_to_crisp
from .terms import (HOLE, RankedAlphabet, Tree, enumerate_trees, parse_tree, positions, substitute,
                    word_tree)
from .wta import (Wta, eval_init, eval_run, eval_run_naive, eval_vector, export_hypergraph,
                  final_variant, first_difference, is_bu_deterministic, is_crisp_deterministic,
                  is_total, run_profile)

__version__ = "0.1.0"
