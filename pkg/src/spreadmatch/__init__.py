"""Well-spread perfect matchings of 3-edge-connected cubic graphs."""

from .application import BoundViolated, MatchingPair, small_intersection_pair
from .cuts import (CactusModel, CactusReport, CutFamily, UnknownEdge, build_cactus,
                   induced_family, tree_edge_cut, validate_cactus)
from .graph import (CubicGraph, EdgeCut, EmptyOrFullPart, GraphError, LoopEdge, Multigraph,
                    NotCubic, NotThreeEdgeConnected, OddOrder, build_graph, contract, delta,
                    edge_connectivity_at_least, is_perfect_matching)
from .matching import (EdgeNotFound, NoPerfectMatching, min_weight_perfect_matching,
                       perfect_matching, perfect_matching_containing)
from .oracles import Disconnected, TooLarge, all_perfect_matchings, enumerate_3cuts_bruteforce
from .wellspread import (DecompositionPlan, InternalInvariantViolation, ModelMismatch, NodeRecord,
                         Verdict, assemble, decompose, is_well_spread, well_spread_matching)
