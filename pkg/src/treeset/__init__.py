"""Combinatorics on words for tree sets: extension graphs, Rauzy graphs,
Stallings foldings and first return words."""

from .errors import (ConjugacyViolated, DisconnectedGraph, EmptyWordInCode, HorizonExceeded,
                     NoOccurrence, NoSpecialVertex, NotFolded, NotProlongable, PeriodicSet,
                     StabilizationFailed, TooManyBlocks, TreeSetError)
from .words import (EMPTY, Alphabet, FactorSet, Word, contains, is_f_maximal_prefix_code,
                    is_f_maximal_suffix_code, is_factorial, is_prefix_code, is_suffix_code,
                    residual)
from .extension import (BipartiteExtensionGraph, check_tree_condition, complexity,
                        extension_graph, extension_pairs, generalized_extension_graph,
                        is_bispecial, is_left_special, is_right_special, is_tree,
                        left_extensions, right_extensions)
from .graphs import LabeledGraph, canonical_form, graphs_isomorphic, quotient
from .freegroup import (GroupElement, StallingsGraph, contains_element, group_of_graph,
                        is_basis_of_free_group, rank, reduce, subgroup_graph)
from .rauzy import (RauzyGraph, TypeClass, classify_rauzy, classify_type, is_strongly_connected,
                    rauzy_graph, stallings_fold, theta_equivalence, type_graph)
from .returns import (ReturnSet, conjugacy_check, finite_case_table_check,
                      first_return_words, first_return_words_oracle, infinite_case_shape_check,
                      is_unioccurrent, return_words, shortest_bispecial_extension)
from .generators import (Source, Substitution, block_decode, chacon, factor_set_from_prefix,
                         fibonacci, fibonacci_block2, fixed_point_prefix, load_source, tribonacci)

__version__ = "0.1.0"
