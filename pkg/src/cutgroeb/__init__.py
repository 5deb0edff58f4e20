"""Cut ideals of graphs and Groebner bases of binomial ideals."""

from .config import (
    Configuration,
    cut_configuration,
    cut_vector,
    fiber_monomials,
    fixture,
    same_up_to_column_permutation,
    squarefree_veronese,
)
from .gb import (
    Binomial,
    GroebnerBasis,
    buchberger,
    degree_histogram,
    ideal_membership,
    is_quadratic,
    is_squarefree_initial,
    normal_form,
    reduce_basis,
    s_pair,
)
from .graphs import Graph, complete, complete_bipartite, contract_edge, cycle, fig1
from .orders import DegRevLex, Lex, WeightOrder, paper_order
from .toric import fiber_markov_oracle, integer_kernel_basis, toric_ideal

__all__ = [
    "Binomial",
    "Configuration",
    "DegRevLex",
    "Graph",
    "GroebnerBasis",
    "Lex",
    "WeightOrder",
    "buchberger",
    "complete",
    "complete_bipartite",
    "contract_edge",
    "cut_configuration",
    "cut_vector",
    "cycle",
    "degree_histogram",
    "fiber_markov_oracle",
    "fiber_monomials",
    "fig1",
    "fixture",
    "ideal_membership",
    "integer_kernel_basis",
    "is_quadratic",
    "is_squarefree_initial",
    "normal_form",
    "paper_order",
    "reduce_basis",
    "s_pair",
    "same_up_to_column_permutation",
    "squarefree_veronese",
    "toric_ideal",
]
