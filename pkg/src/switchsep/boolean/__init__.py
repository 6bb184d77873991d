from .ebf import (ExtendedBooleanFunction, canonical_decomposition,
                  ebf_from_polynomial, ebf_is_separable, graph_to_polynomial,
                  is_quadratic_ebf, polynomial_to_graph)
from .polynomial import Gf2Polynomial, moebius_transform
