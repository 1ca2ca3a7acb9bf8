"""Exact combinatorics of partial barycentric subdivisions of simplicial complexes."""

from .complex import SimplicialComplex, f_to_h, f_vector, h_to_f, h_vector, minimal_nonfaces
from .exact import IntPolynomial, RationalMatrix, format_rational, parse_rational
from .localh import local_h
from .partitions import R_count, R_formula
from .permstat import count_A, distribution_table, l_descent_set
from .spectral import eigen_decompose, perron_vector
from .subdivide import partial_subdivision
from .transform import apply_f_transform, apply_h_transform, f_matrix, h_matrix, iterate_h

__version__ = "0.1.0"
