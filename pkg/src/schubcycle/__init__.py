"""Combinatorics of the lattice of minors generating a Schubert cycle.

The lattice of m-subsets above a fixed minor gamma, its join-irreducible
elements, their embedding as a filter of N x N, and the Gorenstein criterion,
each computed both in closed form and by brute-force enumeration.
"""

from .gorenstein import GorensteinReport, OracleDisagreementError, gorenstein_report, is_gorenstein
from .irreducible import (
    PQ,
    FilterShape,
    filter_shape,
    is_join_irreducible,
    join_irreducibles,
    l_set,
    minimal_join_irreducibles,
    phi,
    phi_inverse,
    pivot_index,
    pq_in_image,
)
from .kernels import BACKEND
from .minor import (
    GammaContext,
    InvalidMinorError,
    Minor,
    gamma_from_schubert_conditions,
    is_cover,
    join,
    leq,
    meet,
    validate_minor,
)
from .poset import (
    GuardExceededError,
    PosetView,
    coheight_in,
    enumerate_lattice,
    induced_subposet,
    is_pure,
    join_irreducibles_oracle,
    u_gamma_support,
)

__version__ = "0.1.0"
