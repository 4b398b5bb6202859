"""Double Gelfand-Cetlin systems on T*U(n), their Bohr-Sommerfeld points,
and a lattice-point check of the Peter-Weyl decomposition."""

from .bohr_sommerfeld import (
    BSPoint,
    BSVariant,
    count_bs_points,
    enumerate_bs_points,
    from_triple,
    is_bs_point,
    realize,
    round_to_lattice,
    to_triple,
)
from .errors import CapacityError, DomainError, NumericalError
from .gc import (
    CotangentPoint,
    DoubleGCVector,
    GCVector,
    double_gc,
    gc_map,
    gc_preimage,
    in_B,
    is_sreg_point,
    is_strongly_regular,
    moment_map,
)
from .linalg import (
    HermitianMatrix,
    UnitaryMatrix,
    coadjoint,
    corner,
    eigenvalues_desc,
    haar_unitary,
    random_hermitian,
    sweep,
)
from .peter_weyl import PWReport, pw_check, pw_table
from .polytope import (
    DominantWeight,
    GCPattern,
    contains,
    contains_interior,
    count_integral_points,
    dual_weight,
    enumerate_integral_points,
    exact_point,
    weyl_dim,
)

__version__ = "0.1.0"
