"""Exact commutative algebra: standard bases, determinantal ideals, cokernel
annihilators, derivation modules, essential singular loci and orbit-tangent
annihilator bounds."""

from .config import LIMITS, DegreeOverflow
from .field import QQ, FieldGF
from .ideals import (
    UNDETERMINED,
    Ideal,
    eliminate,
    ideal_intersect,
    ideal_product,
    ideal_quotient,
    ideal_sum,
    radical_equal,
    radical_member,
    saturation,
)
from .matrices import (
    RMat,
    Submodule,
    ann_coker,
    ann_coker_j,
    ann_fp_module,
    ann_quotient,
    det,
    det_ideal,
    exterior_map,
    submodule_intersect,
)
from .derivations import DerBasis, apply_der, der_ideal_image, der_matrix_image, der_module, der_module_m
from .orders import DEGREVLEX, LEX, NEGDEGREVLEX, Block
from .ring import Poly, RingSpec
from .session import Session, SessionError, parse_session
from .singloc import fitt_omega, pfaffian, pfaffian_ideal, sing_locus
from .tjurina import (
    GroupAction,
    T1Report,
    congr_bounds,
    glr_bounds,
    radical_support_check,
    t1_annihilator,
    tangent_orbit_presentation,
)

__version__ = "0.1.0"
