"""Square roots of complexified quaternions through the real Clifford algebra Cl(3,0)."""

from .isomaps import BasisMap, builtin_maps, default_map, from_mv, to_mv, verify_homomorphism
from .mv import CL12, CL30, Multivector3, Signature, geometric_product, grade, inf_norm
from .oracle import OracleConfig, cross_check, oracle_roots
from .quaternion import (
    COQUATERNION,
    CONECTORINE,
    FAMILIES,
    HAMILTON,
    NECTORINE,
    ComplexQuaternion,
    QuaternionFamily,
)
from .sqrt import ContinuumFamily, Isolated, SqrtSolution, continuum_sample, sqrt_cq, sqrt_mv

__all__ = [
    "BasisMap", "builtin_maps", "default_map", "from_mv", "to_mv", "verify_homomorphism",
    "CL12", "CL30", "Multivector3", "Signature", "geometric_product", "grade", "inf_norm",
    "OracleConfig", "cross_check", "oracle_roots",
    "COQUATERNION", "CONECTORINE", "FAMILIES", "HAMILTON", "NECTORINE", "ComplexQuaternion", "QuaternionFamily",
    "ContinuumFamily", "Isolated", "SqrtSolution", "continuum_sample", "sqrt_cq", "sqrt_mv",
]
