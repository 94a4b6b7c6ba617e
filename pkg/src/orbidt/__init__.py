"""Equivariant K-theoretic degree-0 DT series of [C^3/mu_r].

The series is computed twice: by brute-force localization over colored plane
partitions (:mod:`orbidt.qseries`) and from closed plethystic formulas
(:mod:`orbidt.pleth`).  The equivariant limit is also obtained from a
transfer matrix (:mod:`orbidt.transfer`).
"""
from .laurent import CRational, LaurentPoly, RationalPoint
from .partitions import PlanePartition, enumerate_partitions, index_semigroup
from .pleth import build_F_col, build_F_limit, build_F_num, build_F_r, pexp_eval, plog
from .qseries import QSeries, z_enumerated
from .transfer import z_limit
from .vertex import ahat_eval, ahat_limit, weights

__version__ = "0.1.0"

__all__ = [
    "CRational", "LaurentPoly", "RationalPoint", "PlanePartition", "enumerate_partitions", "index_semigroup",
    "build_F_col", "build_F_limit", "build_F_num", "build_F_r", "pexp_eval", "plog", "QSeries",
    "z_enumerated", "z_limit", "ahat_eval", "ahat_limit", "weights",
]
