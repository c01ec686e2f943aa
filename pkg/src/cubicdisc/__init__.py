"""Exact verification library for the cubic discriminant curvature orbit."""

__version__ = "1.0.0"

from .scalars import ExactScalar, ExactBackend, FloatBackend, EXACT, FLOAT, get_backend
from .hk import SymQuartic, HKTensor, kappa, kappa_inv, t_k
from .irrep import rep_w, upsilons, s_hat, classical_discriminant
