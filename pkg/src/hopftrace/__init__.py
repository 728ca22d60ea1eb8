"""Exact antipode traces of simple modules over finite-dimensional Hopf algebras."""

from .cyclo import CycNum, root
from .exactla import CMatrix
from .qarith import QContext
from .repcore import Rep, custom_rep, mu, mu_oracle

__all__ = ["CMatrix", "CycNum", "QContext", "Rep", "custom_rep", "mu", "mu_oracle", "root"]
