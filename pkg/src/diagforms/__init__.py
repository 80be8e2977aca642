"""Exact counting of integer representations by diagonal forms.

The package is organised by concern:

* :mod:`diagforms.forms` -- diagonal forms, exact evaluation, integer roots
* :mod:`diagforms.enumeration` -- box enumeration and representation counts
* :mod:`diagforms.special` -- special solutions, standard lines, Thue equations
* :mod:`diagforms.detmethod` -- determinant-method bookkeeping
* :mod:`diagforms.experiments` -- scaling studies and report emitters
* :mod:`diagforms.cli` -- the ``diagforms`` command
"""

from diagforms.errors import BudgetError, DiagformsError, InputError, ParameterError, RankError
from diagforms.forms import (
    DiagonalForm,
    Region,
    SearchRegion,
    SolutionClass,
    SolutionRecord,
    evaluate,
    integer_kth_root,
    iroot_floor,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "DiagformsError",
    "DiagonalForm",
    "InputError",
    "ParameterError",
    "RankError",
    "Region",
    "SearchRegion",
    "SolutionClass",
    "SolutionRecord",
    "evaluate",
    "integer_kth_root",
    "iroot_floor",
]
