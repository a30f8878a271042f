"""Exact construction and verification of ambiskew Hopf algebra extensions."""

from . import uqsl2 as _uqsl2  # registers the quantum family  # noqa: F401
from .ambicore import AmbiElement, AmbiskewAlgebra, Tensor, TensorElement, reduce_word
from .basehopf import (
    BaseAlgebra,
    BaseAutomorphism,
    BaseElement,
    BaseTensor,
    Character,
    GroupBase,
    LaurentBase,
    PolynomialBase,
    make_base,
)
from .coradical import CoradicalContext, corad_degree
from .hopfstruct import (
    CheckReport,
    ExtensionData,
    GeneralPresentation,
    HopfAmbiskewAlgebra,
    check_main_theorem,
    classify_trichotomy,
    construct_hopf,
    fast_path_check,
    relabel,
    verify_hopf_axioms,
)
from .scalar import (
    CyclotomicField,
    RationalField,
    RationalFunctionField,
    Scalar,
    hat,
    mul_order,
    prec,
    q_binomial,
    q_factorial,
    q_int,
)
from .uqsl2 import UqSl2Base

__version__ = "0.1.0"

__all__ = [
    "AmbiElement", "AmbiskewAlgebra", "Tensor", "TensorElement", "reduce_word",
    "BaseAlgebra", "BaseAutomorphism", "BaseElement", "BaseTensor", "Character",
    "GroupBase", "LaurentBase", "PolynomialBase", "UqSl2Base", "make_base",
    "CoradicalContext", "corad_degree",
    "CheckReport", "ExtensionData", "GeneralPresentation", "HopfAmbiskewAlgebra",
    "check_main_theorem", "classify_trichotomy", "construct_hopf",
    "fast_path_check", "relabel", "verify_hopf_axioms",
    "CyclotomicField", "RationalField", "RationalFunctionField", "Scalar",
    "hat", "mul_order", "prec", "q_binomial", "q_factorial", "q_int",
]
