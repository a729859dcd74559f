from .basic import BasicFunctionId, eval_basic
from .cec19 import Cec19Id, eval_cec19, make_all_cec19, make_cec19
from .composite import (
    CompositeSpec,
    composite_specs,
    eval_composite,
    make_all_composites,
    make_composite,
)
from .shifted import SHIFTED_SPECS, ShiftedSpec, make_all_shifted, make_shifted

__all__ = [
    "BasicFunctionId",
    "eval_basic",
    "Cec19Id",
    "eval_cec19",
    "make_cec19",
    "make_all_cec19",
    "CompositeSpec",
    "composite_specs",
    "eval_composite",
    "make_composite",
    "make_all_composites",
    "ShiftedSpec",
    "SHIFTED_SPECS",
    "make_shifted",
    "make_all_shifted",
]
