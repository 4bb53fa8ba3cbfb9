# -*- coding: utf-8 -*-
"""工具模块"""

from .config_manager import ConfigManager, config_manager
from .logger import logger
from .errors import (
    CssGameError,
    SizeLimitError,
    ArityError,
    InvalidTransformError,
    InvalidInputError,
    InvalidCodeError,
    ParameterError,
    DegreeError,
    ShapeError,
    ModeError,
    DomainError,
    NumericError,
    FormatError,
    ConstructionError,
    ConsistencyError,
)

__all__ = [
    "ConfigManager", "config_manager", "logger",
    "CssGameError", "SizeLimitError", "ArityError", "InvalidTransformError",
    "InvalidInputError", "InvalidCodeError", "ParameterError", "DegreeError",
    "ShapeError", "ModeError", "DomainError", "NumericError", "FormatError",
    "ConstructionError", "ConsistencyError",
]
