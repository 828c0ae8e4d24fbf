# -*- coding: utf-8 -*-
"""
核心功能模块包
"""

from .errors import ErrorCode, TurnsError
from .group import GroupElement
from .polar import PolarFactors
from .turns import Composition, CompositionPath, Turn
from .wigner import BoostSpec, WignerResult

__all__ = [
    'BoostSpec',
    'Composition',
    'CompositionPath',
    'ErrorCode',
    'GroupElement',
    'PolarFactors',
    'Turn',
    'TurnsError',
    'WignerResult',
]
