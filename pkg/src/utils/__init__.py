# -*- coding: utf-8 -*-
"""
工具模块包
"""

from .logger import app_logger
from .config_manager import Tolerances, config_manager

__all__ = ['Tolerances', 'app_logger', 'config_manager']
