# -*- coding: utf-8 -*-
"""
SL(2,C) 转动演算源码包
"""

__version__ = "1.0.0"
