# -*- coding: utf-8 -*-
"""CSS 码非局域游戏计算工具 - 主包"""

__version__ = "1.0.0"
__author__ = "CssGames"
