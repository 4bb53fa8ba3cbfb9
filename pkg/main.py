#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
CSS 码非局域游戏计算工具
命令行启动脚本
"""

import sys
import os

# 添加项目根目录到Python路径
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from src.main import main

if __name__ == "__main__":
    sys.exit(main())
