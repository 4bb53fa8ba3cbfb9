# -*- coding: utf-8 -*-
"""异常类型模块

所有计算错误都继承自 CssGameError，CLI 捕获后以 JSON 形式输出。
"""

from typing import Any, Dict, Optional


class CssGameError(Exception):
    """项目异常基类"""

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self) -> Dict[str, Any]:
        """
        转换为可序列化的字典

        Returns:
            Dict[str, Any]: 包含错误类型、消息和附加字段
        """
        data = {"error": type(self).__name__, "message": self.message}
        data.update(self.details)
        return data


class SizeLimitError(CssGameError):
    """超出可配置的规模上限"""

    def __init__(self, message: str, key: Optional[str] = None, limit: Optional[int] = None):
        super().__init__(message, key=key, limit=limit)
        self.key = key
        self.limit = limit


class ArityError(CssGameError):
    """布尔函数变量个数不匹配"""


class InvalidTransformError(CssGameError):
    """仿射变换矩阵不可逆"""


class InvalidInputError(CssGameError):
    """输入向量不在对应的行空间中"""


class InvalidCodeError(CssGameError):
    """校验矩阵不满足CSS对易条件或形状不一致"""


class ParameterError(CssGameError):
    """参数取值非法"""


class DegreeError(CssGameError):
    """代数次数超出允许范围"""


class ShapeError(CssGameError):
    """矩阵形状或对称性错误"""


class ModeError(CssGameError):
    """游戏模式或输入集合不满足算法前提"""


class DomainError(CssGameError):
    """数值超出定义域"""


class NumericError(CssGameError):
    """数值积分或迭代不收敛"""


class FormatError(CssGameError):
    """文件格式错误，带行号"""

    def __init__(self, message: str, path: Optional[str] = None, line: Optional[int] = None):
        super().__init__(message, path=path, line=line)
        self.path = path
        self.line = line

    def __str__(self) -> str:
        where = f"{self.path or '<input>'}:{self.line}" if self.line is not None else (self.path or "<input>")
        return f"{where}: {self.message}"


class ConstructionError(CssGameError):
    """量子态构造失败（例如投影后范数为零）"""


class ConsistencyError(CssGameError):
    """两种独立计算结果不一致"""
