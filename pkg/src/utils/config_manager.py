# -*- coding: utf-8 -*-
"""配置管理器模块"""

import os
import json
from typing import Dict, Any, Optional

from dotenv import load_dotenv

from src.utils.logger import logger

# 环境变量前缀，例如 CSSGAMES_OMEGA_SPAN_MAX=18
ENV_PREFIX = "CSSGAMES_"


def default_config() -> Dict[str, Any]:
    """
    默认配置（各类规模上限与线程数）

    Returns:
        Dict[str, Any]: 默认配置字典
    """
    return {
        # F2 线性代数
        "f2_span_max_rank": 20,
        # 布尔函数
        "walsh_max_vars": 28,
        "nonquadraticity_max_vars": 14,
        "nonquadraticity_max_log2_cost": 22,
        # 游戏构造
        "crosscheck_max_vars": 20,
        "submeasurement_max_support": 24,
        "submeasurement_max_group_rank": 20,
        # 经典策略
        "omega_span_max": 22,
        "omega_vars_max": 24,
        "omega_max_log2_cost": 30,
        "oracle_max_players": 4,
        "oracle_max_vars": 8,
        # 量子模拟
        "statevector_max_qubits": 22,
        "multi_constraint_max": 20,
        # 情境性
        "ncf_max_observables": 20,
        "simplex_max_iterations": 200000,
        # 统计力学
        "loop_max_plaquettes": 24,
        # 并行
        "threads": 1,
    }


def _parse_env_value(raw: str) -> Any:
    """尽量把环境变量解析为JSON标量，失败时保留字符串"""
    try:
        return json.loads(raw)
    except ValueError:
        return raw


class ConfigManager:
    """配置管理器：默认值 < 配置文件 < CSSGAMES_ 环境变量"""

    def __init__(self, config_path: Optional[str] = None):
        self.config_file = config_path or os.path.join(os.getcwd(), "config.json")
        self.config_data = self._load_config()

    def _load_config(self) -> Dict[str, Any]:
        config = default_config()

        if os.path.exists(self.config_file):
            try:
                with open(self.config_file, 'r', encoding='utf-8') as f:
                    # 文件中缺失的键保留默认值
                    config.update(json.load(f))
            except (OSError, ValueError) as e:
                logger.warning(f"加载配置文件失败: {e}")

        load_dotenv()
        for key in list(config.keys()):
            env_key = ENV_PREFIX + key.upper()
            if env_key in os.environ:
                config[key] = _parse_env_value(os.environ[env_key])
                logger.debug(f"环境变量覆盖配置: {key}={config[key]}")

        return config

    def load_file(self, config_path: str) -> None:
        """
        切换到另一个配置文件并重新加载（CLI 的 --config）

        Args:
            config_path: 配置文件路径
        """
        self.config_file = config_path
        self.config_data = self._load_config()

    def get(self, key: str, default: Any = None) -> Any:
        return self.config_data.get(key, default)

    def get_int(self, key: str) -> int:
        """
        获取整数配置（规模上限），缺失时回退到默认值

        Args:
            key: 配置键

        Returns:
            int: 配置值
        """
        return int(self.config_data.get(key, default_config().get(key)))

    def set(self, key: str, value: Any) -> None:
        self.config_data[key] = value


# 全局配置管理器实例
config_manager = ConfigManager()
