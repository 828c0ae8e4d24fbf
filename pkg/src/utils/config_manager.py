# -*- coding: utf-8 -*-
"""
配置管理模块
负责加载数值容差与日志配置。配置文件允许 json5 语法（注释、尾逗号）。
"""

import copy
import json
import os
from dataclasses import asdict, dataclass, fields

import json5

from .logger import app_logger

CONFIG_FILE_NAME = "turns_config.json"

DEFAULT_CONFIG = {
    "tolerances": {
        "iso_tol": 1e-12,
        "unit_tol": 1e-10,
        "constraint_tol": 1e-10,
        "real_tol": 1e-12,
        "equivalence_tol": 1e-9,
        "meet_tol": 1e-9,
        "parallel_tol": 1e-12,
        "commuting_tol": 1e-10,
        "collinear_tol": 1e-9,
        "scalar_real_tol": 1e-10,
    },
    "logging": {
        "level": "WARNING",
        "log_dir": None,
    },
}


@dataclass(frozen=True)
class Tolerances:
    """数值容差集合"""

    iso_tol: float = 1e-12
    unit_tol: float = 1e-10
    constraint_tol: float = 1e-10
    real_tol: float = 1e-12
    equivalence_tol: float = 1e-9
    meet_tol: float = 1e-9
    parallel_tol: float = 1e-12
    commuting_tol: float = 1e-10
    collinear_tol: float = 1e-9
    scalar_real_tol: float = 1e-10

    @classmethod
    def from_dict(cls, data: dict) -> 'Tolerances':
        """从字典创建容差对象，忽略未知键"""
        known = {f.name for f in fields(cls)}
        values = {}
        for key, value in (data or {}).items():
            if key not in known:
                app_logger.warning(f"忽略未知容差配置项: {key}")
                continue
            values[key] = float(value)
        return cls(**values)

    def to_dict(self) -> dict:
        """转换为字典格式，用于写入结果信封"""
        return asdict(self)


def _default_config_dir():
    return os.path.join(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))), "config")


class ConfigManager:
    """配置管理器类，负责加载、保存和管理库配置"""

    def __init__(self, config_dir=None):
        """
        初始化配置管理器

        Args:
            config_dir: 配置文件目录，默认为仓库根目录下的 config
        """
        self.config_dir = config_dir or _default_config_dir()
        self.config_file = os.path.join(self.config_dir, CONFIG_FILE_NAME)

        self.config = self._load_config(self.config_file)
        self.tolerances = Tolerances.from_dict(self.config["tolerances"])

        app_logger.debug("配置管理器初始化完成")

    def _load_config(self, config_file):
        """加载配置文件，缺失的键由默认值补齐"""
        config = copy.deepcopy(DEFAULT_CONFIG)
        if not os.path.exists(config_file):
            app_logger.warning(f"配置文件不存在: {config_file}，使用默认配置")
            return config

        try:
            with open(config_file, 'r', encoding='utf-8') as f:
                loaded = json5.loads(f.read())
                app_logger.debug(f"加载配置文件: {config_file}")
        except Exception as e:
            app_logger.error(f"加载配置文件失败: {config_file}, 错误: {str(e)}")
            return config

        for section, values in (loaded or {}).items():
            if isinstance(values, dict) and isinstance(config.get(section), dict):
                config[section].update(values)
            else:
                config[section] = values
        return config

    def save_config(self, config=None):
        """保存配置到文件"""
        config = config if config is not None else self.config
        try:
            if not os.path.exists(self.config_dir):
                os.makedirs(self.config_dir)
            with open(self.config_file, 'w', encoding='utf-8') as f:
                json.dump(config, f, ensure_ascii=False, indent=4)
            app_logger.debug(f"保存配置文件: {self.config_file}")
        except Exception as e:
            app_logger.error(f"保存配置文件失败: {self.config_file}, 错误: {str(e)}")
            return False

        self.config = config
        self.tolerances = Tolerances.from_dict(config.get("tolerances", {}))
        return True

    def get_tolerances(self) -> Tolerances:
        """获取数值容差"""
        return self.tolerances

    def get_logging_config(self) -> dict:
        """获取日志配置"""
        return dict(self.config.get("logging", {}))

    def apply_logging(self, logger=None):
        """按配置设置日志级别与文件输出"""
        logger = logger or app_logger
        logging_config = self.get_logging_config()
        logger.set_level(logging_config.get("level", "WARNING"))
        if logging_config.get("log_dir") and logger.log_file is None:
            logger.enable_file_log(logging_config["log_dir"])


# 创建全局配置管理器实例
config_manager = ConfigManager()
config_manager.apply_logging()
