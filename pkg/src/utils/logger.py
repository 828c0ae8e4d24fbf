# -*- coding: utf-8 -*-
"""
日志工具模块
数值库与命令行共用一个日志器。控制台输出固定写 stderr，stdout 只留给 JSON 结果信封；
文件日志默认关闭，由配置中的 logging.log_dir 打开。
"""

import logging
import os
import sys
from datetime import datetime
from logging.handlers import RotatingFileHandler

CONSOLE_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'
FILE_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def parse_level(level, default=logging.WARNING):
    """把 "debug" / "INFO" / 10 之类的写法统一成 logging 的整数级别，无法识别时返回 default"""
    if isinstance(level, int):
        return level
    resolved = logging.getLevelName(str(level).upper())
    return resolved if isinstance(resolved, int) else default


def format_fields(message, fields):
    """在消息后追加 key=value 形式的上下文字段"""
    if not fields:
        return message
    context = ", ".join(f"{key}={value}" for key, value in fields.items())
    return f"{message} | {context}"


class Logger:
    """日志管理器类。包装一个具名 logging.Logger，提供带上下文字段的记录方法。"""

    def __init__(self, name="hamilton_turns", level="WARNING", log_dir=None):
        """
        Args:
            name: 日志器名称
            level: 控制台日志级别
            log_dir: 日志文件目录，为 None 时只输出到控制台
        """
        self.logger = logging.getLogger(name)
        self.logger.setLevel(logging.DEBUG)
        self.logger.propagate = False
        for handler in list(self.logger.handlers):
            self.logger.removeHandler(handler)
            handler.close()

        self.log_dir = None
        self.log_file = None
        self.console_handler = logging.StreamHandler(sys.stderr)
        self.console_handler.setLevel(parse_level(level))
        self.console_handler.setFormatter(logging.Formatter(CONSOLE_FORMAT))
        self.logger.addHandler(self.console_handler)

        if log_dir:
            self.enable_file_log(log_dir)

    def enable_file_log(self, log_dir):
        """打开滚动文件日志 (10MB × 5)，文件日志始终记录 DEBUG 及以上。返回日志文件路径。"""
        os.makedirs(log_dir, exist_ok=True)
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        self.log_dir = log_dir
        self.log_file = os.path.join(log_dir, f"turns_{timestamp}.log")

        file_handler = RotatingFileHandler(
            self.log_file,
            maxBytes=10*1024*1024,
            backupCount=5,
            encoding='utf-8'
        )
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(logging.Formatter(FILE_FORMAT))
        self.logger.addHandler(file_handler)
        return self.log_file

    def set_level(self, level):
        """调整控制台日志级别"""
        self.console_handler.setLevel(parse_level(level))

    def log(self, level, message, **fields):
        self.logger.log(parse_level(level), format_fields(message, fields))

    def debug(self, message, **fields):
        self.log(logging.DEBUG, message, **fields)

    def info(self, message, **fields):
        self.log(logging.INFO, message, **fields)

    def warning(self, message, **fields):
        self.log(logging.WARNING, message, **fields)

    def error(self, message, **fields):
        self.log(logging.ERROR, message, **fields)


# 全局日志实例
app_logger = Logger()
