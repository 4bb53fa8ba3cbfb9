# -*- coding: utf-8 -*-
"""日志记录器模块

文件日志按天写入 CSSGAMES_LOG_DIR（缺省 logs/），级别 DEBUG；
控制台写到 stderr，级别 INFO，stdout 留给 CLI 的 JSON/CSV 输出。
"""

import logging
import os
from datetime import datetime

from dotenv import load_dotenv

load_dotenv()

FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

logger = logging.getLogger("cssgames")
logger.setLevel(logging.DEBUG)

console_handler = logging.StreamHandler()
console_handler.setLevel(logging.INFO)
console_handler.setFormatter(logging.Formatter(FORMAT))


def _file_handler() -> logging.Handler:
    log_dir = os.environ.get("CSSGAMES_LOG_DIR", "logs")
    os.makedirs(log_dir, exist_ok=True)
    path = os.path.join(log_dir, f"cssgames_{datetime.now().strftime('%Y%m%d')}.log")
    handler = logging.FileHandler(path, encoding='utf-8')
    handler.setLevel(logging.DEBUG)
    handler.setFormatter(logging.Formatter(FORMAT))
    return handler


if not logger.handlers:
    logger.addHandler(_file_handler())
    logger.addHandler(console_handler)


def set_console_level(level: int) -> None:
    """CLI 的 --verbose 把控制台级别调到 DEBUG"""
    console_handler.setLevel(level)
