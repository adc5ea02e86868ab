"""ログ設定を管理するモジュール。"""

import logging
import logging.handlers
from typing import TYPE_CHECKING, TextIO

from app.config import config as app_config

# テストのモック互換用に公開
config = app_config

if TYPE_CHECKING:
    from app.config import Config

_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def _setup_console_handler(config: 'Config') -> logging.StreamHandler[TextIO]:
    """コンソールハンドラーを設定する。

    標準出力はレポート用に空けておくため、ログは標準エラー出力へ書き出す。
    """
    console_handler = logging.StreamHandler()
    console_handler.setLevel(getattr(logging, config.LOG_LEVEL))
    console_handler.setFormatter(logging.Formatter(_FORMAT))
    return console_handler


def _setup_file_handler(config: 'Config') -> logging.handlers.TimedRotatingFileHandler:
    """ファイルハンドラーを設定する。"""
    log_dir = config.log_file_path.parent
    log_dir.mkdir(parents=True, exist_ok=True)

    file_handler = logging.handlers.TimedRotatingFileHandler(
        config.log_file_path,
        when='midnight',
        interval=1,
        backupCount=config.LOG_ROTATION_DAYS,
    )
    file_handler.setLevel(getattr(logging, config.LOG_LEVEL))
    file_handler.setFormatter(logging.Formatter(_FORMAT))

    return file_handler


def setup_logging() -> None:
    """ログ設定を初期化する。

    複数回呼び出してもハンドラは重複しない。
    """
    app_logger = logging.getLogger('maxclass')
    app_logger.setLevel(getattr(logging, config.LOG_LEVEL))

    if app_logger.handlers:
        return

    app_logger.addHandler(_setup_console_handler(config))
    if config.LOG_FILE_ENABLED:
        app_logger.addHandler(_setup_file_handler(config))

    # ルートロガーへ二重に流さない
    app_logger.propagate = False
