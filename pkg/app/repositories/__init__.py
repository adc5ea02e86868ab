"""リポジトリパッケージ。"""

from .job_repository import JsonJobRepository

__all__ = ['JsonJobRepository']
