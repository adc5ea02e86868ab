"""ジョブ入力とレポートの JSON 入出力を管理するリポジトリ。"""

import json
import logging
from pathlib import Path
from typing import Any, TypeVar

from pydantic import BaseModel, ValidationError

from app.errors import InputFileNotFoundError, JobInputError
from app.models.job import AlgebraSpec, AnalysisJob

logger = logging.getLogger('maxclass')

ModelT = TypeVar('ModelT', bound=BaseModel)


def dumps(data: BaseModel | dict[str, Any]) -> str:
    """キーを整列したインデント付き JSON を返す。同じ入力に対して常に同じ文字列になる。"""
    payload = data.model_dump(mode='json') if isinstance(data, BaseModel) else data
    return json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=True) + '\n'


class JsonJobRepository:
    """JSON ファイルベースのジョブリポジトリ。"""

    def load_algebra(self, path: Path) -> AlgebraSpec:
        """代数の入力文書を読み込みます。

        Raises:
            InputFileNotFoundError: ファイルが存在しない場合。
            JobInputError: JSON またはフィールドが不正な場合。
        """
        return self._load(path, AlgebraSpec)

    def load_job(self, path: Path) -> AnalysisJob:
        """解析ジョブの入力文書を読み込みます。

        Raises:
            InputFileNotFoundError: ファイルが存在しない場合。
            JobInputError: JSON またはフィールドが不正な場合。
        """
        return self._load(path, AnalysisJob)

    def save(self, path: Path, report: BaseModel | dict[str, Any]) -> None:
        """レポートを書き込みます。

        Args:
            path: 出力先のパス。親ディレクトリは必要に応じて作成します。
            report: 出力するレポート。
        """
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(dumps(report), encoding='utf-8')
        logger.info(f'レポートを書き出しました: {path}')

    def _load(self, path: Path, model: type[ModelT]) -> ModelT:
        data = self._read_json(path)
        try:
            return model.model_validate(data)
        except ValidationError as e:
            error = e.errors()[0]
            field = '.'.join(str(part) for part in error['loc']) or model.__name__
            raise JobInputError(field, error['msg']) from e

    def _read_json(self, path: Path) -> Any:
        """JSONファイルを読み込みます。"""
        if not path.is_file():
            raise InputFileNotFoundError(str(path))
        try:
            with open(path, encoding='utf-8') as f:
                return json.load(f)
        except json.JSONDecodeError as e:
            logger.error(f'[ERROR] JSONファイル読み込みエラー: {path}, エラー: {e}')
            raise JobInputError(path.name, f'JSON として解釈できません（{e.lineno} 行目）') from e
