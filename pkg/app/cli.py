"""コマンドラインのフロントエンド。

終了コードは成功で 0、検証や検査の失敗で 1、入力の不備で 2。
"""

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from pydantic import ValidationError

from app.config import config
from app.errors import AppError, JobInputError
from app.logger import setup_logging
from app.models.job import AnalysisReport, JobSpec, SearchParams, SearchReport, ValidateReport
from app.repositories.job_repository import JsonJobRepository, dumps
from app.services.job_service import JobService
from app.services.presets import preset_names
from app.types import Command, OutputFormat

logger = logging.getLogger('maxclass')

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

Report = ValidateReport | AnalysisReport | SearchReport


def build_parser() -> argparse.ArgumentParser:
    """引数パーサーを構築する。"""
    parser = argparse.ArgumentParser(
        prog='maxclass', description='極大類リー代数の部分代数を検証・解析する。'
    )
    parser.add_argument(
        '--format', choices=[f.value for f in OutputFormat], default=OutputFormat.TEXT.value
    )
    parser.add_argument('--seed', type=int, default=config.DEFAULT_SEED)
    parser.add_argument('--out', type=Path, default=None, help='レポートの出力先')
    sub = parser.add_subparsers(dest='command', required=True)

    validate = sub.add_parser(Command.VALIDATE.value, help='代数を検証する')
    validate.add_argument('path', help='代数の JSON ファイル')

    analyze = sub.add_parser(Command.ANALYZE.value, help='解析ジョブを実行する')
    analyze.add_argument('path', help='解析ジョブの JSON ファイル')

    search = sub.add_parser(Command.SEARCH.value, help='中心化列を探索する')
    search.add_argument('--p', type=int, required=True)
    search.add_argument('--minpoly', default='0,1', help='最小多項式の係数（低次から、カンマ区切り）')
    search.add_argument('--depth', type=int, required=True)
    search.add_argument('--max-centralisers', type=int, default=2)
    search.add_argument('--budget', type=int, default=config.SEARCH_BUDGET)

    reproduce = sub.add_parser(Command.REPRODUCE.value, help='プリセットを実行する')
    reproduce.add_argument('name', help=f'プリセット名: {", ".join(preset_names())}')
    return parser


def _parse_minpoly(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(','))
    except ValueError as e:
        raise JobInputError('minpoly', f'整数のカンマ区切りで指定してください: {text!r}') from e


def job_spec(args: argparse.Namespace) -> JobSpec:
    """解析済みの引数から JobSpec を組み立てる。

    Raises:
        JobInputError: 引数の値が不正な場合。
    """
    command = Command(args.command)
    search = None
    target = None
    if command is Command.SEARCH:
        search = SearchParams(
            p=args.p,
            minpoly=_parse_minpoly(args.minpoly),
            depth=args.depth,
            max_centralisers=args.max_centralisers,
            budget=args.budget,
        )
    elif command is Command.REPRODUCE:
        target = args.name
    else:
        target = args.path
    return JobSpec(
        command=command,
        target=target,
        search=search,
        format=OutputFormat(args.format),
        seed=args.seed,
        out=args.out,
    )


def execute(service: JobService, spec: JobSpec) -> Report:
    """ジョブを実行してレポートを返す。"""
    if spec.command is Command.VALIDATE:
        return service.validate(Path(spec.target or ''))
    if spec.command is Command.ANALYZE:
        return service.analyze(Path(spec.target or ''), seed=spec.seed)
    if spec.command is Command.SEARCH:
        if spec.search is None:
            raise JobInputError('search', '探索の引数がありません')
        return service.search(spec.search)
    return service.reproduce(spec.target or '', seed=spec.seed)


def render_text(report: Report) -> str:
    """レポートを人が読む形式に整形する。"""
    lines: list[str] = []
    if isinstance(report, ValidateReport):
        lines.append(f'tower: {report.tower.describe()}')
        lines.append(f'N: {report.N}')
        lines.append(f'status: {report.status}')
        for failure in report.report.failures:
            witness = failure.basis if failure.basis is not None else failure.degrees
            lines.append(f'- {failure.kind}: {witness}')
    elif isinstance(report, SearchReport):
        lines.append(f'tower: {report.tower.describe()}')
        lines.append(f'depth: {report.depth}, max_centralisers: {report.max_centralisers}')
        if report.budget_exhausted:
            lines.append('budget exhausted (partial results)')
        lines.extend(' '.join(sequence) for sequence in report.sequences)
    else:
        lines.append(f'{report.name}: {report.tower.describe()}, N={report.N}')
        lines.append(f'dims: {list(report.dims)}')
        if report.t is not None:
            lines.append(f'[K:F] = {report.t}, r_gen = {report.r_gen}')
        if report.classification is not None:
            lines.append(f'classification: {report.classification.variant}')
        for check in report.checks:
            mark = 'PASS' if check.passed else 'FAIL'
            lines.append(f'[{mark}] {check.name} ({check.anchor}): {check.detail}')
    return '\n'.join(lines) + '\n'


def run(argv: Sequence[str] | None = None) -> int:
    """CLI を実行して終了コードを返す。"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    repository = JsonJobRepository()
    service = JobService(repository)
    try:
        spec = job_spec(args)
        report = execute(service, spec)
    except (AppError, ValidationError) as e:
        field = getattr(e, 'field', None)
        logger.error(f'[ERROR] 入力エラー: {e}')
        sys.stderr.write(f'error: {e}' + (f' (field: {field})' if field else '') + '\n')
        return EXIT_USAGE

    text = dumps(report) if spec.format is OutputFormat.JSON else render_text(report)
    if spec.out is not None:
        if spec.format is OutputFormat.JSON:
            repository.save(spec.out, report)
        else:
            spec.out.parent.mkdir(parents=True, exist_ok=True)
            spec.out.write_text(text, encoding='utf-8')
    else:
        sys.stdout.write(text)
    return EXIT_OK if report.ok else EXIT_FAILED


def main() -> None:
    """エントリポイント。"""
    setup_logging()
    sys.exit(run())
