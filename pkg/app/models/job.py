"""ジョブ入力とレポートのモデルを定義するモジュール。"""

from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, computed_field

from app.config import config
from app.models.algebra import ValidationReport, WindowCheck
from app.models.analysis import ConstituentStats, DichotomyResult, KChainReport
from app.models.field_tower import FieldTower
from app.types import Command, DichotomyVariant, OutputFormat


class AlgebraSpec(BaseModel):
    """代数の入力文書 {"tower", "N", "lines"}。lines の各要素は [a の係数列, b の係数列]。"""

    model_config = ConfigDict(frozen=True)

    tower: FieldTower
    N: int
    lines: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]


class AnalysisJob(BaseModel):
    """解析ジョブの入力文書。L1 は M_1 を F^{2d} に平坦化したベクトルの列。"""

    model_config = ConfigDict(frozen=True)

    algebra: AlgebraSpec
    L1: tuple[tuple[int, ...], ...]
    N: int
    r_max: int | None = None
    seed: int = Field(default_factory=lambda: config.DEFAULT_SEED)


class SearchParams(BaseModel):
    """search コマンドの引数。"""

    model_config = ConfigDict(frozen=True)

    p: int
    minpoly: tuple[int, ...] = (0, 1)
    depth: int
    max_centralisers: int = 2
    budget: int = Field(default_factory=lambda: config.SEARCH_BUDGET)


class JobSpec(BaseModel):
    """CLI から組み立てたジョブ。target は入力ファイルのパスかプリセット名。"""

    model_config = ConfigDict(frozen=True)

    command: Command
    target: str | None = None
    search: SearchParams | None = None
    format: OutputFormat = OutputFormat.TEXT
    seed: int = Field(default_factory=lambda: config.DEFAULT_SEED)
    out: Path | None = None


class Expectation(BaseModel):
    """プリセットが満たすべき結果。"""

    model_config = ConfigDict(frozen=True)

    anchor: str
    variant: DichotomyVariant | None = None
    r_empirical: int | None = None
    k_chain: tuple[int, int] | None = None


class CheckResult(BaseModel):
    """名前付きの検査1件の結果。anchor は照合先の命題。"""

    model_config = ConfigDict(frozen=True)

    name: str
    anchor: str
    passed: bool
    detail: str = ''


class ValidateReport(BaseModel):
    """validate コマンドのレポート。"""

    model_config = ConfigDict(frozen=True)

    tower: FieldTower
    N: int
    lines: tuple[str, ...]
    status: str
    report: ValidationReport
    window: WindowCheck

    @computed_field  # type: ignore[prop-decorator]
    @property
    def ok(self) -> bool:
        """検証に成功したかどうか。"""
        return self.report.ok


class AnalysisReport(BaseModel):
    """analyze / reproduce コマンドのレポート。"""

    model_config = ConfigDict(frozen=True)

    name: str
    tower: FieldTower
    N: int
    seed: int
    dims: tuple[int, ...] = ()
    d_seq: tuple[int, ...] = ()
    field_degrees: tuple[int, ...] = ()
    K_degree: int | None = None
    t: int | None = None
    r_gen: int | None = None
    stabilized: bool | None = None
    two_dimensional_generator: bool = False
    k_chain: KChainReport | None = None
    classification: DichotomyResult | None = None
    predicted: ConstituentStats | None = None
    checks: tuple[CheckResult, ...] = ()

    @computed_field  # type: ignore[prop-decorator]
    @property
    def ok(self) -> bool:
        """すべての検査を通過したかどうか。"""
        return all(check.passed for check in self.checks)


class SearchReport(BaseModel):
    """search コマンドのレポート。"""

    model_config = ConfigDict(frozen=True)

    tower: FieldTower
    depth: int
    max_centralisers: int
    budget_exhausted: bool
    sequences: tuple[tuple[str, ...], ...]

    @property
    def ok(self) -> bool:
        """予算内で探索を終えたかどうか。"""
        return not self.budget_exhausted
