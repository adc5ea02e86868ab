"""名前付きプリセットの登録簿。"""

from pydantic import BaseModel, ConfigDict

from app.config import config
from app.errors import UnknownPresetError
from app.models.field_tower import FieldTower
from app.models.job import AlgebraSpec, AnalysisJob, Expectation
from app.types import DichotomyVariant, TowerMode

# M_1 の点 (a, b) を係数列の組で書く
Point = tuple[tuple[int, ...], tuple[int, ...]]

X: Point = ((1,), (0,))
Y: Point = ((0,), (1,))
ALPHA_X: Point = ((0, 1), (0,))
ALPHA_Y: Point = ((0,), (0, 1))
ALPHA_X_PLUS_Y: Point = ((0, 1), (1,))


class Preset(BaseModel):
    """プリセット1件。塔、L_1 の生成元、切断次数と期待される結果を持つ。"""

    model_config = ConfigDict(frozen=True)

    name: str
    description: str
    tower: FieldTower
    generators: tuple[Point, ...]
    N: int
    expectation: Expectation

    def job(self, seed: int | None = None) -> AnalysisJob:
        """メタアーベル代数と L_1 からなる解析ジョブを組み立てる。"""
        lines = tuple((Y[0], Y[1]) for _ in range(self.N - 2))
        algebra = AlgebraSpec(tower=self.tower, N=self.N, lines=lines)
        L1 = tuple(self._flatten(point) for point in self.generators)
        return AnalysisJob(
            algebra=algebra,
            L1=L1,
            N=self.N,
            seed=config.DEFAULT_SEED if seed is None else seed,
        )

    def _flatten(self, point: Point) -> tuple[int, ...]:
        return tuple(c for coeffs in point for c in self.tower.element(coeffs).coeffs)


def _finite(p: int, minpoly: tuple[int, ...]) -> FieldTower:
    return FieldTower(p=p, minpoly=minpoly)


def _constrained(name: str, minpoly: tuple[int, ...], d: int) -> Preset:
    return Preset(
        name=name,
        description=f'GF(2) ⊂ GF(2^{d}) のメタアーベル代数、L_1 = F{{x, αx, y}}',
        tower=_finite(2, minpoly),
        generators=(X, ALPHA_X, Y),
        N=config.DEFAULT_TRUNCATION,
        expectation=Expectation(
            anchor='Example 4.2',
            variant=DichotomyVariant.CONSTRAINED,
            r_empirical=d,
            k_chain=(2, 1),
        ),
    )


PRESETS: dict[str, Preset] = {
    'ex4.1': Preset(
        name='ex4.1',
        description='GF(2) ⊂ GF(4) のメタアーベル代数、L_1 = F{x, y, αy}',
        tower=_finite(2, (1, 1, 1)),
        generators=(X, Y, ALPHA_Y),
        N=config.DEFAULT_TRUNCATION,
        expectation=Expectation(
            anchor='Example 4.1', variant=DichotomyVariant.NOT_JUST_INFINITE, k_chain=(3, 2)
        ),
    ),
    'ex4.2-d2': _constrained('ex4.2-d2', (1, 1, 1), 2),
    'ex4.2-d3': _constrained('ex4.2-d3', (1, 1, 0, 1), 3),
    'ex4.2-d4': _constrained('ex4.2-d4', (1, 1, 0, 0, 1), 4),
    'prob4.3': Preset(
        name='prob4.3',
        description='超越的な α 上のメタアーベル代数、L_1 = F{x, αx + y}',
        tower=FieldTower(p=2, mode=TowerMode.TRANSCENDENTAL, cap=config.TRANSCENDENTAL_CAP),
        generators=(X, ALPHA_X_PLUS_Y),
        N=config.TRANSCENDENTAL_TRUNCATION,
        expectation=Expectation(anchor='Problem 4.3'),
    ),
    'cor3.7-trivial': Preset(
        name='cor3.7-trivial',
        description='E = F = GF(2) のメタアーベル代数、L_1 = M_1',
        tower=_finite(2, (0, 1)),
        generators=(X, Y),
        N=config.DEFAULT_TRUNCATION,
        expectation=Expectation(
            anchor='Cor 3.7',
            variant=DichotomyVariant.CONSTRAINED,
            r_empirical=1,
            k_chain=(2, 1),
        ),
    ),
}

# 内容を表す別名
ALIASES: dict[str, str] = {
    'not-just-infinite': 'ex4.1',
    'constrained-d2': 'ex4.2-d2',
    'constrained-d3': 'ex4.2-d3',
    'constrained-d4': 'ex4.2-d4',
    'free-metabelian': 'prob4.3',
    'trivial-extension': 'cor3.7-trivial',
}


def preset(name: str) -> Preset:
    """名前または別名からプリセットを返す。

    Raises:
        UnknownPresetError: 未登録の名前の場合。
    """
    key = ALIASES.get(name, name)
    if key not in PRESETS:
        raise UnknownPresetError(name)
    return PRESETS[key]


def preset_names() -> list[str]:
    """登録済みのプリセット名を返す。別名は含まない。"""
    return sorted(PRESETS)
