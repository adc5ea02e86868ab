"""プリセット登録簿のテスト。"""

import pytest

from app.errors import UnknownPresetError
from app.services import presets
from app.types import DichotomyVariant


class TestPresets:
    """プリセットのテストクラス。"""

    def test_登録済みの名前は整列されている(self) -> None:
        # Act
        names = presets.preset_names()

        # Assert
        assert names == ['cor3.7-trivial', 'ex4.1', 'ex4.2-d2', 'ex4.2-d3', 'ex4.2-d4', 'prob4.3']

    def test_未登録の名前は例外になる(self) -> None:
        # Act & Assert
        with pytest.raises(UnknownPresetError):
            presets.preset('ex4.2-d9')

    @pytest.mark.parametrize(
        ('alias', 'name'),
        [
            ('not-just-infinite', 'ex4.1'),
            ('constrained-d2', 'ex4.2-d2'),
            ('constrained-d3', 'ex4.2-d3'),
            ('constrained-d4', 'ex4.2-d4'),
            ('free-metabelian', 'prob4.3'),
            ('trivial-extension', 'cor3.7-trivial'),
        ],
    )
    def test_別名は登録名のプリセットを返す(self, alias: str, name: str) -> None:
        # Act
        entry = presets.preset(alias)

        # Assert
        assert entry.name == name
        assert entry is presets.preset(name)

    @pytest.mark.parametrize(('name', 'd'), [('ex4.2-d2', 2), ('ex4.2-d3', 3), ('ex4.2-d4', 4)])
    def test_制約付きの例の期待値(self, name: str, d: int) -> None:
        # Act
        entry = presets.preset(name)

        # Assert
        assert entry.tower.d == d
        assert entry.N == 24
        assert entry.expectation.variant is DichotomyVariant.CONSTRAINED
        assert entry.expectation.r_empirical == d
        assert entry.expectation.k_chain == (2, 1)

    def test_Kが素体になる例の期待値(self) -> None:
        # Act
        entry = presets.preset('ex4.1')

        # Assert
        assert entry.tower.d == 2
        assert entry.expectation.variant is DichotomyVariant.NOT_JUST_INFINITE
        assert entry.expectation.k_chain == (3, 2)

    def test_ジョブはメタアーベル代数と平坦化したL1を持つ(self) -> None:
        # Arrange
        entry = presets.preset('ex4.2-d2')

        # Act
        job = entry.job(seed=5)

        # Assert
        assert job.seed == 5
        assert job.N == entry.N
        assert len(job.algebra.lines) == entry.N - 2
        assert set(job.algebra.lines) == {((0,), (1,))}
        assert job.L1 == ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0))

    def test_超越的な例のL1は上限まで平坦化される(self) -> None:
        # Act
        job = presets.preset('prob4.3').job()

        # Assert
        assert job.algebra.tower.cap == 16
        assert job.N == 13
        assert all(len(row) == 2 * 17 for row in job.L1)
        assert job.seed == 0
