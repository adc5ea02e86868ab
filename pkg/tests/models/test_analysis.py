"""解析結果モデルのテスト。"""

import pytest
from pydantic import TypeAdapter

from app.models.analysis import (
    ConstrainedResult,
    DichotomyResult,
    EnumerationPolicy,
    ExpandingTrace,
    InconclusiveResult,
    KChainReport,
)
from app.types import DichotomyVariant, EnumerationMode


class TestKChainReport:
    """KChainReportのテストクラス。"""

    @pytest.mark.parametrize(
        ('t1_dim', 'dims', 'expected'),
        [(2, (1, 1, 1), True), (3, (2, 2), True), (3, (2, 3), False), (2, (2,), False)],
    )
    def test_次元が1つずつ落ちるかどうか(
        self, t1_dim: int, dims: tuple[int, ...], expected: bool
    ) -> None:
        # Act
        report = KChainReport(k_degree=2, t1_dim=t1_dim, dims=dims)

        # Assert
        assert report.holds is expected
        assert report.model_dump()['holds'] is expected


class TestExpandingTrace:
    """ExpandingTraceのテストクラス。"""

    def test_上界以内でK空間に到達する(self) -> None:
        # Act
        trace = ExpandingTrace(start_degree=3, bound=2, j_star=1, k_dims=(2, 2, 2))

        # Assert
        assert trace.bound_holds
        assert trace.constant_k_dimension

    def test_到達しなければ上界は成り立たない(self) -> None:
        # Act
        trace = ExpandingTrace(start_degree=3, bound=2, j_star=None, k_dims=(2, 1))

        # Assert
        assert not trace.bound_holds
        assert not trace.constant_k_dimension


class TestDichotomyResult:
    """判別共用体のテストクラス。"""

    def test_variantで型が決まる(self) -> None:
        # Arrange
        adapter: TypeAdapter[DichotomyResult] = TypeAdapter(DichotomyResult)
        result = ConstrainedResult(
            r_empirical=2,
            r_bound=3,
            t=2,
            r_gen=2,
            verified_window=(5, 10),
            policy=EnumerationPolicy(
                mode=EnumerationMode.FULL, limit=65536, sample_size=10000, seed=0
            ),
            covering={2: 1, 3: 2},
        )

        # Act
        restored = adapter.validate_json(adapter.dump_json(result))

        # Assert
        assert isinstance(restored, ConstrainedResult)
        assert restored.covering == {2: 1, 3: 2}

    def test_判定できない結果(self) -> None:
        # Arrange
        adapter: TypeAdapter[DichotomyResult] = TypeAdapter(DichotomyResult)

        # Act
        restored = adapter.validate_python({'variant': 'Inconclusive', 'reason': '未安定'})

        # Assert
        assert isinstance(restored, InconclusiveResult)
        assert restored.variant is DichotomyVariant.INCONCLUSIVE
