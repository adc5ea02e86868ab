"""極大類の代数モデルのテスト。"""

import pytest

from app.errors import TowerMismatchError, ZeroLineError
from app.models.algebra import (
    AdjointPair,
    CentraliserLine,
    HomElement,
    MaxClassAlgebra,
    ValidationFailure,
    ValidationReport,
    basis_degree,
    basis_label,
)
from app.models.field_tower import FieldTower
from app.types import FailureKind


class TestCentraliserLine:
    """CentraliserLineモデルのテストクラス。"""

    def test_最初の非零座標が1に正規化される(self, gf4: FieldTower) -> None:
        # Arrange
        alpha = gf4.alpha()

        # Act
        line = CentraliserLine.through(alpha, alpha * alpha)

        # Assert
        assert line.a.is_one
        assert line.b == alpha

    def test_同じ直線は同じ正準形になる(self, gf9: FieldTower) -> None:
        # Arrange
        beta = gf9.element([1, 2])

        # Act
        a = CentraliserLine.through(gf9.zero(), beta)
        b = CentraliserLine.y_line(gf9)

        # Assert
        assert a == b
        assert a.key == b.key

    def test_零ベクトルは直線を定めない(self, gf4: FieldTower) -> None:
        # Act & Assert
        with pytest.raises(ZeroLineError):
            CentraliserLine.through(gf4.zero(), gf4.zero())

    def test_異なる塔の座標は拒否される(self, gf4: FieldTower, gf8: FieldTower) -> None:
        # Act & Assert
        with pytest.raises(TowerMismatchError):
            CentraliserLine.through(gf4.one(), gf8.one())

    def test_超越モードでも素体の定数で正規化できる(self) -> None:
        # Arrange
        tower = FieldTower.model_validate({'p': 3, 'mode': 'transcendental', 'cap': 4})

        # Act
        line = CentraliserLine.through(tower.scalar(2), tower.alpha())

        # Assert
        assert line.a.is_one
        assert line.b.coeffs == (0, 2, 0, 0, 0)

    @pytest.mark.parametrize(
        ('a', 'b', 'label'), [(0, 1, '[0:1]'), (1, 0, '[1:0]'), (1, 1, '[1:1]')]
    )
    def test_GF2のラベル(self, gf2: FieldTower, a: int, b: int, label: str) -> None:
        # Act
        line = CentraliserLine.through(gf2.scalar(a), gf2.scalar(b))

        # Assert
        assert line.label == label

    def test_拡大体のラベルは係数列を並べる(self, gf4: FieldTower) -> None:
        # Act & Assert
        assert CentraliserLine.y_line(gf4).label == '[0,0:1,0]'
        assert CentraliserLine.x_line(gf4).is_x_line

    def test_シリアライズ形式(self, gf4: FieldTower) -> None:
        # Act
        dumped = CentraliserLine.through(gf4.one(), gf4.alpha()).model_dump()

        # Assert
        assert dumped == [[1, 0], [0, 1]]


class TestAdjointPair:
    """AdjointPairモデルのテストクラス。"""

    @pytest.mark.parametrize(
        ('a', 'b', 'expected'), [(0, 1, (1, 0)), (1, 0, (0, 1)), (1, 1, (1, 1))]
    )
    def test_GF2の正規化規則(
        self, gf2: FieldTower, a: int, b: int, expected: tuple[int, int]
    ) -> None:
        # Arrange
        line = CentraliserLine.through(gf2.scalar(a), gf2.scalar(b))

        # Act
        pair = AdjointPair.annihilating(line)

        # Assert
        assert (pair.lam.coeffs[0], pair.mu.coeffs[0]) == expected

    def test_核の直線は元の直線に戻る(self, gf9: FieldTower) -> None:
        # Act & Assert
        for b in gf9.elements():
            line = CentraliserLine.through(gf9.one(), b)
            pair = AdjointPair.annihilating(line)
            assert pair.kernel_line() == line
            assert (line.a * pair.lam + line.b * pair.mu).is_zero

    def test_正規化元の番号(self, gf4: FieldTower) -> None:
        # Arrange
        x_pair = AdjointPair.annihilating(CentraliserLine.x_line(gf4))
        y_pair = AdjointPair.annihilating(CentraliserLine.y_line(gf4))
        zero = AdjointPair.model_construct(lam=gf4.zero(), mu=gf4.zero())

        # Act & Assert
        assert x_pair.normalizer == 1
        assert y_pair.normalizer == 0
        assert zero.normalizer is None
        assert zero.is_zero


class TestHomElement:
    """HomElementモデルのテストクラス。"""

    def test_基底元(self, gf4: FieldTower) -> None:
        # Act
        x = HomElement.basis(gf4, 0)
        y = HomElement.basis(gf4, 1)
        e5 = HomElement.basis(gf4, 5)

        # Assert
        assert (x.degree, x.coords) == (1, (gf4.one(), gf4.zero()))
        assert (y.degree, y.coords) == (1, (gf4.zero(), gf4.one()))
        assert (e5.degree, e5.coords) == (5, (gf4.one(),))

    def test_加算と減算とスカラー倍(self, gf4: FieldTower) -> None:
        # Arrange
        x = HomElement.basis(gf4, 0)
        y = HomElement.basis(gf4, 1)

        # Act
        total = x + y.scaled(gf4.alpha())

        # Assert
        assert total.coords == (gf4.one(), gf4.alpha())
        assert (total - total).is_zero

    def test_シリアライズ形式(self, gf4: FieldTower) -> None:
        # Act
        dumped = HomElement.homogeneous(3, gf4.alpha()).model_dump()

        # Assert
        assert dumped == {'degree': 3, 'coords': [[0, 1]]}

    @pytest.mark.parametrize(
        ('index', 'label', 'degree'), [(0, 'x', 1), (1, 'y', 1), (2, 'e_2', 2), (7, 'e_7', 7)]
    )
    def test_基底元のラベルと次数(self, index: int, label: str, degree: int) -> None:
        # Act & Assert
        assert basis_label(index) == label
        assert basis_degree(index) == degree


class TestValidationReport:
    """ValidationReportモデルのテストクラス。"""

    def test_失敗がなければok(self) -> None:
        # Act
        report = ValidationReport(checked_to=8)

        # Assert
        assert report.ok
        assert report.model_dump(mode='json') == {'failures': [], 'checked_to': 8, 'ok': True}

    def test_種類ごとに最初の失敗を取り出せる(self) -> None:
        # Arrange
        failures = (
            ValidationFailure(kind=FailureKind.WINDOW, degrees=(5, 8)),
            ValidationFailure(kind=FailureKind.JACOBI, basis=('e_2', 'x', 'y')),
            ValidationFailure(kind=FailureKind.JACOBI, basis=('e_3', 'x', 'y')),
        )

        # Act
        report = ValidationReport(failures=failures, checked_to=9)

        # Assert
        assert not report.ok
        first = report.first(FailureKind.JACOBI)
        assert first is not None
        assert first.basis == ('e_2', 'x', 'y')
        assert report.first(FailureKind.ALTERNATING) is None


class TestMaxClassAlgebra:
    """MaxClassAlgebraモデルのテストクラス。"""

    def test_メタアーベル代数の構造定数はすべて零(self, metabelian_gf4: MaxClassAlgebra) -> None:
        # Act & Assert
        for i in range(2, metabelian_gf4.N - 1):
            for j in range(2, metabelian_gf4.N - i + 1):
                assert metabelian_gf4.structure_constant(i, j).is_zero
        assert metabelian_gf4.is_metabelian
        assert metabelian_gf4.is_validated

    def test_直線と対は次数で参照できる(self, metabelian_gf4: MaxClassAlgebra) -> None:
        # Act & Assert
        assert metabelian_gf4.line(2).is_y_line
        assert metabelian_gf4.pair(9).lam.is_one

    def test_シリアライズ形式(self, metabelian_gf4: MaxClassAlgebra) -> None:
        # Act
        dumped = metabelian_gf4.model_dump()

        # Assert
        assert dumped['N'] == 10
        assert dumped['tower']['minpoly'] == [1, 1, 1]
        assert len(dumped['lines']) == 8
        assert dumped['lines'][0] == [[0, 0], [1, 0]]
