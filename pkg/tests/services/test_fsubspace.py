"""F-部分空間サービスのテスト。"""

import pytest

from app.errors import AmbientMismatchError, NotKInvariantError, TowerMismatchError
from app.models.field_tower import FieldTower
from app.services import fieldtower, fsubspace
from app.types import CombineOp, CompareOp


class TestSpan:
    """`span`関数のテストクラス。"""

    def test_Eの点の線形包(self, gf4: FieldTower) -> None:
        # Arrange
        alpha, one, zero = gf4.alpha(), gf4.one(), gf4.zero()

        # Act
        space = fsubspace.span(gf4, 2, [(one, zero), (alpha, zero), (one + alpha, zero)])

        # Assert
        assert space.rank == 2

    def test_長さの異なる点は拒否される(self, gf4: FieldTower) -> None:
        # Act & Assert
        with pytest.raises(AmbientMismatchError):
            fsubspace.span(gf4, 2, [(gf4.one(),)])

    def test_異なる塔の点は拒否される(self, gf4: FieldTower, gf8: FieldTower) -> None:
        # Act & Assert
        with pytest.raises(TowerMismatchError):
            fsubspace.span(gf4, 1, [(gf8.one(),)])


class TestCombine:
    """和と共通部分のテストクラス。"""

    def test_和と共通部分の次元公式(self, gf8: FieldTower) -> None:
        # Arrange
        a = fsubspace.span_rows(gf8, 2, [[1, 0, 0, 0, 0, 0], [0, 1, 0, 1, 0, 0]])
        b = fsubspace.span_rows(gf8, 2, [[0, 1, 0, 1, 0, 0], [0, 0, 0, 0, 0, 1]])

        # Act
        total = fsubspace.combine(CombineOp.SUM, a, b)
        common = fsubspace.combine(CombineOp.INTERSECT, a, b)

        # Assert
        assert total.rank == 3
        assert common.rank == 1
        assert total.rank + common.rank == a.rank + b.rank
        assert common.rows == ((0, 1, 0, 1, 0, 0),)

    def test_零空間との共通部分は零(self, gf4: FieldTower) -> None:
        # Arrange
        a = fsubspace.span_rows(gf4, 1, [[1, 0]])
        zero = fsubspace.span_rows(gf4, 1, [])

        # Act & Assert
        assert fsubspace.intersect(a, zero).is_zero

    def test_外側空間が異なると例外になる(self, gf4: FieldTower) -> None:
        # Arrange
        a = fsubspace.span_rows(gf4, 1, [[1, 0]])
        b = fsubspace.span_rows(gf4, 2, [[1, 0, 0, 0]])

        # Act & Assert
        with pytest.raises(AmbientMismatchError):
            fsubspace.subspace_sum(a, b)


class TestCompare:
    """`compare`関数のテストクラス。"""

    def test_所属判定(self, gf4: FieldTower) -> None:
        # Arrange
        space = fsubspace.span(gf4, 2, [(gf4.one(), gf4.alpha())])

        # Act & Assert
        assert fsubspace.compare(CompareOp.MEMBER, (gf4.one(), gf4.alpha()), space)
        assert fsubspace.compare(CompareOp.MEMBER, (0, 0, 0, 0), space)
        assert not fsubspace.compare(CompareOp.MEMBER, (gf4.alpha(), gf4.one()), space)

    def test_平坦化ベクトルの長さが不正だと例外になる(self, gf4: FieldTower) -> None:
        # Arrange
        space = fsubspace.span_rows(gf4, 1, [[1, 0]])

        # Act & Assert
        with pytest.raises(AmbientMismatchError):
            fsubspace.member(space, (1, 0, 0))

    def test_包含と等号(self, gf4: FieldTower) -> None:
        # Arrange
        small = fsubspace.span_rows(gf4, 1, [[1, 1]])
        large = fsubspace.span_rows(gf4, 1, [[1, 0], [0, 1]])
        same = fsubspace.span_rows(gf4, 1, [[1, 1], [1, 0]])

        # Act & Assert
        assert fsubspace.compare(CompareOp.CONTAINS, large, small)
        assert not fsubspace.compare(CompareOp.CONTAINS, small, large)
        assert fsubspace.compare(CompareOp.EQUAL, large, same)

    def test_比較の左辺の型が不正だと例外になる(self, gf4: FieldTower) -> None:
        # Arrange
        space = fsubspace.span_rows(gf4, 1, [[1, 0]])

        # Act & Assert
        with pytest.raises(AmbientMismatchError):
            fsubspace.compare(CompareOp.MEMBER, space, space)
        with pytest.raises(AmbientMismatchError):
            fsubspace.compare(CompareOp.EQUAL, (1, 0), space)


class TestScalarAction:
    """E-スカラー作用のテストクラス。"""

    def test_スカラー倍で次元は変わらない(self, gf8: FieldTower) -> None:
        # Arrange
        space = fsubspace.span(gf8, 2, [(gf8.one(), gf8.alpha()), (gf8.zero(), gf8.one())])

        # Act
        scaled = fsubspace.scale(space, gf8.alpha())

        # Assert
        assert scaled.rank == space.rank
        assert fsubspace.member(scaled, (gf8.alpha(), gf8.alpha() * gf8.alpha()))

    def test_E閉包のE次元(self, gf8: FieldTower) -> None:
        # Arrange
        space = fsubspace.span(gf8, 2, [(gf8.one(), gf8.alpha())])
        full = fieldtower.full_field(gf8)

        # Act
        closed = fsubspace.k_closure(full, space)

        # Assert
        assert closed.rank == 3
        assert fsubspace.is_k_space(full, closed)
        assert fsubspace.dim_over(full, closed) == 1

    def test_素体はすべての部分空間を保つ(self, gf8: FieldTower) -> None:
        # Arrange
        space = fsubspace.span(gf8, 1, [(gf8.alpha(),)])

        # Act & Assert
        assert fsubspace.is_k_space(fieldtower.prime_field(gf8), space)

    def test_不変でない空間のK次元は例外になる(self, gf8: FieldTower) -> None:
        # Arrange
        space = fsubspace.span(gf8, 1, [(gf8.alpha(),)])

        # Act & Assert
        with pytest.raises(NotKInvariantError):
            fsubspace.dim_over(fieldtower.full_field(gf8), space)

    def test_乗算行列の行はalphaのべきの像(self, gf4: FieldTower) -> None:
        # Act
        matrix = fsubspace.multiplication_matrix(gf4.alpha())

        # Assert
        # α·1 = α, α·α = 1 + α
        assert matrix.tolist() == [[0, 1], [1, 1]]
