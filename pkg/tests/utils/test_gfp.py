"""GF(p) 上の行列・多項式ユーティリティのテスト。"""

import numpy as np
import pytest

from app.utils.gfp import (
    find_factor,
    inv_scalar,
    is_prime,
    left_nullspace,
    nullspace,
    poly_divmod,
    poly_mul,
    poly_trim,
    rank,
    rref,
    solve,
)


class TestScalars:
    """スカラー演算のテストクラス。"""

    @pytest.mark.parametrize(
        ('n', 'expected'), [(0, False), (1, False), (2, True), (9, False), (13, True)]
    )
    def test_素数判定(self, n: int, expected: bool) -> None:
        # Act & Assert
        assert is_prime(n) is expected

    @pytest.mark.parametrize('p', [2, 3, 5, 7])
    def test_逆元との積が1になる(self, p: int) -> None:
        # Act & Assert
        for a in range(1, p):
            assert (a * inv_scalar(a, p)) % p == 1


class TestRref:
    """`rref`関数のテストクラス。"""

    def test_被約行階段形と軸が得られる(self) -> None:
        # Arrange
        matrix = [[0, 2, 1], [1, 1, 0], [1, 0, 1]]

        # Act
        reduced, pivots = rref(matrix, 3)

        # Assert
        assert pivots == [0, 1]
        assert reduced.tolist() == [[1, 0, 1], [0, 1, 2]]

    def test_零行は取り除かれる(self) -> None:
        # Act
        reduced, pivots = rref([[1, 1], [1, 1]], 2)

        # Assert
        assert reduced.tolist() == [[1, 1]]
        assert pivots == [0]

    def test_空行列は列数を保つ(self) -> None:
        # Act
        reduced, pivots = rref(np.zeros((0, 4), dtype=np.int64), 2, n_cols=4)

        # Assert
        assert reduced.shape == (0, 4)
        assert pivots == []

    def test_階数(self) -> None:
        # Act & Assert
        assert rank(np.eye(3, dtype=np.int64), 5) == 3
        assert rank([[2, 4], [1, 2]], 5) == 1


class TestNullspace:
    """零化空間と連立方程式のテストクラス。"""

    def test_右零化空間の各ベクトルが零に写る(self) -> None:
        # Arrange
        matrix = np.asarray([[1, 2, 0, 1], [0, 1, 1, 2]], dtype=np.int64)

        # Act
        basis = nullspace(matrix, 3)

        # Assert
        assert basis.shape == (2, 4)
        assert not ((matrix @ basis.T) % 3).any()

    def test_左零化空間の各ベクトルが零に写る(self) -> None:
        # Arrange
        matrix = np.asarray([[1, 0], [0, 1], [1, 1]], dtype=np.int64)

        # Act
        basis = left_nullspace(matrix, 2)

        # Assert
        assert basis.tolist() == [[1, 1, 1]]

    def test_解が存在する場合に特殊解を返す(self) -> None:
        # Arrange
        matrix = np.asarray([[1, 1], [0, 1]], dtype=np.int64)

        # Act
        v = solve(matrix, [1, 2], 3)

        # Assert
        assert v is not None
        assert ((matrix @ v) % 3).tolist() == [1, 2]

    def test_解が存在しない場合にNoneを返す(self) -> None:
        # Act & Assert
        assert solve([[1, 1], [1, 1]], [0, 1], 2) is None


class TestPolynomials:
    """多項式演算のテストクラス。"""

    def test_末尾の零が取り除かれる(self) -> None:
        # Act & Assert
        assert poly_trim([1, 0, 3, 0], 3).tolist() == [1]
        assert poly_trim([0, 0], 2).size == 0

    def test_積と除算が整合する(self) -> None:
        # Arrange
        a = [1, 1]
        b = [1, 0, 1]

        # Act
        product = poly_mul(a, b, 2)
        quot, rem = poly_divmod(product, b, 2)

        # Assert
        assert product.tolist() == [1, 1, 1, 1]
        assert quot.tolist() == [1, 1]
        assert rem.size == 0

    def test_零多項式での除算は例外になる(self) -> None:
        # Act & Assert
        with pytest.raises(ZeroDivisionError):
            poly_divmod([1, 1], [0], 2)

    @pytest.mark.parametrize(
        ('poly', 'p'), [((1, 1, 1), 2), ((1, 1, 0, 1), 2), ((1, 1, 0, 0, 1), 2), ((1, 0, 1), 3)]
    )
    def test_既約多項式には因子がない(self, poly: tuple[int, ...], p: int) -> None:
        # Act & Assert
        assert find_factor(poly, p) is None

    def test_可約多項式の因子が見つかる(self) -> None:
        # Act
        factor = find_factor([1, 0, 1], 2)

        # Assert
        assert factor is not None
        assert factor.tolist() == [1, 1]
