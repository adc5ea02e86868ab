"""GF(p) 上の正準的な線形代数で E^k の F-部分空間を扱うサービス。"""

import logging
from collections.abc import Iterable, Sequence

import numpy as np

from app.errors import AmbientMismatchError, NotKInvariantError, TowerMismatchError
from app.models.field_tower import EElement, FieldTower
from app.models.subspace import FSubspace, Subfield
from app.types import CombineOp, CompareOp, FlatVector
from app.utils.gfp import IntArray

logger = logging.getLogger('maxclass')


def flatten(point: Sequence[EElement]) -> FlatVector:
    """E^k の点を F^{k·d} のベクトルに平坦化する。座標 0 の係数が先頭に来る。"""
    return tuple(c for element in point for c in element.coeffs)


def span(tower: FieldTower, k: int, vectors: Iterable[Sequence[EElement]]) -> FSubspace:
    """E^k の点の F-線形包を正準形で返す。

    Args:
        tower: 体の塔。
        k: 外側空間 E^k の次数。
        vectors: E^k の点の列。

    Returns:
        被約行階段形の部分空間。

    Raises:
        AmbientMismatchError: 点の長さが k でない場合。
        TowerMismatchError: 異なる塔の元が含まれる場合。
    """
    rows: list[FlatVector] = []
    for point in vectors:
        if len(point) != k:
            raise AmbientMismatchError(f'E^{k}', f'E^{len(point)}')
        for element in point:
            if element.tower != tower:
                raise TowerMismatchError()
        rows.append(flatten(point))
    return FSubspace.from_matrix(tower, k, rows)


def span_rows(tower: FieldTower, k: int, rows: Iterable[Sequence[int]] | IntArray) -> FSubspace:
    """平坦化済みベクトルの F-線形包を返す。"""
    return FSubspace.from_matrix(tower, k, [list(row) for row in rows])


def _check_ambient(a: FSubspace, b: FSubspace) -> None:
    if a.k != b.k or a.tower != b.tower:
        raise AmbientMismatchError(a.describe(), b.describe())


def subspace_sum(a: FSubspace, b: FSubspace) -> FSubspace:
    """A + B を返す。"""
    _check_ambient(a, b)
    return FSubspace.from_matrix(a.tower, a.k, list(a.rows) + list(b.rows))


def intersect(a: FSubspace, b: FSubspace) -> FSubspace:
    """A ∩ B を Zassenhaus の方法で返す。

    [[A, A], [B, 0]] を行簡約し、左半分が 0 になった行の右半分が共通部分を張る。
    """
    _check_ambient(a, b)
    if a.is_zero or b.is_zero:
        return FSubspace.zero(a.tower, a.k)
    n = a.width
    top = np.concatenate([a.matrix(), a.matrix()], axis=1)
    bottom = np.concatenate([b.matrix(), np.zeros((b.rank, n), dtype=np.int64)], axis=1)
    stacked = FSubspace.from_matrix(a.tower, 2 * a.k, np.concatenate([top, bottom], axis=0))
    tail = [row[n:] for row in stacked.rows if not any(row[:n])]
    return FSubspace.from_matrix(a.tower, a.k, tail)


def combine(op: CombineOp, a: FSubspace, b: FSubspace) -> FSubspace:
    """和または共通部分を返す。

    Raises:
        AmbientMismatchError: 外側空間が異なる場合。
    """
    if op is CombineOp.SUM:
        return subspace_sum(a, b)
    return intersect(a, b)


def _as_row(
    space: FSubspace, vector: Sequence[EElement] | Sequence[int] | IntArray
) -> FlatVector:
    if len(vector) and isinstance(vector[0], EElement):
        points = [v for v in vector if isinstance(v, EElement)]
        if len(points) != space.k:
            raise AmbientMismatchError(space.describe(), f'E^{len(points)}')
        return flatten(points)
    row = tuple(int(c) for c in vector if isinstance(c, int | np.integer))
    if len(row) != space.width:
        raise AmbientMismatchError(space.describe(), f'F^{len(row)}')
    return row


def member(space: FSubspace, vector: Sequence[EElement] | Sequence[int] | IntArray) -> bool:
    """ベクトルが部分空間に属するかを返す。"""
    row = _as_row(space, vector)
    if not any(c % space.tower.p for c in row):
        return True
    extended = FSubspace.from_matrix(space.tower, space.k, [*space.rows, row])
    return extended.rank == space.rank


def equal(a: FSubspace, b: FSubspace) -> bool:
    """正準形の比較で A = B かどうかを返す。"""
    _check_ambient(a, b)
    return a.rows == b.rows


def contains(a: FSubspace, b: FSubspace) -> bool:
    """A ⊇ B かどうかを返す。"""
    _check_ambient(a, b)
    return subspace_sum(a, b).rank == a.rank


def compare(
    op: CompareOp,
    left: FSubspace | Sequence[EElement] | Sequence[int],
    right: FSubspace,
) -> bool:
    """member / equal / contains を切り替えて評価する。

    member のとき left はベクトル、right は部分空間。それ以外は両方とも部分空間。
    """
    if op is CompareOp.MEMBER:
        if isinstance(left, FSubspace):
            raise AmbientMismatchError(left.describe(), 'vector')
        return member(right, left)
    if not isinstance(left, FSubspace):
        raise AmbientMismatchError('vector', right.describe())
    if op is CompareOp.EQUAL:
        return equal(left, right)
    return contains(left, right)


# ---------------------------------------------------------------------------
# E-スカラー作用
# ---------------------------------------------------------------------------


def multiplication_matrix(beta: EElement) -> IntArray:
    """β 倍写像の行列を返す。第 j 行は β·α^j の係数列。"""
    tower = beta.tower
    return np.asarray(
        [(beta * tower.alpha_power(j)).coeffs for j in range(tower.d)], dtype=np.int64
    ).reshape(tower.d, tower.d)


def scale_matrix(matrix: IntArray, k: int, beta: EElement) -> IntArray:
    """平坦化ベクトルを並べた行列の各 E-座標を β 倍する。"""
    tower = beta.tower
    blocks = matrix.reshape(-1, k, tower.d)
    scaled = np.einsum('rkj,jl->rkl', blocks, multiplication_matrix(beta)) % tower.p
    return np.asarray(scaled.reshape(-1, k * tower.d), dtype=np.int64)


def scale(space: FSubspace, beta: EElement) -> FSubspace:
    """β·U を返す。"""
    if beta.tower != space.tower:
        raise TowerMismatchError()
    return FSubspace.from_matrix(space.tower, space.k, scale_matrix(space.matrix(), space.k, beta))


def k_closure(field: Subfield, space: FSubspace) -> FSubspace:
    """U を含む最小の K-不変 F-部分空間 K·U を返す。

    K は乗法で閉じているので、K の基底と U の基底の積を1回張れば十分。

    Raises:
        TowerMismatchError: 塔が異なる場合。
    """
    if field.tower != space.tower:
        raise TowerMismatchError()
    field.tower.require_finite('k_closure')
    if space.is_zero:
        return space
    blocks = [scale_matrix(space.matrix(), space.k, beta) for beta in field.basis()]
    return FSubspace.from_matrix(space.tower, space.k, np.concatenate(blocks, axis=0))


def is_k_space(field: Subfield, space: FSubspace) -> bool:
    """U が K-部分空間かどうか（K·U = U）を返す。"""
    return k_closure(field, space).rows == space.rows


def dim_over(field: Subfield, space: FSubspace) -> int:
    """K-不変な U の K-次元 dim_F(U) / [K:F] を返す。

    Raises:
        NotKInvariantError: U が K で閉じていない場合。
    """
    if not is_k_space(field, space):
        raise NotKInvariantError(field.degree, space.rank)
    return space.rank // field.degree
