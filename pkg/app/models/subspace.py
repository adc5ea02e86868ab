"""E^k の F-部分空間と E の部分体を定義するモジュール。"""

from collections.abc import Iterator
from itertools import product
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, model_serializer

from app.models.field_tower import EElement, FieldTower
from app.types import FlatVector
from app.utils.gfp import IntArray, rref


class FSubspace(BaseModel):
    """E^k を F^{k·d} に平坦化した空間の F-部分空間。

    基底は零行を含まない被約行階段形で保持するため、2つの部分空間が等しいことと
    行列が一致することは同値になる。
    """

    model_config = ConfigDict(frozen=True)

    tower: FieldTower
    k: int
    rows: tuple[FlatVector, ...] = ()

    @classmethod
    def from_matrix(cls, tower: FieldTower, k: int, matrix: Any) -> 'FSubspace':
        """任意の行列の行空間から正準形の部分空間を作る。"""
        width = k * tower.d
        array = np.asarray(matrix, dtype=np.int64).reshape(-1, width)
        reduced, _ = rref(array, tower.p, n_cols=width)
        rows = tuple(tuple(int(c) for c in row) for row in reduced)
        return cls.model_construct(tower=tower, k=k, rows=rows)

    @classmethod
    def zero(cls, tower: FieldTower, k: int) -> 'FSubspace':
        """零部分空間を返す。"""
        return cls.model_construct(tower=tower, k=k, rows=())

    @property
    def rank(self) -> int:
        """F-次元を返す。"""
        return len(self.rows)

    @property
    def width(self) -> int:
        """平坦化した外側空間の次元 k·d を返す。"""
        return self.k * self.tower.d

    @property
    def is_zero(self) -> bool:
        """零部分空間かどうかを返す。"""
        return not self.rows

    def matrix(self) -> IntArray:
        """基底行列を numpy 配列で返す。"""
        return np.asarray(self.rows, dtype=np.int64).reshape(-1, self.width)

    def point(self, row: FlatVector | IntArray) -> tuple[EElement, ...]:
        """平坦化ベクトルを E^k の点に戻す。"""
        d = self.tower.d
        return tuple(self.tower.element(row[j * d : (j + 1) * d]) for j in range(self.k))

    def basis_points(self) -> list[tuple[EElement, ...]]:
        """基底ベクトルを E^k の点として返す。"""
        return [self.point(row) for row in self.rows]

    def combinations(self) -> Iterator[IntArray]:
        """0 でないベクトルを F-スカラー倍の違いを除いて列挙する。

        係数ベクトルの最初の非零成分を 1 に固定し、辞書式順に生成する。
        """
        p = self.tower.p
        basis = self.matrix()
        for lead in range(self.rank):
            for tail in product(range(p), repeat=self.rank - lead - 1):
                coeffs = np.zeros(self.rank, dtype=np.int64)
                coeffs[lead] = 1
                coeffs[lead + 1 :] = tail
                yield (coeffs @ basis) % p

    def describe(self) -> str:
        """外側空間の短い説明を返す。"""
        return f'E^{self.k} over GF({self.tower.p}) (d={self.tower.d})'

    @model_serializer
    def _serialize(self) -> dict[str, Any]:
        return {'ambient_k': self.k, 'basis': [list(row) for row in self.rows]}


class Subfield(BaseModel):
    """E の部分体。基底は E^1 の正準 F-部分空間として保持する。"""

    model_config = ConfigDict(frozen=True)

    space: FSubspace

    @property
    def tower(self) -> FieldTower:
        """属する体の塔を返す。"""
        return self.space.tower

    @property
    def degree(self) -> int:
        """[K:F] を返す。"""
        return self.space.rank

    def basis(self) -> list[EElement]:
        """F-基底を E の元として返す。"""
        return [point[0] for point in self.space.basis_points()]

    @model_serializer
    def _serialize(self) -> dict[str, Any]:
        return {'degree': self.degree, 'basis': [list(row) for row in self.space.rows]}


class StabilizerReport(BaseModel):
    """安定化環 E_U = {β ∈ E : βU ⊆ U} の計算結果。"""

    model_config = ConfigDict(frozen=True)

    ring: FSubspace
    is_field: bool

    @property
    def degree(self) -> int:
        """E_U の F-次元を返す。"""
        return self.ring.rank

    def as_subfield(self) -> Subfield:
        """体であるとき Subfield として返す。"""
        return Subfield(space=self.ring)
