"""部分代数 L = ⊕ L_i の解析結果を表すモデル群。"""

from typing import Annotated, Any, Literal

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_serializer

from app.models.field_tower import EElement, FieldTower
from app.models.subspace import FSubspace, Subfield
from app.types import DichotomyVariant, EnumerationMode, LineLabel


class GeneratingSpace(BaseModel):
    """M_1 の F-部分空間 L_1。E·L_1 = M_1 であることは解析側で確認する。"""

    model_config = ConfigDict(frozen=True)

    space: FSubspace

    @property
    def tower(self) -> FieldTower:
        """属する体の塔を返す。"""
        return self.space.tower

    @property
    def rank(self) -> int:
        """dim_F L_1 を返す。"""
        return self.space.rank

    @property
    def is_two_dimensional(self) -> bool:
        """dim_F L_1 = 2 かどうかを返す。"""
        return self.space.rank == 2


class LChain(BaseModel):
    """L_1 が生成する列 L_2, ..., L_N と d_i = dim_F(L_1 ∩ C_i)。"""

    model_config = ConfigDict(frozen=True)

    N: int
    generator: FSubspace
    spaces: tuple[FSubspace, ...]
    d_seq: tuple[int, ...]

    def space(self, degree: int) -> FSubspace:
        """L_degree を返す。degree = 1 なら L_1。"""
        if degree == 1:
            return self.generator
        return self.spaces[degree - 2]

    @property
    def dims(self) -> tuple[int, ...]:
        """dim_F L_i（i = 2, ..., N）を返す。"""
        return tuple(space.rank for space in self.spaces)

    @model_serializer
    def _serialize(self) -> dict[str, Any]:
        return {'N': self.N, 'dims': list(self.dims), 'd_seq': list(self.d_seq)}


class TwoStepDegree(BaseModel):
    """次数 i の 2-step 体 F_i とその計算に使った代表元。"""

    model_config = ConfigDict(frozen=True)

    degree: int
    choice: tuple[EElement, EElement]
    image: FSubspace
    field: Subfield
    image_is_field: bool
    quotient_dim: int

    @model_serializer
    def _serialize(self) -> dict[str, Any]:
        return {
            'degree': self.degree,
            'choice': [list(c.coeffs) for c in self.choice],
            'image_dim': self.image.rank,
            'field_degree': self.field.degree,
            'image_is_field': self.image_is_field,
            'quotient_dim': self.quotient_dim,
        }


class TwoStepFieldReport(BaseModel):
    """各次数の F_i と、その合成体 K の計算結果。

    running[k] は F_2, ..., F_{k+2} の合成体の F 上の次数。
    """

    model_config = ConfigDict(frozen=True)

    degrees: tuple[TwoStepDegree, ...]
    field: Subfield
    r_gen: int
    stabilized: bool
    window: int
    running: tuple[int, ...]

    @property
    def t(self) -> int:
        """[K:F] を返す。"""
        return self.field.degree

    def at(self, degree: int) -> TwoStepDegree:
        """次数 degree の結果を返す。"""
        return self.degrees[degree - 2]

    @model_serializer
    def _serialize(self) -> dict[str, Any]:
        return {
            'field_degrees': [item.field.degree for item in self.degrees],
            'K_degree': self.t,
            'r_gen': self.r_gen,
            'stabilized': self.stabilized,
            'window': self.window,
        }


class KChainReport(BaseModel):
    """T_1 = K·L_1 が生成する列の K-次元。"""

    model_config = ConfigDict(frozen=True)

    k_degree: int
    t1_dim: int
    dims: tuple[int, ...]

    @computed_field  # type: ignore[prop-decorator]
    @property
    def holds(self) -> bool:
        """すべての i ≥ 2 で dim_K T_i = dim_K T_1 − 1 かどうか。"""
        return all(dim == self.t1_dim - 1 for dim in self.dims)


class ExpandingTrace(BaseModel):
    """X_j = [X_{j−1}, L_1] の追跡結果。"""

    model_config = ConfigDict(frozen=True)

    start_degree: int
    bound: int
    j_star: int | None
    k_dims: tuple[int, ...]

    @computed_field  # type: ignore[prop-decorator]
    @property
    def bound_holds(self) -> bool:
        """X_j が初めて K-空間になる j が (t−1)·r_gen 以下かどうか。"""
        return self.j_star is not None and self.j_star <= self.bound

    @computed_field  # type: ignore[prop-decorator]
    @property
    def constant_k_dimension(self) -> bool:
        """dim_K K·X_j が j によらず一定かどうか。"""
        return len(set(self.k_dims)) == 1


class ConstituentStats(BaseModel):
    """直線 C の出現回数 m_{i,k} から予測した r。"""

    model_config = ConfigDict(frozen=True)

    applicable: bool
    line: LineLabel | None = None
    d: int
    m_values: tuple[int, ...] = ()
    predicted_r: int | None = None


class EnumerationPolicy(BaseModel):
    """被覆次数を測る元の選び方。"""

    model_config = ConfigDict(frozen=True)

    mode: EnumerationMode
    limit: int
    sample_size: int
    seed: int
    sampled_degrees: tuple[int, ...] = ()


class ConstrainedResult(BaseModel):
    """dim_K K·L_1 = 2 の場合の結果。r_empirical は [2, N] で観測した値。"""

    model_config = ConfigDict(frozen=True)

    variant: Literal[DichotomyVariant.CONSTRAINED] = DichotomyVariant.CONSTRAINED
    r_empirical: int
    r_bound: int
    t: int
    r_gen: int
    verified_window: tuple[int, int]
    policy: EnumerationPolicy
    covering: dict[int, int]


class NotJustInfiniteResult(BaseModel):
    """dim_K K·L_1 > 2 の場合の結果。有限余次元でないイデアルの証拠を持つ。"""

    model_config = ConfigDict(frozen=True)

    variant: Literal[DichotomyVariant.NOT_JUST_INFINITE] = DichotomyVariant.NOT_JUST_INFINITE
    k_dimension: int
    witness_degree: int
    witness_space: FSubspace
    ideal_dims: tuple[int, ...]


class InconclusiveResult(BaseModel):
    """切断の範囲では判定できなかった場合の結果。"""

    model_config = ConfigDict(frozen=True)

    variant: Literal[DichotomyVariant.INCONCLUSIVE] = DichotomyVariant.INCONCLUSIVE
    reason: str


DichotomyResult = Annotated[
    ConstrainedResult | NotJustInfiniteResult | InconclusiveResult,
    Field(discriminator='variant'),
]
