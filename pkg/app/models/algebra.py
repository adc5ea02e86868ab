"""極大類の切断次数付きリー代数とその検証結果を定義するモジュール。"""

from functools import cached_property
from typing import Any

from pydantic import BaseModel, ConfigDict, computed_field, model_serializer

from app.errors import TowerMismatchError, ZeroLineError
from app.models.field_tower import EElement, FieldTower
from app.types import FailureKind, LineLabel, ValidationStatus

# M_1 の基底 x, y に対応する座標番号
X_INDEX = 0
Y_INDEX = 1


class CentraliserLine(BaseModel):
    """M_1 の直線 E·(a·x + b·y)。最初の非零座標を 1 に正規化して保持する。"""

    model_config = ConfigDict(frozen=True)

    a: EElement
    b: EElement

    @classmethod
    def through(cls, a: EElement, b: EElement) -> 'CentraliserLine':
        """(a, b) を通る直線を正規化して返す。

        Raises:
            ZeroLineError: (a, b) = (0, 0) の場合。
            TowerMismatchError: a と b の塔が異なる場合。
        """
        if a.tower != b.tower:
            raise TowerMismatchError()
        if a.is_zero and b.is_zero:
            raise ZeroLineError()
        lead = a if not a.is_zero else b
        if not lead.is_one:
            tower = lead.tower
            if not any(lead.coeffs[1:]):
                # 素体の定数は超越モードでも逆元を持つ
                inv = tower.scalar(pow(lead.coeffs[0], tower.p - 2, tower.p))
            else:
                inv = lead.inverse()
            a, b = a * inv, b * inv
        return cls.model_construct(a=a, b=b)

    @classmethod
    def y_line(cls, tower: FieldTower) -> 'CentraliserLine':
        """Ey を返す。"""
        return cls.model_construct(a=tower.zero(), b=tower.one())

    @classmethod
    def x_line(cls, tower: FieldTower) -> 'CentraliserLine':
        """Ex を返す。"""
        return cls.model_construct(a=tower.one(), b=tower.zero())

    @property
    def key(self) -> tuple[int, ...]:
        """正準符号化。探索の順序に使う。"""
        return self.a.coeffs + self.b.coeffs

    @property
    def label(self) -> LineLabel:
        """'[a:b]' 形式のラベルを返す。"""
        a = ','.join(str(c) for c in self.a.coeffs)
        b = ','.join(str(c) for c in self.b.coeffs)
        return LineLabel(f'[{a}:{b}]')

    @property
    def is_y_line(self) -> bool:
        """Ey かどうかを返す。"""
        return self.a.is_zero

    @property
    def is_x_line(self) -> bool:
        """Ex かどうかを返す。"""
        return self.b.is_zero

    @model_serializer
    def _serialize(self) -> list[list[int]]:
        return [list(self.a.coeffs), list(self.b.coeffs)]


class AdjointPair(BaseModel):
    """[e_i, x] = λ·e_{i+1}, [e_i, y] = μ·e_{i+1} を与える対 (λ, μ)。"""

    model_config = ConfigDict(frozen=True)

    lam: EElement
    mu: EElement

    @classmethod
    def annihilating(cls, line: CentraliserLine) -> 'AdjointPair':
        """直線を核に持つ対を正規化規則に従って返す。

        x ∉ C のとき λ = 1, μ = −a/b。x ∈ C のとき λ = 0, μ = 1。
        """
        tower = line.a.tower
        if line.is_x_line:
            return cls.model_construct(lam=tower.zero(), mu=tower.one())
        mu = tower.zero() if line.a.is_zero else -(line.a * line.b.inverse())
        return cls.model_construct(lam=tower.one(), mu=mu)

    @property
    def is_zero(self) -> bool:
        """(λ, μ) = (0, 0) かどうかを返す。"""
        return self.lam.is_zero and self.mu.is_zero

    @property
    def normalizer(self) -> int | None:
        """e_{i+1} を与える M_1 の基底元の番号。λ ≠ 0 なら x、そうでなければ y。"""
        if not self.lam.is_zero:
            return X_INDEX
        if not self.mu.is_zero:
            return Y_INDEX
        return None

    def coefficient(self, index: int) -> EElement:
        """基底元 x (0) または y (1) に対する係数を返す。"""
        return self.lam if index == X_INDEX else self.mu

    def kernel_line(self) -> CentraliserLine:
        """v ↦ [e_i, v] の核の直線 (μ, −λ) を返す。"""
        return CentraliserLine.through(self.mu, -self.lam)

    @model_serializer
    def _serialize(self) -> list[list[int]]:
        return [list(self.lam.coeffs), list(self.mu.coeffs)]


class HomElement(BaseModel):
    """斉次元。次数 1 では a·x + b·y、次数 2 以上では c·e_degree。"""

    model_config = ConfigDict(frozen=True)

    degree: int
    coords: tuple[EElement, ...]

    @classmethod
    def degree_one(cls, a: EElement, b: EElement) -> 'HomElement':
        """a·x + b·y を返す。"""
        return cls.model_construct(degree=1, coords=(a, b))

    @classmethod
    def basis(cls, tower: FieldTower, index: int) -> 'HomElement':
        """基底元を返す。index は 0 (x)、1 (y)、i ≥ 2 (e_i)。"""
        if index == X_INDEX:
            return cls.degree_one(tower.one(), tower.zero())
        if index == Y_INDEX:
            return cls.degree_one(tower.zero(), tower.one())
        return cls.model_construct(degree=index, coords=(tower.one(),))

    @classmethod
    def homogeneous(cls, degree: int, c: EElement) -> 'HomElement':
        """c·e_degree（degree ≥ 2）を返す。"""
        return cls.model_construct(degree=degree, coords=(c,))

    @property
    def is_zero(self) -> bool:
        """零元かどうかを返す。"""
        return all(c.is_zero for c in self.coords)

    def scaled(self, beta: EElement) -> 'HomElement':
        """β 倍を返す。"""
        return self.model_construct(degree=self.degree, coords=tuple(beta * c for c in self.coords))

    def __add__(self, other: 'HomElement') -> 'HomElement':
        coords = tuple(u + v for u, v in zip(self.coords, other.coords, strict=True))
        return self.model_construct(degree=self.degree, coords=coords)

    def __sub__(self, other: 'HomElement') -> 'HomElement':
        coords = tuple(u - v for u, v in zip(self.coords, other.coords, strict=True))
        return self.model_construct(degree=self.degree, coords=coords)

    @model_serializer
    def _serialize(self) -> dict[str, Any]:
        return {'degree': self.degree, 'coords': [list(c.coeffs) for c in self.coords]}


def basis_label(index: int) -> str:
    """基底元の番号をラベルに変換する。"""
    if index == X_INDEX:
        return 'x'
    if index == Y_INDEX:
        return 'y'
    return f'e_{index}'


def basis_degree(index: int) -> int:
    """基底元の次数を返す。"""
    return 1 if index in (X_INDEX, Y_INDEX) else index


class ValidationFailure(BaseModel):
    """検証失敗1件。基底元の組または次数を証拠として持つ。"""

    model_config = ConfigDict(frozen=True)

    kind: FailureKind
    basis: tuple[str, ...] | None = None
    degrees: tuple[int, ...] | None = None


class ValidationReport(BaseModel):
    """検証結果。"""

    model_config = ConfigDict(frozen=True)

    failures: tuple[ValidationFailure, ...] = ()
    checked_to: int

    @computed_field  # type: ignore[prop-decorator]
    @property
    def ok(self) -> bool:
        """失敗がないかどうか。"""
        return not self.failures

    def first(self, kind: FailureKind) -> ValidationFailure | None:
        """指定した種類の最初の失敗を返す。"""
        return next((f for f in self.failures if f.kind is kind), None)


class WindowCheck(BaseModel):
    """中心化直線の出現窓の検査結果。"""

    model_config = ConfigDict(frozen=True)

    ok: bool
    line: LineLabel | None = None
    window: tuple[int, int] | None = None


class MaxClassAlgebra(BaseModel):
    """中心化列で定まる切断次数 N の極大類リー代数。

    基底は x, y, e_2, ..., e_N で e_2 = [y, x]。
    lines[i−2] が C_i、adjoint[i−2] が (λ_i, μ_i) を表す（2 ≤ i ≤ N−1）。
    """

    model_config = ConfigDict(frozen=True)

    tower: FieldTower
    N: int
    lines: tuple[CentraliserLine, ...]
    adjoint: tuple[AdjointPair, ...]
    status: ValidationStatus = ValidationStatus.UNVALIDATED
    report: ValidationReport | None = None

    def line(self, i: int) -> CentraliserLine:
        """C_i を返す。"""
        return self.lines[i - 2]

    def pair(self, i: int) -> AdjointPair:
        """(λ_i, μ_i) を返す。"""
        return self.adjoint[i - 2]

    @property
    def is_validated(self) -> bool:
        """検証済みかどうかを返す。"""
        return self.status is ValidationStatus.VALIDATED

    @property
    def is_metabelian(self) -> bool:
        """すべての中心化直線が Ey かどうかを返す。"""
        return all(line.is_y_line for line in self.lines)

    @cached_property
    def recursion_table(self) -> dict[tuple[int, int], EElement]:
        """[e_i, e_j] = c_{i,j}·e_{i+j} の係数を漸化式で求めた表（i, j ≥ 2, i+j ≤ N）。

        c_{i,2} = μ_i λ_{i+1} − λ_i μ_{i+1}、j ≥ 3 では e_j = ω^{-1}[e_{j−1}, w] として
        c_{i,j} = ω^{-1}(c_{i,j−1} ω_{i+j−1}(w) − ω_i(w) c_{i+1,j−1})。
        i < j や i = j の成分も計算し、反対称性と交代性の検査に使う。
        """
        table: dict[tuple[int, int], EElement] = {}
        zero = self.tower.zero()
        for i in range(2, self.N - 1):
            here, nxt = self.pair(i), self.pair(i + 1)
            table[(i, 2)] = here.mu * nxt.lam - here.lam * nxt.mu
        for j in range(3, self.N - 1):
            step = self.pair(j - 1)
            w = step.normalizer
            for i in range(2, self.N - j + 1):
                if w is None:
                    table[(i, j)] = zero
                    continue
                value = (
                    table[(i, j - 1)] * self.pair(i + j - 1).coefficient(w)
                    - self.pair(i).coefficient(w) * table[(i + 1, j - 1)]
                )
                scale = step.coefficient(w)
                table[(i, j)] = value if scale.is_one else value * scale.inverse()
        return table

    def structure_constant(self, i: int, j: int) -> EElement:
        """[e_i, e_j] の係数を返す。i > j の成分を正とし、反対称に拡張する。"""
        if i == j:
            return self.tower.zero()
        if i > j:
            return self.recursion_table[(i, j)]
        return -self.recursion_table[(j, i)]

    @model_serializer
    def _serialize(self) -> dict[str, Any]:
        return {
            'tower': self.tower.model_dump(),
            'N': self.N,
            'lines': [line.model_dump() for line in self.lines],
        }


class SearchResult(BaseModel):
    """中心化列探索の結果。"""

    model_config = ConfigDict(frozen=True)

    tower: FieldTower
    depth: int
    max_distinct: int
    budget: int
    examined: int = 0
    budget_exhausted: bool = False
    sequences: tuple[tuple[CentraliserLine, ...], ...] = ()

    def labels(self) -> list[list[str]]:
        """各列をラベルの列に変換する。"""
        return [[str(line.label) for line in sequence] for sequence in self.sequences]
