"""体の塔の構築、元の演算、安定化環と部分体の計算を行うサービス。"""

import logging
from collections.abc import Iterable, Sequence

import numpy as np

from app.errors import MissingOperandError, TowerMismatchError
from app.models.field_tower import EElement, FieldTower
from app.models.subspace import FSubspace, StabilizerReport, Subfield
from app.services import fsubspace
from app.types import ArithOp, TowerMode
from app.utils.gfp import left_nullspace, nullspace

logger = logging.getLogger('maxclass')


def make_tower(p: int, minpoly: Sequence[int] | None = None, cap: int | None = None) -> FieldTower:
    """体の塔を構築する。

    minpoly を与えると有限モード、cap を与えると超越モードになる。

    Args:
        p: 標数。
        minpoly: 最小多項式の係数列（低次から高次）。
        cap: 超越モードで追跡する α の最大次数。

    Returns:
        検証済みの体の塔。

    Raises:
        NonPrimeCharacteristicError: p が素数でない場合。
        NonMonicPolynomialError: minpoly がモニックでない場合。
        ReduciblePolynomialError: minpoly が可約な場合。
        InvalidCapError: cap が正でない場合。
    """
    if minpoly is None:
        tower = FieldTower(p=p, mode=TowerMode.TRANSCENDENTAL, cap=cap)
    else:
        tower = FieldTower(p=p, minpoly=tuple(minpoly), mode=TowerMode.FINITE)
    logger.info(f'体の塔を構築しました: {tower.describe()}')
    return tower


def arith(op: ArithOp, a: EElement, b: EElement | None = None) -> EElement:
    """E の元の演算を行う。

    Raises:
        MissingOperandError: ADD / MUL で b を省略した場合。
        TowerMismatchError: 異なる塔の元を組み合わせた場合。
        ZeroInverseError: 0 の逆元を求めた場合。
        DegreeCapExceededError: 超越モードで積の次数が上限を超えた場合。
    """
    if op is ArithOp.NEG:
        return -a
    if op is ArithOp.INV:
        return a.inverse()
    if b is None:
        raise MissingOperandError(str(op), 'b')
    if op is ArithOp.ADD:
        return a + b
    return a * b


# ---------------------------------------------------------------------------
# 部分体
# ---------------------------------------------------------------------------


def prime_field(tower: FieldTower) -> Subfield:
    """素体 F = GF(p) を部分体として返す。"""
    return Subfield(space=fsubspace.span(tower, 1, [(tower.one(),)]))


def full_field(tower: FieldTower) -> Subfield:
    """E 全体を部分体として返す。"""
    return Subfield(space=FSubspace.from_matrix(tower, 1, np.eye(tower.d, dtype=np.int64)))


def is_subfield(space: FSubspace) -> bool:
    """E^1 の部分空間が部分体の条件を満たすかを返す。

    1 を含み、基底同士の積で閉じ、次数が d を割り切ることを確認する。
    """
    tower = space.tower
    if space.k != 1 or not fsubspace.member(space, (tower.one(),)):
        return False
    basis = [point[0] for point in space.basis_points()]
    for i, u in enumerate(basis):
        for v in basis[i:]:
            if not fsubspace.member(space, (u * v,)):
                return False
    return not tower.is_finite or tower.d % space.rank == 0


def subfield_generated(elements: Iterable[EElement], tower: FieldTower | None = None) -> Subfield:
    """S ∪ {1} を含む最小の部分体を閉包計算で求める。

    F-線形包をとり、基底同士の積を加える操作を次元が増えなくなるまで繰り返す。
    有限次元で乗法に閉じ 1 を含むので逆元は自動的に含まれる。

    Raises:
        TowerMismatchError: 異なる塔の元が含まれる場合。
        UnsupportedInTranscendentalModeError: 超越モードの場合。
    """
    items = list(elements)
    base = tower if tower is not None else items[0].tower
    base.require_finite('subfield_generated')
    for element in items:
        if element.tower != base:
            raise TowerMismatchError()

    space = fsubspace.span(base, 1, [(base.one(),), *((e,) for e in items)])
    while True:
        basis = [point[0] for point in space.basis_points()]
        products = [(u * v,) for i, u in enumerate(basis) for v in basis[i:]]
        grown = fsubspace.subspace_sum(space, fsubspace.span(base, 1, products))
        if grown.rank == space.rank:
            return Subfield(space=space)
        space = grown


def compositum(a: Subfield, b: Subfield) -> Subfield:
    """2つの部分体を含む最小の部分体を返す。

    Raises:
        TowerMismatchError: 塔が異なる場合。
    """
    if a.tower != b.tower:
        raise TowerMismatchError()
    return subfield_generated([*a.basis(), *b.basis()], tower=a.tower)


def contains_field(outer: Subfield, inner: Subfield) -> bool:
    """outer ⊇ inner かどうかを返す。"""
    return fsubspace.contains(outer.space, inner.space)


# ---------------------------------------------------------------------------
# 安定化環
# ---------------------------------------------------------------------------


def stabilizer(space: FSubspace) -> StabilizerReport:
    """E_U = {β ∈ E : βU ⊆ U} を求める。

    U の零化空間 H を求め、β = Σ b_t α^t に対する条件 (α^t u_j)·h_s の線形結合 = 0 を
    b について解く。

    Raises:
        UnsupportedInTranscendentalModeError: 超越モードの場合。
    """
    tower = space.tower
    tower.require_finite('stabilizer')
    if space.is_zero or space.rank == space.width:
        ring = full_field(tower).space
        return StabilizerReport(ring=ring, is_field=True)

    basis = space.matrix()
    annihilator = nullspace(basis, tower.p)
    rows = []
    for t in range(tower.d):
        shifted = fsubspace.scale_matrix(basis, space.k, tower.alpha_power(t))
        rows.append((shifted @ annihilator.T).reshape(-1))
    conditions = np.stack(rows) % tower.p
    solutions = left_nullspace(conditions, tower.p)
    ring = FSubspace.from_matrix(tower, 1, solutions)
    report = StabilizerReport(ring=ring, is_field=is_subfield(ring))
    logger.debug(f'安定化環: dim_F U={space.rank} -> [E_U:F]={report.degree}')
    return report
