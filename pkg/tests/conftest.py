"""テスト用の共通設定とフィクスチャ。"""

import pytest

from app.models.algebra import MaxClassAlgebra
from app.models.field_tower import FieldTower
from app.repositories.job_repository import JsonJobRepository
from app.services import maxclass
from app.services.fieldtower import make_tower
from app.services.job_service import JobService

# 低次から高次の係数列
GF2_MINPOLY = (0, 1)
GF4_MINPOLY = (1, 1, 1)
GF8_MINPOLY = (1, 1, 0, 1)
GF16_MINPOLY = (1, 1, 0, 0, 1)


@pytest.fixture
def gf2() -> FieldTower:
    """E = F = GF(2) の塔。"""
    return make_tower(2, GF2_MINPOLY)


@pytest.fixture
def gf4() -> FieldTower:
    """GF(2) ⊂ GF(4) の塔。"""
    return make_tower(2, GF4_MINPOLY)


@pytest.fixture
def gf8() -> FieldTower:
    """GF(2) ⊂ GF(8) の塔。"""
    return make_tower(2, GF8_MINPOLY)


@pytest.fixture
def gf16() -> FieldTower:
    """GF(2) ⊂ GF(16) の塔（α は原始元）。"""
    return make_tower(2, GF16_MINPOLY)


@pytest.fixture
def gf9() -> FieldTower:
    """GF(3) ⊂ GF(9) の塔（α² + 1 = 0）。"""
    return make_tower(3, (1, 0, 1))


@pytest.fixture
def metabelian_gf4(gf4: FieldTower) -> MaxClassAlgebra:
    """GF(4) 上の N = 10 のメタアーベル代数。"""
    return maxclass.build_metabelian(gf4, 10)


@pytest.fixture
def job_repository() -> JsonJobRepository:
    """JSON ジョブリポジトリ。"""
    return JsonJobRepository()


@pytest.fixture
def job_service(job_repository: JsonJobRepository) -> JobService:
    """ジョブサービス。"""
    return JobService(job_repository)
