"""体の塔 F = GF(p) ⊆ E と E の元を定義するモジュール。"""

from collections.abc import Iterator, Sequence
from itertools import product
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, model_serializer, model_validator

from app.errors import (
    DegreeCapExceededError,
    InvalidCapError,
    NonMonicPolynomialError,
    NonPrimeCharacteristicError,
    ReduciblePolynomialError,
    TowerMismatchError,
    UnsupportedInTranscendentalModeError,
    ZeroInverseError,
)
from app.types import Coeffs, TowerMode
from app.utils.gfp import IntArray, find_factor, is_prime, mod_p, poly_mod, poly_mul, poly_trim


class FieldTower(BaseModel):
    """体の塔 F = GF(p) ⊆ E = F[α]/(m(α))。

    超越モードでは m を持たず、α の次数 cap までの多項式を扱う。
    構築時に標数の素数性と最小多項式の既約性を検証する。
    """

    model_config = ConfigDict(frozen=True)

    p: int
    minpoly: Coeffs | None = None
    mode: TowerMode = TowerMode.FINITE
    cap: int | None = None

    @model_validator(mode='before')
    @classmethod
    def _reduce_minpoly(cls, data: Any) -> Any:
        # 係数を 0..p-1 に正規化して保持する
        if isinstance(data, dict):
            p = data.get('p')
            minpoly = data.get('minpoly')
            if isinstance(p, int) and p > 1 and isinstance(minpoly, list | tuple):
                data = {**data, 'minpoly': tuple(int(c) % p for c in minpoly)}
        return data

    @model_validator(mode='after')
    def _check_tower(self) -> 'FieldTower':
        if not is_prime(self.p):
            raise NonPrimeCharacteristicError(self.p)
        if self.mode is TowerMode.TRANSCENDENTAL:
            if self.cap is None or self.cap <= 0:
                raise InvalidCapError(self.cap if self.cap is not None else 0)
            return self

        coeffs = list(self.minpoly or ())
        if len(coeffs) < 2 or coeffs[-1] != 1:
            raise NonMonicPolynomialError(coeffs)
        factor = find_factor(coeffs, self.p)
        if factor is not None:
            raise ReduciblePolynomialError(coeffs, factor.tolist())
        return self

    @property
    def is_finite(self) -> bool:
        """有限モードかどうかを返す。"""
        return self.mode is TowerMode.FINITE

    @property
    def d(self) -> int:
        """E の元の座標数。有限モードでは [E:F]、超越モードでは cap+1。"""
        if self.minpoly is not None and self.is_finite:
            return len(self.minpoly) - 1
        return int(self.cap or 0) + 1

    @property
    def order(self) -> int:
        """有限モードでの |E| を返す。"""
        return int(self.p**self.d)

    def require_finite(self, operation: str) -> None:
        """有限モードでなければ例外を送出する。

        Raises:
            UnsupportedInTranscendentalModeError: 超越モードの場合。
        """
        if not self.is_finite:
            raise UnsupportedInTranscendentalModeError(operation)

    def element(self, coeffs: Sequence[int] | IntArray) -> 'EElement':
        """係数列から E の元を作る。有限モードでは最小多項式で簡約する。

        Raises:
            DegreeCapExceededError: 超越モードで次数が cap を超える場合。
        """
        trimmed = poly_trim(coeffs, self.p)
        if self.is_finite:
            if trimmed.size > self.d:
                trimmed = poly_mod(trimmed, np.asarray(self.minpoly, dtype=np.int64), self.p)
        elif trimmed.size > self.d:
            raise DegreeCapExceededError(self.d - 1, trimmed.size - 1)
        padded = np.zeros(self.d, dtype=np.int64)
        padded[: trimmed.size] = trimmed
        return EElement.model_construct(tower=self, coeffs=tuple(int(c) for c in padded))

    def scalar(self, value: int) -> 'EElement':
        """素体の元 value を E の元として返す。"""
        return self.element([value])

    def zero(self) -> 'EElement':
        """零元を返す。"""
        return self.element([])

    def one(self) -> 'EElement':
        """単位元を返す。"""
        return self.element([1])

    def alpha(self) -> 'EElement':
        """生成元 α を返す。"""
        return self.element([0, 1])

    def alpha_power(self, k: int) -> 'EElement':
        """α^k を返す。"""
        return self.element([0] * k + [1])

    def elements(self) -> Iterator['EElement']:
        """E のすべての元を係数列の辞書式順で列挙する（有限モード）。"""
        self.require_finite('elements')
        for coeffs in product(range(self.p), repeat=self.d):
            yield EElement.model_construct(tower=self, coeffs=tuple(coeffs))

    def describe(self) -> str:
        """ログ用の短い説明を返す。"""
        if self.is_finite:
            return f'GF({self.p}^{self.d}) minpoly={list(self.minpoly or ())}'
        return f'GF({self.p})[α] cap={self.cap}'

    @model_serializer
    def _serialize(self) -> dict[str, Any]:
        return {
            'p': self.p,
            'minpoly': list(self.minpoly) if self.minpoly is not None else None,
            'mode': str(self.mode),
            'cap': self.cap,
        }


class EElement(BaseModel):
    """E の元。α の多項式として低次から高次の係数列で保持する。"""

    model_config = ConfigDict(frozen=True)

    tower: FieldTower
    coeffs: Coeffs

    @model_validator(mode='after')
    def _check_coeffs(self) -> 'EElement':
        if len(self.coeffs) != self.tower.d or any(
            c < 0 or c >= self.tower.p for c in self.coeffs
        ):
            canonical = self.tower.element(self.coeffs)
            object.__setattr__(self, 'coeffs', canonical.coeffs)
        return self

    @property
    def is_zero(self) -> bool:
        """零元かどうかを返す。"""
        return not any(self.coeffs)

    @property
    def is_one(self) -> bool:
        """単位元かどうかを返す。"""
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def array(self) -> IntArray:
        """係数列を numpy 配列で返す。"""
        return np.asarray(self.coeffs, dtype=np.int64)

    def _same_tower(self, other: 'EElement') -> None:
        if other.tower is not self.tower and other.tower != self.tower:
            raise TowerMismatchError()

    def __add__(self, other: 'EElement') -> 'EElement':
        self._same_tower(other)
        return self._wrap(mod_p(self.array() + other.array(), self.tower.p))

    def __sub__(self, other: 'EElement') -> 'EElement':
        self._same_tower(other)
        return self._wrap(mod_p(self.array() - other.array(), self.tower.p))

    def __neg__(self) -> 'EElement':
        return self._wrap(mod_p(-self.array(), self.tower.p))

    def __mul__(self, other: 'EElement') -> 'EElement':
        self._same_tower(other)
        if self.is_zero or other.is_zero:
            return self.tower.zero()
        return self.tower.element(poly_mul(self.array(), other.array(), self.tower.p))

    def __invert__(self) -> 'EElement':
        return self.inverse()

    def scaled(self, k: int) -> 'EElement':
        """素体の元 k 倍を返す。"""
        return self._wrap(mod_p(self.array() * k, self.tower.p))

    def inverse(self) -> 'EElement':
        """乗法逆元 a^(p^d − 2) を返す。

        Raises:
            UnsupportedInTranscendentalModeError: 超越モードの場合。
            ZeroInverseError: 0 の逆元を求めた場合。
        """
        self.tower.require_finite('inv')
        if self.is_zero:
            raise ZeroInverseError()
        if self.is_one:
            return self
        result = self.tower.one()
        base = self
        exponent = self.tower.order - 2
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def _wrap(self, coeffs: IntArray) -> 'EElement':
        return EElement.model_construct(tower=self.tower, coeffs=tuple(int(c) for c in coeffs))

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = '1' if k == 0 else ('α' if k == 1 else f'α^{k}')
            terms.append(mono if c == 1 else f'{c}{mono}' if k else str(c))
        return '+'.join(terms) if terms else '0'

    @model_serializer
    def _serialize(self) -> list[int]:
        return list(self.coeffs)
