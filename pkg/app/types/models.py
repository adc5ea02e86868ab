"""カスタム型の定義。"""

from typing import NewType

# GF(p) 上の係数列（低次から高次）
Coeffs = tuple[int, ...]

# E^k を F^{k·d} に平坦化したベクトル
FlatVector = tuple[int, ...]

# 射影点の正準ラベル（例: '[0:1]'）
LineLabel = NewType('LineLabel', str)
