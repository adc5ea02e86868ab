"""型定義パッケージの初期化ファイル。"""

from .enums import (
    ArithOp,
    Command,
    CombineOp,
    CompareOp,
    DichotomyVariant,
    EnumerationMode,
    FailureKind,
    OutputFormat,
    TowerMode,
    ValidationStatus,
)
from .models import Coeffs, FlatVector, LineLabel

__all__ = [
    'ArithOp',
    'Coeffs',
    'CombineOp',
    'Command',
    'CompareOp',
    'DichotomyVariant',
    'EnumerationMode',
    'FailureKind',
    'FlatVector',
    'LineLabel',
    'OutputFormat',
    'TowerMode',
    'ValidationStatus',
]
