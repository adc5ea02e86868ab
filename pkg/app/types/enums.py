"""列挙型の定義。"""

from enum import StrEnum


class TowerMode(StrEnum):
    """体の塔の表現モード。"""

    FINITE = 'finite'  # E = F[α]/(m(α))
    TRANSCENDENTAL = 'transcendental'  # α の次数を上限 D で打ち切った多項式


class ArithOp(StrEnum):
    """E の元に対する演算。"""

    ADD = 'add'
    MUL = 'mul'
    NEG = 'neg'
    INV = 'inv'


class CombineOp(StrEnum):
    """部分空間の結合演算。"""

    SUM = 'sum'
    INTERSECT = 'intersect'


class CompareOp(StrEnum):
    """部分空間の比較演算。"""

    MEMBER = 'member'
    EQUAL = 'equal'
    CONTAINS = 'contains'


class ValidationStatus(StrEnum):
    """代数の検証状態を表す列挙型。"""

    UNVALIDATED = 'unvalidated'  # 構築直後
    VALIDATED = 'validated'  # すべての検査を通過
    INVALID = 'invalid'  # 少なくとも1件の失敗


class FailureKind(StrEnum):
    """検証失敗の種類。"""

    ANTISYMMETRY = 'antisymmetry'
    JACOBI = 'jacobi'
    ALTERNATING = 'alternating'
    MAXIMALCLASS = 'maximalclass'
    CENTRALISER_MISMATCH = 'centraliser_mismatch'
    WINDOW = 'window'


class DichotomyVariant(StrEnum):
    """二分法の判定結果。"""

    CONSTRAINED = 'Constrained'
    NOT_JUST_INFINITE = 'NotJustInfinite'
    INCONCLUSIVE = 'Inconclusive'


class EnumerationMode(StrEnum):
    """被覆次数を調べる元の列挙方針。"""

    FULL = 'full'
    SAMPLED = 'sampled'


class Command(StrEnum):
    """CLI サブコマンド。"""

    VALIDATE = 'validate'
    ANALYZE = 'analyze'
    SEARCH = 'search'
    REPRODUCE = 'reproduce'


class OutputFormat(StrEnum):
    """レポートの出力形式。"""

    TEXT = 'text'
    JSON = 'json'
