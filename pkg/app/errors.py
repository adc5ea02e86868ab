"""アプリケーション全体で利用するカスタム例外クラスを定義します。

pydantic のバリデータ内から送出しても包み直されないよう、ValueError は継承しない。
"""

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from app.models.algebra import SearchResult

__all__ = [
    'AlgebraError',
    'AlgebraNotValidatedError',
    'AmbientMismatchError',
    'AnalysisError',
    'AppError',
    'BadFirstLineError',
    'BudgetExhaustedError',
    'CoveringNotReachedError',
    'DegreeCapExceededError',
    'DegreeOutOfRangeError',
    'DegreeOverflowError',
    'DegreeTooSmallError',
    'FieldTowerError',
    'GeneratingSpaceTooSmallError',
    'InadmissibleChoiceError',
    'InputFileNotFoundError',
    'InvalidCapError',
    'JobError',
    'JobInputError',
    'LengthMismatchError',
    'MissingOperandError',
    'NonMonicPolynomialError',
    'NonPrimeCharacteristicError',
    'NotKInvariantError',
    'ReduciblePolynomialError',
    'SubspaceError',
    'TowerMismatchError',
    'TruncationExceededError',
    'TruncationTooSmallError',
    'UnknownPresetError',
    'UnsupportedInTranscendentalModeError',
    'ZeroElementError',
    'ZeroInverseError',
    'ZeroLineError',
]


class AppError(Exception):
    """すべての例外の基底クラス。"""


# ---------------------------------------------------------------------------
# 体の塔
# ---------------------------------------------------------------------------


class FieldTowerError(AppError):
    """体の塔と元の演算に関連する基底例外クラス。"""


class NonPrimeCharacteristicError(FieldTowerError):
    """標数が素数でない場合の例外クラス。"""

    def __init__(self, p: int) -> None:
        """
        例外を初期化します。

        Args:
            p: 指定された標数。
        """
        self.p = p
        super().__init__(f'標数 p={p} は素数ではありません')


class NonMonicPolynomialError(FieldTowerError):
    """最小多項式がモニックでない場合の例外クラス。"""

    def __init__(self, minpoly: list[int]) -> None:
        """
        例外を初期化します。

        Args:
            minpoly: 指定された係数列（低次から高次）。
        """
        self.minpoly = minpoly
        super().__init__(f'多項式 {minpoly} は次数1以上のモニック多項式ではありません')


class ReduciblePolynomialError(FieldTowerError):
    """最小多項式が可約な場合の例外クラス。"""

    def __init__(self, minpoly: list[int], factor: list[int]) -> None:
        """
        例外を初期化します。

        Args:
            minpoly: 指定された係数列。
            factor: 見つかった非自明な因子。
        """
        self.minpoly = minpoly
        self.factor = factor
        super().__init__(f'多項式 {minpoly} は可約です（因子 {factor}）')


class InvalidCapError(FieldTowerError):
    """超越モードの次数上限が不正な場合の例外クラス。"""

    def __init__(self, cap: int) -> None:
        """
        例外を初期化します。

        Args:
            cap: 指定された次数上限。
        """
        self.cap = cap
        super().__init__(f'次数上限 cap={cap} は正の整数でなければなりません')


class ZeroInverseError(FieldTowerError):
    """0 の逆元を求めた場合の例外クラス。"""

    def __init__(self) -> None:
        """例外を初期化します。"""
        super().__init__('0 の逆元は存在しません')


class DegreeCapExceededError(FieldTowerError):
    """超越モードの積が次数上限を超えた場合の例外クラス。"""

    def __init__(self, cap: int, degree: int) -> None:
        """
        例外を初期化します。

        Args:
            cap: 次数上限。
            degree: 積の次数。
        """
        self.cap = cap
        self.degree = degree
        super().__init__(f'積の次数 {degree} が上限 {cap} を超えました')


class TowerMismatchError(FieldTowerError):
    """異なる体の塔の元を混在させた場合の例外クラス。"""

    def __init__(self) -> None:
        """例外を初期化します。"""
        super().__init__('異なる体の塔に属する値は組み合わせられません')


class MissingOperandError(FieldTowerError):
    """二項演算の被演算子が足りない場合の例外クラス。"""

    def __init__(self, operation: str, operand: str) -> None:
        """
        例外を初期化します。

        Args:
            operation: 演算名。
            operand: 欠けている被演算子の名前。
        """
        self.operation = operation
        self.operand = operand
        super().__init__(f'演算 {operation} には被演算子 {operand} が必要です')


class UnsupportedInTranscendentalModeError(FieldTowerError):
    """超越モードで未対応の操作を呼び出した場合の例外クラス。"""

    def __init__(self, operation: str) -> None:
        """
        例外を初期化します。

        Args:
            operation: 呼び出された操作名。
        """
        self.operation = operation
        super().__init__(f'操作 {operation} は超越モードでは利用できません')


# ---------------------------------------------------------------------------
# 部分空間
# ---------------------------------------------------------------------------


class SubspaceError(AppError):
    """F-部分空間の演算に関連する基底例外クラス。"""


class AmbientMismatchError(SubspaceError):
    """外側の空間が一致しない場合の例外クラス。"""

    def __init__(self, left: str, right: str) -> None:
        """
        例外を初期化します。

        Args:
            left: 左辺の外側空間の説明。
            right: 右辺の外側空間の説明。
        """
        super().__init__(f'外側の空間が一致しません: {left} と {right}')


class NotKInvariantError(SubspaceError):
    """部分空間が部分体で閉じていない場合の例外クラス。"""

    def __init__(self, k_degree: int, rank: int) -> None:
        """
        例外を初期化します。

        Args:
            k_degree: 部分体の F 上の次数。
            rank: 部分空間の F-次元。
        """
        self.k_degree = k_degree
        self.rank = rank
        super().__init__(f'F-次元 {rank} の部分空間は次数 {k_degree} の部分体で閉じていません')


# ---------------------------------------------------------------------------
# 極大類の代数
# ---------------------------------------------------------------------------


class AlgebraError(AppError):
    """極大類の代数の構築と演算に関連する基底例外クラス。"""


class TruncationTooSmallError(AlgebraError):
    """切断次数が小さすぎる場合の例外クラス。"""

    def __init__(self, n: int) -> None:
        """
        例外を初期化します。

        Args:
            n: 指定された切断次数。
        """
        self.n = n
        super().__init__(f'切断次数 N={n} は 3 以上でなければなりません')


class BadFirstLineError(AlgebraError):
    """最初の中心化直線が Ey でない場合の例外クラス。"""

    def __init__(self, line: str) -> None:
        """
        例外を初期化します。

        Args:
            line: 指定された最初の直線のラベル。
        """
        self.line = line
        super().__init__(f'C_2 は Ey ([0:1]) でなければなりませんが {line} が指定されました')


class LengthMismatchError(AlgebraError):
    """中心化列の長さが N−2 と一致しない場合の例外クラス。"""

    def __init__(self, expected: int, actual: int) -> None:
        """
        例外を初期化します。

        Args:
            expected: 期待される長さ。
            actual: 実際の長さ。
        """
        self.expected = expected
        self.actual = actual
        super().__init__(f'中心化列の長さは {expected} であるべきですが {actual} です')


class ZeroLineError(AlgebraError):
    """中心化直線の座標がすべて 0 の場合の例外クラス。"""

    def __init__(self) -> None:
        """例外を初期化します。"""
        super().__init__('直線 E·(a·x + b·y) は (a, b) ≠ (0, 0) でなければなりません')


class DegreeOverflowError(AlgebraError):
    """括弧積の次数が切断次数を超える場合の例外クラス。"""

    def __init__(self, degree: int, n: int) -> None:
        """
        例外を初期化します。

        Args:
            degree: 括弧積の次数。
            n: 切断次数。
        """
        self.degree = degree
        self.n = n
        super().__init__(f'括弧積の次数 {degree} が切断次数 N={n} を超えます')


class DegreeOutOfRangeError(AlgebraError):
    """次数が許容範囲外の場合の例外クラス。"""

    def __init__(self, degree: int, low: int, high: int) -> None:
        """
        例外を初期化します。

        Args:
            degree: 指定された次数。
            low: 下限。
            high: 上限。
        """
        self.degree = degree
        super().__init__(f'次数 {degree} は範囲 [{low}, {high}] の外です')


class AlgebraNotValidatedError(AlgebraError):
    """検証済みでない代数を解析しようとした場合の例外クラス。"""

    def __init__(self, status: str) -> None:
        """
        例外を初期化します。

        Args:
            status: 代数の検証状態。
        """
        self.status = status
        super().__init__(f'代数は検証済みではありません（状態: {status}）')


class BudgetExhaustedError(AlgebraError):
    """探索予算を使い切った場合の例外クラス。途中結果を保持する。"""

    def __init__(self, partial: 'SearchResult') -> None:
        """
        例外を初期化します。

        Args:
            partial: 予算到達までに見つかった結果。
        """
        self.partial = partial
        super().__init__(
            f'探索予算 {partial.budget} を使い切りました'
            f'（発見済み {len(partial.sequences)} 件）'
        )


# ---------------------------------------------------------------------------
# 解析
# ---------------------------------------------------------------------------


class AnalysisError(AppError):
    """部分代数の解析に関連する基底例外クラス。"""


class GeneratingSpaceTooSmallError(AnalysisError):
    """E·L_1 が M_1 全体にならない場合の例外クラス。"""

    def __init__(self, rank: int, required: int) -> None:
        """
        例外を初期化します。

        Args:
            rank: E·L_1 の F-次元。
            required: 必要な F-次元。
        """
        self.rank = rank
        self.required = required
        super().__init__(f'E·L_1 の F-次元は {rank} ですが {required} が必要です')


class ZeroElementError(AnalysisError):
    """0 を渡してはならない箇所に 0 が渡された場合の例外クラス。"""

    def __init__(self) -> None:
        """例外を初期化します。"""
        super().__init__('0 でない斉次元を指定してください')


class InadmissibleChoiceError(AnalysisError):
    """x_i の選び方が L_1 \\ C_i の元になっていない場合の例外クラス。"""

    def __init__(self, degree: int) -> None:
        """
        例外を初期化します。

        Args:
            degree: 対象の次数 i。
        """
        self.degree = degree
        super().__init__(f'次数 {degree} の代表元は L_1 に属し C_{degree} に属さない必要があります')


class TruncationExceededError(AnalysisError):
    """反復が切断次数を超える場合の例外クラス。"""

    def __init__(self, degree: int, steps: int, n: int) -> None:
        """
        例外を初期化します。

        Args:
            degree: 開始次数。
            steps: 反復回数。
            n: 切断次数。
        """
        self.degree = degree
        self.steps = steps
        self.n = n
        super().__init__(f'次数 {degree} から {steps} 回の括弧積は切断次数 N={n} を超えます')


class CoveringNotReachedError(AnalysisError):
    """r_max 回以内に被覆しなかった場合の例外クラス。"""

    def __init__(self, r_max: int) -> None:
        """
        例外を初期化します。

        Args:
            r_max: 試した最大回数。
        """
        self.r_max = r_max
        super().__init__(f'{r_max} 回以内の括弧積で L_(i+k) に到達しませんでした')


class DegreeTooSmallError(AnalysisError):
    """次数が小さすぎる場合の例外クラス。"""

    def __init__(self, n: int) -> None:
        """
        例外を初期化します。

        Args:
            n: 指定された次数。
        """
        self.n = n
        super().__init__(f'次数 n={n} は 2 以上でなければなりません')


# ---------------------------------------------------------------------------
# ジョブ
# ---------------------------------------------------------------------------


class JobError(AppError):
    """ジョブ入力に関連する基底例外クラス。"""


class UnknownPresetError(JobError):
    """未登録のプリセット名が指定された場合の例外クラス。"""

    def __init__(self, name: str) -> None:
        """
        例外を初期化します。

        Args:
            name: 指定されたプリセット名。
        """
        self.name = name
        super().__init__(f'プリセット {name} は登録されていません')


class JobInputError(JobError):
    """入力が不正な場合の例外クラス。問題のあるフィールド名を保持する。"""

    def __init__(self, field: str, message: str) -> None:
        """
        例外を初期化します。

        Args:
            field: 問題のあるフィールド名。
            message: 詳細メッセージ。
        """
        self.field = field
        super().__init__(f'入力フィールド {field} が不正です: {message}')


class InputFileNotFoundError(JobError):
    """入力ファイルが存在しない場合の例外クラス。"""

    def __init__(self, path: str) -> None:
        """
        例外を初期化します。

        Args:
            path: 指定されたファイルパス。
        """
        self.path = path
        super().__init__(f'入力ファイル {path} が見つかりません')
