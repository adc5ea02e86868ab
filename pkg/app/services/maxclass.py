"""極大類リー代数の構築、括弧積、検証、中心化列の探索を行うサービス。"""

import logging
from collections.abc import Iterator, Sequence

import numpy as np

from app.errors import (
    BadFirstLineError,
    BudgetExhaustedError,
    DegreeOutOfRangeError,
    DegreeOverflowError,
    JobInputError,
    LengthMismatchError,
    TruncationTooSmallError,
)
from app.models.algebra import (
    X_INDEX,
    Y_INDEX,
    AdjointPair,
    CentraliserLine,
    HomElement,
    MaxClassAlgebra,
    SearchResult,
    ValidationFailure,
    ValidationReport,
    WindowCheck,
    basis_degree,
    basis_label,
)
from app.models.field_tower import EElement, FieldTower
from app.models.subspace import FSubspace
from app.services import fsubspace
from app.types import FailureKind, FlatVector, ValidationStatus

logger = logging.getLogger('maxclass')


# ---------------------------------------------------------------------------
# 構築
# ---------------------------------------------------------------------------


def build_from_centralisers(
    tower: FieldTower, lines: Sequence[CentraliserLine], N: int
) -> MaxClassAlgebra:
    """中心化列 C_2, ..., C_{N−1} から代数を構築する（未検証）。

    Args:
        tower: 体の塔。
        lines: 中心化直線の列。先頭は Ey でなければならない。
        N: 切断次数。

    Returns:
        状態が unvalidated の代数。

    Raises:
        TruncationTooSmallError: N < 3 の場合。
        LengthMismatchError: 列の長さが N−2 でない場合。
        BadFirstLineError: C_2 ≠ Ey の場合。
    """
    if N < 3:
        raise TruncationTooSmallError(N)
    if len(lines) != N - 2:
        raise LengthMismatchError(N - 2, len(lines))
    canonical = tuple(CentraliserLine.through(line.a, line.b) for line in lines)
    if not canonical[0].is_y_line:
        raise BadFirstLineError(canonical[0].label)
    adjoint = tuple(AdjointPair.annihilating(line) for line in canonical)
    return MaxClassAlgebra(tower=tower, N=N, lines=canonical, adjoint=adjoint)


def build_metabelian(tower: FieldTower, N: int) -> MaxClassAlgebra:
    """すべての C_i が Ey であるメタアーベル代数を構築し検証する。

    Raises:
        TruncationTooSmallError: N < 3 の場合。
    """
    if N < 3:
        raise TruncationTooSmallError(N)
    lines = [CentraliserLine.y_line(tower)] * (N - 2)
    return validated(build_from_centralisers(tower, lines, N))


def with_adjoint(
    algebra: MaxClassAlgebra, degree: int, lam: EElement, mu: EElement
) -> MaxClassAlgebra:
    """次数 degree の (λ, μ) だけを差し替えた未検証の代数を返す。

    宣言された直線はそのまま残すので、検証で不整合を検出できる。
    """
    if not 2 <= degree <= algebra.N - 1:
        raise DegreeOutOfRangeError(degree, 2, algebra.N - 1)
    adjoint = list(algebra.adjoint)
    adjoint[degree - 2] = AdjointPair.model_construct(lam=lam, mu=mu)
    return MaxClassAlgebra(
        tower=algebra.tower, N=algebra.N, lines=algebra.lines, adjoint=tuple(adjoint)
    )


def lift_sequence(lines: Sequence[CentraliserLine], tower: FieldTower) -> list[CentraliserLine]:
    """素体座標の直線列を拡大体の塔へ持ち上げる。"""
    return [
        CentraliserLine.through(tower.element(line.a.coeffs), tower.element(line.b.coeffs))
        for line in lines
    ]


def line_space(line: CentraliserLine) -> FSubspace:
    """直線 E·(a·x + b·y) を M_1 = E^2 の F-部分空間として返す。"""
    tower = line.a.tower
    points = [
        (tower.alpha_power(j) * line.a, tower.alpha_power(j) * line.b) for j in range(tower.d)
    ]
    return fsubspace.span(tower, 2, points)


# ---------------------------------------------------------------------------
# 括弧積
# ---------------------------------------------------------------------------


def _negate(element: HomElement) -> HomElement:
    return HomElement.model_construct(
        degree=element.degree, coords=tuple(-c for c in element.coords)
    )


def bracket(algebra: MaxClassAlgebra, u: HomElement, v: HomElement) -> HomElement:
    """斉次元の括弧積 [u, v] を返す。結果が 0 のときも次数付きの零元を返す。

    Raises:
        DegreeOverflowError: 次数の和が N を超える場合。
    """
    total = u.degree + v.degree
    if total > algebra.N:
        raise DegreeOverflowError(total, algebra.N)
    if u.degree == 1 and v.degree == 1:
        (a, b), (a2, b2) = u.coords, v.coords
        return HomElement.homogeneous(2, b * a2 - a * b2)
    if v.degree == 1:
        pair = algebra.pair(u.degree)
        a, b = v.coords
        return HomElement.homogeneous(total, u.coords[0] * (a * pair.lam + b * pair.mu))
    if u.degree == 1:
        return _negate(bracket(algebra, v, u))
    constant = algebra.structure_constant(u.degree, v.degree)
    return HomElement.homogeneous(total, u.coords[0] * v.coords[0] * constant)


def to_hom(space: FSubspace, row: FlatVector | np.ndarray, degree: int) -> HomElement:
    """平坦化ベクトルを次数 degree の斉次元に変換する。"""
    point = space.point(row)
    if degree == 1:
        return HomElement.degree_one(point[0], point[1])
    return HomElement.homogeneous(degree, point[0])


def hom_point(element: HomElement) -> tuple[EElement, ...]:
    """斉次元を外側空間の点として返す。"""
    return element.coords


def bracket_span(
    algebra: MaxClassAlgebra, left: FSubspace, degree: int, right: FSubspace
) -> FSubspace:
    """[left, right] の F-線形包を返す。left は次数 degree、right は次数 1 の部分空間。"""
    tower = algebra.tower
    products = []
    right_basis = [to_hom(right, row, 1) for row in right.rows]
    for row in left.rows:
        u = to_hom(left, row, degree)
        products.extend(hom_point(bracket(algebra, u, v)) for v in right_basis)
    return fsubspace.span(tower, 1, products)


# ---------------------------------------------------------------------------
# 検証
# ---------------------------------------------------------------------------


def _basis_element(algebra: MaxClassAlgebra, index: int) -> HomElement:
    return HomElement.basis(algebra.tower, index)


def _jacobi_triples(N: int, start: int) -> Iterator[tuple[int, int, int]]:
    """v < w < u を満たす基底番号の組を次数の和の昇順に列挙する。"""
    triples = []
    for u in range(2, N + 1):
        for w in range(1, u):
            for v in range(w):
                total = basis_degree(u) + basis_degree(w) + basis_degree(v)
                if start <= total <= N:
                    triples.append((total, u, w, v))
    for _, u, w, v in sorted(triples):
        yield u, v, w


def _check_jacobi(algebra: MaxClassAlgebra, start: int) -> list[ValidationFailure]:
    failures = []
    for ui, vi, wi in _jacobi_triples(algebra.N, start):
        u, v, w = (_basis_element(algebra, i) for i in (ui, vi, wi))
        lhs = bracket(algebra, u, bracket(algebra, v, w))
        rhs = bracket(algebra, bracket(algebra, u, v), w) - bracket(
            algebra, bracket(algebra, u, w), v
        )
        if lhs.coords != rhs.coords:
            labels = (basis_label(ui), basis_label(vi), basis_label(wi))
            failures.append(ValidationFailure(kind=FailureKind.JACOBI, basis=labels))
    return failures


def _check_adjoint(algebra: MaxClassAlgebra, start: int) -> list[ValidationFailure]:
    failures = []
    for i in range(2, algebra.N):
        if i + 1 < start:
            continue
        pair = algebra.pair(i)
        if pair.is_zero:
            failures.append(ValidationFailure(kind=FailureKind.MAXIMALCLASS, degrees=(i,)))
        elif pair.kernel_line() != algebra.line(i):
            failures.append(
                ValidationFailure(kind=FailureKind.CENTRALISER_MISMATCH, degrees=(i,))
            )
    return failures


def _check_table(algebra: MaxClassAlgebra, start: int) -> list[ValidationFailure]:
    failures = []
    table = algebra.recursion_table
    for (i, j), value in sorted(table.items()):
        if i + j < start or i > j:
            continue
        label_i, label_j = basis_label(i), basis_label(j)
        if i == j and not value.is_zero:
            failures.append(
                ValidationFailure(kind=FailureKind.ALTERNATING, basis=(label_i, label_j))
            )
        elif i < j and not (value + table[(j, i)]).is_zero:
            failures.append(
                ValidationFailure(kind=FailureKind.ANTISYMMETRY, basis=(label_i, label_j))
            )
    return failures


def validate(algebra: MaxClassAlgebra, from_degree: int | None = None) -> ValidationReport:
    """代数の公理と極大類の条件を検査する。

    Jacobi 恒等式、反対称性、交代性、[e_i, M_1] ≠ 0、宣言された直線と抽出した直線の一致、
    中心化直線の出現窓を調べる。失敗は例外ではなくレポートに記録する。

    Args:
        algebra: 検査対象。
        from_degree: 指定するとこの次数以上の項目だけを検査する（窓の検査は常に全体）。

    Returns:
        検証レポート。
    """
    start = from_degree or 0
    failures = [
        *_check_adjoint(algebra, start),
        *_check_table(algebra, start),
        *_check_jacobi(algebra, start),
    ]
    window = check_window(algebra)
    if not window.ok and window.window is not None:
        failures.append(ValidationFailure(kind=FailureKind.WINDOW, degrees=window.window))
    return ValidationReport(failures=tuple(failures), checked_to=algebra.N)


def validated(algebra: MaxClassAlgebra) -> MaxClassAlgebra:
    """検証を実行し、状態とレポートを設定した代数を返す。"""
    report = validate(algebra)
    status = ValidationStatus.VALIDATED if report.ok else ValidationStatus.INVALID
    logger.info(
        f'代数を検証しました: N={algebra.N}, status={status}, failures={len(report.failures)}'
    )
    return algebra.model_copy(update={'status': status, 'report': report})


def two_step_centraliser(algebra: MaxClassAlgebra, i: int) -> CentraliserLine:
    """次数 i の 2-step 中心化直線を (λ_i, μ_i) の核として抽出する。

    Raises:
        DegreeOutOfRangeError: i が [2, N−1] の外の場合。
    """
    if not 2 <= i <= algebra.N - 1:
        raise DegreeOutOfRangeError(i, 2, algebra.N - 1)
    return algebra.pair(i).kernel_line()


def check_window(algebra: MaxClassAlgebra) -> WindowCheck:
    """各直線 C について、初出の次数を t として長さ t の窓すべてに C が現れるかを調べる。

    窓は [2, N−1] に含まれるものだけを対象とし、最初に見つかった違反を返す。
    """
    last = algebra.N - 1
    occurrences: dict[tuple[int, ...], list[int]] = {}
    labels: dict[tuple[int, ...], CentraliserLine] = {}
    for i in range(2, algebra.N):
        line = algebra.line(i)
        occurrences.setdefault(line.key, []).append(i)
        labels.setdefault(line.key, line)
    for key, positions in occurrences.items():
        t = positions[0]
        for s in range(2, last - t + 2):
            if not any(s <= pos <= s + t - 1 for pos in positions):
                return WindowCheck(ok=False, line=labels[key].label, window=(s, s + t - 1))
    return WindowCheck(ok=True)


# ---------------------------------------------------------------------------
# 探索
# ---------------------------------------------------------------------------


def projective_points(tower: FieldTower) -> list[CentraliserLine]:
    """M_1 の射影点（[0:1] と [1:b]）を正準符号化の順に返す。"""
    points = [CentraliserLine.y_line(tower)]
    points.extend(
        CentraliserLine.model_construct(a=tower.one(), b=b) for b in tower.elements()
    )
    return sorted(points, key=lambda line: line.key)


def search_sequences(
    tower: FieldTower, N: int, max_distinct: int, budget: int
) -> SearchResult:
    """検証を通る中心化列を深さ優先で列挙する。

    先頭は Ey に固定し、各次数で射影点を正準順に試す。部分列の検証に失敗した枝は刈る。
    結果は正準符号化の辞書式順になる。

    Args:
        tower: 体の塔（有限モード）。
        N: 切断次数。
        max_distinct: 列に現れてよい異なる直線の数（1 または 2）。
        budget: 調べる部分列の上限数。

    Returns:
        探索結果。

    Raises:
        BudgetExhaustedError: 予算を使い切った場合。途中結果を保持する。
    """
    tower.require_finite('search_sequences')
    if N < 3:
        raise TruncationTooSmallError(N)
    if max_distinct not in (1, 2):
        raise JobInputError('max_centralisers', '1 または 2 を指定してください')

    candidates = projective_points(tower)
    found: list[tuple[CentraliserLine, ...]] = []
    examined = 0

    def partial(exhausted: bool) -> SearchResult:
        return SearchResult(
            tower=tower,
            depth=N,
            max_distinct=max_distinct,
            budget=budget,
            examined=examined,
            budget_exhausted=exhausted,
            sequences=tuple(found),
        )

    def visit(prefix: list[CentraliserLine]) -> None:
        nonlocal examined
        if examined >= budget:
            logger.warning(f'探索予算 {budget} を使い切りました: 発見 {len(found)} 件')
            raise BudgetExhaustedError(partial(exhausted=True))
        examined += 1
        n = len(prefix) + 2
        report = validate(build_from_centralisers(tower, prefix, n), from_degree=n)
        if not report.ok:
            logger.debug(f'枝刈り: {[str(line.label) for line in prefix]}')
            return
        if n == N:
            found.append(tuple(prefix))
            return
        for candidate in candidates:
            extended = [*prefix, candidate]
            if len({line.key for line in extended}) > max_distinct:
                continue
            visit(extended)

    visit([CentraliserLine.y_line(tower)])
    logger.info(f'探索完了: N={N}, 調べた部分列={examined}, 発見={len(found)}')
    return partial(exhausted=False)


__all__ = [
    'X_INDEX',
    'Y_INDEX',
    'bracket',
    'bracket_span',
    'build_from_centralisers',
    'build_metabelian',
    'check_window',
    'lift_sequence',
    'line_space',
    'projective_points',
    'search_sequences',
    'to_hom',
    'two_step_centraliser',
    'validate',
    'validated',
    'with_adjoint',
]
