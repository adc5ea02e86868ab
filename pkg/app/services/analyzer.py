"""L_1 が生成する部分代数の解析サービス。

列 L_i、2-step 体 F_i と合成体 K、K 上の次元の落ち方、被覆次数、二分法の判定、
自由メタアーベル代数の次元の参照値を扱う。
"""

import logging
from collections.abc import Iterator, Sequence
from itertools import product

import numpy as np

from app.config import config
from app.errors import (
    AlgebraNotValidatedError,
    CoveringNotReachedError,
    DegreeTooSmallError,
    GeneratingSpaceTooSmallError,
    InadmissibleChoiceError,
    TruncationExceededError,
    ZeroElementError,
)
from app.models.algebra import CentraliserLine, HomElement, MaxClassAlgebra
from app.models.analysis import (
    ConstituentStats,
    ConstrainedResult,
    DichotomyResult,
    EnumerationPolicy,
    ExpandingTrace,
    GeneratingSpace,
    InconclusiveResult,
    KChainReport,
    LChain,
    NotJustInfiniteResult,
    TwoStepDegree,
    TwoStepFieldReport,
)
from app.models.field_tower import EElement
from app.models.subspace import FSubspace, Subfield
from app.services import fieldtower, fsubspace, maxclass
from app.types import EnumerationMode
from app.utils.gfp import IntArray

logger = logging.getLogger('maxclass')


def _truncation(algebra: MaxClassAlgebra, N: int | None) -> int:
    return algebra.N if N is None else min(N, algebra.N)


def _require_validated(algebra: MaxClassAlgebra) -> None:
    if not algebra.is_validated:
        raise AlgebraNotValidatedError(str(algebra.status))


def check_generating(L1: GeneratingSpace) -> None:
    """E·L_1 = M_1 を確認する。

    有限モードでは k_closure(E, L_1) の F-次元が 2d であることを、超越モードでは
    基底の組の 2×2 行列式に 0 でないものがあることを調べる。

    Raises:
        GeneratingSpaceTooSmallError: 条件を満たさない場合。
    """
    tower = L1.tower
    if tower.is_finite:
        closure = fsubspace.k_closure(fieldtower.full_field(tower), L1.space)
        if closure.rank != 2 * tower.d:
            raise GeneratingSpaceTooSmallError(closure.rank, 2 * tower.d)
        return
    points = L1.space.basis_points()
    for i, (a, b) in enumerate(points):
        for a2, b2 in points[i + 1 :]:
            if not (a * b2 - b * a2).is_zero:
                return
    raise GeneratingSpaceTooSmallError(L1.rank, 2)


# ---------------------------------------------------------------------------
# 列 L_i
# ---------------------------------------------------------------------------


def chain(algebra: MaxClassAlgebra, L1: GeneratingSpace, N: int | None = None) -> LChain:
    """L_2 = [L_1, L_1]、L_{i+1} = [L_i, L_1] を N まで計算する。

    Args:
        algebra: 検証済みの代数。
        L1: 生成部分空間。
        N: 切断次数。省略時は代数の切断次数。

    Returns:
        列と d_i = dim_F(L_1 ∩ C_i)。

    Raises:
        AlgebraNotValidatedError: 代数が検証済みでない場合。
        GeneratingSpaceTooSmallError: E·L_1 ≠ M_1 の場合。
    """
    _require_validated(algebra)
    check_generating(L1)
    n = _truncation(algebra, N)

    spaces = [maxclass.bracket_span(algebra, L1.space, 1, L1.space)]
    for i in range(2, n):
        spaces.append(maxclass.bracket_span(algebra, spaces[-1], i, L1.space))
    d_seq = tuple(
        fsubspace.intersect(L1.space, maxclass.line_space(algebra.line(i))).rank
        for i in range(2, n)
    )
    result = LChain(N=n, generator=L1.space, spaces=tuple(spaces), d_seq=d_seq)
    logger.debug(f'L_i の次元: {list(result.dims)}')
    return result


def ideal_trace(
    algebra: MaxClassAlgebra, lchain: LChain, X: FSubspace, degree: int
) -> tuple[int, ...]:
    """次数 degree の部分空間 X が生成する次数付きイデアルの各次数での F-次元を返す。"""
    dims = [X.rank]
    current = X
    for j in range(degree, lchain.N):
        current = maxclass.bracket_span(algebra, current, j, lchain.generator)
        dims.append(current.rank)
    return tuple(dims)


# ---------------------------------------------------------------------------
# 2-step 体
# ---------------------------------------------------------------------------


def _functional(line: CentraliserLine, v: Sequence[EElement]) -> EElement:
    # 核が C_i = E·(a_i, b_i) となる E-線形汎関数
    return v[0] * line.b - v[1] * line.a


def _degree_field(
    algebra: MaxClassAlgebra, W: FSubspace, i: int, choice: tuple[EElement, EElement]
) -> TwoStepDegree:
    line = algebra.line(i)
    normalizer = _functional(line, choice).inverse()
    images = [(_functional(line, point) * normalizer,) for point in W.basis_points()]
    image = fsubspace.span(W.tower, 1, images)
    quotient = W.rank - fsubspace.intersect(W, maxclass.line_space(line)).rank
    field = fieldtower.subfield_generated([point[0] for point in images], tower=W.tower)
    return TwoStepDegree(
        degree=i,
        choice=choice,
        image=image,
        field=field,
        image_is_field=fieldtower.is_subfield(image),
        quotient_dim=quotient,
    )


def field_at_degree(
    algebra: MaxClassAlgebra,
    L1: GeneratingSpace,
    i: int,
    x: tuple[EElement, EElement],
    base: Subfield | None = None,
) -> TwoStepDegree:
    """代表元 x ∈ L_1 \\ C_i を指定して F_i を計算する。

    Raises:
        InadmissibleChoiceError: x が L_1 に属さないか C_i に属する場合。
    """
    algebra.tower.require_finite('field_at_degree')
    W = L1.space if base is None else fsubspace.k_closure(base, L1.space)
    if not fsubspace.member(W, x) or fsubspace.member(maxclass.line_space(algebra.line(i)), x):
        raise InadmissibleChoiceError(i)
    return _degree_field(algebra, W, i, x)


def admissible_choices(
    algebra: MaxClassAlgebra, W: FSubspace, i: int
) -> Iterator[tuple[EElement, EElement]]:
    """W の 0 でない元のうち C_i に属さないものを正準順に返す。"""
    line = maxclass.line_space(algebra.line(i))
    for row in W.combinations():
        if not fsubspace.member(line, row):
            a, b = W.point(row)
            yield a, b


def two_step_fields(
    algebra: MaxClassAlgebra,
    L1: GeneratingSpace,
    N: int | None = None,
    base: Subfield | None = None,
) -> TwoStepFieldReport:
    """各次数の 2-step 体 F_i と合成体 K を求める。

    x_i には L_1 の正準基底のうち C_i に属さない最初のものを使う。base を与えると
    T_1 = base·L_1 に対する体 K_i を計算する。

    Raises:
        UnsupportedInTranscendentalModeError: 超越モードの場合。
        GeneratingSpaceTooSmallError: E·L_1 ≠ M_1 の場合。
    """
    tower = algebra.tower
    tower.require_finite('two_step_fields')
    check_generating(L1)
    n = _truncation(algebra, N)
    W = L1.space if base is None else fsubspace.k_closure(base, L1.space)

    degrees: list[TwoStepDegree] = []
    running: list[int] = []
    composite = fieldtower.prime_field(tower)
    for i in range(2, n):
        line = maxclass.line_space(algebra.line(i))
        row = next(row for row in W.rows if not fsubspace.member(line, row))
        a, b = W.point(row)
        item = _degree_field(algebra, W, i, (a, b))
        degrees.append(item)
        composite = fieldtower.compositum(composite, item.field)
        running.append(composite.degree)
        logger.debug(f'F_{i}: 次数 {item.field.degree}, 合成体の次数 {composite.degree}')

    t = composite.degree
    r_gen = 2 + next(k for k, value in enumerate(running) if value == t)
    window = max(t, config.stabilization_window)
    stabilized = len(running) >= window and running[-window] == running[-1]
    if not stabilized:
        logger.warning(f'2-step 体の合成体が末尾 {window} 次数で安定していません')
    return TwoStepFieldReport(
        degrees=tuple(degrees),
        field=composite,
        r_gen=r_gen,
        stabilized=stabilized,
        window=window,
        running=tuple(running),
    )


def k_chain_check(
    algebra: MaxClassAlgebra, L1: GeneratingSpace, K: Subfield, N: int | None = None
) -> KChainReport:
    """T_1 = K·L_1 と T_i の K-次元を求める。

    Raises:
        NotKInvariantError: T_i が K-不変でない場合（実装の不具合を示す）。
    """
    n = _truncation(algebra, N)
    t1 = fsubspace.k_closure(K, L1.space)
    current = maxclass.bracket_span(algebra, t1, 1, t1)
    dims = [fsubspace.dim_over(K, current)]
    for i in range(2, n):
        current = maxclass.bracket_span(algebra, current, i, t1)
        dims.append(fsubspace.dim_over(K, current))
    return KChainReport(k_degree=K.degree, t1_dim=fsubspace.dim_over(K, t1), dims=tuple(dims))


def ideally_constrained_structure(lchain: LChain, fields: TwoStepFieldReport) -> bool:
    """i ≥ 3 で dim_F L_i = t、かつすべての F_i が K に一致するかを返す。"""
    dims_ok = all(space.rank == fields.t for space in lchain.spaces[1:])
    fields_ok = all(item.field.degree == fields.t for item in fields.degrees)
    return dims_ok and fields_ok


# ---------------------------------------------------------------------------
# 被覆次数と二分法
# ---------------------------------------------------------------------------


def _ambient_k(degree: int) -> int:
    return 2 if degree == 1 else 1


def covering_degree(
    algebra: MaxClassAlgebra, lchain: LChain, z: HomElement, r_max: int
) -> int:
    """[z, L_1, ..., L_1]（k 回）が L_{i+k} に一致する最小の k ≥ 1 を返す。

    Raises:
        ZeroElementError: z = 0 の場合。
        TruncationExceededError: i + r_max > N の場合。
        CoveringNotReachedError: r_max 回以内に一致しない場合。
    """
    if z.is_zero:
        raise ZeroElementError()
    i = z.degree
    if i + r_max > lchain.N:
        raise TruncationExceededError(i, r_max, lchain.N)
    current = fsubspace.span(algebra.tower, _ambient_k(i), [z.coords])
    for k in range(1, r_max + 1):
        current = maxclass.bracket_span(algebra, current, i + k - 1, lchain.generator)
        if current.rows == lchain.space(i + k).rows:
            return k
    raise CoveringNotReachedError(r_max)


def _elements(
    space: FSubspace, policy: EnumerationPolicy, rng: np.random.Generator
) -> Iterator[IntArray]:
    if policy.mode is EnumerationMode.FULL:
        yield from space.combinations()
        return
    p = space.tower.p
    basis = space.matrix()
    for _ in range(policy.sample_size):
        coeffs = rng.integers(0, p, size=space.rank)
        if coeffs.any():
            yield (coeffs @ basis) % p


def _policy(lchain: LChain, degrees: Sequence[int], seed: int) -> EnumerationPolicy:
    p = lchain.generator.tower.p
    limit = config.full_enumeration_limit
    sampled = tuple(i for i in degrees if p ** lchain.space(i).rank > limit)
    mode = EnumerationMode.SAMPLED if sampled else EnumerationMode.FULL
    if sampled:
        logger.warning(f'元の数が多いため次数 {list(sampled)} でサンプリングします')
    return EnumerationPolicy(
        mode=mode,
        limit=limit,
        sample_size=config.sample_size,
        seed=seed,
        sampled_degrees=sampled,
    )


def _max_covering(
    algebra: MaxClassAlgebra,
    lchain: LChain,
    degree: int,
    r_max: int,
    policy: EnumerationPolicy,
    rng: np.random.Generator,
) -> int:
    space = lchain.space(degree)
    mode = EnumerationMode.SAMPLED if degree in policy.sampled_degrees else EnumerationMode.FULL
    local = policy.model_copy(update={'mode': mode})
    best = 0
    for row in _elements(space, local, rng):
        z = maxclass.to_hom(space, row, degree)
        best = max(best, covering_degree(algebra, lchain, z, r_max))
    return best


def _not_just_infinite(
    algebra: MaxClassAlgebra, lchain: LChain, K: Subfield, k_dimension: int
) -> DichotomyResult:
    for i in range(2, lchain.N + 1):
        space = lchain.space(i)
        if not fsubspace.is_k_space(K, space) or fsubspace.dim_over(K, space) < 2:
            continue
        X = fsubspace.k_closure(K, fsubspace.span_rows(algebra.tower, 1, [space.rows[0]]))
        dims = ideal_trace(algebra, lchain, X, i)
        logger.info(f'判定: NotJustInfinite（次数 {i} の K-部分空間、イデアルの次元 {dims[0]}）')
        return NotJustInfiniteResult(
            k_dimension=k_dimension, witness_degree=i, witness_space=X, ideal_dims=dims
        )
    return InconclusiveResult(reason='切断の範囲に K-不変で K-次元 2 以上の L_i がありません')


def classify(
    algebra: MaxClassAlgebra,
    L1: GeneratingSpace,
    N: int | None = None,
    r_max: int | None = None,
    seed: int | None = None,
    fields: TwoStepFieldReport | None = None,
    lchain: LChain | None = None,
) -> DichotomyResult:
    """dim_K K·L_1 によって二分法の判定を行う。

    2 なら Constrained として、L_1 と 2 ≤ i ≤ N − r_bound の L_i の各元の被覆次数の
    最大値 r_empirical を求める。2 を超えるなら NotJustInfinite として、K-不変な L_i の
    真部分 K-空間が生成するイデアルの次元を証拠として返す。

    Args:
        algebra: 検証済みの代数。
        L1: 生成部分空間。
        N: 切断次数。
        r_max: 被覆次数の探索上限。省略時は N − i。
        seed: サンプリングのシード。
        fields: 計算済みの 2-step 体（省略時は計算する）。
        lchain: 計算済みの列（省略時は計算する）。

    Returns:
        判定結果。K が安定していない場合や切断内で判定できない場合は Inconclusive。
    """
    n = _truncation(algebra, N)
    lchain = lchain if lchain is not None else chain(algebra, L1, n)
    fields = fields if fields is not None else two_step_fields(algebra, L1, n)
    if not fields.stabilized:
        return InconclusiveResult(reason=f'2-step 体が末尾 {fields.window} 次数で安定していません')

    K = fields.field
    k_dimension = fsubspace.dim_over(K, fsubspace.k_closure(K, L1.space))
    if k_dimension > 2:
        return _not_just_infinite(algebra, lchain, K, k_dimension)

    r_bound = (fields.t - 1) * fields.r_gen + 1
    last = n - r_bound
    degrees = [1, *range(2, last + 1)]
    policy = _policy(lchain, degrees, config.DEFAULT_SEED if seed is None else seed)
    rng = np.random.default_rng(policy.seed)
    covering: dict[int, int] = {}
    try:
        for i in degrees:
            limit = n - i if r_max is None else min(r_max, n - i)
            covering[i] = _max_covering(algebra, lchain, i, limit, policy, rng)
    except CoveringNotReachedError as e:
        return InconclusiveResult(reason=f'次数 {i} で被覆に到達しませんでした: {e}')

    r_empirical = max(covering.values())
    logger.info(f'判定: Constrained（r_empirical={r_empirical}, r_bound={r_bound}）')
    return ConstrainedResult(
        r_empirical=r_empirical,
        r_bound=r_bound,
        t=fields.t,
        r_gen=fields.r_gen,
        verified_window=(2, n),
        policy=policy,
        covering=covering,
    )


def expanding_check(
    algebra: MaxClassAlgebra,
    L1: GeneratingSpace,
    X0: FSubspace,
    degree: int,
    N: int | None = None,
    fields: TwoStepFieldReport | None = None,
) -> ExpandingTrace:
    """X_j = [X_{j−1}, L_1] を追跡し、初めて K-空間になる j と K·X_j の K-次元を記録する。

    Raises:
        ZeroElementError: X_0 = 0 の場合。
        TruncationExceededError: degree + (t−1)·r_gen > N の場合。
    """
    n = _truncation(algebra, N)
    fields = fields if fields is not None else two_step_fields(algebra, L1, n)
    K = fields.field
    bound = (fields.t - 1) * fields.r_gen
    if X0.is_zero:
        raise ZeroElementError()
    if degree + bound > n:
        raise TruncationExceededError(degree, bound, n)

    current = X0
    j_star: int | None = None
    k_dims: list[int] = []
    for j in range(n - degree + 1):
        if j:
            current = maxclass.bracket_span(algebra, current, degree + j - 1, L1.space)
        closure = fsubspace.k_closure(K, current)
        k_dims.append(fsubspace.dim_over(K, closure))
        if j_star is None and closure.rows == current.rows:
            j_star = j
    return ExpandingTrace(start_degree=degree, bound=bound, j_star=j_star, k_dims=tuple(k_dims))


# ---------------------------------------------------------------------------
# 出現回数からの r の予測
# ---------------------------------------------------------------------------


def m_values(occurrences: Sequence[bool], d: int) -> list[int]:
    """各 i について m_{i,k} = d−1 となる最小の k を返す。

    occurrences[0] が次数 2 に対応する。切断内で決まらない i 以降は含めない。
    """
    values = []
    for start in range(len(occurrences)):
        count = 0
        found = None
        for k, hit in enumerate(occurrences[start:], start=1):
            count += hit
            if count == d - 1:
                found = k
                break
        if found is None:
            break
        values.append(found)
    return values


def r_from_m_values(values: Sequence[int]) -> int:
    """m_2 が最大なら m_2 + 1、そうでなければ max{m_i} を返す。"""
    top = max(values)
    return values[0] + 1 if values[0] == top else top


def predict_r_from_pattern(occurrences: Sequence[bool], d: int) -> int:
    """出現パターンから r を予測する。"""
    return r_from_m_values(m_values(occurrences, d))


def _has_generating_shape(algebra: MaxClassAlgebra, L1: GeneratingSpace) -> bool:
    tower = algebra.tower
    one, zero, alpha = tower.one(), tower.zero(), tower.alpha()
    shape = fsubspace.span(tower, 2, [(one, zero), (alpha, zero), (zero, one)])
    return fsubspace.equal(shape, L1.space)


def predicted_r(algebra: MaxClassAlgebra, L1: GeneratingSpace) -> ConstituentStats:
    """中心化直線が Ey と Ex だけで L_1 = F{x, αx, y} の場合に r を予測する。"""
    tower = algebra.tower
    d = tower.d
    applicable = (
        tower.is_finite
        and d >= 2
        and all(line.is_y_line or line.is_x_line for line in algebra.lines)
        and _has_generating_shape(algebra, L1)
    )
    y_line = CentraliserLine.y_line(tower)
    if not applicable:
        return ConstituentStats(applicable=False, d=d)
    occurrences = [line.is_y_line for line in algebra.lines]
    values = m_values(occurrences, d)
    if not values:
        return ConstituentStats(applicable=False, line=y_line.label, d=d)
    return ConstituentStats(
        applicable=True,
        line=y_line.label,
        d=d,
        m_values=tuple(values),
        predicted_r=r_from_m_values(values),
    )


# ---------------------------------------------------------------------------
# 参照値
# ---------------------------------------------------------------------------


def polynomial_orbit(z: HomElement, t: int) -> FSubspace:
    """{p(α)·z : deg p ≤ t} の F-線形包を返す。"""
    tower = z.coords[0].tower
    points = [tuple(tower.alpha_power(j) * c for c in z.coords) for j in range(t + 1)]
    return fsubspace.span(tower, len(z.coords), points)


def free_metabelian_dims(n: int) -> int:
    """2元生成の自由メタアーベル・リー代数の次数 n の次元を返す。

    基底 [g_{i1}, g_{i2}, ..., g_{in}]（i1 > i2 ≤ i3 ≤ ... ≤ in）を列挙して数える。

    Raises:
        DegreeTooSmallError: n < 2 の場合。
    """
    if n < 2:
        raise DegreeTooSmallError(n)
    count = 0
    for word in product((1, 2), repeat=n):
        if word[0] > word[1] and all(a <= b for a, b in zip(word[1:], word[2:], strict=False)):
            count += 1
    return count
