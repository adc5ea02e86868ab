"""validate / analyze / search / reproduce の各ジョブを実行するサービス。"""

import logging
from pathlib import Path

from app.errors import BudgetExhaustedError, JobInputError
from app.models.algebra import CentraliserLine, MaxClassAlgebra, SearchResult
from app.models.analysis import (
    ConstrainedResult,
    GeneratingSpace,
    InconclusiveResult,
    LChain,
    NotJustInfiniteResult,
    TwoStepFieldReport,
)
from app.models.job import (
    AlgebraSpec,
    AnalysisJob,
    AnalysisReport,
    CheckResult,
    Expectation,
    SearchParams,
    SearchReport,
    ValidateReport,
)
from app.models.subspace import FSubspace
from app.repositories.job_repository import JsonJobRepository
from app.services import analyzer, fieldtower, fsubspace, maxclass, presets

logger = logging.getLogger('maxclass')


class JobService:
    """ジョブの実行を管理するサービス。"""

    def __init__(self, repository: JsonJobRepository | None = None) -> None:
        """サービスを初期化します。

        Args:
            repository: ジョブリポジトリ。指定しない場合は JSON リポジトリを使用。
        """
        self.repository = repository or JsonJobRepository()

    # -----------------------------------------------------------------------
    # validate
    # -----------------------------------------------------------------------

    def build_algebra(self, spec: AlgebraSpec) -> MaxClassAlgebra:
        """入力文書から未検証の代数を構築します。

        Raises:
            JobInputError: 直線の座標が不正な場合。
        """
        tower = spec.tower
        lines = []
        for index, (a, b) in enumerate(spec.lines):
            first, second = tower.element(a), tower.element(b)
            if first.is_zero and second.is_zero:
                raise JobInputError(f'lines.{index}', '(a, b) = (0, 0) は直線を定めません')
            lines.append(CentraliserLine.through(first, second))
        return maxclass.build_from_centralisers(tower, lines, spec.N)

    def validate(self, path: Path) -> ValidateReport:
        """代数の入力文書を読み込んで検証します。"""
        return self.validate_spec(self.repository.load_algebra(path))

    def validate_spec(self, spec: AlgebraSpec) -> ValidateReport:
        """代数を検証してレポートを返します。"""
        algebra = maxclass.validated(self.build_algebra(spec))
        return ValidateReport(
            tower=algebra.tower,
            N=algebra.N,
            lines=tuple(str(line.label) for line in algebra.lines),
            status=str(algebra.status),
            report=algebra.report or maxclass.validate(algebra),
            window=maxclass.check_window(algebra),
        )

    # -----------------------------------------------------------------------
    # analyze / reproduce
    # -----------------------------------------------------------------------

    def analyze(self, path: Path, seed: int | None = None) -> AnalysisReport:
        """解析ジョブの入力文書を読み込んで解析します。"""
        job = self.repository.load_job(path)
        if seed is not None:
            job = job.model_copy(update={'seed': seed})
        return self.analyze_job(job, name=path.stem)

    def reproduce(self, name: str, seed: int | None = None) -> AnalysisReport:
        """プリセットを解析し、期待される結果と照合します。

        Raises:
            UnknownPresetError: 未登録のプリセット名の場合。
        """
        entry = presets.preset(name)
        logger.info(f'プリセットを実行します: {entry.name}（{entry.description}）')
        return self.analyze_job(entry.job(seed), name=entry.name, expectation=entry.expectation)

    def analyze_job(
        self, job: AnalysisJob, name: str = 'job', expectation: Expectation | None = None
    ) -> AnalysisReport:
        """解析ジョブを実行し、名前付きの検査を含むレポートを返します。

        Raises:
            JobInputError: L1 や N が代数と整合しない場合。
        """
        algebra = maxclass.validated(self.build_algebra(job.algebra))
        tower = algebra.tower
        if job.N > algebra.N or job.N < 3:
            raise JobInputError('N', f'3 以上 {algebra.N} 以下を指定してください')
        base = AnalysisReport(name=name, tower=tower, N=job.N, seed=job.seed)
        if not algebra.is_validated:
            check = CheckResult(
                name='algebra_validated',
                anchor='§2',
                passed=False,
                detail='代数が検証を通りません',
            )
            return base.model_copy(update={'checks': (check,)})

        L1 = GeneratingSpace(space=self._generating_space(job))
        lchain = analyzer.chain(algebra, L1, job.N)
        checks = [self._monotone_check(lchain)]
        update: dict[str, object] = {
            'dims': lchain.dims,
            'd_seq': lchain.d_seq,
            'two_dimensional_generator': L1.is_two_dimensional,
        }
        if not tower.is_finite:
            checks.append(self._free_metabelian_check(algebra, lchain))
            return base.model_copy(update={**update, 'checks': tuple(checks)})

        fields = analyzer.two_step_fields(algebra, L1, job.N)
        k_chain = analyzer.k_chain_check(algebra, L1, fields.field, job.N)
        result = analyzer.classify(
            algebra, L1, job.N, r_max=job.r_max, seed=job.seed, fields=fields, lchain=lchain
        )
        predicted = analyzer.predicted_r(algebra, L1)

        checks.append(
            CheckResult(
                name='two_step_field_bound',
                anchor='Lemma 2.7',
                passed=all(item.field.degree >= item.quotient_dim for item in fields.degrees),
                detail='[F_i:F] ≥ dim_F(L_1 / L_1 ∩ C_i)',
            )
        )
        checks.append(
            CheckResult(
                name='k_chain_dimension_drop',
                anchor='Prop 3.4',
                passed=k_chain.holds,
                detail=f'dim_K T_1 = {k_chain.t1_dim}, dim_K T_i = {sorted(set(k_chain.dims))}',
            )
        )
        checks.append(self._consistency_check(result))
        if L1.is_two_dimensional:
            checks.append(
                CheckResult(
                    name='two_dimensional_generator',
                    anchor='§2',
                    passed=isinstance(result, ConstrainedResult),
                    detail='dim_F L_1 = 2 なら Constrained',
                )
            )
        if isinstance(result, ConstrainedResult) and result.r_empirical == 1:
            checks.append(
                CheckResult(
                    name='ideally_constrained_structure',
                    anchor='Cor 3.7',
                    passed=analyzer.ideally_constrained_structure(lchain, fields),
                    detail='i ≥ 3 で dim_F L_i = t、F_i = K',
                )
            )
        expanding = self._expanding_check(algebra, L1, fields, job.N)
        if expanding is not None:
            checks.append(expanding)
        if predicted.applicable and isinstance(result, ConstrainedResult):
            checks.append(
                CheckResult(
                    name='predicted_r_agrees',
                    anchor='Example 4.2',
                    passed=predicted.predicted_r == result.r_empirical,
                    detail=f'predicted={predicted.predicted_r}, observed={result.r_empirical}',
                )
            )
        if expectation is not None:
            checks.append(
                self._expectation_check(expectation, result, k_chain.t1_dim, k_chain.dims)
            )

        report = base.model_copy(
            update={
                **update,
                'field_degrees': tuple(item.field.degree for item in fields.degrees),
                'K_degree': fields.t,
                't': fields.t,
                'r_gen': fields.r_gen,
                'stabilized': fields.stabilized,
                'k_chain': k_chain,
                'classification': result,
                'predicted': predicted,
                'checks': tuple(checks),
            }
        )
        logger.info(f'解析完了: {name}, 分類={result.variant}, 検査通過={report.ok}')
        return report

    def _generating_space(self, job: AnalysisJob) -> FSubspace:
        tower = job.algebra.tower
        width = 2 * tower.d
        for index, row in enumerate(job.L1):
            if len(row) != width:
                raise JobInputError(f'L1.{index}', f'長さ {width} のベクトルを指定してください')
        if not job.L1:
            raise JobInputError('L1', '少なくとも1本のベクトルが必要です')
        return fsubspace.span_rows(tower, 2, job.L1)

    @staticmethod
    def _monotone_check(lchain: LChain) -> CheckResult:
        dims = lchain.dims
        passed = all(a <= b for a, b in zip(dims, dims[1:], strict=False))
        return CheckResult(
            name='chain_dims_monotone',
            anchor='Lemma 3.3',
            passed=passed,
            detail=f'dims={list(dims)}',
        )

    @staticmethod
    def _expanding_check(
        algebra: MaxClassAlgebra, L1: GeneratingSpace, fields: TwoStepFieldReport, N: int
    ) -> CheckResult | None:
        # X_0 = F·e_2。2 + (t−1)·r_gen が切断次数を超える場合は検査しない
        if 2 + (fields.t - 1) * fields.r_gen > N:
            return None
        tower = algebra.tower
        X0 = fsubspace.span(tower, 1, [(tower.one(),)])
        trace = analyzer.expanding_check(algebra, L1, X0, 2, N, fields=fields)
        return CheckResult(
            name='expanding_k_space',
            anchor='Prop 3.5',
            passed=trace.bound_holds and trace.constant_k_dimension,
            detail=(
                f'j*={trace.j_star} ≤ (t−1)·r_gen={trace.bound}, '
                f'dim_K K·X_j={sorted(set(trace.k_dims))}'
            ),
        )

    @staticmethod
    def _free_metabelian_check(algebra: MaxClassAlgebra, lchain: LChain) -> CheckResult:
        expected = [analyzer.free_metabelian_dims(n) for n in range(2, lchain.N + 1)]
        passed = algebra.is_metabelian and list(lchain.dims) == expected
        return CheckResult(
            name='free_metabelian_dims',
            anchor='Problem 4.3',
            passed=passed,
            detail=f'expected={expected}',
        )

    @staticmethod
    def _consistency_check(
        result: ConstrainedResult | NotJustInfiniteResult | InconclusiveResult,
    ) -> CheckResult:
        if isinstance(result, ConstrainedResult):
            passed = result.r_empirical <= result.r_bound
            detail = f'r_empirical={result.r_empirical} ≤ r_bound={result.r_bound}'
        elif isinstance(result, NotJustInfiniteResult):
            passed = set(result.ideal_dims) == {result.witness_space.rank}
            detail = f'ideal_dims={sorted(set(result.ideal_dims))}'
        else:
            passed = True
            detail = result.reason
        return CheckResult(
            name='dichotomy_consistency', anchor='Thm 3.6', passed=passed, detail=detail
        )

    @staticmethod
    def _expectation_check(
        expectation: Expectation,
        result: ConstrainedResult | NotJustInfiniteResult | InconclusiveResult,
        t1_dim: int,
        dims: tuple[int, ...],
    ) -> CheckResult:
        failures = []
        if expectation.variant is not None and result.variant != expectation.variant:
            failures.append(f'variant={result.variant}')
        if expectation.r_empirical is not None and (
            not isinstance(result, ConstrainedResult)
            or result.r_empirical != expectation.r_empirical
        ):
            failures.append('r_empirical')
        if expectation.k_chain is not None and (
            t1_dim != expectation.k_chain[0] or set(dims) != {expectation.k_chain[1]}
        ):
            failures.append(f'k_chain={t1_dim}->{sorted(set(dims))}')
        return CheckResult(
            name='expected_outcome',
            anchor=expectation.anchor,
            passed=not failures,
            detail=', '.join(failures) if failures else 'ok',
        )

    # -----------------------------------------------------------------------
    # search
    # -----------------------------------------------------------------------

    def search(self, params: SearchParams) -> SearchReport:
        """中心化列を探索します。予算を使い切った場合は途中結果を返します。"""
        tower = fieldtower.make_tower(params.p, params.minpoly)
        try:
            result = maxclass.search_sequences(
                tower, params.depth, params.max_centralisers, params.budget
            )
        except BudgetExhaustedError as e:
            result = e.partial
        return self._search_report(result)

    @staticmethod
    def _search_report(result: SearchResult) -> SearchReport:
        return SearchReport(
            tower=result.tower,
            depth=result.depth,
            max_centralisers=result.max_distinct,
            budget_exhausted=result.budget_exhausted,
            sequences=tuple(tuple(labels) for labels in result.labels()),
        )
