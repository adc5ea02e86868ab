"""コマンドラインのフロントエンドのテスト。"""

import json
from pathlib import Path
from typing import Any

import pytest

from app.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, run
from tests.helpers import write_json

GOLDEN_DIR = Path(__file__).parent / 'fixtures' / 'golden'

GF2 = {'p': 2, 'minpoly': [0, 1]}
A, B = [[0], [1]], [[1], [0]]


class TestSearchCommand:
    """search サブコマンドのテストクラス。"""

    def test_GF2の深さ8の探索結果はゴールデンファイルと一致する(
        self, capsys: pytest.CaptureFixture[str], snapshot: Any
    ) -> None:
        # Act
        code = run(['--format', 'json', 'search', '--p', '2', '--depth', '8'])

        # Assert
        out = capsys.readouterr().out
        assert code == EXIT_OK
        snapshot.snapshot_dir = GOLDEN_DIR
        snapshot.assert_match(out, 'search_gf2_depth8.json')

    def test_直線の種類を1つに制限するとEyだけの列になる(
        self, capsys: pytest.CaptureFixture[str]
    ) -> None:
        # Act
        code = run(
            ['--format', 'json', 'search', '--p', '2', '--depth', '8', '--max-centralisers', '1']
        )

        # Assert
        assert code == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report['sequences'] == [['[0:1]'] * 6]

    @pytest.mark.parametrize('minpoly', ['0,x', '1,0,1'])
    def test_不正な最小多項式は終了コード2になる(
        self, capsys: pytest.CaptureFixture[str], minpoly: str
    ) -> None:
        # Act
        code = run(['search', '--p', '2', '--minpoly', minpoly, '--depth', '6'])

        # Assert
        assert code == EXIT_USAGE
        assert capsys.readouterr().err.startswith('error: ')

    def test_最小多項式の書式エラーはフィールド名を表示する(
        self, capsys: pytest.CaptureFixture[str]
    ) -> None:
        # Act
        run(['search', '--p', '2', '--minpoly', '0,x', '--depth', '6'])

        # Assert
        assert '(field: minpoly)' in capsys.readouterr().err

    def test_予算を使い切ると終了コード1になる(self, capsys: pytest.CaptureFixture[str]) -> None:
        # Act
        code = run(['search', '--p', '2', '--depth', '8', '--budget', '1'])

        # Assert
        assert code == EXIT_FAILED
        assert 'budget exhausted' in capsys.readouterr().out


class TestReproduceCommand:
    """reproduce サブコマンドのテストクラス。"""

    def test_JSON形式で出力できる(self, capsys: pytest.CaptureFixture[str]) -> None:
        # Act
        code = run(['--format', 'json', 'reproduce', 'ex4.2-d2'])

        # Assert
        assert code == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report['ok'] is True
        assert report['classification']['variant'] == 'Constrained'
        assert report['classification']['r_empirical'] == 2

    @pytest.mark.parametrize(
        ('name', 'variant', 'r_empirical'),
        [
            ('ex4.1', 'NotJustInfinite', None),
            ('ex4.2-d2', 'Constrained', 2),
            ('ex4.2-d3', 'Constrained', 3),
            ('ex4.2-d4', 'Constrained', 4),
            ('cor3.7-trivial', 'Constrained', 1),
        ],
    )
    def test_登録名で実行すると期待どおりに分類される(
        self,
        capsys: pytest.CaptureFixture[str],
        name: str,
        variant: str,
        r_empirical: int | None,
    ) -> None:
        # Act
        code = run(['--format', 'json', 'reproduce', name])

        # Assert
        assert code == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report['name'] == name
        assert report['classification']['variant'] == variant
        assert report['classification'].get('r_empirical') == r_empirical

    def test_超越的な例は次元だけを報告する(self, capsys: pytest.CaptureFixture[str]) -> None:
        # Act
        code = run(['--format', 'json', 'reproduce', 'prob4.3'])

        # Assert
        assert code == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report['classification'] is None
        assert report['dims'] == list(range(1, 13))

    def test_テキスト形式では検査結果を表示する(self, capsys: pytest.CaptureFixture[str]) -> None:
        # Act
        code = run(['reproduce', 'cor3.7-trivial'])

        # Assert
        assert code == EXIT_OK
        out = capsys.readouterr().out
        assert '[PASS] expected_outcome (Cor 3.7)' in out
        assert '[PASS] k_chain_dimension_drop (Prop 3.4)' in out
        assert 'classification: Constrained' in out

    def test_出力先を指定するとファイルに書き出す(
        self, capsys: pytest.CaptureFixture[str], tmp_path: Path
    ) -> None:
        # Arrange
        out = tmp_path / 'reports' / 'nji.json'

        # Act
        code = run(['--format', 'json', '--out', str(out), 'reproduce', 'ex4.1'])

        # Assert
        assert code == EXIT_OK
        assert capsys.readouterr().out == ''
        assert json.loads(out.read_text(encoding='utf-8'))['name'] == 'ex4.1'

    def test_未登録のプリセットは終了コード2になる(self) -> None:
        # Act & Assert
        assert run(['reproduce', 'ex4.2-d9']) == EXIT_USAGE


class TestValidateCommand:
    """validate サブコマンドのテストクラス。"""

    def test_検証を通る代数は終了コード0になる(
        self, capsys: pytest.CaptureFixture[str], tmp_path: Path
    ) -> None:
        # Arrange
        path = write_json(
            tmp_path / 'algebra.json', {'tower': GF2, 'N': 8, 'lines': [A, A, B, A, A, B]}
        )

        # Act
        code = run(['validate', str(path)])

        # Assert
        assert code == EXIT_OK
        assert 'status: validated' in capsys.readouterr().out

    def test_検証に失敗すると終了コード1になる(
        self, capsys: pytest.CaptureFixture[str], tmp_path: Path
    ) -> None:
        # Arrange
        path = write_json(
            tmp_path / 'algebra.json', {'tower': GF2, 'N': 8, 'lines': [A, A, A, A, A, B]}
        )

        # Act
        code = run(['validate', str(path)])

        # Assert
        assert code == EXIT_FAILED
        assert 'status: invalid' in capsys.readouterr().out


class TestUsage:
    """引数エラーのテストクラス。"""

    def test_存在しない解析ジョブは終了コード2になる(self, tmp_path: Path) -> None:
        # Act & Assert
        assert run(['analyze', str(tmp_path / 'missing.json')]) == EXIT_USAGE

    def test_サブコマンドがないと終了コード2になる(self) -> None:
        # Act & Assert
        assert run([]) == EXIT_USAGE

    def test_ヘルプは終了コード0になる(self, capsys: pytest.CaptureFixture[str]) -> None:
        # Act
        code = run(['--help'])

        # Assert
        assert code == EXIT_OK
        assert 'maxclass' in capsys.readouterr().out
