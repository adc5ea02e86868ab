"""テストで共有するヘルパー関数。"""

import json
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from app.models.algebra import CentraliserLine
from app.models.analysis import GeneratingSpace
from app.models.field_tower import FieldTower
from app.services import fsubspace


def lines_from_labels(tower: FieldTower, labels: str) -> list[CentraliserLine]:
    """'AAB' のような文字列から素体座標の直線列を作るヘルパー関数。

    A = [0:1]、B = [1:0]、C = [1:1]。
    """
    points = {'A': ((0,), (1,)), 'B': ((1,), (0,)), 'C': ((1,), (1,))}
    return [
        CentraliserLine.through(tower.element(points[c][0]), tower.element(points[c][1]))
        for c in labels
    ]


def generating_space(
    tower: FieldTower, points: Sequence[tuple[Sequence[int], Sequence[int]]]
) -> GeneratingSpace:
    """係数列の組の列から L_1 を作るヘルパー関数。"""
    elements = [(tower.element(a), tower.element(b)) for a, b in points]
    return GeneratingSpace(space=fsubspace.span(tower, 2, elements))


def write_json(path: Path, data: Any) -> Path:
    """JSON ファイルを書き出すヘルパー関数。"""
    path.write_text(json.dumps(data), encoding='utf-8')
    return path
