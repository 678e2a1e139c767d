"""Pinned reference values of the results table at T_Bell in {2, 5, 10} with the AV_2 and AV_10 baselines."""

from typing import Dict, List, Optional, Tuple

from loguru import logger

from ..errors import FixtureMismatchError
from .table import ResultsTable

FIXTURE_T_POINTS = (2, 5, 10)

_COLUMNS = ("AV_2", "t=2", "t=5", "AV_10", "t=10")

# row id -> values in _COLUMNS order; None marks a cell the reference leaves empty
_ROWS: Dict[str, Tuple[Optional[int], ...]] = {
    "core.gidney_adder": (19, 294, 357, 94, 462),
    "core.qcla_adder": (None, 60, 90, None, 140),
    "core.gridsynth_rotation": (32, 201, 201, 156, 201),
    "core.dicke_unitary": (None, 341_792, 345_042, None, 350_458),
    "qaoa.fanout": (None, 158, 395, None, 790),
    "qaoa.clause_evaluation": (396_294, 38_896, 41_536, 1_936_410, 47_696),
    "qaoa.mixer": (2_048, 201, 201, 9_984, 201),
    "qaoa.total": (398_342, 39_255, 42_132, 1_946_394, 48_687),
    "dqi.setup_unary": (1_633, 1_737, 2_601, 7_962, 4_041),
    "dqi.dicke": (873_077, 341_792, 345_042, 4_256_369, 350_458),
    "dqi.constraint_encoding": (208, 800, 2_000, 1_042, 4_000),
    "dqi.syndrome_decoding": (208, 5_100, 12_750, 1_042, 25_500),
    "dqi.total": (875_126, 349_429, 362_393, 4_266_415, 383_999),
}

EXPECTED_CELLS: Dict[Tuple[str, str], int] = {
    (row_id, column): value
    for row_id, values in _ROWS.items()
    for column, value in zip(_COLUMNS, values)
    if value is not None
}


def fixture_mismatches(table: ResultsTable) -> List[Dict[str, object]]:
    mismatches: List[Dict[str, object]] = []
    for (row_id, column), expected in EXPECTED_CELLS.items():
        try:
            actual = table.cell(row_id, column)
        except KeyError:
            actual = None
        if actual != expected:
            mismatches.append({"row": row_id, "column": column, "expected": expected, "actual": actual})
    return mismatches


def check_fixture(table: ResultsTable) -> int:
    """
    Compare every pinned cell; returns the number of cells checked.

    Raises:
        FixtureMismatchError: listing every deviating cell.
    """
    mismatches = fixture_mismatches(table)
    if mismatches:
        for m in mismatches:
            logger.warning(f"{m['row']} [{m['column']}]: expected {m['expected']}, got {m['actual']}")
        raise FixtureMismatchError(mismatches)
    return len(EXPECTED_CELLS)
