from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Mapping, Optional, Sequence, Union

import numpy as np
import pandas as pd

from driftpool.services.exceptions import ColumnNotFound, DataFileNotFound, DataSourceError, ValueParseError

FLOAT_FORMAT = "%.17g"


@dataclass(frozen=True)
class SeriesSource:
    values: np.ndarray
    name: str
    origin: Dict[str, str] = field(default_factory=dict)

    @property
    def length(self) -> int:
        return int(self.values.size)


def _resolve_column(frame: pd.DataFrame, column: Union[str, int]):
    if isinstance(column, str) and column in frame.columns:
        return column
    if isinstance(column, int) or (isinstance(column, str) and column.isdigit()):
        position = int(column)
        if 0 <= position < len(frame.columns):
            return frame.columns[position]
    available = ", ".join(str(name) for name in frame.columns)
    raise ColumnNotFound(f"column `{column}` not found; available columns: {available}")


def load_csv(path: Union[str, Path], column: Union[str, int], has_header: bool = True) -> SeriesSource:
    """read one column of a comma-separated file as a real series, in file order.

    rows are numbered from 1 for the first data row; any cell that is not a
    finite real number is an error, nothing is skipped.
    """
    path = Path(path)
    if not path.is_file():
        raise DataFileNotFound(f"file `{path}` does not exist!")

    try:
        frame = pd.read_csv(
            path,
            header=0 if has_header else None,
            dtype=str,
            keep_default_na=False,
            encoding="utf-8",
        )
    except pd.errors.EmptyDataError as empty_error:
        raise DataSourceError(f"file `{path}` is empty") from empty_error
    except (pd.errors.ParserError, UnicodeDecodeError) as parse_error:
        raise DataSourceError(f"file `{path}` is not valid delimited text") from parse_error

    name = _resolve_column(frame, column)
    cells = frame[name].str.strip()
    # to_numeric only locates bad cells, it does not round correctly
    parsed = pd.to_numeric(cells, errors="coerce").to_numpy(dtype=np.float64)

    invalid = np.flatnonzero(~np.isfinite(parsed))
    if invalid.size:
        row = int(invalid[0]) + 1
        raise ValueParseError(f"cannot parse `{cells.iloc[invalid[0]]}` in column `{name}` at row {row}", row=row)

    values = cells.map(float).to_numpy(dtype=np.float64)

    return SeriesSource(
        values=values,
        name=str(name),
        origin={"kind": "file", "path": str(path), "column": str(name)},
    )


def write_csv(
    path: Union[str, Path],
    columns: Mapping[str, Sequence],
    float_format: Optional[str] = FLOAT_FORMAT,
) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    pd.DataFrame(dict(columns)).to_csv(path, index=False, float_format=float_format, encoding="utf-8")
    return path
