import json

import pytest

from spechtkit.matroid import LinearMatroid

# reference 3x6 integer matrix used across matroid/chow tests
X_ROWS = [
    [1, 0, 0, 1, 1, 1],
    [0, 1, 0, 2, 3, 4],
    [0, 0, 1, 0, 0, 1],
]
X_COLUMNS = tuple(tuple(row[j] for row in X_ROWS) for j in range(6))


@pytest.fixture
def x_matroid():
    return LinearMatroid(tuple(range(6)), X_COLUMNS)


@pytest.fixture
def x_matrix_file(tmp_path):
    path = tmp_path / "x.json"
    path.write_text(
        json.dumps({"entries": X_ROWS, "col_labels": list(range(6))})
    )
    return str(path)
