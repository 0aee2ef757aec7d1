"""The enumeration of c3-lsp-operations against the shipped table patches."""
import pytest

from mapsym.catalog import c3_rows, dual_row
from mapsym.library import TABLE_ROWS, patch
from mapsym.operations import is_c3, patches_isomorphic

ROW_SIZES = {1: [2], 2: [2], 3: [4], 4: [2, 4], 5: [4], 6: [2, 4, 2, 4, 4, 4]}


@pytest.mark.parametrize("k", sorted(ROW_SIZES))
def test_row_sizes(k):
    assert sorted(len(r) for r in c3_rows(k)) == sorted(ROW_SIZES[k])


@pytest.mark.parametrize("k", sorted(ROW_SIZES))
def test_enumeration_matches_shipped_rows(k):
    shipped = [[patch(n) for n in row.members] for row in TABLE_ROWS if row.inflation == k]
    found = c3_rows(k)
    assert len(found) == len(shipped)
    for row in found:
        assert all(is_c3(p) for p in row)
        matches = [s for s in shipped if len(s) == len(row) and all(any(patches_isomorphic(p, q) for q in s) for p in row)]
        assert len(matches) == 1


def test_dual_row_of_truncate():
    row = dual_row(patch("truncate"))
    assert len(row) == 4
    assert any(patches_isomorphic(p, patch("kis")) for p in row)
