import numpy as np
import pytest

from hnsim import io as hio


def test_long_roundtrip_bitstable(tmp_path):
    rows = [(0, 0.1, "nj", 0, 1 / 3), (0, 0.1, "nj", 1, np.pi), (0, 0.2, "nk", 0, 1e-17)]
    path = tmp_path / "x.csv"
    hio.write_long_csv(path, rows)
    back = hio.read_long_csv(path)
    for (s, t, k, i, v), (s2, t2, k2, i2, v2) in zip(rows, back):
        assert (s, k, i) == (s2, k2, i2)
        assert t == t2 and v == v2  # exact doubles via 17 significant digits


def test_average_singleton_and_pair(tmp_path):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    hio.write_long_csv(a, [(0, 1.0, "nj", 0, 2.0), (0, 1.0, "nj", 1, 4.0)])
    hio.write_long_csv(b, [(1, 1.0, "nj", 0, 4.0), (1, 1.0, "nj", 1, 8.0)])
    single = hio.average_ensemble([a])
    assert single[0][3] == 2.0 and single[0][4] == 0.0 and single[0][5] == 1
    both = hio.average_ensemble([a, b])
    assert both[0][3] == 3.0 and both[1][3] == 6.0
    # stderr = sample std / sqrt(n)
    assert both[0][4] == pytest.approx(np.std([2.0, 4.0], ddof=1) / np.sqrt(2))


def test_schema_mismatch_rejected(tmp_path):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    hio.write_long_csv(a, [(0, 1.0, "nj", 0, 2.0)])
    hio.write_long_csv(b, [(1, 2.0, "nj", 0, 4.0)])  # different time cell
    with pytest.raises(ValueError):
        hio.average_ensemble([a, b])


def test_averaged_roundtrip(tmp_path):
    rows = [(0.5, "sent", 4, 1.25, 0.01, 20)]
    path = tmp_path / "avg.csv"
    hio.write_averaged_csv(path, rows)
    assert hio.read_averaged_csv(path) == rows


def test_header_validation(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("a,b,c\n1,2,3\n")
    with pytest.raises(ValueError):
        hio.read_long_csv(path)
    with pytest.raises(ValueError):
        hio.read_averaged_csv(path)
