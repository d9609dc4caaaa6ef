import json

import pytest

from abelcorr import Cyclotomic, Signal, fourier, make_group, root_of_unity
from abelcorr.cli import main
from abelcorr.io import spectrum_to_json, write_signal
from abelcorr.spectral import Spectrum
from conftest import Z6_F, Z6_G


@pytest.fixture
def fixture_files(tmp_path, z6_pair):
    f, g = z6_pair
    fp = tmp_path / "f.json"
    gp = tmp_path / "g.json"
    write_signal(fp, f)
    write_signal(gp, g)
    return str(fp), str(gp)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute(capsys, fixture_files):
    fp, _ = fixture_files
    code, out, _ = run(capsys, "compute", fp, "--order", "2")
    assert code == 0
    data = json.loads(out)
    assert data["zero_shift_value"] == "588"
    assert data["order"] == 2
    assert data["backend"] in ("compiled", "pure")
    assert len(data["entries"]) == 6


def test_compute_approx(capsys, fixture_files):
    fp, _ = fixture_files
    code, out, _ = run(capsys, "compute", fp, "--order", "2", "--approx")
    data = json.loads(out)
    assert code == 0
    assert data["zero_shift_value_approx"] == 588.0
    assert data["entries"][0]["value_approx"] == 588.0


def test_compute_high_order_skips_entries(capsys, fixture_files):
    fp, _ = fixture_files
    code, out, _ = run(capsys, "compute", fp, "--order", "4")
    data = json.loads(out)
    assert code == 0
    assert "entries" not in data
    assert data["entry_count"] == 216


def test_compare_distinguished(capsys, fixture_files):
    fp, gp = fixture_files
    code, out, _ = run(capsys, "compare", fp, gp, "--max-order", "6")
    assert code == 1
    data = json.loads(out)
    assert data["first_difference_order"] == 6
    assert data["witness"] == [[1]] * 6


def test_compare_shared_orders(capsys, fixture_files):
    fp, gp = fixture_files
    code, out, _ = run(capsys, "compare", fp, gp, "--max-order", "5")
    assert code == 3
    assert json.loads(out)["first_difference_order"] is None


def test_compare_translates(capsys, tmp_path, z6_pair):
    f, _ = z6_pair
    fp = tmp_path / "f.json"
    sp = tmp_path / "s.json"
    write_signal(fp, f)
    write_signal(sp, f.shift((3,)))
    code, out, _ = run(capsys, "compare", str(fp), str(sp))
    assert code == 0
    assert json.loads(out)["translate_offset"] is not None


def test_classify_positive(capsys, fixture_files):
    fp, gp = fixture_files
    code, out, _ = run(capsys, "classify", fp, gp, "--approx")
    assert code == 0
    data = json.loads(out)
    assert data["is_homometric_pair"] is True
    re, im = data["witnesses"]["f_primary_approx"]
    assert abs(re - 39.0) < 1e-9
    assert abs(im + 9 * 3**0.5) < 1e-9


def test_classify_negative(capsys, fixture_files):
    fp, _ = fixture_files
    code, out, _ = run(capsys, "classify", fp, fp)
    assert code == 1
    assert json.loads(out)["conditions"]["sixth_powers_differ"] is False


def test_generate(capsys):
    code, out, _ = run(capsys, "generate", "--r", "7")
    assert code == 0
    data = json.loads(out)
    assert len(data) == 3
    assert data[1]["f"] == [str(v) for v in Z6_F]
    assert data[1]["g"] == [str(v) for v in Z6_G]


def test_generate_modulus_30(capsys):
    code, out, _ = run(capsys, "generate", "--r", "7", "--modulus", "30")
    assert code == 0
    data = json.loads(out)
    assert len(data) == 3
    assert all(item["group"] == [30] for item in data)
    assert all(item["coverage"] == "family" for item in data)


def test_generate_error_exit(capsys):
    code, out, err = run(capsys, "generate", "--r", "2")
    assert code == 2
    assert "error:" in err


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "--group", "6", "--support", "1,5")
    assert code == 0
    data = json.loads(out)
    assert data["ak"] == {"v": 3, "bound": 9}
    assert data["index2"] == {"v": 2, "bound": 6}
    assert data["basis_bound"] == 9
    assert data["cited_gm_bound"] == 6


def test_bounds_rank_two(capsys):
    code, out, _ = run(capsys, "bounds", "--group", "3,6", "--support", "1,0;0,1")
    assert code == 0
    assert json.loads(out)["basis_bound"] == 15


def test_galois_pass(capsys, fixture_files):
    fp, _ = fixture_files
    code, out, _ = run(capsys, "galois", fp)
    assert code == 0
    data = json.loads(out)
    assert data["passed"] is True
    assert data["violation"] is None


def test_galois_fail_with_witness(capsys, tmp_path):
    group = make_group([6])
    vals = [Cyclotomic.rational(0, 6) for _ in range(6)]
    vals[1] = root_of_unity(6)
    blob = spectrum_to_json(Spectrum(group, vals))
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(blob))
    code, out, _ = run(capsys, "galois", str(path), "--approx")
    assert code == 1
    data = json.loads(out)
    assert data["passed"] is False
    assert data["violation"] == {"character": [1], "unit": 5}
    witness = data["non_rational_witness"]
    assert witness["element"] == [0]
    assert "value_approx" in witness


def test_galois_accepts_spectrum_of_signal(capsys, tmp_path, z6_pair):
    f, _ = z6_pair
    blob = spectrum_to_json(fourier(f))
    path = tmp_path / "F.json"
    path.write_text(json.dumps(blob))
    code, out, _ = run(capsys, "galois", str(path))
    assert code == 0


def test_units(capsys):
    code, out, _ = run(capsys, "units", "--modulus", "12", "--target", "3")
    assert code == 0
    assert json.loads(out) == {"modulus": 12, "target": 3, "units": [1, 1, 1]}


def test_units_error(capsys):
    code, _, err = run(capsys, "units", "--modulus", "1", "--target", "0")
    assert code == 2
    assert "error:" in err


def test_search(capsys):
    code, out, _ = run(
        capsys, "search", "--group", "6", "--bound", "1", "--max-order", "6"
    )
    assert code == 0
    data = json.loads(out)
    assert data["pair_count"] == 0
    assert data["pairs"] == []


def test_search_cap_error(capsys):
    code, _, err = run(
        capsys, "search", "--group", "12", "--bound", "3", "--max-order", "4"
    )
    assert code == 2
    assert "cap" in err


def test_missing_file(capsys):
    code, _, err = run(capsys, "compute", "/nonexistent.json", "--order", "2")
    assert code == 2
    assert "error:" in err


def test_tensor_cap_error_message(capsys, tmp_path):
    group = make_group([12])
    write_signal(tmp_path / "big.json", Signal(group, list(range(12))))
    code, _, err = run(
        capsys, "compute", str(tmp_path / "big.json"), "--order", "9"
    )
    assert code == 2
    assert "equal_through_order" in err
