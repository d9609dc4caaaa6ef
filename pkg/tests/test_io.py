import json
from fractions import Fraction

import pytest

from abelcorr import Signal, fourier, make_group
from abelcorr.io import (
    parse_group_spec,
    parse_rational,
    parse_support_spec,
    read_signal,
    signal_from_json,
    signal_to_json,
    spectrum_from_json,
    spectrum_to_json,
    tensor_to_json,
    write_signal,
)
from abelcorr.autocorr import autocorr_direct
from conftest import Z6_F


def test_parse_rational():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-2") == Fraction(-2)
    assert parse_rational(" 5 ") == Fraction(5)
    assert parse_rational(7) == Fraction(7)
    for bad in ("x", "1/0", "3.x"):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_signal_json_roundtrip(rng, random_rational_signal):
    for factors in ([6], [2, 4], [2, 2, 3]):
        group = make_group(factors)
        f = random_rational_signal(rng, group)
        again = signal_from_json(signal_to_json(f))
        assert again == f


def test_signal_json_shape():
    f = Signal(make_group([6]), Z6_F)
    data = signal_to_json(f)
    assert data == {
        "group": [6],
        "values": ["13", "11", "-2", "-13", "-11", "2"],
    }


def test_signal_json_validation():
    with pytest.raises(ValueError):
        signal_from_json({"group": [6]})
    with pytest.raises(ValueError):
        signal_from_json({"group": [6], "values": ["1", "2"]})
    with pytest.raises(ValueError):
        signal_from_json({"group": [6], "values": ["1", "2", "3", "4", "5", "zz"]})


def test_signal_file_roundtrip(tmp_path, z6_pair):
    f, _ = z6_pair
    path = tmp_path / "f.json"
    write_signal(path, f)
    assert read_signal(path) == f
    raw = json.loads(path.read_text())
    assert raw["group"] == [6]


def test_spectrum_roundtrip(z6_pair):
    f, _ = z6_pair
    F = fourier(f)
    data = spectrum_to_json(F)
    # zeros are omitted from the serialized table
    assert set(data["values"]) == {"1", "5"}
    again = spectrum_from_json(data)
    assert again == F


def test_spectrum_roundtrip_multifactor(rng, random_rational_signal):
    group = make_group([2, 6])
    f = random_rational_signal(rng, group)
    F = fourier(f)
    assert spectrum_from_json(spectrum_to_json(F)) == F


def test_spectrum_key_validation():
    with pytest.raises(ValueError):
        spectrum_from_json({"group": [2, 6], "values": {"1": {"conductor": 6, "coeffs": ["1", "0"]}}})
    with pytest.raises(ValueError):
        spectrum_from_json({"group": [6]})


def test_tensor_json(z6_pair):
    f, _ = z6_pair
    t2 = autocorr_direct(f, 2)
    data = tensor_to_json(t2)
    assert data["group"] == [6] and data["order"] == 2
    assert len(data["entries"]) == 6
    assert data["entries"][0] == {"shifts": [[0]], "value": "588"}


def test_parse_group_spec():
    assert parse_group_spec("6").factors == (6,)
    assert parse_group_spec("2,6").factors == (2, 6)
    with pytest.raises(ValueError):
        parse_group_spec("6,x")
    with pytest.raises(ValueError):
        parse_group_spec("0")


def test_parse_support_spec_rank_one():
    group = make_group([6])
    assert parse_support_spec("1,5", group) == {(1,), (5,)}
    assert parse_support_spec("1;5", group) == {(1,), (5,)}
    assert parse_support_spec("7", group) == {(1,)}  # reduced mod 6


def test_parse_support_spec_rank_two():
    group = make_group([2, 6])
    assert parse_support_spec("1,1;1,5", group) == {(1, 1), (1, 5)}
    with pytest.raises(ValueError):
        parse_support_spec("1;1,5", group)
    with pytest.raises(ValueError):
        parse_support_spec("", group)
