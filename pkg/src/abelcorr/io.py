"""JSON serialization for signals, spectra, tensors, and CLI argument parsing.

File formats (all UTF-8 JSON):

  Signal:   {"group": [6], "values": ["13", "11", "-2", "-13", "-11", "2"]}
  Spectrum: {"group": [6], "values": {"1": {"conductor": 6, "coeffs": [...]}}}

Signal values are exact rational strings (or bare integers) listed in
row-major element order with the last coordinate moving fastest.  Spectrum
keys are comma-joined character coordinates; characters absent from the map
are taken to be zero.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from abelcorr.cyclotomic import Cyclotomic
from abelcorr.groups import Coords, Group
from abelcorr.spectral import Signal, Spectrum


def parse_rational(text: str | int) -> Fraction:
    """Parse "p/q" or integer notation into an exact rational."""
    if isinstance(text, int):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def format_rational(value: Fraction) -> str:
    return str(value)


# -- signals --------------------------------------------------------------------


def signal_to_json(f: Signal) -> dict:
    return {
        "group": list(f.group.factors),
        "values": [format_rational(v) for v in f.values],
    }


def signal_from_json(obj: dict) -> Signal:
    if not isinstance(obj, dict) or "group" not in obj or "values" not in obj:
        raise ValueError('a signal file needs "group" and "values" entries')
    group = Group(list(obj["group"]))
    values = [parse_rational(v) for v in obj["values"]]
    if len(values) != group.order:
        raise ValueError(
            f"expected {group.order} values for group {group.factors}, "
            f"got {len(values)}"
        )
    return Signal(group, values)


def read_signal(path: str | Path) -> Signal:
    with open(path, encoding="utf-8") as handle:
        return signal_from_json(json.load(handle))


def write_signal(path: str | Path, f: Signal) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(signal_to_json(f), handle, indent=2, sort_keys=True)
        handle.write("\n")


# -- spectra --------------------------------------------------------------------


def _coords_key(coords: Coords) -> str:
    return ",".join(str(c) for c in coords)


def _parse_coords(key: str, rank: int) -> Coords:
    parts = tuple(int(p) for p in key.split(","))
    if len(parts) != rank:
        raise ValueError(f"character {key!r} has {len(parts)} coordinates, expected {rank}")
    return parts


def spectrum_to_json(F: Spectrum) -> dict:
    return {
        "group": list(F.group.factors),
        "values": {
            _coords_key(chi): value.to_json()
            for chi, value in F.items()
            if not value.is_zero
        },
    }


def spectrum_from_json(obj: dict) -> Spectrum:
    if not isinstance(obj, dict) or "group" not in obj or "values" not in obj:
        raise ValueError('a spectrum file needs "group" and "values" entries')
    group = Group(list(obj["group"]))
    rank = len(group.factors)
    conductor = group.exponent
    table = {
        group.reduce(_parse_coords(key, rank)): Cyclotomic.from_json(val)
        for key, val in obj["values"].items()
    }
    zero = Cyclotomic.rational(0, conductor)
    values = [table.get(chi, zero) for chi in group.characters()]
    return Spectrum(group, values)


# -- tensors --------------------------------------------------------------------


def tensor_to_json(tensor) -> dict:
    """Full entry listing of an autocorrelation tensor (intended for order <= 3;
    larger orders produce unwieldy files)."""
    return {
        "group": list(tensor.group.factors),
        "order": tensor.order,
        "entries": [
            {
                "shifts": [list(t) for t in shifts],
                "value": format_rational(value),
            }
            for shifts, value in tensor.items()
        ],
    }


# -- CLI helpers ----------------------------------------------------------------


def parse_group_spec(text: str) -> Group:
    """Parse "6" or "2,6" into a group."""
    try:
        moduli = [int(p) for p in text.split(",")]
    except ValueError as exc:
        raise ValueError(f"not a group spec: {text!r}") from exc
    return Group(moduli)


def parse_support_spec(text: str, group: Group) -> set[Coords]:
    """Parse a support set like "1,1;1,5" (semicolon-separated characters).

    For rank-1 groups a bare comma list such as "1,5" is accepted as a list
    of single-coordinate characters.
    """
    rank = len(group.factors)
    text = text.strip()
    if not text:
        raise ValueError("support must be nonempty")
    if ";" in text or rank > 1:
        tokens = [t for t in text.split(";") if t.strip()]
    else:
        tokens = [t for t in text.split(",") if t.strip()]
    support = set()
    for token in tokens:
        coords = _parse_coords(token.strip(), rank)
        support.add(group.reduce(coords))
    return support


def dumps(obj: dict | list) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)
