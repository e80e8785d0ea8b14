import json

import pytest

from hodgewitt import (
    ProfileFormatError,
    dumps_profile,
    list_entries,
    loads_profile,
    profile_from_dict,
    profile_to_dict,
)


def doc(**overrides):
    base = {
        "name": "E",
        "dim": 1,
        "flags": {"hodge_witt": True, "crystalline_torsion_free": True,
                  "hodge_de_rham_degenerates": True},
        "cohomology": [
            {"degree": 1, "slopes": [{"slope": "1/2", "mult": 2}]},
            {"degree": 0, "slopes": [{"slope": "0", "mult": 1}]},
            {"degree": 2, "slopes": [{"slope": "1", "mult": 1}]},
        ],
        "hodge": [{"degree": 0, "numbers": [1]}, {"degree": 1, "numbers": [1, 1]},
                  {"degree": 2, "numbers": [0, 1, 0]}],
    }
    base.update(overrides)
    return base


def test_round_trip_catalog():
    for entry in list_entries():
        text = dumps_profile(entry.profile)
        assert loads_profile(text) == entry.profile
        assert dumps_profile(loads_profile(text)) == text


def test_degrees_in_any_order():
    p = profile_from_dict(doc())
    assert list(p.slopes) == [0, 1, 2]
    assert p.dominoes is None


def test_domino_presence_distinguishes_unknown_from_zero():
    assert profile_from_dict(doc(dominoes=[])).dominoes.is_zero()
    p = profile_from_dict(doc(dominoes=[{"i": 0, "j": 1, "T": 2}]))
    assert p.dominoes[0, 1] == 2


@pytest.mark.parametrize("mutate, pointer", [
    (lambda d: d.pop("dim"), ""),
    (lambda d: d.update(extra=1), ""),
    (lambda d: d["cohomology"][0]["slopes"][0].update(slope="0.5"), "/cohomology/0/slopes/0/slope"),
    (lambda d: d["cohomology"][0]["slopes"][0].update(slope="1/0"), "/cohomology/0/slopes/0/slope"),
    (lambda d: d["cohomology"][2].update(degree=1), "/cohomology/2/degree"),
    (lambda d: d["hodge"][1].update(numbers=[1]), "/hodge/1/numbers"),
    (lambda d: d["flags"].update(hodge_witt="yes"), "/flags/hodge_witt"),
    (lambda d: d["flags"].update(bonus=True), "/flags"),
    (lambda d: d.update(dominoes=[{"i": 0, "j": 1, "T": 1}, {"i": 0, "j": 1, "T": 2}]), "/dominoes/1"),
])
def test_errors_carry_pointer(mutate, pointer):
    d = doc()
    mutate(d)
    with pytest.raises(ProfileFormatError) as info:
        profile_from_dict(d)
    assert info.value.pointer == pointer


def test_malformed_json():
    with pytest.raises(ProfileFormatError, match="malformed JSON"):
        loads_profile("{not json")


def test_stable_key_order():
    d = profile_to_dict(profile_from_dict(doc()))
    assert list(d) == ["name", "dim", "flags", "cohomology", "hodge"]
    assert json.dumps(d) == json.dumps(profile_to_dict(profile_from_dict(doc())))
