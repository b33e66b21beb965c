"""Smoke tests for the python bindings."""

import json

import pytest

import gorlin


PHI2 = [((2, 2, 0), "1"), ((1, 1, 2), "-1"), ((0, 0, 4), "2")]


def test_build_and_resolve():
    phi = gorlin.build_phi(3, PHI2)
    assert phi.n == 3
    assert not phi.is_generic
    assert str(phi) == "(x^2*y^2)* - (x*y*z^2)* + 2*(z^4)*"

    res = gorlin.build_resolution(phi)
    assert res.delta == "1"
    assert res.mode == "specialized"
    assert len(res.b1) == 7
    assert len(res.b2) == 7 and all(len(row) == 7 for row in res.b2)
    assert res.b1[0] == "x^3"
    assert res.basis_b1[0] == "(y^2)*"
    assert res.basis_b2[0] == "y^2"

    payload = json.loads(res.to_json())
    assert payload["delta"] == "1"
    assert payload["n"] == 3


def test_report_passes():
    rep = gorlin.full_report(gorlin.build_phi(3, PHI2))
    assert rep.ok
    names = [c.name for c in rep.checks]
    assert "complex-b1b2" in names
    assert "pfaffian-span" in names


def test_examples_and_colon():
    assert gorlin.run_examples().ok
    assert gorlin.check_colon_ideal(2).ok


def test_generic_mode():
    res = gorlin.build_resolution(gorlin.generic_phi(2))
    assert res.mode == "generic"
    assert len(res.b2) == 5
    # alternating at the string level
    for i in range(5):
        assert res.b2[i][i] == "0"


def test_json_round_trip():
    phi = gorlin.load_phi_json(
        json.dumps(
            {
                "n": 3,
                "coefficients": [
                    {"exponents": [2, 2, 0], "value": "1"},
                    {"exponents": [1, 1, 2], "value": "-1"},
                    {"exponents": [0, 0, 4], "value": "2"},
                ],
            }
        )
    )
    assert str(phi) == "(x^2*y^2)* - (x*y*z^2)* + 2*(z^4)*"


def test_errors():
    with pytest.raises(gorlin.DegenerateSystemError):
        gorlin.build_resolution(gorlin.build_phi(2, []))
    with pytest.raises(gorlin.InputError):
        gorlin.build_phi(1, [])
    with pytest.raises(gorlin.CapacityError):
        gorlin.build_resolution(gorlin.generic_phi(4))


def test_annihilator_dimension():
    ann = gorlin.annihilator(gorlin.build_phi(3, PHI2))
    assert len(ann) == 7


def test_monomials():
    assert gorlin.monomials("yz", 3) == ["y^3", "y^2*z", "y*z^2", "z^3"]
    assert gorlin.monomials("xyz", 2) == ["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"]
