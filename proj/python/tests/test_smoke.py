from fractions import Fraction
import json
import pathlib

import pytest

import lorentz_roots as lr

FIXTURES = pathlib.Path(__file__).resolve().parents[2] / "fixtures"
TRIANGLE = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


@pytest.fixture
def triangle():
    return lr.load_lattice(str(FIXTURES / "triangle.json"))


def test_lattice_basics(triangle):
    assert triangle.rank == 3
    assert triangle.signature() == (2, 1)
    assert triangle.norm([0, 1, 1]) == 0
    assert lr.invariants(triangle)["determinant"] == -32
    s = lr.reflection(triangle, [1, 0, 0])
    assert s[0] == [-1, 2, 2]


def test_vinberg_triangle(triangle):
    rep = lr.vinberg(triangle, [1, 1, 1], [2])
    assert rep["terminated"]
    assert sorted(map(tuple, rep["roots"])) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]


def test_weyl_vectors(triangle):
    w = lr.weyl_vector(triangle, TRIANGLE)
    assert w["rho"] == [Fraction(1, 2)] * 3
    assert w["rho_norm"] == Fraction(-3, 2)
    p = lr.weyl_vector(triangle, [[1, 0, 0], [4, 2, 0], [4, 0, 2]])
    assert p["rho"] == [0, Fraction(1, 4), Fraction(1, 4)]
    assert p["kind"] == "parabolic"


def test_denominator(triangle):
    d = lr.denominator(triangle, TRIANGLE, 6)
    assert d["residual_zero"] and d["w_invariant"] and d["anti_invariance"]
    assert d["multiplicities"][(1, 0, 0)] == 1
    assert d["multiplicities"][(0, 1, 1)] == 1
    assert lr.cartan_matrix(triangle, TRIANGLE)[0] == [2, -2, -2]


def test_qseries():
    assert lr.eta_power(-24, 2) == [1, 24, 324]
    assert lr.ramanujan_tau(3) == [1, -24, 252]
    big = lr.eta_power(-24, 60)[-1]
    assert isinstance(big, int) and big > 2**64
    assert lr.cusp_identity("tau2m", [24, 24, 24]) == [24, -252, 1472]
    assert lr.cusp_identity("m2tau", [24, -252, 1472]) == [24, 24, 24]


def test_errors(triangle):
    with pytest.raises(lr.DomainError):
        lr.cartan_matrix(triangle, [[0, 1, 1]])
    with pytest.raises(ValueError):
        lr.Lattice([[1, 1], [1, 1]])


def test_cli_in_process():
    code, out, err = lr.run_cli(["qseries", "--eta-power", "24", "--n", "3"])
    assert code == 0 and err == ""
    assert json.loads(out)["result"] == [1, -24, 252, -1472]
    assert lr.run_cli(["vinberg"])[0] == 2
