import json
import os
import subprocess
from fractions import Fraction

import pytest

import trackcut as tc

SQUARE = "g 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\nst 1 3\n"


def square():
    return tc.Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


def test_graph_roundtrip():
    g = tc.Graph(3, [(2, 0), (0, 1)], [1, 2, 3])
    assert g.n == 3
    assert g.edges == [(0, 1), (0, 2)]
    assert g.weights == [1, 2, 3]
    assert g.neighbors(0) == [1, 2]
    assert g == tc.Graph(3, [(0, 1), (0, 2)], [1, 2, 3])
    assert "n=3" in repr(g)


def test_graph_errors():
    with pytest.raises(tc.GraphError):
        tc.Graph(2, [(0, 0)])
    with pytest.raises(tc.TrackcutError):
        tc.Graph(2, [(0, 1)], [0, 1])


def test_tracking():
    res = tc.solve_tracking(square(), 0, 2)
    assert tc.is_tracking_set(square(), 0, 2, res["solution"])
    assert res["weight"] <= 4 * len(tc.exact_tracking(square(), 0, 2))
    assert res["lp_opt"] is None or isinstance(res["lp_opt"], Fraction)
    assert not tc.is_tracking_set(square(), 0, 2, [])


def test_ftfvs():
    c5 = tc.Graph(5, [(i, (i + 1) % 5) for i in range(5)])
    res = tc.solve_ftfvs(c5, 1)
    assert res["weight"] == 2
    assert tc.verify_ftfvs(c5, 1, res["solution"])
    assert isinstance(res["lp_opt"], Fraction)
    assert len(tc.exact_ftfvs(c5, 1)) == 2
    triangle = tc.Graph(3, [(0, 1), (1, 2), (0, 2)])
    assert tc.exact_ftfvs(triangle, 3) is None
    with pytest.raises(tc.InfeasibleInstance):
        tc.solve_ftfvs(triangle, 3)


def test_gadget():
    graph, k_prime = tc.hardness_gadget(tc.Graph(2, [(0, 1)]), 1, 2)
    assert graph.n == 10
    assert k_prime == 9
    assert tc.girth(graph) >= 3


def test_multicut():
    star = tc.Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    res = tc.solve_mcf_forest(star, [[1, 0, 2], [3, 0, 4]])
    assert res["solution"] == [0]
    assert res["lp_opt"] == Fraction(1)
    k4 = tc.Graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    res = tc.solve_mcf_chordal(tc.Graph(3, [(0, 1), (1, 2)]), [(0, 2)])
    assert res["weight"] >= 1
    with pytest.raises(tc.GraphError):
        tc.solve_mcf_chordal(tc.Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)]), [(0, 2)])
    assert tc.exact_fvs(k4) == [0, 1]
    assert len(tc.approx_fvs(k4)) <= 4


def test_parse_and_run_cli():
    parsed = tc.parse_instance(SQUARE)
    assert parsed["graph"].n == 4
    assert parsed["st"] == (0, 2)
    with pytest.raises(tc.TrackcutError):
        tc.parse_instance("g 2 1\ne 1 1\n")
    code, out, _ = tc.run_cli(["gen", "random", "--seed", "3", "--n", "6", "--m", "8"])
    assert code == 0
    assert out.startswith("g 6 8")


def test_cli_executable(tmp_path):
    exe = os.environ.get("TRACKCUT_CLI")
    if not exe:
        pytest.skip("TRACKCUT_CLI not set")
    path = tmp_path / "sq.txt"
    path.write_text(SQUARE)
    proc = subprocess.run([exe, "solve-tracking", str(path), "--oracle"], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    report = json.loads(proc.stdout)
    assert report["oracle_opt"] == 1
    assert report["weight"] <= 4
