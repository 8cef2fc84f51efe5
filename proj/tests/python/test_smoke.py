import json
import os
import subprocess
from pathlib import Path

import pytest

import cthh

ROOT = Path(__file__).resolve().parents[2]
QUIVERS = ROOT / "data" / "quivers"


def cycle(n):
    return cthh.Quiver(n, [(i, i % n + 1) for i in range(1, n + 1)])


def test_quiver_basics():
    q = cthh.Quiver(3, [(1, 2), (2, 3)])
    m = q.mutate(2)
    assert m == cthh.Quiver(3, [(2, 1), (3, 2), (1, 3)])
    assert m.mutate(2) == q
    assert cthh.Quiver.from_json(q.to_json()) == q
    assert cthh.dynkin_type(cycle(4)) == "D4"
    assert len(cthh.mutation_class("A3")) == 4


def test_validation_errors():
    with pytest.raises(cthh.CthhError, match="TwoCycle"):
        cthh.Quiver(2, [(1, 2), (2, 1)])
    with pytest.raises(cthh.CthhError, match="Disconnected"):
        cthh.Quiver.from_json('{"vertices":3,"arrows":[[1,2]]}')


def test_algebra_and_cartan():
    info = cthh.algebra_info(cycle(3))
    assert info["dimension"] == 6
    assert info["cartan"] == [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
    assert info["det"] == 2
    assert cthh.relations(cycle(3)) == ["2>3>1", "3>1>2", "1>2>3"]


def test_oracle_and_closed_form():
    assert cthh.hh_dims(cycle(3), 3, 7) == [1, 1, 0, 0, 0, 0, 1, 1]
    assert cthh.hh_dims(cycle(3), "GF(2)", 4) == [1, 1, 0, 1, 1]
    assert cthh.hh1_dim(cycle(3)) == 1
    assert cthh.center_dim(cycle(3)) == 1
    c = cthh.closed_form(cycle(6))
    assert c["h"] == "f_6" and c["d_params"]["subtype"] == "IVa"
    assert cthh.series_dims("f_3", 4, 2) == [1, 1, 0, 1, 1]
    assert cthh.hh_universal(3, 8) == "3 f_3"
    assert cthh.lookup_e([3, 0, 0, 3, 0, 0, 3]) == "f_4"
    assert cthh.f_coeff(3, 3, 2) == 1


def test_verify_report():
    r = cthh.verify("D4", [2, 3, 0], max_i=6)
    assert r["pass"] and r["class_size"] == 6
    assert len(r["records"]) == 6


@pytest.mark.skipif("CTHH_CLI" not in os.environ, reason="command line tool not built")
def test_cli_exit_codes(tmp_path):
    cli = os.environ["CTHH_CLI"]
    ok = subprocess.run([cli, "hh", str(QUIVERS / "oriented_4_cycle.json"), "--json"], capture_output=True, text=True)
    assert ok.returncode == 0
    assert json.loads(ok.stdout)["h"] == "f_4"

    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices":2,"arrows":[[1,2],[2,1]]}')
    r = subprocess.run([cli, "quiver", "validate", str(bad)], capture_output=True, text=True)
    assert r.returncode == 2 and "TwoCycle" in r.stderr

    r = subprocess.run([cli, "verify", "--seed", "A3", "--chars", "2"], capture_output=True, text=True)
    assert r.returncode == 0 and "PASS" in r.stdout

    r = subprocess.run([cli, "no-such-command"], capture_output=True, text=True)
    assert r.returncode == 2

    a = subprocess.run([cli, "verify", "--seed", "D5", "--chars", "2", "--json"], capture_output=True, text=True)
    b = subprocess.run([cli, "verify", "--seed", "D5", "--chars", "2", "--json"], capture_output=True, text=True,
                       env={**os.environ, "CT_HH_THREADS": "2"})
    assert a.stdout == b.stdout
