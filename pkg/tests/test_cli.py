import json
import subprocess
import sys

import numpy as np
import pytest

from hopfdouble import io
from hopfdouble.cli import main
from hopfdouble.groups import cyclic
from hopfdouble.hopf import group_algebra


@pytest.fixture
def data_dir(pytestconfig):
    return pytestconfig.rootpath / "data" / "groups"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_make_and_verify_s3(tmp_path, data_dir, capsys):
    spec = tmp_path / "cg.json"
    assert run(capsys, "make", data_dir / "s3.json", "group-algebra", spec)[0] == 0
    code, out, _ = run(capsys, "verify", spec, "--text")
    assert code == 0
    assert out.startswith("tolerance: abs=")
    lines = [l for l in out.splitlines() if l.startswith(("PASS", "FAIL"))]
    assert lines and all(l.startswith("PASS") and l.endswith("0.000e+00") for l in lines)


def test_make_round_trip_byte_identical(tmp_path, data_dir, capsys):
    for kind in ("group-algebra", "function-algebra", "dual"):
        spec = tmp_path / f"{kind}.json"
        assert run(capsys, "make", data_dir / "z4.json", kind, spec)[0] == 0
        again = tmp_path / "again.json"
        io.write_spec(io.read_spec(spec), again)
        assert spec.read_bytes() == again.read_bytes()


def test_zeroed_antipode_flags(tmp_path, capsys):
    H = group_algebra(cyclic(2))
    spec = tmp_path / "bad.json"
    io.write_spec(H.replace(antipode=np.zeros((2, 2))), spec)
    code, out, _ = run(capsys, "verify", spec, "--json")
    assert code == 1
    doc = json.loads(out)
    entries = {e["check"]: e for e in doc["sections"]["hopf_star"]["entries"]}
    assert entries["antipode"]["pass"] is False
    assert doc["overall"] is False
    assert set(doc["tolerance"]) == {"abs", "rel"}


def test_verify_pairing_and_double(tmp_path, data_dir, capsys):
    p, d = tmp_path / "p.json", tmp_path / "d.json"
    assert run(capsys, "pairing", "--group", data_dir / "s3.json", "--flip", p)[0] == 0
    code, out, _ = run(capsys, "verify", p, "--json")
    assert code == 0 and json.loads(out)["sections"]["nondegeneracy"]["min_singular"] == 1.0
    code, out, _ = run(capsys, "double", p, d, "--verify", "--oracle", data_dir / "s3.json", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["dim"] == 36 and doc["sections"]["oracle"]["deviation"] == 0.0
    code, out, _ = run(capsys, "verify", d, "--json")
    assert code == 0 and set(json.loads(out)["sections"]) == {"double", "theta"}


def test_dual_pairing_command(tmp_path, data_dir, capsys):
    spec, p = tmp_path / "h.json", tmp_path / "p.json"
    run(capsys, "make", data_dir / "z3.json", "group-algebra", spec)
    assert run(capsys, "pairing", "--dual", spec, p)[0] == 0
    assert run(capsys, "verify", p)[0] == 0


def test_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    code, _, err = run(capsys, "verify", bad)
    assert code == 2 and "invalid JSON" in err
    assert run(capsys, "verify", tmp_path / "missing.json")[0] == 2
    bad.write_text('{"dim": 2}')
    assert run(capsys, "verify", bad)[0] == 2


def test_invalid_group(tmp_path, data_dir, capsys):
    code, _, err = run(capsys, "make", data_dir / "broken_table.json", "dual", tmp_path / "x.json")
    assert code == 3 and "associativity" in err


def test_degenerate_pairing(tmp_path, data_dir, capsys):
    p = tmp_path / "p.json"
    run(capsys, "pairing", "--group", data_dir / "z3.json", p)
    data = io.load_json(p)
    data["P"][2] = [[0.0, 0.0]] * 3
    p.write_text(json.dumps(data))
    code, _, err = run(capsys, "double", p, tmp_path / "d.json")
    assert code == 4 and "rank 2" in err


def test_failed_pairing_without_force(tmp_path, data_dir, capsys):
    p = tmp_path / "p.json"
    run(capsys, "pairing", "--group", data_dir / "s3.json", p)
    data = io.load_json(p)
    P = io.decode_complex(data["P"], 2)
    data["P"] = io.encode_complex(P[:, [0, 2, 1, 3, 5, 4]])
    p.write_text(json.dumps(data))
    assert run(capsys, "double", p, tmp_path / "d.json")[0] == 1
    assert run(capsys, "double", p, tmp_path / "d.json", "--force", "--verify")[0] == 1


def test_gns_exit_codes(tmp_path, capsys):
    H = group_algebra(cyclic(3))
    rng = np.random.default_rng(0)
    noint = tmp_path / "noint.json"
    io.write_spec(H.replace(comult=np.array(H.comult) + 0.1 * rng.standard_normal((3, 3, 3)), integral=None), noint)
    assert run(capsys, "gns", noint)[0] == 5
    neg = tmp_path / "neg.json"
    io.write_spec(H.replace(star=np.eye(3)), neg)
    code, _, err = run(capsys, "gns", neg)
    assert code == 5 and "not positive definite" in err


def test_gns_z2_double_with_norms(tmp_path, data_dir, capsys):
    p, d, norms = tmp_path / "p.json", tmp_path / "d.json", tmp_path / "n.json"
    run(capsys, "pairing", "--group", data_dir / "z2.json", p)
    run(capsys, "double", p, d)
    x = np.zeros(4)
    x[2] = 1  # (u, delta_e)
    norms.write_text(json.dumps([io.encode_complex(x)]))
    code, out, _ = run(capsys, "gns", d, "--samples", "100", "--seed", "7", "--norms", norms)
    doc = json.loads(out)
    assert code == 0 and doc["seed"] == 7
    assert abs(doc["norms"][0]["vector_norm"] - 1 / np.sqrt(2)) <= 1e-10
    assert doc["sections"]["isometry"]["overall"]
    bad = tmp_path / "bad_norms.json"
    bad.write_text(json.dumps([io.encode_complex(np.zeros(3))]))
    assert run(capsys, "gns", d, "--norms", bad)[0] == 2


def test_tolerance_override(tmp_path, data_dir, capsys):
    spec = tmp_path / "h.json"
    run(capsys, "make", data_dir / "z2.json", "group-algebra", spec)
    code, out, _ = run(capsys, "verify", spec, "--json", "--tolerance", "1e-6", "--rel-tolerance", "1e-5")
    assert json.loads(out)["tolerance"] == {"abs": 1e-6, "rel": 1e-5}


def test_module_entry_point(tmp_path, data_dir):
    proc = subprocess.run(
        [sys.executable, "-m", "hopfdouble", "make", str(data_dir / "z2.json"), "function-algebra", str(tmp_path / "f.json")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and "dimension 2" in proc.stdout
