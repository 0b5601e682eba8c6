"""Command-line front-end: schemas, exit codes, determinism."""

import json

from symgroupoid.cli import main
from symgroupoid.teich import build_surface


def test_geodesic_example(capsys):
    rc = main(["geodesic", "--surface", "genus2_x7", "--label", "G_B"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "monomials (with multiplicity): 3" in out


def test_geodesic_unknown_surface():
    assert main(["geodesic", "--surface", "genus7_wat", "--label", "x"]) == 2


def test_casimirs_contains_x7_monomial(capsys):
    rc = main(["casimirs", "--surface", "genus2_x7"])
    out = capsys.readouterr().out
    assert rc == 0
    # e^2 a b c d f g at the squared-generator level
    assert "w:e^4" in out and "w:a^2" in out and "w:g^2" in out


def test_mutate_echo_and_seq(tmp_path, capsys):
    model = build_surface("genus2_x7")
    qfile = tmp_path / "x7.json"
    qfile.write_text(json.dumps(model.seed.to_json()))
    outfile = tmp_path / "echo.json"
    rc = main(["mutate", "--quiver", str(qfile), "--seq", "", "--json", str(outfile)])
    assert rc == 0
    assert json.loads(outfile.read_text()) == model.seed.to_json()
    rc = main(["mutate", "--quiver", str(qfile), "--seq", "a,a"])
    assert rc == 0
    assert json.loads(capsys.readouterr().out) == model.seed.to_json()


def test_mutate_bad_vertex(tmp_path):
    model = build_surface("genus2_k33")
    qfile = tmp_path / "k.json"
    qfile.write_text(json.dumps(model.seed.to_json()))
    assert main(["mutate", "--quiver", str(qfile), "--seq", "zz"]) == 2


def test_evaluate_surface_label(tmp_path, capsys):
    pt = tmp_path / "p.json"
    pt.write_text(json.dumps({f"w:{v}": "1" for v in "abcdefg"}))
    rc = main(["evaluate", "--point", str(pt), "--surface", "genus2_x7", "--label", "G_{2,3}"])
    assert rc == 0
    assert capsys.readouterr().out.strip() == "7"


def test_evaluate_missing_generator(tmp_path):
    pt = tmp_path / "p.json"
    pt.write_text(json.dumps({"w:a": "1"}))
    assert main(["evaluate", "--point", str(pt), "--surface", "genus2_x7", "--label", "G_B"]) == 2


def test_verify_casimirs_deterministic(tmp_path, capsys):
    out1 = tmp_path / "r1.json"
    out2 = tmp_path / "r2.json"
    assert main(["verify", "casimirs", "-n", "4", "--rng", "42", "--json", str(out1)]) == 0
    assert main(["verify", "casimirs", "-n", "4", "--rng", "42", "--json", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    report = json.loads(out1.read_text())
    assert report["summary"]["fail"] == 0
    assert all("claim" in c for c in report["checks"])


def test_evaluate_serialized_function(tmp_path, capsys):
    model = build_surface("genus2_x7")
    from symgroupoid.teich import catalog_value

    fn = catalog_value(model, "G_{1,2}")
    ff = tmp_path / "fn.json"
    ff.write_text(json.dumps(fn.to_json()))
    pt = tmp_path / "p.json"
    pt.write_text(json.dumps({"w:a": "1", "w:d": "1"}))
    rc = main(["evaluate", "--point", str(pt), "--fn", str(ff)])
    assert rc == 0
    # the two-letter telescopic word has three monomials
    assert capsys.readouterr().out.strip() == "3"


def test_network_dump(tmp_path):
    out = tmp_path / "net.json"
    assert main(["geodesic", "--network", "4", "--json", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["n"] == 4
    assert main(["geodesic", "--network", "7"]) == 2


def test_verify_unknown_suite():
    assert main(["verify", "nonsense"]) == 2


def test_verify_sl2_exit_zero(tmp_path):
    out = tmp_path / "sl2.json"
    assert main(["verify", "sl2", "--rng", "7", "--json", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["rng_seed"] == 7
