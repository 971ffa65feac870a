import json

import pytest

from bikeikit import catalog
from bikeikit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def files(tmp_path):
    x1 = tmp_path / "x1.bikei"
    x1.write_text(catalog.bikei("x1").to_text())
    x2 = tmp_path / "x2.bikei"
    x2.write_text(catalog.bikei("x2").to_text())
    p2 = tmp_path / "2m1_1.mgd"
    p2.write_text("X(1,2,3,4) M13(1,3,4,2)\n")
    bad = tmp_path / "bad.bikei"
    bad.write_text("3\n2 2 2\n3 3 3\n1 1 1\n\n1 1 1\n2 2 2\n3 3 3\n")
    return {"x1": str(x1), "x2": str(x2), "p2": str(p2), "bad": str(bad), "dir": tmp_path}


def test_module_search_count(capsys, files):
    code, out, _ = run(capsys, "module", "search", "--bikei", files["x1"], "--mod", "8", "--count-only")
    assert code == 0 and out == "512\n"


def test_color_count(capsys, files):
    code, out, _ = run(capsys, "color", "--bikei", files["x2"], "--diagram", files["p2"], "--count")
    assert code == 0 and out == "2\n"


def test_color_listing_json(capsys, files):
    code, out, _ = run(capsys, "--format", "json", "color", "--bikei", files["x2"], "--diagram", files["p2"])
    data = json.loads(out)
    assert data["schema"] == "bikeikit/1"
    assert data["colorings"] == [[1, 1, 1, 1], [2, 2, 2, 2]]


def test_bikei_verify(capsys, files):
    assert run(capsys, "bikei", "verify", files["x1"])[:2] == (0, "ok\n")
    code, out, _ = run(capsys, "--format", "json", "bikei", "verify", files["bad"])
    assert code == 1
    assert json.loads(out)["axiom"] == "i"


def test_bikei_enumerate(capsys):
    assert run(capsys, "bikei", "enumerate", "2", "--count-only")[1] == "2\n"
    code, _, err = run(capsys, "bikei", "enumerate", "6")
    assert code == 1 and "bound" in err


def test_module_verify_block(capsys, files):
    block = files["dir"] / "m.txt"
    block.write_text("3 7 | 4 0 | 7 5\n7 3 | 0 4 | 5 7\n")
    code, out, _ = run(capsys, "module", "verify", str(block), "--bikei", files["x1"], "--mod", "8")
    assert code == 0 and out.startswith("ok")
    block.write_text("3 6 | 4 0 | 7 5\n7 3 | 0 4 | 5 7\n")
    code, out, _ = run(capsys, "module", "verify", str(block), "--bikei", files["x1"], "--mod", "8")
    assert code == 1 and "0.i" in out


def test_invariant(capsys, files):
    code, out, _ = run(capsys, "invariant", "--module", "@z5", "--diagram", files["p2"])
    assert (code, out) == (0, "u+u^5\n")
    code, out, _ = run(capsys, "invariant", "--module", "@ex-proper", "--diagram", "@8^{-1,-1}_1")
    assert out == "u+6u^3+u^9\n"


def test_smooth_and_fuzz(capsys, files):
    assert run(capsys, "smooth", "--diagram", files["p2"], "--direction", "plus")[1] == "X(1,2,1,2)\n"
    a = run(capsys, "fuzz", "--diagram", files["p2"], "--seed", "9", "-k", "3")[1]
    b = run(capsys, "fuzz", "--diagram", files["p2"], "--seed", "9", "-k", "3")[1]
    assert a == b and len(a.splitlines()) == 3


def test_reproduce_exit_code(capsys):
    code, out, _ = run(capsys, "reproduce", "--table", "ex-proper")
    assert code == 1
    assert out.splitlines()[-1] == "0/8 rows match"


def test_stdin(capsys, monkeypatch, files):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("X(1,2,3,4) M13(1,3,4,2)"))
    assert run(capsys, "color", "--bikei", files["x1"], "--diagram", "-", "--count")[1] == "0\n"


def test_errors(capsys, files):
    code, out, err = run(capsys, "color", "--bikei", "missing.bikei", "--diagram", files["p2"])
    assert code == 1 and out == "" and err.startswith("error:")
    code, _, err = run(capsys, "color", "--bikei", files["x1"], "--diagram", "@junk")
    assert code == 1 and "available" in err
    with pytest.raises(SystemExit) as info:
        main(["color", "--nope"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2


def test_catalog_listing(capsys):
    code, out, _ = run(capsys, "--format", "json", "catalog")
    assert code == 0
    assert len(json.loads(out)["entries"]) == len(catalog.entries())


def test_workers_env(capsys, monkeypatch, files):
    monkeypatch.setenv("BIKEIKIT_WORKERS", "2")
    code, out, _ = run(capsys, "module", "search", "--bikei", files["x1"], "--mod", "8", "--count-only")
    assert out == "512\n"
