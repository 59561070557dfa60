"""CLI behaviour and golden ``--json`` outputs.

Regenerate the goldens after an intentional output change with
``python3 tests/test_cli.py --regen``.
"""
import contextlib
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from homleibniz.cli import main
from homleibniz.constructions import catalog
from homleibniz.fileformat import dump, load

GOLDEN = Path(__file__).parent / "golden"
COMMANDS = {"check": ["check", "--all", "--json"], "power-assoc": ["power-assoc", "--json"]}


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            code = main(argv)
        except SystemExit as exc:
            code = exc.code
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(scope="module")
def alg_dir(tmp_path_factory):
    d = tmp_path_factory.mktemp("catalog")
    for e in catalog():
        dump(e.algebra, d / f"{e.name}.alg")
    return d


def golden_cases():
    return [(e.name, cmd) for e in catalog() for cmd in COMMANDS]


@pytest.mark.parametrize("name, cmd", golden_cases())
def test_golden_json(alg_dir, name, cmd):
    path = str(alg_dir / f"{name}.alg")
    code, out, _ = run(COMMANDS[cmd][:1] + [path] + COMMANDS[cmd][1:])
    golden = (GOLDEN / f"{name}.{cmd}.json").read_text(encoding="utf-8")
    assert out == golden
    doc = json.loads(out)
    assert code == (0 if doc["holds"] else 1)
    # byte-stable across repeated runs
    assert run(COMMANDS[cmd][:1] + [path] + COMMANDS[cmd][1:])[1] == out


def test_exit_codes_match_catalog_verdicts(alg_dir):
    for e in catalog():
        path = str(alg_dir / f"{e.name}.alg")
        for name, expected in e.expected.items():
            if name.startswith(("hom-power", "cube", "twisted", "right-powers", "left-", "power")):
                continue
            code, _, _ = run(["check", path, "--identity", name])
            assert code == (0 if expected else 1), (e.name, name)


def test_check_text_output(alg_dir):
    code, out, _ = run(["check", str(alg_dir / "L2.alg"), "--identity", "left-hom-leibniz"])
    assert code == 0 and out == "left-hom-leibniz: holds\n"
    code, out, _ = run(["check", str(alg_dir / "NonLeib.alg"), "--identity", "left-hom-leibniz"])
    assert code == 1
    assert out == "left-hom-leibniz: FAILS, witness (e1, e1, e1) (residual -e1)\n"


def test_check_json_witness(alg_dir):
    code, out, _ = run(["check", str(alg_dir / "NonLeib.alg"), "--identity", "left-hom-leibniz", "--json"])
    rep = json.loads(out)["reports"][0]
    assert code == 1
    assert rep["witness"] == {"kind": "basis", "data": [1, 1, 1]} and rep["residual"] == ["-1"]


def test_unknown_identity_is_usage_error(alg_dir):
    code, _, err = run(["check", str(alg_dir / "L2.alg"), "--identity", "bogus"])
    assert code == 2 and "valid names" in err and "left-hom-leibniz" in err


def test_bad_files_are_usage_errors(tmp_path):
    bad = tmp_path / "bad.alg"
    bad.write_text('{"format_version": 1, "dim": 2, "products": [{"i": 1, "j": 1, "value": ["1/0", "0"]}],'
                   ' "twist": [["1","0"],["0","1"]]}')
    code, _, err = run(["check", str(bad)])
    assert code == 2 and "invalid rational" in err
    assert run(["check", str(tmp_path / "missing.alg")])[0] == 2
    assert run(["check"])[0] == 2


def test_strict_flag(tmp_path):
    f = tmp_path / "nm.alg"
    f.write_text('{"format_version": 1, "dim": 2, "products": [{"i": 2, "j": 2, "value": ["1", "0"]}],'
                 ' "twist": [["1","0"],["0","2"]]}')
    code, _, err = run(["check", str(f), "--identity", "multiplicative"])
    assert code == 1 and "warning" in err and "(e2, e2)" in err
    code, _, err = run(["check", str(f), "--strict"])
    assert code == 2 and "(e2, e2)" in err


def test_powers_command(alg_dir):
    code, out, _ = run(["powers", str(alg_dir / "A2.alg"), "--element", "0,1", "--max-n", "4"])
    assert code == 0
    assert out.splitlines() == ["x^1 = e2", "x^2 = 4e1", "x^3 = 0", "x^4 = 0"]
    code, out, _ = run(["powers", str(alg_dir / "L3.alg"), "--element", "1,0,0", "--max-n", "3", "--left"])
    assert out.splitlines() == ["a^1 = e1", "a^2 = e2", "a^3 = e3"]
    code, out, _ = run(["powers", str(alg_dir / "L2.alg"), "--element", "1/2,3", "--max-n", "2", "--json"])
    assert json.loads(out)["powers"] == [["1/2", "3"], ["9", "0"]]


@pytest.mark.parametrize("element", ["1", "1,x", "1/0,1"])
def test_bad_element_is_usage_error(alg_dir, element):
    assert run(["powers", str(alg_dir / "L2.alg"), "--element", element])[0] == 2


def test_power_assoc_text(alg_dir):
    code, out, _ = run(["power-assoc", str(alg_dir / "L3.alg")])
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "second Hom-power associativity: holds"
    assert lines[1].startswith("third Hom-power associativity: FAILS, witness x = e1 (i=1;")
    assert "x^3 = 0: holds" in lines
    assert run(["power-assoc", str(alg_dir / "A2.alg")])[0] == 0
    assert run(["power-assoc", str(alg_dir / "A2.alg"), "--max-n", "2"])[0] == 2


def test_twist_command(alg_dir, tmp_path):
    m = tmp_path / "m.json"
    m.write_text('[["4", "0"], ["0", "2"]]')
    out_file = tmp_path / "A2.alg"
    code, out, _ = run(["twist", str(alg_dir / "L2.alg"), "--map", str(m), "-o", str(out_file), "--name", "A2"])
    assert code == 0 and out_file.exists()
    assert load(out_file) == load(alg_dir / "A2.alg")
    bad = tmp_path / "bad.json"
    bad.write_text('[["1", "0"], ["0", "2"]]')
    code, out, _ = run(["twist", str(alg_dir / "L2.alg"), "--map", str(bad), "-o", str(tmp_path / "x.alg")])
    assert code == 1 and "(e2, e2)" in out and not (tmp_path / "x.alg").exists()
    code, _, _ = run(["twist", str(alg_dir / "A2.alg"), "--map", str(m), "-o", str(tmp_path / "y.alg")])
    assert code == 2


def test_catalog_command(tmp_path):
    code, out, _ = run(["catalog"])
    assert code == 0 and len(out.splitlines()) == len(catalog())
    code, _, _ = run(["catalog", "--export", str(tmp_path / "cat")])
    assert code == 0
    names = sorted(p.name for p in (tmp_path / "cat").iterdir())
    assert names == sorted(f"{e.name}.alg" for e in catalog())
    for e in catalog():
        assert load(tmp_path / "cat" / f"{e.name}.alg") == e.algebra


def test_akivis_file(tmp_path, L3):
    from homleibniz.akivis import to_hom_akivis

    f = tmp_path / "k.alg"
    dump(to_hom_akivis(L3), f)
    assert run(["check", str(f)])[0] == 0
    dump(to_hom_akivis(L3).perturbed(0, 1, 2, L3.basis(0)), f)
    code, out, _ = run(["check", str(f), "--json"])
    assert code == 1 and json.loads(out)["reports"][0]["witness"]["data"] == [1, 2, 3]
    assert run(["check", str(f), "--identity", "skew"])[0] == 2


def test_fuzz_command(tmp_path):
    code, out, _ = run(["fuzz", "--seed", "0", "--dim", "3", "--count", "3", "--export", str(tmp_path)])
    assert code == 0 and out.splitlines()[-1] == "3/3 passed"
    assert len(list(tmp_path.iterdir())) == 3
    code, out, _ = run(["fuzz", "--seed", "5", "--dim", "2", "--count", "2", "--json"])
    assert code == 0 and all(item["holds"] for item in json.loads(out))
    assert run(["fuzz", "--seed", "0", "--dim", "9", "--count", "1"])[0] == 2


def test_module_entry_point(alg_dir):
    proc = subprocess.run([sys.executable, "-m", "homleibniz", "check", str(alg_dir / "L3.alg"),
                           "--identity", "right-hom-leibniz"], capture_output=True, text=True)
    assert proc.returncode == 1
    assert proc.stdout.startswith("right-hom-leibniz: FAILS, witness (e1, e1, e1)")


def regenerate():
    import tempfile

    GOLDEN.mkdir(exist_ok=True)
    with tempfile.TemporaryDirectory() as d:
        for e in catalog():
            path = Path(d) / f"{e.name}.alg"
            dump(e.algebra, path)
            for cmd, argv in COMMANDS.items():
                _, out, _ = run(argv[:1] + [str(path)] + argv[1:])
                (GOLDEN / f"{e.name}.{cmd}.json").write_text(out, encoding="utf-8")


if __name__ == "__main__":
    if "--regen" in sys.argv:
        regenerate()
