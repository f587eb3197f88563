import json
import pathlib

from isotopelab import Field, c_family, j2, principal_isotope
from isotopelab.algfile import (
    parse_algebra_text,
    serialize_algebra,
    serialize_matrix,
)
from isotopelab.cli import main

QQ = Field.rationals()
ALGEBRAS = pathlib.Path(__file__).resolve().parent.parent / "algebras"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_c2(capsys):
    code, out, _ = run(capsys, "analyze", str(ALGEBRAS / "c2.alg"))
    assert code == 0
    assert "unit: none" in out
    assert "nil-rank: 2" in out
    assert "commutative: yes" in out


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", str(ALGEBRAS / "j2.alg"), "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["unit"] == "(1, 0, 0)"
    assert payload["jordan"] == "yes"
    assert payload["simple_closure"] is True
    assert payload["nil_rank"]["rank"] == 2


def test_analyze_gf_algebra_runs_ideal_search(tmp_path, capsys):
    path = tmp_path / "c011.alg"
    path.write_text(serialize_algebra(c_family(Field.gf(5), 0, 1, 1)))
    code, out, _ = run(capsys, "analyze", str(path))
    assert code == 0
    assert "found" in out
    assert "simple (closure criterion): no" in out


def test_witness_theorem2_exit_and_report(capsys):
    code, out, _ = run(capsys, "witness", "theorem2")
    assert code == 0
    assert "verdict: PASS" in out
    assert "[[-1/2, 1/2, 1/2], [1/2, -1/2, 1/2], [1/2, 1/2, -1/2]]" in out


def test_witness_lemma11_domain_error(capsys):
    code, _, err = run(capsys, "witness", "lemma11", "--rho", "-2")
    assert code == 2
    assert "DomainError" in err


def test_witness_exit_codes_match_verdicts(capsys):
    for name, extra in [
        ("lemma6", []),
        ("lemma10", []),
        ("lemma11", ["--rho", "1/2"]),
        ("theorem1", ["--abg", "2,1,4"]),
        ("theorem2", []),
        ("prop1", ["--n", "2"]),
        ("prop2", ["--n", "2"]),
    ]:
        code, out, _ = run(capsys, "witness", name, *extra, "--json")
        payload = json.loads(out)
        assert payload["verdict"] is True
        assert code == 0
        for step in payload["steps"]:
            assert set(step) == {"step", "check", "expected", "actual"}


def test_witness_lemma1(capsys):
    code, out, _ = run(capsys, "witness", "lemma1", "--sigma", "-1", "--tau", "1")
    assert code == 0
    assert "verdict: PASS" in out


def test_rmul(capsys):
    code, out, _ = run(
        capsys, "rmul", str(ALGEBRAS / "j2.alg"), "--elem", "1,2/3,-1/5"
    )
    assert code == 0
    assert "determinant: 19/15" in out
    assert "invertible: yes" in out


def test_nilrank_command(capsys):
    code, out, _ = run(capsys, "nilrank", str(ALGEBRAS / "c3.alg"), "--p", "5")
    assert code == 0
    assert "nil-rank: 3" in out


def test_isotope_writes_file(tmp_path, capsys):
    J = j2(QQ)
    one, x, _ = J.basis()
    rc = (one + x).right_mult_matrix()
    f_path = tmp_path / "f.mat"
    f_path.write_text(serialize_matrix(rc.inverse()))
    out_path = tmp_path / "iso.alg"
    code, out, _ = run(
        capsys,
        "isotope",
        str(ALGEBRAS / "j2.alg"),
        "--f",
        str(f_path),
        "-o",
        str(out_path),
    )
    assert code == 0
    iso = parse_algebra_text(out_path.read_text())
    assert iso == principal_isotope(J, rc.inverse(), rc.inverse())


def test_express_rmul(tmp_path, capsys):
    J = j2(QQ)
    one, x, _ = J.basis()
    rc = (one + x).right_mult_matrix()
    m_path = tmp_path / "m.mat"
    m_path.write_text(serialize_matrix(rc))
    code, out, _ = run(
        capsys, "express-rmul", str(ALGEBRAS / "j2.alg"), "--mat", str(m_path)
    )
    assert code == 0
    assert "element: (1, 1, 0)" in out
    m_path.write_text(serialize_matrix(rc.inverse()))
    code, out, _ = run(
        capsys, "express-rmul", str(ALGEBRAS / "j2.alg"), "--mat", str(m_path)
    )
    assert code == 0
    assert "none" in out


def test_iso_search_command(tmp_path, capsys):
    a_path = tmp_path / "a.alg"
    b_path = tmp_path / "b.alg"
    F3 = Field.gf(3)
    a_path.write_text(serialize_algebra(c_family(F3, 1, 1, 0)))
    b_path.write_text(serialize_algebra(c_family(F3, 1, 0, 1)))
    code, out, _ = run(capsys, "iso-search", str(a_path), str(b_path))
    assert code == 0
    assert "isomorphism found" in out
    b_path.write_text(serialize_algebra(c_family(F3, 1, 0, 0)))
    code, out, _ = run(capsys, "iso-search", str(a_path), str(b_path))
    assert code == 0
    assert "none" in out


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.alg"
    bad.write_text("field rational\ndim 2\nc 5 1 1 1\n")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 2
    assert "ParseError" in err


def test_missing_file_exit_code(capsys):
    code, _, err = run(capsys, "analyze", "no-such-file.alg")
    assert code == 2
