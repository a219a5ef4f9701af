import json
import subprocess
import sys
from fractions import Fraction

import pytest

from homlie import io as hio
from homlie.io import ParseError
from homlie.cli import main
from homlie.structures import check_action, fixture_b, fixture_jackson_sl2
from homlie.theorems import sample_cochain, _stream


# -- io ----------------------------------------------------------------------


def test_rational_parse_and_normalization():
    assert hio.rational_from_json("2/4") == Fraction(1, 2)
    assert hio.rational_from_json(-3) == Fraction(-3)
    with pytest.raises(ParseError):
        hio.rational_from_json(1.5)
    with pytest.raises(ParseError):
        hio.rational_from_json("1/0")
    with pytest.raises(ParseError):
        hio.rational_from_json("x")


def test_structure_roundtrip():
    j = fixture_jackson_sl2("5/3")
    blob = hio.structure_to_json(j)
    back = hio.structure_from_json(json.loads(json.dumps(blob)))
    assert back.mu == j.mu and back.alpha == j.alpha


def test_structure_parse_rejections():
    base = hio.structure_to_json(fixture_b())
    dup = json.loads(json.dumps(base))
    dup["brackets"].append(dict(dup["brackets"][0]))
    with pytest.raises(ParseError):
        hio.structure_from_json(dup)
    bad_len = json.loads(json.dumps(base))
    bad_len["brackets"][0]["value"] = ["1", "2"]
    with pytest.raises(ParseError):
        hio.structure_from_json(bad_len)
    bad_idx = json.loads(json.dumps(base))
    bad_idx["brackets"][0]["i"] = 7
    with pytest.raises(ParseError):
        hio.structure_from_json(bad_idx)
    swapped = json.loads(json.dumps(base))
    swapped["brackets"][0]["i"], swapped["brackets"][0]["j"] = 3, 1
    with pytest.raises(ParseError):
        hio.structure_from_json(swapped)


def test_cochain_roundtrip_and_rejections():
    B = fixture_b()
    f = sample_cochain(B.space, B.space, 2, _stream(77, "io"))
    blob = hio.cochain_to_json(f)
    assert hio.cochain_from_json(B.space, B.space, blob) == f
    bad = json.loads(json.dumps(blob))
    bad["coeffs"].append(dict(bad["coeffs"][0]))
    with pytest.raises(ParseError):
        hio.cochain_from_json(B.space, B.space, bad)
    decreasing = {"arity": 2, "coeffs": [{"tuple": [2, 1], "value": ["0", "0", "0"]}]}
    with pytest.raises(ParseError):
        hio.cochain_from_json(B.space, B.space, decreasing)


def test_action_roundtrip():
    from homlie.structures import bracket_action_on_abelian
    B = fixture_b()
    act = bracket_action_on_abelian(B)
    blob = hio.action_to_json(act)
    back = hio.action_from_json(B, blob)
    assert check_action(back)
    assert back.table == act.table


def test_dumps_is_canonical():
    assert hio.dumps({"b": 1, "a": 2}) == '{\n  "a": 2,\n  "b": 1\n}\n'


def test_serialization_is_stable_under_reparse():
    j = fixture_jackson_sl2("2/4")  # non-canonical input rational
    text1 = hio.dumps(hio.structure_to_json(j))
    text2 = hio.dumps(hio.structure_to_json(hio.structure_from_json(json.loads(text1))))
    assert text1 == text2
    assert '"1/2"' in text1


# -- cli ---------------------------------------------------------------------


def _run(args, stdin_text=None):
    proc = subprocess.run([sys.executable, "-m", "homlie.cli", *args],
                          capture_output=True, text=True, input=stdin_text)
    return proc


def test_cli_module_entry_and_fixture_pipeline(tmp_path):
    fx = _run(["fixture", "jackson-sl2", "--q", "2"])
    assert fx.returncode == 0
    chk = _run(["check", "structure", "-", "--json"], stdin_text=fx.stdout)
    assert chk.returncode == 1
    payload = json.loads(chk.stdout)
    assert payload["hom_jacobi"] is True
    assert payload["multiplicative"] is False
    pairs = {tuple(f["pair"]): f for f in payload["multiplicativity_failures"]}
    ef = pairs[(1, 3)]
    assert ef["twist_of_bracket"] == ["0", "3", "0"]
    assert ef["bracket_of_twists"] == ["0", "12", "0"]


def test_cli_structure_pass_case():
    fx = _run(["fixture", "threedim", "--a", "0", "--b", "1", "--c", "1", "--d", "0"])
    chk = _run(["check", "structure", "-"], stdin_text=fx.stdout)
    assert chk.returncode == 0


def test_cli_exit_codes(tmp_path):
    alg = tmp_path / "b.json"
    alg.write_text(hio.dumps(hio.structure_to_json(fixture_b())))
    zero = tmp_path / "zero.json"
    zero.write_text('[["0","0","0"],["0","0","0"],["0","0","0"]]')
    assert main(["check", "rotabaxter", "--algebra", str(alg), "--op", str(zero),
                 "--weight", "1"]) == 0
    noncommuting = tmp_path / "bad.json"
    noncommuting.write_text('[["0","1","0"],["1","0","0"],["0","0","1"]]')
    assert main(["check", "nijenhuis", "--algebra", str(alg), "--op", str(noncommuting)]) == 2
    missing = main(["check", "structure", str(tmp_path / "nope.json")])
    assert missing == 2
    garbage = tmp_path / "garbage.json"
    garbage.write_text("{not json")
    assert main(["check", "structure", str(garbage)]) == 2


def test_cli_unknown_command_is_usage_error():
    proc = _run(["frobnicate"])
    assert proc.returncode == 2


def test_cli_bracket_and_cohomology(tmp_path, capsys):
    alg = tmp_path / "b.json"
    alg.write_text(hio.dumps(hio.structure_to_json(fixture_b())))
    p = tmp_path / "p.json"
    p.write_text(hio.dumps({"arity": 1, "coeffs": [{"tuple": [1], "value": ["1", "0", "0"]}]}))
    assert main(["bracket", "--kind", "fn", "--algebra", str(alg),
                 "--p", str(p), "--q", str(p)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["arity"] == 2
    assert main(["cohomology", "--algebra", str(alg), "--coefficients", "adjoint",
                 "--degree", "1", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report == {"degree": 1, "dim_cochains": 5, "dim_cocycles": 2,
                      "dim_coboundaries": 1, "dim_cohomology": 1}


def test_cli_cohomology_morphism_and_rep(tmp_path, capsys):
    alg = tmp_path / "b.json"
    blob = hio.structure_to_json(fixture_b())
    alg.write_text(hio.dumps(blob))
    phi = tmp_path / "phi.json"
    phi.write_text(hio.dumps({"target": blob,
                              "map": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]}))
    assert main(["cohomology", "--algebra", str(alg),
                 "--coefficients", f"morphism:{phi}", "--degree", "2", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["dim_cohomology"] == 1
    # trivial coefficients with a weight
    assert main(["cohomology", "--algebra", str(alg), "--coefficients", "trivial",
                 "--degree", "1", "--lambda", "1/2", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["dim_cocycles"] == 1


def test_cli_deform_extend(tmp_path, capsys):
    alg_blob = hio.structure_to_json(fixture_b())
    alg = tmp_path / "b.json"
    alg.write_text(hio.dumps(alg_blob))
    ident = tmp_path / "id.json"
    ident.write_text('[["1","0","0"],["0","1","0"],["0","0","1"]]')
    assert main(["deform", "extend", "--algebra", str(alg), "--target", str(alg),
                 "--morphism", str(ident), "--to-order", "2", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["reached_order"] == 2
    assert all(step["extended"] for step in report["steps"])


def test_cli_verify_theorems_deterministic_json():
    args = ["verify-theorems", "--fixture", "threedim-multiplicative", "--trials", "2",
            "--seed", "5", "--identity", "mc_homlie", "--identity", "rb_lemma", "--json"]
    a, b = _run(args), _run(args)
    assert a.returncode == 0 and b.returncode == 0
    assert a.stdout == b.stdout
    payload = json.loads(a.stdout)
    assert payload["all_passed"] is True


def test_cli_consistency_failure_exits_three(tmp_path, monkeypatch):
    from homlie import operators
    alg = tmp_path / "b.json"
    alg.write_text(hio.dumps(hio.structure_to_json(fixture_b())))
    ident = tmp_path / "id.json"
    ident.write_text('[["1","0","0"],["0","1","0"],["0","0","1"]]')
    monkeypatch.setattr(operators, "fn_bracket", lambda a, p, q: a.mu)
    assert main(["check", "nijenhuis", "--algebra", str(alg), "--op", str(ident)]) == 3


def test_cli_cohomology_rep_coefficients(tmp_path, capsys):
    B = fixture_b()
    alg = tmp_path / "b.json"
    alg.write_text(hio.dumps(hio.structure_to_json(B)))
    from homlie.structures import adjoint_representation
    rep_blob = hio.representation_to_json(adjoint_representation(B))
    rep = tmp_path / "rep.json"
    rep.write_text(hio.dumps(rep_blob))
    assert main(["cohomology", "--algebra", str(alg),
                 "--coefficients", f"rep:{rep}", "--degree", "1", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["dim_cohomology"] == 1  # matches the adjoint complex
    # an action table violating the axioms is an input error
    bad_blob = json.loads(json.dumps(rep_blob))
    bad_blob["action"][0]["value"] = ["1", "1", "1"]
    bad = tmp_path / "bad.json"
    bad.write_text(hio.dumps(bad_blob))
    assert main(["cohomology", "--algebra", str(alg),
                 "--coefficients", f"rep:{bad}", "--degree", "1"]) == 2


def test_cli_relative_rb_with_action_file(tmp_path):
    from homlie.structures import bracket_action_on_abelian
    B = fixture_b()
    act_blob = hio.action_to_json(bracket_action_on_abelian(B))
    alg = tmp_path / "b.json"
    alg.write_text(hio.dumps(hio.structure_to_json(B)))
    act = tmp_path / "act.json"
    act.write_text(hio.dumps(act_blob))
    zero = tmp_path / "zero.json"
    zero.write_text('[["0","0","0"],["0","0","0"],["0","0","0"]]')
    assert main(["check", "relative-rb", "--algebra", str(alg), "--action", str(act),
                 "--op", str(zero), "--weight", "1"]) == 0
