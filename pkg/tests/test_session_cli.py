"""Session parsing, command dispatch, exit codes, and the on-disk cache."""

import json

import pytest

from singulocus import Ideal, RMat, RingSpec
from singulocus.cli import UsageError, main, run_command
from singulocus.config import LIMITS
from singulocus.session import SessionError, parse_session

SESSION = """\
ring R = QQ[x,y,z] local / (y^2, z^2);
matrix A in R = [x, y; 0, z];
ring P = QQ[x,y,z] global degrevlex;
ideal J in P = x*z, x*y;
ring L = QQ[x,y] local;
ideal K in L = x;
# trailing comment
"""


@pytest.fixture
def session():
    return parse_session(SESSION)


# ---------------------------------------------------------------------------
# parsing


def test_parse_declarations(session):
    assert list(session.declarations) == ["R", "A", "P", "J", "L", "K"]
    R = session.get("R")
    assert isinstance(R, RingSpec) and R.local and len(R.quotient) == 2
    A = session.get("A")
    assert isinstance(A, RMat) and (A.m, A.n) == (2, 2)
    J = session.get("J")
    assert isinstance(J, Ideal) and len(J.gens) == 2
    assert not session.get("P").local


def test_parse_error_position():
    with pytest.raises(SessionError) as exc:
        parse_session("ring R = QQ[x] global degrevlex;\nideal J = ;\n")
    assert exc.value.line == 2 and exc.value.col == 1


def test_parse_missing_semicolon():
    with pytest.raises(SessionError, match="missing ';'"):
        parse_session("ring R = QQ[x] global degrevlex")


def test_parse_undeclared_ring():
    with pytest.raises(SessionError, match="undeclared ring"):
        parse_session("ideal J in R = x;")


def test_parse_duplicate_name():
    with pytest.raises(SessionError, match="duplicate"):
        parse_session("ring R = QQ[x] local;\nring R = QQ[y] local;")


def test_parse_unknown_variable():
    with pytest.raises(SessionError):
        parse_session("ring R = QQ[x] local;\nideal J in R = w^2;")


def test_parse_unknown_order():
    with pytest.raises(SessionError, match="unknown global order"):
        parse_session("ring R = QQ[x] global negdegrevlex;")


def test_render_round_trip(session):
    again = parse_session(session.render())
    assert list(again.declarations) == list(session.declarations)
    for name, obj in session.declarations.items():
        other = again.get(name)
        if isinstance(obj, RingSpec):
            assert other == obj
        elif isinstance(obj, Ideal):
            assert other.gens == obj.gens
        else:
            assert other.rows == obj.rows
    assert parse_session(again.render()).render() == again.render()


# ---------------------------------------------------------------------------
# command dispatch


def test_cmd_anncoker_fixture(session):
    out, code = run_command(session, "anncoker A")
    assert out == "ideal: y*z, x*z\n" and code == 0


def test_cmd_detideal_conventions(session):
    assert run_command(session, "detideal A 0") == ("ideal: 1\n", 0)
    assert run_command(session, "detideal A 3") == ("ideal: 0\n", 0)


def test_cmd_singlocus_fixture(session):
    assert run_command(session, "singlocus J 2") == ("ideal: x\n", 0)
    assert run_command(session, "singlocus J 1") == ("ideal: z, y, x\n", 0)


def test_cmd_gb_nf_member(session):
    assert run_command(session, "gb J") == ("basis: x*z, x*y\n", 0)
    assert run_command(session, "nf J 'x*z + y'")[0] == "poly: y\n"
    assert run_command(session, "member J x*y*z") == ("member: true\n", 0)
    assert run_command(session, "member J x") == ("member: false\n", 0)


def test_cmd_radmember_exit_codes(session):
    out, code = run_command(session, "radmember J x")  # global ring: exact
    assert out == "radical member: false\n" and code == 0
    out, code = run_command(session, "radmember K x^2")
    assert out == "radical member: true\n" and code == 0
    # local ring, bounded power test cannot settle y against (x)
    out, code = run_command(session, "radmember K y")
    assert code == 3 and "undetermined at bound" in out


def test_cmd_ideal_arithmetic(session):
    assert run_command(session, "sum J J") == ("ideal: x*z, x*y\n", 0)
    assert run_command(session, "quot J J") == ("ideal: 1\n", 0)
    out, _ = run_command(session, "intersect J J")
    assert out == "ideal: x*z, x*y\n"
    out, _ = run_command(session, "eliminate J z")
    assert out == "ideal: x*y\n"


def test_cmd_der_variants(session):
    out, _ = run_command(session, "der P")
    assert out.splitlines() == [
        "derivation: (1)*d/dx",
        "derivation: (1)*d/dy",
        "derivation: (1)*d/dz",
    ]
    out_m, _ = run_command(session, "der P --m-variant")
    assert all(line.startswith("derivation: ") for line in out_m.splitlines())
    assert out_m != out


def test_cmd_t1_with_bounds():
    s = parse_session("ring L = QQ[x,y] local;\nmatrix D in L = [x, 0; 0, y];")
    out, code = run_command(s, "t1 D --group cglr --bounds")
    lines = out.splitlines()
    assert lines[0].startswith("annihilator: ")
    assert "lower_in_annihilator: PASS" in lines
    assert "annihilator_in_upper: PASS" in lines
    assert code == 0


def test_cmd_t1_radical_check_json():
    s = parse_session("ring L = QQ[x] local;\nmatrix D in L = [x, 0; 0, x];")
    out, code = run_command(s, "t1 D --group cglr --radical-check", json_output=True)
    payload = json.loads(out)
    assert payload["op"] == "t1" and payload["radical_support"] == "PASS"
    assert code == 0


def test_cmd_json_output(session):
    out, code = run_command(session, "anncoker A", json_output=True)
    assert json.loads(out) == {
        "op": "anncoker",
        "inputs": ["A"],
        "generators": ["y*z", "x*z"],
    }
    assert code == 0


def test_cmd_usage_errors(session):
    for bad in (
        "frobnicate A",
        "anncoker",
        "anncoker J",
        "detideal A",
        "member J",
        "t1 A",
        "t1 A --group nope",
        "",
    ):
        with pytest.raises(UsageError):
            run_command(session, bad)
    with pytest.raises(KeyError):
        run_command(session, "anncoker NOPE")


# ---------------------------------------------------------------------------
# main(): exit codes and the cache


@pytest.fixture
def cli_env(tmp_path, monkeypatch):
    f = tmp_path / "session.txt"
    f.write_text(SESSION)
    monkeypatch.setenv("SINGULOCUS_CACHE", str(tmp_path / "cache"))
    monkeypatch.chdir(tmp_path)
    old = (LIMITS.power_bound, LIMITS.degree_cap)
    yield str(f), tmp_path / "cache"
    LIMITS.power_bound, LIMITS.degree_cap = old


def test_main_success_and_cache_identical(cli_env, capsys):
    path, cache_dir = cli_env
    assert main([path, "--cmd", "anncoker A"]) == 0
    first = capsys.readouterr().out
    assert first == "ideal: y*z, x*z\n"
    assert any(cache_dir.iterdir())
    # second run is served from the cache, byte-identical
    assert main([path, "--cmd", "anncoker A"]) == 0
    assert capsys.readouterr().out == first
    # and identical with the cache disabled
    assert main([path, "--cmd", "anncoker A", "--no-cache"]) == 0
    assert capsys.readouterr().out == first


def test_main_corrupt_cache_recomputes(cli_env, capsys):
    path, cache_dir = cli_env
    assert main([path, "--cmd", "detideal A 2"]) == 0
    first = capsys.readouterr().out
    (entry,) = [p for p in cache_dir.iterdir() if not p.name.startswith(".")]
    entry.write_bytes(b"\xff\xfe garbage")
    assert main([path, "--cmd", "detideal A 2"]) == 0
    captured = capsys.readouterr()
    assert captured.out == first
    assert "corrupt cache entry" in captured.err


def test_main_version_mismatch_recomputes(cli_env, capsys):
    path, cache_dir = cli_env
    assert main([path, "--cmd", "detideal A 2"]) == 0
    first = capsys.readouterr().out
    (entry,) = [p for p in cache_dir.iterdir() if not p.name.startswith(".")]
    entry.write_text("singulocus-cache v0\nstale output\n")
    assert main([path, "--cmd", "detideal A 2"]) == 0
    assert capsys.readouterr().out == first


def test_main_usage_error_exit_1(cli_env, capsys):
    path, _ = cli_env
    assert main([path, "--cmd", "frobnicate A"]) == 1
    assert "error:" in capsys.readouterr().err
    assert main(["/nonexistent/session", "--cmd", "gb J"]) == 1
    capsys.readouterr()


def test_main_degree_guard_exit_2(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("SINGULOCUS_CACHE", str(tmp_path / "cache"))
    f = tmp_path / "s.txt"
    f.write_text("ring P = QQ[x,y] global degrevlex;\nideal J in P = x^3 + y, y^2;\n")
    old = LIMITS.degree_cap
    try:
        assert main([str(f), "--cmd", "gb J", "--degree-cap", "2"]) == 2
        assert "degree" in capsys.readouterr().err
    finally:
        LIMITS.degree_cap = old


def test_main_undetermined_exit_3(cli_env, capsys):
    path, _ = cli_env
    assert main([path, "--cmd", "radmember K y"]) == 3
    assert "undetermined" in capsys.readouterr().out


def test_main_json_flag(cli_env, capsys):
    path, _ = cli_env
    assert main([path, "--cmd", "detideal A 2", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["op"] == "detideal" and payload["generators"] == ["x*z"]


def test_main_power_bound_flag(cli_env, capsys):
    path, _ = cli_env
    assert main([path, "--cmd", "radmember K y", "--power-bound", "5"]) == 3
    assert "bound 5" in capsys.readouterr().out
