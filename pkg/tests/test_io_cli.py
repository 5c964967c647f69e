import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cauchy_binet.cli import main
from cauchy_binet.errors import ParseError
from cauchy_binet.exact import Matrix
from cauchy_binet.io import format_matrix, parse_matrix, read_matrix, write_matrix

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=30)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(lambda m: st.lists(st.lists(fractions, min_size=m, max_size=m), max_size=5)))
def test_round_trip(rows):
    a = Matrix(rows)
    assert parse_matrix(format_matrix(a)) == a


def test_parse_comments_and_rationals(tmp_path):
    a = parse_matrix("# header\n1 -2/4  # trailing\n\n 3   7\n")
    assert a == Matrix([[1, "-1/2"], [3, 7]])
    p = tmp_path / "m.txt"
    write_matrix(p, a)
    assert read_matrix(p) == a
    assert parse_matrix("").shape == (0, 0)


@pytest.mark.parametrize(
    "text, needle",
    [
        ("1 2\n3\n", "line 2"),
        ("1 x\n", "line 1"),
        ("1 0.5\n", "integers or p/q"),
        ("1e3\n", "integers or p/q"),
        ("1/0\n", "line 1"),
    ],
)
def test_parse_errors(text, needle):
    with pytest.raises(ParseError, match=needle):
        parse_matrix(text)


# -- CLI ---------------------------------------------------------------------


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def run(capsys, *argv):
    code = main([*argv, "--format", "json", "--no-timing"])
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_pdet(capsys, write):
    code, rep = run(capsys, "pdet", write("a.txt", "5 6\n10 12\n"))
    assert code == 0
    assert rep["results"]["pseudo_det"] == "17" and rep["results"]["spectral_count"] == 1
    code, rep = run(capsys, "pdet", write("b.txt", "0 4 4\n4 0 3\n4 3 6\n"))
    assert rep["results"]["pseudo_det"] == "-41"
    assert rep["results"]["char_poly"] == ["0", "41", "6", "-1"]
    code, rep = run(capsys, "pdet", write("c.txt", "1 0 0\n0 1 0\n0 0 1\n"))
    assert rep["results"]["pseudo_det"] == "1" and rep["results"]["spectral_count"] == 3


def test_report_schema(capsys, write):
    path = write("a.txt", "5 6\n10 12\n")
    _, rep = run(capsys, "pdet", path)
    assert set(rep) == {"command", "inputs", "results", "verdicts", "duration_ms"}
    assert rep["command"] == "pdet"
    assert rep["inputs"]["matrix"]["path"] == path
    assert len(rep["inputs"]["matrix"]["sha256"]) == 64


def test_charpoly_subset(capsys, write):
    _, rep = run(capsys, "charpoly", write("a.txt", "0 4 4\n4 0 3\n4 3 6\n"))
    assert rep["results"] == {"char_poly": ["0", "41", "6", "-1"]}


def test_rational_output(capsys, write):
    _, rep = run(capsys, "pdet", write("a.txt", "1/2 0\n0 1/3\n"))
    assert rep["results"]["pseudo_det"] == "1/6"


def test_pdet_errors(capsys, write):
    assert main(["pdet", write("a.txt", "1 2 3\n4 5 6\n")]) == 2
    assert "square" in capsys.readouterr().err
    assert main(["pdet", write("b.txt", "1 2\n3\n")]) == 2
    assert main(["pdet", "/nonexistent/matrix.txt"]) == 2


def test_cauchy_binet_examples(capsys, write):
    f = write("f.txt", "1 4\n2 5\n3 6\n")
    g = write("g.txt", "1 0\n1 1\n1 0\n")
    code, rep = run(capsys, "cauchy-binet", f, g)
    assert code == 0
    assert rep["verdicts"] == {"all_orders": "pass", "leading_order": "pass", "duality": "pass"}
    assert rep["results"]["duality"] == {"Det(F^T G)": "11", "Det(F G^T)": "11"}
    assert all(row["p_k"] == row["minor_sum"] for row in rep["results"]["per_k"])

    f = write("f2.txt", "3 1 1\n2 2 2\n")
    g = write("g2.txt", "0 0 2\n0 3 2\n")
    code, rep = run(capsys, "cauchy-binet", f, g)
    assert code == 0
    assert rep["results"]["leading_order"] == {"k": 1, "pseudo_det": "12", "minor_sum": "12"}


def test_cauchy_binet_random_pair(capsys, tmp_path):
    paths = []
    for seed in (1, 2):
        assert main(["random", "5", "7", "--seed", str(seed)]) == 0
        p = tmp_path / f"r{seed}.txt"
        p.write_text(capsys.readouterr().out)
        paths.append(str(p))
    code, rep = run(capsys, "cauchy-binet", *paths)
    assert code == 0 and set(rep["verdicts"].values()) == {"pass"}


def test_cauchy_binet_budget_skips(capsys, write):
    f = write("f.txt", "1 4\n2 5\n3 6\n")
    # order 1 needs 6 patterns, order 2 needs 3
    code, rep = run(capsys, "cauchy-binet", f, f, "--budget", "3")
    assert code == 0
    assert rep["verdicts"]["all_orders"] == "skipped-budget"
    assert rep["verdicts"]["leading_order"] == "pass"
    code, rep = run(capsys, "cauchy-binet", f, f, "--budget", "2")
    assert code == 0
    assert rep["verdicts"]["leading_order"] == "skipped-budget"


def test_cauchy_binet_shape_mismatch(capsys, write):
    assert main(["cauchy-binet", write("f.txt", "1 2\n"), write("g.txt", "1\n2\n")]) == 2


def test_exterior(capsys, write):
    code, rep = run(capsys, "exterior", write("a.txt", "1 2\n3 4\n5 6\n"), "-k", "2")
    assert code == 0
    assert rep["results"]["shape"] == [3, 1]
    assert rep["results"]["matrix"] == [["-2"], ["-4"], ["-2"]]


K4 = "4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"


def test_graph_trees_and_forests(capsys, write):
    code, rep = run(capsys, "graph", write("k4.txt", K4), "trees")
    assert code == 0
    assert rep["results"]["spanning_trees"] == "16" and rep["results"]["oracle"] == 16
    assert rep["verdicts"] == {"kirchhoff_oracle": "pass"}
    code, rep = run(capsys, "graph", write("k3.txt", "3\n0 1\n1 2\n0 2\n"), "forests")
    assert rep["results"]["rooted_forests"] == "16" and rep["verdicts"] == {"forest_oracle": "pass"}


def test_graph_dirac_cycle(capsys, write):
    code, rep = run(capsys, "graph", write("c4.txt", "4\n0 1\n1 2\n2 3\n3 0\n"), "dirac")
    assert code == 0
    res = rep["results"]
    assert res["pseudo_det_D"] == "-16" and res["pseudo_det_D2"] == "256"
    assert res["betti"] == [1, 1]
    assert res["euler"] == {"betti": 0, "simplices": 0}
    assert set(rep["verdicts"].values()) == {"pass"}


def test_graph_disconnected_trees(capsys, write):
    assert main(["graph", write("two.txt", "4\n0 1\n2 3\n"), "trees"]) == 2
    assert "kernel" in capsys.readouterr().err


def test_graph_parse_error(capsys, write):
    assert main(["graph", write("bad.txt", "3\n0 0\n"), "trees"]) == 2


def test_simplexgraph(capsys, write):
    code, rep = run(capsys, "graph", write("k2.txt", "2\n0 1\n"), "simplexgraph")
    assert rep["results"]["simplex_graph"] == {"n": 3, "edges": [[0, 2], [1, 2]]}


def test_text_format(capsys, write):
    assert main(["pdet", write("a.txt", "5 6\n10 12\n"), "--no-timing"]) == 0
    out = capsys.readouterr().out
    assert "pseudo_det: 17" in out and "duration_ms: 0" in out


def test_selftest_deterministic(capsys):
    argv = ["selftest", "--seed", "7", "--trials", "3", "--format", "json", "--no-timing"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert capsys.readouterr().out == first
    rep = json.loads(first)
    assert set(rep["verdicts"].values()) == {"pass"}


def test_selftest_budget_zero(capsys):
    code, rep = run(capsys, "selftest", "--budget", "0", "--trials", "2")
    assert code == 0
    assert set(rep["verdicts"].values()) == {"skipped-budget"}


def test_exit_code_on_failure(capsys, monkeypatch):
    import cauchy_binet.cli as cli

    monkeypatch.setattr(cli, "cmd_pdet", lambda args: ({}, {}, {"x": "fail", "y": "pass"}))
    assert main(["pdet", "unused", "--no-timing"]) == 1
    assert "[FAIL] x" in capsys.readouterr().out
