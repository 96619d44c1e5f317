import json

import pytest
from hypothesis import given, settings

from hyperline import (
    HypergraphParseError,
    emit,
    parse_text,
    power_hypergraph,
    PowerParams,
)
from hyperline.cli import main

import helpers
import strategies


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def same_up_to_label_order(a, b):
    return set(a.labels) == set(b.labels) and sorted(
        tuple(sorted(e)) for e in a.edge_label_sets()
    ) == sorted(tuple(sorted(e)) for e in b.edge_label_sets())


def test_parse_trio(trio):
    assert parse_text(helpers.TRIO_TEXT) == trio


def test_parse_comments_and_blanks():
    h = parse_text("a b\n\n# full comment line\nb c  # trailing comment\n")
    assert h.labels == ("a", "b", "c")
    assert h.edges == ((0, 1), (1, 2))


def test_parse_cardinality_one_reports_line():
    with pytest.raises(HypergraphParseError, match="cardinality-one hyperedge at line 1"):
        parse_text("1\n")


def test_parse_nested_reports_lines():
    with pytest.raises(HypergraphParseError, match="line 1 is contained in hyperedge at line 3"):
        parse_text("1 2\n# spacer\n1 2 3\n")


def test_parse_duplicate():
    with pytest.raises(HypergraphParseError, match="duplicate"):
        parse_text("a b\nb a\n")


def test_emit_round_trip(trio):
    assert parse_text(emit(trio)) == trio


def test_emit_round_trip_power_labels():
    powered = power_hypergraph(helpers.path(4), PowerParams(2, 5))
    again = parse_text(emit(powered))
    assert again.n == powered.n
    assert same_up_to_label_order(again, powered)


def test_emit_rejects_unwritable_labels():
    from hyperline import Hypergraph

    with pytest.raises(ValueError):
        emit(Hypergraph(["a b", "c"], [[0, 1]]))
    with pytest.raises(ValueError):
        emit(Hypergraph(["#a", "c"], [[0, 1]]))


@settings(deadline=None, max_examples=50)
@given(strategies.hypergraphs())
def test_round_trip_random(h):
    assert same_up_to_label_order(parse_text(emit(h)), h)


def test_cli_info_text(tmp_path, capsys):
    path = write(tmp_path, "trio.hg", helpers.TRIO_TEXT)
    assert main(["info", path]) == 0
    out = capsys.readouterr().out
    for expected in ("n: 5", "m: 3", "rank: 3", "corank: 3", "zagreb_index: 17",
                     "connected: True", "uniform: 3", "linear: False"):
        assert expected in out


def test_cli_info_json(tmp_path, capsys):
    path = write(tmp_path, "trio.hg", helpers.TRIO_TEXT)
    assert main(["info", path, "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["n"] == 5 and data["m"] == 3
    assert data["zagreb_index"] == 17
    assert data["collar"] is False


def test_cli_info_collar_and_disconnected(tmp_path, capsys):
    c4 = write(tmp_path, "c4.hg", emit(helpers.cycle(4)))
    assert main(["info", c4, "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["collar"] is True
    dis = write(tmp_path, "dis.hg", "a b\nc d\n")
    assert main(["info", dis]) == 0
    out = capsys.readouterr().out
    assert "connected: False" in out
    assert "warning" in out


def test_cli_line_edgelist(tmp_path, capsys):
    path = write(tmp_path, "trio.hg", helpers.TRIO_TEXT)
    assert main(["line", path]) == 0
    assert capsys.readouterr().out.splitlines() == ["0 1 1", "0 2 1", "1 2 2"]
    p4 = write(tmp_path, "p4.hg", emit(helpers.path(4)))
    assert main(["line", p4]) == 0
    assert capsys.readouterr().out.splitlines() == ["0 1 1", "1 2 1"]
    dis = write(tmp_path, "dis.hg", "a b\nc d\n")
    assert main(["line", dis]) == 0
    assert capsys.readouterr().out == ""


def test_cli_line_matrix_and_json(tmp_path, capsys):
    path = write(tmp_path, "trio.hg", helpers.TRIO_TEXT)
    assert main(["line", path, "--format", "matrix"]) == 0
    assert capsys.readouterr().out == "3 3\n0 1 1\n1 0 2\n1 2 0\n"
    assert main(["line", path, "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["order"] == 3
    assert {"u": 1, "v": 2, "multiplicity": 2} in data["edges"]
    assert data["vertices"][0]["edge"] == ["1", "2", "3"]


def test_cli_spectrum_line_adjacency(tmp_path, capsys):
    path = write(tmp_path, "trio.hg", helpers.TRIO_TEXT)
    assert main(["spectrum", path, "--matrix", "line-adjacency"]) == 0
    data = json.loads(capsys.readouterr().out)
    values = [e["value"] for e in data["eigenvalues"]]
    assert values == pytest.approx([2.7320508, -0.7320508, -2.0], abs=1e-6)


def test_cli_spectrum_signless_laplacian(tmp_path, capsys):
    path = write(tmp_path, "trio.hg", helpers.TRIO_TEXT)
    assert main(["spectrum", path, "--matrix", "signless-laplacian"]) == 0
    data = json.loads(capsys.readouterr().out)
    pairs = [(e["value"], e["multiplicity"]) for e in data["eigenvalues"]]
    assert [p[1] for p in pairs] == [1, 1, 1, 2]
    assert [p[0] for p in pairs] == pytest.approx(
        [5.7320508, 2.2679491, 1.0, 0.0], abs=1e-6
    )
    single = write(tmp_path, "single.hg", "a b\n")
    assert main(["spectrum", single, "--matrix", "signless-laplacian"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert [e["value"] for e in data["eigenvalues"]] == pytest.approx([2.0, 0.0])


def test_cli_check_trio(tmp_path, capsys):
    path = write(tmp_path, "trio.hg", helpers.TRIO_TEXT)
    assert main(["check", path]) == 0
    out = capsys.readouterr().out
    assert "overall: pass" in out


def test_cli_check_collar3_entry(tmp_path, capsys, collar3):
    h, _ = collar3
    path = write(tmp_path, "collar.hg", emit(h))
    assert main(["check", path, "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["passed"] is True
    byname = {e["name"]: e for e in data["checks"]}
    assert byname["collar-minus-k-eigenvalue"]["passed"] is True
    assert byname["collar-minus-k-eigenvalue"]["details"]["k"] == 3


def test_cli_check_exit_codes_on_generator_outputs(tmp_path, capsys):
    for seed in range(0, 40):
        assert main(["generate", "--n", "6", "--m", "4", "--max-card", "4",
                     "--seed", str(seed)]) == 0
        text = capsys.readouterr().out
        path = write(tmp_path, f"g{seed}.hg", text)
        assert main(["check", path]) == 0
        capsys.readouterr()


def test_cli_power_emit_and_parse(tmp_path, capsys):
    p4 = write(tmp_path, "p4.hg", emit(helpers.path(4)))
    assert main(["power", p4, "-t", "2", "-k", "5"]) == 0
    powered = parse_text(capsys.readouterr().out)
    assert powered.n == 11 and powered.m == 3


def test_cli_power_spectrum_both(tmp_path, capsys):
    p4 = write(tmp_path, "p4.hg", emit(helpers.path(4)))
    assert main(["power", p4, "-t", "2", "-k", "5", "--spectrum", "both"]) == 0
    data = json.loads(capsys.readouterr().out)

    def flat(spec):
        return [
            e["value"] for e in spec["eigenvalues"] for _ in range(e["multiplicity"])
        ]

    assert flat(data["formula"]) == pytest.approx(flat(data["direct"]), abs=1e-7)


def test_cli_power_usage_error(tmp_path, capsys):
    p4 = write(tmp_path, "p4.hg", emit(helpers.path(4)))
    assert main(["power", p4, "-t", "2", "-k", "3"]) == 2


def test_cli_collar_witness(tmp_path, capsys):
    c4 = write(tmp_path, "c4.hg", emit(helpers.cycle(4)))
    assert main(["collar", c4]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["edges"] == [0, 1, 2, 3]
    assert data["certificate"] == [1, -1, 1, -1]
    assert data["connected"] is True
    c3 = write(tmp_path, "c3.hg", emit(helpers.cycle(3)))
    assert main(["collar", c3]) == 0
    assert capsys.readouterr().out.strip() == "none"


def test_cli_collar_search(tmp_path, capsys):
    from hyperline import Hypergraph

    h = Hypergraph.from_edges([[0, 1], [1, 2], [2, 3], [3, 0], [0, 4]])
    path = write(tmp_path, "pend.hg", emit(h))
    assert main(["collar", path]) == 0
    assert capsys.readouterr().out.strip() == "none"  # pendant vertex has degree 1
    assert main(["collar", path, "--search"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["edges"] == [0, 1, 2, 3]
    assert data["certificate"] == [1, -1, 1, -1, 0]


def test_cli_generate_deterministic(capsys):
    assert main(["generate", "--n", "6", "--m", "4", "--seed", "1"]) == 0
    first = capsys.readouterr().out
    assert main(["generate", "--n", "6", "--m", "4", "--seed", "1"]) == 0
    assert capsys.readouterr().out == first
    h = parse_text(first)
    assert h.n == 6 and h.m == 4


def test_cli_generate_single_edge(capsys):
    assert main(["generate", "--n", "2", "--m", "1", "--seed", "0"]) == 0
    assert capsys.readouterr().out == "1 2\n"


def test_cli_generate_infeasible(capsys):
    assert main(["generate", "--n", "3", "--m", "7", "--max-card", "3"]) == 2


def test_cli_parse_error_exit_code(tmp_path, capsys):
    bad = write(tmp_path, "bad.hg", "1\n")
    assert main(["info", bad]) == 2
    assert "cardinality-one" in capsys.readouterr().err


def test_cli_missing_file(capsys):
    assert main(["info", "/nonexistent/x.hg"]) == 2


def test_cli_usage_errors(capsys):
    assert main(["frobnicate"]) == 2
    assert main(["power", "x.hg", "-t", "2"]) == 2  # missing -k
