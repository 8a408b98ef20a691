import json

import pytest
from click.testing import CliRunner

from quiverdeg.cli import main
from quiverdeg.formats import (
    canonical_dumps,
    rep_to_obj,
    windows_from_obj,
    windows_to_obj,
)
from quiverdeg.windows import WindowMultiset, realize


@pytest.fixture
def runner():
    return CliRunner()


def write_windows(path, n, pairs):
    path.write_text(canonical_dumps({"n": n, "windows": [list(p) for p in pairs]}))
    return str(path)


def write_rep(path, ms):
    path.write_text(canonical_dumps(rep_to_obj(realize(ms))))
    return str(path)


def test_hom_command_on_loop_blocks(runner, tmp_path):
    a = write_rep(tmp_path / "a.json", WindowMultiset(1, [(1, 2)]))
    b = write_rep(tmp_path / "b.json", WindowMultiset(1, [(1, 3)]))
    result = runner.invoke(main, ["hom", a, b])
    assert result.exit_code == 0
    assert result.output.strip() == "2"


def test_hom_command_accepts_windows_files(runner, tmp_path):
    a = write_windows(tmp_path / "a.json", 2, [(1, 4)])
    b = write_windows(tmp_path / "b.json", 2, [(2, 3)])
    result = runner.invoke(main, ["hom", a, b])
    assert result.exit_code == 0
    assert result.output.strip() == "1"


def test_ext_command_no_arrow_quiver(runner, tmp_path):
    obj = {
        "quiver": {"vertex_count": 2, "arrows": []},
        "dims": [1, 1],
        "matrices": {},
    }
    path = tmp_path / "r.json"
    path.write_text(json.dumps(obj))
    result = runner.invoke(main, ["ext", str(path), str(path)])
    assert result.exit_code == 0
    assert result.output.strip() == "0"


def test_euler_command_kronecker(runner, tmp_path):
    obj = {
        "vertex_count": 2,
        "arrows": [
            {"id": "x", "source": 1, "target": 2},
            {"id": "y", "source": 1, "target": 2},
        ],
    }
    path = tmp_path / "q.json"
    path.write_text(json.dumps(obj))
    result = runner.invoke(main, ["euler", str(path), "--d", "1,0", "--e", "0,1"])
    assert result.exit_code == 0
    assert result.output.strip() == "-2"


def test_realize_then_decompose_round_trip(runner, tmp_path):
    wfile = write_windows(tmp_path / "w.json", 2, [(2, 5), (1, 1)])
    realized = runner.invoke(main, ["realize", wfile])
    assert realized.exit_code == 0
    rep_path = tmp_path / "rep.json"
    rep_path.write_text(realized.output)
    decomposed = runner.invoke(main, ["decompose", str(rep_path)])
    assert decomposed.exit_code == 0
    ms = windows_from_obj(json.loads(decomposed.output))
    assert ms == WindowMultiset(2, [(2, 5), (1, 1)])


def test_decompose_jordan_file(runner, tmp_path):
    obj = {
        "quiver": {
            "vertex_count": 1,
            "arrows": [{"id": "a1", "source": 1, "target": 1}],
        },
        "dims": [3],
        "matrices": {"a1": [[0, 1, 0], [0, 0, 0], [0, 0, 0]]},
    }
    path = tmp_path / "jordan.json"
    path.write_text(json.dumps(obj))
    result = runner.invoke(main, ["decompose", str(path)])
    assert result.exit_code == 0
    assert json.loads(result.output) == {"n": 1, "windows": [[1, 1], [1, 2]]}


def test_decompose_non_nilpotent_exits_3(runner, tmp_path):
    obj = {
        "quiver": {
            "vertex_count": 1,
            "arrows": [{"id": "a1", "source": 1, "target": 1}],
        },
        "dims": [1],
        "matrices": {"a1": [[1]]},
    }
    path = tmp_path / "unit.json"
    path.write_text(json.dumps(obj))
    result = runner.invoke(main, ["decompose", str(path)])
    assert result.exit_code == 3


def test_decompose_non_cyclic_exits_2(runner, tmp_path):
    obj = {
        "quiver": {
            "vertex_count": 2,
            "arrows": [
                {"id": "x", "source": 1, "target": 2},
                {"id": "y", "source": 1, "target": 2},
            ],
        },
        "dims": [0, 0],
        "matrices": {"x": [], "y": []},
    }
    path = tmp_path / "kron.json"
    path.write_text(json.dumps(obj))
    result = runner.invoke(main, ["decompose", str(path)])
    assert result.exit_code == 2


def test_degenerates_and_codim_known_pair(runner, tmp_path):
    m = write_windows(tmp_path / "m.json", 2, [(1, 4)])
    nn = write_windows(tmp_path / "n.json", 2, [(1, 2), (2, 3)])
    assert runner.invoke(main, ["degenerates", m, nn]).output.strip() == "true"
    assert runner.invoke(main, ["codim", m, nn]).output.strip() == "2"
    reversed_ = runner.invoke(main, ["degenerates", nn, m])
    assert reversed_.output.strip() == "false"
    codim_reversed = runner.invoke(main, ["codim", nn, m])
    assert codim_reversed.exit_code == 4


def test_codim_of_equal_inputs_is_zero(runner, tmp_path):
    m = write_windows(tmp_path / "m.json", 2, [(1, 2)])
    assert runner.invoke(main, ["degenerates", m, m]).output.strip() == "true"
    assert runner.invoke(main, ["codim", m, m]).output.strip() == "0"


def test_classify_worked_examples(runner, tmp_path):
    m1 = write_windows(tmp_path / "m1.json", 2, [(1, 4)])
    n1 = write_windows(tmp_path / "n1.json", 2, [(1, 2), (2, 3)])
    assert runner.invoke(main, ["classify", m1, n1]).output.strip() == "Reg"
    m2 = write_windows(tmp_path / "m2.json", 2, [(1, 1), (2, 8)])
    n2 = write_windows(tmp_path / "n2.json", 2, [(1, 3), (2, 6)])
    trace_path = tmp_path / "trace.json"
    result = runner.invoke(main, ["classify", m2, n2, "--trace", str(trace_path)])
    assert result.exit_code == 0
    assert result.output.strip() == "A1"
    trace = json.loads(trace_path.read_text())
    assert trace["result"] == "A1"
    assert trace["start_codim"] == 2
    assert [s["kind"] for s in trace["steps"]] == [
        "socle",
        "socle",
        "top",
        "relabel",
        "terminal",
    ]
    for step in trace["steps"]:
        assert set(step) >= {"kind", "m", "n", "codim"}


def test_classify_out_of_scope_exits_5(runner, tmp_path):
    m = write_windows(tmp_path / "m.json", 1, [(1, 5)])
    nn = write_windows(tmp_path / "n.json", 1, [(1, 2), (1, 3)])
    result = runner.invoke(main, ["classify", m, nn])
    assert result.exit_code == 5


def test_classify_not_a_degeneration_exits_4(runner, tmp_path):
    m = write_windows(tmp_path / "m.json", 2, [(1, 2), (2, 3)])
    nn = write_windows(tmp_path / "n.json", 2, [(1, 4)])
    result = runner.invoke(main, ["classify", m, nn])
    assert result.exit_code == 4


def test_hasse_dot_annotated(runner):
    result = runner.invoke(
        main, ["hasse", "--n", "1", "--dim", "2", "--annotate"]
    )
    assert result.exit_code == 0
    assert result.output.count("->") == 1
    assert 'label="c=2, A1"' in result.output


def test_hasse_json_three_nodes(runner):
    result = runner.invoke(main, ["hasse", "--n", "2", "--dim", "1,1", "--format", "json"])
    assert result.exit_code == 0
    obj = json.loads(result.output)
    assert len(obj["nodes"]) == 3


def test_hasse_singleton(runner):
    result = runner.invoke(main, ["hasse", "--n", "1", "--dim", "1"])
    assert result.exit_code == 0
    assert "->" not in result.output


def test_hasse_bad_dims_exits_2(runner):
    assert runner.invoke(main, ["hasse", "--n", "2", "--dim", "1"]).exit_code == 2
    assert runner.invoke(main, ["hasse", "--n", "1", "--dim", "x"]).exit_code == 2


def test_hasse_output_file_and_determinism(runner, tmp_path):
    out1 = tmp_path / "one.dot"
    out2 = tmp_path / "two.dot"
    for out in (out1, out2):
        result = runner.invoke(
            main,
            ["hasse", "--n", "2", "--dim", "2,1", "--annotate", "-o", str(out)],
        )
        assert result.exit_code == 0
    assert out1.read_text() == out2.read_text()


def test_parse_error_names_field(runner, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"n": 2, "windows": [[3, 1]]}))
    result = runner.invoke(main, ["degenerates", str(path), str(path)])
    assert result.exit_code == 2
    assert "windows" in result.output


def test_missing_file_exits_2(runner):
    result = runner.invoke(main, ["codim", "nope.json", "nada.json"])
    assert result.exit_code == 2


def test_matrix_floats_rejected(runner, tmp_path):
    obj = {
        "quiver": {
            "vertex_count": 1,
            "arrows": [{"id": "a1", "source": 1, "target": 1}],
        },
        "dims": [1],
        "matrices": {"a1": [[0.5]]},
    }
    path = tmp_path / "f.json"
    path.write_text(json.dumps(obj))
    result = runner.invoke(main, ["decompose", str(path)])
    assert result.exit_code == 2
    assert "a1" in result.output


def test_rep_file_round_trips_byte_stably(runner, tmp_path):
    ms = WindowMultiset(2, [(1, 3), (2, 2)])
    text = canonical_dumps(rep_to_obj(realize(ms)))
    path = tmp_path / "rep.json"
    path.write_text(text)
    realized = runner.invoke(main, ["realize", str(write_windows(tmp_path / "w.json", 2, [(1, 3), (2, 2)]))])
    assert realized.output == text


def test_windows_emitted_canonical_and_sorted(runner, tmp_path):
    path = write_windows(tmp_path / "w.json", 2, [(3, 6), (0, 1)])
    realized = runner.invoke(main, ["realize", path])
    rep_path = tmp_path / "rep.json"
    rep_path.write_text(realized.output)
    decomposed = runner.invoke(main, ["decompose", str(rep_path)])
    assert json.loads(decomposed.output) == {"n": 2, "windows": [[1, 4], [2, 3]]}


def test_scan_small_summary(runner):
    result = runner.invoke(main, ["scan", "--max-n", "1", "--max-dim", "4"])
    assert result.exit_code == 0
    assert "no unresolved pairs" in result.output
    assert "no C-type labels emitted" in result.output
    assert "TOTAL" in result.output


def test_scan_deterministic(runner):
    one = runner.invoke(main, ["scan", "--max-n", "2", "--max-dim", "3"])
    two = runner.invoke(main, ["scan", "--max-n", "2", "--max-dim", "3"])
    assert one.output == two.output
