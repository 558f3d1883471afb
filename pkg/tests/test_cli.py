import io
import json

import cutbounds as cb
from cutbounds.cli import main


def run_cli(args):
    out = io.StringIO()
    code = main(args, out=out)
    return code, out.getvalue()


def test_bounds_table_c5(tmp_path):
    path = tmp_path / "c5.graph"
    path.write_text(cb.save_graph(cb.cycle(5)))
    code, text = run_cli(["bounds", "--input", str(path), "--trials", "16"])
    assert code == 0
    assert "poljak_turzik" in text and "3.500000" in text
    assert "girth_layers" in text and "4.000000" in text
    assert "eight_elevenths" in text and "3.636364" in text


def test_bounds_k4_inapplicable_rows():
    code, text = run_cli(["bounds", "--generate", "complete", "4", "--trials", "8"])
    assert code == 0
    assert "inapplicable" in text
    assert "girth" in text


def test_bounds_json_lines_round_trip():
    code, text = run_cli(["bounds", "--generate", "cycle", "5",
                          "--trials", "16", "--format", "json-lines"])
    assert code == 0
    rows = [json.loads(line) for line in text.strip().splitlines()]
    names = {r["name"] for r in rows}
    assert {"poljak_turzik", "matching", "girth_layers"} <= names
    for r in rows:
        if not r.get("skipped"):
            assert json.loads(json.dumps(r)) == r
            assert set(r["cut"]) <= {"0", "1"}


def test_bounds_deterministic_output():
    args = ["bounds", "--generate", "petersen", "--trials", "16",
            "--seed", "7", "--format", "json-lines"]
    assert run_cli(args) == run_cli(args)


def test_bounds_petersen_c3_matching_vizing():
    code, text = run_cli(["bounds", "--generate", "petersen_c3", "10", "1",
                          "--trials", "8", "--format", "json-lines"])
    assert code == 0
    rows = {r["name"]: r for r in map(json.loads, text.strip().splitlines())}
    assert rows["matching_vizing"]["bound_value"] == 56.0
    assert rows["matching_vizing"]["cut_weight"] == 56.0


def test_generate_star_and_reload(tmp_path):
    path = tmp_path / "k7.graph"
    code, _ = run_cli(["generate", "star_counterexample", "1", "6",
                       "--output", str(path)])
    assert code == 0
    g = cb.load_graph(path.read_text())
    assert g.n == 7 and g.m == 21 and g.total_weight == 21.0


def test_generate_to_stdout():
    code, text = run_cli(["generate", "cycle", "5"])
    assert code == 0
    assert cb.load_graph(text) == cb.load_graph(cb.save_graph(cb.cycle(5)))


def test_oracle_commands():
    code, text = run_cli(["oracle", "max-cut", "--generate", "cycle", "5"])
    assert code == 0 and "max_cut = 4" in text
    code, text = run_cli(["oracle", "five-cycle-cover", "--generate", "petersen"])
    assert code == 0 and "five_cycle_cover = 3" in text
    code, text = run_cli(["oracle", "max-induced-bipartite", "--generate",
                          "complete", "4", "--format", "json-lines"])
    assert code == 0
    assert json.loads(text)["value"] == 2


def test_oracle_size_guard_exit():
    code, _ = run_cli(["oracle", "max-dfs-tree", "--generate", "cycle", "20"])
    assert code == 2


def test_verify_random_sweep():
    code, text = run_cli(["verify", "--random", "10", "--max-n", "12"])
    assert code == 0
    assert "all sound" in text


def test_verify_single_instance():
    code, text = run_cli(["verify", "--generate", "petersen_c3", "10", "1"])
    assert code == 0


def test_conjecture_command():
    code, text = run_cli(["conjecture", "--generate", "petersen_c3", "10", "1",
                          "--format", "json-lines"])
    assert code == 0
    row = json.loads(text.strip().splitlines()[0])
    assert row["matching_ratio"] == 0.6
    assert row["flags"] == []


def test_bad_input_exit_codes(tmp_path):
    bad = tmp_path / "bad.graph"
    bad.write_text("p 2 1\ne 0 0 1\n")
    code, _ = run_cli(["bounds", "--input", str(bad)])
    assert code == 2
    code, _ = run_cli(["bounds", "--input", str(tmp_path / "missing.graph")])
    assert code == 2
    code, _ = run_cli(["bounds", "--generate", "nope"])
    assert code == 2
    code, _ = run_cli(["bounds"])  # no input source
    assert code == 2
