import re

import pytest

from evoc.cli import main
from evoc.config import ConfigError, parse_config, read_config_file
from evoc.engine import RunConfig
from evoc.experiments import SweepSpec
from evoc.output import read_table


def test_defaults(tmp_path):
    f = tmp_path / "empty.cfg"
    f.write_text("")
    cfg = parse_config(read_config_file(f), {})
    assert cfg == RunConfig()
    assert (cfg.world.width, cfg.world.height, cfg.world.topology.value) == (10, 10, "toroidal")
    assert cfg.change_prob == 1 / 6 and cfg.iterations == 15
    assert (cfg.weights.w_move, cfg.weights.w_sym) == (1.0, 5.0)


def test_range_error_names_key():
    with pytest.raises(ConfigError) as e:
        parse_config({"creator_fraction": "1.5"})
    assert e.value.key == "creator_fraction"


@pytest.mark.parametrize("raw,key", [({"bogus": "1"}, "bogus"), ({"width": "ten"}, "width"),
                                     ({"width": "0"}, "width"), ({"w_sym": "-1"}, "w_sym"),
                                     ({"topology": "sphere"}, "topology")])
def test_rejections_name_key(raw, key):
    with pytest.raises(ConfigError) as e:
        parse_config(raw)
    assert e.value.key == key


def test_flag_precedence(tmp_path):
    f = tmp_path / "c.cfg"
    f.write_text("# comment\nseed=7\nchange_prob = 1/6  # trailing\n")
    assert parse_config(read_config_file(f), {"seed": "42"}).seed == 42
    assert parse_config(read_config_file(f), {}).seed == 7


def test_sweep_config():
    spec, threads = parse_config({"invent_rates": "0.5,1", "runs_per_cell": "3", "threads": "2"},
                                 kind="sweep")
    assert isinstance(spec, SweepSpec)
    assert spec.invent_rates == (0.5, 1.0) and spec.runs_per_cell == 3 and threads == 2
    with pytest.raises(ConfigError) as e:
        parse_config({"invent_rates": "0"}, kind="sweep")
    assert e.value.key == "invent_rates"


def test_run_command(tmp_path):
    out, svg = tmp_path / "s.csv", tmp_path / "s.svg"
    assert main(["run", "--creator-fraction", "0.3", "--seed", "42", "--iterations", "20",
                 "--out", str(out), "--plot", str(svg)]) == 0
    text = out.read_text()
    assert text.startswith("# evoc ")
    assert "# seed=42" in text and "# creator_fraction=0.3" in text
    assert "iteration,mean_fitness,max_fitness,diversity,invention_adoptions," \
           "imitation_adoptions" in text
    assert len(read_table(out)) == 21
    polylines = re.findall(r'points="([^"]*)"', svg.read_text())
    assert len(polylines) == 1 and len(polylines[0].split()) == 21


def test_output_header_reproduces_file(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    main(["run", "--creator-fraction", "0.2", "--seed", "5", "--out", str(a)])
    main(["run", "--config", str(a), "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_sweep_and_plot_commands(tmp_path):
    out, svg, div = tmp_path / "w.csv", tmp_path / "w.svg", tmp_path / "d.svg"
    args = ["sweep", "--runs-per-cell", "2", "--out", str(out), "--plot", str(svg)]
    assert main(args) == 0
    rows = read_table(out)
    assert len(rows) == 44
    polylines = re.findall(r"<polyline", svg.read_text())
    assert len(polylines) == 4
    assert all(len(p.split()) == 11 for p in re.findall(r'points="([^"]*)"', svg.read_text()))
    assert main(["plot", "--in", str(out), "--metric", "diversity", "--out", str(div)]) == 0
    assert "distinct actions" in div.read_text()


def test_fitness_table_command(tmp_path):
    out = tmp_path / "t.csv"
    assert main(["fitness-table", "--out", str(out)]) == 0
    lines = [ln for ln in out.read_text().splitlines() if not ln.startswith("#")]
    assert lines[0] == "encoding,movement,symmetry,fitness"
    assert len(lines) == 730
    assert lines[1] == "0,0,0,0.0"
    assert sum(ln.endswith(",16.0") for ln in lines) == 16


def test_bad_config_exit_code(tmp_path, capsys):
    assert main(["run", "--creator-fraction", "1.5", "--out", str(tmp_path / "x.csv")]) != 0
    assert "creator_fraction" in capsys.readouterr().err
    assert not (tmp_path / "x.csv").exists()


def test_plot_rejects_empty(tmp_path):
    f = tmp_path / "e.csv"
    f.write_text("invent_rate,creator_fraction,n_runs,mean_fitness_avg,mean_fitness_stderr,"
                 "diversity_avg,diversity_stderr\n")
    assert main(["plot", "--in", str(f), "--out", str(tmp_path / "o.svg")]) != 0
