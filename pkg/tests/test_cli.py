import io
import json
import subprocess
import sys

import pytest

from zonecover.cli import run
from zonecover.formats import graph_to_text, parse_pcube
from zonecover.graph import complete_graph, cycle_graph, path_graph, random_tree
from zonecover.pcube import embed_graph, zone_classes


def call(argv, stdin="", monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def cli(monkeypatch, capsys):
    def go(argv, stdin=""):
        return call(argv, stdin, monkeypatch, capsys)
    return go


def report(out):
    data = json.loads(out)
    assert set(data) == {"input", "result", "elapsed_ms", "seed"}
    return data["result"]


def gen(cli, *args):
    code, out, _ = cli(["gen", *args])
    assert code == 0
    return out


@pytest.mark.parametrize("kind,n,size", [("hypercube", "3", 1), ("star", "5", 5), ("permutohedron", "4", 3)])
def test_pipe_examples(cli, kind, n, size):
    text = gen(cli, kind, n)
    code, out, _ = cli(["cover", "--method", "exact"], text)
    assert code == 0 and report(out)["size"] == size


def test_pipe_through_processes():
    gen_p = subprocess.run([sys.executable, "-m", "zonecover", "gen", "hypercube", "3"],
                           capture_output=True, text=True, check=True)
    cov = subprocess.run([sys.executable, "-m", "zonecover", "cover", "--method", "exact"],
                         input=gen_p.stdout, capture_output=True, text=True)
    assert cov.returncode == 0
    assert json.loads(cov.stdout)["result"]["size"] == 1


def test_greedy_and_exact_certificates_check(cli):
    text = gen(cli, "permutohedron", "4")
    sizes = {}
    for method in ("exact", "greedy", "independent-complement"):
        code, out, _ = cli(["cover", "--method", method], text)
        res = report(out)
        sizes[method] = res["size"]
        code, out, _ = cli(["check-cover", "--zones", ",".join(map(str, res["zones"]))], text)
        assert report(out)["cover"] is True
    assert sizes["greedy"] >= sizes["exact"] and sizes["independent-complement"] >= sizes["exact"]


def test_check_cover_reports_uncovered(cli):
    text = gen(cli, "star", "4")
    code, out, _ = cli(["check-cover", "--zones", "0 1 2"], text)
    res = report(out)
    assert code == 0 and res["cover"] is False and res["first_uncovered"] is not None


@pytest.mark.parametrize("args", [
    ["hypercube", "3"], ["star", "4"], ["permutohedron", "3"], ["tree-random", "6", "2"],
])
def test_gen_roundtrips_through_recognize(cli, args):
    text = gen(cli, *args)
    code, out, _ = cli(["recognize", "--output", "plain"], text)
    assert code == 0
    if text.startswith("graph"):
        text = out
    pc = parse_pcube(text)
    again = parse_pcube(out)
    labels, _ = embed_graph(pc.hamming_graph())
    assert zone_classes(labels) == zone_classes(pc.labels)
    assert again.n == pc.n and again.dim == pc.dim


def test_gen_from_files(cli, tmp_path):
    gfile = tmp_path / "c4.txt"
    gfile.write_text(graph_to_text(cycle_graph(4)))
    assert parse_pcube(gen(cli, "flipgraph", str(gfile))).n == 14
    pfile = tmp_path / "p.txt"
    pfile.write_text("poset 3 2\n0 2\n1 2\n")
    assert parse_pcube(gen(cli, "lattice", str(pfile))).n == 5
    roles = tmp_path / "roles.json"
    pc = parse_pcube(gen(cli, "medianize", str(gfile), "--roles", str(roles)))
    assert pc.n == 1 + 4 + 4
    assert json.loads(roles.read_text())["roles"][0] == ["x"]
    lfile = tmp_path / "l.txt"
    lfile.write_text(gen(cli, "lines-random", "4", "7"))
    assert parse_pcube(gen(cli, "dual-lines", str(lfile))).n == 11
    hfile = tmp_path / "h.txt"
    hfile.write_text("hyperplanes 4 3\n1 0 0 0\n0 1 0 0\n0 0 1 0\n1 1 1 1\n")
    assert parse_pcube(gen(cli, "dual-hyperplanes", str(hfile))).n == 15


def test_graph_commands(cli):
    k4 = graph_to_text(complete_graph(4))
    code, out, _ = cli(["min-guard"], k4)
    assert report(out)["size"] == 3
    code, out, _ = cli(["min-cut"], k4)
    assert report(out)["size"] == 3
    code, out, _ = cli(["chordal", "--compare"], k4)
    res = report(out)
    assert res["chordal"] and res["min_cut_size"] == res["min_guard_size"] == 3
    code, out, _ = cli(["guard-check", "--edges", "0-1,0-2,0-3"], k4)
    assert report(out)["guarding"] is True
    code, out, _ = cli(["guard-check", "--edges", "0 1", "--method", "enumerate"], k4)
    assert report(out)["guarding"] is False


def test_guard_check_witness(cli):
    code, out, _ = cli(["guard-check", "--edges", "0"], graph_to_text(cycle_graph(4)))
    res = report(out)
    assert res["guarding"] is False and len(res["witness_orientation"]) == 4


def test_wheel_blob_guard_comment(cli):
    text = gen(cli, "wheel-blob", "4", "3")
    guard = text.strip().splitlines()[-1].split()[2:]
    code, out, _ = cli(["guard-check", "--edges", " ".join(guard)], text)
    assert report(out)["guarding"] is True


def test_poset_commands(cli):
    text = "poset 4 2\n0 1\n2 3\n"
    code, out, _ = cli(["fibre"], text)
    assert report(out)["size"] == 2
    code, out, _ = cli(["guard-poset"], text)
    assert report(out)["downsets"] == 9
    code, out, _ = cli(["antichains"], text)
    assert report(out)["nontrivial"] == 4


def test_tree_cover(cli):
    code, out, _ = cli(["tree-cover"], graph_to_text(path_graph(4)))
    res = report(out)
    assert res["size"] == 2 and res["max_matching"] == 2


def test_exit_codes(cli):
    code, _, err = cli(["cover"], "pcube 2 2\n00\n")
    assert code == 2 and json.loads(err)["exit"] == 2
    code, _, err = cli(["cover", "--budget", "0"], gen(cli, "hypercube", "2"))
    assert code == 1 and json.loads(err)["error"] == "BudgetInfeasible"
    code, _, err = cli(["cover", "--node-cap", "1"], gen(cli, "permutohedron", "4"))
    assert code == 3
    code, _, err = cli(["min-guard", "--method", "enumerate", "--cap", "10"], graph_to_text(complete_graph(5)))
    assert code == 3
    code, _, err = cli(["recognize"], graph_to_text(complete_graph(3)))
    assert code == 1 and json.loads(err)["error"] == "NotBipartite"
    code, _, err = cli(["cover", "/nonexistent/file"])
    assert code == 2
    code, _, err = cli(["tree-cover"], graph_to_text(cycle_graph(4)))
    assert code == 1


def test_usage_errors_exit_2(cli):
    with pytest.raises(SystemExit) as exc:
        run(["cover", "--method", "magic"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run(["cover", "--threads", "0"])
    assert exc.value.code == 2


def test_deterministic_output(cli):
    outs = set()
    for threads in ("1", "4"):
        text = gen(cli, "tree-random", "12", "--seed", "5")
        code, out, _ = cli(["cover", "--no-timing", "--seed", "5", "--threads", threads], text)
        outs.add(out)
    assert len(outs) == 1
    a = gen(cli, "lines-random", "5", "--seed", "9")
    b = gen(cli, "lines-random", "5", "--seed", "9")
    assert a == b != gen(cli, "lines-random", "5", "--seed", "10")


def test_output_file(cli, tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = cli(["cover", "-o", str(target)], gen(cli, "hypercube", "2"))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["result"]["size"] == 1


def test_graph_input_is_recognized_for_cover(cli):
    code, out, _ = cli(["cover"], graph_to_text(random_tree(8, 1)))
    assert code == 0 and report(out)["size"] >= 4
