import json

import pytest

from kecs.cli import main
from kecs.generators import cycle, path, random_multigraph, tree, two_cliques
from kecs.graph import parse_graph, serialize_graph


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_partition_cycle(capsys, write, tmp_path):
    f = write("c4.txt", serialize_graph(cycle(4)))
    stats = tmp_path / "stats.json"
    code, out, _ = run(capsys, "partition", "--input", f, "--k", "2", "--stats", str(stats))
    assert code == 0 and out == "0 1 2 3\n"
    data = json.loads(stats.read_text())
    assert set(data) >= {"n", "m", "k", "oracle_queries", "oracle_updates",
                         "recursion_depth", "wall_time_ms"}
    assert data["n"] == 4 and data["m"] == 4 and data["k"] == 2
    assert all(v >= 0 for v in data.values())


def test_partition_path(capsys, write):
    f = write("p3.txt", serialize_graph(path(3)))
    assert run(capsys, "partition", "--input", f, "--k", "2")[:2] == (0, "0\n1\n2\n")


def test_partition_two_cliques(capsys, write):
    f = write("tc.txt", serialize_graph(two_cliques(4, 4, 2)))
    assert run(capsys, "partition", "--input", f, "--k", "3")[1] == "0 1 2 3\n4 5 6 7\n"


def test_partition_certificate_flag_is_invisible(capsys, write):
    f = write("r.txt", serialize_graph(random_multigraph(30, 400, seed=9)))
    a = run(capsys, "partition", "--input", f, "--k", "3")[1]
    b = run(capsys, "partition", "--input", f, "--k", "3", "--no-certificate")[1]
    assert a == b


def test_partition_is_deterministic(capsys, write):
    f = write("r.txt", serialize_graph(random_multigraph(50, 120, seed=1)))
    outs = {run(capsys, "partition", "--input", f, "--k", "3")[1] for _ in range(3)}
    assert len(outs) == 1


def test_partition_errors(capsys, write):
    bad = write("bad.txt", "3\n0 1\n2 2\n")
    code, _, err = run(capsys, "partition", "--input", bad, "--k", "2")
    assert code == 2 and "line 3" in err
    good = write("ok.txt", "2\n0 1\n")
    assert run(capsys, "partition", "--input", good, "--k", "0")[0] == 2


def test_decremental_examples(capsys, write):
    g = write("c4.txt", serialize_graph(cycle(4)))
    s = write("s.txt", "d 0 1\nq 0 2\n")
    code, out, _ = run(capsys, "decremental", "--input", g, "--stream", s, "--k", "2")
    assert code == 0 and out == "0\n0\n1\n2\n3\n"

    g = write("tc.txt", serialize_graph(two_cliques(4, 4, 2)))
    s = write("s2.txt", "# cross edges only\nd 0 4\nq 0 1\nd 1 5\nq 0 4\n")
    code, out, _ = run(capsys, "decremental", "--input", g, "--stream", s, "--k", "3")
    assert out == "1\n0\n0 1 2 3\n4 5 6 7\n"


def test_decremental_bad_deletion(capsys, write):
    g = write("c4.txt", serialize_graph(cycle(4)))
    s = write("s.txt", "d 0 1\nd 0 1\n")
    code, _, err = run(capsys, "decremental", "--input", g, "--stream", s, "--k", "2")
    assert code == 2 and "line 2" in err
    s = write("s3.txt", "x 0 1\n")
    assert run(capsys, "decremental", "--input", g, "--stream", s, "--k", "2")[0] == 2


def test_decremental_matches_repeated_partition(capsys, write, tmp_path):
    import random
    rng = random.Random(5)
    g = random_multigraph(20, 60, seed=5)
    gf = write("g.txt", serialize_graph(g))
    live = g.copy()
    lines = []
    for _ in range(25):
        eid = rng.choice(live.edge_ids())
        u, v = live.endpoints(eid)
        live.delete_edge(live.edges_between(u, v)[0])
        lines.append(f"d {u} {v}")
    sf = write("s.txt", "\n".join(lines) + "\n")
    _, out, _ = run(capsys, "decremental", "--input", gf, "--stream", sf, "--k", "3")
    lf = write("live.txt", serialize_graph(live))
    _, want, _ = run(capsys, "partition", "--input", lf, "--k", "3")
    assert out == want


def test_verify(capsys, write):
    for g, k in [(cycle(4), 2), (path(3), 2), (two_cliques(4, 4, 2), 3)]:
        f = write("g.txt", serialize_graph(g))
        code, out, _ = run(capsys, "verify", "--input", f, "--k", str(k))
        assert code == 0 and out == "ok\n"
    f = write("big.txt", serialize_graph(random_multigraph(70, 100)))
    assert run(capsys, "verify", "--input", f, "--k", "3")[0] == 2
    assert run(capsys, "verify", "--input", f, "--k", "3", "--cap", "80")[0] == 0


def test_gen(capsys):
    code, out, _ = run(capsys, "gen", "--kind", "cycle", "--n", "4")
    assert code == 0 and out == "4\n0 1\n1 2\n2 3\n3 0\n"
    a = run(capsys, "gen", "--kind", "random", "--n", "10", "--m", "20", "--seed", "3")[1]
    b = run(capsys, "gen", "--kind", "random", "--n", "10", "--m", "20", "--seed", "3")[1]
    assert a == b and parse_graph(a).m == 20
    assert parse_graph(run(capsys, "gen", "--kind", "petersen")[1]).m == 15
    out = run(capsys, "gen", "--kind", "two_cliques", "--a", "4", "--b", "4", "--bridges", "2",
              "--detours", "1")[1]
    assert parse_graph(out).n == 9
    assert run(capsys, "gen", "--kind", "nope")[0] == 2
    assert run(capsys, "gen", "--kind", "cycle")[0] == 2
    assert run(capsys, "gen", "--kind", "cycle", "--n", "2")[0] == 2


def test_sparsify(capsys, write):
    t = tree(20, seed=2)
    f = write("t.txt", serialize_graph(t))
    code, out, _ = run(capsys, "sparsify", "--input", f, "--k", "2")
    assert code == 0 and out == serialize_graph(t)
    dense = random_multigraph(8, 600, seed=1)
    f = write("d.txt", serialize_graph(dense))
    assert parse_graph(run(capsys, "sparsify", "--input", f, "--k", "1")[1]).m <= 2 * 4 * 7


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "100,1e3", "--k", "3")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "n,m,k,queries,depth,ms"
    assert [row.split(",")[:3] for row in lines[1:]] == [["100", "400", "3"], ["1000", "4000", "3"]]


def test_missing_file(capsys):
    assert run(capsys, "partition", "--input", "/nonexistent", "--k", "2")[0] == 2


def test_usage_error(capsys):
    assert run(capsys, "partition")[0] == 2
