import pytest

from planarcut.cli import main, parse_size
from planarcut.generators import named
from planarcut.io import format_graph, write_graph


@pytest.fixture
def files(tmp_path):
    out = {}
    for name in ("octahedron", "antiprism(4)"):
        path = tmp_path / (name.replace("(", "").replace(")", "") + ".g")
        write_graph(path, *named(name))
        out[name] = str(path)
    G, _ = named("octahedron")
    bare = tmp_path / "bare.g"
    write_graph(bare, G)
    out["bare"] = str(bare)
    return out


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_decide(files, capsys):
    assert run(capsys, "decide", files["octahedron"])[:2] == (1, "no\n")
    assert run(capsys, "decide", files["antiprism(4)"])[:2] == (0, "yes\n")


def test_cut_verify(files, capsys, derived):
    code, out, _ = run(capsys, "cut", files["antiprism(4)"], "--verify")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("CUT ")
    cut = sorted(map(int, lines[0].split()[1:]))
    assert len(cut) == 4 and cut in derived["antiprism4_disconnected_cuts"]
    assert lines[1] == "VERIFIED minimal disconnected"


def test_cut_null(files, capsys):
    assert run(capsys, "cut", files["octahedron"], "--validate")[:2] == (1, "NULL near-triangulation\n")


def test_cut_agrees_with_decide_without_rot_block(files, capsys):
    assert run(capsys, "cut", files["bare"])[0] == 1
    assert run(capsys, "decide", files["bare"])[0] == 1


def test_faces(files, capsys):
    code, out, _ = run(capsys, "faces", files["antiprism(4)"])
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2 and all(line.startswith("face 4: ") for line in lines)
    code, out, _ = run(capsys, "faces", "--all", files["octahedron"])
    assert len(out.splitlines()) == 8


def test_verify(files, capsys):
    code, out, _ = run(capsys, "verify", files["antiprism(4)"], "1,3,5,7")
    assert code == 0
    assert "minimal yes" in out and "disconnected yes" in out
    assert "PART 1 5" in out and "SIDE 2 6" in out
    code, out, _ = run(capsys, "verify", files["octahedron"], "1 2")
    assert code == 1 and "cut no" in out


def test_menger(files, capsys):
    code, out, _ = run(capsys, "menger", files["octahedron"], "1", "6")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "KAPPA 4" and len(lines) == 5
    assert run(capsys, "menger", files["octahedron"], "1", "1")[0] == 2


def test_oracle(files, capsys):
    code, out, _ = run(capsys, "oracle", files["antiprism(4)"])
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, "oracle", files["octahedron"], "--check", "shapes")
    assert code == 0 and out.startswith("shapes: PASS")


def test_gen(tmp_path, capsys):
    target = tmp_path / "c.g"
    assert run(capsys, "gen", "--family", "carved", "--n", "40", "--faces", "2", "--seed", "3", "-o", str(target))[0] == 0
    code, out, _ = run(capsys, "gen", "--family", "carved", "--n", "40", "--faces", "2", "--seed", "3")
    assert out == target.read_text()
    code, out, _ = run(capsys, "gen", "--family", "named", "--name", "octahedron")
    assert out.endswith(format_graph(*named("octahedron")))
    assert run(capsys, "gen", "--family", "named")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["gen", "--family", "named", "--n", "5", "--name", "octahedron"])
    assert info.value.code == 2


def test_bench_format(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "200,400,800", "--reps", "1")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "n,ms,ratio" and len(lines) == 4
    assert lines[1].endswith(",") and lines[2].count(",") == 2
    code, out, _ = run(capsys, "bench", "--sizes", "300", "--reps", "1")
    assert out.splitlines()[0] == "n,ms"


def test_parse_errors_have_line_numbers(tmp_path, capsys):
    bad = tmp_path / "bad.g"
    bad.write_text("3 2\n1 2\n2 q\n")
    code, out, err = run(capsys, "decide", str(bad))
    assert code == 2 and "line 3" in err


def test_non_planar_and_missing_file(tmp_path, capsys):
    k5 = tmp_path / "k5.g"
    k5.write_text("5 10\n" + "".join(f"{u} {v}\n" for u in range(1, 6) for v in range(u + 1, 6)))
    assert run(capsys, "cut", str(k5))[0] == 2
    assert run(capsys, "cut", str(tmp_path / "none.g"))[0] == 2


def test_parse_size():
    assert parse_size("4096") == 4096
    assert parse_size("4k") == 4000
    assert parse_size("1M") == 1_000_000
    assert parse_size("2^12") == 4096
