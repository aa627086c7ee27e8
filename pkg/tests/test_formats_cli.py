import json

import pytest

from antimagic.cli import main
from antimagic.formats import (
    ParseError,
    dumps,
    emit_dot,
    emit_labeling,
    parse_labeling,
    parse_tree,
    tree_document,
    tree_from_document,
)
from antimagic.generate import random_lobster
from antimagic.graph import OrientedLabeling, Tree, TreeError
from antimagic.lobster import orient_lobster
from antimagic.verify import verify_antimagic


def test_parse_edge_list():
    t, names = parse_tree("0 1\n1 2")
    assert t == Tree.path(3) and names == ["0", "1", "2"]


def test_parse_names_and_comments():
    t, names = parse_tree("# a star\nhub a\nhub b  # trailing\n\nhub c\n")
    assert names == ["hub", "a", "b", "c"] and t == Tree.star(3)


def test_lone_vertex():
    t, names = parse_tree("solo\n")
    assert t.n == 1 and names == ["solo"]


def test_parse_errors_carry_lines():
    with pytest.raises(ParseError) as exc:
        parse_tree("a b\nb c d\n")
    assert exc.value.line == 2
    with pytest.raises(ParseError):
        parse_tree("# nothing\n")
    with pytest.raises(ParseError) as exc:
        parse_tree('{"edges": [[0, 1]')
    assert exc.value.line == 1


def test_cycle_names_edge():
    with pytest.raises(TreeError, match="line 3: edge 'c'-'a' closes a cycle"):
        parse_tree("a b\nb c\nc a\n")


def test_disconnected_names_component():
    with pytest.raises(TreeError, match=r"smallest is \['z'\]"):
        parse_tree("a b\nb c\nz\n")


def test_json_tree():
    t, names = parse_tree('{"vertices": ["x", "y", "z"], "edges": [["x", "y"], ["y", "z"]]}')
    assert t == Tree.path(3) and names == ["x", "y", "z"]
    with pytest.raises(ParseError):
        tree_from_document({"vertices": []})


def test_tree_round_trip():
    for seed in range(100):
        t = random_lobster(15, seed=seed, relabel=True)
        back, names = parse_tree(dumps(tree_document(t)))
        assert names == [str(v) for v in range(t.n)]
        assert back == t


def test_labeling_round_trip():
    for seed in range(100):
        d = orient_lobster(random_lobster(12, seed=seed, relabel=True))
        doc = emit_labeling(d, verify_antimagic(d))
        back, names = parse_labeling(dumps(doc))
        assert names == [str(v) for v in range(d.n)] and back == d
        assert json.loads(dumps(doc)) == doc


def test_labeling_errors():
    with pytest.raises(ParseError):
        parse_labeling('{"vertices": ["a"]}')
    with pytest.raises(ParseError):
        parse_labeling({"arcs": [{"tail": "a", "head": "b"}]})


def test_dot_k2():
    dot = emit_dot(OrientedLabeling(2, [(0, 1, 1)]))
    assert dot.count("->") == 1
    assert '"0" -> "1" [label="1"];' in dot
    assert 's=-1' in dot and 's=1' in dot


# --- command line ------------------------------------------------------------


@pytest.fixture
def spider_file(tmp_path):
    f = tmp_path / "spider.txt"
    f.write_text("\n".join(f"{u} {v}" for u, v in Tree.spider(3, 2).edges) + "\n")
    return f


def test_cli_classify(spider_file, capsys):
    assert main(["classify", str(spider_file)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["class"] == "lobster" and out["decomposition"]["p"] == 4


def test_cli_orient_and_verify(spider_file, tmp_path, capsys):
    assert main(["orient", str(spider_file), "--verify"]) == 0
    text = capsys.readouterr().out
    doc = json.loads(text)
    assert doc["verdicts"]["antimagic"] and doc["bands"]["ok"]
    lab = tmp_path / "lab.json"
    lab.write_text(text)
    assert main(["verify", str(lab)]) == 0
    doc["arcs"][0]["label"] = doc["arcs"][1]["label"]
    lab.write_text(json.dumps(doc))
    assert main(["verify", str(lab)]) == 1


def test_cli_orient_dot(spider_file, capsys):
    assert main(["orient", str(spider_file), "--dot"]) == 0
    assert capsys.readouterr().out.startswith("digraph")


def test_cli_exit_codes(tmp_path, capsys):
    other = tmp_path / "other.txt"
    other.write_text("\n".join(f"{u} {v}" for u, v in Tree.spider(3, 3).edges))
    assert main(["orient", str(other)]) == 3
    bad = tmp_path / "bad.txt"
    bad.write_text("a b\nb a\n")
    assert main(["orient", str(bad)]) == 2
    assert main(["classify", str(tmp_path / "missing.txt")]) == 2
    assert main(["classify", str(other)]) == 0
    capsys.readouterr()


def test_cli_fuzz_and_enumerate(capsys, monkeypatch):
    monkeypatch.setenv("ANTIMAGIC_SEED", "11")
    assert main(["fuzz", "--count", "20", "--spine", "15"]) == 0
    assert "seeds 11.." in capsys.readouterr().out
    assert main(["enumerate", "--max-n", "6", "--oracle"]) == 0
    assert "n=6: 6/6 lobsters verified, oracle witnesses 6/6" in capsys.readouterr().out


def test_cli_fuzz_parallel_matches(capsys):
    main(["fuzz", "--count", "32", "--spine", "10", "--seed", "4"])
    a = capsys.readouterr().out
    main(["fuzz", "--count", "32", "--spine", "10", "--seed", "4", "--workers", "2"])
    assert capsys.readouterr().out == a


def test_cli_demo(capsys):
    assert main(["demo", "figure1"]) == 0
    assert capsys.readouterr().out.count("matches figure: True") == 4
