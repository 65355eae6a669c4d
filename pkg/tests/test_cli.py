import json

import pytest

import specprime as sp
from specprime.cli import main
from specprime.dot import export_dot
from specprime.errors import InvalidParameter
from specprime.serialize import parse_input

RING6 = {"kind": "zmod", "n": 6}


def write_json(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


def test_parse_ring_specs():
    kind, ring, label = parse_input({"kind": "zmod", "n": 12})
    assert kind == "ring" and ring.n == 12 and label == "Z/12"
    kind, prod, _ = parse_input(
        {"kind": "product", "factors": [{"kind": "zmod", "n": 2},
                                        {"kind": "polyquot", "p": 2, "modulus": [1, 1, 1]}]})
    assert kind == "ring" and prod.n == 8
    kind, gf9, _ = parse_input({"kind": "polyquot", "p": 3, "modulus": [1, 0, 1]})
    assert gf9.n == 9


def test_parse_hom_poset_profile():
    hom_spec = {"source": {"kind": "zmod", "n": 12},
                "target": {"kind": "zmod", "n": 6},
                "map": [x % 6 for x in range(12)]}
    kind, hom, label = parse_input(hom_spec)
    assert kind == "hom" and label == "Z/12 -> Z/6"

    kind, poset, _ = parse_input({"points": ["a", "b", "c"], "leq": [[0, 1], [1, 2]]})
    assert kind == "poset" and poset.le("a", "c")

    kind, profile, _ = parse_input({"free_rank": 1, "torsion_invariants": [2]})
    assert kind == "profile" and not profile.is_torsion


def test_parse_rejects_unknown():
    with pytest.raises(InvalidParameter):
        parse_input({"kind": "mystery"})
    with pytest.raises(InvalidParameter):
        parse_input(["not", "an", "object"])
    with pytest.raises(InvalidParameter):
        parse_input({"points": ["a"], "leq": [[0, 5]]})


def test_run_job_writes_reports(tmp_path):
    job = write_json(tmp_path / "job.json", {
        "inputs": [{"kind": "zmod", "n": 12}],
        "checks": ["sprimes", "surjectivity"],
        "output": str(tmp_path / "out"),
        "formats": ["json"],
    })
    assert main(["run", job]) == 0
    lines = (tmp_path / "out" / "reports.jsonl").read_text().splitlines()
    assert len(lines) == 2
    records = [json.loads(line) for line in lines]
    assert {r["check"] for r in records} == {"sprimes", "surjectivity"}
    assert all(r["ok"] for r in records)
    per_input = json.loads((tmp_path / "out" / "input-000-Z_12.json").read_text())
    assert per_input["input"] == "Z/12"
    assert len(per_input["reports"]) == 2
    by_check = {r["check"]: r["detail"] for r in per_input["reports"]}
    assert by_check["sprimes"]["count"] == 3
    assert by_check["sprimes"]["bruteforce_oracle"] == "match"


def test_run_empty_inputs_no_artifacts(tmp_path):
    job = write_json(tmp_path / "job.json",
                     {"inputs": [], "output": str(tmp_path / "out")})
    assert main(["run", job]) == 0
    assert not (tmp_path / "out").exists()


def test_run_surfaces_invalid_parameter(tmp_path):
    job = write_json(tmp_path / "job.json", {"inputs": [{"kind": "zmod", "n": 1}]})
    assert main(["run", job]) == 1


def test_run_rejects_malformed_json(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"inputs": [}')
    assert main(["run", str(path)]) == 1
    err = capsys.readouterr().err
    assert "line 1" in err and "column" in err


def test_run_rejects_unknown_check(tmp_path):
    job = write_json(tmp_path / "job.json",
                     {"inputs": [RING6], "checks": ["no_such_check"]})
    assert main(["run", job]) == 1


def test_check_all_passes(tmp_path, capsys):
    ring = write_json(tmp_path / "ring.json", RING6)
    assert main(["check", "--all", ring]) == 0
    out = capsys.readouterr().out
    assert "PASS sprimes" in out and "FAIL" not in out


def test_check_named_subset(tmp_path, capsys):
    ring = write_json(tmp_path / "ring.json", RING6)
    assert main(["check", "--checks", "density,sprimes", ring]) == 0
    out = capsys.readouterr().out.splitlines()
    assert len(out) == 2


def test_dot_zmod6_sprimes_three_nodes_two_edges(tmp_path, capsys):
    ring = write_json(tmp_path / "ring.json", RING6)
    assert main(["dot", "--space", "sprimes", ring]) == 0
    text = capsys.readouterr().out
    assert text.count("label=") == 3
    assert text.count("->") == 2


def test_dot_field_spec_single_node(tmp_path, capsys):
    ring = write_json(tmp_path / "ring.json", {"kind": "zmod", "n": 7})
    assert main(["dot", "--space", "spec", ring]) == 0
    text = capsys.readouterr().out
    assert text.count("label=") == 1
    assert "->" not in text


def test_dot_zmod30_xspace_boolean_lattice(tmp_path, capsys):
    ring = write_json(tmp_path / "ring.json", {"kind": "zmod", "n": 30})
    assert main(["dot", "--space", "xspace", ring]) == 0
    text = capsys.readouterr().out
    assert text.count("label=") == 7
    assert text.count("->") == 9  # covers of the nonempty-subset lattice on 3 atoms


def test_dot_deterministic_bytes(tmp_path):
    ring = write_json(tmp_path / "ring.json", {"kind": "zmod", "n": 30})
    out1, out2 = tmp_path / "a.dot", tmp_path / "b.dot"
    assert main(["dot", "--space", "sprimes", ring, "-o", str(out1)]) == 0
    assert main(["dot", "--space", "sprimes", ring, "-o", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_dot_poset_xspace(tmp_path, capsys):
    poset = write_json(tmp_path / "poset.json",
                       {"points": ["a", "b"], "leq": []})
    assert main(["dot", "--space", "xspace", poset]) == 0
    assert capsys.readouterr().out.count("label=") == 3
    assert main(["dot", "--space", "spec", poset]) == 1


def test_run_renders_figures(tmp_path):
    job = write_json(tmp_path / "job.json", {
        "inputs": [RING6],
        "checks": ["sprimes"],
        "output": str(tmp_path / "out"),
        "formats": ["json", "dot", "png"],
    })
    assert main(["run", job]) == 0
    names = {p.name for p in (tmp_path / "out").iterdir()}
    for space in ("spec", "sprimes", "xspace"):
        assert f"input-000-Z_6.{space}.dot" in names
        assert f"input-000-Z_6.{space}.png" in names
    png = tmp_path / "out" / "input-000-Z_6.sprimes.png"
    assert png.stat().st_size > 1000


def test_run_mixed_inputs(tmp_path):
    job = write_json(tmp_path / "job.json", {
        "inputs": [
            RING6,
            {"points": ["a", "b", "c"], "leq": [[0, 1]]},
            {"source": {"kind": "zmod", "n": 12}, "target": {"kind": "zmod", "n": 6},
             "map": [x % 6 for x in range(12)]},
            {"free_rank": 0, "torsion_invariants": [2]},
        ],
        "output": str(tmp_path / "out"),
    })
    assert main(["run", job]) == 0
    lines = (tmp_path / "out" / "reports.jsonl").read_text().splitlines()
    kinds = {json.loads(line)["kind"] for line in lines}
    assert kinds == {"ring", "poset", "hom", "profile"}
    assert all(json.loads(line)["ok"] for line in lines)


def test_run_default_corpus_all_checks(tmp_path):
    job = write_json(tmp_path / "job.json",
                     {"inputs": "corpus", "output": str(tmp_path / "out")})
    assert main(["run", job]) == 0
    lines = (tmp_path / "out" / "reports.jsonl").read_text().splitlines()
    assert all(json.loads(line)["ok"] for line in lines)
    assert len(lines) > 500  # every corpus entry times every applicable check


def test_export_dot_validates_space():
    with pytest.raises(InvalidParameter):
        export_dot("nonsense", sp.build_zmod(6))


def test_run_oversized_poset_fails_cleanly(tmp_path):
    job = write_json(tmp_path / "job.json", {
        "inputs": [{"points": [f"p{i}" for i in range(22)], "leq": []}],
        "checks": ["closures"],
        "output": str(tmp_path / "out"),
    })
    assert main(["run", job]) == 2  # TooLarge surfaces as a failed check
    line = json.loads((tmp_path / "out" / "reports.jsonl").read_text().splitlines()[0])
    assert not line["ok"] and "TooLarge" in line["detail"]["error"]


def test_seed_env_is_tolerant(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("SPECPRIME_SEED", "not-an-int")
    ring = write_json(tmp_path / "ring.json", RING6)
    assert main(["check", "--checks", "monotonicity", ring]) == 0
    monkeypatch.setenv("SPECPRIME_SEED", "1234")
    assert main(["check", "--checks", "monotonicity", ring]) == 0


def test_run_exit_2_on_check_failure_with_witness(tmp_path, monkeypatch):
    import specprime.checks as checks

    def sabotage(ring, bruteforce_cap=16):
        raise sp.InvariantViolation("engineered failure", witness={"ring": ring.label})

    monkeypatch.setitem(checks.CHECKS_BY_KIND["ring"], "sprimes", sabotage)
    job = write_json(tmp_path / "job.json", {
        "inputs": [RING6], "checks": ["sprimes"],
        "output": str(tmp_path / "out"),
    })
    assert main(["run", job]) == 2
    witness = tmp_path / "out" / "input-000-Z_6.sprimes.witness.json"
    record = json.loads(witness.read_text())
    assert record["ok"] is False
    assert record["detail"]["witness"] == {"ring": "Z/6"}
