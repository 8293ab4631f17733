from conftest import chain_catalog

from skillplan.cli import EXIT_INFEASIBLE, EXIT_IO, EXIT_OK, EXIT_VALIDATION, main
from skillplan.model import DeviceProfile, UserProfile
from skillplan.xmlio import serialize_catalog, serialize_uda_ontology


def write_profile(path, bandwidth=10 ** 6, desired=None, max_time=10 ** 5):
    device = DeviceProfile("d1", float(bandwidth), 1, 1, 1)
    user = UserProfile("u1", desired, frozenset(), frozenset(), float(max_time))
    path.write_text(serialize_uda_ontology(device, user), encoding="utf-8")


def test_validate_ok_and_exit_codes(tmp_path, capsys):
    cat_path = tmp_path / "catalog.xml"
    cat_path.write_text(serialize_catalog(chain_catalog(3)), encoding="utf-8")
    assert main(["validate", str(cat_path)]) == EXIT_OK
    out = capsys.readouterr().out
    assert "OK: 3 subjects" in out


def test_validate_reports_violations(tmp_path, capsys):
    text = serialize_catalog(chain_catalog(2)).replace(
        'SubjId="c0"/>', 'SubjId="ghost"/>', 1)
    cat_path = tmp_path / "catalog.xml"
    cat_path.write_text(text, encoding="utf-8")
    assert main(["validate", str(cat_path)]) == EXIT_VALIDATION
    assert "dangling" in capsys.readouterr().out


def test_validate_missing_file_and_malformed(tmp_path, capsys):
    assert main(["validate", str(tmp_path / "nope.xml")]) == EXIT_IO
    bad = tmp_path / "bad.xml"
    bad.write_text("<Catalog><oops", encoding="utf-8")
    assert main(["validate", str(bad)]) == EXIT_VALIDATION


def test_plan_prints_program_and_graph(tmp_path, capsys):
    cat_path = tmp_path / "catalog.xml"
    cat_path.write_text(serialize_catalog(chain_catalog(3)), encoding="utf-8")
    profile = tmp_path / "profile.xml"
    write_profile(profile)
    graph_path = tmp_path / "graph.tsv"
    code = main(["plan", "--catalog", str(cat_path), "--profile", str(profile),
                 "--bandwidth", "100", "--target-subject", "c2",
                 "--export-graph", str(graph_path)])
    assert code == EXIT_OK
    out = capsys.readouterr().out
    lines = [ln for ln in out.splitlines() if ln and not ln.startswith("#")]
    assert [ln.split("\t")[0] for ln in lines] == ["c0", "c1", "c2"]
    assert graph_path.read_text() == "c0\tc1\nc1\tc2\n"


def test_plan_infeasible_exit_code(tmp_path, capsys):
    cat_path = tmp_path / "catalog.xml"
    cat_path.write_text(serialize_catalog(chain_catalog(2)), encoding="utf-8")
    profile = tmp_path / "profile.xml"
    write_profile(profile)
    # 0.001 kB/s = 1 B/s, below the cheapest object's 10 B/s bitrate.
    code = main(["plan", "--catalog", str(cat_path), "--profile", str(profile),
                 "--bandwidth", "0.001", "--target-subject", "c1"])
    assert code == EXIT_INFEASIBLE
    assert "infeasible" in capsys.readouterr().err


def test_simulate_session(tmp_path, capsys):
    cat_path = tmp_path / "catalog.xml"
    cat_path.write_text(serialize_catalog(chain_catalog(2)), encoding="utf-8")
    profile = tmp_path / "profile.xml"
    write_profile(profile)
    policy = tmp_path / "policy.txt"
    policy.write_text("skill chain skill\nsubject c1\n", encoding="utf-8")
    code = main(["simulate", "--catalog", str(cat_path), "--profile", str(profile),
                 "--policy-file", str(policy), "--bandwidth", "100"])
    assert code == EXIT_OK
    out = capsys.readouterr().out
    assert "Request of available skills" in out
    assert "<UDAOntology>" in out
    assert "<AcqSkill>chain skill</AcqSkill>" in out


def test_gen_corpus_matrix_and_sweep(tmp_path, capsys):
    cat_path = tmp_path / "corpus.xml"
    code = main(["gen-corpus", "--seed", "7", "--subjects", "12",
                 "--objects-per-subject", "6", "--output", str(cat_path)])
    assert code == EXIT_OK
    assert main(["validate", str(cat_path)]) == EXIT_OK
    capsys.readouterr()

    csv_path = tmp_path / "matrix.csv"
    code = main(["matrix", "--catalog", str(cat_path), "--regime", "low",
                 "--users", "10", "--output", str(csv_path)])
    assert code == EXIT_OK
    lines = csv_path.read_text().strip().splitlines()
    assert lines[0].startswith("typology,")
    assert len(lines) == 5

    code = main(["sweep", "--catalog", str(cat_path), "--points", "10,50,150",
                 "--users", "10"])
    assert code == EXIT_OK
    out = capsys.readouterr().out
    assert out.count("text-audio-video") == 3
