"""Structure files, corpus integrity, and the command line workbench."""

import json

import pytest

from semiringlab.cli import main
from semiringlab.corpus import (
    boolean_semifield,
    corpus,
    corpus_entry,
    corpus_names,
    cross_product_hemiring,
)
from semiringlab.errors import StructureError
from semiringlab.fileio import ingest, ingest_doc, semimodule_to_json, structure_to_json
from semiringlab.tables import CayleyStructure, FiniteSemimodule, check_laws, self_action


# --- ingest -----------------------------------------------------------------------

def test_boolean_round_trip(tmp_path):
    doc = structure_to_json(boolean_semifield(), claims=["semiring", "entire"])
    path = tmp_path / "boolean.json"
    path.write_text(json.dumps(doc))
    loaded = ingest(path)
    assert isinstance(loaded, CayleyStructure)
    assert loaded.add == boolean_semifield().add
    assert loaded.zero == 0 and loaded.one == 1


def test_false_associativity_claim_rejected(tmp_path):
    doc = structure_to_json(cross_product_hemiring(), claims=["mul_associative"])
    path = tmp_path / "cross.json"
    path.write_text(json.dumps(doc))
    with pytest.raises(StructureError) as err:
        ingest(path)
    assert "mul_associative" in str(err.value)
    assert "(1, 1, 2)" in str(err.value)  # the minimal witness triple


def test_truncated_file_is_a_parse_error(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"name": "broken", "size": 2')
    with pytest.raises(StructureError) as err:
        ingest(path)
    assert "JSON" in str(err.value)


def test_bad_designation_rejected():
    doc = structure_to_json(boolean_semifield())
    doc["zero"] = 1
    with pytest.raises(StructureError):
        ingest_doc(doc)


def test_semimodule_round_trip(tmp_path):
    m = self_action(boolean_semifield())
    doc = semimodule_to_json(m, claims=["semiring"])
    path = tmp_path / "module.json"
    path.write_text(json.dumps(doc))
    loaded = ingest(path)
    assert isinstance(loaded, FiniteSemimodule)
    assert loaded.action == m.action


def test_semimodule_missing_fields(tmp_path):
    m = self_action(boolean_semifield())
    doc = semimodule_to_json(m)
    del doc["action"]
    with pytest.raises(StructureError):
        ingest_doc(doc)


# --- corpus integrity ----------------------------------------------------------------

def test_corpus_has_required_entries():
    names = set(corpus_names())
    assert {
        "boolean",
        "chain-3",
        "saturating-4",
        "bool3-cross",
        "austere-z6",
        "f2xy",
        "bool2",
        "lattice-4",
        "bool-c2",
    } <= names


def test_corpus_claims_verified_at_build():
    for entry in corpus():
        rep = check_laws(entry.structure)
        for claim in entry.claims:
            from semiringlab.corpus import claim_holds

            assert claim_holds(entry.structure, claim), (entry.name, claim)


def test_austere_predefinitions_reproduce_the_counterexample():
    from semiringlab.covering import semiring_avoidance
    from semiringlab.ideals import generate_ideal, is_prime, is_subtractive

    entry = corpus_entry("austere-z6")
    s = entry.structure
    target = generate_ideal(s, entry.ideals["I"])
    m1 = generate_ideal(s, entry.ideals["M1"])
    m2 = generate_ideal(s, entry.ideals["M2"])
    assert is_prime(m1)[0] and is_prime(m2)[0]
    assert not is_subtractive(m1)[0] and not is_subtractive(m2)[0]
    assert target.mask & ~(m1.mask | m2.mask) == 0
    report = semiring_avoidance(target, [m1, m2])
    assert report.verdict == "fails" and report.violated_hypothesis == "subtractivity"


def test_chain_documented_as_packed():
    entry = corpus_entry("chain-3")
    assert entry.flags["compactly_packed"] is True


# --- command line ----------------------------------------------------------------------

def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cli_laws_json(capsys):
    code, out, _ = run_cli(capsys, "laws", "boolean", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["classes"]["commutative_semiring"] is True
    assert doc["report_version"] == 1


def test_cli_spec(capsys):
    code, out, _ = run_cli(capsys, "spec", "chain-3", "--json")
    assert code == 0
    assert json.loads(out)["primes"] == [[0, 1]]


def test_cli_austere_avoid_golden(capsys):
    code, out, _ = run_cli(
        capsys,
        "avoid",
        "austere-z6",
        "--target",
        "3,4",
        "--cover",
        "3",
        "--cover",
        "4",
        "--mode",
        "semiring",
        "--json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "fails"
    assert doc["violated_hypothesis"] == "subtractivity"


def test_cli_mccoy_golden(capsys):
    code, out, _ = run_cli(
        capsys,
        "mccoy",
        "f2xy",
        "--target",
        "1,2",
        "--cover",
        "2",
        "--cover",
        "1",
        "--cover",
        "3",
        "--json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["exponent"] == 2 and doc["efficient"] is True


def test_cli_quotient(capsys):
    code, out, _ = run_cli(capsys, "quotient", "saturating-4", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["size"] == 2 and doc["kasch"] and doc["semilocal"]


def test_cli_zdiv_with_slice(capsys):
    code, out, _ = run_cli(capsys, "zdiv", "chain-3", "--degree-cap", "1", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["zero_divisors"] == [0, 1]
    assert doc["slice"]["verdict"] == "holds"


def test_cli_ingest_error_exit_code(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{")
    code, _, err = run_cli(capsys, "ingest", str(path))
    assert code == 2
    assert "input error" in err


def test_cli_unknown_scope_exit_code(capsys):
    code, _, err = run_cli(capsys, "verify-all", "--scope", "missing")
    assert code == 2


def test_cli_empty_scope_is_empty_report(capsys):
    code, out, _ = run_cli(capsys, "verify-all", "--scope", "", "--json")
    assert code == 0
    assert json.loads(out)["tallies"]["checks"] == 0


def test_cli_corpus_listing(capsys):
    code, out, _ = run_cli(capsys, "corpus", "--json")
    assert code == 0
    doc = json.loads(out)
    assert {row["name"] for row in doc["entries"]} >= {"boolean", "austere-z6"}


def test_cli_verify_scope_runs_clean(capsys):
    code, out, _ = run_cli(capsys, "verify-all", "--scope", "boolean", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["tallies"]["failed"] == 0
    assert doc["tallies"]["checks"] > 0
