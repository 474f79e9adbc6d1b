import json
import os
import sys
import tempfile
from unittest import mock

import pytest

SRC_DIR = os.path.join(os.path.dirname(__file__), '..', 'src')
sys.path.insert(0, SRC_DIR)

import weilcid  # noqa: E402
from weilcid import (  # noqa: E402
    EXIT_INVARIANT, EXIT_OK, EXIT_TABLE_MISMATCH, EXIT_USAGE, SurveyConfig,
    analyze, compare_rows, matrix_lines, moduli, parse_fix, run, survey,
)
from weilcid_exact import InvariantViolation  # noqa: E402
from weilcid_fixtures import REFERENCE_TABLES  # noqa: E402
from weilcid_store import (  # noqa: E402
    CACHE_DIR_ENV, CacheRecord, SurveyRow, WEILCID_VERSION, cache_roundtrip,
    default_cache_path, emit, is_survey_h5, load_cache, read_records,
    read_survey_h5, write_records, write_survey_h5,
)
from weilcid_weil import from_free_coeffs, validate_weil  # noqa: E402


@pytest.fixture
def tmp_dir():
    with tempfile.TemporaryDirectory() as temp_dir:
        yield temp_dir


def truncated(name, n_max):
    table = REFERENCE_TABLES[name]
    return {free: (rank, [n for n in ns if n < n_max])
            for free, (rank, ns) in table['rows'].items()}


class TestConfig:
    def test_parse_fix(self):
        assert parse_fix("a5=0,a4=0") == {5: 0, 4: 0}
        assert parse_fix(" a3=-3 ") == {3: -3}
        assert parse_fix(None) == {}
        with pytest.raises(ValueError, match="invalid --fix"):
            parse_fix("b5=0")
        with pytest.raises(ValueError, match="invalid --fix"):
            parse_fix("a5")
        with pytest.raises(ValueError, match="invalid --fix value"):
            parse_fix("a5=x")

    def test_validate(self):
        assert SurveyConfig(2, 2, 100).validate().q == 2
        with pytest.raises(ValueError, match="prime"):
            SurveyConfig(4, 2, 100).validate()
        with pytest.raises(ValueError, match="--dim"):
            SurveyConfig(2, 1, 100).validate()
        with pytest.raises(ValueError, match="--n-max"):
            SurveyConfig(2, 2, 1).validate()
        with pytest.raises(ValueError, match="--workers"):
            SurveyConfig(2, 2, 100, workers=0).validate()
        with pytest.raises(ValueError, match="format"):
            SurveyConfig(2, 2, 100, output_format="xml").validate()
        with pytest.raises(ValueError, match="--fix a4"):
            SurveyConfig(2, 2, 100, fixed={4: 0}).validate()

    def test_moduli(self):
        assert moduli(2, 10) == [3, 5, 7, 9]
        assert moduli(3, 11) == [2, 4, 5, 7, 8, 10]


class TestSurvey:
    def test_p2_g2_below_100(self):
        rows = survey(SurveyConfig(2, 2, 100))
        assert compare_rows(rows, truncated('p2_g2', 100), complete=True) == []
        assert [r.free_coeffs for r in rows] == sorted(r.free_coeffs for r in rows)

    def test_single_row_with_fix(self):
        rows = survey(SurveyConfig(2, 2, 60, fixed={3: -1, 2: 0}))
        assert [r.as_dict() for r in rows] == [
            {"coeffs": [-1, 0], "p_rank": 1, "nonmonogenic_n": [47]}]

    def test_p3_row(self):
        rows = survey(SurveyConfig(3, 2, 500, fixed={3: -3, 2: 5}))
        assert len(rows) == 1
        assert rows[0].nonmono_n == [2, 4, 29, 488]

    def test_dimension_three_row(self):
        rows = survey(SurveyConfig(2, 3, 200, fixed={5: 0, 4: 1, 3: -3}))
        assert [(r.free_coeffs, r.p_rank, r.nonmono_n) for r in rows] == [((0, 1, -3), 3, [3, 9])]

    def test_dimension_four_row(self):
        rows = survey(SurveyConfig(2, 4, 100, fixed={7: 0, 6: 0, 5: -3, 4: 1}))
        assert len(rows) == 1
        assert rows[0].nonmono_n == [3, 9, 27]

    def test_workers_do_not_change_output(self):
        serial = survey(SurveyConfig(2, 2, 40))
        parallel = survey(SurveyConfig(2, 2, 40, workers=2))
        assert emit(serial, "json") == emit(parallel, "json")

    def test_verbose_reports_timing(self, capsys):
        survey(SurveyConfig(2, 2, 12, fixed={3: 0}, verbose=True))
        err = capsys.readouterr().err
        assert "Survey completed in" in err


class TestCache:
    def test_warm_run_matches_cold_run(self, tmp_dir):
        path = os.path.join(tmp_dir, "cache", "survey.jsonl")
        cold = survey(SurveyConfig(2, 2, 40, cache_path=path))
        with open(path) as fh:
            lines = fh.readlines()
        assert len(lines) == 19 * len(moduli(2, 40))
        with mock.patch.object(weilcid, 'splitting_report',
                               side_effect=AssertionError("recomputed")):
            warm = survey(SurveyConfig(2, 2, 40, cache_path=path))
        assert emit(cold, "json") == emit(warm, "json")

    def test_extending_n_max_only_computes_new_moduli(self, tmp_dir):
        path = os.path.join(tmp_dir, "survey.jsonl")
        survey(SurveyConfig(2, 2, 20, cache_path=path))
        before = len(read_records(path))
        rows = survey(SurveyConfig(2, 2, 40, cache_path=path))
        assert len(read_records(path)) == 19 * len(moduli(2, 40))
        assert before == 19 * len(moduli(2, 20))
        assert compare_rows(rows, truncated('p2_g2', 40), complete=True) == []

    def test_stale_version_is_recomputed(self, tmp_dir):
        path = os.path.join(tmp_dir, "survey.jsonl")
        # a wrong verdict written by another version must not be trusted
        write_records([CacheRecord(2, 1, 2, (1, 1), 3, 1, False, tool_version="0.0.1")], path)
        rows = survey(SurveyConfig(2, 2, 12, fixed={3: 1, 2: 1}, cache_path=path))
        assert rows[0].nonmono_n == [3, 9]
        assert load_cache(path)[(2, 1, 2, (1, 1), 3)].cid is True

    def test_roundtrip(self, tmp_dir):
        path = os.path.join(tmp_dir, "c.jsonl")
        records = [CacheRecord(2, 1, 2, (0, 1), n, n - 1, n % 2 == 1) for n in (3, 5, 7)]
        assert cache_roundtrip(records, path) == records

    def test_last_writer_wins(self, tmp_dir):
        path = os.path.join(tmp_dir, "c.jsonl")
        write_records([CacheRecord(2, 1, 2, (0, 1), 3, 4, False)], path)
        write_records([CacheRecord(2, 1, 2, (0, 1), 3, 4, True)], path)
        records = read_records(path)
        assert len(records) == 1
        assert records[(2, 1, 2, (0, 1), 3)].cid is True

    def test_corrupt_line_is_skipped(self, tmp_dir, capsys):
        path = os.path.join(tmp_dir, "c.jsonl")
        good = [CacheRecord(2, 1, 2, (0, 1), n, 2, True) for n in (3, 5)]
        with open(path, "w") as fh:
            fh.write(good[0].to_json() + "\n")
            fh.write('{"p": 2, "g": 2, "coeffs": [0,\n')
            fh.write(good[1].to_json() + "\n")
        records = read_records(path)
        assert sorted(records.values(), key=lambda r: r.n) == good
        assert "skipping corrupt cache line 2" in capsys.readouterr().err

    def test_missing_m_defaults_to_one(self):
        rec = CacheRecord.from_dict({"p": 2, "g": 2, "coeffs": [0, 1], "n": 3, "ord": 2,
                                     "cid": True, "tool_version": WEILCID_VERSION})
        assert rec.key() == (2, 1, 2, (0, 1), 3)

    def test_default_path(self, monkeypatch, tmp_dir):
        monkeypatch.setenv(CACHE_DIR_ENV, tmp_dir)
        assert default_cache_path(3, 1, 2) == os.path.join(tmp_dir, "survey_p3_m1_g2.jsonl")
        monkeypatch.delenv(CACHE_DIR_ENV)
        assert default_cache_path(3, 1, 2).endswith(
            os.path.join(".cache", "weilcid", "survey_p3_m1_g2.jsonl"))


class TestEmit:
    ROWS = [SurveyRow((-1, 0), 1, [47]), SurveyRow((1, 1), 2, [3, 9])]

    def test_json(self):
        assert emit([], "json") == "[]"
        docs = json.loads(emit(self.ROWS, "json"))
        assert docs[1] == {"coeffs": [1, 1], "p_rank": 2, "nonmonogenic_n": [3, 9]}

    def test_json_with_note(self):
        doc = json.loads(emit(self.ROWS, "json", note="assumed"))
        assert doc["note"] == "assumed"
        assert len(doc["rows"]) == 2

    def test_csv(self):
        lines = emit(self.ROWS, "csv").splitlines()
        assert lines[0] == "a_3,a_2,p_rank,nonmono_n"
        assert lines[2] == "1,1,2,3;9"
        assert emit(self.ROWS, "csv", note="assumed").startswith("# assumed\n")

    def test_markdown(self):
        lines = emit(self.ROWS, "markdown").splitlines()
        assert lines[0] == "a_3 | a_2 | p-rank | non-monogenic n"
        assert lines[1] == "--- | --- | --- | ---"
        assert lines[3] == "1 | 1 | 2 | 3, 9"

    def test_empty_table_uses_dimension(self):
        assert emit([], "csv", g=3).splitlines() == ["a_5,a_4,a_3,p_rank,nonmono_n"]

    def test_unknown_format(self):
        with pytest.raises(ValueError, match="unknown output format"):
            emit(self.ROWS, "xml")


class TestH5Export:
    def test_roundtrip(self, tmp_dir):
        path = os.path.join(tmp_dir, "survey.h5")
        rows = [SurveyRow((0, 1, -3), 3, [3, 9]), SurveyRow((-2, 2, -2), 0, []),
                SurveyRow((0, 0, -7), 3, [5, 7, 11])]
        write_survey_h5(path, rows, 2, 1, 3, 200, fixed={5: 0}, note="assumed")
        assert is_survey_h5(path)
        attrs, back = read_survey_h5(path)
        assert back == rows
        assert int(attrs["g"]) == 3
        assert json.loads(attrs["fix"]) == {"5": 0}
        assert attrs["hypothesis_note"] == "assumed"

    def test_not_a_survey(self, tmp_dir):
        path = os.path.join(tmp_dir, "plain.txt")
        with open(path, "w") as fh:
            fh.write("hello")
        assert not is_survey_h5(path)


class TestAnalyze:
    def test_x4_plus_9(self):
        doc = analyze(3, 1, 2, (0, 0), [2, 5, 10])
        assert doc["status"] == "ok"
        assert doc["poly"] == "x^4 + 9"
        assert doc["p_rank"] == 0
        assert doc["disc_f"] == 186624
        assert doc["order_discriminant"] == 20736
        assert doc["applicable"] == {"2": "unknown", "5": "certain"}
        assert [r["inertia_degree"] for r in doc["reports"]] == [4, 4, 4]
        assert [r["cid"] for r in doc["reports"]] == [True, True, True]
        assert doc["reports"][0]["prime_count"] == 180
        assert doc["reports"][0]["monogenic_degree_bound"] == 72

    def test_dimension_three(self):
        doc = analyze(2, 1, 3, (-2, 2, -2), [3])
        assert doc["reports"][0]["inertia_degree"] == 20
        assert doc["reports"][0]["cid"] is True

    def test_not_weil(self):
        assert analyze(2, 1, 2, (0, 5), [3])["status"] == "not a Weil polynomial"

    def test_reducible(self):
        assert analyze(2, 1, 2, (-4, 8), [3])["status"] == "reducible"

    def test_bad_modulus_reported_per_entry(self):
        doc = analyze(3, 1, 2, (0, 0), [3, 5])
        assert "error" in doc["reports"][0]
        assert doc["reports"][1]["inertia_degree"] == 4

    def test_matrix_lines(self):
        w = validate_weil(from_free_coeffs(3, 1, 2, (0, 0)))
        lines = matrix_lines(w, n=2, verschiebung=True)
        assert lines[0].startswith("sigma mod 2")
        assert "pi^2" in lines[0]
        assert any(line.startswith("V mod 2") for line in lines)

    def test_matrix_lines_bad_modulus(self):
        w = validate_weil(from_free_coeffs(3, 1, 2, (0, 0)))
        for n in (0, 1, -4):
            with pytest.raises(ValueError, match="modulus"):
                matrix_lines(w, n=n)


class TestCli:
    def test_gsp_order(self, capsys):
        assert run(["gsp-order", "--dim", "3", "3"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "18341406720"

    def test_irred_count(self, capsys):
        assert run(["irred-count", "--p", "2", "20"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "52377"

    def test_survey_to_file(self, tmp_dir):
        out = os.path.join(tmp_dir, "rows.json")
        h5 = os.path.join(tmp_dir, "rows.h5")
        code = run(["survey", "--p", "2", "--dim", "2", "--n-max", "60",
                    "--fix", "a3=-1,a2=0", "--output", out, "--h5", h5])
        assert code == EXIT_OK
        with open(out) as fh:
            doc = json.load(fh)
        assert doc["rows"] == [{"coeffs": [-1, 0], "p_rank": 1, "nonmonogenic_n": [47]}]
        assert "note" in doc
        assert read_survey_h5(h5)[1][0].nonmono_n == [47]

    def test_survey_bad_prime(self, capsys):
        assert run(["survey", "--p", "4", "--dim", "2", "--n-max", "10"]) == EXIT_USAGE
        assert "Error:" in capsys.readouterr().err

    def test_analyze(self, capsys):
        assert run(["analyze", "--p", "3", "0", "0", "--n", "2", "5"]) == EXIT_OK
        doc = json.loads(capsys.readouterr().out)
        assert doc["analysis"]["status"] == "ok"

    def test_matrix(self, capsys):
        assert run(["matrix", "--p", "2", "--mod", "3", "--verschiebung", "-1", "0"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "sigma mod 3" in out and "V mod 3" in out

    def test_matrix_not_weil(self, capsys):
        assert run(["matrix", "--p", "2", "0", "5"]) == EXIT_USAGE
        assert "not a Weil" in capsys.readouterr().err

    def test_matrix_mod_zero(self, capsys):
        assert run(["matrix", "--p", "2", "--mod", "0", "-1", "0"]) == EXIT_USAGE
        assert "modulus must be >= 2" in capsys.readouterr().err

    def test_gsp_order_bad_dimension(self, capsys):
        assert run(["gsp-order", "--dim", "0", "5"]) == EXIT_USAGE
        assert "dimension must be >= 1" in capsys.readouterr().err

    def test_irred_count_bad_input(self, capsys):
        assert run(["irred-count", "--p", "4", "3"]) == EXIT_USAGE
        assert "p must be prime" in capsys.readouterr().err
        assert run(["irred-count", "--p", "2", "0"]) == EXIT_USAGE
        assert "degree must be >= 1" in capsys.readouterr().err

    def test_invariant_violation_exit_code(self, capsys):
        with mock.patch.object(weilcid, 'gsp_order', side_effect=InvariantViolation("boom")):
            assert run(["gsp-order", "--dim", "2", "5"]) == EXIT_INVARIANT
        assert "internal invariant violated: boom" in capsys.readouterr().err

    def test_tables_list(self, capsys):
        assert run(["tables", "--list"]) == EXIT_OK
        out = capsys.readouterr().out
        assert all(name in out for name in REFERENCE_TABLES)

    def test_tables_unknown(self, capsys):
        assert run(["tables", "--only", "nope"]) == EXIT_USAGE

    def test_tables_mismatch_exit_code(self, capsys):
        tiny = {'p': 2, 'g': 2, 'n_max': 10, 'fix': {3: 1, 2: 1}, 'complete': False,
                'rows': {(1, 1): (2, [5])}}
        with mock.patch.dict(weilcid.REFERENCE_TABLES, {'tiny': tiny}):
            assert run(["tables", "--only", "tiny"]) == EXIT_TABLE_MISMATCH
        assert "1 difference(s)" in capsys.readouterr().out

    def test_tables_match_exit_code(self, capsys):
        tiny = {'p': 2, 'g': 2, 'n_max': 10, 'fix': {3: 1, 2: 1}, 'complete': True,
                'rows': {(1, 1): (2, [3, 9])}}
        with mock.patch.dict(weilcid.REFERENCE_TABLES, {'tiny': tiny}):
            assert run(["tables", "--only", "tiny"]) == EXIT_OK
        assert "0 difference(s)" in capsys.readouterr().out

    def test_compare_rows_reports_each_kind(self):
        rows = [SurveyRow((0, 1), 2, [3]), SurveyRow((9, 9), 2, [])]
        expected = {(0, 1): (2, [3, 5]), (1, 1): (2, [3])}
        diffs = compare_rows(rows, expected, complete=True)
        assert any(d.startswith("row (0, 1)") for d in diffs)
        assert "missing row (1, 1)" in diffs
        assert "unexpected row (9, 9)" in diffs
