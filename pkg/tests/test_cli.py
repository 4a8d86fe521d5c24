import json

import pytest

import zeta_verify
from src.cli.commands import table_rows
from src.cli.formatting import render_rows
from src.cli.parser import build_parser, parse_k_range, split_identities
from src.config.app_config import AppConfig
from src.models.verification_report import VerificationReport
from src.utils.error_handler import ErrorHandler, InvalidParameterError, PrecisionShortfallError


def run(capsys, *argv):
    code = zeta_verify.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_seq_thue_morse_csv(capsys):
    code, out, _ = run(capsys, "seq", "--name", "thue-morse", "--start", "0", "--count", "8", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "index,value"
    assert [line.split(",")[1] for line in lines[1:]] == ["0", "1", "1", "0", "1", "0", "0", "1"]


def test_seq_paperfolding_defaults_to_index_one(capsys):
    code, out, _ = run(capsys, "seq", "--name", "paperfolding", "--count", "8", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert rows[0] == {"index": 1, "value": 0}
    assert [row["value"] for row in rows] == [0, 0, 1, 0, 0, 1, 1, 0]


def test_seq_paperfolding_from_zero_is_usage_error(capsys):
    code, _, err = run(capsys, "seq", "--name", "paperfolding", "--start", "0", "--count", "4")
    assert code == 2
    assert "b_0" in err


def test_eval_zeta_two(capsys):
    code, out, _ = run(capsys, "eval", "--series", "zeta", "--s", "2", "--prec-bits", "64")
    assert code == 0
    assert "1.644934" in out
    assert "euler_maclaurin" in out


def test_eval_hurwitz34_json(capsys):
    code, out, _ = run(capsys, "eval", "--series", "hurwitz34", "--s", "3", "--format", "json")
    assert code == 0
    record = json.loads(out)
    assert record["value"].startswith("2.65131")
    assert record["target_met"] is True
    assert record["params"]["s"] == "3"


def test_eval_delta_direct_sum(capsys):
    code, out, _ = run(capsys, "eval", "--series", "delta", "--s", "3", "--terms", "20000",
                       "--prec-bits", "128", "--format", "json")
    assert code == 0
    record = json.loads(out)
    assert record["method"] == "direct_partial_sum"
    assert record["terms_used"] == 20000
    assert record["value"].startswith("0.04734")


def test_eval_stream_with_parameter(capsys):
    code, out, _ = run(capsys, "eval", "--series", "theorem1_N", "--k", "1", "--s", "3", "--terms", "5000",
                       "--prec-bits", "64", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0].startswith("series,params,value")


def test_eval_polygamma_needs_k(capsys):
    code, _, err = run(capsys, "eval", "--series", "polygamma34")
    assert code == 2
    assert "--k" in err


def test_eval_polygamma(capsys):
    code, out, _ = run(capsys, "eval", "--series", "polygamma34", "--k", "1", "--prec-bits", "64")
    assert code == 0
    assert "-5.3026" in out


def test_eval_rejects_divergent_exponent(capsys):
    code, _, _ = run(capsys, "eval", "--series", "zeta", "--s", "1")
    assert code == 2


def test_eval_shortfall_prints_partial_result(capsys, monkeypatch):
    monkeypatch.setenv("ZETA_EM_MAX_N", "10")
    monkeypatch.setenv("ZETA_EM_MAX_J", "2")
    code, out, _ = run(capsys, "eval", "--series", "zeta", "--s", "3", "--prec-bits", "256")
    assert code == 3
    assert "1.20" in out
    assert "accuracy target not met" in out


def test_verify_theorem1_range(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "theorem1", "--k", "1..3", "--terms", "2000",
                       "--prec-bits", "128", "--format", "json")
    assert code == 0
    reports = json.loads(out)
    assert [report["params"]["k"] for report in reports] == ["1", "2", "3"]
    assert all(report["pass"] for report in reports)
    assert all(VerificationReport.pass_from_dict(report) for report in reports)
    assert set(reports[0]["lhs"]) == {"mid", "rad"}


def test_verify_unknown_identity(capsys):
    code, _, err = run(capsys, "verify", "--identity", "nosuch")
    assert code == 2
    assert "nosuch" in err


def test_verify_with_negative_controls_exits_zero(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "ramanujan-zeta3,plouffe-zeta7", "--prec-bits", "128")
    assert code == 0
    assert "FAIL" in out
    assert "4 report(s), 0 unexpected outcome(s)" in out


def test_verify_csv_to_file(capsys, tmp_path):
    target = tmp_path / "reports" / "split.csv"
    code, out, _ = run(capsys, "verify", "--identity", "split", "--s", "3", "--terms", "16", "--format", "csv",
                       "--output", str(target))
    assert code == 0
    assert out == ""
    lines = target.read_text(encoding="utf-8").splitlines()
    assert lines[0].startswith("identity_id,params,pass")
    assert lines[1].startswith("split,")


def test_table_coefficients(capsys):
    code, out, _ = run(capsys, "table", "--what", "coefficients", "--k", "1..4", "--format", "csv")
    assert code == 0
    assert [line.split(",")[1] for line in out.strip().splitlines()[1:]] == ["28", "496", "8128", "130816"]


def test_table_rows():
    assert [row["value"] for row in table_rows("euler", 0, 4)] == ["1", "-1", "5", "-61", "1385"]
    assert table_rows("bernoulli", 6, 6)[0]["value"] == "-691/2730"
    assert [row["value"] for row in table_rows("pi-coefficients", 1, 3)] == ["1", "5/3", "122/45"]
    assert [row["value"] for row in table_rows("corollary-denominators", 1, 3)] == ["28", "1488", "90720"]
    listing = table_rows("lemma4-listing", 1, 6)
    assert listing[0]["listed"] == "8" and listing[0]["formula"] == "28" and listing[0]["match"] == "no"
    assert all(row["match"] == "yes" for row in listing[1:])
    streams = table_rows("theorem1-streams", 1, 1)[0]
    assert (streams["t_shifted"], streams["t"], streams["lemma4"]) == ("9", "7", "28")


def test_table_rejects_zero_for_positive_tables(capsys):
    with pytest.raises(InvalidParameterError):
        table_rows("coefficients", 0, 2)
    code, _, _ = run(capsys, "table", "--what", "pi-coefficients", "--k", "0..2")
    assert code == 2


def test_parser_validation():
    assert parse_k_range("1..4") == (1, 4)
    assert parse_k_range("3") == (3, 3)
    assert split_identities(None) == ["all"]
    assert split_identities(["lemma1,theorem1", "toth"]) == ["lemma1", "theorem1", "toth"]
    parser = build_parser(AppConfig())
    for argv in (["eval", "--series", "zeta", "--s", "2", "--prec-bits", "8"],
                 ["verify", "--k", "4..1"],
                 ["seq", "--name", "fibonacci"],
                 ["eval", "--series", "zeta", "--s", "abc"]):
        with pytest.raises(SystemExit) as excinfo:
            parser.parse_args(argv)
        assert excinfo.value.code == 2


def test_parser_defaults_follow_environment(monkeypatch):
    monkeypatch.setenv("ZETA_PREC_BITS", "96")
    monkeypatch.setenv("ZETA_TERMS", "500")
    args = build_parser(AppConfig()).parse_args(["eval", "--series", "zeta", "--s", "2"])
    assert args.prec_bits == 96
    assert args.terms == 500
    args = build_parser(AppConfig()).parse_args(["verify"])
    assert args.terms is None


def test_invalid_environment_is_usage_error(capsys, monkeypatch):
    monkeypatch.setenv("ZETA_PREC_BITS", "lots")
    code, _, err = run(capsys, "seq", "--name", "epsilon")
    assert code == 2
    assert "ZETA_PREC_BITS" in err


def test_app_config_defaults():
    config = AppConfig()
    assert config.get_precision_bits() == 256
    assert config.get_terms() == 1000000
    assert config.get_workers() == 1
    assert config.as_dict()['em_max_j'] == config.get_em_max_j()


def test_error_handler_exit_codes():
    handler = ErrorHandler()
    assert handler.handle(InvalidParameterError("bad")) == 2
    assert handler.handle(PrecisionShortfallError("short", partial=None)) == 3
    with pytest.raises(RuntimeError):
        handler.classify_error(RuntimeError("bug"))


def test_render_rows_text_alignment():
    text = render_rows([{'k': 1, 'value': "28"}, {'k': 10, 'value': "5/3"}], ['k', 'value'], "text")
    lines = text.splitlines()
    assert lines[0].split() == ["k", "value"]
    assert lines[2].split() == ["10", "5/3"]
    assert lines[1].index("28") == lines[0].index("value")


def test_verify_non_integer_s_keeps_exact_split_running(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "toth,split", "--s", "1.5", "--terms", "50",
                       "--prec-bits", "64", "--format", "json")
    assert code == 0
    reports = json.loads(out)
    toth = [report for report in reports if report["identity_id"] == "toth"]
    split = [report for report in reports if report["identity_id"] == "split"]
    assert [report["params"]["s"] for report in toth] == ["1.5"]
    assert sorted(int(report["params"]["s"]) for report in split) == [2, 3, 5]
    assert all(report["pass"] for report in reports)


def test_digits_option_sets_working_precision():
    parser = build_parser(AppConfig())
    assert parser.parse_args(["eval", "--series", "zeta", "--s", "2", "--digits", "50"]).prec_bits == 264
    assert parser.parse_args(["verify", "--digits", "48"]).prec_bits == 256
    assert parser.parse_args(["verify"]).prec_bits == 256
    with pytest.raises(SystemExit) as excinfo:
        parser.parse_args(["verify", "--digits", "20", "--prec-bits", "128"])
    assert excinfo.value.code == 2


def test_eval_json_carries_method_details(capsys):
    code, out, _ = run(capsys, "eval", "--series", "zeta", "--s", "3", "--prec-bits", "64", "--format", "json")
    assert code == 0
    record = json.loads(out)
    assert set(record["details"]) == {"N", "J"}
    assert record["method"] == "euler_maclaurin"


def test_eval_polygamma_shortfall_exits_three(capsys, monkeypatch):
    monkeypatch.setenv("ZETA_EM_MAX_N", "10")
    monkeypatch.setenv("ZETA_EM_MAX_J", "2")
    code, out, _ = run(capsys, "eval", "--series", "polygamma34", "--k", "1", "--prec-bits", "256")
    assert code == 3
    assert "accuracy target not met" in out


def test_verify_honours_euler_maclaurin_caps(capsys, monkeypatch):
    monkeypatch.setenv("ZETA_EM_MAX_N", "10")
    monkeypatch.setenv("ZETA_EM_MAX_J", "2")
    code, out, _ = run(capsys, "verify", "--identity", "lemma1", "--k", "1", "--prec-bits", "256",
                       "--format", "json")
    assert code == 0
    report = json.loads(out)[0]
    assert report["pass"]
    assert report["notes"].startswith("accuracy target not met")
