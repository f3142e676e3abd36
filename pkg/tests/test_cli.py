import io
import json

import pytest

from quiverrep.cli import (EXIT_INPUT_ERROR, EXIT_OK, EXIT_VIOLATION, main,
                           parse_base_spec)
from quiverrep.basecat import FgAbBase, NestedBase, VectBase


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


@pytest.fixture
def s1_file(tmp_path):
    p = tmp_path / "s1.json"
    p.write_text(json.dumps({"support": {"1": {"dim": 1}}, "arrows": {}}))
    return str(p)


@pytest.fixture
def s2_file(tmp_path):
    p = tmp_path / "s2.json"
    p.write_text(json.dumps({"support": {"2": {"dim": 1}}, "arrows": {}}))
    return str(p)


# ---------------------------------------------------------------------
# base spec parsing


def test_parse_base_specs():
    assert isinstance(parse_base_spec("q"), VectBase)
    b = parse_base_spec("fp:7")
    assert isinstance(b, VectBase) and b.p == 7
    assert isinstance(parse_base_spec("fgab"), FgAbBase)
    n = parse_base_spec("nested:A_2:fp:5")
    assert isinstance(n, NestedBase)


def test_parse_base_spec_rejects_garbage():
    from quiverrep.cli import InputError
    for bad in ("zz", "fp:abc", "nested:A_2", "nested:nope:fp:5"):
        with pytest.raises(InputError):
            parse_base_spec(bad)


# ---------------------------------------------------------------------
# commands happy path


def test_classify_loop_text():
    code, text = run(["classify", "--template", "loop"])
    assert code == EXIT_OK
    assert "aleph1" in text


def test_classify_json_has_stamp():
    code, text = run(["classify", "--template", "A_3", "--json"])
    assert code == EXIT_OK
    doc = json.loads(text)
    assert doc["seed"] == 0 and doc["budget"] == 10000
    assert "version" in doc
    assert doc["flags"]["acyclic"]["value"] is True
    assert doc["root_filtration"]["right"]["covers_all"] is True


def test_present_command(s1_file):
    code, text = run(["present", "--template", "A_2", "--base", "fp:5",
                      "--rep", s1_file, "--json"])
    assert code == EXIT_OK
    doc = json.loads(text)
    assert doc["presentation"]["P0"] == {"1": {"dim": 1}, "2": {"dim": 1}}
    assert doc["presentation"]["P1"] == {"2": {"dim": 1}}


def test_ext_command(s1_file, s2_file):
    code, text = run(["ext", "--template", "A_2", "--base", "fp:5",
                      "--F", s1_file, "--G", s2_file, "--n", "1", "--json"])
    assert code == EXIT_OK
    doc = json.loads(text)
    assert doc["ext"] == {"kind": "vector-space", "dim": 1}


def test_ext_command_text_dim_line(s1_file, s2_file):
    code, text = run(["ext", "--template", "A_2", "--base", "fp:5",
                      "--F", s1_file, "--G", s2_file])
    assert code == EXIT_OK
    assert "dim = 1" in text


def test_pd_command(s1_file):
    code, text = run(["pd", "--template", "A_2", "--base", "fp:5",
                      "--rep", s1_file, "--json"])
    assert code == EXIT_OK
    assert json.loads(text)["pd"] == 1


def test_gldim_command():
    code, text = run(["gldim", "--template", "A_2", "--base", "fp:5",
                      "--samples", "10", "--dims", "2"])
    assert code == EXIT_OK
    assert "bound 1, witness pd 1" in text


def test_cotorsion_command():
    code, text = run(["cotorsion", "--template", "A_2", "--base", "fp:5",
                      "--samples", "10", "--dims", "2", "--json"])
    assert code == EXIT_OK
    doc = json.loads(text)
    assert doc["violations"] == []
    assert doc["negative_control_detected"] is True


def test_approx_command(s1_file):
    code, text = run(["approx", "--template", "A_2", "--base", "fp:5",
                      "--rep", s1_file, "--side", "phi", "--json"])
    assert code == EXIT_OK
    doc = json.loads(text)
    assert doc["exact"] is True


# ---------------------------------------------------------------------
# determinism


def test_json_output_is_deterministic():
    _, a = run(["gldim", "--template", "A_3", "--base", "fp:5",
                "--samples", "15", "--seed", "3", "--json"])
    _, b = run(["gldim", "--template", "A_3", "--base", "fp:5",
                "--samples", "15", "--seed", "3", "--json"])
    assert a == b


# ---------------------------------------------------------------------
# error handling / exit codes


def test_missing_quiver_is_input_error():
    code, _ = run(["classify"])
    assert code == EXIT_INPUT_ERROR


def test_unknown_template_is_input_error():
    code, _ = run(["classify", "--template", "no_such"])
    assert code == EXIT_INPUT_ERROR


def test_bad_rep_file_is_input_error(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    code, _ = run(["present", "--template", "A_2", "--base", "fp:5",
                   "--rep", str(p)])
    assert code == EXIT_INPUT_ERROR


def test_bad_base_spec_is_input_error(s1_file):
    code, _ = run(["pd", "--template", "A_2", "--base", "fp:notaprime",
                   "--rep", s1_file])
    assert code == EXIT_INPUT_ERROR


def test_unknown_subcommand_is_input_error():
    code, _ = run(["frobnicate"])
    assert code == EXIT_INPUT_ERROR
