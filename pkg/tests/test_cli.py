"""
Tests for the qa command-line driver.
"""
import io
import json

import pytest

from src.algebra_core.qseries import inverse_one_minus
from src import cli
from src.cli import EXIT_INCONCLUSIVE, EXIT_OK, EXIT_USAGE, run
from src.config import TestingConfig
from src.quantum import uplus
from src.workbench_utils.config import FORM_CACHE_SIZE
from src.workbench_utils.errors import ExtremalSearchOverflow


def invoke(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_rootdata_a1():
    code, text = invoke("rootdata", "--type", "A1~1")
    assert code == EXIT_OK
    payload = json.loads(text)
    assert payload["cartan"] == [["2", "-2"], ["-2", "2"]]
    assert payload["marks"] == ["1", "1"]
    assert payload["classical_gram_positive_definite"] is True


def test_unknown_type():
    code, text = invoke("rootdata", "--type", "Z3~1")
    assert code == EXIT_USAGE
    assert text == ""


def test_usage_errors():
    assert invoke("rootdata")[0] == EXIT_USAGE
    assert invoke("rootdata", "--type", "A1~1", "--bogus")[0] == EXIT_USAGE
    assert invoke("nonsense")[0] == EXIT_USAGE


def test_roots_csv():
    code, text = invoke("roots", "--type", "A1~1", "--cutoff", "1", "--csv")
    assert code == EXIT_OK
    lines = text.splitlines()
    assert lines[0] == "root,kind,node,d_alpha"
    assert len(lines) > 1


def test_roots_json():
    code, text = invoke("roots", "--type", "A2~2", "--cutoff", "1")
    assert code == EXIT_OK
    payload = json.loads(text)
    assert payload["cutoff"] == "1"
    assert all("kind" in item for item in payload["roots"])


def test_weyl_sequence():
    code, text = invoke("weyl", "--type", "A1~1", "--word", "0,1")
    assert code == EXIT_OK
    payload = json.loads(text)
    assert payload["h"]["N"] == "1"
    assert payload["beta"]["0"]["root"] == ["0", "1"]
    assert payload["element"]["length"] == "2"


def test_form():
    code, text = invoke("form", "--type", "A1~1", "--x", "E0*E1", "--y", "E0*E1")
    assert code == EXIT_OK
    payload = json.loads(text)
    assert payload["form"] == str(inverse_one_minus(2) ** 2)
    assert payload["x"] == "E0*E1"


def test_form_parse_error():
    assert invoke("form", "--type", "A1~1", "--x", "E7", "--y", "E0")[0] == EXIT_USAGE


def test_pbw_frame_zero():
    code, text = invoke("pbw", "--type", "A1~1", "--weight", "1,1", "--gram")
    assert code == EXIT_OK
    payload = json.loads(text)
    assert len(payload["indices"]) == 2
    assert payload["almost_orthonormal"] is True


def test_pbw_not_computable():
    code, _ = invoke("pbw", "--type", "A1~1", "--weight", "1,1", "--frame", "1")
    assert code == EXIT_INCONCLUSIVE


def test_pbw_bad_weight():
    assert invoke("pbw", "--type", "A1~1", "--weight", "1,1,1")[0] == EXIT_USAGE


def test_canonical():
    code, text = invoke("canonical", "--type", "A1~1", "--weight", "1,1")
    assert code in (EXIT_OK, EXIT_INCONCLUSIVE)
    if code == EXIT_OK:
        assert len(json.loads(text)["canonical"]) == 2


def test_crystal_json_and_dot():
    code, text = invoke("crystal", "--type", "A2~1", "--lambda", "1,0")
    assert code == EXIT_OK
    payload = json.loads(text)
    assert payload["size"] == 3
    assert payload["connected"] is True
    assert payload["axiom_violations"] == []
    code, text = invoke("crystal", "--type", "A1~1", "--lambda", "1", "--dot")
    assert code == EXIT_OK
    assert text.startswith("digraph crystal {")


def test_crystal_unsupported_type():
    assert invoke("crystal", "--type", "C2~1", "--lambda", "1,0")[0] == EXIT_USAGE


def test_dcount():
    code, text = invoke("dcount", "--type", "A2~1", "--lambda", "1,1")
    assert code == EXIT_OK
    assert text == "9\n"


def test_afn():
    code, text = invoke("afn", "--type", "A1~1", "--lambda", "2")
    assert code == EXIT_OK
    assert set(json.loads(text)["a"].values()) == {"0", "1"}


def test_cells():
    code, text = invoke("cells", "--type", "A1~1", "--lambda", "1", "--boxes", "0", "--det", "2")
    assert code == EXIT_OK
    payload = json.loads(text)
    assert payload["status"] == "conclusive"
    assert payload["counts"]["two_sided"] == 1


def test_jring_csv():
    code, text = invoke("jring", "--type", "A1~1", "--lambda", "1", "--boxes", "0", "--det", "1", "--csv")
    assert code == EXIT_OK
    assert text.splitlines()[0] == "x,y,z,c"


@pytest.mark.parametrize("oracle", [False, True])
def test_lr(oracle):
    argv = ["lr", "--m", "2", "--a", "1", "--b", "1"] + (["--oracle"] if oracle else [])
    code, text = invoke(*argv)
    assert code == EXIT_OK
    assert json.loads(text)["product"] == [[["1", "1"], "1"], [["2", "0"], "1"]]


def test_lr_negative_shape():
    code, text = invoke("lr", "--m", "2", "--a=1,-1", "--b=0,0")
    assert code == EXIT_OK
    assert json.loads(text)["product"] == [[["1", "-1"], "1"]]


@pytest.fixture
def tight_config(monkeypatch):
    class TightConfig(TestingConfig):
        FORM_CACHE_SIZE = 7
        EXTREMAL_BFS_FACTOR = 0

    monkeypatch.setattr(cli, "get_config", lambda: TightConfig)
    yield TightConfig
    uplus.configure_form_cache(FORM_CACHE_SIZE)


def test_form_cache_size_from_config(tight_config):
    code, text = invoke("form", "--type", "A1~1", "--x", "E0*E1", "--y", "E0*E1")
    assert code == EXIT_OK
    assert json.loads(text)["form"] == str(inverse_one_minus(2) ** 2)
    assert uplus._PAIRING_MEMO.max_size == 7
    assert len(uplus._PAIRING_MEMO) <= 7


def test_extremal_factor_from_config(tight_config):
    code, text = invoke("crystal", "--type", "A1~1", "--lambda", "1")
    assert code == ExtremalSearchOverflow.exit_code
    assert text == ""


def test_crystal_simple_check_reported():
    code, text = invoke("crystal", "--type", "A2~1", "--lambda", "0,1")
    assert code == EXIT_OK
    report = json.loads(text)["simple_check"]
    assert report["simple"] is True
    assert report["all_extremal"] is True
