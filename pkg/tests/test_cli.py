"""CLI surface: exit codes, JSON reports, determinism, registry runner."""

import io
import json
import sys
from contextlib import redirect_stdout

import pytest

from hilbemb.cli import main
from hilbemb.registry import REGISTRY, run_example


def run_cli(*argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(list(argv))
    out = buf.getvalue()
    return code, (json.loads(out) if out.strip() else None)


@pytest.fixture
def ring_file(tmp_path):
    path = tmp_path / "ring.json"
    path.write_text(json.dumps({"vars": ["w", "x", "y", "z"],
                                "relations": ["w*x*y", "w*x*z", "w*y*z", "x*y*z"],
                                "truncate_above": 3, "cap": 4}))
    return str(path)


@pytest.fixture
def small_ring_file(tmp_path):
    path = tmp_path / "small.json"
    path.write_text(json.dumps({"vars": ["x"], "relations": ["x^3"], "cap": 4}))
    return str(path)


@pytest.fixture
def small_order_file(tmp_path):
    path = tmp_path / "small-order.json"
    path.write_text(json.dumps({"degrees": {"1": ["x"]}}))
    return str(path)


def test_find_order_and_check_roundtrip(ring_file, tmp_path):
    code, report = run_cli("find-order", "--ring", ring_file)
    assert code == 0 and report["status"] == "ok"
    order_path = tmp_path / "order.json"
    order_path.write_text(json.dumps({"degrees": report["results"]["order"]}))
    code, report = run_cli("check-order", "--ring", ring_file, "--order", str(order_path))
    assert code == 0 and report["results"]["embedding_order"] is True


def test_find_order_forced_prefix_none(ring_file):
    code, report = run_cli("find-order", "--ring", ring_file, "--force-prefix", "2:w^2")
    assert code == 1
    assert report["results"]["found"] is False
    assert report["results"]["none_is_proof"] is True


def test_lattice_check_witness(tmp_path):
    path = tmp_path / "tensor.json"
    path.write_text(json.dumps({"vars": ["x", "y", "z"],
                                "relations": ["x^3", "x^2*y", "x*y^2", "y^3", "z^2"],
                                "truncate_above": 3, "cap": 3}))
    code, report = run_cli("lattice-check", "--ring", str(path))
    assert code == 1
    assert report["results"]["witness"]["missing_series"] == [0, 1, 2, 2]


def test_embed_command(small_ring_file, small_order_file):
    code, report = run_cli("embed", "--ring", small_ring_file, "--order", small_order_file,
                           "--series", "0,1,1,0,0")
    assert code == 0
    assert report["results"]["ideal"] == ["x"]
    assert report["results"]["pieces"]["2"] == ["x^2"]


def test_growth_commands():
    code, report = run_cli("macaulay-growth", "2", "1", "1")
    assert code == 0 and report["results"]["growth"] == 2
    code, report = run_cli("cl-growth", "--e", "2,2,2", "1", "2")
    assert code == 0 and report["results"]["growth"] == 3
    code, report = run_cli("cl-growth", "--e", "3,2", "1", "1")
    assert code == 2  # unsorted bounds are a usage error


def test_segment_and_extend_order(small_ring_file, small_order_file):
    code, report = run_cli("segment", "--ring", small_ring_file, "--order", small_order_file,
                           "--t", "inf", "--degree", "2", "--length", "2")
    assert code == 0
    assert report["results"]["ranks"] == [1, 1, 0]
    assert report["results"]["monomials"] == ["x^2", "x*z"]
    code, report = run_cli("extend-order", "--ring", small_ring_file, "--order",
                           small_order_file, "--t", "3")
    assert code == 0 and report["results"]["embedding_order"] is True


def test_stabilize_command(tmp_path, small_ring_file):
    poly = tmp_path / "poly.json"
    poly.write_text(json.dumps({"vars": ["x"], "relations": [], "cap": 4}))
    ideal = tmp_path / "ideal.json"
    ideal.write_text(json.dumps({"gens": ["x*z"]}))
    code, report = run_cli("stabilize", "--ring", str(poly), "--ideal", str(ideal))
    assert code == 0
    assert report["results"]["ideal"] == ["x^2"]


def test_polarize_commands(tmp_path):
    ring = tmp_path / "yy.json"
    ring.write_text(json.dumps({"vars": ["y"], "relations": ["y^2"], "cap": 4}))
    code, report = run_cli("polarize", "--ring", str(ring), "--y", "y", "--d", "2")
    assert code == 0 and report["results"]["gens"] == ["y*z"]
    order = tmp_path / "yy-order.json"
    order.write_text(json.dumps({"degrees": {"1": ["y"]}}))
    code, report = run_cli("polarize-embed", "--ring", str(ring), "--order", str(order),
                           "--y", "y", "--d", "2")
    assert code == 0
    assert report["results"]["order"]["1"] == ["y", "z"]


def test_cl_extend_command(tmp_path):
    ring = tmp_path / "kk.json"
    ring.write_text(json.dumps({"vars": ["x", "y"], "relations": ["x^2", "y^2"], "cap": 3}))
    order = tmp_path / "kk-order.json"
    order.write_text(json.dumps({"degrees": {"1": ["x", "y"], "2": ["x*y"]}}))
    code, report = run_cli("cl-extend", "--ring", str(ring), "--order", str(order),
                           "--t", "2", "--samples", "2")
    assert code == 0
    assert report["results"]["ring"]["relations"] == ["x^2", "y^2", "z^2"]


def test_parse_error_exit_code(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, report = run_cli("lattice-check", "--ring", str(bad))
    assert code == 2 and report["status"] == "error"


def test_reports_are_byte_identical(ring_file):
    import io as _io
    from contextlib import redirect_stdout as _r

    def capture():
        buf = _io.StringIO()
        with _r(buf):
            main(["find-order", "--ring", ring_file])
        return buf.getvalue()

    assert capture() == capture()


def test_paper_example_all_pass():
    for example_id in REGISTRY:
        payload = run_example(example_id)
        failing = [c for c in payload["claims"] if c["status"] != "pass"]
        assert not failing, (example_id, failing)


def test_paper_example_cli_and_unknown_id():
    code, report = run_cli("paper-example", "gotzmann-counterexample")
    assert code == 0 and report["results"]["status"] == "pass"
    code, report = run_cli("paper-example", "no-such-example")
    assert code == 1 and report["status"] == "fail"


def test_list_examples():
    code, report = run_cli("list-examples")
    assert code == 0 and set(report["results"]) == set(REGISTRY)
