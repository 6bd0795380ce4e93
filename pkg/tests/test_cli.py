import io
import json

import pytest

from vcrit.cli import run
from vcrit.expansion import enumerate_k_critical
from vcrit.graph6 import decode_graph6, encode_graph6

TABLE_1 = [1, 1, 2, 2, 4, 6, 11, 17, 27, 39, 58, 80, 112, 148, 197, 253]


def call(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err, stdin=io.StringIO(stdin))
    return code, out.getvalue(), err.getvalue()


def test_table():
    code, out, _ = call("table", "--max-k", "16")
    assert code == 0 and [int(x) for x in out.split()] == TABLE_1


def test_critical():
    assert call("critical", "--k", "3", "Dhc")[:2] == (0, "true\n")
    assert call("critical", "--k", "4", "Dhc")[:2] == (1, "false\n")
    code, out, _ = call("critical", "--k", "3", "--verbose", "Dhc")
    assert code == 0 and "# chi=3" in out


def test_enumerate_profiles():
    assert call("enumerate", "--k", "3", "--profiles")[:2] == (0, "K3\n1,1,1,1,1\n")


def test_enumerate_graph6_is_deterministic():
    first = call("enumerate", "--k", "7")[1]
    assert first == call("enumerate", "--k", "7")[1]
    assert [decode_graph6(s) for s in first.split()] == enumerate_k_critical(7)


def test_chi_and_stdin():
    assert call("chi", "D~{")[1] == "5\t0,1,2,3,4\n"
    code, out, _ = call("chi", stdin="Dhc\n@\n")
    assert code == 0 and out.splitlines()[0].startswith("3\t") and out.splitlines()[1] == "1\t0"


def test_freecheck():
    code, out, _ = call("freecheck", "--forbid", "gem,co-gem", "Dhc")
    assert code == 0 and out == "gem\tfree\nco-gem\tfree\n"
    gem = encode_graph6(__import__("vcrit.graph", fromlist=["gem"]).gem())
    code, out, _ = call("freecheck", "--forbid", "gem,p3+0p1", gem)
    assert code == 1 and out.splitlines()[0] == "gem\tcontains\t0,1,2,3,4"


def test_certify_and_verify(tmp_path):
    graphs = tmp_path / "in.g6"
    graphs.write_text("Dhc\nD~{\n")
    code, out, _ = call("certify", "--k", "3", str(graphs))
    assert code == 1
    docs = [json.loads(line) for line in out.splitlines()]
    assert [d["verdict"] for d in docs] == ["yes", "no"]
    cert = tmp_path / "c.json"
    cert.write_text(out)
    assert call("verify", "--k", "3", "--cert", str(cert), str(graphs))[:2] == (0, "accept\naccept\n")
    tampered = dict(docs[0], coloring=[0, 0, 0, 0, 0])
    cert.write_text(json.dumps(tampered) + "\n" + out.splitlines()[1] + "\n")
    assert call("verify", "--k", "3", "--cert", str(cert), str(graphs))[:2] == (1, "reject\naccept\n")


def test_catalog():
    code, out, _ = call("catalog", "--id", "1")
    assert code == 0 and out == "Dhc\n"
    assert len(call("catalog")[1].split()) == 10


@pytest.mark.parametrize(
    "argv",
    [
        ("chi", "D~|"),
        ("chi", "D h"),
        ("table",),
        ("nosuch",),
        ("table", "--max-k", "3", "--bogus"),
        ("freecheck", "--forbid", "claw", "Dhc"),
        ("catalog", "--id", "11"),
    ],
)
def test_usage_and_format_errors(argv):
    assert call(*argv)[0] == 2


def test_graph6_diagnostic_is_reported():
    code, _, err = call("chi", "D~|")
    assert code == 2 and "padding" in err
