import io
import re

from xclique import cli
from xclique.graphs import canonical_label, parse_graph6


def run(argv):
    out = io.StringIO()
    code = cli.main(argv, out=out)
    return code, out.getvalue()


def test_construct_flagship():
    code, text = run(["construct", "F", "15", "14", "7"])
    assert code == 0
    g6, summary = text.strip().splitlines()
    g = parse_graph6(g6)
    assert g.size() == 77
    assert "size=77" in summary
    assert "delta=7" in summary
    assert "circumference=14" in summary


def test_construct_g_family():
    code, text = run(["construct", "G", "13", "12", "3"])
    assert code == 0
    assert "size=54" in text


def test_construct_invalid_params():
    code, _ = run(["construct", "F", "10", "5", "3"])
    assert code == 2
    code, _ = run(["construct", "F", "10", "5"])
    assert code == 2


def test_invariants_k3():
    code, text = run(["invariants", "Bw"])
    assert code == 0
    assert "out.order=3" in text
    assert "out.circumference=3" in text
    assert "out.clique_profile=3,3,1" in text


def test_invariants_parse_failure():
    code, _ = run(["invariants", "B\x1f"])
    assert code == 2


def test_invariants_order_overflow():
    code, _ = run(["invariants", "~?AA" + "?" * 10])
    assert code == 2


def test_invariants_budget_exceeded():
    # 30 vertices is beyond the exact-solver cap
    code, _ = run(["invariants", "]" + "?" * 73])
    assert code == 3


def test_formula_values():
    assert run(["formula", "h", "15", "14", "3", "--s", "2"]) == (0, "77\n")
    assert run(["formula", "phi", "15", "14", "3", "--s", "2"]) == (0, "75\n")
    code, text = run(["formula", "phi14", "13", "4"])
    assert code == 0
    assert text.startswith("55 ")
    assert "families=G" in text
    assert run(["formula", "psi", "16", "14", "3"]) == (0, "73\n")


def test_formula_invalid():
    code, _ = run(["formula", "f", "10", "5", "3"])
    assert code == 2


def test_verify_ore():
    code, text = run(["verify", "ore", "--n", "5..6"])
    assert code == 0
    lines = text.strip().splitlines()
    assert len(lines) == 2
    assert "out.verdict=match" in lines[0]
    n5 = next(l for l in lines if "in.n=5" in l)
    witnesses = re.search(r"out\.witnesses=(\S+)", n5).group(1)
    assert len(witnesses.split(",")) == 2


def test_verify_unknown_theorem():
    code, _ = run(["verify", "zorn", "--n", "5"])
    assert code == 2


def test_verify_corpus(tmp_path):
    from xclique.search import all_classes

    corpus = tmp_path / "n6.g6"
    corpus.write_text("\n".join(all_classes(6)) + "\n", encoding="ascii")
    code, text = run(["verify", "main8", "--n", "6", "--corpus", str(corpus)])
    assert code == 0
    assert "out.verdict=violation" not in text


def test_verify_deterministic_modulo_elapsed():
    outputs = []
    for jobs in ("1", "1", "2"):
        _, text = run(["verify", "main8", "--n", "5..6", "--jobs", jobs])
        outputs.append(re.sub(r"elapsed_ms=\d+", "elapsed_ms=_", text))
    assert outputs[0] == outputs[1] == outputs[2]


def test_core_command():
    code, text = run(["core", "E?~o", "--t", "2"])  # C4 plus isolated vertex-ish input
    assert code == 0
    code, text = run(["core", "Bw", "--t", "5"])
    assert code == 0
    assert "core=null" in text


def test_core_complete_graph_survives():
    _, g6 = run(["construct", "F", "8", "7", "3"])
    line = g6.strip().splitlines()[0]
    code, text = run(["core", line, "--t", "2"])
    assert code == 0
    assert "core=null" not in text


def test_core_bad_seed():
    code, _ = run(["core", "Bw", "--t", "1", "--seed", "0"])
    assert code == 2


def test_exit_code_contract_documented():
    assert (cli.EXIT_OK, cli.EXIT_VIOLATION, cli.EXIT_USAGE, cli.EXIT_BUDGET) == (0, 1, 2, 3)
