import json

import pytest

from corpusprof.cli import main
from corpusprof.corpus_io import Document, write_documents_jsonl
from corpusprof.synth import SynthSpec, gen_zipf_corpus


@pytest.fixture
def corpus_path(tmp_path):
    spec = SynthSpec(kind="zipf-iid", zipf_exponent=1.5, n_docs=300, doc_len=50, seed=1)
    path = tmp_path / "corpus.jsonl"
    write_documents_jsonl(
        (Document(id=d.id, text=" ".join(d.tokens)) for d in gen_zipf_corpus(spec)), path
    )
    return path


def test_profile_json_happy_path(corpus_path, capsys):
    code = main(["--format", "json", "profile", "--in", str(corpus_path)])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert set(payload) == {"fit", "stats"}
    assert payload["stats"]["d"] == 300


def test_unknown_flag_exits_1(capsys):
    assert main(["profile", "--bogus"]) == 1
    assert "error" in capsys.readouterr().err


def test_missing_subcommand_exits_1():
    assert main([]) == 1


def test_fit_on_two_point_curve_exits_2(tmp_path, capsys):
    curve = tmp_path / "curve.csv"
    curve.write_text("N,V\n2,2\n4,3\n")
    assert main(["fit", str(curve)]) == 2
    assert "at least 3" in capsys.readouterr().err


def test_missing_corpus_exits_2(tmp_path, capsys):
    assert main(["profile", "--in", str(tmp_path / "nope.jsonl")]) == 2


def test_profile_then_fit_decomposition(corpus_path, tmp_path, capsys):
    curve_path = tmp_path / "curve.json"
    code = main(
        [
            "--format",
            "json",
            "profile",
            "--in",
            str(corpus_path),
            "--curve-out",
            str(curve_path),
        ]
    )
    assert code == 0
    embedded = json.loads(capsys.readouterr().out)["fit"]
    assert main(["--format", "json", "fit", str(curve_path)]) == 0
    refit = json.loads(capsys.readouterr().out)
    assert refit == embedded


def test_synth_then_profile(tmp_path, capsys):
    out = tmp_path / "synth.jsonl"
    code = main(
        [
            "synth",
            "--kind",
            "zipf",
            "--a",
            "1.5",
            "--n-tokens",
            "20000",
            "--doc-len",
            "100",
            "--seed",
            "42",
            "--out",
            str(out),
        ]
    )
    assert code == 0
    assert "seed=42" in capsys.readouterr().out  # reproducibility from the log
    assert main(["profile", "--in", str(out)]) == 0


def test_synth_deterministic(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    args = ["synth", "--kind", "monkey", "--n-tokens", "5000", "--seed", "7", "--out"]
    assert main(args + [str(a)]) == 0
    assert main(args + [str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_compare_two_corpora(corpus_path, tmp_path, capsys):
    code = main(
        [
            "--format",
            "csv",
            "compare",
            "--corpus",
            f"one={corpus_path}",
            "--corpus",
            f"two={corpus_path.parent / 'missing.jsonl'}",
        ]
    )
    assert code == 0
    out = capsys.readouterr().out
    assert out.splitlines()[1].startswith("one,")
    assert "error" in out.splitlines()[2]


def test_shuffle_test(corpus_path, capsys):
    code = main(
        ["--format", "json", "shuffle-test", "--in", str(corpus_path), "--n", "3", "--seed", "5"]
    )
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["n_shuffles"] == 3 and len(payload["beta_values"]) == 3


def test_plot_to_file(corpus_path, tmp_path):
    curve_path = tmp_path / "curve.json"
    assert main(["--out", "/dev/null", "profile", "--in", str(corpus_path), "--curve-out", str(curve_path)]) == 0
    fig = tmp_path / "fig.svg"
    assert main(["--out", str(fig), "plot", f"zipf={curve_path}", "--scale", "loglog10"]) == 0
    assert fig.read_text().startswith("<svg")
