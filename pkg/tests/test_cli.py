import json

from qtableaux import characters
from qtableaux.cli import emit_latex, latex_poly, run
from qtableaux.characters import char_product
from qtableaux.qring import LaurentPoly
from qtableaux.shapes import Partition, content_sp
from qtableaux.tableaux import Family


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestChar:
    def test_json_matches_wire_format(self, capsys):
        code, out, _ = invoke(capsys, "char", "--family", "sp", "--shape", "1,1", "--n", "2", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["poly"] == [[-4, "1"], [-2, "1"], [0, "1"], [2, "1"], [4, "1"]]
        assert data["dimension"] == "5"
        assert data["route"] == "product"

    def test_json_roundtrip(self, capsys):
        code, out, _ = invoke(capsys, "char", "--family", "odd-o", "--shape", "2,1", "--n", "3", "--format", "json")
        assert code == 0
        pairs = json.loads(out)["poly"]
        assert LaurentPoly.from_pairs(pairs).to_pairs() == pairs

    def test_all_routes_agree(self, capsys):
        code, out, _ = invoke(capsys, "char", "--family", "even-o", "--shape", "2,1", "--n", "2", "--all-routes")
        assert code == 0
        assert "verdict: AGREE" in out
        for route in ("enumeration", "determinant", "product", "mu"):
            assert f"{route}: " in out

    def test_so_even_product(self, capsys):
        code, out, _ = invoke(capsys, "char", "--family", "so-even", "--shape", "1,1", "--n", "2")
        assert code == 0
        assert "q^-2 + 1 + q^2" in out
        assert "dimension = 3" in out
        assert "SO(4)" in out

    def test_so_even_all_routes_compares_alternate_form(self, capsys):
        code, out, _ = invoke(capsys, "char", "--family", "so-even", "--shape", "2,1", "--n", "2", "--all-routes")
        assert code == 0
        assert "product-alt: " in out
        assert "verdict: AGREE" in out

    def test_text_shows_group(self, capsys):
        code, out, _ = invoke(capsys, "char", "--family", "odd-o", "--shape", "1,1", "--n", "2")
        assert code == 0
        assert "group=O(5)" in out
        assert "dimension = 10" in out

    def test_csv_columns(self, capsys):
        code, out, _ = invoke(capsys, "char", "--family", "sp", "--shape", "1,1", "--n", "2", "--format", "csv")
        assert code == 0
        header, row = out.strip().splitlines()
        assert header == "family,shape,n,route,dimension,poly"
        assert row.startswith("sp,\"1,1\",2,product,5,")

    def test_latex_format(self, capsys):
        code, out, _ = invoke(capsys, "char", "--family", "sp", "--shape", "1,1", "--n", "2", "--format", "latex")
        assert code == 0
        assert out.strip() == "q^{-4}+q^{-2}+1+q^{2}+q^{4}"

    def test_gl_determinant_is_usage_error(self, capsys):
        code, _, err = invoke(capsys, "char", "--family", "gl", "--shape", "1,1", "--n", "2", "--route", "determinant")
        assert code == 1
        assert "error" in err


class TestLatexRendering:
    def test_constant(self):
        assert latex_poly(LaurentPoly(1)) == "1"

    def test_two_terms_ascending(self):
        assert latex_poly(LaurentPoly({1: 1, -1: 1})) == "q^{-1}+q"

    def test_sp_example(self):
        assert emit_latex(char_product(Family.SP, Partition((1, 1)), 2)) == "q^{-4}+q^{-2}+1+q^{2}+q^{4}"

    def test_coefficients_and_signs(self):
        assert latex_poly(LaurentPoly({2: 2, 0: -1})) == "-1+2q^{2}"
        assert latex_poly(LaurentPoly({-3: -1})) == "-q^{-3}"
        assert latex_poly(LaurentPoly()) == "0"


class TestCount:
    def test_odd_o_example_line(self, capsys):
        code, out, _ = invoke(capsys, "count", "--family", "odd-o", "--shape", "1,1", "--n", "2")
        assert code == 0
        assert out.strip() == "enumerated=10 formula=10 OK"

    def test_so_even(self, capsys):
        code, out, _ = invoke(capsys, "count", "--family", "so-even", "--shape", "1,1", "--n", "2")
        assert code == 0
        assert out.strip() == "enumerated=3 formula=3 OK"

    def test_gl_small_alphabet(self, capsys):
        code, out, _ = invoke(capsys, "count", "--family", "gl", "--shape", "1,1", "--n", "1")
        assert code == 0
        assert out.strip() == "enumerated=0 formula=0 OK"

    def test_mismatch_exits_two(self, capsys, monkeypatch):
        monkeypatch.setattr(characters, "content_sp", lambda lam, c: content_sp(lam, c) + 2)
        code, out, _ = invoke(capsys, "count", "--family", "sp", "--shape", "1,1", "--n", "2")
        assert code == 2
        assert "MISMATCH" in out


class TestEnumerate:
    def test_sp_listing(self, capsys):
        code, out, _ = invoke(capsys, "enumerate", "--family", "sp", "--shape", "1,1", "--n", "2")
        assert code == 0
        assert out.splitlines() == ["1/2", "1/2~", "1~/2", "1~/2~", "2/2~"]

    def test_json(self, capsys):
        code, out, _ = invoke(capsys, "enumerate", "--family", "odd-o", "--shape", "1,1", "--n", "2", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["count"] == 10
        assert len(data["tableaux"]) == 10

    def test_so_even_rejected(self, capsys):
        code, _, err = invoke(capsys, "enumerate", "--family", "so-even", "--shape", "1,1", "--n", "2")
        assert code == 1


class TestClassify:
    def test_positive_filter(self, capsys):
        code, out, _ = invoke(capsys, "classify", "--family", "even-o", "--shape", "1,1", "--n", "2",
                              "--class", "positive")
        assert code == 0
        assert out.splitlines() == ["1/2", "1~/2~", "2/2~"]

    def test_negative_filter(self, capsys):
        code, out, _ = invoke(capsys, "classify", "--family", "even-o", "--shape", "1,1", "--n", "2",
                              "--class", "negative")
        assert code == 0
        assert out.splitlines() == ["1/2~", "1~/2", "2/2~"]

    def test_all_shows_labels(self, capsys):
        code, out, _ = invoke(capsys, "classify", "--family", "even-o", "--shape", "1,1", "--n", "2")
        assert code == 0
        assert "1/1~ neither" in out
        assert "2/2~ both" in out

    def test_partial_shape_rejected(self, capsys):
        code, _, err = invoke(capsys, "classify", "--family", "even-o", "--shape", "1", "--n", "2")
        assert code == 1
        assert "error" in err


class TestUsageErrors:
    def test_unknown_family(self, capsys):
        code, _, err = invoke(capsys, "char", "--family", "su", "--shape", "1", "--n", "1")
        assert code == 1

    def test_bad_shape(self, capsys):
        code, _, err = invoke(capsys, "char", "--family", "sp", "--shape", "1,2", "--n", "2")
        assert code == 1
        assert "error" in err

    def test_n_too_small(self, capsys):
        code, _, err = invoke(capsys, "char", "--family", "sp", "--shape", "1,1,1", "--n", "2")
        assert code == 1

    def test_missing_subcommand(self, capsys):
        code, _, _ = invoke(capsys, "--nonsense")
        assert code == 1

    def test_help_exits_zero(self, capsys):
        code, out, _ = invoke(capsys, "--help")
        assert code == 0


class TestVerify:
    def test_small_sweep_passes(self, capsys):
        code, out, _ = invoke(capsys, "verify", "--max-size", "3", "--max-n", "2")
        assert code == 0
        assert "failed" in out.splitlines()[-1]
        assert " FAIL" not in out

    def test_deterministic_across_runs_and_workers(self, capsys, monkeypatch):
        _, first, _ = invoke(capsys, "verify", "--max-size", "3", "--max-n", "2")
        _, second, _ = invoke(capsys, "verify", "--max-size", "3", "--max-n", "2")
        monkeypatch.setenv("TABLEAUX_THREADS", "4")
        _, third, _ = invoke(capsys, "verify", "--max-size", "3", "--max-n", "2")
        assert first == second == third

    def test_mutated_constant_detected(self, capsys, monkeypatch):
        # Corrupt one formula constant; the sweep must notice and exit 2.
        monkeypatch.setattr(characters, "content_sp", lambda lam, c: content_sp(lam, c) + 2)
        code, out, _ = invoke(capsys, "verify", "--max-size", "2", "--max-n", "2")
        assert code == 2
        assert " FAIL" in out

    def test_mutated_statistic_detected(self, capsys, monkeypatch):
        original = characters.statistic_exponent
        monkeypatch.setattr(characters, "statistic_exponent",
                            lambda family, st: original(family, st) + 1)
        code, out, _ = invoke(capsys, "verify", "--max-size", "2", "--max-n", "2")
        assert code == 2
