from fractions import Fraction
from pathlib import Path

from rendezvous.cli import main

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_fraction(text):
    if "/" in text:
        num, den = text.split("/")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def long_rows(out):
    lines = out.strip().split("\n")
    assert lines[0] == "n,k,quantity,value,ceil"
    rows = []
    for line in lines[1:]:
        n, k, quantity, value, ceiling = line.split(",")
        rows.append((int(n), int(k), quantity, parse_fraction(value), int(ceiling)))
    return rows


class TestScalarCommands:
    def test_exponent_example(self, capsys):
        code, out, err = run(capsys, "exponent", "--builtin", "example")
        assert code == 0
        assert out == "7\n"

    def test_exponent_depth_limited(self, capsys):
        code, out, _ = run(
            capsys, "exponent", "--builtin", "example", "--max-depth", "2"
        )
        assert code == 0
        assert out.startswith("not-found (depth")

    def test_check_primitive(self, capsys):
        code, out, _ = run(capsys, "check", "--builtin", "example")
        assert code == 0
        assert "nz: true" in out
        assert "irreducible: true" in out
        assert "primitive: true" in out

    def test_check_non_primitive_certificate(self, capsys, tmp_path):
        path = tmp_path / "cycle.set"
        path.write_text("2 1\n\n01\n10\n")
        code, out, _ = run(capsys, "check", "--file", str(path))
        assert code == 0
        assert "primitive: false" in out
        assert "certificate:" in out

    def test_krt_profile(self, capsys):
        code, out, _ = run(capsys, "krt", "--builtin", "example")
        assert code == 0
        assert "k=2 rt=1" in out
        assert "k=3 rt=2" in out
        assert "exponent=7" in out

    def test_witness_verifies(self, capsys):
        code, out, _ = run(capsys, "witness", "--n", "10", "--k", "3")
        assert code == 0
        assert "verified=true" in out
        assert "evaluated=3" in out

    def test_heuristic_trace(self, capsys):
        code, out, _ = run(capsys, "heuristic", "--builtin", "cpr", "--mode", "any")
        assert code == 0
        assert "k=4 length=" in out
        assert out.startswith("mode=any")


class TestAutomataCommands:
    def test_construct_lists_letters(self, capsys):
        code, out, _ = run(capsys, "automata", "construct", "--builtin", "example")
        assert code == 0
        assert "aut: 3 letters" in out
        assert "aut_T: 3 letters" in out

    def test_rt(self, capsys):
        code, out, _ = run(capsys, "automata", "rt", "--builtin", "example")
        assert code == 0
        assert "aut: rt=2" in out
        assert "aut_T: rt=3" in out

    def test_sandwich(self, capsys):
        code, out, _ = run(capsys, "automata", "sandwich", "--builtin", "example")
        assert code == 0
        assert "rt_aut=2" in out
        assert "exponent=7" in out
        assert "tight=true" in out

    def test_krt_equality(self, capsys):
        code, out, _ = run(
            capsys, "automata", "krt-equality", "--builtin", "example", "--k", "3"
        )
        assert code == 0
        assert "equal=true" in out

    def test_krt_table(self, capsys):
        code, out, _ = run(capsys, "automata", "krt", "--builtin", "cpr")
        assert code == 0
        rows = long_rows(out)
        mins = {k: v for (_, k, q, v, _c) in rows if q == "rt_min"}
        assert mins[2] == 1

    def test_letter_cap_error(self, capsys):
        code, out, err = run(
            capsys, "automata", "construct", "--builtin", "example",
            "--letter-cap", "2",
        )
        assert code == 1
        assert err.startswith("letter-cap:")
        assert "3 letters" in err


class TestBoundsCommand:
    def test_f_below_b_in_every_row(self, capsys):
        code, out, _ = run(capsys, "bounds", "--n", "10", "--k-max", "10")
        assert code == 0
        rows = long_rows(out)
        b = {k: v for (_, k, q, v, _c) in rows if q == "B"}
        f = {k: v for (_, k, q, v, _c) in rows if q == "F"}
        assert set(b) == set(f) == set(range(2, 11))
        for k in range(2, 11):
            assert f[k] <= b[k]

    def test_single_k_includes_refined_escape(self, capsys):
        code, out, _ = run(capsys, "bounds", "--n", "10", "--k", "3")
        assert code == 0
        rows = long_rows(out)
        quantities = {q for (_, _, q, _, _) in rows}
        assert "ahat_p1" in quantities
        assert "szykula" in quantities

    def test_ceil_variant_renames_quantity(self, capsys):
        code, out, _ = run(capsys, "bounds", "--n", "10", "--k", "4", "--ceil-variant")
        assert code == 0
        assert "B_ceil" in out


class TestFigures:
    def test_fig2a_deterministic(self, capsys):
        _, first, _ = run(capsys, "figure", "fig2a")
        _, second, _ = run(capsys, "figure", "fig2a")
        assert first == second
        rows = long_rows(first)
        rt = {k: v for (_, k, q, v, _c) in rows if q == "rt"}
        assert rt[2] == 1

    def test_fig5_includes_f_column(self, capsys):
        code, out, _ = run(capsys, "figure", "fig5", "--builtin", "cpr")
        assert code == 0
        quantities = {q for (_, _, q, _, _) in long_rows(out)}
        assert quantities == {"rt", "F", "B"}

    def test_fig3_requires_file(self, capsys):
        code, _, err = run(capsys, "figure", "fig3")
        assert code == 1
        assert err.startswith("domain:")

    def test_fig3_with_file(self, capsys):
        code, out, _ = run(capsys, "figure", "fig3", "--file", str(DATA / "cpr.set"))
        assert code == 0
        quantities = {q for (_, _, q, _, _) in long_rows(out)}
        assert quantities == {"heuristic", "B"}

    def test_fig4_accepts_multiple_files(self, capsys):
        code, out, _ = run(
            capsys,
            "figure", "fig4",
            "--file", str(DATA / "cpr.set"),
            "--file", str(DATA / "kari.set"),
            "--k", "3",
        )
        assert code == 0
        rows = long_rows(out)
        assert {n for (n, _, _, _, _) in rows} == {4, 6}
        assert all(k == 3 for (_, k, _, _, _) in rows)

    def test_multiple_files_rejected_elsewhere(self, capsys):
        code, _, err = run(
            capsys,
            "figure", "fig3",
            "--file", str(DATA / "cpr.set"),
            "--file", str(DATA / "kari.set"),
        )
        assert code == 1
        assert "fig4" in err

    def test_fig7_fixed_k(self, capsys):
        code, out, _ = run(capsys, "figure", "fig7", "--k", "5", "--n-max", "30")
        assert code == 0
        rows = long_rows(out)
        assert {n for (n, _, _, _, _) in rows} == set(range(5, 31))

    def test_fig8_threshold_table(self, capsys):
        code, out, _ = run(
            capsys, "figure", "fig8", "--k-max", "8", "--n-max", "100"
        )
        assert code == 0
        rows = long_rows(out)
        thresholds = {k: v for (_, k, q, v, _c) in rows if q == "threshold_n"}
        conjectured = {k: v for (_, k, q, v, _c) in rows if q == "conjectured_n_k"}
        assert conjectured == {7: 54, 8: 76}
        assert thresholds == {7: 54, 8: 76}

    def test_fig9_wide_format(self, capsys):
        code, out, _ = run(capsys, "figure", "fig9", "--n-max", "20")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "n,F_n,B_n,szykula,n3_over_3"
        assert len(lines) == 20  # header + n in [2, 20]
        n, f, b, szy, ref = lines[9].split(",")
        assert n == "10"
        assert parse_fraction(f) <= parse_fraction(b)
        assert parse_fraction(szy) == Fraction(15617 * 1000 + 7500 * 100 + 93750 - 31250, 93750)
        assert parse_fraction(ref) == Fraction(1000, 3)


class TestScanCommand:
    def test_scan_reports_cells_and_thresholds(self, capsys):
        code, out, _ = run(capsys, "scan", "--n-max", "30", "--k", "4")
        assert code == 0
        rows = long_rows(out)
        eq = [(n, v) for (n, _, q, v, _c) in rows if q == "F_eq_B"]
        assert all(v == 1 for (n, v) in eq if n >= 21)
        quantities = {q for (_, _, q, _, _) in rows}
        assert "conjectured_n_k" in quantities


class TestErrors:
    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "check", "--file", "/nonexistent.set")
        assert code == 1
        assert err.startswith("set-file:")

    def test_domain_error_category(self, capsys):
        code, _, err = run(capsys, "witness", "--n", "3", "--k", "3")
        assert code == 1
        assert err.startswith("domain:")

    def test_parse_error_category(self, capsys, tmp_path):
        path = tmp_path / "bad.set"
        path.write_text("2 1\n\n1x\n01\n")
        code, _, err = run(capsys, "check", "--file", str(path))
        assert code == 1
        assert err.startswith("set-file: line 3")
