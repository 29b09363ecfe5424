import pytest

from algebra_file import save_algebra
from main import EXIT_FAILED, EXIT_INPUT, EXIT_OK, run

BAD_ARROW = """{
  "name": "bad",
  "size": 3,
  "elements": ["0", "e", "1"],
  "leq": [[0, 1], [1, 2]],
  "prod": [[0, 0, 0], [0, 1, 2], [0, 2, 2]],
  "unit": 1,
  "arrow": [[1, 1, 1], [1, 1, 1], [1, 1, 1]]
}
"""

BAD_PRODUCT = """{
  "size": 2,
  "elements": ["0", "1"],
  "leq": [[0, 1]],
  "prod": [[0, 1], [0, 1]],
  "unit": 1,
  "Q": [0, 1]
}
"""


class TestVerbs:
    def test_check_builtin(self, capsys):
        assert run(["check", "examples:ex2"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "ex2: size=3 integral=False" in out
        assert "Q={0,e}" in out

    def test_check_file(self, tmp_path, dia, capsys):
        path = save_algebra(dia, tmp_path / "diamond.alg")
        assert run(["check", str(path)]) == EXIT_OK
        assert "sr_lattice=True" in capsys.readouterr().out

    def test_check_reports_basis_failure(self, tmp_path, capsys):
        path = tmp_path / "bad.alg"
        path.write_text(BAD_ARROW)
        assert run(["check", str(path)]) == EXIT_FAILED
        out = capsys.readouterr().out
        assert "== thm1-basis [bad]: FAIL" in out
        assert "FAIL 3" in out
        assert "(x=e, y=0)" in out

    def test_check_reports_lmonoid_failure(self, tmp_path, capsys):
        path = tmp_path / "bad.alg"
        path.write_text(BAD_PRODUCT)
        assert run(["check", str(path)]) == EXIT_FAILED
        out = capsys.readouterr().out
        assert "FAIL commutativity" in out
        assert "(a=0, b=1)" in out

    def test_convex_with_witnesses(self, capsys):
        assert run(["convex", "examples:diamond", "--gen", "a", "--witnesses"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "C[a] = {0,a,b,1}" in out
        assert "b <= e via h=a, n=1, m=1" in out

    def test_congruences(self, capsys):
        assert run(["congruences", "examples:ex2"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "Con: 2" in out
        assert "SCS: 2" in out
        assert "subdirectly irreducible: True" in out

    def test_principal(self, capsys):
        assert run(["principal", "examples:diamond", "--pair", "a,b"]) == EXIT_OK
        assert "theta(a,b) = {0,a,b,1}  s=0" in capsys.readouterr().out

    def test_identity_failure_exits_one(self, capsys):
        assert run(["identity", "examples:diamond", "E2"]) == EXIT_FAILED
        assert "z=1, x=a, y=b" in capsys.readouterr().out

    def test_identity_defaults_to_chain_identities(self, capsys):
        assert run(["identity", "examples:ex2"]) == EXIT_OK
        out = capsys.readouterr().out
        for tag in ("C1", "C2", "E1", "E2", "LATDIST", "PRODMEETDIST"):
            assert tag in out

    def test_residuate(self, tmp_path, ex2, capsys):
        path = save_algebra(ex2.monoid, tmp_path / "m.alg")
        assert run(["residuate", str(path), "--q", "0,e"]) == EXIT_OK
        assert '"arrow": [[1, 1, 1], [0, 1, 1], [0, 0, 1]]' in capsys.readouterr().out

    def test_examples(self, capsys):
        assert run(["examples"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "examples:ex2" in out and "examples:diamond" in out

    def test_suite_single_algebra(self):
        assert run(["suite", "examples:ex3", "--fast"]) == EXIT_OK

    def test_enumerate_then_suite_full(self, tmp_path, capsys):
        assert run(["enumerate", "--max-size", "2", "--catalog", str(tmp_path)]) == EXIT_OK
        assert "n=2: 1" in capsys.readouterr().out
        assert run(["suite", "full", "--max-size", "2", "--catalog", str(tmp_path), "--format", "tsv"]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith("algebra\treport\tcheck\tverdict")


class TestInputErrors:
    def test_missing_file(self, tmp_path):
        assert run(["check", str(tmp_path / "missing.alg")]) == EXIT_INPUT

    def test_missing_target(self):
        assert run(["check"]) == EXIT_INPUT

    def test_positive_generator(self, capsys):
        assert run(["convex", "examples:ex2", "--gen", "1"]) == EXIT_INPUT
        assert "negative cone" in capsys.readouterr().err

    def test_unknown_identity(self):
        assert run(["identity", "examples:ex2", "nope"]) == EXIT_INPUT

    def test_residuate_needs_q(self):
        assert run(["residuate", "examples:ex2"]) == EXIT_INPUT

    def test_principal_needs_pair(self):
        assert run(["principal", "examples:ex2", "--pair", "e"]) == EXIT_INPUT

    def test_other_verbs_reject_invalid_tables(self, tmp_path):
        path = tmp_path / "bad.alg"
        path.write_text(BAD_ARROW)
        assert run(["congruences", str(path)]) == EXIT_INPUT

    def test_monoid_file_for_srl_verb(self, tmp_path, ex2):
        path = save_algebra(ex2.monoid, tmp_path / "m.alg")
        assert run(["congruences", str(path)]) == EXIT_INPUT

    def test_unknown_verb(self):
        with pytest.raises(SystemExit):
            run(["frobnicate"])


class TestFastFlag:
    def test_convex_checks_the_oracle_by_default(self, monkeypatch, capsys):
        import convex_generation
        from congruences import describe_subset

        monkeypatch.setattr(convex_generation, "generated_scs_oracle", lambda s, gen: describe_subset(s, 0b1111))
        assert run(["convex", "examples:diamond", "--gen", "1"]) == EXIT_FAILED
        assert "oracle disagrees: {0,a,b,1}" in capsys.readouterr().out

    def test_convex_fast_skips_the_oracle(self, monkeypatch, capsys):
        import convex_generation

        def fail(*args, **kwargs):
            raise AssertionError("oracle should not run")

        monkeypatch.setattr(convex_generation, "generated_scs_oracle", fail)
        assert run(["convex", "examples:diamond", "--gen", "1", "--fast"]) == EXIT_OK
        assert "C[1] = {1}" in capsys.readouterr().out

    @pytest.mark.parametrize("argv, expected", [([], None), (["--fast"], False)])
    def test_congruences_passes_verify(self, monkeypatch, argv, expected):
        import congruences

        seen = []
        original = congruences.class_of_e

        def recording(s, t, verify=None):
            seen.append(verify)
            return original(s, t, verify)

        monkeypatch.setattr(congruences, "class_of_e", recording)
        assert run(["congruences", "examples:ex2", *argv]) == EXIT_OK
        assert seen == [expected, expected]

    @pytest.mark.parametrize("argv, expected", [([], None), (["--fast"], False)])
    def test_principal_passes_verify(self, monkeypatch, argv, expected):
        import convex_generation

        seen = []
        original = convex_generation.principal_theta_via_thmpc

        def recording(s, a, b, verify=None):
            seen.append(verify)
            return original(s, a, b, verify)

        monkeypatch.setattr(convex_generation, "principal_theta_via_thmpc", recording)
        assert run(["principal", "examples:diamond", "--pair", "a,b", *argv]) == EXIT_OK
        assert seen == [expected]
