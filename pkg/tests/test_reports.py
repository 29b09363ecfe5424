from reports import Report, render, summarize


def _sample() -> Report:
    report = Report(title="laws", algebra="ex2")
    report.add("one", True, detail="x <= x")
    report.add("two", False, {"x": "e", "y": "0"}, "x*y <= y")
    return report


class TestReport:
    def test_passed_and_failures(self):
        report = _sample()
        assert not report.passed
        assert [r.check for r in report.failures] == ["two"]

    def test_extend_prefixes(self):
        outer = Report(title="outer")
        outer.extend(_sample())
        assert [r.check for r in outer.results] == ["laws/one", "laws/two"]

    def test_text_rendering(self):
        text = render([_sample()])
        assert text.splitlines() == [
            "== laws [ex2]: FAIL",
            "  ok   one  x <= x",
            "  FAIL two  x*y <= y  (x=e, y=0)",
        ]

    def test_witnesses_can_be_hidden(self):
        assert "(x=e" not in render([_sample()], witnesses=False)

    def test_tsv_rendering(self):
        lines = render([_sample()], fmt="tsv").splitlines()
        assert lines[2] == "ex2\tlaws\ttwo\tfail\tx=e, y=0\tx*y <= y"

    def test_summarize(self):
        stats = summarize([_sample(), Report(title="empty")])
        assert stats == {"reports": 2, "checks": 2, "failed": 1, "passed": False}
