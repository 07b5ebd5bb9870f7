import pytest

from coconvex.fuzz import run_fuzz


def test_replay_gives_identical_summary(tmp_path):
    a = run_fuzz(2, 12, seed=5, witness_dir=str(tmp_path))
    b = run_fuzz(2, 12, seed=5, witness_dir=str(tmp_path))
    assert a.lines() == b.lines()
    assert not a.failed
    assert a.remark_agree == 24


def test_summary_counts(tmp_path):
    s = run_fuzz(3, 10, seed=2, witness_dir=str(tmp_path))
    for check in ("convexity", "bm", "cylinder"):
        assert sum(n for (c, _), n in s.verdicts.items() if c == check) == 10
    # trial 0 is a homothety pair and trial 0 also gets a segment-translate cylinder pair
    assert s.certificates[("bm", "Homothets")] >= 1
    assert s.certificates[("cylinder", "OrthogonalSegmentTranslate")] >= 1
    assert not list(tmp_path.iterdir())


@pytest.mark.parametrize("dim, count", [(1, 5), (5, 5), (2, 0)])
def test_argument_checks(dim, count):
    with pytest.raises(ValueError):
        run_fuzz(dim, count, seed=0)
