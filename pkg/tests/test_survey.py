import json
from fractions import Fraction

import pytest

from relroots.families import complete, cycle, k4_minus_e
from relroots.formats import to_graph6
from relroots.graph import Multigraph
from relroots.survey import (
    CONNECTED_LABELED,
    exhaustive_survey,
    forms_fast,
    kn_root_trend,
    random_survey,
    survey_row,
    survey_stem,
)
from relroots.reliability import forms


def test_forms_fast_matches_forms():
    for G in (complete(5), cycle(7), k4_minus_e()[0]):
        F, H = forms_fast(G)
        f = forms(G)
        assert tuple(F) == f.F and tuple(H) == f.H


def test_survey_row_fields():
    row = survey_row(complete(4))
    assert row.graph_id == to_graph6(complete(4))
    assert (row.c1, row.c2, row.verdict) == (0, 0, "CertifiedNonreal")
    assert row.n_distinct_real == 1 and not row.real_rooted
    assert row.edge_connectivity == 3
    data = json.loads(row.to_json())
    assert set(data) >= {"graph_id", "n", "m", "d", "c1", "c2", "verdict", "real_rooted"}


def test_survey_row_multigraph_id():
    row = survey_row(Multigraph(2, ((0, 1), (0, 1))))
    assert row.graph_id == "2:0-1;0-1"


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_exhaustive_totals(n):
    res = exhaustive_survey(n)
    assert res.total == CONNECTED_LABELED[n]
    assert res.parity_violations == 0
    assert sum(res.histogram.values()) == res.total


def test_exhaustive_small_histograms():
    # triangle -> 1 root, the three paths -> none
    assert exhaustive_survey(3).histogram == {0: 3, 1: 1}
    res = exhaustive_survey(graphs=[k4_minus_e()[0], cycle(4)])
    assert res.histogram == {0: 1, 1: 1}


def test_exhaustive_range():
    with pytest.raises(ValueError):
        exhaustive_survey(7)


def test_random_survey_is_deterministic(tmp_path):
    a = random_survey(6, Fraction(1, 2), 40, 11)
    b = random_survey(6, "1/2", 40, 11, out_dir=tmp_path)
    assert a.jsonl() == b.jsonl()
    stem = survey_stem(b.summary)
    assert (tmp_path / f"{stem}.jsonl").read_text() == a.jsonl()
    summary = json.loads((tmp_path / f"{stem}.summary.json").read_text())
    assert summary["connected"] + summary["disconnected"] == 40
    assert summary["contradictions"] == 0


def test_random_survey_complete_graphs():
    res = random_survey(10, 1, 3, 0)
    assert res.summary.connected == 3
    assert all(r.verdict == "CertifiedNonreal" and r.c2 == 0 for r in res.rows)


def test_random_survey_counts_disconnected():
    res = random_survey(8, Fraction(1, 10), 30, 2, with_lambda=False)
    assert res.summary.disconnected > 0
    assert len(res.rows) == res.summary.connected


def test_lambda_three_implies_certified():
    res = random_survey(9, Fraction(3, 5), 60, 5)
    for r in res.rows:
        if r.edge_connectivity >= 3 and r.d >= 2:
            assert r.c1 == 0 and r.c2 == 0 and r.verdict == "CertifiedNonreal"


@pytest.mark.parametrize("args", [(3, 1, 5, 0), (13, 1, 5, 0), (6, 0, 5, 0), (6, Fraction(3, 2), 5, 0),
                                  (6, 1, 0, 0)])
def test_random_survey_argument_checks(args):
    with pytest.raises(ValueError):
        random_survey(*args)


def test_kn_trend():
    trend = kn_root_trend(12)
    by_n = {r.n: r for r in trend.rows}
    assert by_n[3].min_root == (Fraction(-1, 2), Fraction(-1, 2))
    # odd corank forces a root; K5 (corank 6) happens to have none
    assert by_n[5].min_root is None and by_n[5].n_distinct_real == 0
    rooted = [r for r in trend.rows if r.min_root is not None]
    assert all(-1 < r.approx < 0 for r in rooted)
    assert trend.strictly_decreasing and trend.violations() == []
    lines = trend.csv().splitlines()
    assert lines[0] == "n,min_real_root,n_distinct_real" and lines[3] == "5,,0"


def test_kn_trend_range():
    with pytest.raises(ValueError):
        kn_root_trend(2)
    with pytest.raises(ValueError):
        kn_root_trend(15)
