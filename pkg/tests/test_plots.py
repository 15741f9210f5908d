from __future__ import annotations

from ulc.graph import cycle, figure1
from ulc.plots import plot_m_histogram, plot_outcomes
from ulc.verify import CheckOutcome, check_bound

PNG = b"\x89PNG\r\n\x1a\n"


def test_plot_outcomes_writes_png(tmp_path):
    outcomes = [check_bound(figure1()), check_bound(cycle(5)),
                CheckOutcome("bound", "made-up", 5, 3, False)]
    path = plot_outcomes(outcomes, tmp_path / "sub" / "o.png", title="bound")
    assert path.read_bytes()[:8] == PNG


def test_plot_outcomes_empty(tmp_path):
    assert plot_outcomes([], tmp_path / "e.png").exists()


def test_histogram(tmp_path):
    path = plot_m_histogram([2, 2, 3, 4], [3, 3, 4, 4], tmp_path / "h.png")
    assert path.read_bytes()[:8] == PNG
