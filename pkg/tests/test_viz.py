"""Figure rendering smoke tests."""

from __future__ import annotations

from hypernet import Hypergraph, build_reduction, parse_dimacs
from hypernet.viz import layered_layout, render_figure
from generators import SAMPLE_CNF


def test_layered_layout_follows_depth():
    formula = parse_dimacs(SAMPLE_CNF)
    gadget, rmap = build_reduction(formula)
    positions = layered_layout(gadget)
    assert len(positions) == gadget.n_vertices
    xs = {v: positions[v][0] for v in positions}
    p = rmap.p_vertices
    assert xs[p[0]] < xs[p[1]] < xs[p[4]] < xs[rmap.q0_vertex] < xs[rmap.target]


def test_layout_handles_cycles():
    h = Hypergraph(3)
    h.add_edge({0}, {1})
    h.add_edge({1}, {0})
    assert len(layered_layout(h)) == 3


def test_render_gadget_with_highlight(tmp_path):
    formula = parse_dimacs(SAMPLE_CNF)
    gadget, rmap = build_reduction(formula)
    out = tmp_path / "gadget.png"
    render_figure(gadget, str(out), {rmap.forced_edge}, title="gadget")
    assert out.exists() and out.stat().st_size > 1000


def test_render_empty_and_pathological(tmp_path):
    out = tmp_path / "empty.png"
    render_figure(Hypergraph(0), str(out))
    assert out.exists()
    h = Hypergraph(2)
    h.add_edge(set(), {0})
    h.add_edge({1}, set())
    out2 = tmp_path / "odd.png"
    render_figure(h, str(out2))
    assert out2.exists()
