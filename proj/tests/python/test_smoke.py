"""Python smoke tests for the scrollreg extension module.

The build directory containing the compiled module is injected through
SCROLLREG_MODULE_DIR (set by ctest); an installed wheel works as well.
"""

import os
import sys

module_dir = os.environ.get("SCROLLREG_MODULE_DIR")
if module_dir:
    sys.path.insert(0, module_dir)

try:
    import _scrollreg as sr  # in-tree module next to the build dir
except ImportError:  # installed package
    import scrollreg as sr


def test_ring_and_parse():
    ring = sr.Ring(32003, ["x0", "x1", "x2", "x3"])
    f = sr.parse(ring, "x0*x2-x1^2")
    assert not f.is_zero()
    assert f.degree() == 2
    assert f.is_homogeneous()
    assert str(sr.parse(ring, "x0x2-x1^2")) == str(f)


def test_twisted_cubic_pipeline():
    ring = sr.Ring(32003, ["x0", "x1", "x2", "x3"])
    gens = [sr.parse(ring, t) for t in ("x0*x2-x1^2", "x0*x3-x1*x2", "x1*x3-x2^2")]
    ideal = sr.GradedIdeal(ring, gens)
    assert len(ideal.groebner_basis()) == 3
    assert ideal.contains(sr.parse(ring, "x1^3-x0^2*x3"))
    assert not ideal.contains(sr.parse(ring, "x1^3-x0*x2*x3"))

    h = sr.hilbert(ideal)
    assert h["dimension"] == 2
    assert h["degree"] == 3

    betti = sr.betti_table(ideal)
    assert betti[(1, 1)] == 3
    assert betti[(2, 1)] == 2

    rd = sr.reg_depth(ideal)
    assert rd["reg"] == 2
    assert rd["depth"] == 2


def test_ideal_ops():
    ring = sr.Ring(32003, ["x", "y"])
    x = sr.parse(ring, "x")
    y = sr.parse(ring, "y")
    xy = sr.GradedIdeal(ring, [x * y])
    quotient = sr.colon(xy, y)
    assert sr.ideal_equal(quotient, sr.GradedIdeal(ring, [x]))
    meet = sr.intersect(sr.GradedIdeal(ring, [x]), sr.GradedIdeal(ring, [y]))
    assert sr.ideal_equal(meet, xy)
    sat = sr.saturate_irrelevant(sr.GradedIdeal(ring, [x * x, x * y]))
    assert sr.ideal_equal(sat, sr.GradedIdeal(ring, [x]))


def test_scroll_and_length():
    s12 = sr.scroll_ideal([1, 2], 32003)
    h = sr.hilbert(s12)
    assert (h["dimension"], h["degree"]) == (3, 3)


def test_oracles():
    assert sr.oracles.h1_divisor_surface(2, 7, 10) == 1
    assert sr.oracles.beta1_divisor_surface(1, 5, 6) == 10
    assert sr.oracles.tau_cases(6, 8) == [(2, 3)]
    assert sr.oracles.h2_depth_two_table(8, 9, 0) == 3


def test_example_invariants():
    rep = sr.invariants("example-7.3", with_plane=True)
    assert rep["degree"] == 8
    assert rep["reg"] == 5
    assert rep["depth"] == 2
    assert rep["tau"] == (2, 3)
    assert rep["betti_x"][(1, 1)] == 6
    assert rep["betti_x"][(5, 4)] == 1
    assert rep["normality_index"] is None
    assert rep["e"] == 6
    assert rep["consistent"]
