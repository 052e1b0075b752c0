import cxlab
import pytest

XY = "p=32003; vars x,y; ci: x*y"
SQUARES = "p=32003; vars x,y; ci: x^2,y^2"


def test_ring_invariants():
    r = cxlab.Ring(SQUARES)
    assert r.characteristic == 32003
    assert (r.nvars, r.codim, r.krull_dim, r.depth) == (2, 2, 0, 0)
    assert r.hilbert_series(5) == [1, 2, 1, 0, 0, 0]


def test_residue_field_betti_numbers():
    r = cxlab.Ring(SQUARES)
    res = cxlab.resolve(cxlab.Module(r, "k"), 16)
    assert res.betti_totals() == list(range(1, 18))
    assert cxlab.complexity(res)["value"] == 2
    with pytest.raises(cxlab.InvalidInput):
        cxlab.complexity(cxlab.resolve(cxlab.Module(r, "k"), 8))


def test_hypersurface_strips():
    ex = cxlab.hypersurface_example()
    assert ex["betti_ok"] and ex["tor_ok"] and ex["ext_ok"]
    assert ex["ext_strip"].splitlines()[1].startswith("Ext: 0 * 0 *")


def test_tor_dims():
    r = cxlab.Ring(XY)
    rep = cxlab.tor(cxlab.Module(r, "quotient x"), cxlab.Module(r, "quotient y"), 0, 4)
    assert [rep["is_zero"][str(i)] for i in range(5)] == [False, True, False, True, False]


def test_reduction_chain_reaches_zero():
    r = cxlab.Ring(SQUARES)
    steps = cxlab.reduction_chain(cxlab.Module(r, "k"))
    assert len(steps) == 2
    assert [s["verdict"]["cx_K"]["value"] for s in steps] == [1, 0]
    assert all(s["verdict"]["passed"] for s in steps)


def test_even_gap_rejected():
    r = cxlab.Ring(XY)
    with pytest.raises(cxlab.InvalidInput, match="even"):
        cxlab.check_uniform_gap(cxlab.Module(r, "quotient x"), cxlab.Module(r, "quotient y"), 2, 2)


def test_uniform_gap_check():
    r = cxlab.Ring(XY)
    rep = cxlab.check_uniform_gap(cxlab.Module(r, "quotient x"), cxlab.Module(r, "ring"), 1, 1)
    assert rep["hypothesis_met"] and rep["conclusion_verified"]


def test_bad_ring_raises():
    with pytest.raises(cxlab.InvalidInput):
        cxlab.Ring("p=32003; vars x,y; ci: x^2,x*y")


def test_random_module_deterministic():
    r = cxlab.Ring(XY)
    assert str(cxlab.random_module(r, 7)) == str(cxlab.random_module(r, 7))
