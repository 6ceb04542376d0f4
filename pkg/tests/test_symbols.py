import numpy as np
import pytest
from scipy import integrate

from polybergman.jacobi import eval_shifted_jacobi
from polybergman.symbols import RadialSymbol, parse_symbol, symbol_weighted_nodes


def test_parse_forms():
    assert parse_symbol("one")(0.3) == 1.0
    a = parse_symbol("poly:1,-2,0.5")
    assert a.kind == "polynomial" and a(0.5) == pytest.approx(1 - 2 * 0.25 + 0.5 * 0.0625)
    s = parse_symbol("step:0.5=1")
    assert s(0.2) == 0 and s(0.5) == 1 and s(0.9) == 1
    s = parse_symbol("step:0=2,0.3=-1,0.7=0.5")
    assert [s(r) for r in (0.0, 0.29, 0.3, 0.69, 0.99)] == [2, 2, -1, -1, 0.5]
    assert parse_symbol("pow:2").kind == "polynomial"
    p3 = parse_symbol("pow:3")
    assert p3.kind == "callable" and p3(0.5) == pytest.approx(0.125)
    assert parse_symbol("poly:0,1i")(0.5) == pytest.approx(0.25j)
    assert parse_symbol(" poly:2 ").spec == "poly:2"
    assert RadialSymbol.polynomial([2]).spec == "poly:2"


@pytest.mark.parametrize("bad", ["", "zero", "poly:", "poly:a", "step:0.5", "step:0.7=1,0.3=2",
                                 "step:1.0=1", "pow:-1", "pow:x", "step:-0.1=1"])
def test_parse_errors(bad):
    with pytest.raises(ValueError):
        parse_symbol(bad)


def test_constructor_errors():
    with pytest.raises(ValueError):
        RadialSymbol("spline")
    with pytest.raises(ValueError):
        RadialSymbol.polynomial([])
    with pytest.raises(ValueError):
        RadialSymbol.step([0.2, 0.4], [1.0])
    with pytest.raises(ValueError):
        RadialSymbol("callable", func=None)
    with pytest.raises(ValueError):
        RadialSymbol.power(1.5)


def test_shapes():
    a = parse_symbol("step:0.5=1")
    assert np.ndim(a(0.7)) == 0
    assert a(np.zeros((2, 3))).shape == (2, 3)
    c = RadialSymbol.from_callable(lambda r: 2.0)
    assert c(np.zeros(4)).shape == (4,)


def test_sup_norms():
    assert parse_symbol("one").sup_norm == 1.0
    # 4t - 4t^2 peaks at t = 1/2
    assert parse_symbol("poly:0,4,-4").sup_norm == pytest.approx(1.0, rel=1e-14)
    assert parse_symbol("poly:1,-3").sup_norm == pytest.approx(2.0)
    assert parse_symbol("poly:0,1i").sup_norm == pytest.approx(1.0)
    assert parse_symbol("step:0.3=2,0.6=-3").sup_norm == 3.0
    assert parse_symbol("pow:5").sup_norm == 1.0
    c = RadialSymbol.from_callable(lambda r: 1 - r)
    assert c.sup_is_estimate and c.sup_norm == pytest.approx(1.0)
    with pytest.raises(ValueError), np.errstate(divide="ignore"):
        RadialSymbol.from_callable(lambda r: 1 / (r - r))


def test_is_real():
    assert parse_symbol("poly:1,2").is_real
    assert not parse_symbol("poly:1,2i").is_real
    assert not parse_symbol("step:0.1=1i").is_real
    assert RadialSymbol.from_callable(lambda r: r).is_real


def reference(a, alpha, d, F):
    """QUADPACK in r with the breakpoints of a."""
    pts = list(getattr(a, "breakpoints", []))

    def g(r):
        t = r * r
        return complex(a(r)) * F(t) * (1 - t) ** alpha * t**d * 2 * r

    re = integrate.quad(lambda r: g(r).real, 0, 1, points=pts or None, limit=400, epsabs=1e-14, epsrel=1e-13)[0]
    im = integrate.quad(lambda r: g(r).imag, 0, 1, points=pts or None, limit=400, epsabs=1e-14, epsrel=1e-13)[0]
    return re + 1j * im


@pytest.mark.parametrize("spec", ["poly:1,-2,3", "step:0.5=1", "step:0=2,0.3=-1,0.7=0.5", "pow:1", "pow:3", "poly:0,1i"])
@pytest.mark.parametrize("alpha", [0.0, 0.5, 2.0])
@pytest.mark.parametrize("d", [0, 3])
def test_symbol_weighted_nodes(spec, alpha, d):
    a = parse_symbol(spec)
    t, w = symbol_weighted_nodes(a, alpha, d, 64)

    def F(t):
        return eval_shifted_jacobi(5, alpha, d, t) ** 2

    assert np.sum(w * F(t)) == pytest.approx(reference(a, alpha, d, F), rel=1e-9, abs=1e-12)


def test_symbol_weighted_nodes_one_minus_r():
    a = RadialSymbol.from_callable(lambda r: 1 - r, sup_norm=1.0)
    t, w = symbol_weighted_nodes(a, 0.0, 2, 64)
    # int (1 - sqrt t) t^2 dt = 1/3 - 2/7
    assert np.sum(w) == pytest.approx(1 / 3 - 2 / 7, rel=1e-14)


def test_zero_step_symbol():
    t, w = symbol_weighted_nodes(RadialSymbol.step([0.5], [0.0]), 0.0, 1, 16)
    assert np.all(w == 0)
