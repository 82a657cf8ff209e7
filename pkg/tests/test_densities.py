from __future__ import annotations

import math

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import trefoil
from linkdensity.densities import (
    V3,
    V8,
    InconsistentOracleError,
    VolumeOracle,
    adams_upper,
    adams_upper_value,
    det_density,
    det_density_value,
    lackenby_upper,
    ln_big,
    vol_density_interval,
    xi,
)
from linkdensity.diagram import LinkDiagram, braid_link, closure, pretzel_tangle, weaving_tangle
from linkdensity.errors import DomainError


def test_constants():
    mpmath.mp.dps = 30
    assert abs(V8 - float(4 * mpmath.catalan)) < 1e-12
    assert abs(V3 - 1.014941606409653) < 1e-12
    # three times the Lobachevsky function at pi/3, via Clausen
    assert abs(V3 - float(mpmath.clsin(2, 2 * mpmath.pi / 3) * 3 / 2)) < 1e-12


@given(st.integers(1, 10**400))
def test_ln_big(n):
    assert ln_big(n) == pytest.approx(float(mpmath.log(n)), rel=1e-13, abs=1e-15)


def test_ln_big_domain():
    with pytest.raises(DomainError):
        ln_big(0)


def test_det_density_examples():
    rep = det_density(closure(pretzel_tangle(3, 1, 3), "D"))
    assert rep.determinant == 15 and rep.crossings == 7
    assert rep.det_density == pytest.approx(2 * math.pi * math.log(15) / 7, rel=1e-14)
    assert abs(rep.det_density - 2.4305) < 1e-3
    assert rep.certified_crossing
    assert det_density(braid_link((2, [1]))).det_density == 0.0
    assert det_density_value(0, 3) == -math.inf


def test_det_density_zero_crossings():
    with pytest.raises(DomainError):
        det_density(LinkDiagram((), 1))


def test_weave_densities_increase_below_v8():
    vals = [det_density(closure(weaving_tangle(k, k), "D")).det_density for k in range(3, 9)]
    assert all(a < b for a, b in zip(vals, vals[1:]))
    assert max(vals) < V8


def test_alternating_corpus_below_v8(corpus):
    for D in corpus.values():
        if D.n_crossings:
            assert det_density(D).det_density < V8 + 1e-9


def test_xi():
    mpmath.mp.dps = 40
    for n in (12, 13, 50, 1000):
        exact = (1 - (8 * mpmath.pi / (mpmath.mpf("11.524") + n * mpmath.root(2, 4))) ** 2) ** mpmath.mpf(1.5)
        assert abs(xi(n) - float(exact)) < 1e-12
    assert xi(10**6) > 0.999999
    with pytest.raises(DomainError):
        xi(11)


def test_lackenby_examples():
    L = closure(pretzel_tangle(7, 9, 7), "N")
    assert lackenby_upper(L) == pytest.approx(20 * V3, abs=1e-12)
    with pytest.raises(DomainError):
        lackenby_upper(trefoil())
    # the N closure of W_{5,5} has 18 twist regions
    assert lackenby_upper(closure(weaving_tangle(5, 5), "N")) == pytest.approx(170 * V3, abs=1e-12)


def test_adams_examples(corpus):
    assert adams_upper_value(5) == pytest.approx(4 * V3)
    b = adams_upper(closure(weaving_tangle(4, 4), "N"))
    assert b.value == pytest.approx(7 * V8 + 4 * V3) and b.certified
    with pytest.raises(DomainError):
        adams_upper(trefoil())
    for D in corpus.values():
        if D.n_crossings >= 5:
            assert adams_upper_value(D.n_crossings) / D.n_crossings < V8


def test_interval_without_oracle():
    L = closure(pretzel_tangle(7, 9, 7), "N")
    iv = vol_density_interval(L)
    assert iv.lower == 0.0
    assert iv.upper == pytest.approx(20 * V3 / 23, rel=1e-14)
    assert iv.basis[0] == "lackenby"


def test_interval_with_oracle(tmp_path):
    L = closure(pretzel_tangle(7, 9, 7), "N").with_name("P797")
    path = tmp_path / "vol.csv"
    path.write_text("id,volume,source\nP797,15.0,test\n", encoding="utf-8")
    iv = vol_density_interval(L, VolumeOracle.from_csv(path))
    assert iv.lower == pytest.approx(15.0 / 23) and iv.lower <= iv.upper
    path.write_text("id,volume,source\nP797,25.0,test\n", encoding="utf-8")
    with pytest.raises(InconsistentOracleError):
        vol_density_interval(L, VolumeOracle.from_csv(path))


def test_oracle_header_checked(tmp_path):
    path = tmp_path / "vol.csv"
    path.write_text("name,vol\nx,1\n", encoding="utf-8")
    with pytest.raises(DomainError):
        VolumeOracle.from_csv(path)
