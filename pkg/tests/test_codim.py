from __future__ import annotations

from fractions import Fraction

import pytest
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from stratakit.codim import (
    Convention,
    codim_bundle_pencil,
    codim_orbit_pencil,
    codim_orbit_segre_oracle,
    codim_poly,
    weyr_orbit_codim,
)
from stratakit.eigenstruct import Eigenstructure, iter_bundle_keys
from stratakit.errors import InvalidInput
from stratakit.extract import kcf_witness
from stratakit.extract.fixtures import FIXTURES

from conftest import labeled_structures, zero_structure

TABLE_CODIM = {
    "P1": 0, "P2": 1, "P3": 2, "P4": 2, "P5": 2, "P6": 2, "P7": 2, "P8": 3, "P9": 3, "P10": 3,
    "P11": 3, "P12": 4, "P13": 4, "P14": 4, "P15": 5, "P16": 5, "P17": 6, "P18": 7, "P19": 8,
}  # fmt: skip
SINGULAR_ROWS = {"P5", "P6", "P7", "P10", "P11", "P12", "P16", "P19"}


def _q(x):
    x = Fraction(x)
    return QQ(x.numerator, x.denominator)


def tangent_codim(e: Eigenstructure) -> int:
    """Codimension of the orbit of a concrete Kronecker pencil ``A + lambda B``.

    The tangent space at the pencil is the image of ``(X, Y) -> (XA + AY,
    XB + BY)``; its rank over the rationals is the orbit dimension.
    """
    P = kcf_witness(e)
    m, n = e.rows, e.cols
    A, B = P.coefficient(0), P.coefficient(1)
    cols = []
    for i in range(m):
        for j in range(m):  # X = E_ij: row i of the image gets row j of A / B
            img = [[0] * n for _ in range(m)], [[0] * n for _ in range(m)]
            for c in range(n):
                img[0][i][c] = A[j][c]
                img[1][i][c] = B[j][c]
            cols.append(img)
    for i in range(n):
        for j in range(n):  # Y = E_ij: column j of the image gets column i of A / B
            img = [[0] * n for _ in range(m)], [[0] * n for _ in range(m)]
            for r in range(m):
                img[0][r][j] = A[r][i]
                img[1][r][j] = B[r][i]
            cols.append(img)
    rows = [[_q(x) for M in img for row in M for x in row] for img in cols]
    rank = DomainMatrix(rows, (len(rows), 2 * m * n), QQ).rank()
    return 2 * m * n - rank


# -- examples ---------------------------------------------------------------------


def test_zero_pencil():
    z = zero_structure(2, 2)
    assert codim_orbit_pencil(z) == 8
    rep = codim_bundle_pencil(z)
    assert (rep.orbit_codim, rep.bundle_codim, rep.convention) == (8, 8, None)


def test_regular_pencil_with_four_simple_eigenvalues():
    e = Eigenstructure(4, 4, 1, (), (), {"@a": (1,), "@b": (1,), "@c": (1,), "@d": (1,)})
    assert codim_orbit_pencil(e) == 4
    assert codim_bundle_pencil(e).bundle_codim == 0


def test_singular_pencil_examples():
    assert codim_orbit_pencil(Eigenstructure(4, 4, 1, (1,), (2,))) == 5
    assert codim_orbit_segre_oracle(Eigenstructure(4, 4, 1, (1, 1), (0, 0))) == 12
    assert codim_orbit_segre_oracle(Eigenstructure(2, 2, 1, (1,), (0,))) == 3


def test_jordan_block_examples():
    assert codim_orbit_segre_oracle(Eigenstructure(4, 4, 1, (), (), {"@m": (4,)})) == 4
    rep = codim_bundle_pencil(Eigenstructure(2, 2, 1, (), (), {"@m": (2,)}))
    assert (rep.orbit_codim, rep.bundle_codim) == (2, 1)


def test_grade_checks():
    with pytest.raises(InvalidInput):
        codim_orbit_pencil(FIXTURES["P9"].structure())
    with pytest.raises(InvalidInput):
        codim_poly(Eigenstructure(2, 2, 2, (), (), {"0": (1,)}))


def test_weyr_formula_direct_call():
    # l_0 n + r_0 m - ... for the 2x2 zero pencil: 2*2 + 2*2
    assert weyr_orbit_codim(2, 2, (0, 0), (0, 0), ()) == 8


# -- table values -----------------------------------------------------------------


@pytest.mark.parametrize("name", list(TABLE_CODIM))
def test_table_codimensions(name):
    e = FIXTURES[name].structure()
    direct = codim_poly(e, Convention.DIRECT)
    companion = codim_poly(e, "companion")
    assert direct.bundle_codim == TABLE_CODIM[name]
    if name in SINGULAR_ROWS:
        assert companion.convention_divergence and direct.convention_divergence
        assert companion.bundle_codim > direct.bundle_codim
    else:
        assert companion.bundle_codim == TABLE_CODIM[name]
        assert not companion.convention_divergence


def test_documented_companion_values():
    assert codim_poly(FIXTURES["P5"].structure()).bundle_codim == 5
    assert codim_poly(FIXTURES["P19"].structure()).bundle_codim == 12
    assert codim_poly(FIXTURES["P9"].structure()).orbit_codim == 4


# -- properties -------------------------------------------------------------------


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_weyr_formula_matches_tangent_space_rank(m, n):
    for e in labeled_structures(m, n, 1, ("0", "1", "inf")):
        assert codim_orbit_pencil(e) == tangent_codim(e) == codim_orbit_segre_oracle(e)


@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 5) for n in range(1, 5)])
def test_codim_bounds(m, n):
    zero = zero_structure(m, n)
    for bk in iter_bundle_keys(m, n, 1):
        e = bk.representative()
        c = codim_orbit_pencil(e)
        assert 0 <= c <= 2 * m * n
        assert (c == 2 * m * n) == (e == zero)
        rep = codim_bundle_pencil(e)
        assert rep.bundle_codim == rep.orbit_codim - len(e.spectrum) == rep.orbit_codim - rep.distinct_eigenvalue_count


@pytest.mark.parametrize("m,n,d", [(2, 2, 2), (2, 2, 3), (3, 2, 2), (1, 3, 3), (3, 3, 2)])
def test_conventions_agree_exactly_on_regular_structures(m, n, d):
    for bk in iter_bundle_keys(m, n, d):
        e = bk.representative()
        a, b = codim_poly(e, Convention.COMPANION), codim_poly(e, Convention.DIRECT)
        for rep in (a, b):
            assert rep.bundle_codim == rep.orbit_codim - rep.distinct_eigenvalue_count
        if bk.is_regular:
            assert (a.orbit_codim, a.bundle_codim) == (b.orbit_codim, b.bundle_codim)
            assert not a.convention_divergence


def test_report_json():
    data = codim_poly(FIXTURES["P5"].structure(), "direct").to_json()
    assert data["convention"] == "direct"
    assert data["bundle_codim"] == 2 and data["convention_divergence"] is True
