import pytest

from hopfcyc.cyclic import CyclicObject, build_contra_algebra, build_cov_coalgebra, build_generic
from hopfcyc.errors import CharNotZero, DescentFailure, NotAComplex
from hopfcyc.examples import (
    divided_power_coalgebra,
    dual_numbers_algebra,
    ground_field_algebra,
    ground_field_coalgebra,
)
from hopfcyc.fields import GF
from hopfcyc.hopf import trivial
from hopfcyc.homology import boundary_edges, complex_report, cyclic_homology, hochschild
from hopfcyc.linalg import Mat, SubspaceBasis, TensorShape, homology_dim, rank
from hopfcyc.rep import trivial_modcomod
from hopfcyc.trace import CONTRAVARIANT, TraceInstance

TRIV = trivial()


def test_hochschild_of_the_ground_field():
    co = build_contra_algebra(TRIV, trivial_modcomod(TRIV), ground_field_algebra(TRIV), 4)
    assert hochschild(co) == [1, 0, 0, 0]


def test_cyclic_cohomology_of_the_ground_field_both_routes():
    co = build_contra_algebra(TRIV, trivial_modcomod(TRIV), ground_field_algebra(TRIV), 5)
    assert cyclic_homology(co)[:4] == [1, 0, 1, 0]
    dual_route = build_cov_coalgebra(
        TRIV, trivial_modcomod(TRIV), ground_field_coalgebra(TRIV), 5
    )
    assert cyclic_homology(dual_route)[:4] == [1, 0, 1, 0]


def _brute_force_dual_hochschild_dims(prods, d, degrees):
    """Cochain complex of functionals on A^(x n+1), coboundary the alternating
    sum of the multiplication cofaces with the wrapped top one; built by raw
    index loops."""

    def tuples(k):
        out = [()]
        for _ in range(k):
            out = [t + (j,) for t in out for j in range(d)]
        return out

    def flat(t):
        idx = 0
        for j in t:
            idx = idx * d + j
        return idx

    def coboundary(n):
        # b: functionals on A^(x n) -> functionals on A^(x n+1)
        entries = {}
        for t in tuples(n + 1):
            row = flat(t)
            acc = {}
            for i in range(n):
                for k, coeff in prods[(t[i], t[i + 1])].items():
                    out = flat(t[:i] + (k,) + t[i + 2:])
                    acc[out] = acc.get(out, 0) + (coeff if i % 2 == 0 else -coeff)
            for k, coeff in prods[(t[n], t[0])].items():
                out = flat((k,) + t[1:n])
                acc[out] = acc.get(out, 0) + (coeff if n % 2 == 0 else -coeff)
            for out, coeff in acc.items():
                if coeff:
                    entries[(row, out)] = coeff
        return Mat.from_entries(d ** (n + 1), d ** n, entries)

    dims = []
    for q in degrees:
        d_out = coboundary(q + 1)
        d_in = coboundary(q) if q >= 1 else Mat.zeros(d, 0)
        dims.append(homology_dim(d_out, d_in))
    return dims


def test_hochschild_of_dual_numbers_against_brute_force():
    a = dual_numbers_algebra(TRIV)
    co = build_contra_algebra(TRIV, trivial_modcomod(TRIV), a, 3)
    engine = hochschild(co)[:3]
    prods = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {}}
    oracle = _brute_force_dual_hochschild_dims(prods, 2, range(3))
    assert engine == oracle


def test_hochschild_is_independent_of_the_builder_path():
    a = dual_numbers_algebra(TRIV)
    direct = build_contra_algebra(TRIV, trivial_modcomod(TRIV), a, 3)
    generic = build_generic(
        TraceInstance(TRIV, trivial_modcomod(TRIV), CONTRAVARIANT), a, 3
    )
    assert hochschild(direct) == hochschild(generic)


def test_zero_tower_has_zero_dims():
    shape = TensorShape([("Z", 0)])
    basis = SubspaceBasis(shape, Mat.zeros(0, 0), check=False)
    zero = Mat.zeros(0, 0)
    co = CyclicObject(
        variance="cyclic",
        degree_cap=2,
        spaces=[basis, basis, basis],
        faces={1: [zero, zero], 2: [zero, zero, zero]},
        degens={0: [zero], 1: [zero, zero]},
        cyclic_ops=[zero, zero, zero],
    )
    report = complex_report(co)
    assert report.hochschild_dims == [0, 0]
    assert report.cyclic_dims == [0, 0]
    assert report.max_valid_degree == 1


def test_complex_report_shape():
    co = build_contra_algebra(TRIV, trivial_modcomod(TRIV), ground_field_algebra(TRIV), 3)
    report = complex_report(co)
    assert report.max_valid_degree == 2
    assert len(report.hochschild_dims) == 3
    assert len(report.cyclic_dims) == 3


def test_not_a_complex_is_detected():
    one = Mat.identity(1)
    basis = SubspaceBasis(TensorShape([("C", 1)]), one, check=False)
    co = CyclicObject(
        variance="cocyclic",
        degree_cap=2,
        spaces=[basis, basis, basis],
        faces={1: [one, Mat.zeros(1, 1)], 2: [one, Mat.zeros(1, 1), Mat.zeros(1, 1)]},
        degens={0: [one], 1: [one, one]},
        cyclic_ops=[one, one, one],
    )
    # edge 1 = delta_0 - delta_1 = 1, edge 2 = 1: square is nonzero
    with pytest.raises(NotAComplex):
        hochschild(co)


def test_descent_failure_cyclic_variance():
    two = Mat.identity(2)
    basis = SubspaceBasis(TensorShape([("C", 2)]), two, check=False)
    tau0 = Mat.from_rows([[1, 0], [0, -1]])
    co = CyclicObject(
        variance="cyclic",
        degree_cap=1,
        spaces=[basis, basis],
        faces={1: [two, Mat.zeros(2, 2)]},
        degens={0: [two]},
        cyclic_ops=[tau0, Mat.identity(2)],
    )
    # edge_1 = Id maps im(1 - lambda_1) = k^2 onto k^2, but im(1 - lambda_0)
    # is only the second coordinate line
    with pytest.raises(DescentFailure):
        cyclic_homology(co)


def test_descent_failure_cocyclic_variance():
    two = Mat.identity(2)
    basis = SubspaceBasis(TensorShape([("C", 2)]), two, check=False)
    tau0 = Mat.from_rows([[1, 0], [0, -1]])
    co = CyclicObject(
        variance="cocyclic",
        degree_cap=1,
        spaces=[basis, basis],
        faces={1: [two, Mat.zeros(2, 2)]},
        degens={0: [two]},
        cyclic_ops=[tau0, two],
    )
    # ker(1 - lambda_0) is the first coordinate line; the coboundary sends it
    # into ker(1 - lambda_1) = 0
    with pytest.raises(DescentFailure):
        cyclic_homology(co)


def test_characteristic_zero_is_required():
    f5 = GF(5)
    h = trivial(field=f5)
    co = build_contra_algebra(h, trivial_modcomod(h), ground_field_algebra(h), 3)
    assert hochschild(co) == [1, 0, 0]
    with pytest.raises(CharNotZero):
        cyclic_homology(co)


def test_boundary_edges_alternate():
    co = build_contra_algebra(TRIV, trivial_modcomod(TRIV), ground_field_algebra(TRIV), 4)
    edges = boundary_edges(co)
    # over the ground field the edge into even degree n is the identity,
    # into odd degree it vanishes
    for n in range(1, 5):
        assert rank(edges[n]) == (1 if n % 2 == 0 else 0)


def test_cyclic_homology_of_divided_powers_matches_both_variances():
    # same theory presented through the two dual routes must agree on dims
    a = dual_numbers_algebra(TRIV)
    c = divided_power_coalgebra(TRIV)
    contra = build_contra_algebra(TRIV, trivial_modcomod(TRIV), a, 3)
    cov = build_cov_coalgebra(TRIV, trivial_modcomod(TRIV), c, 3)
    assert hochschild(contra) == hochschild(cov)
    assert cyclic_homology(contra) == cyclic_homology(cov)
