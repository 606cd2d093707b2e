"""Hochschild and cyclic (co)homology dimensions of a finite tower.

The simplicial boundary is the alternating sum of the faces; the cyclic
theory is computed from the quotient (cyclic variance) or sub- (cocyclic
variance) complex by the signed rotation, which computes cyclic (co)homology
in characteristic zero only.  Nothing is assumed: the complex property and
the descent of the boundary are checked and failures raised as typed errors.

Degrees above ``degree_cap - 1`` need boundary maps the tower does not
carry, so they are reported as unavailable rather than extrapolated.
"""

from dataclasses import dataclass

from .errors import CharNotZero, DescentFailure, NotAComplex, NotStable
from .cyclic import CYCLIC
from .linalg import (
    Mat,
    SubspaceBasis,
    TensorShape,
    _rref,
    col_space_basis,
    column_span_contains,
    homology_dim,
    hstack,
    kernel_basis,
    restrict_map,
    solve_columns,
)


@dataclass
class ComplexReport:
    hochschild_dims: list
    cyclic_dims: list
    max_valid_degree: int


def boundary_edges(co):
    """The alternating-sum boundary between degrees n-1 and n, keyed by n."""
    edges = {}
    for n in range(1, co.degree_cap + 1):
        acc = co.faces[n][0]
        for i in range(1, n + 1):
            term = co.faces[n][i]
            acc = acc + term if i % 2 == 0 else acc - term
        edges[n] = acc
    return edges


def _check_complex(co, edges):
    cap = co.degree_cap
    for n in range(1, cap):
        if co.variance == CYCLIC:
            square = edges[n] @ edges[n + 1]
        else:
            square = edges[n + 1] @ edges[n]
        if not square.is_zero():
            raise NotAComplex(f"boundary squared is nonzero between degrees {n - 1}..{n + 1}")


def hochschild(co):
    """Per-degree Hochschild (co)homology dimensions, degrees 0..cap-1."""
    edges = boundary_edges(co)
    _check_complex(co, edges)
    dims = co.dims()
    fld = co.field
    out = []
    for q in range(co.degree_cap):
        if co.variance == CYCLIC:
            d_out = edges[q] if q >= 1 else Mat.zeros(0, dims[0], fld)
            d_in = edges[q + 1]
        else:
            d_out = edges[q + 1]
            d_in = edges[q] if q >= 1 else Mat.zeros(dims[0], 0, fld)
        out.append(homology_dim(d_out, d_in))
    return out


def _signed_rotations(co):
    out = []
    for n, tau in enumerate(co.cyclic_ops):
        out.append(tau if n % 2 == 0 else -tau)
    return out


def cyclic_homology(co):
    """Cyclic (co)homology dimensions via the quotient/sub complex by the
    signed rotation; characteristic zero is required and enforced."""
    if co.field.characteristic != 0:
        raise CharNotZero("the rotation complex computes cyclic theory only in characteristic 0")
    edges = boundary_edges(co)
    _check_complex(co, edges)
    dims = co.dims()
    fld = co.field
    lam = _signed_rotations(co)
    cap = co.degree_cap
    if co.variance == CYCLIC:
        # quotient complex C_n / im(1 - lambda_n)
        walls = []          # basis of im(1 - lambda_n)
        complements = []    # inclusion of the chosen complement, plus projector
        for n in range(cap + 1):
            gap = Mat.identity(dims[n], fld) - lam[n]
            wall = col_space_basis(gap)
            walls.append(wall)
            combined = hstack([wall, Mat.identity(dims[n], fld)])
            pivots, _ = _rref(combined)
            extra = [p - wall.cols for p in pivots if p >= wall.cols]
            incl = Mat.from_entries(
                dims[n], len(extra), {(r, j): 1 for j, r in enumerate(extra)}, fld
            )
            full = hstack([wall, incl])
            coords = solve_columns(full, Mat.identity(dims[n], fld))
            proj = Mat(
                len(extra),
                dims[n],
                [coords.data[wall.cols + j] for j in range(len(extra))],
                fld,
            )
            complements.append((incl, proj))
        reduced = {}
        for n in range(1, cap + 1):
            if not column_span_contains(walls[n - 1], edges[n] @ walls[n]):
                raise DescentFailure(
                    f"boundary does not descend to the rotation quotient at degree {n}"
                )
            incl_n, _ = complements[n]
            _, proj_prev = complements[n - 1]
            reduced[n] = proj_prev @ edges[n] @ incl_n
        out = []
        for q in range(cap):
            q_dim = complements[q][0].cols
            d_out = reduced[q] if q >= 1 else Mat.zeros(0, q_dim, fld)
            out.append(homology_dim(d_out, reduced[q + 1]))
        return out
    # cocyclic variance: subcomplex ker(1 - lambda_n)
    kernels = []
    for n in range(cap + 1):
        gap = Mat.identity(dims[n], fld) - lam[n]
        incl = kernel_basis(gap)
        kernels.append(
            SubspaceBasis(TensorShape([("C", dims[n])]), incl, check=False)
        )
    reduced = {}
    for n in range(1, cap + 1):
        try:
            reduced[n] = restrict_map(edges[n], kernels[n - 1], kernels[n])
        except NotStable:
            raise DescentFailure(
                f"coboundary does not preserve the rotation subcomplex at degree {n}"
            ) from None
    out = []
    for q in range(cap):
        d_out = reduced[q + 1]
        d_in = reduced[q] if q >= 1 else Mat.zeros(kernels[0].dim, 0, fld)
        out.append(homology_dim(d_out, d_in))
    return out


def complex_report(co):
    return ComplexReport(
        hochschild_dims=hochschild(co),
        cyclic_dims=cyclic_homology(co),
        max_valid_degree=co.degree_cap - 1,
    )
