"""Exact dense linear algebra: matrices, Kronecker products, ranks, kernels,
subspace restriction, and the rank bookkeeping used by chain complexes.

Matrices are stored row-major; internally each row keeps only its nonzero
entries so that the permutation-heavy matrices this engine manipulates stay
cheap, but the public contract is that of a dense rows x cols array of exact
scalars.  There is no floating point and no tolerance anywhere: equality of
matrices means equality of every entry.

Tensor conventions, fixed globally:

* a basis vector of ``V1 (x) ... (x) Vk`` with factor indices ``(i1, ..., ik)``
  flattens to ``((i1*d2 + i2)*d3 + i3)...``, i.e. the leftmost factor is the
  slowest index;
* consequently ``kron(a, b)`` is the matrix of ``a (x) b`` on flattened bases,
  with entry ``((i,k),(j,l)) = a[i,j] * b[k,l]``;
* regroupings of tensor factors act as the identity on flattened data, so a
  :class:`TensorShape` records groupings purely as metadata.
"""

from .errors import NotAComplex, NotStable, SingularMatrix
from .fields import QQ


class Mat:
    """An immutable exact matrix.

    ``data`` is a tuple of per-row dicts mapping column index to a nonzero
    field element.  Do not mutate the dicts; every operation returns a new
    matrix.
    """

    __slots__ = ("rows", "cols", "data", "field")

    def __init__(self, rows, cols, data, field=QQ):
        if rows < 0 or cols < 0 or len(data) != rows:
            raise ValueError("inconsistent matrix shape")
        self.rows = rows
        self.cols = cols
        self.data = tuple(data)
        self.field = field

    # -- construction -----------------------------------------------------

    @classmethod
    def from_rows(cls, rows, field=QQ):
        """Build from nested lists; entries may be ints, strings or field
        elements.  Ragged input is rejected."""
        rows = list(rows)
        ncols = len(rows[0]) if rows else 0
        data = []
        for row in rows:
            row = list(row)
            if len(row) != ncols:
                raise ValueError("ragged rows")
            entries = {}
            for j, value in enumerate(row):
                value = field.coerce(value)
                if value:
                    entries[j] = value
            data.append(entries)
        return cls(len(rows), ncols, data, field)

    @classmethod
    def from_entries(cls, rows, cols, entries, field=QQ):
        data = [{} for _ in range(rows)]
        for (i, j), value in entries.items():
            value = field.coerce(value)
            if value:
                data[i][j] = value
        return cls(rows, cols, data, field)

    @classmethod
    def zeros(cls, rows, cols, field=QQ):
        return cls(rows, cols, [{} for _ in range(rows)], field)

    @classmethod
    def identity(cls, n, field=QQ):
        one = field.one
        return cls(n, n, [{i: one} for i in range(n)], field)

    # -- access ------------------------------------------------------------

    def entry(self, i, j):
        return self.data[i].get(j, self.field.zero)

    def row(self, i):
        return self.data[i]

    def to_rows(self):
        zero = self.field.zero
        out = []
        for entries in self.data:
            row = [zero] * self.cols
            for j, value in entries.items():
                row[j] = value
            out.append(row)
        return out

    def nnz(self):
        return sum(len(entries) for entries in self.data)

    # -- algebra -----------------------------------------------------------

    def __matmul__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        bdata = other.data
        out = []
        for arow in self.data:
            acc = {}
            for k, av in arow.items():
                for j, bv in bdata[k].items():
                    prod = av * bv
                    cur = acc.get(j)
                    if cur is None:
                        acc[j] = prod
                    else:
                        cur = cur + prod
                        if cur:
                            acc[j] = cur
                        else:
                            del acc[j]
            out.append(acc)
        return Mat(self.rows, other.cols, out, self.field)

    def __add__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in addition")
        out = []
        for arow, brow in zip(self.data, other.data):
            acc = dict(arow)
            for j, bv in brow.items():
                cur = acc.get(j)
                if cur is None:
                    acc[j] = bv
                else:
                    cur = cur + bv
                    if cur:
                        acc[j] = cur
                    else:
                        del acc[j]
            out.append(acc)
        return Mat(self.rows, self.cols, out, self.field)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Mat(
            self.rows,
            self.cols,
            [{j: -v for j, v in row.items()} for row in self.data],
            self.field,
        )

    def scale(self, scalar):
        scalar = self.field.coerce(scalar)
        if not scalar:
            return Mat.zeros(self.rows, self.cols, self.field)
        return Mat(
            self.rows,
            self.cols,
            [{j: scalar * v for j, v in row.items()} for row in self.data],
            self.field,
        )

    def transpose(self):
        data = [{} for _ in range(self.cols)]
        for i, row in enumerate(self.data):
            for j, value in row.items():
                data[j][i] = value
        return Mat(self.cols, self.rows, data, self.field)

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash(
            (self.rows, self.cols, tuple(tuple(sorted(r.items())) for r in self.data))
        )

    def is_zero(self):
        return all(not row for row in self.data)

    def is_identity(self):
        if self.rows != self.cols:
            return False
        one = self.field.one
        return all(row == {i: one} for i, row in enumerate(self.data))

    def __repr__(self):
        return f"Mat({self.rows}x{self.cols}, nnz={self.nnz()})"


def first_difference(a, b):
    """First entry (row-major) where two equal-shaped matrices differ,
    as ``(i, j, a_ij, b_ij)``; ``None`` when the matrices agree."""
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise ValueError("shape mismatch")
    for i in range(a.rows):
        arow, brow = a.data[i], b.data[i]
        if arow == brow:
            continue
        for j in sorted(set(arow) | set(brow)):
            va = arow.get(j, a.field.zero)
            vb = brow.get(j, b.field.zero)
            if va != vb:
                return (i, j, va, vb)
    return None


# -- tensor bookkeeping ----------------------------------------------------


class TensorShape:
    """Ordered factorization of a flattened space, metadata only.

    The total dimension is the product of the factor dimensions; data lives
    in the flattened space with the leftmost factor slowest, so all
    regroupings are identities.
    """

    __slots__ = ("factors",)

    def __init__(self, factors):
        factors = tuple((str(label), int(dim)) for label, dim in factors)
        for _, dim in factors:
            if dim < 0:
                raise ValueError("negative factor dimension")
        self.factors = factors

    @property
    def dim(self):
        total = 1
        for _, d in self.factors:
            total *= d
        return total

    def __eq__(self, other):
        return isinstance(other, TensorShape) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        inside = " (x) ".join(f"{label}[{dim}]" for label, dim in self.factors)
        return f"TensorShape({inside or '1'})"


class SubspaceBasis:
    """An explicitly included subspace of a tensor-product ambient space.

    ``inclusion`` is an (ambient_dim x sub_dim) matrix whose columns are the
    basis vectors; it must have full column rank.
    """

    __slots__ = ("ambient_shape", "inclusion")

    def __init__(self, ambient_shape, inclusion, check=True):
        if ambient_shape.dim != inclusion.rows:
            raise ValueError("inclusion does not match ambient dimension")
        if check and rank(inclusion) != inclusion.cols:
            raise ValueError("inclusion columns are dependent")
        self.ambient_shape = ambient_shape
        self.inclusion = inclusion

    @property
    def dim(self):
        return self.inclusion.cols

    @property
    def ambient_dim(self):
        return self.inclusion.rows

    def __repr__(self):
        return f"SubspaceBasis(dim={self.dim}, ambient={self.ambient_dim})"


# -- products and permutations ----------------------------------------------


def kron(a, b):
    """Kronecker product realizing ``a (x) b`` under the fixed flattening."""
    if a.field is not b.field and a.field != b.field:
        raise ValueError("mixed fields in kron")
    rows = a.rows * b.rows
    cols = a.cols * b.cols
    data = [{} for _ in range(rows)]
    for i, arow in enumerate(a.data):
        if not arow:
            continue
        base_r = i * b.rows
        for k, brow in enumerate(b.data):
            if not brow:
                continue
            target = data[base_r + k]
            for j, av in arow.items():
                base_c = j * b.cols
                for l, bv in brow.items():
                    target[base_c + l] = av * bv
    return Mat(rows, cols, data, a.field)


def kron_all(*mats):
    out = mats[0]
    for m in mats[1:]:
        out = kron(out, m)
    return out


def leg_permutation(dims, perm, field=QQ):
    """Permutation matrix reordering tensor legs.

    ``perm[s]`` names which input leg lands in output slot ``s``; the result
    maps the flattened space with factor dims ``dims`` to the flattened space
    with factor dims ``[dims[p] for p in perm]``.
    """
    k = len(dims)
    if sorted(perm) != list(range(k)):
        raise ValueError("not a permutation of the legs")
    total = 1
    for d in dims:
        total *= d
    out_dims = [dims[p] for p in perm]
    # strides of each input leg in the input flattening
    in_strides = [0] * k
    acc = 1
    for leg in range(k - 1, -1, -1):
        in_strides[leg] = acc
        acc *= dims[leg]
    data = [{} for _ in range(total)]
    one = field.one
    # enumerate input indices leg by leg via mixed-radix counting
    idx = [0] * k
    for flat_in in range(total):
        flat_out = 0
        for s in range(k):
            flat_out = flat_out * out_dims[s] + idx[perm[s]]
        data[flat_out][flat_in] = one
        for leg in range(k - 1, -1, -1):
            idx[leg] += 1
            if idx[leg] < dims[leg]:
                break
            idx[leg] = 0
    return Mat(total, total, data, field)


def swap_factors(da, db, field=QQ):
    """The flip ``V (x) W -> W (x) V`` on flattened data."""
    return leg_permutation([da, db], [1, 0], field)


def vstack(mats):
    cols = mats[0].cols
    field = mats[0].field
    data = []
    for m in mats:
        if m.cols != cols:
            raise ValueError("column mismatch in vstack")
        data.extend(dict(row) for row in m.data)
    return Mat(len(data), cols, data, field)


def hstack(mats):
    rows = mats[0].rows
    field = mats[0].field
    data = [{} for _ in range(rows)]
    offset = 0
    for m in mats:
        if m.rows != rows:
            raise ValueError("row mismatch in hstack")
        for i, row in enumerate(m.data):
            for j, value in row.items():
                data[i][offset + j] = value
        offset += m.cols
    return Mat(rows, offset, data, field)


# -- elimination -------------------------------------------------------------


def _rref(mat):
    """Reduced row echelon form of ``mat``.

    Returns ``(pivots, rows)`` where ``pivots`` is the sorted list of pivot
    columns and ``rows`` the corresponding normalized echelon rows (dicts),
    aligned with ``pivots``.  RREF is unique, so the output is canonical.
    """
    echelon = []  # list of (pivot_col, row_dict) with leading coefficient 1
    for src in mat.data:
        row = dict(src)
        for pivcol, erow in echelon:
            coeff = row.get(pivcol)
            if coeff is None:
                continue
            for j, v in erow.items():
                cur = row.get(j)
                if cur is None:
                    row[j] = -coeff * v
                else:
                    cur = cur - coeff * v
                    if cur:
                        row[j] = cur
                    else:
                        del row[j]
        if not row:
            continue
        pivcol = min(row)
        lead = row[pivcol]
        if lead != mat.field.one:
            row = {j: v / lead for j, v in row.items()}
        for _, erow in echelon:
            coeff = erow.get(pivcol)
            if coeff is None:
                continue
            for j, v in row.items():
                cur = erow.get(j)
                if cur is None:
                    erow[j] = -coeff * v
                else:
                    cur = cur - coeff * v
                    if cur:
                        erow[j] = cur
                    else:
                        del erow[j]
        echelon.append((pivcol, row))
    echelon.sort(key=lambda item: item[0])
    return [p for p, _ in echelon], [r for _, r in echelon]


def rank(a):
    """Rank over the exact field."""
    pivots, _ = _rref(a)
    return len(pivots)


def kernel_basis(a):
    """Basis of the null space, one column per free variable.

    The basis is the canonical one read off the reduced echelon form: the
    free coordinate is 1 and pivot coordinates carry the negated echelon
    entries, so ``a @ kernel_basis(a) == 0`` exactly and the column count is
    ``a.cols - rank(a)``.
    """
    pivots, rows = _rref(a)
    pivot_set = set(pivots)
    free = [j for j in range(a.cols) if j not in pivot_set]
    data = [{} for _ in range(a.cols)]
    one = a.field.one
    for col, f in enumerate(free):
        data[f][col] = one
        for pivcol, row in zip(pivots, rows):
            v = row.get(f)
            if v:
                data[pivcol][col] = -v
    return Mat(a.cols, len(free), data, a.field)


def col_space_basis(a):
    """Basis of the column space: the pivot columns of ``a``."""
    pivots, _ = _rref(a)
    data = [{} for _ in range(a.rows)]
    for out_col, j in enumerate(pivots):
        for i in range(a.rows):
            v = a.data[i].get(j)
            if v:
                data[i][out_col] = v
    return Mat(a.rows, len(pivots), data, a.field)


def solve_columns(a, b):
    """One solution ``x`` of ``a @ x = b`` (column by column), free
    coordinates set to zero.  Raises ``ValueError`` when inconsistent."""
    if a.rows != b.rows:
        raise ValueError("row mismatch in solve")
    pivots, rows = _rref(hstack([a, b]))
    for pivcol in pivots:
        if pivcol >= a.cols:
            raise ValueError("inconsistent system")
    data = [{} for _ in range(a.cols)]
    for pivcol, row in zip(pivots, rows):
        target = data[pivcol]
        for j, v in row.items():
            if j >= a.cols:
                target[j - a.cols] = v
    return Mat(a.cols, b.cols, data, a.field)


def inverse(a):
    if a.rows != a.cols:
        raise SingularMatrix("only square matrices can be inverted")
    try:
        x = solve_columns(a, Mat.identity(a.rows, a.field))
    except ValueError:
        raise SingularMatrix("matrix is singular") from None
    if rank(a) != a.rows:
        raise SingularMatrix("matrix is singular")
    return x


def restrict_map(f, dom, cod):
    """Matrix of ``f`` between two explicit subspaces.

    Returns ``g`` with ``cod.inclusion @ g == f @ dom.inclusion``.  Raises
    :class:`NotStable` when some image column leaves the span of the codomain
    basis, which means an equivariance assumption failed upstream.
    """
    if f.cols != dom.ambient_dim or f.rows != cod.ambient_dim:
        raise ValueError("map does not match the ambient spaces")
    target = f @ dom.inclusion
    try:
        return solve_columns(cod.inclusion, target)
    except ValueError:
        raise NotStable(
            "image is not contained in the codomain subspace"
        ) from None


def homology_dim(d_out, d_in):
    """dim ker(d_out) - rank(d_in) at one chain degree.

    ``d_out`` leaves the degree, ``d_in`` enters it; ``d_out @ d_in = 0`` is
    checked and :class:`NotAComplex` raised otherwise.
    """
    if d_out.cols != d_in.rows:
        raise ValueError("boundary maps do not meet in one degree")
    if not (d_out @ d_in).is_zero():
        raise NotAComplex("composite of consecutive boundary maps is nonzero")
    return (d_out.cols - rank(d_out)) - rank(d_in)


def column_span_contains(span, vectors):
    """Whether every column of ``vectors`` lies in the column span of
    ``span``; both matrices share the ambient row space."""
    if span.rows != vectors.rows:
        raise ValueError("ambient mismatch")
    base = rank(span)
    return rank(hstack([span, vectors])) == base
