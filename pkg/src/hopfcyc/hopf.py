"""Finite-dimensional Hopf algebras presented by structure constants.

A Hopf algebra of dimension ``n`` is stored as five matrices over the exact
field, all with respect to one fixed basis:

* ``mult``:      n x n^2, the multiplication ``H (x) H -> H``;
* ``unit``:      n x 1;
* ``comult``:    n^2 x n, the comultiplication ``H -> H (x) H``;
* ``counit``:    1 x n;
* ``antipode``:  n x n, with its inverse kept alongside.

Tensor legs follow the global flattening (first factor slowest): column
``i*n + j`` of ``mult`` is the basis element ``e_i (x) e_j``, and row
``i*n + j`` of ``comult`` is the coefficient of ``e_i (x) e_j``.

Axioms are never assumed: :func:`verify_axioms` checks each one as an exact
matrix identity and reports the first differing entry on failure.
"""

from dataclasses import dataclass

from .errors import NotAGroup, SingularMatrix, SingularAntipode
from .fields import QQ
from .linalg import Mat, first_difference, inverse, kron, swap_factors


class HopfAlgebra:
    __slots__ = (
        "dim",
        "mult",
        "unit",
        "comult",
        "counit",
        "antipode",
        "antipode_inv",
        "basis_names",
        "field",
    )

    def __init__(
        self,
        dim,
        mult,
        unit,
        comult,
        counit,
        antipode,
        antipode_inv=None,
        basis_names=None,
        field=QQ,
    ):
        n = dim
        expected = {
            "mult": (mult, n, n * n),
            "unit": (unit, n, 1),
            "comult": (comult, n * n, n),
            "counit": (counit, 1, n),
            "antipode": (antipode, n, n),
        }
        for name, (m, r, c) in expected.items():
            if (m.rows, m.cols) != (r, c):
                raise ValueError(f"{name} must be {r}x{c}, got {m.rows}x{m.cols}")
        if antipode_inv is None:
            try:
                antipode_inv = inverse(antipode)
            except SingularMatrix:
                raise SingularAntipode("antipode matrix is not invertible") from None
        elif (antipode_inv.rows, antipode_inv.cols) != (n, n):
            raise ValueError("antipode_inv has the wrong shape")
        self.dim = n
        self.mult = mult
        self.unit = unit
        self.comult = comult
        self.counit = counit
        self.antipode = antipode
        self.antipode_inv = antipode_inv
        self.basis_names = tuple(basis_names) if basis_names else tuple(
            f"e{i}" for i in range(n)
        )
        self.field = field

    def identity_mat(self):
        return Mat.identity(self.dim, self.field)

    def __eq__(self, other):
        if not isinstance(other, HopfAlgebra):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.mult == other.mult
            and self.unit == other.unit
            and self.comult == other.comult
            and self.counit == other.counit
            and self.antipode == other.antipode
            and self.antipode_inv == other.antipode_inv
            and self.basis_names == other.basis_names
        )

    def __repr__(self):
        return f"HopfAlgebra(dim={self.dim}, basis={list(self.basis_names)})"


@dataclass
class AxiomCheck:
    name: str
    passed: bool
    first_mismatch: tuple | None = None


@dataclass
class AxiomReport:
    checks: list

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failing(self):
        return [c.name for c in self.checks if not c.passed]


def verify_axioms(h):
    """Check every Hopf axiom as an exact matrix identity.

    Failures are report entries, never exceptions, so broken input can be
    inspected.  The comparisons, in report order: associativity, unit,
    coassociativity, counit, the four bialgebra compatibilities, the antipode
    identity (both sides against u o eps), and invertibility of S.
    """
    n = h.dim
    i_n = h.identity_mat()
    fld = h.field
    sw = swap_factors(n, n, fld)
    ue = h.unit @ h.counit
    one = Mat.identity(1, fld)

    pairs = [
        ("associativity", h.mult @ kron(h.mult, i_n), h.mult @ kron(i_n, h.mult)),
        ("unit-left", h.mult @ kron(h.unit, i_n), i_n),
        ("unit-right", h.mult @ kron(i_n, h.unit), i_n),
        (
            "coassociativity",
            kron(h.comult, i_n) @ h.comult,
            kron(i_n, h.comult) @ h.comult,
        ),
        ("counit-left", kron(h.counit, i_n) @ h.comult, i_n),
        ("counit-right", kron(i_n, h.counit) @ h.comult, i_n),
        (
            "bialgebra-mult",
            h.comult @ h.mult,
            kron(h.mult, h.mult) @ kron(kron(i_n, sw), i_n) @ kron(h.comult, h.comult),
        ),
        ("bialgebra-counit-mult", h.counit @ h.mult, kron(h.counit, h.counit)),
        ("bialgebra-comult-unit", h.comult @ h.unit, kron(h.unit, h.unit)),
        ("bialgebra-counit-unit", h.counit @ h.unit, one),
        ("antipode-left", h.mult @ kron(h.antipode, i_n) @ h.comult, ue),
        ("antipode-right", h.mult @ kron(i_n, h.antipode) @ h.comult, ue),
        ("antipode-inverse-left", h.antipode_inv @ h.antipode, i_n),
        ("antipode-inverse-right", h.antipode @ h.antipode_inv, i_n),
    ]
    checks = []
    for name, lhs, rhs in pairs:
        diff = first_difference(lhs, rhs)
        checks.append(AxiomCheck(name, diff is None, diff))
    return AxiomReport(checks)


def s_power(h, k):
    """The matrix of S^k; negative k uses the inverse antipode."""
    base = h.antipode if k >= 0 else h.antipode_inv
    out = h.identity_mat()
    for _ in range(abs(k)):
        out = base @ out
    return out


def comult_iter(h, k):
    """Iterated comultiplication ``H -> H^(x k)``; ``k = 0`` is the counit.

    Coassociativity makes every bracketing equal; this one applies
    ``Delta (x) I^(x j-1)`` from the top.
    """
    if k == 0:
        return h.counit
    total = h.identity_mat()
    for j in range(1, k):
        lift = kron(h.comult, Mat.identity(h.dim ** (j - 1), h.field))
        total = lift @ total
    return total


def mult_iter(h, k):
    """Iterated multiplication ``H^(x k) -> H``; ``k = 0`` is the unit."""
    if k == 0:
        return h.unit
    total = h.identity_mat()
    for j in range(2, k + 1):
        total = total @ kron(h.mult, Mat.identity(h.dim ** (j - 2), h.field))
    return total


def grouplike_basis_indices(h):
    """Indices of basis elements ``e`` with ``Delta(e) = e (x) e`` and
    ``eps(e) = 1``."""
    out = []
    n = h.dim
    for j in range(n):
        if h.counit.entry(0, j) != h.field.one:
            continue
        col = {i: h.comult.data[i].get(j) for i in range(n * n) if j in h.comult.data[i]}
        if col == {j * n + j: h.field.one}:
            out.append(j)
    return out


# -- builtin examples --------------------------------------------------------


def trivial(field=QQ):
    """The ground field as a Hopf algebra; every structure map is 1x1."""
    one = Mat.identity(1, field)
    return HopfAlgebra(1, one, one, one, one, one, one, ("1",), field)


def _check_group(table):
    n = len(table)
    for row in table:
        if len(row) != n or any(not (0 <= v < n) for v in row):
            raise NotAGroup("multiplication table is not square over 0..n-1")
    identity = None
    for e in range(n):
        if all(table[e][i] == i and table[i][e] == i for i in range(n)):
            identity = e
            break
    if identity is None:
        raise NotAGroup("no identity element")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    raise NotAGroup("multiplication table is not associative")
    inv = [None] * n
    for i in range(n):
        for j in range(n):
            if table[i][j] == identity and table[j][i] == identity:
                inv[i] = j
                break
        if inv[i] is None:
            raise NotAGroup(f"element {i} has no inverse")
    return identity, inv


def group_algebra(table, field=QQ, names=None):
    """The group algebra k[G] from a Cayley table ``table[i][j] = i*j``.

    Basis elements are grouplike: ``Delta(g) = g (x) g``, ``eps(g) = 1`` and
    ``S(g) = g^{-1}``.
    """
    identity, inv = _check_group(table)
    n = len(table)
    mult = Mat.from_entries(
        n, n * n, {(table[i][j], i * n + j): 1 for i in range(n) for j in range(n)},
        field,
    )
    unit = Mat.from_entries(n, 1, {(identity, 0): 1}, field)
    comult = Mat.from_entries(n * n, n, {(g * n + g, g): 1 for g in range(n)}, field)
    counit = Mat.from_rows([[1] * n], field)
    antipode = Mat.from_entries(n, n, {(inv[g], g): 1 for g in range(n)}, field)
    return HopfAlgebra(
        n, mult, unit, comult, counit, antipode, antipode, names, field
    )


def dual_group_algebra(table, field=QQ, names=None):
    """The dual of k[G]: functions on G with pointwise product.

    Basis ``p_g`` dual to the group elements; ``p_a p_b = delta_ab p_a``, the
    unit is the sum of all ``p_g``, ``Delta(p_a) = sum_{xy=a} p_x (x) p_y``,
    ``eps(p_a) = delta_{a,e}`` and ``S(p_a) = p_{a^{-1}}``.
    """
    identity, inv = _check_group(table)
    n = len(table)
    mult = Mat.from_entries(
        n, n * n, {(a, a * n + a): 1 for a in range(n)}, field
    )
    unit = Mat.from_rows([[1]] * n, field)
    comult = Mat.from_entries(
        n * n,
        n,
        {(x * n + y, table[x][y]): 1 for x in range(n) for y in range(n)},
        field,
    )
    counit = Mat.from_entries(1, n, {(0, identity): 1}, field)
    antipode = Mat.from_entries(n, n, {(inv[g], g): 1 for g in range(n)}, field)
    return HopfAlgebra(
        n, mult, unit, comult, counit, antipode, antipode, names, field
    )


def cyclic_group_table(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def from_json(text, field=QQ, validate=False):
    """Parse a Hopf algebra from its JSON presentation.

    The inverse antipode is computed by matrix inversion when the payload
    omits it; with ``validate`` set, a full axiom check runs on load and a
    failure raises instead of returning a broken structure.
    """
    import json as _json

    from .errors import ParseError
    from .serialize import hopf_from_dict

    try:
        data = _json.loads(text)
    except _json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from None
    return hopf_from_dict(data, field=field, validate=validate)


def sweedler(field=QQ):
    """The four-dimensional Hopf algebra with basis ``1, g, x, gx``.

    Presentation: ``g^2 = 1``, ``x^2 = 0``, ``xg = -gx``; ``Delta(g) = g(x)g``,
    ``Delta(x) = x(x)1 + g(x)x``; ``eps(g) = 1``, ``eps(x) = 0``;
    ``S(g) = g``, ``S(x) = -gx``.  The square of the antipode is conjugation
    by ``g``, so S^2 is not the identity: S^2(x) = -x.
    """
    names = ("1", "g", "x", "gx")
    prods = {
        (0, 0): {0: 1}, (0, 1): {1: 1}, (0, 2): {2: 1}, (0, 3): {3: 1},
        (1, 0): {1: 1}, (1, 1): {0: 1}, (1, 2): {3: 1}, (1, 3): {2: 1},
        (2, 0): {2: 1}, (2, 1): {3: -1}, (2, 2): {}, (2, 3): {},
        (3, 0): {3: 1}, (3, 1): {2: -1}, (3, 2): {}, (3, 3): {},
    }
    mult = Mat.from_entries(
        4,
        16,
        {
            (k, i * 4 + j): c
            for (i, j), col in prods.items()
            for k, c in col.items()
        },
        field,
    )
    unit = Mat.from_entries(4, 1, {(0, 0): 1}, field)
    comult = Mat.from_entries(
        16,
        4,
        {
            (0 * 4 + 0, 0): 1,            # Delta(1)  = 1 (x) 1
            (1 * 4 + 1, 1): 1,            # Delta(g)  = g (x) g
            (2 * 4 + 0, 2): 1,            # Delta(x)  = x (x) 1 + g (x) x
            (1 * 4 + 2, 2): 1,
            (3 * 4 + 1, 3): 1,            # Delta(gx) = gx (x) g + 1 (x) gx
            (0 * 4 + 3, 3): 1,
        },
        field,
    )
    counit = Mat.from_rows([[1, 1, 0, 0]], field)
    antipode = Mat.from_entries(
        4, 4, {(0, 0): 1, (1, 1): 1, (3, 2): -1, (2, 3): 1}, field
    )
    return HopfAlgebra(4, mult, unit, comult, counit, antipode, None, names, field)
