"""Modules, comodules and (co)algebra objects over a Hopf algebra, together
with the compatibility checkers that the cyclic constructions depend on.

The "compatibility at index i" checked here is the generalized
Yetter-Drinfeld condition (index 0 is the classical Yetter-Drinfeld
condition, index -1 the anti-Yetter-Drinfeld one), which is what the ``yd``
in the operation names abbreviates.

Leg-order conventions, used by every matrix compiled here:

* a left action is a matrix ``d x (n*d)`` with legs ordered (H, M), so column
  ``a*d + j`` is ``e_a (x) e_j``;
* a right coaction is a matrix ``(d*n) x d`` with legs ordered (M, H), so row
  ``j*n + a`` is the coefficient of ``e_j (x) e_a``.

Sweedler-style formulas are compiled to compositions under these orders; the
docstring of each operation spells out the element-level map it realizes.
"""

from .errors import EngineError, InvalidStructure
from .fields import QQ
from .hopf import _check_group, comult_iter, grouplike_basis_indices, mult_iter, s_power
from .linalg import (
    Mat,
    kernel_basis,
    kron,
    leg_permutation,
    solve_columns,
    swap_factors,
    vstack,
)


class LeftModule:
    __slots__ = ("dim", "action")

    def __init__(self, dim, action):
        if action.rows != dim or (dim and action.cols % dim != 0):
            raise ValueError("action shape does not match the module dimension")
        self.dim = dim
        self.action = action

    def __eq__(self, other):
        return (
            isinstance(other, LeftModule)
            and self.dim == other.dim
            and self.action == other.action
        )

    def __repr__(self):
        return f"LeftModule(dim={self.dim})"


class RightComodule:
    __slots__ = ("dim", "coaction")

    def __init__(self, dim, coaction):
        if coaction.cols != dim or (dim and coaction.rows % dim != 0):
            raise ValueError("coaction shape does not match the comodule dimension")
        self.dim = dim
        self.coaction = coaction

    def __eq__(self, other):
        return (
            isinstance(other, RightComodule)
            and self.dim == other.dim
            and self.coaction == other.coaction
        )

    def __repr__(self):
        return f"RightComodule(dim={self.dim})"


class ModComod:
    """One space carrying both a left module and a right comodule structure."""

    __slots__ = ("module", "comodule")

    def __init__(self, module, comodule):
        if module.dim != comodule.dim:
            raise ValueError("module and comodule dimensions differ")
        self.module = module
        self.comodule = comodule

    @property
    def dim(self):
        return self.module.dim

    @property
    def action(self):
        return self.module.action

    @property
    def coaction(self):
        return self.comodule.coaction

    def __eq__(self, other):
        return (
            isinstance(other, ModComod)
            and self.module == other.module
            and self.comodule == other.comodule
        )

    def __repr__(self):
        return f"ModComod(dim={self.dim})"


class ModuleAlgebra:
    """A unital associative algebra in the category of left H-modules."""

    __slots__ = ("module", "mult", "unit")

    def __init__(self, module, mult, unit):
        d = module.dim
        if (mult.rows, mult.cols) != (d, d * d) or (unit.rows, unit.cols) != (d, 1):
            raise ValueError("algebra structure maps have the wrong shape")
        self.module = module
        self.mult = mult
        self.unit = unit

    @property
    def dim(self):
        return self.module.dim


class ModuleCoalgebra:
    """A counital coassociative coalgebra in the category of left H-modules."""

    __slots__ = ("module", "comult", "counit")

    def __init__(self, module, comult, counit):
        d = module.dim
        if (comult.rows, comult.cols) != (d * d, d) or (counit.rows, counit.cols) != (1, d):
            raise ValueError("coalgebra structure maps have the wrong shape")
        self.module = module
        self.comult = comult
        self.counit = counit

    @property
    def dim(self):
        return self.module.dim


# -- validation ---------------------------------------------------------------


def module_axiom_failures(h, v):
    fails = []
    if v.action.cols != h.dim * v.dim:
        return ["action-shape"]
    i_m = Mat.identity(v.dim, h.field)
    i_h = h.identity_mat()
    if v.action @ kron(h.mult, i_m) != v.action @ kron(i_h, v.action):
        fails.append("action-associativity")
    if v.action @ kron(h.unit, i_m) != i_m:
        fails.append("action-unit")
    return fails


def comodule_axiom_failures(h, c):
    fails = []
    if c.coaction.rows != c.dim * h.dim:
        return ["coaction-shape"]
    i_m = Mat.identity(c.dim, h.field)
    i_h = h.identity_mat()
    if kron(c.coaction, i_h) @ c.coaction != kron(i_m, h.comult) @ c.coaction:
        fails.append("coaction-coassociativity")
    if kron(i_m, h.counit) @ c.coaction != i_m:
        fails.append("coaction-counit")
    return fails


def modcomod_failures(h, m):
    return module_axiom_failures(h, m.module) + comodule_axiom_failures(h, m.comodule)


def validate_modcomod(h, m):
    fails = modcomod_failures(h, m)
    if fails:
        raise InvalidStructure("invalid module/comodule: " + ", ".join(fails))


def module_algebra_failures(h, a):
    fails = list(module_axiom_failures(h, a.module))
    d, n = a.dim, h.dim
    i_a = Mat.identity(d, h.field)
    if a.mult @ kron(a.mult, i_a) != a.mult @ kron(i_a, a.mult):
        fails.append("mult-associativity")
    if a.mult @ kron(a.unit, i_a) != i_a or a.mult @ kron(i_a, a.unit) != i_a:
        fails.append("mult-unit")
    act = a.module.action
    # h(ab) = (h<1> a)(h<2> b)
    lhs = act @ kron(Mat.identity(n, h.field), a.mult)
    rhs = (
        a.mult
        @ kron(act, act)
        @ kron(kron(Mat.identity(n, h.field), swap_factors(n, d, h.field)), i_a)
        @ kron(h.comult, Mat.identity(d * d, h.field))
    )
    if lhs != rhs:
        fails.append("mult-equivariance")
    if act @ kron(Mat.identity(n, h.field), a.unit) != a.unit @ h.counit:
        fails.append("unit-equivariance")
    return fails


def module_coalgebra_failures(h, c):
    fails = list(module_axiom_failures(h, c.module))
    d, n = c.dim, h.dim
    i_c = Mat.identity(d, h.field)
    if kron(c.comult, i_c) @ c.comult != kron(i_c, c.comult) @ c.comult:
        fails.append("comult-coassociativity")
    if kron(c.counit, i_c) @ c.comult != i_c or kron(i_c, c.counit) @ c.comult != i_c:
        fails.append("comult-counit")
    act = c.module.action
    # Delta(h c) = h<1> c<1> (x) h<2> c<2>
    lhs = c.comult @ act
    rhs = (
        kron(act, act)
        @ kron(kron(Mat.identity(n, h.field), swap_factors(n, d, h.field)), i_c)
        @ kron(h.comult, c.comult)
    )
    if lhs != rhs:
        fails.append("comult-equivariance")
    if c.counit @ act != kron(h.counit, c.counit):
        fails.append("counit-equivariance")
    return fails


# -- basic constructors -------------------------------------------------------


def trivial_module(h, dim=1):
    """H acts through the counit."""
    return LeftModule(dim, kron(h.counit, Mat.identity(dim, h.field)))


def regular_module(h):
    """H acting on itself by left multiplication."""
    return LeftModule(h.dim, h.mult)


def trivial_comodule(h, dim=1):
    """Coaction ``m -> m (x) 1``."""
    return RightComodule(dim, kron(Mat.identity(dim, h.field), h.unit))


def regular_comodule(h):
    """H coacting on itself by the comultiplication."""
    return RightComodule(h.dim, h.comult)


def grouplike_comodule(h, index):
    """One-dimensional comodule ``1 -> 1 (x) g`` for a grouplike basis element."""
    if index not in grouplike_basis_indices(h):
        raise ValueError(f"basis element {index} is not grouplike")
    return RightComodule(1, Mat.from_entries(h.dim, 1, {(index, 0): 1}, h.field))


def trivial_modcomod(h, dim=1):
    """Counit action paired with the unit coaction.

    This is i-stable for every i.  It satisfies the generalized compatibility
    at index i exactly when S^(2i) is the identity matrix (always at i = 0;
    at every i when the antipode is involutive).
    """
    return ModComod(trivial_module(h, dim), trivial_comodule(h, dim))


def module_blocks(h, v):
    """The list of d x d matrices by which each basis element of H acts."""
    d = v.dim
    out = []
    for a in range(h.dim):
        lo = a * d
        entries = {}
        for r, row in enumerate(v.action.data):
            for c, val in row.items():
                if lo <= c < lo + d:
                    entries[(r, c - lo)] = val
        out.append(Mat.from_entries(d, d, entries, h.field))
    return out


def module_from_blocks(h, blocks):
    """Assemble an action matrix from one d x d block per basis element."""
    from .linalg import hstack

    if len(blocks) != h.dim:
        raise ValueError("one block per Hopf basis element is required")
    return LeftModule(blocks[0].rows, hstack(blocks))


# -- combinations -------------------------------------------------------------


def tensor_module(h, v, w):
    """Diagonal action on ``V (x) W`` through the comultiplication."""
    n = h.dim
    i_h = h.identity_mat()
    return LeftModule(
        v.dim * w.dim,
        kron(v.action, w.action)
        @ kron(kron(i_h, swap_factors(n, v.dim, h.field)), Mat.identity(w.dim, h.field))
        @ kron(h.comult, Mat.identity(v.dim * w.dim, h.field)),
    )


def tensor_comodule(h, v, w):
    """Coaction ``v (x) w -> v<0> (x) w<0> (x) v<1> w<1>``."""
    n = h.dim
    return RightComodule(
        v.dim * w.dim,
        kron(Mat.identity(v.dim * w.dim, h.field), h.mult)
        @ kron(kron(Mat.identity(v.dim, h.field), swap_factors(n, w.dim, h.field)), h.identity_mat())
        @ kron(v.coaction, w.coaction),
    )


def direct_sum_module(h, v, w):
    d = v.dim + w.dim
    entries = {}
    for a in range(h.dim):
        for r in range(v.dim):
            for c, val in v.action.data[r].items():
                if a * v.dim <= c < (a + 1) * v.dim:
                    entries[(r, a * d + (c - a * v.dim))] = val
        for r in range(w.dim):
            for c, val in w.action.data[r].items():
                if a * w.dim <= c < (a + 1) * w.dim:
                    entries[(v.dim + r, a * d + v.dim + (c - a * w.dim))] = val
    return LeftModule(d, Mat.from_entries(d, h.dim * d, entries, h.field))


def direct_sum_comodule(h, v, w):
    d = v.dim + w.dim
    n = h.dim
    entries = {}
    for r in range(v.dim * n):
        for c, val in v.coaction.data[r].items():
            entries[((r // n) * n + r % n, c)] = val
    for r in range(w.dim * n):
        for c, val in w.coaction.data[r].items():
            entries[((v.dim + r // n) * n + r % n, v.dim + c)] = val
    return RightComodule(d, Mat.from_entries(d * n, d, entries, h.field))


def conjugate_module(h, v, t, t_inv=None):
    """Transport the action along the base change ``t``."""
    from .linalg import inverse

    t_inv = t_inv if t_inv is not None else inverse(t)
    return LeftModule(v.dim, t_inv @ v.action @ kron(h.identity_mat(), t))


def conjugate_comodule(h, v, t, t_inv=None):
    from .linalg import inverse

    t_inv = t_inv if t_inv is not None else inverse(t)
    return RightComodule(v.dim, kron(t_inv, h.identity_mat()) @ v.coaction @ t)


def conjugate_modcomod(h, m, t):
    from .linalg import inverse

    t_inv = inverse(t)
    return ModComod(
        conjugate_module(h, m.module, t, t_inv),
        conjugate_comodule(h, m.comodule, t, t_inv),
    )


def direct_sum_modcomod(h, a, b):
    return ModComod(
        direct_sum_module(h, a.module, b.module),
        direct_sum_comodule(h, a.comodule, b.comodule),
    )


# -- the twist functor --------------------------------------------------------


def twist_module(h, v, k):
    """Precompose the action with S^(2k) on the Hopf leg.

    The k-th power of the twist autoequivalence: the underlying space is
    unchanged and ``h . m = S^(2k)(h) m``.
    """
    if k == 0:
        return v
    return LeftModule(
        v.dim, v.action @ kron(s_power(h, 2 * k), Mat.identity(v.dim, h.field))
    )


# -- generalized compatibility and stability ----------------------------------


def _yd_route1_sides(h, m, i):
    """Both sides of the compatibility in its symmetric form, as matrices
    ``H (x) M -> M (x) H``:

    ``(h<2> m)<0> (x) (h<2> m)<1> S^(-2i)(h<1>)  =  h<1> m<0> (x) h<2> m<1>``.
    """
    n, d = h.dim, m.dim
    fld = h.field
    i_h = h.identity_mat()
    i_m = Mat.identity(d, fld)
    act, coact = m.action, m.coaction
    lhs = (
        kron(i_m, h.mult)
        @ swap_factors(n, d * n, fld)
        @ kron(s_power(h, -2 * i), Mat.identity(d * n, fld))
        @ kron(i_h, coact)
        @ kron(i_h, act)
        @ kron(h.comult, i_m)
    )
    rhs = (
        kron(act, h.mult)
        @ kron(kron(i_h, swap_factors(n, d, fld)), i_h)
        @ kron(Mat.identity(n * n, fld), coact)
        @ kron(h.comult, i_m)
    )
    return lhs, rhs


def _yd_route2_sides(h, m, i):
    """Both sides of the coaction-of-an-orbit form, as matrices
    ``H (x) M -> M (x) H``:

    ``rho(h m)  =  h<2> m<0> (x) h<3> m<1> S^(-1-2i)(h<1>)``.
    """
    n, d = h.dim, m.dim
    fld = h.field
    act, coact = m.action, m.coaction
    lhs = coact @ act
    rhs = (
        kron(act, mult_iter(h, 3))
        @ kron(Mat.identity(n * d * n * n, fld), s_power(h, -1 - 2 * i))
        @ leg_permutation([n, n, n, d, n], [1, 3, 2, 4, 0], fld)
        @ kron(Mat.identity(n * n * n, fld), coact)
        @ kron(comult_iter(h, 3), Mat.identity(d, fld))
    )
    return lhs, rhs


def yd_route1(h, m, i):
    lhs, rhs = _yd_route1_sides(h, m, i)
    return lhs == rhs


def yd_route2(h, m, i):
    lhs, rhs = _yd_route2_sides(h, m, i)
    return lhs == rhs


def check_yd(h, m, i):
    """Whether ``m`` satisfies the generalized compatibility at index ``i``.

    Both equivalent formulations are evaluated; they must agree whenever the
    module and comodule axioms hold, which is validated first.
    """
    validate_modcomod(h, m)
    r1 = yd_route1(h, m, i)
    r2 = yd_route2(h, m, i)
    if r1 != r2:
        raise EngineError(
            "internal inconsistency: the two compatibility routes disagree"
        )
    return r1


def stability_map(h, m, power):
    """The endomorphism ``m -> S^power(m<1>) m<0>`` of the underlying space."""
    return (
        m.action
        @ swap_factors(m.dim, h.dim, h.field)
        @ kron(Mat.identity(m.dim, h.field), s_power(h, power))
        @ m.coaction
    )


def check_stability(h, m, i):
    """Whether ``S^(2i)(m<1>) m<0> = m`` holds exactly."""
    validate_modcomod(h, m)
    return stability_map(h, m, 2 * i) == Mat.identity(m.dim, h.field)


def check_stability_odd(h, m, i):
    """The odd-power companion check ``S^(2i-1)(m<1>) m<0> = m``."""
    validate_modcomod(h, m)
    return stability_map(h, m, 2 * i - 1) == Mat.identity(m.dim, h.field)


# -- the central structure ----------------------------------------------------


def phi(h, m, v):
    """The central map ``V (x) M -> M (x) V``, ``v (x) m -> m<0> (x) m<1> v``."""
    dv, dm, n = v.dim, m.dim, h.dim
    return (
        kron(Mat.identity(dm, h.field), v.action)
        @ leg_permutation([dv, dm, n], [1, 2, 0], h.field)
        @ kron(Mat.identity(dv, h.field), m.coaction)
    )


def phi_inv(h, m, v):
    """The inverse ``M (x) V -> V (x) M``, ``m (x) v -> S(m<1>) v (x) m<0>``."""
    dv, dm, n = v.dim, m.dim, h.dim
    return (
        kron(v.action, Mat.identity(dm, h.field))
        @ leg_permutation([dm, n, dv], [1, 2, 0], h.field)
        @ kron(kron(Mat.identity(dm, h.field), h.antipode), Mat.identity(dv, h.field))
        @ kron(m.coaction, Mat.identity(dv, h.field))
    )


def check_center(h, m, i, probes=None):
    """Whether the central map is H-linear from the twisted product.

    For each probe V the map ``phi`` must intertwine the diagonal actions on
    ``twist^i(V) (x) M`` and ``M (x) V``.  The probe list must contain the
    left regular module, which is faithful: against it the H-linearity of
    ``phi`` encodes the compatibility at index ``-i``.
    """
    validate_modcomod(h, m)
    if probes is None:
        probes = [regular_module(h)]
    if not any(p.action == h.mult for p in probes):
        raise InvalidStructure("probe list must include the left regular module")
    for v in probes:
        if module_axiom_failures(h, v):
            raise InvalidStructure("invalid probe module")
        f = phi(h, m, v)
        source = tensor_module(h, twist_module(h, v, i), m.module)
        target = tensor_module(h, m.module, v)
        if f @ source.action != target.action @ kron(h.identity_mat(), f):
            return False
    return True


# -- ready-made compatible coefficients ----------------------------------------


def canonical_yd(h, i, grouplike=None):
    """H itself as a compatible index-i coefficient.

    The action is left multiplication and the coaction is
    ``m -> m<2> (x) m<3> c S^(-1-2i)(m<1>)`` for a grouplike element ``c``
    (given as an n x 1 coefficient column, default the unit).  Both structure
    axioms and the index-i compatibility hold for every Hopf algebra;
    stability depends on H, i and c and is not promised.
    """
    n = h.dim
    fld = h.field
    c = grouplike if grouplike is not None else h.unit
    if (c.rows, c.cols) != (n, 1):
        raise ValueError("grouplike must be an n x 1 column")
    right_mult_c = h.mult @ kron(h.identity_mat(), c)
    coaction = (
        kron(h.identity_mat(), h.mult)
        @ kron(kron(h.identity_mat(), right_mult_c), h.identity_mat())
        @ kron(Mat.identity(n * n, fld), s_power(h, -1 - 2 * i))
        @ leg_permutation([n, n, n], [1, 2, 0], fld)
        @ comult_iter(h, 3)
    )
    return ModComod(regular_module(h), RightComodule(n, coaction))


def conjugation_yd(table, field=QQ):
    """The classical compatible pair on a group algebra: conjugation action
    with the grading coaction ``e_h -> e_h (x) h``.  Stable at every index."""
    identity, inv = _check_group(table)
    n = len(table)
    action_entries = {}
    for g in range(n):
        for x in range(n):
            action_entries[(table[table[g][x]][inv[g]], g * n + x)] = 1
    coaction_entries = {(x * n + x, x): 1 for x in range(n)}
    return ModComod(
        LeftModule(n, Mat.from_entries(n, n * n, action_entries, field)),
        RightComodule(n, Mat.from_entries(n * n, n, coaction_entries, field)),
    )


def grouplike_twisted_coefficient(h, index):
    """One-dimensional coefficient: counit action, coaction through one
    grouplike basis element.  Stable at every index; compatible at index i
    exactly when S^(2i) equals conjugation by the grouplike."""
    return ModComod(trivial_module(h, 1), grouplike_comodule(h, index))


# -- the linear system for coactions ------------------------------------------


def yd_coaction_space(h, module, i):
    """Solve the compatibility-plus-counit system for the coaction.

    Given a fixed module structure, the index-i compatibility is linear in
    the coaction and the counit axiom is affine; this returns ``(particular,
    homogeneous)`` where ``particular`` is one solution matrix and
    ``homogeneous`` a list of basis matrices of the solution space of the
    homogenized system.  Returns ``None`` when no coaction satisfies both.
    Solutions still have to be screened for coassociativity, which is not
    linear; see :func:`sample_yd_coactions`.
    """
    n, d = h.dim, module.dim
    fld = h.field
    unknowns = d * n * d

    def route1_gap(coaction):
        probe = ModComod(module, RightComodule(d, coaction))
        lhs, rhs = _yd_route1_sides(h, probe, i)
        return lhs - rhs

    counit_collapse = kron(Mat.identity(d, fld), h.counit)
    gap_rows = (d * n) * (n * d)
    counit_rows = d * d
    columns = []
    for u in range(unknowns):
        basis_coaction = Mat.from_entries(
            d * n, d, {(u // d, u % d): 1}, fld
        )
        gap = route1_gap(basis_coaction)
        col = {}
        for r, row in enumerate(gap.data):
            for c, val in row.items():
                col[r * gap.cols + c] = val
        cu = counit_collapse @ basis_coaction
        for r, row in enumerate(cu.data):
            for c, val in row.items():
                col[gap_rows + r * d + c] = val
        columns.append(col)
    system = Mat(
        gap_rows + counit_rows,
        unknowns,
        [
            {u: columns[u][r] for u in range(unknowns) if r in columns[u]}
            for r in range(gap_rows + counit_rows)
        ],
        fld,
    )
    rhs_entries = {
        (gap_rows + j * d + j, 0): 1 for j in range(d)
    }
    rhs = Mat.from_entries(gap_rows + counit_rows, 1, rhs_entries, fld)
    try:
        particular_vec = solve_columns(system, rhs)
    except ValueError:
        return None
    hom = kernel_basis(system)

    def unvec(vec_col):
        entries = {}
        for u, row in enumerate(vec_col.data):
            v = row.get(0)
            if v:
                entries[(u // d, u % d)] = v
        return Mat.from_entries(d * n, d, entries, fld)

    particular = unvec(particular_vec)
    homogeneous = []
    for j in range(hom.cols):
        col = Mat.from_entries(
            unknowns, 1, {(r, 0): hom.data[r][j] for r in range(unknowns) if j in hom.data[r]}, fld
        )
        homogeneous.append(unvec(col))
    return particular, homogeneous


def sample_yd_coactions(h, module, i, rng, count=10, attempts=200, span=2):
    """Sample coactions from the linear solution space and keep those that
    are genuine comodule structures (coassociativity is checked per sample)."""
    space = yd_coaction_space(h, module, i)
    if space is None:
        return []
    particular, homogeneous = space
    found = []
    seen = set()

    def consider(coaction):
        comod = RightComodule(module.dim, coaction)
        if comodule_axiom_failures(h, comod):
            return
        key = hash(coaction)
        if key in seen:
            return
        seen.add(key)
        found.append(ModComod(module, comod))

    consider(particular)
    for _ in range(attempts):
        if len(found) >= count:
            break
        candidate = particular
        for basis_mat in homogeneous:
            coeff = rng.randint(-span, span)
            if coeff:
                candidate = candidate + basis_mat.scale(coeff)
        consider(candidate)
    return found[:count]


# -- randomized valid structures ----------------------------------------------


def random_invertible(dim, rng, field=QQ, span=2):
    """Unit lower- times unit upper-triangular with small integer entries."""
    lower = {}
    upper = {}
    for r in range(dim):
        lower[(r, r)] = 1
        upper[(r, r)] = 1
        for c in range(r):
            v = rng.randint(-span, span)
            if v:
                lower[(r, c)] = v
        for c in range(r + 1, dim):
            v = rng.randint(-span, span)
            if v:
                upper[(r, c)] = v
    return Mat.from_entries(dim, dim, lower, field) @ Mat.from_entries(
        dim, dim, upper, field
    )


def _module_summands(h):
    return [trivial_module(h, 1), regular_module(h)]


def _comodule_summands(h):
    out = [trivial_comodule(h, 1), regular_comodule(h)]
    for idx in grouplike_basis_indices(h):
        out.append(grouplike_comodule(h, idx))
    out.append(canonical_yd(h, 0).comodule)
    return out


def random_modcomod(h, rng, max_dim=4):
    """A valid module paired with a valid comodule on the same space.

    Both sides are direct sums of standard summands transported along a
    random basis change; the pair is generally not compatible, which is the
    point: route-equivalence and parity properties hold for every valid pair.
    """
    dim = rng.randint(1, max_dim)
    mods = [s for s in _module_summands(h) if s.dim <= dim]
    coms = [s for s in _comodule_summands(h) if s.dim <= dim]

    def pick(pool, total, combine_one, combine_two):
        remaining = total
        current = None
        while remaining:
            options = [s for s in pool if s.dim <= remaining]
            choice = rng.choice(options)
            current = choice if current is None else combine_two(current, choice)
            remaining -= choice.dim
        return current

    module = pick(mods, dim, None, lambda a, b: direct_sum_module(h, a, b))
    comodule = pick(coms, dim, None, lambda a, b: direct_sum_comodule(h, a, b))
    t = random_invertible(dim, rng, h.field)
    return conjugate_modcomod(h, ModComod(module, comodule), t)
