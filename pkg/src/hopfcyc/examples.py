"""Desk-scale example objects: small module algebras, module coalgebras and
coefficients over the builtin Hopf algebras, used by the bundled fixtures and
the verification suites.
"""

from .errors import CoefficientMismatch
from .hopf import _check_group, grouplike_basis_indices, sweedler
from .linalg import Mat
from .rep import (
    LeftModule,
    ModuleAlgebra,
    ModuleCoalgebra,
    canonical_yd,
    check_stability,
    check_yd,
    conjugation_yd,
    grouplike_twisted_coefficient,
    modcomod_failures,
    regular_module,
    trivial_modcomod,
    trivial_module,
)
from .trace import COVARIANT


def ground_field_algebra(h):
    """The monoidal unit as a module algebra."""
    one = Mat.identity(1, h.field)
    return ModuleAlgebra(trivial_module(h, 1), one, one)


def ground_field_coalgebra(h):
    one = Mat.identity(1, h.field)
    return ModuleCoalgebra(trivial_module(h, 1), one, one)


def dual_numbers_algebra(h):
    """k[y]/(y^2) with the trivial action, basis (1, y)."""
    mod = trivial_module(h, 2)
    mult = Mat.from_entries(2, 4, {(0, 0): 1, (1, 1): 1, (1, 2): 1}, h.field)
    unit = Mat.from_entries(2, 1, {(0, 0): 1}, h.field)
    return ModuleAlgebra(mod, mult, unit)


def divided_power_coalgebra(h):
    """The dual of the dual numbers: ``Delta(e1) = e0 (x) e1 + e1 (x) e0``,
    trivial action."""
    mod = trivial_module(h, 2)
    comult = Mat.from_entries(4, 2, {(0, 0): 1, (1, 1): 1, (2, 1): 1}, h.field)
    counit = Mat.from_entries(1, 2, {(0, 0): 1}, h.field)
    return ModuleCoalgebra(mod, comult, counit)


def skew_lines_algebra(h=None):
    """k[y]/(y^2) as a module algebra over the 4-dim example: the grouplike
    flips the sign of y and the nilpotent generator acts as the associated
    skew derivative (x . y = 1, x . 1 = 0)."""
    h = h if h is not None else sweedler()
    action = Mat.from_entries(
        2,
        8,
        {
            (0, 0): 1, (1, 1): 1,      # 1 acts as the identity
            (0, 2): 1, (1, 3): -1,     # g: y -> -y
            (0, 5): 1,                 # x: y -> 1
            (0, 7): 1,                 # gx: y -> 1 (and gx . 1 = 0)
        },
        h.field,
    )
    mod = LeftModule(2, action)
    mult = Mat.from_entries(2, 4, {(0, 0): 1, (1, 1): 1, (1, 2): 1}, h.field)
    unit = Mat.from_entries(2, 1, {(0, 0): 1}, h.field)
    return ModuleAlgebra(mod, mult, unit)


def permutation_algebra(table, h):
    """Functions on the group as a module algebra: pointwise product on the
    idempotent basis, the group translating coordinates."""
    identity, _ = _check_group(table)
    n = len(table)
    entries = {}
    for a in range(n):
        for i in range(n):
            entries[(table[a][i], a * n + i)] = 1
    mod = LeftModule(n, Mat.from_entries(n, n * n, entries, h.field))
    mult = Mat.from_entries(n, n * n, {(i, i * n + i): 1 for i in range(n)}, h.field)
    unit = Mat.from_rows([[1]] * n, h.field)
    return ModuleAlgebra(mod, mult, unit)


def sign_character(table):
    """A surjective character G -> {1, -1}, or None if none exists."""
    identity, _ = _check_group(table)
    n = len(table)
    for assignment in range(1, 2 ** n):
        chi = [1 if (assignment >> i) & 1 == 0 else -1 for i in range(n)]
        if chi[identity] != 1 or all(v == 1 for v in chi):
            continue
        if all(
            chi[table[i][j]] == chi[i] * chi[j] for i in range(n) for j in range(n)
        ):
            return chi
    return None


def _character_dual_numbers_module(h, chi):
    entries = {}
    for a, sign in enumerate(chi):
        entries[(0, a * 2 + 0)] = 1
        entries[(1, a * 2 + 1)] = sign
    return LeftModule(2, Mat.from_entries(2, h.dim * 2, entries, h.field))


def twisted_dual_numbers_algebra(h, chi):
    """k[y]/(y^2) with the group acting on y through a sign character."""
    mod = _character_dual_numbers_module(h, chi)
    mult = Mat.from_entries(2, 4, {(0, 0): 1, (1, 1): 1, (1, 2): 1}, h.field)
    unit = Mat.from_entries(2, 1, {(0, 0): 1}, h.field)
    return ModuleAlgebra(mod, mult, unit)


def twisted_divided_power_coalgebra(h, chi):
    """The divided-power coalgebra with the same sign-character action."""
    mod = _character_dual_numbers_module(h, chi)
    comult = Mat.from_entries(4, 2, {(0, 0): 1, (1, 1): 1, (2, 1): 1}, h.field)
    counit = Mat.from_entries(1, 2, {(0, 0): 1}, h.field)
    return ModuleCoalgebra(mod, comult, counit)


def graded_dual_numbers_algebra(table, h, degree_of_y=1):
    """k[y]/(y^2) as a module algebra over the dual group algebra: the
    idempotent basis acts by projecting onto the graded pieces, with 1 in
    degree e and y in the chosen degree."""
    identity, _ = _check_group(table)
    n = len(table)
    degrees = (identity, degree_of_y)
    entries = {}
    for a in range(n):
        for j, deg in enumerate(degrees):
            if deg == a:
                entries[(j, a * 2 + j)] = 1
    mod = LeftModule(2, Mat.from_entries(2, n * 2, entries, h.field))
    mult = Mat.from_entries(2, 4, {(0, 0): 1, (1, 1): 1, (1, 2): 1}, h.field)
    unit = Mat.from_entries(2, 1, {(0, 0): 1}, h.field)
    return ModuleAlgebra(mod, mult, unit)


def graded_divided_power_coalgebra(table, h, degree_of_y=1):
    """The divided-power coalgebra with the same graded projection action."""
    base = graded_dual_numbers_algebra(table, h, degree_of_y)
    comult = Mat.from_entries(4, 2, {(0, 0): 1, (1, 1): 1, (2, 1): 1}, h.field)
    counit = Mat.from_entries(1, 2, {(0, 0): 1}, h.field)
    return ModuleCoalgebra(base.module, comult, counit)


def group_conjugation_algebra(table, h):
    """The group algebra as a module algebra over itself, acting by
    conjugation."""
    identity, inv = _check_group(table)
    n = len(table)
    entries = {}
    for g in range(n):
        for x in range(n):
            entries[(table[table[g][x]][inv[g]], g * n + x)] = 1
    mod = LeftModule(n, Mat.from_entries(n, n * n, entries, h.field))
    unit = Mat.from_entries(n, 1, {(identity, 0): 1}, h.field)
    return ModuleAlgebra(mod, h.mult, unit)


def group_left_coalgebra(table, h):
    """The group algebra as a module coalgebra under left multiplication."""
    mod = regular_module(h)
    return ModuleCoalgebra(mod, h.comult, h.counit)


def stable_coefficient(h, variance, table=None):
    """First builtin coefficient of the right charge and stability.

    Candidates, in order: the trivial coefficient, the grouplike-twisted
    one-dimensional coefficients, the canonical coefficient on H itself, and
    for group algebras the conjugation pair.
    """
    charge = 1 if variance == COVARIANT else -1
    stability = 1 if variance == COVARIANT else 0
    candidates = [trivial_modcomod(h)]
    for j in grouplike_basis_indices(h):
        candidates.append(grouplike_twisted_coefficient(h, j))
    candidates.append(canonical_yd(h, charge))
    if table is not None:
        candidates.append(conjugation_yd(table, h.field))
    for m in candidates:
        if modcomod_failures(h, m):
            continue
        if check_yd(h, m, charge) and check_stability(h, m, stability):
            return m
    raise CoefficientMismatch(
        f"no builtin coefficient is {stability}-stable with charge {charge:+d}"
    )


def unstable_coefficient(h, variance, table=None):
    """A coefficient of the right charge that fails the stability condition,
    found among canonical coefficients twisted by nontrivial grouplikes."""
    charge = 1 if variance == COVARIANT else -1
    stability = 1 if variance == COVARIANT else 0
    n = h.dim
    candidates = []
    for j in grouplike_basis_indices(h):
        col = Mat.from_entries(n, 1, {(j, 0): 1}, h.field)
        candidates.append(canonical_yd(h, charge, grouplike=col))
    for m in candidates:
        if modcomod_failures(h, m):
            continue
        if check_yd(h, m, charge) and not check_stability(h, m, stability):
            return m
    raise CoefficientMismatch(
        f"no builtin coefficient of charge {charge:+d} fails {stability}-stability"
    )
