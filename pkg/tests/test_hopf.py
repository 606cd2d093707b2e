import pytest

from hopfcyc.errors import NotAGroup
from hopfcyc.fields import GF
from hopfcyc.hopf import (
    HopfAlgebra,
    comult_iter,
    cyclic_group_table,
    dual_group_algebra,
    group_algebra,
    grouplike_basis_indices,
    mult_iter,
    s_power,
    sweedler,
    trivial,
    verify_axioms,
)
from hopfcyc.linalg import Mat, kron


def builtin_examples():
    return [
        trivial(),
        group_algebra(cyclic_group_table(2)),
        group_algebra(cyclic_group_table(3)),
        group_algebra(cyclic_group_table(4)),
        dual_group_algebra(cyclic_group_table(2)),
        sweedler(),
    ]


@pytest.mark.parametrize("h", builtin_examples(), ids=lambda h: f"dim{h.dim}")
def test_builtin_examples_pass_all_axioms(h):
    report = verify_axioms(h)
    assert report.passed, report.failing()


def test_trivial_is_one_dimensional_identity():
    h = trivial()
    assert h.dim == 1
    for m in (h.mult, h.unit, h.comult, h.counit, h.antipode):
        assert m == Mat.identity(1)


def test_group_algebra_grouplike_structure():
    h = group_algebra(cyclic_group_table(3))
    # Delta(g) = g (x) g and S(g) = g^2 for each group element
    for g in range(3):
        col = [h.comult.entry(i, g) for i in range(9)]
        assert col[g * 3 + g] == 1 and sum(1 for v in col if v) == 1
        assert h.antipode.entry((3 - g) % 3, g) == 1
    assert grouplike_basis_indices(h) == [0, 1, 2]


def test_sweedler_presentation():
    h = sweedler()
    assert h.dim == 4
    # comult of x has exactly two nonzero summands
    x_col = [h.comult.entry(i, 2) for i in range(16)]
    assert sum(1 for v in x_col if v) == 2
    # x*x = 0, g*g = 1, x*g = -gx
    assert all(h.mult.entry(k, 2 * 4 + 2) == 0 for k in range(4))
    assert h.mult.entry(0, 1 * 4 + 1) == 1
    assert h.mult.entry(3, 2 * 4 + 1) == -1
    assert grouplike_basis_indices(h) == [0, 1]


def test_mutated_antipode_fails_exactly_the_antipode_axiom():
    h = sweedler()
    bad_s = Mat.from_entries(4, 4, {(0, 0): 1, (1, 1): 1, (3, 2): 1, (2, 3): 1})
    broken = HopfAlgebra(
        4, h.mult, h.unit, h.comult, h.counit, bad_s, basis_names=h.basis_names
    )
    report = verify_axioms(broken)
    assert not report.passed
    assert all(name.startswith("antipode") for name in report.failing())
    assert any(name in ("antipode-left", "antipode-right") for name in report.failing())


class TestSPower:
    def test_zero_power_is_identity(self):
        for h in builtin_examples():
            assert s_power(h, 0) == h.identity_mat()

    def test_group_algebra_antipode_is_involutive(self):
        h = group_algebra(cyclic_group_table(2))
        assert s_power(h, 2) == h.identity_mat()

    def test_sweedler_s_squared_negates_x(self):
        h = sweedler()
        s2 = s_power(h, 2)
        x = Mat.from_rows([[0], [0], [1], [0]])
        assert s2 @ x == Mat.from_rows([[0], [0], [-1], [0]])

    @pytest.mark.parametrize("h", builtin_examples(), ids=lambda h: f"dim{h.dim}")
    def test_additivity(self, h):
        for a in range(-3, 4):
            for b in range(-3, 4):
                assert s_power(h, a) @ s_power(h, b) == s_power(h, a + b)

    def test_cocommutative_examples_have_involutive_antipode(self):
        for n in (2, 3, 4):
            h = group_algebra(cyclic_group_table(n))
            assert s_power(h, 2) == h.identity_mat()


def test_comult_unit_is_grouplike():
    for h in builtin_examples():
        assert h.comult @ h.unit == kron(h.unit, h.unit)


def test_iterated_structure_maps():
    h = sweedler()
    assert comult_iter(h, 0) == h.counit
    assert comult_iter(h, 1) == h.identity_mat()
    assert comult_iter(h, 2) == h.comult
    i4 = h.identity_mat()
    assert comult_iter(h, 3) == kron(h.comult, i4) @ h.comult
    assert comult_iter(h, 3) == kron(i4, h.comult) @ h.comult
    assert mult_iter(h, 0) == h.unit
    assert mult_iter(h, 2) == h.mult
    assert mult_iter(h, 3) == h.mult @ kron(h.mult, i4)


def test_group_table_validation():
    with pytest.raises(NotAGroup):
        group_algebra([[0, 1], [1, 1]])  # not a latin square with inverses
    with pytest.raises(NotAGroup):
        group_algebra([[1, 0], [0, 0]])  # no identity row/col consistency
    # associativity failure: a 3-element magma with identity and "inverses"
    with pytest.raises(NotAGroup):
        group_algebra([[0, 1, 2], [1, 0, 0], [2, 0, 0]])


def _symmetric_group_3_table():
    import itertools

    perms = list(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    compose = lambda p, q: tuple(p[q[i]] for i in range(3))  # noqa: E731
    return [[index[compose(p, q)] for q in perms] for p in perms]


def test_dual_of_a_nonabelian_group_algebra():
    # commutative but not cocommutative; the antipode is still involutive
    table = _symmetric_group_3_table()
    h = dual_group_algebra(table)
    assert verify_axioms(h).passed
    assert s_power(h, 2) == h.identity_mat()
    # noncocommutativity: comult differs from its flip
    from hopfcyc.linalg import swap_factors

    assert swap_factors(6, 6) @ h.comult != h.comult
    assert verify_axioms(group_algebra(table)).passed


def test_axioms_over_prime_field():
    f = GF(5)
    report = verify_axioms(sweedler(field=f))
    assert report.passed
    report = verify_axioms(group_algebra(cyclic_group_table(3), field=f))
    assert report.passed
