import pytest

from hopfcyc.cyclic import (
    CyclicObject,
    THEORIES,
    build_concrete,
    build_contra_algebra,
    build_contra_coalgebra,
    build_cov_algebra,
    build_cov_coalgebra,
    build_generic,
    output_variance,
    verify_relations,
)
from hopfcyc.errors import CapTooSmall, CoefficientMismatch, InvalidStructure
from hopfcyc.examples import (
    divided_power_coalgebra,
    dual_numbers_algebra,
    ground_field_algebra,
    ground_field_coalgebra,
    group_conjugation_algebra,
    group_left_coalgebra,
    permutation_algebra,
    sign_character,
    skew_lines_algebra,
    stable_coefficient,
    twisted_dual_numbers_algebra,
    unstable_coefficient,
)
from hopfcyc.hopf import cyclic_group_table, group_algebra, sweedler, trivial
from hopfcyc.linalg import Mat
from hopfcyc.rep import (
    grouplike_twisted_coefficient,
    module_algebra_failures,
    module_coalgebra_failures,
    tensor_module,
    regular_module,
    trivial_modcomod,
    trivial_module,
)
from hopfcyc.trace import CONTRAVARIANT, COVARIANT, TraceInstance

TRIV = trivial()
Z2 = group_algebra(cyclic_group_table(2))
Z3 = group_algebra(cyclic_group_table(3))
SW = sweedler()
KG = grouplike_twisted_coefficient(SW, 1)


def small_instances():
    """(hopf, coefficient, algebra object, coalgebra object, group table)"""
    t2 = cyclic_group_table(2)
    return [
        (TRIV, trivial_modcomod(TRIV), dual_numbers_algebra(TRIV), divided_power_coalgebra(TRIV)),
        (Z2, stable_coefficient(Z2, COVARIANT, t2), group_conjugation_algebra(t2, Z2), group_left_coalgebra(t2, Z2)),
        (SW, KG, skew_lines_algebra(SW), divided_power_coalgebra(SW)),
    ]


def test_objects_are_valid():
    for h, _, alg, coalg in small_instances():
        assert not module_algebra_failures(h, alg)
        assert not module_coalgebra_failures(h, coalg)
    assert not module_algebra_failures(SW, skew_lines_algebra(SW))


def test_tensor_power_fold_is_associative():
    # the generic builder mixes groupings; they must agree entrywise
    for h, obj in ((Z2, group_conjugation_algebra(cyclic_group_table(2), Z2)),
                   (SW, skew_lines_algebra(SW))):
        a = obj.module
        left = tensor_module(h, tensor_module(h, a, a), a)
        right = tensor_module(h, a, tensor_module(h, a, a))
        assert left == right
        padded = tensor_module(h, trivial_module(h, 1), a)
        assert padded == a


def test_trivial_hopf_ground_field_tower():
    co = build_contra_algebra(TRIV, trivial_modcomod(TRIV), ground_field_algebra(TRIV), 3)
    assert co.variance == "cocyclic"
    assert co.dims() == [1, 1, 1, 1]
    one = Mat.identity(1)
    for tau in co.cyclic_ops:
        assert tau == one
    for mats in list(co.faces.values()) + list(co.degens.values()):
        for m in mats:
            assert m == one
    assert verify_relations(co).passed


def test_degeneracy_inserts_the_unit():
    # degree-0 degeneracy of the dual numbers embeds a (x) 1 into degree 1
    a = dual_numbers_algebra(TRIV)
    co = build_concrete("cov-alg", TRIV, trivial_modcomod(TRIV), a, 2)
    sigma0 = co.degens[0][0]
    assert (sigma0.rows, sigma0.cols) == (4, 2)
    # basis vector e_j goes to e_j (x) e_0, i.e. flat index 2*j
    for j in range(2):
        col = [sigma0.entry(r, j) for r in range(4)]
        assert col[2 * j] == 1 and sum(1 for v in col if v) == 1


def test_tower_spaces_are_the_computed_invariants():
    # covariant tower dimensions agree with an independent per-degree
    # invariants computation
    from hopfcyc.trace import invariants_basis

    h, coeff, alg = SW, KG, skew_lines_algebra(SW)
    co = build_concrete("cov-alg", h, coeff, alg, 3)
    for n in range(4):
        legs = tensor_module(h, coeff.module, _power(h, alg.module, n + 1))
        assert co.spaces[n].dim == invariants_basis(h, legs).dim


def _power(h, module, k):
    out = trivial_module(h, 1)
    for _ in range(k):
        out = tensor_module(h, out, module)
    return out


def test_variance_table():
    assert output_variance(*THEORIES["cov-alg"]) == "cyclic"
    assert output_variance(*THEORIES["cov-coalg"]) == "cocyclic"
    assert output_variance(*THEORIES["contra-alg"]) == "cocyclic"
    assert output_variance(*THEORIES["contra-coalg"]) == "cyclic"


def test_cap_too_small():
    with pytest.raises(CapTooSmall):
        build_cov_algebra(TRIV, trivial_modcomod(TRIV), ground_field_algebra(TRIV), 0)


def test_minimal_cap_builds_and_verifies():
    for theory in THEORIES:
        h, coeff, alg, coalg = small_instances()[2]
        obj = alg if THEORIES[theory][1] == "algebra" else coalg
        co = build_concrete(theory, h, coeff, obj, 1)
        assert co.degree_cap == 1
        assert verify_relations(co).passed


def test_wrong_object_kind_is_rejected():
    with pytest.raises(InvalidStructure):
        build_cov_algebra(TRIV, trivial_modcomod(TRIV), ground_field_coalgebra(TRIV), 2)


def test_coefficient_mismatch_is_rejected():
    # the trivial coefficient over the 4-dim example has the wrong charge
    with pytest.raises(CoefficientMismatch):
        build_cov_algebra(SW, trivial_modcomod(SW), skew_lines_algebra(SW), 2)
    # unstable coefficient rejected unless paracyclic is allowed
    m = unstable_coefficient(Z3, CONTRAVARIANT, cyclic_group_table(3))
    obj = ground_field_algebra(Z3)
    with pytest.raises(CoefficientMismatch):
        build_contra_algebra(Z3, m, obj, 2)
    co = build_contra_algebra(Z3, m, obj, 2, allow_paracyclic=True)
    assert co.degree_cap == 2


@pytest.mark.parametrize("theory", list(THEORIES))
def test_relations_pass_on_stable_builds(theory):
    for h, coeff, alg, coalg in small_instances():
        kind = THEORIES[theory][1]
        obj = alg if kind == "algebra" else coalg
        co = build_concrete(theory, h, coeff, obj, 3)
        report = verify_relations(co)
        assert report.passed, (theory, h.dim, report.violations[:5])


@pytest.mark.parametrize("theory", list(THEORIES))
def test_builders_agree_matrix_for_matrix(theory):
    variance, kind = THEORIES[theory]
    for h, coeff, alg, coalg in small_instances():
        obj = alg if kind == "algebra" else coalg
        direct = build_concrete(theory, h, coeff, obj, 3)
        t = TraceInstance(h, coeff, variance)
        generic = build_generic(t, obj, 3)
        assert direct.variance == generic.variance
        assert direct.dims() == generic.dims()
        for n in range(1, 4):
            assert direct.faces[n] == generic.faces[n], (theory, h.dim, n)
        for n in range(3):
            assert direct.degens[n] == generic.degens[n]
        assert direct.cyclic_ops == generic.cyclic_ops


def test_top_face_equals_rotated_zero_face():
    # defined top face against the explicit twisted formula, both variances
    for h, coeff, alg, coalg in small_instances():
        for theory, obj in (("cov-alg", alg), ("contra-coalg", coalg)):
            co = build_concrete(theory, h, coeff, obj, 3)
            for n in range(1, 4):
                assert co.faces[n][n] == co.faces[n][0] @ co.cyclic_ops[n]
        for theory, obj in (("cov-coalg", coalg), ("contra-alg", alg)):
            co = build_concrete(theory, h, coeff, obj, 3)
            for n in range(1, 4):
                assert co.faces[n][n] == co.cyclic_ops[n] @ co.faces[n][0]


def _tamper(co):
    n = 2
    mats = list(co.faces[n])
    victim = mats[1]
    bumped = dict(victim.data[0])
    bumped[0] = bumped.get(0, victim.field.zero) + victim.field.one
    data = [bumped] + [dict(r) for r in victim.data[1:]]
    mats[1] = Mat(victim.rows, victim.cols, data, victim.field)
    faces = dict(co.faces)
    faces[n] = mats
    return CyclicObject(
        co.variance, co.degree_cap, co.spaces, faces, co.degens, co.cyclic_ops,
        dict(co.provenance),
    )


def test_tampered_face_breaks_a_simplicial_relation():
    h, coeff, alg, _ = small_instances()[1]
    co = build_concrete("contra-alg", h, coeff, alg, 3)
    bad = _tamper(co)
    report = verify_relations(bad)
    assert not report.passed
    assert any(
        v.relation in ("face-face", "face-degen", "tau-face", "tau-face-top")
        for v in report.violations
    )


def test_paracyclic_separation():
    # compatible but unstable coefficient: only the rotation-power family
    # fails, every simplicial and mixed compatibility still holds; the object
    # must carry a faithful action or the instability is invisible
    table = cyclic_group_table(3)
    m = unstable_coefficient(Z3, CONTRAVARIANT, table)
    obj = permutation_algebra(table, Z3)
    co = build_contra_algebra(Z3, m, obj, 3, allow_paracyclic=True)
    report = verify_relations(co)
    assert not report.passed
    assert report.violated_relations() == ["tau-power"]
    assert any(v.degree == 0 for v in report.violations)  # tau_0 != Id
    # the generic route is paracyclic as well
    t = TraceInstance(Z3, m, CONTRAVARIANT)
    gen = build_generic(t, obj, 3, allow_paracyclic=True)
    gen_report = verify_relations(gen)
    assert gen_report.violated_relations() == ["tau-power"]


def test_paracyclic_covariant_route():
    table = cyclic_group_table(2)
    m = unstable_coefficient(Z2, COVARIANT, table)
    chi = sign_character(table)
    obj = twisted_dual_numbers_algebra(Z2, chi)
    co = build_cov_algebra(Z2, m, obj, 3, allow_paracyclic=True)
    report = verify_relations(co)
    assert report.violated_relations() == ["tau-power"]


def test_classical_degeneration_matches_independent_construction():
    # over the trivial Hopf algebra the contravariant algebra theory is the
    # classical cocyclic module of the algebra, built here by raw index
    # bookkeeping with no tensor machinery
    a = dual_numbers_algebra(TRIV)
    co = build_contra_algebra(TRIV, trivial_modcomod(TRIV), a, 3)
    for basis in co.spaces:
        assert basis.inclusion.is_identity()
    d = 2
    prods = {
        (0, 0): {0: 1},
        (0, 1): {1: 1},
        (1, 0): {1: 1},
        (1, 1): {},
    }
    unit_idx = 0

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

    def coface(i, n):
        # argument map A^(n+1) -> A^n multiplying slots i, i+1; transpose
        entries = {}
        for t in tuples(n + 1):
            for k, coeff in prods[(t[i], t[i + 1])].items():
                out = t[:i] + (k,) + t[i + 2:]
                entries[(flat(t), flat(out))] = coeff
        return Mat.from_entries(d ** (n + 1), d ** n, entries)

    def coface_top(n):
        entries = {}
        for t in tuples(n + 1):
            for k, coeff in prods[(t[n], t[0])].items():
                out = (k,) + t[1:n]
                entries[(flat(t), flat(out))] = coeff
        return Mat.from_entries(d ** (n + 1), d ** n, entries)

    def codegen(i, n):
        entries = {}
        for t in tuples(n + 1):
            out = t[: i + 1] + (unit_idx,) + t[i + 1:]
            entries[(flat(t), flat(out))] = 1
        return Mat.from_entries(d ** (n + 1), d ** (n + 2), entries)

    def tau(n):
        entries = {}
        for t in tuples(n + 1):
            out = (t[n],) + t[:n]
            entries[(flat(t), flat(out))] = 1
        return Mat.from_entries(d ** (n + 1), d ** (n + 1), entries)

    for n in range(1, 4):
        for i in range(n):
            assert co.faces[n][i] == coface(i, n)
        assert co.faces[n][n] == coface_top(n)
    for n in range(3):
        for i in range(n + 1):
            assert co.degens[n][i] == codegen(i, n)
    for n in range(4):
        assert co.cyclic_ops[n] == tau(n)
    assert verify_relations(co).passed


def test_thread_cap_parallel_verification(monkeypatch):
    # HOPFCYC_THREADS caps internal parallelism; results are identical
    co = build_contra_algebra(
        TRIV, trivial_modcomod(TRIV), dual_numbers_algebra(TRIV), 3
    )
    serial = verify_relations(co)
    monkeypatch.setenv("HOPFCYC_THREADS", "4")
    parallel = verify_relations(co)
    assert serial.passed and parallel.passed
    assert serial.checked == parallel.checked
    assert serial.checked_by_relation == parallel.checked_by_relation


def test_all_four_builders_run_on_the_sweedler_instance():
    alg = skew_lines_algebra(SW)
    coalg = divided_power_coalgebra(SW)
    assert build_cov_algebra(SW, KG, alg, 2).variance == "cyclic"
    assert build_cov_coalgebra(SW, KG, coalg, 2).variance == "cocyclic"
    assert build_contra_algebra(SW, KG, alg, 2).variance == "cocyclic"
    assert build_contra_coalgebra(SW, KG, coalg, 2).variance == "cyclic"
