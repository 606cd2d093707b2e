"""Finite (co)cyclic towers: the generic builder driven by the swap
isomorphisms, the four direct builders compiled from the explicit
structure-map formulas, and the exhaustive relation verifier.

A tower of cap N stores, per degree, an explicit basis of the computed
subspace plus all structure matrices between the restricted bases:

* ``faces[n]`` (n = 1..N) holds the n+1 maps indexed 0..n between degrees n
  and n-1: downwards for the cyclic variance, upwards for the cocyclic one;
* ``degens[n]`` (n = 0..N-1) holds the n+1 maps between degrees n and n+1:
  upwards for cyclic, downwards for cocyclic;
* ``cyclic_ops[n]`` (n = 0..N) is the degree-n cyclic operator.

The four theories and their output variance:

    covariant + algebra        -> cyclic
    covariant + coalgebra      -> cocyclic
    contravariant + algebra    -> cocyclic
    contravariant + coalgebra  -> cyclic

Degree caps are hard inputs; everything is finite exact linear algebra.
"""

from dataclasses import dataclass, field

from .errors import CapTooSmall, InvalidStructure
from .fields import QQ
from .linalg import Mat, TensorShape, inverse, kron, leg_permutation, restrict_map
from .parallel import run_all
from .rep import (
    ModuleAlgebra,
    ModuleCoalgebra,
    module_algebra_failures,
    module_coalgebra_failures,
    tensor_module,
    trivial_module,
)
from .trace import CONTRAVARIANT, COVARIANT, TraceInstance, iota_pair

CYCLIC = "cyclic"
COCYCLIC = "cocyclic"

THEORIES = {
    "cov-alg": (COVARIANT, "algebra"),
    "cov-coalg": (COVARIANT, "coalgebra"),
    "contra-alg": (CONTRAVARIANT, "algebra"),
    "contra-coalg": (CONTRAVARIANT, "coalgebra"),
}


def output_variance(variance, kind):
    if (variance, kind) in ((COVARIANT, "algebra"), (CONTRAVARIANT, "coalgebra")):
        return CYCLIC
    return COCYCLIC


@dataclass
class CyclicObject:
    variance: str
    degree_cap: int
    spaces: list
    faces: dict
    degens: dict
    cyclic_ops: list
    provenance: dict = field(default_factory=dict)

    def dims(self):
        return [s.dim for s in self.spaces]

    @property
    def field(self):
        return self.spaces[0].inclusion.field

    def validate_shape(self):
        cap = self.degree_cap
        if len(self.spaces) != cap + 1 or len(self.cyclic_ops) != cap + 1:
            raise InvalidStructure("tower has the wrong number of degrees")
        dims = self.dims()
        for n, tau in enumerate(self.cyclic_ops):
            if (tau.rows, tau.cols) != (dims[n], dims[n]):
                raise InvalidStructure(f"cyclic operator at degree {n} has wrong shape")
        for n in range(1, cap + 1):
            mats = self.faces.get(n)
            if mats is None or len(mats) != n + 1:
                raise InvalidStructure(f"expected {n + 1} faces at degree {n}")
            lo, hi = dims[n - 1], dims[n]
            expected = (lo, hi) if self.variance == CYCLIC else (hi, lo)
            for m in mats:
                if (m.rows, m.cols) != expected:
                    raise InvalidStructure(f"face at degree {n} has wrong shape")
        for n in range(0, cap):
            mats = self.degens.get(n)
            if mats is None or len(mats) != n + 1:
                raise InvalidStructure(f"expected {n + 1} degeneracies at degree {n}")
            lo, hi = dims[n], dims[n + 1]
            expected = (hi, lo) if self.variance == CYCLIC else (lo, hi)
            for m in mats:
                if (m.rows, m.cols) != expected:
                    raise InvalidStructure(f"degeneracy at degree {n} has wrong shape")
        return True


class _Tower:
    """Shared scaffolding: ambient modules, computed bases, big-space maps."""

    def __init__(self, trace, obj, kind, cap):
        if cap < 1:
            raise CapTooSmall("the degree cap must be at least 1")
        self.t = trace
        self.kind = kind
        self.cap = cap
        self.obj = obj
        h = trace.hopf
        self.h = h
        failures = (
            module_algebra_failures(h, obj)
            if kind == "algebra"
            else module_coalgebra_failures(h, obj)
        )
        if failures:
            raise InvalidStructure(f"invalid {kind} object: " + ", ".join(failures))
        d = obj.dim
        self.d = d
        self.dm = trace.coeff.dim
        # tensor powers of the object's module, 0..cap+1; tensoring with the
        # trivial leftmost factor reproduces the factor's matrix exactly, so
        # one uniform fold matches every regrouping entrywise
        self.pow_mods = [trivial_module(h, 1)]
        for _ in range(cap + 1):
            self.pow_mods.append(tensor_module(h, self.pow_mods[-1], obj.module))
        # ambient modules M (x) A^(x n+1) and the per-degree bases
        self.amb = []
        self.bases = []
        label = "A" if kind == "algebra" else "C"
        for n in range(cap + 1):
            mod = tensor_module(h, trace.coeff.module, self.pow_mods[n + 1])
            self.amb.append(mod)
            shape = TensorShape(
                [("M", self.dm)] + [(f"{label}{j}", d) for j in range(n + 1)]
            )
            self.bases.append(trace.space_basis(mod, shape))

    # identities on slot ranges
    def _i(self, count):
        return Mat.identity(self.d ** count, self.h.field)

    def _im(self):
        return Mat.identity(self.dm, self.h.field)

    # -- big-space argument maps ------------------------------------------

    def face_arg(self, i, n):
        """algebra: multiply slots i, i+1 of the n+1 object legs."""
        return kron(self._im(), kron(kron(self._i(i), self.obj.mult), self._i(n - i - 1)))

    def degen_arg(self, i, n):
        """algebra: insert the unit after slot i."""
        return kron(
            self._im(), kron(kron(self._i(i + 1), self.obj.unit), self._i(n - i))
        )

    def coface_arg(self, i, n):
        """coalgebra: comultiply slot i of the n object legs."""
        return kron(
            self._im(), kron(kron(self._i(i), self.obj.comult), self._i(n - 1 - i))
        )

    def codegen_arg(self, i, n):
        """coalgebra: apply the counit to slot i+1 of the n+2 object legs."""
        return kron(
            self._im(), kron(kron(self._i(i + 1), self.obj.counit), self._i(n - i))
        )

    def tau_arg(self, n):
        """The rotation on the ambient space ``M (x) A^(x n+1)``.

        algebra:   m (x) a_0 ... a_n -> m<0> (x) m<1> a_n (x) a_0 ... a_{n-1}
        coalgebra: m (x) c_0 ... c_n -> m<0> (x) c_1 ... c_n (x) S(m<1>) c_0
        """
        h, d, dm = self.h, self.d, self.dm
        n_h = h.dim
        coact = self.t.coeff.coaction
        fld = h.field
        if self.kind == "algebra":
            move_last = leg_permutation(
                [dm, n_h] + [d] * (n + 1),
                [0, 1, n + 2] + list(range(2, n + 2)),
                fld,
            )
            act = kron(
                Mat.identity(dm, fld), kron(self.obj.module.action, self._i(n))
            )
            return act @ move_last @ kron(coact, self._i(n + 1))
        hit_first = kron(
            Mat.identity(dm, fld), kron(self.obj.module.action, self._i(n))
        )
        twist = kron(
            kron(Mat.identity(dm, fld), h.antipode), self._i(n + 1)
        )
        rotate = leg_permutation(
            [dm] + [d] * (n + 1), [0] + list(range(2, n + 2)) + [1], fld
        )
        return rotate @ hit_first @ twist @ kron(coact, self._i(n + 1))

    def top_face_arg(self, n):
        """The twisted top (co)face on the ambient space."""
        if self.kind == "algebra":
            return self.face_arg(0, n) @ self.tau_arg(n)
        return self.tau_arg(n) @ self.coface_arg(0, n)

    # -- restriction --------------------------------------------------------

    def restricted(self, big, src_deg, dst_deg):
        """Restrict a big-space map to the computed bases.

        Covariant: the tower map follows the argument direction.
        Contravariant: functionals precompose, so the tower map is the
        restricted transpose, running against the argument direction.
        """
        if self.t.variance == COVARIANT:
            return restrict_map(big, self.bases[src_deg], self.bases[dst_deg])
        return restrict_map(big.transpose(), self.bases[dst_deg], self.bases[src_deg])


def _assemble(tower, taus, top_faces, builder_name, theory):
    """Restrict all simplicial maps and pack the tower."""
    cap = tower.cap
    out_var = output_variance(*THEORIES[theory])
    faces = {}
    degens = {}
    for n in range(1, cap + 1):
        mats = []
        for i in range(n):
            big = (
                tower.face_arg(i, n)
                if tower.kind == "algebra"
                else tower.coface_arg(i, n)
            )
            src, dst = (n, n - 1) if tower.kind == "algebra" else (n - 1, n)
            mats.append(tower.restricted(big, src, dst))
        mats.append(top_faces[n])
        faces[n] = mats
    for n in range(cap):
        mats = []
        for i in range(n + 1):
            if tower.kind == "algebra":
                big = tower.degen_arg(i, n)
                src, dst = n, n + 1
            else:
                big = tower.codegen_arg(i, n)
                src, dst = n + 1, n
            mats.append(tower.restricted(big, src, dst))
        degens[n] = mats
    co = CyclicObject(
        variance=out_var,
        degree_cap=cap,
        spaces=tower.bases,
        faces=faces,
        degens=degens,
        cyclic_ops=taus,
        provenance={"builder": builder_name, "theory": theory, "degree_cap": cap},
    )
    co.validate_shape()
    return co


def build_concrete(theory, h, coeff, obj, cap, allow_paracyclic=False):
    """Build a tower straight from the explicit structure-map formulas."""
    variance, kind = THEORIES[theory]
    _check_object_kind(kind, obj)
    t = TraceInstance(h, coeff, variance)
    t.validate(require_stability=not allow_paracyclic)
    tower = _Tower(t, obj, kind, cap)
    taus = [tower.restricted(tower.tau_arg(n), n, n) for n in range(cap + 1)]
    top_faces = {}
    for n in range(1, cap + 1):
        big = tower.top_face_arg(n)
        src, dst = (n, n - 1) if kind == "algebra" else (n - 1, n)
        top_faces[n] = tower.restricted(big, src, dst)
    return _assemble(tower, taus, top_faces, "direct", theory)


def build_generic(t, obj, cap, allow_paracyclic=False):
    """Build a tower from the trace instance alone.

    The cyclic operator is the compiled swap chain (or its matrix inverse for
    the two theories that rotate the other way) and the top (co)face is
    defined through it; the direct builders must agree with this output
    matrix for matrix.
    """
    kind = "algebra" if isinstance(obj, ModuleAlgebra) else "coalgebra"
    _check_object_kind(kind, obj)
    theory = {
        (COVARIANT, "algebra"): "cov-alg",
        (COVARIANT, "coalgebra"): "cov-coalg",
        (CONTRAVARIANT, "algebra"): "contra-alg",
        (CONTRAVARIANT, "coalgebra"): "contra-coalg",
    }[(t.variance, kind)]
    t.validate(require_stability=not allow_paracyclic)
    tower = _Tower(t, obj, kind, cap)
    direct = theory in ("cov-alg", "contra-coalg")
    taus = []
    for n in range(cap + 1):
        swap = iota_pair(
            t,
            obj.module,
            tower.pow_mods[n],
            dom=tower.bases[n],
            cod=tower.bases[n],
        )
        taus.append(swap if direct else inverse(swap))
    out_var = output_variance(t.variance, kind)
    top_faces = {}
    for n in range(1, cap + 1):
        first = (
            tower.face_arg(0, n) if kind == "algebra" else tower.coface_arg(0, n)
        )
        src, dst = (n, n - 1) if kind == "algebra" else (n - 1, n)
        delta0 = tower.restricted(first, src, dst)
        top_faces[n] = delta0 @ taus[n] if out_var == CYCLIC else taus[n] @ delta0
    return _assemble(tower, taus, top_faces, "generic", theory)


def _check_object_kind(kind, obj):
    want = ModuleAlgebra if kind == "algebra" else ModuleCoalgebra
    if not isinstance(obj, want):
        raise InvalidStructure(
            f"theory expects a module {kind}, got {type(obj).__name__}"
        )


def build_cov_algebra(h, m, a, cap, allow_paracyclic=False):
    return build_concrete("cov-alg", h, m, a, cap, allow_paracyclic)


def build_cov_coalgebra(h, m, c, cap, allow_paracyclic=False):
    return build_concrete("cov-coalg", h, m, c, cap, allow_paracyclic)


def build_contra_algebra(h, m, a, cap, allow_paracyclic=False):
    return build_concrete("contra-alg", h, m, a, cap, allow_paracyclic)


def build_contra_coalgebra(h, m, c, cap, allow_paracyclic=False):
    return build_concrete("contra-coalg", h, m, c, cap, allow_paracyclic)


# -- relation verification -----------------------------------------------------


@dataclass
class RelationViolation:
    relation: str
    degree: int
    indices: tuple


@dataclass
class RelationReport:
    checked: int
    violations: list
    checked_by_relation: dict = field(default_factory=dict)

    @property
    def passed(self):
        return not self.violations

    def violated_relations(self):
        return sorted({v.relation for v in self.violations})


def _cyclic_checks(co):
    cap = co.degree_cap
    faces, degens, tau = co.faces, co.degens, co.cyclic_ops
    dims = co.dims()
    fld = co.field
    checks = []

    def eye(n):
        return Mat.identity(dims[n], fld)

    for n in range(2, cap + 1):
        for j in range(1, n + 1):
            for i in range(j):
                checks.append(
                    (
                        "face-face",
                        n,
                        (i, j),
                        lambda n=n, i=i, j=j: faces[n - 1][i] @ faces[n][j]
                        == faces[n - 1][j - 1] @ faces[n][i],
                    )
                )
    for n in range(cap - 1):
        for i in range(n + 1):
            for j in range(i, n + 1):
                checks.append(
                    (
                        "degen-degen",
                        n,
                        (i, j),
                        lambda n=n, i=i, j=j: degens[n + 1][i] @ degens[n][j]
                        == degens[n + 1][j + 1] @ degens[n][i],
                    )
                )
    for n in range(cap):
        for j in range(n + 1):
            for i in range(n + 2):
                if i == j or i == j + 1:
                    checks.append(
                        (
                            "face-degen",
                            n,
                            (i, j),
                            lambda n=n, i=i, j=j: faces[n + 1][i] @ degens[n][j]
                            == eye(n),
                        )
                    )
                elif n >= 1 and i < j:
                    checks.append(
                        (
                            "face-degen",
                            n,
                            (i, j),
                            lambda n=n, i=i, j=j: faces[n + 1][i] @ degens[n][j]
                            == degens[n - 1][j - 1] @ faces[n][i],
                        )
                    )
                elif n >= 1 and i > j + 1:
                    checks.append(
                        (
                            "face-degen",
                            n,
                            (i, j),
                            lambda n=n, i=i, j=j: faces[n + 1][i] @ degens[n][j]
                            == degens[n - 1][j] @ faces[n][i - 1],
                        )
                    )
    for n in range(1, cap + 1):
        for i in range(1, n + 1):
            checks.append(
                (
                    "tau-face",
                    n,
                    (i,),
                    lambda n=n, i=i: faces[n][i] @ tau[n]
                    == tau[n - 1] @ faces[n][i - 1],
                )
            )
        checks.append(
            (
                "tau-face-top",
                n,
                (0,),
                lambda n=n: faces[n][0] @ tau[n] == faces[n][n],
            )
        )
    for n in range(cap):
        for i in range(1, n + 1):
            checks.append(
                (
                    "tau-degen",
                    n,
                    (i,),
                    lambda n=n, i=i: degens[n][i] @ tau[n]
                    == tau[n + 1] @ degens[n][i - 1],
                )
            )
        checks.append(
            (
                "tau-degen-extra",
                n,
                (0,),
                lambda n=n: degens[n][0] @ tau[n]
                == tau[n + 1] @ tau[n + 1] @ degens[n][n],
            )
        )
    for n in range(cap + 1):
        def power(n=n):
            acc = eye(n)
            for _ in range(n + 1):
                acc = tau[n] @ acc
            return acc == eye(n)

        checks.append(("tau-power", n, (n + 1,), power))
    return checks


def _cocyclic_checks(co):
    cap = co.degree_cap
    faces, degens, tau = co.faces, co.degens, co.cyclic_ops
    dims = co.dims()
    fld = co.field
    checks = []

    def eye(n):
        return Mat.identity(dims[n], fld)

    for n in range(1, cap):
        for j in range(1, n + 2):
            for i in range(min(j, n + 1)):
                checks.append(
                    (
                        "face-face",
                        n,
                        (i, j),
                        lambda n=n, i=i, j=j: faces[n + 1][j] @ faces[n][i]
                        == faces[n + 1][i] @ faces[n][j - 1],
                    )
                )
    for n in range(cap - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                checks.append(
                    (
                        "degen-degen",
                        n,
                        (i, j),
                        lambda n=n, i=i, j=j: degens[n][j] @ degens[n + 1][i]
                        == degens[n][i] @ degens[n + 1][j + 1],
                    )
                )
    for n in range(cap):
        for j in range(n + 1):
            for i in range(n + 2):
                if i == j or i == j + 1:
                    checks.append(
                        (
                            "face-degen",
                            n,
                            (i, j),
                            lambda n=n, i=i, j=j: degens[n][j] @ faces[n + 1][i]
                            == eye(n),
                        )
                    )
                elif n >= 1 and i < j:
                    checks.append(
                        (
                            "face-degen",
                            n,
                            (i, j),
                            lambda n=n, i=i, j=j: degens[n][j] @ faces[n + 1][i]
                            == faces[n][i] @ degens[n - 1][j - 1],
                        )
                    )
                elif n >= 1 and i > j + 1:
                    checks.append(
                        (
                            "face-degen",
                            n,
                            (i, j),
                            lambda n=n, i=i, j=j: degens[n][j] @ faces[n + 1][i]
                            == faces[n][i - 1] @ degens[n - 1][j],
                        )
                    )
    for n in range(1, cap + 1):
        for i in range(1, n + 1):
            checks.append(
                (
                    "tau-face",
                    n,
                    (i,),
                    lambda n=n, i=i: tau[n] @ faces[n][i]
                    == faces[n][i - 1] @ tau[n - 1],
                )
            )
        checks.append(
            (
                "tau-face-top",
                n,
                (0,),
                lambda n=n: tau[n] @ faces[n][0] == faces[n][n],
            )
        )
    for n in range(cap):
        for i in range(1, n + 1):
            checks.append(
                (
                    "tau-degen",
                    n,
                    (i,),
                    lambda n=n, i=i: tau[n] @ degens[n][i]
                    == degens[n][i - 1] @ tau[n + 1],
                )
            )
        checks.append(
            (
                "tau-degen-extra",
                n,
                (0,),
                lambda n=n: tau[n] @ degens[n][0]
                == degens[n][n] @ tau[n + 1] @ tau[n + 1],
            )
        )
    for n in range(cap + 1):
        def power(n=n):
            acc = eye(n)
            for _ in range(n + 1):
                acc = tau[n] @ acc
            return acc == eye(n)

        checks.append(("tau-power", n, (n + 1,), power))
    return checks


def verify_relations(co):
    """Exhaustively check every applicable identity at every degree.

    The redundant extra relation relating the zeroth degeneracy to the square
    of the cyclic operator is checked in both variances even though it is
    derivable, as a cross-check on the rest.
    """
    co.validate_shape()
    checks = _cyclic_checks(co) if co.variance == CYCLIC else _cocyclic_checks(co)

    def evaluate(item):
        name, degree, indices, thunk = item
        return None if thunk() else RelationViolation(name, degree, indices)

    results = run_all([lambda item=item: evaluate(item) for item in checks])
    violations = [r for r in results if r is not None]
    counts = {}
    for name, _, _, _ in checks:
        counts[name] = counts.get(name, 0) + 1
    return RelationReport(
        checked=len(checks), violations=violations, checked_by_relation=counts
    )
