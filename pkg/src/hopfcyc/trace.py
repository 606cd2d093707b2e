"""Invariant subspaces, spaces of equivariant functionals, and the swap
isomorphisms between them that produce the cyclic operators.

The two functors realized here, one per variance:

* covariant: the invariants ``X -> {xi : g xi = eps(g) xi}``, materialized as
  an explicit column basis of the ambient space;
* contravariant: the equivariant functionals ``{f : f(g xi) = eps(g) f(xi)}``,
  materialized as coordinate columns in the dual basis, so precomposition
  with a map is implemented by its transpose.

Every induced map between these subspaces goes through
:func:`hopfcyc.linalg.restrict_map`; a ``NotStable`` escape from there means
an equivariance assumption was violated upstream.
"""

from .errors import CoefficientMismatch
from .linalg import (
    Mat,
    SubspaceBasis,
    TensorShape,
    kernel_basis,
    kron,
    leg_permutation,
    restrict_map,
    swap_factors,
    vstack,
)
from .rep import (
    check_stability,
    check_yd,
    module_blocks,
    phi,
    phi_inv,
    tensor_module,
    twist_module,
    validate_modcomod,
)

COVARIANT = "covariant"
CONTRAVARIANT = "contravariant"


def _default_shape(dim, label="X"):
    return TensorShape([(label, dim)])


def invariants_basis(h, x, shape=None):
    """Basis of ``{xi : g xi = eps(g) xi for every basis element g}``.

    Computed as the kernel of the blocks ``rho(g) - eps(g) I`` stacked over
    the Hopf basis.
    """
    d = x.dim
    i_d = Mat.identity(d, h.field)
    rows = []
    for a, block in enumerate(module_blocks(h, x)):
        eps = h.counit.entry(0, a)
        rows.append(block - i_d.scale(eps))
    incl = kernel_basis(vstack(rows))
    return SubspaceBasis(shape or _default_shape(d), incl, check=False)


def functionals_basis(h, x, shape=None):
    """Basis of the equivariant functionals on ``x``, in dual coordinates.

    A row functional ``f`` satisfies ``f(g xi) = eps(g) f(xi)``; transposing
    turns the condition into the same stacked-kernel computation as for
    invariants.
    """
    d = x.dim
    i_d = Mat.identity(d, h.field)
    rows = []
    for a, block in enumerate(module_blocks(h, x)):
        eps = h.counit.entry(0, a)
        rows.append(block.transpose() - i_d.scale(eps))
    incl = kernel_basis(vstack(rows))
    return SubspaceBasis(shape or _default_shape(d), incl, check=False)


def iota_F_cov(h, m_space, b, minus_slot):
    """The swap component of the covariant functor's centrality.

    With ``X = M (x) minus_slot``, the flip ``a (x) b -> b (x) a`` carries
    invariants of ``X (x) B`` bijectively onto invariants of ``#B (x) X``
    where ``#B`` twists the action of B by the inverse square of the
    antipode; the returned matrix is that bijection in the computed bases.
    """
    x_mod = tensor_module(h, m_space.module, minus_slot)
    dom_mod = tensor_module(h, x_mod, b)
    cod_mod = tensor_module(h, twist_module(h, b, -1), x_mod)
    dom = invariants_basis(h, dom_mod)
    cod = invariants_basis(h, cod_mod)
    return restrict_map(swap_factors(x_mod.dim, b.dim, h.field), dom, cod)


class TraceInstance:
    """A Hopf algebra with a coefficient of the right charge and stability.

    Covariant instances need the coefficient compatible at index +1 and
    1-stable; contravariant instances need index -1 and classical
    (0-)stability.  ``validate`` enforces this; passing
    ``require_stability=False`` keeps only the compatibility requirement,
    which is what a deliberately paracyclic construction needs.
    """

    __slots__ = ("hopf", "coeff", "variance")

    def __init__(self, hopf, coeff, variance):
        if variance not in (COVARIANT, CONTRAVARIANT):
            raise ValueError(f"unknown variance {variance!r}")
        self.hopf = hopf
        self.coeff = coeff
        self.variance = variance

    @property
    def charge(self):
        return 1 if self.variance == COVARIANT else -1

    @property
    def stability_index(self):
        return 1 if self.variance == COVARIANT else 0

    def validate(self, require_stability=True):
        validate_modcomod(self.hopf, self.coeff)
        if not check_yd(self.hopf, self.coeff, self.charge):
            raise CoefficientMismatch(
                f"coefficient is not compatible at index {self.charge:+d} "
                f"({self.variance} theory)"
            )
        if require_stability and not check_stability(
            self.hopf, self.coeff, self.stability_index
        ):
            raise CoefficientMismatch(
                f"coefficient is not {self.stability_index}-stable "
                f"({self.variance} theory)"
            )

    def space_basis(self, module, shape=None):
        if self.variance == COVARIANT:
            return invariants_basis(self.hopf, module, shape)
        return functionals_basis(self.hopf, module, shape)

    def __repr__(self):
        return f"TraceInstance({self.variance}, coeff dim {self.coeff.dim})"


def iota_pair(t, c, x, dom=None, cod=None):
    """The compiled five-step chain ``F(m.(x (x) c)) -> F(m.(c (x) x))``.

    The intermediate objects differ only by regroupings, which are identities
    on flattened data, so the whole chain collapses to one ambient matrix:

    * covariant: flip ``(M (x) X) (x) C`` to ``C (x) (M (x) X)``, then apply
      the central map on the C leg;
    * contravariant: precompose with the reversed chain
      ``m (x) c (x) x -> m<0> (x) x (x) S(m<1>) c``, i.e. transpose the
      inverse central map on the C leg followed by the flip.

    With ``x`` the trivial module this is the component the symmetry
    condition speaks about; it is the identity exactly when the coefficient
    is suitably stable.
    """
    h = t.hopf
    m = t.coeff
    dm, dc, dx = m.dim, c.dim, x.dim
    if dom is None:
        dom = t.space_basis(tensor_module(h, tensor_module(h, m.module, x), c))
    if cod is None:
        cod = t.space_basis(tensor_module(h, tensor_module(h, m.module, c), x))
    if t.variance == COVARIANT:
        big = kron(phi(h, m, c), Mat.identity(dx, h.field)) @ swap_factors(
            dm * dx, dc, h.field
        )
        return restrict_map(big, dom, cod)
    chi = leg_permutation([dc, dm, dx], [1, 2, 0], h.field) @ kron(
        phi_inv(h, m, c), Mat.identity(dx, h.field)
    )
    return restrict_map(chi.transpose(), dom, cod)
