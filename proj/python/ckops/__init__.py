"""Exact operation calculus on split cellular varieties.

Thin re-export of the compiled core; coordinates are plain lists over the
cell basis (ints in, exact decimal strings out for K-theory classes).
"""

try:  # installed layout: the extension sits inside the package
    from ._ckops import (  # noqa: F401
        CertificateError,
        DomainError,
        ModelFalsification,
        OddDegreeError,
        UnsupportedDomain,
        adams_psi,
        basis,
        catalog,
        cell_dims,
        chern_of_tangent,
        chow_mul,
        dim,
        gr_steenrod,
        homological_adams,
        sq1,
        sq1_coh,
        tau,
        theta_of_tangent,
        torsion,
        verify,
    )
except ImportError:  # build-tree layout: extension on sys.path
    from _ckops import (  # noqa: F401
        CertificateError,
        DomainError,
        ModelFalsification,
        OddDegreeError,
        UnsupportedDomain,
        adams_psi,
        basis,
        catalog,
        cell_dims,
        chern_of_tangent,
        chow_mul,
        dim,
        gr_steenrod,
        homological_adams,
        sq1,
        sq1_coh,
        tau,
        theta_of_tangent,
        torsion,
        verify,
    )

__all__ = [
    "adams_psi",
    "basis",
    "catalog",
    "cell_dims",
    "chern_of_tangent",
    "chow_mul",
    "dim",
    "gr_steenrod",
    "homological_adams",
    "sq1",
    "sq1_coh",
    "tau",
    "theta_of_tangent",
    "torsion",
    "verify",
    "CertificateError",
    "DomainError",
    "ModelFalsification",
    "OddDegreeError",
    "UnsupportedDomain",
]
