"""Exact computations in the Hecke algebra and the skein of the annulus:
Homfly polynomials of braid closures via the Markov trace, Young-diagram
idempotents, meridian eigenvalues, and Schur-basis closure expansions."""

from .annulus import (
    SingularSystem,
    ZeroReferenceTrace,
    expand_closure,
    expand_closure_projector,
    gamma,
    reference_trace,
    verify_identity_decomposition,
    verify_ringhom,
)
from .braids import (
    BraidWord,
    coset_split,
    descent_word,
    length,
    mul_transposition,
    parse_braid,
)
from .cprime import (
    BimoduleForm,
    NonDivisible,
    TelescopeMismatch,
    UndefinedClosure,
    VarPoly,
    close,
    eh,
    gamma_via_proof,
    he,
    t,
    verify_ehex,
    verify_yiAia,
    verify_yiyj,
)
from .hecke import (
    E_lambda,
    HeckeElement,
    NotProportional,
    SizeLimitError,
    a_n,
    alpha_extract,
    b_n,
    e_lambda,
    from_braid,
    mirror,
    render_hecke,
    tensor,
)
from .partitions import (
    SymFunction,
    c_lambda,
    conjugate,
    contains,
    count_partitions,
    d_lambda,
    lr_coeffs,
    parse_partition,
    partitions_of,
    q_lambda,
    schur_expand,
    schur_h,
    standard_tableaux,
)
from .scalars import (
    LaurentPoly,
    RationalFunction,
    bar,
    delta,
    monomial,
    parse_poly,
    parse_rational,
    poly_gcd,
    poly_lcm,
    qint,
    render_poly,
    render_rational,
    s_power,
    v_power,
)
from .trace import cond_expect, homfly, meridian

__all__ = [name for name in dir() if not name.startswith("_")]
