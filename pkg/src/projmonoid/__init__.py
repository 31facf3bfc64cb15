"""Exact computations in the compactified projective linear monoid over Q(i)."""

from .action import ProjPoint, maps_equal_on, phi_apply
from .errors import (
    CommonKernelError,
    ContainmentError,
    DegreeError,
    DimensionMismatchError,
    InvalidHingeError,
    InvalidSequenceError,
    NotConvergentError,
    NotInMHError,
    ProjMonoidError,
)
from .exterior import (
    LambdaVector, WedgeMap, compound, det_seq, lambda_, lambda_bar, wedge_seq,
)
from .hinge import (
    Hinge, LinearRelation, dom, hinge_equiv, hinge_to_MH, im, in_MH, indef,
    is_hinge, ker_rel, varphi,
)
from .limits import EpsFamily, eval_family, limit, projective_distance
from .linalg import (
    Matrix, Subspace, contains, image, intersect, kernel, orthocomplement_in,
    restrict, rref, sum_,
)
from .monoid import (
    MSeq, PMSeq, RawSeq, is_invertible, lift, mul, mul_mseq, mul_raw, pi,
    pmseq_from_matrices, projectivize, psi, raw_new,
)
from .scalars import GR, GaussianRational, parse_scalar

__version__ = "0.1.0"

__all__ = [
    "ProjPoint",
    "maps_equal_on",
    "phi_apply",
    "CommonKernelError",
    "ContainmentError",
    "DegreeError",
    "DimensionMismatchError",
    "InvalidHingeError",
    "InvalidSequenceError",
    "NotConvergentError",
    "NotInMHError",
    "ProjMonoidError",
    "LambdaVector",
    "WedgeMap",
    "compound",
    "det_seq",
    "lambda_",
    "lambda_bar",
    "wedge_seq",
    "Hinge",
    "LinearRelation",
    "dom",
    "hinge_equiv",
    "hinge_to_MH",
    "im",
    "in_MH",
    "indef",
    "is_hinge",
    "ker_rel",
    "varphi",
    "EpsFamily",
    "eval_family",
    "limit",
    "projective_distance",
    "Matrix",
    "Subspace",
    "contains",
    "image",
    "intersect",
    "kernel",
    "orthocomplement_in",
    "restrict",
    "rref",
    "sum_",
    "MSeq",
    "PMSeq",
    "RawSeq",
    "is_invertible",
    "lift",
    "mul",
    "mul_mseq",
    "mul_raw",
    "pi",
    "pmseq_from_matrices",
    "projectivize",
    "psi",
    "raw_new",
    "GR",
    "GaussianRational",
    "parse_scalar",
]
