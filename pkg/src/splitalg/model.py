"""Data model for multi-operation algebras, representations, actions and maps.

Operations are stored as dense structure-constant tensors over exact
rationals: coeffs[i][j] is the vector of e_i * e_j in the output basis.
All values are immutable; every constructor validates its invariants.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .linalg import (
    DimensionMismatch,
    Vector,
    frac,
    vec_add,
    vector,
    zero_vector,
)

# Canonical operation names per signature.  The ASCII names fix the usual
# symbols: prec/succ for the dendriform pair, dashv/vdash/perp for the
# (di/tri-)associative operations, and the four split pairs for quadri.
SIGNATURE_OPS: dict[str, tuple[str, ...]] = {
    "associative": ("mul",),
    "dendriform": ("prec", "succ"),
    "diassociative": ("dashv", "vdash"),
    "triassociative": ("dashv", "perp", "vdash"),
    "quadri": ("prec_dashv", "prec_vdash", "succ_dashv", "succ_vdash"),
    "six": (
        "prec_dashv",
        "prec_perp",
        "prec_vdash",
        "succ_dashv",
        "succ_perp",
        "succ_vdash",
    ),
    "raw": (),
}

ACTION_OPS = ("prec_l", "succ_l", "prec_r", "succ_r")


class SpecError(ValueError):
    """Invalid object construction (bad dimensions, missing operations)."""


class BilinearOp:
    """Structure constants of one bilinear operation between (possibly
    distinct) spaces."""

    def __init__(self, left_dim: int, right_dim: int, out_dim: int, coeffs):
        self.left_dim = left_dim
        self.right_dim = right_dim
        self.out_dim = out_dim
        coeffs = tuple(tuple(vector(v) for v in row) for row in coeffs)
        if len(coeffs) != left_dim or any(len(row) != right_dim for row in coeffs):
            raise SpecError(
                f"coefficient tensor shape does not match {left_dim}x{right_dim}"
            )
        for row in coeffs:
            for v in row:
                if len(v) != out_dim:
                    raise SpecError(
                        f"coefficient vector length {len(v)} vs out_dim {out_dim}"
                    )
        self.coeffs = coeffs

    @classmethod
    def zero(cls, left_dim: int, right_dim: int, out_dim: int) -> "BilinearOp":
        z = zero_vector(out_dim)
        return cls(left_dim, right_dim, out_dim, [[z] * right_dim for _ in range(left_dim)])

    @classmethod
    def build(cls, left_dim: int, right_dim: int, out_dim: int, fn) -> "BilinearOp":
        """Construct from fn(i, j) -> output Vector on basis pairs."""
        return cls(
            left_dim,
            right_dim,
            out_dim,
            [[fn(i, j) for j in range(right_dim)] for i in range(left_dim)],
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BilinearOp)
            and (self.left_dim, self.right_dim, self.out_dim)
            == (other.left_dim, other.right_dim, other.out_dim)
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        return f"BilinearOp({self.left_dim}x{self.right_dim}->{self.out_dim})"

    def __add__(self, other: "BilinearOp") -> "BilinearOp":
        if (self.left_dim, self.right_dim, self.out_dim) != (
            other.left_dim,
            other.right_dim,
            other.out_dim,
        ):
            raise DimensionMismatch("cannot add operations of different shapes")
        return BilinearOp.build(
            self.left_dim,
            self.right_dim,
            self.out_dim,
            lambda i, j: vec_add(self.coeffs[i][j], other.coeffs[i][j]),
        )

    def is_zero(self) -> bool:
        return all(all(e == 0 for e in v) for row in self.coeffs for v in row)


def evaluate(op: BilinearOp, x: Vector, y: Vector) -> Vector:
    """Bilinear extension of the structure constants: sum x_i y_j e_i*e_j."""
    if len(x) != op.left_dim or len(y) != op.right_dim:
        raise DimensionMismatch(
            f"arguments of lengths {len(x)},{len(y)} vs operation "
            f"{op.left_dim}x{op.right_dim}"
        )
    out = [Fraction(0)] * op.out_dim
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        row = op.coeffs[i]
        for j, yj in enumerate(y):
            if yj == 0:
                continue
            c = xi * yj
            cij = row[j]
            for k in range(op.out_dim):
                if cij[k]:
                    out[k] += c * cij[k]
    return tuple(out)


class LinearMap:
    """Exact rational linear map, stored as a (target_dim x source_dim) matrix."""

    def __init__(self, source_dim: int, target_dim: int, matrix):
        self.source_dim = source_dim
        self.target_dim = target_dim
        self.matrix: tuple[Vector, ...] = tuple(vector(row) for row in matrix)
        if len(self.matrix) != target_dim or any(
            len(row) != source_dim for row in self.matrix
        ):
            raise SpecError(
                f"matrix shape does not match {target_dim}x{source_dim}"
            )

    @classmethod
    def zero(cls, source_dim: int, target_dim: int) -> "LinearMap":
        return cls(source_dim, target_dim, [zero_vector(source_dim)] * target_dim)

    @classmethod
    def scalar(cls, dim: int, k) -> "LinearMap":
        k = frac(k)
        return cls(
            dim, dim, [[k if i == j else 0 for j in range(dim)] for i in range(dim)]
        )

    @classmethod
    def identity(cls, dim: int) -> "LinearMap":
        return cls.scalar(dim, 1)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinearMap)
            and (self.source_dim, self.target_dim) == (other.source_dim, other.target_dim)
            and self.matrix == other.matrix
        )

    def __repr__(self) -> str:
        return f"LinearMap({self.source_dim}->{self.target_dim})"

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.source_dim:
            raise DimensionMismatch(
                f"vector length {len(v)} vs source dimension {self.source_dim}"
            )
        return tuple(sum((r * a for r, a in zip(row, v)), Fraction(0)) for row in self.matrix)

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.matrix)

    def rank(self) -> int:
        from .linalg import span

        if self.source_dim == 0:
            return 0
        return span([self.column(j) for j in range(self.source_dim)], self.target_dim).dim


class Algebra:
    """A finite-dimensional algebra given by named structure-constant tensors."""

    def __init__(
        self,
        dimension: int,
        signature: str,
        operations: Mapping[str, BilinearOp],
        basis_labels: Sequence[str] | None = None,
    ):
        if signature not in SIGNATURE_OPS:
            raise SpecError(f"unknown signature {signature!r}")
        self.dimension = dimension
        self.signature = signature
        self.operations = dict(operations)
        self.basis_labels = tuple(basis_labels) if basis_labels else None
        required = SIGNATURE_OPS[signature]
        for name in required:
            if name not in self.operations:
                raise SpecError(f"signature {signature!r} requires operation {name!r}")
        if signature != "raw":
            extra = set(self.operations) - set(required)
            if extra:
                raise SpecError(
                    f"operations {sorted(extra)} not allowed under signature {signature!r}"
                )
        for name, op in self.operations.items():
            if (op.left_dim, op.right_dim, op.out_dim) != (dimension,) * 3:
                raise SpecError(
                    f"operation {name!r} has shape {op.left_dim}x{op.right_dim}->"
                    f"{op.out_dim}, expected dimension {dimension}"
                )
        if self.basis_labels is not None and len(self.basis_labels) != dimension:
            raise SpecError("basis label count does not match dimension")

    def __repr__(self) -> str:
        return f"Algebra(dim {self.dimension}, {self.signature})"

    def op(self, name: str) -> BilinearOp:
        try:
            return self.operations[name]
        except KeyError:
            raise SpecError(f"algebra has no operation {name!r}") from None

    def same_tensors(self, other: "Algebra") -> bool:
        return (
            self.dimension == other.dimension
            and set(self.operations) == set(other.operations)
            and all(self.operations[k] == other.operations[k] for k in self.operations)
        )

    def with_signature(self, signature: str, rename: Mapping[str, str]) -> "Algebra":
        """View of this algebra under another signature, renaming operations.

        rename maps old op name -> new op name; unmentioned ops are dropped.
        """
        ops = {new: self.op(old) for old, new in rename.items()}
        return Algebra(self.dimension, signature, ops, self.basis_labels)


class Representation:
    """A module over a dendriform algebra, with the four action tensors."""

    def __init__(self, base: Algebra, module_dim: int, actions: Mapping[str, BilinearOp]):
        if base.signature != "dendriform":
            raise SpecError("representation base must be a dendriform algebra")
        self.base = base
        self.module_dim = module_dim
        self.actions = dict(actions)
        n, m = base.dimension, module_dim
        shapes = {
            "prec_l": (n, m, m),
            "succ_l": (n, m, m),
            "prec_r": (m, n, m),
            "succ_r": (m, n, m),
        }
        for name, shape in shapes.items():
            if name not in self.actions:
                raise SpecError(f"representation requires action {name!r}")
            op = self.actions[name]
            if (op.left_dim, op.right_dim, op.out_dim) != shape:
                raise SpecError(
                    f"action {name!r} has shape {op.left_dim}x{op.right_dim}->"
                    f"{op.out_dim}, expected {shape}"
                )
        if set(self.actions) != set(shapes):
            raise SpecError("representation carries exactly the four action tensors")

    def __repr__(self) -> str:
        return f"Representation(base dim {self.base.dimension}, module dim {self.module_dim})"


class Action:
    """A dendriform algebra acting on another dendriform algebra."""

    def __init__(self, base: Algebra, target: Algebra, actions: Mapping[str, BilinearOp]):
        if target.signature != "dendriform":
            raise SpecError("action target must be a dendriform algebra")
        self.representation = Representation(base, target.dimension, actions)
        self.base = base
        self.target = target
        self.actions = self.representation.actions

    def __repr__(self) -> str:
        return f"Action(base dim {self.base.dimension}, target dim {self.target.dimension})"


def adjoint_representation(d: Algebra) -> Representation:
    """The algebra acting on itself: all four actions are the algebra's own ops."""
    if d.signature != "dendriform":
        raise SpecError("adjoint representation needs a dendriform algebra")
    return Representation(
        d,
        d.dimension,
        {
            "prec_l": d.op("prec"),
            "succ_l": d.op("succ"),
            "prec_r": d.op("prec"),
            "succ_r": d.op("succ"),
        },
    )


def self_action(d: Algebra) -> Action:
    """The adjoint representation packaged as an action of d on itself."""
    rep = adjoint_representation(d)
    return Action(d, d, rep.actions)


def dendriform_to_quadri(d: Algebra) -> Algebra:
    """Promote a dendriform algebra to quadri with both split pairs equal."""
    return Algebra(
        d.dimension,
        "quadri",
        {
            "prec_vdash": d.op("prec"),
            "prec_dashv": d.op("prec"),
            "succ_vdash": d.op("succ"),
            "succ_dashv": d.op("succ"),
        },
        d.basis_labels,
    )


def dendriform_to_six(d: Algebra) -> Algebra:
    """Promote a dendriform algebra to six with all three pairs equal."""
    q = dendriform_to_quadri(d)
    ops = dict(q.operations)
    ops["prec_perp"] = d.op("prec")
    ops["succ_perp"] = d.op("succ")
    return Algebra(d.dimension, "six", ops, d.basis_labels)


def quadri_part(s: Algebra) -> Algebra:
    """The quadri-dendriform quadruple inside a six-dendriform algebra."""
    return s.with_signature(
        "quadri", {name: name for name in SIGNATURE_OPS["quadri"]}
    )


def perp_dendriform_part(s: Algebra) -> Algebra:
    """The (prec_perp, succ_perp) dendriform pair inside a six algebra."""
    return s.with_signature("dendriform", {"prec_perp": "prec", "succ_perp": "succ"})
