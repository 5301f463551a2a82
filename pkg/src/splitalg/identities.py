"""Multilinear identity schemas and their exhaustive evaluation on basis tuples.

An identity is a formal equation between linear combinations of depth <= 2
terms in three variable slots.  Slots carry a sort: A for the base algebra,
V for a module.  Checking an identity on every basis tuple is equivalent to
checking it on all vectors, by multilinearity.

Chained equalities in the source axioms (a brace listing k equal
expressions) are encoded as the k-1 consecutive pairwise equations; the
remaining mathematically redundant pairs are available via paranoid=True.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .linalg import Vector, basis_vector, is_zero, vec_sub
from .model import (
    Action,
    Algebra,
    BilinearOp,
    LinearMap,
    Representation,
    SpecError,
    evaluate,
)

# A term is either a variable leaf ("var", slot) or an application
# (op_name, left_term, right_term).
Term = Union[tuple[str, int], tuple[str, "Term", "Term"]]
# An expression is a linear combination of terms.
Expr = tuple[tuple[Fraction, Term], ...]

DEFAULT_VIOLATION_CAP = 100


def var(slot: int) -> Term:
    return ("var", slot)


def app(op: str, left: Term, right: Term) -> Term:
    return (op, left, right)


def expr(*terms: Term) -> Expr:
    return tuple((Fraction(1), t) for t in terms)


@dataclass(frozen=True)
class IdentitySchema:
    id: str
    slot_sorts: tuple[str, str, str]
    lhs: Expr
    rhs: Expr


@dataclass(frozen=True)
class Violation:
    identity: str
    witness: tuple[int, ...]
    residual: Vector

    def to_dict(self) -> dict:
        from .documents import scalar_to_json

        return {
            "id": self.identity,
            "witness": list(self.witness),
            "residual": [scalar_to_json(e) for e in self.residual],
        }


@dataclass
class ViolationReport:
    checked: int
    violations: list[Violation]
    truncated: bool = False

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        d = {
            "checked": self.checked,
            "violations": [v.to_dict() for v in self.violations],
        }
        if self.truncated:
            d["truncated"] = True
        return d

    def render(self) -> str:
        lines = [f"checked {self.checked} instance(s): "
                 + ("all passed" if self.ok else f"{len(self.violations)} violation(s)")]
        for v in self.violations:
            lines.append(
                f"  {v.identity} at {v.witness}: residual"
                f" [{', '.join(str(e) for e in v.residual)}]"
            )
        if self.truncated:
            lines.append("  ... report truncated")
        return "\n".join(lines)


class UnknownCatalog(SpecError):
    pass


# ----------------------------------------------------------------------
# Catalog construction

_x, _y, _z = var(0), var(1), var(2)


def _eq(eqid, sorts, lhs, rhs) -> IdentitySchema:
    def norm(e):
        if isinstance(e, tuple) and e and isinstance(e[0], tuple):
            return e
        return expr(e)

    return IdentitySchema(eqid, tuple(sorts), norm(lhs), norm(rhs))


def _chain(eqid: str, sorts, exprs: Sequence, paranoid: bool) -> list[IdentitySchema]:
    """Encode E1 = E2 = ... = Ek as consecutive pairs (plus the redundant
    pairs when paranoid)."""
    out = []
    letters = "abcdefgh"
    for n in range(len(exprs) - 1):
        out.append(_eq(f"{eqid}{letters[n]}", sorts, exprs[n], exprs[n + 1]))
    if paranoid:
        for i in range(len(exprs)):
            for j in range(i + 2, len(exprs)):
                out.append(_eq(f"{eqid}p{i + 1}{j + 1}", sorts, exprs[i], exprs[j]))
    return out


def _dend_shape(ids, sorts, pair12, pair23, pair_out, pair_out2):
    """Three axioms of dendriform shape on possibly mixed sorts.

    Each pair is a (prec-like, succ-like) operation name tuple: pair12
    combines slots 1,2; pair23 combines slots 2,3; pair_out joins the
    (1,2)-product with slot 3; pair_out2 joins slot 1 with the
    (2,3)-product.  For the plain dendriform axioms all four coincide.
    """
    p12, s12 = pair12
    p23, s23 = pair23
    po, so = pair_out
    po2, so2 = pair_out2
    e1 = _eq(
        ids[0],
        sorts,
        app(po, app(p12, _x, _y), _z),
        expr(app(po2, _x, app(p23, _y, _z)), app(po2, _x, app(s23, _y, _z))),
    )
    e2 = _eq(
        ids[1],
        sorts,
        app(po, app(s12, _x, _y), _z),
        app(so2, _x, app(p23, _y, _z)),
    )
    e3 = _eq(
        ids[2],
        sorts,
        app(so2, _x, app(s23, _y, _z)),
        expr(app(so, app(p12, _x, _y), _z), app(so, app(s12, _x, _y), _z)),
    )
    return [e1, e2, e3]


def _catalog_associative(paranoid: bool):
    return [
        _eq(
            "assoc",
            ("A", "A", "A"),
            app("mul", app("mul", _x, _y), _z),
            app("mul", _x, app("mul", _y, _z)),
        )
    ]


def _catalog_dendriform(paranoid: bool):
    pair = ("prec", "succ")
    return _dend_shape(("dend.1", "dend.2", "dend.3"), ("A", "A", "A"), pair, pair, pair, pair)


def _diass_equations(dashv: str, vdash: str, ids):
    A3 = ("A", "A", "A")
    return [
        _eq(ids[0], A3, app(dashv, app(dashv, _x, _y), _z), app(dashv, _x, app(vdash, _y, _z))),
        _eq(ids[1], A3, app(dashv, app(dashv, _x, _y), _z), app(dashv, _x, app(dashv, _y, _z))),
        _eq(ids[2], A3, app(dashv, app(vdash, _x, _y), _z), app(vdash, _x, app(dashv, _y, _z))),
        _eq(ids[3], A3, app(vdash, app(dashv, _x, _y), _z), app(vdash, _x, app(vdash, _y, _z))),
        _eq(ids[4], A3, app(vdash, app(vdash, _x, _y), _z), app(vdash, _x, app(vdash, _y, _z))),
    ]


def _catalog_diassociative(paranoid: bool):
    return _diass_equations("dashv", "vdash", ["di.1", "di.2", "di.3", "di.4", "di.5"])


def _catalog_triassociative(paranoid: bool):
    A3 = ("A", "A", "A")
    eqs = _diass_equations("dashv", "vdash", ["tri.1", "tri.2", "tri.3", "tri.4", "tri.5"])
    eqs.append(
        _eq("tri.6", A3, app("perp", app("perp", _x, _y), _z), app("perp", _x, app("perp", _y, _z)))
    )
    eqs += [
        _eq("tri.7", A3, app("dashv", app("dashv", _x, _y), _z), app("dashv", _x, app("perp", _y, _z))),
        _eq("tri.8", A3, app("dashv", app("perp", _x, _y), _z), app("perp", _x, app("dashv", _y, _z))),
        _eq("tri.9", A3, app("perp", app("dashv", _x, _y), _z), app("perp", _x, app("vdash", _y, _z))),
        _eq("tri.10", A3, app("perp", app("vdash", _x, _y), _z), app("vdash", _x, app("perp", _y, _z))),
        _eq("tri.11", A3, app("vdash", app("perp", _x, _y), _z), app("vdash", _x, app("vdash", _y, _z))),
    ]
    return eqs


def _catalog_quadri(paranoid: bool):
    A3 = ("A", "A", "A")
    pv, pd, sv, sd = "prec_vdash", "prec_dashv", "succ_vdash", "succ_dashv"
    eqs: list[IdentitySchema] = []
    eqs += _chain(
        "quadri.1",
        A3,
        [
            app(pv, app(pv, _x, _y), _z),
            app(pv, app(pd, _x, _y), _z),
            expr(app(pv, _x, app(pv, _y, _z)), app(pv, _x, app(sv, _y, _z))),
        ],
        paranoid,
    )
    eqs += _chain(
        "quadri.2",
        A3,
        [
            app(pv, app(sv, _x, _y), _z),
            app(pv, app(sd, _x, _y), _z),
            app(sv, _x, app(pv, _y, _z)),
        ],
        paranoid,
    )
    eqs += _chain(
        "quadri.3",
        A3,
        [
            app(sv, _x, app(sv, _y, _z)),
            expr(app(sv, app(pv, _x, _y), _z), app(sv, app(sv, _x, _y), _z)),
            expr(app(sv, app(pd, _x, _y), _z), app(sv, app(sd, _x, _y), _z)),
            expr(app(sv, app(pv, _x, _y), _z), app(sv, app(sd, _x, _y), _z)),
            expr(app(sv, app(pd, _x, _y), _z), app(sv, app(sv, _x, _y), _z)),
        ],
        paranoid,
    )
    eqs.append(
        _eq(
            "quadri.4",
            A3,
            app(pd, app(pv, _x, _y), _z),
            expr(app(pv, _x, app(pd, _y, _z)), app(pv, _x, app(sd, _y, _z))),
        )
    )
    eqs.append(
        _eq("quadri.5", A3, app(pd, app(sv, _x, _y), _z), app(sv, _x, app(pd, _y, _z)))
    )
    eqs.append(
        _eq(
            "quadri.6",
            A3,
            app(sv, _x, app(sd, _y, _z)),
            expr(app(sd, app(pv, _x, _y), _z), app(sd, app(sv, _x, _y), _z)),
        )
    )
    eqs += _chain(
        "quadri.7",
        A3,
        [
            app(pd, app(pd, _x, _y), _z),
            expr(app(pd, _x, app(pv, _y, _z)), app(pd, _x, app(sv, _y, _z))),
            expr(app(pd, _x, app(pd, _y, _z)), app(pd, _x, app(sd, _y, _z))),
            expr(app(pd, _x, app(pv, _y, _z)), app(pd, _x, app(sd, _y, _z))),
            expr(app(pd, _x, app(pd, _y, _z)), app(pd, _x, app(sv, _y, _z))),
        ],
        paranoid,
    )
    eqs += _chain(
        "quadri.8",
        A3,
        [
            app(pd, app(sd, _x, _y), _z),
            app(sd, _x, app(pv, _y, _z)),
            app(sd, _x, app(pd, _y, _z)),
        ],
        paranoid,
    )
    eqs += _chain(
        "quadri.9",
        A3,
        [
            app(sd, _x, app(sv, _y, _z)),
            app(sd, _x, app(sd, _y, _z)),
            expr(app(sd, app(pd, _x, _y), _z), app(sd, app(sd, _x, _y), _z)),
        ],
        paranoid,
    )
    return eqs


def _catalog_six(paranoid: bool):
    """The 9 + 8 + 8 compatibility axioms between the perp pair and the
    quadri quadruple.  The embedded dendriform and quadri axioms are not
    repeated here; check them via perp_dendriform_part / quadri_part."""
    A3 = ("A", "A", "A")
    pv, pd, sv, sd = "prec_vdash", "prec_dashv", "succ_vdash", "succ_dashv"
    pp, sp = "prec_perp", "succ_perp"
    eqs: list[IdentitySchema] = []
    eqs.append(
        _eq(
            "six.1.1",
            A3,
            app(pp, app(pv, _x, _y), _z),
            expr(app(pv, _x, app(pp, _y, _z)), app(pv, _x, app(sp, _y, _z))),
        )
    )
    eqs.append(_eq("six.1.2", A3, app(pp, app(sv, _x, _y), _z), app(sv, _x, app(pp, _y, _z))))
    eqs.append(
        _eq(
            "six.1.3",
            A3,
            app(sv, _x, app(sp, _y, _z)),
            expr(app(sp, app(pv, _x, _y), _z), app(sp, app(sv, _x, _y), _z)),
        )
    )
    eqs.append(
        _eq(
            "six.1.4",
            A3,
            app(pp, app(pd, _x, _y), _z),
            expr(app(pp, _x, app(pv, _y, _z)), app(pp, _x, app(sv, _y, _z))),
        )
    )
    eqs.append(_eq("six.1.5", A3, app(pp, app(sd, _x, _y), _z), app(sp, _x, app(pv, _y, _z))))
    eqs.append(
        _eq(
            "six.1.6",
            A3,
            app(sp, _x, app(sv, _y, _z)),
            expr(app(sp, app(pd, _x, _y), _z), app(sp, app(sd, _x, _y), _z)),
        )
    )
    eqs.append(
        _eq(
            "six.1.7",
            A3,
            app(pd, app(pp, _x, _y), _z),
            expr(app(pp, _x, app(pd, _y, _z)), app(pp, _x, app(sd, _y, _z))),
        )
    )
    eqs.append(_eq("six.1.8", A3, app(pd, app(sp, _x, _y), _z), app(sp, _x, app(pd, _y, _z))))
    eqs.append(
        _eq(
            "six.1.9",
            A3,
            app(sp, _x, app(sd, _y, _z)),
            expr(app(sd, app(pp, _x, _y), _z), app(sd, app(sp, _x, _y), _z)),
        )
    )
    # four chains of three, outer op applied to three inner variants
    for n, (outer, position) in enumerate(
        [(pv, "p"), (pv, "s"), (sv, "p"), (sv, "s")], start=1
    ):
        inner = {"p": (pp, pv, pd), "s": (sp, sv, sd)}[position]
        eqs += _chain(
            f"six.2.{n}",
            A3,
            [app(outer, app(i, _x, _y), _z) for i in inner],
            paranoid,
        )
    # four chains of three, inner variants on the right argument
    for n, (outer, position) in enumerate(
        [(pd, "p"), (sd, "p"), (pd, "s"), (sd, "s")], start=1
    ):
        inner = {"p": (pp, pv, pd), "s": (sp, sv, sd)}[position]
        eqs += _chain(
            f"six.3.{n}",
            A3,
            [app(outer, _x, app(i, _y, _z)) for i in inner],
            paranoid,
        )
    return eqs


def _catalog_dend_representation(paranoid: bool):
    d = ("prec", "succ")
    l = ("prec_l", "succ_l")
    r = ("prec_r", "succ_r")
    eqs = []
    eqs += _dend_shape(("rep.1", "rep.2", "rep.3"), ("A", "A", "V"), d, l, l, l)
    eqs += _dend_shape(("rep.4", "rep.5", "rep.6"), ("A", "V", "A"), l, r, r, l)
    eqs += _dend_shape(("rep.7", "rep.8", "rep.9"), ("V", "A", "A"), r, d, r, r)
    return eqs


def _catalog_dend_action(paranoid: bool):
    # prec_t / succ_t are the target algebra's own dendriform operations.
    l = ("prec_l", "succ_l")
    r = ("prec_r", "succ_r")
    t = ("prec_t", "succ_t")
    eqs = []
    eqs += _dend_shape(("act.1", "act.2", "act.3"), ("A", "V", "V"), l, t, t, l)
    eqs += _dend_shape(("act.4", "act.5", "act.6"), ("V", "A", "V"), r, l, t, t)
    eqs += _dend_shape(("act.7", "act.8", "act.9"), ("V", "V", "A"), t, r, r, t)
    return eqs


_CATALOGS = {
    "associative": _catalog_associative,
    "dendriform": _catalog_dendriform,
    "diassociative": _catalog_diassociative,
    "triassociative": _catalog_triassociative,
    "quadri": _catalog_quadri,
    "six": _catalog_six,
    "dend-representation": _catalog_dend_representation,
    "dend-action": _catalog_dend_action,
}

CATALOG_NAMES = tuple(sorted(_CATALOGS))


def catalog(name: str, paranoid: bool = False) -> list[IdentitySchema]:
    try:
        builder = _CATALOGS[name]
    except KeyError:
        raise UnknownCatalog(
            f"unknown catalog {name!r}; known: {', '.join(CATALOG_NAMES)}"
        ) from None
    return builder(paranoid)


# ----------------------------------------------------------------------
# Evaluation

class OpContext:
    """Resolves operation names to tensors with sorted signatures, and
    knows the dimension of each sort."""

    def __init__(self, ops: Mapping[str, tuple[BilinearOp, str, str, str]], dims: Mapping[str, int]):
        self.ops = dict(ops)
        self.dims = dict(dims)

    def resolve(self, name: str) -> tuple[BilinearOp, str, str, str]:
        try:
            return self.ops[name]
        except KeyError:
            raise SpecError(f"object supplies no operation {name!r}") from None


def context_for(obj) -> OpContext:
    if isinstance(obj, Algebra):
        ops = {
            name: (op, "A", "A", "A") for name, op in obj.operations.items()
        }
        return OpContext(ops, {"A": obj.dimension, "V": 0})
    if isinstance(obj, Action):
        ctx = context_for(obj.representation)
        ctx.ops["prec_t"] = (obj.target.op("prec"), "V", "V", "V")
        ctx.ops["succ_t"] = (obj.target.op("succ"), "V", "V", "V")
        return ctx
    if isinstance(obj, Representation):
        ops = {
            name: (op, "A", "A", "A") for name, op in obj.base.operations.items()
        }
        ops["prec_l"] = (obj.actions["prec_l"], "A", "V", "V")
        ops["succ_l"] = (obj.actions["succ_l"], "A", "V", "V")
        ops["prec_r"] = (obj.actions["prec_r"], "V", "A", "V")
        ops["succ_r"] = (obj.actions["succ_r"], "V", "A", "V")
        return OpContext(ops, {"A": obj.base.dimension, "V": obj.module_dim})
    raise SpecError(f"cannot check identities on {type(obj).__name__}")


def _term_sort(term: Term, schema: IdentitySchema, ctx: OpContext) -> str:
    if term[0] == "var":
        return schema.slot_sorts[term[1]]
    _, _, _, out = ctx.resolve(term[0])
    return out


def _eval_term(term: Term, schema: IdentitySchema, ctx: OpContext, values) -> Vector:
    if term[0] == "var":
        return values[term[1]]
    op, ls, rs, _ = ctx.resolve(term[0])
    left = _eval_term(term[1], schema, ctx, values)
    right = _eval_term(term[2], schema, ctx, values)
    if _term_sort(term[1], schema, ctx) != ls or _term_sort(term[2], schema, ctx) != rs:
        raise SpecError(
            f"operation {term[0]!r} applied to arguments of the wrong sort"
        )
    return evaluate(op, left, right)


def _eval_expr(e: Expr, schema: IdentitySchema, ctx: OpContext, values) -> Vector:
    total = None
    for coef, term in e:
        v = _eval_term(term, schema, ctx, values)
        scaled = tuple(coef * a for a in v)
        total = scaled if total is None else tuple(a + b for a, b in zip(total, scaled))
    assert total is not None
    return total


def evaluate_schema(schema: IdentitySchema, ctx: OpContext, values: Sequence[Vector]) -> Vector:
    """lhs - rhs of a schema at arbitrary slot values (not just basis)."""
    lhs = _eval_expr(schema.lhs, schema, ctx, values)
    rhs = _eval_expr(schema.rhs, schema, ctx, values)
    return vec_sub(lhs, rhs)


def check(
    obj,
    catalog_name: str,
    paranoid: bool = False,
    max_violations: int = DEFAULT_VIOLATION_CAP,
) -> ViolationReport:
    """Evaluate every schema of the catalog on every basis tuple consistent
    with the slot sorts; collect all nonzero residuals (up to the cap)."""
    schemas = catalog(catalog_name, paranoid=paranoid)
    return check_schemas(obj, schemas, max_violations=max_violations)


def _term_ops(term: Term):
    if term[0] == "var":
        return
    yield term[0]
    yield from _term_ops(term[1])
    yield from _term_ops(term[2])


def check_schemas(
    obj, schemas: Sequence[IdentitySchema], max_violations: int = DEFAULT_VIOLATION_CAP
) -> ViolationReport:
    ctx = context_for(obj)
    for schema in schemas:
        for side in (schema.lhs, schema.rhs):
            for _, term in side:
                for opname in _term_ops(term):
                    ctx.resolve(opname)  # raises if the object lacks it
    checked = 0
    violations: list[Violation] = []
    truncated = False
    for schema in schemas:
        dims = [ctx.dims[s] for s in schema.slot_sorts]
        bases = [
            [basis_vector(d, i) for i in range(d)] for d in dims
        ]
        for i in range(dims[0]):
            for j in range(dims[1]):
                for k in range(dims[2]):
                    checked += 1
                    residual = evaluate_schema(
                        schema, ctx, (bases[0][i], bases[1][j], bases[2][k])
                    )
                    if not is_zero(residual):
                        if len(violations) < max_violations:
                            violations.append(Violation(schema.id, (i, j, k), residual))
                        else:
                            truncated = True
    return ViolationReport(checked, violations, truncated)


def check_morphism(
    f: LinearMap,
    source: Algebra,
    target: Algebra,
    op_pairing: Mapping[str, str],
    max_violations: int = DEFAULT_VIOLATION_CAP,
) -> ViolationReport:
    """Check f(a * b) = f(a) *' f(b) on basis pairs, for every source
    operation * paired with a target operation *'."""
    if f.source_dim != source.dimension or f.target_dim != target.dimension:
        raise SpecError(
            f"map {f.source_dim}->{f.target_dim} does not match algebras of "
            f"dimensions {source.dimension}, {target.dimension}"
        )
    checked = 0
    violations: list[Violation] = []
    truncated = False
    n = source.dimension
    images = [f.apply(basis_vector(n, i)) for i in range(n)]
    for src_name, tgt_name in sorted(op_pairing.items()):
        src_op = source.op(src_name)
        tgt_op = target.op(tgt_name)
        for i in range(n):
            for j in range(n):
                checked += 1
                lhs = f.apply(src_op.coeffs[i][j])
                rhs = evaluate(tgt_op, images[i], images[j])
                residual = vec_sub(lhs, rhs)
                if not is_zero(residual):
                    if len(violations) < max_violations:
                        violations.append(
                            Violation(f"morphism:{src_name}->{tgt_name}", (i, j), residual)
                        )
                    else:
                        truncated = True
    return ViolationReport(checked, violations, truncated)


QUADRI_TO_DENDRIFORM_COLLAPSE = {
    "prec_vdash": "prec",
    "prec_dashv": "prec",
    "succ_vdash": "succ",
    "succ_dashv": "succ",
}
