"""Checks for Rota-Baxter, averaging and relative averaging operators,
the graph-subalgebra characterization, and brute-force operator search."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .identities import DEFAULT_VIOLATION_CAP, Violation
from .linalg import basis_vector, is_zero, span, vec_add, vec_sub
from .model import (
    Action,
    Algebra,
    LinearMap,
    Representation,
    SpecError,
    evaluate,
)

OPERATOR_KINDS = (
    "rota_baxter",
    "assoc_averaging",
    "dend_averaging",
    "relative_averaging",
    "homomorphic_relative",
)


class SearchCapExceeded(SpecError):
    """Candidate count above the cap; shrink the grid or the dimensions."""


@dataclass
class OperatorVerdict:
    kind: str
    checked: int
    violations: list[Violation] = field(default_factory=list)
    truncated: bool = False

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        d = {
            "kind": self.kind,
            "checked": self.checked,
            "violations": [v.to_dict() for v in self.violations],
        }
        if self.truncated:
            d["truncated"] = True
        return d

    def render(self) -> str:
        head = f"{self.kind}: " + ("pass" if self.ok else "FAIL") + f" ({self.checked} instance(s) checked)"
        lines = [head]
        for v in self.violations:
            lines.append(
                f"  {v.identity} at {v.witness}: residual"
                f" [{', '.join(str(e) for e in v.residual)}]"
            )
        if self.truncated:
            lines.append("  ... report truncated")
        return "\n".join(lines)


def _collect(kind: str, equations, max_violations: int) -> OperatorVerdict:
    """equations yields (tag, witness, residual) triples."""
    verdict = OperatorVerdict(kind, 0)
    for tag, witness, residual in equations:
        verdict.checked += 1
        if not is_zero(residual):
            if len(verdict.violations) < max_violations:
                verdict.violations.append(Violation(tag, witness, residual))
            else:
                verdict.truncated = True
    return verdict


def _require_square(m: LinearMap, dim: int) -> None:
    if (m.source_dim, m.target_dim) != (dim, dim):
        raise SpecError(
            f"map {m.source_dim}->{m.target_dim} is not an endomorphism of "
            f"dimension {dim}"
        )


def check_rota_baxter(
    a: Algebra, r: LinearMap, max_violations: int = DEFAULT_VIOLATION_CAP
) -> OperatorVerdict:
    """mu(Ra, Rb) = R(mu(a, Rb) + mu(Ra, b)) on all basis pairs."""
    mul = a.op("mul")
    _require_square(r, a.dimension)
    n = a.dimension
    img = [r.apply(basis_vector(n, i)) for i in range(n)]

    def equations():
        for i in range(n):
            ei = basis_vector(n, i)
            for j in range(n):
                ej = basis_vector(n, j)
                lhs = evaluate(mul, img[i], img[j])
                rhs = r.apply(vec_add(evaluate(mul, ei, img[j]), evaluate(mul, img[i], ej)))
                yield "rota-baxter", (i, j), vec_sub(lhs, rhs)

    return _collect("rota_baxter", equations(), max_violations)


def check_assoc_averaging(
    a: Algebra, h: LinearMap, max_violations: int = DEFAULT_VIOLATION_CAP
) -> OperatorVerdict:
    """mu(Ha, Hb) = H mu(a, Hb) = H mu(Ha, b); two equations per pair."""
    mul = a.op("mul")
    _require_square(h, a.dimension)
    n = a.dimension
    img = [h.apply(basis_vector(n, i)) for i in range(n)]

    def equations():
        for i in range(n):
            ei = basis_vector(n, i)
            for j in range(n):
                ej = basis_vector(n, j)
                lhs = evaluate(mul, img[i], img[j])
                yield "HaHb=H(aHb)", (i, j), vec_sub(lhs, h.apply(evaluate(mul, ei, img[j])))
                yield "HaHb=H(Hab)", (i, j), vec_sub(lhs, h.apply(evaluate(mul, img[i], ej)))

    return _collect("assoc_averaging", equations(), max_violations)


def check_dend_averaging(
    d: Algebra, t: LinearMap, max_violations: int = DEFAULT_VIOLATION_CAP
) -> OperatorVerdict:
    """Tx*Ty = T(Tx*y) = T(x*Ty) for * in {prec, succ}; four equations per pair."""
    _require_square(t, d.dimension)
    n = d.dimension
    img = [t.apply(basis_vector(n, i)) for i in range(n)]

    def equations():
        for opname in ("prec", "succ"):
            op = d.op(opname)
            for i in range(n):
                ei = basis_vector(n, i)
                for j in range(n):
                    ej = basis_vector(n, j)
                    lhs = evaluate(op, img[i], img[j])
                    yield (
                        f"T{opname}:TxTy=T(Txy)",
                        (i, j),
                        vec_sub(lhs, t.apply(evaluate(op, img[i], ej))),
                    )
                    yield (
                        f"T{opname}:TxTy=T(xTy)",
                        (i, j),
                        vec_sub(lhs, t.apply(evaluate(op, ei, img[j]))),
                    )

    return _collect("dend_averaging", equations(), max_violations)


def _relative_equations(rep: Representation, t: LinearMap):
    n, m = rep.base.dimension, rep.module_dim
    if (t.source_dim, t.target_dim) != (m, n):
        raise SpecError(
            f"map {t.source_dim}->{t.target_dim} does not send the module "
            f"(dim {m}) to the base (dim {n})"
        )
    img = [t.apply(basis_vector(m, a)) for a in range(m)]
    for sym, base_op, left, right in (
        ("prec", rep.base.op("prec"), rep.actions["prec_l"], rep.actions["prec_r"]),
        ("succ", rep.base.op("succ"), rep.actions["succ_l"], rep.actions["succ_r"]),
    ):
        for a in range(m):
            ea = basis_vector(m, a)
            for b in range(m):
                eb = basis_vector(m, b)
                lhs = evaluate(base_op, img[a], img[b])
                yield (
                    f"{sym}:TuTv=T(Tu.v)",
                    (a, b),
                    vec_sub(lhs, t.apply(evaluate(left, img[a], eb))),
                )
                yield (
                    f"{sym}:TuTv=T(u.Tv)",
                    (a, b),
                    vec_sub(lhs, t.apply(evaluate(right, ea, img[b]))),
                )


def check_relative_averaging(
    rep: Representation, t: LinearMap, max_violations: int = DEFAULT_VIOLATION_CAP
) -> OperatorVerdict:
    """Tu*Tv = T(Tu *_l v) = T(u *_r Tv) for * in {prec, succ}."""
    return _collect("relative_averaging", _relative_equations(rep, t), max_violations)


def graph_subalgebra_check(
    rep: Representation, t: LinearMap, max_violations: int = DEFAULT_VIOLATION_CAP
) -> OperatorVerdict:
    """Is the graph {(Tu, u)} closed under the hemisemidirect quadri ops?

    Closure is tested on the graph generators (T e_a, e_a) only; by
    bilinearity of the operations this already implies closure of the span.
    Equivalent to check_relative_averaging by the graph theorem.
    """
    from .constructions import hemisemidirect

    n, m = rep.base.dimension, rep.module_dim
    if (t.source_dim, t.target_dim) != (m, n):
        raise SpecError(
            f"map {t.source_dim}->{t.target_dim} does not send the module "
            f"(dim {m}) to the base (dim {n})"
        )
    hemi = hemisemidirect(rep, verify=False)
    generators = [t.apply(basis_vector(m, a)) + basis_vector(m, a) for a in range(m)]
    graph = span(generators, n + m)

    def equations():
        for opname in sorted(hemi.operations):
            op = hemi.op(opname)
            for a in range(m):
                for b in range(m):
                    product = evaluate(op, generators[a], generators[b])
                    yield f"graph-closure:{opname}", (a, b), graph.reduce(product)

    return _collect("relative_averaging", equations(), max_violations)


def check_homomorphic_relative(
    act: Action, t: LinearMap, max_violations: int = DEFAULT_VIOLATION_CAP
) -> OperatorVerdict:
    """Relative averaging with respect to the underlying representation,
    plus the homomorphism equations T(u *' v) = Tu * Tv."""
    rep = act.representation
    n, m = act.base.dimension, act.target.dimension

    def equations():
        yield from _relative_equations(rep, t)
        img = [t.apply(basis_vector(m, a)) for a in range(m)]
        for sym, tgt_op, base_op in (
            ("prec", act.target.op("prec"), act.base.op("prec")),
            ("succ", act.target.op("succ"), act.base.op("succ")),
        ):
            for a in range(m):
                for b in range(m):
                    lhs = t.apply(tgt_op.coeffs[a][b])
                    rhs = evaluate(base_op, img[a], img[b])
                    yield f"hom:{sym}", (a, b), vec_sub(lhs, rhs)

    return _collect("homomorphic_relative", equations(), max_violations)


def check_operator(subject, kind: str, t: LinearMap, max_violations: int = DEFAULT_VIOLATION_CAP) -> OperatorVerdict:
    """Dispatch a kind name to the matching checker."""
    if kind == "rota_baxter":
        return check_rota_baxter(subject, t, max_violations)
    if kind == "assoc_averaging":
        return check_assoc_averaging(subject, t, max_violations)
    if kind == "dend_averaging":
        return check_dend_averaging(subject, t, max_violations)
    if kind == "relative_averaging":
        rep = subject.representation if isinstance(subject, Action) else subject
        return check_relative_averaging(rep, t, max_violations)
    if kind == "homomorphic_relative":
        return check_homomorphic_relative(subject, t, max_violations)
    raise SpecError(f"unknown operator kind {kind!r}; known: {', '.join(OPERATOR_KINDS)}")


def operator_map_shape(subject, kind: str) -> tuple[int, int]:
    """(source_dim, target_dim) of a candidate operator for the given kind."""
    if kind in ("rota_baxter", "assoc_averaging", "dend_averaging"):
        if not isinstance(subject, Algebra):
            raise SpecError(f"kind {kind!r} needs an algebra")
        return subject.dimension, subject.dimension
    if kind == "relative_averaging":
        rep = subject.representation if isinstance(subject, Action) else subject
        if not isinstance(rep, Representation):
            raise SpecError("relative averaging needs a representation")
        return rep.module_dim, rep.base.dimension
    if kind == "homomorphic_relative":
        if not isinstance(subject, Action):
            raise SpecError("homomorphic relative averaging needs an action")
        return subject.target.dimension, subject.base.dimension
    raise SpecError(f"unknown operator kind {kind!r}; known: {', '.join(OPERATOR_KINDS)}")


DEFAULT_SEARCH_CAP = 3**9


def search_operators(
    subject,
    kind: str,
    grid: Sequence[Fraction],
    cap: int = DEFAULT_SEARCH_CAP,
) -> list[LinearMap]:
    """All matrices with entries from the grid passing the requested check,
    enumerated in lexicographic (row-major) matrix order."""
    source_dim, target_dim = operator_map_shape(subject, kind)
    cells = source_dim * target_dim
    total = len(grid) ** cells
    if total > cap:
        raise SearchCapExceeded(
            f"{len(grid)}^{cells} = {total} candidates exceed the cap {cap}; "
            "shrink the grid or the dimensions"
        )
    passing = []
    for combo in itertools.product(grid, repeat=cells):
        matrix = [
            combo[i * source_dim : (i + 1) * source_dim] for i in range(target_dim)
        ]
        candidate = LinearMap(source_dim, target_dim, matrix)
        if check_operator(subject, kind, candidate, max_violations=1).ok:
            passing.append(candidate)
    return passing
