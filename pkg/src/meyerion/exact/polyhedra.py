"""Exact polyhedral feasibility via Fourier-Motzkin elimination.

Constraints are homogeneous or inhomogeneous linear forms over FieldScalar
with three relations: equality, strict positivity, and nonnegativity.
Eliminating a variable combines an upper with a lower bound; the combination
is strict as soon as either parent is strict.  That bookkeeping is what makes
open cones (point types) and flat cones (transformation types) coexist.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from ..errors import InputError
from .field import FieldScalar
from .linalg import Vector


class Relation(Enum):
    EQ = "=="
    GT = ">"
    GE = ">="


@dataclass(frozen=True)
class LinearForm:
    """Constraint  sum_i coefficients[i] * x_i + constant  REL  0."""

    coefficients: Vector
    relation: Relation
    constant: FieldScalar = FieldScalar(0)

    @property
    def dimension(self) -> int:
        return len(self.coefficients)

    def evaluate(self, point: Vector) -> FieldScalar:
        acc = self.constant
        for c, x in zip(self.coefficients, point, strict=True):
            acc = acc + c * x
        return acc

    def holds_at(self, point: Vector) -> bool:
        s = self.evaluate(point).sign()
        if self.relation is Relation.EQ:
            return s == 0
        if self.relation is Relation.GT:
            return s > 0
        return s >= 0

    def closure(self) -> "LinearForm":
        if self.relation is Relation.GT:
            return LinearForm(self.coefficients, Relation.GE, self.constant)
        return self

    def negate(self) -> list["LinearForm"]:
        """Constraints describing the complement; EQ splits into two pieces."""
        neg_coeffs = tuple(-c for c in self.coefficients)
        neg_const = -self.constant
        if self.relation is Relation.EQ:
            return [
                LinearForm(self.coefficients, Relation.GT, self.constant),
                LinearForm(neg_coeffs, Relation.GT, neg_const),
            ]
        if self.relation is Relation.GT:
            return [LinearForm(neg_coeffs, Relation.GE, neg_const)]
        return [LinearForm(neg_coeffs, Relation.GT, neg_const)]


def _expand_equalities(constraints: Iterable[LinearForm]) -> list[LinearForm]:
    out = []
    for c in constraints:
        if c.relation is Relation.EQ:
            out.append(LinearForm(c.coefficients, Relation.GE, c.constant))
            out.append(
                LinearForm(tuple(-v for v in c.coefficients), Relation.GE, -c.constant)
            )
        else:
            out.append(c)
    return out


@dataclass(frozen=True)
class Feasibility:
    feasible: bool
    witness: Vector | None


def fm_feasible(constraints: Sequence[LinearForm]) -> Feasibility:
    """Exact feasibility of a conjunction of linear constraints, with witness."""
    constraints = list(constraints)
    if not constraints:
        return Feasibility(True, ())
    dim = constraints[0].dimension
    if any(c.dimension != dim for c in constraints):
        raise InputError("constraints of mixed ambient dimension")
    levels = [_expand_equalities(constraints)]
    system = levels[0]
    for var in range(dim - 1, -1, -1):
        system = _eliminate(system, var)
        if system is None:
            return Feasibility(False, None)
        levels.append(system)
    # all variables eliminated: remaining constraints are constant relations
    for c in levels[-1]:
        if not _constant_holds(c):
            return Feasibility(False, None)
    witness = _back_substitute(levels, dim)
    return Feasibility(True, witness)


def _constant_holds(c: LinearForm) -> bool:
    s = c.constant.sign()
    return s > 0 if c.relation is Relation.GT else s >= 0


def _eliminate(system: list[LinearForm], var: int) -> list[LinearForm] | None:
    """One FM step removing variable `var`; returns None on visible infeasibility."""
    lowers, uppers, rest = [], [], []
    for c in system:
        s = c.coefficients[var].sign()
        if s > 0:
            lowers.append(c)  # x_var > -(rest)/coeff : a lower bound
        elif s < 0:
            uppers.append(c)
        else:
            rest.append(c)
    for lo in lowers:
        a = lo.coefficients[var]
        for up in uppers:
            b = up.coefficients[var]  # negative
            # combine a*up - b*lo  (positive multiples) to cancel var
            coeffs = tuple(
                a * cu - b * cl
                for cu, cl in zip(up.coefficients, lo.coefficients, strict=True)
            )
            const = a * up.constant - b * lo.constant
            strict = Relation.GT if (
                lo.relation is Relation.GT or up.relation is Relation.GT
            ) else Relation.GE
            combined = LinearForm(coeffs, strict, const)
            if all(v.is_zero() for v in combined.coefficients):
                if not _trivial_or_pending(combined, var):
                    return None
            rest.append(combined)
    return rest


def _trivial_or_pending(c: LinearForm, var: int) -> bool:
    """A combined constraint with no variables left below `var` must hold now
    unless it still involves variables with larger index (kept for later)."""
    if any(not v.is_zero() for v in c.coefficients):
        return True
    return _constant_holds(c)


def _back_substitute(levels: list[list[LinearForm]], dim: int) -> Vector:
    """Walk the elimination levels from the innermost back out, picking an
    exact value inside the interval each level allows."""
    values: list[FieldScalar | None] = [None] * dim
    for var in range(dim):
        system = levels[dim - 1 - var]
        lo_val, lo_strict = None, False
        hi_val, hi_strict = None, False
        for c in system:
            coeff = c.coefficients[var]
            s = coeff.sign()
            if s == 0:
                continue
            acc = c.constant
            for j in range(dim):
                if j != var and not c.coefficients[j].is_zero():
                    # variables above `var` were eliminated at this level, so
                    # any nonzero coefficient here refers to an assigned value
                    acc = acc + c.coefficients[j] * values[j]
            bound = -acc / coeff
            strict = c.relation is Relation.GT
            if s > 0:
                if lo_val is None or bound > lo_val or (bound == lo_val and strict):
                    lo_val, lo_strict = bound, strict
            else:
                if hi_val is None or bound < hi_val or (bound == hi_val and strict):
                    hi_val, hi_strict = bound, strict
        values[var] = _pick(lo_val, lo_strict, hi_val, hi_strict)
    return tuple(values)  # type: ignore[arg-type]


def _pick(lo, lo_strict, hi, hi_strict) -> FieldScalar:
    half = FieldScalar(1, 0, 1) / 2
    if lo is None and hi is None:
        return FieldScalar(0)
    if lo is None:
        return hi - 1 if hi_strict else hi
    if hi is None:
        return lo + 1 if lo_strict else lo
    if lo == hi:
        return lo
    return (lo + hi) * half


def tangent_cone(constraints: Sequence[LinearForm], x: Vector) -> list[LinearForm]:
    """Tangent cone of the closure of the given cone at a point of the closure.

    Active constraints survive (equalities as equalities, inequalities as
    nonstrict); inactive ones are dropped.  Interior points yield the empty
    constraint list, i.e. the whole space.
    """
    out = []
    for c in constraints:
        value = c.evaluate(x)
        s = value.sign()
        if c.relation is Relation.EQ:
            if s != 0:
                raise InputError("point lies outside the cone closure")
            out.append(c)
        else:
            if s < 0:
                raise InputError("point lies outside the cone closure")
            if s == 0:
                out.append(LinearForm(c.coefficients, Relation.GE, c.constant))
    return out


def cone_contains(outer: Sequence[LinearForm], inner: Sequence[LinearForm]) -> bool:
    """True iff every point of `inner` satisfies every constraint of `outer`."""
    inner = list(inner)
    if not fm_feasible(inner).feasible:
        return True
    for c in outer:
        for piece in c.negate():
            if fm_feasible(inner + [piece]).feasible:
                return False
    return True


def closure(constraints: Sequence[LinearForm]) -> list[LinearForm]:
    return [c.closure() for c in constraints]
