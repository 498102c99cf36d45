"""Deciding whether a rational-weighted grammar has a regular
Parikh-equivalent.

The letter-count series of the start variable satisfies the grammar's
equation system, so it is a root of the unique univariate member of the
system ideal's reduced Groebner basis.  The property holds exactly when
that series is already a ratio of terminal polynomials — equivalently,
when the squarefree annihilating polynomial has a linear factor with the
series as its root.  The pipeline therefore eliminates down to one
variable, clears denominators, and either reads the linear certificate
off directly or hunts for a linear factor by reconstructing the series
as a ratio of bounded-degree polynomials and checking divisibility
symbolically.  A witness grammar is rebuilt from the linear form
X = s*X + t, whose fixed point is the series itself.
"""

from dataclasses import dataclass
from fractions import Fraction

from .analysis import is_cycle_free
from .errors import (
    DegenerateLeadingTerm,
    IterationCapExceeded,
    NotCycleFree,
    NoUnivariateElement,
    WrongSemiring,
)
from .grammar import render_grammar
from .groebner import (
    SystemPolynomial,
    groebner_basis,
    render_system_polynomial,
    system_polynomials,
    univar_build,
    univar_coefficients,
    univar_gcd_squarefree,
)
from .linalg import nullspace
from .monomials import monomials_up_to_degree, mono_divides, mono_div
from .polynomials import Polynomial, RationalFunction, poly_lcm
from .series import algebraic_system, approximate, eval_poly_at_series, grammar_from_linear


@dataclass(frozen=True)
class LinearForm:
    """The one-variable recursion X = s*X + t extracted from a linear
    annihilator c*X - d: s = 1 - c/c(0), t = d/c(0).  The constant term
    of s is zero by construction, so the recursion has a unique series
    fixed point."""

    s: Polynomial
    t: Polynomial
    c: Polynomial
    d: Polynomial

    def __post_init__(self):
        assert self.s.constant_term() == 0

    @classmethod
    def from_annihilator(cls, c, d):
        """Build the recursion from the annihilator c*X - d; raises
        DegenerateLeadingTerm when c has no constant term."""
        c0 = c.constant_term()
        if c0 == 0:
            raise DegenerateLeadingTerm(
                "linear annihilator's leading coefficient vanishes at the origin; "
                "the recursion X = s*X + t has no admissible normalization"
            )
        inv = Fraction(1) / c0
        s = (Polynomial.const(c.syms, c0) - c).scale(inv)
        t = d.scale(inv)
        return cls(s, t, c, d)

    def witness(self, terminals, start):
        """The one-variable regular grammar realizing the recursion."""
        return grammar_from_linear(self.c, self.d, terminals, start)


@dataclass(frozen=True)
class DecisionReport:
    """Outcome of the decision procedure.

    verdict is "holds" or "fails"; q the cleared-denominator certificate
    polynomial (linear iff holds); witness the regular grammar (holds
    only); basis_g the raw univariate basis element; and
    discrimination_order the series order that certified the verdict
    (0 when the certificate was purely symbolic).
    """

    verdict: str
    q: SystemPolynomial
    witness: object
    basis_g: SystemPolynomial
    discrimination_order: int


def eliminate_to_univariate(system):
    """The unique member of the reduced Groebner basis of {Xi - p_i}
    involving only the start variable.

    The elimination order sorts the start variable last, so the basis of
    a solvable system always contains exactly one such element; its
    absence signals an inconsistent input and raises
    NoUnivariateElement.
    """
    basis = groebner_basis(system_polynomials(system))
    name = system.variables[0]
    found = [p for p in basis if p.uses_only(name) and p.degree_in(name) >= 1]
    if not found:
        raise NoUnivariateElement(
            f"reduced basis has no element univariate in {name}"
        )
    assert len(found) == 1  # reduced bases cannot hold two: one lead would divide the other
    return found[0]


def clear_denominators(g):
    """Scale a univariate-over-K polynomial to terminal-polynomial
    coefficients: multiply by the lcm of the coefficient denominators,
    divide by the rational content, and flip signs so the top
    coefficient's canonical (first ascending) rational is positive."""
    name = _univar_name(g)
    coeffs = univar_coefficients(g, name)
    lcm = Polynomial.const(g.syms, 1)
    for c in coeffs:
        lcm = poly_lcm(lcm, c.den)
    scale = RationalFunction.from_poly(lcm)
    cleared = []
    for c in coeffs:
        value = c * scale
        assert value.is_polynomial()
        cleared.append(value.num)
    content = Fraction(0)
    for p in cleared:
        if not p.is_zero():
            c = p.content()
            content = Fraction(
                _int_gcd(content.numerator, abs(c.numerator)),
                _int_lcm(content.denominator, c.denominator),
            )
    cleared = [p.scale(1 / content) for p in cleared]
    _, first = cleared[-1].first_term()
    if first < 0:
        cleared = [-p for p in cleared]
    return univar_build(g, [RationalFunction.from_poly(p) for p in cleared], name)


def _int_gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _int_lcm(a, b):
    return a * b // _int_gcd(a, b)


def _univar_name(p):
    """The single variable a univariate SystemPolynomial actually uses,
    falling back to the first declared one for constants."""
    for i, name in enumerate(p.variables):
        if any(m[i] for m in p.terms):
            return name
    return p.variables[0]


def rational_reconstruct(r1, D, k):
    """A nonzero pair of terminal polynomials (c, d) of degree <= D with
    c*r1 = d up to series order k, or None when only the zero pair
    works.  c is normalized to canonical (first ascending) coefficient
    one.  With k >= 2D + 1 a persistent solution pins down a genuine
    rational representation candidate."""
    space = _reconstruction_space(r1, D, k)
    return space[0] if space else None


def _reconstruction_space(r1, D, k):
    """All nullspace basis solutions of the truncated c*r1 - d = 0
    system, as normalized (c, d) polynomial pairs."""
    monos = monomials_up_to_degree(len(r1.syms), D)
    ncols = 2 * len(monos)
    rows = []
    for v in monomials_up_to_degree(len(r1.syms), k):
        row = []
        for m in monos:  # c columns: coefficient of v in c * r1
            if mono_divides(m, v):
                row.append(r1.coefficient(mono_div(v, m)))
            else:
                row.append(Fraction(0))
        for m in monos:  # d columns: -d contributes at its own monomial
            row.append(Fraction(-1) if m == v else Fraction(0))
        rows.append(row)
    out = []
    for vec in nullspace(rows, ncols):
        c = Polynomial(r1.syms, {m: vec[i] for i, m in enumerate(monos)})
        d = Polynomial(r1.syms, {m: vec[len(monos) + i] for i, m in enumerate(monos)})
        if c.is_zero():
            continue  # c = 0 forces d = 0; not a representation
        _, first = c.first_term()
        out.append((c.scale(1 / first), d.scale(1 / first)))
    return out


def discriminate_factor(candidates, system, max_order=256):
    """Index of the unique candidate polynomial annihilating the
    system's start series, found by evaluating all candidates at ever
    longer series truncations and discarding any with a nonzero value.

    Precondition (caller-guaranteed): exactly one candidate vanishes.
    Raises IterationCapExceeded past max_order — a violated
    precondition, not a data condition.
    """
    if len(candidates) == 1:
        return 0
    name = system.variables[0]
    alive = set(range(len(candidates)))
    order = 4
    while order <= max_order:
        r1 = approximate(system, order)[0]
        for i in sorted(alive):
            coeffs = []
            for c in univar_coefficients(candidates[i], name):
                assert c.is_polynomial()
                coeffs.append(c.num)
            value = eval_poly_at_series(coeffs, r1, order)
            if value.coeffs:
                alive.discard(i)
        if len(alive) == 1:
            return alive.pop()
        if not alive:
            raise IterationCapExceeded(
                f"every candidate factor was eliminated at order {order}"
            )
        order *= 2
    raise IterationCapExceeded(
        f"factor discrimination still ambiguous at order {max_order}"
    )


def _univar_division(num, den):
    """Quotient and remainder of ascending fraction-field coefficient
    lists; den's top entry must be nonzero."""
    num = list(num)
    m = len(den) - 1
    n = len(num) - 1
    if n < m:
        return [], num
    quot = [None] * (n - m + 1)
    for i in range(n - m, -1, -1):
        f = num[i + m] / den[m]
        quot[i] = f
        if not f.is_zero():
            for j in range(m + 1):
                num[i + j] = num[i + j] - f * den[j]
    return quot, num[:m]


def decide_parikh(g, max_rounds=12):
    """Decide the Parikh property of a rational-weighted cycle-free
    grammar; returns a DecisionReport either way.

    Linear certificate polynomial: verdict holds, with a one-variable
    witness grammar whose series equals the input's.  Degree two or
    more: search for a linear factor through the series — a reconstructed
    ratio that divides the certificate symbolically and survives
    discrimination proves holds; an empty reconstruction space proves no
    linear annihilator exists at all, so the verdict is fails.
    """
    if g.semiring.keyword != "Q":
        raise WrongSemiring(
            f"the decision procedure needs semiring Q, got {g.semiring.name}"
        )
    ok, cycle = is_cycle_free(g)
    if not ok:
        raise NotCycleFree(cycle.variables)

    system = algebraic_system(g)
    name = system.variables[0]
    basis_g = eliminate_to_univariate(system)
    cleared = clear_denominators(basis_g)
    squarefree = univar_gcd_squarefree(cleared, name)
    certificate = clear_denominators(squarefree)

    coeffs = univar_coefficients(certificate, name)
    degree = len(coeffs) - 1
    if degree == 1:
        c, d = coeffs[1].num, (-coeffs[0]).num
        form = LinearForm.from_annihilator(c, d)
        return DecisionReport(
            verdict="holds",
            q=certificate,
            witness=form.witness(g.terminals, g.start),
            basis_g=basis_g,
            discrimination_order=0,
        )

    D = max(c.num.total_degree() for c in coeffs if not c.is_zero())
    base = 2 * D + 1
    order = base
    for _ in range(max_rounds):
        r1 = approximate(system, order)[0]
        space = _reconstruction_space(r1, D, order)
        if not space:
            return DecisionReport(
                verdict="fails",
                q=certificate,
                witness=None,
                basis_g=basis_g,
                discrimination_order=order,
            )
        for c, d in space:
            linear = _linear_system_poly(certificate, name, c, d)
            quot, rem = _univar_division(
                univar_coefficients(certificate, name),
                univar_coefficients(linear, name),
            )
            if any(not r.is_zero() for r in rem):
                continue
            cofactor = clear_denominators(univar_build(certificate, quot, name))
            winner = discriminate_factor(
                [clear_denominators(linear), cofactor], system
            )
            if winner == 0:
                normalized = clear_denominators(linear)
                ncoeffs = univar_coefficients(normalized, name)
                nc, nd = ncoeffs[1].num, (-ncoeffs[0]).num
                form = LinearForm.from_annihilator(nc, nd)
                return DecisionReport(
                    verdict="holds",
                    q=normalized,
                    witness=form.witness(g.terminals, g.start),
                    basis_g=basis_g,
                    discrimination_order=order,
                )
        order *= 2
    raise IterationCapExceeded(
        f"no linear-factor certificate after {max_rounds} rounds (last order {order // 2})"
    )


def _linear_system_poly(template, name, c, d):
    """The polynomial c*X - d as a SystemPolynomial shaped like the
    template."""
    return univar_build(
        template,
        [RationalFunction.from_poly(-d), RationalFunction.from_poly(c)],
        name,
    )


def render_report(report):
    """Canonical multi-line rendering of a DecisionReport; the witness
    grammar document is indented beneath its heading."""
    lines = [
        f"verdict: {report.verdict}",
        f"q: {render_system_polynomial(report.q)}",
        f"basis_g: {render_system_polynomial(report.basis_g)}",
        f"discrimination_order: {report.discrimination_order}",
    ]
    if report.witness is not None:
        lines.append("witness:")
        for line in render_grammar(report.witness).splitlines():
            lines.append(f"  {line}")
    return "\n".join(lines)
