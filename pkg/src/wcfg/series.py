"""Truncated power series over a commutative semiring, and the algebraic
systems of equations attached to weighted grammars.

A grammar with variables X1..Xn induces the system

    Xi = sum over rules Xi -> gamma of  W(rule) * commute(gamma)

where commute(gamma) multiplies out the right-hand side in commuting
symbols.  Kleene iteration of this system, truncated at a fixed total
degree in the terminal symbols, converges to the commutative word-weight
series whenever the grammar is cycle-free.
"""

from fractions import Fraction

from .errors import (
    DegenerateLeadingTerm,
    NonConvergent,
    NonRegularSystem,
    NonUnitDenominatorAtOrigin,
)
from .grammar import Grammar, Rule
from .monomials import (
    grade_key,
    mono_degree,
    mono_is_one,
    mono_mul,
    mono_one,
    monomials_up_to_degree,
    render_monomial,
)
from .polynomials import Polynomial
from .semirings import RATIONALS


class TruncatedSeries:
    """A power series in commuting symbols, truncated at a total degree.

    Coefficients live in an arbitrary commutative semiring; zero
    coefficients are never stored.
    """

    __slots__ = ("semiring", "syms", "order", "coeffs")

    def __init__(self, semiring, syms, order, coeffs=None):
        self.semiring = semiring
        self.syms = tuple(syms)
        self.order = order
        clean = {}
        if coeffs:
            for mono, w in coeffs.items():
                if mono_degree(mono) <= order and not semiring.is_zero(w):
                    clean[mono] = w
        self.coeffs = clean

    @classmethod
    def zero(cls, semiring, syms, order):
        return cls(semiring, syms, order)

    @classmethod
    def one(cls, semiring, syms, order):
        return cls(semiring, syms, order, {mono_one(len(syms)): semiring.one})

    @classmethod
    def term(cls, semiring, syms, order, mono, weight):
        return cls(semiring, syms, order, {mono: weight})

    def coefficient(self, mono):
        return self.coeffs.get(mono, self.semiring.zero)

    def is_zero(self):
        return not self.coeffs

    def truncated(self, order):
        """A copy keeping only terms of total degree <= order."""
        if order >= self.order:
            return TruncatedSeries(self.semiring, self.syms, order, self.coeffs)
        kept = {m: w for m, w in self.coeffs.items() if mono_degree(m) <= order}
        return TruncatedSeries(self.semiring, self.syms, order, kept)

    def __add__(self, other):
        sr = self.semiring
        out = dict(self.coeffs)
        for mono, w in other.coeffs.items():
            if mono in out:
                out[mono] = sr.add(out[mono], w)
            else:
                out[mono] = w
        return TruncatedSeries(sr, self.syms, self.order, out)

    def __mul__(self, other):
        sr = self.semiring
        order = self.order
        out = {}
        for m1, w1 in self.coeffs.items():
            d1 = mono_degree(m1)
            for m2, w2 in other.coeffs.items():
                if d1 + mono_degree(m2) > order:
                    continue
                mono = mono_mul(m1, m2)
                prod = sr.mul(w1, w2)
                if mono in out:
                    out[mono] = sr.add(out[mono], prod)
                else:
                    out[mono] = prod
        return TruncatedSeries(sr, self.syms, order, out)

    def __pow__(self, exponent):
        result = TruncatedSeries.one(self.semiring, self.syms, self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.semiring == other.semiring
            and self.syms == other.syms
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.semiring.keyword, self.syms, self.order,
                     frozenset(self.coeffs.items())))

    def __repr__(self):
        return "TruncatedSeries(%s)" % render_series(self)


def render_series(series):
    """Terms in ascending degree order, joined by ' + '."""
    if not series.coeffs:
        return series.semiring.render(series.semiring.zero)
    parts = []
    for mono in sorted(series.coeffs, key=grade_key):
        w = series.semiring.render(series.coeffs[mono])
        if mono_is_one(mono):
            parts.append(w)
        else:
            parts.append("%s*%s" % (w, render_monomial(mono, series.syms)))
    return " + ".join(parts)


class AlgebraicSystem:
    """The commutative equation system of a weighted grammar.

    The start variable is listed first; the remaining variables keep
    their declaration order.  Each equation is a tuple of terms
    (weight, terminal monomial, variable monomial), with like terms
    merged.
    """

    __slots__ = ("semiring", "terminals", "variables", "equations")

    def __init__(self, semiring, terminals, variables, equations):
        self.semiring = semiring
        self.terminals = tuple(terminals)
        self.variables = tuple(variables)
        self.equations = tuple(tuple(eq) for eq in equations)

    def render(self):
        lines = []
        for var, eq in zip(self.variables, self.equations):
            if not eq:
                lines.append("%s = %s" % (var, self.semiring.render(self.semiring.zero)))
                continue
            parts = []
            for weight, tmono, vmono in eq:
                factors = [self.semiring.render(weight)]
                if not mono_is_one(tmono):
                    factors.append(render_monomial(tmono, self.terminals))
                if not mono_is_one(vmono):
                    factors.append(render_monomial(vmono, self.variables))
                parts.append("*".join(factors))
            lines.append("%s = %s" % (var, " + ".join(parts)))
        return "\n".join(lines)


def system_variable_order(grammar):
    """Start variable first, then the rest in declaration order."""
    rest = [v for v in grammar.variables if v != grammar.start]
    return (grammar.start,) + tuple(rest)


def algebraic_system(grammar):
    variables = system_variable_order(grammar)
    vindex = {v: i for i, v in enumerate(variables)}
    nt = len(grammar.terminals)
    nv = len(variables)
    sr = grammar.semiring
    equations = []
    for var in variables:
        merged = {}
        for ri in grammar.rules_for(var):
            rule = grammar.rules[ri]
            texp = [0] * nt
            vexp = [0] * nv
            for sym in rule.rhs:
                if sym in grammar.terminal_index:
                    texp[grammar.terminal_index[sym]] += 1
                else:
                    vexp[vindex[sym]] += 1
            key = (tuple(texp), tuple(vexp))
            if key in merged:
                merged[key] = sr.add(merged[key], rule.weight)
            else:
                merged[key] = rule.weight
        eq = [
            (w, tm, vm)
            for (tm, vm), w in merged.items()
            if not sr.is_zero(w)
        ]
        eq.sort(key=lambda t: (grade_key(t[2]), grade_key(t[1])))
        equations.append(tuple(eq))
    return AlgebraicSystem(sr, grammar.terminals, variables, equations)


def _substitute(system, assignment, order):
    """One Kleene step: plug the current approximations into every
    right-hand side, truncating at the given total degree."""
    sr = system.semiring
    syms = system.terminals
    out = []
    for eq in system.equations:
        acc = TruncatedSeries.zero(sr, syms, order)
        for weight, tmono, vmono in eq:
            term = TruncatedSeries.term(sr, syms, order, tmono, weight)
            for vi, exp in enumerate(vmono):
                for _ in range(exp):
                    term = term * assignment[vi]
                    if term.is_zero():
                        break
                if term.is_zero():
                    break
            acc = acc + term
        out.append(acc)
    return out


def approximate(system, order, max_iters=1000):
    """Kleene fixed-point approximation of an algebraic system.

    Iterates substitution from the all-zero assignment until the
    truncated series stabilise, and returns one series per system
    variable (same order as ``system.variables``).  Raises
    NonConvergent when the cap is hit first, which cannot happen for
    cycle-free grammars.
    """
    sr = system.semiring
    current = [
        TruncatedSeries.zero(sr, system.terminals, order)
        for _ in system.variables
    ]
    for _ in range(max_iters):
        nxt = _substitute(system, current, order)
        if nxt == current:
            return tuple(current)
        current = nxt
    raise NonConvergent(
        "system did not stabilise at order %d within %d iterations"
        % (order, max_iters)
    )


def grammar_series(grammar, order, max_iters=1000):
    """The commutative word-weight series of the start variable."""
    system = algebraic_system(grammar)
    return approximate(system, order, max_iters=max_iters)[0]


# --- bridges between polynomials, rational functions and series ----------

def poly_to_series(poly, order):
    """View a rational-coefficient polynomial as a truncated series."""
    coeffs = {m: c for m, c in poly.terms.items() if mono_degree(m) <= order}
    return TruncatedSeries(RATIONALS, poly.syms, order, coeffs)


def series_expand(f, order):
    """Expand a rational function as a truncated series at the origin.

    The denominator must have a nonzero constant term; otherwise the
    expansion does not exist and NonUnitDenominatorAtOrigin is raised.
    """
    den = f.den
    c0 = den.constant_term()
    if c0 == 0:
        raise NonUnitDenominatorAtOrigin(
            "denominator %r vanishes at the origin" % (den,)
        )
    inv0 = Fraction(1) / c0
    n = len(f.syms)
    unit = mono_one(n)
    inv = {unit: inv0}
    den_terms = [(m, c) for m, c in den.terms.items() if not mono_is_one(m)]
    for mono in monomials_up_to_degree(n, order):
        if mono_is_one(mono):
            continue
        acc = Fraction(0)
        for dm, dc in den_terms:
            rest = tuple(e - d for e, d in zip(mono, dm))
            if any(e < 0 for e in rest):
                continue
            prev = inv.get(rest)
            if prev is not None:
                acc += dc * prev
        if acc:
            inv[mono] = -inv0 * acc
    inv_series = TruncatedSeries(RATIONALS, f.syms, order, inv)
    return poly_to_series(f.num, order) * inv_series


def eval_poly_at_series(coeffs, series, order):
    """Evaluate sum_j coeffs[j] * series^j, truncated at the order.

    ``coeffs`` lists polynomials over the terminal symbols by ascending
    power of the series argument.
    """
    acc = TruncatedSeries.zero(RATIONALS, series.syms, order)
    power = TruncatedSeries.one(RATIONALS, series.syms, order)
    for j, poly in enumerate(coeffs):
        if j > 0:
            power = power * series
        if poly.is_zero():
            continue
        acc = acc + poly_to_series(poly, order) * power
    return acc


# --- linear systems and regular grammars ---------------------------------

def _mono_word(mono, syms):
    """The canonical word spelling a commutative monomial: each symbol
    repeated by its exponent, in declaration order."""
    word = []
    for sym, exp in zip(syms, mono):
        word.extend([sym] * exp)
    return tuple(word)


def regular_system_to_grammar(system, start=None):
    """Rebuild a weighted right-linear grammar from a linear system.

    Every term must use at most one system variable, with exponent one;
    otherwise the system has no right-linear presentation and
    NonRegularSystem is raised.
    """
    if start is None:
        start = system.variables[0]
    rules = []
    for var, eq in zip(system.variables, system.equations):
        for weight, tmono, vmono in eq:
            word = _mono_word(tmono, system.terminals)
            if mono_is_one(vmono):
                rules.append(Rule(var, word, weight))
                continue
            if mono_degree(vmono) != 1:
                raise NonRegularSystem(
                    "equation for %s has a term of variable degree %d"
                    % (var, mono_degree(vmono))
                )
            successor = system.variables[vmono.index(1)]
            rules.append(Rule(var, word + (successor,), weight))
    return Grammar(
        semiring=system.semiring,
        terminals=system.terminals,
        variables=system.variables,
        start=start,
        rules=rules,
    )


def grammar_from_linear(c, d, terminals, start):
    """The right-linear grammar solving c(Sigma) * X = d(Sigma).

    Requires the constant term of ``c`` to be nonzero; the equation is
    rescaled so that it becomes X = (1 - c/c0) X + d/c0, whose terms
    translate directly into weighted rules for the single variable X.
    Raises DegenerateLeadingTerm when c vanishes at the origin, since
    the rescaled right-hand side would then not define a proper system.
    """
    c0 = c.constant_term()
    if c0 == 0:
        raise DegenerateLeadingTerm(
            "coefficient of the solved variable vanishes at the origin"
        )
    s = Polynomial.const(c.syms, 1) - c.scale(Fraction(1) / c0)
    t = d.scale(Fraction(1) / c0)
    terms = []
    for mono in sorted(s.terms, key=grade_key):
        terms.append((s.terms[mono], mono, (1,)))
    for mono in sorted(t.terms, key=grade_key):
        terms.append((t.terms[mono], mono, (0,)))
    terms.sort(key=lambda item: (grade_key(item[2]), grade_key(item[1])))
    if not terms:
        # the solved series is identically zero: keep that visible as a
        # single weight-zero rule rather than an empty grammar
        terms.append((Fraction(0), mono_one(len(terminals)), (0,)))
    system = AlgebraicSystem(RATIONALS, terminals, (start,), (terms,))
    return regular_system_to_grammar(system)
