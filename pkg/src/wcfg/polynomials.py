"""Exact multivariate polynomials over Q and their fraction field.

Polynomial represents an element of Q[s1, ..., sn] as {exponent tuple:
Fraction}; RationalFunction is a reduced fraction of two Polynomials.

Canonical forms (load-bearing for printing and witnesses):

* the canonical term order is ascending graded/declaration order
  (monomials.grade_key);
* gcds and primitive parts are normalized so their first coefficient in
  that order is positive;
* a RationalFunction's denominator is scaled so its first coefficient in
  that order is exactly 1 (so the zero-degree case degenerates to a plain
  polynomial over a denominator of 1).
"""

from fractions import Fraction
from math import gcd as int_gcd, lcm as int_lcm

from .errors import DivisionByZeroPolynomial, NotDivisible, ZeroDenominator
from .monomials import (
    grade_key,
    mono_degree,
    mono_div,
    mono_divides,
    mono_gcd,
    mono_is_one,
    mono_mul,
    mono_one,
    render_monomial,
)

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Polynomial:
    """A polynomial over Q in the ordered symbols `syms`."""

    __slots__ = ("syms", "terms")

    def __init__(self, syms, terms=None, _clean=True):
        self.syms = tuple(syms)
        if terms is None:
            self.terms = {}
        elif _clean:
            self.terms = {m: Fraction(c) for m, c in terms.items() if c != 0}
        else:
            self.terms = terms

    @classmethod
    def zero(cls, syms):
        return cls(syms, {}, _clean=False)

    @classmethod
    def const(cls, syms, c):
        c = Fraction(c)
        if c == 0:
            return cls.zero(syms)
        return cls(syms, {mono_one(len(syms)): c}, _clean=False)

    @classmethod
    def monomial(cls, syms, mono, c=_ONE):
        c = Fraction(c)
        if c == 0:
            return cls.zero(syms)
        return cls(syms, {tuple(mono): c}, _clean=False)

    @classmethod
    def variable(cls, syms, name):
        syms = tuple(syms)
        mono = [0] * len(syms)
        mono[syms.index(name)] = 1
        return cls(syms, {tuple(mono): _ONE}, _clean=False)

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return len(self.terms) == 1 and self.terms.get(mono_one(len(self.syms))) == 1

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and mono_is_one(next(iter(self.terms))))

    def constant_term(self):
        return self.terms.get(mono_one(len(self.syms)), _ZERO)

    def total_degree(self):
        """Max total degree of a term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_degree(m) for m in self.terms)

    def first_term(self):
        """(monomial, coefficient) lowest in the canonical order."""
        m = min(self.terms, key=grade_key)
        return m, self.terms[m]

    def lead_term(self):
        """(monomial, coefficient) highest in the canonical order."""
        m = max(self.terms, key=grade_key)
        return m, self.terms[m]

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.syms == other.syms and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.const(self.syms, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.syms, frozenset(self.terms.items())))

    def __neg__(self):
        return Polynomial(self.syms, {m: -c for m, c in self.terms.items()}, _clean=False)

    def __add__(self, other):
        other = self._coerce(other)
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = res.get(m, _ZERO) + c
            if s:
                res[m] = s
            elif m in res:
                del res[m]
        return Polynomial(self.syms, res, _clean=False)

    def __sub__(self, other):
        other = self._coerce(other)
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = res.get(m, _ZERO) - c
            if s:
                res[m] = s
            elif m in res:
                del res[m]
        return Polynomial(self.syms, res, _clean=False)

    def __mul__(self, other):
        other = self._coerce(other)
        if not self.terms or not other.terms:
            return Polynomial.zero(self.syms)
        small, big = sorted((self.terms, other.terms), key=len)
        res = {}
        for m1, c1 in small.items():
            if mono_is_one(m1):
                for m2, c2 in big.items():
                    s = res.get(m2, _ZERO) + c1 * c2
                    if s:
                        res[m2] = s
                    elif m2 in res:
                        del res[m2]
            else:
                for m2, c2 in big.items():
                    m = mono_mul(m1, m2)
                    s = res.get(m, _ZERO) + c1 * c2
                    if s:
                        res[m] = s
                    elif m in res:
                        del res[m]
        return Polynomial(self.syms, res, _clean=False)

    __rmul__ = __mul__
    __radd__ = __add__

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __pow__(self, e):
        assert e >= 0
        result = Polynomial.const(self.syms, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            assert other.syms == self.syms, "mixed symbol lists"
            return other
        return Polynomial.const(self.syms, other)

    def scale(self, c):
        c = Fraction(c)
        if c == 0:
            return Polynomial.zero(self.syms)
        return Polynomial(self.syms, {m: c * v for m, v in self.terms.items()}, _clean=False)

    def content(self):
        """Signed rational content: gcd of numerators over lcm of
        denominators, carrying the sign of the first coefficient, so that
        self == content * primitive_part always holds exactly."""
        if not self.terms:
            return _ZERO
        num = 0
        den = 1
        for c in self.terms.values():
            num = int_gcd(num, abs(c.numerator))
            den = int_lcm(den, c.denominator)
        magnitude = Fraction(num, den)
        _, first = self.first_term()
        return magnitude if first > 0 else -magnitude

    def primitive_part(self):
        """self / content(); its first coefficient is positive."""
        if not self.terms:
            return self
        c = self.content()
        return Polynomial(self.syms, {m: v / c for m, v in self.terms.items()}, _clean=False)

    def coefficient_of(self, mono):
        return self.terms.get(tuple(mono), _ZERO)

    def __repr__(self):
        return f"Polynomial({render_polynomial(self)})"


def render_polynomial(p):
    """Canonical ascending rendering, e.g. `1 - 2*b + b^2`."""
    if not p.terms:
        return "0"
    parts = []
    for i, m in enumerate(sorted(p.terms, key=grade_key)):
        c = p.terms[m]
        mono = render_monomial(m, p.syms)
        if mono == "1":
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        if i == 0:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def _divide_exact(p, q):
    """Exact division p / q in Q[syms]; raises NotDivisible on a remainder."""
    if q.is_zero():
        raise DivisionByZeroPolynomial("polynomial division by zero")
    if q.is_constant():
        c = q.constant_term()
        return p.scale(_ONE / c)
    quot = {}
    rem = dict(p.terms)
    qm, qc = q.lead_term()
    while rem:
        m = max(rem, key=grade_key)
        c = rem[m]
        if not mono_divides(qm, m):
            raise NotDivisible(f"{render_polynomial(p)} not divisible by {render_polynomial(q)}")
        fm = mono_div(m, qm)
        fc = c / qc
        quot[fm] = quot.get(fm, _ZERO) + fc
        for m2, c2 in q.terms.items():
            mm = mono_mul(fm, m2)
            s = rem.get(mm, _ZERO) - fc * c2
            if s:
                rem[mm] = s
            elif mm in rem:
                del rem[mm]
    return Polynomial(p.syms, quot)


def poly_divexact(p, q):
    return _divide_exact(p, q)


def poly_divides(q, p):
    """Does q divide p exactly?"""
    try:
        _divide_exact(p, q)
        return True
    except NotDivisible:
        return False


def _mono_content(p):
    """Largest monomial dividing every term (the zero polynomial has none)."""
    it = iter(p.terms)
    m = next(it)
    for other in it:
        m = mono_gcd(m, other)
        if mono_is_one(m):
            break
    return m


def _univar_coeffs(p, v):
    """View p as a univariate polynomial in symbol index v: {exp: Polynomial
    coefficient with v zeroed out}."""
    out = {}
    for m, c in p.terms.items():
        e = m[v]
        key = m[:v] + (0,) + m[v + 1 :]
        coeff = out.setdefault(e, {})
        coeff[key] = coeff.get(key, _ZERO) + c
    return {e: Polynomial(p.syms, terms) for e, terms in out.items()}


def _from_univar(syms, v, coeffs):
    terms = {}
    for e, poly in coeffs.items():
        for m, c in poly.terms.items():
            terms[m[:v] + (e,) + m[v + 1 :]] = c
    return Polynomial(syms, terms)


def _univar_content(coeffs):
    g = None
    for poly in coeffs.values():
        g = poly if g is None else poly_gcd(g, poly)
        if g.is_one():
            break
    return g


def _pseudo_rem(f, g, v):
    """Pseudo-remainder of f by g in the main variable with index v."""
    fc = _univar_coeffs(f, v)
    gc = _univar_coeffs(g, v)
    df = max(fc)
    dg = max(gc)
    lead_g = gc[dg]
    while f and df >= dg:
        lead_f = fc[df]
        # scale so the leading term cancels without rational functions
        f = f * lead_g - g * _from_univar(f.syms, v, {df - dg: lead_f})
        if not f:
            break
        fc = _univar_coeffs(f, v)
        df = max(fc)
    return f


def poly_gcd(p, q):
    """Primitive gcd in Q[syms], first coefficient positive; gcd(0, 0) = 0."""
    assert p.syms == q.syms
    if p.is_zero():
        return q.primitive_part() if q else q
    if q.is_zero():
        return p.primitive_part()
    if p.is_constant() or q.is_constant():
        return Polynomial.const(p.syms, 1)
    # peel off the monomial content first; it also covers the monomial cases
    mp = _mono_content(p)
    mq = _mono_content(q)
    shared = mono_gcd(mp, mq)
    if not mono_is_one(mp):
        p = Polynomial(p.syms, {mono_div(m, mp): c for m, c in p.terms.items()}, _clean=False)
    if not mono_is_one(mq):
        q = Polynomial(q.syms, {mono_div(m, mq): c for m, c in q.terms.items()}, _clean=False)
    g = _gcd_primitive(p, q)
    if not mono_is_one(shared):
        g = Polynomial(g.syms, {mono_mul(m, shared): c for m, c in g.terms.items()}, _clean=False)
    return g


def _gcd_primitive(p, q):
    if p.is_constant() or q.is_constant():
        return Polynomial.const(p.syms, 1)
    if p == q:
        return p.primitive_part()
    # main variable: highest symbol index occurring in either
    v = max(
        max(i for m in p.terms for i, e in enumerate(m) if e),
        max(i for m in q.terms for i, e in enumerate(m) if e),
    )
    pc = _univar_coeffs(p, v)
    qc = _univar_coeffs(q, v)
    if len(pc) == 1 and 0 in pc:
        # p does not involve v after all (q does): gcd(p, cont_v(q))
        return _gcd_primitive(p, _univar_content(qc)) if not _univar_content(qc).is_constant() else Polynomial.const(p.syms, 1)
    if len(qc) == 1 and 0 in qc:
        return _gcd_primitive(q, _univar_content(pc)) if not _univar_content(pc).is_constant() else Polynomial.const(p.syms, 1)

    cont_p = _univar_content(pc)
    cont_q = _univar_content(qc)
    cont_gcd = poly_gcd(cont_p, cont_q)
    f = poly_divexact(p, cont_p)
    g = poly_divexact(q, cont_q)
    if max(_univar_coeffs(f, v)) < max(_univar_coeffs(g, v)):
        f, g = g, f
    while True:
        r = _pseudo_rem(f, g, v)
        if r.is_zero():
            break
        rc = _univar_coeffs(r, v)
        if max(rc) == 0:
            # nonzero remainder of degree 0 in v: the primitive parts are coprime in v
            g = Polynomial.const(p.syms, 1)
            break
        r = poly_divexact(r, _univar_content(rc))
        f, g = g, r
    result = (cont_gcd * g).primitive_part()
    return result


def poly_lcm(p, q):
    if p.is_zero() or q.is_zero():
        return Polynomial.zero(p.syms)
    g = poly_gcd(p, q)
    out = poly_divexact(p * q, g)
    return out.primitive_part()


class RationalFunction:
    """A reduced fraction num/den of polynomials over Q.

    Invariants: den is nonzero with first canonical coefficient exactly 1,
    gcd(num, den) is constant, and num is the zero polynomial only in the
    canonical zero 0/1.  Structural equality is semantic equality.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        if den is None:
            den = Polynomial.const(num.syms, 1)
        if den.is_zero():
            raise ZeroDenominator("rational function with zero denominator")
        if num.is_zero():
            self.num = num
            self.den = Polynomial.const(num.syms, 1)
            return
        if not _reduced:
            if den.is_constant():
                c = den.constant_term()
                num = num.scale(_ONE / c)
                den = Polynomial.const(num.syms, 1)
            else:
                g = poly_gcd(num, den)
                if not g.is_one():
                    num = poly_divexact(num, g)
                    den = poly_divexact(den, g)
                if den.is_constant():
                    num = num.scale(_ONE / den.constant_term())
                    den = Polynomial.const(num.syms, 1)
                else:
                    _, c = den.first_term()
                    if c != 1:
                        num = num.scale(_ONE / c)
                        den = den.scale(_ONE / c)
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p):
        return cls(p, None, _reduced=True)

    @classmethod
    def const(cls, syms, c):
        return cls(Polynomial.const(syms, c), None, _reduced=True)

    @property
    def syms(self):
        return self.num.syms

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def is_polynomial(self):
        return self.den.is_one()

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, Polynomial)):
            return self == RationalFunction(self.num._coerce(other) if isinstance(other, (int, Fraction)) else other)
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _reduced=True)

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction.from_poly(other)
        return RationalFunction.const(self.syms, other)

    def __add__(self, other):
        other = self._coerce(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        if self.den.is_one() and other.den.is_one():
            return RationalFunction(self.num + other.num, None, _reduced=True)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return RationalFunction.from_poly(Polynomial.zero(self.syms))
        if self.den.is_one() and other.den.is_one():
            return RationalFunction(self.num * other.num, None, _reduced=True)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def invert(self):
        if self.is_zero():
            raise ZeroDenominator("cannot invert the zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        return self * self._coerce(other).invert()

    def __repr__(self):
        return f"RationalFunction({render_ratfun(self)})"


def render_ratfun(f):
    """`(num)/(den)`, or the bare polynomial when the denominator is 1;
    one-term fractions compact to `(num/den)`."""
    if f.den.is_one():
        return render_polynomial(f.num)
    num = render_polynomial(f.num)
    den = render_polynomial(f.den)
    if len(f.num.terms) == 1 and len(f.den.terms) == 1:
        return f"({num}/{den})"
    return f"({num})/({den})"
