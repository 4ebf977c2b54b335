"""Sparse exact multivariate polynomials over arbitrary-precision rationals.

Variables live in a VarTable split into space variables (x) and deformation
parameters (s).  Coefficients are fractions.Fraction, always reduced.  Terms
are kept in a dict keyed by exponent tuples; printing and leading-term
selection use the global degrevlex order, so equal values have equal
canonical representations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd as int_gcd


@dataclass(frozen=True)
class VarTable:
    """Ordered variable names: space variables first, then parameters."""

    x_vars: tuple
    s_vars: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "x_vars", tuple(self.x_vars))
        object.__setattr__(self, "s_vars", tuple(self.s_vars))
        names = self.x_vars + self.s_vars
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        if not self.x_vars:
            raise ValueError("need at least one space variable")
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    @property
    def names(self):
        return self.x_vars + self.s_vars

    @property
    def nx(self):
        return len(self.x_vars)

    @property
    def nvars(self):
        return len(self.x_vars) + len(self.s_vars)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise KeyError("unknown variable %r" % name) from None


def degrevlex_key(expts):
    """Sort key: larger key = larger monomial in degrevlex."""
    return (sum(expts), tuple(-e for e in reversed(expts)))


def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a, b):
    """a / b, or None when b does not divide a."""
    d = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in d):
        return None
    return d


def monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


@dataclass(frozen=True)
class MonomialOrder:
    """Total term order on x-monomials; ties broken by VarTable order."""

    kind: str = "degrevlex"

    def key(self, expts):
        if self.kind == "degrevlex":
            return degrevlex_key(expts)
        if self.kind == "lex":
            return tuple(expts)
        raise ValueError("unknown order %r" % self.kind)


DEGREVLEX = MonomialOrder("degrevlex")


class Polynomial:
    """Immutable sparse polynomial attached to a VarTable."""

    __slots__ = ("vt", "terms")

    def __init__(self, vt, terms=None):
        self.vt = vt
        clean = {}
        if terms:
            for m, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[tuple(m)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, vt):
        return cls(vt)

    @classmethod
    def const(cls, vt, c):
        c = Fraction(c)
        if not c:
            return cls(vt)
        return cls(vt, {(0,) * vt.nvars: c})

    @classmethod
    def var(cls, vt, name):
        i = vt.index(name)
        m = tuple(1 if j == i else 0 for j in range(vt.nvars))
        return cls(vt, {m: Fraction(1)})

    @classmethod
    def monomial(cls, vt, expts, c=1):
        return cls(vt, {tuple(expts): Fraction(c)})

    # -- predicates --------------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    @property
    def is_constant(self):
        z = (0,) * self.vt.nvars
        return all(m == z for m in self.terms)

    def constant_value(self):
        if self.is_zero:
            return Fraction(0)
        if not self.is_constant:
            raise ValueError("polynomial is not constant: %s" % self)
        return next(iter(self.terms.values()))

    def variables_used(self):
        used = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used.add(i)
        return used

    def total_degree(self):
        if self.is_zero:
            return -1
        return max(sum(m) for m in self.terms)

    def degree_in(self, name):
        i = self.vt.index(name)
        if self.is_zero:
            return -1
        return max(m[i] for m in self.terms)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if self.vt is not other.vt and self.vt != other.vt:
            raise ValueError("mismatched variable tables")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(self.vt, other)
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Polynomial(self.vt, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.vt, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(self.vt, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return Polynomial(self.vt)
            return Polynomial(self.vt, {m: k * c for m, k in self.terms.items()})
        self._check(other)
        if len(self.terms) > len(other.terms):
            self, other = other, self
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial(self.vt, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative exponent")
        out = Polynomial.const(self.vt, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(self.vt, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.vt == other.vt and self.terms == other.terms

    def __hash__(self):
        return hash((self.vt, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- calculus / evaluation --------------------------------------------

    def diff(self, name):
        i = self.vt.index(name)
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                m2 = m[:i] + (e - 1,) + m[i + 1:]
                out[m2] = out.get(m2, 0) + c * e
        return Polynomial(self.vt, out)

    def evaluate(self, assignment):
        """Substitute rationals for a subset of the variables."""
        idx = {self.vt.index(k): Fraction(v) for k, v in assignment.items()}
        out = {}
        for m, c in self.terms.items():
            for i, v in idx.items():
                c = c * v ** m[i]
            m2 = tuple(0 if i in idx else e for i, e in enumerate(m))
            s = out.get(m2, 0) + c
            if s:
                out[m2] = s
            else:
                out.pop(m2, None)
        return Polynomial(self.vt, out)

    # -- leading data (global degrevlex) ----------------------------------

    def lead_monomial(self):
        if self.is_zero:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=degrevlex_key)

    def lead_coeff(self):
        return self.terms[self.lead_monomial()]

    def sorted_terms(self):
        """Terms in descending degrevlex, the canonical print order."""
        return sorted(self.terms.items(), key=lambda t: degrevlex_key(t[0]),
                      reverse=True)

    # -- printing ----------------------------------------------------------

    def _monomial_str(self, m):
        parts = []
        for name, e in zip(self.vt.names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append("%s^%d" % (name, e))
        return "*".join(parts)

    def __str__(self):
        if self.is_zero:
            return "0"
        chunks = []
        for m, c in self.sorted_terms():
            mono = self._monomial_str(m)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = "%s*%s" % (mag, mono)
            if not chunks:
                chunks.append(body if c > 0 else "-" + body)
            else:
                chunks.append((" + " if c > 0 else " - ") + body)
        return "".join(chunks)

    def __repr__(self):
        return "Polynomial(%s)" % self


# -- content, gcd, exact division -----------------------------------------


def rational_content(p):
    """Positive rational c with p/c integer-primitive; 0 for the zero poly."""
    if p.is_zero:
        return Fraction(0)
    num = 0
    den = 1
    for c in p.terms.values():
        num = int_gcd(num, abs(c.numerator))
        den = den * c.denominator // int_gcd(den, c.denominator)
    return Fraction(num, den)


def make_primitive(p):
    """Divide out the rational content and force a positive leading coeff."""
    if p.is_zero:
        return p
    c = rational_content(p)
    if p.lead_coeff() < 0:
        c = -c
    return p * (1 / c)


def exact_divide(a, b):
    """Return a / b when b divides a exactly, else None."""
    if b.is_zero:
        raise ZeroDivisionError("division by zero polynomial")
    if a.is_zero:
        return Polynomial(a.vt)
    lm_b = b.lead_monomial()
    lc_b = b.lead_coeff()
    q = {}
    r = a
    while not r.is_zero:
        m = r.lead_monomial()
        d = monomial_div(m, lm_b)
        if d is None:
            return None
        c = r.terms[m] / lc_b
        q[d] = c
        r = r - Polynomial.monomial(a.vt, d, c) * b
    return Polynomial(a.vt, q)


def _coeffs_in(p, i):
    """p as univariate in variable index i: degree -> coefficient poly."""
    out = {}
    for m, c in p.terms.items():
        e = m[i]
        m2 = m[:i] + (0,) + m[i + 1:]
        cf = out.setdefault(e, {})
        s = cf.get(m2, 0) + c
        if s:
            cf[m2] = s
        else:
            cf.pop(m2, None)
    return {e: Polynomial(p.vt, cf) for e, cf in out.items() if cf}


def _from_coeffs(vt, i, coeffs):
    out = {}
    for e, poly in coeffs.items():
        for m, c in poly.terms.items():
            m2 = m[:i] + (e,) + m[i + 1:]
            out[m2] = c
    return Polynomial(vt, out)


def _pseudo_rem(a, b, i):
    """Pseudo-remainder of a by b, both univariate in variable index i."""
    ca = _coeffs_in(a, i)
    cb = _coeffs_in(b, i)
    db = max(cb)
    lc_b = cb[db]
    r = a
    var_mono = tuple(1 if j == i else 0 for j in range(a.vt.nvars))
    xv = Polynomial(a.vt, {var_mono: Fraction(1)})
    while True:
        cr = _coeffs_in(r, i)
        if not cr:
            return r
        dr = max(cr)
        if dr < db:
            return r
        r = lc_b * r - cr[dr] * xv ** (dr - db) * b
        # the cancelled leading coefficient keeps the loop finite


def _content_wrt(coeffs):
    g = None
    for poly in coeffs.values():
        g = poly if g is None else poly_gcd(g, poly)
        if g.is_constant and not g.is_zero:
            break
    return g


def poly_gcd(a, b):
    """Primitive gcd, positive leading coefficient (primitive PRS)."""
    if a.is_zero:
        return make_primitive(b)
    if b.is_zero:
        return make_primitive(a)
    used = a.variables_used() | b.variables_used()
    if not used:
        return Polynomial.const(a.vt, 1)
    i = max(used)
    if i not in a.variables_used() or i not in b.variables_used():
        # one operand is free of the main variable: gcd divides its content
        if i in a.variables_used():
            a, b = b, a
        cb = _content_wrt(_coeffs_in(b, i))
        return poly_gcd(a, cb)
    ca = _content_wrt(_coeffs_in(a, i))
    cb = _content_wrt(_coeffs_in(b, i))
    cont = poly_gcd(ca, cb)
    f = exact_divide(a, ca)
    g = exact_divide(b, cb)
    if max(_coeffs_in(f, i)) < max(_coeffs_in(g, i)):
        f, g = g, f
    while True:
        r = _pseudo_rem(f, g, i)
        if r.is_zero:
            break
        cr = _content_wrt(_coeffs_in(r, i))
        r = exact_divide(r, cr)
        f, g = g, r
        if i not in g.variables_used():
            return make_primitive(cont)
    gprim = exact_divide(g, _content_wrt(_coeffs_in(g, i)))
    return make_primitive(cont * gprim)


def poly_gcd_list(polys):
    g = None
    for p in polys:
        if p.is_zero:
            continue
        g = p if g is None else poly_gcd(g, p)
    return g


def squarefree_core(p):
    """p divided by gcd(p, all partials); shares the zero set with p."""
    if p.is_zero or p.is_constant:
        return make_primitive(p) if not p.is_zero else p
    g = p
    for i in sorted(p.variables_used()):
        g = poly_gcd(g, p.diff(p.vt.names[i]))
    return make_primitive(exact_divide(p, g))
