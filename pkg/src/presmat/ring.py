"""Sparse multivariate polynomial arithmetic over the rationals.

Monomials are exponent tuples, polynomials map monomials to Fraction
coefficients, and a RingContext fixes the variable list plus the
monomial order used for leading terms, normal forms and rendering.
"""

from __future__ import annotations

import re
from fractions import Fraction

NEG_INF = float("-inf")  # degree of the zero polynomial

_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


class ParseError(ValueError):
    """Raised for malformed polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _grevlex_key(expts):
    return (sum(expts), tuple(-e for e in reversed(expts)))


def _lex_key(expts):
    return expts


class RingContext:
    """Polynomial ring Q[x_1, ..., x_r] with a fixed monomial order.

    order is "grevlex" (default), "lex", or ("elim", k): a block order
    whose first k variables are compared lexicographically before the
    remaining variables are compared by grevlex. Any monomial involving
    a block variable then sorts above every monomial free of them, which
    is what elimination needs.
    """

    __slots__ = ("variables", "order", "_index", "_key")

    def __init__(self, variables, order="grevlex"):
        variables = tuple(variables)
        if not variables:
            raise ValueError("ring needs at least one variable")
        seen = set()
        for name in variables:
            if not isinstance(name, str) or not _IDENT_RE.fullmatch(name):
                raise ValueError(f"bad variable name: {name!r}")
            if name in seen:
                raise ValueError(f"duplicate variable name: {name!r}")
            seen.add(name)
        self.variables = variables
        self.order = order
        self._index = {name: i for i, name in enumerate(variables)}
        if order == "grevlex":
            self._key = _grevlex_key
        elif order == "lex":
            self._key = _lex_key
        elif isinstance(order, tuple) and len(order) == 2 and order[0] == "elim":
            k = order[1]
            if not 0 < k < len(variables):
                raise ValueError("elimination block size out of range")
            self._key = lambda e: (e[:k], _grevlex_key(e[k:]))
        else:
            raise ValueError(f"unknown monomial order: {order!r}")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def key(self, expts):
        """Sort key of a monomial; bigger key means bigger monomial."""
        return self._key(expts)

    def index(self, name: str) -> int:
        return self._index[name]

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = Fraction(c)
        zero = (0,) * self.nvars
        return Polynomial(self, {zero: c} if c else {})

    def variable(self, name: str) -> "Polynomial":
        e = [0] * self.nvars
        e[self._index[name]] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    def monomial(self, expts, coeff=1) -> "Polynomial":
        expts = tuple(expts)
        if len(expts) != self.nvars or any(e < 0 for e in expts):
            raise ValueError("bad exponent vector")
        c = Fraction(coeff)
        return Polynomial(self, {expts: c} if c else {})

    def parse(self, text: str) -> "Polynomial":
        return parse(text, self)

    def extend(self, new_variables, order=None) -> "RingContext":
        """New ring with extra variables appended; names must not collide."""
        clash = set(new_variables) & set(self.variables)
        if clash:
            raise ValueError(f"variable collision: {sorted(clash)}")
        return RingContext(self.variables + tuple(new_variables),
                           self.order if order is None else order)

    def __eq__(self, other):
        return (isinstance(other, RingContext)
                and self.variables == other.variables
                and self.order == other.order)

    def __hash__(self):
        return hash((self.variables, self.order))

    def __repr__(self):
        return f"RingContext({list(self.variables)}, order={self.order!r})"


class Polynomial:
    """Immutable sparse polynomial: exponent tuple -> nonzero Fraction."""

    __slots__ = ("ring", "terms", "_lead")

    def __init__(self, ring: RingContext, terms: dict):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if c}
        self._lead = None

    # -- basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def lead_monomial(self):
        if self._lead is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading term")
            self._lead = max(self.terms, key=self.ring._key)
        return self._lead

    def lead_coeff(self) -> Fraction:
        return self.terms[self.lead_monomial()]

    def degree(self):
        """Total degree; NEG_INF for the zero polynomial."""
        if not self.terms:
            return NEG_INF
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(m) for m in self.terms}
        return len(degrees) <= 1

    def constant_term(self) -> Fraction:
        zero = (0,) * self.ring.nvars
        return self.terms.get(zero, Fraction(0))

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    def is_unit(self) -> bool:
        """Nonzero constant (units of a polynomial ring over a field)."""
        return bool(self.terms) and self.is_constant()

    def sorted_terms(self):
        """Terms in descending monomial order."""
        return sorted(self.terms.items(), key=lambda t: self.ring._key(t[0]),
                      reverse=True)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("mismatched rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return self.ring.zero()
            return Polynomial(self.ring,
                              {m: k * c for m, k in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = terms.get(m, 0) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    del terms[m]
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def monic(self) -> "Polynomial":
        """Divide by the leading coefficient; zero stays zero."""
        if not self.terms:
            return self
        lc = self.lead_coeff()
        if lc == 1:
            return self
        return self * (Fraction(1) / lc)

    def evaluate(self, point) -> Fraction:
        """Value at a point given as one Fraction-like per ring variable."""
        values = [Fraction(v) for v in point]
        if len(values) != self.ring.nvars:
            raise ValueError("point length mismatch")
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(values, m):
                if e:
                    v *= x ** e
            total += v
        return total

    # -- rendering --------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.variables
        pieces = []
        for m, c in self.sorted_terms():
            factors = []
            for name, e in zip(names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors:
                body = str(abs(c))
            else:
                body = "*".join(factors)
                if abs(c) != 1:
                    body = f"{abs(c)}*{body}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self):
        return f"Polynomial({self})"


def render(p: Polynomial) -> str:
    return str(p)


def embed(p: Polynomial, ring: RingContext) -> Polynomial:
    """Reinterpret p in a ring that contains all of p's variables by name."""
    if p.ring == ring:
        return p
    try:
        positions = [ring.index(name) for name in p.ring.variables]
    except KeyError as e:
        raise ValueError(f"target ring lacks variable {e.args[0]!r}") from None
    terms = {}
    for m, c in p.terms.items():
        e = [0] * ring.nvars
        for pos, exp in zip(positions, m):
            e[pos] = exp
        terms[tuple(e)] = c
    return Polynomial(ring, terms)


# -- parsing ---------------------------------------------------------------

_TOKEN_RE = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+)
  | (?P<name>[A-Za-z][A-Za-z0-9_]*)
  | (?P<op>[-+*^()/])
""", re.VERBOSE)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    """Recursive descent for:  expr := term (('+'|'-') term)*
    term := factor ('*' factor)*;  factor := ('-'|'+')* atom ('^' int)?
    atom := int ('/' int)? | name | '(' expr ')'
    """

    def __init__(self, text: str, ring: RingContext):
        self.tokens = _tokenize(text)
        self.ring = ring
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str):
        kind, val, pos = self.peek()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos)
        return self.take()

    def parse(self) -> Polynomial:
        p = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", pos)
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                q = self.term()
                p = p + q if val == "+" else p - q
            else:
                return p

    def term(self) -> Polynomial:
        p = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                p = p * self.factor()
            else:
                return p

    def factor(self) -> Polynomial:
        sign = 1
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                if val == "-":
                    sign = -sign
            else:
                break
        p = self.atom()
        kind, val, pos = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val, pos = self.peek()
            if kind != "num":
                raise ParseError("exponent must be a nonnegative integer", pos)
            self.take()
            p = p ** int(val)
        return p if sign == 1 else -p

    def atom(self) -> Polynomial:
        kind, val, pos = self.take()
        if kind == "num":
            value = Fraction(int(val))
            kind2, val2, _ = self.peek()
            if kind2 == "op" and val2 == "/":
                self.take()
                kind3, val3, pos3 = self.peek()
                if kind3 != "num":
                    raise ParseError("denominator must be an integer", pos3)
                self.take()
                if int(val3) == 0:
                    raise ParseError("zero denominator", pos3)
                value = Fraction(int(val), int(val3))
            return self.ring.constant(value)
        if kind == "name":
            if val not in self.ring._index:
                raise ParseError(f"unknown variable {val!r}", pos)
            return self.ring.variable(val)
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        raise ParseError(f"unexpected {val!r}" if val else "unexpected end of input", pos)


def parse(text: str, ring: RingContext) -> Polynomial:
    return _Parser(text, ring).parse()


# -- division and gcd -------------------------------------------------------

def exact_div(p: Polynomial, q: Polynomial) -> Polynomial:
    """Quotient p/q when the division is exact; raises otherwise."""
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if p.is_zero():
        return p
    if p.ring != q.ring:
        raise ValueError("mismatched rings")
    ring = p.ring
    qm, qc = q.lead_monomial(), q.lead_coeff()
    rem = dict(p.terms)
    quot: dict = {}
    key = ring._key
    while rem:
        m = max(rem, key=key)
        c = rem[m]
        f = tuple(a - b for a, b in zip(m, qm))
        if any(e < 0 for e in f):
            raise ValueError("division is not exact")
        fc = c / qc
        quot[f] = quot.get(f, 0) + fc
        # rem -= fc * x^f * q
        for m2, c2 in q.terms.items():
            mm = tuple(a + b for a, b in zip(f, m2))
            s = rem.get(mm, 0) - fc * c2
            if s:
                rem[mm] = s
            else:
                rem.pop(mm, None)
    return Polynomial(ring, quot)


def divides(q: Polynomial, p: Polynomial) -> bool:
    try:
        exact_div(p, q)
        return True
    except (ValueError, ZeroDivisionError):
        return False


def _mono_content(p: Polynomial):
    """Exponent-wise min over the support."""
    it = iter(p.terms)
    lo = list(next(it))
    for m in it:
        for i, e in enumerate(m):
            if e < lo[i]:
                lo[i] = e
    return tuple(lo)


def _shift_down(p: Polynomial, mono) -> Polynomial:
    return Polynomial(p.ring, {tuple(a - b for a, b in zip(m, mono)): c
                               for m, c in p.terms.items()})


def _as_univariate(p: Polynomial, v: int) -> dict:
    """View p in its last active variable: degree -> coefficient Polynomial."""
    coeffs: dict = {}
    for m, c in p.terms.items():
        d = m[v]
        rest = m[:v] + (0,) + m[v + 1:]
        bucket = coeffs.setdefault(d, {})
        bucket[rest] = bucket.get(rest, 0) + c
    return {d: Polynomial(p.ring, t) for d, t in coeffs.items()}


def _from_univariate(coeffs: dict, v: int, ring: RingContext) -> Polynomial:
    terms: dict = {}
    for d, poly in coeffs.items():
        for m, c in poly.terms.items():
            mm = m[:v] + (d,) + m[v + 1:]
            terms[mm] = terms.get(mm, 0) + c
    return Polynomial(ring, terms)


def _uni_prem(f: dict, g: dict, v: int, ring: RingContext) -> dict:
    """Pseudo-remainder of univariate views (coefficients are Polynomials)."""
    dg = max(g)
    lcg = g[dg]
    r = dict(f)
    while r and max(r) >= dg:
        dr = max(r)
        lcr = r[dr]
        new: dict = {}
        for d, c in r.items():
            new[d] = c * lcg
        for d, c in g.items():
            dd = d + dr - dg
            s = new.get(dd, ring.zero()) - c * lcr
            if s.is_zero():
                new.pop(dd, None)
            else:
                new[dd] = s
        r = {d: c for d, c in new.items() if not c.is_zero()}
    return r


def gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """GCD normalized to leading coefficient 1; gcd(p,0) = monic p."""
    if isinstance(p, Polynomial) and isinstance(q, Polynomial) and p.ring != q.ring:
        raise ValueError("mismatched rings")
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    ring = p.ring
    mp, mq = _mono_content(p), _mono_content(q)
    common = tuple(min(a, b) for a, b in zip(mp, mq))
    p1, q1 = _shift_down(p, mp), _shift_down(q, mq)
    core = _gcd_primitive(p1, q1)
    out = core * ring.monomial(common)
    return out.monic()


def _gcd_primitive(p: Polynomial, q: Polynomial) -> Polynomial:
    """GCD of monomial-content-free polynomials."""
    ring = p.ring
    if len(p.terms) == 1 or len(q.terms) == 1:
        # a monomial with zero content is a constant
        if len(p.terms) == 1 and sum(next(iter(p.terms))) == 0:
            return ring.one()
        if len(q.terms) == 1 and sum(next(iter(q.terms))) == 0:
            return ring.one()
    # main variable: last one active in both
    v = None
    for i in range(ring.nvars - 1, -1, -1):
        if any(m[i] for m in p.terms) and any(m[i] for m in q.terms):
            v = i
            break
    if v is None:
        # no shared variable, and neither is a constant multiple of the other
        return ring.one()
    fu, gu = _as_univariate(p, v), _as_univariate(q, v)
    cf = _content(fu)
    cg = _content(gu)
    fp = {d: exact_div(c, cf) for d, c in fu.items()}
    gp = {d: exact_div(c, cg) for d, c in gu.items()}
    while True:
        if not gp:
            h = fp
            break
        if max(gp) == 0:
            # nonzero constant (in the main variable) divides everything
            h = {0: ring.one()}
            break
        if max(fp) < max(gp):
            fp, gp = gp, fp
            continue
        r = _uni_prem(fp, gp, v, ring)
        if not r:
            h = gp
            break
        cr = _content(r)
        fp, gp = gp, {d: exact_div(c, cr) for d, c in r.items()}
    hp = _from_univariate(h, v, ring)
    return hp * gcd(cf, cg)


def _content(u: dict) -> Polynomial:
    """GCD of the coefficient polynomials of a univariate view."""
    it = iter(sorted(u))
    acc = u[next(it)]
    for d in it:
        acc = gcd(acc, u[d])
        if acc.is_unit():
            break
    return acc.monic()
