"""Rational generating functions, exactly.

Three engines live here:

* closed-form evaluation of multinomial-coefficient sums as rational
  functions of t, by degree-lowering recursion on the polynomial part and
  boundary splitting on the shift vector;
* the formal torus constant term and the Weyl-integration pairing that
  turns equivariant Hilbert-series coefficients into plain ones;
* reconstruction of a rational function from finitely many series
  coefficients by exact linear solving over the fraction field of the
  coefficient ring, with the denominator degree minimized.

Coefficients are Fractions, or sparse multivariate polynomials over the
rationals when a series has polynomial coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import factorial

# ---------------------------------------------------------------------------
# multivariate polynomials over Q, and their fractions


class MPoly:
    """Sparse multivariate polynomial with Fraction coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        cleaned: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for expo, c in terms.items():
                c = Fraction(c)
                if c:
                    expo = tuple(int(x) for x in expo)
                    if len(expo) != nvars:
                        raise ValueError(
                            f"exponent {expo} has wrong arity for {nvars} variables"
                        )
                    cleaned[expo] = c
        self.terms = cleaned

    @staticmethod
    def constant(nvars: int, c) -> "MPoly":
        return MPoly(nvars, {(0,) * nvars: Fraction(c)})

    @staticmethod
    def variable(nvars: int, i: int) -> "MPoly":
        expo = tuple(1 if j == i else 0 for j in range(nvars))
        return MPoly(nvars, {expo: Fraction(1)})

    def _coerce(self, other):
        if isinstance(other, MPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.constant(self.nvars, other)
        return None

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return MPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, MPoly):
            return NotImplemented
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return MPoly(self.nvars, out)

    __rmul__ = __mul__

    def leading(self):
        """Leading (exponent, coefficient) in graded-lex order."""
        key = max(self.terms, key=lambda e: (sum(e), e))
        return key, self.terms[key]

    def exact_div(self, other: "MPoly"):
        """Quotient self/other when the division is exact, else None."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        remainder = self
        quotient = MPoly(self.nvars)
        lead_e, lead_c = other.leading()
        while remainder:
            re, rc = remainder.leading()
            qe = tuple(a - b for a, b in zip(re, lead_e))
            if any(x < 0 for x in qe):
                return None
            term = MPoly(self.nvars, {qe: rc / lead_c})
            quotient = quotient + term
            remainder = remainder - term * other
        return quotient

    def __str__(self):
        if not self.terms:
            return "0"
        names = _var_names(self.nvars)
        bits = []
        for e in sorted(self.terms, key=lambda t: (sum(t), t)):
            c = self.terms[e]
            factors = [
                names[i] + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k
            ]
            if not factors:
                bits.append(str(c))
            elif c == 1:
                bits.append("*".join(factors))
            elif c == -1:
                bits.append("-" + "*".join(factors))
            else:
                bits.append(str(c) + "*" + "*".join(factors))
        return " + ".join(bits).replace("+ -", "- ")

    __repr__ = __str__


def _var_names(nvars: int) -> list[str]:
    if nvars <= 4:
        return ["s", "w", "u", "v"][:nvars]
    return [f"x{i}" for i in range(nvars)]


class MFrac:
    """Fraction of multivariate polynomials, reduced opportunistically."""

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly | None = None):
        if den is None:
            den = MPoly.constant(num.nvars, 1)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if num:
            q = num.exact_div(den)
            if q is not None:
                num, den = q, MPoly.constant(num.nvars, 1)
        else:
            den = MPoly.constant(num.nvars, 1)
        self.num = num
        self.den = den

    def _coerce(self, other):
        if isinstance(other, MFrac):
            return other
        if isinstance(other, MPoly):
            return MFrac(other)
        if isinstance(other, (int, Fraction)):
            return MFrac(MPoly.constant(self.num.nvars, other))
        return None

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return MFrac(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return MFrac(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return MFrac(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero")
        return MFrac(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def as_poly(self) -> MPoly | None:
        """The underlying polynomial when the denominator is a rational constant."""
        expos = list(self.den.terms)
        if expos == [(0,) * self.den.nvars]:
            return self.num * (1 / self.den.terms[expos[0]])
        return None

    def __str__(self):
        p = self.as_poly()
        if p is not None:
            return str(p)
        return f"({self.num})/({self.den})"

    __repr__ = __str__


# ---------------------------------------------------------------------------
# coefficient-ring adapters


class _RationalRing:
    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def from_value(x):
        return Fraction(x)

    @staticmethod
    def to_field(x):
        return Fraction(x)

    @staticmethod
    def from_field(x):
        return Fraction(x)


QQ = _RationalRing()


class PolynomialRing:
    """Multivariate polynomials over Q as a coefficient ring for series in t."""

    def __init__(self, nvars: int):
        self.name = f"QQ[{','.join(_var_names(nvars))}]"
        self.nvars = nvars
        self.zero = MPoly(nvars)
        self.one = MPoly.constant(nvars, 1)

    def from_value(self, x):
        if isinstance(x, MFrac):
            p = x.as_poly()
            if p is None:
                return x
            x = p
        if isinstance(x, MPoly):
            if x.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return x
        return MPoly.constant(self.nvars, x)

    def to_field(self, x):
        if isinstance(x, MFrac):
            return x
        return MFrac(self.from_value(x))

    def from_field(self, x):
        if isinstance(x, MFrac):
            p = x.as_poly()
            return p if p is not None else x
        return self.from_value(x)

    def variable(self, i: int) -> MPoly:
        return MPoly.variable(self.nvars, i)


# ---------------------------------------------------------------------------
# univariate polynomial helpers (coefficient type is duck-typed)


def _trim(coeffs):
    out = list(coeffs)
    while out and not out[-1]:
        out.pop()
    return out


def _poly_add(a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        if i < len(a) and i < len(b):
            out.append(a[i] + b[i])
        elif i < len(a):
            out.append(a[i])
        else:
            out.append(b[i])
    return _trim(out)


def _poly_neg(a):
    return [-c for c in a]


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [None] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod = x * y
            out[i + j] = prod if out[i + j] is None else out[i + j] + prod
    return _trim([c if c is not None else a[0] * 0 for c in out])


def _poly_derivative(p):
    return _trim([p[i] * i for i in range(1, len(p))])


def _poly_mod_q(a, b):
    r = list(a)
    while r and len(r) >= len(b):
        lead = r[-1] / b[-1]
        shift = len(r) - len(b)
        if lead:
            for i, c in enumerate(b):
                r[i + shift] -= lead * c
        r.pop()
        r = _trim(r)
    return r


def _poly_gcd_q(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _poly_mod_q(a, b)
    if a:
        inv = 1 / a[-1]
        a = [c * inv for c in a]
    return a


def _poly_exact_div_q(a, b):
    a = list(a)
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        coeff = a[i + len(b) - 1] / b[-1]
        out[i] = coeff
        if coeff:
            for j, c in enumerate(b):
                a[i + j] -= coeff * c
    assert not _trim(a), "division was not exact"
    return _trim(out)


class RationalFunction:
    """Quotient of polynomials in t; the denominator has constant term one."""

    __slots__ = ("num", "den", "ring")

    def __init__(self, num, den=None, ring=QQ):
        self.ring = ring
        num = _trim([self._lift(c) for c in num])
        den = _trim([self._lift(c) for c in (den if den is not None else [ring.one])])
        if not den:
            raise ZeroDivisionError("zero denominator")
        while den and not den[0]:
            if num and num[0]:
                raise ValueError("not a power series: denominator vanishes at t=0")
            num = num[1:] if num else num
            den = den[1:]
            if not den:
                raise ZeroDivisionError("denominator is a power of t only")
        if ring is QQ and num:
            g = _poly_gcd_q(num, den)
            if len(g) > 1:
                num = _poly_exact_div_q(num, g)
                den = _poly_exact_div_q(den, g)
        if den[0] != ring.one:
            num, den = self._normalize_unit(num, den)
        self.num = num
        self.den = den

    def _lift(self, c):
        if isinstance(c, MFrac):
            return self.ring.from_field(c)
        return self.ring.from_value(c)

    def _normalize_unit(self, num, den):
        c0 = den[0]
        field_inv = 1 / self.ring.to_field(c0) if not isinstance(c0, Fraction) else 1 / c0
        num = [self.ring.from_field(self.ring.to_field(x) * field_inv) for x in num]
        den = [self.ring.from_field(self.ring.to_field(x) * field_inv) for x in den]
        return num, den

    @staticmethod
    def constant(c, ring=QQ) -> "RationalFunction":
        return RationalFunction([c], ring=ring)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        diff = _poly_add(
            _poly_mul(self.num, other.den), _poly_neg(_poly_mul(other.num, self.den))
        )
        return not diff

    def __add__(self, other):
        num = _poly_add(_poly_mul(self.num, other.den), _poly_mul(other.num, self.den))
        return RationalFunction(num, _poly_mul(self.den, other.den), self.ring)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __mul__(self, other):
        return RationalFunction(
            _poly_mul(self.num, other.num), _poly_mul(self.den, other.den), self.ring
        )

    def scale(self, c) -> "RationalFunction":
        c = self._lift(c)
        return RationalFunction([x * c for x in self.num], self.den, self.ring)

    def shift(self, n: int) -> "RationalFunction":
        """Multiply by t**n; for negative n the numerator must be divisible."""
        if n >= 0:
            return RationalFunction([self.ring.zero] * n + self.num, self.den, self.ring)
        if any(self.num[:-n]):
            raise ValueError(f"numerator not divisible by t^{-n}")
        return RationalFunction(self.num[-n:], self.den, self.ring)

    def euler_operator(self) -> "RationalFunction":
        """Apply t * d/dt."""
        dnum = _poly_derivative(self.num)
        dden = _poly_derivative(self.den)
        num = _poly_add(
            _poly_mul(dnum, self.den), _poly_neg(_poly_mul(self.num, dden))
        )
        return RationalFunction(num, _poly_mul(self.den, self.den), self.ring).shift(1)

    def coefficients(self, n: int) -> list:
        """First n power-series coefficients."""
        out = []
        for k in range(n):
            value = self.num[k] if k < len(self.num) else self.ring.zero
            for i in range(1, min(k, len(self.den) - 1) + 1):
                value = value - self.den[i] * out[k - i]
            out.append(value)
        return out

    def denominator_degree(self) -> int:
        return len(self.den) - 1

    def to_json(self) -> dict:
        return {
            "num": {str(i): str(c) for i, c in enumerate(self.num) if c},
            "den": {str(i): str(c) for i, c in enumerate(self.den) if c},
        }

    def __repr__(self):
        return f"RationalFunction(num={self.num}, den={self.den})"


# ---------------------------------------------------------------------------
# multinomial-coefficient sums


def multinomial(vec) -> int:
    if any(x < 0 for x in vec):
        return 0
    out = factorial(sum(vec))
    for x in vec:
        out //= factorial(x)
    return out


def multinomial_sum_rational(poly, e, d: int) -> RationalFunction:
    """Closed form of the sum over non-negative k of p(k) C_{k+e} t^{|k|}.

    poly maps exponent tuples of length d to rational coefficients (a bare
    number means a constant polynomial); C is the multinomial coefficient,
    zero on vectors with a negative entry.  Recursion: a variable k_i in the
    polynomial part is traded for a shift of e_i and an application of
    t d/dt, and shifted plain sums are split along the boundary until the
    closed form 1/(1 - d t) applies.
    """
    if d < 0:
        raise ValueError("d must be non-negative")
    e = tuple(int(x) for x in e)
    if len(e) != d:
        raise ValueError(f"shift vector {e} has wrong length for d={d}")
    if isinstance(poly, (int, Fraction)):
        poly = {(0,) * d: Fraction(poly)}
    elif isinstance(poly, MPoly):
        poly = poly.terms
    total = RationalFunction([], ring=QQ)
    for expo, c in poly.items():
        expo = tuple(int(x) for x in expo)
        if len(expo) != d:
            raise ValueError(f"monomial {expo} has wrong arity for d={d}")
        total = total + _monomial_sum(expo, e, d).scale(Fraction(c))
    return total


@cache
def _monomial_sum(expo, e, d) -> RationalFunction:
    if not any(expo):
        return _base_sum(e, d)
    i = next(idx for idx, x in enumerate(expo) if x)
    expo2 = expo[:i] + (expo[i] - 1,) + expo[i + 1 :]
    e2 = e[:i] + (e[i] - 1,) + e[i + 1 :]
    lowered = _monomial_sum(expo2, e2, d)
    result = lowered.euler_operator() + lowered.scale(sum(e))
    if e[i]:
        result = result - _monomial_sum(expo2, e, d).scale(e[i])
    return result


@cache
def _base_sum(e, d) -> RationalFunction:
    # sum over k >= 0 of C_{k+e} t^{|k|}
    if d == 0:
        return RationalFunction.constant(1)
    eplus = tuple(max(x, 0) for x in e)
    return _tail_sum(eplus, d).shift(-sum(e))


@cache
def _tail_sum(eb, d) -> RationalFunction:
    # sum over m >= eb (componentwise, eb >= 0) of C_m t^{|m|}
    if d == 0:
        return RationalFunction.constant(1)
    if not any(eb):
        return RationalFunction([Fraction(1)], [Fraction(1), Fraction(-d)])
    i = next(idx for idx, x in enumerate(eb) if x)
    result = _tail_sum(eb[:i] + (0,) + eb[i + 1 :], d)
    rest = eb[:i] + eb[i + 1 :]
    s = sum(rest)
    for c in range(eb[i]):
        qpoly = _binomial_in_total(c, s, d - 1)
        inner = multinomial_sum_rational(qpoly, rest, d - 1)
        result = result - inner.shift(c + s)
    return result


def _binomial_in_total(c: int, offset: int, nvars: int) -> dict:
    """binom(|k| + offset + c, c) expanded as a polynomial in k_1..k_nvars."""
    acc = MPoly.constant(nvars, Fraction(1, factorial(c)))
    total = MPoly(nvars)
    for i in range(nvars):
        total = total + MPoly.variable(nvars, i)
    for j in range(1, c + 1):
        acc = acc * (total + MPoly.constant(nvars, offset + j))
    return dict(acc.terms) if acc else {(0,) * nvars: Fraction(0)}


def denominator_pole_factors(rf: RationalFunction, d: int) -> dict[int, int]:
    """Multiplicities of (1 - a t) factors, a = 1..d, in the denominator.

    Raises if anything else divides the denominator.
    """
    den = list(rf.den)
    factors: dict[int, int] = {}
    for a in range(1, d + 1):
        while len(den) > 1:
            quotient, rem = _divmod_linear(den, a)
            if rem:
                break
            den = quotient
            factors[a] = factors.get(a, 0) + 1
    if len(den) != 1:
        raise ValueError(f"denominator has unexpected factors: {den}")
    return factors


def _divmod_linear(p, a: int):
    """Divide p by (1 - a t); returns (quotient, remainder constant)."""
    n = len(p) - 1
    quotient = [Fraction(0)] * n
    quotient[n - 1] = p[n] / Fraction(-a)
    for i in range(n - 1, 0, -1):
        quotient[i - 1] = (quotient[i] - p[i]) / Fraction(a)
    rem = p[0] - quotient[0]
    return _trim(quotient), rem


# ---------------------------------------------------------------------------
# torus constant terms and the Weyl pairing


class LaurentPolynomial:
    """Finite Fraction-combination of torus characters (integer exponents)."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        cleaned: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for expo, c in terms.items():
                c = Fraction(c)
                if c:
                    expo = tuple(int(x) for x in expo)
                    if len(expo) != nvars:
                        raise ValueError("exponent arity mismatch")
                    cleaned[expo] = c
        self.terms = cleaned

    @staticmethod
    def one(nvars: int) -> "LaurentPolynomial":
        return LaurentPolynomial(nvars, {(0,) * nvars: Fraction(1)})

    @staticmethod
    def monomial(nvars: int, expo, c=1) -> "LaurentPolynomial":
        return LaurentPolynomial(nvars, {tuple(expo): Fraction(c)})

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return LaurentPolynomial(self.nvars, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __mul__(self, other):
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return LaurentPolynomial(self.nvars, out)

    def scale(self, c):
        return LaurentPolynomial(
            self.nvars, {e: v * Fraction(c) for e, v in self.terms.items()}
        )

    def __eq__(self, other):
        return (
            isinstance(other, LaurentPolynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __repr__(self):
        return f"LaurentPolynomial({self.nvars}, {self.terms})"


def torus_constant_term(x: LaurentPolynomial) -> Fraction:
    """Coefficient of the trivial character."""
    return x.terms.get((0,) * x.nvars, Fraction(0))


def discriminant_squared(d: int) -> LaurentPolynomial:
    """Product over i<j of (a_i - a_j) times the same with inverted variables."""
    result = LaurentPolynomial.one(d)
    for i in range(d):
        for j in range(i + 1, d):
            for sign in (1, -1):
                diff = LaurentPolynomial(
                    d,
                    {
                        tuple(sign if k == i else 0 for k in range(d)): Fraction(1),
                        tuple(sign if k == j else 0 for k in range(d)): Fraction(-1),
                    },
                )
                result = result * diff
    return result


def weyl_series(d: int, torus_coeffs, num_terms: int | None = None) -> list[Fraction]:
    """Plain Hilbert-series coefficients from torus-equivariant ones.

    Each t-coefficient is multiplied by the squared discriminant; the
    geometric series in the inverted variables is expanded exactly to the
    power forced by degree matching, so the pairing reduces to summing the
    non-negative monomials against multinomial coefficients, scaled by 1/d!.
    """
    if d < 1:
        raise ValueError("d must be positive")
    if num_terms is None:
        num_terms = len(torus_coeffs)
    if num_terms > len(torus_coeffs):
        raise ValueError("not enough torus coefficients supplied")
    disc = discriminant_squared(d)
    out = []
    for n in range(num_terms):
        c_n = torus_coeffs[n]
        if c_n.nvars != d:
            raise ValueError("torus coefficient arity mismatch")
        paired = c_n * disc
        total = Fraction(0)
        for expo, c in paired.terms.items():
            if all(x >= 0 for x in expo):
                total += c * multinomial(expo)
        out.append(total / factorial(d))
    return out


def geometric_torus_coefficients(d: int, n_terms: int) -> list[LaurentPolynomial]:
    """Torus coefficients of the standard polynomial algebra on d characters:
    coefficient n is the sum of all degree-n monomials."""
    out = []
    for n in range(n_terms):
        out.append(
            LaurentPolynomial(d, {expo: Fraction(1) for expo in _compositions_of(n, d)})
        )
    return out


def _compositions_of(total: int, length: int):
    if length == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in _compositions_of(total - first, length - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# rational reconstruction from truncated series


def rational_reconstruct(coeffs, max_den_degree: int, ring=None):
    """Minimal-denominator rational function matching the given coefficients.

    Needs at least 2*max_den_degree + 2 coefficients.  For each candidate
    denominator degree, ascending, the linear system forcing the product of
    denominator and series to vanish on the last max_den_degree positions is
    solved exactly over the fraction field of the coefficient ring; the
    first consistent candidate wins.  Returns None when nothing fits.
    """
    if ring is None:
        if all(isinstance(c, (int, Fraction)) for c in coeffs):
            ring = QQ
        else:
            nvars = next(c.nvars for c in coeffs if isinstance(c, (MPoly, MFrac)))
            ring = PolynomialRing(nvars)
    coeffs = [ring.from_value(c) for c in coeffs]
    m = max_den_degree
    if m < 0:
        raise ValueError("max_den_degree must be non-negative")
    length = len(coeffs)
    if length < 2 * m + 2:
        raise ValueError(f"need at least {2 * m + 2} coefficients, got {length}")
    window = range(length - m, length)
    field_coeffs = [ring.to_field(c) for c in coeffs]
    for mp in range(m + 1):
        alphas = _solve_recurrence(field_coeffs, mp, window, ring)
        if alphas is None:
            continue
        den_field = [ring.to_field(ring.one)] + [-a for a in alphas]
        product = _poly_mul(den_field, field_coeffs) if field_coeffs else []
        num_field = _trim(product[: length - m])
        return RationalFunction(num_field, den_field, ring=ring)
    return None


def _solve_recurrence(fc, mp, window, ring):
    """Solve f_j = sum_i alpha_i f_{j-i} on the window; None if inconsistent."""
    if mp == 0:
        return [] if all(not fc[j] for j in window) else None
    rows = [
        [fc[j - i] for i in range(1, mp + 1)] + [fc[j]]
        for j in window
    ]
    pivots = []
    r = 0
    for c in range(mp):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    for i in range(r, len(rows)):
        if rows[i][-1]:
            return None
    zero = ring.to_field(ring.zero)
    solution = [zero] * mp
    for row_idx, c in enumerate(pivots):
        solution[c] = rows[row_idx][-1]
    return solution


def divides_up_to_unit(den, target, ring) -> bool:
    """Whether den divides target in the polynomial ring over t, up to a unit."""
    den_f = _trim([ring.to_field(c) for c in den])
    target_f = _trim([ring.to_field(c) for c in target])
    if not den_f:
        return False
    while target_f and len(target_f) >= len(den_f):
        lead = target_f[-1] / den_f[-1]
        shift = len(target_f) - len(den_f)
        for i, c in enumerate(den_f):
            target_f[i + shift] = target_f[i + shift] - lead * c
        target_f = _trim(target_f)
    return not target_f
