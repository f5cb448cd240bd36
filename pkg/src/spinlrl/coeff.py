"""Exact scalar arithmetic: Gaussian rationals and sparse polynomials in alpha and E.

Every coefficient in the engine lives in Q(i)[alpha, E]: Gaussian-rational
numbers extended by the two symbolic parameters of the problem, the coupling
strength ``alpha`` and the energy ``E``.  All arithmetic is exact; there is no
floating-point mode.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Optional, Union

try:  # exact rational backend: gmpy2 is much faster, Fraction always works
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

_Q_ZERO = _Q(0)
_QTYPES = (int, Fraction, type(_Q(0)))

Rational = Fraction

ScalarLike = Union[int, Fraction, "GaussianRational", "ParamPoly"]


def _to_q(value):
    if type(value) is type(_Q_ZERO):
        return value
    return _Q(value)


class GaussianRational:
    """A number a + b*i with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _to_q(re))
        object.__setattr__(self, "im", _to_q(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def of(value: Union[int, Fraction, "GaussianRational"]) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        return GaussianRational(value)

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __add__(self, other):
        if type(other) is not GaussianRational:
            if not isinstance(other, _QTYPES):
                return NotImplemented
            other = GaussianRational(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        if type(other) is not GaussianRational:
            if not isinstance(other, _QTYPES):
                return NotImplemented
            other = GaussianRational(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussianRational.of(other) - self

    def __mul__(self, other):
        if type(other) is not GaussianRational:
            if not isinstance(other, _QTYPES):
                return NotImplemented
            other = GaussianRational(other)
        a, b = self.re, self.im
        c, e = other.re, other.im
        if not b:
            if not e:
                return GaussianRational(a * c)
            return GaussianRational(a * c, a * e)
        if not e:
            return GaussianRational(a * c, b * c)
        return GaussianRational(a * c - b * e, a * e + b * c)

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def inverse(self) -> "GaussianRational":
        norm = self.re * self.re + self.im * self.im
        if not norm:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(self.re / norm, -self.im / norm)

    def __truediv__(self, other):
        if not isinstance(other, (int, Fraction, GaussianRational)):
            return NotImplemented
        return self * GaussianRational.of(other).inverse()

    def __eq__(self, other):
        if isinstance(other, _QTYPES):
            other = GaussianRational(other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __str__(self):
        if not self.im:
            return str(self.re)
        if self.im == 1:
            im_part = "i"
        elif self.im == -1:
            im_part = "-i"
        else:
            im_part = f"{self.im}i"
        if not self.re:
            return im_part
        sign = "+" if self.im > 0 else ""
        return f"{self.re}{sign}{im_part}"

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"


G_ZERO = GaussianRational(0)
G_ONE = GaussianRational(1)
G_I = GaussianRational(0, 1)
_G_MINUS_ONE = GaussianRational(-1)


def _coerce_gaussian(value) -> GaussianRational:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, _QTYPES):
        return GaussianRational(value)
    raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")


class ParamPoly:
    """Sparse polynomial in alpha and E with Gaussian-rational coefficients.

    Keys of the term map are ``(alpha_power, e_power)`` pairs; no stored
    coefficient is ever zero.  Instances are immutable and hashable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[tuple, GaussianRational]] = None):
        clean = {}
        if terms:
            for key, coeff in terms.items():
                coeff = _coerce_gaussian(coeff)
                if coeff:
                    clean[(int(key[0]), int(key[1]))] = coeff
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("ParamPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def of(cls, value: ScalarLike) -> "ParamPoly":
        if isinstance(value, ParamPoly):
            return value
        return cls({(0, 0): _coerce_gaussian(value)})

    @classmethod
    def zero(cls) -> "ParamPoly":
        return P_ZERO

    @classmethod
    def one(cls) -> "ParamPoly":
        return P_ONE

    @classmethod
    def imag_unit(cls) -> "ParamPoly":
        return P_I

    @classmethod
    def alpha(cls) -> "ParamPoly":
        return P_ALPHA

    @classmethod
    def energy(cls) -> "ParamPoly":
        return P_E

    # -- queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self):
        return self._terms.items()

    def constant_value(self) -> Optional[GaussianRational]:
        """The value of a constant polynomial, or None if alpha/E appear."""
        if not self._terms:
            return G_ZERO
        if len(self._terms) == 1 and (0, 0) in self._terms:
            return self._terms[(0, 0)]
        return None

    def max_powers(self) -> tuple:
        """Largest (alpha, E) exponents occurring in any term."""
        pa = max((k[0] for k in self._terms), default=0)
        pe = max((k[1] for k in self._terms), default=0)
        return pa, pe

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, (*_QTYPES, GaussianRational, ParamPoly)):
            return NotImplemented
        other = ParamPoly.of(other)
        if not self._terms:
            return other
        if not other._terms:
            return self
        terms = dict(self._terms)
        for key, coeff in other._terms.items():
            cur = terms.get(key)
            if cur is None:
                terms[key] = coeff
            else:
                s = cur + coeff
                if s:
                    terms[key] = s
                else:
                    del terms[key]
        return _raw_poly(terms)

    __radd__ = __add__

    def __neg__(self):
        return _raw_poly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (*_QTYPES, GaussianRational, ParamPoly)):
            return NotImplemented
        return self + (-ParamPoly.of(other))

    def __rsub__(self, other):
        return ParamPoly.of(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, (*_QTYPES, GaussianRational, ParamPoly)):
            return NotImplemented
        other = ParamPoly.of(other)
        if not self._terms or not other._terms:
            return P_ZERO
        if other is P_ONE:
            return self
        if self is P_ONE:
            return other
        if len(self._terms) == 1 and len(other._terms) == 1:
            (a1, e1), c1 = next(iter(self._terms.items()))
            (a2, e2), c2 = next(iter(other._terms.items()))
            return _raw_poly({(a1 + a2, e1 + e2): c1 * c2})
        terms = {}
        for (a1, e1), c1 in self._terms.items():
            for (a2, e2), c2 in other._terms.items():
                key = (a1 + a2, e1 + e2)
                prod = c1 * c2
                cur = terms.get(key)
                if cur is None:
                    terms[key] = prod
                else:
                    s = cur + prod
                    if s:
                        terms[key] = s
                    else:
                        del terms[key]
        return _raw_poly(terms)

    __rmul__ = __mul__

    def conjugate(self) -> "ParamPoly":
        """Complex conjugation; alpha and E are treated as real."""
        return _raw_poly({k: c.conjugate() for k, c in self._terms.items()})

    def substitute(
        self,
        alpha_value: Optional[GaussianRational] = None,
        e_value: Optional[GaussianRational] = None,
    ) -> "ParamPoly":
        """Replace alpha and/or E by exact values; result is canonical."""
        if alpha_value is None and e_value is None:
            return self
        terms: dict = {}
        for (pa, pe), coeff in self._terms.items():
            factor = coeff
            if alpha_value is not None:
                factor = factor * _pow_gaussian(_coerce_gaussian(alpha_value), pa)
                pa = 0
            if e_value is not None:
                factor = factor * _pow_gaussian(_coerce_gaussian(e_value), pe)
                pe = 0
            if not factor:
                continue
            key = (pa, pe)
            cur = terms.get(key)
            if cur is None:
                terms[key] = factor
            else:
                s = cur + factor
                if s:
                    terms[key] = s
                else:
                    del terms[key]
        return _raw_poly(terms)

    # -- comparisons / rendering ----------------------------------------

    def __eq__(self, other):
        if isinstance(other, (*_QTYPES, GaussianRational)):
            other = ParamPoly.of(other)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(frozenset(self._terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self):
        if not self._terms:
            return "0"
        multi = len(self._terms) > 1
        parts = []
        for (pa, pe) in sorted(self._terms, reverse=True):
            coeff = self._terms[(pa, pe)]
            atoms = []
            if pa:
                atoms.append("alpha" if pa == 1 else f"alpha^{pa}")
            if pe:
                atoms.append("E" if pe == 1 else f"E^{pe}")
            cs = str(coeff)
            if atoms and coeff == G_ONE:
                parts.append(" ".join(atoms))
                continue
            if atoms and coeff == _G_MINUS_ONE:
                parts.append("-" + " ".join(atoms))
                continue
            if (atoms or multi) and _needs_parens(cs):
                cs = f"({cs})"
            parts.append(" ".join([cs] + atoms))
        return " + ".join(parts)

    def __repr__(self):
        return f"ParamPoly({self})"


def _needs_parens(coeff_str: str) -> bool:
    return coeff_str.startswith("-") or "+" in coeff_str or "-" in coeff_str[1:]


def _raw_poly(terms: dict) -> ParamPoly:
    poly = ParamPoly.__new__(ParamPoly)
    object.__setattr__(poly, "_terms", terms)
    object.__setattr__(poly, "_hash", None)
    return poly


def _pow_gaussian(base: GaussianRational, n: int) -> GaussianRational:
    out = G_ONE
    for _ in range(n):
        out = out * base
    return out


P_ZERO = ParamPoly()
P_ONE = ParamPoly({(0, 0): G_ONE})
P_I = ParamPoly({(0, 0): G_I})
P_ALPHA = ParamPoly({(1, 0): G_ONE})
P_E = ParamPoly({(0, 1): G_ONE})


def poly(value: ScalarLike) -> ParamPoly:
    """Coerce an int, Fraction, or GaussianRational into a ParamPoly."""
    return ParamPoly.of(value)


def gauss(re=0, im=0) -> GaussianRational:
    return GaussianRational(re, im)
