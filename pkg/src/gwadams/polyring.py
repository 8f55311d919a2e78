"""Exact sparse multivariate Laurent polynomial arithmetic over the integers.

Polynomials live in a Ring context: an ordered tuple of named variables, each
flagged as Laurent (negative exponents allowed) or not.  Terms are stored as a
dict mapping exponent tuples to nonzero integer coefficients.  The monomial
order used everywhere is graded lexicographic by declared variable order.

TruncSeries is a truncated power series in a distinguished formal variable t
with MultiPoly coefficients, exact modulo t^(N+1).
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping


class ContextError(ValueError):
    """Operands belong to different ring contexts."""


class ExponentError(ValueError):
    """Negative exponent on a non-Laurent variable."""


class SubstitutionError(ValueError):
    """Invalid binding in a substitution (e.g. non-unit into a Laurent exponent)."""


class InvertibilityError(ValueError):
    """Series inversion requires constant coefficient 1."""


class GradingError(ValueError):
    """Operation required a homogeneous element."""


class Ring:
    """Ordered variable context.  Immutable; equality by variable data."""

    __slots__ = ("names", "laurent", "_index")

    def __init__(self, variables: Iterable[tuple[str, bool]]):
        vs = tuple(variables)
        names = tuple(name for name, _ in vs)
        if len(set(names)) != len(names):
            raise ContextError("duplicate variable names: %r" % (names,))
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "laurent", tuple(bool(l) for _, l in vs))
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    def __setattr__(self, *a):
        raise AttributeError("Ring is immutable")

    def __eq__(self, other):
        return (isinstance(other, Ring) and self.names == other.names
                and self.laurent == other.laurent)

    def __hash__(self):
        return hash((self.names, self.laurent))

    def __repr__(self):
        return "Ring(%s)" % ", ".join(
            n + ("^±" if l else "") for n, l in zip(self.names, self.laurent))

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ContextError("no variable %r in %r" % (name, self)) from None

    def is_laurent(self, name: str) -> bool:
        return self.laurent[self.index(name)]

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    def one(self) -> "MultiPoly":
        return self.const(1)

    def const(self, c: int) -> "MultiPoly":
        if c == 0:
            return MultiPoly(self, {})
        return MultiPoly(self, {(0,) * self.nvars: int(c)})

    def var(self, name: str, exp: int = 1) -> "MultiPoly":
        i = self.index(name)
        if exp < 0 and not self.laurent[i]:
            raise ExponentError("variable %r is not Laurent" % name)
        e = [0] * self.nvars
        e[i] = exp
        return MultiPoly(self, {tuple(e): 1})

    def monomial(self, coeff: int, exps: Mapping[str, int]) -> "MultiPoly":
        e = [0] * self.nvars
        for name, k in exps.items():
            e[self.index(name)] = k
        return MultiPoly(self, {tuple(e): int(coeff)} if coeff else {})


def grlex_key(exps: tuple) -> tuple:
    return (sum(exps), exps)


class MultiPoly:
    """Sparse polynomial: dict of exponent tuple -> nonzero int coefficient.

    Values are immutable by convention; no method mutates terms after
    construction.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict):
        clean = {}
        for exps, c in terms.items():
            if c == 0:
                continue
            for e, laur in zip(exps, ring.laurent):
                if e < 0 and not laur:
                    raise ExponentError(
                        "negative exponent %d on non-Laurent variable in %r"
                        % (e, ring))
            clean[exps] = c
        self.ring = ring
        self.terms = clean

    # -- basics -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        z = (0,) * self.ring.nvars
        return not self.terms or (len(self.terms) == 1 and z in self.terms)

    def const_value(self) -> int:
        if not self.is_const():
            raise ValueError("not a constant: %s" % self)
        return self.terms.get((0,) * self.ring.nvars, 0)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_const() and self.const_value() == other
        return (isinstance(other, MultiPoly) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def _check_ring(self, other: "MultiPoly"):
        if self.ring != other.ring:
            raise ContextError("mixed ring contexts: %r vs %r"
                               % (self.ring, other.ring))

    def _coerce(self, other):
        if isinstance(other, int):
            return self.ring.const(other)
        if isinstance(other, MultiPoly):
            self._check_ring(other)
            return other
        return NotImplemented

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = out.get(exps, 0) + c
            if s:
                out[exps] = s
            elif exps in out:
                del out[exps]
        return MultiPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return MultiPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
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

    # -- structure ----------------------------------------------------------

    def leading(self) -> tuple[tuple, int]:
        """Leading (exps, coeff) in graded-lex order.  Poly must be nonzero."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def coefficient(self, name: str, exp: int) -> "MultiPoly":
        """Polynomial coefficient of name^exp (variable removed)."""
        i = self.ring.index(name)
        out = {}
        for exps, c in self.terms.items():
            if exps[i] == exp:
                e = exps[:i] + (0,) + exps[i + 1:]
                out[e] = out.get(e, 0) + c
        return MultiPoly(self.ring, out)

    def degree_in(self, name: str) -> int:
        i = self.ring.index(name)
        if not self.terms:
            return 0
        return max(e[i] for e in self.terms)

    def graded_degree(self, weights: Mapping[str, int]):
        """Common weighted degree of all terms, or None if inhomogeneous.

        Weight of any variable absent from `weights` is 0.
        """
        if not self.terms:
            return 0
        w = [weights.get(n, 0) for n in self.ring.names]
        deg = None
        for exps in self.terms:
            d = sum(e * wi for e, wi in zip(exps, w) if wi)
            if deg is None:
                deg = d
            elif d != deg:
                return None
        return deg

    def substitute(self, bindings: Mapping[str, "MultiPoly"],
                   target: Ring | None = None) -> "MultiPoly":
        """Image under the evaluation homomorphism.

        Bound variables are replaced by the given polynomials (all in the
        target ring); unbound variables must exist in the target ring by name.
        A variable carrying a negative exponent may only be bound to a unit
        monomial (single term, coefficient ±1, Laurent-variable support).
        """
        if target is None:
            for v in bindings.values():
                target = v.ring
                break
            else:
                target = self.ring
        bound: dict[int, MultiPoly] = {}
        passthrough: dict[int, int] = {}
        for i, name in enumerate(self.ring.names):
            if name in bindings:
                v = bindings[name]
                if v.ring != target:
                    raise ContextError("binding for %r not in target ring" % name)
                bound[i] = v
            else:
                passthrough[i] = target.index(name)

    # cache powers of each binding as we go; exponents repeat heavily
        powcache: dict[tuple[int, int], MultiPoly] = {}

        def power(i: int, k: int) -> MultiPoly:
            key = (i, k)
            got = powcache.get(key)
            if got is not None:
                return got
            v = bound[i]
            if k >= 0:
                r = v ** k
            else:
                r = _unit_monomial_inverse(v) ** (-k)
            powcache[key] = r
            return r

        result = target.zero()
        for exps, c in self.terms.items():
            te = [0] * target.nvars
            for i, j in passthrough.items():
                te[j] += exps[i]
            piece = MultiPoly(target, {tuple(te): c})
            for i in bound:
                k = exps[i]
                if k:
                    piece = piece * power(i, k)
            result = result + piece
        return result

    def rename(self, target: Ring,
               mapping: Mapping[str, str] | None = None) -> "MultiPoly":
        """Embed into another ring by variable name (or an explicit rename map)."""
        pos = []
        for i, name in enumerate(self.ring.names):
            new = mapping.get(name, name) if mapping else name
            used = any(e[i] for e in self.terms)
            if new not in target._index:
                if used:
                    raise ContextError("variable %r absent from target" % new)
                pos.append(None)
            else:
                pos.append(target.index(new))
        out = {}
        for exps, c in self.terms.items():
            te = [0] * target.nvars
            for i, j in enumerate(pos):
                if exps[i]:
                    te[j] = exps[i]
            key = tuple(te)
            out[key] = out.get(key, 0) + c
        return MultiPoly(target, out)

    # -- rendering ----------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]),
                      reverse=True)

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            factors = []
            for name, e in zip(self.ring.names, exps):
                if e == 0:
                    continue
                factors.append(name if e == 1 else "%s^%d" % (name, e))
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def latex(self, symbols: Mapping[str, str] | None = None) -> str:
        if not self.terms:
            return "0"
        symbols = symbols or {}
        parts = []
        for exps, c in self.sorted_terms():
            factors = []
            for name, e in zip(self.ring.names, exps):
                if e == 0:
                    continue
                sym = symbols.get(name, _default_latex_symbol(name))
                if e == 1:
                    factors.append(sym)
                else:
                    factors.append("%s^{%d}" % (sym, e))
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "".join(factors)
            else:
                body = str(abs(c)) + "".join(factors)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __str__(self):
        return self.text()

    def __repr__(self):
        return "MultiPoly(%s)" % self.text()

    # -- JSON ---------------------------------------------------------------

    def to_obj(self) -> dict:
        return {
            "vars": [{"name": n, "laurent": l}
                     for n, l in zip(self.ring.names, self.ring.laurent)],
            "terms": [{"coeff": str(c), "exps": list(e)}
                      for e, c in self.sorted_terms()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), sort_keys=True, separators=(",", ":"))

    @staticmethod
    def from_obj(obj: dict) -> "MultiPoly":
        ring = Ring((v["name"], bool(v["laurent"])) for v in obj["vars"])
        terms: dict = {}
        for t in obj["terms"]:
            exps = tuple(int(e) for e in t["exps"])
            if len(exps) != ring.nvars:
                raise ValueError("exponent array length mismatch")
            terms[exps] = terms.get(exps, 0) + int(t["coeff"])
        return MultiPoly(ring, terms)

    @staticmethod
    def from_json(s: str) -> "MultiPoly":
        return MultiPoly.from_obj(json.loads(s))


_LATEX_SPECIALS = {
    "eps": r"\epsilon", "tau": r"\tau", "gamma": r"\gamma", "beta": r"\beta",
    "sigma": r"\sigma",
}


def _default_latex_symbol(name: str) -> str:
    if name in _LATEX_SPECIALS:
        return _LATEX_SPECIALS[name]
    head = name.rstrip("0123456789")
    tail = name[len(head):]
    if tail:
        return "%s_{%s}" % (head, tail)
    return name


def _unit_monomial_inverse(v: MultiPoly) -> MultiPoly:
    if len(v.terms) != 1:
        raise SubstitutionError("need a unit monomial, got %s" % v)
    (exps, c), = v.terms.items()
    if c not in (1, -1):
        raise SubstitutionError("unit monomial must have coefficient ±1")
    inv = tuple(-e for e in exps)
    return MultiPoly(v.ring, {inv: c})


class TruncSeries:
    """Polynomial in t modulo t^(N+1), with MultiPoly coefficients."""

    __slots__ = ("ring", "order", "coeffs")

    def __init__(self, ring: Ring, order: int, coeffs):
        coeffs = list(coeffs)
        if len(coeffs) > order + 1:
            coeffs = coeffs[:order + 1]
        while len(coeffs) < order + 1:
            coeffs.append(ring.zero())
        for c in coeffs:
            if c.ring != ring:
                raise ContextError("series coefficient in wrong ring")
        self.ring = ring
        self.order = order
        self.coeffs = tuple(coeffs)

    @staticmethod
    def one(ring: Ring, order: int) -> "TruncSeries":
        return TruncSeries(ring, order, [ring.one()])

    def __eq__(self, other):
        return (isinstance(other, TruncSeries) and self.ring == other.ring
                and self.order == other.order and self.coeffs == other.coeffs)

    def __getitem__(self, n: int) -> MultiPoly:
        return self.coeffs[n]

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        n = min(self.order, other.order)
        return TruncSeries(self.ring, n,
                           [self.coeffs[k] + other.coeffs[k] for k in range(n + 1)])

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        if self.ring != other.ring:
            raise ContextError("mixed ring contexts in series_mul")
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            acc = self.ring.zero()
            for i in range(k + 1):
                a, b = self.coeffs[i], other.coeffs[k - i]
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return TruncSeries(self.ring, n, out)

    def inverse(self) -> "TruncSeries":
        if self.coeffs[0] != self.ring.one():
            raise InvertibilityError("constant coefficient must be 1")
        inv = [self.ring.one()]
        for k in range(1, self.order + 1):
            acc = self.ring.zero()
            for i in range(1, k + 1):
                if self.coeffs[i]:
                    acc = acc + self.coeffs[i] * inv[k - i]
            inv.append(-acc)
        return TruncSeries(self.ring, self.order, inv)

    def __pow__(self, n: int) -> "TruncSeries":
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = TruncSeries.one(self.ring, self.order)
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __repr__(self):
        return "TruncSeries([%s]; O(t^%d))" % (
            ", ".join(str(c) for c in self.coeffs), self.order + 1)


def series_mul(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    return f * g


def series_inverse(f: TruncSeries) -> TruncSeries:
    return f.inverse()
