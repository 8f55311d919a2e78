"""Lambda-operation engine over the coefficient ring extended by rank-2
symplectic generators u_1..u_k.

The lambda-series of a sum is the product of the series; a rank-2 generator
u (and likewise tau) has series 1 + u*t + det*t^2; products of rank-2
primitives are folded in through the universal product identity, expanding
prod_i(1 + U_i*y*t + U_i^2*det*t^2) and substituting sigma_k(U) by the
already-known lambda^k of the other factor; line factors (the class <-1>
and powers of the periodicity unit) act coefficientwise.  Adams operations
come out of the Newton recursion.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import gwring, symfunc
from .gwring import GWElem
from .polyring import GradingError, MultiPoly, Ring, grlex_key
from .report import MISMATCH, PASS, ReportEntry, VerificationReport, check


@dataclass(frozen=True)
class Theory:
    name: str
    base: tuple
    weights: dict
    twist: str          # unit variable implementing the determinant twist
    det_power: int      # lambda^2 of a rank-2 generator is twist**det_power
    rank_subs: dict
    normalizes: bool    # whether the gwring rewrite system applies

    def base_ring(self) -> Ring:
        return Ring(self.base)


GW = Theory("gw", tuple(gwring.COEFF_VARS), dict(gwring.WEIGHTS),
            "gamma", 1, {"eps": -1, "tau": 2, "gamma": 1}, True)
KTH = Theory("k", (("beta", True),), {"beta": 1},
             "beta", 4, {"beta": 1}, False)
WITT = Theory("witt", (("gamma", True),), {"gamma": 4},
              "gamma", 1, {"gamma": 1}, False)

THEORIES = {t.name: t for t in (GW, KTH, WITT)}


def context_ring(theory: Theory, gens: tuple) -> Ring:
    return Ring(list(theory.base) + [(g, False) for g in gens])


class SymClass:
    """Normal-form element of theory.base_ring()[gens]."""

    __slots__ = ("theory", "gens", "quotient", "poly")

    def __init__(self, poly: MultiPoly, theory: Theory = GW,
                 gens: tuple = (), quotient: bool = False):
        gens = tuple(gens)
        ring = context_ring(theory, gens)
        if poly.ring != ring:
            poly = poly.rename(ring)
        if quotient and theory.name == "gw":
            poly = _quotient_rewrite(poly, gens)
        if theory.normalizes:
            poly = gwring.normalize(poly)
        self.theory = theory
        self.gens = gens
        self.quotient = quotient
        self.poly = poly

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, c: int, theory=GW, gens=(), quotient=False) -> "SymClass":
        ring = context_ring(theory, tuple(gens))
        return cls(ring.const(c), theory, gens, quotient)

    @classmethod
    def gen(cls, name: str, theory=GW, gens=(), quotient=False) -> "SymClass":
        ring = context_ring(theory, tuple(gens))
        return cls(ring.var(name), theory, gens, quotient)

    @classmethod
    def from_gw(cls, x: GWElem, gens=(), quotient=False) -> "SymClass":
        return cls(x.poly, GW, gens, quotient)

    def to_gw(self) -> GWElem:
        if self.theory.name != "gw":
            raise ValueError("not a gw-theory class")
        if any(any(e[self.poly.ring.index(g)] for e in self.poly.terms)
               for g in self.gens):
            raise ValueError("element involves generators: %s" % self)
        return GWElem(self.poly.rename(gwring.COEFF_RING))

    def _same_context(self, other: "SymClass"):
        if (self.theory.name != other.theory.name or self.gens != other.gens
                or self.quotient != other.quotient):
            raise ValueError("mixed SymClass contexts")

    def _lift(self, poly: MultiPoly) -> "SymClass":
        return SymClass(poly, self.theory, self.gens, self.quotient)

    def _coerce(self, other):
        if isinstance(other, int):
            return SymClass.const(other, self.theory, self.gens, self.quotient)
        if isinstance(other, SymClass):
            self._same_context(other)
            return other
        return NotImplemented

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._lift(self.poly + other.poly)

    __radd__ = __add__

    def __neg__(self):
        return self._lift(-self.poly)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._lift(self.poly - other.poly)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._lift(self.poly * other.poly)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = SymClass.const(1, self.theory, self.gens, self.quotient)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = SymClass.const(other, self.theory, self.gens, self.quotient)
        return (isinstance(other, SymClass)
                and self.theory.name == other.theory.name
                and self.gens == other.gens and self.quotient == other.quotient
                and self.poly == other.poly)

    def __hash__(self):
        return hash((self.theory.name, self.gens, self.quotient, self.poly))

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    # -- grading / rank -----------------------------------------------------

    def weights(self) -> dict:
        w = dict(self.theory.weights)
        for g in self.gens:
            w[g] = 2
        return w

    def degree(self):
        return self.poly.graded_degree(self.weights())

    def is_homogeneous(self) -> bool:
        return self.degree() is not None

    def rank(self) -> int:
        if not self.is_homogeneous():
            raise GradingError("rank requires homogeneous input: %s" % self)
        z = Ring([])
        subs = {n: z.const(v) for n, v in self.theory.rank_subs.items()}
        subs |= {g: z.const(2) for g in self.gens}
        return self.poly.substitute(subs, z).const_value()

    # -- rendering / JSON ---------------------------------------------------

    def text(self) -> str:
        return self.poly.text()

    def latex(self) -> str:
        return self.poly.latex()

    def __str__(self):
        return self.text()

    def __repr__(self):
        return "SymClass(%s; %s%s)" % (self.text(), self.theory.name,
                                       " quotient" if self.quotient else "")

    def to_obj(self) -> dict:
        ring = self.poly.ring
        gidx = [ring.index(g) for g in self.gens]
        groups: dict[tuple, dict] = {}
        for exps, c in self.poly.terms.items():
            ue = tuple(exps[i] for i in gidx)
            base = tuple(0 if i in gidx else e for i, e in enumerate(exps))
            groups.setdefault(ue, {})[base] = c
        components = []
        for ue in sorted(groups):
            if self.theory.name == "gw":
                base_elem = GWElem(MultiPoly(ring, groups[ue]).rename(
                    gwring.COEFF_RING))
                for comp in base_elem.to_obj()["components"]:
                    comp["u_exps"] = list(ue)
                    components.append(comp)
            else:
                poly = MultiPoly(ring, groups[ue]).rename(
                    self.theory.base_ring())
                components.append({"u_exps": list(ue),
                                   "poly": poly.to_obj()})
        return {"theory": self.theory.name, "gens": list(self.gens),
                "quotient": self.quotient, "components": components}

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), sort_keys=True, separators=(",", ":"))

    @staticmethod
    def from_obj(obj: dict) -> "SymClass":
        theory = THEORIES[obj.get("theory", "gw")]
        gens = tuple(obj.get("gens", ()))
        quotient = bool(obj.get("quotient", False))
        ring = context_ring(theory, gens)
        total = ring.zero()
        for comp in obj["components"]:
            ue = comp.get("u_exps", [0] * len(gens))
            umono = ring.monomial(1, dict(zip(gens, ue)))
            if theory.name == "gw":
                base = GWElem.from_obj({"components": [comp]})
                total = total + base.poly.rename(ring) * umono
            else:
                total = total + MultiPoly.from_obj(comp["poly"]).rename(ring) * umono
        return SymClass(total, theory, gens, quotient)

    @staticmethod
    def from_json(s: str) -> "SymClass":
        return SymClass.from_obj(json.loads(s))


def _quotient_rewrite(poly: MultiPoly, gens: tuple) -> MultiPoly:
    """Impose (u - tau)^2 = 0 for every generator: u^2 -> 2*tau*u - tau^2."""
    ring = poly.ring
    it = ring.index("tau")
    gidx = [ring.index(g) for g in gens]
    out: dict = {}
    stack = list(poly.terms.items())
    while stack:
        exps, c = stack.pop()
        for i in gidx:
            if exps[i] >= 2:
                e1 = list(exps)
                e1[i] -= 1
                e1[it] += 1
                stack.append((tuple(e1), 2 * c))
                e2 = list(exps)
                e2[i] -= 2
                e2[it] += 2
                stack.append((tuple(e2), -c))
                break
        else:
            s = out.get(exps, 0) + c
            if s:
                out[exps] = s
            elif exps in out:
                del out[exps]
    return MultiPoly(ring, out)


# ---------------------------------------------------------------------------
# series helpers over SymClass coefficient lists

def _series_one(ctx: SymClass, N: int) -> list:
    one = SymClass.const(1, ctx.theory, ctx.gens, ctx.quotient)
    zero = SymClass.const(0, ctx.theory, ctx.gens, ctx.quotient)
    return [one] + [zero] * N


def _series_mul(f: list, g: list, N: int) -> list:
    out = []
    for k in range(N + 1):
        acc = None
        for i in range(k + 1):
            term = f[i] * g[k - i]
            acc = term if acc is None else acc + term
        out.append(acc)
    return out


def _series_inverse(f: list, N: int) -> list:
    if f[0] != 1:
        raise ValueError("series inverse needs constant term 1")
    inv = [f[0]]
    for k in range(1, N + 1):
        acc = None
        for i in range(1, k + 1):
            term = f[i] * inv[k - i]
            acc = term if acc is None else acc + term
        inv.append(-acc)
    return inv


def _series_pow(f: list, c: int, N: int) -> list:
    base = f if c >= 0 else _series_inverse(f, N)
    c = abs(c)
    result = None
    while c:
        if c & 1:
            result = base if result is None else _series_mul(result, base, N)
        c >>= 1
        if c:
            base = _series_mul(base, base, N)
    if result is None:
        zero_ctx = f[0]
        result = _series_one(zero_ctx, N)
    return result


def _det_class(ctx: SymClass) -> SymClass:
    t = ctx.theory
    ring = context_ring(t, ctx.gens)
    return SymClass(ring.var(t.twist, t.det_power), t, ctx.gens, ctx.quotient)


def _rank2_series(prim: SymClass, N: int) -> list:
    s = _series_one(prim, N)
    if N >= 1:
        s[1] = prim
    if N >= 2:
        s[2] = _det_class(prim)
    return s


def _fold_rank2(series: list, prim_name: str, ctx: SymClass, N: int,
                rank_bound: int | None = None) -> list:
    """Lambda-series of x*y from the series of x, for y a rank-2 primitive
    (a generator or tau) with determinant class twist**det_power.

    rank_bound may be passed when lambda^j(x) is known to vanish for
    j > rank_bound (true for genuine classes of that rank); the expansion
    then only needs that many symmetric roots, which keeps high truncation
    orders cheap."""
    theory, gens = ctx.theory, ctx.gens
    base = context_ring(theory, gens)
    M = max(N, 1) if rank_bound is None else max(1, min(N, rank_bound))
    unames = ["UF%d" % i for i in range(1, M + 1)]
    ext = Ring([(n, l) for n, l in zip(base.names, base.laurent)]
               + [(u, False) for u in unames])
    y = ext.var(prim_name)
    det = ext.var(theory.twist, theory.det_power)
    from .polyring import TruncSeries
    prod = TruncSeries.one(ext, N)
    for u in unames:
        uv = ext.var(u)
        prod = prod * TruncSeries(ext, N, [ext.one(), uv * y, uv * uv * det])
    out = []
    targets = ["XF%d" % i for i in range(1, M + 1)]
    for k in range(N + 1):
        red = symfunc.symmetric_reduce(prod[k], unames, targets)
        bind = {targets[j - 1]: series[j].poly for j in range(1, M + 1)
                if j <= N}
        for j in range(N + 1, M + 1):
            bind[targets[j - 1]] = base.zero()
        val = red.substitute(bind, base)
        out.append(SymClass(val, theory, gens, ctx.quotient))
    return out


def lambda_series(x: SymClass, N: int) -> list:
    """[lambda^0(x), ..., lambda^N(x)], exact."""
    if N < 0:
        raise ValueError("N must be >= 0")
    theory = x.theory
    ring = x.poly.ring
    it_twist = ring.index(theory.twist)
    ie = ring.index("eps") if theory.name == "gw" else None
    itau = ring.index("tau") if theory.name == "gw" else None
    gidx = [(g, ring.index(g)) for g in x.gens]
    twist_cache: dict[int, SymClass] = {}

    def twist_power(k: int) -> SymClass:
        got = twist_cache.get(k)
        if got is None:
            got = twist_cache[k] = SymClass(
                ring.var(theory.twist, k), theory, x.gens, x.quotient)
        return got

    minus_eps = None
    if theory.name == "gw":
        minus_eps = SymClass(-ring.var("eps"), theory, x.gens, x.quotient)

    result = _series_one(x, N)
    for exps, c in sorted(x.poly.terms.items(), key=lambda kv: grlex_key(kv[0])):
        d = exps[it_twist]
        a = exps[ie] if ie is not None else 0
        b = exps[itau] if itau is not None else 0
        prims = ["tau"] * b + [g for g, i in gidx for _ in range(exps[i])]
        if prims:
            s = _rank2_series(SymClass.gen(prims[0], theory, x.gens, x.quotient), N)
            folded = 1
            for p in prims[1:]:
                s = _fold_rank2(s, p, x, N, rank_bound=2 ** folded)
                folded += 1
        else:
            s = _series_one(x, N)
            if N >= 1:
                s[1] = SymClass.const(1, theory, x.gens, x.quotient)
        mult = c
        if a:
            # eps * rho = -(<-1> * rho); <-1> is a line, so it scales
            # lambda^n by <-1>^n = (-eps)^n
            mult = -mult
            s = [s[n] * minus_eps ** n for n in range(N + 1)]
        if d:
            s = [s[n] * twist_power(d * n) for n in range(N + 1)]
        result = _series_mul(result, _series_pow(s, mult, N), N)
    return result


def lambda_op(n: int, x: SymClass) -> SymClass:
    if n < 0:
        raise ValueError("n must be >= 0")
    series = lambda_series(x, n)
    out = series[n]
    _assert_degree_law(x, out, n)
    return out


def _assert_degree_law(x: SymClass, out: SymClass, n: int):
    dx = x.degree()
    if dx is not None and not out.is_zero():
        dout = out.degree()
        if dout is None or (n > 0 and dout != n * dx):
            raise GradingError(
                "degree law violated: lambda^%d of degree-%s input has "
                "degree %s" % (n, dx, dout))


def adams(n: int, x: SymClass) -> SymClass:
    """psi^n via the Newton recursion from lambda^1..lambda^n."""
    if n < 0:
        return adams_negative(n, x)
    if not x.is_homogeneous():
        raise GradingError("adams requires homogeneous input: %s" % x)
    if n == 0:
        return SymClass.const(x.rank(), x.theory, x.gens, x.quotient)
    lam = lambda_series(x, n)
    psi = [None] * (n + 1)
    psi[1] = x
    for k in range(2, n + 1):
        acc = (-1) ** (k - 1) * k * lam[k]
        for i in range(1, k):
            acc = acc + (-1) ** (i - 1) * (lam[i] * psi[k - i])
        psi[k] = acc
    out = psi[n]
    dx = x.degree()
    if not out.is_zero() and out.degree() != n * dx:
        raise GradingError("psi^%d broke the grading" % n)
    return out


def adams_negative(n: int, x: SymClass) -> SymClass:
    """Duality extension: psi^n = psi^{-n} in degrees 0 mod 4, -psi^{-n}
    in degrees 2 mod 4."""
    if n >= 0:
        return adams(n, x)
    if not x.is_homogeneous():
        raise GradingError("adams requires homogeneous input: %s" % x)
    pos = adams(-n, x)
    if x.degree() % 4 == 2:
        return -pos
    return pos


def rank_op(x: SymClass) -> SymClass:
    return SymClass.const(x.rank(), x.theory, x.gens, x.quotient)


# ---------------------------------------------------------------------------
# theory maps

def forget(x: SymClass) -> SymClass:
    """Forgetful specialization to K-theory: eps -> -1, tau -> 2*beta^2,
    gamma -> beta^4; generators pass through."""
    if x.theory.name != "gw":
        raise ValueError("forget expects a gw-theory class")
    target = context_ring(KTH, x.gens)
    beta = target.var("beta")
    img = x.poly.substitute(
        {"eps": target.const(-1), "tau": 2 * beta * beta,
         "gamma": beta ** 4}, target)
    return SymClass(img, KTH, x.gens, False)


def witt(x: SymClass) -> SymClass:
    """Witt specialization: 1 - eps -> 0 (i.e. eps -> 1) and tau -> 0."""
    if x.theory.name != "gw":
        raise ValueError("witt expects a gw-theory class")
    target = context_ring(WITT, x.gens)
    img = x.poly.substitute(
        {"eps": target.one(), "tau": target.zero(),
         "gamma": target.var("gamma")}, target)
    return SymClass(img, WITT, x.gens, False)


# ---------------------------------------------------------------------------
# hyperbolic classes and the documented comparison

def hyperbolic_sym(i: int) -> SymClass:
    return SymClass.from_gw(GWElem.hyperbolic_unit(i))


def psi_h_closed(n: int, i: int) -> GWElem:
    """The literature's closed form for psi^n(h_{2i}(1))."""
    if n % 2:
        return GWElem.hyperbolic_unit(i * n)
    base = GWElem.hyperbolic_unit(i * n)
    extra = ((-1) ** (n // 2)) * GWElem.gamma(i * n // 2) * (1 + GWElem.eps())
    return base + extra


def psi_tau_closed(n: int) -> GWElem:
    """tau*gamma^{(n-1)/2} for odd n, 2*<-1>^{n/2}*gamma^{n/2} for even n."""
    if n % 2:
        return GWElem.tau() * GWElem.gamma((n - 1) // 2)
    return (2 * GWElem.minus_one_class() ** (n // 2)
            * GWElem.gamma(n // 2))


@dataclass
class HyperbolicComparison:
    n: int
    i: int
    engine: GWElem
    closed: GWElem
    match: bool
    in_span: bool | None  # engine in Z*h_{2in}(1), only decided for odd n


def adams_on_hyperbolic(n: int, i: int) -> HyperbolicComparison:
    if n < 0:
        raise ValueError("n must be >= 0")
    engine = adams(n, hyperbolic_sym(i)).to_gw()
    closed = psi_h_closed(n, i) if n else GWElem.from_int(2)
    in_span = None
    if n % 2:
        target = GWElem.hyperbolic_unit(i * n)
        k = engine.rank() // 2 if engine.rank() % 2 == 0 else None
        in_span = k is not None and engine == k * target
    return HyperbolicComparison(n, i, engine, closed,
                                engine == closed, in_span)


def check_adams_hyperbolic(n_max: int = 5, i_values=(0, 1, 2),
                           tau_max: int = 10) -> VerificationReport:
    """Engine psi^n against the closed forms.  For even n >= 2 with even i the
    closed form's torsion bookkeeping is documented as untrusted: those cells
    are reported as mismatch-documented with both values in the payload,
    regardless of incidental agreement."""
    rep = VerificationReport("adams-hyperbolic")
    for n in range(0, tau_max + 1):
        got = adams(n, SymClass.from_gw(GWElem.tau())).to_gw()
        want = psi_tau_closed(n)
        rep.add(check("psi_tau", (n,), got == want, got.text(), want.text()))
    for n in range(0, n_max + 1):
        for i in i_values:
            cmpres = adams_on_hyperbolic(n, i)
            documented = n >= 2 and n % 2 == 0 and i % 2 == 0
            if documented:
                status = MISMATCH
                note = ("closed form untrusted here; engine %s closed"
                        % ("==" if cmpres.match else "!="))
            else:
                status = PASS if cmpres.match else "fail"
                note = ""
            rep.add(ReportEntry("psi_h_1", (n, i), status,
                                cmpres.engine.text(), cmpres.closed.text(), note))
            if n % 2:
                rep.add(check("psi_h_odd_span", (n, i), bool(cmpres.in_span),
                              cmpres.engine.text(),
                              "Z*" + GWElem.hyperbolic_unit(i * n).text()))
    return rep.sort()


# ---------------------------------------------------------------------------
# axiom battery

def _eval_universal(poly: MultiPoly, bind: dict, ctx: SymClass) -> SymClass:
    """Evaluate a universal polynomial with SymClass arguments."""
    base = context_ring(ctx.theory, ctx.gens)
    pbind = {}
    for name in poly.ring.names:
        if name in bind:
            pbind[name] = bind[name].poly
        else:
            pbind[name] = base.zero()
    return SymClass(poly.substitute(pbind, base), ctx.theory, ctx.gens,
                    ctx.quotient)


def l1_samples() -> dict:
    gens = ("u1", "u2")
    u1 = SymClass.gen("u1", gens=gens)
    u2 = SymClass.gen("u2", gens=gens)
    tau = SymClass.from_gw(GWElem.tau(), gens=gens)
    mo = SymClass.from_gw(GWElem.minus_one_class(), gens=gens)
    return {"u1": u1, "u2": u2, "tau": tau, "<-1>": mo,
            "u1*u2": u1 * u2, "u1+tau": u1 + tau}


def l2_samples() -> dict:
    gens = ("u1", "u2")
    u1 = SymClass.gen("u1", gens=gens)
    u2 = SymClass.gen("u2", gens=gens)
    tau = SymClass.from_gw(GWElem.tau(), gens=gens)
    return {"u1": u1, "u1+u2": u1 + u2, "tau+u1": tau + u1}


def check_lambda_axioms(l1_max: int = 6, l2_max: int = 8,
                        psi_max: int = 4) -> VerificationReport:
    rep = VerificationReport("lambda-axioms")
    samples = l1_samples()
    names = sorted(samples)

    # L1: lambda^n(xy) = P_n(lambda(x), lambda(y))
    for xi, xn in enumerate(names):
        for yn in names[xi:]:
            x, y = samples[xn], samples[yn]
            lx = lambda_series(x, l1_max)
            ly = lambda_series(y, l1_max)
            lxy = lambda_series(x * y, l1_max)
            for n in range(1, l1_max + 1):
                bind = {}
                for k in range(1, n + 1):
                    bind["X%d" % k] = lx[k]
                    bind["Y%d" % k] = ly[k]
                rhs = _eval_universal(symfunc.universal_P(n), bind, x)
                rep.add(check("L1", (n, xn, yn), lxy[n] == rhs,
                              lxy[n].text(), rhs.text()))

    # L2: lambda^i(lambda^j(z)) = Q_{i,j}(lambda(z))
    for zn, z in sorted(l2_samples().items()):
        lz = lambda_series(z, l2_max)
        for j in range(1, l2_max + 1):
            for i in range(1, l2_max // j + 1):
                lhs = lambda_op(i, lz[j])
                bind = {"X%d" % k: lz[k] for k in range(1, i * j + 1)}
                rhs = _eval_universal(symfunc.universal_Q(i, j), bind, z)
                rep.add(check("L2", (i, j, zn), lhs == rhs,
                              lhs.text(), rhs.text()))

    # Adams: additivity, multiplicativity, composition, rank compatibility
    for n in range(0, psi_max + 1):
        for xi, xn in enumerate(names):
            for yn in names[xi:]:
                x, y = samples[xn], samples[yn]
                pxy = adams(n, x * y)
                rep.add(check("psi_mult", (n, xn, yn),
                              pxy == adams(n, x) * adams(n, y)))
                if x.degree() == y.degree():
                    ps = adams(n, x + y)
                    rep.add(check("psi_add", (n, xn, yn),
                                  ps == adams(n, x) + adams(n, y)))
    for m in range(1, psi_max + 1):
        for n in range(1, psi_max + 1):
            for xn in ("u1", "tau", "u1*u2", "<-1>"):
                x = samples[xn]
                lhs = adams(m, adams(n, x))
                rhs = adams(m * n, x)
                rep.add(check("psi_comp", (m, n, xn), lhs == rhs,
                              lhs.text(), rhs.text()))
    for xn in names:
        x = samples[xn]
        for n in range(0, psi_max + 1):
            rep.add(check("psi_rank", (n, xn), adams(n, x).rank() == x.rank()))

    # forgetful specialization intertwines the two engines
    for xn in ("u1", "tau", "u1+tau", "u1*u2"):
        x = samples[xn]
        fx = forget(x)
        for n in range(0, psi_max + 1):
            lhs = forget(adams(n, x))
            rhs = adams(n, fx)
            rep.add(check("forgetful_psi", (n, xn), lhs == rhs,
                          lhs.text(), rhs.text()))
    return rep.sort()
