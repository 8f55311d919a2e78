"""Symmetric-function machinery.

Reduction of symmetric polynomials to the elementary symmetric basis
(repeated leading-term elimination in graded-lex order) and the universal
polynomial families P_n, Q_{i,j}, R_n obtained from products of the shape
prod(1 + t * monomial) by that reduction, together with a verification
battery for their closed-form specializations.
"""

from __future__ import annotations

import json
import os
import threading

from .polyring import ContextError, MultiPoly, Ring, TruncSeries, grlex_key
from . import report
from .report import ReportEntry, VerificationReport, check


class SymmetryError(ValueError):
    """Input not symmetric; `witness` holds the offending transposition."""

    def __init__(self, msg, witness):
        super().__init__(msg)
        self.witness = witness


def _family_ring(prefix: str, m: int, laurent: bool = False) -> Ring:
    return Ring([("%s%d" % (prefix, i), laurent) for i in range(1, m + 1)])


def _join_rings(*rings: Ring) -> Ring:
    pairs = []
    for r in rings:
        pairs.extend(zip(r.names, r.laurent))
    return Ring(pairs)


def elementary(m: int, n: int, ring: Ring | None = None,
               names: list[str] | None = None) -> MultiPoly:
    """Elementary symmetric polynomial sigma_n in m variables.

    Returns 0 for n > m and 1 for n = 0.  Default variables are U1..Um.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if ring is None:
        ring = _family_ring("U", m)
    if names is None:
        names = ["U%d" % i for i in range(1, m + 1)]
    if n > m:
        return ring.zero()
    if n == 0:
        return ring.one()
    from itertools import combinations
    idx = [ring.index(nm) for nm in names]
    terms = {}
    for combo in combinations(idx, n):
        e = [0] * ring.nvars
        for i in combo:
            e[i] = 1
        terms[tuple(e)] = 1
    return MultiPoly(ring, terms)


def symmetry_witness(p: MultiPoly, family: list[str]):
    """Return an adjacent transposition (name_k, name_{k+1}) under which p is
    not invariant, or None if p passes all adjacent-transposition checks."""
    idx = [p.ring.index(n) for n in family]
    for k in range(len(idx) - 1):
        i, j = idx[k], idx[k + 1]
        swapped = {}
        for exps, c in p.terms.items():
            e = list(exps)
            e[i], e[j] = e[j], e[i]
            swapped[tuple(e)] = c
        if swapped != p.terms:
            return (family[k], family[k + 1])
    return None


def symmetric_reduce(p: MultiPoly, family: list[str] | None = None,
                     targets: list[str] | None = None) -> MultiPoly:
    """Rewrite a polynomial symmetric in the `family` variables as a
    polynomial in new variables `targets`, where target k stands for
    sigma_k(family).  Non-family variables ride along unchanged.

    Classical Gauss algorithm: repeatedly eliminate the graded-lex leading
    family monomial by the matching product of elementary symmetric
    polynomials.
    """
    ring = p.ring
    if family is None:
        family = list(ring.names)
    m = len(family)
    if targets is None:
        targets = ["X%d" % k for k in range(1, m + 1)]
    if len(targets) != m:
        raise ValueError("need one target symbol per family variable")

    w = symmetry_witness(p, family)
    if w is not None:
        raise SymmetryError("not symmetric under transposition %s<->%s" % w, w)

    fam_idx = [ring.index(n) for n in family]
    fam_set = set(fam_idx)
    target = Ring([(targets[fam_idx.index(i)], False) if i in fam_set
                   else (nm, ring.laurent[i])
                   for i, nm in enumerate(ring.names)])

    sigma = [None] + [elementary(m, k, ring, family) for k in range(1, m + 1)]
    sig_pow: dict[tuple[int, int], MultiPoly] = {}

    def sigma_power(k: int, d: int) -> MultiPoly:
        got = sig_pow.get((k, d))
        if got is None:
            got = sig_pow[(k, d)] = sigma[k] ** d
        return got

    work = dict(p.terms)
    out: dict = {}
    while work:
        a = max((tuple(e[i] for i in fam_idx) for e in work), key=grlex_key)
        if any(a[k] < a[k + 1] for k in range(m - 1)):
            raise SymmetryError("leading exponent not a partition: %r" % (a,), None)
        d = [a[k] - a[k + 1] for k in range(m - 1)] + [a[m - 1]]
        coeff_terms = {}
        for exps, c in work.items():
            if tuple(exps[i] for i in fam_idx) == a:
                key = tuple(0 if i in fam_set else e
                            for i, e in enumerate(exps))
                coeff_terms[key] = coeff_terms.get(key, 0) + c
        for key, c in coeff_terms.items():
            te = list(key)
            for k in range(m):
                te[fam_idx[k]] = d[k]
            tk = tuple(te)
            s = out.get(tk, 0) + c
            if s:
                out[tk] = s
            elif tk in out:
                del out[tk]
        # subtract coeff * prod sigma_k^{d_k} from the worklist
        eprod = MultiPoly(ring, coeff_terms)
        for k in range(1, m + 1):
            if d[k - 1]:
                eprod = eprod * sigma_power(k, d[k - 1])
        for exps, c in eprod.terms.items():
            s = work.get(exps, 0) - c
            if s:
                work[exps] = s
            elif exps in work:
                del work[exps]
    return MultiPoly(target, out)


def expand_elementary(p: MultiPoly, family: list[str],
                      values: list[str], target: Ring) -> MultiPoly:
    """Inverse of symmetric_reduce for round-trip checks: substitute
    family variable k by sigma_k of the `values` variables of `target`."""
    m = len(values)
    bind = {family[k - 1]: elementary(m, k, target, values)
            for k in range(1, len(family) + 1)}
    return p.substitute(bind, target)


# ---------------------------------------------------------------------------
# universal polynomials

def ring_P(n: int) -> Ring:
    return _join_rings(_family_ring("X", n), _family_ring("Y", n))


def ring_Q(k: int) -> Ring:
    return _family_ring("X", k)


def ring_R(n: int) -> Ring:
    return _join_rings(_family_ring("X", n), _family_ring("Y", n),
                       _family_ring("Z", n))


_cache_lock = threading.Lock()
_cache: dict[str, MultiPoly] = {}
_cache_loaded = False

CACHE_ENV = "GWADAMS_CACHE"


def _cache_path():
    return os.environ.get(CACHE_ENV)


def _load_cache_locked():
    global _cache_loaded
    if _cache_loaded:
        return
    _cache_loaded = True
    path = _cache_path()
    if not path or not os.path.exists(path):
        return
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except (OSError, ValueError):
        return
    from . import __version__
    if obj.get("version") != __version__:
        return
    for key, pobj in obj.get("entries", {}).items():
        _cache[key] = MultiPoly.from_obj(pobj)


def _save_cache_locked():
    path = _cache_path()
    if not path:
        return
    from . import __version__
    obj = {"version": __version__,
           "entries": {k: v.to_obj() for k, v in sorted(_cache.items())}}
    try:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(obj, fh, sort_keys=True, separators=(",", ":"))
    except OSError:
        pass


def _cached(key: str, compute):
    with _cache_lock:
        _load_cache_locked()
        got = _cache.get(key)
    if got is not None:
        return got
    value = compute()
    with _cache_lock:
        _cache[key] = value
        _save_cache_locked()
    return value


def clear_cache():
    global _cache_loaded
    with _cache_lock:
        _cache.clear()
        _cache_loaded = False


def _product_series(factors, ring: Ring, order: int) -> TruncSeries:
    prod = TruncSeries.one(ring, order)
    for f in factors:
        prod = prod * f
    return prod


def universal_P(n: int, m: int | None = None) -> MultiPoly:
    """P_n with prod_{i,j<=m}(1+t U_i V_j) = sum t^n P_n(sigma(U), sigma(V)).

    Computed at arity m (default n) by double symmetric reduction, first in U
    with V-polynomial coefficients, then in V.  Result lives in ring_P(n).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return ring_P(0).one()
    mm = n if m is None else m
    if mm < n:
        raise ValueError("arity m=%d below n=%d does not determine P_n" % (mm, n))

    def compute():
        src = _join_rings(_family_ring("U", mm), _family_ring("V", mm))
        vnames = ["V%d" % j for j in range(1, mm + 1)]
        sig_v = [elementary(mm, k, src, vnames) for k in range(0, min(mm, n) + 1)]
        factors = []
        for i in range(1, mm + 1):
            ui = src.var("U%d" % i)
            coeffs = [sig_v[k] * ui ** k for k in range(len(sig_v))]
            factors.append(TruncSeries(src, n, coeffs))
        top = _product_series(factors, src, n)[n]
        unames = ["U%d" % i for i in range(1, mm + 1)]
        xu = symmetric_reduce(top, unames, ["X%d" % i for i in range(1, mm + 1)])
        xy = symmetric_reduce(xu, ["V%d" % j for j in range(1, mm + 1)],
                              ["Y%d" % j for j in range(1, mm + 1)])
        return xy.rename(ring_P(n))

    if m is not None and m != n:
        return compute()
    return _cached("P:%d" % n, compute)


def universal_Q(i: int, j: int, m: int | None = None) -> MultiPoly:
    """Q_{i,j} with prod_{a1<..<aj<=m}(1+U_{a1}..U_{aj} t) = sum t^i Q_{i,j}.

    Computed at arity m (default ij).  Result lives in ring_Q(ij).
    """
    if i < 0 or j < 1:
        raise ValueError("need i >= 0 and j >= 1")
    if i == 0:
        return ring_Q(i * j).one()
    mm = i * j if m is None else m
    if mm < i * j:
        raise ValueError("arity m=%d below ij=%d" % (mm, i * j))

    def compute():
        from itertools import combinations
        src = _family_ring("U", mm)
        factors = []
        for combo in combinations(range(1, mm + 1), j):
            mono = src.one()
            for a in combo:
                mono = mono * src.var("U%d" % a)
            factors.append(TruncSeries(src, i, [src.one(), mono]))
        top = _product_series(factors, src, i)[i]
        unames = ["U%d" % a for a in range(1, mm + 1)]
        red = symmetric_reduce(top, unames, ["X%d" % a for a in range(1, mm + 1)])
        return red.rename(ring_Q(i * j))

    if m is not None and m != i * j:
        return compute()
    return _cached("Q:%d:%d" % (i, j), compute)


def universal_R(n: int, method: str = "composed", m: int | None = None) -> MultiPoly:
    """R_n for triple products, in ring_R(n).

    method "direct": expand prod_{i,j,k<=m}(1+t U_i V_j W_k) and reduce in all
    three families.  method "composed": R_n = P_n(X, P_1(Y,Z), ..., P_n(Y,Z)).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if method not in ("direct", "composed"):
        raise ValueError("method must be 'direct' or 'composed'")
    if n == 0:
        return ring_R(0).one()
    mm = n if m is None else m
    if mm < n:
        raise ValueError("arity m=%d below n=%d" % (mm, n))

    def compute_direct():
        src = _join_rings(_family_ring("U", mm), _family_ring("V", mm),
                          _family_ring("W", mm))
        wnames = ["W%d" % k for k in range(1, mm + 1)]
        sig_w = [elementary(mm, k, src, wnames) for k in range(0, min(mm, n) + 1)]
        factors = []
        for i in range(1, mm + 1):
            for j in range(1, mm + 1):
                uv = src.var("U%d" % i) * src.var("V%d" % j)
                coeffs = [sig_w[k] * uv ** k for k in range(len(sig_w))]
                factors.append(TruncSeries(src, n, coeffs))
        top = _product_series(factors, src, n)
        p = top[n]
        for prefix, out in (("U", "X"), ("V", "Y"), ("W", "Z")):
            fam = ["%s%d" % (prefix, k) for k in range(1, mm + 1)]
            tgt = ["%s%d" % (out, k) for k in range(1, mm + 1)]
            p = symmetric_reduce(p, fam, tgt)
        return p.rename(ring_R(n))

    def compute_composed():
        target = ring_R(n)
        pn = universal_P(n)
        bindings = {}
        for k in range(1, n + 1):
            pk = universal_P(k).rename(
                target, {"X%d" % s: "Y%d" % s for s in range(1, k + 1)}
                | {"Y%d" % s: "Z%d" % s for s in range(1, k + 1)})
            bindings["Y%d" % k] = pk
            bindings["X%d" % k] = target.var("X%d" % k)
        return pn.substitute(bindings, target)

    compute = compute_direct if method == "direct" else compute_composed
    if m is not None and m != n:
        return compute()
    return _cached("R:%d:%s" % (n, method), compute)


# ---------------------------------------------------------------------------
# closed-form specializations and the verification battery

def ell_args(x: MultiPoly, count: int) -> list[MultiPoly]:
    """The specialization ell_i(x): x, 1, 0, 0, ... (i = 1..count)."""
    ring = x.ring
    out = [x, ring.one()] + [ring.zero()] * max(0, count - 2)
    return out[:count]


def evaluate(p: MultiPoly, assignment: dict[str, MultiPoly],
             target: Ring) -> MultiPoly:
    """Evaluate a universal polynomial, sending unassigned variables to 0."""
    bind = dict(assignment)
    for name in p.ring.names:
        if name not in bind:
            bind[name] = target.zero()
    return p.substitute(bind, target)


def eval_P(n: int, xs: list[MultiPoly], ys: list[MultiPoly],
           target: Ring) -> MultiPoly:
    p = universal_P(n)
    bind = {}
    for k in range(1, n + 1):
        if k <= len(xs):
            bind["X%d" % k] = xs[k - 1]
        if k <= len(ys):
            bind["Y%d" % k] = ys[k - 1]
    return evaluate(p, bind, target)


def eval_Q(i: int, j: int, xs: list[MultiPoly], target: Ring) -> MultiPoly:
    q = universal_Q(i, j)
    bind = {"X%d" % k: xs[k - 1] for k in range(1, min(i * j, len(xs)) + 1)}
    return evaluate(q, bind, target)


def eval_R(n: int, xs, ys, zs, target: Ring) -> MultiPoly:
    r = universal_R(n)
    bind = {}
    for k in range(1, n + 1):
        if k <= len(xs):
            bind["X%d" % k] = xs[k - 1]
        if k <= len(ys):
            bind["Y%d" % k] = ys[k - 1]
        if k <= len(zs):
            bind["Z%d" % k] = zs[k - 1]
    return evaluate(r, bind, target)


def rxy_closed(n: int, x: MultiPoly, y: MultiPoly) -> MultiPoly:
    ring = x.ring
    if n in (0, 4):
        return ring.one()
    if n in (1, 3):
        return x * y
    if n == 2:
        return x * x + y * y - 2
    return ring.zero()


def r_abc_closed(n: int, x: MultiPoly, y: MultiPoly, z: MultiPoly) -> MultiPoly:
    ring = x.ring
    if n in (0, 8):
        return ring.one()
    if n in (1, 7):
        return x * y * z
    if n in (2, 6):
        return (x * x * y * y + x * x * z * z + y * y * z * z
                - 2 * (x * x + y * y + z * z) + 4)
    if n in (3, 5):
        return (x ** 3 * y * z + x * y ** 3 * z + x * y * z ** 3
                - 5 * x * y * z)
    if n == 4:
        return (x ** 4 + y ** 4 + z ** 4 + x ** 2 * y ** 2 * z ** 2
                - 4 * (x ** 2 + y ** 2 + z ** 2) + 6)
    return ring.zero()


def rz_closed(i: int, j: int, x: MultiPoly) -> MultiPoly:
    ring = x.ring
    if i == 0:
        return ring.one()
    if j == 1:
        if i == 1:
            return x
        if i == 2:
            return ring.one()
        return ring.zero()
    if i == 1 and j == 2:
        return ring.one()
    return ring.zero()


def _pi(ring: Ring, unit_names: list[str], order: int) -> TruncSeries:
    """pi_{a_1..a_r}(t): product of (1 + t * a_1^{e1}...a_r^{er}) over all
    sign vectors e in {1,-1}^r, truncated at the given order in t."""
    from itertools import product as iproduct
    series = TruncSeries.one(ring, order)
    for signs in iproduct((1, -1), repeat=len(unit_names)):
        mono = ring.one()
        for name, s in zip(unit_names, signs):
            mono = mono * ring.var(name, s)
        series = series * TruncSeries(ring, order, [ring.one(), mono])
    return series


def check_appendix_b(max_n: int = 4) -> VerificationReport:
    """Verify the universal-polynomial lemmas: closed forms, degree bounds,
    composition, stability, and the Laurent-substitution cross-routes."""
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    rep = VerificationReport("appendix-b")

    # stability of the defining reduction in the arity
    for n in range(1, min(max_n, 4) + 1):
        try:
            hi = universal_P(n, m=n + 1)
            ok = hi == universal_P(n)
        except ContextError:
            hi, ok = None, False
        rep.add(check("P_stability", (n,), ok,
                      universal_P(n).text(), hi.text() if hi else "<extra vars>"))
    for i, j in sorted((i, j) for i in range(1, 7) for j in range(1, 7)
                       if 1 <= i * j <= 6):
        try:
            hi = universal_Q(i, j, m=i * j + 1)
            ok = hi == universal_Q(i, j)
        except ContextError:
            hi, ok = None, False
        rep.add(check("Q_stability", (i, j), ok))
    for n in range(1, min(max_n, 3) + 1):
        rep.add(check("R_stability", (n,), universal_R(n, "direct", m=n + 1)
                      == universal_R(n, "direct")))

    # round-trip: re-expanding the reduced form reproduces the product
    for n in range(1, min(max_n, 3) + 1):
        src = _join_rings(_family_ring("U", n), _family_ring("V", n))
        unames = ["U%d" % k for k in range(1, n + 1)]
        vnames = ["V%d" % k for k in range(1, n + 1)]
        direct = _product_series(
            [TruncSeries(src, n, [src.one(), src.var(u) * src.var(v)])
             for u in unames for v in vnames], src, n)[n]
        back = universal_P(n).substitute(
            {"X%d" % k: elementary(n, k, src, unames) for k in range(1, n + 1)}
            | {"Y%d" % k: elementary(n, k, src, vnames) for k in range(1, n + 1)},
            src)
        rep.add(check("P_round_trip", (n,), direct == back))

    # R_P: direct vs composed
    for n in range(1, min(max_n, 3) + 1):
        d = universal_R(n, "direct")
        c = universal_R(n, "composed")
        rep.add(check("R_P", (n,), d == c, d.text(), c.text()))

    # pi recursion: pi_{a,b,c}(t) = pi_{a,b}(tc) * pi_{a,b}(tc^{-1})
    labc = Ring([("a", True), ("b", True), ("c", True), ("t", False)])
    pab_t = _pi_poly(labc, ["a", "b"])
    lhs = _pi_poly(labc, ["a", "b", "c"])
    rhs = (pab_t.substitute({"t": labc.var("t") * labc.var("c")}, labc)
           * pab_t.substitute({"t": labc.var("t") * labc.var("c", -1)}, labc))
    rep.add(check("pi_recursion", (), lhs == rhs))

    # eq. pi_ab: expansion of pi_{a,b} matches the displayed quartic
    lab = Ring([("a", True), ("b", True), ("t", False)])
    x = lab.var("a") + lab.var("a", -1)
    y = lab.var("b") + lab.var("b", -1)
    t = lab.var("t")
    display = (lab.one() + t * x * y + t ** 2 * (x * x + y * y - 2)
               + t ** 3 * x * y + t ** 4)
    rep.add(check("pi_ab", (), _pi_poly(lab, ["a", "b"]) == display))

    # RXY: P_n at ell-values, symbolic route and Laurent route
    rxy = Ring([("x", False), ("y", False)])
    xs = ell_args(rxy.var("x"), max(max_n, 2))
    ys = ell_args(rxy.var("y"), max(max_n, 2))
    for n in range(0, min(max_n, 4) + 1):
        got = eval_P(n, xs, ys, rxy)
        want = rxy_closed(n, rxy.var("x"), rxy.var("y"))
        rep.add(check("RXY", (n,), got == want, got.text(), want.text()))
    pab = _pi_poly(lab, ["a", "b"])
    for n in range(0, 5):
        got = pab.coefficient("t", n).rename(Ring([("a", True), ("b", True)]))
        lr = Ring([("a", True), ("b", True)])
        want = rxy_closed(n, lr.var("a") + lr.var("a", -1),
                          lr.var("b") + lr.var("b", -1))
        rep.add(check("RXY_laurent", (n,), got == want))

    # RB: P_n(r, ell(B)) - B^n r_n has B-degree <= n-1
    for n in range(1, max_n + 1):
        rb = Ring([("r%d" % k, False) for k in range(1, n + 1)] + [("B", False)])
        rs = [rb.var("r%d" % k) for k in range(1, n + 1)]
        got = eval_P(n, rs, ell_args(rb.var("B"), n), rb)
        rem = got - rb.var("B") ** n * rs[n - 1]
        rep.add(check("RB", (n,), rem.is_zero() or rem.degree_in("B") <= n - 1,
                      got.text(), note="degree bound"))

    # RZ: Q_{i,j} at ell-values
    rx = Ring([("x", False)])
    for i, j in sorted((i, j) for i in range(0, 7) for j in range(1, 7)
                       if i * j <= 6):
        got = eval_Q(i, j, ell_args(rx.var("x"), max(i * j, 2)), rx)
        want = rz_closed(i, j, rx.var("x"))
        rep.add(check("RZ", (i, j), got == want, got.text(), want.text()))

    # R_abc: symbolic route for n <= max_n, pi-route for all n <= 8
    rxyz = Ring([("x", False), ("y", False), ("z", False)])
    exs = ell_args(rxyz.var("x"), max(max_n, 2))
    eys = ell_args(rxyz.var("y"), max(max_n, 2))
    ezs = ell_args(rxyz.var("z"), max(max_n, 2))
    for n in range(0, min(max_n, 4) + 1):
        got = eval_R(n, exs, eys, ezs, rxyz)
        want = r_abc_closed(n, rxyz.var("x"), rxyz.var("y"), rxyz.var("z"))
        rep.add(check("R_abc", (n,), got == want, got.text(), want.text()))
    pabc = _pi_poly(labc, ["a", "b", "c"])
    lr3 = Ring([("a", True), ("b", True), ("c", True)])
    for n in range(0, 9):
        got = pabc.coefficient("t", n).rename(lr3)
        want = r_abc_closed(n, lr3.var("a") + lr3.var("a", -1),
                            lr3.var("b") + lr3.var("b", -1),
                            lr3.var("c") + lr3.var("c", -1))
        rep.add(check("R_abc_laurent", (n,), got == want))

    # one-dimensional classes: Q_{i,j}(x, 0, ...) and P_n(f, x, 0, ...)
    for i, j in sorted((i, j) for i in range(1, 7) for j in range(1, 7)
                       if i * j <= 6):
        got = eval_Q(i, j, [rx.var("x")], rx)
        want = rx.var("x") if (i == 1 and j == 1) else rx.zero()
        rep.add(check("lambda_dim1", (i, j), got == want, got.text(), want.text()))
    for n in range(1, max_n + 1):
        rf = Ring([("f%d" % k, False) for k in range(1, n + 1)] + [("x", False)])
        fs = [rf.var("f%d" % k) for k in range(1, n + 1)]
        got = eval_P(n, fs, [rf.var("x")], rf)
        want = fs[n - 1] * rf.var("x") ** n
        rep.add(check("product_dim1", (n,), got == want, got.text(), want.text()))

    return rep.sort()


def _pi_poly(ring: Ring, unit_names: list[str]) -> MultiPoly:
    """pi as an honest polynomial in the ring's t variable (no truncation)."""
    order = 2 ** len(unit_names)
    series = _pi(Ring([(n, l) for n, l in zip(ring.names, ring.laurent)
                       if n != "t"]), unit_names, order)
    t = ring.var("t")
    out = ring.zero()
    for k, c in enumerate(series.coeffs):
        out = out + c.rename(ring) * t ** k
    return out


def check_appendix_a(max_k: int = 4, group_samples: int = 6,
                     seed: int = 20240820) -> VerificationReport:
    """The group of one-units in t, line classes, and power scaling.

    Entries: series_inverse/series_assoc/series_comm on random truncated
    series with constant term 1; line_product comparing coefficients of
    prod(1 + x_j t) with the elementary symmetric polynomials; and
    power_scaling comparing the t^n coefficient of prod(1 + y_j x^i t)
    with e_n(y) x^{ni}.
    """
    import random

    rep = VerificationReport("appendix-a")
    rng = random.Random(seed)
    ring = _family_ring("s", 3)
    order = 6

    def random_one_unit():
        coeffs = [ring.one()]
        for _ in range(order):
            terms = {}
            for _ in range(rng.randrange(0, 3)):
                exps = tuple(rng.randrange(0, 3) for _ in range(3))
                terms[exps] = rng.randrange(-4, 5)
            coeffs.append(MultiPoly(ring, terms))
        return TruncSeries(ring, order, coeffs)

    one = TruncSeries.one(ring, order)
    for k in range(group_samples):
        f, g, h = (random_one_unit() for _ in range(3))
        rep.add(check("series_inverse", (k,), f * f.inverse() == one))
        rep.add(check("series_assoc", (k,), (f * g) * h == f * (g * h)))
        rep.add(check("series_comm", (k,), f * g == g * f))

    for k in range(1, max_k + 1):
        lines = _family_ring("x", k)
        prod = TruncSeries.one(lines, k + 1)
        for j in range(1, k + 1):
            prod = prod * TruncSeries(lines, k + 1,
                                      [lines.one(), lines.var("x%d" % j)])
        for n in range(0, k + 2):
            want = elementary(k, n, lines,
                              ["x%d" % j for j in range(1, k + 1)])
            rep.add(check("line_product", (k, n), prod[n] == want,
                          prod[n].text(), want.text()))

    for i in (1, 2, -1):
        amb = _join_rings(_family_ring("y", 3), Ring([("x", True)]))
        x = amb.var("x", i)
        prod = TruncSeries.one(amb, 3)
        for j in range(1, 4):
            prod = prod * TruncSeries(amb, 3,
                                      [amb.one(), amb.var("y%d" % j) * x])
        for n in range(1, 4):
            want = elementary(3, n, amb, ["y1", "y2", "y3"]) * amb.var("x", n * i)
            rep.add(check("power_scaling", (n, i), prod[n] == want,
                          prod[n].text(), want.text()))
    return rep.sort()
