import pytest

from gwadams.gwring import GWElem
from gwadams.lambdaring import (
    GW, KTH, SymClass, adams, adams_negative, check_adams_hyperbolic,
    check_lambda_axioms, forget, lambda_op, lambda_series, rank_op, witt,
)
from gwadams.polyring import GradingError


GENS = ("u1", "u2")


def u(i):
    return SymClass.gen("u%d" % i, gens=GENS)


def scalar(x):
    return SymClass.from_gw(x, gens=GENS)


class TestLambdaSeries:
    def test_rank2_generator(self):
        s = lambda_series(u(1), 3)
        assert s[0] == 1
        assert s[1] == u(1)
        assert s[2] == scalar(GWElem.gamma())
        assert s[3].is_zero()

    def test_sum(self):
        got = lambda_op(2, u(1) + u(2))
        assert got == u(1) * u(2) + 2 * scalar(GWElem.gamma())

    def test_product(self):
        # lambda^2(u1*u2) = gamma*u1^2 + gamma*u2^2 - 2*gamma^2
        g = scalar(GWElem.gamma())
        got = lambda_op(2, u(1) * u(2))
        assert got == g * u(1) ** 2 + g * u(2) ** 2 - 2 * g ** 2

    def test_line_class(self):
        mo = scalar(GWElem.minus_one_class())
        s = lambda_series(mo, 3)
        assert s[1] == mo and s[2].is_zero() and s[3].is_zero()

    def test_decomposition_independence(self):
        # the series of x must be recoverable from any splitting x = y + z
        for x, y in [(u(1) + u(2), u(2)),
                     (u(1) * u(2) + scalar(GWElem.tau()), u(1) * u(2)),
                     (3 * u(1), u(1))]:
            z = x - y
            sx = lambda_series(x, 4)
            sy = lambda_series(y, 4)
            sz = lambda_series(z, 4)
            for n in range(5):
                acc = SymClass.const(0, GW, GENS)
                for i in range(n + 1):
                    acc = acc + sy[i] * sz[n - i]
                assert acc == sx[n]

    def test_negative_order(self):
        with pytest.raises(ValueError):
            lambda_series(u(1), -1)


class TestAdams:
    def test_psi_tau(self):
        tau = SymClass.from_gw(GWElem.tau())
        assert adams(2, tau).to_gw() == -2 * GWElem.eps() * GWElem.gamma()
        assert adams(3, tau).to_gw() == GWElem.tau() * GWElem.gamma()

    def test_psi_h(self):
        h = SymClass.from_gw(GWElem.h())
        assert adams(2, h).to_gw() == GWElem.from_int(2)
        assert adams(3, h).to_gw() == GWElem.h()

    def test_psi0_is_rank(self):
        x = u(1) * u(2)
        assert adams(0, x) == rank_op(x) == 4

    def test_negative(self):
        tau = SymClass.from_gw(GWElem.tau())
        assert adams_negative(-1, tau).to_gw() == -GWElem.tau()
        assert adams_negative(-2, tau).to_gw() == 2 * GWElem.eps() * GWElem.gamma()
        g = SymClass.from_gw(GWElem.gamma())
        assert adams_negative(-1, g) == adams(1, g)

    def test_inhomogeneous_rejected(self):
        with pytest.raises(GradingError):
            adams(2, u(1) + 1)


class TestTheoryMaps:
    def test_forget(self):
        tau = SymClass.from_gw(GWElem.tau())
        img = forget(tau)
        assert img.theory.name == "k"
        assert img.text() == "2*beta^2"
        assert forget(SymClass.from_gw(GWElem.gamma())).text() == "beta^4"
        assert forget(SymClass.from_gw(GWElem.eps())).text() == "-1"

    def test_witt(self):
        assert witt(SymClass.from_gw(GWElem.h())).is_zero()
        assert witt(SymClass.from_gw(GWElem.tau())).is_zero()
        assert witt(SymClass.from_gw(GWElem.gamma())).text() == "gamma"

    def test_forget_requires_gw(self):
        beta = SymClass(KTH.base_ring().var("beta"), KTH)
        with pytest.raises(ValueError):
            forget(beta)


class TestQuotient:
    def test_square_rewrite(self):
        uq = SymClass.gen("u", gens=("u",), quotient=True)
        tau = SymClass.from_gw(GWElem.tau(), gens=("u",), quotient=True)
        assert ((uq - tau) ** 2).is_zero()

    def test_psi2(self):
        uq = SymClass.gen("u", gens=("u",), quotient=True)
        tau = SymClass.from_gw(GWElem.tau(), gens=("u",), quotient=True)
        got = adams(2, uq - tau)
        assert got == 2 * tau * (uq - tau)


class TestJson:
    def test_round_trip_gw(self):
        x = u(1) * u(2) + 2 * u(1) + scalar(GWElem.tau() * GWElem.gamma(-1))
        assert SymClass.from_json(x.to_json()) == x

    def test_round_trip_k(self):
        x = forget(u(1) + scalar(GWElem.tau()))
        assert SymClass.from_json(x.to_json()) == x

    def test_round_trip_quotient(self):
        uq = SymClass.gen("u", gens=("u",), quotient=True)
        x = uq ** 3
        back = SymClass.from_json(x.to_json())
        assert back == x and back.quotient


class TestHyperbolicBattery:
    def test_counts_and_cells(self):
        rep = check_adams_hyperbolic(n_max=5, i_values=(0, 1, 2), tau_max=10)
        assert rep.ok
        md = {e.params for e in rep.entries
              if e.status == "mismatch-documented"}
        assert md == {(2, 0), (2, 2), (4, 0), (4, 2)}
        assert all(e.lemma == "psi_h_1" for e in rep.entries
                   if e.status == "mismatch-documented")

    def test_odd_rows_match(self):
        rep = check_adams_hyperbolic(n_max=5, i_values=(0, 1, 2), tau_max=4)
        for e in rep.entries:
            if e.lemma == "psi_h_1" and e.params[0] % 2:
                assert e.status == "pass"


class TestAxiomBattery:
    def test_reduced_bounds_ok(self):
        rep = check_lambda_axioms(l1_max=3, l2_max=4, psi_max=2)
        assert rep.ok
        lemmas = {e.lemma for e in rep.entries}
        assert {"L1", "L2", "psi_mult", "psi_add", "psi_comp", "psi_rank",
                "forgetful_psi"} <= lemmas
