import os

import pytest

from gwadams.polyring import Ring
from gwadams import symfunc
from gwadams.symfunc import (
    SymmetryError, check_appendix_b, elementary, eval_P, expand_elementary,
    ring_P, symmetric_reduce, symmetry_witness, universal_P, universal_Q,
    universal_R,
)

U2 = Ring([("U1", False), ("U2", False)])


class TestElementary:
    def test_sigma1(self):
        assert elementary(2, 1) == U2.var("U1") + U2.var("U2")

    def test_sigma2(self):
        assert elementary(2, 2) == U2.var("U1") * U2.var("U2")

    def test_sigma_above_arity(self):
        assert elementary(2, 3).is_zero()

    def test_sigma0(self):
        assert elementary(2, 0) == U2.one()


class TestReduce:
    def test_power_sum(self):
        p = U2.var("U1") ** 2 + U2.var("U2") ** 2
        r = symmetric_reduce(p)
        X = r.ring
        assert r == X.var("X1") ** 2 - 2 * X.var("X2")

    def test_product(self):
        assert symmetric_reduce(U2.var("U1") * U2.var("U2")).text() == "X2"

    def test_mixed(self):
        p = U2.var("U1") ** 2 * U2.var("U2") + U2.var("U1") * U2.var("U2") ** 2
        assert symmetric_reduce(p).text() == "X1*X2"

    def test_round_trip_random(self):
        import random
        rng = random.Random(7)
        R = Ring([("U1", False), ("U2", False), ("U3", False)])
        names = ["U1", "U2", "U3"]
        for _ in range(25):
            # random symmetric polynomial: symmetrize a random polynomial
            from itertools import permutations
            p = R.zero()
            for _ in range(4):
                exps = [rng.randrange(4) for _ in range(3)]
                c = rng.randrange(-5, 6)
                for perm in permutations(exps):
                    p = p + R.monomial(c, dict(zip(names, perm)))
            red = symmetric_reduce(p, names)
            back = expand_elementary(red, ["X1", "X2", "X3"], names, R)
            assert back == p

    def test_not_symmetric_witness(self):
        p = U2.var("U1")
        with pytest.raises(SymmetryError) as ei:
            symmetric_reduce(p)
        assert ei.value.witness == ("U1", "U2")
        assert symmetry_witness(p, ["U1", "U2"]) == ("U1", "U2")

    def test_carry_variables(self):
        R = Ring([("U1", False), ("U2", False), ("c", True)])
        p = (U2.var("U1") + U2.var("U2")).rename(R) * R.var("c", -1)
        r = symmetric_reduce(p, ["U1", "U2"])
        assert r.text() == "X1*c^-1"


class TestUniversalP:
    def test_p0(self):
        assert universal_P(0) == ring_P(0).one()

    def test_p1(self):
        assert universal_P(1).text() == "X1*Y1"

    def test_p2(self):
        R = ring_P(2)
        want = (R.var("X1") ** 2 * R.var("Y2") + R.var("X2") * R.var("Y1") ** 2
                - 2 * R.var("X2") * R.var("Y2"))
        assert universal_P(2) == want

    def test_p1_specialized_to_single_roots(self):
        # expand the defining product at m=1 and specialize both roots
        R = Ring([("v", False)])
        assert eval_P(1, [R.var("v")], [R.var("v")], R) == R.var("v") ** 2

    def test_symmetric_in_xy_swap(self):
        # P_n(X,Y) = P_n(Y,X) since the defining product is
        p = universal_P(3)
        R = p.ring
        swap = {f"X{k}": R.var(f"Y{k}") for k in range(1, 4)}
        swap |= {f"Y{k}": R.var(f"X{k}") for k in range(1, 4)}
        assert p.substitute(swap, R) == p


class TestUniversalQ:
    def test_i1(self):
        for j in (1, 2, 3):
            assert universal_Q(1, j).text() == "X%d" % j

    def test_j1(self):
        for i in (1, 2, 3):
            assert universal_Q(i, 1).text() == "X%d" % i

    def test_q22(self):
        R = universal_Q(2, 2).ring
        want = R.var("X1") * R.var("X3") - R.var("X4")
        assert universal_Q(2, 2) == want


class TestUniversalR:
    def test_r1(self):
        assert universal_R(1).text() == "X1*Y1*Z1"

    def test_methods_agree(self):
        for n in (1, 2):
            assert universal_R(n, "direct") == universal_R(n, "composed")

    def test_bad_method(self):
        with pytest.raises(ValueError):
            universal_R(2, "sideways")


class TestAppendixB:
    def test_battery_all_pass(self):
        rep = check_appendix_b(4)
        assert rep.ok
        lemmas = {e.lemma for e in rep.entries}
        assert {"RXY", "RB", "RZ", "R_P", "R_abc", "lambda_dim1",
                "product_dim1", "P_stability", "Q_stability",
                "pi_recursion"} <= lemmas

    def test_rxy_value_at_2(self):
        rep = check_appendix_b(2)
        entry = next(e for e in rep.entries if e.lemma == "RXY" and e.params == (2,))
        assert entry.status == "pass"
        assert entry.rhs == "x^2 + y^2 - 2"


class TestCache:
    def test_cache_file_roundtrip(self, tmp_path, monkeypatch):
        path = tmp_path / "cache.json"
        monkeypatch.setenv(symfunc.CACHE_ENV, str(path))
        symfunc.clear_cache()
        p3 = universal_P(3)
        assert os.path.exists(path)
        data1 = path.read_bytes()
        symfunc.clear_cache()
        assert universal_P(3) == p3
        # recomputing with a warm file must not change the bytes
        symfunc.clear_cache()
        universal_P(3)
        assert path.read_bytes() == data1
        symfunc.clear_cache()

    def teardown_method(self):
        symfunc.clear_cache()


class TestSeriesGroupBattery:
    def test_full(self):
        rep = symfunc.check_appendix_a()
        assert rep.ok
        lemmas = {e.lemma for e in rep.entries}
        assert {"series_inverse", "series_assoc", "series_comm",
                "line_product", "power_scaling"} <= lemmas

    def test_deterministic(self):
        a = symfunc.check_appendix_a()
        b = symfunc.check_appendix_a()
        assert a.to_json() == b.to_json()
