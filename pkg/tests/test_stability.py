import random
from fractions import Fraction

import pytest

from quiverlab.exactlinalg import Mat, span_dim
from quiverlab.quiver import Arrow, ArrowSplit, DimData, Quiver
from quiverlab.reps import Representation, zero_representation
from quiverlab.sampling import random_leg_stable_aux, random_representation
from quiverlab.stability import (
    MixedSignTheta,
    check_stability_transfer,
    cogenerated_core,
    destabilizer_search,
    generated_closure,
    is_stable_signdef,
    stability_report,
    verify_witness,
)
from quiverlab.surgery import build_aux
from quiverlab.corpus import corpus


def jordan_rep(x, a, b, v=2, d=1):
    q = Quiver(("0",), (Arrow("eps", "0", "0"),))
    split = ArrowSplit((), ("eps",))
    dims = DimData({"0": v}, {"0": d})
    rep = Representation({"eps": Mat(x)}, {"0": Mat(a)}, {"0": Mat(b)})
    return q, split, dims, rep


def test_generated_closure_examples():
    q, _, dims, rep = jordan_rep([[0, 0], [1, 0]], [[1], [0]], [[0, 0]])
    spans = generated_closure(q, dims, rep, {"0": [(1, 0)]})
    assert span_dim(spans["0"]) == 2  # e1, X e1 = e2

    q2, _, dims2, rep2 = jordan_rep([[0, 0], [0, 0]], [[1], [0]], [[0, 0]])
    spans2 = generated_closure(q2, dims2, rep2, {"0": [(1, 0)]})
    assert spans2["0"] == ((Fraction(1), Fraction(0)),)

    spans3 = generated_closure(q2, dims2, rep2, {})
    assert spans3["0"] == ()


def test_generated_closure_monotone():
    rng = random.Random(20)
    e = corpus()["loop2"]
    for _ in range(20):
        rep = random_representation(rng, e.quiver, e.dims)
        small = {"0": [(1, 0)]}
        large = {"0": [(1, 0), (0, 1)]}
        s1 = generated_closure(e.quiver, e.dims, rep, small)
        s2 = generated_closure(e.quiver, e.dims, rep, large)
        for n in e.quiver.nodes:
            assert span_dim(s1[n]) <= span_dim(s2[n])


def test_cogenerated_core_examples():
    q, _, dims, rep = jordan_rep([[0, 1], [0, 0]], [[0], [0]], [[0, 1]])
    core = cogenerated_core(q, dims, rep)
    assert core["0"] == ((Fraction(1), Fraction(0)),)

    _, _, _, rep2 = jordan_rep([[0, 1], [0, 0]], [[0], [0]], [[1, 0]])
    core2 = cogenerated_core(q, dims, rep2)
    assert core2["0"] == ()

    _, _, _, rep3 = jordan_rep([[0, 1], [0, 0]], [[0], [0]], [[0, 0]])
    core3 = cogenerated_core(q, dims, rep3)
    assert span_dim(core3["0"]) == 2


def test_cogenerated_core_monotone_in_b_kernel():
    # enlarging ker B enlarges the core
    q, _, dims, rep_small = jordan_rep([[0, 0], [0, 0]], [[0], [0]], [[1, 1]])
    _, _, _, rep_large = jordan_rep([[0, 0], [0, 0]], [[0], [0]], [[0, 0]])
    small = cogenerated_core(q, dims, rep_small)
    large = cogenerated_core(q, dims, rep_large)
    assert span_dim(small["0"]) <= span_dim(large["0"])


def test_is_stable_signdef_examples():
    theta_pos = {"0": Fraction(1)}
    theta_neg = {"0": Fraction(-1)}
    q, _, dims, r1 = jordan_rep([[0, 1], [0, 0]], [[1], [0]], [[1, 0]])
    assert is_stable_signdef(q, dims, r1, theta_pos)

    _, _, _, r2 = jordan_rep([[0, 1], [0, 0]], [[1], [0]], [[0, 1]])
    assert not is_stable_signdef(q, dims, r2, theta_pos)
    stable, w = stability_report(q, dims, r2, theta_pos)
    assert not stable and w.dims == {"0": 1}
    assert verify_witness(q, dims, r2, theta_pos, w)

    _, _, _, r3 = jordan_rep([[0, 0], [1, 0]], [[1], [0]], [[0, 0]])
    assert is_stable_signdef(q, dims, r3, theta_neg)


def test_mixed_sign_rejected():
    e = corpus()["a2sym"]
    rep = zero_representation(e.quiver, e.dims)
    with pytest.raises(MixedSignTheta):
        is_stable_signdef(e.quiver, e.dims, rep, {"0": Fraction(1), "1": Fraction(-1)})


def test_destabilizer_search_examples():
    theta_pos = {"0": Fraction(1)}
    q, _, dims, r2 = jordan_rep([[0, 1], [0, 0]], [[1], [0]], [[0, 1]])
    w = destabilizer_search(q, dims, r2, theta_pos, trials=10, seed=42)
    assert w is not None and w.dims == {"0": 1}
    assert verify_witness(q, dims, r2, theta_pos, w)

    zrep = zero_representation(q, dims)
    wz = destabilizer_search(q, dims, zrep, theta_pos, trials=10, seed=0)
    assert wz is not None and wz.dims == {"0": 1} and wz.pairing == 1

    _, _, _, r1 = jordan_rep([[0, 1], [0, 0]], [[1], [0]], [[1, 0]])
    assert destabilizer_search(q, dims, r1, theta_pos, trials=100, seed=5) is None


def test_search_never_contradicts_exact_checker():
    rng = random.Random(77)
    for name in ("jordan2", "a2sym", "loop2"):
        e = corpus()[name]
        for k in range(40):
            rep = random_representation(rng, e.quiver, e.dims)
            sign = 1 if k % 2 == 0 else -1
            theta = {n: Fraction(sign * rng.randint(1, 3)) for n in e.quiver.nodes}
            stable, w = stability_report(e.quiver, e.dims, rep, theta)
            found = destabilizer_search(e.quiver, e.dims, rep, theta, trials=40, seed=k)
            if stable:
                assert found is None
            else:
                assert verify_witness(e.quiver, e.dims, rep, theta, w)
                assert w.pairing > 0
            if found is not None:
                assert not stable
                assert verify_witness(e.quiver, e.dims, rep, theta, found)


def test_transfer_basic():
    e = corpus()["jordan2"]
    aux = build_aux(e.quiver, e.split, e.dims)
    rng = random.Random(101)
    xi = {"0": Fraction(1)}
    for _ in range(60):
        rep, t = random_leg_stable_aux(rng, aux)
        rpt = check_stability_transfer(aux, rep, t, xi)
        assert rpt.inclusion_ok
        assert rpt.delta == Fraction(1, 8)


def test_transfer_rejects_non_leg_stable():
    e = corpus()["jordan2"]
    aux = build_aux(e.quiver, e.split, e.dims)
    zrep = zero_representation(aux.quiver, DimData(aux.v, aux.d))
    with pytest.raises(ValueError):
        check_stability_transfer(aux, zrep, {"eps": 0, "loop:0": 0}, {"0": Fraction(1)})


def test_transfer_unstable_image_agrees():
    # a representation whose assembled image keeps an invariant line killed
    # by B: both sides must come out unstable, still in agreement
    e = corpus()["jordan2"]
    aux = build_aux(e.quiver, e.split, e.dims)
    rng = random.Random(7)
    hits = 0
    for _ in range(300):
        rep, t = random_leg_stable_aux(rng, aux)
        rpt = check_stability_transfer(aux, rep, t, {"0": Fraction(1)})
        assert rpt.inclusion_ok
        if not rpt.lhs_stable:
            hits += 1
            assert not rpt.rhs_stable
            assert rpt.lhs_witness is not None
    assert hits > 0  # the sample really exercises the unstable branch


def test_transfer_respects_delta_override():
    e = corpus()["jordan2"]
    aux = build_aux(e.quiver, e.split, e.dims)
    rng = random.Random(8)
    rep, t = random_leg_stable_aux(rng, aux)
    rpt = check_stability_transfer(aux, rep, t, {"0": Fraction(1)}, Fraction(1, 100))
    assert rpt.delta == Fraction(1, 100)
    with pytest.raises(ValueError):
        check_stability_transfer(aux, rep, t, {"0": Fraction(1)}, Fraction(1, 3))
