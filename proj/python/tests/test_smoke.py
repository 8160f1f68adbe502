import math

import pytest

import qorbit as q

E0 = q.Quaternion(1, 0, 0, 0)
E1 = q.Quaternion(0, 1, 0, 0)
E2 = q.Quaternion(0, 0, 1, 0)
E3 = q.Quaternion(0, 0, 0, 1)


def close(a, b, tol=1e-12):
    return all(abs(x - y) <= tol for x, y in zip(a, b))


def test_quaternion_product():
    assert close((E1 * E2).to_list(), E3.to_list())
    assert close((E2 * E1).to_list(), (-E3).to_list())


def test_bracket_and_group():
    v = q.AlgebraElement(q.Quaternion(), q.PureQuaternion(1, 0, 0))
    w = q.AlgebraElement(q.Quaternion(), q.PureQuaternion(0, 1, 0))
    assert close(q.bracket(v, w).to_list(), [0, 0, 2, 0, 0, 0, 0])
    g = q.exp_group(q.AlgebraElement(q.Quaternion(), q.PureQuaternion(0, 0, math.pi / 2)))
    assert close(g.s.value().to_list(), E3.to_list(), 1e-15)


def test_coadjoint_normal_form():
    x = q.DualElement(2 * E3, q.PureQuaternion(1, 0, 0))
    reducer, reduced = q.normal_form(x)
    assert close(reducer.q.to_list(), [0, 0, -0.5, 0])
    assert close(reduced.to_list(), [0, 0, 0, 2, 0, 0, 0])
    report = q.orbit_report(x)
    assert report["kind"] == "Type2Bundle"
    assert report["casimir"] == pytest.approx(4.0)


def test_type1_errors_map_to_value_error():
    with pytest.raises(ValueError):
        q.normal_form(q.DualElement(q.Quaternion(), q.PureQuaternion(0, 0, 1)))


def test_symplectic_certificates():
    x = q.DualElement(E0, q.PureQuaternion())
    v = q.AlgebraElement(E1, q.PureQuaternion())
    w = q.AlgebraElement(q.Quaternion(), q.PureQuaternion(1, 0, 0))
    assert q.kks_form(x, v, w) == pytest.approx(1.0)
    assert q.d_theta_numeric(x, v, w) == pytest.approx(-1.0, abs=1e-6)
    assert q.liouville_sign() == -1


def test_bracket_table():
    rows = q.bracket_table(q.DualElement(q.Quaternion(0.3, -1, 2, 0.5), q.PureQuaternion(1, 2, 3)))
    assert len(rows) == 37
    assert max(r[4] for r in rows) <= 1e-12


def test_verify_small():
    report = q.verify(seed=42, trials=10)
    assert report["all_pass"]
    assert len(report["properties"]) == 46


def test_simulate_symmetric_body():
    text = "inertia = 1 1 1\nq0 = 1 0 0 0\nmu0 = 0 0 1\ndt = 0.001\nt_end = 1\ncadence = 1000\n"
    out = q.simulate(text)
    final = out["summary"]["final"]["q"]
    assert close(final, [math.cos(1.0), 0, 0, math.sin(1.0)], 1e-10)
    assert out["csv"].startswith("t,q0,q1,q2,q3,")
    with pytest.raises(ValueError):
        q.simulate("inertia = 1 1 1\n")
