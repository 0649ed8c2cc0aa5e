"""Acceptance criteria 1-10.  Each test prints one PASS/FAIL line with its wall time
against the stated limit; ``python3 tests/test_acceptance.py`` prints all ten."""
import io as _io
import json
import sys
import time

import pytest

from innaut import gset as G
from innaut import verify as V
from innaut.cli import run
from innaut.constructors import (
    cyclic_group,
    left_zero,
    strict4,
    symmetric_group,
    symmetric_inverse_monoid,
    z2_rees_example,
)
from innaut.corpus import corpus
from innaut.inner import inn, phi_map, reduce_conjugators
from innaut.partial_map import PartialMap, abstract_cayley, subset_of
from innaut.semigroup import find_isomorphism


_write = print


@pytest.fixture(autouse=True)
def _terminal(pytestconfig):
    # write past output capture so the lines show up in plain `pytest -v` runs
    global _write
    tr = pytestconfig.pluginmanager.getplugin("terminalreporter")
    _write = (lambda line: tr.write_line("\n" + line)) if tr else print
    yield


def report(n, ok, seconds, limit, detail=""):
    status = "PASS" if ok and seconds < limit else "FAIL"
    _write(f"criterion {n:>2}: {status}  ({seconds:.1f}s, limit {limit:g}s)  {detail}".rstrip())
    return status == "PASS"


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


# 1 ---------------------------------------------------------------------------


def c1():
    buf = _io.BytesIO()
    code = run(["conj", "clifford8", "--format", "json"], out=buf)
    rep = json.loads(buf.getvalue())
    s12 = [w for w in rep["witnesses"] if w.startswith("s1 ~ s2 via")]
    cent = {k: set(v.split()) for k, v in rep["centralizers"].items()}
    checks = {
        "exit": code == 0,
        "s1~s2": len(s12) == 1,
        "[c]={c}": "c" in rep["classes"],
        "idempotents": rep["idempotents"] == ["e", "f"],
        "C_s1": cent["s1"] == {"e", "f", "s1", "c"},
        "C_s2": cent["s2"] == {"e", "f", "s2"},
    }
    return checks, (s12[0] if s12 else "")


def test_criterion_1():
    checks, seconds = timed(c1)
    checks, witness = checks
    ok = all(checks.values())
    assert report(1, ok, seconds, 1, witness), checks


# 2 ---------------------------------------------------------------------------


def c2():
    S = strict4()  # labels 1..4 are indices 0..3
    one, two, three, four = range(4)
    small, big = phi_map(S, one, three), phi_map(S, one, two)
    return {
        "reduce": reduce_conjugators(S, one, three) == (one, two),
        "empty": small.is_empty,
        "phi_12": big == PartialMap.from_pairs(4, [(one, two), (four, three)]),
        "strict": subset_of(small, big) and small != big,
    }


def test_criterion_2():
    checks, seconds = timed(c2)
    assert report(2, all(checks.values()), seconds, 1), checks


# 3 ---------------------------------------------------------------------------


def c3():
    Z2 = inn(cyclic_group(2))
    S3 = symmetric_group(3)
    I = inn(S3)
    nonempty = [f for f in I if not f.is_empty]
    T, _ = abstract_cayley(nonempty)
    return {
        "Z2": Z2 == {PartialMap.identity(2), PartialMap.empty(2)},
        "S3_size": len(I) == 7,
        "S3_iso": find_isomorphism(T, S3) is not None,
    }


def test_criterion_3():
    checks, seconds = timed(c3)
    assert report(3, all(checks.values()), seconds, 5), checks


# 4 ---------------------------------------------------------------------------


def c4():
    out = {}
    for k in (2, 3):
        I = inn(left_zero(k))
        points = {PartialMap.from_pairs(k, [(g, h)]) for g in range(k) for h in range(k)}
        out[k] = len(I) == k * k + 2 and I == points | {PartialMap.identity(k), PartialMap.empty(k)}
    return out


def test_criterion_4():
    checks, seconds = timed(c4)
    assert report(4, all(checks.values()), seconds, 1), checks


# 5 ---------------------------------------------------------------------------


def c5():
    I2, _ = symmetric_inverse_monoid(2)
    T, _ = abstract_cayley(inn(I2))
    return {"size": T.n == 7, "iso": find_isomorphism(T, I2) is not None}


def test_criterion_5():
    checks, seconds = timed(c5)
    assert report(5, all(checks.values()), seconds, 5), checks


# 6 ---------------------------------------------------------------------------


def c6():
    sem = corpus(max_order=4)
    return V.verify_corpus(sem, ("core", "conjugacy"))


def test_criterion_6():
    res, seconds = timed(c6)
    refuted = res.info.get("literal_alternatives_refuted", {})
    others = [k for k, p in res.properties.items() if p.violations]
    # the criterion asks for all 16 printed sets; sets 15 and 16 are false as printed,
    # so the literal criterion cannot pass.  The amended readings and every other
    # property are still required to hold.
    literal_ok = not refuted
    detail = (f"{res.info['semigroups']} semigroups; printed alternatives "
              f"{sorted(refuted)} refuted in " + ", ".join(
                  f"{v['semigroups']}" for _, v in sorted(refuted.items()))
              + " semigroups (amended readings hold)") if refuted else f"{res.info['semigroups']} semigroups"
    report(6, literal_ok and not others, seconds, 120, detail)
    assert not others, others
    assert seconds < 120
    assert set(refuted) == {15, 16}
    for k in ("alternatives_15_amended", "alternatives_16_amended"):
        assert res.properties[k].checked > 0 and res.properties[k].violations == 0


# 7 ---------------------------------------------------------------------------


def c7():
    sem = corpus(max_order=5)
    res = V.verify_corpus(sem, ("inner",))
    return res, V.aut_comp_strict_on_z2()


def test_criterion_7():
    (res, strict), seconds = timed(c7)
    ok = res.ok and strict
    assert report(7, ok, seconds, 120, f"{res.info['semigroups']} semigroups, strict on Z_2: {strict}"), \
        res.as_dict()


# 8 ---------------------------------------------------------------------------


def test_criterion_8():
    res, seconds = timed(lambda: V.verify_rees(z2_rees_example()))
    pairs = res.properties["domain_nonempty_formula"].checked
    ok = res.ok and pairs == 64
    assert report(8, ok, seconds, 10, f"{pairs} pairs, |Inn| = {res.info['inn_size']}"), res.as_dict()


# 9 ---------------------------------------------------------------------------


def test_criterion_9():
    t0 = time.perf_counter()
    small = {n: V.verify_tx(n) for n in (2, 3)}
    t_small = time.perf_counter() - t0
    big, t_big = timed(lambda: V.verify_tx(4, closure_checks=False))
    ok = all(r.ok for r in small.values()) and big.ok and t_small < 300 and t_big < 1800
    pairs = big.properties["generator_compose_homomorphism"].checked
    detail = (f"n=2,3 {t_small:.1f}s (limit 300s), |Inn(T(3))| = {small[3].info['inn_size']}; "
              f"n=4 generators {big.info['generators']}, {pairs} pairs, {t_big:.1f}s (limit 1800s)")
    assert report(9, ok, t_small + t_big, 2100, detail), {n: r.as_dict() for n, r in {**small, 4: big}.items()}


# 10 --------------------------------------------------------------------------


def c10():
    gs = G.z2_example()
    main = V.verify_gset(gs)
    collapse = {n: V.verify_trivial_collapse(n) for n in (1, 2, 3)}
    return main, collapse


def test_criterion_10():
    (main, collapse), seconds = timed(c10)
    ok = main.ok and all(r.ok for r in collapse.values())
    detail = (f"|End_G| = {main.info.get('end_g')}, |Inn| = {main.info.get('inn_size')}, "
              f"trivial-G collapse n<=3: {all(r.ok for r in collapse.values())}")
    assert report(10, ok, seconds, 300, detail), main.as_dict()


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
