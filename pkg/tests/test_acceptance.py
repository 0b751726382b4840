"""Exit criteria. Each test records one PASS/FAIL line shown in the terminal summary."""
import random
from pathlib import Path

from ibs_forge import pairing_core as pc
from ibs_forge.attacks import ForgeryInputs, forge_new_identity, forge_same_identity
from ibs_forge.cli import main
from ibs_forge.game import AttackKind, GameConfig, reverify, run_forgery_game, run_null_adversary, win_rate
from ibs_forge.knapsack import SubsetSumInstance, subset_sum_solve, verify_subset
from ibs_forge.pairing_core import LARGE, TINY
from ibs_forge.scheme import Signature, extract, hash_identity, setup, sign, verification_sides, verify

from conftest import ACCEPTANCE_LINES
from oracles import exhaustive_subset_sum

PRESETS = [TINY, LARGE]


def record(number, name, ok, detail):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {number}. {name}: {detail}")
    assert ok, detail


def rand_g1(rng, params):
    return pc.g1_scalar_mul(pc.scalar(rng.randrange(params.q), params), pc.generator(params))


def test_1_bilinearity():
    failures, details = 0, []
    for params in PRESETS:
        rng = random.Random(1)
        bad = 0
        for _ in range(1000):
            a, b = pc.scalar(rng.randrange(params.q), params), pc.scalar(rng.randrange(params.q), params)
            X, Y = rand_g1(rng, params), rand_g1(rng, params)
            lhs = pc.pairing(pc.g1_scalar_mul(a, X), pc.g1_scalar_mul(b, Y))
            bad += lhs != pc.g2_pow(pc.pairing(X, Y), a * b)
        P = pc.generator(params)
        nondegenerate = pc.pairing(P, P) != pc.g2_identity(params)
        failures += bad + (not nondegenerate)
        details.append(f"{params.label} {1000 - bad}/1000 exact, e(P,P)!=1: {nondegenerate}")
    record(1, "bilinearity", failures == 0, "; ".join(details))


def test_2_honest_correctness():
    details, ok = [], True
    for params in PRESETS:
        rng = random.Random(2)
        good = 0
        for i in range(1000):
            _, msp = setup(params, rng)
            key = extract(b"user%d" % i, msp, rng)
            m = b"message %d" % i
            good += verify(m, sign(m, key, msp, 8, rng), key.id, key.Q_ID, msp)
        ok &= good == 1000
        details.append(f"{params.label} {good}/1000 verify")
    record(2, "honest correctness", ok, "; ".join(details))


def golden_tiny():
    _, msp = setup(TINY, s=3)
    key = extract(b"user-20", msp, sk=4)  # id = 5
    sig = sign(b"msg-5", key, msp, 2, b=(2, 6), x=(1, 1))  # lambda = 7
    return msp, key, sig, ForgeryInputs(b"msg-5", sig, b"msg-16", key.id, key.Q_ID)  # lambda* = 9


def G(d):
    return pc.G1Elem(d, TINY)


def test_3_attack1_reproduction():
    details, ok = [], True
    for params in PRESETS:
        ts = run_forgery_game(GameConfig(params.label, 8, 3, AttackKind.SAME_ID, 200))
        rate = win_rate(ts)
        ok &= rate == 1.0 and all(reverify(t) for t in ts)
        details.append(f"{params.label} win rate {rate:.3f}")
    msp, key, sig, inp = golden_tiny()
    forged = forge_same_identity(inp, msp)
    left, right = verification_sides(pc.scalar(9, TINY), forged, key.id, key.Q_ID, msp)
    golden_ok = forged == Signature(G(8), G(2)) and left.value == right.value == 3
    ok &= golden_ok
    details.append(f"golden sigma*=(8,2), sides={left.value},{right.value}: {golden_ok}")
    record(3, "attack I", ok, "; ".join(details))


def test_4_attack2_reproduction():
    details, ok = [], True
    for params in PRESETS:
        ts = run_forgery_game(GameConfig(params.label, 8, 4, AttackKind.NEW_ID, 200))
        rate = win_rate(ts)
        ok &= rate == 1.0 and all(reverify(t) for t in ts)
        details.append(f"{params.label} win rate {rate:.3f}")
    msp, key, sig, inp = golden_tiny()
    Q_new, forged = forge_new_identity(inp, b"user-3", msp)  # id' = 9
    id_p = hash_identity(b"user-3", msp)
    left, right = verification_sides(pc.scalar(9, TINY), forged, id_p, Q_new, msp)
    golden_ok = Q_new == G(9) and forged == Signature(G(8), G(2)) and left.value == right.value == 12
    ok &= golden_ok
    details.append(f"golden Q_ID'=9, sides={left.value},{right.value}: {golden_ok}")
    record(4, "attack II", ok, "; ".join(details))


def test_5_negative_controls():
    ts = run_null_adversary(GameConfig("LARGE", 8, 5, AttackKind.SAME_ID, 100))
    null_rate = win_rate(ts)

    rng = random.Random(5)
    rejected = dict.fromkeys(["U", "V", "message", "id", "Q_ID"], 0)
    trials = 1000
    for i in range(trials):
        _, msp = setup(LARGE, rng)
        key = extract(b"u%d" % i, msp, rng)
        m = b"m%d" % i
        sig = sign(m, key, msp, 8, rng)
        delta = rand_g1(rng, LARGE)
        while pc.g1_is_identity(delta):
            delta = rand_g1(rng, LARGE)
        other_id = pc.scalar(key.id.value + rng.randrange(1, LARGE.q), LARGE)
        rejected["U"] += not verify(m, Signature(pc.g1_add(sig.U, delta), sig.V), key.id, key.Q_ID, msp)
        rejected["V"] += not verify(m, Signature(sig.U, pc.g1_add(sig.V, delta)), key.id, key.Q_ID, msp)
        rejected["message"] += not verify(m + b"!", sig, key.id, key.Q_ID, msp)
        rejected["id"] += not verify(m, sig, other_id, key.Q_ID, msp)
        rejected["Q_ID"] += not verify(m, sig, key.id, pc.g1_add(key.Q_ID, delta), msp)
    rates = {k: v / trials for k, v in rejected.items()}
    ok = null_rate <= 0.01 and all(r >= 0.99 for r in rates.values())
    record(5, "negative controls", ok,
           f"null win rate {null_rate:.3f} (<=0.01); tamper rejection " +
           ", ".join(f"{k} {r:.3f}" for k, r in rates.items()) + " (>=0.99)")


def test_6_degenerate_rejection():
    rejected = total = raw_holds = 0
    for params in PRESETS:
        rng = random.Random(6)
        O = pc.g1_identity(params)
        for i in range(200):
            _, msp = setup(params, rng)
            key = extract(b"v%d" % i, msp, rng)
            m = b"m%d" % i
            sig = sign(m, key, msp, 4, rng)
            for cand in (Signature(O, O), Signature(O, sig.V), Signature(sig.U, O)):
                total += 1
                rejected += not verify(m, cand, key.id, key.Q_ID, msp)
            lam = pc.scalar(1, params)
            left, right = verification_sides(lam, Signature(O, O), key.id, key.Q_ID, msp)
            raw_holds += left == right == pc.g2_identity(params)
    ok = rejected == total and raw_holds == 400
    record(6, "degenerate rejection", ok,
           f"{rejected}/{total} identity-component signatures rejected; raw equation 1=1 held in {raw_holds}/400")


def test_7_knapsack_oracle():
    rng = random.Random(7)
    agree = 0
    for _ in range(500):
        n = rng.randint(1, 16)
        weights = tuple(rng.randrange(1, 2**10) for _ in range(n))
        target = rng.randrange(0, sum(weights) + 1) if rng.random() < 0.7 else rng.randrange(0, 2**10)
        inst = SubsetSumInstance(weights, target)
        got = subset_sum_solve(inst)
        expected = exhaustive_subset_sum(weights, target)
        sound = got is None or verify_subset(inst, got)
        agree += (None if got is None else got.bits) == expected and sound
    record(7, "knapsack oracle equivalence", agree == 500, f"{agree}/500 instances agree")


def _pipeline(d: Path, preset: str, seed: int, n: int) -> list[bytes]:
    def cli(*argv):
        code = main([str(a) for a in argv] + ["--json"])
        assert code in (0, 1), argv

    p = lambda name: d / name  # noqa: E731
    cli("params", "--preset", preset, "--seed", seed, "--out", p("params.json"))
    cli("keygen", "--params", p("params.json"), "--identity", f"user{seed}", "--seed", seed,
        "--out", p("key.json"), "--pub-out", p("pub.json"))
    cli("sign", "--params", p("params.json"), "--key", p("key.json"), "--message", "m",
        "--seed", seed, "--n", n, "--out", p("sig.json"))
    cli("attack1", "--params", p("params.json"), "--key", p("pub.json"), "--sig", p("sig.json"),
        "--message", "m", "--target-message", "m*", "--out", p("f1.json"))
    cli("attack2", "--params", p("params.json"), "--key", p("pub.json"), "--sig", p("sig.json"),
        "--message", "m", "--target-message", "m*", "--target-identity", "eve",
        "--out", p("f2.json"), "--key-out", p("eve.json"))
    cli("game", "--preset", preset, "--seed", seed, "--trials", 3, "--attack", "new", "--out", p("game.jsonl"))
    names = ["params.json", "key.json", "pub.json", "sig.json", "f1.json", "f2.json", "eve.json", "game.jsonl"]
    return [p(x).read_bytes() for x in names]


def test_8_determinism(tmp_path, capsys):
    rng = random.Random(8)
    identical = 0
    for k in range(10):
        preset = rng.choice(["TINY", "LARGE"])
        seed, n = rng.randrange(2**32), rng.randint(1, 12)
        a, b = tmp_path / f"{k}a", tmp_path / f"{k}b"
        a.mkdir(), b.mkdir()
        identical += _pipeline(a, preset, seed, n) == _pipeline(b, preset, seed, n)
    capsys.readouterr()
    record(8, "CLI determinism", identical == 10, f"{identical}/10 pipelines byte-identical")
