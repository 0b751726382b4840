"""Command-line front end.

Exit codes: 0 success, 1 verification failure / LOSE verdict / no subset,
2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import pairing_core as pc
from .attacks import ForgeryInputs, forge_new_identity, forge_same_identity
from .errors import IBSError, InvalidInputSignature
from .game import AttackKind, GameConfig, run_forgery_game, run_null_adversary, win_rate
from .knapsack import MAX_SOLVE_N, SubsetSumInstance, sample_selection_vector, subset_sum_solve
from .scheme import (
    DEFAULT_N,
    Signature,
    SystemParams,
    UserKey,
    extract,
    hash_identity,
    hash_to_scalar,
    setup,
    sign,
    verification_sides,
    verify,
)


class InputError(Exception):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def read_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def write_json(path: str | None, obj) -> None:
    if path:
        Path(path).write_text(dumps(obj), encoding="utf-8")


def load_system(path: str) -> SystemParams:
    try:
        return SystemParams.from_dict(read_json(path))
    except (KeyError, ValueError) as exc:
        raise InputError(f"bad system parameter file {path}: {exc}") from exc


def load_public_key(path: str, msp: SystemParams) -> tuple[bytes, pc.Scalar, pc.G1Elem]:
    d = read_json(path)
    try:
        id_ = pc.decode_scalar(d["id"], msp.pairing)
        Q_ID = pc.decode_g1(d["Q_ID"], msp.pairing)
    except (KeyError, ValueError) as exc:
        raise InputError(f"bad key file {path}: {exc}") from exc
    identity = d.get("identity", "").encode()
    if "identity" in d and hash_identity(identity, msp) != id_:
        raise InputError(f"key file {path}: id does not match the hash of identity {d['identity']!r}")
    return identity, id_, Q_ID


def load_signature(path: str, msp: SystemParams) -> Signature:
    try:
        return Signature.from_dict(read_json(path), msp.pairing)
    except (KeyError, ValueError) as exc:
        raise InputError(f"bad signature file {path}: {exc}") from exc


def g1_view(x: pc.G1Elem) -> str:
    s = pc.encode_g1(x)
    if x.params.label == "TINY":
        s += f"  [toy backend debug view: dlog {pc.debug_dlog(x)}]"
    return s


def emit(args, obj: dict, human: list[str]) -> None:
    write_json(getattr(args, "out", None), obj)
    sys.stdout.write(dumps(obj) if args.json else "\n".join(human) + "\n")


def require_seed(args) -> random.Random:
    if args.seed is None:
        raise InputError(f"{args.command}: --seed is required (no ambient randomness)")
    return random.Random(args.seed)


# -- subcommands --

def cmd_params(args) -> int:
    rng = require_seed(args)
    params = pc.get_preset(args.preset)
    msk, msp = setup(params, rng)
    if args.msk_out:
        write_json(args.msk_out, {"s": pc.encode_scalar(msk.s)})
    emit(args, msp.to_dict(), [
        f"preset   {params.label} (q: {params.bits} bits)",
        f"P        {g1_view(msp.P)}",
        f"Q_S      {g1_view(msp.Q_S)}",
        f"hash     {msp.hash_spec}",
    ])
    return 0


def cmd_keygen(args) -> int:
    rng = require_seed(args)
    msp = load_system(args.params)
    key = extract(args.identity.encode(), msp, rng)
    write_json(args.pub_out, key.public_dict())
    emit(args, key.to_dict(), [
        f"identity {args.identity}",
        f"id       {pc.encode_scalar(key.id)}",
        f"Q_ID     {g1_view(key.Q_ID)}",
    ])
    return 0


def cmd_sign(args) -> int:
    rng = require_seed(args)
    msp = load_system(args.params)
    d = read_json(args.key)
    try:
        identity, id_, Q_ID = load_public_key(args.key, msp)
        sk = pc.decode_scalar(d["sk"], msp.pairing)
    except KeyError as exc:
        raise InputError(f"key file {args.key} has no secret key") from exc
    key = UserKey(identity, id_, sk, Q_ID)
    sig = sign(args.message.encode(), key, msp, args.n, rng)
    emit(args, sig.to_dict(), [f"U        {g1_view(sig.U)}", f"V        {g1_view(sig.V)}"])
    return 0


def cmd_verify(args) -> int:
    msp = load_system(args.params)
    _, id_, Q_ID = load_public_key(args.key, msp)
    sig = load_signature(args.sig, msp)
    ok = verify(args.message.encode(), sig, id_, Q_ID, msp)
    lam = hash_to_scalar(args.message.encode(), msp)
    left, right = verification_sides(lam, sig, id_, Q_ID, msp)
    verdict = "VALID" if ok else "INVALID"
    emit(args, {
        "verdict": verdict,
        "lambda": pc.encode_scalar(lam),
        "lhs": pc.encode_g2(left),
        "rhs": pc.encode_g2(right),
    }, [verdict, f"  e(U,Q_ID)^lambda = {pc.encode_g2(left)}", f"  e(V,Q_S)^ID     = {pc.encode_g2(right)}"])
    return 0 if ok else 1


def _forgery_inputs(args, msp) -> ForgeryInputs:
    _, id_, Q_ID = load_public_key(args.key, msp)
    sig = load_signature(args.sig, msp)
    return ForgeryInputs(args.message.encode(), sig, args.target_message.encode(), id_, Q_ID)


def cmd_attack1(args) -> int:
    msp = load_system(args.params)
    forged = forge_same_identity(_forgery_inputs(args, msp), msp)
    emit(args, forged.to_dict(), [
        f"forged signature on {args.target_message!r} (same identity)",
        f"U*       {g1_view(forged.U)}",
        f"V*       {g1_view(forged.V)}",
    ])
    return 0


def cmd_attack2(args) -> int:
    msp = load_system(args.params)
    target = args.target_identity.encode()
    Q_new, forged = forge_new_identity(_forgery_inputs(args, msp), target, msp)
    new_key = {
        "identity": args.target_identity,
        "id": pc.encode_scalar(hash_identity(target, msp)),
        "Q_ID": pc.encode_g1(Q_new),
    }
    write_json(args.key_out, new_key)
    emit(args, {**forged.to_dict(), "replaced_key": new_key}, [
        f"forged signature on {args.target_message!r} for identity {args.target_identity!r}",
        f"Q_ID'    {g1_view(Q_new)}",
        f"U*       {g1_view(forged.U)}",
        f"V*       {g1_view(forged.V)}",
    ])
    return 0


def cmd_game(args) -> int:
    if args.seed is None:
        raise InputError("game: --seed is required (no ambient randomness)")
    kind = {"same": AttackKind.SAME_ID, "new": AttackKind.NEW_ID, "null": AttackKind.SAME_ID}[args.attack]
    cfg = GameConfig(args.preset, args.n, args.seed, kind, args.trials)
    ts = run_null_adversary(cfg) if args.attack == "null" else run_forgery_game(cfg)
    lines = "".join(t.to_json() + "\n" for t in ts)
    if args.out:
        Path(args.out).write_text(lines, encoding="utf-8")
    if args.json:
        sys.stdout.write(lines)
    else:
        wins = sum(t.verdict == "WIN" for t in ts)
        print(f"{args.attack} adversary, preset {cfg.preset}, n={cfg.n}: {wins}/{len(ts)} WIN "
              f"(win rate {win_rate(ts):.3f})")
    return 0 if all(t.verdict == "WIN" for t in ts) else 1


def _load_instance(text: str) -> SubsetSumInstance:
    src = text
    if not text.lstrip().startswith("{"):
        try:
            src = Path(text).read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read {text}: {exc.strerror}") from exc
    try:
        return SubsetSumInstance.from_dict(json.loads(src))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad subset-sum instance: {exc}") from exc


def cmd_knapsack(args) -> int:
    if args.action == "sample":
        x = sample_selection_vector(args.n, require_seed(args))
        emit(args, {"x": list(x)}, [" ".join(map(str, x))])
        return 0
    inst = _load_instance(args.instance)
    x = subset_sum_solve(inst)
    if x is None:
        emit(args, {"instance": inst.to_dict(), "solution": None}, ["no subset sums to the target"])
        return 1
    chosen = [w for b, w in zip(x, inst.weights) if b]
    emit(args, {"instance": inst.to_dict(), "solution": list(x)},
         [f"X = ({', '.join(map(str, x))})", f"{' + '.join(map(str, chosen)) or '0'} = {inst.target}"])
    return 0


def cmd_demo(args) -> int:
    rng = require_seed(args)
    params = pc.get_preset(args.preset)
    _, msp = setup(params, rng)
    alice = extract(b"alice", msp, rng)
    m, m1, m2 = b"pay bob 10", b"pay mallory 1000", b"transfer everything to mallory"
    sig = sign(m, alice, msp, args.n, rng)
    inp1 = ForgeryInputs(m, sig, m1, alice.id, alice.Q_ID)
    f1 = forge_same_identity(inp1, msp)
    inp2 = ForgeryInputs(m, sig, m2, alice.id, alice.Q_ID)
    Q_carol, f2 = forge_new_identity(inp2, b"carol", msp)
    carol_id = hash_identity(b"carol", msp)

    ok0 = verify(m, sig, alice.id, alice.Q_ID, msp)
    ok1 = verify(m1, f1, alice.id, alice.Q_ID, msp)
    ok2 = verify(m2, f2, carol_id, Q_carol, msp)
    steps = {
        "params": msp.to_dict(),
        "signer": alice.public_dict(),
        "honest": {"message": m.decode(), "signature": sig.to_dict(), "valid": ok0},
        "attack1": {"message": m1.decode(), "signature": f1.to_dict(), "valid": ok1},
        "attack2": {
            "identity": "carol",
            "id": pc.encode_scalar(carol_id),
            "replaced_key": pc.encode_g1(Q_carol),
            "message": m2.decode(),
            "signature": f2.to_dict(),
            "valid": ok2,
        },
    }
    human = [
        f"# setup ({params.label}): P = {g1_view(msp.P)}, Q_S = {g1_view(msp.Q_S)}",
        f"# alice publishes id = {pc.encode_scalar(alice.id)}, Q_ID = {g1_view(alice.Q_ID)}",
        f"1. alice signs {m.decode()!r}: U = {g1_view(sig.U)}, V = {g1_view(sig.V)}",
        f"   verify -> {'VALID' if ok0 else 'INVALID'}",
        f"2. adversary keeps U, rescales V by H(m*)/H(m) for {m1.decode()!r}: V* = {g1_view(f1.V)}",
        f"   verify under alice's key -> {'VALID' if ok1 else 'INVALID'}",
        f"3. adversary publishes Q_ID' = (id'/id) Q_ID = {g1_view(Q_carol)} for 'carol'",
        f"   and rescales V for {m2.decode()!r}: V* = {g1_view(f2.V)}",
        f"   verify under carol's replaced key -> {'VALID' if ok2 else 'INVALID'}",
        "   no secret key, master secret or discrete log was used by the adversary",
    ]
    emit(args, steps, human)
    return 0 if ok0 and ok1 and ok2 else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON on stdout")
    common.add_argument("--seed", type=int, help="RNG seed (required by randomized commands)")
    common.add_argument("--out", help="write the JSON artifact to this file")

    parser = argparse.ArgumentParser(prog="ibs-forge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", parents=[common], help="run setup and write system parameters")
    p.add_argument("--preset", default="TINY", choices=sorted(pc.PRESETS))
    p.add_argument("--msk-out", help="also write the master secret here")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("keygen", parents=[common], help="extract a user key")
    p.add_argument("--params", required=True)
    p.add_argument("--identity", required=True)
    p.add_argument("--pub-out", help="also write the public part of the key here")
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser("sign", parents=[common], help="sign a message")
    p.add_argument("--params", required=True)
    p.add_argument("--key", required=True)
    p.add_argument("--message", required=True)
    p.add_argument("--n", type=int, default=DEFAULT_N, choices=range(1, MAX_SOLVE_N + 1), metavar="N")
    p.set_defaults(func=cmd_sign)

    p = sub.add_parser("verify", parents=[common], help="verify a signature")
    p.add_argument("--params", required=True)
    p.add_argument("--key", required=True)
    p.add_argument("--message", required=True)
    p.add_argument("--sig", required=True)
    p.set_defaults(func=cmd_verify)

    for name, func, help_ in (("attack1", cmd_attack1, "forge for the same identity"),
                              ("attack2", cmd_attack2, "forge for a new identity via key replacement")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--params", required=True)
        p.add_argument("--key", required=True, help="signer's public key file")
        p.add_argument("--message", required=True, help="message of the observed signature")
        p.add_argument("--sig", required=True, help="observed signature file")
        p.add_argument("--target-message", required=True)
        if name == "attack2":
            p.add_argument("--target-identity", required=True)
            p.add_argument("--key-out", help="write the replacement public key here")
        p.set_defaults(func=func)

    p = sub.add_parser("game", parents=[common], help="run seeded forgery-game trials (JSON lines)")
    p.add_argument("--preset", default="TINY", choices=sorted(pc.PRESETS))
    p.add_argument("--attack", default="same", choices=["same", "new", "null"])
    p.add_argument("--n", type=int, default=DEFAULT_N)
    p.add_argument("--trials", type=int, default=10)
    p.set_defaults(func=cmd_game)

    p = sub.add_parser("knapsack", help="subset-sum utilities")
    ksub = p.add_subparsers(dest="action", required=True)
    k = ksub.add_parser("solve", parents=[common], help='solve {"weights": [...], "target": t}')
    k.add_argument("instance", help="JSON text or path to a JSON file")
    k = ksub.add_parser("sample", parents=[common], help="sample a nonzero selection vector")
    k.add_argument("--n", type=int, default=DEFAULT_N)
    p.set_defaults(func=cmd_knapsack)

    p = sub.add_parser("demo", parents=[common], help="honest signature and both forgeries, annotated")
    p.add_argument("--preset", default="TINY", choices=sorted(pc.PRESETS))
    p.add_argument("--n", type=int, default=DEFAULT_N)
    p.set_defaults(func=cmd_demo)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidInputSignature as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (InputError, IBSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
