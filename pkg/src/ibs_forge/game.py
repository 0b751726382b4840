"""One-signature-query forgery experiment.

Per trial the challenger runs setup and extract for a fresh victim, answers a
single sign query on a random message, then judges the adversary's output:
WIN iff the forged message is fresh and the signature verifies under the key
in effect (the victim's key, or the replacement key the adversary attached).
"""
from __future__ import annotations

import enum
import hashlib
import json
import random
from dataclasses import dataclass
from typing import Callable, Optional

from . import pairing_core as pc
from .attacks import ForgeryInputs, forge_new_identity, forge_same_identity
from .errors import ConfigInvalid
from .pairing_core import G1Elem, Scalar
from .scheme import (
    DEFAULT_N,
    Signature,
    SystemParams,
    extract,
    hash_identity,
    setup,
    sign,
    verify,
)


class AttackKind(str, enum.Enum):
    SAME_ID = "SAME_ID"
    NEW_ID = "NEW_ID"


@dataclass(frozen=True)
class GameConfig:
    preset: str = "TINY"
    n: int = DEFAULT_N
    seed: int = 0
    attack_kind: AttackKind = AttackKind.SAME_ID
    trial_count: int = 1

    def validate(self) -> None:
        if self.preset.upper() not in pc.PRESETS:
            raise ConfigInvalid(f"unknown preset {self.preset!r}")
        if not isinstance(self.trial_count, int) or self.trial_count < 1:
            raise ConfigInvalid(f"trial_count must be >= 1, got {self.trial_count!r}")
        if not 1 <= self.n <= 24:
            raise ConfigInvalid(f"n must be in 1..24, got {self.n}")
        if not 0 <= self.seed < 2**64:
            raise ConfigInvalid("seed must be a 64-bit unsigned integer")
        try:
            AttackKind(self.attack_kind)
        except ValueError:
            raise ConfigInvalid(f"unknown attack kind {self.attack_kind!r}") from None


@dataclass(frozen=True)
class AdversaryView:
    """Everything the adversary gets: public parameters, the victim's public key, one signature."""

    msp: SystemParams
    identity: bytes
    id: Scalar
    Q_ID: G1Elem
    message: bytes
    sig: Signature


@dataclass(frozen=True)
class Forgery:
    identity: bytes
    message: bytes
    sig: Signature
    replaced_key: Optional[G1Elem] = None


Adversary = Callable[[AdversaryView, random.Random], Forgery]


def trial_rng(seed: int, index: int) -> random.Random:
    digest = hashlib.sha256(f"{seed}:{index}".encode()).digest()
    return random.Random(int.from_bytes(digest, "big"))


def _random_message(rng: random.Random, prefix: str) -> bytes:
    return f"{prefix}-{rng.getrandbits(64):016x}".encode()


def _fresh_message(rng: random.Random, avoid: bytes) -> bytes:
    while True:
        m = _random_message(rng, "target")
        if m != avoid:
            return m


def same_identity_adversary(view: AdversaryView, rng: random.Random) -> Forgery:
    m_star = _fresh_message(rng, view.message)
    inp = ForgeryInputs(view.message, view.sig, m_star, view.id, view.Q_ID)
    return Forgery(view.identity, m_star, forge_same_identity(inp, view.msp))


def new_identity_adversary(view: AdversaryView, rng: random.Random) -> Forgery:
    m_star = _fresh_message(rng, view.message)
    target = f"victim-{rng.getrandbits(32):08x}".encode()
    inp = ForgeryInputs(view.message, view.sig, m_star, view.id, view.Q_ID)
    Q_new, sig = forge_new_identity(inp, target, view.msp)
    return Forgery(target, m_star, sig, Q_new)


def null_adversary(view: AdversaryView, rng: random.Random) -> Forgery:
    params = view.msp.pairing

    def rand_point():
        return pc.g1_scalar_mul(pc.scalar(rng.randrange(1, params.q), params), view.msp.P)

    return Forgery(view.identity, _fresh_message(rng, view.message), Signature(rand_point(), rand_point()))


def replay_adversary(view: AdversaryView, rng: random.Random) -> Forgery:
    return Forgery(view.identity, view.message, view.sig)


ADVERSARIES = {AttackKind.SAME_ID: same_identity_adversary, AttackKind.NEW_ID: new_identity_adversary}


def _text(b: bytes) -> str:
    return b.decode("utf-8", "backslashreplace")


@dataclass(frozen=True)
class ForgeryTranscript:
    params: dict
    query: dict
    replaced_key: Optional[str]
    forgery: dict
    fresh: bool
    valid: bool
    verdict: str

    def to_dict(self) -> dict:
        return {
            "params": self.params,
            "query": self.query,
            "replaced_key": self.replaced_key,
            "forgery": self.forgery,
            "fresh": self.fresh,
            "valid": self.valid,
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> ForgeryTranscript:
        return cls(**{k: d[k] for k in ("params", "query", "replaced_key", "forgery", "fresh", "valid", "verdict")})


def run_trial(params: pc.PairingParams, n: int, seed: int, index: int, adversary: Adversary) -> ForgeryTranscript:
    rng = trial_rng(seed, index)
    _, msp = setup(params, rng)
    identity = _random_message(rng, "id")
    key = extract(identity, msp, rng)
    m = _random_message(rng, "query")
    sig = sign(m, key, msp, n, rng)

    view = AdversaryView(msp, identity, key.id, key.Q_ID, m, sig)
    forged = adversary(view, random.Random(rng.getrandbits(128)))

    # challenger side: pick the key in effect and judge
    if forged.replaced_key is not None:
        id_eff, Q_eff = hash_identity(forged.identity, msp), forged.replaced_key
    elif forged.identity == identity:
        id_eff, Q_eff = key.id, key.Q_ID
    else:
        # no key published for an unknown identity
        id_eff, Q_eff = hash_identity(forged.identity, msp), pc.g1_identity(params)
    fresh = forged.message != m
    valid = verify(forged.message, forged.sig, id_eff, Q_eff, msp)

    return ForgeryTranscript(
        params={**msp.to_dict(), "n": n, "seed": seed, "trial": index},
        query={
            "identity": _text(identity),
            "id": pc.encode_scalar(key.id),
            "Q_ID": pc.encode_g1(key.Q_ID),
            "message": _text(m),
            "signature": sig.to_dict(),
        },
        replaced_key=None if forged.replaced_key is None else pc.encode_g1(forged.replaced_key),
        forgery={
            "identity": _text(forged.identity),
            "id": pc.encode_scalar(id_eff),
            "Q_ID": pc.encode_g1(Q_eff),
            "message": _text(forged.message),
            "signature": forged.sig.to_dict(),
        },
        fresh=fresh,
        valid=valid,
        verdict="WIN" if fresh and valid else "LOSE",
    )


def run_forgery_game(cfg: GameConfig, adversary: Adversary | None = None) -> list[ForgeryTranscript]:
    """Run ``cfg.trial_count`` independent trials; the adversary defaults to the configured attack."""
    cfg.validate()
    adv = adversary or ADVERSARIES[AttackKind(cfg.attack_kind)]
    params = pc.get_preset(cfg.preset)
    return [run_trial(params, cfg.n, cfg.seed, i, adv) for i in range(cfg.trial_count)]


def run_null_adversary(cfg: GameConfig) -> list[ForgeryTranscript]:
    return run_forgery_game(cfg, null_adversary)


def reverify(t: ForgeryTranscript | dict) -> bool:
    """Re-check a transcript's forgery using only its serialized fields."""
    d = t.to_dict() if isinstance(t, ForgeryTranscript) else t
    msp = SystemParams.from_dict(d["params"])
    f = d["forgery"]
    id_ = pc.decode_scalar(f["id"], msp.pairing)
    Q = pc.decode_g1(f["Q_ID"], msp.pairing)
    sig = Signature.from_dict(f["signature"], msp.pairing)
    fresh = f["message"] != d["query"]["message"]
    return fresh and verify(f["message"].encode(), sig, id_, Q, msp)


def win_rate(transcripts: list[ForgeryTranscript]) -> float:
    return sum(t.verdict == "WIN" for t in transcripts) / len(transcripts)
