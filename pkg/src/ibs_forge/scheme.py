"""The knapsack/pairing identity-based short signature: setup, extract, sign, verify.

The scheme is implemented as published, flaws included: the user picks its
own secret key and publishes Q_ID = id*sk*Q_S with nothing binding Q_ID to the
identity, and the master secret is never used after setup.
"""
from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from typing import Sequence

from . import pairing_core as pc
from .errors import BadLength, ParamsMismatch
from .knapsack import BinaryVector, sample_selection_vector
from .pairing_core import G1Elem, G2Elem, PairingParams, Scalar

HASH_SPEC = "sha256-modq-v1"
MESSAGE_TAG = b"\x01"
IDENTITY_TAG = b"\x02"
DEFAULT_N = 8


@dataclass(frozen=True)
class SystemParams:
    pairing: PairingParams
    P: G1Elem
    Q_S: G1Elem
    hash_spec: str = HASH_SPEC

    def to_dict(self) -> dict:
        d = pc.params_to_dict(self.pairing)
        d.update(P=pc.encode_g1(self.P), Q_S=pc.encode_g1(self.Q_S), hash_spec=self.hash_spec)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> SystemParams:
        pp = pc.params_from_dict(d)
        if d.get("hash_spec", HASH_SPEC) != HASH_SPEC:
            raise ValueError(f"unsupported hash spec {d['hash_spec']!r}")
        P = pc.decode_g1(d["P"], pp)
        if P != pc.generator(pp):
            raise ValueError("P must be the fixed generator")
        Q_S = pc.decode_g1(d["Q_S"], pp)
        if pc.g1_is_identity(Q_S):
            raise ValueError("master public key is the identity")
        return cls(pp, P, Q_S)


@dataclass(frozen=True)
class MasterSecret:
    s: Scalar


@dataclass(frozen=True)
class UserKey:
    identity: bytes
    id: Scalar
    sk: Scalar
    Q_ID: G1Elem

    def public_dict(self) -> dict:
        return {
            "identity": self.identity.decode("utf-8", "backslashreplace"),
            "id": pc.encode_scalar(self.id),
            "Q_ID": pc.encode_g1(self.Q_ID),
        }

    def to_dict(self) -> dict:
        return {**self.public_dict(), "sk": pc.encode_scalar(self.sk)}


@dataclass(frozen=True)
class Signature:
    U: G1Elem
    V: G1Elem

    def to_dict(self) -> dict:
        return {"U": pc.encode_g1(self.U), "V": pc.encode_g1(self.V)}

    @classmethod
    def from_dict(cls, d: dict, params: PairingParams) -> Signature:
        return cls(pc.decode_g1(d["U"], params), pc.decode_g1(d["V"], params))


def _random_nonzero(rng: random.Random, params: PairingParams) -> Scalar:
    return pc.scalar(rng.randrange(1, params.q), params)


def setup(params: PairingParams, rng: random.Random | None = None, *, s: int | None = None
          ) -> tuple[MasterSecret, SystemParams]:
    """PKG setup. ``s`` forces the master secret (test hook)."""
    if s is None:
        if rng is None:
            raise ValueError("setup needs an rng or a forced s")
        s_ = _random_nonzero(rng, params)
    else:
        s_ = pc.scalar(s, params)
        if s_.is_zero():
            raise ValueError("master secret must be nonzero mod q")
    P = pc.generator(params)
    return MasterSecret(s_), SystemParams(params, P, pc.g1_scalar_mul(s_, P))


def hash_to_scalar(data: bytes, msp: SystemParams | PairingParams, tag: bytes = MESSAGE_TAG) -> Scalar:
    """H: {0,1}* -> Z_q^*, as int(SHA-256(tag || data)) mod (q-1) + 1."""
    params = msp.pairing if isinstance(msp, SystemParams) else msp
    digest = hashlib.sha256(tag + data).digest()
    return pc.scalar(int.from_bytes(digest, "big") % (params.q - 1) + 1, params)


def hash_identity(identity: bytes, msp: SystemParams | PairingParams) -> Scalar:
    return hash_to_scalar(identity, msp, IDENTITY_TAG)


def extract(identity: bytes, msp: SystemParams, rng: random.Random | None = None, *,
            sk: int | None = None, id: int | None = None) -> UserKey:
    """User key generation. The user draws sk itself; the master secret is not involved."""
    params = msp.pairing
    id_ = hash_identity(identity, msp) if id is None else pc.scalar(id, params)
    if sk is None:
        if rng is None:
            raise ValueError("extract needs an rng or a forced sk")
        sk_ = _random_nonzero(rng, params)
    else:
        sk_ = pc.scalar(sk, params)
    if id_.is_zero() or sk_.is_zero():
        raise ValueError("id and sk must be nonzero mod q")
    return UserKey(identity, id_, sk_, pc.g1_scalar_mul(id_ * sk_, msp.Q_S))


def sign(message: bytes, key: UserKey, msp: SystemParams, n: int = DEFAULT_N,
         rng: random.Random | None = None, *, b: Sequence[int] | None = None,
         x: Sequence[int] | None = None, lam: int | None = None) -> Signature:
    """Sign ``message``. ``b``, ``x`` and ``lam`` force the randomness and hash (test hooks)."""
    if n < 1:
        raise BadLength(f"vector length must be >= 1, got {n}")
    params = msp.pairing
    lam_ = hash_to_scalar(message, msp) if lam is None else pc.scalar(lam, params)
    if b is not None or x is not None:
        if b is None or x is None or len(b) != n or len(x) != n:
            raise BadLength("forced b and x must both be given with length n")
        bs = [pc.scalar(v, params) for v in b]
        X = BinaryVector(tuple(x))
        if any(v.is_zero() for v in bs) or sum(xi * v.value for xi, v in zip(X, bs)) % params.q == 0:
            raise ValueError("forced randomness gives a degenerate signature")
    else:
        if rng is None:
            raise ValueError("sign needs an rng or forced b and x")
        X = sample_selection_vector(n, rng)
        while True:
            bs = [_random_nonzero(rng, params) for _ in range(n)]
            if sum(xi * v.value for xi, v in zip(X, bs)) % params.q:
                break

    B = [pc.g1_scalar_mul(bi, msp.P) for bi in bs]
    a = [bi * key.sk for bi in bs]
    U = pc.g1_identity(params)
    acc = pc.g1_identity(params)
    for xi, Bi, ai in zip(X, B, a):
        if xi:
            U = pc.g1_add(U, Bi)
            acc = pc.g1_add(acc, pc.g1_scalar_mul(ai, msp.P))
    return Signature(U, pc.g1_scalar_mul(lam_, acc))


def verification_sides(lam: Scalar, sig: Signature, id: Scalar, Q_ID: G1Elem, msp: SystemParams
                       ) -> tuple[G2Elem, G2Elem]:
    """Return (e(U, Q_ID)^lam, e(V, Q_S)^id)."""
    for elem in (sig.U, sig.V, Q_ID, lam, id):
        if elem.params != msp.pairing:
            raise ParamsMismatch("signature, key and system parameters disagree")
    left = pc.g2_pow(pc.pairing(sig.U, Q_ID), lam)
    right = pc.g2_pow(pc.pairing(sig.V, msp.Q_S), id)
    return left, right


def verify_with_lambda(lam: Scalar, sig: Signature, id: Scalar, Q_ID: G1Elem, msp: SystemParams) -> bool:
    left, right = verification_sides(lam, sig, id, Q_ID, msp)
    # identity components satisfy the equation as 1 == 1; reject them
    if pc.g1_is_identity(sig.U) or pc.g1_is_identity(sig.V) or pc.g1_is_identity(Q_ID):
        return False
    return left == right


def verify(message: bytes, sig: Signature, id: Scalar, Q_ID: G1Elem, msp: SystemParams) -> bool:
    return verify_with_lambda(hash_to_scalar(message, msp), sig, id, Q_ID, msp)
