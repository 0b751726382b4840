"""Universal forgeries from a single observed signature.

Both forgers see only public data: the observed (m, sigma), the target
message, the signer's id and Q_ID, and the system parameters.

* same identity: keep U, rescale V by H(m*)/H(m).
* new identity: additionally publish Q_ID' = (id'/id) Q_ID as the target's
  key. Nothing in the scheme authenticates Q_ID', so the verifier accepts it.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import pairing_core as pc
from .errors import InvalidInputSignature, SameMessage
from .pairing_core import G1Elem, Scalar
from .scheme import Signature, SystemParams, hash_identity, hash_to_scalar, verify_with_lambda


@dataclass(frozen=True)
class ForgeryInputs:
    message: bytes
    sig: Signature
    target_message: bytes
    id: Scalar
    Q_ID: G1Elem


def _hashes(inp: ForgeryInputs, msp: SystemParams, lam, lam_star) -> tuple[Scalar, Scalar]:
    if inp.target_message == inp.message:
        raise SameMessage("target message equals the observed message")
    params = msp.pairing
    lam_ = hash_to_scalar(inp.message, msp) if lam is None else pc.scalar(lam, params)
    lam_star_ = hash_to_scalar(inp.target_message, msp) if lam_star is None else pc.scalar(lam_star, params)
    if not verify_with_lambda(lam_, inp.sig, inp.id, inp.Q_ID, msp):
        raise InvalidInputSignature("observed signature does not verify")
    return lam_, lam_star_


def rescale(sig: Signature, lam: Scalar, lam_star: Scalar) -> Signature:
    return Signature(sig.U, pc.g1_scalar_mul(lam_star * pc.scalar_inv(lam), sig.V))


def forge_same_identity(inp: ForgeryInputs, msp: SystemParams, *,
                        lam: int | None = None, lam_star: int | None = None) -> Signature:
    """Forge on ``inp.target_message`` for the original signer.

    ``lam`` / ``lam_star`` override H(m) / H(m*) for fixed test vectors.
    """
    lam_, lam_star_ = _hashes(inp, msp, lam, lam_star)
    return rescale(inp.sig, lam_, lam_star_)


def replacement_key(id: Scalar, Q_ID: G1Elem, target_id: Scalar) -> G1Elem:
    return pc.g1_scalar_mul(target_id * pc.scalar_inv(id), Q_ID)


def forge_new_identity(inp: ForgeryInputs, target_identity: bytes, msp: SystemParams, *,
                       lam: int | None = None, lam_star: int | None = None,
                       target_id: int | None = None) -> tuple[G1Elem, Signature]:
    """Forge on ``inp.target_message`` for ``target_identity`` via key replacement.

    Returns the replacement public key Q_ID' together with the forged signature.
    """
    lam_, lam_star_ = _hashes(inp, msp, lam, lam_star)
    id_prime = hash_identity(target_identity, msp) if target_id is None else pc.scalar(target_id, msp.pairing)
    return replacement_key(inp.id, inp.Q_ID, id_prime), rescale(inp.sig, lam_, lam_star_)
