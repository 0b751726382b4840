"""Abstract pairing groups and an exact toy backend.

G1 is an additive group of prime order q, G2 a multiplicative group of the
same order, and ``pairing`` a bilinear map G1 x G1 -> G2.  The toy backend
stores a G1 element as its discrete log d (meaning dP) and realizes G2 as the
order-q subgroup of Z_p^* generated by g, so that e(aP, bP) = g^(ab mod q).
This is insecure by design and exists only to make every equation checkable.

Code outside this module must go through the operations defined here and
never read ``G1Elem.dlog`` directly.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from sympy import isprime

from .errors import (
    BadGenerator,
    NotPrime,
    OrderMismatch,
    ParamsError,
    ParamsMismatch,
    ZeroInverse,
)


@dataclass(frozen=True)
class PairingParams:
    p: int
    q: int
    g: int
    label: str = "custom"

    @property
    def bits(self) -> int:
        return self.q.bit_length()


def _order_is(g: int, q: int, p: int) -> bool:
    # q prime, so g has order exactly q iff g != 1 and g^q == 1
    return g % p != 1 and pow(g, q, p) == 1


def make_toy_params(p: int, q: int, g: int, label: str = "custom") -> PairingParams:
    """Validate (p, q, g) and return the parameter set.

    Raises NotPrime, OrderMismatch or BadGenerator.
    """
    for name, v in (("p", p), ("q", q)):
        if not isprime(v):
            raise NotPrime(f"{name}={v} is not prime")
    if (p - 1) % q:
        raise OrderMismatch(f"q={q} does not divide p-1={p - 1}")
    if not 2 <= g <= p - 1 or not _order_is(g, q, p):
        raise BadGenerator(f"g={g} does not have order {q} mod {p}")
    return PairingParams(p, q, g, label)


TINY = make_toy_params(23, 11, 2, "TINY")

# Pinned output of scripts/find_large_params.py: q = first prime >= 2^160,
# p = 2*q*30 + 1, g = 2^((p-1)/q) mod p.
LARGE = make_toy_params(
    87690098239854175092221089962976981179355952578981,
    1461501637330902918203684832716283019655932542983,
    1152921504606846976,
    "LARGE",
)

PRESETS = {"TINY": TINY, "LARGE": LARGE}


def get_preset(name: str) -> PairingParams:
    try:
        return PRESETS[name.upper()]
    except KeyError:
        raise ParamsError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}") from None


@dataclass(frozen=True)
class Scalar:
    """Element of Z_q."""

    value: int
    params: PairingParams

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.params.q)

    def __int__(self):
        return self.value

    def is_zero(self) -> bool:
        return self.value == 0

    def __add__(self, other: Scalar) -> Scalar:
        _same(self.params, other.params)
        return Scalar(self.value + other.value, self.params)

    def __mul__(self, other: Scalar) -> Scalar:
        _same(self.params, other.params)
        return Scalar(self.value * other.value, self.params)


@dataclass(frozen=True)
class G1Elem:
    dlog: int
    params: PairingParams

    def __post_init__(self):
        object.__setattr__(self, "dlog", self.dlog % self.params.q)


@dataclass(frozen=True)
class G2Elem:
    value: int
    params: PairingParams

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.params.p)


def _same(a: PairingParams, b: PairingParams) -> None:
    if a != b:
        raise ParamsMismatch(f"elements from different parameter sets ({a.label} vs {b.label})")


def scalar(value: int, params: PairingParams) -> Scalar:
    return Scalar(value, params)


def scalar_inv(k: Scalar) -> Scalar:
    if k.is_zero():
        raise ZeroInverse("0 has no inverse mod q")
    return Scalar(pow(k.value, -1, k.params.q), k.params)


def generator(params: PairingParams) -> G1Elem:
    return G1Elem(1, params)


def g1_identity(params: PairingParams) -> G1Elem:
    return G1Elem(0, params)


def g2_identity(params: PairingParams) -> G2Elem:
    return G2Elem(1, params)


def g1_add(x: G1Elem, y: G1Elem) -> G1Elem:
    _same(x.params, y.params)
    return G1Elem(x.dlog + y.dlog, x.params)


def g1_neg(x: G1Elem) -> G1Elem:
    return G1Elem(-x.dlog, x.params)


def g1_scalar_mul(k: Scalar, x: G1Elem) -> G1Elem:
    _same(k.params, x.params)
    return G1Elem(k.value * x.dlog, x.params)


def g1_is_identity(x: G1Elem) -> bool:
    return x.dlog == 0


def pairing(x: G1Elem, y: G1Elem) -> G2Elem:
    _same(x.params, y.params)
    pp = x.params
    return G2Elem(pow(pp.g, x.dlog * y.dlog % pp.q, pp.p), pp)


def g2_mul(x: G2Elem, y: G2Elem) -> G2Elem:
    _same(x.params, y.params)
    return G2Elem(x.value * y.value, x.params)


def g2_pow(x: G2Elem, k: Scalar) -> G2Elem:
    _same(x.params, k.params)
    return G2Elem(pow(x.value, k.value, x.params.p), x.params)


# -- canonical encoding: lowercase hex, no leading zeros ("0" for zero) --

def to_hex(n: int) -> str:
    return format(n, "x")


def from_hex(s: str) -> int:
    s = s.strip().lower()
    if s.startswith("0x"):
        s = s[2:]
    if not s or any(c not in "0123456789abcdef" for c in s):
        raise ValueError(f"not a hex string: {s!r}")
    return int(s, 16)


def encode_g1(x: G1Elem) -> str:
    return to_hex(x.dlog)


def decode_g1(s: str, params: PairingParams) -> G1Elem:
    v = from_hex(s)
    if v >= params.q:
        raise ValueError(f"G1 encoding {s!r} out of range")
    return G1Elem(v, params)


def encode_g2(x: G2Elem) -> str:
    return to_hex(x.value)


def decode_g2(s: str, params: PairingParams) -> G2Elem:
    v = from_hex(s)
    if not 1 <= v < params.p or pow(v, params.q, params.p) != 1:
        raise ValueError(f"G2 encoding {s!r} is not in the order-q subgroup")
    return G2Elem(v, params)


def encode_scalar(k: Scalar) -> str:
    return to_hex(k.value)


def decode_scalar(s: str, params: PairingParams) -> Scalar:
    v = from_hex(s)
    if v >= params.q:
        raise ValueError(f"scalar encoding {s!r} out of range")
    return Scalar(v, params)


def debug_dlog(x: G1Elem) -> int:
    """Toy-backend debug view of a G1 element. For display only."""
    return x.dlog


# -- parameter files: {"p": "...", "q": "...", "g": "...", "label": "..."} --

def params_to_dict(params: PairingParams) -> dict:
    return {"p": str(params.p), "q": str(params.q), "g": str(params.g), "label": params.label}


def params_from_dict(d: dict) -> PairingParams:
    try:
        p, q, g = (int(d[k]) for k in ("p", "q", "g"))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParamsError(f"malformed parameter object: {exc}") from exc
    return make_toy_params(p, q, g, str(d.get("label", "custom")))


def load_params(path: str | Path) -> PairingParams:
    return params_from_dict(json.loads(Path(path).read_text()))
