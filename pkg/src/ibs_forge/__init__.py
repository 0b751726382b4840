"""Knapsack/pairing identity-based short signatures and two universal forgeries against them."""
from .attacks import ForgeryInputs, forge_new_identity, forge_same_identity
from .game import AttackKind, ForgeryTranscript, GameConfig, run_forgery_game, run_null_adversary
from .knapsack import BinaryVector, SubsetSumInstance, sample_selection_vector, subset_sum_solve, verify_subset
from .pairing_core import LARGE, TINY, PairingParams, make_toy_params
from .scheme import MasterSecret, Signature, SystemParams, UserKey, extract, hash_to_scalar, setup, sign, verify

__all__ = [
    "AttackKind", "BinaryVector", "ForgeryInputs", "ForgeryTranscript", "GameConfig", "LARGE",
    "MasterSecret", "PairingParams", "Signature", "SubsetSumInstance", "SystemParams", "TINY", "UserKey",
    "extract", "forge_new_identity", "forge_same_identity", "hash_to_scalar", "make_toy_params",
    "run_forgery_game", "run_null_adversary", "sample_selection_vector", "setup", "sign",
    "subset_sum_solve", "verify", "verify_subset",
]
