"""Win-rate table for every adversary over presets and vector lengths.

    python scripts/win_rates.py --trials 200 --seed 0
"""
import argparse

from ibs_forge.game import AttackKind, GameConfig, run_forgery_game, run_null_adversary, win_rate


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--n", type=int, nargs="+", default=[1, 2, 8, 24])
    args = ap.parse_args()

    print(f"{'preset':<6} {'n':>3} {'same-id':>8} {'new-id':>8} {'null':>8}")
    for preset in ("TINY", "LARGE"):
        for n in args.n:
            row = []
            for kind in (AttackKind.SAME_ID, AttackKind.NEW_ID):
                row.append(win_rate(run_forgery_game(GameConfig(preset, n, args.seed, kind, args.trials))))
            row.append(win_rate(run_null_adversary(GameConfig(preset, n, args.seed, AttackKind.SAME_ID, args.trials))))
            print(f"{preset:<6} {n:>3} " + " ".join(f"{r:>8.3f}" for r in row))


if __name__ == "__main__":
    main()
