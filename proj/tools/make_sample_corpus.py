#!/usr/bin/env python3
"""Regenerate data/sample_corpus: 30 synthetic sequences in three
structural classes (helix-, strand- and coil-rich) with DSSP-style
8-class annotations. Output is deterministic."""

import argparse
import pathlib
import random

# Residue preferences per class; the rest of the alphabet fills in.
PREFERRED = {
    "helix": "AELKMQR",
    "strand": "VIYFWTC",
    "coil": "GPNDSH",
}
ALPHABET = "ARNDCQEGHILKMFPSTWYV"
# 8-class codes per dominant state, plus the codes used for noise.
STATE_CODES = {
    "helix": "HHHHGI",
    "strand": "EEEEB",
    "coil": "TTS-C",
}


def residue(rng, cls):
    if rng.random() < 0.7:
        return rng.choice(PREFERRED[cls])
    return rng.choice(ALPHABET)


def structure_code(rng, cls):
    if rng.random() < 0.85:
        return rng.choice(STATE_CODES[cls])
    other = rng.choice([c for c in STATE_CODES if c != cls])
    return rng.choice(STATE_CODES[other])


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=pathlib.Path(__file__).resolve().parent.parent / "data" / "sample_corpus")
    ap.add_argument("--seed", type=int, default=2014)
    ap.add_argument("--per-class", type=int, default=10)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    seqs, structs = [], []
    n = 0
    for cls in ("helix", "strand", "coil"):
        for _ in range(args.per_class):
            n += 1
            length = rng.randint(36, 90)
            sid = f"sp{n:03d}_{cls}"
            s = "".join(residue(rng, cls) for _ in range(length))
            ss = "".join(structure_code(rng, cls) for _ in range(length))
            seqs.append(f">{sid} synthetic {cls}-rich\n" + "\n".join(s[i:i + 60] for i in range(0, len(s), 60)))
            structs.append(f">{sid}\n{ss}")
    (out / "sequences.fasta").write_text("\n".join(seqs) + "\n")
    (out / "structures.ss").write_text("\n".join(structs) + "\n")


if __name__ == "__main__":
    main()
