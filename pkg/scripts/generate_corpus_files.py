#!/usr/bin/env python3
"""
Write corpus algebras and their standard modules as .alg/.mod files.

For every corpus entry: <name>.alg plus one .mod per simple, indecomposable
projective and indecomposable injective module.

Usage:
  python scripts/generate_corpus_files.py --output data/corpus
  python scripts/generate_corpus_files.py --corpus "LinearA(4)" "NakayamaCyclic(4,3)" --p 3
"""
import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.data.corpus import CorpusSpec, standard_corpus
from src.data.formats import dump_algebra, dump_module
from src.modrep import standard_modules


def write_entry(spec: CorpusSpec, output: Path) -> int:
    q = spec.presentation()
    A = spec.build()
    (output / f"{q.name}.alg").write_text(dump_algebra(q), encoding="utf-8")
    std = standard_modules(A)
    written = 1
    for prefix, modules in (("S", std.simples), ("P", std.projectives), ("I", std.injectives)):
        for vertex, M in zip(A.vertices, modules):
            named = M.with_name(f"{prefix}{vertex}")
            (output / f"{q.name}_{prefix}{vertex}.mod").write_text(dump_module(named), encoding="utf-8")
            written += 1
    return written


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--corpus", nargs="+", help="Corpus entries (default: the standard corpus plus K2)")
    ap.add_argument("--p", type=int, default=2)
    ap.add_argument("--output", type=Path, default=Path("data/corpus"))
    args = ap.parse_args()

    args.output.mkdir(parents=True, exist_ok=True)
    if args.corpus:
        corpus = [CorpusSpec.parse(entry, p=args.p) for entry in args.corpus]
    else:
        corpus = standard_corpus(p=args.p, include_rep_infinite=True)

    total = 0
    for spec in corpus:
        count = write_entry(spec, args.output)
        print(f"📝 {spec.label}: {count} files")
        total += count

    print(f"✅ Wrote {total} files to {args.output}")


if __name__ == "__main__":
    main()
