"""Print the normal-form word of every member for one n.

    python scripts/normal_forms.py -n 5 [--alphabet an]
"""
import argparse

from iofpar.factorization import factorize, render, render_over_An
from iofpar.generators import eval_word, format_word
from iofpar.pinj import encode
from iofpar.search import enumerate_members

ap = argparse.ArgumentParser()
ap.add_argument("-n", type=int, default=5)
ap.add_argument("--alphabet", choices=("xn", "an"), default="xn")
args = ap.parse_args()

longest = 0
for alpha in enumerate_members(args.n):
    f = factorize(alpha)
    word = render_over_An(f) if args.alphabet == "an" else render(f)
    assert eval_word(args.n, word) == alpha
    longest = max(longest, len(word))
    print(f"{encode(alpha):<32} {format_word(word) or '(empty word)'}")
print(f"# {len(enumerate_members(args.n))} members, longest word {longest} letters")
