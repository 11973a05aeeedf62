"""Writes golden_eval.tsv: (word, point, value) triples for `thompson eval`.

Values come from composing the piecewise-linear formulas of x0, x1, c and
their inverses with exact fractions; no tree pairs are involved.
"""
import random
from fractions import Fraction as Q

def piecewise(pieces):
    def f(t):
        for a, b, s, c in pieces:
            if a <= t < b:
                return s * t + c
        raise ValueError(t)
    return f

def p(a, b, s, c):
    return (Q(a), Q(b), Q(s), Q(c))

MAPS = {
    "x0": piecewise([p(0, "1/4", 2, 0), p("1/4", "1/2", 1, "1/4"), p("1/2", 1, "1/2", "1/2")]),
    "x0^-1": piecewise([p(0, "1/2", "1/2", 0), p("1/2", "3/4", 1, "-1/4"), p("3/4", 1, 2, -1)]),
    "x1": piecewise([p(0, "1/2", 1, 0), p("1/2", "5/8", 2, "-1/2"), p("5/8", "3/4", 1, "1/8"),
                     p("3/4", 1, "1/2", "1/2")]),
    "x1^-1": piecewise([p(0, "1/2", 1, 0), p("1/2", "3/4", "1/2", "1/4"), p("3/4", "7/8", 1, "-1/8"),
                        p("7/8", 1, 2, -1)]),
    "c": piecewise([p(0, "1/2", "1/2", "1/2"), p("1/2", "3/4", 1, "1/4"), p("3/4", 1, 2, "-3/2")]),
    "c^-1": piecewise([p(0, "1/2", "1/2", "3/4"), p("1/2", "3/4", 2, -1), p("3/4", 1, 1, "-1/4")]),
}

def main():
    rng = random.Random(20)
    rows = []
    for _ in range(50):
        letters = [rng.choice(sorted(MAPS)) for _ in range(rng.randint(1, 6))]
        exp = rng.randint(0, 8)
        t = Q(rng.randrange(2 ** exp), 2 ** exp)
        value = t
        for letter in letters:
            value = MAPS[letter](value)
        rows.append(f"{' '.join(letters)}\t{t}\t{value}")
    with open(__file__.replace(".py", ".tsv"), "w") as out:
        out.write("\n".join(rows) + "\n")

if __name__ == "__main__":
    main()
