#!/usr/bin/env python3
"""Writes the golden translations of the thermostat base.

table5.txt: S_A from the three set families of Table 5 (low/medium/high per
quantity, negative/zero/positive per derivative) followed by the target set
A; universe element n is the numeral frac($s^n($z),$s($z)).

table55.txt: T_B, one formula per rule of the .frb file followed by one
aggregation formula per variable, written from the formula template
without going through the library.
"""
import re
import sys
from fractions import Fraction
from pathlib import Path


def nat(n):
    t = "$z"
    for _ in range(n):
        t = f"$s({t})"
    return t


def uni(n):
    return f"frac({nat(n)},$s($z))"


def val(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else str(float(q))


FAMILIES = [
    (["low_{k}", "medium_{k}", "high_{k}"], ["t", "d", "r"]),
    (["negative_d{k}", "zero_d{k}", "positive_d{k}"], ["t", "d", "r"]),
]
SHAPES = [
    [1, 0.5, 0, 0, 0],
    [0, 0.5, 1, 0.5, 0],
    [0, 0, 0, 0.5, 1],
]
TARGET_A = [1, 0.5, 1, 0.5, 1]


def table5():
    lines = []
    for names, ks in FAMILIES:
        for k in ks:
            for name, shape in zip(names, SHAPES):
                s = name.format(k=k)
                lines += [f"$G.{s}({uni(i)}) ~ {val(v)}" for i, v in enumerate(shape)]
    lines += [f"$G.A({uni(i)}) ~ {val(v)}" for i, v in enumerate(TARGET_A)]
    return lines


def table55(frb):
    text = frb.read_text()
    variables = re.search(r"^var\s+([^;]+);", text, re.M).group(1).split()
    rules = re.findall(r"^rule\s+(\w+):\s*if\s+(.+?)\s+then\s+(\w+)\s+is\s+(\w+);", text, re.M)
    lines, producers = [], {x: [] for x in variables}
    for label, ants, out, cons in rules:
        parts = [re.match(r"(\w+)\s+is\s+(\w+)", a.strip()).groups() for a in ants.split(" and ")]
        exs = [f"exists x (uni(x) & $H.{x}(tau,x) & $G.{s}(x))" for x, s in parts]
        body = exs[0]
        for e in exs[1:]:
            body = f"({body} & {e})"
        lines.append(f"time(tau) & uni(y) -> $Hr.{label}.{out}($s(tau),y) ~ ({body} & $G.{cons}(y))")
        producers[out].append(f"$Hr.{label}.{out}($s(tau),y)")
    for x in variables:
        ps = producers[x]
        rhs = "0" if not ps else ps[0] if len(ps) == 1 else "(" + " | ".join(ps) + ")"
        lines.append(f"time(tau) & uni(y) -> $H.{x}($s(tau),y) ~ {rhs}")
    return lines


if __name__ == "__main__":
    data = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data"
    (data / "table5.txt").write_text("\n".join(table5()) + "\n")
    (data / "table55.txt").write_text("\n".join(table55(data / "thermo.frb")) + "\n")
