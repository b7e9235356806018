"""
Abstract presentation of the n-qubit Clifford group on generators
h1..hn, p1..pn, z1..z(n-1), with relation families R1-R11 and (n >= 3) B1-B3.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .matgroup import Word, evaluate_word, format_word, invert_word, parse_word
from .report import Report
from .smith import invariant_factors

__all__ = [
    "Relator",
    "Presentation",
    "AbelianInvariants",
    "build_presentation",
    "verify_relators",
    "relation_matrix",
    "abelianization",
    "sgn_character",
    "export_presentation",
    "to_gap",
]


@dataclass(frozen=True)
class Relator:
    """One relator instance.

    kind is 'power' (base^exp), 'comm' (a^-1 b^-1 a b) or 'eq' (lhs rhs^-1).
    """

    rule: str
    kind: str
    parts: tuple[Word, ...]
    exponent: int = 1

    @property
    def word(self) -> Word:
        if self.kind == "power":
            return self.parts[0] * self.exponent
        if self.kind == "comm":
            a, b = self.parts
            return invert_word(a) + invert_word(b) + a + b
        lhs, rhs = self.parts
        return lhs + invert_word(rhs)

    @property
    def text(self) -> str:
        return format_word(self.word)


@dataclass
class Presentation:
    n: int
    generator_names: list[str]
    relators: list[Relator] = field(default_factory=list)

    def by_rule(self, rule: str) -> list[Relator]:
        return [r for r in self.relators if r.rule == rule]


@dataclass(frozen=True)
class AbelianInvariants:
    invariant_factors: tuple[int, ...]
    free_rank: int

    @property
    def order(self) -> int | None:
        """Order of the abelianization (None when infinite)."""
        if self.free_rank:
            return None
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out


def _w(text: str) -> Word:
    return parse_word(text)


def build_presentation(n: int) -> Presentation:
    if n < 1:
        raise ValueError("n must be at least 1")
    H = [f"h{i}" for i in range(1, n + 1)]
    P = [f"p{i}" for i in range(1, n + 1)]
    Z = [f"z{j}" for j in range(1, n)]
    rels: list[Relator] = []

    def power(rule, text, k):
        rels.append(Relator(rule, "power", (_w(text),), k))

    def comm(rule, a, b):
        rels.append(Relator(rule, "comm", (_w(a), _w(b))))

    def eq(rule, lhs, rhs):
        rels.append(Relator(rule, "eq", (_w(lhs), _w(rhs))))

    for z in Z:
        power("R1", z, 2)
    for h in H:
        power("R1", h, 2)
    for p in P:
        power("R1", p, 4)
    for h, p in zip(H, P):
        power("R2", f"{h} {p}", 3)
    for h, p in zip(H, P):
        power("R3", f"{h} {p} {h} {p}^3", 3)
    for h, p in zip(H, P):
        power("R4", f"{h} {p}^2 {h} {p}^2", 2)
    for names in (H, P, Z):
        for a in range(len(names)):
            for b in range(a + 1, len(names)):
                comm("R5", names[a], names[b])
    for z in Z:
        for p in P:
            comm("R6", z, p)
    for j, z in enumerate(Z, start=1):
        for i, h in enumerate(H, start=1):
            if i not in (j, j + 1):
                comm("R7", z, h)
    for j in range(1, n):
        z, k = f"z{j}", j + 1
        eq("R8", f"{z} h{j} p{j}^2 h{j}", f"h{j} p{j}^2 p{k}^2 h{j} {z}")
    for j in range(1, n):
        z, k = f"z{j}", j + 1
        eq("R9", f"{z} h{k} p{k}^2 h{k}", f"h{k} p{j}^2 p{k}^2 h{k} {z}")
    for j in range(1, n):
        z, k = f"z{j}", j + 1
        eq("R10", f"{z} h{j} {z}", f"p{j} h{j} p{j} p{k} {z} h{j} p{j}")
    for j in range(1, n):
        z, k = f"z{j}", j + 1
        eq("R11", f"{z} h{k} {z}", f"p{k} h{k} p{j} p{k} {z} h{k} p{k}")
    for j in range(1, n - 1):
        a, b, c = j, j + 1, j + 2
        za, zb = f"z{a}", f"z{b}"
        eq("B1",
           f"{za} h{a} h{b} {za} h{b} h{c} {zb} h{b} h{c} {za} h{a} h{b} {za}",
           f"{zb} h{b} h{c} {zb} h{a} h{b} {za} h{a} h{b} {zb} h{b} h{c} {zb}")
    for j in range(1, n - 1):
        a, b, c = j, j + 1, j + 2
        power("B2", f"z{b} h{a} h{b} z{a} h{a} h{b} z{a}", 3)
    for j in range(1, n - 1):
        a, b, c = j, j + 1, j + 2
        power("B3", f"z{a} h{b} h{c} z{b} h{b} h{c} z{b}", 3)
    return Presentation(n, H + P + Z, rels)


def verify_relators(n: int) -> Report:
    """Evaluate every relator as a matrix word; each must be the identity mod phase."""
    pres = build_presentation(n)
    report = Report(f"relators of C_{n}")
    for r in pres.relators:
        ok = evaluate_word(r.word, n).is_identity()
        report.add(f"{r.rule}: {r.text}", ok)
    return report


def relation_matrix(pres: Presentation) -> list[list[int]]:
    """One row per relator: exponent sums over the generators."""
    pos = {name: i for i, name in enumerate(pres.generator_names)}
    rows = []
    for r in pres.relators:
        row = [0] * len(pos)
        for name, k in r.word:
            row[pos[name]] += k
        rows.append(row)
    return rows


def abelianization(n: int) -> AbelianInvariants:
    pres = build_presentation(n)
    factors, free = invariant_factors(relation_matrix(pres))
    return AbelianInvariants(tuple(factors), free)


def sgn_character(n: int) -> dict[str, int]:
    """The assignment -1 on every generator, checked against all relators."""
    pres = build_presentation(n)
    for r, row in zip(pres.relators, relation_matrix(pres)):
        if sum(row) % 2:
            raise ValueError(
                f"no sign character on C_{n}: relator {r.rule} ({r.text}) has odd length, "
                f"so it forces the value 1 on the CZ generators, a contradiction")
    return {name: -1 for name in pres.generator_names}


# -- export ----------------------------------------------------------------------

def export_presentation(n: int) -> str:
    """Plain-text presentation: one relator per line in word syntax, '# rule' comments."""
    pres = build_presentation(n)
    lines = [f"# generators: {' '.join(pres.generator_names)}"]
    for r in pres.relators:
        lines.append(f"{r.text}  # {r.rule}")
    return "\n".join(lines) + "\n"


def _gap_word(word: Word, rename) -> str:
    return "*".join(rename(nm) if k == 1 else f"{rename(nm)}^{k}" for nm, k in word)


def to_gap(n: int) -> str:
    """GAP session fragment defining the finitely presented group."""
    pres = build_presentation(n)
    rename = (lambda nm: "z" if nm == "z1" else nm) if n == 2 else (lambda nm: nm)
    order = [f"h{i}" for i in range(1, n + 1)] + [f"p{i}" for i in range(1, n + 1)]
    order += [rename(f"z{j}") for j in range(1, n)]
    items, lines, current = [], [], None
    for r in pres.relators:
        if r.kind == "power":
            base = r.parts[0]
            if len(base) == 1 and base[0][1] == 1:
                txt = f"{rename(base[0][0])}^{r.exponent}"
            else:
                txt = f"({_gap_word(base, rename)})^{r.exponent}"
        elif r.kind == "comm":
            txt = f"Comm({_gap_word(r.parts[0], rename)},{_gap_word(r.parts[1], rename)})"
        else:
            txt = f"{_gap_word(r.parts[0], rename)}/({_gap_word(r.parts[1], rename)})"
        if current == r.rule and r.kind != "eq":
            items.append(txt)
        else:
            if items:
                lines.append(",".join(items))
            items = [txt]
        current = r.rule
    lines.append(",".join(items))
    quoted = ",".join(f'"{g}"' for g in order)
    return (
        f"gap>f:=FreeGroup({quoted});;\n"
        "gap>AssignGeneratorVariables(f);;\n"
        "gap>rels:=[ " + ",\n".join(lines) + "];;\n"
        "gap>g:=f/rels;;\n"
        "gap>AssignGeneratorVariables(g);;\n"
        "gap>IsomorphismPermGroup(g);\n"
    )
