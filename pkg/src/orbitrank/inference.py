"""Forward-chaining fixpoint engine over annotated ideal-filtration diagrams.

A filtration document lists the subquotients J_1/J_0, ..., J_n/J_{n-1} of an
ideal chain of a C*-algebra, each annotated with the structural attributes
the rank calculus consumes (continuous trace, spectrum dimension, fiber
dimension, ...). The engine tightens per-node and total intervals for the
real rank (rr) and stable rank (tsr) and tracks projection-set facts (gr),
applying the rule set below to a fixpoint. Rules only ever shrink intervals,
so the fixpoint exists, is reached in finitely many sweeps, and is the same
for any fair rule order.

Three-valued guards: an annotation that is unknown never enables a rule.

Rule inventory (ids appear in the trace):

  R0  single-node chain: the total algebra is its unique subquotient
  R1  commutative node, spectrum dimension d known: rr = [d, d]
      (rank of the unitization, a continuous-function algebra on the
      one-point compactification, whose covering dimension is d)
  R2  separable continuous-trace node, infinite-dimensional irreducibles,
      finite-dimensional spectrum: rr <= 1
  R3  two-node chain with an R2-type ideal: rr(total) = max of the two
  R4  chain with all nodes but the last of R2 type: rr(total) = max over nodes
  R5  spectrum sits locally closed in a metric space of known finite
      dimension: the spectrum dimension is finite
  R6  last node commutative with spectrum dimension d: rr(total) >= d
      (the compactified commutative quotient forces the rank up)
  R7  commutative node, spectrum dimension d: tsr = [1+floor(d/2)] exactly
  R8  R2-type node (hence stable): tsr <= 2
  R9  tsr(total) >= tsr of every subquotient (iterated extension bound)
  R10 two-node chain with R2-type ideal: tsr(total) <= max(2, tsr(quotient))
  R11 chain version of R10: tsr(total) <= max(2, tsr(last node))
  R12 Hausdorff spectrum with no compact component: gr(node) = zero
  R13 two-node chain, quotient gr zero: gr(total) = gr of the ideal
  R14 chain version of R13 (all nodes after the first gr zero)
  R15 liminary special solving series (fiber dims infinite, ..., infinite, 1):
      rr(total) = spectrum dimension of the last node
  R16 gr(total) zero and the algebra nonzero: rr(total) >= 1
  R17 elementary node (the compacts): rr = [0, 0], tsr = [2, 2]
      (standard facts, flagged in the trace; disable for purist runs)
  R18 group algebra of a group other than the real line: tsr(total) >= 2
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

from .invariants import GroupFlags, real_rank
from .liealg import LieAlgebra

INFINITE = "infinite"
KINDS = ("continuous_trace", "commutative", "elementary", "generic")
GR_ORDER = {"unknown": 0, "equals_first_ideal": 1, "zero": 2}
DIM_CAP = 64  # annotated dimensions above this are rejected; keeps the lattice finite


class InvalidFiltration(Exception):
    """Structurally inconsistent document (bad kinds, clashing annotations)."""


class FiltrationParseError(Exception):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class Contradiction(Exception):
    """A rule forced an empty interval: the annotations are inconsistent."""

    def __init__(self, target: str, rule: str, lo: int, hi: int):
        super().__init__(f"rule {rule} forces rr/tsr interval [{lo},{hi}] on {target}")
        self.target = target
        self.rule = rule
        self.lo = lo
        self.hi = hi


@dataclass(frozen=True)
class NodeAnnotation:
    kind: str = "generic"
    spectrum_dim: int | None = None
    spectrum_compact: bool | None = None
    irreps_infinite_dim: bool | None = None
    hausdorff_spectrum: bool | None = None
    no_compact_spectrum_component: bool | None = None
    separable: bool | None = None
    fiber_dim: int | str | None = None  # int, INFINITE, or None for unknown
    ambient_dim: int | None = None


@dataclass(frozen=True)
class FiltrationNode:
    name: str
    ann: NodeAnnotation


@dataclass(frozen=True)
class AlgebraFlags:
    liminary: bool | None = None
    group_derived: bool = False
    is_real_line_group: bool = False


@dataclass(frozen=True)
class FiltrationDoc:
    nodes: tuple[FiltrationNode, ...]
    flags: AlgebraFlags = AlgebraFlags()


def _fill(ann: NodeAnnotation, node: str, **implied) -> NodeAnnotation:
    """Fill unknown fields with values implied by the kind; clashes are errors."""
    updates = {}
    for key, value in implied.items():
        current = getattr(ann, key)
        if current is None:
            updates[key] = value
        elif current != value:
            raise InvalidFiltration(
                f"node {node!r}: {key}={current!r} contradicts kind {ann.kind!r}"
            )
    return replace(ann, **updates) if updates else ann


def normalize_doc(doc: FiltrationDoc) -> FiltrationDoc:
    """Validate a document and normalize kind-implied annotations."""
    if not doc.nodes:
        raise InvalidFiltration("a filtration needs at least one node")
    seen = set()
    nodes = []
    for node in doc.nodes:
        if node.name in seen:
            raise InvalidFiltration(f"duplicate node name {node.name!r}")
        if node.name == "total":
            raise InvalidFiltration("'total' is reserved for the whole algebra")
        seen.add(node.name)
        ann = node.ann
        if ann.kind not in KINDS:
            raise InvalidFiltration(f"node {node.name!r}: unknown kind {ann.kind!r}")
        for key in ("spectrum_dim", "ambient_dim"):
            v = getattr(ann, key)
            if v is not None and not 0 <= v <= DIM_CAP:
                raise InvalidFiltration(
                    f"node {node.name!r}: {key}={v} outside [0, {DIM_CAP}]"
                )
        if isinstance(ann.fiber_dim, int) and not 1 <= ann.fiber_dim <= DIM_CAP:
            raise InvalidFiltration(
                f"node {node.name!r}: fiber_dim={ann.fiber_dim} outside [1, {DIM_CAP}]"
            )
        if ann.kind == "elementary":
            ann = _fill(
                ann,
                node.name,
                irreps_infinite_dim=True,
                spectrum_dim=0,
                spectrum_compact=True,
                hausdorff_spectrum=True,
                separable=True,
                no_compact_spectrum_component=False,
                fiber_dim=INFINITE,
            )
        elif ann.kind == "commutative":
            ann = _fill(
                ann,
                node.name,
                irreps_infinite_dim=False,
                hausdorff_spectrum=True,
                fiber_dim=1,
            )
        nodes.append(FiltrationNode(node.name, ann))
    return FiltrationDoc(tuple(nodes), doc.flags)


@dataclass
class Interval:
    lo: int
    hi: int | None  # None = unbounded above

    def as_tuple(self) -> tuple[int, int | None]:
        return (self.lo, self.hi)

    def __str__(self) -> str:
        return f"[{self.lo},{'inf' if self.hi is None else self.hi}]"


@dataclass
class NodeFacts:
    rr: Interval
    tsr: Interval
    gr: str = "unknown"
    spectrum_finite: bool = False


@dataclass(frozen=True)
class TraceEntry:
    rule: str
    target: str  # node name or "total"
    fact: str  # "rr" | "tsr" | "gr" | "spectrum_finite"
    old: object
    new: object
    note: str = ""


@dataclass
class FactTable:
    nodes: dict[str, NodeFacts]
    total: NodeFacts
    trace: list[TraceEntry] = field(default_factory=list)

    def facts(self, target: str) -> NodeFacts:
        return self.total if target == "total" else self.nodes[target]

    def rr_interval(self, target: str = "total") -> tuple[int, int | None]:
        return self.facts(target).rr.as_tuple()

    def tsr_interval(self, target: str = "total") -> tuple[int, int | None]:
        return self.facts(target).tsr.as_tuple()

    def gr_fact(self, target: str = "total") -> str:
        return self.facts(target).gr

    def snapshot(self) -> dict:
        """Facts without the trace, for table comparisons."""
        out = {}
        for name, f in list(self.nodes.items()) + [("total", self.total)]:
            out[name] = (f.rr.as_tuple(), f.tsr.as_tuple(), f.gr, f.spectrum_finite)
        return out


def _initial_table(doc: FiltrationDoc) -> FactTable:
    nodes = {}
    for node in doc.nodes:
        nodes[node.name] = NodeFacts(
            rr=Interval(0, None),
            tsr=Interval(1, None),
            spectrum_finite=node.ann.spectrum_dim is not None,
        )
    return FactTable(nodes=nodes, total=NodeFacts(rr=Interval(0, None), tsr=Interval(1, None)))


Proposal = tuple[str, str, object, str]  # target, fact, value, note


def _stable_hyps(ann: NodeAnnotation, facts: NodeFacts) -> bool:
    """Hypotheses shared by R2/R8/R10/R11: separable continuous trace with
    infinite-dimensional irreducibles and finite-dimensional spectrum."""
    return (
        ann.kind in ("continuous_trace", "elementary")
        and ann.separable is True
        and ann.irreps_infinite_dim is True
        and facts.spectrum_finite
    )


def _max_interval(intervals: Iterable[Interval]) -> tuple[int, int | None]:
    los, his = [], []
    for iv in intervals:
        los.append(iv.lo)
        his.append(iv.hi)
    lo = max(los)
    hi = None if any(h is None for h in his) else max(his)
    return lo, hi


def _rule_r0(doc, table):
    if len(doc.nodes) != 1:
        return
    name = doc.nodes[0].name
    node = table.nodes[name]
    note = "single subquotient is the whole algebra"
    yield ("total", "rr", node.rr.as_tuple(), note)
    yield (name, "rr", table.total.rr.as_tuple(), note)
    yield ("total", "tsr", node.tsr.as_tuple(), note)
    yield (name, "tsr", table.total.tsr.as_tuple(), note)
    yield ("total", "gr", node.gr, note)
    yield (name, "gr", table.total.gr, note)


def _rule_r1(doc, table):
    for node in doc.nodes:
        d = node.ann.spectrum_dim
        if node.ann.kind == "commutative" and d is not None:
            yield (node.name, "rr", (d, d), "covering dimension of the compactified spectrum")


def _rule_r2(doc, table):
    for node in doc.nodes:
        if _stable_hyps(node.ann, table.nodes[node.name]):
            yield (node.name, "rr", (None, 1), "")


def _rule_r3(doc, table):
    if len(doc.nodes) != 2:
        return
    if _stable_hyps(doc.nodes[0].ann, table.nodes[doc.nodes[0].name]):
        value = _max_interval(table.nodes[n.name].rr for n in doc.nodes)
        yield ("total", "rr", value, "extension max rule")


def _rule_r4(doc, table):
    if all(_stable_hyps(n.ann, table.nodes[n.name]) for n in doc.nodes[:-1]):
        value = _max_interval(table.nodes[n.name].rr for n in doc.nodes)
        yield ("total", "rr", value, "filtration max rule")


def _rule_r5(doc, table):
    for node in doc.nodes:
        facts = table.nodes[node.name]
        if node.ann.ambient_dim is not None and not facts.spectrum_finite:
            yield (
                node.name,
                "spectrum_finite",
                True,
                f"locally closed in a metric space of dimension {node.ann.ambient_dim}",
            )


def _rule_r6(doc, table):
    last = doc.nodes[-1]
    d = last.ann.spectrum_dim
    if last.ann.kind == "commutative" and d is not None:
        yield ("total", "rr", (d, None), "commutative quotient lower bound")


def _rule_r7(doc, table):
    for node in doc.nodes:
        d = node.ann.spectrum_dim
        if node.ann.kind == "commutative" and d is not None:
            s = 1 + d // 2
            yield (node.name, "tsr", (s, s), "")


def _rule_r8(doc, table):
    for node in doc.nodes:
        if _stable_hyps(node.ann, table.nodes[node.name]):
            yield (node.name, "tsr", (None, 2), "stable node")


def _rule_r9(doc, table):
    lo = max(table.nodes[n.name].tsr.lo for n in doc.nodes)
    yield ("total", "tsr", (lo, None), "extension lower bound")


def _rule_r10(doc, table):
    if len(doc.nodes) != 2:
        return
    if _stable_hyps(doc.nodes[0].ann, table.nodes[doc.nodes[0].name]):
        hi = table.nodes[doc.nodes[1].name].tsr.hi
        if hi is not None:
            yield ("total", "tsr", (None, max(2, hi)), "")


def _rule_r11(doc, table):
    if all(_stable_hyps(n.ann, table.nodes[n.name]) for n in doc.nodes[:-1]):
        hi = table.nodes[doc.nodes[-1].name].tsr.hi
        if hi is not None:
            yield ("total", "tsr", (None, max(2, hi)), "")


def _rule_r12(doc, table):
    for node in doc.nodes:
        ann = node.ann
        if ann.hausdorff_spectrum is True and ann.no_compact_spectrum_component is True:
            yield (node.name, "gr", "zero", "no projections over a noncompact spectrum")


def _rule_r13(doc, table):
    if len(doc.nodes) != 2:
        return
    if table.nodes[doc.nodes[1].name].gr == "zero":
        yield ("total", "gr", "equals_first_ideal", "")


def _rule_r14(doc, table):
    if len(doc.nodes) < 2:
        return
    if all(table.nodes[n.name].gr == "zero" for n in doc.nodes[1:]):
        if table.nodes[doc.nodes[0].name].gr == "zero":
            yield ("total", "gr", "zero", "every subquotient projection-free")
        else:
            yield ("total", "gr", "equals_first_ideal", "")


def _rule_r15(doc, table):
    if doc.flags.liminary is not True:
        return
    fibers = [n.ann.fiber_dim for n in doc.nodes]
    if any(f is None for f in fibers):
        return
    if any(f != INFINITE for f in fibers[:-1]) or fibers[-1] != 1:
        return
    d = doc.nodes[-1].ann.spectrum_dim
    if d is None:
        return
    if d < 1 and len(doc.nodes) > 1:
        return  # the max formula pins the total only when the last term dominates
    yield ("total", "rr", (d, d), "special solving series")


def _rule_r16(doc, table):
    if table.total.gr == "zero":
        yield ("total", "rr", (1, None), "projection-free nonzero algebra")


def _rule_r17(doc, table):
    note = "standard compacts facts (not among the cited rank results)"
    for node in doc.nodes:
        if node.ann.kind == "elementary":
            yield (node.name, "rr", (0, 0), note)
            yield (node.name, "tsr", (2, 2), note)


def _rule_r18(doc, table):
    if doc.flags.group_derived and not doc.flags.is_real_line_group:
        yield ("total", "tsr", (2, None), "group is not the real line")


RULES: tuple[tuple[str, object], ...] = (
    ("R0", _rule_r0),
    ("R1", _rule_r1),
    ("R2", _rule_r2),
    ("R3", _rule_r3),
    ("R4", _rule_r4),
    ("R5", _rule_r5),
    ("R6", _rule_r6),
    ("R7", _rule_r7),
    ("R8", _rule_r8),
    ("R9", _rule_r9),
    ("R10", _rule_r10),
    ("R11", _rule_r11),
    ("R12", _rule_r12),
    ("R13", _rule_r13),
    ("R14", _rule_r14),
    ("R15", _rule_r15),
    ("R16", _rule_r16),
    ("R17", _rule_r17),
    ("R18", _rule_r18),
)


def _apply(table: FactTable, rule: str, target: str, fact: str, value, note: str) -> bool:
    facts = table.facts(target)
    if fact in ("rr", "tsr"):
        iv: Interval = getattr(facts, fact)
        lo, hi = value
        new_lo = iv.lo if lo is None else max(iv.lo, lo)
        if hi is None:
            new_hi = iv.hi
        else:
            new_hi = hi if iv.hi is None else min(iv.hi, hi)
        if (new_lo, new_hi) == (iv.lo, iv.hi):
            return False
        if new_hi is not None and new_lo > new_hi:
            raise Contradiction(target, rule, new_lo, new_hi)
        old = iv.as_tuple()
        iv.lo, iv.hi = new_lo, new_hi
        table.trace.append(TraceEntry(rule, target, fact, old, (new_lo, new_hi), note))
        return True
    if fact == "gr":
        if GR_ORDER[value] <= GR_ORDER[facts.gr]:
            return False
        old = facts.gr
        facts.gr = value
        table.trace.append(TraceEntry(rule, target, fact, old, value, note))
        return True
    if fact == "spectrum_finite":
        if facts.spectrum_finite:
            return False
        facts.spectrum_finite = True
        table.trace.append(TraceEntry(rule, target, fact, False, True, note))
        return True
    raise ValueError(f"unknown fact kind {fact!r}")


def infer(
    doc: FiltrationDoc,
    use_compacts_facts: bool = True,
    rule_order: Sequence[str] | None = None,
) -> FactTable:
    """Run the rule set to a fixpoint and return the fact table with trace.

    ``use_compacts_facts`` disables R17 when False. ``rule_order`` replays
    the rules in a different fixed order (the fixpoint does not depend on
    it; the trace does), which the confluence tests exercise.
    """
    doc = normalize_doc(doc)
    rules = [(rid, fn) for rid, fn in RULES if use_compacts_facts or rid != "R17"]
    if rule_order is not None:
        by_id = dict(rules)
        rules = [(rid, by_id[rid]) for rid in rule_order if rid in by_id]
    table = _initial_table(doc)
    sweeps = 0
    while True:
        sweeps += 1
        if sweeps > (len(doc.nodes) + 1) * (DIM_CAP + 2) * 8:
            raise RuntimeError("fixpoint iteration failed to settle")  # unreachable
        changed = False
        for rid, fn in rules:
            for target, fact, value, note in fn(doc, table):
                if _apply(table, rid, target, fact, value, note):
                    changed = True
        if not changed:
            return table


def replay_trace(doc: FiltrationDoc, trace: Sequence[TraceEntry]) -> FactTable:
    """Apply a logged trace to a fresh initial table (no rule evaluation)."""
    doc = normalize_doc(doc)
    table = _initial_table(doc)
    for entry in trace:
        facts = table.facts(entry.target)
        if entry.fact in ("rr", "tsr"):
            lo, hi = entry.new
            iv = getattr(facts, entry.fact)
            iv.lo, iv.hi = lo, hi
        elif entry.fact == "gr":
            facts.gr = entry.new
        elif entry.fact == "spectrum_finite":
            facts.spectrum_finite = entry.new
    return table


def derive_group_filtration(L: LieAlgebra, flags: GroupFlags) -> FiltrationDoc:
    """Schematic ideal filtration for the group C*-algebra of an accepted algebra.

    The generic strata of the orbit space form finitely many layers of
    separable continuous-trace algebras with infinite-dimensional
    irreducibles, spectra sitting semi-algebraically (hence locally closed)
    inside the dual space; every rule used here is insensitive to how many
    identically annotated layers there are, so they are collapsed into one
    representative node, omitted entirely for abelian algebras. On top sits
    the commutative character quotient, whose spectrum is a vector space of
    dimension r (the abelianization dimension) with the r-sphere as one-point
    compactification.
    """
    r = real_rank(L, flags)  # validates solvable / exponential / simply connected
    nodes: list[FiltrationNode] = []
    if r < L.dim:
        nodes.append(
            FiltrationNode(
                "strata",
                NodeAnnotation(
                    kind="continuous_trace",
                    separable=True,
                    irreps_infinite_dim=True,
                    hausdorff_spectrum=True,
                    fiber_dim=INFINITE,
                    ambient_dim=L.dim,
                ),
            )
        )
    nodes.append(
        FiltrationNode(
            "characters",
            NodeAnnotation(
                kind="commutative",
                spectrum_dim=r,
                spectrum_compact=False,
                hausdorff_spectrum=True,
                no_compact_spectrum_component=True,
                separable=True,
                fiber_dim=1,
            ),
        )
    )
    return FiltrationDoc(
        nodes=tuple(nodes),
        flags=AlgebraFlags(
            liminary=None,
            group_derived=True,
            is_real_line_group=L.dim == 1,
        ),
    )


# ---------------------------------------------------------------------------
# document formats

ATTR_KEYS = (
    "kind",
    "spectrum_dim",
    "spectrum_compact",
    "irreps_infinite_dim",
    "hausdorff_spectrum",
    "no_compact_spectrum_component",
    "separable",
    "fiber_dim",
    "ambient_dim",
)
FLAG_KEYS = ("liminary", "group_derived", "real_line")


_BOOL_ATTRS = (
    "spectrum_compact",
    "irreps_infinite_dim",
    "hausdorff_spectrum",
    "no_compact_spectrum_component",
    "separable",
    "liminary",
)
_DIM_ATTRS = ("spectrum_dim", "ambient_dim")


def _check_attr(key: str, value, line: int):
    """Semantic check of a parsed attribute value; None means unknown."""
    if value is None:
        return None
    if key == "kind":
        if value not in KINDS:
            raise FiltrationParseError(line, f"unknown kind {value!r}")
        return value
    if key in _BOOL_ATTRS:
        if not isinstance(value, bool):
            raise FiltrationParseError(line, f"{key} must be true, false or unknown")
        return value
    if key == "fiber_dim":
        if value == INFINITE or (isinstance(value, int) and not isinstance(value, bool)):
            return value
        raise FiltrationParseError(line, f"{key} must be a natural number, infinite or unknown")
    if key in _DIM_ATTRS:
        if isinstance(value, int) and not isinstance(value, bool):
            return value
        raise FiltrationParseError(line, f"{key} must be a natural number or unknown")
    raise FiltrationParseError(line, f"unknown attribute {key!r}")


def _parse_attr_value(key: str, raw: str, line: int):
    if key == "kind":
        return _check_attr(key, raw, line)
    if raw == "true":
        value: object = True
    elif raw == "false":
        value = False
    elif raw == "unknown":
        value = None
    elif raw == "infinite":
        value = INFINITE
    else:
        try:
            value = int(raw)
        except ValueError:
            raise FiltrationParseError(line, f"bad value {raw!r} for {key}") from None
    return _check_attr(key, value, line)


def parse_filtration(text: str) -> FiltrationDoc:
    """Parse the line-based filtration format; see the package README."""
    nodes: list[tuple[str, dict]] = []
    flags_seen: dict | None = None
    header_seen = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if not header_seen:
            if tokens != ["filtration", "1"]:
                raise FiltrationParseError(lineno, "expected header 'filtration 1'")
            header_seen = True
            continue
        if tokens[0] == "node":
            if len(tokens) != 2:
                raise FiltrationParseError(lineno, "node lines read 'node <name>'")
            name = tokens[1]
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
                raise FiltrationParseError(lineno, f"bad node name {name!r}")
            if any(n == name for n, _ in nodes):
                raise FiltrationParseError(lineno, f"duplicate node name {name!r}")
            nodes.append((name, {}))
        elif tokens[0] == "attr":
            if not nodes:
                raise FiltrationParseError(lineno, "attr line before any node")
            if len(tokens) != 4 or tokens[2] != "=":
                raise FiltrationParseError(lineno, "attr lines read 'attr <key> = <value>'")
            key = tokens[1]
            if key not in ATTR_KEYS:
                raise FiltrationParseError(lineno, f"unknown attribute {key!r}")
            if key in nodes[-1][1]:
                raise FiltrationParseError(lineno, f"attribute {key!r} set twice")
            nodes[-1][1][key] = _parse_attr_value(key, tokens[3], lineno)
        elif tokens[0] == "flags":
            if flags_seen is not None:
                raise FiltrationParseError(lineno, "flags line appears twice")
            flags_seen = {}
            for tok in tokens[1:]:
                key, sep, raw_value = tok.partition("=")
                if not sep or key not in FLAG_KEYS:
                    raise FiltrationParseError(lineno, f"bad flag {tok!r}")
                if key == "liminary":
                    flags_seen[key] = _parse_attr_value(key, raw_value, lineno)
                else:
                    if raw_value not in ("true", "false"):
                        raise FiltrationParseError(lineno, f"flag {key} must be true or false")
                    flags_seen[key] = raw_value == "true"
        else:
            raise FiltrationParseError(lineno, f"unrecognized line {line!r}")
    if not header_seen:
        raise FiltrationParseError(1, "expected header 'filtration 1'")
    if not nodes:
        raise FiltrationParseError(1, "a filtration needs at least one node")
    flags_seen = flags_seen or {}
    doc = FiltrationDoc(
        nodes=tuple(FiltrationNode(name, NodeAnnotation(**attrs)) for name, attrs in nodes),
        flags=AlgebraFlags(
            liminary=flags_seen.get("liminary"),
            group_derived=flags_seen.get("group_derived", False),
            is_real_line_group=flags_seen.get("real_line", False),
        ),
    )
    return normalize_doc(doc)


def parse_filtration_json(text: str) -> FiltrationDoc:
    """JSON document with the same keys as the text format."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FiltrationParseError(exc.lineno, f"invalid JSON: {exc.msg}") from None
    if not isinstance(data, dict) or data.get("filtration") != 1:
        raise FiltrationParseError(1, "expected {'filtration': 1, 'nodes': [...]}")
    nodes = []
    for entry in data.get("nodes", []):
        name = entry.get("name")
        if not isinstance(name, str):
            raise FiltrationParseError(1, "every node needs a string name")
        attrs = {}
        for key, value in entry.get("attrs", {}).items():
            if key not in ATTR_KEYS:
                raise FiltrationParseError(1, f"unknown attribute {key!r}")
            if value == "unknown":
                value = None
            attrs[key] = _check_attr(key, value, 1)
        nodes.append(FiltrationNode(name, NodeAnnotation(**attrs)))
    raw_flags = data.get("flags", {})
    for key in raw_flags:
        if key not in FLAG_KEYS:
            raise FiltrationParseError(1, f"unknown flag {key!r}")
    liminary = raw_flags.get("liminary")
    if liminary == "unknown":
        liminary = None
    liminary = _check_attr("liminary", liminary, 1)
    doc = FiltrationDoc(
        nodes=tuple(nodes),
        flags=AlgebraFlags(
            liminary=liminary,
            group_derived=bool(raw_flags.get("group_derived", False)),
            is_real_line_group=bool(raw_flags.get("real_line", False)),
        ),
    )
    return normalize_doc(doc)


def load_filtration(path: str) -> FiltrationDoc:
    """Parse a document file, dispatching on the .json extension."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".json"):
        return parse_filtration_json(text)
    return parse_filtration(text)
