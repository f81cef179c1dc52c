"""Representation model, polynomial constraint DSL, satisfaction predicate.

A constraint couples a polynomial over the four coordinates with a target
class (perfect power, zero product, or Pythagorean legs), per-variable
domains, and linear side conditions.  Satisfaction is decided exactly from
a representation, with a certifying witness.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

from . import arith
from .arith import (COORD_CAP, PowerClass, is_in_power_class, is_square,
                    isqrt, kth_power, scaled_power)
from .errors import DegreeError, DslSyntaxError, OverflowCapError

VARS = ("x", "y", "z", "w")
DOMAINS = ("N", "Z", "Z+")


class Representation(NamedTuple):
    x: int
    y: int
    z: int
    w: int

    @property
    def n(self) -> int:
        return self.x ** 2 + self.y ** 2 + self.z ** 2 + self.w ** 2


def in_domain(v: int, tag: str) -> bool:
    if tag == "N":
        return v >= 0
    if tag == "Z":
        return True
    if tag == "Z+":
        return v >= 1
    raise ValueError(f"unknown domain tag {tag!r}")


def validate_representation(rep: Representation, n: int,
                            domains: Sequence[str]) -> None:
    if rep.n != n:
        raise ValueError(f"{tuple(rep)} is not a four-square representation of {n}")
    for v, tag in zip(rep, domains):
        if not in_domain(v, tag):
            raise ValueError(f"coordinate {v} violates domain {tag}")


# --------------------------------------------------------------------------
# Polynomials

Monomial = Tuple[int, int, int, int]


class Poly:
    """Integer-coefficient polynomial over x, y, z, w, total degree <= 4."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Monomial, int]] = None):
        self.terms: Dict[Monomial, int] = {}
        if terms:
            for mono, coef in terms.items():
                if coef:
                    self.terms[mono] = coef

    @staticmethod
    def constant(c: int) -> "Poly":
        return Poly({(0, 0, 0, 0): c})

    @staticmethod
    def variable(name: str) -> "Poly":
        i = VARS.index(name)
        mono = tuple(1 if j == i else 0 for j in range(4))
        return Poly({mono: 1})

    def check_degree(self) -> "Poly":
        for mono in self.terms:
            if sum(mono) > 4 or any(e > 4 for e in mono):
                raise DegreeError(f"monomial degree exceeds 4: {mono}")
        return self

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for mono, coef in other.terms.items():
            out[mono] = out.get(mono, 0) + coef
        return Poly(out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        out: Dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                out[mono] = out.get(mono, 0) + c1 * c2
        return Poly(out)

    def scaled(self, c: int) -> "Poly":
        return Poly({m: c * v for m, v in self.terms.items()})

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise DslSyntaxError("negative exponent")
        out = Poly.constant(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(m == (0, 0, 0, 0) for m in self.terms)

    def constant_value(self) -> int:
        return self.terms.get((0, 0, 0, 0), 0)

    def linear_coeffs(self) -> Optional[Tuple[int, int, int, int, int]]:
        """(a, b, c, d, const) when total degree <= 1, else None."""
        coeffs = [0, 0, 0, 0]
        const = 0
        for mono, coef in self.terms.items():
            deg = sum(mono)
            if deg == 0:
                const = coef
            elif deg == 1:
                coeffs[mono.index(1)] = coef
            else:
                return None
        return (*coeffs, const)

    def eval(self, x: int, y: int, z: int, w: int) -> int:
        for v in (x, y, z, w):
            if abs(v) > COORD_CAP:
                raise OverflowCapError(f"coordinate {v} exceeds 2**20 bound")
        total = 0
        for (ex, ey, ez, ew), coef in self.terms.items():
            total += coef * x ** ex * y ** ey * z ** ez * w ** ew
        return total

    def sorted_terms(self) -> List[Tuple[Monomial, int]]:
        # graded lex: higher total degree first, then lex-descending exponents
        return sorted(self.terms.items(),
                      key=lambda kv: (-sum(kv[0]), tuple(-e for e in kv[0])))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: List[str] = []
        for mono, coef in self.sorted_terms():
            factors = []
            for name, e in zip(VARS, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors:
                body = str(abs(coef))
            else:
                body = "*".join(factors)
                if abs(coef) != 1:
                    body = f"{abs(coef)}*{body}"
            sign = "-" if coef < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Poly({self})"


def eval_poly(poly: Poly, rep: Representation) -> int:
    return poly.eval(*rep)


# --------------------------------------------------------------------------
# Targets and witnesses

@dataclass(frozen=True)
class PowerTarget:
    cls: PowerClass


@dataclass(frozen=True)
class ZeroProduct:
    factors: Tuple[Poly, ...]


@dataclass(frozen=True)
class PythagLegs:
    p: Poly
    q: Poly


Target = Union[PowerTarget, ZeroProduct, PythagLegs]


@dataclass(frozen=True)
class Witness:
    kind: str                      # "power", "zero", "legs"
    t: Optional[int] = None        # root certificate
    hypotenuse: Optional[int] = None
    factor_index: Optional[int] = None

    def __str__(self) -> str:
        if self.kind == "legs":
            return f"hypotenuse={self.hypotenuse}"
        if self.kind == "zero":
            return f"factor#{self.factor_index}=0"
        return f"t={self.t}"


# --------------------------------------------------------------------------
# Side conditions

_OPS = {"<": lambda a, b: a < b, "<=": lambda a, b: a <= b,
        ">": lambda a, b: a > b, ">=": lambda a, b: a >= b}


@dataclass(frozen=True)
class LinearAtom:
    """coeffs . (x,y,z,w) + const OP 0, with OP in {<, <=, >, >=}."""

    coeffs: Tuple[int, int, int, int]
    const: int
    op: str

    def holds(self, rep: Representation) -> bool:
        v = sum(c * r for c, r in zip(self.coeffs, rep)) + self.const
        return _OPS[self.op](v, 0)


@dataclass(frozen=True)
class Condition:
    """Disjunction of linear atoms (a single atom in the common case)."""

    atoms: Tuple[LinearAtom, ...]
    text: str                      # canonical source form, for serialization

    def holds(self, rep: Representation) -> bool:
        return any(a.holds(rep) for a in self.atoms)


# --------------------------------------------------------------------------
# ConstraintSpec

@dataclass(frozen=True)
class ConstraintSpec:
    target: Target
    poly: Optional[Poly] = None          # the (denominator-cleared) polynomial
    domains: Tuple[str, str, str, str] = ("N", "N", "N", "N")
    side_conditions: Tuple[Condition, ...] = ()
    scale: int = 1                       # denominator folded into the target

    def __post_init__(self):
        if isinstance(self.target, PowerTarget) and self.poly is None:
            raise ValueError("power target requires a polynomial")

    def satisfies(self, rep: Representation) -> Optional[Witness]:
        return satisfies(rep, self)

    def serialize(self) -> str:
        if isinstance(self.target, PythagLegs):
            head = f"legs({self.target.p}, {self.target.q})"
        elif isinstance(self.target, ZeroProduct):
            body = " * ".join(f"({f})" for f in self.target.factors)
            head = f"{body} ~ zero"
        else:
            head = f"{self.poly} ~ {_target_name(self.target.cls)}"
        return f"{head} {self._bracket()}"

    def _bracket(self) -> str:
        groups: Dict[str, List[str]] = {}
        for name, tag in zip(VARS, self.domains):
            groups.setdefault(tag, []).append(name)
        clauses = [f"{','.join(vs)} in {tag}" for tag, vs in groups.items()]
        clauses += [c.text for c in self.side_conditions]
        return "[" + "; ".join(clauses) + "]"


def _target_name(cls: PowerClass) -> str:
    simple = {"zero": "zero", "square": "square", "even_square": "even_square",
              "twice_square": "twice_square", "cube": "cube",
              "nonneg_cube": "nonneg_cube"}
    if cls.kind in simple:
        return simple[cls.kind]
    if cls.kind == "kth_power":
        return f"power{cls.m}"
    base = f"nonneg_cube" if (cls.m == 3 and cls.t_nonneg) else f"power{cls.m}"
    return f"{cls.d}*{base}"


def satisfies(rep: Representation, spec: ConstraintSpec) -> Optional[Witness]:
    """Witness when domains, side conditions and target all hold, else None."""
    for v, tag in zip(rep, spec.domains):
        if not in_domain(v, tag):
            return None
    for cond in spec.side_conditions:
        if not cond.holds(rep):
            return None
    target = spec.target
    if isinstance(target, ZeroProduct):
        for i, f in enumerate(target.factors):
            if f.eval(*rep) == 0:
                return Witness("zero", t=0, factor_index=i)
        return None
    if isinstance(target, PythagLegs):
        p = target.p.eval(*rep)
        q = target.q.eval(*rep)
        if p <= 0 or q <= 0:
            return None
        h2 = p * p + q * q
        h = isqrt(h2)
        if h * h != h2:
            return None
        return Witness("legs", hypotenuse=h)
    v = spec.poly.eval(*rep)
    ok, t = is_in_power_class(v, target.cls)
    if not ok:
        return None
    return Witness("power", t=t)


# --------------------------------------------------------------------------
# Parser

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|(<=|>=|<|>)|(Z\+)|([-+*/^(),;~\[\]])"
                       r"|([A-Za-z_][A-Za-z_0-9]*))")


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.toks: List[Tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if not m or m.end() == pos:
                if text[pos:].strip():
                    raise DslSyntaxError(f"unexpected character {text[pos]!r}", pos)
                break
            pos = m.end()
            if m.group(1):
                self.toks.append(("num", m.group(1), m.start(1)))
            elif m.group(2):
                self.toks.append(("cmp", m.group(2), m.start(2)))
            elif m.group(3):
                self.toks.append(("dom", m.group(3), m.start(3)))
            elif m.group(4):
                self.toks.append(("sym", m.group(4), m.start(4)))
            else:
                self._classify(m.group(5), m.start(5))
        self.i = 0

    def _classify(self, word: str, start: int) -> None:
        """Identifiers: keywords, domains, target names, or variable runs.

        A run of variable letters like "yz" means implicit multiplication
        and is split into individual var tokens.
        """
        if word in ("in", "min", "max"):
            self.toks.append(("kw", word, start))
        elif word in ("N", "Z"):
            self.toks.append(("dom", word, start))
        elif all(ch in "xyzw" for ch in word):
            for offset, ch in enumerate(word):
                self.toks.append(("var", ch, start + offset))
        else:
            self.toks.append(("word", word, start))

    def peek(self) -> Optional[Tuple[str, str, int]]:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def next(self) -> Tuple[str, str, int]:
        tok = self.peek()
        if tok is None:
            raise DslSyntaxError("unexpected end of input", len(self.text))
        self.i += 1
        return tok

    def accept(self, kind: str, value: Optional[str] = None) -> Optional[str]:
        tok = self.peek()
        if tok and tok[0] == kind and (value is None or tok[1] == value):
            self.i += 1
            return tok[1]
        return None

    def expect(self, kind: str, value: Optional[str] = None) -> str:
        tok = self.peek()
        if tok is None or tok[0] != kind or (value is not None and tok[1] != value):
            pos = tok[2] if tok else len(self.text)
            want = value or kind
            raise DslSyntaxError(f"expected {want!r}", pos)
        self.i += 1
        return tok[1]


class _FracPoly:
    """Polynomial with Fraction coefficients, used only during parsing."""

    def __init__(self, terms: Dict[Monomial, Fraction]):
        self.terms = {m: c for m, c in terms.items() if c}

    @staticmethod
    def constant(c: Fraction) -> "_FracPoly":
        return _FracPoly({(0, 0, 0, 0): c})

    @staticmethod
    def variable(name: str) -> "_FracPoly":
        i = VARS.index(name)
        return _FracPoly({tuple(1 if j == i else 0 for j in range(4)): Fraction(1)})

    def add(self, o): return _FracPoly(_merge(self.terms, o.terms, 1))
    def sub(self, o): return _FracPoly(_merge(self.terms, o.terms, -1))
    def neg(self): return _FracPoly({m: -c for m, c in self.terms.items()})

    def mul(self, o):
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                out[mono] = out.get(mono, Fraction(0)) + c1 * c2
        return _FracPoly(out)

    def div(self, k: int):
        return _FracPoly({m: c / k for m, c in self.terms.items()})

    def pow(self, e: int):
        out = _FracPoly.constant(Fraction(1))
        for _ in range(e):
            out = out.mul(self)
        return out

    def denominator(self) -> int:
        d = 1
        for c in self.terms.values():
            d = d * c.denominator // gcd(d, c.denominator)
        return d

    def cleared(self) -> Tuple[Poly, int]:
        d = self.denominator()
        poly = Poly({m: int(c * d) for m, c in self.terms.items()})
        return poly.check_degree(), d


def _merge(a, b, sign):
    out = dict(a)
    for m, c in b.items():
        out[m] = out.get(m, Fraction(0)) + sign * c
    return out


def _parse_expr(tk: _Tokens) -> _FracPoly:
    node = _parse_term(tk)
    while True:
        if tk.accept("sym", "+"):
            node = node.add(_parse_term(tk))
        elif tk.accept("sym", "-"):
            node = node.sub(_parse_term(tk))
        else:
            return node


def _parse_term(tk: _Tokens) -> _FracPoly:
    node = _parse_factor(tk)
    while True:
        if tk.accept("sym", "*"):
            node = node.mul(_parse_factor(tk))
        elif tk.accept("sym", "/"):
            pos = tk.peek()[2] if tk.peek() else -1
            num = tk.expect("num")
            k = int(num)
            if k == 0:
                raise DslSyntaxError("division by zero", pos)
            node = node.div(k)
        else:
            nxt = tk.peek()
            # implicit multiplication: 3y, 2(x-y), x y, (a)(b), x^2y^2
            if nxt and (nxt[0] == "var" or (nxt[0] == "sym" and nxt[1] == "(")):
                node = node.mul(_parse_factor(tk))
            else:
                return node


def _parse_factor(tk: _Tokens) -> _FracPoly:
    if tk.accept("sym", "-"):
        return _parse_factor(tk).neg()
    node = _parse_primary(tk)
    if tk.accept("sym", "^"):
        e = int(tk.expect("num"))
        if e > 4:
            raise DegreeError(f"exponent {e} exceeds the degree cap")
        node = node.pow(e)
    return node


def _parse_primary(tk: _Tokens) -> _FracPoly:
    tok = tk.peek()
    if tok is None:
        raise DslSyntaxError("unexpected end of expression", len(tk.text))
    kind, val, pos = tok
    if kind == "num":
        tk.next()
        return _FracPoly.constant(Fraction(int(val)))
    if kind == "var":
        tk.next()
        return _FracPoly.variable(val)
    if kind == "sym" and val == "(":
        tk.next()
        node = _parse_expr(tk)
        tk.expect("sym", ")")
        return node
    raise DslSyntaxError(f"unexpected token {val!r}", pos)


_SIMPLE_TARGETS = {
    "zero": arith.ZERO, "square": arith.SQUARE, "even_square": arith.EVEN_SQUARE,
    "twice_square": arith.TWICE_SQUARE, "cube": arith.CUBE,
    "nonneg_cube": arith.NONNEG_CUBE,
}


def _parse_target(tk: _Tokens) -> PowerClass:
    d = 1
    tok = tk.peek()
    if tok and tok[0] == "num":
        d = int(tk.next()[1])
        tk.expect("sym", "*")
    tok = tk.next()
    kind, val, pos = tok
    name = val
    if kind == "word" and name.startswith("power") and name[5:].isdigit():
        m = int(name[5:])
        cls = kth_power(m)
    elif name in _SIMPLE_TARGETS:
        cls = _SIMPLE_TARGETS[name]
    else:
        raise DslSyntaxError(f"unknown target {name!r}", pos)
    if d != 1:
        if cls.kind == "zero":
            raise DslSyntaxError("zero target cannot be scaled", pos)
        cls = scaled_power(d * cls.scale, cls.exponent,
                           t_nonneg=cls.t_nonneg or cls.kind == "nonneg_cube")
    return cls


def _scale_class(cls: PowerClass, s: int) -> PowerClass:
    if s == 1:
        return cls
    return scaled_power(s * cls.scale, cls.exponent,
                        t_nonneg=cls.t_nonneg or cls.kind == "nonneg_cube")


def _parse_linexpr(tk: _Tokens) -> Tuple[Tuple[int, int, int, int], int]:
    frac = _parse_expr(tk)
    poly, denom = frac.cleared()
    if denom != 1:
        raise DslSyntaxError("side conditions must have integer coefficients")
    lin = poly.linear_coeffs()
    if lin is None:
        raise DslSyntaxError("side conditions must be linear")
    return lin[:4], lin[4]


def _parse_cond_side(tk: _Tokens):
    """Either ('lin', coeffs, const) or ('min'|'max', [sides...])."""
    tok = tk.peek()
    if tok and tok[0] == "kw" and tok[1] in ("min", "max"):
        fn = tk.next()[1]
        tk.expect("sym", "(")
        args = [_parse_linexpr(tk)]
        while tk.accept("sym", ","):
            args.append(_parse_linexpr(tk))
        tk.expect("sym", ")")
        return (fn, args)
    return ("lin", [_parse_linexpr(tk)])


def _atom(lhs, rhs, op: str) -> LinearAtom:
    (ca, consta), (cb, constb) = lhs, rhs
    coeffs = tuple(a - b for a, b in zip(ca, cb))
    return LinearAtom(coeffs, consta - constb, op)


def _parse_conditions(tk: _Tokens, src_start: int) -> List[Condition]:
    """One textual condition, possibly desugared into several conjuncts."""
    left_kind, left = _parse_cond_side(tk)
    op = tk.expect("cmp")
    right_kind, right = _parse_cond_side(tk)
    end = tk.peek()[2] if tk.peek() else len(tk.text)
    text = tk.text[src_start:end].strip()
    if op in ("<", "<="):
        op = {"<": ">", "<=": ">="}[op]
        left_kind, right_kind = right_kind, left_kind
        left, right = right, left
    # semantics of L op R with op in {>, >=}:
    #   max on the left / min on the right: exists (disjunction)
    #   min on the left / max on the right: forall (conjunction)
    left_groups = [left] if left_kind in ("lin", "max") else [[a] for a in left]
    right_groups = [right] if right_kind in ("lin", "min") else [[b] for b in right]
    conds = []
    for lg in left_groups:
        for rg in right_groups:
            atoms = tuple(_atom(a, b, op) for a in lg for b in rg)
            conds.append(Condition(atoms, text))
    return conds


def parse_constraint(text: str) -> ConstraintSpec:
    """Parse DSL text into a ConstraintSpec.

    Grammar:  expr "~" target | "legs(" expr "," expr ")", optionally
    followed by "[" domain and side-condition clauses separated by ";" "]".
    """
    tk = _Tokens(text)
    tok = tk.peek()
    target: Target
    poly: Optional[Poly] = None
    scale = 1
    if tok and tok[0] == "word" and tok[1] == "legs":
        tk.next()
        tk.expect("sym", "(")
        p_frac = _parse_expr(tk)
        tk.expect("sym", ",")
        q_frac = _parse_expr(tk)
        tk.expect("sym", ")")
        p, dp = p_frac.cleared()
        q, dq = q_frac.cleared()
        if dp != 1 or dq != 1:
            raise DslSyntaxError("legs require integer coefficients")
        target = PythagLegs(p, q)
    else:
        factors, frac = _parse_product(tk)
        tk.expect("sym", "~")
        cls = _parse_target(tk)
        poly, denom = frac.cleared()
        scale = denom
        if cls.kind == "zero":
            cleared = []
            for f in factors:
                fp, fd = f.cleared()
                if fd != 1:
                    raise DslSyntaxError("zero-product factors must be integral")
                cleared.append(fp)
            target = ZeroProduct(tuple(cleared))
        else:
            target = PowerTarget(_scale_class(cls, denom))
    domains, conds = _parse_bracket(tk)
    if tk.peek() is not None:
        raise DslSyntaxError("trailing input", tk.peek()[2])
    return ConstraintSpec(target=target, poly=poly, domains=domains,
                          side_conditions=tuple(conds), scale=scale)


def _parse_product(tk: _Tokens) -> Tuple[List[_FracPoly], _FracPoly]:
    """Parse an expression, remembering its top-level * factors."""
    factors = [_parse_term_factors(tk)]
    node = factors[0][1]
    while True:
        if tk.accept("sym", "+"):
            rhs = _parse_term(tk)
            node = node.add(rhs)
            factors = [([node], node)]  # sum destroys factor structure
            factors = [(None, node)]
        elif tk.accept("sym", "-"):
            rhs = _parse_term(tk)
            node = node.sub(rhs)
            factors = [(None, node)]
        else:
            break
    flist = factors[0][0]
    if flist is None:
        flist = [node]
    return flist, node


def _parse_term_factors(tk: _Tokens) -> Tuple[List[_FracPoly], _FracPoly]:
    parts = [_parse_factor(tk)]
    while True:
        if tk.accept("sym", "*"):
            parts.append(_parse_factor(tk))
        elif tk.accept("sym", "/"):
            k = int(tk.expect("num"))
            parts[-1] = parts[-1].div(k)
        else:
            nxt = tk.peek()
            if nxt and (nxt[0] == "var" or (nxt[0] == "sym" and nxt[1] == "(")):
                parts.append(_parse_factor(tk))
            else:
                break
    node = parts[0]
    for p in parts[1:]:
        node = node.mul(p)
    return parts, node


def _parse_bracket(tk: _Tokens) -> Tuple[Tuple[str, str, str, str], List[Condition]]:
    domains = ["N", "N", "N", "N"]
    conds: List[Condition] = []
    if not tk.accept("sym", "["):
        return tuple(domains), conds
    explicit: Dict[str, str] = {}
    first = True
    while True:
        if tk.accept("sym", "]"):
            break
        if not first:
            pass
        first = False
        # bare domain clause applies to all four variables
        if tk.peek() and tk.peek()[0] == "dom":
            dom = tk.next()[1]
            for nm in VARS:
                explicit.setdefault(nm, dom)
            if not tk.accept("sym", ";"):
                tk.expect("sym", "]")
                break
            continue
        # try a domain clause: var (, var)* in DOMAIN
        save = tk.i
        names = []
        ok = False
        if tk.peek() and tk.peek()[0] == "var":
            names.append(tk.next()[1])
            while tk.accept("sym", ","):
                nxt = tk.peek()
                if nxt and nxt[0] == "var":
                    names.append(tk.next()[1])
                else:
                    break
            if tk.accept("kw", "in"):
                dom = tk.expect("dom")
                for nm in names:
                    explicit[nm] = dom
                ok = True
        if not ok:
            tk.i = save
            start = tk.peek()[2] if tk.peek() else len(tk.text)
            conds.extend(_parse_conditions(tk, start))
        if not tk.accept("sym", ";"):
            tk.expect("sym", "]")
            break
    # a bare [N] / [Z] style bracket applies to all four variables
    for i, name in enumerate(VARS):
        if name in explicit:
            domains[i] = explicit[name]
    return tuple(domains), conds


