"""Text syntax for modules, maps, presentations, spectra and envelope data.

Modules::

    F[d]        Σ^d Q[c]
    T[e;n]      Σ^e Q[c]/(c^n)
    A + B       direct sum
    0           the zero module

Monomials are written ``3/2c^2``, ``-c``, ``c^3``, ``5`` or ``0``.

Maps, rows indexed by target generators in canonical order::

    T[0;2] -> T[0;3] @ -2 : [c]
    F[-2] + F[0] -> F[0] @ 0 : [c, 1]

Presentations (one matrix row per relation)::

    pres(0, -2 | -4 | [c^2, 3c])

Spectra::

    S(a)  W(a)  susp(k, X)  wedge(X, Y, ...)

Envelope squares list ``i | i' | f | g`` inside ``square(...)``.
Whitespace is ignored everywhere.
"""

import re
from fractions import Fraction

from .graded_core import CanonicalModule, DegreeMismatchError, ModuleMap, Monomial, PresentationMatrix


class GrammarError(ValueError):
    def __init__(self, text, pos, message):
        caret = " " * pos + "^"
        super().__init__(f"{message} at position {pos}\n  {text}\n  {caret}")
        self.text = text
        self.pos = pos


_INT = re.compile(r"[+-]?\d+")
_MONO = re.compile(r"([+-]?)(\d+(?:/\d+)?)?(c(?:\^(\d+))?)?")


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, message, pos=None):
        raise GrammarError(self.text, self.pos if pos is None else pos, message)

    def ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, lit):
        self.ws()
        return self.text.startswith(lit, self.pos)

    def accept(self, lit):
        if self.peek(lit):
            self.pos += len(lit)
            return True
        return False

    def expect(self, lit):
        if not self.accept(lit):
            found = self.text[self.pos:self.pos + 1] or "end of input"
            self.error(f"expected {lit!r}, found {found!r}")

    def integer(self):
        self.ws()
        m = _INT.match(self.text, self.pos)
        if not m:
            self.error("expected an integer")
        self.pos = m.end()
        return int(m.group())

    def end(self):
        self.ws()
        if self.pos != len(self.text):
            self.error(f"unexpected trailing input {self.text[self.pos:]!r}")

    # -- modules

    def module(self):
        summands = [self.summand()]
        while self.accept("+"):
            summands.append(self.summand())
        out = CanonicalModule()
        for s in summands:
            out = out + s
        return out

    def summand(self):
        self.ws()
        start = self.pos
        if self.accept("F["):
            d = self.integer()
            self.expect("]")
            return CanonicalModule.free(d)
        if self.accept("T["):
            e = self.integer()
            self.expect(";")
            n = self.integer()
            if n < 1:
                self.error("torsion order must be at least 1", start)
            self.expect("]")
            return CanonicalModule.torsion(e, n)
        if self.accept("0"):
            return CanonicalModule()
        self.error("expected a summand F[d], T[e;n] or 0")

    # -- monomials and matrices

    def monomial(self):
        self.ws()
        m = _MONO.match(self.text, self.pos)
        if not m or m.end() == self.pos or not (m.group(2) or m.group(3)):
            self.error("expected a monomial such as 3/2c^2")
        sign, coeff, cpart, power = m.groups()
        q = Fraction(coeff) if coeff else Fraction(1)
        if sign == "-":
            q = -q
        k = 0
        if cpart:
            k = int(power) if power else 1
        self.pos = m.end()
        return Monomial(q, k)

    def matrix(self):
        """Rows of monomials; entry positions are kept for error reports."""
        self.expect("[")
        self.entry_pos = {}
        if self.accept("]"):
            return []
        rows = [[]]
        while True:
            self.ws()
            self.entry_pos[len(rows) - 1, len(rows[-1])] = self.pos
            rows[-1].append(self.monomial())
            if self.accept(";"):
                rows.append([])
            elif not self.accept(","):
                break
        self.expect("]")
        return rows

    def entry_error(self, exc, start):
        """Re-raise a matrix validation error at the offending entry."""
        pos = start
        if isinstance(exc, DegreeMismatchError):
            pos = self.entry_pos.get((exc.row, exc.column), start)
        self.error(str(exc).splitlines()[0], pos)

    def module_map(self):
        src = self.module()
        self.expect("->")
        tgt = self.module()
        self.expect("@")
        deg = self.integer()
        self.expect(":")
        pos = self.pos
        rows = self.matrix()
        try:
            return ModuleMap(src, tgt, deg, rows)
        except ValueError as exc:
            self.entry_error(exc, pos)

    def int_list(self, stop):
        out = []
        if self.peek(stop):
            return out
        out.append(self.integer())
        while self.accept(","):
            out.append(self.integer())
        return out

    def presentation(self):
        self.expect("pres(")
        gens = self.int_list("|")
        self.expect("|")
        rels = self.int_list("|")
        self.expect("|")
        pos = self.pos
        rows = self.matrix()
        self.expect(")")
        try:
            return PresentationMatrix(tuple(gens), tuple(rels), tuple(map(tuple, rows)))
        except ValueError as exc:
            self.entry_error(exc, pos)

    # -- spectra

    def spectrum(self):
        from .circle_model import FreeOrbit, Sphere, Susp, Wedge

        self.ws()
        start = self.pos
        if self.accept("susp("):
            k = self.integer()
            self.expect(",")
            inner = self.spectrum()
            self.expect(")")
            return Susp(k, inner)
        if self.accept("wedge("):
            parts = []
            if not self.peek(")"):
                parts.append(self.spectrum())
                while self.accept(","):
                    parts.append(self.spectrum())
            self.expect(")")
            return Wedge(tuple(parts))
        for lit, cls in (("S(", Sphere), ("W(", FreeOrbit)):
            if self.accept(lit):
                a = self.integer()
                if a < 1:
                    self.error("sphere index must be at least 1", start)
                self.expect(")")
                return cls(a)
        self.error("expected S(a), W(a), susp(k, X) or wedge(...)")


def _run(text, method):
    p = _Parser(text)
    out = getattr(p, method)()
    p.end()
    return out


def parse_module(text):
    """
    >>> str(parse_module("F[-1] + T[3; 2]"))
    'T[3;2] + F[-1]'
    """
    return _run(text, "module")


def parse_monomial(text):
    return _run(text, "monomial")


def parse_map(text):
    return _run(text, "module_map")


def parse_presentation(text):
    return _run(text, "presentation")


def parse_spectrum(text):
    return _run(text, "spectrum")


def parse_module_or_presentation(text):
    if text.lstrip().startswith("pres("):
        return parse_presentation(text)
    return parse_module(text)


def format_matrix(rows):
    if not rows or not rows[0]:
        return "[]"
    return "[" + "; ".join(", ".join(str(x) for x in row) for row in rows) + "]"


def format_map(f):
    return f"{f.source} -> {f.target} @ {f.degree} : {format_matrix(f.monomials())}"


def format_presentation(p):
    gens = ", ".join(map(str, p.generator_degrees))
    rels = ", ".join(map(str, p.relation_degrees))
    return f"pres({gens} | {rels} | {format_matrix(p.monomials())})"


def parse_envelope_object(text):
    from .freyd_envelope import EnvelopeObject

    f = parse_map(text)
    try:
        return EnvelopeObject(f)
    except ValueError as exc:
        raise GrammarError(text, 0, str(exc)) from None


def parse_envelope_morphism(text):
    """``square(i | i' | f | g)``."""
    from .freyd_envelope import EnvelopeMorphism, EnvelopeObject

    p = _Parser(text)
    p.expect("square(")
    maps = [p.module_map()]
    for _ in range(3):
        p.expect("|")
        maps.append(p.module_map())
    p.expect(")")
    p.end()
    i, i2, f, g = maps
    try:
        return EnvelopeMorphism(EnvelopeObject(i), EnvelopeObject(i2), f, g)
    except ValueError as exc:
        raise GrammarError(text, 0, str(exc)) from None
