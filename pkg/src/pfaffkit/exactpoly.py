"""Exact sparse multivariate polynomials and rational functions.

Everything is computed over arbitrary-precision rationals (``Fraction``); no
floating point appears anywhere in the library.  Representation:

  Variable   = (family, indices)            e.g. ("x", (3,)), ("z", (1, 4))
  Monomial   = tuple of (Variable, exponent) pairs, sorted by variable
  Polynomial = mapping monomial -> nonzero Fraction  (canonical form)

Variables are totally ordered by (family tag, index tuple), and the zero
polynomial is the empty term map, so two polynomials are equal exactly when
their term maps are equal.

Index-pair ("bracket") families come in two flavours, registered by tag:
antisymmetric pairs obey z[j,i] == -z[i,j] (and z[i,i] == 0), symmetric pairs
obey g[j,i] == g[i,j].  Normalisation to i < j happens when the variable is
constructed, so no other code ever sees an unordered pair.

Rational functions are unreduced numerator/denominator pairs; equality is
decided by cross-multiplication, never by computing GCDs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Variable = tuple[str, tuple[int, ...]]
Monomial = tuple[tuple[Variable, int], ...]
Scalar = Union[int, Fraction]

_ANTISYMMETRIC_TAGS: set[str] = {"z", "az", "bz"}
_SYMMETRIC_TAGS: set[str] = {"g"}


def declare_antisymmetric(tag: str) -> None:
    """Register a family tag whose index pairs are antisymmetric."""
    if tag in _SYMMETRIC_TAGS:
        raise ValueError(f"family {tag!r} already declared symmetric")
    _ANTISYMMETRIC_TAGS.add(tag)


def declare_symmetric(tag: str) -> None:
    """Register a family tag whose index pairs are symmetric."""
    if tag in _ANTISYMMETRIC_TAGS:
        raise ValueError(f"family {tag!r} already declared antisymmetric")
    _SYMMETRIC_TAGS.add(tag)


def normalize_variable(family: str, indices: tuple[int, ...]) -> tuple[int, Variable | None]:
    """Return (sign, variable) with bracket index pairs put in i <= j order.

    The sign is -1 when an antisymmetric pair was swapped, 0 (with variable
    None) for a vanishing antisymmetric diagonal entry z[i,i].
    """
    if family in _ANTISYMMETRIC_TAGS:
        if len(indices) != 2:
            raise ValueError(f"antisymmetric family {family!r} needs exactly 2 indices")
        i, j = indices
        if i == j:
            return 0, None
        if i > j:
            return -1, (family, (j, i))
        return 1, (family, (i, j))
    if family in _SYMMETRIC_TAGS:
        if len(indices) != 2:
            raise ValueError(f"symmetric family {family!r} needs exactly 2 indices")
        i, j = indices
        if i > j:
            return 1, (family, (j, i))
        return 1, (family, (i, j))
    return 1, (family, indices)


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        # Trusted constructor: callers must not pass zero coefficients.
        self.terms: dict[Monomial, Fraction] = dict(terms) if terms else {}
        self._hash: int | None = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def constant(value: Scalar) -> "Polynomial":
        c = Fraction(value)
        return Polynomial({(): c} if c else {})

    # -- predicates --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_one(self) -> bool:
        return self.terms == {(): Fraction(1)}

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def as_constant(self) -> Fraction:
        if self.is_zero:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms[()]

    def degree(self) -> int:
        if self.is_zero:
            return 0
        return max(sum(e for _, e in mono) for mono in self.terms)

    def variables(self) -> set[Variable]:
        out: set[Variable] = set()
        for mono in self.terms:
            out.update(v for v, _ in mono)
        return out

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Polynomial | Scalar") -> "Polynomial":
        if isinstance(other, RationalFunction):
            return NotImplemented
        other = _coerce_poly(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono)
            if s is None:
                out[mono] = c
            else:
                s = s + c
                if s:
                    out[mono] = s
                else:
                    del out[mono]
        return Polynomial(out)

    __radd__ = __add__

    def __sub__(self, other: "Polynomial | Scalar") -> "Polynomial":
        if isinstance(other, RationalFunction):
            return NotImplemented
        other = _coerce_poly(other)
        if other.is_zero:
            return self
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono)
            if s is None:
                out[mono] = -c
            else:
                s = s - c
                if s:
                    out[mono] = s
                else:
                    del out[mono]
        return Polynomial(out)

    def __rsub__(self, other: "Polynomial | Scalar") -> "Polynomial":
        return _coerce_poly(other).__sub__(self)

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self.terms.items()})

    def __mul__(self, other: "Polynomial | Scalar") -> "Polynomial":
        if isinstance(other, RationalFunction):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return ZERO
            if c == 1:
                return self
            return Polynomial({m: k * c for m, k in self.terms.items()})
        if self.is_zero or other.is_zero:
            return ZERO
        if other.is_one:
            return self
        if self.is_one:
            return other
        out: dict[Monomial, Fraction] = {}
        get = out.get
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = mono_mul(ma, mb)
                c = ca * cb
                s = get(m)
                if s is None:
                    out[m] = c
                else:
                    s = s + c
                    if s:
                        out[m] = s
                    else:
                        del out[m]
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power of a Polynomial; use RationalFunction")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({format_poly(self)})"

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(mono, Fraction(0))


ZERO = Polynomial()
ONE = Polynomial.constant(1)


def _coerce_poly(value: "Polynomial | Scalar") -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial.constant(value)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    """Merge two sorted monomials, adding exponents."""
    if not a:
        return b
    if not b:
        return a
    out: list[tuple[Variable, int]] = []
    ia = ib = 0
    la, lb = len(a), len(b)
    while ia < la and ib < lb:
        va, ea = a[ia]
        vb, eb = b[ib]
        if va == vb:
            out.append((va, ea + eb))
            ia += 1
            ib += 1
        elif va < vb:
            out.append(a[ia])
            ia += 1
        else:
            out.append(b[ib])
            ib += 1
    out.extend(a[ia:])
    out.extend(b[ib:])
    return tuple(out)


def variable(family: str, *indices: int) -> Polynomial:
    """The polynomial consisting of a single variable.

    Bracket families are normalised here: variable("z", 2, 1) returns the
    polynomial -z[1,2] and variable("z", 1, 1) returns 0.
    """
    sign, var = normalize_variable(family, tuple(indices))
    if sign == 0 or var is None:
        return ZERO
    return Polynomial({((var, 1),): Fraction(sign)})


def constant(value: Scalar) -> Polynomial:
    return Polynomial.constant(value)


def vandermonde(family: str, indices: Sequence[int]) -> Polynomial:
    """Product of pairwise differences: prod over p < q of (v_p - v_q)."""
    out = ONE
    idx = list(indices)
    for p in range(len(idx)):
        for q in range(p + 1, len(idx)):
            out = out * (variable(family, idx[p]) - variable(family, idx[q]))
    return out


def relabel(
    f: "Polynomial | RationalFunction",
    images: Sequence[int],
    families: Iterable[str],
) -> "Polynomial | RationalFunction":
    """Relabel index i -> images[i-1] in every variable of the given families.

    Bracket normalisation (sign for antisymmetric pairs, sorting for
    symmetric ones) is applied to the relabelled variables.
    """
    if isinstance(f, RationalFunction):
        return RationalFunction(relabel(f.num, images, families),
                                relabel(f.den, images, families))
    fams = set(families)
    out: dict[Monomial, Fraction] = {}
    get = out.get
    for mono, coeff in f.terms.items():
        sign = 1
        pairs: list[tuple[Variable, int]] = []
        for (family, idx), exp in mono:
            if family in fams:
                new_idx = tuple(images[i - 1] for i in idx)
                s, var = normalize_variable(family, new_idx)
                if s == 0 or var is None:
                    sign = 0
                    break
                if s < 0 and exp % 2:
                    sign = -sign
                pairs.append((var, exp))
            else:
                pairs.append(((family, idx), exp))
        if sign == 0:
            continue
        pairs.sort()
        m = tuple(pairs)
        c = coeff if sign > 0 else -coeff
        s = get(m)
        if s is None:
            out[m] = c
        else:
            s = s + c
            if s:
                out[m] = s
            else:
                del out[m]
    return Polynomial(out)


class RationalFunction:
    """Quotient of two polynomials, kept unreduced.

    Equality is decided by cross-multiplication, so different representatives
    of the same rational function compare equal; for that reason the type is
    unhashable.
    """

    __slots__ = ("num", "den")
    __hash__ = None  # type: ignore[assignment]

    def __init__(self, num: Polynomial | Scalar, den: Polynomial | Scalar = ONE):
        num = _coerce_poly(num)
        den = _coerce_poly(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator polynomial")
        if num.is_zero:
            den = ONE
        self.num = num
        self.den = den

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def is_polynomial(self) -> bool:
        return self.den.is_one

    def as_constant(self) -> Fraction:
        return self.num.as_constant() / self.den.as_constant()

    def inverse(self) -> "RationalFunction":
        if self.num.is_zero:
            raise ZeroDivisionError("inverse of zero")
        return RationalFunction(self.den, self.num)

    def __add__(self, other: "RationalFunction | Polynomial | Scalar") -> "RationalFunction":
        other = as_ratfn(other)
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        if self.den.is_one:
            return RationalFunction(self.num * other.den + other.num, other.den)
        if other.den.is_one:
            return RationalFunction(self.num + other.num * self.den, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other: "RationalFunction | Polynomial | Scalar") -> "RationalFunction":
        return self + (-as_ratfn(other))

    def __rsub__(self, other: "RationalFunction | Polynomial | Scalar") -> "RationalFunction":
        return as_ratfn(other) + (-self)

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __mul__(self, other: "RationalFunction | Polynomial | Scalar") -> "RationalFunction":
        other = as_ratfn(other)
        if self.is_zero or other.is_zero:
            return RATFN_ZERO
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: "RationalFunction | Polynomial | Scalar") -> "RationalFunction":
        return self * as_ratfn(other).inverse()

    def __rtruediv__(self, other: "RationalFunction | Polynomial | Scalar") -> "RationalFunction":
        return as_ratfn(other) * self.inverse()

    def __pow__(self, k: int) -> "RationalFunction":
        if k < 0:
            return RationalFunction(self.den ** (-k), self.num ** (-k))
        return RationalFunction(self.num ** k, self.den ** k)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, Polynomial)):
            other = as_ratfn(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    def __repr__(self) -> str:
        if self.den.is_one:
            return f"RationalFunction({format_poly(self.num)})"
        return f"RationalFunction(({format_poly(self.num)}) / ({format_poly(self.den)}))"


RATFN_ZERO = RationalFunction(ZERO)
RATFN_ONE = RationalFunction(ONE)


def as_ratfn(value: "RationalFunction | Polynomial | Scalar") -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    return RationalFunction(_coerce_poly(value))


def ratfn(num: Polynomial | Scalar, den: Polynomial | Scalar = ONE) -> RationalFunction:
    return RationalFunction(num, den)


def ratfn_equal(f: "RationalFunction | Polynomial | Scalar",
                g: "RationalFunction | Polynomial | Scalar") -> bool:
    """Exact equality of rational functions by cross-multiplication."""
    return as_ratfn(f) == as_ratfn(g)


def ratfn_sum(terms: Iterable["RationalFunction | Polynomial | Scalar"]) -> RationalFunction:
    """Sum rational functions, grouping equal denominators first.

    Grouping keeps denominators from blowing up when many summands share a
    common denominator (the typical case for orbit sums).
    """
    groups: dict[Polynomial, Polynomial] = {}
    for t in terms:
        t = as_ratfn(t)
        if t.is_zero:
            continue
        g = groups.get(t.den)
        groups[t.den] = t.num if g is None else g + t.num
    total = RATFN_ZERO
    for den, num in groups.items():
        total = total + RationalFunction(num, den)
    return total


def substitute(
    f: "Polynomial | RationalFunction",
    mapping: Mapping[Variable, "RationalFunction | Polynomial | Scalar"],
) -> RationalFunction:
    """Exact image of f under variable -> rational function substitution.

    Variables not listed in the mapping pass through unchanged.  Raises
    ZeroDivisionError if the substitution makes a denominator identically
    zero.
    """
    if isinstance(f, RationalFunction):
        num = substitute(f.num, mapping)
        den = substitute(f.den, mapping)
        if den.is_zero:
            raise ZeroDivisionError("substitution made a denominator zero")
        return num / den
    images = {v: as_ratfn(val) for v, val in mapping.items()}
    power_cache: dict[tuple[Variable, int], RationalFunction] = {}
    parts: list[RationalFunction] = []
    for mono, coeff in f.terms.items():
        passthrough: list[tuple[Variable, int]] = []
        factor = RATFN_ONE
        dead = False
        for var, exp in mono:
            img = images.get(var)
            if img is None:
                passthrough.append((var, exp))
                continue
            if img.is_zero:
                dead = True
                break
            key = (var, exp)
            p = power_cache.get(key)
            if p is None:
                p = img ** exp
                power_cache[key] = p
            factor = factor * p
        if dead:
            continue
        base = Polynomial({tuple(passthrough): coeff})
        parts.append(factor * base)
    return ratfn_sum(parts)


def substitute_poly(f: Polynomial, mapping: Mapping[Variable, Polynomial]) -> Polynomial:
    """Substitution fast path when every image is a polynomial."""
    power_cache: dict[tuple[Variable, int], Polynomial] = {}
    total = ZERO
    for mono, coeff in f.terms.items():
        passthrough: list[tuple[Variable, int]] = []
        factor = ONE
        for var, exp in mono:
            img = mapping.get(var)
            if img is None:
                passthrough.append((var, exp))
                continue
            key = (var, exp)
            p = power_cache.get(key)
            if p is None:
                p = img ** exp
                power_cache[key] = p
            factor = factor * p
            if factor.is_zero:
                break
        if factor.is_zero:
            continue
        total = total + factor * Polynomial({tuple(passthrough): coeff})
    return total


def specialize01(
    f: "Polynomial | RationalFunction",
    ones: Iterable[int],
    family: str,
) -> RationalFunction:
    """Set family_i -> 1 for i in `ones` and -> 0 for every other index of
    that family appearing in f."""
    ones = set(ones)
    vars_in_f = f.variables() if isinstance(f, Polynomial) else (
        f.num.variables() | f.den.variables())
    mapping: dict[Variable, Fraction] = {}
    for var in vars_in_f:
        fam, idx = var
        if fam == family:
            if len(idx) != 1:
                raise ValueError("specialize01 applies to arity-1 families")
            mapping[var] = Fraction(1 if idx[0] in ones else 0)
    return substitute(f, mapping)


# -- exact division ---------------------------------------------------------

def _grlex_key(vars_order: dict[Variable, int], mono: Monomial) -> tuple:
    deg = sum(e for _, e in mono)
    dense = [0] * len(vars_order)
    for v, e in mono:
        dense[vars_order[v]] = e
    return (deg, tuple(dense))


def exact_div(f: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient f/g when g divides f exactly; raises ValueError otherwise."""
    if g.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero:
        return ZERO
    if g.is_one:
        return f
    if g.is_constant():
        return f * (1 / g.as_constant())
    all_vars = sorted(f.variables() | g.variables())
    order = {v: i for i, v in enumerate(all_vars)}
    # Graded-lex leading term of g, fixed for the whole division.
    g_lead = max(g.terms, key=lambda m: _grlex_key(order, m))
    g_lead_coeff = g.terms[g_lead]
    g_lead_exp = dict(g_lead)
    remainder = dict(f.terms)
    quotient: dict[Monomial, Fraction] = {}
    while remainder:
        lead = max(remainder, key=lambda m: _grlex_key(order, m))
        lead_coeff = remainder[lead]
        # Divide the leading monomials; fail if not divisible.
        qm: list[tuple[Variable, int]] = []
        lead_exp = dict(lead)
        ok = True
        for v, e in g_lead_exp.items():
            if lead_exp.get(v, 0) < e:
                ok = False
                break
        if not ok:
            raise ValueError("polynomials do not divide exactly")
        for v, e in lead_exp.items():
            r = e - g_lead_exp.get(v, 0)
            if r:
                qm.append((v, r))
        qm.sort()
        qmono = tuple(qm)
        qcoeff = lead_coeff / g_lead_coeff
        quotient[qmono] = quotient.get(qmono, Fraction(0)) + qcoeff
        # remainder -= (qcoeff * qmono) * g
        for m, c in g.terms.items():
            mm = mono_mul(qmono, m)
            s = remainder.get(mm, Fraction(0)) - qcoeff * c
            if s:
                remainder[mm] = s
            else:
                remainder.pop(mm, None)
    return Polynomial({m: c for m, c in quotient.items() if c})


# -- serialization ----------------------------------------------------------

def variable_name(var: Variable) -> str:
    family, idx = var
    if not idx:
        return family
    return family + "_" + "_".join(str(i) for i in idx)


def parse_variable_name(name: str) -> Variable:
    parts = name.split("_")
    family = parts[0]
    indices = tuple(int(p) for p in parts[1:])
    _, var = normalize_variable(family, indices)
    if var is None:
        raise ValueError(f"variable name {name!r} denotes a vanishing bracket")
    return var


def _coeff_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _mono_sort_key(mono: Monomial) -> tuple:
    return (-sum(e for _, e in mono), tuple((variable_name(v), -e) for v, e in mono))


def poly_to_json(f: Polynomial) -> dict:
    terms = []
    for mono in sorted(f.terms, key=_mono_sort_key):
        terms.append({
            "coeff": _coeff_str(f.terms[mono]),
            "monomial": {variable_name(v): e for v, e in mono},
        })
    return {"terms": terms}


def poly_from_json(data: Mapping) -> Polynomial:
    total = ZERO
    for term in data["terms"]:
        coeff = Fraction(term["coeff"])
        mono = ONE
        for name, exp in term["monomial"].items():
            fam_idx = parse_variable_name(name)
            mono = mono * variable(fam_idx[0], *fam_idx[1]) ** exp
        total = total + mono * coeff
    return total


def ratfn_to_json(f: RationalFunction) -> dict:
    return {"num": poly_to_json(f.num), "den": poly_to_json(f.den)}


def ratfn_from_json(data: Mapping) -> RationalFunction:
    return RationalFunction(poly_from_json(data["num"]), poly_from_json(data["den"]))


def format_poly(f: Polynomial) -> str:
    """Human-readable deterministic rendering (graded-lex, leading first)."""
    if f.is_zero:
        return "0"
    pieces = []
    for mono in sorted(f.terms, key=_mono_sort_key):
        c = f.terms[mono]
        factors = "*".join(
            variable_name(v) + (f"^{e}" if e > 1 else "") for v, e in mono)
        if not factors:
            body = _coeff_str(c)
        elif c == 1:
            body = factors
        elif c == -1:
            body = "-" + factors
        else:
            body = _coeff_str(c) + "*" + factors
        pieces.append(body)
    out = pieces[0]
    for p in pieces[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out
