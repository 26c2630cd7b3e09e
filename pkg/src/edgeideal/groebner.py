"""Buchberger's algorithm over Q or a prime field, plus radical membership.

Monomial order is degree-reverse-lexicographic with the first listed
variable largest; for edge ideals the variables are interleaved
(x1, y1, x2, y2, ...) and the Rabinowitsch auxiliary comes last (smallest).
Polynomials are {exponent-tuple: coefficient} dicts.

Pair selection follows the normal strategy (smallest lcm first); the
coprimality criterion and the chain criterion (skip (i, j) when some k has
lm_k dividing lcm(i, j) and both (i, k) and (j, k) are already settled)
prune reductions.  A wall-clock budget turns runaway bases into
GroebnerTimeoutError.
"""
from __future__ import annotations

import heapq
import time
from fractions import Fraction

from .errors import GroebnerTimeoutError

GROEBNER_CAP = 18
DEFAULT_BUDGET = 300.0


class RationalField:
    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def coerce(a):
        return Fraction(a)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def div(a, b):
        return a / b

    @staticmethod
    def neg(a):
        return -a


class PrimeField:
    def __init__(self, p):
        self.p = p
        self.name = f"GF({p})"
        self.zero = 0
        self.one = 1

    def coerce(self, a):
        if isinstance(a, Fraction):
            return self.coerce(a.numerator) * pow(a.denominator, self.p - 2, self.p) % self.p
        return int(a) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def div(self, a, b):
        return a * pow(b, self.p - 2, self.p) % self.p

    def neg(self, a):
        return (-a) % self.p


def field_for(name):
    from .homology import parse_field

    fname, p = parse_field(name)
    return RationalField() if p == 0 else PrimeField(p)


class Ring:
    def __init__(self, variables, field):
        self.variables = tuple(variables)
        self.n = len(self.variables)
        self.field = field

    def key(self, m):
        # grevlex: higher degree wins; ties go to the monomial whose last
        # difference (in listed order) has the smaller exponent
        return (sum(m), tuple(-e for e in reversed(m)))

    def one(self):
        return {(0,) * self.n: self.field.one}

    def monomial(self, exps):
        return tuple(exps)

    def extend(self, name):
        return Ring(self.variables + (name,), self.field)


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def leading(ring, p):
    lm = max(p, key=ring.key)
    return lm, p[lm]


def poly_scale(ring, p, c):
    f = ring.field
    return {m: f.mul(v, c) for m, v in p.items()}


def make_monic(ring, p):
    _, lc = leading(ring, p)
    if lc == ring.field.one:
        return p
    inv = ring.field.div(ring.field.one, lc)
    return poly_scale(ring, p, inv)


def poly_str(ring, p):
    if not p:
        return "0"
    parts = []
    for m in sorted(p, key=ring.key, reverse=True):
        factors = [
            f"{ring.variables[i]}" + (f"^{e}" if e > 1 else "")
            for i, e in enumerate(m) if e
        ]
        mono = "*".join(factors) if factors else "1"
        c = p[m]
        parts.append(mono if c == ring.field.one else f"{c}*{mono}")
    return " + ".join(parts)


def _check_deadline(deadline, budget):
    if deadline is not None and time.monotonic() > deadline:
        raise GroebnerTimeoutError(budget)


def normal_form(ring, p, basis, deadline=None, budget=None):
    """Remainder of p on division by basis entries (lm, lc, poly)."""
    f = ring.field
    work = dict(p)
    rem = {}
    steps = 0
    while work:
        steps += 1
        if steps % 256 == 0:
            _check_deadline(deadline, budget)
        lm, lc = leading(ring, work)
        for blm, blc, bp in basis:
            if mono_divides(blm, lm):
                q = mono_div(lm, blm)
                factor = f.div(lc, blc)
                for m, v in bp.items():
                    mm = mono_mul(m, q)
                    nv = f.sub(work.get(mm, f.zero), f.mul(factor, v))
                    if nv == f.zero:
                        work.pop(mm, None)
                    else:
                        work[mm] = nv
                break
        else:
            rem[lm] = lc
            del work[lm]
    return rem


def s_polynomial(ring, entry_i, entry_j):
    f = ring.field
    lmi, lci, pi = entry_i
    lmj, lcj, pj = entry_j
    lcm = mono_lcm(lmi, lmj)
    qi, qj = mono_div(lcm, lmi), mono_div(lcm, lmj)
    out = {}
    for m, v in pi.items():
        mm = mono_mul(m, qi)
        out[mm] = f.div(v, lci)
    for m, v in pj.items():
        mm = mono_mul(m, qj)
        nv = f.sub(out.get(mm, f.zero), f.div(v, lcj))
        if nv == f.zero:
            out.pop(mm, None)
        else:
            out[mm] = nv
    return out


def is_constant(p):
    return len(p) == 1 and not any(next(iter(p)))


def buchberger(ring, gens, budget=DEFAULT_BUDGET, assume_gb_prefix=0, stop_on_unit=False):
    """Reduced Groebner basis of the ideal generated by `gens`.

    The first `assume_gb_prefix` generators are taken to be a Groebner basis
    already: pairs among them are skipped.  With stop_on_unit, the constant
    basis [1] returns as soon as a unit shows up.
    """
    deadline = time.monotonic() + budget if budget else None
    basis = []
    for idx, g in enumerate(gens):
        if idx < assume_gb_prefix:
            p = {m: ring.field.coerce(v) for m, v in g.items() if v != ring.field.zero}
        else:
            p = normal_form(
                ring,
                {m: ring.field.coerce(v) for m, v in g.items()},
                basis, deadline, budget)
        if not p:
            continue
        p = make_monic(ring, p)
        if stop_on_unit and is_constant(p):
            return [ring.one()]
        lm, lc = leading(ring, p)
        basis.append((lm, lc, p))

    heap = []
    pending = set()

    def push_pairs(t):
        for i in range(t):
            if t < assume_gb_prefix:
                continue
            lcm = mono_lcm(basis[i][0], basis[t][0])
            heapq.heappush(heap, (ring.key(lcm), i, t))
            pending.add((i, t))

    for t in range(len(basis)):
        push_pairs(t)

    while heap:
        _check_deadline(deadline, budget)
        _, i, j = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        lmi, lmj = basis[i][0], basis[j][0]
        lcm = mono_lcm(lmi, lmj)
        if mono_mul(lmi, lmj) == lcm:
            continue  # coprime leading terms
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not mono_divides(basis[k][0], lcm):
                continue
            pik = (min(i, k), max(i, k))
            pjk = (min(j, k), max(j, k))
            if pik not in pending and pjk not in pending:
                skip = True
                break
        if skip:
            continue
        r = normal_form(ring, s_polynomial(ring, basis[i], basis[j]), basis, deadline, budget)
        if not r:
            continue
        r = make_monic(ring, r)
        if stop_on_unit and is_constant(r):
            return [ring.one()]
        lm, lc = leading(ring, r)
        basis.append((lm, lc, r))
        push_pairs(len(basis) - 1)

    return reduce_basis(ring, [p for _, _, p in basis], deadline, budget)


def reduce_basis(ring, polys, deadline=None, budget=None):
    """Minimal, inter-reduced, monic, sorted by leading monomial.  Leading
    monomials of a minimal basis never divide each other, so one pass of
    full tail reduction lands on the reduced basis."""
    entries = sorted(
        ((leading(ring, p)[0], p) for p in polys if p),
        key=lambda e: ring.key(e[0]))
    minimal = []
    for lm, p in entries:
        if not any(mono_divides(klm, lm) for klm, _ in minimal):
            minimal.append((lm, p))
    current = [p for _, p in minimal]
    for idx in range(len(current)):
        others = []
        for k, q in enumerate(current):
            if k == idx:
                continue
            lm, lc = leading(ring, q)
            others.append((lm, lc, q))
        current[idx] = make_monic(
            ring, normal_form(ring, current[idx], others, deadline, budget))
    return sorted(current, key=lambda p: ring.key(leading(ring, p)[0]))


def is_groebner(ring, polys):
    """Test helper: every S-polynomial reduces to zero."""
    basis = []
    for p in polys:
        lm, lc = leading(ring, p)
        basis.append((lm, lc, p))
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if normal_form(ring, s_polynomial(ring, basis[i], basis[j]), basis):
                return False
    return True


def ideal_contains_one(basis, ring):
    return any(is_constant(p) for p in basis)


def radical_membership(ring, f, gens, budget=DEFAULT_BUDGET, assume_gb_prefix=0,
                       aux_name="z"):
    """f lies in the radical of (gens) iff 1 lies in (gens, 1 - z*f)."""
    while aux_name in ring.variables:
        aux_name += "_"
    ext = ring.extend(aux_name)

    def lift(p):
        return {m + (0,): v for m, v in p.items()}

    one_minus_zf = {(0,) * ext.n: ext.field.one}
    for m, v in f.items():
        mm = m + (1,)
        one_minus_zf[mm] = ext.field.sub(one_minus_zf.get(mm, ext.field.zero),
                                         ext.field.coerce(v))
    ext_gens = [lift(g) for g in gens] + [one_minus_zf]
    basis = buchberger(ext, ext_gens, budget=budget,
                       assume_gb_prefix=assume_gb_prefix, stop_on_unit=True)
    return ideal_contains_one(basis, ext)
