"""Ideals of Z_N[x] containing a monic polynomial, in canonical echelon form.

An ideal containing the monic context polynomial f is a submodule of
Z_N^deg(f) (coefficient vectors of residues) closed under multiplication by
x.  Presentations store the Howell normal form of that submodule: pivot
entries are divisor-of-N scalars, pivot columns strictly increase (columns
ordered from the highest degree down), entries above pivots are reduced, and
the row span contains every annihilator multiple.  Equal ideals have
identical rows, so uniqueness questions reduce to tuple comparison.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import ComponentNotAdmissible, DuplicatePrime, TooLarge
from .factorlift import (
    FactorLabel,
    base_factor,
    bezout_certificate,
    factor_xn_plus1,
    lift_level0_factor,
)
from .poly import Poly, poly_mod
from .zring import Modulus, divisors, inverse_mod

ENUM_BUDGET = 1 << 16


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def _normalizing_unit(g: int, N: int) -> tuple[int, int]:
    """(u, d) with u a unit mod N and u*g = d = gcd(g, N) mod N."""
    d = math.gcd(g, N)
    if d == N:
        return 1, 0
    w = (g // d) % (N // d)
    u = inverse_mod(w, N // d)
    while math.gcd(u, N) != 1:
        u += N // d
    return u % N, d


def _leading(row: list[int]) -> int:
    for i, v in enumerate(row):
        if v:
            return i
    return -1


def howell_form(rows, N: int, width: int) -> tuple[tuple[int, ...], ...]:
    """Howell normal form of the span of the given rows over Z_N."""
    pool = []
    for r in rows:
        rr = [v % N for v in r]
        if any(rr):
            pool.append(rr)
    basis: list[list[int]] = []
    for col in range(width):
        cur = [r for r in pool if _leading(r) == col]
        pool = [r for r in pool if _leading(r) != col]
        if not cur:
            continue
        r = cur[0]
        for s in cur[1:]:
            a, b = r[col], s[col]
            g, u, v = _ext_gcd(a, b)
            # unimodular pair transform: pivot gcd up, eliminated row down
            new_r = [(u * x + v * y) % N for x, y in zip(r, s)]
            new_s = [((b // g) * x - (a // g) * y) % N for x, y in zip(r, s)]
            r = new_r
            if any(new_s):
                pool.append(new_s)
        u, d = _normalizing_unit(r[col], N)
        r = [(u * x) % N for x in r]
        if d == 0:
            continue
        basis.append(r)
        if d != 1:
            ann = [((N // d) * x) % N for x in r]
            if any(ann):
                pool.append(ann)
    # reduce entries above each pivot
    for i, r in enumerate(basis):
        c = _leading(r)
        d = r[c]
        for j in range(i):
            q = basis[j][c] // d
            if q:
                basis[j] = [(x - q * y) % N for x, y in zip(basis[j], r)]
    return tuple(tuple(r) for r in basis)


@dataclass(frozen=True)
class IdealPresentation:
    """Canonical presentation of an ideal of Z_N[x] containing context_monic."""

    modulus: Modulus
    context_monic: Poly
    rows: tuple[tuple[int, ...], ...]
    provenance: tuple[Poly, ...] = field(compare=False, default=())

    @property
    def width(self) -> int:
        return self.context_monic.degree

    def key(self):
        return (self.modulus.N, self.context_monic.coeffs, self.rows)

    def __hash__(self):
        return hash(self.key())

    def __eq__(self, other):
        return isinstance(other, IdealPresentation) and self.key() == other.key()

    def poly_to_row(self, f: Poly) -> tuple[int, ...]:
        f = poly_mod(f, self.context_monic)
        D = self.width
        return tuple(f[D - 1 - j] for j in range(D))

    def row_to_poly(self, row) -> Poly:
        D = self.width
        return Poly([row[D - 1 - j] for j in range(D)], self.modulus)

    def row_polys(self) -> list[Poly]:
        return [self.row_to_poly(r) for r in self.rows]

    def pivots(self) -> dict[int, tuple[int, tuple[int, ...]]]:
        """column -> (pivot scalar, row)."""
        return {_leading(r): (r[_leading(r)], r) for r in self.rows}

    def reduce_row(self, vec) -> tuple[int, ...]:
        """Canonical coset representative of a coefficient vector."""
        N = self.modulus.N
        v = [x % N for x in vec]
        piv = self.pivots()
        for c in range(self.width):
            if c in piv and v[c]:
                d, row = piv[c]
                q = v[c] // d
                if q:
                    v = [(x - q * y) % N for x, y in zip(v, row)]
        return tuple(v)

    def contains_row(self, vec) -> bool:
        return not any(self.reduce_row(vec))

    def contains(self, f: Poly) -> bool:
        """Membership of a polynomial (reduced against the context first)."""
        return self.contains_row(self.poly_to_row(f))

    def quotient_size(self) -> int:
        N = self.modulus.N
        piv = self.pivots()
        size = 1
        for c in range(self.width):
            size *= piv[c][0] if c in piv else N
        return size

    def constant_divisor(self) -> int:
        """d such that the constants contained in the ideal are exactly (d)."""
        piv = self.pivots()
        c = self.width - 1
        return piv[c][0] if c in piv else self.modulus.N

    def __repr__(self):
        gens = ", ".join(str(p) for p in self.row_polys()) or "0"
        return f"<({gens}) + ({self.context_monic}) over {self.modulus}>"


def canonical_form(
    generators,
    context_monic: Poly,
    modulus: Modulus,
    base_rows: tuple[tuple[int, ...], ...] = (),
) -> IdealPresentation:
    """Smallest shift-closed row space containing the generators (and base_rows).

    The span of x^j*g mod f for 0 <= j < deg f is already closed under x,
    because x*(x^(D-1) g) reduces to a combination of lower shifts.
    """
    if not context_monic.is_monic() or context_monic.degree < 1:
        raise ValueError("context must be monic of degree >= 1")
    D = context_monic.degree
    rows = [list(r) for r in base_rows]
    for g in generators:
        g = poly_mod(g.reduce_mod(modulus), context_monic)
        for j in range(D):
            shifted = poly_mod(g.shift(j), context_monic)
            rows.append([shifted[D - 1 - i] for i in range(D)])
    hf = howell_form(rows, modulus.N, D)
    pres = IdealPresentation(modulus, context_monic, hf, tuple(generators))
    _assert_shift_closed(pres)
    return pres


def _assert_shift_closed(pres: IdealPresentation) -> None:
    for r in pres.rows:
        shifted = poly_mod(pres.row_to_poly(r).shift(1), pres.context_monic)
        assert pres.contains(shifted), "presentation not closed under x"


def zero_ideal(context_monic: Poly, modulus: Modulus) -> IdealPresentation:
    return canonical_form([], context_monic, modulus)


@dataclass(frozen=True)
class Admissibility:
    ok: bool
    clause: str | None = None
    detail: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_admissible(Q: IdealPresentation, N: int, n: int) -> Admissibility:
    """Defining clauses, each checked by direct membership.

    (i) x^n + 1 lies in the ideal; (ii) no x^m + 1 with 1 <= m < n does;
    (iii) no nonzero constant does.  n = 1 is accepted (clause (ii) is then
    vacuous) because cross-prime components may carry valence 2.
    """
    if Q.modulus.N != N:
        raise ValueError(f"ideal is over Z_{Q.modulus.N}, not Z_{N}")
    if n < 1:
        raise ValueError("n must be >= 1")
    if not Q.contains(Poly.x_pow_plus_const(n, 1, Q.modulus)):
        return Admissibility(False, "i", f"x^{n}+1 not in ideal")
    d = Q.constant_divisor()
    if d != N:
        return Admissibility(False, "iii", f"constant {d} in ideal")
    for m in range(1, n):
        if Q.contains(Poly.x_pow_plus_const(m, 1, Q.modulus)):
            return Admissibility(False, "ii", f"x^{m}+1 in ideal")
    return Admissibility(True)


def is_admissible_type2(Q: IdealPresentation, n: int) -> Admissibility:
    """Involution-generator variant over Z_2: proper-divisor minimality."""
    if Q.modulus.N != 2:
        raise ValueError("type II presentations live over Z_2")
    if not Q.contains(Poly.x_pow_plus_const(n, 1, Q.modulus)):
        return Admissibility(False, "i", f"x^{n}+1 not in ideal")
    for m in divisors(n):
        if m < n and Q.contains(Poly.x_pow_plus_const(m, 1, Q.modulus)):
            return Admissibility(False, "ii", f"x^{m}+1 in ideal")
    if Q.constant_divisor() != 2:
        return Admissibility(False, "iii", "ideal is the whole ring")
    return Admissibility(True)


@dataclass(frozen=True)
class CrtSplit:
    """Ring decomposition of Z_{p^k}[x]/(x^n+1) into label components."""

    p: int
    k: int
    n: int
    labels: tuple[tuple[int, int], ...]
    contexts: tuple[Poly, ...]
    idempotents: tuple[Poly, ...]

    @property
    def ambient(self) -> Poly:
        return Poly.x_pow_plus_const(self.n, 1, Modulus(self.p, self.k))

    def forward(self, f: Poly) -> list[Poly]:
        return [poly_mod(f, ctx) for ctx in self.contexts]

    def backward(self, parts) -> Poly:
        mod = Modulus(self.p, self.k)
        acc = Poly.zero(mod)
        for g, e in zip(parts, self.idempotents):
            acc = acc + g * e
        return poly_mod(acc, self.ambient)


@lru_cache(maxsize=None)
def crt_split(p: int, k: int, n: int) -> CrtSplit:
    """Component contexts and element maps for Z_{p^k}[x]/(x^n+1)."""
    mod = Modulus(p, k)
    one = Poly.one(mod)
    by_lambda: dict[tuple[int, int], Poly] = {}
    for f in factor_xn_plus1(p, k, n):
        key = (f.label.d, f.label.l)
        by_lambda[key] = by_lambda.get(key, one) * f.poly
    labels = tuple(sorted(by_lambda))
    contexts = tuple(by_lambda[key] for key in labels)
    ambient = Poly.x_pow_plus_const(n, 1, mod)
    if len(labels) == 1:
        idems = (one,)
    else:
        idems = []
        for i, ctx in enumerate(contexts):
            rest = one
            for j, other in enumerate(contexts):
                if j != i:
                    rest = rest * other
            _, v = bezout_certificate(ctx, rest)
            idems.append(poly_mod(v * rest, ambient))
        idems = tuple(idems)
    split = CrtSplit(p, k, n, labels, contexts, idems)
    # ring-decomposition sanity: orthogonal idempotents summing to 1
    total = Poly.zero(mod)
    for i, e in enumerate(idems):
        total = total + e
        assert poly_mod(e, contexts[i]) == poly_mod(one, contexts[i])
        for j, ctx in enumerate(contexts):
            if j != i:
                assert poly_mod(e, ctx).is_zero()
    assert poly_mod(total, ambient) == poly_mod(one, ambient)
    return split


def combine_components(split: CrtSplit, parts) -> IdealPresentation:
    """Ideal of Z_{p^k}[x]/(x^n+1) whose component ideals are the given parts.

    Each part is a list of generator polynomials for the ideal inside its
    component quotient (the component context is always included).
    """
    mod = Modulus(split.p, split.k)
    gens = []
    for e, ctx, part in zip(split.idempotents, split.contexts, parts):
        gens.append(e * ctx)
        for g in part:
            gens.append(e * g)
    return canonical_form(gens, split.ambient, mod)


# ---------------------------------------------------------------------------
# exhaustive enumeration of shift-closed submodules


def _residue_digits(pres: IdealPresentation) -> list[int]:
    """Digit bound per column for canonical coset representatives."""
    N = pres.modulus.N
    piv = pres.pivots()
    return [piv[c][0] if c in piv else N for c in range(pres.width)]


def iter_residues(pres: IdealPresentation):
    """Canonical representatives of the quotient by the presented ideal."""
    for combo in itertools.product(*[range(b) for b in _residue_digits(pres)]):
        yield combo


def enumerate_ideals_between(
    context: Poly,
    modulus: Modulus,
    base: IdealPresentation | None = None,
    budget: int = ENUM_BUDGET,
) -> list[IdealPresentation]:
    """All ideals of Z_N[x]/(context) containing the base ideal.

    Exhaustive over shift-closed row spans: computes the principal closure of
    every residue (modulo unit scaling and x-shifts), then closes the set
    under pairwise sums.
    """
    if base is None:
        base = zero_ideal(context, modulus)
    size = base.quotient_size()
    if size > budget:
        raise TooLarge(f"quotient has {size} elements (budget {budget})")
    N = modulus.N
    D = context.degree
    units = [u for u in range(1, N) if math.gcd(u, N) == 1]
    # x-shifts preserve principal ideals only when x is a unit mod context
    x_invertible = math.gcd(context[0], N) == 1
    seen: set[tuple[int, ...]] = set()
    principals: dict[tuple, IdealPresentation] = {}
    for combo in iter_residues(base):
        if combo in seen or not any(combo):
            continue
        gen = base.row_to_poly(combo)
        pres = canonical_form([gen], context, modulus, base_rows=base.rows)
        principals.setdefault(pres.rows, pres)
        # unit multiples (and x-shifts, when allowed) generate the same ideal
        cur = gen
        for _ in range(4 * D):
            for u in units:
                seen.add(base.reduce_row(base.poly_to_row(cur.scale(u))))
            if not x_invertible:
                break
            cur = poly_mod(cur.shift(1), context)
            if base.reduce_row(base.poly_to_row(cur)) == combo:
                break
    found: dict[tuple, IdealPresentation] = {base.rows: base}
    for pres in principals.values():
        found.setdefault(pres.rows, pres)
    frontier = list(found.values())
    plist = list(principals.values())
    while frontier:
        cur = frontier.pop()
        for pr in plist:
            rows = howell_form(list(cur.rows) + list(pr.rows), N, D)
            if rows not in found:
                pres = IdealPresentation(modulus, context, rows)
                found[rows] = pres
                frontier.append(pres)
    out = list(found.values())
    out.sort(key=lambda q: q.rows)
    return out


def radical_floor(
    context: Poly, modulus: Modulus, quotient_bound: int, residue_degree: int, radical_gen: Poly
) -> IdealPresentation:
    """Power of the maximal ideal below every ideal of bounded index.

    In the local quotient with maximal ideal (p, g) and residue field of size
    p^residue_degree, an ideal of index <= quotient_bound contains m^s for
    s = floor(log_{p^o} bound): each radical layer of the quotient has at
    least p^o elements.
    """
    p = modulus.p
    q = p**residue_degree
    s = 0
    while q ** (s + 1) <= quotient_bound:
        s += 1
    m = canonical_form([Poly.constant(p, modulus), radical_gen], context, modulus)
    gens = [Poly.one(modulus)]
    for _ in range(s):
        gens = [a * b for a in gens for b in [Poly.constant(p, modulus), radical_gen]]
        gens = list({poly_mod(g, context).coeffs: poly_mod(g, context) for g in gens}.values())
    power = canonical_form(gens, context, modulus)
    if s >= 1:
        assert all(m.contains_row(r) for r in power.rows)
    return power


def bounded_ideals_local_tree(
    context: Poly,
    modulus: Modulus,
    bound: int,
    radical_gen: Poly,
    residue_degree: int,
) -> list[IdealPresentation]:
    """Ideals of index <= bound in a local quotient, by descending maximal chains.

    Children of an ideal I are its maximal subideals, all of which contain
    m*I and have index |residue field| in I; they are read off a small
    enumeration of the module between m*I and I.
    """
    p = modulus.p
    q = p**residue_degree
    full = canonical_form([Poly.one(modulus)], context, modulus)
    ring_size = modulus.N ** context.degree
    out = {full.rows: full}
    frontier = [full]
    while frontier:
        ideal = frontier.pop()
        index = ring_size // _ideal_size(ideal, ring_size)
        if index * q > bound:
            continue
        gens = list(ideal.row_polys()) + [context]
        mi_gens = [Poly.constant(p, modulus) * g for g in gens]
        mi_gens += [radical_gen * g for g in gens]
        mi = canonical_form(mi_gens, context, modulus)
        for child in enumerate_ideals_between(context, modulus, base=mi):
            if child.quotient_size() != index * q:
                continue
            if child.rows in out:
                continue
            if not all(ideal.contains_row(r) for r in child.rows):
                continue
            out[child.rows] = child
            frontier.append(child)
    return sorted(
        (v for v in out.values() if v.quotient_size() <= bound),
        key=lambda x: x.rows,
    )


def _ideal_size(pres: IdealPresentation, ring_size: int) -> int:
    return ring_size // pres.quotient_size()


def closed_form_ideals(
    factor_poly: Poly, label: FactorLabel, p: int, k: int
) -> list[IdealPresentation] | None:
    """Known ideal lattices above a lifted factor, or None when no form applies.

    k = 1: the quotient is a principal chain (powers of the base factor).
    level 0, k >= 2: an unramified chain ring; ideals are (f, p^u).
    p = 2, level >= 1, k >= 2: ideals (f, 2^u * lift^v, 2^(u+1)) after
    deduplication.  Odd p at level >= 1 with k >= 2 has no closed form.
    """
    mod = Modulus(p, k)
    ctx = factor_poly
    if k == 1:
        q = base_factor(p, label.d, label.l)
        e = factor_poly.degree // q.degree
        out = [canonical_form([q**a], ctx, mod) for a in range(e + 1)]
    elif label.level == 0:
        out = [
            canonical_form([Poly.constant(p**u, mod)], ctx, mod) for u in range(k + 1)
        ]
    elif p == 2:
        e = 2 ** (label.level - 1)
        tilde = lift_level0_factor(label.d, label.l, p, k).poly
        seen = {}
        for u in range(k):
            for v in range(e + 1):
                gens = [Poly.constant(2**u, mod) * tilde**v, Poly.constant(2 ** (u + 1), mod)]
                pres = canonical_form(gens, ctx, mod)
                seen.setdefault(pres.rows, pres)
        out = list(seen.values())
    else:
        return None
    dedup = {}
    for pres in out:
        dedup.setdefault(pres.rows, pres)
    out = sorted(dedup.values(), key=lambda q: q.rows)
    return out


def enumerate_ideals_containing(
    f: Poly, p: int, k: int, label: FactorLabel | None = None
) -> list[IdealPresentation]:
    """All ideals of Z_{p^k}[x] containing the monic f, canonical and sorted.

    Exhaustive within the element budget; a label unlocks the closed-form
    lattice, which is cross-checked against the exhaustive list whenever both
    are available.
    """
    mod = Modulus(p, k)
    size = (p**k) ** f.degree
    closed = closed_form_ideals(f, label, p, k) if label is not None else None
    if size <= ENUM_BUDGET:
        out = enumerate_ideals_between(f, mod)
        if closed is not None:
            assert [q.rows for q in closed] == [q.rows for q in out], (
                "closed-form ideal list disagrees with exhaustive enumeration"
            )
        return out
    if closed is not None:
        return closed
    raise TooLarge(f"quotient has {size} elements and no closed form applies")


# ---------------------------------------------------------------------------
# cross-prime composition


def compose_across_primes(components) -> tuple[int, int, IdealPresentation]:
    """Intersection of per-prime preimages: one ideal over the composite modulus.

    components: iterable of (p, k_p, Q_p, n_p).  Verifies x^n+1 membership
    for n = lcm of the n_p and that projecting back recovers each Q_p.
    """
    comps = list(components)
    if not comps:
        raise ValueError("no components")
    primes = [c[0] for c in comps]
    if len(set(primes)) != len(primes):
        raise DuplicatePrime(f"primes {primes}")
    n = 1
    for _, _, _, n_p in comps:
        n = n * n_p // math.gcd(n, n_p)
    N = 1
    for p, k_p, Q_p, n_p in comps:
        adm = is_admissible(Q_p, p**k_p, n_p)
        if not adm:
            raise ComponentNotAdmissible(f"component p={p}: clause {adm.clause} ({adm.detail})")
        N *= p**k_p
    for p, k_p, Q_p, n_p in comps:
        xn1 = Poly.x_pow_plus_const(n, 1, Modulus(p, k_p))
        if not Q_p.contains(xn1):
            raise ComponentNotAdmissible(
                f"component p={p}: x^{n}+1 escapes the ideal (valences {n_p} vs lcm {n})"
            )
    if len(comps) == 1:
        p, k_p, Q_p, n_p = comps[0]
        return p**k_p, n_p, Q_p
    modN = Modulus.composite(N)
    context = Poly.x_pow_plus_const(n, 1, modN)
    gens = []
    for p, k_p, Q_p, n_p in comps:
        m = p**k_p
        rest = N // m
        e_p = (rest * inverse_mod(rest, m)) % N
        for g in list(Q_p.row_polys()) + [Q_p.context_monic]:
            gens.append(Poly([e_p * c for c in g.coeffs], modN))
    Q = canonical_form(gens, context, modN)
    for p, k_p, Q_p, n_p in comps:
        mod_p = Modulus(p, k_p)
        ctx_p = Poly.x_pow_plus_const(n_p, 1, mod_p)
        proj = canonical_form(
            [g.reduce_mod(mod_p) for g in Q.row_polys()] + [Poly.x_pow_plus_const(n, 1, mod_p)],
            ctx_p,
            mod_p,
        )
        expected = canonical_form(
            list(Q_p.row_polys()) + [Q_p.context_monic], ctx_p, mod_p
        )
        if proj.rows != expected.rows:
            raise ComponentNotAdmissible(f"projection to p={p} does not recover the component")
    return N, n, Q
