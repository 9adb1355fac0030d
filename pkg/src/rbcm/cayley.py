"""Cayley map records, validity checks, face tracing, and the brute-force oracle.

Records store the rotation as an explicit cycle of group elements in
invariant-factor coordinates, so maps built from ideals and maps found by the
oracle live in one representation.  The oracle enumerates (automorphism,
seed) pairs when the automorphism search space is small, and falls back to
exhaustive shift-closed relation-lattice enumeration (realized and validated
definitionally, deduplicated by explicit isomorphism search) when it is not.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from functools import lru_cache

from .errors import DegenerateOmega, NotAdmissible, TooLarge, TypeMismatch
from .factorlift import base_factor
from .ideals import (
    IdealPresentation,
    bounded_ideals_local_tree,
    canonical_form,
    combine_components,
    crt_split,
    enumerate_ideals_between,
    is_admissible,
    is_admissible_type2,
    radical_floor,
)
from .structure import (
    AbelianGroupTable,
    QuotientRing,
    quotient_isomorphism,
)
from .zring import Modulus, factorize

DEFAULT_ORACLE_BUDGET = 128
AUT_CANDIDATE_LIMIT = 30_000


def oracle_budget() -> int:
    return int(os.environ.get("RBCM_ORACLE_BUDGET", DEFAULT_ORACLE_BUDGET))


class CayleyMapRecord:
    """A balanced Cayley map: group, generator cycle, and type."""

    def __init__(self, group: AbelianGroupTable, cycle, map_type: str, source=None):
        self.group = group
        self.cycle = tuple(tuple(g) for g in cycle)
        self.map_type = map_type
        self.source = source
        self.valence = len(self.cycle)
        self._stats = None
        self._witness = None

    @property
    def omega(self) -> tuple[tuple[int, ...], ...]:
        if self.map_type == "I":
            return self.cycle[: self.valence // 2]
        return self.cycle

    def rho(self, w):
        return self.cycle[(self.cycle.index(tuple(w)) + 1) % self.valence]

    def canonical_key(self):
        rotations = [
            self.cycle[i:] + self.cycle[:i] for i in range(self.valence)
        ]
        return (self.map_type, self.group.invariants, min(rotations))

    def validate(self) -> None:
        g = self.group
        zero = g.zero()
        assert zero not in self.cycle, "identity in generating set"
        assert len(set(self.cycle)) == self.valence, "repeated generator"
        if self.map_type == "I":
            n = self.valence // 2
            assert self.valence == 2 * n and n >= 2
            for i in range(self.valence):
                assert self.cycle[(i + n) % self.valence] == g.neg(self.cycle[i]), (
                    "cycle is not sign-paired"
                )
        else:
            assert self.map_type == "II"
            for w in self.cycle:
                assert g.element_order(w) == 2, "type II generator of order != 2"
        assert g.generates(self.cycle), "generators do not span the group"

    def __repr__(self):
        return f"<{self.map_type} map on {self.group}, valence {self.valence}>"


@dataclass(frozen=True)
class MapStats:
    vertices: int
    edges: int
    faces: int
    genus: int
    face_lengths: tuple[int, ...]


def _hom_extend_idx(src: AbelianGroupTable, dst: AbelianGroupTable, pair_idx):
    """Index-based homomorphism extension; returns the image table or None.

    Breadth-first closure over the subgroup generated by the sources; an edge
    conflict means no homomorphism exists.  Checking every (element, i) edge
    certifies path-independence, hence additivity.
    """
    els_s, idx_s, add_s, _, _ = src.tables()
    _, idx_d, add_d, _, _ = dst.tables()
    table = [-1] * len(els_s)
    z_s = idx_s[src.zero()]
    table[z_s] = idx_d[dst.zero()]
    frontier = [z_s]
    while frontier:
        a = frontier.pop()
        row_a = add_s[a]
        row_fa = add_d[table[a]]
        for g, h in pair_idx:
            b = row_a[g]
            fb = row_fa[h]
            got = table[b]
            if got < 0:
                table[b] = fb
                frontier.append(b)
            elif got != fb:
                return None
    return table


def hom_extend(src: AbelianGroupTable, dst: AbelianGroupTable, pairs):
    """Total map extending g_i -> h_i to a homomorphism (as a dict), or None."""
    els_s, idx_s, _, _, _ = src.tables()
    els_d, idx_d, _, _, _ = dst.tables()
    pair_idx = [(idx_s[tuple(g)], idx_d[tuple(h)]) for g, h in pairs]
    table = _hom_extend_idx(src, dst, pair_idx)
    if table is None:
        return None
    return {els_s[i]: els_d[v] for i, v in enumerate(table) if v >= 0}


def _is_total_bijection(table, order: int) -> bool:
    if any(v < 0 for v in table):
        return False
    return len(set(table)) == order


def is_rbcm(record: CayleyMapRecord):
    """(flag, witness): does the rotation extend to a group automorphism?"""
    g = record.group
    els, idx, _, _, _ = g.tables()
    L = record.valence
    cyc = [idx[w] for w in record.cycle]
    pair_idx = [(cyc[i], cyc[(i + 1) % L]) for i in range(L)]
    table = _hom_extend_idx(g, g, pair_idx)
    if table is None or not _is_total_bijection(table, g.order):
        return False, None
    record._witness = {els[i]: els[v] for i, v in enumerate(table)}
    return True, {w: record._witness[w] for w in record.cycle}


def maps_isomorphic(m1: CayleyMapRecord, m2: CayleyMapRecord) -> bool:
    """Group isomorphism carrying one rotation cycle onto the other."""
    if m1.map_type != m2.map_type:
        raise TypeMismatch(f"{m1.map_type} vs {m2.map_type}")
    if m1.group.invariants != m2.group.invariants or m1.valence != m2.valence:
        return False
    _, idx1, _, _, _ = m1.group.tables()
    _, idx2, _, _, _ = m2.group.tables()
    L = m1.valence
    c1 = [idx1[w] for w in m1.cycle]
    c2 = [idx2[w] for w in m2.cycle]
    order = m1.group.order
    for shift in range(L):
        pair_idx = [(c1[i], c2[(i + shift) % L]) for i in range(L)]
        table = _hom_extend_idx(m1.group, m2.group, pair_idx)
        if table is not None and _is_total_bijection(table, order):
            return True
    return False


def trace_faces(record: CayleyMapRecord) -> MapStats:
    """Face census from the next-arc rule (v, w) -> (v + w, rho(-w))."""
    g = record.group
    L = record.valence
    n = L // 2 if record.map_type == "I" else L
    els, idx, add_rows, _, _ = g.tables()
    V = len(els)
    cyc = [idx[w] for w in record.cycle]
    nxt_pos = [((i + n) % L + 1) % L if record.map_type == "I" else (i + 1) % L for i in range(L)]
    E = V * L // 2
    seen = bytearray(V * L)
    lengths = []
    for start in range(V * L):
        if seen[start]:
            continue
        length = 0
        cur = start
        while not seen[cur]:
            seen[cur] = 1
            length += 1
            v, i = divmod(cur, L)
            cur = add_rows[v][cyc[i]] * L + nxt_pos[i]
        assert cur == start, "face trace failed to close"
        lengths.append(length)
    F = len(lengths)
    euler = V - E + F
    assert euler % 2 == 0, "odd Euler characteristic"
    genus = (2 - euler) // 2
    assert genus >= 0, f"negative genus {genus}"
    return MapStats(V, E, F, genus, tuple(sorted(lengths)))


def map_stats(record: CayleyMapRecord) -> MapStats:
    if record._stats is None:
        record._stats = trace_faces(record)
    return record._stats


def arc_transitive(record: CayleyMapRecord) -> bool:
    """Explicit orbit computation: translations + the rotation automorphism."""
    ok, _ = is_rbcm(record)
    if not ok:
        return False
    g = record.group
    els, idx, add_rows, _, _ = g.tables()
    sigma = [idx[record._witness[e]] for e in els]
    L = record.valence
    cyc = [idx[w] for w in record.cycle]
    base = idx[g.zero()] * L
    seen = bytearray(len(els) * L)
    seen[base] = 1
    frontier = [base]
    count = 1
    while frontier:
        arc = frontier.pop()
        v, i = divmod(arc, L)
        nxts = [add_rows[v][t] * L + i for t in cyc]
        nxts.append(sigma[v] * L + (i + 1) % L)
        for nxt in nxts:
            if not seen[nxt]:
                seen[nxt] = 1
                count += 1
                frontier.append(nxt)
    return count == g.order * L


# ---------------------------------------------------------------------------
# construction from ideals


def realize_record(Q: IdealPresentation, n: int, map_type: str) -> CayleyMapRecord:
    """Map record of an ideal presentation: generators are images of powers of x."""
    ring = QuotientRing(Q)
    typ, to_coords = quotient_isomorphism(Q)
    if not typ.invariant_factors:
        raise DegenerateOmega("trivial quotient")
    group = AbelianGroupTable(typ.invariant_factors)
    omegas = [to_coords(ring.x_power_image(i)) for i in range(n)]
    if map_type == "I":
        negs = [group.neg(w) for w in omegas]
        cycle = omegas + negs
    else:
        cycle = omegas
    if len(set(cycle)) != len(cycle) or group.zero() in cycle:
        raise DegenerateOmega(f"collisions among signed generators (n={n})")
    return CayleyMapRecord(group, cycle, map_type, source=Q)


def build_map(Q: IdealPresentation, N: int, n: int, map_type: str = "I") -> CayleyMapRecord:
    """Standard map of an admissible ideal (admissibility checked first)."""
    if map_type == "I":
        if n < 2:
            raise ValueError("type I maps need n >= 2")
        adm = is_admissible(Q, N, n)
    else:
        if N != 2:
            raise ValueError("type II maps live over Z_2")
        adm = is_admissible_type2(Q, n)
    if not adm:
        raise NotAdmissible(adm.clause or "?", adm.detail or "")
    record = realize_record(Q, n, map_type)
    record.validate()
    ok, _ = is_rbcm(record)
    assert ok, "constructed map is not balanced-regular"
    return record


# ---------------------------------------------------------------------------
# automorphism enumeration (sigma-mode oracle)


def _same_prime(invariants) -> int | None:
    primes = {factorize(d)[0][0] for d in invariants}
    if len(primes) == 1 and all(len(factorize(d)) == 1 for d in invariants):
        return primes.pop()
    return None


def aut_candidate_count(invariants) -> int:
    total = 1
    for di in invariants:
        for dj in invariants:
            total *= math.gcd(di, dj)
    return total


def _candidate_images(group: AbelianGroupTable, d: int):
    """Elements killed by d, i.e. valid images of a generator of order d."""
    ranges = []
    for dj in group.invariants:
        step = dj // math.gcd(dj, d)
        ranges.append(range(0, dj, step))
    return [tuple(v) for v in itertools.product(*ranges)]


def _rank_mod_p(rows, p) -> int:
    m = [[x % p for x in r] for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] % p), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], -1, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c]
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


@lru_cache(maxsize=None)
def automorphism_matrices(invariants: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All automorphisms as rows-of-generator-images, for modest groups."""
    group = AbelianGroupTable(invariants)
    count = aut_candidate_count(invariants)
    if count > AUT_CANDIDATE_LIMIT:
        raise TooLarge(f"{count} automorphism candidates")
    p = _same_prime(invariants)
    pools = [_candidate_images(group, d) for d in invariants]
    auts = []
    for rows in itertools.product(*pools):
        if p is not None:
            if _rank_mod_p(rows, p) != group.rank:
                continue
        else:
            if len(group.closure(rows)) != group.order:
                continue
        auts.append(tuple(rows))
    return tuple(auts)


def _mat_apply(rows, g, invariants):
    acc = [0] * len(invariants)
    for coef, img in zip(g, rows):
        if coef:
            for j, x in enumerate(img):
                acc[j] += coef * x
    return tuple(a % d for a, d in zip(acc, invariants))


def _mat_mul(a, b, invariants):
    return tuple(_mat_apply(b, row, invariants) for row in a)


def _mat_pow(rows, e, invariants):
    n = len(invariants)
    acc = tuple(
        tuple(1 if i == j else 0 for j in range(n)) for i in range(n)
    )
    base = rows
    while e:
        if e & 1:
            acc = _mat_mul(acc, base, invariants)
        base = _mat_mul(base, base, invariants)
        e >>= 1
    return acc


def _det_mod_p(rows, p) -> int:
    return 0 if _rank_mod_p(rows, p) < len(rows) else 1


def _sigma_mode(group: AbelianGroupTable, n: int, map_type: str):
    invariants = group.invariants
    auts = automorphism_matrices(invariants)
    p = _same_prime(invariants)
    elements = [g for g in group.elements() if g != group.zero()]
    exponent = group.exponent
    records = {}
    for rows in auts:
        power = _mat_pow(rows, n, invariants)
        if map_type == "I":
            cond = tuple(
                tuple((x + (1 if i == j else 0)) % d for j, (x, d) in enumerate(zip(r, invariants)))
                for i, r in enumerate(power)
            )
        else:
            cond = tuple(
                tuple((x - (1 if i == j else 0)) % d for j, (x, d) in enumerate(zip(r, invariants)))
                for i, r in enumerate(power)
            )
        if p is not None and _det_mod_p(cond, p):
            continue  # sigma^n -+ 1 injective: no seeds
        for w in elements:
            if map_type == "I" and group.element_order(w) != exponent:
                continue
            if map_type == "II" and group.element_order(w) != 2:
                continue
            if any(_mat_apply(cond, w, invariants)):
                continue
            orbit = [w]
            for _ in range(n - 1):
                orbit.append(_mat_apply(rows, orbit[-1], invariants))
            if map_type == "I":
                cycle = orbit + [group.neg(o) for o in orbit]
            else:
                cycle = orbit
            if len(set(cycle)) != len(cycle) or group.zero() in cycle:
                continue
            rec = CayleyMapRecord(group, cycle, map_type)
            key = rec.canonical_key()
            if key in records:
                continue
            if not group.generates(cycle):
                records[key] = None
                continue
            records[key] = rec
    return [r for r in records.values() if r is not None]


# ---------------------------------------------------------------------------
# lattice-mode oracle and bounded ideal enumeration


@lru_cache(maxsize=None)
def bounded_admissible_candidates(
    p: int, k: int, n: int, bound: int
) -> tuple[IdealPresentation, ...]:
    """All ideals of Z_{p^k}[x] containing x^n+1 with quotient order <= bound.

    Enumerates each CRT component up to the bound (behind a radical-power
    floor when the component ring is large) and combines the choices.
    """
    split = crt_split(p, k, n)
    mod = Modulus(p, k)
    per_component = []
    for (d, ell), ctx in zip(split.labels, split.contexts):
        size = (p**k) ** ctx.degree
        o = base_factor(p, d, ell).degree
        gen = base_factor(p, d, ell).reduce_mod(mod)
        if size <= 1 << 16:
            ideals = enumerate_ideals_between(ctx, mod)
        else:
            floor = radical_floor(ctx, mod, bound, o, gen)
            if floor.quotient_size() <= 1 << 16:
                ideals = enumerate_ideals_between(ctx, mod, base=floor)
            else:
                ideals = bounded_ideals_local_tree(ctx, mod, bound, gen, o)
        ideals = [q for q in ideals if q.quotient_size() <= bound]
        ideals.sort(key=lambda q: q.rows)
        per_component.append(ideals)
    out = []
    if len(per_component) == 1:
        for q in per_component[0]:
            out.append(
                canonical_form(
                    list(q.row_polys()) + [split.contexts[0]], split.ambient, mod
                )
            )
    else:
        for combo in itertools.product(*per_component):
            index = 1
            for q in combo:
                index *= q.quotient_size()
            if index > bound:
                continue
            out.append(combine_components(split, [q.row_polys() for q in combo]))
    dedup = {}
    for q in out:
        dedup.setdefault(q.rows, q)
    return tuple(sorted(dedup.values(), key=lambda q: q.rows))


def _lattice_mode(group: AbelianGroupTable, n: int, map_type: str):
    """Oracle via exhaustive relation-lattice enumeration and definitional checks."""
    N = group.exponent
    facs = factorize(N)
    assert len(facs) == 1, "lattice mode needs a p-group"
    p, k = facs[0]
    candidates = bounded_admissible_candidates(p, k, n, group.order)
    records = {}
    for Q in candidates:
        if Q.quotient_size() != group.order:
            continue
        try:
            rec = realize_record(Q, n, map_type)
        except DegenerateOmega:
            continue
        if rec.group.invariants != group.invariants:
            continue
        try:
            rec.validate()
        except AssertionError:
            continue
        ok, _ = is_rbcm(rec)
        if not ok:
            continue
        records.setdefault(rec.canonical_key(), rec)
    return list(records.values())


def _dedup_classes(records):
    """Quotient a record list by map isomorphism, keeping first representatives."""
    classes = []
    buckets = {}
    for rec in sorted(records, key=lambda r: r.canonical_key()):
        orders = tuple(sorted(rec.group.element_order(w) for w in rec.cycle))
        st = map_stats(rec)
        key = (rec.map_type, rec.valence, orders, st.genus, st.face_lengths)
        hit = False
        for other in buckets.get(key, []):
            if maps_isomorphic(rec, other):
                hit = True
                break
        if not hit:
            buckets.setdefault(key, []).append(rec)
            classes.append(rec)
    return classes


def brute_force_rbcms(group_spec, valence: int):
    """One representative per isomorphism class of balanced regular maps.

    Returns type I classes (even valence 2n, n >= 2) and type II classes
    (valence n >= 2; only elementary 2-groups can carry them).
    """
    group = (
        group_spec
        if isinstance(group_spec, AbelianGroupTable)
        else AbelianGroupTable(tuple(group_spec))
    )
    budget = oracle_budget()
    if group.order > budget:
        raise TooLarge(f"group order {group.order} exceeds oracle budget {budget}")
    if valence > 2 * group.order:
        raise ValueError("valence exceeds twice the group order")
    out = []
    elementary2 = all(d == 2 for d in group.invariants)
    # type I at valence 2n
    if valence % 2 == 0 and valence >= 4:
        n = valence // 2
        if elementary2:
            pass  # signed pairs always collide: no type I maps
        elif aut_candidate_count(group.invariants) <= AUT_CANDIDATE_LIMIT:
            out.extend(_sigma_mode(group, n, "I"))
        else:
            out.extend(_lattice_mode(group, n, "I"))
    # type II at valence n
    if elementary2 and valence >= 2:
        if aut_candidate_count(group.invariants) <= AUT_CANDIDATE_LIMIT:
            out.extend(_sigma_mode(group, valence, "II"))
        else:
            out.extend(_lattice_mode(group, valence, "II"))
    return _dedup_classes(out)
