"""Buchberger's algorithm, normal forms, and ideal membership.

The kernel works on raw ``{monomial: coeff}`` dicts and keeps every basis
element monic.  Pairs are chosen by the normal strategy (smallest lcm first)
and pruned with the Gebauer-Moller installation of the product and chain
criteria.
"""
from __future__ import annotations

import heapq
from typing import Iterable, Sequence

from .polyring import PolyError, PolyRing, Polynomial


def _divides(a, b) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a, b):
    return tuple([x if x > y else y for x, y in zip(a, b)])


def _coprime(a, b) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


class _Kernel:
    """Per-ring state for one basis computation."""

    def __init__(self, ring: PolyRing):
        self.ring = ring
        self.field = ring.field
        key = ring.key
        self.key = key
        self.negkey = lambda m: tuple([-x for x in key(m)])

    def lead(self, p: dict):
        return max(p, key=self.key)

    def monic(self, p: dict) -> dict:
        lm = self.lead(p)
        inv = self.field.inv(p[lm])
        red = self.field.reduce
        return {m: red(c * inv) for m, c in p.items()}

    def reduce(self, p: dict, basis: Sequence[tuple]) -> dict:
        """Fully reduce ``p`` by monic ``basis`` entries ``(lm, terms)``."""
        red = self.field.reduce
        negkey = self.negkey
        p = dict(p)
        heap = [(negkey(m), m) for m in p]
        heapq.heapify(heap)
        queued = set(p)
        rem = {}
        while heap:
            _, m = heapq.heappop(heap)
            queued.discard(m)
            c = p.pop(m, None)
            if c is None:
                continue
            for lm, g in basis:
                if _divides(lm, m):
                    break
            else:
                rem[m] = c
                continue
            q = tuple([a - b for a, b in zip(m, lm)])
            for tm, tc in g.items():
                if tm == lm:
                    continue
                mm = tuple([a + b for a, b in zip(tm, q)])
                v = red(p.get(mm, 0) - c * tc)
                if v:
                    p[mm] = v
                    if mm not in queued:
                        queued.add(mm)
                        heapq.heappush(heap, (negkey(mm), mm))
                else:
                    p.pop(mm, None)
        return rem

    def spoly(self, f: tuple, g: tuple) -> dict:
        (lf, pf), (lg, pg) = f, g
        lcm = _lcm(lf, lg)
        qf = tuple([a - b for a, b in zip(lcm, lf)])
        qg = tuple([a - b for a, b in zip(lcm, lg)])
        red = self.field.reduce
        out = {}
        for m, c in pf.items():
            if m != lf:
                out[tuple([a + b for a, b in zip(m, qf)])] = c
        for m, c in pg.items():
            if m != lg:
                mm = tuple([a + b for a, b in zip(m, qg)])
                v = red(out.get(mm, 0) - c)
                if v:
                    out[mm] = v
                else:
                    out.pop(mm, None)
        return out

    def buchberger(self, polys: Iterable[dict]) -> list:
        store: list = []          # (lm, terms), every element ever added
        current: list = []        # indices of store forming the working basis
        pairs: list = []          # (i, j, lcm)

        def update(h_idx):
            nonlocal current, pairs
            lh = store[h_idx][0]
            cands = [(g, _lcm(store[g][0], lh)) for g in current]
            kept = []
            for n, (g, l) in enumerate(cands):
                if _coprime(store[g][0], lh):
                    kept.append((g, l))
                    continue
                rest = cands[n + 1:]
                if any(_divides(l2, l) for _, l2 in rest) or any(_divides(l2, l) for _, l2 in kept):
                    continue
                kept.append((g, l))
            new_pairs = [(g, h_idx, l) for g, l in kept if not _coprime(store[g][0], lh)]
            survivors = []
            for i, j, l in pairs:
                if (_divides(lh, l)
                        and _lcm(store[i][0], lh) != l
                        and _lcm(store[j][0], lh) != l):
                    continue
                survivors.append((i, j, l))
            pairs = survivors + new_pairs
            current = [g for g in current if not _divides(lh, store[g][0])] + [h_idx]

        def add(p):
            h = self.reduce(p, [store[i] for i in current])
            if h:
                h = self.monic(h)
                store.append((self.lead(h), h))
                update(len(store) - 1)

        inputs = sorted((p for p in polys if p), key=lambda p: self.key(self.lead(p)))
        for p in inputs:
            add(p)
        key = self.key
        while pairs:
            best = min(range(len(pairs)), key=lambda n: (key(pairs[n][2]), pairs[n][0], pairs[n][1]))
            i, j, _ = pairs.pop(best)
            s = self.spoly(store[i], store[j])
            if s:
                add(s)
        return self.interreduce([store[i] for i in current])

    def interreduce(self, basis: list) -> list:
        basis = sorted(basis, key=lambda t: self.key(t[0]))
        minimal = []
        for lm, p in basis:
            if not any(_divides(l2, lm) for l2, _ in minimal):
                minimal.append((lm, p))
        out = []
        for n, (lm, p) in enumerate(minimal):
            others = minimal[:n] + minimal[n + 1:]
            tail = {m: c for m, c in p.items() if m != lm}
            tail = self.reduce(tail, others)
            tail[lm] = p[lm]
            out.append((lm, tail))
        out.sort(key=lambda t: self.key(t[0]), reverse=True)
        return out


class GroebnerBasis:
    """A reduced Groebner basis, sorted by descending leading monomial."""

    def __init__(self, ring: PolyRing, polys: list):
        self.ring = ring
        self.polys = tuple(polys)
        self._pairs = [(p.lead_monomial, p.terms) for p in self.polys]

    @property
    def leading_monomials(self) -> list:
        return [lm for lm, _ in self._pairs]

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.ring == other.ring and set(self.polys) == set(other.polys)

    def __hash__(self):
        return hash(frozenset(self.polys))

    def is_unit(self) -> bool:
        return any(p.is_constant() for p in self.polys)

    def reduce(self, p: Polynomial) -> Polynomial:
        if p.ring != self.ring:
            raise PolyError(f"ring mismatch: {p.ring} vs {self.ring}")
        return Polynomial(self.ring, _Kernel(self.ring).reduce(p.terms, self._pairs))

    def contains(self, p: Polynomial) -> bool:
        return not self.reduce(p)

    def __repr__(self):
        return f"GroebnerBasis([{', '.join(map(str, self.polys))}])"


def _common_ring(polys: Sequence[Polynomial]) -> PolyRing | None:
    rings = {p.ring for p in polys}
    if len(rings) > 1:
        raise PolyError("generators live in different rings")
    return rings.pop() if rings else None


def buchberger(generators: Sequence[Polynomial], ring: PolyRing | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``generators``.

    ``ring`` is only needed when the generator list is empty or all zero.
    """
    found = _common_ring(generators)
    if found is not None and ring is not None and found != ring:
        raise PolyError(f"ring mismatch: {found} vs {ring}")
    ring = found or ring
    if ring is None:
        raise PolyError("cannot infer the ring of an empty generator list")
    kernel = _Kernel(ring)
    basis = kernel.buchberger([g.terms for g in generators if g])
    return GroebnerBasis(ring, [Polynomial(ring, terms) for _, terms in basis])


def normal_form(p: Polynomial, G: GroebnerBasis) -> Polynomial:
    return G.reduce(p)


def _basis_of(I) -> GroebnerBasis:
    if isinstance(I, GroebnerBasis):
        return I
    if hasattr(I, "groebner_basis"):
        return I.groebner_basis()
    return buchberger(list(I))


def ideal_member(p: Polynomial, I) -> bool:
    """Membership of ``p`` in an Ideal, a GroebnerBasis, or a generator list."""
    return _basis_of(I).contains(p)


def ideal_equal(I, J) -> bool:
    """Equality of two ideals via their reduced Groebner bases."""
    return _basis_of(I) == _basis_of(J)
