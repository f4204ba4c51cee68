"""Standard bases for ideals and submodules in any monomial ordering.

Global orderings use Buchberger reduction; local and mixed orderings use the
tangent-cone method: an ecart-guided weak normal form in which the work
polynomial itself joins the reducer set whenever every eligible reducer has
a larger ecart. That self-extension is what makes reduction terminate in
local rings, where naive division can cycle forever.

The work polynomial of a reduction is kept in a geobucket (size-doubling
buckets merged lazily) so that long reductions against short reducers do not
pay a full-length merge per step.
"""

import heapq
import time
from dataclasses import dataclass, field as dataclass_field

from .errors import (
    ComponentMismatch,
    ExponentOverflow,
    InfiniteDimensional,
    ModeOrderingMismatch,
    ModuleRankMismatch,
    ResourceExhausted,
    RingMismatch,
    ZeroElement,
    ZeroPolynomial,
)
from .ring import (
    NEG_DEGLEX,
    NEG_DEGREVLEX,
    Polynomial,
    VectorElement,
    _merge_add,
    _scale,
)

INFINITE = float("inf")
DEFAULT_CEILING = 10 ** 8
_HUGE = 1 << 60


@dataclass(frozen=True)
class Strategy:
    """Tuning knobs for std; every combination computes the same ideal.

    pair_selection: 'sugar' | 'min-lcm-degree' | 'fifo'
    reducer_selection: 'min-ecart' | 'first-found'
    product_criterion / chain_criterion: pair-discarding shortcuts.

    The product (coprimality) shortcut is only applied under global
    orderings; for local leading terms a divisor can sit above the tail,
    which breaks its correctness proof, so there it is a no-op.
    """

    pair_selection: str = "sugar"
    reducer_selection: str = "min-ecart"
    product_criterion: bool = True
    chain_criterion: bool = True

    def __post_init__(self):
        if self.pair_selection not in ("sugar", "min-lcm-degree", "fifo"):
            raise ValueError("bad pair selection %r" % (self.pair_selection,))
        if self.reducer_selection not in ("min-ecart", "first-found"):
            raise ValueError("bad reducer selection %r" % (self.reducer_selection,))

    @classmethod
    def from_text(cls, text):
        """Parse 'sugar,min-ecart,product,chain' style option lists."""
        pair = "sugar"
        reducer = "min-ecart"
        product = True
        chain = True
        for raw in text.split(","):
            tok = raw.strip()
            if not tok:
                continue
            if tok in ("sugar", "min-lcm-degree", "fifo"):
                pair = tok
            elif tok in ("min-ecart", "first-found"):
                reducer = tok
            elif tok in ("product", "no-product"):
                product = tok == "product"
            elif tok in ("chain", "no-chain"):
                chain = tok == "chain"
            else:
                raise ValueError("unknown strategy token %r" % tok)
        return cls(pair, reducer, product, chain)

    def to_json(self):
        return {
            "pair_selection": self.pair_selection,
            "reducer_selection": self.reducer_selection,
            "product_criterion": self.product_criterion,
            "chain_criterion": self.chain_criterion,
        }


@dataclass
class Stats:
    pairs: int = 0
    discarded: int = 0
    reductions: int = 0
    millis: int = 0

    def to_json(self):
        return {
            "pairs": self.pairs,
            "discarded": self.discarded,
            "reductions": self.reductions,
            "millis": self.millis,
        }


# ---------------------------------------------------------------------------
# work-polynomial accumulators

# The lazy heap defers combining equal monomials to pop time: every term
# costs one C-level heappush and one heappop, with no Python merge loops.
# Its raw content can briefly hold cancelled pairs, so anything that needs
# the exact current support (the unbounded tangent-cone path, which reads
# off ecarts) uses the exact geobucket below instead.  On big truncated
# runs the geobucket wins outright (list merges beat per-term heap
# traffic once tails run long), so the bounded path uses it too.


class _HeapBucket:
    __slots__ = ("heap", "p", "_add", "cap")

    def __init__(self, field):
        self.heap = []
        self.p = field.characteristic
        self._add = field.add
        self.cap = 4096

    def add_ascending(self, terms):
        h = self.heap
        push = heapq.heappush
        for code, coeff in terms:
            push(h, (-code, coeff))
        if len(h) > self.cap:
            self._compact()

    add_descending = add_ascending

    def _compact(self):
        items = self.drain_descending()
        self.heap = [(-code, coeff) for code, coeff in items]
        heapq.heapify(self.heap)
        self.cap = 4096 + 4 * len(self.heap)

    def pop_lead(self):
        h = self.heap
        p = self.p
        pop = heapq.heappop
        if p:
            while h:
                negcode, coeff = pop(h)
                while h and h[0][0] == negcode:
                    coeff += pop(h)[1]
                    if coeff >= p:
                        coeff -= p
                if coeff:
                    return (-negcode, coeff)
        else:
            add = self._add
            while h:
                negcode, coeff = pop(h)
                while h and h[0][0] == negcode:
                    coeff = add(coeff, pop(h)[1])
                if coeff:
                    return (-negcode, coeff)
        return None

    def drain_descending(self):
        out = []
        push = out.append
        while True:
            t = self.pop_lead()
            if t is None:
                return out
            push(t)


class _Geobucket:
    __slots__ = ("buckets", "_add", "p")

    def __init__(self, field):
        self.buckets = []
        self._add = field.add
        self.p = field.characteristic

    def add_ascending(self, asc):
        if not asc:
            return
        i = 0
        while (4 << i) < len(asc):
            i += 1
        cur = asc
        buckets = self.buckets
        while i < len(buckets):
            slot = buckets[i]
            if slot:
                cur = self._merge(slot, cur)
                buckets[i] = []
                if len(cur) > (4 << i):
                    i += 1
                    continue
            buckets[i] = cur
            return
        buckets.append(cur)

    def add_descending(self, terms):
        self.add_ascending(terms[::-1])

    def _merge(self, a, b):
        out = []
        push = out.append
        i = j = 0
        na = len(a)
        nb = len(b)
        p = self.p
        add = self._add
        while i < na and j < nb:
            ta = a[i]
            tb = b[j]
            if ta[0] < tb[0]:
                push(ta)
                i += 1
            elif ta[0] > tb[0]:
                push(tb)
                j += 1
            else:
                if p:
                    s = ta[1] + tb[1]
                    if s >= p:
                        s -= p
                else:
                    s = add(ta[1], tb[1])
                if s:
                    push((ta[0], s))
                i += 1
                j += 1
        if i < na:
            out.extend(a[i:])
        if j < nb:
            out.extend(b[j:])
        return out

    def pop_lead(self):
        """Remove and return the leading (code, coeff), or None if zero."""
        buckets = self.buckets
        add = self._add
        while True:
            best_code = -1
            found = False
            for b in buckets:
                if b:
                    c = b[-1][0]
                    if not found or c > best_code:
                        best_code = c
                        found = True
            if not found:
                return None
            coeff = None
            for b in buckets:
                if b and b[-1][0] == best_code:
                    t = b.pop()
                    coeff = t[1] if coeff is None else add(coeff, t[1])
            if coeff:
                return (best_code, coeff)

    def drain_descending(self):
        cur = []
        for b in self.buckets:
            if b:
                cur = self._merge(cur, b)
        self.buckets = []
        cur.reverse()
        return cur

    def max_degree(self, deg_shift, deg_mask, location):
        """Max total degree over the remaining terms, or None if empty."""
        best = None
        for b in self.buckets:
            if not b:
                continue
            if location == "last":
                d = (b[0][0] >> deg_shift) & deg_mask
            elif location == "first":
                d = (b[-1][0] >> deg_shift) & deg_mask
            else:
                d = max((code >> deg_shift) & deg_mask for code, _ in b)
            if best is None or d > best:
                best = d
        return best


# ---------------------------------------------------------------------------
# entries


class _Entry:
    __slots__ = (
        "terms",
        "lead",
        "lead_exps",
        "comp",
        "ecart",
        "sugar",
        "seq",
        "rcodes",
        "rcoeffs",
    )

    def __init__(self, terms, lead, lead_exps, comp, ecart_, sugar, seq):
        self.terms = terms
        self.lead = lead
        self.lead_exps = lead_exps
        self.comp = comp
        self.ecart = ecart_
        self.sugar = sugar
        self.seq = seq
        self.rcodes = None  # tail codes, ascending; built on first use
        self.rcoeffs = None

    def split_tail(self):
        if self.rcodes is None:
            tail = self.terms[:0:-1]
            self.rcodes = [t[0] for t in tail]
            self.rcoeffs = [t[1] for t in tail]
        return self.rcodes, self.rcoeffs


def _terms_max_degree(terms, lay, location):
    if location == "last":
        return lay.degree(terms[-1][0])
    if location == "first":
        return lay.degree(terms[0][0])
    shift = lay.deg_shift
    mask = lay.deg_mask
    return max((code >> shift) & mask for code, _ in terms)


def _layout_for(obj):
    if isinstance(obj, VectorElement):
        return obj.ring.module_layout
    return obj.ring.layout


def _raw(obj):
    return obj._terms


def _wrap(template, ring, terms, rank):
    if rank is None:
        return Polynomial(ring, terms)
    return VectorElement(ring, rank, terms)


# ---------------------------------------------------------------------------
# public single-step operations


def ecart(f):
    """Total degree minus degree of the leading monomial."""
    terms = _raw(f)
    if not terms:
        raise (ZeroElement if isinstance(f, VectorElement) else ZeroPolynomial)(
            "ecart of zero"
        )
    lay = _layout_for(f)
    return _terms_max_degree(terms, lay, f.ring.degree_location) - lay.degree(terms[0][0])


def spoly(f, g):
    """S-polynomial: leading terms are lifted to their lcm and cancelled."""
    if type(f) is not type(g):
        raise ModuleRankMismatch("cannot pair a polynomial with a module element")
    if f.ring != g.ring:
        raise RingMismatch("operands live in different rings")
    tf = _raw(f)
    tg = _raw(g)
    if not tf or not tg:
        raise ZeroPolynomial("s-polynomial of zero")
    ring = f.ring
    lay = _layout_for(f)
    rank = None
    if isinstance(f, VectorElement):
        if f.rank != g.rank:
            raise ModuleRankMismatch("ranks differ")
        rank = f.rank
        if lay.component(tf[0][0]) != lay.component(tg[0][0]):
            raise ComponentMismatch("leading components differ")
    field = ring.field
    ef = lay.decode_exps(tf[0][0])
    eg = lay.decode_exps(tg[0][0])
    lcm = tuple(max(a, b) for a, b in zip(ef, eg))
    df = lay.encode(tuple(l - a for l, a in zip(lcm, ef))) - lay.code_one
    dg = lay.encode(tuple(l - b for l, b in zip(lcm, eg))) - lay.code_one
    cf = field.inv(tf[0][1])
    cg = field.neg(field.inv(tg[0][1]))
    over = lay.exp_overflow_mask
    left = _shift_terms(tf[1:], df, cf, field, over, _HUGE, lay)
    right = _shift_terms(tg[1:], dg, cg, field, over, _HUGE, lay)
    return _wrap(f, ring, _merge_add(left, right, field), rank)


def _shift_terms(terms, delta, c, field, over, bound, lay):
    out = []
    mul = field.mul
    shift = lay.deg_shift
    mask = lay.deg_mask
    for code, coeff in terms:
        nc = code + delta
        if nc & over:
            raise ExponentOverflow("monomial product exceeds exponent range")
        if ((nc >> shift) & mask) < bound:
            out.append((nc, mul(c, coeff)))
    return out


# ---------------------------------------------------------------------------
# weak normal form


def _weak_nf(init_terms, entries, lay, field, location, mora, reducer_rule,
             counter, ceiling, bound, sugar):
    """Reduce until the lead is irreducible; returns (terms, sugar).

    `entries` is read-only and must already be in scan order for the rule:
    (ecart, seq)-sorted for min-ecart, insertion order for first-found.  In
    tangent-cone mode snapshots of the work polynomial are appended to a
    local extras list, exactly when the chosen reducer's ecart exceeds the
    current ecart.

    Termination of the unbounded tangent-cone loop needs one guarantee from
    the selection: whenever some divisor has ecart at most the remainder's,
    such a divisor is chosen (so snapshots happen only when every divisor
    would raise the ecart).  Ecart-sorted scanning gives that for free; in
    first-found mode an unguarded first hit does not, and the degrees can
    ratchet without bound, so there the first qualifying divisor wins and
    the first divisor seen at all is kept as the fallback.
    """
    extend = mora and bound >= _HUGE
    bucket = _Geobucket(field)
    bucket.add_descending(init_terms)
    extras = []
    low_mask = lay.div_low_mask
    check_mask = lay.div_check_mask
    deg_shift = lay.deg_shift
    deg_mask = lay.deg_mask
    over = lay.exp_overflow_mask
    decode = lay.decode_exps
    encode = lay.encode
    code_one = lay.code_one
    mul = field.mul
    neg = field.neg
    min_ecart = reducer_rule == "min-ecart"
    # with a small degree bound active no packed field can overflow, and a
    # prime field lets the whole shift run in comprehensions
    fastp = field.characteristic if bound <= 4096 else 0
    reds = 0

    while True:
        popped = bucket.pop_lead()
        if popped is None:
            counter.reductions += reds
            return [], sugar
        hcode, hcoeff = popped

        h_ecart = 0
        if extend:
            rest_deg = bucket.max_degree(deg_shift, deg_mask, location)
            hdeg = (hcode >> deg_shift) & deg_mask
            if rest_deg is not None and rest_deg > hdeg:
                h_ecart = rest_deg - hdeg

        # first hit wins: for min-ecart the caller pre-sorted `entries` by
        # (ecart, seq), so the first divisor found is the chosen one
        best = None
        if extend and not min_ecart:
            fallback = None
            for e in entries:
                if not ((hcode - e.lead) & low_mask) & check_mask:
                    if e.ecart <= h_ecart:
                        best = e
                        break
                    if fallback is None:
                        fallback = e
            if best is None:
                for e in extras:
                    if not ((hcode - e.lead) & low_mask) & check_mask:
                        if e.ecart <= h_ecart:
                            best = e
                            break
                        if fallback is None:
                            fallback = e
            if best is None:
                best = fallback
        else:
            for e in entries:
                if not ((hcode - e.lead) & low_mask) & check_mask:
                    best = e
                    break
            if extras:
                if min_ecart:
                    bk = (
                        (best.ecart, len(best.terms), best.seq)
                        if best is not None
                        else None
                    )
                    for e in extras:
                        if not ((hcode - e.lead) & low_mask) & check_mask:
                            k = (e.ecart, len(e.terms), e.seq)
                            if bk is None or k < bk:
                                bk = k
                                best = e
                elif best is None:
                    for e in extras:
                        if not ((hcode - e.lead) & low_mask) & check_mask:
                            best = e
                            break

        if best is None:
            tail = bucket.drain_descending()
            tail.insert(0, (hcode, hcoeff))
            counter.reductions += reds
            return tail, sugar

        # self-extension is what makes unbounded local reduction terminate;
        # under an active degree bound strict descent through the finitely
        # many monomials below it already does, with a plain (u = 1)
        # standard representation, so the snapshots are pure overhead
        if extend:
            if best.ecart > h_ecart:
                # every cheaper reduction is exhausted: remember the current
                # state so later leads can reduce against it
                tail = bucket.drain_descending()
                snap = [(hcode, field.one)]
                if tail:
                    inv = field.inv(hcoeff)
                    snap.extend(_scale(tail, inv, field))
                    bucket.add_descending(tail)
                extras.append(
                    _Entry(
                        snap,
                        hcode,
                        decode(hcode),
                        None,
                        h_ecart,
                        sugar,
                        _HUGE + len(extras),
                    )
                )

        # h -= (hcoeff / lc(best)) * quotient * best   (best is monic)
        hexps = decode(hcode)
        delta = encode(tuple(a - b for a, b in zip(hexps, best.lead_exps))) - code_one
        rc, rv = best.split_tail()
        if rc:
            if fastp:
                m = fastp - hcoeff
                asc = [
                    (cc, (m * v) % fastp)
                    for cc, v in zip([c0 + delta for c0 in rc], rv)
                    if ((cc >> deg_shift) & deg_mask) < bound
                ]
            else:
                c = neg(hcoeff)
                asc = []
                push = asc.append
                for k in range(len(rc)):
                    nc = rc[k] + delta
                    if nc & over:
                        raise ExponentOverflow(
                            "monomial product exceeds exponent range"
                        )
                    if ((nc >> deg_shift) & deg_mask) < bound:
                        push((nc, mul(c, rv[k])))
            bucket.add_ascending(asc)
        qdeg = (delta + code_one >> deg_shift) & deg_mask
        s2 = best.sugar + qdeg
        if s2 > sugar:
            sugar = s2
        reds += 1
        if reds + counter.reductions > ceiling:
            counter.reductions += reds
            raise ResourceExhausted(
                "reduction ceiling of %d elementary steps exceeded" % ceiling
            )


# ---------------------------------------------------------------------------
# the algorithm


class _StdEngine:
    def __init__(self, ring, rank, strategy, mora, ceiling, truncation, jet=None):
        self.ring = ring
        self.rank = rank
        self.lay = ring.layout if rank is None else ring.module_layout
        self.field = ring.field
        self.location = ring.degree_location
        self.strategy = strategy
        self.mora = mora
        self.ceiling = ceiling
        self.stats = Stats()
        self.entries = []
        self.pairs = {}  # (i, j) -> lcm code
        self.heap = []
        self.pair_seq = 0
        self.truncation = truncation
        self.tail_reduction = False
        self.scan_order = []
        self.bound = jet if jet is not None else _HUGE
        self.pure = [_HUGE] * ring.n
        self._corner_wait = 0
        # product criterion is only sound when every variable is global
        self.use_product = strategy.product_criterion and ring.is_global
        self.use_chain = strategy.chain_criterion

    # -- truncation bookkeeping -----------------------------------------

    def _note_lead(self, exps):
        # dynamic tightening is per-component territory; scalar only
        if not self.truncation or self.rank is not None:
            return
        nz = [v for v, e in enumerate(exps) if e]
        if len(nz) == 1:
            v = nz[0]
            if exps[v] < self.pure[v]:
                self.pure[v] = exps[v]
                if all(p < _HUGE for p in self.pure):
                    b = sum(self.pure) - len(self.pure) + 1
                    if b < self.bound:
                        self.bound = b

    def _tighten_corner(self):
        """Shrink the truncation bound to just past the staircase top.

        Once a pure power of every variable has shown up the current
        staircase is finite.  Every monomial of degree above its top is a
        multiple of some established lead, so nothing below the jet is
        lost by cutting there; the pure-power sum used in _note_lead is
        only an upper estimate of the same corner.
        """
        if self.rank is not None or not 48 < self.bound < _HUGE:
            return
        if any(p is _HUGE for p in self.pure):
            return
        self._corner_wait -= 1
        if self._corner_wait > 0:
            return
        self._corner_wait = 8
        st = Staircase(
            self.ring.n, None, [(e.lead_exps, 0) for e in self.entries]
        )
        cap = self.bound - 1
        top = -1
        for m in st.std_exponents(0, degree_cap=cap):
            d = sum(m)
            if d > top:
                top = d
        # a top at the cap proves nothing: the true staircase may go on
        if top >= cap:
            return
        self.bound = top + 1
        lay = self.lay
        for e in self.entries:
            if lay.degree(e.lead) >= self.bound:
                continue  # inert: divides no surviving term
            nt = self._truncate(e.terms)
            if len(nt) != len(e.terms):
                e.terms = nt
                e.rcodes = None
                e.rcoeffs = None
                e.ecart = _terms_max_degree(nt, lay, self.location) - lay.degree(e.lead)

    def _truncate(self, terms):
        if self.bound >= _HUGE:
            return terms
        shift = self.lay.deg_shift
        mask = self.lay.deg_mask
        b = self.bound
        return [t for t in terms if ((t[0] >> shift) & mask) < b]

    # -- pair bookkeeping -------------------------------------------------

    def insert(self, terms, sugar):
        """Add a monic element and update the pair queue (Gebauer-Moeller)."""
        lay = self.lay
        entries = self.entries
        t = len(entries)
        lead = terms[0][0]
        lead_exps = lay.decode_exps(lead)
        comp = lay.component(lead) if self.rank is not None else None
        ecart_ = _terms_max_degree(terms, lay, self.location) - lay.degree(lead)
        entry = _Entry(terms, lead, lead_exps, comp, ecart_, sugar, t)
        mono = len(terms) == 1
        new = {}
        for i, other in enumerate(entries):
            if comp is not None and other.comp != comp:
                continue
            if mono and len(other.terms) == 1:
                continue  # s-polynomial of two monomials is identically zero
            lexps = tuple(max(a, b) for a, b in zip(other.lead_exps, lead_exps))
            new[i] = lay.encode(lexps, comp)
        self.stats.pairs += len(new)

        survivors = sorted(new)
        if self.use_chain and new:
            kept = []
            for i in survivors:
                li = new[i]
                drop = False
                for j in survivors:
                    if j == i:
                        continue
                    lj = new[j]
                    if lj != li and lay.divides(lj, li):
                        drop = True
                        break
                if drop:
                    self.stats.discarded += 1
                else:
                    kept.append(i)
            # one representative per equal-lcm class; a coprime member
            # (when the product shortcut applies) kills the whole class
            by_lcm = {}
            for i in kept:
                by_lcm.setdefault(new[i], []).append(i)
            kept = []
            for lcm_code, members in sorted(by_lcm.items()):
                if self.use_product:
                    prod = None
                    for i in members:
                        if lcm_code == entries[i].lead + lead - self.lay.code_one:
                            prod = i
                            break
                    if prod is not None:
                        self.stats.discarded += len(members)
                        continue
                kept.append(members[0])
                self.stats.discarded += len(members) - 1
            survivors = sorted(kept)

        if self.use_product:
            final = []
            for i in survivors:
                if new[i] == entries[i].lead + lead - lay.code_one:
                    self.stats.discarded += 1
                else:
                    final.append(i)
            survivors = final

        if self.use_chain:
            # old pairs whose lcm is strictly refined by the new lead die
            dead = []
            for (i, j), lcm_code in self.pairs.items():
                if not lay.divides(lead, lcm_code):
                    continue
                li = lay.encode(
                    tuple(max(a, b) for a, b in zip(entries[i].lead_exps, lead_exps)),
                    entries[i].comp,
                )
                if li == lcm_code:
                    continue
                lj = lay.encode(
                    tuple(max(a, b) for a, b in zip(entries[j].lead_exps, lead_exps)),
                    entries[j].comp,
                )
                if lj == lcm_code:
                    continue
                dead.append((i, j))
            for key in dead:
                del self.pairs[key]
                self.stats.discarded += 1

        entries.append(entry)
        self._note_lead(lead_exps)
        self._tighten_corner()
        # ties in ecart go to the shortest tail: cheaper to apply, and a
        # monomial reducer deletes the term outright
        self.scan_order = sorted(
            entries, key=lambda e: (e.ecart, len(e.terms), e.seq)
        )
        lay_deg = lay.degree
        for i in survivors:
            lcm_code = new[i]
            deg_lcm = lay_deg(lcm_code)
            if deg_lcm >= self.bound:
                # every term of the s-polynomial sits at or above the lcm
                # degree, so it truncates to zero
                self.stats.discarded += 1
                continue
            other = entries[i]
            sug = max(
                other.sugar + deg_lcm - lay_deg(other.lead),
                sugar + deg_lcm - lay_deg(lead),
            )
            if self.strategy.pair_selection == "sugar":
                k0 = sug
            elif self.strategy.pair_selection == "min-lcm-degree":
                k0 = deg_lcm
            else:
                k0 = 0
            self.pairs[(i, t)] = lcm_code
            heapq.heappush(self.heap, (k0, self.pair_seq, i, t))
            self.pair_seq += 1

    def _tail_reduce(self, terms):
        """Totally reduce the non-lead terms against the current entries.

        Keeps stored generators short, which is what bounds the cost of
        every later reduction step. Each replacement rewrites a term by
        strictly smaller ones, so this terminates whenever the ordering is
        a well-order (global) or a degree bound is active (finitely many
        monomials below it); callers guard on that.
        """
        scan = self.scan_order
        if len(terms) == 1 or not scan:
            return terms
        lay = self.lay
        field = self.field
        low_mask = lay.div_low_mask
        check_mask = lay.div_check_mask
        deg_shift = lay.deg_shift
        deg_mask = lay.deg_mask
        over = lay.exp_overflow_mask
        decode = lay.decode_exps
        encode = lay.encode
        code_one = lay.code_one
        mul = field.mul
        neg = field.neg
        bound = self.bound
        fastp = field.characteristic if bound <= 4096 else 0
        ceiling = self.ceiling
        stats = self.stats
        out = [terms[0]]
        bucket = _HeapBucket(field)
        bucket.add_descending(terms[1:])
        reds = 0
        while True:
            popped = bucket.pop_lead()
            if popped is None:
                break
            hcode, hcoeff = popped
            best = None
            for e in scan:
                if not ((hcode - e.lead) & low_mask) & check_mask:
                    best = e
                    break
            if best is None:
                out.append(popped)
                continue
            hexps = decode(hcode)
            delta = encode(tuple(a - b for a, b in zip(hexps, best.lead_exps))) - code_one
            rc, rv = best.split_tail()
            if rc:
                if fastp:
                    m = fastp - hcoeff
                    asc = [
                        (cc, (m * v) % fastp)
                        for cc, v in zip([c0 + delta for c0 in rc], rv)
                        if ((cc >> deg_shift) & deg_mask) < bound
                    ]
                else:
                    c = neg(hcoeff)
                    asc = []
                    push = asc.append
                    for k in range(len(rc)):
                        nc = rc[k] + delta
                        if nc & over:
                            raise ExponentOverflow(
                                "monomial product exceeds exponent range"
                            )
                        if ((nc >> deg_shift) & deg_mask) < bound:
                            push((nc, mul(c, rv[k])))
                bucket.add_ascending(asc)
            reds += 1
            if reds + stats.reductions > ceiling:
                stats.reductions += reds
                raise ResourceExhausted(
                    "reduction ceiling of %d elementary steps exceeded" % ceiling
                )
        stats.reductions += reds
        return out

    def spoly_terms(self, i, j, lcm_code):
        lay = self.lay
        field = self.field
        ei = self.entries[i]
        ej = self.entries[j]
        lexps = lay.decode_exps(lcm_code)
        di = lay.encode(tuple(l - a for l, a in zip(lexps, ei.lead_exps))) - lay.code_one
        dj = lay.encode(tuple(l - a for l, a in zip(lexps, ej.lead_exps))) - lay.code_one
        left = _shift_terms(ei.terms[1:], di, field.one, field, lay.exp_overflow_mask, self.bound, lay)
        right = _shift_terms(
            ej.terms[1:], dj, field.neg(field.one), field, lay.exp_overflow_mask, self.bound, lay
        )
        return _merge_add(left, right, field), lay.degree(lcm_code)

    def run(self, seeds):
        field = self.field
        tail_ok = self.tail_reduction and (self.ring.is_global or self.bound < _HUGE)
        for terms, sugar in seeds:
            terms = self._truncate(terms)
            if not terms:
                continue
            if terms[0][1] != field.one:
                terms = _scale(terms, field.inv(terms[0][1]), field)
            if tail_ok:
                terms = self._tail_reduce(terms)
            self.insert(terms, sugar)
        min_ecart = self.strategy.reducer_selection == "min-ecart"
        while self.heap:
            _, _, i, j = heapq.heappop(self.heap)
            lcm_code = self.pairs.pop((i, j), None)
            if lcm_code is None:
                continue  # discarded while queued
            if self.lay.degree(lcm_code) >= self.bound:
                # the bound may have tightened since the pair was queued
                self.stats.discarded += 1
                continue
            s_terms, deg_lcm = self.spoly_terms(i, j, lcm_code)
            ei = self.entries[i]
            ej = self.entries[j]
            sug = max(
                ei.sugar + deg_lcm - self.lay.degree(ei.lead),
                ej.sugar + deg_lcm - self.lay.degree(ej.lead),
            )
            nf, sug = _weak_nf(
                s_terms,
                self.scan_order if min_ecart else self.entries,
                self.lay,
                field,
                self.location,
                self.mora,
                self.strategy.reducer_selection,
                self.stats,
                self.ceiling,
                self.bound,
                sug,
            )
            nf = self._truncate(nf)
            if nf:
                if nf[0][1] != field.one:
                    nf = _scale(nf, field.inv(nf[0][1]), field)
                if tail_ok:
                    nf = self._tail_reduce(nf)
                self.insert(nf, sug)

    def minimal_entries(self):
        lay = self.lay
        entries = self.entries
        order = sorted(
            range(len(entries)),
            key=lambda k: (lay.degree(entries[k].lead), entries[k].seq),
        )
        kept = []
        for idx in order:
            lead = entries[idx].lead
            if any(lay.divides(entries[k].lead, lead) for k in kept):
                continue
            kept.append(idx)
        kept.sort(key=lambda k: -entries[k].lead)
        return [entries[k] for k in kept]


class StandardBasis:
    """Result of std: minimal monic generators plus run statistics.

    When `jet` is set the basis describes the ideal plus the jet-th power of
    the maximal ideal; leading terms are exact below degree `jet` only, and
    dimension queries go through jet_dimensions.
    """

    def __init__(self, ring, rank, generators, stats, mode, strategy, jet=None):
        self.ring = ring
        self.rank = rank
        self.generators = tuple(generators)
        self.stats = stats
        self.mode = mode
        self.strategy = strategy
        self.jet = jet
        self._staircase = None

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    @property
    def layout(self):
        return self.ring.layout if self.rank is None else self.ring.module_layout

    def leading_exponents(self):
        """Minimal generators of the leading module: (exponents, component)."""
        lay = self.layout
        out = []
        for g in self.generators:
            code = g._terms[0][0]
            comp = lay.component(code) if self.rank is not None else 0
            out.append((lay.decode_exps(code), comp))
        return out

    def staircase(self):
        if self._staircase is None:
            self._staircase = Staircase(
                self.ring.n, self.rank, self.leading_exponents()
            )
        return self._staircase


def _jet_eligible(ring, rank):
    """Jet truncation needs degree to dominate the (module) comparison."""
    if len(ring.ordering.blocks) != 1:
        return False
    if ring.ordering.blocks[0].kind not in (NEG_DEGLEX, NEG_DEGREVLEX):
        return False
    from .ring import POSITION_OVER_TERM

    return rank is None or ring.ordering.module_rule != POSITION_OVER_TERM


def std(
    generators,
    strategy=None,
    *,
    mode="auto",
    ceiling=DEFAULT_CEILING,
    truncate=None,
    jet=None,
):
    """Standard basis of the span of `generators` (list of one kind).

    mode 'auto' picks Buchberger for global orderings and the tangent-cone
    reduction otherwise; 'buchberger' insists and raises for non-global
    orderings; 'mora' always uses tangent-cone reduction (valid anywhere).

    For zero-dimensional runs under a pure local degree ordering, terms above
    a degree bound derived from the pure powers already found are discarded
    on the fly; this never changes the leading module or the staircase.
    Pass truncate=False to disable that.

    jet=K computes a standard basis of the input plus the K-th power of the
    maximal ideal (every term of degree >= K is dropped throughout); the
    leading data is exact below degree K. Only meaningful for local degree
    orderings; dimension queries then go through jet_dimensions.
    """
    gens = [g for g in generators if g]
    if not gens:
        gens_all = list(generators)
        if not gens_all:
            raise ZeroPolynomial("std of an empty generator list")
        ring = gens_all[0].ring
        rank = gens_all[0].rank if isinstance(gens_all[0], VectorElement) else None
        return StandardBasis(
            ring, rank, (), Stats(), "auto", strategy or Strategy(), jet
        )
    ring = gens[0].ring
    first = gens[0]
    rank = first.rank if isinstance(first, VectorElement) else None
    for g in gens:
        if g.ring != ring:
            raise RingMismatch("generators live in different rings")
        if isinstance(g, VectorElement) != (rank is not None):
            raise ModuleRankMismatch("mixed polynomials and module elements")
        if rank is not None and g.rank != rank:
            raise ModuleRankMismatch("module ranks differ")
    if strategy is None:
        strategy = Strategy()
    if mode not in ("auto", "buchberger", "mora"):
        raise ValueError("mode must be auto, buchberger or mora")
    if mode == "buchberger" and not ring.is_global:
        raise ModeOrderingMismatch("buchberger mode needs a global ordering")
    mora = (mode == "mora") or (mode == "auto" and not ring.is_global)

    trunc_ok = (
        rank is None
        and len(ring.ordering.blocks) == 1
        and ring.ordering.blocks[0].kind in (NEG_DEGLEX, NEG_DEGREVLEX)
    )
    truncation = trunc_ok if truncate is None else bool(truncate) and trunc_ok
    if jet is not None:
        if not isinstance(jet, int) or jet < 1:
            raise ValueError("jet must be a positive integer")
        if not _jet_eligible(ring, rank):
            raise ModeOrderingMismatch(
                "jet truncation needs a single local degree ordering block"
            )

    t0 = time.perf_counter()
    engine = _StdEngine(ring, rank, strategy, mora, ceiling, truncation, jet)
    lay = engine.lay
    seeds = []
    for g in gens:
        terms = list(g._terms)
        seeds.append((terms, _terms_max_degree(terms, lay, engine.location)))
    engine.run(seeds)
    kept = engine.minimal_entries()
    engine.stats.millis = int((time.perf_counter() - t0) * 1000)
    gens_out = [_wrap(first, ring, e.terms, rank) for e in kept]
    mode_used = "mora" if mora else "buchberger"
    return StandardBasis(ring, rank, gens_out, engine.stats, mode_used, strategy, jet)


def normal_form(f, reducers, mode="auto", strategy=None, ceiling=DEFAULT_CEILING):
    """Weak normal form of f against a reducer list or StandardBasis.

    The result is zero or has a leading term divisible by no reducer lead.
    """
    if isinstance(reducers, StandardBasis):
        reducers = list(reducers.generators)
    ring = f.ring
    rank = f.rank if isinstance(f, VectorElement) else None
    field = ring.field
    lay = ring.layout if rank is None else ring.module_layout
    if strategy is None:
        strategy = Strategy()
    if mode not in ("auto", "buchberger", "mora"):
        raise ValueError("mode must be auto, buchberger or mora")
    if mode == "buchberger" and not ring.is_global:
        raise ModeOrderingMismatch("buchberger mode needs a global ordering")
    mora = (mode == "mora") or (mode == "auto" and not ring.is_global)
    entries = []
    for k, g in enumerate(reducers):
        if not g:
            continue
        if g.ring != ring:
            raise RingMismatch("reducers live in different rings")
        if (isinstance(g, VectorElement) != (rank is not None)) or (
            rank is not None and g.rank != rank
        ):
            raise ModuleRankMismatch("reducers do not match the element")
        terms = g._terms
        if terms[0][1] != field.one:
            terms = _scale(terms, field.inv(terms[0][1]), field)
        lead = terms[0][0]
        entries.append(
            _Entry(
                terms,
                lead,
                lay.decode_exps(lead),
                lay.component(lead) if rank is not None else None,
                _terms_max_degree(terms, lay, ring.degree_location) - lay.degree(lead),
                _terms_max_degree(terms, lay, ring.degree_location),
                k,
            )
        )
    if strategy.reducer_selection == "min-ecart":
        entries.sort(key=lambda e: (e.ecart, len(e.terms), e.seq))
    counter = Stats()
    init = list(f._terms)
    sugar = _terms_max_degree(init, lay, ring.degree_location) if init else 0
    out, _ = _weak_nf(
        init,
        entries,
        lay,
        field,
        ring.degree_location,
        mora,
        strategy.reducer_selection,
        counter,
        ceiling,
        _HUGE,
        sugar,
    )
    return _wrap(f, ring, out, rank)


def is_member(f, basis, ceiling=DEFAULT_CEILING):
    """Membership in the span of a standard basis (weak normal form test)."""
    if f.ring != basis.ring:
        raise RingMismatch("element and basis live in different rings")
    if not f:
        return True
    return not normal_form(f, basis, mode="mora", ceiling=ceiling)


# ---------------------------------------------------------------------------
# staircase queries


class Staircase:
    """Monomial data of a leading module: minimal generators per component."""

    def __init__(self, n, rank, lead_exponents):
        self.n = n
        self.rank = rank
        comps = {}
        for exps, comp in lead_exponents:
            comps.setdefault(comp, []).append(tuple(exps))
        self.gens = {c: _minimalize_monomials(v) for c, v in comps.items()}

    def components(self):
        if self.rank is None:
            return (0,)
        return tuple(range(1, self.rank + 1))

    def pure_power_degrees(self, comp):
        """Per variable: least pure-power exponent present, or None."""
        out = [None] * self.n
        for exps in self.gens.get(comp, ()):
            nz = [v for v, e in enumerate(exps) if e]
            if len(nz) == 1:
                v = nz[0]
                if out[v] is None or exps[v] < out[v]:
                    out[v] = exps[v]
        return out

    def contains_origin(self, comp):
        return any(not any(e) for e in self.gens.get(comp, ()))

    def is_finite(self):
        """Finite staircase iff every component has a pure power per variable."""
        for comp in self.components():
            if self.contains_origin(comp):
                continue
            pures = self.pure_power_degrees(comp)
            if any(p is None for p in pures):
                return False
        return True

    def std_exponents(self, comp, degree_cap=None):
        """Exponent tuples outside the component's leading ideal."""
        gens = self.gens.get(comp, ())
        if any(not any(e) for e in gens):
            return []
        n = self.n
        out = []
        stack = [((0,) * n, 0)]
        while stack:
            m, minvar = stack.pop()
            hit = False
            for g in gens:
                for a, b in zip(g, m):
                    if a > b:
                        break
                else:
                    hit = True
                    break
            if hit:
                continue
            out.append(m)
            d = sum(m)
            if degree_cap is not None and d + 1 > degree_cap:
                continue
            for v in range(minvar, n):
                child = m[:v] + (m[v] + 1,) + m[v + 1 :]
                stack.append((child, v))
        return out

    def counts_by_degree(self, degree_cap):
        """Number of standard monomials per total degree, all components."""
        counts = [0] * (degree_cap + 1)
        for comp in self.components():
            for m in self.std_exponents(comp, degree_cap=degree_cap):
                d = sum(m)
                if d <= degree_cap:
                    counts[d] += 1
        return counts


def _minimalize_monomials(monos):
    out = []
    for m in sorted(set(monos), key=lambda e: (sum(e), e)):
        keep = True
        for g in out:
            for a, b in zip(g, m):
                if a > b:
                    break
            else:
                keep = False
                break
        if keep:
            out.append(m)
    return out


def vdim(basis):
    """Dimension of the quotient by the leading module; INFINITE if not finite."""
    if basis.jet is not None:
        raise ValueError("basis is jet-truncated; use jet_dimensions")
    st = basis.staircase()
    if not st.is_finite():
        return INFINITE
    total = 0
    for comp in st.components():
        total += len(st.std_exponents(comp))
    return total


def kbase(basis):
    """Monomial basis of the quotient, ascending in the (module) ordering."""
    if basis.jet is not None:
        raise ValueError("basis is jet-truncated; use jet_dimensions")
    st = basis.staircase()
    if not st.is_finite():
        raise InfiniteDimensional("quotient is not finite dimensional")
    ring = basis.ring
    if basis.rank is None:
        monos = st.std_exponents(0)
        monos.sort(key=ring.monomial_key)
        return [ring.monomial(m) for m in monos]
    lay = ring.module_layout
    items = []
    for comp in st.components():
        for m in st.std_exponents(comp):
            items.append((lay.encode(m, comp), m, comp))
    items.sort()
    one = ring.field.one
    return [VectorElement(ring, basis.rank, [(code, one)]) for code, _, _ in items]


def highest_corner(basis):
    """Least N with every monomial of degree >= N in the leading ideal."""
    if basis.rank is not None:
        raise ModuleRankMismatch("highest corner is defined for ideals")
    if basis.jet is not None:
        raise ValueError("basis is jet-truncated; use jet_dimensions")
    st = basis.staircase()
    if not st.is_finite():
        return INFINITE
    monos = st.std_exponents(0)
    if not monos:
        return 0
    return 1 + max(sum(m) for m in monos)


def jet_dimensions(basis):
    """Per-degree standard-monomial counts of a jet-truncated basis.

    Returns (counts, certified) where counts[d] is the number of standard
    monomials of degree d for 0 <= d < jet. Standard-monomial degrees of any
    submodule form a gap-free interval, so a zero in the top slot certifies
    that the counts are complete: their sum is the true vdim.
    """
    if basis.jet is None:
        raise ValueError("basis was not jet-truncated")
    cap = basis.jet - 1
    st = basis.staircase()
    counts = st.counts_by_degree(cap)
    certified = counts[cap] == 0
    return counts, certified


def local_vdim(
    generators,
    *,
    start_jet=32,
    max_jet=4096,
    strategy=None,
    ceiling=DEFAULT_CEILING,
):
    """vdim over a local degree ordering, via jet runs of increasing order.

    Each run computes modulo the jet-th power of the maximal ideal; once the
    top degree carries no standard monomial the count is exact and is
    returned with its basis. Falls back to an untruncated run (which decides
    INFINITE honestly) if max_jet is exhausted or the ordering does not
    support jets.
    """
    gens = [g for g in generators if g]
    if not gens:
        return INFINITE, None
    ring = gens[0].ring
    rank = gens[0].rank if isinstance(gens[0], VectorElement) else None
    if _jet_eligible(ring, rank):
        k = max(2, start_jet)
        while k <= max_jet:
            basis = std(gens, strategy, ceiling=ceiling, jet=k)
            counts, ok = jet_dimensions(basis)
            if ok:
                return sum(counts), basis
            # leads below the jet are genuine, so once every component shows
            # a pure power in each variable the staircase degree is bounded
            # and the next jet can be chosen exactly sufficient
            st = basis.staircase()
            need = 0
            for comp in st.components():
                pures = st.pure_power_degrees(comp)
                if not all(p is not None for p in pures):
                    need = None
                    break
                need = max(need, sum(pures) - len(pures) + 2)
            if need is not None and k < need < 2 * k:
                k = need
            else:
                k = 2 * k
        basis = std(gens, strategy, ceiling=ceiling)
        return vdim(basis), basis
    basis = std(gens, strategy, ceiling=ceiling)
    return vdim(basis), basis
