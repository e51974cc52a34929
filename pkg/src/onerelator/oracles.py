"""Independent ground truth for checking the solver's verdicts.

Nothing here shares code paths with the hierarchy solver: normal-closure
membership is certified by explicit products of conjugates, metabelian
Baumslag-Solitar groups by exact affine maps, the modular group by integer
matrices, and primitivity by Whitehead moves.  All arithmetic is exact.
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import words
from .errors import ResourceExhausted
from .words import (
    cyclic_reduce,
    cyclically_equal_up_to_inversion,
    exponent_vector,
    invert,
    multiply,
    reduce,
)


# ---------------------------------------------------------------------------
# normal closure enumeration

@dataclass(frozen=True)
class NclCertificate:
    """Product of conjugates of the relator equal to the target word."""

    factors: tuple  # sequence of (conjugator word, +-1)

    def expand(self, relator):
        out = ()
        for conj, eps in self.factors:
            r = relator if eps == 1 else invert(relator)
            out = multiply(out, multiply(conj, multiply(r, invert(conj))))
        return out


def _all_reduced_words(num_gens, max_len):
    """Every freely reduced word of length <= max_len, shortest first."""
    out = [()]
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for g in range(num_gens):
                for s in (1, -1):
                    lt = s * (g + 1)
                    if w and w[-1] == -lt:
                        continue
                    nxt.append(w + (lt,))
        out.extend(nxt)
        frontier = nxt
    return out


def ncl_semidecide(pres, w, conj_len, max_factors):
    """Search for ``w`` as a product of <= max_factors conjugates of r.

    Breadth-first over partial products, pruning states too long to still
    reach the target.  A hit returns a certificate (always re-verified by
    the caller via :meth:`NclCertificate.expand`); a miss returns None,
    which only means "not found within budget".
    """
    w = reduce(w)
    if not w:
        return NclCertificate(())
    conjugates = []
    seen = set()
    for g in _all_reduced_words(pres.alphabet.size, conj_len):
        for eps in (1, -1):
            r = pres.relator if eps == 1 else invert(pres.relator)
            c = multiply(g, multiply(r, invert(g)))
            if c not in seen:
                seen.add(c)
                conjugates.append((c, (g, eps)))
    step_len = max(len(c) for c, _ in conjugates) if conjugates else 0
    start = ()
    parent = {start: None}
    layer = deque([start])
    for used in range(max_factors):
        remaining = max_factors - used - 1
        nxt = deque()
        while layer:
            cur = layer.popleft()
            for c, tag in conjugates:
                new = multiply(cur, c)
                if new in parent:
                    continue
                if len(new) > len(w) + remaining * step_len:
                    continue
                parent[new] = (cur, tag)
                if new == w:
                    factors = []
                    node = new
                    while parent[node] is not None:
                        prev, t = parent[node]
                        factors.append(t)
                        node = prev
                    return NclCertificate(tuple(reversed(factors)))
                nxt.append(new)
        layer = nxt
    return None


# ---------------------------------------------------------------------------
# modular group

@dataclass(frozen=True)
class ProjectiveMatrix:
    """2x2 integer matrix of determinant 1 modulo +-I.

    The stored representative has its first nonzero entry (reading a, b,
    c, d) positive.
    """

    a: int
    b: int
    c: int
    d: int

    @classmethod
    def of(cls, a, b, c, d):
        if a * d - b * c != 1:
            raise ValueError("determinant must be 1")
        for x in (a, b, c, d):
            if x != 0:
                if x < 0:
                    a, b, c, d = -a, -b, -c, -d
                break
        return cls(a, b, c, d)

    @classmethod
    def identity(cls):
        return cls.of(1, 0, 0, 1)

    def __mul__(self, other):
        return ProjectiveMatrix.of(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d)

    def inverse(self):
        return ProjectiveMatrix.of(self.d, -self.b, -self.c, self.a)

    def is_identity(self):
        return (self.a, self.b, self.c, self.d) == (1, 0, 0, 1)

    def mobius(self):
        """Human-readable Mobius transformation string."""
        def lin(p, q):
            if p == 0:
                return str(q)
            s = {1: "z", -1: "-z"}.get(p, f"{p}z")
            if q > 0:
                s += f"+{q}"
            elif q < 0:
                s += str(q)
            return s
        return f"({lin(self.a, self.b)})/({lin(self.c, self.d)})"


#: order-2 and order-3 generators of PSL2(Z); with these the commutator
#: [a,b] evaluates to (2,1;1,1), the corrected beta_0 transformation
#: (2z+1)/(z+1).
MAT_A = ProjectiveMatrix.of(0, -1, 1, 0)
MAT_B = ProjectiveMatrix.of(0, -1, 1, 1)


def psl2_eval(w, mat_a=MAT_A, mat_b=MAT_B):
    """Evaluate a word over a two-letter alphabet in PSL2(Z)."""
    out = ProjectiveMatrix.identity()
    table = {1: mat_a, -1: mat_a.inverse(), 2: mat_b, -2: mat_b.inverse()}
    for lt in w:
        out = out * table[lt]
    return out


def free_at_length(m1, m2, max_len):
    """True iff no nonempty reduced word of length <= max_len in m1, m2
    evaluates to the projective identity."""
    gens = {1: m1, -1: m1.inverse(), 2: m2, -2: m2.inverse()}
    frontier = [((), ProjectiveMatrix.identity())]
    for _ in range(max_len):
        nxt = []
        for w, m in frontier:
            for lt, g in gens.items():
                if w and w[-1] == -lt:
                    continue
                prod = m * g
                if prod.is_identity():
                    return False
                nxt.append((w + (lt,), prod))
        frontier = nxt
    return True


# ---------------------------------------------------------------------------
# Smith normal form

def smith_invariants(matrix):
    """Invariant factors d1 | d2 | ... of a small integer matrix.

    Plain elementary row/column reduction over the integers; zero factors
    (free rank) come last.
    """
    m = [list(map(int, row)) for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if max(rows, cols, 0) > 8:
        raise ValueError("matrix larger than 8x8")
    factors = []
    s = 0
    while s < rows and s < cols:
        # pick the nonzero entry of least magnitude as pivot
        pivot = None
        for i in range(s, rows):
            for j in range(s, cols):
                if m[i][j] != 0 and (pivot is None
                                     or abs(m[i][j]) < abs(m[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        m[s], m[i] = m[i], m[s]
        for row in m:
            row[s], row[j] = row[j], row[s]
        if m[s][s] < 0:
            m[s] = [-x for x in m[s]]
        dirty = True
        while dirty:
            dirty = False
            for i in range(s + 1, rows):
                q = m[i][s] // m[s][s]
                if q:
                    m[i] = [x - q * y for x, y in zip(m[i], m[s])]
                if m[i][s] != 0:
                    m[s], m[i] = m[i], m[s]
                    if m[s][s] < 0:
                        m[s] = [-x for x in m[s]]
                    dirty = True
            for j in range(s + 1, cols):
                q = m[s][j] // m[s][s]
                if q:
                    for row in m:
                        row[j] -= q * row[s]
                if m[s][j] != 0:
                    for row in m:
                        row[s], row[j] = row[j], row[s]
                    if m[s][s] < 0:
                        m[s] = [-x for x in m[s]]
                    dirty = True
        # divisibility repair: fold any entry the pivot misses
        for i in range(s + 1, rows):
            for j in range(s + 1, cols):
                if m[i][j] % m[s][s] != 0:
                    m[s] = [x + y for x, y in zip(m[s], m[i])]
                    dirty = True
        if dirty:
            continue
        factors.append(m[s][s])
        s += 1
    while s < min(rows, cols):
        factors.append(0)
        s += 1
    return tuple(factors)


# ---------------------------------------------------------------------------
# rank-2 primitivity

def _apply_auto(w, images):
    out = []
    for lt in w:
        img = images[abs(lt)]
        out.extend(img if lt > 0 else invert(img))
    return reduce(out)


def _rank2_whitehead_autos():
    autos = []
    for g, x in ((1, 2), (2, 1)):
        other = {x: (x,)}
        for eps in (1, -1):
            autos.append({g: (g, eps * x), **other})
            autos.append({g: (-eps * x, g), **other})
            autos.append({g: (-eps * x, g, eps * x), **other})
    return autos


_WHITEHEAD_AUTOS = _rank2_whitehead_autos()


def is_primitive_rank2(w):
    """Is ``w`` part of some free basis of the rank-2 free group?

    Greedy Whitehead reduction on the cyclic word: primitives of cyclic
    length > 1 always admit a strictly shortening Whitehead move, so the
    greedy minimum has length 1 exactly for primitive inputs.
    """
    _, core = cyclic_reduce(reduce(w))
    p, q = exponent_vector(core, 2)
    if gcd(abs(p), abs(q)) != 1:
        return False
    while len(core) > 1:
        for auto in _WHITEHEAD_AUTOS:
            _, cand = cyclic_reduce(_apply_auto(core, auto))
            if len(cand) < len(core):
                core = cand
                break
        else:
            return False
    return len(core) == 1


# ---------------------------------------------------------------------------
# affine representation of BS(1, n)

@dataclass(frozen=True)
class AffineMap:
    """Exact rational map x -> scale * x + offset."""

    scale: Fraction
    offset: Fraction

    @classmethod
    def identity(cls):
        return cls(Fraction(1), Fraction(0))

    def compose(self, other):
        """self after other: x -> self(other(x))."""
        return AffineMap(self.scale * other.scale,
                         self.scale * other.offset + self.offset)

    def inverse(self):
        return AffineMap(1 / self.scale, -self.offset / self.scale)

    def is_identity(self):
        return self.scale == 1 and self.offset == 0


def affine_eval_bs1n(w, n):
    """Evaluate a two-letter word with a -> (x -> n*x), b -> (x -> x+1).

    Faithful on BS(1, n) = <a, b | a b a^-1 b^-n>, so the result is the
    identity map exactly for trivial words.  Letters multiply like the
    group elements they name: the first letter is the outermost map.
    """
    if n == 0:
        raise ValueError("n must be nonzero")
    amap = AffineMap(Fraction(n), Fraction(0))
    bmap = AffineMap(Fraction(1), Fraction(1))
    table = {1: amap, -1: amap.inverse(), 2: bmap, -2: bmap.inverse()}
    out = AffineMap.identity()
    for lt in w:
        out = out.compose(table[lt])
    return out


# ---------------------------------------------------------------------------
# enumeration helpers and desk-scale check suites

def cyclically_reduced_words(num_gens, max_len):
    """All nonempty cyclically reduced words of length <= max_len."""
    out = []
    for w in _all_reduced_words(num_gens, max_len):
        if w and words.is_cyclically_reduced(w):
            out.append(w)
    return out


@dataclass
class CheckReport:
    name: str
    checked: int = 0
    hits: int = 0
    violations: list = None
    exhausted: list = None

    def __post_init__(self):
        self.violations = self.violations or []
        self.exhausted = self.exhausted or []

    @property
    def passed(self):
        return not self.violations

    def lines(self):
        out = [f"{self.name}: {self.checked} cases, {self.hits} hits,"
               f" {len(self.violations)} violations,"
               f" {len(self.exhausted)} resource-exhausted"]
        out.extend(f"  VIOLATION: {v}" for v in self.violations)
        out.extend(f"  EXHAUSTED: {e}" for e in self.exhausted)
        out.append("PASS" if self.passed else "FAIL")
        return out


def check_conjugacy_theorem(max_len, solver=None):
    """Mutually-rooted word pairs must be cyclically equal up to inversion."""
    from .solver import Solver
    from .words import Alphabet

    if max_len > 5:
        raise ValueError("desk-scale check: max_len <= 5")
    solver = solver or Solver()
    alphabet = Alphabet(("a", "b"))
    pool = cyclically_reduced_words(2, max_len)
    report = CheckReport(name=f"conjugacy-theorem max_len={max_len}")
    root = {}
    for s in pool:
        for r in pool:
            try:
                root[(s, r)] = solver.is_root(s, r, alphabet)
            except ResourceExhausted:
                report.exhausted.append((s, r))
                root[(s, r)] = None
    for r1 in pool:
        for r2 in pool:
            report.checked += 1
            if root.get((r1, r2)) and root.get((r2, r1)):
                report.hits += 1
                if not cyclically_equal_up_to_inversion(r1, r2):
                    report.violations.append((r1, r2))
    return report


def check_commutator_roots(max_len, solver=None):
    """Roots of the commutator are primitive or the commutator itself."""
    from .solver import Solver
    from .words import Alphabet

    if max_len > 5:
        raise ValueError("desk-scale check: max_len <= 5")
    solver = solver or Solver()
    alphabet = Alphabet(("a", "b"))
    comm = (1, 2, -1, -2)
    report = CheckReport(name=f"commutator-roots max_len={max_len}")
    for s in cyclically_reduced_words(2, max_len):
        report.checked += 1
        try:
            if not solver.is_root(s, comm, alphabet):
                continue
        except ResourceExhausted:
            report.exhausted.append(s)
            continue
        report.hits += 1
        if not (is_primitive_rank2(s)
                or cyclically_equal_up_to_inversion(s, comm)):
            report.violations.append(s)
    return report


def random_reduced_word(rng, num_gens, length):
    """Uniformly random freely reduced word of the exact given length."""
    out = []
    letters = [s * (g + 1) for g in range(num_gens) for s in (1, -1)]
    for _ in range(length):
        choices = [lt for lt in letters if not out or lt != -out[-1]]
        out.append(rng.choice(choices))
    return tuple(out)


def random_cyclically_reduced_word(rng, num_gens, length,
                                   require_full_support=False):
    """Rejection-sampled cyclically reduced word; optionally full support."""
    while True:
        w = random_reduced_word(rng, num_gens, length)
        if not words.is_cyclically_reduced(w):
            continue
        if require_full_support and len(words.support(w)) < num_gens:
            continue
        return w


def check_freiheitssatz(relators=200, words_per_relator=50, relator_len=6,
                        word_len=10, seed=0, solver=None):
    """Nonempty reduced words over a proper generator subset stay nontrivial.

    Relators range over random cyclically reduced words using all three of
    a, b, c; the probe words live in the free group on a, b.
    """
    import random

    from .solver import Solver, Verdict
    from .words import Alphabet

    rng = random.Random(seed)
    solver = solver or Solver()
    alphabet = Alphabet(("a", "b", "c"))
    report = CheckReport(name=f"freiheitssatz relators={relators} "
                              f"words={words_per_relator} seed={seed}")
    for _ in range(relators):
        r = random_cyclically_reduced_word(
            rng, 3, rng.randint(3, relator_len), require_full_support=True)
        pres = None
        for _ in range(words_per_relator):
            w = random_reduced_word(rng, 2, rng.randint(1, word_len))
            report.checked += 1
            try:
                if pres is None:
                    from .presentations import make_presentation
                    pres = make_presentation(alphabet, r)
                verdict = solver.word_problem(pres, w)
            except ResourceExhausted:
                report.exhausted.append((r, w))
                continue
            report.hits += 1
            if verdict is not Verdict.NONTRIVIAL:
                report.violations.append((r, w))
    return report


def check_modular_group():
    """Desk-scale validation of the modular-group matrix pair."""
    report = CheckReport(name="modular-group")

    def item(label, ok):
        report.checked += 1
        if ok:
            report.hits += 1
        else:
            report.violations.append(label)

    item("a^2 projectively trivial", (MAT_A * MAT_A).is_identity())
    item("b^3 projectively trivial",
         (MAT_B * MAT_B * MAT_B).is_identity())
    beta0 = psl2_eval((1, 2, -1, -2))
    beta0_rev = psl2_eval((2, 1, -2, -1))
    expected = {ProjectiveMatrix.of(2, 1, 1, 1),
                ProjectiveMatrix.of(1, -1, -1, 2)}
    item("commutator pair matches (2z+1)/(z+1) and (-z+1)/(z-2)",
         {beta0, beta0_rev} == expected)
    item("the two commutators are mutual inverses",
         beta0 * beta0_rev == ProjectiveMatrix.identity())
    # the commutator subgroup is free on beta0 = [a,b] and beta1 = [a,b^-1]
    # (beta0's own inverse obviously cannot be its free partner)
    beta1 = psl2_eval((1, -2, -1, 2))
    item("no relation among beta0, beta1 up to length 12",
         free_at_length(beta0, beta1, 12))
    item("smith_invariants(diag(2,3)) == (1, 6)",
         smith_invariants([[2, 0], [0, 3]]) == (1, 6))
    return report
