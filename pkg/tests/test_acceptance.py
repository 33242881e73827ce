"""Acceptance criteria 1-10.

Each criterion is a function returning ``(ok, detail)``; the tests assert on
it and record a one-line PASS/FAIL summary that ``conftest.py`` prints at the
end of the run.  ``python tests/test_acceptance.py`` prints the same lines.
"""

import itertools
import random
import time

import pytest

from gcstructures.chevalley import build_chevalley, conjugation
from gcstructures.classify import (
    algebra_of,
    check_gc_pair,
    coroot_basis,
    extend_phi,
    gc_predicate_compact,
    gc_subsets,
    realize_pair,
    root_action,
    verify_symmetric_cover,
)
from gcstructures.dirac_core import (
    DiracPair,
    TwoFormOnE,
    exact_form,
    gc_defect,
    is_cocycle,
    is_double_subalgebra,
    is_maximal_isotropic,
    lift_subspace,
    make_L,
    pullback,
    pushforward,
    quotient_map,
)
from gcstructures.exact import GQ, I, ONE, ZERO, Subspace
from gcstructures.moduli import (
    INFINITY,
    build_moduli_graph,
    su3_point,
    su3_surface_membership,
    surface_form,
)
from gcstructures.nilpotent_sl import (
    certify_pair_centralizer_zero,
    certify_slice_generation,
    partitions,
    probe_prop_ij,
)
from gcstructures.rootsys import build_root_system, enumerate_closed_subsets, is_closed, split_subset

RESULTS = {}
PHI_GRID = [ZERO, ONE, -ONE, I, -I, GQ(1, 1)]


def record(num, title, ok, elapsed, limit, detail):
    timed = limit is None or elapsed < limit
    verdict = "PASS" if ok and timed else "FAIL"
    budget = f" (limit {limit:g} s)" if limit is not None else ""
    RESULTS[num] = f"criterion {num:>2} {verdict}: {title}; {detail}; {elapsed:.2f} s{budget}"
    print(RESULTS[num])
    return ok and timed


def timed(fn):
    t0 = time.perf_counter()
    ok, detail = fn()
    return ok, detail, time.perf_counter() - t0


# ---------------------------------------------------------------------------


def crit1():
    G = build_moduli_graph(build_root_system("A", 1))
    dims = sorted(n.dim for n in G.nodes)
    sizes = G.component_sizes()
    big = max(G.components, key=len)
    big_sets = sorted(len(G.nodes[i].subset) for i in big)
    edge = [(a, b) for a, b in G.edges if a != b]
    ok = len(G.nodes) == 4 and dims == [0, 0, 0, 1] and sizes == [2, 1, 1] and big_sets == [0, 2] and len(edge) == 1
    src, dst = edge[0]
    ok = ok and len(G.nodes[src].subset) == 2 and len(G.nodes[dst].subset) == 0
    return ok, f"{len(G.nodes)} nodes, dims {dims}, components {sizes}"


def crit2():
    rs = build_root_system("A", 2)
    G = build_moduli_graph(rs)
    sizes = G.component_sizes()
    big = max(G.components, key=len)
    big_dims = sorted(G.nodes[i].dim for i in big)
    pairs_ok = all(
        sorted(G.nodes[i].dim for i in c) == [0, 1] and any(G.nodes[i].gc_capable and G.nodes[i].dim == 1 for i in c)
        for c in G.components
        if len(c) == 2
    )
    ok = len(G.nodes) == 29 and sizes == [5] + [2] * 6 + [1] * 12 and big_dims == [0, 1, 1, 1, 2] and pairs_ok
    return ok, f"{len(G.nodes)} nodes, profile 5 + 2x{sizes.count(2)} + 1x{sizes.count(1)}"


def crit3():
    rs = build_root_system("A", 2)
    a, b, ab = (rs.parse_root(x) for x in ("a1", "a2", "a1+a2"))
    values = [ZERO, ONE, -ONE, I, GQ(1, 1), GQ(2, -1)]
    samples = 0
    bad = []
    # big orbit: phi over a grid on the two simple coroots
    for vals in itertools.product(values, repeat=2):
        pt = su3_point(rs, rs.full(), extend_phi(rs, rs.full(), list(vals)))
        samples += 1
        if surface_form(*pt) != 0:
            bad.append(("big", vals))
    # the identification table: three Levi families and the point L(h, 0)
    limits = 0
    for k in (a, b, ab):
        A = rs.subset([k, rs.neg[k]])
        for v in values:
            pt = su3_point(rs, A, extend_phi(rs, split_subset(A)[0], [v]))
            expected = [INFINITY, INFINITY, INFINITY]
            pos = (a, b, ab).index(k)
            expected[pos] = pt[pos]
            limits += 1
            if tuple(expected) != pt or surface_form(*pt) != 0:
                bad.append((rs.root_name(k), v))
    pt0 = su3_point(rs, rs.empty(), [ZERO, ZERO])
    limits += 1
    if pt0 != (INFINITY, INFINITY, INFINITY) or not su3_surface_membership(None, None, None):
        bad.append(("empty", None))
    ok = not bad and samples >= 20
    return ok, (
        f"{samples} big-orbit samples and {limits} limit points (3 Levi families x {len(values)} + L(h,0)) "
        f"on vtx+ytu-yvs=0; {len(bad)} off-surface"
    )


def _direct_verdict(alg, pair, sigma):
    L = make_L(pair)
    return (
        is_maximal_isotropic(L)
        and is_double_subalgebra(alg, L)
        and gc_defect(L, sigma) == lift_subspace(pair.isotropy)
    )


def crit4():
    checked = disagreements = gc_count = 0
    for s, n in [("A", 1), ("A", 2), ("B", 2)]:
        rs = build_root_system(s, n)
        alg = algebra_of(rs)
        sigma = conjugation(alg, "compact")
        dk = rs.empty()
        for A in enumerate_closed_subsets(rs):
            for vals in itertools.product(PHI_GRID, repeat=rs.rank):
                phi = list(vals)
                pair = realize_pair(rs, A, phi, dk)
                direct = _direct_verdict(alg, pair, sigma)
                listed = check_gc_pair(alg, pair, sigma).verdict
                combinatorial = gc_predicate_compact(rs, A, phi, dk)
                checked += 1
                gc_count += direct
                if not (direct == listed == combinatorial):
                    disagreements += 1
    return disagreements == 0, f"{checked} (A, phi) samples on A1/A2/B2, {gc_count} GC, {disagreements} disagreements"


def _forms_for(E, phi_full, alg, rng):
    """Exact form, zero, and two random Gaussian forms on E."""
    out = [TwoFormOnE.zero(E), exact_form(alg, phi_full, E)]
    d = E.dim
    for _ in range(2):
        m = [[ZERO] * d for _ in range(d)]
        for i in range(d):
            for j in range(i + 1, d):
                c = GQ(rng.randint(-1, 1), rng.randint(-1, 1))
                m[i][j], m[j][i] = c, -c
        out.append(TwoFormOnE(E, tuple(tuple(r) for r in m)))
    return out


def crit5():
    rng = random.Random(20240601)
    checked = disagreements = closed_pairs = nonclosed = 0
    for s, n in [("A", 1), ("A", 2), ("B", 2)]:
        rs = build_root_system(s, n)
        alg = algebra_of(rs)
        r = rs.rank
        # the criterion-4 sweep: exact forms on closed E
        for A in enumerate_closed_subsets(rs):
            for vals in itertools.product(PHI_GRID, repeat=r):
                pair = realize_pair(rs, A, list(vals), rs.empty())
                lhs = is_double_subalgebra(alg, make_L(pair))
                rhs = is_cocycle(alg, pair.eps)
                checked += 1
                disagreements += lhs != rhs
        # non-cocycles and non-closed E
        phi_full = [ONE, GQ(0, 1)][:r] + [ZERO] * (alg.dim - r)
        for mask in range(1 << len(rs.roots)):
            A = rs.subset(mask=mask)
            E = Subspace([alg.basis_vector(i) for i in range(r)] + [alg.root_vector(k) for k in A.indices()], alg.dim)
            closed = is_closed(A)
            for eps in _forms_for(E, phi_full, alg, rng):
                L = make_L(DiracPair(E, eps, Subspace.zero(alg.dim)))
                lhs = is_double_subalgebra(alg, L)
                rhs = closed and is_cocycle(alg, eps)
                checked += 1
                closed_pairs += rhs
                nonclosed += not closed
                disagreements += lhs != rhs
    return disagreements == 0, (
        f"{checked} (E, eps) samples ({closed_pairs} integrable, {nonclosed} with non-closed E), "
        f"{disagreements} disagreements"
    )


def crit6():
    found = {}
    for s, n in [("A", 2), ("B", 2), ("G", 2)]:
        rs = build_root_system(s, n)
        found[rs.label] = gc_subsets(rs, root_action(rs, "split"))
    ok = all(v == [v[0].parent.full()] for v in found.values() if v) and all(found.values())
    return ok, ", ".join(f"{k}: {len(v)} subset(s)" for k, v in found.items())


def crit7():
    parts = []
    ok = True
    for s, n in [("A", 2), ("B", 2), ("G", 2), ("A", 3)]:
        t0 = time.perf_counter()
        good, ce = verify_symmetric_cover(build_root_system(s, n))
        dt = time.perf_counter() - t0
        ok = ok and good and dt < 60
        parts.append(f"{s}{n} {'none' if good else 'FOUND'} ({dt:.2f} s)")
    return ok, "cover counterexamples: " + ", ".join(parts)


def crit8():
    pair = {n: certify_pair_centralizer_zero(n) for n in range(2, 7)}
    slices = {(n, str(p)): certify_slice_generation(n, p) for n in range(2, 6) for p in partitions(n)}
    probes = {}
    for n, lam in [(2, (2,)), (3, (3,)), (3, (2, 1)), (4, (2, 2))]:
        rep = probe_prop_ij(n, lam, trials=100, seed=0)
        probes[(n, lam)] = rep
    viol = sum(r["violations"] for r in probes.values())
    considered = sum(r["considered"] for r in probes.values())
    ok = all(pair.values()) and all(slices.values()) and viol == 0 and all(r["trials"] >= 100 for r in probes.values())
    return ok, (
        f"pair cert n=2..6 {sum(pair.values())}/5, slice cert {sum(slices.values())}/{len(slices)}, "
        f"probe 4x100 trials ({considered} spanning E) with {viol} violations"
    )


def crit9():
    checked = failures = 0
    for s, n in [("A", 1), ("A", 2)]:
        rs = build_root_system(s, n)
        alg = algebra_of(rs)
        k = alg.cartan
        pi = quotient_map(k)
        kk = lift_subspace(k)
        for A in enumerate_closed_subsets(rs):
            A0, _ = split_subset(A)
            nb = len(coroot_basis(A0))
            for vals in itertools.product([ZERO, ONE, I, GQ(1, -2)], repeat=nb):
                phi = extend_phi(rs, A0, list(vals))
                L = make_L(realize_pair(rs, A, phi, rs.empty()))
                if not (kk <= L.space and is_double_subalgebra(alg, L) and is_maximal_isotropic(L)):
                    continue
                D = pushforward(pi, L.space)
                back = pullback(pi, D)
                again = pushforward(pi, pullback(pi, D))
                checked += 1
                failures += (back != L.space) + (again != D)
    return failures == 0 and checked > 0, f"{checked} Dirac subalgebras L ⊇ k on A1/A2, {failures} identity failures"


def crit10():
    stats = []
    ok = True
    for s, n in [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("G", 2)]:
        alg = build_chevalley(build_root_system(s, n))
        d = alg.dim
        B = [alg.basis_vector(a) for a in range(d)]
        br = [[alg.bracket(B[a], B[b]) for b in range(d)] for a in range(d)]
        K = alg.killing_matrix

        def kap(x, y):
            return sum((x[p] * K[p][q] * y[q] for p in range(d) if x[p] for q in range(d) if y[q]), ZERO)

        anti = all(br[a][b] == [-x for x in br[b][a]] for a in range(d) for b in range(d))
        jac = True
        for a, b, c in itertools.combinations(range(d), 3):
            t = [
                x + y + z
                for x, y, z in zip(alg.bracket(B[a], br[b][c]), alg.bracket(B[b], br[c][a]), alg.bracket(B[c], br[a][b]))
            ]
            if any(t):
                jac = False
                break
        inv = all(kap(br[a][b], B[c]) == kap(B[a], br[b][c]) for a in range(d) for b in range(d) for c in range(d))
        sig_ok = True
        for kind in ("compact", "split"):
            sig = conjugation(alg, kind)
            for a in range(d):
                ix = [I * v for v in B[a]]
                if sig(sig(ix)) != ix:
                    sig_ok = False
                for b in range(d):
                    if sig(br[a][b]) != alg.bracket(sig(B[a]), sig(B[b])):
                        sig_ok = False
        ok = ok and anti and jac and inv and sig_ok
        stats.append(f"{s}{n}({d})")
    return ok, "Jacobi, Killing invariance, sigma^2 = id and sigma-compatibility on " + " ".join(stats)


CRITERIA = [
    (1, "SU2/T moduli", crit1, 1.0),
    (2, "SU3/T moduli", crit2, 5.0),
    (3, "SU3 surface", crit3, None),
    (4, "GC oracle equivalence", crit4, 60.0),
    (5, "integrability equivalence", crit5, None),
    (6, "split-form rigidity", crit6, None),
    (7, "symmetric-cover brute force", crit7, 240.0),
    (8, "sl_n certificates", crit8, 120.0),
    (9, "push/pull identities", crit9, None),
    (10, "algebra soundness", crit10, None),
]


@pytest.mark.parametrize("num,title,fn,limit", CRITERIA, ids=[f"criterion{c[0]}" for c in CRITERIA])
def test_criterion(num, title, fn, limit):
    ok, detail, elapsed = timed(fn)
    assert record(num, title, ok, elapsed, limit, detail), RESULTS[num]


if __name__ == "__main__":  # pragma: no cover
    for num, title, fn, limit in CRITERIA:
        ok, detail, elapsed = timed(fn)
        record(num, title, ok, elapsed, limit, detail)
