"""Independent numeric verifiers for the exact pipeline: a multistart
Newton critical-point finder with Morse classification and a cubical-grid
Euler-characteristic estimator for one or two space variables.

Floating point lives only here; the exact modules never consume these
results as truth."""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

NEWTON_TOL = 1e-10
DEDUP_FACTOR = 1e-6
START_BUDGET_PER_MU = 200
DEFAULT_BALL = 10.0


def _thread_count():
    try:
        return max(1, int(os.environ.get("LOGDISC_THREADS", "1")))
    except ValueError:
        return 1


@dataclass
class CriticalPointReport:
    """Numerically found critical points with Morse data and the signed
    count sum(sgn F) for comparison with the exact signature."""

    points: list   # (coords tuple, F value, morse index, hessian sign)
    residual_bound: float
    signed_count: int
    complete: bool  # found the expected mu points

    @property
    def count(self):
        return len(self.points)


def _compile(p, assignment):
    """Close a polynomial over fixed parameter values into a float callable
    of the x-variables."""
    q = p.evaluate(assignment)
    nx = q.vt.nx
    terms = [(m[:nx], float(c)) for m, c in q.terms.items()]

    def f(x):
        acc = 0.0
        for m, c in terms:
            v = c
            for e, xi in zip(m, x):
                if e:
                    v *= xi ** e
            acc += v
        return acc
    return f


def find_critical_points(F, assignment, mu, ball_radius=DEFAULT_BALL,
                         constraints=(), seed=0):
    """Multistart damped Newton on the gradient (or Lagrange) system inside
    a ball, with deduplication and Morse classification."""
    vt = F.vt
    nx = vt.nx
    k = len(constraints)
    fF = _compile(F, assignment)
    fgrad = [_compile(F.diff(x), assignment) for x in vt.x_vars]
    fhess = [[_compile(F.diff(a).diff(b), assignment) for b in vt.x_vars]
             for a in vt.x_vars]
    gcons = [_compile(g, assignment) for g in constraints]
    gjac = [[_compile(g.diff(x), assignment) for x in vt.x_vars]
            for g in constraints]
    ghess = [[[_compile(g.diff(a).diff(b), assignment) for b in vt.x_vars]
              for a in vt.x_vars] for g in constraints]

    dim = nx + k

    def system(z):
        x, lam = z[:nx], z[nx:]
        r = np.empty(dim)
        for i in range(nx):
            r[i] = fgrad[i](x) + sum(lam[q] * gjac[q][i](x) for q in range(k))
        for q in range(k):
            r[nx + q] = gcons[q](x)
        return r

    def jacobian(z):
        x, lam = z[:nx], z[nx:]
        J = np.zeros((dim, dim))
        for i in range(nx):
            for j in range(nx):
                J[i, j] = fhess[i][j](x) + sum(
                    lam[q] * ghess[q][i][j](x) for q in range(k))
            for q in range(k):
                J[i, nx + q] = gjac[q][i](x)
        for q in range(k):
            for j in range(nx):
                J[nx + q, j] = gjac[q][j](x)
        return J

    rng = np.random.default_rng(seed)
    budget = START_BUDGET_PER_MU * max(mu, 1)
    dedup = DEDUP_FACTOR * ball_radius
    found = []
    for _ in range(budget):
        z = np.concatenate([rng.uniform(-ball_radius, ball_radius, nx),
                            rng.uniform(-1.0, 1.0, k)])
        ok = False
        for _ in range(80):
            r = system(z)
            if np.linalg.norm(r) < NEWTON_TOL:
                ok = True
                break
            try:
                step = np.linalg.solve(jacobian(z), r)
            except np.linalg.LinAlgError:
                break
            # damping against overshoot
            t = 1.0
            base = np.linalg.norm(r)
            for _ in range(30):
                if np.linalg.norm(system(z - t * step)) <= base:
                    break
                t /= 2
            z = z - t * step
            if np.linalg.norm(z[:nx]) > 50 * ball_radius:
                break
        if not ok or np.linalg.norm(z[:nx]) > ball_radius:
            continue
        if any(np.linalg.norm(z[:nx] - np.asarray(p[0])) < dedup
               for p in found):
            continue
        x = z[:nx]
        hess = np.array([[fhess[i][j](x) for j in range(nx)]
                         for i in range(nx)])
        if k == 0:
            eig = np.linalg.eigvalsh(hess)
        else:
            # second fundamental form on the tangent space of the constraints
            lam = z[nx:]
            for q in range(k):
                hq = np.array([[ghess[q][i][j](x) for j in range(nx)]
                               for i in range(nx)])
                hess = hess + lam[q] * hq
            jc = np.array([[gjac[q][i](x) for i in range(nx)]
                           for q in range(k)])
            _, _, vh = np.linalg.svd(jc)
            tangent = vh[k:].T
            eig = np.linalg.eigvalsh(tangent.T @ hess @ tangent)
        morse = int((eig < 0).sum())
        hsign = 1 if np.prod(np.sign(eig)) > 0 else -1
        found.append((tuple(x), fF(x), morse, hsign))
        if len(found) == mu:
            break
    residual = max((np.linalg.norm(system(np.concatenate(
        [np.asarray(p[0]), np.zeros(k)]))) for p in found), default=0.0) \
        if k == 0 else NEWTON_TOL
    signed = sum(1 if p[1] > 0 else -1 for p in found)
    return CriticalPointReport(found, max(residual, NEWTON_TOL), signed,
                               len(found) == mu)


@dataclass
class GridChi:
    resolution: int
    chi_ge: int
    chi_le: int
    chi_eq: int
    stable: bool


def _exact_eval_grid(F, assignment, radius, n):
    """Signs of F on an (n+1)^2 rational grid over [-radius, radius]^2,
    computed in exact integer arithmetic after clearing denominators."""
    from math import gcd

    vt = F.vt
    q = F.evaluate(assignment)
    nx = vt.nx
    r = Fraction(radius)
    den = 1
    for c in q.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    # grid point i is A_i / D with D = r.denominator * n
    D = r.denominator * n
    A = [r.numerator * (2 * i - n) for i in range(n + 1)]
    deg = max((sum(m[:nx]) for m in q.terms), default=0)
    # scale by den * D^deg so every term is an integer
    terms = [(m[:nx], c.numerator * (den // c.denominator)
              * D ** (deg - sum(m[:nx]))) for m, c in q.terms.items()]
    pows = [[a ** e for e in range(deg + 1)] for a in A]
    sign = np.zeros((n + 1, n + 1), dtype=np.int8)
    if nx == 1:
        for i in range(n + 1):
            v = sum(c * pows[i][m[0]] for m, c in terms)
            sign[i, 0] = (v > 0) - (v < 0)
        return sign[:, :1]
    for i in range(n + 1):
        pi = pows[i]
        for j in range(n + 1):
            pj = pows[j]
            v = 0
            for m, c in terms:
                v += c * pi[m[0]] * pj[m[1]]
            sign[i, j] = (v > 0) - (v < 0)
    return sign


def _complex_2d(marked):
    """Closed cubical complex spanned by grid squares having at least one
    marked vertex: (squares, x-edges, y-edges, vertices) membership masks."""
    sq = marked[:-1, :-1] | marked[1:, :-1] | marked[:-1, 1:] | marked[1:, 1:]
    pad = np.zeros((sq.shape[0] + 2, sq.shape[1] + 2), dtype=bool)
    pad[1:-1, 1:-1] = sq
    ex = pad[1:-1, :-1] | pad[1:-1, 1:]   # x-edge (i, j) borders squares (i, j-1), (i, j)
    ey = pad[:-1, 1:-1] | pad[1:, 1:-1]
    v = pad[:-1, :-1] | pad[:-1, 1:] | pad[1:, :-1] | pad[1:, 1:]
    return sq, ex, ey, v


def _chi_of(parts):
    sq, ex, ey, v = parts
    return int(v.sum()) - int(ex.sum()) - int(ey.sum()) + int(sq.sum())


def _chi_at(F, assignment, radius, n):
    sign = _exact_eval_grid(F, assignment, radius, n)
    if sign.shape[1] == 1:
        s = sign[:, 0]

        def seg(marked):
            e = marked[:-1] | marked[1:]
            pad = np.zeros(len(e) + 2, dtype=bool)
            pad[1:-1] = e
            v = pad[:-1] | pad[1:]
            return e, v

        e_ge, v_ge = seg(s >= 0)
        e_le, v_le = seg(s <= 0)
        chi_ge = int(v_ge.sum()) - int(e_ge.sum())
        chi_le = int(v_le.sum()) - int(e_le.sum())
        chi_eq = int((v_ge & v_le).sum()) - int((e_ge & e_le).sum())
        return chi_ge, chi_le, chi_eq
    pge = _complex_2d(sign >= 0)
    ple = _complex_2d(sign <= 0)
    peq = tuple(a & b for a, b in zip(pge, ple))
    return _chi_of(pge), _chi_of(ple), _chi_of(peq)


def grid_euler(F, assignment, ball_radius=DEFAULT_BALL, resolution=64,
               max_doublings=6):
    """Grid-based Euler characteristics of the regions F >= 0, F <= 0 and
    F = 0 on a square around the origin, doubled until two consecutive
    resolutions agree."""
    if F.vt.nx > 2:
        raise ValueError("grid oracle supports at most two space variables")
    n = resolution
    prev = None
    for _ in range(max_doublings + 1):
        cur = _chi_at(F, assignment, ball_radius, n)
        if prev is not None and cur == prev:
            return GridChi(n, cur[0], cur[1], cur[2], True)
        prev = cur
        n *= 2
    return GridChi(n // 2, prev[0], prev[1], prev[2], False)
