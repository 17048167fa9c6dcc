"""Job configuration, the build -> classify -> algebra -> verify pipeline, and reports."""

from __future__ import annotations

import difflib
import itertools
import json
import time
from collections import OrderedDict
from fractions import Fraction

from . import __version__
from .algebra import build_graded_algebra, face_complex_of, linear_forms, minimal_nonfaces
from .exact import QuadraticNumber, scalar_to_json
from .iso import build_psi, c_coefficients, scaling_invariance_report, verify_psi
from .polytope import (
    build_w_polytope,
    facet_orbits,
    quotient_polytope,
    simplicity_transfer_check,
)
from .roots import build_root_system, default_rank_cap, generate_group, parse_type_label

__all__ = [
    "JobConfig",
    "Report",
    "ConfigError",
    "run",
    "conjugacy_classes",
    "character_table",
    "is_rational_integer",
    "format_scalar",
    "format_linear",
    "example",
    "EXAMPLES",
    "selftest_cases",
    "selftest",
    "TWO_POINT",
]

CHECKS = ("classify", "algebra", "characters", "iso", "scaling", "all")


class ConfigError(ValueError):
    pass


def _rational(x):
    try:
        return Fraction(x)
    except (TypeError, ValueError, ZeroDivisionError):
        raise ConfigError(f"not a rational number: {x!r}") from None


class JobConfig:
    """One pipeline job.

    ``lambda_set`` holds fundamental-weight coordinates (so dominance is
    coordinate-wise non-negativity) and ``K`` holds 1-based simple indices.
    """

    def __init__(self, type_label, lambda_set, K=(), checks=("all",), rank=None,
                 max_rank_cap=None, force_degenerate=False, scaling=None, timings=False):
        self.type_label = type_label
        self.rank = rank
        self.lambda_set = lambda_set
        self.K = K
        self.checks = checks
        self.max_rank_cap = max_rank_cap
        self.force_degenerate = force_degenerate
        self.scaling = scaling
        self.timings = timings
        self.validate()

    @classmethod
    def from_dict(cls, d):
        if not isinstance(d, dict):
            raise ConfigError("config must be a JSON object")
        known = {"type_label", "rank", "lambda_set", "K", "checks", "max_rank_cap",
                 "force_degenerate", "scaling", "timings"}
        extra = set(d) - known
        if extra:
            raise ConfigError(f"unknown config fields: {sorted(extra)}")
        if "type_label" not in d or "lambda_set" not in d:
            raise ConfigError("config needs type_label and lambda_set")
        return cls(**d)

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as e:
                raise ConfigError(f"cannot parse {path}: {e}") from None
        return cls.from_dict(data)

    def validate(self):
        try:
            family, rank = parse_type_label(str(self.type_label))
        except ValueError as e:
            raise ConfigError(str(e)) from None
        if self.rank is not None and self.rank != rank:
            raise ConfigError(f"rank {self.rank} does not match type label {self.type_label}")
        self.rank = rank
        self.family = family
        cap = self.max_rank_cap if self.max_rank_cap is not None else default_rank_cap()
        if rank > cap:
            raise ConfigError(f"rank {rank} exceeds the rank cap {cap}")
        if not isinstance(self.lambda_set, (list, tuple)) or not self.lambda_set:
            raise ConfigError("lambda_set must be a nonempty list of weight vectors")
        lam = []
        for v in self.lambda_set:
            if not isinstance(v, (list, tuple)) or len(v) != rank:
                raise ConfigError(f"lambda {v!r} must have {rank} coordinates")
            v = tuple(_rational(x) for x in v)
            if any(x < 0 for x in v):
                raise ConfigError(f"lambda {v} is not dominant (negative weight coordinate)")
            if not any(v):
                raise ConfigError("lambda = 0 gives a point, not a polytope")
            lam.append(v)
        self.lambda_set = lam
        K = sorted(set(int(k) for k in self.K))
        for k in K:
            if not 1 <= k <= rank:
                raise ConfigError(f"K index {k} out of range 1..{rank}")
        self.K = K
        checks = [self.checks] if isinstance(self.checks, str) else list(self.checks)
        if not checks:
            raise ConfigError("at least one check must be requested")
        for c in checks:
            if c not in CHECKS:
                raise ConfigError(f"unknown check {c!r}; choose from {CHECKS}")
        if "all" in checks:
            checks = [c for c in CHECKS if c != "all"]
        self.checks = [c for c in CHECKS if c in checks]
        if self.scaling not in (None, "root", "weight", "field"):
            raise ConfigError(f"unknown scaling {self.scaling!r}")
        self.force_degenerate = bool(self.force_degenerate)
        self.timings = bool(self.timings)

    def to_dict(self):
        return {
            "type_label": self.type_label,
            "rank": self.rank,
            "lambda_set": [[_frac_json(x) for x in v] for v in self.lambda_set],
            "K": list(self.K),
            "checks": list(self.checks),
            "max_rank_cap": self.max_rank_cap,
            "force_degenerate": self.force_degenerate,
            "scaling": self.scaling,
            "timings": self.timings,
        }


def _frac_json(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class Report:
    """Result of one job; ``data`` is the JSON document and ``ok`` the exit status."""

    def __init__(self, data, ok):
        self.data = data
        self.ok = ok

    def to_json(self):
        return json.dumps(self.data, indent=2, sort_keys=True) + "\n"

    @property
    def exit_code(self):
        return 0 if self.ok else 1


# ---------------------------------------------------------------------------
# characters


def conjugacy_classes(group):
    """Conjugacy classes of W (lists of element indices, each sorted; classes ordered by minimum)."""
    seen = [False] * len(group)
    classes = []
    gens = group.generators
    for x in range(len(group)):
        if seen[x]:
            continue
        cls = {x}
        frontier = [x]
        while frontier:
            nxt = []
            for y in frontier:
                for g in gens:
                    z = group.mul(group.mul(g, y), g)
                    if z not in cls:
                        cls.add(z)
                        nxt.append(z)
            frontier = nxt
        for y in cls:
            seen[y] = True
        classes.append(sorted(cls))
    return classes


def is_rational_integer(x):
    if isinstance(x, QuadraticNumber):
        return x.b == 0 and Fraction(x.a).denominator == 1
    return Fraction(x).denominator == 1


def character_table(ga, p):
    """Graded traces of one representative per conjugacy class of W on A(P)."""
    group = p.group
    rows = []
    for cls in conjugacy_classes(group):
        w = cls[0]
        rows.append({
            "word": list(group.words[w]),
            "class_size": len(cls),
            "traces": ga.graded_character(p.facet_perm[w]),
        })
    return rows


# ---------------------------------------------------------------------------
# formatting helpers


def format_scalar(x):
    """Human-readable exact scalar, e.g. ``1``, ``-1/2``, ``1 - sqrt5``."""
    if isinstance(x, QuadraticNumber):
        a, b = Fraction(x.a), Fraction(x.b)
        if not b:
            return str(a)
        root = f"sqrt{x.d}"
        bpart = root if abs(b) == 1 else f"{abs(b)}*{root}"
        if not a:
            return ("-" if b < 0 else "") + bpart
        return f"{a} {'-' if b < 0 else '+'} {bpart}"
    return str(Fraction(x))


def format_linear(coeffs, order):
    """Linear form from {name: coefficient}, terms in ``order``; e.g. ``X_E0 - 2*Y1 + Y2``."""
    out = []
    for name in order:
        c = coeffs.get(name)
        if not c:
            continue
        neg = (c < 0) if not isinstance(c, QuadraticNumber) else c.sign() < 0
        mag = -c if neg else c
        s = format_scalar(mag)
        term = name if s == "1" else (f"{s}*{name}" if " " not in s else f"({s})*{name}")
        if not out:
            out.append(("-" if neg else "") + term)
        else:
            out.append(("- " if neg else "+ ") + term)
    return " ".join(out) if out else "0"


# ---------------------------------------------------------------------------
# the pipeline


class _Stage:
    def __init__(self, timings):
        self.timings = {} if timings else None
        self._t = None

    def start(self):
        self._t = time.perf_counter()

    def stop(self, name):
        if self.timings is not None:
            self.timings[name] = round(time.perf_counter() - self._t, 4)


def _structural(ga, gen_perms=None):
    n = ga.n
    out = {
        "dims_equal_h": ga.dims == ga.h,
        "h_palindromic": ga.h == ga.h[::-1],
        "poincare_duality": ga.pd_check(),
        "vertex_monomials_positive": ga.vertex_monomial_consistency(),
    }
    if gen_perms is not None:
        out["top_degree_trivial"] = all(ga.trace(g, n) == 1 for g in gen_perms)
    return out


def run(config):
    """Execute one job and return a :class:`Report` (errors are embedded, never raised)."""
    if isinstance(config, dict):
        config = JobConfig.from_dict(config)
    stage = _Stage(config.timings)
    data = {"config": config.to_dict(), "engine_version": __version__, "errors": []}
    passed = []

    def fail(msg):
        data["errors"].append(msg)
        passed.append(False)

    try:
        stage.start()
        entry = _built(config)
        rs, group, p = entry["rs"], entry["group"], entry["p"]
        field = rs.field
        data["d"] = field.d

        def sc(x):
            return scalar_to_json(field.coerce(x))

        stage.stop("polytope")
    except ValueError as e:
        fail(f"build: {e}")
        return _finish(data, stage, passed)

    flags = dict(p.flags)
    data["polytope"] = {
        "type_label": rs.type_label,
        "group_order": len(group),
        "n_vertices": len(p.vertices),
        "n_facets": len(p.facets),
        "scaling": p.scaling,
        "flags": flags,
        "facets": [
            {"pairing": [sc(x) for x in F.pairing], "offset": sc(F.offset), "orbit": F.orbit,
             "vertices": list(F.vertices)}
            for F in p.facets
        ],
    }
    degenerate = not flags["nondegenerate"]
    if degenerate and rs.rank >= 3 and not config.force_degenerate:
        fail("degenerate input outside rank 2 needs force_degenerate")
        return _finish(data, stage, passed)
    if not flags["simple"] and not config.force_degenerate:
        fail("P is not simple; the algebra A(P) is not defined (use force_degenerate to attempt anyway)")
        return _finish(data, stage, passed)
    experimental = config.force_degenerate and (degenerate and rs.rank >= 3 or not flags["simple"])
    data["experimental"] = experimental

    K = config.K
    try:
        stage.start()
        fo = facet_orbits(p, K)
        q = quotient_polytope(p, K, fo)
        stage.stop("quotient")
    except ValueError as e:
        fail(f"quotient: {e}")
        return _finish(data, stage, passed)

    if "classify" in config.checks:
        transfer = simplicity_transfer_check(p, K, q)
        data["classify"] = {
            "flags": flags,
            "quotient_simple": q.simple,
            "quotient_flag": q.flag,
            "simplicity_transfer": transfer,
            "quotient_facets": [F.name for F in q.facets],
            "quotient_n_vertices": len(q.vertices),
        }
        passed.append(transfer)

    need_alg = any(c in config.checks for c in ("algebra", "characters", "iso"))
    ga_p = ga_q = None
    if need_alg:
        try:
            stage.start()
            check = not config.force_degenerate
            ga_p = _algebra_of(entry, "P", p, check)
            ga_q = build_graded_algebra(face_complex_of(q), linear_forms(q), field, check=check)
            stage.stop("algebra")
        except ValueError as e:
            fail(f"algebra: {e}")
            return _finish(data, stage, passed)
        data["presentation"] = {
            "P": ga_p.presentation_json(sc),
            "quotient": ga_q.presentation_json(sc),
        }

    if "algebra" in config.checks:
        stage.start()
        gens = [p.facet_perm[g] for g in group.generators]
        sp = _structural(ga_p, gens)
        sq = _structural(ga_q)
        data["structure"] = {"P": sp, "quotient": sq}
        passed.append(all(sp.values()) and all(sq.values()))
        stage.stop("structure")

    if "characters" in config.checks:
        stage.start()
        table = character_table(ga_p, p)
        integral = all(is_rational_integer(t) for row in table for t in row["traces"])
        identity_ok = all(t == d for t, d in zip(table[0]["traces"], ga_p.dims))
        top_ok = all(row["traces"][-1] == 1 for row in table)
        data["characters"] = {
            "classes": [
                {"word": row["word"], "class_size": row["class_size"], "traces": [sc(t) for t in row["traces"]]}
                for row in table
            ],
            "integral": integral,
            "identity_matches_dims": identity_ok,
            "top_degree_trivial": top_ok,
        }
        ok = identity_ok and top_ok
        if rs.crystallographic and flags["nondegenerate"]:
            ok = ok and integral
        passed.append(ok)
        stage.stop("characters")

    psi = None
    if "iso" in config.checks:
        stage.start()
        try:
            cc = c_coefficients(p, fo)
            psi = build_psi(p, q, fo, cc, ga_p, ga_q)
            dossier = verify_psi(psi, sc)
        except (ValueError, AssertionError) as e:
            fail(f"iso: {e}")
            return _finish(data, stage, passed)
        dossier["c_coefficients"] = dict(cc.checks)
        data["dossier"] = dossier
        passed.append(dossier["all"] and cc.ok)
        stage.stop("iso")

    if "scaling" in config.checks:
        stage.start()
        if rs.crystallographic:
            target = "weight" if p.scaling == "root" else "root"
            factors = p.orbit_scalings(target)
        else:
            target = "custom"
            factors = {o: field.coerce(o + 2) for o in range(len(p.orbit_reps))}
        try:
            p2 = p.rescaled(factors)
            ga2 = _algebra_of(entry, ("rescaled", target), p2, not config.force_degenerate)
            rep = scaling_invariance_report(p, K, factors, base=psi, ga_rescaled=ga2)
        except (ValueError, AssertionError) as e:
            fail(f"scaling: {e}")
            return _finish(data, stage, passed)
        data["scaling"] = {
            "target": target,
            "factors": {str(o): sc(c) for o, c in sorted(rep["factors"].items())},
            **{k: v for k, v in rep.items() if k != "factors"},
        }
        passed.append(rep["ok"])
        stage.stop("scaling")

    return _finish(data, stage, passed)


# Jobs in a sweep share P and A(P) across the subsets K; keep the last few builds.
_CACHE = OrderedDict()
_CACHE_SIZE = 4


def _built(config):
    key = (config.family, config.rank, tuple(config.lambda_set), config.scaling, config.max_rank_cap)
    entry = _CACHE.get(key)
    if entry is not None:
        _CACHE.move_to_end(key)
        return entry
    rs = build_root_system(config.type_label, rank_cap=config.max_rank_cap)
    group = generate_group(rs)
    lam = [rs.weight_to_root(v) for v in config.lambda_set]
    p = build_w_polytope(rs, group, lam, scaling=config.scaling)
    entry = {"rs": rs, "group": group, "p": p, "algebras": {}}
    _CACHE[key] = entry
    while len(_CACHE) > _CACHE_SIZE:
        _CACHE.popitem(last=False)
    return entry


def _algebra_of(entry, tag, poly, check):
    key = (tag, check)
    ga = entry["algebras"].get(key)
    if ga is None:
        ga = build_graded_algebra(face_complex_of(poly), linear_forms(poly), poly.rs.field, check=check)
        entry["algebras"][key] = ga
    return ga


def clear_cache():
    _CACHE.clear()


def _finish(data, stage, passed):
    if stage.timings is not None:
        data["timings"] = stage.timings
    ok = bool(passed) and all(passed) and not data["errors"]
    data["ok"] = ok
    return Report(data, ok)


# ---------------------------------------------------------------------------
# worked examples with goldens

# pairing vectors of the hexagon edges, named E0..E5 counterclockwise from omega1
_A2_EDGE_PAIRINGS = {
    (1, 0): "E0", (0, 1): "E1", (-1, 1): "E2",
    (-1, 0): "E3", (0, -1): "E4", (1, -1): "E5",
}

_A2_GOLDEN = """\
SR ideal: X_E0*X_E2, X_E0*X_E3, X_E0*X_E4, X_E1*X_E3, X_E1*X_E4, X_E1*X_E5, X_E2*X_E4, X_E2*X_E5, X_E3*X_E5
J: X_E0 - X_E2 - X_E3 + X_E5
J: X_E1 + X_E2 - X_E4 - X_E5
quotient SR ideal: X_E0*Y1, X_E1*Y2
quotient J: X_E0 - 2*Y1 + Y2
quotient J: X_E1 + Y1 - 2*Y2
phi(X_E0) = X_E0 + X_E2 + X_E4
phi(X_E1) = X_E1 + X_E3 + X_E5
phi(Y1) = X_E2 + X_E3 + X_E4
phi(Y2) = X_E3 + X_E4 + X_E5
dossier: all true
"""

_I25_GOLDEN = """\
dims: 1 3 1
Tr(r1) on A^1 = 1
Tr(r2) on A^1 = 1 - sqrt5
dossier: all true
"""


def _generator_trace_lines(ga, p):
    group = p.group
    lines = []
    for i, g in enumerate(group.generators):
        lines.append(f"Tr(r{i + 1}) on A^1 = {format_scalar(ga.trace(p.facet_perm[g], 1))}")
    return lines


def _a2_lines(report, p, psi):
    names = {}
    for j, F in enumerate(p.facets):
        names[j] = "X_" + _A2_EDGE_PAIRINGS[tuple(int(x) for x in F.pairing)]
    qnames = {}
    for j, QF in enumerate(psi.q.facets):
        kind, x = QF.label
        qnames[j] = names[x] if kind == "X" else f"Y{x}"
    order_p = sorted(names.values())
    order_q = sorted(v for v in qnames.values() if v.startswith("X")) + sorted(v for v in qnames.values() if v.startswith("Y"))
    ga_p, ga_q = psi.ga_p, psi.ga_q

    def mono(t, nm, order):
        return "*".join(sorted((nm[i] for i in t), key=order.index))

    sr = sorted(mono(t, names, order_p) for t in minimal_nonfaces(ga_p.fc))
    lines = ["SR ideal: " + ", ".join(sr)]
    for row in ga_p.forms:
        lines.append("J: " + format_linear({names[j]: c for j, c in enumerate(row)}, order_p))
    qsr = sorted(mono(t, qnames, order_q) for t in minimal_nonfaces(ga_q.fc))
    lines.append("quotient SR ideal: " + ", ".join(qsr))
    for row in ga_q.forms:
        lines.append("quotient J: " + format_linear({qnames[j]: c for j, c in enumerate(row)}, order_q))
    for name in order_q:
        j = next(k for k, v in qnames.items() if v == name)
        img = psi.raw_images[j]
        coeffs = {names[m[0]]: c for m, c in img.coeffs.items()}
        lines.append(f"phi({name}) = " + format_linear(coeffs, order_p))
    lines.append("dossier: " + ("all true" if psi.dossier["all"] else "FAILED"))
    return lines


def _i25_lines(report, p, psi):
    lines = ["dims: " + " ".join(str(d) for d in psi.ga_p.dims)]
    lines += _generator_trace_lines(psi.ga_p, p)
    lines.append("dossier: " + ("all true" if psi.dossier["all"] else "FAILED"))
    return lines


EXAMPLES = {
    "a2-hexagon": (
        {"type_label": "A2", "lambda_set": [[1, 1]], "K": [1, 2], "checks": ["all"]},
        _A2_GOLDEN,
        _a2_lines,
    ),
    "i25-pentagon": (
        {"type_label": "I2(5)", "lambda_set": [[1, 0]], "K": [1, 2], "checks": ["all"]},
        _I25_GOLDEN,
        _i25_lines,
    ),
}


def _psi_objects(config):
    rs = build_root_system(config.type_label, rank_cap=config.max_rank_cap)
    group = generate_group(rs)
    p = build_w_polytope(rs, group, [rs.weight_to_root(v) for v in config.lambda_set], scaling=config.scaling)
    fo = facet_orbits(p, config.K)
    q = quotient_polytope(p, config.K, fo)
    ga_p = build_graded_algebra(face_complex_of(p), linear_forms(p), rs.field)
    ga_q = build_graded_algebra(face_complex_of(q), linear_forms(q), rs.field)
    psi = build_psi(p, q, fo, c_coefficients(p, fo), ga_p, ga_q)
    verify_psi(psi)
    return p, psi


def example(name):
    """Run a canned example; returns (report, diff_text).  Empty diff means the golden matched."""
    if name not in EXAMPLES:
        raise ConfigError(f"unknown example {name!r}; choose from {sorted(EXAMPLES)}")
    cfg, golden, render = EXAMPLES[name]
    config = JobConfig.from_dict(dict(cfg))
    report = run(config)
    p, psi = _psi_objects(config)
    actual = "\n".join(render(report, p, psi)) + "\n"
    diff = "".join(difflib.unified_diff(
        golden.splitlines(keepends=True), actual.splitlines(keepends=True),
        fromfile=f"{name}.golden", tofile=f"{name}.actual",
    ))
    report.data["example"] = {"name": name, "golden_match": not diff, "rendered": actual.splitlines()}
    report.ok = report.ok and not diff
    report.data["ok"] = report.ok
    return report, diff


# ---------------------------------------------------------------------------
# sweeps

# two-point Lambda for the sweep (weight coordinates): incomparable in dominance
# order, so both orbits contribute vertices, and the hull is simple.  A1 has none;
# for H3 a search over small weights found only non-simple hulls.
TWO_POINT = {
    "A2": ((1, 2), (2, 1)),
    "B2": ((3, 1), (1, 4)),
    "G2": ((1, 4), (6, 1)),
    "I2(5)": ((1, 2), (2, 1)),
    "A3": ((1, 1, 2), (2, 1, 1)),
    "B3": ((1, 1, 2), (2, 1, 1)),
    "C3": ((1, 1, 2), (3, 1, 1)),
}

SWEEP_TYPES = ["A1", "A2", "B2", "G2", "I2(5)", "A3", "B3", "C3", "H3"]
RANK4_TYPES = ["A4", "B4"]


def _subsets(n):
    return [list(c) for r in range(n + 1) for c in itertools.combinations(range(1, n + 1), r)]


def selftest_cases(rank_cap=3, rank4=False, polygons=True):
    """(label, config dict) pairs of the default sweep."""
    cases = []
    for t in SWEEP_TYPES:
        n = parse_type_label(t)[1]
        if n > rank_cap:
            continue
        rho = [1] * n
        lams = [("singleton", [rho])]
        if t in TWO_POINT:
            lams.append(("two-point", [list(v) for v in TWO_POINT[t]]))
        for tag, lam in lams:
            for K in _subsets(n):
                cases.append((f"{t} {tag} K={K}", {"type_label": t, "lambda_set": lam, "K": K, "checks": ["all"]}))
    if polygons and rank_cap >= 2:
        for t in ["A2", "B2", "G2"]:
            for wall in ([0, 1], [1, 0]):
                for K in _subsets(2):
                    cases.append((f"{t} wall lambda={wall} K={K}",
                                  {"type_label": t, "lambda_set": [wall], "K": K, "checks": ["all"]}))
        for K in _subsets(2):
            cases.append((f"I2(5) wall lambda=[1, 0] K={K}",
                          {"type_label": "I2(5)", "lambda_set": [[1, 0]], "K": K, "checks": ["all"]}))
    if rank4:
        for t in RANK4_TYPES:
            for K in ([], [1], [1, 2, 3, 4]):
                cases.append((f"{t} singleton K={K}",
                              {"type_label": t, "lambda_set": [[1, 1, 1, 1]], "K": K, "checks": ["all"]}))
    return cases


def selftest(rank_cap=3, rank4=False, out=print):
    """Run the sweep, print one PASS/FAIL line per case; returns (all_ok, results)."""
    results = []
    for label, cfg in selftest_cases(rank_cap, rank4):
        cfg = dict(cfg, max_rank_cap=max(rank_cap, 4 if rank4 else rank_cap))
        t0 = time.perf_counter()
        rep = run(cfg)
        dt = time.perf_counter() - t0
        results.append((label, rep.ok, rep))
        if out is not None:
            out(f"{'PASS' if rep.ok else 'FAIL'}  {label}  ({dt:.2f}s)")
    ok = all(r[1] for r in results)
    if out is not None:
        out(f"{sum(r[1] for r in results)}/{len(results)} cases passed")
    return ok, results
