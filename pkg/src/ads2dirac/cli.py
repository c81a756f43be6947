"""Command-line front end for the strip Dirac toolkit.

Eight subcommands cover mode tables, spectra, boundary-condition
classification, deficiency indices, invariance tests, wall asymptotics,
truncated Fock sectors, and a property-suite verifier.  Reports are
JSON objects {config, results, checks[]} where every check carries
{name, reference, value, tolerance, pass}; the reference field states
the identity being tested.  Mode sample tables can be emitted as CSV
instead.  Output is byte-stable for a fixed command line: random
probes draw from a fixed seed and no timestamps are embedded.

Exit codes: 0 success, 1 verification breach, 2 invalid configuration,
3 quadrature non-convergence.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import __version__, algebra, extensions, fock, modes, quad, reps
from .errors import ConvergenceError, DomainError, ValidationError

__all__ = ["main"]

_SEED = 20260815  # frozen so that reports stay byte-stable
_RANGE_FLAGS = ("--n", "--window")

_GRAM_INDICES = tuple(range(-8, 9))
_GRAM_GRIDS = {
    modes.DIRICHLET_I: (0.0, 0.1, 0.25, 0.4, 0.5, 1.0, 1.5, 2.3),
    modes.DIRICHLET_II: (0.0, 0.1, 0.25, 0.4),
    modes.DIRICHLET_III: (0.0, 0.1, 0.25, 0.4),
    modes.DIRICHLET_IV: (0.0, 0.1, 0.25, 0.4),
}


# ---------------------------------------------------------------------------
# shared plumbing


def _check(name, reference, value, tolerance, passed):
    return {"name": name, "reference": reference, "value": value,
            "tolerance": tolerance, "pass": bool(passed)}


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        z = complex(obj)
        if z.imag == 0.0:
            return z.real
        return {"re": z.real, "im": z.imag}
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    if isinstance(obj, np.ndarray):
        return [_jsonable(v) for v in obj.tolist()]
    return obj


def _emit_text(text, path):
    if path:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _emit_report(args, results, checks):
    config = {"tool": "ads2dirac", "version": __version__,
              "command": args.command,
              "quad_tol": _spec_of(args).resolved_tolerance()}
    for key in ("mass", "family", "beta_plus", "beta_minus", "mu", "omega",
                "cutoff", "samples", "suite", "method", "window", "n"):
        if hasattr(args, key) and getattr(args, key) is not None:
            config[key] = getattr(args, key)
    if getattr(args, "u", None) is not None:
        config["u"] = args.u
    payload = {"config": config, "results": results, "checks": checks}
    text = json.dumps(_jsonable(payload), indent=2, sort_keys=True) + "\n"
    _emit_text(text, args.output)


def _spec_of(args):
    tol = getattr(args, "quad_tol", None)
    if tol is not None and not 0.0 < tol < 1.0:
        raise ValidationError("quadrature tolerance must lie in (0, 1)")
    # ladder projections at high index need the deeper refinement budget
    return quad.QuadratureSpec(tolerance=tol, max_levels=6)


def _int_range(text):
    lo, sep, hi = text.partition(":")
    if not sep:
        raise ValidationError(f"range {text!r} must look like a:b")
    try:
        a, b = int(lo), int(hi)
    except ValueError as exc:
        raise ValidationError(f"range {text!r} must hold integers") from exc
    if a > b:
        raise ValidationError(f"range {text!r} must not be decreasing")
    return a, b


def _float_range(text):
    lo, sep, hi = text.partition(":")
    if not sep:
        raise ValidationError(f"window {text!r} must look like a:b")
    try:
        a, b = float(lo), float(hi)
    except ValueError as exc:
        raise ValidationError(f"window {text!r} must hold numbers") from exc
    if not a < b:
        raise ValidationError(f"window {text!r} must be increasing")
    return a, b


def _parse_unitary(text):
    parts = text.split(",")
    if len(parts) != 8:
        raise ValidationError("--u takes 8 comma-separated reals "
                              "(row-major re,im entries)")
    try:
        vals = [float(p) for p in parts]
    except ValueError as exc:
        raise ValidationError("--u entries must be numbers") from exc
    U = np.array([[vals[0] + 1j * vals[1], vals[2] + 1j * vals[3]],
                  [vals[4] + 1j * vals[5], vals[6] + 1j * vals[7]]])
    defect = float(np.max(np.abs(U.conj().T @ U - np.eye(2))))
    if defect > 1e-10:
        raise ValidationError(f"matrix unitarity defect {defect:.3e} "
                              "exceeds 1e-10")
    # snap small input slop to the nearest exact unitary (polar factor)
    w, _, vh = np.linalg.svd(U)
    return w @ vh


def _boundary_from(args):
    given = [args.family is not None,
             args.u is not None,
             args.beta_plus is not None or args.beta_minus is not None]
    if sum(given) != 1:
        raise ValidationError(
            "give exactly one of --family, --u, or --beta-plus/--beta-minus")
    if args.family is not None:
        if args.family == modes.MASSLESS_BETA:
            raise ValidationError(
                "the diagonal massless family needs --beta-plus/--beta-minus")
        if args.family in (modes.HALF_INTEGER_V, modes.HALF_MASS_VI):
            return extensions.named_condition(modes.DIRICHLET_I)
        return extensions.named_condition(args.family)
    if args.u is not None:
        return extensions.boundary_condition(_parse_unitary(args.u))
    if args.beta_plus is None or args.beta_minus is None:
        raise ValidationError("--beta-plus and --beta-minus come together")
    return extensions.diagonal_condition(args.beta_plus, args.beta_minus)


def _haar_unitary(rng):
    z = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    q, r = np.linalg.qr(z)
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases


# ---------------------------------------------------------------------------
# subcommand handlers


def _interior_grid(samples):
    k = np.arange(1, samples + 1)
    return -0.5 * math.pi + math.pi * k / (samples + 1)


def _cmd_modes(args):
    lo, hi = _int_range(args.n)
    if args.samples < 0:
        raise ValidationError("--samples must be nonnegative")
    spec = _spec_of(args)
    built = [modes.mode(args.family, args.mass, n, beta_plus=args.beta_plus,
                        beta_minus=args.beta_minus, spec=spec)
             for n in range(lo, hi + 1)]
    grid = _interior_grid(args.samples) if args.samples else None

    if args.format == "csv":
        if len(built) != 1:
            raise ValidationError("CSV output takes exactly one mode index")
        if grid is None:
            raise ValidationError("CSV output needs --samples >= 1")
        m = built[0]
        vals = m.spatial(grid)
        lines = [f"# family={m.family} M={m.M!r} n={m.n}",
                 "rho,re_phi1,im_phi1,re_phi2,im_phi2"]
        for i, rho in enumerate(grid):
            row = (rho, vals[i, 0].real, vals[i, 0].imag,
                   vals[i, 1].real, vals[i, 1].imag)
            lines.append(",".join(repr(float(v)) for v in row))
        _emit_text("\n".join(lines) + "\n", args.output)
        return 0

    entries = []
    for m in built:
        entry = {"n": m.n, "omega": m.omega,
                 "normalization": m.normalization}
        if grid is not None:
            vals = m.spatial(grid)
            entry["samples"] = {
                "rho": grid,
                "re_phi1": vals[:, 0].real, "im_phi1": vals[:, 0].imag,
                "re_phi2": vals[:, 1].real, "im_phi2": vals[:, 1].imag,
            }
        entries.append(entry)
    _emit_report(args, {"family": args.family, "M": args.mass,
                        "modes": entries}, [])
    return 0


def _cmd_spectrum(args):
    bc = _boundary_from(args)
    window = _float_range(args.window)
    freqs = extensions.spectrum(bc, args.mass, window, method=args.method)
    checks = []
    if args.method == "auto" and args.mass < 0.5:
        scanned = extensions.spectrum(bc, args.mass, window, method="scan")
        if len(scanned) == len(freqs):
            delta = max((abs(a - b) for a, b in zip(freqs, scanned)),
                        default=0.0)
            ok = delta <= 1e-10
        else:
            delta, ok = None, False
        checks.append(_check("spectrum-root-finding-agreement",
                             "closed-form ladder equals determinant roots",
                             delta, 1e-10, ok))
    _emit_report(args, {"frequencies": list(freqs)}, checks)
    return 0


_SERIES_WORDS = {
    reps.DISCRETE_PLUS: "Discrete", reps.DISCRETE_MINUS: "Discrete",
    reps.MOCK_PLUS: "MockDiscrete", reps.MOCK_MINUS: "MockDiscrete",
}


def _label_results(outcome):
    if isinstance(outcome, tuple):
        return {"series": _SERIES_WORDS[outcome[0].series],
                "weight": outcome[0].weight,
                "components": [lab.series for lab in outcome]}
    if outcome.series == reps.PRINCIPAL:
        return {"series": "Principal", "s": 0, "mu": outcome.mu}
    if outcome.series == reps.COMPLEMENTARY:
        return {"series": "Complementary", "s": 0, "weight": outcome.weight}
    return {"series": outcome.series, "weight": outcome.weight}


def _cmd_classify(args):
    spec = _spec_of(args)
    family = args.family
    if family is None:
        if args.beta_plus is None or args.beta_minus is None:
            raise ValidationError("give --family or both boundary angles")
        family = modes.MASSLESS_BETA
    outcome = reps.classify(family, M=args.mass, beta_plus=args.beta_plus,
                            beta_minus=args.beta_minus, spec=spec)
    q = reps.casimir_check(family, args.mass, beta_plus=args.beta_plus,
                           beta_minus=args.beta_minus, spec=spec)
    target = args.mass * args.mass - 0.25
    checks = [_check("casimir-constant", "q = M^2 - 1/4",
                     abs(q - target), 1e-9, abs(q - target) <= 1e-9)]
    _emit_report(args, _label_results(outcome), checks)
    return 0


def _cmd_deficiency(args):
    if args.mass is None:
        raise ValidationError("deficiency needs --mass")
    report = extensions.deficiency_indices(args.mass)
    verdicts = [{"omega": v.omega, "basis": v.basis, "endpoint": v.endpoint,
                 "exponent": v.exponent, "log_factor": v.log_factor,
                 "integrable": v.integrable} for v in report.verdicts]
    strip = [{"omega": s.omega, "basis": s.basis, "diverged": s.diverged}
             for s in report.strip_checks]
    checks = [_check("deficiency-index-symmetry",
                     "n_+ equals n_- for the conjugation-symmetric operator",
                     float(report.n_plus - report.n_minus), 0.0,
                     report.n_plus == report.n_minus)]
    _emit_report(args, {"n_plus": report.n_plus, "n_minus": report.n_minus,
                        "verdicts": verdicts, "strip_checks": strip}, checks)
    return 0


def _cmd_invariance(args):
    bc = _boundary_from(args)
    report = extensions.invariance_test(bc, args.mass,
                                        tolerance=args.tolerance)
    failures = [{"omega": f.omega, "shift": f.shift,
                 "residual": f.residual_norm} for f in report.failures]
    worst = max((f.residual_norm for f in report.failures), default=0.0)
    checks = [_check("frequency-shift-invariance",
                     "shifted boundary data keeps the U-relation",
                     worst, args.tolerance, report.invariant)]
    _emit_report(args, {"invariant": report.invariant,
                        "failures": failures}, checks)
    return 0


def _parse_complex(text):
    parts = text.split(",")
    if len(parts) > 2:
        raise ValidationError("complex values are re or re,im")
    try:
        re = float(parts[0])
        im = float(parts[1]) if len(parts) == 2 else 0.0
    except ValueError as exc:
        raise ValidationError(f"bad complex literal {text!r}") from exc
    return complex(re, im)


def _cmd_asymptotics(args):
    if args.mass is None:
        raise ValidationError("asymptotics needs --mass")
    c1 = _parse_complex(args.c1)
    c2 = _parse_complex(args.c2)
    report = extensions.asymptotic_verifier(args.mass, args.omega, c1, c2)
    detail = [{"endpoint": c.endpoint, "quantity": c.quantity,
               "epsilon": c.epsilon, "predicted": c.predicted,
               "actual": c.actual, "rel_error": c.rel_error}
              for c in report.checks]
    worst = report.max_rel_error(1e-5)
    checks = [_check("wall-leading-terms",
                     "closed-form endpoint expansions at eps = 1e-5",
                     worst, 0.01, worst <= 0.01)]
    _emit_report(args, {"regime": report.regime, "detail": detail}, checks)
    return 0


def _fock_expected(family, mu, M):
    if family == modes.MASSLESS_BETA:
        lam = 0.5 * (mu - 0.5) ** 2
        deg = 2 if mu == 0.0 else 1
    else:
        lam = 0.5 * (0.25 - M * M)
        deg = 2
    return lam, deg


def _cmd_fock(args):
    ops = fock.build_fock(args.family, args.cutoff, mu=args.mu, M=args.mass)
    sector = fock.vacuum_sector(ops)
    admissible = fock.commutator_check(ops)
    everywhere = fock.commutator_check(ops, range(ops.space.dimension))
    audit = fock.car_audit(ops.space)
    vac_norm = float(np.linalg.norm(ops.lowering @ ops.space.vacuum()))
    lam, deg = _fock_expected(args.family, args.mu, args.mass)
    label = None
    if sector.label is not None:
        label = {"series": sector.label.series,
                 "weight": sector.label.weight}
    results = {
        "qubits": ops.space.qubits, "dimension": ops.space.dimension,
        "vacuum_weights": list(sector.weights),
        "degeneracy": sector.degeneracy, "label": label,
        "mixing": ops.mixing,
        "edge_commutator_deviation": everywhere,
    }
    checks = [
        _check("anticommutators-exact", "{a_p, a_q^+} = delta_pq, rest zero",
               audit, 0.0, audit == 0.0),
        _check("charge-commutator", "[L_+, L_-] = 2 L_0 off the top modes",
               admissible, 1e-12, admissible <= 1e-12),
        _check("vacuum-annihilation", "L_- kills the empty state",
               vac_norm, 0.0, vac_norm == 0.0),
        _check("vacuum-weight", "lambda = (mu - 1/2)^2 / 2 or (1/4 - M^2)/2",
               abs(sector.weights[0] - lam), 1e-12,
               abs(sector.weights[0] - lam) <= 1e-12
               and sector.degeneracy == deg),
    ]
    _emit_report(args, results, checks)
    return 0


# ---------------------------------------------------------------------------
# verification suites (fixed seeds, criterion-scale grids)


def _suite_deficiency(spec):
    del spec
    checks = []
    witness_ok = True
    for M, want in ((0.0, 2), (0.1, 2), (0.25, 2), (0.4, 2), (0.49, 2),
                    (0.5, 0), (0.75, 0), (1.5, 0), (2.5, 0)):
        rep = extensions.deficiency_indices(M)
        ok = rep.n_plus == want and rep.n_minus == want
        checks.append(_check(
            f"deficiency/M={M}", "n_+- = 2 for 0 <= M < 1/2, else 0",
            float(rep.n_plus), 0.0, ok))
        diverged = {(s.omega, s.basis) for s in rep.strip_checks
                    if s.diverged}
        for v in rep.verdicts:
            if not v.integrable and (v.omega, v.basis) not in diverged:
                witness_ok = False
    checks.append(_check(
        "deficiency/divergence-witness",
        "strip quadrature diverges on every non-integrable probe",
        1.0 if witness_ok else 0.0, 0.0, witness_ok))
    return checks


def _spectra_case(name, bc, M, window):
    auto = extensions.spectrum(bc, M, window, method="auto")
    scan = extensions.spectrum(bc, M, window, method="scan")
    if len(auto) != len(scan):
        return _check(name, "root count matches the closed-form ladder",
                      None, 1e-10, False)
    delta = max((abs(a - b) for a, b in zip(auto, scan)), default=0.0)
    return _check(name, "determinant roots equal the closed-form ladder",
                  delta, 1e-10, delta <= 1e-10)


def _suite_spectra(spec):
    del spec
    checks = []
    window = (-4.2, 4.2)
    for tag, masses in ((modes.DIRICHLET_I, (0.1, 0.25, 0.4)),
                        (modes.DIRICHLET_II, (0.1, 0.25, 0.4)),
                        (modes.DIRICHLET_III, (0.0, 0.25)),
                        (modes.DIRICHLET_IV, (0.25,))):
        bc = extensions.named_condition(tag)
        for M in masses:
            checks.append(_spectra_case(f"spectra/{tag}/M={M}", bc, M,
                                        window))
    rng = np.random.default_rng(_SEED)
    pairs = rng.uniform(0.05, math.pi - 0.05, size=(20, 2))
    for k, (bp, bm) in enumerate(pairs):
        bc = extensions.diagonal_condition(bp, bm)
        checks.append(_spectra_case(f"spectra/massless/pair-{k:02d}", bc,
                                    0.0, (-3.7, 3.7)))
    return checks


def _suite_gram(spec):
    spec = spec or quad.QuadratureSpec(tolerance=1e-10, max_levels=6)
    checks = []
    for family, masses in _GRAM_GRIDS.items():
        for M in masses:
            built = [modes.mode(family, M, n, spec=spec)
                     for n in _GRAM_INDICES]
            worst = 0.0
            for i, mi in enumerate(built):
                for j in range(i, len(built)):
                    val = quad.inner_product(mi.spatial, built[j].spatial,
                                             spec=spec)
                    want = 1.0 if i == j else 0.0
                    worst = max(worst, abs(val - want))
            checks.append(_check(
                f"gram/{family}/M={M}",
                "17-mode Gram matrix equals the identity",
                worst, 1e-9, worst <= 1e-9))
    return checks


_NORMALIZATION_CASES = (
    (modes.DIRICHLET_I, 0.25, None, (-2, -1, 0, 1, 2, 3)),
    (modes.DIRICHLET_I, 1.3, None, (0, 1, 2, 3)),
    (modes.DIRICHLET_II, 0.25, None, (0, 1, 2, 3)),
    (modes.DIRICHLET_III, 0.25, None, (0, 1, 2, 3)),
    (modes.DIRICHLET_IV, 0.25, None, (0, 1, 2, 3)),
    (modes.HALF_INTEGER_V, 1.5, None, (0, 1, 2, 3)),
    (modes.HALF_INTEGER_V, 2.5, None, (0, 1)),
    (modes.MASSLESS_BETA, 0.0, (0.7, 2.1), (-2, -1, 0, 1, 2)),
)


def _suite_normalization(spec):
    spec = spec or quad.QuadratureSpec(tolerance=1e-10, max_levels=6)
    checks = []
    for family, M, angles, indices in _NORMALIZATION_CASES:
        bp, bm = angles if angles else (None, None)
        worst = 0.0
        for n in indices:
            m = modes.mode(family, M, n, beta_plus=bp, beta_minus=bm,
                           spec=spec)
            ratio = modes.printed_normalization(m) / m.normalization
            worst = max(worst, abs(ratio * ratio - 1.0))
        checks.append(_check(
            f"normalization/{family}/M={M}",
            "printed constants normalize the modes to one",
            worst, 1e-8, worst <= 1e-8))
    # the half-mass family constant audit is recorded through its ratio,
    # which sits at sqrt(2) for the ground mode instead of one
    m0 = modes.mode(modes.HALF_MASS_VI, 0.5, 0, spec=spec)
    ratio = modes.printed_normalization(m0) / m0.normalization
    checks.append(_check(
        "normalization/half-mass-vi/ground-ratio",
        "printed-over-measured constant sits at sqrt(2)",
        ratio, 1e-8, abs(ratio - math.sqrt(2.0)) <= 1e-8))
    return checks


def _mirror_plus(M, n):
    return -1j * math.sqrt((n + 1.0) * (n + 2.0 * M + 1.0))


def _mirror_minus(M, n):
    return -1j * math.sqrt(n * (n + 2.0 * M))


def _integer_row(M, n, upper):
    half = 0.5 if upper else -0.5
    return math.sqrt((n + M + half) * (n - M + half))


def _ladder_entry(name, got, want):
    dev = abs(got - want)
    return _check(name, "projected coefficient matches the printed table",
                  dev, 1e-8, dev <= 1e-8)


def _suite_ladder(spec):
    checks = []
    for family, masses, sign in ((modes.DIRICHLET_I, (0.25, 1.3), 1.0),
                                 (modes.DIRICHLET_II, (0.25,), -1.0)):
        for M in masses:
            eff = sign * M
            for n in range(7):
                lc = reps.ladder_coefficients(family, M, n, spec=spec)
                checks.append(_ladder_entry(
                    f"ladder/{family}/M={M}/c+({n})", lc.c_plus,
                    _mirror_plus(eff, n)))
                checks.append(_ladder_entry(
                    f"ladder/{family}/M={M}/c-({n})", lc.c_minus,
                    _mirror_minus(eff, n)))
            for n in (1, 2):
                lc = reps.ladder_coefficients(family, M, -n, spec=spec)
                checks.append(_ladder_entry(
                    f"ladder/{family}/M={M}/c-(-{n})", lc.c_minus,
                    1j * math.sqrt((n + 1.0) * (n + 2.0 * eff + 1.0))))
                checks.append(_ladder_entry(
                    f"ladder/{family}/M={M}/c+(-{n})", lc.c_plus,
                    1j * math.sqrt(n * (n + 2.0 * eff))))
            bottom = reps.apply_ladder(
                -1, modes.mode(family, M, 0, spec=spec), spec=spec)
            checks.append(_check(
                f"ladder/{family}/M={M}/annihilation-bottom",
                "the lowering map kills the lowest positive mode",
                bottom.image_norm, 1e-8, bottom.image_norm <= 1e-8))
            top = reps.apply_ladder(
                +1, reps.negative_edge(family, M, spec=spec), spec=spec)
            checks.append(_check(
                f"ladder/{family}/M={M}/annihilation-top",
                "the raising map kills the highest negative mode",
                top.image_norm, 1e-8, top.image_norm <= 1e-8))

    root = math.sqrt(0.25 - 0.25 ** 2)
    for family in (modes.DIRICHLET_III, modes.DIRICHLET_IV):
        M = 0.25
        for n in range(1, 5):
            lc = reps.ladder_coefficients(family, M, n, spec=spec)
            checks.append(_ladder_entry(
                f"ladder/{family}/c+({n})", lc.c_plus,
                -1j * _integer_row(M, n, True)))
            checks.append(_ladder_entry(
                f"ladder/{family}/c-({n})", lc.c_minus,
                -1j * _integer_row(M, n, False)))
        for n in (2, 3):
            lc = reps.ladder_coefficients(family, M, -n, spec=spec)
            checks.append(_ladder_entry(
                f"ladder/{family}/c+(-{n})", lc.c_plus,
                1j * _integer_row(M, n, False)))
            checks.append(_ladder_entry(
                f"ladder/{family}/c-(-{n})", lc.c_minus,
                1j * _integer_row(M, n, True)))
        zero = reps.ladder_coefficients(family, M, 0, spec=spec)
        edge = reps.ladder_coefficients(family, M, -1, spec=spec)
        one = reps.ladder_coefficients(family, M, 1, spec=spec)
        checks.append(_ladder_entry(f"ladder/{family}/c+(0)", zero.c_plus,
                                    -1j * root))
        checks.append(_ladder_entry(f"ladder/{family}/c-(0)", zero.c_minus,
                                    1j * root))
        checks.append(_ladder_entry(f"ladder/{family}/c+(-1)", edge.c_plus,
                                    1j * root))
        checks.append(_ladder_entry(f"ladder/{family}/c-(1)", one.c_minus,
                                    -1j * root))

    for bp, bm in ((0.7, 2.1), (0.5 * math.pi, 0.5 * math.pi)):
        beta = (bp + bm) / math.pi
        for j in range(-2, 2):
            omega = j + 1.0 - beta
            lc = reps.ladder_coefficients(modes.MASSLESS_BETA, 0.0, j,
                                          beta_plus=bp, beta_minus=bm,
                                          spec=spec)
            phase = 1j * (-1.0) ** (j + 1)
            checks.append(_ladder_entry(
                f"ladder/massless/{bp:.3f},{bm:.3f}/c+({j})", lc.c_plus,
                phase * (0.5 + omega)))
            checks.append(_ladder_entry(
                f"ladder/massless/{bp:.3f},{bm:.3f}/c-({j})", lc.c_minus,
                phase * (0.5 - omega)))
    return checks


_CASIMIR_CASES = (
    (modes.DIRICHLET_I, 0.25, None),
    (modes.DIRICHLET_I, 1.3, None),
    (modes.DIRICHLET_II, 0.25, None),
    (modes.DIRICHLET_III, 0.25, None),
    (modes.DIRICHLET_III, 0.0, None),
    (modes.DIRICHLET_IV, 0.1, None),
    (modes.HALF_INTEGER_V, 2.5, None),
    (modes.HALF_MASS_VI, 0.5, None),
    (modes.MASSLESS_BETA, 0.0, (0.7, 2.1)),
)


def _suite_casimir(spec):
    checks = []
    for family, M, angles in _CASIMIR_CASES:
        bp, bm = angles if angles else (None, None)
        q = reps.casimir_check(family, M, beta_plus=bp, beta_minus=bm,
                               spec=spec)
        dev = abs(q - (M * M - 0.25))
        checks.append(_check(
            f"casimir/{family}/M={M}", "q = M^2 - 1/4",
            dev, 1e-9, dev <= 1e-9))
    return checks


def _classify_case(name, outcome, series, weight=None, mu=None):
    if isinstance(outcome, tuple):
        got_series = {lab.series for lab in outcome}
        ok = got_series == set(series)
        dev = max(abs(lab.weight - weight) for lab in outcome)
        ok = ok and dev <= 1e-10
    else:
        ok = outcome.series == series
        if mu is not None:
            dev = abs(outcome.mu - mu)
        else:
            dev = abs(outcome.weight - weight)
        ok = ok and dev <= 1e-10
    return _check(name, "series and label parameters match the catalogue",
                  dev, 1e-10, ok)


def _suite_classification(spec):
    checks = []
    pair = (reps.DISCRETE_PLUS, reps.DISCRETE_MINUS)
    mock = (reps.MOCK_PLUS, reps.MOCK_MINUS)
    for M in (0.25, 1.3):
        out = reps.classify(modes.DIRICHLET_I, M=M, spec=spec)
        checks.append(_classify_case(
            f"classification/dirichlet1/M={M}", out, pair, weight=0.5 + M))
    out = reps.classify(modes.DIRICHLET_II, M=0.25, spec=spec)
    checks.append(_classify_case(
        "classification/dirichlet2/M=0.25", out, pair, weight=0.25))
    for family in (modes.DIRICHLET_III, modes.DIRICHLET_IV):
        out = reps.classify(family, M=0.25, spec=spec)
        checks.append(_classify_case(
            f"classification/{family}/M=0.25", out, reps.COMPLEMENTARY,
            weight=0.75))
    out = reps.classify(modes.DIRICHLET_III, M=0.0, spec=spec)
    checks.append(_classify_case(
        "classification/dirichlet3/M=0", out, reps.PRINCIPAL, mu=0.0))
    for beta in (0.5, 1.5):
        angle = 0.5 * math.pi * beta
        out = reps.classify(modes.MASSLESS_BETA, beta_plus=angle,
                            beta_minus=angle, spec=spec)
        checks.append(_classify_case(
            f"classification/massless/beta={beta}", out, mock, weight=0.5))
    for beta, mu in ((0.3, -0.3), (0.8, 0.2), (1.7, 0.3)):
        angle = 0.5 * math.pi * beta
        out = reps.classify(modes.MASSLESS_BETA, beta_plus=angle,
                            beta_minus=angle, spec=spec)
        checks.append(_classify_case(
            f"classification/massless/beta={beta}", out, reps.PRINCIPAL,
            mu=mu))
    return checks


def _suite_invariance(spec):
    del spec
    rng = np.random.default_rng(_SEED)
    named = [extensions.named_condition(tag) for tag in
             (modes.DIRICHLET_I, modes.DIRICHLET_II,
              modes.DIRICHLET_III, modes.DIRICHLET_IV)]
    randoms = [extensions.boundary_condition(_haar_unitary(rng))
               for _ in range(50)]
    diagonals = [extensions.diagonal_condition(*rng.uniform(0.05, 3.0, 2))
                 for _ in range(20)]
    off_diagonal = [bc for bc in randoms
                    if abs(bc.matrix[0, 1]) > 1e-3][:20]
    checks = []
    for M in (0.1, 0.25, 0.4):
        named_pass = sum(bool(extensions.invariance_test(bc, M))
                         for bc in named)
        random_pass = sum(bool(extensions.invariance_test(bc, M))
                          for bc in randoms)
        diag_pass = sum(bool(extensions.invariance_test(bc, M))
                        for bc in diagonals)
        ok = named_pass == 4 and random_pass == 0 and diag_pass == 0
        checks.append(_check(
            f"invariance/M={M}",
            "only diag(-+1, +-1) and +-identity survive the shifts",
            float(named_pass + random_pass + diag_pass), 4.0, ok))
    diag_pass = sum(bool(extensions.invariance_test(bc, 0.0))
                    for bc in diagonals)
    off_pass = sum(bool(extensions.invariance_test(bc, 0.0))
                   for bc in off_diagonal)
    ok = diag_pass == len(diagonals) and off_pass == 0
    checks.append(_check(
        "invariance/M=0",
        "every diagonal matrix survives at zero mass, no mixing one does",
        float(diag_pass), float(len(diagonals)), ok))
    return checks


def _suite_asymptotics(spec):
    del spec
    checks = []
    cases = (("generic/M=0.25", 0.25, 0.9, 1.0, 0.4),
             ("half-integer/k=1/first", 1.5, 2.3, 1.0, 0.0),
             ("half-integer/k=1/second", 1.5, 2.3, 0.0, 1.0),
             ("half-integer/k=2/second", 2.5, 3.1, 0.0, 1.0),
             ("log-mass/k=0", 0.5, 1.7, 0.0, 1.0))
    for name, M, omega, c1, c2 in cases:
        report = extensions.asymptotic_verifier(M, omega, c1, c2)
        worst = report.max_rel_error(1e-5)
        checks.append(_check(
            f"asymptotics/{name}",
            "leading wall expansion at eps = 1e-5",
            worst, 0.01, worst <= 0.01))
    for M in (0.25, 0.4, 1.5, 2.5):
        rep = extensions.deficiency_indices(M)
        worst = 0.0
        for v in rep.verdicts:
            want = 2.0 * M if (v.basis, v.endpoint) == (1, "+") else -2.0 * M
            worst = max(worst, abs(v.exponent - want) / abs(want))
        checks.append(_check(
            f"asymptotics/exponents/M={M}",
            "squared amplitudes scale as the wall distance to +-2M",
            worst, 0.02, worst <= 0.02))
    rep = extensions.deficiency_indices(0.5)
    flagged = any(v.log_factor for v in rep.verdicts)
    checks.append(_check(
        "asymptotics/log-flag/M=0.5",
        "the k = 0 wall expansion carries a logarithm",
        1.0 if flagged else 0.0, 0.0, flagged))
    return checks


_CONJUGATION_CASES = ((modes.DIRICHLET_I, 0.25), (modes.DIRICHLET_I, 1.3),
                      (modes.DIRICHLET_II, 0.25),
                      (modes.DIRICHLET_III, 0.25),
                      (modes.DIRICHLET_IV, 0.25))


def _suite_symmetries(spec):
    checks = []
    grid = np.linspace(-1.45, 1.45, 41)
    for family, M in _CONJUGATION_CASES:
        worst = 0.0
        for n in range(1, 5):
            plus = modes.mode(family, M, n, spec=spec)
            minus = modes.mode(family, M, -n, spec=spec)
            image = algebra.charge_conjugate(plus.spatial(grid))
            worst = max(worst, float(np.max(np.abs(
                minus.spatial(grid) - image))))
        checks.append(_check(
            f"symmetries/conjugation/{family}/M={M}",
            "the negative tower is the charge conjugate of the positive",
            worst, 1e-11, worst <= 1e-11))
    worst = 0.0
    for n in range(5):
        m3 = modes.mode(modes.DIRICHLET_III, 0.25, n, spec=spec)
        m4 = modes.mode(modes.DIRICHLET_IV, 0.25, n, spec=spec)
        image = (-1.0) ** n * algebra.parity(grid, m3.spatial(grid))
        worst = max(worst, float(np.max(np.abs(m4.spatial(grid) - image))))
    checks.append(_check(
        "symmetries/parity", "fourth-family modes are (-1)^n parity images",
        worst, 1e-11, worst <= 1e-11))
    worst = 0.0
    for n in (0, 1, -2):
        worst = max(worst, reps.chiral_partner_residual(
            0.7, 1.0, 0.9, 0.8, n=n, spec=spec))
    checks.append(_check(
        "symmetries/chiral", "equal-angle-sum massless families are "
        "chiral rotations of each other", worst, 1e-10, worst <= 1e-10))
    return checks


_FOCK_CASES = (
    (modes.MASSLESS_BETA, 0.25, None, 0.03125, 1),
    (modes.MASSLESS_BETA, -0.25, None, 0.28125, 1),
    (modes.MASSLESS_BETA, 0.0, None, 0.125, 2),
    (modes.DIRICHLET_III, None, 0.25, 0.09375, 2),
    (modes.DIRICHLET_III, None, 0.0, 0.125, 2),
    (modes.DIRICHLET_IV, None, 0.25, 0.09375, 2),
)


def _suite_fock(spec):
    del spec
    checks = []
    audits = [fock.car_audit(fock.build_fock(modes.MASSLESS_BETA, 5,
                                             mu=0.25).space),
              fock.car_audit(fock.build_fock(modes.DIRICHLET_III, 5,
                                             M=0.25).space)]
    worst = max(audits)
    checks.append(_check(
        "fock/anticommutators", "{a_p, a_q^+} = delta_pq, rest zero",
        worst, 0.0, worst == 0.0))
    for family, mu, M, lam, deg in _FOCK_CASES:
        ops = fock.build_fock(family, 5, mu=mu, M=M)
        tag = f"{family}/mu={mu}" if mu is not None else f"{family}/M={M}"
        admissible = fock.commutator_check(ops)
        checks.append(_check(
            f"fock/commutator/{tag}", "[L_+, L_-] = 2 L_0 off the top modes",
            admissible, 1e-12, admissible <= 1e-12))
        vac = float(np.linalg.norm(ops.lowering @ ops.space.vacuum()))
        checks.append(_check(
            f"fock/vacuum-annihilation/{tag}", "L_- kills the empty state",
            vac, 0.0, vac == 0.0))
        sector = fock.vacuum_sector(ops)
        dev = abs(sector.weights[0] - lam)
        checks.append(_check(
            f"fock/vacuum-weight/{tag}",
            "lambda = (mu - 1/2)^2 / 2 or (1/4 - M^2)/2 with multiplicity",
            dev, 1e-12, dev <= 1e-12 and sector.degeneracy == deg))
    return checks


_SUITES = {
    "deficiency": _suite_deficiency,
    "spectra": _suite_spectra,
    "gram": _suite_gram,
    "normalization": _suite_normalization,
    "ladder": _suite_ladder,
    "casimir": _suite_casimir,
    "classification": _suite_classification,
    "invariance": _suite_invariance,
    "asymptotics": _suite_asymptotics,
    "symmetries": _suite_symmetries,
    "fock": _suite_fock,
}


def _cmd_verify(args):
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    spec = _spec_of(args) if args.quad_tol is not None else None
    checks = []
    for name in names:
        checks.extend(_SUITES[name](spec))
    failures = sum(not c["pass"] for c in checks)
    results = {"suites": names, "checks_run": len(checks),
               "failures": failures}
    _emit_report(args, results, checks)
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# argument parsing


def _add_common(sub, mass_default=None):
    sub.add_argument("--mass", type=float, default=mass_default)
    sub.add_argument("--quad-tol", type=float, default=None)
    sub.add_argument("--output", default=None)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="ads2dirac",
        description="strip Dirac modes, spectra, and boundary conditions")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("modes", help="mode tables and sampled profiles")
    _add_common(p, mass_default=0.0)
    p.add_argument("--family", required=True, choices=modes.FAMILIES)
    p.add_argument("--beta-plus", type=float, default=None)
    p.add_argument("--beta-minus", type=float, default=None)
    p.add_argument("--n", default="0:0")
    p.add_argument("--samples", type=int, default=0)
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("spectrum", help="eigenfrequencies in a window")
    _add_common(p, mass_default=0.0)
    p.add_argument("--family", choices=modes.FAMILIES, default=None)
    p.add_argument("--beta-plus", type=float, default=None)
    p.add_argument("--beta-minus", type=float, default=None)
    p.add_argument("--u", default=None)
    p.add_argument("--window", required=True)
    p.add_argument("--method", choices=("auto", "scan"), default="auto")

    p = sub.add_parser("classify", help="unitary representation content")
    _add_common(p, mass_default=0.0)
    p.add_argument("--family", choices=modes.FAMILIES, default=None)
    p.add_argument("--beta-plus", type=float, default=None)
    p.add_argument("--beta-minus", type=float, default=None)

    p = sub.add_parser("deficiency", help="deficiency indices at omega=+-i")
    _add_common(p)

    p = sub.add_parser("invariance", help="frequency-shift invariance test")
    _add_common(p, mass_default=0.0)
    p.add_argument("--family", choices=modes.FAMILIES, default=None)
    p.add_argument("--beta-plus", type=float, default=None)
    p.add_argument("--beta-minus", type=float, default=None)
    p.add_argument("--u", default=None)
    p.add_argument("--tolerance", type=float, default=1e-9)

    p = sub.add_parser("asymptotics", help="wall expansion comparison")
    _add_common(p)
    p.add_argument("--omega", type=float, required=True)
    p.add_argument("--c1", default="1")
    p.add_argument("--c2", default="0")

    p = sub.add_parser("fock", help="truncated Fock sector report")
    _add_common(p)
    p.add_argument("--family", required=True,
                   choices=(modes.MASSLESS_BETA, modes.DIRICHLET_III,
                            modes.DIRICHLET_IV))
    p.add_argument("--mu", type=float, default=None)
    p.add_argument("--cutoff", type=int, default=5)

    p = sub.add_parser("verify", help="run a named property suite")
    _add_common(p)
    p.add_argument("--suite", choices=("all",) + tuple(_SUITES),
                   default="all")
    return parser


_HANDLERS = {
    "modes": _cmd_modes,
    "spectrum": _cmd_spectrum,
    "classify": _cmd_classify,
    "deficiency": _cmd_deficiency,
    "invariance": _cmd_invariance,
    "asymptotics": _cmd_asymptotics,
    "fock": _cmd_fock,
    "verify": _cmd_verify,
}


def _join_range_flags(argv):
    # argparse reads "-2:2" as an option; glue range values onto their flag
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _RANGE_FLAGS and i + 1 < len(argv):
            out.append(tok + "=" + argv[i + 1])
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    parser = _build_parser()
    args = parser.parse_args(_join_range_flags(list(argv)))
    try:
        return _HANDLERS[args.command](args)
    except (ValidationError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
