#!/usr/bin/env python3
"""Generate (or check) docs/cli-coverage.md.

Every public operation of the core library must be anchored at exactly one
CLI verb. Operations shared by several code paths are anchored at the verb
whose observable output pins their behaviour. The script extracts the public
free functions from the installed headers, joins them against the curated
anchor map below, and fails when either side has an entry the other lacks,
so renaming or adding an operation without updating the audit breaks CI.
"""

import argparse
import re
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
HEADER_DIR = ROOT / "core" / "include" / "modulilab"
DOC = ROOT / "docs" / "cli-coverage.md"

VERBS = {
    "classify", "invariants", "quotient", "orbit", "stabilizer",
    "oracle-count", "beta", "fan", "verify", "strata-scan",
}

HEADERS = [
    "rational.hpp", "fp.hpp", "mpoly.hpp", "mpoly_io.hpp", "series.hpp",
    "forms.hpp", "weyl.hpp", "strata.hpp", "toric.hpp", "stability.hpp",
    "birational.hpp",
]

# header -> operation -> (verb, pathway note)
ANCHORS = {
    "rational.hpp": {
        "rat_num": ("quotient", "exact numerators behind every reported coordinate"),
        "rat_den": ("quotient", "exact denominators behind every reported coordinate"),
        "rat_to_string": ("quotient", "renders wpoint entries as num/den strings"),
        "rat_from_string": ("classify", "parses --gcoeffs, --ecoeffs, --cpoint values"),
        "zero_like": ("invariants", "coefficient-ring glue for the polynomial engine over Q"),
        "one_like": ("invariants", "coefficient-ring glue for the polynomial engine over Q"),
        "is_zero": ("invariants", "term pruning in exact polynomial arithmetic"),
        "ring_scale": ("invariants", "rational rescaling inside the invariant formulas"),
    },
    "fp.hpp": {
        "zero_like": ("oracle-count", "coefficient-ring glue for the engine over F_p"),
        "one_like": ("oracle-count", "coefficient-ring glue for the engine over F_p"),
        "is_zero": ("oracle-count", "zero tests during F_p point enumeration"),
        "fp_from_rat": ("oracle-count", "reduces the coefficient quadruple mod p"),
    },
    "mpoly.hpp": {
        "is_zero": ("verify", "zero-polynomial verdicts of the identity suites"),
        "divide_exact": ("verify", "discriminant-divisibility check in --suite invariants"),
        "ring_det": ("invariants", "determinant formulas for L, M, D"),
        "poly_det": ("verify", "determinant-routes cross-check in --suite invariants"),
    },
    "mpoly_io.hpp": {
        "to_string": ("invariants", "--symbolic prints the closed forms as text"),
        "mpoly_from_string": ("verify", "serialization round-trip in --suite invariants"),
        "mpoly_to_json": ("invariants", "--symbolic --json emits structured polynomials"),
        "mpoly_from_json": ("verify", "serialization round-trip in --suite invariants"),
    },
    "series.hpp": {
        "series_expand": ("verify", "partial-fraction expansion behind the Molien average"),
        "molien_average": ("verify", "molien-series check in --suite invariants"),
        "molien_closed_form": ("verify", "molien-series check in --suite invariants"),
    },
    "forms.hpp": {
        "rat_scale": ("invariants", "halved coefficient placement inside g_form"),
        "g_form": ("invariants", "normal form behind every invariant evaluation"),
        "invariants": ("invariants", "H, L, M, D, R, S, T values"),
        "phi1_map": ("verify", "first leg of the quotient chain"),
        "phi2_map": ("verify", "second leg of the quotient chain"),
        "phi3_map": ("verify", "third leg of the quotient chain"),
        "phi_chain_map": ("verify", "composite chain, symbolic coefficients"),
        "phi_chain": ("verify", "quotient-vs-chain-random in --suite invariants"),
        "weighted_monomials": ("verify", "monomial basis behind weighted equality"),
        "wp_equal_vectors": ("verify", "weighted projective comparison core"),
        "wp_equal": ("verify", "quotient image checks in --suite invariants"),
        "quotient_point": ("quotient", "the (H : R : S : T) image"),
        "basis_exponents": ("invariants", "--form exponent convention"),
        "form_polynomial": ("invariants", "--form prints the quadrilinear polynomial"),
        "molien_check": ("verify", "molien-series check in --suite invariants"),
    },
    "weyl.hpp": {
        "mat_identity": ("verify", "closure seed for group generation"),
        "mat_mul": ("verify", "products during breadth-first closure"),
        "mat_det": ("verify", "generator invertibility guard"),
        "gamma0_generators": ("verify", "group-order-gamma0 check"),
        "gamma_generators": ("verify", "group-order-gamma check"),
        "generate": ("verify", "group-order checks in --suite group"),
        "project_mod_center": ("verify", "group-order-projective check"),
        "act": ("orbit", "point transport under each group element"),
        "act_symbolic": ("verify", "HRST-generator-invariance in --suite invariants"),
        "normalize_point": ("orbit", "canonical representatives of orbit points"),
        "orbit": ("orbit", "the orbit listing"),
        "stabilizer": ("stabilizer", "the stabilizer subgroup listing"),
    },
    "strata.hpp": {
        "to_string": ("classify", "stratum labels on stdout"),
        "is_zero": ("classify", "Gaussian-rational zero test in the exact witness"),
        "zero_like": ("classify", "Gaussian-rational ring glue in the exact witness"),
        "one_like": ("classify", "Gaussian-rational ring glue in the exact witness"),
        "classify_p3": ("classify", "--gcoeffs stratum decision"),
        "classify_e": ("classify", "--ecoeffs stratum decision"),
        "expected_singular_points": ("classify", "--points catalogued lists"),
        "is_singular_point_1111": ("classify", "--points validates each point exactly"),
        "is_singular_point_22": ("classify", "--points validates each point exactly"),
        "oracle_count_1111": ("oracle-count", "--gcoeffs brute-force count"),
        "oracle_count_22": ("oracle-count", "--ecoeffs brute-force count"),
        "form_value": ("oracle-count", "divisor membership per enumerated point"),
        "form_partial": ("oracle-count", "chart-local derivative tests"),
        "ci_equations": ("oracle-count", "limit-side complete-intersection system"),
        "ci_jacobian": ("oracle-count", "limit-side Jacobian"),
        "matrix_rank": ("oracle-count", "rank test deciding singularity"),
    },
    "toric.hpp": {
        "moduli_fan": ("fan", "rays and maximal cones on stdout"),
        "p1346_fan": ("fan", "--check star subdivision source fan"),
        "cone_multiplicity": ("fan", "--check multiplicities"),
        "fan_is_complete": ("fan", "--check complete"),
        "cone_contains": ("fan", "membership tests behind the completeness sampling"),
        "star_subdivide": ("fan", "--check star"),
        "fans_equal": ("fan", "--check star compares against the target fan"),
        "star_subdivision_check": ("fan", "--check star verdict"),
        "moduli_ideal": ("fan", "--check ideal generator exponents"),
        "ideal_weighted_orders": ("fan", "--check ideal weighted orders"),
    },
    "stability.hpp": {
        "upoly_antiderivative": ("beta", "antiderivative route of profile integration"),
        "upoly_eval": ("beta", "endpoint evaluation of the antiderivative"),
        "integrate_piecewise": ("beta", "profile integral behind each preset S-value"),
        "integrate_piecewise_monomial": ("verify", "integration-cross-check in --suite stability"),
        "s_value": ("beta", "normalized S from a volume profile"),
        "beta_value": ("verify", "beta-divisor-E check in --suite stability"),
        "nemuro_bound": ("verify", "fibration bound checks in --suite stability"),
        "presets": ("beta", "named profile lookup"),
        "preset_s_value": ("beta", "S-value of --preset NAME"),
        "stability_report": ("beta", "the {s, a, beta} report"),
    },
    "birational.hpp": {
        "z_vars": ("verify", "variable convention of the line-form ring"),
        "zc_vars": ("verify", "variable convention of the symbolic pullback"),
        "uv_vars": ("verify", "variable convention of the intersection models"),
        "lines_from_c": ("verify", "chi-vanishing sampling in --suite appendix"),
        "lines_symbolic": ("verify", "chi-vanishing symbolic mode"),
        "discriminants": ("classify", "--cpoint reports d12, d13, d14"),
        "abcd_from_c": ("classify", "--cpoint coefficient quadruple"),
        "abcd_symbolic": ("verify", "a-plus-b-vanishes in --suite appendix"),
        "verify_chi_vanishing": ("verify", "chi-vanishing in --suite appendix"),
        "rho_sigma_identities": ("verify", "rho-sigma-identities in --suite appendix"),
        "ci_model": ("verify", "family-at-s-1 in --suite section3"),
        "family_member": ("verify", "family-at-s-1 in --suite section3"),
        "limit_check": ("verify", "family-limit in --suite section3"),
        "segre_identities": ("verify", "segre-identities in --suite section3"),
        "segre_pullback_identity": ("verify", "segre-pullback in --suite section3"),
    },
}

SKIP_PREFIXES = ("using ", "namespace ", "struct ", "class ", "enum ",
                 "typedef ", "#", "//", "template")
NAME_RE = re.compile(r"\b([A-Za-z_]\w*)\s*\(")
KEYWORDS = {"if", "for", "while", "switch", "return", "sizeof", "static_cast",
            "const_cast", "throw", "operator", "decltype", "alignof"}


def extract(header: Path) -> set[str]:
    names: set[str] = set()
    for line in header.read_text().splitlines():
        if not line or not (line[0].isalpha() or line[0] == "_"):
            continue
        if line.startswith(SKIP_PREFIXES):
            continue
        m = NAME_RE.search(line)
        if m and m.group(1) not in KEYWORDS:
            names.add(m.group(1))
    return names


def render() -> str:
    lines = [
        "# CLI coverage audit",
        "",
        "Generated by `tools/gen_cli_coverage.py`; regenerate with",
        "`python3 tools/gen_cli_coverage.py`, verify with `--check` (run as the",
        "`cli_coverage_sync` ctest). Every public operation of the core headers is",
        "anchored at exactly one verb. Operations shared by several code paths are",
        "anchored at the verb whose observable output pins their behaviour; the",
        "pathway column says where to look. `verify` rows name the suite check that",
        "reports the operation's result (`verify --suite NAME`); injecting",
        "`MODULILAB_FORCE_FAIL=1` into a `verify` run appends a deliberately failing",
        "check, which is how the exit-1 path is exercised end to end.",
        "",
    ]
    for header in HEADERS:
        lines.append(f"## {header}")
        lines.append("")
        lines.append("| operation | verb | pathway |")
        lines.append("| --- | --- | --- |")
        for op in sorted(ANCHORS[header]):
            verb, note = ANCHORS[header][op]
            lines.append(f"| `{op}` | `{verb}` | {note} |")
        lines.append("")
    return "\n".join(lines) + ""


def audit() -> int:
    bad = 0
    for header in HEADERS:
        found = extract(HEADER_DIR / header)
        mapped = set(ANCHORS[header])
        for op in sorted(found - mapped):
            print(f"unanchored operation: {header}:{op}", file=sys.stderr)
            bad += 1
        for op in sorted(mapped - found):
            print(f"stale anchor: {header}:{op}", file=sys.stderr)
            bad += 1
        for op, (verb, _) in ANCHORS[header].items():
            if verb not in VERBS:
                print(f"unknown verb for {header}:{op}: {verb}", file=sys.stderr)
                bad += 1
    return bad


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--check", action="store_true",
                        help="verify docs/cli-coverage.md is in sync")
    args = parser.parse_args()

    if audit():
        return 2
    text = render()
    if args.check:
        if not DOC.exists() or DOC.read_text() != text:
            print("docs/cli-coverage.md is out of date; rerun tools/gen_cli_coverage.py",
                  file=sys.stderr)
            return 1
        print("cli coverage table in sync")
        return 0
    DOC.parent.mkdir(parents=True, exist_ok=True)
    DOC.write_text(text)
    print(f"wrote {DOC.relative_to(ROOT)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
