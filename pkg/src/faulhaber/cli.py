"""Command-line front end.

Exit codes: 0 success (all verifications passed), 1 a verification suite
found a counterexample, 2 usage error. Results go to stdout, diagnostics to
stderr. There is no configuration beyond the flags; identical invocations
print identical bytes.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .bernoulli import bernoulli_at_half, bernoulli_number, bernoulli_polynomial, verify_odd_zero
from .polynomial import Polynomial
from .powersum import oracle_sum, powersum_monomial
from .recurrence import verify_recurrence_consistency
from .render import (
    render_monomial,
    render_polynomial_in_x,
    render_shifted,
    render_triangular,
)
from .reports import CheckLine, VerificationReport
from .shifted import shifted_closed_form, shifted_form, shifted_to_monomial
from .triangular import (
    expand_to_monomial,
    faulhaber_form,
    faulhaber_form_inductive,
    verify_constant_term_bernoulli,
    verify_lemma,
)

CHECK_LIMIT = 10**6


class UsageError(Exception):
    """Bad flag combination or out-of-range argument; maps to exit code 2."""


@dataclass(frozen=True)
class RenderRequest:
    """A validated powersum rendering request."""

    exponent: int
    basis: str  # monomial | triangular | shifted
    method: str  # direct | inductive | closed
    format: str  # plain | latex | json

    def __post_init__(self) -> None:
        if self.exponent < 1:
            raise UsageError("exponent must be >= 1")
        if self.method == "inductive" and self.basis != "triangular":
            raise UsageError("method 'inductive' is only valid with basis 'triangular'")
        if self.method == "closed" and self.basis != "shifted":
            raise UsageError("method 'closed' is only valid with basis 'shifted'")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _render_powersum(request: RenderRequest) -> str:
    if request.basis == "monomial":
        return render_monomial(request.exponent, powersum_monomial(request.exponent), request.format)
    if request.basis == "triangular":
        if request.exponent == 1:
            return render_triangular(None, request.format)
        build = faulhaber_form_inductive if request.method == "inductive" else faulhaber_form
        return render_triangular(build(request.exponent), request.format)
    build = shifted_closed_form if request.method == "closed" else shifted_form
    return render_shifted(build(request.exponent), request.format)


def _cmd_powersum(args: argparse.Namespace) -> int:
    request = RenderRequest(
        exponent=args.exponent, basis=args.basis, method=args.method, format=args.format
    )
    print(_render_powersum(request))
    return 0


def _cmd_bernoulli(args: argparse.Namespace) -> int:
    if args.poly:
        print(render_polynomial_in_x(bernoulli_polynomial(args.index)))
    elif args.at_half:
        print(bernoulli_at_half(args.index))
    else:
        print(bernoulli_number(args.index))
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    m, n = args.exponent, args.upper
    if args.check and n > CHECK_LIMIT:
        raise UsageError(f"--check is limited to n <= {CHECK_LIMIT}")
    if m == 0:
        value = n  # sum of n ones; the polynomial generators start at m = 1
    else:
        exact = powersum_monomial(m)(n)
        if exact.denominator != 1:
            raise RuntimeError(f"power sum evaluated to a non-integer {exact}")
        value = exact.numerator
    if args.check:
        reference = oracle_sum(m, n)
        status = "OK" if reference == value else "MISMATCH"
        print(f"{value} (oracle: {reference}, {status})")
        return 0 if status == "OK" else 1
    print(value)
    return 0


def _roundtrip_report(max_power: int) -> VerificationReport:
    lines = []
    for power in range(2, max_power + 1):
        ok = expand_to_monomial(faulhaber_form(power)) == powersum_monomial(power)
        lines.append(CheckLine(f"triangular roundtrip, power {power}", ok))
    for power in range(1, max_power + 1):
        ok = shifted_to_monomial(shifted_form(power)) == powersum_monomial(power)
        lines.append(CheckLine(f"shifted roundtrip, power {power}", ok))
    return VerificationReport(name="roundtrip", lines=tuple(lines))


def _recurrence_report(max_m: int) -> VerificationReport:
    report = verify_recurrence_consistency(max_m)
    lines = tuple(
        CheckLine(f"recurrences agree at index {i + 1}", ok) for i, ok in enumerate(report.flags)
    )
    return VerificationReport(name="recurrence", lines=lines)


def _cmd_verify(args: argparse.Namespace) -> int:
    suite, max_value = args.suite, args.max
    runners = {
        "odd-bernoulli": lambda: verify_odd_zero(max_value),
        "roundtrip": lambda: _roundtrip_report(max_value),
        "lemma": lambda: verify_lemma(max_value),
        "recurrence": lambda: _recurrence_report(max_value),
        "constant-term": lambda: verify_constant_term_bernoulli(max_value),
    }
    names = list(runners) if suite == "all" else [suite]
    reports = []
    for name in names:
        try:
            reports.append(runners[name]())
        except ValueError as exc:
            raise UsageError(f"suite '{name}': {exc}") from exc
    failed = False
    for report in reports:
        print(report.summary())
        if not report.passed:
            failed = True
            print(f"first counterexample: {report.first_failure.label}")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="faulhaber",
        description="Exact power sums in monomial, triangular, and half-shifted bases.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("powersum", help="render the polynomial for sum(k^m, k=1..n)")
    p.add_argument("exponent", type=_positive_int)
    p.add_argument("--basis", choices=["monomial", "triangular", "shifted"], default="monomial")
    p.add_argument("--method", choices=["direct", "inductive", "closed"], default="direct")
    p.add_argument("--format", choices=["plain", "latex", "json"], default="plain")
    p.set_defaults(handler=_cmd_powersum)

    b = sub.add_parser("bernoulli", help="Bernoulli number, polynomial, or value at 1/2")
    b.add_argument("index", type=_nonnegative_int)
    group = b.add_mutually_exclusive_group()
    group.add_argument("--poly", action="store_true", help="print B_m(x)")
    group.add_argument("--at-half", action="store_true", help="print B_m(1/2)")
    b.set_defaults(handler=_cmd_bernoulli)

    e = sub.add_parser("eval", help="evaluate sum(k^m, k=1..n) exactly")
    e.add_argument("exponent", type=_nonnegative_int)
    e.add_argument("upper", type=_positive_int, help="upper limit n (any size)")
    e.add_argument("--check", action="store_true", help=f"cross-check against the brute-force oracle (n <= {CHECK_LIMIT})")
    e.set_defaults(handler=_cmd_eval)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument(
        "suite",
        choices=["odd-bernoulli", "roundtrip", "lemma", "recurrence", "constant-term", "all"],
    )
    v.add_argument("--max", type=_positive_int, default=20, help="range bound (default 20)")
    v.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
