"""
The ``sigmadep`` command line.

Every command parses its inputs, runs one library operation, optionally re-verifies
the certificate and prints a report. Exit codes: 0 decided, 2 inconclusive up to the
search bound, 1 error, 3 failed re-verification.
"""
import functools
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

import click
from sympy.polys.polyerrors import BasePolynomialError

from sigmadep.algebra.fields import BaseField
from sigmadep.algebra.printing import format_poly, format_rational, format_ratfunc, format_scalar
from sigmadep.calculus.context import ContextCase, DeltaSigmaContext
from sigmadep.calculus.reduction import hermite_reduce, residue_analysis
from sigmadep.cli.parser import parse, parse_operator, parse_ratfunc, parse_skew, symbols
from sigmadep.cli.report import CommandReport, error_payload
from sigmadep.config import SolverSettings, ValidationError, parse_int_range
from sigmadep.core.core_interfaces import Outcome, Verdict
from sigmadep.core.errors import CertificateVerificationError, SigmaDepError
from sigmadep.criteria import (
    additive_dependence,
    additive_dependence_multi,
    additive_galois_group,
    inhomogeneous_first_order,
    multiplicative_dependence,
)
from sigmadep.groups import (
    GaSubgroup,
    MupRelation,
    classify_gagm,
    ga_membership,
    mup_period,
    realize_ga_subgroup,
    recurrence_rational_solutions,
    skew_left_lcm,
    skew_right_gcd,
)
from sigmadep.integrability import airy_sweep, integrability_sweep, order2_integrability, sln_dichotomy_report
from sigmadep.ode import companion, rational_solutions, symmetric_power

logger = logging.getLogger(__name__)

_LEVELS = ["CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG"]


@dataclass
class Session:
    """Global flags and the settings they resolved to."""

    settings: SolverSettings
    ctx_name: str
    q: str
    out: Optional[str]

    @property
    def context(self) -> DeltaSigmaContext:
        return DeltaSigmaContext.from_name(self.ctx_name, self.q)

    @property
    def json_output(self) -> bool:
        return self.settings.output.json_output

    @property
    def verify(self) -> bool:
        return self.settings.output.verify

    @property
    def ode(self):
        return self.settings.ode

    def emit(self, report: CommandReport):
        text = report.to_json() if self.json_output else report.to_text()
        if self.out:
            Path(self.out).write_text(text + "\n", encoding="utf-8")
            logger.info(f"report written to {self.out}")
        else:
            click.echo(text)

    def fail(self, code: str, message: str, exit_code: int):
        if self.json_output:
            click.echo(error_payload(code, message))
        else:
            click.echo(f"Error: {message}", err=True)
        click.get_current_context().exit(exit_code)


def _overrides(**flags: Any) -> Dict[str, Dict[str, Any]]:
    """Nested settings overrides for the flags that were given."""
    sections = {
        "max_order": "search",
        "d_max": "search",
        "workers": "integrability",
        "json": "output",
        "verify": "output",
        "level": "logging",
    }
    overrides: Dict[str, Dict[str, Any]] = {}
    for key, value in flags.items():
        if value is not None:
            overrides.setdefault(sections[key], {})[key] = value
    return overrides


@click.group()
@click.option(
    "--ctx",
    "ctx_name",
    type=click.Choice([c.value for c in ContextCase]),
    default=ContextCase.SHIFT.value,
    show_default=True,
    help="Delta-sigma context.",
)
@click.option("--q", default="transcendental", show_default=True, help="'transcendental' or a rational q.")
@click.option("--max-order", type=int, default=None, help="Order bound J of sigma-relation searches.")
@click.option("--d-max", type=int, default=None, help="Largest d of integrability sweeps.")
@click.option("--workers", type=int, default=None, help="Processes for parameter sweeps.")
@click.option("--json/--text", "json_output", default=None, help="Report format.")
@click.option("--verify/--no-verify", default=None, help="Re-check certificates before emitting them.")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the report to a file.")
@click.option("--log-level", type=click.Choice(_LEVELS, case_sensitive=False), default=None)
@click.pass_context
def cli(ctx, ctx_name, q, max_order, d_max, workers, json_output, verify, out, log_level):
    """Transformal dependence of solutions of linear delta-sigma equations."""
    overrides = _overrides(
        max_order=max_order, d_max=d_max, workers=workers, json=json_output, verify=verify, level=log_level
    )
    try:
        settings = SolverSettings.load(**overrides)
    except ValidationError as e:
        click.echo(f"Error: invalid settings\n{e}", err=True)
        ctx.exit(1)
    logging.basicConfig(level=settings.logging.level, format=settings.logging.format, stream=sys.stderr)
    ctx.obj = Session(settings=settings, ctx_name=ctx_name, q=q, out=out)


def command(name: str) -> Callable:
    """Registers fn as a subcommand and maps library errors to exit codes."""

    def decorator(fn: Callable) -> Callable:
        @cli.command(name)
        @click.pass_obj
        @functools.wraps(fn)
        def wrapper(session: Session, **kwargs):
            try:
                report = fn(session, **kwargs)
            except CertificateVerificationError as e:
                logger.error(f"{name}: {e}")
                session.fail(e.code, str(e), 3)
                return
            except SigmaDepError as e:
                session.fail(e.code, str(e), 1)
                return
            except BasePolynomialError as e:
                logger.exception(f"{name}: polynomial arithmetic failed")
                session.fail("internal_error", f"{type(e).__name__}: {e}", 1)
                return
            except ValueError as e:
                session.fail("invalid_input", str(e), 1)
                return
            session.emit(report)
            click.get_current_context().exit(report.exit_code)

        return wrapper

    return decorator


def _verdict_report(
    session: Session, name: str, ctx: DeltaSigmaContext, inputs: Dict[str, Any], verdict: Verdict
) -> CommandReport:
    if session.verify:
        verdict.verify()
    payload = verdict.to_payload()
    result = {k: v for k, v in payload.items() if k in ("bound", "group")}
    diagnostics = {"notes": payload["notes"]} if "notes" in payload else {}
    if session.verify and verdict.certificate is not None:
        diagnostics["verified"] = True
    return CommandReport(
        command=name,
        context=ctx.describe(),
        input=inputs,
        verdict=verdict.outcome.value,
        certificate=verdict.certificate.to_payload() if verdict.certificate is not None else None,
        result=result,
        diagnostics=diagnostics,
    )


def _skew_field(*texts: str) -> BaseField:
    """Q(t) when some input mentions the symbol t, Q otherwise."""
    if any("t" in symbols(parse(text)) for text in texts):
        return BaseField.parameter_t()
    return BaseField.rationals()


# --- reduction ---


@command("hermite")
@click.argument("f")
def hermite(session: Session, f: str) -> CommandReport:
    """Hermite reduction f = g' + h + p."""
    ctx = session.context
    value = parse_ratfunc(f, ctx.field)
    decomposition = hermite_reduce(value)
    if session.verify and decomposition.reconstruct() != value:
        raise CertificateVerificationError("Hermite reconstruction failed")
    return CommandReport(
        command="hermite",
        context=ctx.describe(),
        input={"f": str(value)},
        verdict="Reduced",
        result={
            "g": str(decomposition.g),
            "h": str(decomposition.h),
            "p": format_poly(decomposition.p, ctx.field),
        },
    )


@command("residues")
@click.argument("f")
def residues(session: Session, f: str) -> CommandReport:
    """Rational residues at the simple poles of f."""
    ctx = session.context
    value = parse_ratfunc(f, ctx.field)
    data = residue_analysis(value)
    return CommandReport(
        command="residues",
        context=ctx.describe(),
        input={"f": str(value)},
        verdict="Analyzed",
        result={
            "rt_resultant": format_poly(data.rt_resultant, ctx.field),
            "rational_residues": [
                {"residue": format_rational(rho), "factor": format_poly(factor, ctx.field)}
                for rho, factor in data.rational_residues
            ],
            "all_residues_rational": data.all_residues_rational,
            "all_poles_simple": data.all_poles_simple,
            "pole_at_zero": {"present": data.pole_at_zero[0], "order": data.pole_at_zero[1]},
            "has_polynomial_part": data.has_polynomial_part,
        },
    )


# --- criteria ---


@command("dep-add")
@click.argument("b")
def dep_add(session: Session, b: str) -> CommandReport:
    """Is a solution of delta(y) = b transformally dependent?"""
    ctx = session.context
    value = parse_ratfunc(b, ctx.field)
    return _verdict_report(session, "dep-add", ctx, {"b": str(value)}, additive_dependence(value, ctx))


@command("dep-add-multi")
@click.argument("bs", nargs=-1, required=True)
def dep_add_multi(session: Session, bs: List[str]) -> CommandReport:
    """Bounded search for a relation among solutions of delta(y_i) = b_i."""
    ctx = session.context
    values = [parse_ratfunc(b, ctx.field) for b in bs]
    verdict = additive_dependence_multi(values, ctx, session.settings.search.max_order)
    return _verdict_report(session, "dep-add-multi", ctx, {"b": [str(v) for v in values]}, verdict)


@command("galois-add")
@click.argument("b")
def galois_add(session: Session, b: str) -> CommandReport:
    """The sigma-Galois group of delta(y) = b: Trivial, GaSigma or Ga."""
    ctx = session.context
    value = parse_ratfunc(b, ctx.field)
    group = additive_galois_group(value, ctx)
    return CommandReport(
        command="galois-add", context=ctx.describe(), input={"b": str(value)}, verdict=group.value
    )


@command("dep-mul")
@click.argument("a")
def dep_mul(session: Session, a: str) -> CommandReport:
    """Is a nonzero solution of delta(y) = a*y transformally dependent?"""
    ctx = session.context
    value = parse_ratfunc(a, ctx.field)
    return _verdict_report(session, "dep-mul", ctx, {"a": str(value)}, multiplicative_dependence(value, ctx))


@command("ishizaki")
@click.argument("a")
@click.argument("b")
def ishizaki(session: Session, a: str, b: str) -> CommandReport:
    """Is a solution of delta(z) = a*z + b transformally dependent?"""
    ctx = session.context
    av, bv = parse_ratfunc(a, ctx.field), parse_ratfunc(b, ctx.field)
    verdict = inhomogeneous_first_order(av, bv, ctx, session.settings.search.max_order)
    return _verdict_report(session, "ishizaki", ctx, {"a": str(av), "b": str(bv)}, verdict)


# --- ode ---


@command("ratsols-ode")
@click.argument("operator")
@click.option("--rhs", default=None, help="Right-hand side; homogeneous when omitted.")
def ratsols_ode(session: Session, operator: str, rhs: Optional[str]) -> CommandReport:
    """Rational solutions of L(y) = rhs, L written in D."""
    ctx = session.context
    op = parse_operator(operator, ctx)
    rhs_value = parse_ratfunc(rhs, ctx.field) if rhs is not None else None
    space = rational_solutions(op, rhs_value)
    if session.verify:
        if any(not op.apply(y).is_zero for y in space.basis):
            raise CertificateVerificationError("a homogeneous basis element does not solve the equation")
        if space.particular is not None and op.apply(space.particular) != rhs_value:
            raise CertificateVerificationError("the particular solution does not solve the equation")
    inputs = {"operator": str(op)}
    if rhs_value is not None:
        inputs["rhs"] = str(rhs_value)
    result: Dict[str, Any] = {"dimension": space.dimension, "basis": [str(y) for y in space.basis]}
    if rhs_value is not None:
        result["particular"] = None if space.particular is None else str(space.particular)
    return CommandReport(command="ratsols-ode", context=ctx.describe(), input=inputs, verdict="Solved", result=result)


@command("sympower")
@click.argument("operator")
@click.option("--m", "power", type=int, default=2, show_default=True)
def sympower(session: Session, operator: str, power: int) -> CommandReport:
    """Symmetric power of an order 2 operator."""
    ctx = session.context
    op = parse_operator(operator, ctx)
    result = symmetric_power(op, power)
    return CommandReport(
        command="sympower",
        context=ctx.describe(),
        input={"operator": str(op), "m": power},
        verdict="Computed",
        result={"operator": str(result), "order": result.order},
    )


# --- integrability ---


@command("integrable")
@click.argument("operator")
def integrable(session: Session, operator: str) -> CommandReport:
    """sigma^d-integrability of the companion system of L for d = 1..d_max."""
    ctx = session.context
    op = parse_operator(operator, ctx)
    settings = session.settings
    summary, per_d = integrability_sweep(
        companion(op).matrix,
        settings.search.d_max,
        ctx,
        workers=settings.integrability.workers,
        attempts=session.ode.cyclic_vector_attempts,
        seed=session.ode.seed,
    )
    if session.verify:
        summary.verify()
    payload = summary.to_payload()
    return CommandReport(
        command="integrable",
        context=ctx.describe(),
        input={"operator": str(op), "d_max": settings.search.d_max},
        verdict=payload.pop("verdict"),
        certificate=summary.certificate.to_payload() if summary.certificate is not None else None,
        result=payload,
        diagnostics={"per_d": [v.outcome.value for v in per_d]},
    )


@command("order2")
@click.argument("r")
@click.option("--s", "shift", type=int, default=1, show_default=True, help="The shift exponent s.")
def order2(session: Session, r: str, shift: int) -> CommandReport:
    """sigma^s-integrability of delta^2(y) = r*y through the order-2 system."""
    ctx = session.context
    value = parse_ratfunc(r, ctx.field)
    verdict = order2_integrability(value, shift, ctx, attempts=session.ode.cyclic_vector_attempts, seed=session.ode.seed)
    if session.verify:
        verdict.verify()
    payload = verdict.to_payload()
    return CommandReport(
        command="order2",
        context=ctx.describe(),
        input={"r": str(value), "s": shift},
        verdict=payload.pop("verdict"),
        certificate=verdict.certificate.to_payload() if verdict.certificate is not None else None,
        result=payload,
    )


@command("airy")
@click.option("--s", "s_range", default=None, help="Integer range such as 1..10; settings default when omitted.")
@click.option("--symbolic/--no-symbolic", default=True, show_default=True, help="Also run with s symbolic.")
def airy(session: Session, s_range: Optional[str], symbolic: bool) -> CommandReport:
    """The order-4 obstruction for the Airy equation, per s and symbolically."""
    settings = session.settings
    values = parse_int_range(s_range) if s_range is not None else settings.search.s_values()
    reports = airy_sweep(
        values,
        include_symbolic=symbolic,
        workers=settings.integrability.workers,
        attempts=session.ode.cyclic_vector_attempts,
        seed=session.ode.seed,
    )
    if session.verify and not all(r.elimination_matches for r in reports):
        bad = [r.s for r in reports if not r.elimination_matches]
        raise CertificateVerificationError(f"eliminated operator differs from the expected one for s = {bad}")
    none_found = all(r.solution_space_dim == 0 for r in reports)
    return CommandReport(
        command="airy",
        context=ContextCase.SHIFT.value,
        input={"s": [str(v) for v in values] + (["s"] if symbolic else [])},
        verdict=Outcome.NO_RATIONAL_WITNESS.value if none_found else "WitnessCandidates",
        result={"runs": [r.to_payload() for r in reports]},
    )


@command("dichotomy")
@click.argument("operator")
@click.option("--sym-d-max", type=int, default=None, help="Separate bound for the symmetric square.")
@click.option("--sl2/--no-sl2", default=True, show_default=True, help="Assert that the usual Galois group is Sl2.")
@click.option("--sanity-check", is_flag=True, default=False, help="Refuse the Sl2 assertion if rational solutions exist.")
def dichotomy(
    session: Session, operator: str, sym_d_max: Optional[int], sl2: bool, sanity_check: bool
) -> CommandReport:
    """Integrability dichotomy report for an order 2 operator."""
    ctx = session.context
    op = parse_operator(operator, ctx)
    settings = session.settings
    report = sln_dichotomy_report(
        op,
        settings.search.d_max,
        ctx,
        assert_sl2=sl2,
        sanity_check=sanity_check,
        symmetric_d_max=sym_d_max,
        workers=settings.integrability.workers,
        attempts=session.ode.cyclic_vector_attempts,
        seed=session.ode.seed,
    )
    verdicts = report.companion_verdicts + report.symmetric_verdicts
    if session.verify:
        for v in verdicts:
            v.verify()
    found = any(v.outcome is Outcome.INTEGRABLE for v in verdicts)
    return CommandReport(
        command="dichotomy",
        context=ctx.describe(),
        input={"operator": str(op), "d_max": settings.search.d_max},
        verdict=Outcome.INTEGRABLE.value if found else Outcome.NO_RATIONAL_WITNESS_UP_TO.value,
        result=report.to_payload(),
    )


# --- difference groups ---


@command("ratsols-rec")
@click.argument("operator")
def ratsols_rec(session: Session, operator: str) -> CommandReport:
    """Rational solutions in Q(t) of a recurrence written in S."""
    field = BaseField.parameter_t()
    op = parse_skew(operator, field)
    space = recurrence_rational_solutions(op)
    if session.verify and any(op.apply(c) for c in space.basis):
        raise CertificateVerificationError("a recurrence solution does not satisfy the recurrence")
    return CommandReport(
        command="ratsols-rec",
        context=field.describe(),
        input={"operator": str(op)},
        verdict="Solved",
        result={"dimension": space.dimension, "basis": [format_scalar(c, field) for c in space.basis]},
    )


@command("skew-gcd")
@click.argument("a")
@click.argument("b")
def skew_gcd(session: Session, a: str, b: str) -> CommandReport:
    """Greatest common right divisor and least common left multiple."""
    field = _skew_field(a, b)
    av, bv = parse_skew(a, field), parse_skew(b, field)
    gcrd = skew_right_gcd(av, bv)
    lclm = skew_left_lcm(av, bv)
    if session.verify:
        for p in (av, bv):
            if not p.is_zero and not p.right_divide(gcrd)[1].is_zero:
                raise CertificateVerificationError("gcrd does not right-divide an input")
            if not lclm.is_zero and not p.is_zero and not lclm.right_divide(p)[1].is_zero:
                raise CertificateVerificationError("lclm is not a left multiple of an input")
    return CommandReport(
        command="skew-gcd",
        context=field.describe(),
        input={"a": str(av), "b": str(bv)},
        verdict="Computed",
        result={"gcrd": str(gcrd), "lclm": str(lclm)},
    )


@command("ga-member")
@click.argument("q")
@click.argument("p")
def ga_member(session: Session, q: str, p: str) -> CommandReport:
    """Does the equation q vanish on the subgroup defined by p?"""
    field = _skew_field(q, p)
    qv, pv = parse_skew(q, field), parse_skew(p, field)
    group = GaSubgroup(pv)
    member = ga_membership(qv, group)
    remainder = qv.right_divide(group.generator)[1] if not group.generator.is_zero else qv
    return CommandReport(
        command="ga-member",
        context=field.describe(),
        input={"q": str(qv), "p": str(pv)},
        verdict="Member" if member else "NotMember",
        result={
            "remainder": str(remainder),
            "sigma_integral": group.sigma_integral,
            "perfectly_sigma_reduced": group.perfectly_sigma_reduced,
        },
    )


@command("mup-period")
@click.option("--p", "prime", type=int, required=True, help="The prime p.")
@click.option("--exponents", required=True, help="Comma separated a_0,...,a_l.")
def mup_period_command(session: Session, prime: int, exponents: str) -> CommandReport:
    """Pre-period m and period d of sigma on a sigma-closed subgroup of mu_p."""
    try:
        values = tuple(int(v) for v in exponents.split(","))
    except ValueError:
        raise ValueError(f"exponents must be comma separated integers, got {exponents!r}") from None
    relation = MupRelation(prime, values)
    m, d = mup_period(relation)
    return CommandReport(
        command="mup-period",
        context=f"mu_{prime}",
        input={"p": prime, "exponents": list(values)},
        verdict="Periodic",
        result={"m": m, "d": d},
    )


@command("classify-gagm")
@click.argument("p")
def classify_gagm_command(session: Session, p: str) -> CommandReport:
    """Which case of the G_a x| G_m dichotomy the unipotent generator falls in."""
    field = _skew_field(p)
    pv = parse_skew(p, field)
    case = classify_gagm(pv)
    result: Dict[str, Any] = {"case": case.case, "n": case.n}
    if case.m is not None:
        result["m"] = case.m
    return CommandReport(
        command="classify-gagm",
        context=field.describe(),
        input={"p": str(pv)},
        verdict=f"Case({case.case})",
        result=result,
    )


@command("realize-ga")
@click.argument("operator")
def realize_ga(session: Session, operator: str) -> CommandReport:
    """b in Q(t)(x) whose parameterized group is the subgroup defined by L."""
    field = BaseField.parameter_t()
    op = parse_skew(operator, field)
    realization = realize_ga_subgroup(op)
    if session.verify and not all(realization.checks.values()):
        raise CertificateVerificationError(f"realization checks failed: {realization.checks}")
    payload = realization.to_payload()
    return CommandReport(
        command="realize-ga",
        context=DeltaSigmaContext.param_shift().describe(),
        input={"operator": str(op)},
        verdict=payload.pop("verdict"),
        certificate={"kind": "realization", "checks": payload.pop("checks")},
        result={"b": format_ratfunc(realization.b), **{k: v for k, v in payload.items() if k != "b"}},
    )


# --- settings ---


@command("show-config")
def show_config(session: Session) -> CommandReport:
    """Print the effective settings and which file set each section."""
    return CommandReport(
        command="show-config",
        context=session.ctx_name,
        input={},
        verdict="Settings",
        result=session.settings.model_dump(by_alias=True),
        diagnostics={"provenance": session.settings.provenance()},
    )


if __name__ == "__main__":
    cli()
