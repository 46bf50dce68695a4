import logging
import pprint

from sigmadep import (
    DeltaSigmaContext,
    RatFunc,
    SigmaDepError,
    SolverSettings,
    ValidationError,
    additive_dependence,
    additive_galois_group,
    airy_obstruction,
    multiplicative_dependence,
)
from sigmadep.algebra import X


# 1. Configure logging to see what the solvers are doing
logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
)


def logarithm(ctx: DeltaSigmaContext):
    """log(x) solves y' = 1/x and is transformally independent over the shift; 1/x^2 is a derivative."""
    for text, expr in (("1/x", 1 / X), ("1/x^2", 1 / X**2)):
        verdict = additive_dependence(RatFunc.from_expr(expr, ctx.field), ctx).verify()
        print(f"  y' = {text}: {verdict.outcome.value}")
        if verdict.certificate is not None:
            print(f"    witness g = {verdict.certificate.g}")


def q_trichotomy():
    """The three possible groups of y' = b under a transcendental q-dilation."""
    ctx = DeltaSigmaContext.qdiff_ddx()
    for expr in (1 / X**3, 1 / X, 1 / (X - 1)):
        b = RatFunc.from_expr(expr, ctx.field)
        print(f"  y' = {b}: {additive_galois_group(b, ctx).value}")


def exponential():
    """exp(x) solves y' = y; its dilations are related exactly when q is algebraic."""
    for ctx in (DeltaSigmaContext.qdiff_ddx(), DeltaSigmaContext.qdiff_ddx(2)):
        verdict = multiplicative_dependence(RatFunc.one(ctx.field), ctx).verify()
        relation = verdict.certificate.relation if verdict.certificate is not None else None
        print(f"  {ctx.describe()}: {verdict.outcome.value} {relation or ''}")


def main():
    """
    A short tour of the decision procedures of sigmadep.
    """
    print("--- Running sigmadep tour ---")

    # 2. Load the layered settings (packaged defaults, config.<env>.toml, env vars)
    try:
        settings = SolverSettings.load()
    except ValidationError as e:
        logging.error(f"Configuration validation failed!\n{e}")
        return
    print("\n--- Effective settings ---")
    pprint.pprint(settings.model_dump(by_alias=True))
    print(f"Provenance: {settings.provenance()}")

    try:
        print("\n--- Logarithm (shift) ---")
        logarithm(DeltaSigmaContext.shift())

        print("\n--- q-dilation trichotomy ---")
        q_trichotomy()

        print("\n--- Exponential under q-dilation ---")
        exponential()

        # 3. The Airy obstruction for one integer s and for symbolic s
        print("\n--- Airy obstruction ---")
        for s in (1, "s"):
            report = airy_obstruction(s, attempts=settings.ode.cyclic_vector_attempts, seed=settings.ode.seed)
            print(f"  s = {report.s}: {report.operator}, rational solutions: {report.solution_space_dim}")

    except SigmaDepError as e:
        logging.error(f"Tour failed!\n{e}")


if __name__ == "__main__":
    main()
