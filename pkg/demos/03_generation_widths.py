"""Generation widths: how many conjugates does it take?

alpha(x, L): least number of L-conjugates of x generating <L, x>.
beta_r(x, L): least number generating a subgroup of order divisible by r.

Run: python3 demos/03_generation_widths.py
"""

from piradical import (
    AlmostSimpleContext,
    Permutation,
    alpha,
    alternating_group,
    beta,
    projective_semilinear_9,
)


def main() -> None:
    print("== widths over Alt(5) ==")
    A5 = alternating_group(5)
    for text in ["(1 2)", "(1 2)(3 4)", "(1 2 3)", "(1 2 3 4 5)"]:
        ctx = AlmostSimpleContext.build(A5, Permutation.parse(text, 5))
        a = alpha(ctx)
        b3, b5 = beta(ctx, 3), beta(ctx, 5)
        print(
            f"  x = {text:>12}: alpha = {a.value}, beta_3 = {b3.value}, "
            f"beta_5 = {b5.value}  (all exhaustive: "
            f"{a.exhaustive and b3.exhaustive and b5.exhaustive})"
        )

    print("\n== transpositions need exactly r-1 conjugates for a factor of r ==")
    for n in (5, 7, 9):
        ctx = AlmostSimpleContext.build(
            alternating_group(n), Permutation.parse("(1 2)", n)
        )
        vals = {r: beta(ctx, r).value for r in (3, 5, 7) if r <= n}
        print(f"  Alt({n}): {vals}")

    print("\n== the one exceptional involution ==")
    nine = projective_semilinear_9()
    ctx = AlmostSimpleContext.build(nine.socle, nine.involution_outside_s6)
    res = beta(ctx, 3)
    print(
        f"  the degree-10 outer involution of Alt(6) ~ PSL(2,9) has "
        f"beta_3 = {res.value}:"
    )
    print(
        f"  its socle class has {len(ctx.conjugates)} members and no pair "
        f"generates order divisible by 3 — width 3 is required, and a "
        f"witness triple exists (certificate order {res.certificate_order})."
    )


if __name__ == "__main__":
    main()
